"""Gap/level Euler-Mahonian statistics on permutations of a multiset."""

from . import stats
from .bijections import phi, phi_den, phi_den_inverse, phi_maj, phi_maj_inverse, psi
from .core import (
    BivarPoly, Multiset, ParameterError, ParseError, Partition, StatParams, Word,
    delta, gamma, sorted_word,
)
from .enumeration import StatSpec, joint_dist, joint_dists, words_of
from .labeling import gden_labeling, gmaj_labeling
from .qseries import gauss_binomial, partitions_in_box, q_multinomial

__version__ = "0.1.0"
