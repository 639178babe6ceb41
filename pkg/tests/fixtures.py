"""Frozen reference data and brute-force oracles shared by the test modules.

The oracles deliberately avoid the package: they enumerate with itertools
and count straight from the definitions.
"""

import itertools
from collections import Counter
from math import factorial

# word followed by the five pairs
# (2des,2maj) (des_2,maj_2) (exc_2,den_2) (exc_2,den) (exc_2,den_3)
REFERENCE_ROWS_TEXT = """
12233 0,0 0,0 0,0 0,0 0,0
12323 0,1 1,3 1,3 1,3 1,3
12332 0,2 1,4 1,4 1,4 1,4
13223 0,2 1,2 1,2 1,2 1,2
13232 0,3 2,6 1,3 1,3 1,3
13322 0,4 1,3 2,6 2,6 2,6
21233 0,1 0,1 0,1 0,1 0,1
21323 0,2 1,4 1,4 1,4 1,4
21332 0,3 1,5 1,5 1,5 1,5
22133 0,2 0,2 0,2 0,2 0,2
22313 1,5 0,3 1,5 1,5 1,5
22331 1,6 0,4 1,6 1,6 1,6
23123 1,4 0,2 1,3 1,3 1,3
23132 1,5 1,6 1,4 1,4 1,4
23213 0,3 1,5 1,4 1,4 1,4
23231 1,7 1,6 1,5 1,5 1,5
23312 1,6 0,3 2,7 2,7 2,7
23321 0,4 1,7 2,8 2,8 2,8
31223 1,3 0,1 0,1 0,1 0,1
31232 1,4 1,5 0,2 0,2 0,2
31322 1,5 1,4 1,5 1,5 1,5
32123 0,3 1,3 0,2 0,2 0,2
32132 0,4 2,7 0,3 0,3 0,3
32213 0,4 1,4 0,3 0,3 0,3
32231 1,8 1,5 0,4 0,4 0,4
32312 1,7 1,4 1,6 1,6 1,6
32321 0,5 2,8 1,7 1,7 1,7
33122 1,6 0,2 1,4 1,4 1,4
33212 0,5 1,5 1,5 1,5 1,5
33221 0,6 1,6 1,6 1,6 1,6
"""


def reference_rows():
    rows = []
    for line in REFERENCE_ROWS_TEXT.strip().splitlines():
        word, *cells = line.split()
        rows.append((word, [tuple(int(v) for v in c.split(",")) for c in cells]))
    return rows


def digits(s):
    return tuple(int(c) for c in s)


def brute_words(ks):
    letters = [i for i, k in enumerate(ks, 1) for _ in range(k)]
    return sorted(set(itertools.permutations(letters)))


def brute_inv(w):
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def brute_maj(w):
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def multinomial(ks):
    out = factorial(sum(ks))
    for k in ks:
        out //= factorial(k)
    return out


def brute_box(s, t):
    """Weights of partitions in an s x t box, via multisets of part sizes."""
    return Counter(sum(c) for c in itertools.combinations_with_replacement(range(t + 1), s))


def coeffs(counter):
    """Counter of exponents -> dense coefficient list."""
    if not counter:
        return []
    return [counter.get(e, 0) for e in range(max(counter) + 1)]
