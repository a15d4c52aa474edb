"""How often do random pure complexes turn out Cohen-Macaulay or shellable?"""
import random
from collections import Counter
from itertools import combinations

from virtualcm import SimplicialComplex, betti_hochster, codim, find_shelling, is_cohen_macaulay

rng = random.Random(1)
tally = Counter()
for _ in range(300):
    n = rng.randint(4, 7)
    d = rng.randint(1, min(3, n - 2))
    pool = list(combinations(range(n), d + 1))
    k = SimplicialComplex(n, rng.sample(pool, rng.randint(2, min(10, len(pool)))))
    cm = bool(is_cohen_macaulay(k))
    shellable = find_shelling(k) is not None
    assert cm == (betti_hochster(k).pd == codim(k))
    tally[(f"dim {d}", "CM" if cm else "not CM", "shellable" if shellable else "not shellable")] += 1

for key, count in sorted(tally.items()):
    print(*key, count, sep="\t")
