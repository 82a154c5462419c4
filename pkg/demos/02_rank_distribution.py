"""How the 2-rank is distributed over squarefree n <= N for a few l."""
from math import gcd

import numpy as np

from quarticrank.arith import is_squarefree
from quarticrank.basefield import make_basefield
from quarticrank.quarticfield import make_quarticfield
from quarticrank.rank import rank_closed_form

N = 5000
LS = [2, 17, 41, 73, 97]

table = np.zeros((len(LS), 8), dtype=int)
for i, l in enumerate(LS):
    k = make_basefield(l)
    ranks = [rank_closed_form(make_quarticfield(n, k)).rank
             for n in range(1, N + 1) if gcd(n, l) == 1 and is_squarefree(n)]
    table[i] = np.bincount(np.minimum(ranks, 7), minlength=8)

print(f"counts of n <= {N} by rank (last column is rank >= 7)")
print("   l " + "".join(f"{r:>7}" for r in range(8)))
for l, counts in zip(LS, table):
    print(f"{l:>4} " + "".join(f"{c:>7}" for c in counts))

# rank roughly tracks the number of prime factors of n; l = 2 sits lower
# since there is no separate pair of primes over 2 to add to mu
share = table / table.sum(axis=1, keepdims=True)
mean = share @ np.arange(8)
for l, m in zip(LS, mean):
    print(f"l = {l:>3}: mean rank {m:.2f}")
