"""The rank-5 fusion rings with exactly three self-adjoint basis elements.

Fixing the duality pattern (1)(2 3)(4)(5), Frobenius reciprocity leaves
16 free structure constants.  Enumerating them under a multiplicity cap
with associativity as the only constraint (the dimensions are typically
irrational here, so no integral knapsack applies) reproduces the family:
47 rings at multiplicity <= 4, four of them simple, six of them failing
the Schur criterion -- including two of the four simple ones.
"""

import numpy as np

from fusionforge import criteria, rings, search, spectral

stats = search.SearchStats()
family = search.rank5_three_selfadjoint_family(4, stats=stats)
print(f"multiplicity <= 4: {len(family)} rings up to equivalence "
      f"({stats.nodes} nodes, {stats.wall_time:.1f}s)\n")

simple = [fd for fd in family if rings.is_simple(fd)]
failing = [fd for fd in family
           if not criteria.schur_commutative(spectral.character_table(fd)).holds]
print(f"simple: {len(simple)}   Schur fails: {len(failing)} "
      f"(on {sum(1 for fd in simple if fd in failing)} of the simple ones)\n")

print("the four simple rings:")
for fd in simple:
    d = rings.fp_dimensions(fd)
    ok = fd not in failing
    print(f"  dims {np.round(d, 4)}  FPdim {rings.global_fpdim(fd):9.4f}  "
          f"Schur {'passes' if ok else 'FAILS'}")

# The two Schur survivors carry the cyclotomic dimension patterns
# 1 + 2cos(2pi/7) and 3 + sqrt(6); neither is known to be categorifiable.
print("\nsmaller caps for scale:")
for cap in (1, 2, 3):
    fam = search.rank5_three_selfadjoint_family(cap)
    print(f"  multiplicity <= {cap}: {len(fam)} rings")
