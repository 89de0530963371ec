"""A rank-3 fusion bialgebra whose dual violates the Schur property.

The self-dual rank-3 family is classified by (d2, d3, a).  The minimal
projections of the dual side have closed-form coefficients driven by
the roots lambda_2 <= lambda_3 of

    t^2 - (a d3^2 - b d2^2 + 1) t - b d2^2,    b = 1 - a.

Cubing the lambda_2 projection against the dimension weights goes
negative for suitable parameters -- so the Schur product property (and
with it dual Young) fails, and these bialgebras admit no subfactor
realization.  The witness point is (d2, d3, a) = (1000, 500, 0.750001).
"""

import math

import numpy as np

from fusionforge import bialgebra
from fusionforge.bialgebra import Rank3Type1Params

params = Rank3Type1Params(1000.0, 500.0, 0.750001)
res = bialgebra.rank3_dual_schur(params)
data = res["data"]
print(f"lambda2 = {data.lambda2:.6f}, lambda3 = {data.lambda3:.6f}")
print(f"min over triples of d(F^-1(nu Q)^3-type products: {res['min_value']:.4f}")
print("Schur product property on the dual holds:", res["holds"], "\n")

# The scaled quantity converges to b^6 - b^4 < 0 along the boundary
# slice d3^2 - 1 = b d2^2 as d2 grows.
a, b = 0.75, 0.25
print("asymptotic check along d3^2 - 1 = b d2^2:")
for d2 in (1e2, 1e3, 1e4):
    d3 = math.sqrt(1 + b * d2 * d2)
    p = Rank3Type1Params(d2, d3, a)
    dd = bialgebra.rank3_dual_data(p)
    dims = bialgebra.rank3_type1(p).dims
    val = dd.nu2**3 * float(np.sum(dd.q2.coeffs.real**3 / dims)) / d2**2
    print(f"  d2 = {d2:8.0f}: {val:+.8f}   (target b^6 - b^4 = {b**6 - b**4:+.8f})")

# Since dual Young implies dual Schur, a Young violation must exist on
# this bialgebra; the suite's falsifier finds it through the dual
# projections.
B = bialgebra.rank3_type1(params)
rep = bialgebra.inequality_suite(B, num_samples=100, seed=7)
dyf = rep["dual_young_falsify"]
print(f"\ndual Young falsifier: worst slack {dyf.worst_slack:+.3e} "
      f"({dyf.violations} violating probes)")
print("theorem-backed checks stay clean:", rep.theorem_violations == 0)

# A categorifiable point for contrast: (m, n, q) = (0, 1, 1) has a
# unitary model, and its dual passes.
good = bialgebra.rank3_from_mnq(0, 1, 1)
print("\n(m,n,q) = (0,1,1):", bialgebra.rank3_dual_schur(good)["holds"])
