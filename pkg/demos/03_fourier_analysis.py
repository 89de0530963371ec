"""Fourier analysis on the canonical fusion bialgebra.

Every fusion ring spans two C*-algebras on one basis: the commutative
side A (pointwise product, trace d of total mass FPdim) and the fusion
side B (trace tau of mass 1).  The Fourier transform is the coefficient
identity between them and is 2-norm unitary.  The classical inequality
zoo -- Hausdorff-Young, Donoho-Stark, Hirschman-Beckner, Renyi, Young,
sum-set -- holds with constants controlled by FPdim.
"""

import numpy as np

from fusionforge import bialgebra, corpus

B = bialgebra.canonical_from_fusion_data(corpus.get("f210").fd)
print("bialgebra:", B, "\n")

rng = np.random.default_rng(1)
x = B.element(rng.standard_normal(7) + 1j * rng.standard_normal(7), "A")
fx = B.fourier(x)

print("Plancherel: ||x||_2,A =", round(B.norm(x, 2), 10),
      " ||F(x)||_2,B =", round(B.norm(fx, 2), 10))

# Hausdorff-Young at (p, q) = (4/3, 4)
p, q = 4 / 3, 4.0
print(f"Hausdorff-Young: ||F(x)||_{q},B = {B.norm(fx, q):.6f} <= "
      f"||x||_{p:.3g},A = {B.norm(x, p):.6f}")

# Donoho-Stark uncertainty: supports multiply to at least 1
print("S(x) S(F(x)) =", B.support(x) * B.support(fx), ">= 1")

# entropic uncertainty
n2 = B.norm(x, 2)
H_sum = B.entropy(x) + B.entropy(fx)
print("H(|x|^2) + H(|F(x)|^2) =", round(H_sum, 6),
      ">=", round(-4 * n2 * n2 * np.log(n2), 6))

# Young on A and the 1-norm identity
y = B.element(np.abs(rng.standard_normal(7)), "A")
xa = B.element(np.abs(rng.standard_normal(7)), "A")
conv = B.conv(xa, y)
print("\n||x*y||_1 =", round(B.norm(conv, 1), 8),
      "= ||x||_1 ||y||_1 =", round(B.norm(xa, 1) * B.norm(y, 1), 8))

# The whole suite over random samples and the exponent grid; zero
# violations of the theorem-backed checks on any corpus ring.
rep = bialgebra.inequality_suite(B, num_samples=300, seed=0)
print("\ninequality suite (300 samples):")
for c in rep.checks:
    tag = "falsifier" if c.is_falsifier else "theorem"
    print(f"  {c.name:22s} worst slack {c.worst_slack:+.2e}  "
          f"violations {c.violations}  [{tag}]")
