"""Character tables and dual projections of commutative fusion rings.

The fusion matrices of a commutative fusion ring are commuting normal
integer (or real) matrices, hence simultaneously diagonalizable.  Each
joint eigenvector v_j gives a one-dimensional representation (character)
chi_j with chi_j(x_i) = lambda_{i,j}; the m-by-m array of these values
is the character table.  Column 1 is always the Frobenius-Perron
character chi_1 = d.

The characters are in bijection with the minimal projections of the
dual algebra; expanding the dual convolution of two such projections in
the projection basis yields the dual structure constants, whose
nonnegativity is exactly the Schur product property on the dual.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpectrum, NormalizationFailure, NotCommutative
from .rings import FusionData, fp_dimensions, is_commutative

__all__ = [
    "CharacterTable",
    "DualProjection",
    "character_table",
    "verify_character_table",
    "dual_projections",
    "dual_fusion_coefficients",
]

RESIDUAL_TOL = 1e-8
REDRAWS = 8
_SEED = 0x5EED


@dataclass(frozen=True)
class CharacterTable:
    """Simultaneous eigenvalue data of the fusion matrices.

    ``lam[i, j]`` is the value of character j on basis element i; column
    0 is the Frobenius-Perron column (all values real positive, equal to
    the FP dimensions).  ``vectors[:, j]`` is the unit joint eigenvector
    of character j, phase-fixed so its largest-magnitude component is
    real positive.  ``residual`` is max_{i,j} ||M_i v_j - lam[i,j] v_j||,
    and ``column_order`` records the permutation applied to the raw
    eigensolver output (Perron column first, the rest sorted by rounded
    values).
    """

    lam: np.ndarray
    vectors: np.ndarray
    residual: float
    tol: float
    column_order: tuple = ()

    @property
    def rank(self) -> int:
        return self.lam.shape[0]

    @property
    def fp_column(self) -> np.ndarray:
        return self.lam[:, 0].real

    def conjugate_column(self, j: int) -> int:
        """Index of the character equal to the complex conjugate of column j."""
        target = np.conj(self.lam[:, j])
        diffs = np.max(np.abs(self.lam - target[:, None]), axis=0)
        k = int(np.argmin(diffs))
        if diffs[k] > 1e-6 * (1 + np.max(np.abs(target))):
            raise DegenerateSpectrum("character table is not closed under conjugation")
        return k


def character_table(fd: FusionData, tol: float = RESIDUAL_TOL, seed: int = _SEED) -> CharacterTable:
    """Compute the character table by joint diagonalization.

    A random Hermitian combination sum_i c_i M_i (with c_{i*} = conj(c_i),
    coefficients drawn from the unit disk, deterministic seed) is
    diagonalized; generic coefficients separate the joint eigenspaces
    with probability one.  Every eigenvector is validated against every
    fusion matrix; on failure the combination is redrawn up to 8 times.
    The validated table does not depend on the seed (eigenvector phases
    are fixed and columns are canonically ordered).
    """
    if not is_commutative(fd):
        raise NotCommutative("character tables are defined for commutative rings")
    m = fd.rank
    N = np.asarray(fd.tensor, dtype=float)
    dual = fd.dual
    d = fp_dimensions(fd)
    scale = float(np.max(np.abs(N))) * m + 1.0
    rng = np.random.default_rng(seed)

    last_residual = np.inf
    for _ in range(REDRAWS):
        c = rng.uniform(-1, 1, m) + 1j * rng.uniform(-1, 1, m)
        c = c + np.conj(c[dual])  # makes sum_i c_i M_i Hermitian (M_i^T = M_{i*})
        T = np.einsum("i,ikl->kl", c, N.astype(complex))
        _, V = np.linalg.eigh(T)

        lam = np.empty((m, m), dtype=complex)
        ok = True
        worst = 0.0
        for j in range(m):
            v = V[:, j]
            for i in range(m):
                Mv = N[i] @ v
                lam[i, j] = np.vdot(v, Mv)
                worst = max(worst, float(np.linalg.norm(Mv - lam[i, j] * v)))
            if worst > tol * scale:
                ok = False
                break
        last_residual = worst
        if not ok:
            continue

        # phase fix: largest-magnitude component real positive
        for j in range(m):
            v = V[:, j]
            k = int(np.argmax(np.abs(v)))
            V[:, j] = v / (v[k] / abs(v[k]))

        order = _column_order(lam, d)
        lam = lam[:, order]
        V = V[:, order]
        lam[:, 0] = lam[:, 0].real
        return CharacterTable(lam, V, worst, tol, tuple(order))

    raise DegenerateSpectrum(
        f"joint eigenvector validation failed after {REDRAWS} draws "
        f"(residual {last_residual:.3g})"
    )


def _column_order(lam: np.ndarray, d: np.ndarray) -> list:
    """Perron column first, the rest sorted by rounded column values."""
    m = lam.shape[0]
    perron = None
    for j in range(m):
        col = lam[:, j]
        if np.max(np.abs(col.imag)) < 1e-6 * (1 + np.max(np.abs(col))) and np.all(
            col.real > 0
        ):
            if np.max(np.abs(col.real - d)) < 1e-6 * (1 + np.max(d)):
                perron = j
                break
    if perron is None:
        raise DegenerateSpectrum("no Frobenius-Perron column found")
    rest = [j for j in range(m) if j != perron]

    def key(j):
        col = lam[:, j]
        return tuple((round(float(x.real), 6), round(float(x.imag), 6)) for x in col)

    rest.sort(key=key)
    return [perron] + rest


def verify_character_table(fd: FusionData, ct: CharacterTable) -> float:
    """Recompute max_{i,j} ||M_i v_j - lam[i,j] v_j|| from scratch."""
    N = np.asarray(fd.tensor, dtype=float)
    worst = 0.0
    for j in range(ct.rank):
        v = ct.vectors[:, j]
        for i in range(ct.rank):
            worst = max(worst, float(np.linalg.norm(N[i] @ v - ct.lam[i, j] * v)))
    return worst


# ---------------------------------------------------------------------------
# dual projections


@dataclass(frozen=True)
class DualProjection:
    """Minimal projection of the dual algebra attached to character j.

    ``coeffs`` expresses P_j over the fusion basis {x_k}.  The defining
    formula P_j ~ sum_k chi_j(x_k) x_{k*} only fixes P_j up to scale;
    the normalization constant is recovered by enforcing idempotency,
    which gives 1 / sum_k |lambda_{k,j}|^2.
    """

    index: int
    coeffs: np.ndarray
    trace: float
    normalization: float


def dual_projections(fd: FusionData, ct: CharacterTable, tol: float = RESIDUAL_TOL) -> list:
    """Minimal projections P_j of the dual algebra, one per character.

    Verifies P_j P_j = P_j, P_j P_k = 0 for j != k, and sum_j P_j = 1
    within tolerance.
    """
    if not is_commutative(fd):
        raise NotCommutative("dual projections require a commutative ring")
    m = fd.rank
    N = np.asarray(fd.tensor, dtype=float)
    dual = fd.dual
    out = []
    for j in range(m):
        raw = ct.lam[dual, j]  # coefficient of x_k is chi_j(x_{k*})
        c = float(np.sum(np.abs(ct.lam[:, j]) ** 2))
        if c <= 0:
            raise NormalizationFailure(f"projection {j + 1} has vanishing norm")
        coeffs = raw / c
        out.append(DualProjection(j, coeffs, float(coeffs[0].real), c))

    # verification: idempotency, orthogonality, partition of unity
    scale = 1.0 + float(np.max(np.abs(ct.lam)))
    for a in range(m):
        Pa = out[a].coeffs
        for b in range(a, m):
            prod = np.einsum("j,k,jks->s", Pa, out[b].coeffs, N)
            want = Pa if a == b else np.zeros(m)
            err = float(np.max(np.abs(prod - want)))
            if err > tol * scale:
                raise NormalizationFailure(
                    f"P_{a + 1} * P_{b + 1} deviates from a projection system by {err:.3g}"
                )
    total = sum(p.coeffs for p in out)
    unit = np.zeros(m, dtype=complex)
    unit[0] = 1.0
    if float(np.max(np.abs(total - unit))) > tol * scale:
        raise NormalizationFailure("projections do not sum to the unit")
    return out


def dual_fusion_coefficients(
    fd: FusionData, ct: CharacterTable, tol: float = RESIDUAL_TOL
) -> np.ndarray:
    """Structure constants of the dual convolution on the projections.

    The dual convolution acts coefficientwise on the fusion basis,
    (x ._B y)_i = x_i y_i / d_i; expanding P_j ._B P_k over {P_s} by
    evaluating characters gives Nhat[j,k,s].  Imaginary parts below
    tolerance are dropped.  All entries >= 0 is exactly the Schur
    product property on the dual.
    """
    projs = dual_projections(fd, ct, tol)
    m = fd.rank
    d = ct.fp_column
    nhat = np.empty((m, m, m), dtype=complex)
    for j in range(m):
        for k in range(m):
            conv = projs[j].coeffs * projs[k].coeffs / d
            # chi_s(conv) = coefficient of P_s
            nhat[j, k] = conv @ ct.lam
    imag = float(np.max(np.abs(nhat.imag)))
    if imag > tol * (1 + float(np.max(np.abs(nhat)))):
        raise NormalizationFailure(f"dual coefficients have imaginary mass {imag:.3g}")
    return nhat.real
