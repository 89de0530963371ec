"""Analytic obstructions to unitary categorification.

The Schur product property on the dual of a fusion ring is necessary
for the ring to be the Grothendieck ring of a unitary fusion category.
For a commutative ring with character table (lambda_{i,j}) it is
equivalent to

    sum_i lambda_{i,j1} lambda_{i,j2} lambda_{i,j3} / lambda_{i,1} >= 0

for every triple of columns (j1, j2, j3).  The noncommutative criterion
quantifies over vectors: sum_i prod_s (u_s^* M_i u_s) / d_i >= 0 for
all u_1, u_2, u_3; sampling can only falsify it, never certify it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import rings
from .errors import NotIntegral
from .rings import FusionData, fp_dimensions, global_fpdim
from .spectral import CharacterTable, character_table

__all__ = [
    "SchurReport",
    "FalsifierWitness",
    "ObstructionReport",
    "schur_triple_sum",
    "schur_commutative",
    "schur_noncommutative_falsify",
    "obstruction_report",
    "decision_tol",
]


def decision_tol(mu: float) -> float:
    """Decision tolerance for Schur positivity: 1e-9 * (1 + FPdim)."""
    return 1e-9 * (1.0 + mu)


@dataclass(frozen=True)
class SchurReport:
    holds: bool
    worst_triple: tuple  # 1-based column indices
    worst_value: float
    tolerance: float
    n_triples: int
    max_imag: float
    inconclusive: bool = False
    all_sums: Optional[np.ndarray] = None  # full m^3 survey on request

    def __str__(self):
        verdict = "holds" if self.holds else "FAILS"
        note = " [worst value negative but within numerical tolerance]" if self.inconclusive else ""
        return (
            f"Schur product criterion {verdict}: worst triple {self.worst_triple} "
            f"-> {self.worst_value:.9g} (tol {self.tolerance:.3g}){note}"
        )


def schur_triple_sum(ct: CharacterTable, j1: int, j2: int, j3: int) -> complex:
    """sum_i lam[i,j1] lam[i,j2] lam[i,j3] / lam[i,1] for 0-based columns.

    The imaginary part is returned for diagnostics; on a genuine
    character table it vanishes up to numerical noise.
    """
    lam = ct.lam
    return complex(np.sum(lam[:, j1] * lam[:, j2] * lam[:, j3] / lam[:, 0].real))


def _all_triple_sums(ct: CharacterTable) -> np.ndarray:
    w = ct.lam / ct.lam[:, 0].real[:, None]  # w[i,j] = lam[i,j]/d_i
    return np.einsum("ia,ib,ic->abc", ct.lam, ct.lam, w)


def schur_commutative(
    ct: CharacterTable,
    tol: Optional[float] = None,
    decide_only: bool = False,
    keep_sums: bool = False,
) -> SchurReport:
    """Scan all column triples j1 <= j2 <= j3 (the sum is symmetric).

    Values in (-tol, 0) are flagged inconclusive rather than failed.
    With ``decide_only`` the scan stops at the first decisive negative;
    otherwise the minimum over all triples is reported, and
    ``keep_sums`` attaches the full m^3 survey array.
    """
    m = ct.rank
    mu = float(np.sum(ct.fp_column**2))
    if tol is None:
        tol = decision_tol(mu)

    if decide_only:
        worst = np.inf
        arg = (1, 1, 1)
        max_imag = 0.0
        for a in range(m):
            for b in range(a, m):
                for c in range(b, m):
                    v = schur_triple_sum(ct, a, b, c)
                    max_imag = max(max_imag, abs(v.imag))
                    if v.real < worst:
                        worst, arg = v.real, (a + 1, b + 1, c + 1)
                    if v.real < -tol:
                        return SchurReport(False, arg, worst, tol, -1, max_imag)
        n = m * (m + 1) * (m + 2) // 6
        return SchurReport(worst >= -tol, arg, worst, tol, n, max_imag,
                           inconclusive=-tol <= worst < 0)

    sums = _all_triple_sums(ct)
    max_imag = float(np.max(np.abs(sums.imag)))
    re = sums.real
    idx = np.unravel_index(int(np.argmin(re)), re.shape)
    worst = float(re[idx])
    n = m * (m + 1) * (m + 2) // 6
    return SchurReport(
        worst >= -tol,
        tuple(sorted(int(i) + 1 for i in idx)),
        worst,
        tol,
        n,
        max_imag,
        inconclusive=-tol <= worst < 0,
        all_sums=re if keep_sums else None,
    )


@dataclass(frozen=True)
class FalsifierWitness:
    vectors: tuple  # (u1, u2, u3)
    value: float
    sample_index: int


def schur_noncommutative_falsify(
    fd: FusionData,
    num_samples: int = 10_000,
    seed: int = 0,
    tol: Optional[float] = None,
) -> Optional[FalsifierWitness]:
    """Search for vectors violating the representation-based criterion.

    Evaluates sum_i prod_{s=1..3} (u_s^* M_i u_s) / d_i on random
    complex Gaussian triples; when the ring is commutative the joint
    eigenvectors of the character table are tried first (a failing
    triple sum transfers directly to a witness).  Returns the first
    witness with value < -tol, else None.  Absence of a witness is NOT
    a proof that the property holds.
    """
    d = fp_dimensions(fd)
    mu = float(d @ d)
    if tol is None:
        tol = decision_tol(mu)
    N = np.asarray(fd.tensor, dtype=complex)
    m = fd.rank

    def evaluate(u1, u2, u3) -> float:
        q1 = np.einsum("k,ikl,l->i", np.conj(u1), N, u1)
        q2 = np.einsum("k,ikl,l->i", np.conj(u2), N, u2)
        q3 = np.einsum("k,ikl,l->i", np.conj(u3), N, u3)
        return float(np.sum(q1 * q2 * q3 / d).real)

    counter = 0
    if rings.is_commutative(fd):
        ct = character_table(fd)
        V = ct.vectors
        for a in range(m):
            for b in range(a, m):
                for c in range(b, m):
                    val = evaluate(V[:, a], V[:, b], V[:, c])
                    if val < -tol:
                        return FalsifierWitness((V[:, a], V[:, b], V[:, c]), val, -1)
    rng = np.random.default_rng(seed)
    for counter in range(num_samples):
        u = rng.standard_normal((3, m)) + 1j * rng.standard_normal((3, m))
        val = evaluate(u[0], u[1], u[2])
        if val < -tol:
            return FalsifierWitness((u[0], u[1], u[2]), val, counter)
    return None


@dataclass(frozen=True)
class ObstructionReport:
    """Predicate flags and obstruction results for one ring."""

    label: Optional[str]
    rank: int
    fpdim: float
    type_string: str
    integral: bool
    commutative: bool
    simple: bool
    perfect: bool
    frobenius_type: Optional[bool]
    schur: Optional[SchurReport]
    falsifier: Optional[FalsifierWitness]
    coefficient_bounds_hold: bool

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "rank": self.rank,
            "fpdim": self.fpdim,
            "type": self.type_string,
            "integral": self.integral,
            "commutative": self.commutative,
            "simple": self.simple,
            "perfect": self.perfect,
            "frobenius_type": self.frobenius_type,
            "schur_holds": None if self.schur is None else self.schur.holds,
            "schur_worst_value": None if self.schur is None else self.schur.worst_value,
            "schur_worst_triple": None if self.schur is None else list(self.schur.worst_triple),
            "falsifier_value": None if self.falsifier is None else self.falsifier.value,
            "coefficient_bounds_hold": self.coefficient_bounds_hold,
        }


def obstruction_report(
    fd: FusionData, falsifier_samples: int = 0, seed: int = 0
) -> ObstructionReport:
    """Bundle the structural predicates with the Schur obstruction.

    For commutative rings the decisive character-table criterion is
    used; the sampling falsifier runs only when requested
    (``falsifier_samples > 0``) or when the ring is noncommutative.
    """
    sig = rings.type_signature(fd)
    integral = sig.integral
    commutative = rings.is_commutative(fd)
    try:
        frob = rings.is_frobenius_type(fd) if integral else None
    except NotIntegral:  # pragma: no cover - guarded by `integral`
        frob = None
    schur = None
    witness = None
    if commutative:
        schur = schur_commutative(character_table(fd))
        if falsifier_samples:
            witness = schur_noncommutative_falsify(fd, falsifier_samples, seed)
    else:
        witness = schur_noncommutative_falsify(fd, falsifier_samples or 10_000, seed)
    return ObstructionReport(
        label=fd.label,
        rank=fd.rank,
        fpdim=global_fpdim(fd),
        type_string=str(sig),
        integral=integral,
        commutative=commutative,
        simple=rings.is_simple(fd),
        perfect=rings.is_perfect(fd),
        frobenius_type=frob,
        schur=schur,
        falsifier=witness,
        coefficient_bounds_hold=rings.coefficient_bounds_report(fd).all_hold,
    )
