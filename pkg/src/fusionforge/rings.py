"""Fusion rings and fusion algebras over the reals.

A fusion ring of rank m is a unital ring with a distinguished basis
x_1 = 1, x_2, ..., x_m, nonnegative structure constants

    x_j x_k = sum_s N[j,k,s] x_s,

and an involution * on the index set with N[j,k,1] = delta_{j,k*}.
Allowing nonnegative real structure constants gives a fusion algebra.
This module holds the data model, axiom verification, Frobenius-Perron
dimensions, structural predicates, subring closure, isomorphism testing
and the unconditional upper bounds on the structure constants.

Indices are 0-based internally; index 0 is always the unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BadInvolution,
    ConvergenceFailure,
    NegativeEntry,
    NoDuality,
    NonSquare,
    NotIntegral,
    NoUnit,
    RankTooLarge,
)

__all__ = [
    "FusionData",
    "TypeSignature",
    "AxiomCheck",
    "VerificationReport",
    "CoefficientBoundsReport",
    "new_fusion_data",
    "group_ring",
    "cyclic_group_ring",
    "verify_axioms",
    "fp_dimensions",
    "global_fpdim",
    "type_signature",
    "subring_closure",
    "proper_subrings",
    "is_simple",
    "is_perfect",
    "is_integral",
    "is_frobenius_type",
    "is_commutative",
    "are_isomorphic",
    "coefficient_bounds_report",
    "permuted",
]

#: power-iteration convergence threshold for Frobenius-Perron data
FP_TOL = 1e-12
FP_MAX_ITER = 100_000

#: |d_i - round(d_i)| below this counts as an integer dimension
INTEGER_TOL = 1e-6

#: rank cap for subring-lattice enumeration
SUBRING_RANK_CAP = 16

#: rank cap for isomorphism backtracking
ISO_RANK_CAP = 12


class FusionData:
    """A fusion ring/algebra given by its structure-constant tensor.

    Attributes
    ----------
    rank : int
        Number of basis elements m.
    tensor : (m, m, m) ndarray
        ``tensor[j, k, s] = N_{j,k}^s``, integer dtype in exact mode,
        float dtype otherwise.
    dual : (m,) ndarray of int
        The duality involution; ``dual[0] == 0``.
    mode : str
        ``"exact"`` (integer arithmetic) or ``"float"``.
    label : str or None
        Free-form name used by the corpus.

    Instances are immutable; the Frobenius-Perron dimension vector is
    computed lazily and cached (write-once).
    """

    __slots__ = ("rank", "tensor", "dual", "mode", "label", "_fp_dims")

    def __init__(self, tensor, dual, mode, label=None):
        tensor = np.asarray(tensor)
        self.rank = tensor.shape[0]
        self.tensor = tensor
        self.dual = np.asarray(dual, dtype=np.int64)
        self.mode = mode
        self.label = label
        self._fp_dims = None
        self.tensor.setflags(write=False)
        self.dual.setflags(write=False)

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def fusion_matrix(self, j: int) -> np.ndarray:
        """Left-multiplication data of x_j: entry (k, s) = N_{j,k}^s."""
        return self.tensor[j]

    def fusion_matrices(self) -> np.ndarray:
        return self.tensor

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<FusionData{name} rank={self.rank} mode={self.mode}>"

    def __eq__(self, other):
        if not isinstance(other, FusionData):
            return NotImplemented
        return (
            self.rank == other.rank
            and np.array_equal(self.tensor, other.tensor)
            and np.array_equal(self.dual, other.dual)
        )

    def __hash__(self):
        return hash((self.rank, self.tensor.tobytes(), self.dual.tobytes()))


@dataclass(frozen=True)
class TypeSignature:
    """Multiset of Frobenius-Perron dimensions with multiplicities.

    ``entries`` is sorted ascending, e.g. ((1, 1), (5, 3), (6, 1), (7, 2)).
    For non-integral rings ``integral`` is False and the entries hold
    floats grouped at 1e-6 resolution.
    """

    entries: tuple
    integral: bool

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def fpdim(self):
        return sum(m * n * n for n, m in self.entries)

    @property
    def dims(self) -> tuple:
        """The dimension list with multiplicities expanded, ascending."""
        return tuple(n for n, m in self.entries for _ in range(m))

    def __str__(self):
        inner = ",".join(f"[{n},{m}]" for n, m in self.entries)
        return f"[{inner}]"


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    ok: bool
    witness: Optional[tuple] = None
    residual: float = 0.0


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def summary(self) -> str:
        return "; ".join(
            f"{c.name}: {'ok' if c.ok else f'FAIL at {c.witness} (residual {c.residual:g})'}"
            for c in self.checks
        )


# ---------------------------------------------------------------------------
# construction


def new_fusion_data(matrices: Sequence, mode: str = "exact", label=None) -> FusionData:
    """Assemble a FusionData from the list of fusion matrices.

    ``matrices[i]`` is the m-by-m matrix with entry (k, s) = N_{i,k}^s;
    matrix 0 must be the identity.  The duality involution is derived
    from the unit column N[j,k,0].
    """
    if mode not in ("exact", "float"):
        raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
    mats = [np.asarray(M) for M in matrices]
    m = len(mats)
    if m < 1:
        raise NonSquare("need at least one matrix")
    for i, M in enumerate(mats):
        if M.shape != (m, m):
            raise NonSquare(f"matrix {i + 1} has shape {M.shape}, expected {(m, m)}")
    tensor = np.stack(mats)
    if mode == "exact":
        if not np.allclose(tensor, np.round(tensor.astype(float))):
            raise ValueError("exact mode requires integer structure constants")
        tensor = np.round(tensor.astype(float)).astype(np.int64)
    else:
        tensor = tensor.astype(np.float64)
    if tensor.min() < 0:
        j, k, s = np.unravel_index(int(np.argmin(tensor.reshape(-1))), tensor.shape)
        raise NegativeEntry(f"N[{j + 1},{k + 1},{s + 1}] = {tensor[j, k, s]} < 0")

    eye = np.eye(m, dtype=tensor.dtype)
    tol = 0 if mode == "exact" else 1e-9 * (1 + float(tensor.max()))
    if not _close(tensor[0], eye, tol):
        raise NoUnit("matrix 1 is not the identity")
    if not _close(tensor[:, 0, :], eye, tol):
        raise NoUnit("x_j * 1 != x_j for some j")

    # duality: N[j,k,0] = delta_{k, dual(j)}
    dual = np.full(m, -1, dtype=np.int64)
    unit_col = tensor[:, :, 0]
    for j in range(m):
        hits = [k for k in range(m) if not _close(unit_col[j, k], 0, tol)]
        if len(hits) != 1 or not _close(unit_col[j, hits[0]], 1, tol):
            raise NoDuality(f"row {j + 1} of the unit column is not a standard basis vector")
        dual[j] = hits[0]
    if dual[0] != 0:
        raise BadInvolution("dual(1) != 1")
    if not np.array_equal(dual[dual], np.arange(m)):
        raise BadInvolution("derived duality is not an involution")
    return FusionData(tensor, dual, mode, label=label)


def group_ring(mult_table: np.ndarray, label=None) -> FusionData:
    """Fusion ring of a finite group given by its multiplication table.

    ``mult_table[g, h]`` is the index of g*h; index 0 is the neutral
    element.  N_{g,h}^s = delta_{s, gh}.
    """
    table = np.asarray(mult_table)
    n = table.shape[0]
    tensor = np.zeros((n, n, n), dtype=np.int64)
    for g in range(n):
        for h in range(n):
            tensor[g, h, table[g, h]] = 1
    dual = np.array([int(np.nonzero(table[g] == 0)[0][0]) for g in range(n)])
    return FusionData(tensor, dual, "exact", label=label)


def cyclic_group_ring(n: int) -> FusionData:
    """The group ring of Z/n."""
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return group_ring(table, label=f"z{n}")


def _close(a, b, tol) -> bool:
    if tol == 0:
        return np.array_equal(np.asarray(a), np.asarray(b))
    return bool(np.max(np.abs(np.asarray(a, dtype=float) - b)) <= tol)


# ---------------------------------------------------------------------------
# axiom verification


def verify_axioms(fd: FusionData, tol: Optional[float] = None) -> VerificationReport:
    """Check unit, duality, Frobenius reciprocity, associativity, nonnegativity.

    Exact mode compares integers (tol is forced to 0); float mode uses
    ``tol`` scaled from the largest tensor entry when not given.
    """
    N = fd.tensor
    m = fd.rank
    if fd.exact:
        tol = 0.0
    elif tol is None:
        tol = 1e-9 * (1 + float(N.max()))
    checks = []

    neg = N.min()
    if neg < -tol if not fd.exact else neg < 0:
        idx = np.unravel_index(int(np.argmin(N.reshape(-1))), N.shape)
        checks.append(AxiomCheck("nonnegativity", False, _w(idx), float(-neg)))
    else:
        checks.append(AxiomCheck("nonnegativity", True))

    eye = np.eye(m, dtype=N.dtype)
    err_left = np.abs(N[0] - eye).max()
    err_right = np.abs(N[:, 0, :] - eye).max()
    unit_err = max(float(err_left), float(err_right))
    checks.append(
        AxiomCheck("unit", unit_err <= tol, None if unit_err <= tol else (1,), unit_err)
    )

    dual = fd.dual
    want = np.zeros((m, m), dtype=N.dtype)
    want[np.arange(m), dual] = 1
    dual_err = float(np.abs(N[:, :, 0] - want).max())
    checks.append(
        AxiomCheck("duality", dual_err <= tol, None if dual_err <= tol else (1,), dual_err)
    )

    # N[j,k,s] = N[k*,j*,s*] = N[j*,s,k]
    star = np.abs(N - N[dual][:, dual][:, :, dual].transpose(1, 0, 2))
    rot = np.abs(N - N[dual].transpose(0, 2, 1))
    frob_err = float(max(star.max(), rot.max()))
    if frob_err <= tol:
        checks.append(AxiomCheck("frobenius_reciprocity", True))
    else:
        bad = star if star.max() >= rot.max() else rot
        idx = np.unravel_index(int(np.argmax(bad.reshape(-1))), bad.shape)
        checks.append(AxiomCheck("frobenius_reciprocity", False, _w(idx), frob_err))

    # sum_s N[i,j,s] N[s,k,t] == sum_s N[j,k,s] N[i,s,t]
    left = np.einsum("ijs,skt->ijkt", N, N)
    right = np.einsum("jks,ist->ijkt", N, N)
    diff = np.abs(left - right)
    assoc_err = float(diff.max())
    assoc_tol = tol if fd.exact else tol * (1 + float(np.abs(left).max()))
    if assoc_err <= assoc_tol:
        checks.append(AxiomCheck("associativity", True))
    else:
        idx = np.unravel_index(int(np.argmax(diff.reshape(-1))), diff.shape)
        checks.append(AxiomCheck("associativity", False, _w(idx), assoc_err))

    return VerificationReport(tuple(checks))


def _w(idx) -> tuple:
    """1-based witness indices for reports."""
    return tuple(int(i) + 1 for i in idx)


# ---------------------------------------------------------------------------
# Frobenius-Perron data


def fp_dimensions(fd: FusionData) -> np.ndarray:
    """Frobenius-Perron dimension of every basis element.

    d_i is the spectral radius of the fusion matrix M_i, and the vector
    (d_1, ..., d_m) is the common Perron eigenvector of all M_i with
    d_1 = 1.  The vector is found by power iteration on the strictly
    positive total matrix sum_j M_j (the individual M_i may be periodic,
    e.g. permutation matrices of a group ring, where plain per-matrix
    power iteration cycles), then each d_i is read off by a Rayleigh
    quotient and validated; full eigendecomposition is the fallback.
    """
    if fd._fp_dims is not None:
        return fd._fp_dims
    N = fd.tensor.astype(np.float64)
    m = fd.rank
    total = N.sum(axis=0)
    v = np.ones(m)
    for _ in range(FP_MAX_ITER):
        w = total @ v
        w /= w[0]
        if np.max(np.abs(w - v)) <= FP_TOL * np.max(w):
            v = w
            break
        v = w
    else:
        raise ConvergenceFailure("power iteration on the total fusion matrix did not converge")

    dims = np.array([float(v @ (N[i] @ v)) / float(v @ v) for i in range(m)])
    ok = all(
        np.max(np.abs(N[i] @ v - dims[i] * v)) <= 1e-9 * (1 + dims[i]) * np.max(v)
        for i in range(m)
    )
    if not ok:
        # fallback: spectral radius of each fusion matrix
        dims = np.array([np.max(np.linalg.eigvals(N[i]).real) for i in range(m)])
    dims[0] = 1.0
    fd._fp_dims = dims
    return dims


def global_fpdim(fd: FusionData) -> float:
    """FPdim of the ring: mu = sum_i d_i^2."""
    d = fp_dimensions(fd)
    return float(d @ d)


def type_signature(fd: FusionData, integer_tol: float = INTEGER_TOL) -> TypeSignature:
    """Group the FP dimensions into [[n_i, m_i], ...] sorted ascending."""
    d = np.sort(fp_dimensions(fd))
    integral = bool(np.max(np.abs(d - np.round(d))) <= integer_tol)
    entries = []
    if integral:
        for n in np.round(d).astype(int):
            n = int(n)
            if entries and entries[-1][0] == n:
                entries[-1][1] += 1
            else:
                entries.append([n, 1])
    else:
        for x in d:
            if entries and abs(entries[-1][0] - x) <= integer_tol:
                entries[-1][1] += 1
            else:
                entries.append([float(x), 1])
    return TypeSignature(tuple((n, m) for n, m in entries), integral)


# ---------------------------------------------------------------------------
# subrings and predicates


def _support_tol(fd: FusionData) -> float:
    return 0.0 if fd.exact else 1e-9 * (1 + float(fd.tensor.max()))


def subring_closure(fd: FusionData, generators: Iterable[int]) -> frozenset:
    """Smallest basis subset containing the generators that is closed
    under duality and fusion (and contains the unit).

    Indices are 0-based.  The fixpoint is reached in at most m rounds.
    """
    N = fd.tensor
    tol = _support_tol(fd)
    S = set(int(g) for g in generators) | {0}
    S |= {int(fd.dual[j]) for j in S}
    for _ in range(fd.rank):
        new = set(S)
        for j in S:
            for k in S:
                sup = np.nonzero(N[j, k] > tol)[0]
                new.update(int(s) for s in sup)
        new |= {int(fd.dual[j]) for j in new}
        if new == S:
            break
        S = new
    return frozenset(S)


def proper_subrings(fd: FusionData, rank_cap: int = SUBRING_RANK_CAP) -> list:
    """All fusion subrings S with {1} != S != everything.

    Built as the union-closure of the single-generator closures; every
    subring is the closure of the union of the singleton closures of its
    members, so the generated lattice is complete.
    """
    m = fd.rank
    if m > rank_cap:
        raise RankTooLarge(f"rank {m} exceeds subring enumeration cap {rank_cap}")
    closures = {subring_closure(fd, [j]) for j in range(1, m)}
    lattice = set(closures)
    frontier = set(closures)
    while frontier:
        nxt = set()
        for A in frontier:
            for B in closures:
                U = A | B
                if U not in lattice:
                    U = subring_closure(fd, U)
                    if U not in lattice:
                        nxt.add(U)
        lattice |= nxt
        frontier = nxt
    return sorted(
        (S for S in lattice if 1 < len(S) < m),
        key=lambda S: (len(S), sorted(S)),
    )


def is_simple(fd: FusionData) -> bool:
    """No nontrivial proper fusion subring."""
    return fd.rank == 1 or not proper_subrings(fd)


def is_perfect(fd: FusionData) -> bool:
    """Exactly one basis element of dimension 1 (the unit)."""
    d = fp_dimensions(fd)
    return int(np.sum(np.abs(d - 1.0) <= INTEGER_TOL)) == 1


def is_integral(fd: FusionData, tol: float = INTEGER_TOL) -> bool:
    d = fp_dimensions(fd)
    return bool(np.max(np.abs(d - np.round(d))) <= tol)


def is_frobenius_type(fd: FusionData) -> bool:
    """Every d_i divides FPdim (integral rings only)."""
    if not is_integral(fd):
        raise NotIntegral("Frobenius-type test implemented for integral rings only")
    d = np.round(fp_dimensions(fd)).astype(int)
    mu = int(round(global_fpdim(fd)))
    return all(mu % int(n) == 0 for n in d)


def is_commutative(fd: FusionData) -> bool:
    N = fd.tensor
    if fd.exact:
        return bool(np.array_equal(N, N.transpose(1, 0, 2)))
    tol = _support_tol(fd)
    return bool(np.max(np.abs(N - N.transpose(1, 0, 2))) <= tol)


# ---------------------------------------------------------------------------
# isomorphism


def permuted(fd: FusionData, perm: Sequence[int]) -> FusionData:
    """Relabel the basis: new index perm[j] corresponds to old index j."""
    p = np.asarray(perm, dtype=np.int64)
    m = fd.rank
    inv = np.empty(m, dtype=np.int64)
    inv[p] = np.arange(m)
    N = fd.tensor[inv][:, inv][:, :, inv]
    dual = p[fd.dual[inv]]
    return FusionData(N, dual, fd.mode, label=fd.label)


def are_isomorphic(
    fd1: FusionData, fd2: FusionData, rank_cap: int = ISO_RANK_CAP
) -> Optional[tuple]:
    """Basis relabeling sigma with sigma(1)=1 carrying tensor1 to tensor2.

    Returns the permutation (as a tuple: new index of old j) or None.
    Candidates are pruned by FP dimension, self-duality and the sorted
    entry multiset of each fusion matrix before backtracking.
    """
    if fd1.rank != fd2.rank:
        return None
    m = fd1.rank
    if m > rank_cap:
        raise RankTooLarge(f"rank {m} exceeds isomorphism search cap {rank_cap}")
    d1, d2 = fp_dimensions(fd1), fp_dimensions(fd2)
    if not np.allclose(np.sort(d1), np.sort(d2), atol=1e-8):
        return None

    def fingerprint(fd, d):
        fps = []
        for j in range(fd.rank):
            mat = np.asarray(fd.tensor[j], dtype=float)
            fps.append(
                (
                    round(float(d[j]), 6),
                    int(fd.dual[j] == j),
                    round(float(fd.tensor[j, j, j]), 6),
                    tuple(np.round(np.sort(mat.reshape(-1)), 6)),
                )
            )
        return fps

    f1, f2 = fingerprint(fd1, d1), fingerprint(fd2, d2)
    cands = [[k for k in range(m) if f2[k] == f1[j]] for j in range(m)]
    if any(not c for c in cands):
        return None

    N1 = np.asarray(fd1.tensor, dtype=float)
    N2 = np.asarray(fd2.tensor, dtype=float)
    tol = 0.0 if (fd1.exact and fd2.exact) else 1e-7
    sigma = np.full(m, -1, dtype=np.int64)
    used = np.zeros(m, dtype=bool)
    order = sorted(range(1, m), key=lambda j: len(cands[j]))

    def consistent(j: int) -> bool:
        assigned = [t for t in range(m) if sigma[t] >= 0]
        for a in assigned:
            for b in assigned:
                for c in assigned:
                    if abs(N1[a, b, c] - N2[sigma[a], sigma[b], sigma[c]]) > tol:
                        return False
        return True

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        j = order[pos]
        for k in cands[j]:
            if used[k] or int(fd2.dual[k] == k) != int(fd1.dual[j] == j):
                continue
            # duality must be intertwined as soon as both ends are placed
            dj = int(fd1.dual[j])
            if sigma[dj] >= 0 and sigma[dj] != int(fd2.dual[k]):
                continue
            sigma[j] = k
            used[k] = True
            if consistent(j) and extend(pos + 1):
                return True
            sigma[j] = -1
            used[k] = False
        return False

    sigma[0] = 0
    used[0] = True
    if extend(0):
        return tuple(int(x) for x in sigma)
    return None


# ---------------------------------------------------------------------------
# coefficient bounds


@dataclass(frozen=True)
class CoefficientBoundsReport:
    """Slack of the four unconditional bounds on the structure constants.

    Each field holds (min slack, witness indices, 1-based).  All four
    slacks are nonnegative on any genuine fusion ring; a violation
    certifies that the tensor is not a fusion ring or the dimensions
    are wrong.
    """

    square_sum: tuple
    cross_dim: tuple
    min_dim: tuple
    pair_sum: tuple

    @property
    def all_hold(self) -> bool:
        return all(
            s[0] >= -1e-9 for s in (self.square_sum, self.cross_dim, self.min_dim, self.pair_sum)
        )


def coefficient_bounds_report(fd: FusionData) -> CoefficientBoundsReport:
    """Evaluate the four inequalities of the fusion-coefficient bound set.

    (1) sum_l N[j,k,l]^2 <= min(d_j^2, d_k^2)
    (2) N[j,k,l] <= d_l * min(d_j,d_k)/max(d_j,d_k)
        (the infimum over t >= 1 of d_l d_j^{(2-t)/t} d_k^{(t-2)/t})
    (3) N[j,k,l] <= min(d_j, d_k, d_l)
    (4) sum_s N[j1,j2,s] N[j3,j4,s] <= min over pairs j != j' of d_j d_j'
    """
    N = np.asarray(fd.tensor, dtype=float)
    d = fp_dimensions(fd)
    m = fd.rank

    sq = np.einsum("jkl,jkl->jk", N, N)
    bound1 = np.minimum.outer(d**2, d**2)
    slack1 = bound1 - sq
    i1 = np.unravel_index(int(np.argmin(slack1)), slack1.shape)

    ratio = np.minimum.outer(d, d) / np.maximum.outer(d, d)
    bound2 = ratio[:, :, None] * d[None, None, :]
    slack2 = bound2 - N
    i2 = np.unravel_index(int(np.argmin(slack2)), slack2.shape)

    bound3 = np.minimum(np.minimum.outer(d, d)[:, :, None], d[None, None, :])
    slack3 = bound3 - N
    i3 = np.unravel_index(int(np.argmin(slack3)), slack3.shape)

    pair = np.einsum("abs,cds->abcd", N, N)
    dd = np.multiply.outer(d, d)
    best = np.full((m, m, m, m), np.inf)
    idx = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    grids = np.meshgrid(*(np.arange(m),) * 4, indexing="ij")
    for a, b in idx:
        best = np.minimum(best, dd[grids[a], grids[b]])
    slack4 = best - pair
    i4 = np.unravel_index(int(np.argmin(slack4)), slack4.shape)

    return CoefficientBoundsReport(
        (float(slack1[i1]), _w(i1)),
        (float(slack2[i2]), _w(i2)),
        (float(slack3[i3]), _w(i3)),
        (float(slack4[i4]), _w(i4)),
    )
