"""Classification search for fusion rings.

Pipeline: enumerate candidate type signatures under the arithmetic
constraints, enumerate duality involutions up to relabeling, then
backtrack over the structure-constant tensor.  The tensor search keys
on three facts:

* Frobenius reciprocity partitions the cells N[j,k,s] into orbits of
  size at most 6; one variable per orbit.
* For every pair (j,k) the dimension equation
  sum_s N[j,k,s] d_s = d_j d_k is an exact integer knapsack; partial
  assignments prune on residual feasibility.
* The unconditional coefficient bounds N[j,k,s] <= min(d_j,d_k,d_s) and
  sum_s N[j,k,s]^2 <= min(d_j^2, d_k^2) cap the domains.

Associativity instances are checked the moment their last cell is
assigned.  Found tensors are deduplicated by canonical form under the
dimension-preserving permutations commuting with the involution, then
confirmed pairwise with the isomorphism test.

The inner DFS is an iterative loop over flat int64 arrays, compiled
with numba when available.
"""

from __future__ import annotations

import itertools
import json
import math
import os
import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import criteria, rings
from .errors import SearchTimeout, UnboundedSearch
from .rings import FusionData, TypeSignature, are_isomorphic
from .spectral import character_table

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency normally
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


__all__ = [
    "SearchConstraints",
    "SearchStats",
    "TypeResult",
    "ClassificationReport",
    "enumerate_types",
    "enumerate_involutions",
    "enumerate_fusion_rings",
    "naive_enumerate_fusion_rings",
    "classify",
    "rank5_three_selfadjoint_family",
    "RANK5_TEMPLATE_DUAL",
]


# ---------------------------------------------------------------------------
# constraints and type enumeration


@dataclass(frozen=True)
class SearchConstraints:
    """Arithmetic filters for the type enumeration and tensor search.

    ``fpdim`` and ``rank`` accept an exact value or an inclusive
    (min, max) range; ``fpdim`` must be bounded.  The boolean flags
    mirror the necessary conditions used for the simple/perfect hunt:
    divisibility of every dimension into FPdim (Frobenius type),
    perfectness (no nontrivial dimension-1 elements), a floor on the
    second dimension, gcd-one of the non-unit dimensions, exclusion of
    FPdim of the form p^a q^b or pqr, and the growth cap n_{i+1} < n_i^2.
    """

    fpdim: object = None
    rank: object = None
    require_divisibility: bool = False
    require_perfect: bool = False
    min_d2: int = 1
    require_gcd_one: bool = False
    exclude_prime_power_products: bool = False
    growth_cap: bool = False
    max_multiplicity: Optional[int] = None

    def fpdim_range(self) -> tuple:
        if self.fpdim is None:
            raise UnboundedSearch("fpdim must be bounded")
        if isinstance(self.fpdim, (tuple, list)):
            lo, hi = self.fpdim
        else:
            lo = hi = int(self.fpdim)
        if hi is None or hi != hi or hi == math.inf:
            raise UnboundedSearch("fpdim upper bound must be finite")
        return int(lo), int(hi)

    def rank_range(self) -> tuple:
        if self.rank is None:
            return 1, None
        if isinstance(self.rank, (tuple, list)):
            lo, hi = self.rank
            return int(lo), None if hi is None else int(hi)
        return int(self.rank), int(self.rank)


def _distinct_prime_factors(n: int) -> list:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _excluded_fpdim(mu: int) -> bool:
    """FPdim of the form p^a q^b (including prime powers) or p q r."""
    fac = _distinct_prime_factors(mu)
    if len(fac) <= 2:
        return True
    if len(fac) == 3 and all(e == 1 for _, e in fac):
        return True
    return False


def enumerate_types(constraints: SearchConstraints) -> list:
    """All type signatures compatible with the constraints, in lex order."""
    lo, hi = constraints.fpdim_range()
    rlo, rhi = constraints.rank_range()
    out = []
    for mu in range(max(lo, 1), hi + 1):
        if constraints.exclude_prime_power_products and _excluded_fpdim(mu):
            continue
        for m1 in ([1] if constraints.require_perfect else range(1, mu + 1)):
            if m1 > 1 and constraints.min_d2 > 1:
                continue  # the second basis element would have dimension 1
            rest = mu - m1  # budget for sum m_i n_i^2 over n_i >= 2
            if rest < 0:
                continue

            def extend(prev_n, budget, parts, slots):
                if budget == 0:
                    r = m1 + slots
                    if r < rlo or (rhi is not None and r > rhi):
                        return
                    if parts and constraints.min_d2 > parts[0][0]:
                        return
                    if constraints.require_gcd_one and parts:
                        if math.gcd(*(n for n, _ in parts)) != 1:
                            return
                    if constraints.growth_cap:
                        distinct = [1] + [n for n, _ in parts]
                        for a, b in zip(distinct[1:], distinct[2:]):
                            if b >= a * a:
                                return
                    entries = ((1, m1),) + tuple(parts)
                    out.append(TypeSignature(entries, True))
                    return
                start = max(prev_n + 1, 2)
                for n in range(start, int(math.isqrt(budget)) + 1):
                    if constraints.require_divisibility and mu % n != 0:
                        continue
                    if parts == [] and n < constraints.min_d2:
                        continue
                    for k in range(1, budget // (n * n) + 1):
                        if rhi is not None and m1 + slots + k > rhi:
                            break
                        extend(n, budget - k * n * n, parts + [(n, k)], slots + k)

            extend(1, rest, [], 0)
    out.sort(key=lambda t: (t.fpdim, t.rank, t.entries))
    return out


def enumerate_involutions(sig: TypeSignature) -> list:
    """Duality involutions up to dimension-preserving relabeling.

    Duality preserves dimension, so an involution acts within each
    dimension class; up to conjugation only the number of 2-cycles per
    class matters.  Representatives pair consecutive indices.  Returns
    0-based permutations as tuples; index 0 (the unit) is always fixed.
    """
    m = sig.rank
    blocks = []  # (start, size) per dimension class, unit excluded from pairing
    pos = 0
    for n, k in sig.entries:
        start, size = pos, k
        if pos == 0:
            start, size = 1, k - 1  # the unit is self-dual by its own class
        blocks.append((start, size))
        pos += k
    choices = [range(size // 2 + 1) for _, size in blocks]
    out = []
    for combo in itertools.product(*choices):
        perm = list(range(m))
        for (start, _size), ncyc in zip(blocks, combo):
            for t in range(ncyc):
                a, b = start + 2 * t, start + 2 * t + 1
                perm[a], perm[b] = b, a
        out.append(tuple(perm))
    return out


# ---------------------------------------------------------------------------
# orbit structure


def _frobenius_orbit(cell, dual):
    """Orbit of N[j,k,s] under N[j,k,s] = N[k*,j*,s*] = N[j*,s,k]."""
    seen = {cell}
    frontier = [cell]
    while frontier:
        j, k, s = frontier.pop()
        for nxt in ((dual[k], dual[j], dual[s]), (dual[j], s, k)):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def _build_problem(dims, dual, max_mult=None, use_dims=True, prune_bounds=True):
    """Flatten the orbit/row/equation structure for the DFS kernel.

    ``prune_bounds=False`` drops the coefficient-bound caps and the
    square-sum prune (keeping only what the dimension equations force);
    used to check that the bounds are admissible.
    """
    m = len(dual)
    d = np.asarray(dims if dims is not None else [1] * m, dtype=np.int64)

    cells = [(j, k, s) for j in range(1, m) for k in range(1, m) for s in range(1, m)]
    orbit_of = {}
    orbits = []
    for c in cells:
        if c in orbit_of:
            continue
        orb = sorted(_frobenius_orbit(c, dual))
        for cc in orb:
            orbit_of[cc] = len(orbits)
        orbits.append(orb)

    def row_id(j, k):
        return (j - 1) * (m - 1) + (k - 1)

    nrows = (m - 1) * (m - 1)
    row_target = np.zeros(nrows, dtype=np.int64)
    row_sq_bound = np.zeros(nrows, dtype=np.int64)
    row_cnt = np.zeros(nrows, dtype=np.int64)
    for j in range(1, m):
        for k in range(1, m):
            r = row_id(j, k)
            unit = 1 if dual[j] == k else 0
            row_target[r] = d[j] * d[k] - unit
            if prune_bounds:
                row_sq_bound[r] = min(d[j] ** 2, d[k] ** 2) - unit
            else:
                row_sq_bound[r] = np.iinfo(np.int64).max // 4
            row_cnt[r] = m - 1

    # caps per orbit: the coefficient bound min(d_j, d_k, d_s) over the
    # orbit when dimensions are known, else the multiplicity cap alone
    orb_cap = np.zeros(len(orbits), dtype=np.int64)
    for oi, orb in enumerate(orbits):
        if use_dims:
            cap = min(d[j] * d[k] // d[s] for j, k, s in orb)  # forced by the row sum
            if prune_bounds:
                cap = min(cap, min(min(d[j], d[k], d[s]) for j, k, s in orb))
            if max_mult is not None:
                cap = min(cap, max_mult)
        else:
            if max_mult is None:
                raise ValueError("max_multiplicity is required without dimensions")
            cap = max_mult
        orb_cap[oi] = cap

    # search order: rows by cheap dimension product, columns by heavy dims first
    if use_dims:
        rows_sorted = sorted(
            ((j, k) for j in range(1, m) for k in range(1, m)),
            key=lambda jk: (d[jk[0]] * d[jk[1]], jk),
        )
        cell_order = [
            (j, k, s)
            for (j, k) in rows_sorted
            for s in sorted(range(1, m), key=lambda s: (-d[s], s))
        ]
        orb_order = []
        seen = set()
        for c in cell_order:
            o = orbit_of[c]
            if o not in seen:
                seen.add(o)
                orb_order.append(o)
    else:
        orb_order = _greedy_assoc_order(m, orbits, orbit_of)

    order_index = {o: i for i, o in enumerate(orb_order)}

    # flatten orbit cells in search order
    norb = len(orb_order)
    ptr = [0]
    flat_cells = []
    caps = np.zeros(norb, dtype=np.int64)
    for o in orb_order:
        for j, k, s in orbits[o]:
            flat_cells.append((row_id(j, k), d[s], j * m * m + k * m + s))
        ptr.append(len(flat_cells))
        caps[len(ptr) - 2] = orb_cap[o]
    orb_ptr = np.array(ptr, dtype=np.int64)
    cell_row = np.array([c[0] for c in flat_cells], dtype=np.int64)
    cell_wt = np.array([c[1] for c in flat_cells], dtype=np.int64)
    cell_idx = np.array([c[2] for c in flat_cells], dtype=np.int64)

    # remaining knapsack capacity per row
    row_capacity = np.zeros(nrows, dtype=np.int64)
    for oi in range(norb):
        for t in range(orb_ptr[oi], orb_ptr[oi + 1]):
            row_capacity[cell_row[t]] += caps[oi] * cell_wt[t]

    # associativity instances (i, j, k >= 1; t any), triggered at the orbit
    # that completes their last free cell
    eqs = []
    for i in range(1, m):
        for j in range(1, m):
            for k in range(1, m):
                for t in range(m):
                    trig = 0
                    for s in range(m):
                        for cell in ((i, j, s), (s, k, t), (j, k, s), (i, s, t)):
                            if min(cell) >= 1:
                                trig = max(trig, order_index[orbit_of[cell]])
                    eqs.append((trig, i, j, k, t))
    eqs.sort()
    eq_by_orbit_ptr = np.zeros(norb + 1, dtype=np.int64)
    eq_data = np.array(
        [[i, j, k, t] for _, i, j, k, t in eqs], dtype=np.int64
    ).reshape(-1, 4)
    pos = 0
    for oi in range(norb):
        while pos < len(eqs) and eqs[pos][0] <= oi:
            pos += 1
        eq_by_orbit_ptr[oi + 1] = pos

    # cross-row dot-product bounds: sum_s N[j1,j2,s] N[j3,j4,s] <= d_a d_b
    # for one index a of the first row and one b of the second, triggered
    # when the later of the two rows completes.  Dense large-dimension
    # blocks (e.g. four dim-11 elements) are barely constrained by their
    # own knapsacks; these pairwise bounds are what cuts them down.
    pairs = []
    if use_dims and prune_bounds:
        row_list = [(j, k) for j in range(1, m) for k in range(1, m)]
        comp = {}
        for j, k in row_list:
            comp[(j, k)] = max(order_index[orbit_of[(j, k, s)]] for s in range(1, m))
        for a in range(len(row_list)):
            j1, j2 = row_list[a]
            for b in range(a, len(row_list)):
                j3, j4 = row_list[b]
                bound = min(
                    d[j1] * d[j3], d[j1] * d[j4], d[j2] * d[j3], d[j2] * d[j4]
                )
                # skip pairs whose bound cannot bite (Cauchy-Schwarz cap)
                cap_dot = math.isqrt(
                    int(min(d[j1], d[j2]) ** 2) * int(min(d[j3], d[j4]) ** 2)
                )
                if bound >= cap_dot:
                    continue
                trig = max(comp[(j1, j2)], comp[(j3, j4)])
                pairs.append((trig, j1 * m * m + j2 * m, j3 * m * m + j4 * m, bound))
    pairs.sort()
    pair_by_orbit_ptr = np.zeros(norb + 1, dtype=np.int64)
    pair_data = np.array(
        [[b1, b2, bd] for _, b1, b2, bd in pairs], dtype=np.int64
    ).reshape(-1, 3)
    pos = 0
    for oi in range(norb):
        while pos < len(pairs) and pairs[pos][0] <= oi:
            pos += 1
        pair_by_orbit_ptr[oi + 1] = pos

    # static symmetry breaking: involution-fixed basis elements of equal
    # dimension are interchangeable, so any solution can be relabeled to
    # make the unary chain N[q,a,a] (a running over the class) weakly
    # decreasing; imposing that during search keeps one representative
    # per relabeling orbit and kills the duplicated subtrees up front.
    prec = []  # (later_orbit, earlier_orbit): require val[later] <= val[earlier]
    classes = {}
    for j in range(1, m):
        classes.setdefault(int(d[j]), []).append(j)
    for cls in classes.values():
        fixed = [a for a in cls if dual[a] == a]
        if len(fixed) < 2:
            continue
        outside = [q for q in range(1, m) if q not in cls]
        q = outside[0] if outside else None
        for a, b in zip(fixed, fixed[1:]):
            ca = (q, a, a) if q is not None else (a, a, a)
            cb = (q, b, b) if q is not None else (b, b, b)
            oa, ob = order_index[orbit_of[ca]], order_index[orbit_of[cb]]
            if oa < ob:
                prec.append((ob, oa))
    prec.sort()
    prec_ptr = np.zeros(norb + 1, dtype=np.int64)
    prec_data = np.array([e for _, e in prec], dtype=np.int64)
    pos = 0
    for oi in range(norb):
        while pos < len(prec) and prec[pos][0] <= oi:
            pos += 1
        prec_ptr[oi + 1] = pos

    init_tensor = np.zeros(m * m * m, dtype=np.int64)
    for k in range(m):
        init_tensor[0 * m * m + k * m + k] = 1
    for j in range(1, m):
        init_tensor[j * m * m + 0 * m + j] = 1
        init_tensor[j * m * m + dual[j] * m + 0] = 1

    return {
        "m": m,
        "d": d,
        "norb": norb,
        "orb_ptr": orb_ptr,
        "cell_row": cell_row,
        "cell_wt": cell_wt,
        "cell_idx": cell_idx,
        "caps": caps,
        "row_target": row_target,
        "row_sq_bound": row_sq_bound,
        "row_cnt": row_cnt,
        "row_capacity": row_capacity,
        "eq_ptr": eq_by_orbit_ptr,
        "eq_data": eq_data,
        "pair_ptr": pair_by_orbit_ptr,
        "pair_data": pair_data,
        "prec_ptr": prec_ptr,
        "prec_data": prec_data,
        "init_tensor": init_tensor,
        "use_dims": use_dims,
    }


def _greedy_assoc_order(m, orbits, orbit_of):
    """Static orbit order maximizing early associativity completion."""
    eq_orbits = []
    for i in range(1, m):
        for j in range(1, m):
            for k in range(1, m):
                for t in range(m):
                    os_ = set()
                    for s in range(m):
                        for cell in ((i, j, s), (s, k, t), (j, k, s), (i, s, t)):
                            if min(cell) >= 1:
                                os_.add(orbit_of[cell])
                    eq_orbits.append(os_)
    chosen = []
    chosen_set = set()
    remaining = set(range(len(orbits)))
    while remaining:
        best, best_score = None, (-1, -1)
        for o in sorted(remaining):
            completed = sum(
                1 for os_ in eq_orbits if o in os_ and os_ <= chosen_set | {o}
            )
            nearly = sum(1 for os_ in eq_orbits if o in os_ and len(os_ - chosen_set) <= 2)
            score = (completed, nearly)
            if score > best_score:
                best, best_score = o, score
        chosen.append(best)
        chosen_set.add(best)
        remaining.discard(best)
    return chosen


# ---------------------------------------------------------------------------
# DFS kernel


@njit(cache=True)
def _dfs_kernel(
    m,
    norb,
    orb_ptr,
    cell_row,
    cell_wt,
    cell_idx,
    caps,
    row_target,
    row_sq_bound,
    row_cnt0,
    row_capacity0,
    eq_ptr,
    eq_data,
    pair_ptr,
    pair_data,
    prec_ptr,
    prec_data,
    init_tensor,
    use_dims,
    node_budget,
    max_results,
    pin_first_value,
):  # pragma: no cover - compiled; exercised through the wrappers
    """Iterative DFS over orbit values.

    Returns (status, nodes, knapsack prunes, associativity prunes,
    solutions as a flat 2d array).  status: 0 done, 1 node budget
    exhausted, 2 result cap hit.  ``pin_first_value`` >= 0 restricts
    orbit 0 to that single value (parallel split unit); -1 disables.

    Invariant: orbits 0..o-1 are applied, orbit o holds the candidate
    value v[o] not yet applied.
    """
    ncells = m * m * m
    N = init_tensor.copy()
    R = row_target.copy()
    CAPR = row_capacity0.copy()
    CNT = row_cnt0.copy()
    SS = np.zeros(len(row_target), dtype=np.int64)

    val = np.full(norb, -1, dtype=np.int64)
    v = np.zeros(norb, dtype=np.int64)
    chunk = 256
    results = np.empty((chunk, ncells), dtype=np.int64)
    nfound = 0
    nodes = 0
    prune_knap = 0
    prune_assoc = 0
    status = 0

    if pin_first_value >= 0:
        v[0] = pin_first_value

    o = 0
    while True:
        if nodes >= node_budget:
            status = 1
            break
        limit = caps[o]
        if o == 0 and pin_first_value >= 0:
            limit = pin_first_value
        if v[o] > limit:
            # depth exhausted: pop to previous orbit
            o -= 1
            if o < 0:
                break
            vv = val[o]
            for t in range(orb_ptr[o], orb_ptr[o + 1]):
                r = cell_row[t]
                w = cell_wt[t]
                N[cell_idx[t]] = 0
                R[r] += vv * w
                CAPR[r] += caps[o] * w
                CNT[r] += 1
                SS[r] -= vv * vv
            val[o] = -1
            v[o] = vv + 1
            continue

        vv = v[o]
        nodes += 1
        skip = False
        for e in range(prec_ptr[o], prec_ptr[o + 1]):
            if vv > val[prec_data[e]]:
                skip = True
                break
        if skip:
            # larger values only grow; exhaust this depth
            v[o] = caps[o] + 1
            continue
        for t in range(orb_ptr[o], orb_ptr[o + 1]):
            r = cell_row[t]
            w = cell_wt[t]
            N[cell_idx[t]] = vv
            R[r] -= vv * w
            CAPR[r] -= caps[o] * w
            CNT[r] -= 1
            SS[r] += vv * vv
        ok = True
        if use_dims == 1:
            for t in range(orb_ptr[o], orb_ptr[o + 1]):
                r = cell_row[t]
                if (
                    R[r] < 0
                    or R[r] > CAPR[r]
                    or SS[r] > row_sq_bound[r]
                    or (CNT[r] == 0 and R[r] != 0)
                ):
                    ok = False
                    break
            if not ok:
                prune_knap += 1
        if ok:
            for e in range(pair_ptr[o], pair_ptr[o + 1]):
                b1 = pair_data[e, 0]
                b2 = pair_data[e, 1]
                dot = 0
                for s in range(m):
                    dot += N[b1 + s] * N[b2 + s]
                if dot > pair_data[e, 2]:
                    ok = False
                    prune_knap += 1
                    break
        if ok:
            for e in range(eq_ptr[o], eq_ptr[o + 1]):
                i_ = eq_data[e, 0]
                j_ = eq_data[e, 1]
                k_ = eq_data[e, 2]
                t_ = eq_data[e, 3]
                lhs = 0
                rhs = 0
                for s in range(m):
                    lhs += N[i_ * m * m + j_ * m + s] * N[s * m * m + k_ * m + t_]
                    rhs += N[j_ * m * m + k_ * m + s] * N[i_ * m * m + s * m + t_]
                if lhs != rhs:
                    ok = False
                    prune_assoc += 1
                    break

        if ok and o == norb - 1:
            if nfound == results.shape[0]:
                if nfound >= max_results:
                    status = 2
                    break
                grown = np.empty((results.shape[0] * 2, ncells), dtype=np.int64)
                grown[: results.shape[0]] = results
                results = grown
            results[nfound] = N
            nfound += 1
            ok = False  # treat like a dead end: undo and advance

        if not ok:
            for t in range(orb_ptr[o], orb_ptr[o + 1]):
                r = cell_row[t]
                w = cell_wt[t]
                N[cell_idx[t]] = 0
                R[r] += vv * w
                CAPR[r] += caps[o] * w
                CNT[r] += 1
                SS[r] -= vv * vv
            v[o] = vv + 1
            continue

        val[o] = vv
        o += 1
        v[o] = 0

    return status, nodes, prune_knap, prune_assoc, results[:nfound]


# ---------------------------------------------------------------------------
# wrappers


@dataclass
class SearchStats:
    nodes: int = 0
    prune_knapsack: int = 0
    prune_associativity: int = 0
    raw_solutions: int = 0
    wall_time: float = 0.0
    complete: bool = True

    def merge(self, other: "SearchStats"):
        self.nodes += other.nodes
        self.prune_knapsack += other.prune_knapsack
        self.prune_associativity += other.prune_associativity
        self.raw_solutions += other.raw_solutions
        self.wall_time += other.wall_time
        self.complete = self.complete and other.complete


def _dedup_group(dims, dual):
    """Dimension-preserving permutations fixing 0 and commuting with dual."""
    m = len(dual)
    classes = {}
    for j in range(1, m):
        classes.setdefault(dims[j], []).append(j)
    perms = []
    pools = [itertools.permutations(v) for v in classes.values()]
    for combo in itertools.product(*pools):
        perm = list(range(m))
        for orig, new in zip(classes.values(), combo):
            for a, b in zip(orig, new):
                perm[a] = b
        if all(perm[dual[j]] == dual[perm[j]] for j in range(m)):
            perms.append(tuple(perm))
    return perms


def _canonical_key(tensor_flat, m, group):
    N = tensor_flat.reshape(m, m, m)
    best = None
    for perm in group:
        p = np.asarray(perm)
        inv = np.empty(m, dtype=np.int64)
        inv[p] = np.arange(m)
        cand = N[inv][:, inv][:, :, inv].tobytes()
        if best is None or cand < best:
            best = cand
    return best


def enumerate_fusion_rings(
    sig: TypeSignature,
    involution: Sequence[int],
    constraints: Optional[SearchConstraints] = None,
    node_budget: int = 10**9,
    max_results: int = 100_000,
    stats: Optional[SearchStats] = None,
    prune_bounds: bool = True,
) -> list:
    """All fusion rings with the given integral type and involution, up to
    isomorphism.

    Raises SearchTimeout (with the partial list attached) if the node
    budget is exhausted.  ``prune_bounds=False`` disables the
    coefficient-bound pruning (admissibility checks only; slower).
    """
    if not sig.integral:
        raise ValueError("tensor enumeration requires an integral type")
    dims = list(sig.dims)
    dual = list(involution)
    max_mult = constraints.max_multiplicity if constraints else None
    prob = _build_problem(
        dims, dual, max_mult=max_mult, use_dims=True, prune_bounds=prune_bounds
    )
    t0 = time.time()
    if prob["norb"] == 0:  # rank 1: only the unit-only ring, no free cells
        fd = FusionData(prob["init_tensor"].reshape(1, 1, 1).copy(), [0], "exact")
        if stats is not None:
            stats.merge(SearchStats(0, 0, 0, 1, time.time() - t0, True))
        return [fd] if rings.verify_axioms(fd).all_ok else []
    status, nodes, pk, pa, found = _dfs_kernel(
        prob["m"],
        prob["norb"],
        prob["orb_ptr"],
        prob["cell_row"],
        prob["cell_wt"],
        prob["cell_idx"],
        prob["caps"],
        prob["row_target"],
        prob["row_sq_bound"],
        prob["row_cnt"],
        prob["row_capacity"],
        prob["eq_ptr"],
        prob["eq_data"],
        prob["pair_ptr"],
        prob["pair_data"],
        prob["prec_ptr"],
        prob["prec_data"],
        prob["init_tensor"],
        1,
        node_budget,
        max_results,
        -1,
    )
    st = SearchStats(nodes, pk, pa, len(found), time.time() - t0, status == 0)
    if stats is not None:
        stats.merge(st)
    rings_out = _collect(found, dims, dual, sig)
    if status == 1:
        raise SearchTimeout(f"node budget {node_budget} exhausted", partial=rings_out)
    if status == 2:
        raise SearchTimeout(f"result buffer {max_results} exhausted", partial=rings_out)
    return rings_out


def _collect(found, dims, dual, sig, label_prefix="found") -> list:
    """Canonical dedup + isomorphism confirmation + final axiom check."""
    m = len(dual)
    group = _dedup_group(dims, dual)
    by_key = {}
    for flat in found:
        key = _canonical_key(np.asarray(flat), m, group)
        if key not in by_key:
            by_key[key] = np.asarray(flat).reshape(m, m, m)
    out = []
    for i, (key, N) in enumerate(sorted(by_key.items())):
        fd = FusionData(N.copy(), np.asarray(dual), "exact", label=f"{label_prefix}-{i + 1}")
        assert rings.verify_axioms(fd).all_ok, "search emitted an invalid ring"
        if any(are_isomorphic(fd, other) is not None for other in out):
            continue
        out.append(fd)
    return out


def naive_enumerate_fusion_rings(sig: TypeSignature, involution: Sequence[int]) -> list:
    """Brute-force oracle for small instances.

    Rows are enumerated independently as solutions of the dimension
    equation with the trivial cap N[j,k,s] <= d_j d_k / d_s, combined
    row by row with Frobenius reciprocity used only as a consistency
    filter between already-placed rows, and all axioms re-verified at
    the leaves.  No coefficient bounds, no orbit compression, no partial
    associativity -- deliberately none of the machinery the fast search
    relies on.  Only viable for tiny ranks.
    """
    dims = list(sig.dims)
    dual = list(involution)
    m = len(dims)

    def row_solutions(j, k):
        target = dims[j] * dims[k] - (1 if dual[j] == k else 0)
        sols = []

        def rec(s, remaining, acc):
            if s == m:
                if remaining == 0:
                    sols.append(tuple(acc))
                return
            cap = (dims[j] * dims[k]) // dims[s]
            for v in range(min(cap, remaining // dims[s]) + 1):
                rec(s + 1, remaining - v * dims[s], acc + [v])

        rec(1, target, [])
        return sols

    rows = [(j, k) for j in range(1, m) for k in range(1, m)]
    per_row = [row_solutions(j, k) for j, k in rows]
    N = np.zeros((m, m, m), dtype=np.int64)
    for k in range(m):
        N[0, k, k] = 1
    for j in range(1, m):
        N[j, 0, j] = 1
        N[j, dual[j], 0] = 1

    out = []

    def consistent(upto):
        """Reciprocity between every pair of placed rows (rows 0..upto)."""
        placed = {rows[t] for t in range(upto + 1)}
        j, k = rows[upto]
        for s in range(1, m):
            v = N[j, k, s]
            for a, b, c in ((dual[k], dual[j], dual[s]), (dual[j], s, k)):
                if (a, b) in placed and N[a, b, c] != v:
                    return False
        return True

    def rec(t):
        if t == len(rows):
            fd = FusionData(N.copy(), np.asarray(dual), "exact")
            if rings.verify_axioms(fd).all_ok:
                if np.max(np.abs(rings.fp_dimensions(fd) - np.asarray(dims, float))) < 1e-6:
                    out.append(fd)
            return
        j, k = rows[t]
        for vals in per_row[t]:
            N[j, k, 1:] = vals
            if consistent(t):
                rec(t + 1)
        N[j, k, 1:] = 0

    rec(0)
    dedup = []
    for fd in out:
        if not any(are_isomorphic(fd, g) is not None for g in dedup):
            dedup.append(fd)
    return dedup


# ---------------------------------------------------------------------------
# the rank-5 three-self-adjoint family


RANK5_TEMPLATE_DUAL = (0, 2, 1, 3, 4)


def rank5_three_selfadjoint_family(
    max_multiplicity: int,
    node_budget: int = 10**10,
    stats: Optional[SearchStats] = None,
) -> list:
    """Fusion rings of rank 5 whose duality fixes exactly indices 1, 4, 5.

    Frobenius reciprocity reduces the tensor to 16 free parameters;
    enumeration caps every structure constant at ``max_multiplicity``
    and imposes associativity only (the dimensions are not integral in
    general, so no dimension knapsack applies).  Results are up to
    equivalence.
    """
    dual = list(RANK5_TEMPLATE_DUAL)
    prob = _build_problem(None, dual, max_mult=max_multiplicity, use_dims=False)
    t0 = time.time()
    status, nodes, pk, pa, found = _dfs_kernel(
        prob["m"],
        prob["norb"],
        prob["orb_ptr"],
        prob["cell_row"],
        prob["cell_wt"],
        prob["cell_idx"],
        prob["caps"],
        prob["row_target"],
        prob["row_sq_bound"],
        prob["row_cnt"],
        prob["row_capacity"],
        prob["eq_ptr"],
        prob["eq_data"],
        prob["pair_ptr"],
        prob["pair_data"],
        prob["prec_ptr"],
        prob["prec_data"],
        prob["init_tensor"],
        0,
        node_budget,
        200_000,
        -1,
    )
    st = SearchStats(nodes, pk, pa, len(found), time.time() - t0, status == 0)
    if stats is not None:
        stats.merge(st)
    m = 5
    # dims are unknown; the admissible relabelings are exactly the
    # permutations preserving the duality pattern: swap 2<->3 and/or 4<->5
    group = [(0, 1, 2, 3, 4), (0, 2, 1, 3, 4), (0, 1, 2, 4, 3), (0, 2, 1, 4, 3)]
    by_key = {}
    for flat in found:
        key = _canonical_key(np.asarray(flat), m, group)
        if key not in by_key:
            by_key[key] = np.asarray(flat).reshape(m, m, m)
    out = []
    for i, (key, N) in enumerate(sorted(by_key.items())):
        fd = FusionData(N.copy(), np.asarray(dual), "exact", label=f"r5sa-{i + 1}")
        assert rings.verify_axioms(fd).all_ok
        out.append(fd)
    if status != 0:
        raise SearchTimeout(f"budget exhausted ({status})", partial=out)
    return out


# ---------------------------------------------------------------------------
# classification driver


@dataclass
class TypeResult:
    signature: TypeSignature
    involutions_tried: int
    rings: list
    simple: list
    schur_pass: list
    stats: SearchStats


@dataclass
class ClassificationReport:
    constraints: SearchConstraints
    filters: dict
    types: list  # list[TypeResult]
    wall_time: float
    complete: bool

    @property
    def all_rings(self) -> list:
        return [fd for tr in self.types for fd in tr.rings]

    @property
    def simple_rings(self) -> list:
        return [fd for tr in self.types for fd in tr.simple]

    @property
    def schur_rings(self) -> list:
        return [fd for tr in self.types for fd in tr.schur_pass]

    def to_dict(self) -> dict:
        return {
            "constraints": {
                "fpdim": self.constraints.fpdim,
                "rank": self.constraints.rank,
                "require_divisibility": self.constraints.require_divisibility,
                "require_perfect": self.constraints.require_perfect,
                "min_d2": self.constraints.min_d2,
                "require_gcd_one": self.constraints.require_gcd_one,
                "exclude_prime_power_products": self.constraints.exclude_prime_power_products,
                "growth_cap": self.constraints.growth_cap,
                "max_multiplicity": self.constraints.max_multiplicity,
            },
            "filters": self.filters,
            "complete": self.complete,
            "wall_time": self.wall_time,
            "types": [
                {
                    "type": str(tr.signature),
                    "fpdim": tr.signature.fpdim,
                    "rank": tr.signature.rank,
                    "involutions": tr.involutions_tried,
                    "rings_found": len(tr.rings),
                    "simple": len(tr.simple),
                    "schur_pass": len(tr.schur_pass),
                    "nodes": tr.stats.nodes,
                    "prune_knapsack": tr.stats.prune_knapsack,
                    "prune_associativity": tr.stats.prune_associativity,
                    "complete": tr.stats.complete,
                }
                for tr in self.types
            ],
        }


def _search_task(args):
    """One (type, involution) unit of work; suitable for a worker pool."""
    sig, inv, constraints, node_budget = args
    st = SearchStats()
    try:
        found = enumerate_fusion_rings(sig, inv, constraints, node_budget, stats=st)
    except SearchTimeout as exc:
        found = list(exc.partial or [])
        st.complete = False
    return found, st


def _checkpoint_key(sig, inv) -> str:
    return f"{sig}|{','.join(str(i + 1) for i in inv)}"


def classify(
    constraints: SearchConstraints,
    filters: Optional[dict] = None,
    node_budget: int = 10**9,
    wall_budget: Optional[float] = None,
    threads: int = 1,
    checkpoint: Optional[str] = None,
) -> ClassificationReport:
    """Run types -> involutions -> tensors -> predicates.

    ``filters`` may contain ``simple: True`` and/or ``schur: True``; the
    report keeps per-type counts either way.  On budget exhaustion the
    report is returned with ``complete=False`` instead of raising.

    ``threads > 1`` spreads the (type, involution) units over a process
    pool; results are merged in the deterministic task order, so the
    report does not depend on scheduling.  ``checkpoint`` names a JSONL
    file recording each completed unit with its found rings; rerunning
    with the same path resumes, reusing stored results.
    """
    filters = filters or {}
    t0 = time.time()

    done = {}
    if checkpoint is not None and os.path.exists(checkpoint):
        from . import corpus as corpus_mod

        with open(checkpoint) as f:
            for line in f:
                rec = json.loads(line)
                done[rec["key"]] = [
                    corpus_mod.parse_fusion_ring(t) for t in rec["rings"]
                ]

    tasks = []  # (sig_index, inv, key)
    sigs = enumerate_types(constraints)
    for si, sig in enumerate(sigs):
        for inv in enumerate_involutions(sig):
            tasks.append((si, inv, _checkpoint_key(sig, inv)))

    outcomes = {}
    pending = [(si, inv, key) for si, inv, key in tasks if key not in done]
    if threads > 1 and len(pending) > 1:
        import concurrent.futures as cf

        with cf.ProcessPoolExecutor(max_workers=threads) as pool:
            futs = {
                pool.submit(_search_task, (sigs[si], inv, constraints, node_budget)): key
                for si, inv, key in pending
            }
            for fut in cf.as_completed(futs):
                outcomes[futs[fut]] = fut.result()
    else:
        for si, inv, key in pending:
            if wall_budget is not None and time.time() - t0 > wall_budget:
                st = SearchStats()
                st.complete = False
                outcomes[key] = ([], st)
                continue
            outcomes[key] = _search_task((sigs[si], inv, constraints, node_budget))

    if checkpoint is not None:
        from . import corpus as corpus_mod

        with open(checkpoint, "a") as f:
            for si, inv, key in tasks:
                if key in outcomes and outcomes[key][1].complete:
                    f.write(json.dumps({
                        "key": key,
                        "rings": [corpus_mod.serialize_fusion_ring(fd)
                                  for fd in outcomes[key][0]],
                    }) + "\n")

    results = []
    complete = True
    for si, sig in enumerate(sigs):
        st = SearchStats()
        rings_found = []
        ninv = 0
        for tsi, inv, key in tasks:
            if tsi != si:
                continue
            ninv += 1
            if key in done:
                rings_found.extend(done[key])
            else:
                found, tst = outcomes[key]
                rings_found.extend(found)
                st.merge(tst)
        for i, fd in enumerate(rings_found):
            fd.label = f"{sig}-{i + 1}"
        simple = [fd for fd in rings_found if rings.is_simple(fd)]
        schur = []
        for fd in rings_found:
            if rings.is_commutative(fd):
                if criteria.schur_commutative(character_table(fd)).holds:
                    schur.append(fd)
        results.append(TypeResult(sig, ninv, rings_found, simple, schur, st))
        complete = complete and st.complete
    return ClassificationReport(
        constraints, filters, results, time.time() - t0, complete
    )
