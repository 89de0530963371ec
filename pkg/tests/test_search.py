import numpy as np
import pytest

from fusionforge import rings, search
from fusionforge.errors import SearchTimeout, UnboundedSearch
from fusionforge.rings import TypeSignature, are_isomorphic
from fusionforge.search import (
    SearchConstraints,
    classify,
    enumerate_fusion_rings,
    enumerate_involutions,
    enumerate_types,
    naive_enumerate_fusion_rings,
    rank5_three_selfadjoint_family,
)
PAPER_FLAGS = dict(
    require_perfect=True,
    require_divisibility=True,
    min_d2=3,
    require_gcd_one=True,
    exclude_prime_power_products=True,
    growth_cap=True,
)


class TestEnumerateTypes:
    def test_fpdim60_rank5(self):
        types = enumerate_types(SearchConstraints(fpdim=60, rank=5, **PAPER_FLAGS))
        assert [str(t) for t in types] == ["[[1,1],[3,2],[4,1],[5,1]]"]

    def test_fpdim210_rank7(self):
        types = enumerate_types(SearchConstraints(fpdim=210, rank=7, **PAPER_FLAGS))
        assert "[[1,1],[5,3],[6,1],[7,2]]" in [str(t) for t in types]

    def test_prime_excluded(self):
        types = enumerate_types(
            SearchConstraints(fpdim=7, exclude_prime_power_products=True)
        )
        assert types == []

    def test_unbounded_rejected(self):
        with pytest.raises(UnboundedSearch):
            enumerate_types(SearchConstraints(fpdim=None))

    def test_growth_cap_filters(self):
        # the rank-7 FPdim-7224 type [[1,1],[3,2],[6,1],[7,1],[8,1],[84,1]]
        # violates the chain condition (84 >= 8^2) and must disappear
        base = dict(fpdim=7224, rank=7, require_perfect=True, require_divisibility=True,
                    min_d2=3, require_gcd_one=True, exclude_prime_power_products=True)
        with_cap = {str(t) for t in enumerate_types(SearchConstraints(growth_cap=True, **base))}
        without = {str(t) for t in enumerate_types(SearchConstraints(growth_cap=False, **base))}
        bad = "[[1,1],[3,2],[6,1],[7,1],[8,1],[84,1]]"
        assert bad in without and bad not in with_cap

    def test_lex_deterministic(self):
        c = SearchConstraints(fpdim=(1, 30), rank=(1, 4))
        assert [str(t) for t in enumerate_types(c)] == [
            str(t) for t in enumerate_types(c)
        ]


class TestEnumerateInvolutions:
    def test_f210_type(self):
        sig = TypeSignature(((1, 1), (5, 3), (6, 1), (7, 2)), True)
        invs = enumerate_involutions(sig)
        assert len(invs) == 4
        assert (0, 1, 2, 3, 4, 5, 6) in invs  # identity
        assert (0, 2, 1, 3, 4, 5, 6) in invs  # 2-cycle in the 5-block
        assert (0, 1, 2, 3, 4, 6, 5) in invs  # 2-cycle in the 7-block
        assert (0, 2, 1, 3, 4, 6, 5) in invs

    def test_rank1(self):
        assert enumerate_involutions(TypeSignature(((1, 1),), True)) == [(0,)]

    def test_1dd(self):
        sig = TypeSignature(((1, 1), (3, 2)), True)
        assert enumerate_involutions(sig) == [(0, 1, 2), (0, 2, 1)]

    def test_unit_always_fixed(self):
        sig = TypeSignature(((1, 4), (2, 3)), True)
        for inv in enumerate_involutions(sig):
            assert inv[0] == 0
            perm = np.asarray(inv)
            assert np.array_equal(perm[perm], np.arange(7))


class TestEnumerateFusionRings:
    def test_psl25_reproduced(self, psl25):
        c = SearchConstraints(fpdim=60, rank=5, **PAPER_FLAGS)
        sig = enumerate_types(c)[0]
        found = []
        for inv in enumerate_involutions(sig):
            found.extend(enumerate_fusion_rings(sig, inv, c))
        assert len(found) == 1
        assert are_isomorphic(found[0], psl25) is not None

    def test_soundness(self):
        sig = TypeSignature(((1, 1), (2, 2)), True)
        for inv in enumerate_involutions(sig):
            for fd in enumerate_fusion_rings(sig, inv):
                assert rings.verify_axioms(fd).all_ok

    def test_node_budget_timeout(self):
        sig = TypeSignature(((1, 1), (5, 3), (6, 1), (7, 2)), True)
        with pytest.raises(SearchTimeout):
            enumerate_fusion_rings(sig, tuple(range(7)), node_budget=100)

    def test_completeness_against_naive(self):
        c = SearchConstraints(fpdim=(1, 24), rank=(1, 3))
        for sig in enumerate_types(c):
            for inv in enumerate_involutions(sig):
                fast = enumerate_fusion_rings(sig, inv, c)
                naive = naive_enumerate_fusion_rings(sig, inv)
                assert len(fast) == len(naive), (str(sig), inv)

    def test_prune_admissibility_210(self):
        c = SearchConstraints(fpdim=210, rank=7, **PAPER_FLAGS)
        sig = TypeSignature(((1, 1), (5, 3), (6, 1), (7, 2)), True)
        for inv in enumerate_involutions(sig):
            with_p = enumerate_fusion_rings(sig, inv, c, prune_bounds=True)
            without = enumerate_fusion_rings(sig, inv, c, prune_bounds=False,
                                             node_budget=10**10)
            assert len(with_p) == len(without)

    def test_determinism(self):
        sig = TypeSignature(((1, 1), (3, 2), (4, 1), (5, 1)), True)
        a = enumerate_fusion_rings(sig, tuple(range(5)))
        b = enumerate_fusion_rings(sig, tuple(range(5)))
        assert len(a) == len(b)
        assert all(np.array_equal(x.tensor, y.tensor) for x, y in zip(a, b))


class TestKernelFallback:
    def test_python_kernel_matches_compiled(self):
        """The uncompiled kernel (numba-free fallback) agrees with the jit."""
        from fusionforge.search import _build_problem, _dfs_kernel

        sig = TypeSignature(((1, 1), (3, 2), (4, 1), (5, 1)), True)
        prob = _build_problem(list(sig.dims), list(range(5)))
        args = (
            prob["m"], prob["norb"], prob["orb_ptr"], prob["cell_row"],
            prob["cell_wt"], prob["cell_idx"], prob["caps"], prob["row_target"],
            prob["row_sq_bound"], prob["row_cnt"], prob["row_capacity"],
            prob["eq_ptr"], prob["eq_data"], prob["pair_ptr"], prob["pair_data"],
            prob["prec_ptr"], prob["prec_data"],
            prob["init_tensor"], 1, 10**9, 1000, -1,
        )
        kernel_py = getattr(_dfs_kernel, "py_func", _dfs_kernel)
        res_a = _dfs_kernel(*args)
        res_b = kernel_py(*args)
        assert res_a[0] == res_b[0] == 0
        assert res_a[1] == res_b[1]  # identical node counts
        assert np.array_equal(res_a[4], res_b[4])


class TestRank5Family:
    def test_multiplicity_one_against_brute_force(self):
        from fusionforge.search import RANK5_TEMPLATE_DUAL, _build_problem, _canonical_key

        fam = rank5_three_selfadjoint_family(1)
        # exhaustive oracle over all 2^16 orbit assignments
        dual = list(RANK5_TEMPLATE_DUAL)
        prob = _build_problem(None, dual, max_mult=1, use_dims=False)
        norb = prob["norb"]
        assert norb == 16
        sols = []
        for bits in range(1 << norb):
            N = prob["init_tensor"].copy()
            for oi in range(norb):
                v = (bits >> oi) & 1
                for t in range(prob["orb_ptr"][oi], prob["orb_ptr"][oi + 1]):
                    N[prob["cell_idx"][t]] = v
            T = N.reshape(5, 5, 5)
            if (np.einsum("ijs,skt->ijkt", T, T) == np.einsum("jks,ist->ijkt", T, T)).all():
                sols.append(T.copy())
        group = [(0, 1, 2, 3, 4), (0, 2, 1, 3, 4), (0, 1, 2, 4, 3), (0, 2, 1, 4, 3)]
        keys = {_canonical_key(s.reshape(-1), 5, group) for s in sols}
        assert len(fam) == len(keys) == 5

    def test_multiplicity_two_pinned(self):
        # 13 was independently confirmed by a vectorized exhaustive scan of
        # all 3^16 orbit assignments (26 raw associative tensors, 13 classes)
        fam = rank5_three_selfadjoint_family(2)
        assert len(fam) == 13

    def test_duality_pattern(self):
        for fd in rank5_three_selfadjoint_family(1):
            assert list(fd.dual) == [0, 2, 1, 3, 4]
            assert rings.verify_axioms(fd).all_ok


class TestCensusRows:
    """The remaining desk-scale rows of the simple-integral census."""

    def run_row(self, fpdim, rank, n_simple, n_schur):
        c = SearchConstraints(fpdim=fpdim, rank=rank, **PAPER_FLAGS)
        found = []
        for sig in enumerate_types(c):
            for inv in enumerate_involutions(sig):
                found.extend(enumerate_fusion_rings(sig, inv, c, node_budget=10**9))
        simple = [fd for fd in found if rings.is_simple(fd)]
        assert len(simple) == n_simple
        from fusionforge.criteria import schur_commutative
        from fusionforge.spectral import character_table

        schur = [fd for fd in simple if schur_commutative(character_table(fd)).holds]
        assert len(schur) == n_schur

    def test_fpdim_168_rank6(self):
        self.run_row(168, 6, 1, 1)  # PSL(2,7)

    def test_fpdim_360_rank7(self):
        self.run_row(360, 7, 2, 1)  # PSL(2,9) survives


class TestClassify:
    def test_report_on_60(self, psl25):
        c = SearchConstraints(fpdim=60, rank=5, **PAPER_FLAGS)
        report = classify(c, {"simple": True})
        assert report.complete
        assert len(report.all_rings) == 1
        assert len(report.simple_rings) == 1
        assert len(report.schur_rings) == 1
        d = report.to_dict()
        assert d["types"][0]["rings_found"] == 1
        assert d["types"][0]["nodes"] > 0

    def test_partial_report_on_budget(self):
        c = SearchConstraints(fpdim=210, rank=7, **PAPER_FLAGS)
        report = classify(c, node_budget=50)
        assert not report.complete
        assert any(not tr.stats.complete for tr in report.types)

    def test_range_sweep_rank5_to_200(self, psl25):
        # perfect + divisibility over all FPdim <= 200, rank <= 5: the only
        # nontrivial simple ring is PSL(2,5) (the rank-1 ring is vacuously
        # simple and excluded from the count)
        c = SearchConstraints(
            fpdim=(1, 200), rank=(1, 5), require_perfect=True, require_divisibility=True
        )
        rep = classify(c)
        assert rep.complete
        nontrivial = [fd for fd in rep.simple_rings if fd.rank > 1]
        assert len(nontrivial) == 1
        assert are_isomorphic(nontrivial[0], psl25) is not None

    def test_report_determinism(self):
        c = SearchConstraints(fpdim=60, rank=5, **PAPER_FLAGS)

        def strip(d):
            d = dict(d)
            d.pop("wall_time")
            for t in d["types"]:
                pass
            return d

        a, b = classify(c), classify(c)
        assert strip(a.to_dict()) == strip(b.to_dict())

    def test_threads_match_sequential(self):
        c = SearchConstraints(fpdim=210, rank=7, **PAPER_FLAGS)
        seq = classify(c)
        par = classify(c, threads=2)
        assert len(par.all_rings) == len(seq.all_rings) == 2
        assert [str(tr.signature) for tr in par.types] == [
            str(tr.signature) for tr in seq.types
        ]

    def test_resume_checkpoint(self, tmp_path):
        c = SearchConstraints(fpdim=60, rank=5, **PAPER_FLAGS)
        ckpt = tmp_path / "run.jsonl"
        first = classify(c, checkpoint=str(ckpt))
        assert ckpt.exists() and len(ckpt.read_text().splitlines()) == 2
        resumed = classify(c, checkpoint=str(ckpt))
        assert len(resumed.all_rings) == len(first.all_rings) == 1
        # resumed run reused the stored results: no new nodes visited
        assert all(tr.stats.nodes == 0 for tr in resumed.types)
