import numpy as np
import pytest

from fusionforge import corpus, rings
from fusionforge.criteria import (
    obstruction_report,
    schur_commutative,
    schur_noncommutative_falsify,
    schur_triple_sum,
)
from fusionforge.rings import cyclic_group_ring, global_fpdim
from fusionforge.spectral import character_table


def brute_triple_sum(lam, j1, j2, j3):
    """Independent evaluation straight off the table."""
    return sum(
        lam[i, j1] * lam[i, j2] * lam[i, j3] / lam[i, 0] for i in range(lam.shape[0])
    )


class TestTripleSum:
    def test_z3_brute_force_values(self):
        # oracle: the 3x3 DFT table gives sum_i w^{3i} = 3 for the triple
        # (2,2,2) and sum_i w^{4i} = 0 for (2,2,3)
        ct = character_table(cyclic_group_ring(3))
        v222 = schur_triple_sum(ct, 1, 1, 1)
        v223 = schur_triple_sum(ct, 1, 1, 2)
        assert v222 == pytest.approx(brute_triple_sum(ct.lam, 1, 1, 1), abs=1e-10)
        assert abs(v222 - 3.0) < 1e-9
        assert abs(v223) < 1e-9

    def test_unit_triple_is_fpdim(self, corpus_entries):
        for e in corpus_entries:
            if not rings.is_commutative(e.fd):
                continue
            ct = character_table(e.fd)
            v = schur_triple_sum(ct, 0, 0, 0)
            assert v.real == pytest.approx(global_fpdim(e.fd), rel=1e-9), e.id

    def test_ruled_out_210_value(self, ruled210):
        ct = character_table(ruled210)
        rep = schur_commutative(ct)
        assert rep.worst_value == pytest.approx(-65.0 / 42.0, abs=1e-8)

    def test_symmetry_under_permutations(self, f210):
        ct = character_table(f210)
        rng = np.random.default_rng(1)
        for _ in range(20):
            a, b, c = rng.integers(0, ct.rank, size=3)
            vals = {
                schur_triple_sum(ct, *perm)
                for perm in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]
            }
            base = schur_triple_sum(ct, a, b, c)
            assert all(abs(v - base) < 1e-10 for v in vals)

    def test_conjugate_pair_triple_nonnegative(self, corpus_entries):
        # sum_i lam_{i,j} conj(lam_{i,j}) / d_i = sum |lam|^2/d_i >= 0
        for e in corpus_entries:
            if not rings.is_commutative(e.fd):
                continue
            ct = character_table(e.fd)
            for j in range(ct.rank):
                jc = ct.conjugate_column(j)
                v = schur_triple_sum(ct, j, jc, 0)
                assert v.real >= -1e-9, (e.id, j)

    def test_imaginary_parts_small(self, corpus_entries):
        for e in corpus_entries:
            if not rings.is_commutative(e.fd):
                continue
            ct = character_table(e.fd)
            rep = schur_commutative(ct)
            mu = global_fpdim(e.fd)
            assert rep.max_imag <= 1e-8 * mu, e.id


class TestSchurCommutative:
    def test_census_on_34(self, frobenius34):
        passing = [
            e.id
            for e in frobenius34
            if schur_commutative(character_table(e.fd)).holds
        ]
        assert len(passing) == 6
        assert {"si210-2", "si660-15"} <= set(passing)  # f210, f660

    def test_decide_only_agrees(self, frobenius34):
        for e in frobenius34[:8]:
            ct = character_table(e.fd)
            assert (
                schur_commutative(ct, decide_only=True).holds
                == schur_commutative(ct).holds
            )

    def test_nf924_passes(self):
        fd = corpus.get("nf924").fd
        assert schur_commutative(character_table(fd)).holds


class TestFalsifier:
    def test_ruled_out_ring_yields_witness(self, ruled210):
        w = schur_noncommutative_falsify(ruled210, num_samples=0, seed=0)
        assert w is not None
        assert w.value < -1.0  # the -65/42 transfers through the eigenvectors

    def test_z3_no_witness(self):
        assert schur_noncommutative_falsify(cyclic_group_ring(3), 2000, seed=3) is None

    def test_trivial_ring(self):
        fd = rings.new_fusion_data([np.eye(1, dtype=int)])
        assert schur_noncommutative_falsify(fd, 500, seed=0) is None

    def test_deterministic(self, ruled210):
        w1 = schur_noncommutative_falsify(ruled210, 50, seed=9)
        w2 = schur_noncommutative_falsify(ruled210, 50, seed=9)
        assert w1.value == w2.value


class TestObstructionReport:
    def test_f660(self, f660):
        rep = obstruction_report(f660)
        assert rep.simple and rep.perfect and rep.frobenius_type
        assert rep.schur.holds
        assert rep.coefficient_bounds_hold
        d = rep.to_dict()
        assert d["schur_holds"] is True and d["fpdim"] == pytest.approx(660.0)

    def test_z4(self):
        rep = obstruction_report(cyclic_group_ring(4))
        assert not rep.simple

    def test_nf143(self):
        rep = obstruction_report(corpus.get("nf143").fd)
        assert rep.simple and rep.frobenius_type is False
        assert not rep.schur.holds
