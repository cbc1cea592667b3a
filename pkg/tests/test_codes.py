from __future__ import annotations

import numpy as np
import pytest

from helpers_oracles import hamming_min_distance
from sumrank.codes import (
    HammingLinearCode,
    concatenate,
    explicit_family,
    gabidulin,
    reed_solomon,
    sum_zero_code,
)
from sumrank.errors import (
    BlockLengthTooSmall,
    DegreeOutOfRange,
    DimensionMismatch,
    FieldMismatch,
    LengthExceedsField,
)
from sumrank.fields import field_from_order, make_extension, make_prime_field
from sumrank.matspace import Mat
from sumrank.metrics import min_distance_exhaustive, sum_rank_weight

F2 = make_prime_field(2)
F3 = make_prime_field(3)
F16 = make_extension(F2, 4)


class TestReedSolomon:
    def test_table_one_outer(self):
        code = reed_solomon(F16, 15, 12)
        assert (code.n, code.k, code.d_design) == (15, 12, 4)
        assert code.gen.rank() == 12

    def test_full_space(self):
        code = reed_solomon(F3, 3, 3)
        assert code.d_design == 1
        assert min_distance_exhaustive(code) == 1

    def test_mds_by_oracle(self):
        code = reed_solomon(field_from_order(8), 7, 3)
        assert min_distance_exhaustive(code) == 5 == code.d_design

    @pytest.mark.parametrize("n,k", [(4, 1), (4, 2), (4, 4), (3, 2)])
    def test_mds_sweep_f4(self, n, k):
        code = reed_solomon(field_from_order(4), n, k)
        assert code.gen.rank() == k
        assert min_distance_exhaustive(code) == n - k + 1

    def test_length_exceeds_field(self):
        with pytest.raises(LengthExceedsField):
            reed_solomon(F3, 4, 2)

    def test_encode_is_evaluation(self):
        code = reed_solomon(F3, 3, 2)
        # message (a0, a1) encodes to a0 + a1 * point at points 0, 1, 2
        cw = code.encode([F3.elem(1), F3.elem(2)])
        assert [c.idx for c in cw] == [1, 0, 2]


class TestGabidulin:
    def test_full_matrix_space(self):
        code = gabidulin(F2, 2, 1)
        assert code.k == 4 and code.d_design == 1
        assert code.gen.rank() == 4
        assert min_distance_exhaustive(code) == 1

    def test_mrd_n3(self):
        code = gabidulin(F2, 3, 1)
        assert code.k == 6 and code.d_design == 2
        assert min_distance_exhaustive(code) == 2

    def test_multiplication_maps(self):
        # degree bound 0: codewords are multiplication-by-a maps, invertible
        # for a != 0, so the distance is the full block size.
        code = gabidulin(F2, 3, 0)
        assert code.k == 3
        assert min_distance_exhaustive(code) == 3

    def test_mrd_singleton_equality(self):
        # size q^(n(deg+1)) meets the rank-metric Singleton-like bound
        # q^(m(n-d+1)) at d = n - deg.
        for n, deg in [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)]:
            code = gabidulin(F2, n, deg)
            d = n - deg
            assert code.k == n * (n - d + 1)
            assert min_distance_exhaustive(code) == d

    def test_codewords_are_linear_maps(self):
        # each generator row reshapes to the matrix of an additive map
        code = gabidulin(F3, 2, 1)
        F9 = make_extension(F3, 2)
        M = Mat(F3, code.gen.a[1].reshape(2, 2))
        for u in F9:
            for v in F9:
                mu = F9.from_coords((M @ Mat(F3, np.array(F9.coords(u.idx)).reshape(2, 1))).a[:, 0])
                mv = F9.from_coords((M @ Mat(F3, np.array(F9.coords(v.idx)).reshape(2, 1))).a[:, 0])
                ms = F9.from_coords(
                    (M @ Mat(F3, np.array(F9.coords((u + v).idx)).reshape(2, 1))).a[:, 0]
                )
                assert F9.add(mu, mv) == ms

    def test_degree_out_of_range(self):
        with pytest.raises(DegreeOutOfRange):
            gabidulin(F2, 3, 3)
        with pytest.raises(DegreeOutOfRange):
            gabidulin(F2, 3, -1)


class TestSumZero:
    def test_paper_parameters(self):
        code = sum_zero_code(F2, 2, 3)
        assert code.k == 8 and code.d_design == 2
        assert min_distance_exhaustive(code) == 2

    def test_repetition_like(self):
        code = sum_zero_code(F3, 1, 2)
        assert code.k == 1
        assert min_distance_exhaustive(code) == 2

    def test_two_blocks(self):
        code = sum_zero_code(F2, 2, 2)
        assert code.k == 4
        assert min_distance_exhaustive(code) == 2

    def test_codewords_sum_to_zero(self):
        code = sum_zero_code(F3, 2, 3)
        rng = np.random.default_rng(3)
        for _ in range(10):
            v = code.encode(rng.integers(0, 3, size=code.k))
            total = v.blocks[0]
            for b in v.blocks[1:]:
                total = total + b
            assert total == Mat.zeros(F3, 2, 2)

    def test_too_few_blocks(self):
        with pytest.raises(BlockLengthTooSmall):
            sum_zero_code(F2, 2, 1)


class TestConcatenate:
    def test_table_one_row(self):
        outer = reed_solomon(F16, 15, 12)
        inner = gabidulin(F2, 2, 1)
        code = concatenate(outer, inner)
        assert code.k == 48 and code.d_design == 4
        assert code.profile.t == 15
        assert code.profile.blocks[0] == (2, 2)

    def test_table_two_row(self):
        F81 = make_extension(F3, 4)
        code = concatenate(reed_solomon(F81, 31, 27), gabidulin(F3, 2, 1))
        assert code.k == 108 and code.d_design == 5

    def test_small_exhaustive(self):
        code = concatenate(reed_solomon(F16, 3, 2), gabidulin(F2, 2, 1))
        assert code.k == 8 and code.d_design == 2
        assert min_distance_exhaustive(code) >= 2

    def test_dimension_law_sweep(self):
        for q, ctx in ((2, F2), (3, F3)):
            for m, deg in ((1, 0), (2, 0), (2, 1)):
                inner = gabidulin(ctx, m, deg)
                big = make_extension(ctx, inner.k)
                n = min(4, big.order)
                for k1 in range(1, n + 1):
                    outer = reed_solomon(big, n, k1)
                    code = concatenate(outer, inner)
                    assert code.k == k1 * inner.k
                    assert code.gen.rank() == code.k

    def test_distance_law_sweep(self):
        # exhaustive d >= d1 * d2 whenever the enumeration is small
        checked = 0
        for q, ctx in ((2, F2), (3, F3)):
            for m, deg in ((2, 0), (2, 1)):
                inner = gabidulin(ctx, m, deg)
                big = make_extension(ctx, inner.k)
                n = min(4, big.order)
                for k1 in range(1, n + 1):
                    code = concatenate(reed_solomon(big, n, k1), inner)
                    if code.k * np.log2(q) > 16:
                        continue
                    d = min_distance_exhaustive(code)
                    assert d >= code.d_design
                    checked += 1
        assert checked >= 6

    def test_degenerates_to_hamming(self):
        # 1x1 full-space inner: sum-rank distance equals outer Hamming distance
        rng = np.random.default_rng(4)
        inner = gabidulin(F3, 1, 0)
        for _ in range(5):
            G = Mat(F3, rng.integers(0, 3, size=(3, 6))).row_space_basis()
            if G.rows != 3:
                continue
            outer = HammingLinearCode(F3, 6, 3, G)
            code = concatenate(outer, inner)
            assert min_distance_exhaustive(code) == hamming_min_distance(G.a.tolist(), 3)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch):
            concatenate(reed_solomon(F16, 3, 2), gabidulin(F2, 3, 1))  # k2=6, not 4
        with pytest.raises(FieldMismatch):
            concatenate(reed_solomon(F16, 3, 2), gabidulin(F3, 2, 1))  # wrong base


class TestExplicitFamily:
    def test_table_one_anchor(self):
        code = explicit_family(q=2, n=15, m=2, d=1, d1=8)
        assert code.k == 32 and code.d_design == 8

    def test_table_two_anchor(self):
        code = explicit_family(q=3, n=31, m=2, d=1, d1=17)
        assert code.k == 60 and code.d_design == 17

    def test_small_exact(self):
        code = explicit_family(q=2, n=3, m=2, d=2, d1=2)
        assert code.k == 4 and code.d_design == 4
        assert min_distance_exhaustive(code) >= 4

    def test_prime_power_q(self):
        code = explicit_family(q=4, n=3, m=1, d=1, d1=2)
        assert code.k == 2 and code.d_design == 2

    def test_bad_params(self):
        with pytest.raises(DegreeOutOfRange):
            explicit_family(q=2, n=3, m=2, d=3, d1=2)
        with pytest.raises(ValueError):
            explicit_family(q=2, n=3, m=2, d=1, d1=0)


class TestGeneratorContracts:
    @pytest.mark.parametrize(
        "code",
        [
            reed_solomon(F16, 15, 12),
            gabidulin(F2, 3, 1),
            gabidulin(F3, 2, 0),
            sum_zero_code(F2, 2, 3),
            sum_zero_code(F3, 2, 2),
            explicit_family(2, 15, 2, 1, 8),
        ],
        ids=lambda c: f"{type(c).__name__}-k{c.k}",
    )
    def test_full_row_rank(self, code):
        assert code.gen.rank() == code.k

    def test_encode_message_length_checked(self):
        code = sum_zero_code(F2, 2, 3)
        with pytest.raises(DimensionMismatch):
            code.encode([1, 0])
