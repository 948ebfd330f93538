import random

import pytest

from biops.ring import Poly2, ZERO, ONE, ALPHA, BETA, AB, KappaElem, K_ZERO, K_ONE, KAPPA
from biops.tensor import TensorElem, E1, E2, linear_form
from biops.biortho import (first_moment_matrices, p_explicit, q_explicit,
                           sqrt_lambda)
from biops.matrep import (generator_matrices, represent, eval_L_matrix,
                          pq_rep, matrix_moment, similarity_check,
                          second_moment, second_moment_product, cheb_like,
                          principal_minor_polys, cheb_reading_report)
from biops.checks import random_tensor
from biops.errors import TruncationTooSmall


class TestGenerators:
    def test_hat_matches_closed_form_bands(self):
        dim = 6
        _, _, _, _, Xhat, Yhat = first_moment_matrices(dim)
        g1, g2 = generator_matrices(dim, "hat")
        for i in range(dim):
            for j in range(dim):
                assert g1[i][j] == Xhat.entry(i, j)
                assert g2[i][j] == Yhat.entry(i, j)

    def test_hat_band_values(self):
        g1, g2 = generator_matrices(4, "hat")
        assert g1[0][0] == KappaElem(ALPHA)
        assert g1[1][1] == KappaElem(AB)
        assert g1[0][1] == KAPPA
        assert g1[1][2] == KappaElem(AB)
        assert g1[1][0] == K_ZERO
        assert g2[0][0] == KappaElem(BETA)
        assert g2[1][0] == KAPPA
        assert g2[2][1] == KappaElem(AB)
        assert g2[0][1] == K_ZERO

    def test_bar_pictures_kappa_free_where_expected(self):
        # bar_col has a kappa-free superdiagonal in gen1 and kappa^2 scaled
        # subdiagonal in gen2; bar_row is the mirror image
        g1, g2 = generator_matrices(5, "bar_col")
        assert g1[0][1] == K_ONE
        assert g2[1][0] == KAPPA * KAPPA
        h1, h2 = generator_matrices(5, "bar_row")
        assert h2[1][0] == K_ONE
        assert h1[0][1] == KAPPA * KAPPA

    def test_unknown_rep_rejected(self):
        with pytest.raises(ValueError):
            generator_matrices(4, "tilde")

    def test_similarity(self):
        rep = similarity_check(6)
        assert not rep.failures
        assert rep.summary().startswith("PASS")


class TestRepresent:
    def test_unit_is_identity(self):
        r = represent(TensorElem.unit(), 4)
        for i in range(4):
            for j in range(4):
                assert r.entry(i, j) == (K_ONE if i == j else K_ZERO)

    def test_diffusion_relation_vanishes(self):
        rel = E1 * E2 - AB * (E1 + E2)
        for dim in (4, 8, 12):
            r = represent(rel, dim)
            assert r.valid_block == dim - 2
            for i in range(r.valid_block):
                for j in range(r.valid_block):
                    assert r.entry(i, j).is_zero()

    def test_truncation_guard(self):
        with pytest.raises(TruncationTooSmall):
            represent(E1 * E2, 3)
        r = represent(E1 * E2, 5)
        with pytest.raises(TruncationTooSmall):
            r.entry(3, 0)
        with pytest.raises(TruncationTooSmall):
            r.entry(0, 3)

    def test_type_guard(self):
        with pytest.raises(TypeError):
            represent(ALPHA, 4)

    def test_two_path_L_random(self):
        rng = random.Random(7)
        for _ in range(200):
            x = random_tensor(rng, max_len=8)
            assert eval_L_matrix(x) == linear_form(x)

    def test_two_path_L_examples(self):
        assert eval_L_matrix(E1) == ALPHA
        assert eval_L_matrix(E2) == BETA
        assert eval_L_matrix(E1 * E2) == AB * (ALPHA + BETA)
        assert eval_L_matrix(E2 * E1) == AB


class TestPQRep:
    def test_identity_at_zero(self):
        for which in ("P", "Q"):
            r = pq_rep(0, which, 4)
            for i in range(4):
                for j in range(4):
                    assert r.entry(i, j) == (K_ONE if i == j else K_ZERO)

    def test_band_pattern(self):
        r = pq_rep(2, "P", 6)
        assert r.entry(0, 2) == K_ONE
        assert r.entry(1, 3) == K_ONE
        assert r.entry(1, 2) == KappaElem(ALPHA * (BETA - 1))
        # the j >= n cutoff kills the (0, 1) entry
        assert r.entry(0, 1) == K_ZERO
        assert r.entry(0, 0) == K_ZERO
        q = pq_rep(2, "Q", 6)
        assert q.entry(2, 0) == K_ONE
        assert q.entry(2, 1) == KappaElem(BETA * (ALPHA - 1))
        assert q.entry(1, 0) == K_ZERO

    def test_matches_represent(self):
        dim = 8
        for n in range(4):
            p = represent(p_explicit(n).to_tensor(), dim, "bar_col")
            q = represent(q_explicit(n).to_tensor(), dim, "bar_row")
            bp = pq_rep(n, "P", dim)
            bq = pq_rep(n, "Q", dim)
            vb = min(p.valid_block, bp.valid_block)
            for i in range(vb):
                for j in range(vb):
                    assert p.entry(i, j) == bp.entry(i, j), (n, i, j)
                    assert q.entry(i, j) == bq.entry(i, j), (n, i, j)

    def test_extraction_identity(self):
        # (P_n A Q_m)[0][0] picks out A[n][m] for any matrix A
        rng = random.Random(3)
        dim = 7
        for _ in range(10):
            n, m = rng.randint(0, 4), rng.randint(0, 4)
            A = [[KappaElem(Poly2.const(rng.randint(-3, 3)))
                  for _ in range(dim)] for _ in range(dim)]
            P = pq_rep(n, "P", dim)
            Q = pq_rep(m, "Q", dim)
            got = K_ZERO
            for k in range(dim):
                if P.raw(0, k).is_zero():
                    continue
                for l in range(dim):
                    got = got + P.raw(0, k) * A[k][l] * Q.raw(l, 0)
            assert got == A[n][m]

    def test_errors(self):
        with pytest.raises(TruncationTooSmall):
            pq_rep(3, "P", 4)
        with pytest.raises(ValueError):
            pq_rep(1, "R", 5)
        with pytest.raises(ValueError):
            pq_rep(-1, "P", 5)


class TestMatrixMoment:
    def test_two_path(self):
        words = [TensorElem.unit(), E1, E2, E1 * E2, E2 * E1]
        for g in words:
            for n in range(4):
                for m in range(4):
                    lhs = linear_form(p_explicit(n).to_tensor() * g
                                      * q_explicit(m).to_tensor())
                    rhs = matrix_moment(n, m, g) * sqrt_lambda(n) * sqrt_lambda(m)
                    assert KappaElem(lhs) == rhs, (n, m)

    def test_first_moment_example(self):
        assert matrix_moment(0, 1, E1) == KAPPA
        assert matrix_moment(0, 0, E1) == KappaElem(ALPHA)

    def test_dim_guard(self):
        with pytest.raises(TruncationTooSmall):
            matrix_moment(3, 3, E1, dim=4)


class TestSecondMoment:
    def test_displayed_entries(self):
        w = second_moment(4)
        assert w.entry(0, 0) == KappaElem(AB * (ALPHA + BETA))
        assert w.entry(0, 1) == KappaElem(ZERO, AB)
        assert w.entry(1, 0) == KappaElem(ZERO, AB)
        assert w.entry(1, 1) == KappaElem(2 * AB * AB)
        assert w.entry(1, 2) == KappaElem(AB * AB)
        assert w.entry(0, 2) == K_ZERO

    @pytest.mark.parametrize("dim", [4, 6, 10])
    def test_equals_product(self, dim):
        w = second_moment(dim)
        prod = second_moment_product(dim)
        assert prod.valid_block == dim - 2
        for i in range(prod.valid_block):
            for j in range(prod.valid_block):
                assert w.entry(i, j) == prod.entry(i, j)

    def test_symmetry(self):
        w = second_moment(8)
        for i in range(8):
            for j in range(8):
                assert w.raw(i, j) == w.raw(j, i)

    def test_small_dim_rejected(self):
        with pytest.raises(ValueError):
            second_moment(2)


class TestChebLike:
    def test_degrees_and_leading(self):
        ch = cheb_like(5)
        for n, p in enumerate(ch.polys):
            assert len(p) == n + 1
            assert p[-1] == K_ONE

    def test_corrected_matches_minor_oracle(self):
        oracle = principal_minor_polys(6)
        polys = cheb_like(6, "corrected").polys
        for n in range(7):
            assert list(polys[n]) == list(oracle[n]), n

    def test_printed_diverges(self):
        oracle = principal_minor_polys(3)
        polys = cheb_like(3, "printed").polys
        assert any(list(polys[n]) != list(oracle[n]) for n in range(4))

    def test_report(self):
        rep = cheb_reading_report(4)
        assert not rep.failures
        assert "corrected" in " ".join(rep.notes)

    def test_bad_args(self):
        with pytest.raises(ValueError):
            cheb_like(3, "guessed")
        with pytest.raises(ValueError):
            cheb_like(-1)
