import pytest

from cycloschur.coeff import LaurentRing
from cycloschur.combinatorics import Shape
from cycloschur.hecke import hecke_equal, t_bracket
from cycloschur.reporting import failures
from cycloschur.schurops import (
    I,
    K,
    SchurContext,
    X,
    divided_power_image,
    hw_eigenvalue_pair,
    ow,
    ow_commutator,
    ow_mul,
    verify_divided_powers,
    verify_hw_eigenvalues,
    verify_q1,
    verify_relations,
    word_J,
    word_ktilde,
)


@pytest.fixture(scope="module")
def sctx22():
    return SchurContext(2, Shape((2, 2)))


@pytest.fixture(scope="module")
def sctx32():
    return SchurContext(3, Shape((2, 2)))


class TestApplyGen:
    def test_K_scalar(self, sctx22):
        mu = ((1, 0), (1, 0))
        nu, h = sctx22.apply_gen(K(+1, 1), mu)
        assert nu == mu
        assert h == sctx22.hctx.scalar(sctx22.ring.q)

    def test_I_zero_entry(self, sctx22):
        mu = ((0, 0), (2, 0))
        nu, h = sctx22.apply_gen(I(+1, 1, 1), mu)
        assert nu == mu and h.is_zero

    def test_I_eigen_action(self, sctx22):
        # I^+_{(1,1),0} acts on m_mu by q^{-e}[e] with e the weight entry
        mu = ((2, 0), (0, 0))
        value = sctx22.apply_seq((I(+1, 1, 0),), mu)
        from cycloschur.coeff import qint

        expected = sctx22.m(mu).scale(sctx22.ring.q_pow(-2) * qint(2, sctx22.ring))
        assert value == expected

    def test_X_plus_zero_successor(self, sctx22):
        mu = ((2, 0), (0, 0))
        nu, h = sctx22.apply_gen(X(+1, 1, 0), mu)
        assert nu is None and h.is_zero

    def test_X_plus_moves_weight(self, sctx22):
        mu = ((1, 1), (0, 0))
        nu, h = sctx22.apply_gen(X(+1, 1, 0), mu)
        assert nu == ((2, 0), (0, 0))
        assert h == t_bracket(sctx22.hctx, 1, 1, +1)  # q^{-1+1} [T;1,1]^+ = 1

    def test_X_minus_junction_factor(self, sctx22):
        # position 2 is the junction between the two components
        mu = ((1, 1), (0, 0))
        nu, h = sctx22.apply_gen(X(-1, 2, 0), mu)
        assert nu == ((1, 0), (1, 0))
        hc = sctx22.hctx
        expected = (hc.L(2) - hc.scalar(sctx22.ring.Q(1))) * t_bracket(hc, 2, 1, -1)
        assert h == expected

    def test_closed_form_matches_induction(self, sctx22):
        # exercised internally; a plain call must not raise
        for mu in sctx22.weights:
            sctx22.apply_gen(X(+1, 1, 2), mu)
            sctx22.apply_gen(X(-1, 2, 2), mu)


class TestApplyWord:
    def test_empty_word_is_identity(self, sctx22):
        mu = ((1, 0), (1, 0))
        assert sctx22.apply_seq((), mu) == sctx22.m(mu)

    def test_KK_inverse(self, sctx22):
        ring = sctx22.ring
        ok, witness = sctx22.op_equal(ow(ring, K(+1, 2), K(-1, 2)), ow(ring))
        assert ok, witness

    def test_K_plus_not_K_minus(self, sctx22):
        ring = sctx22.ring
        ok, witness = sctx22.op_equal(ow(ring, K(+1, 1)), ow(ring, K(-1, 1)))
        assert not ok
        assert witness is not None

    def test_R1_square(self, sctx22):
        from cycloschur.schurops import ow_add, ow_scale

        ring = sctx22.ring
        lhs = ow(ring, K(+1, 3), K(+1, 3))
        rhs = ow_add(ow(ring), ow_scale(ow(ring, I(-1, 3, 0)), ring.qq_comm()))
        ok, witness = sctx22.op_equal(lhs, rhs)
        assert ok, witness

    def test_word_J_zero_degree_definition(self, sctx22):
        # J_0 against its K-corollary form on each weight
        from cycloschur.schurops import ow_add, ow_neg

        ring = sctx22.ring
        rhs = ow_add(
            ow(ring, I(+1, 1, 0)),
            ow_neg(ow(ring, K(-1, 1), K(-1, 1), I(-1, 2, 0))),
        )
        ok, witness = sctx22.op_equal(word_J(ring, 1, 0), rhs)
        assert ok, witness

    def test_ktilde_commutator_with_J(self, sctx22):
        # R6 at (t,s) = (0,0) away from the junction: [X+_1, X-_1] = Ktilde+ J_0
        ring = sctx22.ring
        lhs = ow_commutator(ow(ring, X(+1, 1, 0)), ow(ring, X(-1, 1, 0)))
        rhs = ow_mul(word_ktilde(ring, +1, 1), word_J(ring, 1, 0))
        ok, witness = sctx22.op_equal(lhs, rhs)
        assert ok, witness


class TestDividedPowers:
    def test_d1_integral(self, sctx32):
        mu = ((1, 1), (1, 0))
        quotient, integral = divided_power_image(sctx32, 1, +1, 0, 1, mu)
        assert integral
        assert quotient == sctx32.apply_seq((X(+1, 1, 0),), mu)

    def test_d2_divides(self, sctx32):
        mu = ((0, 2), (1, 0))
        quotient, integral = divided_power_image(sctx32, 1, +1, 0, 2, mu)
        assert integral
        assert not quotient.is_zero

    def test_overshoot_vanishes(self, sctx32):
        mu = ((1, 1), (1, 0))
        quotient, _ = divided_power_image(sctx32, 1, +1, 0, 2, mu)
        assert quotient.is_zero

    def test_power_formula_with_cofactor(self, sctx32):
        # (X^+_t)^d (m_mu) = [d]! q^{-d mu_{i+1} + d^2} m_{mu + d alpha}
        #                     (L_{N+1}...L_{N+d})^t  H^+(N, mu_{i+1}, d)
        from cycloschur.coeff import qfactorial
        from cycloschur.combinatorics import flatten, jm_position, unflatten
        from cycloschur.hecke import divided_t_bracket

        sctx = sctx32
        pos, t, d = 1, 1, 2
        mu = ((0, 2), (1, 0))
        value = sctx.apply_seq(tuple([X(+1, pos, t)] * d), mu)
        N = jm_position(mu, sctx.shape.node(pos), sctx.shape)
        succ = flatten(mu)[pos]
        _, cofactor = divided_t_bracket(sctx.hctx, N, succ, d, +1)
        flat = list(flatten(mu))
        flat[pos - 1] += d
        flat[pos] -= d
        target = unflatten(flat, sctx.shape)
        expected = sctx.m(target)
        for j in range(1, d + 1):
            expected = expected * sctx.hctx.L(N + j, t)
        expected = (expected * cofactor).scale(
            qfactorial(d, sctx.ring) * sctx.ring.q_pow(-d * succ + d * d)
        )
        assert hecke_equal(value, expected)


class TestHwEigenvalues:
    def test_zero_row(self):
        ring = LaurentRing(2)
        a, b = hw_eigenvalue_pair(0, 1, 1, 2, +1, ring)
        assert a.is_zero and b.is_zero

    def test_geometric_sum_example(self):
        # t=1, lam=2, j=1, l=1: the residue sum Q_0 (1 + q^2) = Q_0 q [2]
        from cycloschur.coeff import qint

        ring = LaurentRing(2)
        a, b = hw_eigenvalue_pair(2, 1, 1, 1, +1, ring)
        expected = ring.Q(0) * ring.q * qint(2, ring)
        assert a == expected and b == expected

    def test_suite_generic_and_q1(self):
        for ring in (LaurentRing(2), LaurentRing(2, q_one=True)):
            checks = verify_hw_eigenvalues(ring, lam_max=3, j_max=2, t_max=3)
            assert checks and not failures(checks)

    def test_q1_closed_form_is_Q_times_row(self):
        ring = LaurentRing(2, q_one=True)
        a, b = hw_eigenvalue_pair(3, 2, 2, 2, +1, ring)
        assert a == b == ring.Q(1, 2).scale(3)


@pytest.mark.slow
class TestSuites:
    def test_relations_small(self):
        sctx = SchurContext(2, Shape((2, 2)))
        checks = verify_relations(sctx, smax=1, tmax=1, umax=1)
        bad = failures(checks)
        assert not bad, bad[:3]

    def test_q1_small(self):
        sctx = SchurContext(2, Shape((2, 2)), q_one=True)
        checks = verify_q1(sctx, smax=1, tmax=1, umax=1)
        bad = failures(checks)
        assert not bad, bad[:3]

    def test_divided_powers_small(self):
        sctx = SchurContext(2, Shape((2, 2)))
        checks = verify_divided_powers(sctx, dmax=2, tmax=1)
        bad = failures(checks)
        assert not bad, bad[:3]
