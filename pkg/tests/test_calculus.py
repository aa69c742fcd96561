import itertools
import random
from fractions import Fraction

import pytest

from ncgq.algebra import QuantumAlgebra, basis_monomials
from ncgq.calculus import Calculus, DiffForm, FORMS
from ncgq.constants import AD_R_PRINTED, evaluate_ad_table
from ncgq.scalars import GaussianRational, ONE, ZERO, q_root

random.seed(20260810)


@pytest.fixture(scope="module", params=["i", "-i"])
def cal(request):
    return Calculus(QuantumAlgebra(request.param))


@pytest.fixture(scope="module")
def cal_i():
    return Calculus(QuantumAlgebra("i"))


def random_element(alg, rng, n_terms=2):
    coeffs = {}
    for _ in range(n_terms):
        m = (rng.randrange(4), rng.randrange(4))
        coeffs[m] = GaussianRational(Fraction(rng.randrange(-4, 5)), Fraction(rng.randrange(-4, 5)))
    return alg.element(coeffs)


class TestWedgeNormalForm:
    def test_squares_vanish(self, cal):
        for f in ("a", "b", "c"):
            assert not cal.wedge(cal.basis_form(f), cal.basis_form(f))

    def test_top_square(self, cal):
        # e_d /\ e_d = mu e_c /\ e_b
        lhs = cal.wedge(cal.basis_form("d"), cal.basis_form("d"))
        rhs = cal.wedge(cal.basis_form("c"), cal.basis_form("b")).scale(cal.algebra.mu)
        assert lhs == rhs

    def test_bc_anticommute(self, cal):
        # forced by the metric symmetry: e_c /\ e_b = - e_b /\ e_c
        cb = cal.wedge(cal.basis_form("c"), cal.basis_form("b"))
        bc = cal.wedge(cal.basis_form("b"), cal.basis_form("c"))
        assert cb == -bc

    def test_reference_relations_hold(self, cal):
        q2, mu = cal.algebra.q2, cal.algebra.mu
        e = cal.basis_form
        w = cal.wedge
        # the four relations of the reference display
        assert not (w(e("a"), e("d")) + w(e("d"), e("a")) + w(e("c"), e("b")).scale(mu))
        assert not (w(e("d"), e("c")) + w(e("c"), e("d")).scale(q2) + w(e("a"), e("c")).scale(mu))
        assert not (w(e("b"), e("d")) + w(e("d"), e("b")).scale(q2) + w(e("b"), e("a")).scale(mu))
        assert w(e("d"), e("d")) == w(e("c"), e("b")).scale(mu)

    def test_confluence_on_all_triples(self, cal):
        for x, y, z in itertools.product(FORMS, repeat=3):
            ex, ey, ez = (cal.basis_form(f) for f in (x, y, z))
            assert cal.wedge(cal.wedge(ex, ey), ez) == cal.wedge(ex, cal.wedge(ey, ez))

    def test_graded_dimensions(self, cal):
        assert cal.exterior.graded_dimensions() == [1, 4, 6, 4, 1]


class TestCommutePast:
    def test_alpha_rule(self, cal):
        # e_a alpha = q alpha e_a
        got = cal.commute_past("a", cal.algebra.alpha)
        assert got == cal.basis_form("a", cal.algebra.alpha.scale(cal.algebra.q))

    def test_beta_rule_with_correction(self, cal):
        alg = cal.algebra
        got = cal.commute_past("b", alg.beta)
        expected = DiffForm(cal, {
            ("b",): alg.beta.scale(alg.q.inverse()),
            ("a",): alg.alpha.scale(alg.mu),
        })
        assert got == expected

    @pytest.mark.parametrize("r", [2, 3])
    def test_beta_power_reference_line(self, cal, r):
        # e_b b^r = q^-r b^r e_b + q^(1-r) mu [r]_{q^2} a b^(r-1) e_a
        alg = cal.algebra
        q, mu = alg.q, alg.mu
        two = GaussianRational(1) + alg.q2
        bracket = ONE
        for k in range(1, r):
            bracket = bracket + alg.q2 ** k
        got = cal.commute_past("b", alg.beta ** r)
        expected = DiffForm(cal, {
            ("b",): (alg.beta ** r).scale(q.inverse() ** r),
            ("a",): (alg.alpha * alg.beta ** (r - 1)).scale(q ** (1 - r) * mu * bracket),
        })
        assert got == expected

    @pytest.mark.parametrize("p", [2, 3])
    def test_alpha_power_reference_lines(self, cal, p):
        alg = cal.algebra
        q, mu = alg.q, alg.mu
        bracket = ONE
        for k in range(1, p):
            bracket = bracket + alg.q2 ** k
        # e_c a^p = q^p a^p e_c + mu q^(p+1) [p]_{q^2} a^(p-1) b e_a
        got = cal.commute_past("c", alg.alpha ** p)
        expected = DiffForm(cal, {
            ("c",): (alg.alpha ** p).scale(q ** p),
            ("a",): (alg.alpha ** (p - 1) * alg.beta).scale(mu * q ** (p + 1) * bracket),
        })
        assert got == expected
        # e_d a^p = q^-p a^p e_d + q^(1-p) mu [p]_{q^2} a^(p-1) b e_b
        got = cal.commute_past("d", alg.alpha ** p)
        expected = DiffForm(cal, {
            ("d",): (alg.alpha ** p).scale(q.inverse() ** p),
            ("b",): (alg.alpha ** (p - 1) * alg.beta).scale(mu * q ** (1 - p) * bracket),
        })
        assert got == expected

    @pytest.mark.parametrize("r", [2, 3])
    def test_d_beta_power_reference_line(self, cal, r):
        # e_d b^r = q^r b^r e_d + q^(r-1) mu [r]_{q^2} a b^(r-1) e_c + mu^2 q^(2-r) [r]_{q^2} b^r e_a
        alg = cal.algebra
        q, mu = alg.q, alg.mu
        bracket = ONE
        for k in range(1, r):
            bracket = bracket + alg.q2 ** k
        got = cal.commute_past("d", alg.beta ** r)
        expected = DiffForm(cal, {
            ("d",): (alg.beta ** r).scale(q ** r),
            ("c",): (alg.alpha * alg.beta ** (r - 1)).scale(q ** (r - 1) * mu * bracket),
            ("a",): (alg.beta ** r).scale(mu * mu * q ** (2 - r) * bracket),
        })
        assert got == expected

    def test_bimodule_associativity_generator_triples(self, cal):
        alg = cal.algebra
        gens = {n: alg.generator(n) for n in ("alpha", "beta", "beta_star", "delta")}
        for form in FORMS:
            for g1 in gens.values():
                for g2 in gens.values():
                    via_product = cal.commute_past(form, g1 * g2)
                    step1 = cal.commute_past(form, g1)
                    step2 = cal.zero()
                    for (fm,), el in step1.terms.items():
                        step2 = step2 + cal.commute_past(fm, g2).left_multiply(el)
                    assert via_product == step2

    def test_bimodule_associativity_random_monomials(self, cal):
        alg = cal.algebra
        rng = random.Random(5)
        for _ in range(100):
            m1 = alg.monomial(rng.randrange(4), rng.randrange(4))
            m2 = alg.monomial(rng.randrange(4), rng.randrange(4))
            for form in FORMS:
                via_product = cal.commute_past(form, m1 * m2)
                step1 = cal.commute_past(form, m1)
                step2 = cal.zero()
                for (fm,), el in step1.terms.items():
                    step2 = step2 + cal.commute_past(fm, m2).left_multiply(el)
                assert via_product == step2


class TestExteriorDerivative:
    def test_d_of_unit(self, cal):
        assert not cal.exterior_d(cal.from_function(cal.algebra.one))

    def test_maurer_cartan_values(self, cal):
        # reference values: de_a = -e_c/\e_b, de_d = e_c/\e_b,
        # de_b = -q^-2 e_b/\e_a + e_b/\e_d, de_c = e_c/\e_a - q^2 e_c/\e_d
        e = cal.basis_form
        w = cal.wedge
        q2i = cal.algebra.q2.inverse()
        q2 = cal.algebra.q2
        assert cal.exterior_d(e("a")) == -w(e("c"), e("b"))
        assert cal.exterior_d(e("d")) == w(e("c"), e("b"))
        assert cal.exterior_d(e("b")) == -w(e("b"), e("a")).scale(q2i) + w(e("b"), e("d"))
        assert cal.exterior_d(e("c")) == w(e("c"), e("a")) - w(e("c"), e("d")).scale(q2)

    @pytest.mark.parametrize("normalized", [True, False])
    def test_d_squared_zero(self, cal, normalized):
        for f in FORMS:
            assert not cal.exterior_d(cal.exterior_d(cal.basis_form(f), normalized), normalized)
        for (p, r) in basis_monomials():
            x = cal.from_function(cal.algebra.monomial(p, r))
            assert not cal.exterior_d(cal.exterior_d(x, normalized), normalized)

    def test_graded_leibniz_random(self, cal):
        alg = cal.algebra
        rng = random.Random(13)
        for _ in range(100):
            deg_x = rng.randrange(2)
            deg_y = rng.randrange(2)
            fx = random_element(alg, rng)
            fy = random_element(alg, rng)
            x = cal.from_function(fx) if deg_x == 0 else DiffForm(cal, {(rng.choice(FORMS),): fx})
            y = cal.from_function(fy) if deg_y == 0 else DiffForm(cal, {(rng.choice(FORMS),): fy})
            lhs = cal.exterior_d(cal.wedge(x, y))
            sign = ONE if deg_x % 2 == 0 else -ONE
            rhs = cal.wedge(cal.exterior_d(x), y) + cal.wedge(x, cal.exterior_d(y)).scale(sign)
            assert lhs == rhs


class TestPartialsAndProjection:
    def test_partials_of_unit(self, cal):
        parts = cal.partials(cal.algebra.one)
        assert all(not v for v in parts.values())

    def test_partials_reconstruct_derivative(self, cal):
        alg = cal.algebra
        rng = random.Random(23)
        for _ in range(20):
            f = random_element(alg, rng)
            parts = cal.partials(f)
            rebuilt = cal.zero()
            for name, coeff in parts.items():
                rebuilt = rebuilt + DiffForm(cal, {(name,): coeff})
            assert rebuilt == cal.exterior_d(cal.from_function(f))

    def test_projection_on_generators(self, cal_i):
        alg = cal_i.algebra
        pt = cal_i.pi_tilde(alg.beta)
        assert pt == {"a": ZERO, "b": ZERO, "c": ONE, "d": ZERO}
        pa = cal_i.pi_tilde(alg.alpha)
        # q/[2]_q (q e_a - e_d) at q = i
        assert pa["a"] == GaussianRational("-1/2", "1/2")
        assert pa["d"] == GaussianRational("-1/2", "-1/2")
        assert not pa["b"] and not pa["c"]

    def test_projection_vanishes_on_unit(self, cal):
        assert all(not v for v in cal.pi_tilde(cal.algebra.one).values())

    def test_projection_kernel_dimensions(self, cal_i):
        from ncgq import linalg

        rows = cal_i.pi_tilde_matrix()
        rank = linalg.rank(rows)
        # the b^4 = 1 wraparound makes the projection surject onto all four
        # invariant 1-forms (e_b is hit by a b^3)
        assert rank == 4
        kernel = cal_i.pi_tilde_kernel_in_counit_kernel()
        assert len(kernel) == 16 - 1 - rank
        for f in kernel:
            assert not f.counit()
            assert all(not v for v in cal_i.pi_tilde(f).values())

    def test_partials_differ_from_translation_minus_identity(self, cal_i):
        # the reference proof identifies the unnormalized a-partial with
        # right-translation minus identity; the graded-commutator derivative
        # disagrees, and the audit must report it.  Pin one witness here.
        alg = cal_i.algebra
        parts = cal_i.partials(alg.alpha, normalized=False)
        r_minus_id = alg.alpha * alg.alpha - alg.alpha
        assert parts["a"] != r_minus_id
        assert parts["a"] == alg.alpha.scale(alg.q - ONE)


class TestStructureConstants:
    def test_reference_table_entry(self, cal_i):
        # coefficient of e_c (x) e_b in the reference right-table row for e_a is 1
        table = evaluate_ad_table(AD_R_PRINTED, cal_i.algebra.q)
        assert table["a"][("c", "b")] == ONE

    def test_recomputation_disagrees_and_is_reported(self, cal_i):
        got = cal_i.ad_right()
        printed = evaluate_ad_table(AD_R_PRINTED, cal_i.algebra.q)
        # first-principles recomputation over the operational algebra does not
        # reproduce the reference table; both sides are exact, so equality is
        # decidable and the audit records per-entry verdicts.
        assert got != printed
        # spot value: the recomputed row for e_b is e_b (x) pi(a^2) = -e_b (x) theta
        assert got["b"] == {("b", "a"): -ONE, ("b", "d"): -ONE}
