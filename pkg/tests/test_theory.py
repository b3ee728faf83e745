import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from sincbound.errors import DomainError, PreconditionError
from sincbound.experiments import example, f1, f2, f3, f4, half_line_grid, whole_line_grid
from sincbound.theory import (
    CaseTag,
    ErrorBound,
    FunctionClass,
    RateTag,
    bound_value,
    constant_de,
    constant_se,
    de_min_n,
    envelope,
    error_bound,
    rescale_case3,
    select_params_de,
    select_params_de3,
    select_params_se,
    se_mesh,
)

PI = math.pi

# Reference values from tests/oracles.py (sympy, 50 digits), frozen.
H_SE_EX1 = 0.27768018363489788502626721040696031301393530196303
H_DE_EX1 = 0.23487026901753360571054623225096554628315665902496
H_DE_EX2 = 0.37349970512952266759399265654260085989825668589701
H_DE3_EX1 = 0.36427618569326458590859919083639395621831184707288
H_DE3_EX3 = 0.21910133173369408061348439095294469559138009458548
C_SE1_F1 = 15.244500021170439000951423647230206188142090175795
C_SE2_F2 = 10.415525335493510481055636084401578625721172913019
C_SE3_F3 = 6.9102184640953182827991736623654213067889100798121
C_SE1_F4 = 299.15356480745780241020634940250058744823151831151
C_DE1_F1 = 45.820501427591474992942462351747884937698410259775
C_DE2_F2 = 14.525064015447028660056527763892409321792104711307
C_DE3_F3 = 475216.62055723905205426669381394773335017457960647
E_MINUS_PI = 0.043213918263772249774417737171728011275728109810633
E_MINUS_PI_E_OVER_4 = 0.11825244732043108543044611827841181570561264930480
SQRT2_OVER_5 = 0.28284271247461900976033774484193961571393437507539


def se(a, b, d, K=1.0, case=CaseTag.SE_CASE1):
    return FunctionClass(case, K, a, b, d)


def ulps(a, b):
    return abs(a - b) / math.ulp(b)


class TestFunctionClass:
    def test_mu_nu(self):
        c = se(0.5, 1.5, PI / 4)
        assert (c.mu, c.nu) == (0.5, 1.5)

    @pytest.mark.parametrize("field", ["K", "alpha", "beta", "d"])
    def test_positive(self, field):
        kw = dict(case=CaseTag.SE_CASE1, K=1.0, alpha=1.0, beta=1.0, d=1.0)
        kw[field] = 0.0
        with pytest.raises(DomainError):
            FunctionClass(**kw)

    def test_strip_limits(self):
        with pytest.raises(DomainError):
            se(1, 1, PI / 2)
        # SE case 3 only needs cos(d/2) > 0
        assert se(1, 1, 1.57, case=CaseTag.SE_CASE3).d == 1.57
        assert se(1, 1, 3.0, case=CaseTag.SE_CASE3).d == 3.0
        with pytest.raises(DomainError):
            se(1, 1, PI, case=CaseTag.SE_CASE3)

    def test_de_case3_requirements(self):
        with pytest.raises(DomainError):
            FunctionClass(CaseTag.DE_CASE3, 1.0, 0.5, 0.7, 1.0)
        with pytest.raises(DomainError):
            FunctionClass.de_case3(1.0, 1.5, 1.0)

    def test_rescale_case3(self):
        # |f| <= K~ |z^a e^{-b z}| with f3: a = pi/4, b = 1, K~ = 1
        K, mu, scale = rescale_case3(1.0, PI / 4, 1.0)
        assert scale == PI / 4 and mu == PI / 4
        assert K == pytest.approx((PI / 4) ** (PI / 4), rel=1e-15)


class TestSelectParamsSE:
    def test_example_equal_exponents(self):
        p = select_params_se(se(2, 2, PI / 4), 16)
        assert (p.M, p.N, p.n) == (16, 16, 16)
        assert ulps(p.h, H_SE_EX1) <= 1

    def test_example_unequal(self):
        p = select_params_se(se(0.5, 1.5, PI / 4), 4)
        assert (p.M, p.N) == (4, 2)

    def test_trivial_mesh(self):
        # d = pi sits outside every function class, so only the mesh formula applies
        assert se_mesh(PI, 1.0, 1) == PI
        p = select_params_se(se(1, 1, math.nextafter(PI, 0), case=CaseTag.SE_CASE3), 1)
        assert p.h == pytest.approx(PI, rel=1e-15) and (p.M, p.N) == (1, 1)

    def test_beta_branch(self):
        p = select_params_se(se(1.5, 0.5, PI / 4), 4)
        assert (p.M, p.N) == (2, 4)

    def test_rejects_de_class(self):
        with pytest.raises(DomainError):
            select_params_se(FunctionClass(CaseTag.DE_CASE1, 1, 1, 1, 1), 4)

    def test_equal_exponents_balanced(self):
        c = se(1.3, 1.3, 0.9)
        for n in range(1, 10_001, 37):
            p = select_params_se(c, n)
            assert p.M == p.N == n

    def test_truncation_balance(self):
        for a, b in [(0.5, 1.5), (1.0, 3.0), (0.25, 0.75), (2.0, 5.0), (0.1, 0.7), (3.0, 7.0)]:
            c = se(a, b, 1.0)
            fa, fb = Fraction(a), Fraction(b)
            for n in range(1, 1001):
                p = select_params_se(c, n)
                assert fb * p.N >= fa * n > fb * (p.N - 1)


class TestSelectParamsDE:
    def test_example_equal(self):
        p = select_params_de(FunctionClass(CaseTag.DE_CASE1, 1.5, 2, 2, PI / 6), 10)
        assert (p.M, p.N) == (10, 10)
        assert ulps(p.h, H_DE_EX1) <= 1

    def test_example_unequal(self):
        p = select_params_de(FunctionClass(CaseTag.DE_CASE2, 1.5, 0.5, 1.5, PI / 6), 10)
        assert ulps(p.h, H_DE_EX2) <= 1
        # floor(log 3 / h) = floor(2.9414...) = 2
        assert (p.M, p.N) == (10, 8)

    def test_threshold_boundary(self):
        p = select_params_de(FunctionClass(CaseTag.DE_CASE1, 1, 1, 1, math.e / 4), 1)
        assert p.h == pytest.approx(1.0, rel=1e-15) and (p.M, p.N) == (1, 1)

    def test_threshold_rejected(self):
        c = FunctionClass(CaseTag.DE_CASE1, 1.5, 2, 2, PI / 6)
        assert de_min_n(c) == 3
        with pytest.raises(PreconditionError, match="minimal admissible n is 3"):
            select_params_de(c, 2)

    def test_truncation_floor(self):
        c = FunctionClass(CaseTag.DE_CASE2, 1.0, 0.3, 1.9, 1.2)
        for n in range(de_min_n(c), 400):
            p = select_params_de(c, n)
            assert p.N == n - oracles.brute_floor_log(1.9, 0.3, p.h)

    def test_de3(self):
        p = select_params_de3(FunctionClass.de_case3(1.0, PI / 4, 1.5), 10)
        assert ulps(p.h, H_DE3_EX1) <= 1 and (p.M, p.N) == (10, 10)
        p = select_params_de3(FunctionClass.de_case3(1.0, 1.0, math.e / 2), 1)
        assert p.h == pytest.approx(1.0, rel=1e-15)
        p = select_params_de3(FunctionClass.de_case3(1.0, 0.5, 1.0), 20)
        assert ulps(p.h, H_DE3_EX3) <= 1

    def test_de3_threshold(self):
        c = FunctionClass.de_case3(1.0, 1.0, 0.5)
        assert de_min_n(c) == 3
        with pytest.raises(PreconditionError):
            select_params_de3(c, 2)


def _random_corpus(size=200, seed=11):
    rng = random.Random(seed)
    cases = []
    for i in range(size):
        kind = ("se", "de", "de3")[i % 3]
        a = rng.choice([rng.uniform(0.1, 3.0), rng.randint(1, 6) / rng.randint(1, 4)])
        b = a if rng.random() < 0.2 else rng.uniform(0.1, 3.0)
        if kind == "de3":
            a = b = rng.uniform(0.05, 1.0)
        d = rng.uniform(0.05, PI / 2 - 1e-3)
        cases.append((kind, a, b, d, rng.randint(1, 500)))
    return cases


@pytest.mark.parametrize("kind, a, b, d, n", _random_corpus())
def test_params_against_oracle(kind, a, b, d, n):
    if kind == "se":
        p = select_params_se(se(a, b, d), n)
        h, M, N = oracles.se_params(a, b, d, n)
    elif kind == "de":
        c = FunctionClass(CaseTag.DE_CASE1, 1.0, a, b, d)
        n = max(n, de_min_n(c))
        p = select_params_de(c, n)
        h, M, N = oracles.de_params(a, b, d, n, p.h)
    else:
        c = FunctionClass.de_case3(1.0, a, d)
        n = max(n, de_min_n(c))
        p = select_params_de3(c, n)
        h, M, N = oracles.de_h(d, a, n, scale=2), n, n
    assert (p.M, p.N) == (M, N)
    assert ulps(p.h, float(h)) <= 1


class TestConstants:
    @pytest.mark.parametrize(
        "cls, ref",
        [
            (example("f1").se_class, C_SE1_F1),
            (example("f2").se_class, C_SE2_F2),
            (example("f3").se_class, C_SE3_F3),
            (example("f4").se_class, C_SE1_F4),
            (example("f1").de_class, C_DE1_F1),
            (example("f2").de_class, C_DE2_F2),
            (example("f3").de_class, C_DE3_F3),
        ],
        ids=["se1-f1", "se2-f2", "se3-f3", "se1-f4", "de1-f1", "de2-f2", "de3-f3"],
    )
    def test_benchmark_examples(self, cls, ref):
        assert error_bound(cls).constant == pytest.approx(ref, rel=1e-13)

    @pytest.mark.parametrize("case", [CaseTag.SE_CASE1, CaseTag.SE_CASE2, CaseTag.SE_CASE3])
    def test_linear_in_K(self, case):
        c1 = constant_se(FunctionClass(case, 1.5, 0.5, 1.5, 0.7)).constant
        c2 = constant_se(FunctionClass(case, 3.0, 0.5, 1.5, 0.7)).constant
        assert c2 == pytest.approx(2 * c1, rel=1e-15)

    def test_de_linear_in_K(self):
        c1 = constant_de(FunctionClass(CaseTag.DE_CASE2, 1.5, 0.5, 1.5, 0.7)).constant
        c3 = constant_de(FunctionClass(CaseTag.DE_CASE2, 4.5, 0.5, 1.5, 0.7)).constant
        assert c3 == pytest.approx(3 * c1, rel=1e-15)

    def test_rate_tags(self):
        assert constant_se(example("f1").se_class).rate is RateTag.SE_RATE
        assert constant_de(example("f1").de_class).rate is RateTag.DE_RATE
        assert constant_de(example("f3").de_class).rate is RateTag.DE3_RATE

    def test_wrong_family(self):
        with pytest.raises(DomainError):
            constant_se(example("f1").de_class)
        with pytest.raises(DomainError):
            constant_de(example("f1").se_class)

    @settings(max_examples=300)
    @given(
        st.sampled_from(list(CaseTag)),
        st.floats(1e-3, 1e3),
        st.floats(0.05, 5.0),
        st.floats(0.05, 5.0),
        st.floats(1e-3, PI / 2 - 1e-3),
    )
    def test_positive_finite(self, case, K, a, b, d):
        if case is CaseTag.DE_CASE3:
            a = b = min(a, 1.0)
        c = error_bound(FunctionClass(case, K, a, b, d)).constant
        assert math.isfinite(c) and c > 0

    def test_large_nu_no_overflow(self):
        # e^{pi nu / 4} alone overflows a double here; the product does not
        c = constant_de(FunctionClass(CaseTag.DE_CASE1, 1e-300, 0.5, 900.0, 0.3))
        ref = oracles.constant_de(1, 1e-300, 0.5, 900.0, 0.3)
        assert c.constant == pytest.approx(float(ref), rel=1e-12)

    def test_out_of_range_constant(self):
        with pytest.raises(DomainError, match="double range"):
            constant_de(FunctionClass(CaseTag.DE_CASE1, 1.0, 0.5, 900.0, 0.3))


class TestBoundValue:
    def test_se_unit(self):
        b = ErrorBound(1.0, RateTag.SE_RATE, PI, 1.0)
        assert bound_value(b, 1) == pytest.approx(E_MINUS_PI, rel=1e-14)

    def test_de_unit(self):
        # 4 d n / mu = e at n = 1, so the rate is exp(-pi d)
        b = ErrorBound(1.0, RateTag.DE_RATE, math.e / 4, 1.0)
        assert bound_value(b, 1) == pytest.approx(E_MINUS_PI_E_OVER_4, rel=1e-14)

    def test_zero_constant_rejected(self):
        with pytest.raises(DomainError):
            ErrorBound(0.0, RateTag.SE_RATE, 1.0, 1.0)

    def test_threshold(self):
        b = constant_de(example("f1").de_class)
        with pytest.raises(PreconditionError):
            bound_value(b, 2)
        b = ErrorBound(1.0, RateTag.DE3_RATE, 0.1, 1.0)
        with pytest.raises(PreconditionError):
            bound_value(b, 5)

    @pytest.mark.parametrize("ex", ["f1", "f2", "f3", "f4"])
    @pytest.mark.parametrize("variant", ["se", "de"])
    def test_monotone(self, ex, variant):
        e = example(ex)
        cls = e.se_class if variant == "se" else e.de_class
        if cls is None:
            pytest.skip("no DE certificate for f4")
        b = error_bound(cls)
        vals = [bound_value(b, n) for n in range(b.n_min, 1001)]
        assert all(y < x for x, y in zip(vals, vals[1:]))

    @pytest.mark.parametrize("n", [1, 7, 64])
    def test_against_oracle(self, n):
        b = constant_se(example("f2").se_class)
        ref = oracles.constant_se(2, 1.5, 0.5, 1.5, PI / 4) * oracles.se_rate(PI / 4, 0.5, n)
        assert bound_value(b, n) == pytest.approx(float(ref), rel=1e-13)
        b = constant_de(example("f3").de_class)
        ref = oracles.constant_de(3, (PI / 4) ** (PI / 4), PI / 4, PI / 4, 1.5) * oracles.de_rate(1.5, PI / 4, n, 2)
        assert bound_value(b, n) == pytest.approx(float(ref), rel=1e-12)


class TestEnvelope:
    def test_e1_origin(self):
        assert envelope(CaseTag.SE_CASE1, 0, 2, 2) == 1.0

    def test_e3(self):
        assert envelope(CaseTag.SE_CASE3, 1, 1, 0) == 0.5

    def test_e2(self):
        assert envelope(CaseTag.SE_CASE2, 2, 0.5, 1.5) == pytest.approx(SQRT2_OVER_5, rel=1e-15)

    def test_poles(self):
        with pytest.raises(DomainError):
            envelope(CaseTag.SE_CASE1, 1j, 1, 1)
        with pytest.raises(DomainError):
            envelope(CaseTag.SE_CASE3, -1, 1, 1)

    def test_case1_sides(self):
        assert envelope(CaseTag.SE_CASE1, -1, 2, 4) == pytest.approx(0.5)
        assert envelope(CaseTag.SE_CASE1, 1, 2, 4) == pytest.approx(0.25)

    def test_de3_form(self):
        z = 2 + 0.5j
        assert envelope(CaseTag.DE_CASE3, z, 0.5, 0.5) == pytest.approx(abs(z**0.5 * math.e ** (-0.5 * z.real)))


CERTIFICATES = [
    ("f1", "se"), ("f1", "de"), ("f2", "se"), ("f2", "de"), ("f3", "se"), ("f3", "de"), ("f4", "se"),
]


@pytest.mark.parametrize("ex, variant", CERTIFICATES)
def test_envelope_certificates_on_grid(ex, variant):
    e = example(ex)
    cls = e.se_class if variant == "se" else e.de_class
    f = e.f if variant == "se" else e.de_target()
    grid = whole_line_grid() if ex in ("f1", "f4") else half_line_grid()
    if variant == "de" and e.rescale:
        grid = [t / e.rescale for t in grid]
    for t in grid:
        assert abs(f(t)) <= cls.K * envelope(cls.case, t, cls.alpha, cls.beta) * (1 + 1e-12)
