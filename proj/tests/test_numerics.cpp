#include <doctest.h>

#include <mocktheta/numerics.hpp>

#include <boost/math/quadrature/tanh_sinh.hpp>

using namespace mocktheta;

namespace {

Real abs_err(const Complex& x, const Complex& y) { return abs_c(x - y); }

}  // namespace

TEST_CASE("precision context controls working digits") {
    PrecisionContext ctx(60, 15);
    CHECK(ctx.working_digits() == 75);
    CHECK(ctx.doubled().digits() == 120);
    CHECK(ctx.doubled().working_digits() == 135);
    PrecisionContext::Scope guard(ctx);
    CHECK(Real::default_precision() >= 75);
}

TEST_CASE("e_of agrees with exact roots of unity") {
    PrecisionContext ctx(60, 15);
    PrecisionContext::Scope guard(ctx);
    const Real tol = ctx.tolerance();

    // e(1/4) = i, e(1/2) = -1, e(1/8) = (1+i)/sqrt(2)
    const Complex quarter = e_of(ctx, Complex{to_real(Rational(1, 4)), Real(0)});
    CHECK(abs_err(quarter, Complex{Real(0), Real(1)}) < tol);
    const Complex half = e_of(ctx, Complex{to_real(Rational(1, 2)), Real(0)});
    CHECK(abs_err(half, Complex{Real(-1), Real(0)}) < tol);
    const Complex eighth = e_of(ctx, Complex{to_real(Rational(1, 8)), Real(0)});
    const Real is2 = 1 / sqrt(Real(2));
    CHECK(abs_err(eighth, Complex{is2, is2}) < tol);

    // e(tau) for tau = u + iv has modulus exp(-2 pi v)
    const Complex tau{Real("0.3"), Real("0.7")};
    const Complex q = e_of(ctx, tau);
    CHECK(abs(abs_c(q) - exp(-2 * pi_value() * tau.im)) < tol);
}

TEST_CASE("principal_sqrt squares back and picks the right branch") {
    PrecisionContext ctx(60, 15);
    PrecisionContext::Scope guard(ctx);
    const Real tol = ctx.tolerance();

    const Complex z{Real(-3), Real("0.25")};
    const Complex w = principal_sqrt(ctx, z);
    CHECK(abs_err(w * w, z) < tol);
    CHECK(w.re >= 0);

    // sqrt(-i tau) for tau in the upper half plane lands in Re > 0.
    const Complex tau{Real(2), Real("0.5")};
    const Complex mit{tau.im, -tau.re};
    CHECK(principal_sqrt(ctx, mit).re > 0);
}

TEST_CASE("erfc matches a tanh_sinh quadrature oracle") {
    PrecisionContext ctx(50, 10);
    PrecisionContext::Scope guard(ctx);
    const Real tol = ctx.tolerance();

    boost::math::quadrature::tanh_sinh<Real> integ(15, Real("1e-500"));
    const Real two_over_sqrt_pi = 2 / sqrt(pi_value());
    for (const char* xs : {"0.125", "0.5", "1.0", "2.5", "7.0"}) {
        const Real x(xs);
        // erfc(x) = 1 - 2/sqrt(pi) int_0^x exp(-t^2) dt
        const Real integral =
            integ.integrate([](const Real& t) { return Real(exp(-t * t)); }, Real(0), x);
        const Real expected = 1 - two_over_sqrt_pi * integral;
        const Real got = erfc(ctx, x);
        CHECK(abs(got - expected) < tol * expected + tol);
    }
    // erfc(-x) = 2 - erfc(x)
    CHECK(abs(erfc(ctx, Real(-2)) + erfc(ctx, Real(2)) - 2) < tol);
}

TEST_CASE("erfc is stable across a doubled-precision recomputation") {
    PrecisionContext lo(40, 10), hi = lo.doubled();
    for (const char* xs : {"0.3", "3.0", "11.5", "26.0"}) {
        PrecisionContext::Scope guard(lo);
        const Real x(xs);
        const Real a = erfc(lo, x);
        const Real b = erfc(hi, x);
        CHECK(abs(a - b) < lo.tolerance() * b);
    }
}

TEST_CASE("quad scalars normalize square factors") {
    QuadScalar s(Rational(1), 18);  // sqrt(18) = 3 sqrt(2)
    CHECK(s.root == 2);
    CHECK(s.rat == Rational(3));

    QuadScalar t = s * QuadScalar(Rational(1, 2), 2);  // 3 sqrt2 * sqrt2/2 = 3
    CHECK(t.is_rational());
    CHECK(t.rat == Rational(3));

    PrecisionContext ctx(30, 5);
    PrecisionContext::Scope guard(ctx);
    const Real v = QuadScalar(Rational(-2, 5), 5).value(ctx);
    CHECK(abs(v + 2 / sqrt(Real(5))) < ctx.tolerance());
}
