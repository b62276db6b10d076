#include <doctest.h>

#include <mocktheta/qseries.hpp>

#include <vector>

using namespace mocktheta;

namespace {

Rational C(const FourierExpansion& f, long num, long den = 1) {
    return f.coeff(Rational(num, den));
}

}  // namespace

TEST_CASE("expansion arithmetic: product, inverse, dilate, shift") {
    // (1 - q) * sum q^n = 1  (geometric series)
    FourierExpansion geom(1, 41);
    FourierExpansion one_minus_q = FourierExpansion::one(40) - FourierExpansion::monomial(1, Rational(1), 40);
    FourierExpansion geo = one_minus_q.inverse();
    for (long k = 0; k <= 38; ++k) CHECK(C(geo, k) == 1);

    FourierExpansion prod = geo * one_minus_q;
    CHECK(C(prod, 0) == 1);
    for (long k = 1; k <= 37; ++k) CHECK(C(prod, k) == 0);

    FourierExpansion d = geo.dilate(3);
    CHECK(C(d, 6) == 1);
    CHECK(C(d, 7) == 0);

    FourierExpansion s = geo.shift(Rational(-1, 24));
    CHECK(s.denom() == 24);
    CHECK(C(s, -1, 24) == 1);
    CHECK(C(s, 23, 24) == 1);
}

TEST_CASE("pochhammer basics") {
    // (q; q)_3 = (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
    FourierExpansion p = pochhammer(Rational(1), +1, Rational(1), 3, 20);
    CHECK(C(p, 0) == 1);
    CHECK(C(p, 1) == -1);
    CHECK(C(p, 2) == -1);
    CHECK(C(p, 3) == 0);
    CHECK(C(p, 4) == 1);
    CHECK(C(p, 5) == 1);
    CHECK(C(p, 6) == -1);

    // (-q; q^2)_2 = (1+q)(1+q^3)
    FourierExpansion m = pochhammer(Rational(1), -1, Rational(2), 2, 20);
    CHECK(C(m, 0) == 1);
    CHECK(C(m, 1) == 1);
    CHECK(C(m, 3) == 1);
    CHECK(C(m, 4) == 1);
    CHECK(C(m, 2) == 0);

    // Infinite product Euler function via pentagonal numbers
    FourierExpansion e = pochhammer_infinite(Rational(1), +1, Rational(1), 30);
    CHECK(C(e, 0) == 1);
    CHECK(C(e, 1) == -1);
    CHECK(C(e, 2) == -1);
    CHECK(C(e, 5) == 1);
    CHECK(C(e, 7) == 1);
    CHECK(C(e, 12) == -1);
    CHECK(C(e, 15) == -1);
    CHECK(C(e, 22) == 1);
    CHECK(C(e, 26) == 1);
    CHECK(C(e, 3) == 0);
}

TEST_CASE("third order mock theta openings") {
    const long M = 24;
    // f(q) = 1 + q - 2q^2 + 3q^3 - 3q^4 + 3q^5 - 5q^6 + ...
    FourierExpansion f = mock_theta({3, "f"}, M);
    const std::vector<long> f_coeffs{1, 1, -2, 3, -3, 3, -5, 7, -6, 6, -10, 12, -11, 13, -17, 20};
    for (size_t n = 0; n < f_coeffs.size(); ++n) CHECK(C(f, static_cast<long>(n)) == f_coeffs[n]);

    // omega(q) = 1 + 2q + 3q^2 + 4q^3 + 6q^4 + 8q^5 + 10q^6 + 14q^7 + ...
    FourierExpansion om = mock_theta({3, "omega"}, M);
    const std::vector<long> om_coeffs{1, 2, 3, 4, 6, 8, 10, 14, 18, 22, 29, 36, 44, 56, 68, 82};
    for (size_t n = 0; n < om_coeffs.size(); ++n) CHECK(C(om, static_cast<long>(n)) == om_coeffs[n]);

    // phi(q) = 1 + q - q^3 + q^4 + q^5 - q^6 - 2q^7 + ...
    FourierExpansion ph = mock_theta({3, "phi"}, M);
    CHECK(C(ph, 0) == 1);
    CHECK(C(ph, 1) == 1);
    CHECK(C(ph, 2) == 0);
    CHECK(C(ph, 3) == -1);
    CHECK(C(ph, 4) == 1);

    // psi(q) = q + q^2 + q^3 + 2q^4 + 2q^5 + 2q^6 + 3q^7 + ...
    FourierExpansion ps = mock_theta({3, "psi"}, M);
    CHECK(C(ps, 0) == 0);
    CHECK(C(ps, 1) == 1);
    CHECK(C(ps, 2) == 1);
    CHECK(C(ps, 3) == 1);
    CHECK(C(ps, 4) == 2);
    CHECK(C(ps, 7) == 3);

    // nu(q) = 1 - q + 2q^2 - 2q^3 + 2q^4 + ...
    FourierExpansion nu = mock_theta({3, "nu"}, M);
    CHECK(C(nu, 0) == 1);
    CHECK(C(nu, 1) == -1);
    CHECK(C(nu, 2) == 2);
    CHECK(C(nu, 3) == -2);
    CHECK(C(nu, 4) == 2);
}

TEST_CASE("fifth order openings") {
    const long M = 16;
    // f0 = 1 + q/(1+q) + q^4/((1+q)(1+q^2)) + ... = 1 + q - q^2 + q^3 - q^6 + q^7 ...
    FourierExpansion f0 = mock_theta({5, "f0"}, M);
    CHECK(C(f0, 0) == 1);
    CHECK(C(f0, 1) == 1);
    CHECK(C(f0, 2) == -1);
    CHECK(C(f0, 3) == 1);
    CHECK(C(f0, 4) == 0);
    CHECK(C(f0, 5) == 0);
    CHECK(C(f0, 6) == -1);
    CHECK(C(f0, 7) == 1);

    // f1 = 1 + q^2/(1+q) + q^6/((1+q)(1+q^2)) + ... = 1 + q^2 - q^3 + q^4 - q^5 + 2q^6 ...
    FourierExpansion f1 = mock_theta({5, "f1"}, M);
    CHECK(C(f1, 0) == 1);
    CHECK(C(f1, 1) == 0);
    CHECK(C(f1, 2) == 1);
    CHECK(C(f1, 3) == -1);
    CHECK(C(f1, 6) == 2);
    CHECK(C(f1, 7) == -2);

    // F0 = 1 + q^2/(1-q) + q^8/((1-q)(1-q^3)) + ... = 1 + q^2 + q^3 + ... + 2q^8 ...
    FourierExpansion F0 = mock_theta({5, "F0"}, M);
    CHECK(C(F0, 0) == 1);
    CHECK(C(F0, 1) == 0);
    CHECK(C(F0, 2) == 1);
    CHECK(C(F0, 6) == 1);
    CHECK(C(F0, 8) == 2);

    // F1 = 1/(1-q) + q^4/((1-q)(1-q^3)) + ... = 1 + q + q^2 + q^3 + 2q^4 ...
    FourierExpansion F1 = mock_theta({5, "F1"}, M);
    CHECK(C(F1, 0) == 1);
    CHECK(C(F1, 1) == 1);
    CHECK(C(F1, 2) == 1);
    CHECK(C(F1, 3) == 1);
    CHECK(C(F1, 4) == 2);

    // psi0 = q + q^3(1+q) + q^6(1+q)(1+q^2) + ...
    FourierExpansion ps0 = mock_theta({5, "psi0"}, M);
    CHECK(C(ps0, 0) == 0);
    CHECK(C(ps0, 1) == 1);
    CHECK(C(ps0, 2) == 0);
    CHECK(C(ps0, 3) == 1);
    CHECK(C(ps0, 4) == 1);
    CHECK(C(ps0, 6) == 1);
    CHECK(C(ps0, 10) == 1);
    CHECK(C(ps0, 13) == 2);

    // psi1 = 1 + q(1+q) + q^3(1+q)(1+q^2) + ...
    FourierExpansion ps1 = mock_theta({5, "psi1"}, M);
    CHECK(C(ps1, 0) == 1);
    CHECK(C(ps1, 1) == 1);
    CHECK(C(ps1, 2) == 1);
    CHECK(C(ps1, 3) == 1);
    CHECK(C(ps1, 4) == 1);
    CHECK(C(ps1, 6) == 2);

    // phi0 = 1 + q(1+q) + q^4(1+q)(1+q^3) + ...
    FourierExpansion ph0 = mock_theta({5, "phi0"}, M);
    CHECK(C(ph0, 0) == 1);
    CHECK(C(ph0, 1) == 1);
    CHECK(C(ph0, 2) == 1);
    CHECK(C(ph0, 3) == 0);
    CHECK(C(ph0, 4) == 1);
    CHECK(C(ph0, 5) == 1);
    CHECK(C(ph0, 7) == 1);

    // phi1 = q + q^4(1+q) + q^9(1+q)(1+q^3) + ...
    FourierExpansion ph1 = mock_theta({5, "phi1"}, M);
    CHECK(C(ph1, 0) == 0);
    CHECK(C(ph1, 1) == 1);
    CHECK(C(ph1, 2) == 0);
    CHECK(C(ph1, 3) == 0);
    CHECK(C(ph1, 4) == 1);
    CHECK(C(ph1, 5) == 1);
    CHECK(C(ph1, 9) == 1);
}

TEST_CASE("catalog coefficients are integers through q^200") {
    const long M = 200;
    const std::vector<SeriesId> all = {
        {2, "A"},   {2, "B"},   {2, "mu"},   {3, "f"},    {3, "phi"},  {3, "psi"},
        {3, "chi"}, {3, "omega"}, {3, "nu"}, {5, "f0"},   {5, "f1"},   {5, "F0"},
        {5, "F1"},  {5, "psi0"}, {5, "psi1"}, {5, "phi0"}, {5, "phi1"}, {6, "phi"},
        {6, "psi"}, {6, "rho"}, {6, "sigma"}, {6, "lambda"}, {6, "nu"}, {6, "xi"},
        {7, "F0"},  {7, "F1"},  {7, "F2"},   {8, "S0"},   {8, "S1"},   {8, "T0"},
        {8, "T1"},  {8, "U0"},  {8, "U1"},   {8, "V0"},   {8, "V1"},   {10, "phi"},
        {10, "psi"}, {10, "X"}, {10, "chi"},
    };
    for (const auto& id : all) {
        FourierExpansion s = mock_theta(id, M);
        CHECK(s.denom() == 1);
        INFO("order ", id.order, " ", id.name);
        CHECK(s.has_integer_coeffs(1));
    }
    // mu (order 6) has half-integral coefficients; 2 mu is integral.
    FourierExpansion mu = mock_theta({6, "mu"}, M);
    CHECK(mu.coeff(Rational(0)) == Rational(1, 2));
    CHECK(mu.has_integer_coeffs(2));
}

TEST_CASE("eighth order U series split into S and T halves") {
    // U0(q) = S0(q^2) + q S1(q^2) and U1(q) = T0(q^2) + q T1(q^2):
    // the four sign variants collapse to these two by parity.
    const long M = 200;  // exponents up to q^200 in the outer variable
    FourierExpansion u0 = mock_theta({8, "U0"}, M);
    FourierExpansion u1 = mock_theta({8, "U1"}, M);
    FourierExpansion s0 = mock_theta({8, "S0"}, (M / 2) + 1).dilate(2);
    FourierExpansion s1 = mock_theta({8, "S1"}, (M / 2) + 1).dilate(2).shift(Rational(1));
    FourierExpansion t0 = mock_theta({8, "T0"}, (M / 2) + 1).dilate(2);
    FourierExpansion t1 = mock_theta({8, "T1"}, (M / 2) + 1).dilate(2).shift(Rational(1));

    auto even_check = verify_series_identity(u0, s0 + s1, Rational(M));
    INFO("U0 mismatch at q^", even_check.mismatch_exponent);
    CHECK(even_check.ok);
    auto odd_check = verify_series_identity(u1, t0 + t1, Rational(M));
    INFO("U1 mismatch at q^", odd_check.mismatch_exponent);
    CHECK(odd_check.ok);
}

TEST_CASE("eta products and the Dedekind eta expansion") {
    const long M = 60;
    // eta(tau) = q^{1/24} prod (1 - q^n)
    FourierExpansion eta = eta_product({{1, 1}}, M);
    CHECK(eta.denom() == 24);
    CHECK(C(eta, 1, 24) == 1);
    CHECK(C(eta, 25, 24) == -1);
    CHECK(C(eta, 49, 24) == -1);
    CHECK(C(eta, 121, 24) == 1);

    // eta(tau)^24: coefficients are the Ramanujan tau function
    FourierExpansion disc = eta_product({{1, 24}}, M);
    CHECK(C(disc, 1) == 1);
    CHECK(C(disc, 2) == -24);
    CHECK(C(disc, 3) == 252);
    CHECK(C(disc, 4) == -1472);
    CHECK(C(disc, 5) == 4830);
    CHECK(C(disc, 6) == -6048);
    CHECK(C(disc, 7) == -16744);

    // eta(2 tau) has denominator 12
    FourierExpansion eta2 = eta_product({{2, 1}}, M);
    CHECK(C(eta2, 2, 24) == 1);

    // quotient round trip: eta(tau) * eta(tau)^{-1} = 1
    FourierExpansion inv = eta_product({{1, -1}}, M);
    FourierExpansion prod = (eta * inv).truncate(Rational(M - 10));
    CHECK(C(prod, 0) == 1);
    for (long k = 1; k < M - 10; ++k) CHECK(C(prod, k) == 0);
}

TEST_CASE("eisenstein E4") {
    FourierExpansion e4 = eisenstein_e4(20);
    CHECK(C(e4, 0) == 1);
    CHECK(C(e4, 1) == 240);
    CHECK(C(e4, 2) == 2160);
    CHECK(C(e4, 3) == 6720);
    CHECK(C(e4, 4) == 17520);
    CHECK(C(e4, 5) == 30240);
}

TEST_CASE("weakly holomorphic inputs have the printed principal parts") {
    const long M = 12;
    // Level 12 pair: e61 = q^-1 + O(q), e62 = q^-2 + O(q^-1); E6 = e62 + 3 e61.
    FourierExpansion e61 = e_function("e61", M);
    CHECK(e61.leading_exponent() == Rational(-1));
    CHECK(e61.leading_coeff() == 1);

    FourierExpansion e62 = e_function("e62", M);
    CHECK(e62.leading_exponent() == Rational(-2));
    CHECK(e62.leading_coeff() == 1);

    FourierExpansion E6 = e_function("E6", M);
    CHECK(E6.leading_exponent() == Rational(-2));
    CHECK(E6.leading_coeff() == 1);
    // E6 is the combination e62 + 3 e61
    FourierExpansion e6_combo = e62 + e61.scale(Rational(3));
    CHECK(verify_series_identity(E6, e6_combo, Rational(M - 2)).ok);

    // Level 6 input for the third order family: principal part q^-1
    FourierExpansion e3 = e_function("e3", M);
    CHECK(e3.leading_exponent() == Rational(-1));
    CHECK(e3.leading_coeff() == 1);

    // Level 60 pair
    FourierExpansion e51 = e_function("e51", M);
    CHECK(e51.leading_exponent() == Rational(-1));
    CHECK(e51.leading_coeff() == 1);
    FourierExpansion e52 = e_function("e52", M);
    CHECK(e52.leading_exponent() == Rational(-2));
    CHECK(e52.leading_coeff() == 1);
    FourierExpansion E5 = e_function("E5", M);
    CHECK(E5.leading_exponent() == Rational(-2));
    CHECK(E5.leading_coeff() == -1);

    // Level 42 and level 10 inputs
    FourierExpansion e7 = e_function("e7", M);
    CHECK(e7.leading_exponent() == Rational(-1));
    CHECK(e7.leading_coeff() == 1);
    FourierExpansion e10 = e_function("e10", M);
    CHECK(e10.leading_exponent() == Rational(-1));
    CHECK(e10.leading_coeff() == 1);

    CHECK(e_function_level("e61") == 12);
    CHECK(e_function_level("e3") == 6);
    CHECK(e_function_level("e51") == 60);
    CHECK(e_function_level("e7") == 42);
    CHECK(e_function_level("e10") == 10);
}

TEST_CASE("unary theta expansions") {
    const long M = 30;
    // theta_{N,a} is odd in a: theta_{N,a} + theta_{N,-a} = 0, theta_{N,0} = 0.
    for (long N : {4L, 8L, 12L}) {
        FourierExpansion zero = theta_na_expansion(N, 0, M);
        CHECK(zero.is_zero());
        for (long a = 1; a < N; ++a) {
            FourierExpansion plus = theta_na_expansion(N, a, M);
            FourierExpansion minus = theta_na_expansion(N, 2 * N - a, M);
            CHECK((plus + minus).is_zero());
        }
    }
    // theta_{12,1} sums n q^{n^2/48} over n = 1 (mod 24): n = 1, 25, -23, 49, -47, ...
    FourierExpansion t = theta_na_expansion(12, 1, 60);
    CHECK(C(t, 1, 48) == 1);
    CHECK(C(t, 529, 48) == -23);
    CHECK(C(t, 625, 48) == 25);
    CHECK(C(t, 121, 48) == 0);   // n = +-11 is not 1 mod 24
    CHECK(C(t, 169, 48) == 0);
    CHECK(C(t, 2209, 48) == -47);
    CHECK(C(t, 2401, 48) == 49);
}

TEST_CASE("series identity verifier flags mismatches") {
    FourierExpansion a = FourierExpansion::one(30);
    FourierExpansion b = FourierExpansion::one(30) + FourierExpansion::monomial(1, Rational(7), 30);
    auto res = verify_series_identity(a, b, Rational(20));
    CHECK(!res.ok);
    CHECK(res.mismatch_exponent == Rational(7));
    CHECK(res.lhs_coeff == 0);
    CHECK(res.rhs_coeff == 1);

    auto good = verify_series_identity(a, FourierExpansion::one(25), Rational(20));
    CHECK(good.ok);
}

TEST_CASE("numeric evaluation matches naive summation") {
    PrecisionContext ctx(40, 10);
    PrecisionContext::Scope guard(ctx);
    const Complex tau{Real("0.31"), Real("0.87")};

    FourierExpansion f = mock_theta({3, "f"}, 40).shift(Rational(-1, 24));
    const Complex fast = f.eval(ctx, tau);
    Complex slow{Real(0), Real(0)};
    for (const auto& [k, c] : f.terms()) {
        const Complex term = e_of(ctx, Complex{tau.re * k / 24, tau.im * k / 24});
        slow += Complex{to_real(c), Real(0)} * term;
    }
    CHECK(abs_c(fast - slow) < ctx.tolerance());
}
