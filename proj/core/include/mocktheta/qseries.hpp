#ifndef MOCKTHETA_QSERIES_HPP
#define MOCKTHETA_QSERIES_HPP

#include "mocktheta/numerics.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mocktheta {

/**
 * Exact formal Fourier expansion sum_k c_k q^{k/denom} with rational
 * coefficients.
 *
 * Coefficients are exact for every exponent k/denom with k < trunc_index();
 * higher terms are unknown. Arithmetic rescales operands to the lcm of their
 * denominators and propagates the truncation bound pessimistically, so every
 * stored coefficient of a result is exact.
 */
class FourierExpansion {
public:
    /// Identically zero expansion known through all exponents < trunc_k/denom.
    FourierExpansion(long denom, long trunc_k);

    /// c * q^{exponent}, exact through exponents <= order.
    static FourierExpansion monomial(const Rational& c, const Rational& exponent,
                                     const Rational& order);

    /// Constant 1, exact through exponents <= order.
    static FourierExpansion one(const Rational& order);

    long denom() const { return denom_; }
    long trunc_index() const { return trunc_k_; }
    /// Largest exponent bound: coefficients are exact for exponents < this.
    Rational truncation_order() const { return Rational(trunc_k_, denom_); }

    /// Coefficient of q^{exponent}. Exact zeros included. Throws
    /// std::out_of_range if the exponent is at or beyond the truncation bound.
    Rational coeff(const Rational& exponent) const;

    /// Nonzero terms as (index, coefficient), sorted by index.
    const std::map<long, Rational>& terms() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Smallest exponent with nonzero coefficient. Throws if zero.
    Rational leading_exponent() const;
    Rational leading_coeff() const;

    FourierExpansion operator-() const;
    FourierExpansion operator+(const FourierExpansion& o) const;
    FourierExpansion operator-(const FourierExpansion& o) const;
    FourierExpansion operator*(const FourierExpansion& o) const;

    FourierExpansion scale(const Rational& c) const;

    /// Multiply by q^{e}.
    FourierExpansion shift(const Rational& e) const;

    /// Reciprocal series; requires a nonzero leading coefficient. The result
    /// is exact through exponents < truncation_order() - 2*leading_exponent().
    FourierExpansion inverse() const;

    FourierExpansion pow(long e) const;

    /// Substitute q -> q^m for integer m >= 1 (exponents multiply by m).
    FourierExpansion dilate(long m) const;

    /// Substitute q -> sign * q^{1/root}. sign = -1 requires integer
    /// exponents (denom 1), where it sends c_k to (-1)^k c_k.
    FourierExpansion root_substitute(long root, int sign) const;

    /// Drop all terms with exponent > order and lower the truncation bound
    /// to just above it.
    FourierExpansion truncate(const Rational& order) const;

    /// Numeric value sum c_k e(tau k/denom) at tau in the upper half-plane.
    /// Exact up to the truncation tail, which the caller bounds.
    Complex eval(const PrecisionContext& ctx, const Complex& tau) const;

    /// True when every coefficient times `multiple` is an integer.
    bool has_integer_coeffs(long multiple = 1) const;

private:
    long denom_;
    long trunc_k_;
    std::map<long, Rational> coeffs_;

    static FourierExpansion align(const FourierExpansion& f, long denom);
    void set(long k, const Rational& c);
};

/// Identifies one catalog series, e.g. {6, "sigma"} or {8, "U0"}.
struct SeriesId {
    int order;
    std::string name;
};

/**
 * Finite q-Pochhammer symbol (sign * q^{base_exponent}; q^{step})_n
 *   = prod_{m=0}^{n-1} (1 - sign * q^{base_exponent + m*step}),
 * exact through exponents <= order.
 */
FourierExpansion pochhammer(const Rational& base_exponent, int sign, const Rational& step,
                            long n, const Rational& order);

/// Infinite product version; factors with exponent > order are dropped.
FourierExpansion pochhammer_infinite(const Rational& base_exponent, int sign,
                                     const Rational& step, const Rational& order);

/**
 * Exact q-expansion of a catalog mock theta series through q^M.
 *
 * The catalog covers orders 2 (A, B, mu), 3 (f, phi, psi, chi, omega, nu),
 * 5 (f0, f1, F0, F1, psi0, psi1, phi0, phi1), 6 (phi, psi, rho, sigma,
 * lambda, mu, nu, xi), 7 (F0, F1, F2), 8 (S0, S1, T0, T1, U0, U1, V0, V1)
 * and 10 (phi, psi, X, chi). Definitions follow the standard survey
 * conventions; the transformation-law and coefficient tests downstream are
 * the arbiter of each transcription.
 *
 * All expansions have integer coefficients except the order-6 mu, whose
 * doubled coefficients are integers (it is defined as the average of the
 * even and odd partial sums of a non-convergent alternating series, giving
 * constant term 1/2).
 *
 * Throws std::invalid_argument for an unknown id.
 */
FourierExpansion mock_theta(const SeriesId& id, long M);

/// prod eta(m z)^e over the given (m, e) factors, including the fractional
/// q^{sum e*m/24} prefactor, exact through exponents <= M.
FourierExpansion eta_product(const std::vector<std::pair<long, long>>& factors, long M);

/// Normalized Eisenstein series E4 = 1 + 240 sum sigma_3(n) q^n through q^M.
FourierExpansion eisenstein_e4(long M);

/**
 * The weight-0 weakly holomorphic inputs to the trace formulas:
 * e61, e62, E6 (level 12), e3 (level 6), e51, e52, E5 (level 60),
 * e7 (level 42), e10 (level 10). Exact through q^M.
 */
FourierExpansion e_function(const std::string& tag, long M);

/// Level of the modular curve on which e_function(tag) lives.
long e_function_level(const std::string& tag);

/// Unary theta series theta_{N,a}(tau) = sum_{n == a (2N)} n q^{n^2/4N},
/// exact through exponents <= M (in units of q, not q^{1/4N}).
FourierExpansion theta_na_expansion(long N, long a, long M);

/// Outcome of comparing two expansions coefficient-by-coefficient.
struct IdentityCheck {
    bool ok;
    /// Set when ok is false: smallest exponent where the sides differ.
    std::optional<Rational> mismatch_exponent;
    Rational lhs_coeff;
    Rational rhs_coeff;
};

/// Exact comparison of all coefficients with exponent <= order. Both sides
/// must be truncated beyond `order`.
IdentityCheck verify_series_identity(const FourierExpansion& lhs, const FourierExpansion& rhs,
                                     const Rational& order);

}  // namespace mocktheta

#endif
