#ifndef MOCKTHETA_NUMERICS_HPP
#define MOCKTHETA_NUMERICS_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace mocktheta {

using Real = boost::multiprecision::mpfr_float;
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/**
 * Working-precision configuration for all numeric kernels.
 *
 * `digits` is the decimal precision results are certified to; `guard_digits`
 * extra digits absorb roundoff inside kernels. Every public kernel opens a
 * Scope so that freshly created values carry digits + guard_digits decimal
 * digits. Values must always be (re)derived from exact data (integers,
 * rationals, strings) under an active scope: a Real cached under a narrower
 * scope and reused under a wider one would silently poison accuracy.
 */
class PrecisionContext {
public:
    explicit PrecisionContext(unsigned digits = 60, unsigned guard_digits = 15);

    unsigned digits() const { return digits_; }
    unsigned guard_digits() const { return guard_digits_; }
    unsigned working_digits() const { return digits_ + guard_digits_; }

    /// Context with doubled certified digits (same guard), for the
    /// recompute-and-compare certification pass.
    PrecisionContext doubled() const { return PrecisionContext(2 * digits_, guard_digits_); }

    /// RAII guard: sets the thread's default mpfr precision to
    /// working_digits() and restores the previous value on destruction.
    class Scope {
    public:
        explicit Scope(const PrecisionContext& ctx);
        ~Scope();
        Scope(const Scope&) = delete;
        Scope& operator=(const Scope&) = delete;

    private:
        unsigned saved_;
    };

    Scope scope() const { return Scope(*this); }

    /// 10^-digits, the certified absolute tolerance.
    Real tolerance() const;

private:
    unsigned digits_;
    unsigned guard_digits_;
};

/// Complex number over the arbitrary-precision reals.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(0) {}
    explicit Complex(long r) : re(r), im(0) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

Complex conj(const Complex& z);
Real abs_c(const Complex& z);
Real norm_c(const Complex& z);
Complex exp_c(const Complex& z);
Complex inv_c(const Complex& z);

/// Exact scalar of the form rat * sqrt(root) with square-free root > 0.
/// Closed under multiplication; covers every component prefactor that
/// appears in the completion families (1, 2, sqrt2, sqrt8 = 2 sqrt2, ...).
struct QuadScalar {
    Rational rat;
    long root;

    QuadScalar() : rat(0), root(1) {}
    QuadScalar(Rational r, long s = 1);  // extracts square factors of s

    bool is_rational() const { return root == 1; }
    QuadScalar operator*(const QuadScalar& o) const;
    QuadScalar operator-() const { return QuadScalar(-rat, root); }

    /// Numeric value under the context's working precision.
    Real value(const PrecisionContext& ctx) const;
};

/// pi at the currently scoped working precision.
Real pi_value();

/// Convert exact data at the currently scoped working precision.
Real to_real(const Rational& r);
Real to_real(const Integer& n);

/// Copy of a caller-supplied value re-registered at the currently scoped
/// working precision. Raising an mpfr variable's precision is exact, so the
/// value is unchanged; without it, arithmetic touching the input first would
/// round at the (possibly much narrower) precision the caller stored it at.
Real promote(const Real& x);
Complex promote(const Complex& z);

/// e(z) = exp(2 pi i z). Throws std::overflow_error if the magnitude
/// exp(-2 pi Im z) leaves the representable exponent range.
Complex e_of(const PrecisionContext& ctx, const Complex& z);

/// Square root with the principal branch, arg(result) in (-pi/2, pi/2].
Complex principal_sqrt(const PrecisionContext& ctx, const Complex& z);

/// Complementary error function of a real argument.
Real erfc(const PrecisionContext& ctx, const Real& x);

/// Decimal string with the context's certified digit count.
std::string format_real(const PrecisionContext& ctx, const Real& x);

}  // namespace mocktheta

#endif
