#include "mocktheta/numerics.hpp"

#include <boost/math/constants/constants.hpp>

namespace mocktheta {

PrecisionContext::PrecisionContext(unsigned digits, unsigned guard_digits)
    : digits_(digits), guard_digits_(guard_digits) {
    if (digits_ < 10) {
        throw std::invalid_argument("PrecisionContext: need at least 10 digits");
    }
}

PrecisionContext::Scope::Scope(const PrecisionContext& ctx)
    : saved_(Real::default_precision()) {
    Real::default_precision(ctx.working_digits());
}

PrecisionContext::Scope::~Scope() {
    Real::default_precision(saved_);
}

Real PrecisionContext::tolerance() const {
    Scope guard(*this);
    Real t = pow(Real(10), -static_cast<int>(digits_));
    return t;
}

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real n = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / n;
    Real i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
}

Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
}

Complex operator-(const Complex& a) {
    return Complex(-a.re, -a.im);
}

Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Complex operator*(const Real& a, const Complex& b) {
    return Complex(a * b.re, a * b.im);
}

Complex operator*(const Complex& a, const Real& b) {
    return Complex(a.re * b, a.im * b);
}

Complex operator/(const Complex& a, const Complex& b) {
    Complex r = a;
    r /= b;
    return r;
}

Complex operator/(const Complex& a, const Real& b) {
    return Complex(a.re / b, a.im / b);
}

Complex conj(const Complex& z) {
    return Complex(z.re, -z.im);
}

Real abs_c(const Complex& z) {
    return sqrt(Real(z.re * z.re + z.im * z.im));
}

Real norm_c(const Complex& z) {
    return z.re * z.re + z.im * z.im;
}

Complex exp_c(const Complex& z) {
    Real m = exp(z.re);
    return Complex(m * cos(z.im), m * sin(z.im));
}

Complex inv_c(const Complex& z) {
    Real n = norm_c(z);
    return Complex(z.re / n, -z.im / n);
}

QuadScalar::QuadScalar(Rational r, long s) : rat(std::move(r)), root(s) {
    if (root <= 0) {
        throw std::invalid_argument("QuadScalar: root must be positive");
    }
    for (long f = 2; f * f <= root; ++f) {
        while (root % (f * f) == 0) {
            root /= f * f;
            rat *= f;
        }
    }
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
    return QuadScalar(rat * o.rat, root * o.root);
}

Real QuadScalar::value(const PrecisionContext& ctx) const {
    PrecisionContext::Scope guard(ctx);
    return to_real(rat) * sqrt(Real(root));
}

Real pi_value() {
    return boost::math::constants::pi<Real>();
}

Real to_real(const Rational& r) {
    return Real(numerator(r)) / Real(denominator(r));
}

Real to_real(const Integer& n) {
    return Real(n);
}

Real promote(const Real& x) {
    Real y = x;
    if (y.precision() < Real::default_precision()) {
        y.precision(Real::default_precision());
    }
    return y;
}

Complex promote(const Complex& z) {
    return Complex(promote(z.re), promote(z.im));
}

Complex e_of(const PrecisionContext& ctx, const Complex& z) {
    PrecisionContext::Scope guard(ctx);
    Real two_pi = 2 * pi_value();
    Real m = exp(-two_pi * promote(z.im));
    if (boost::math::isinf(m)) {
        throw std::overflow_error("e_of: exp(-2 pi Im z) overflows");
    }
    Real ang = two_pi * promote(z.re);
    return Complex(m * cos(ang), m * sin(ang));
}

Complex principal_sqrt(const PrecisionContext& ctx, const Complex& z) {
    PrecisionContext::Scope guard(ctx);
    Real re = promote(z.re);
    Real im = promote(z.im);
    if (im.is_zero()) {
        if (re.sign() >= 0) {
            return Complex(sqrt(re), Real(0));
        }
        return Complex(Real(0), sqrt(Real(-re)));
    }
    Real r = sqrt(Real(re * re + im * im));
    Real s = sqrt(Real((r + abs(re)) / 2));
    if (re.sign() >= 0) {
        return Complex(s, im / (2 * s));
    }
    Real u = abs(im) / (2 * s);
    return im.sign() > 0 ? Complex(u, s) : Complex(u, -s);
}

Real erfc(const PrecisionContext& ctx, const Real& x) {
    PrecisionContext::Scope guard(ctx);
    return boost::multiprecision::erfc(promote(x));
}

std::string format_real(const PrecisionContext& ctx, const Real& x) {
    return x.str(ctx.digits(), std::ios_base::scientific);
}

}  // namespace mocktheta
