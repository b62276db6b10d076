#include "mocktheta/qseries.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mocktheta {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

long floor_rational(const Rational& r) {
    Integer n = numerator(r);
    Integer d = denominator(r);
    Integer q = n / d;
    if (n % d != 0 && n < 0) {
        q -= 1;
    }
    return static_cast<long>(q);
}

// Truncation index (exclusive) over denominator d for "exact through
// exponents <= order".
long trunc_index_for(const Rational& order, long d) {
    return floor_rational(order * d) + 1;
}

Complex pow_int(const Complex& base, long e) {
    if (e == 0) {
        return Complex(Real(1), Real(0));
    }
    Complex b = e > 0 ? base : inv_c(base);
    long n = e > 0 ? e : -e;
    Complex acc(Real(1), Real(0));
    while (n > 0) {
        if (n & 1) {
            acc *= b;
        }
        b *= b;
        n >>= 1;
    }
    return acc;
}

}  // namespace

FourierExpansion::FourierExpansion(long denom, long trunc_k) : denom_(denom), trunc_k_(trunc_k) {
    if (denom_ < 1) {
        throw std::invalid_argument("FourierExpansion: denominator must be positive");
    }
}

void FourierExpansion::set(long k, const Rational& c) {
    if (c.is_zero()) {
        coeffs_.erase(k);
    } else {
        coeffs_[k] = c;
    }
}

FourierExpansion FourierExpansion::monomial(const Rational& c, const Rational& exponent,
                                            const Rational& order) {
    long d = static_cast<long>(denominator(exponent));
    FourierExpansion f(d, trunc_index_for(order, d));
    long k = static_cast<long>(numerator(exponent));
    if (k < f.trunc_k_) {
        f.set(k, c);
    }
    return f;
}

FourierExpansion FourierExpansion::one(const Rational& order) {
    return monomial(Rational(1), Rational(0), order);
}

Rational FourierExpansion::coeff(const Rational& exponent) const {
    Rational scaled = exponent * denom_;
    if (denominator(scaled) != 1) {
        if (exponent * denom_ >= trunc_k_) {
            throw std::out_of_range("FourierExpansion::coeff: exponent beyond truncation");
        }
        return Rational(0);
    }
    long k = static_cast<long>(numerator(scaled));
    if (k >= trunc_k_) {
        throw std::out_of_range("FourierExpansion::coeff: exponent beyond truncation");
    }
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational FourierExpansion::leading_exponent() const {
    if (coeffs_.empty()) {
        throw std::logic_error("FourierExpansion::leading_exponent: zero series");
    }
    return Rational(coeffs_.begin()->first, denom_);
}

Rational FourierExpansion::leading_coeff() const {
    if (coeffs_.empty()) {
        throw std::logic_error("FourierExpansion::leading_coeff: zero series");
    }
    return coeffs_.begin()->second;
}

FourierExpansion FourierExpansion::align(const FourierExpansion& f, long denom) {
    if (denom == f.denom_) {
        return f;
    }
    long s = denom / f.denom_;
    FourierExpansion g(denom, f.trunc_k_ * s);
    for (const auto& [k, c] : f.coeffs_) {
        g.coeffs_.emplace(k * s, c);
    }
    return g;
}

FourierExpansion FourierExpansion::operator-() const {
    FourierExpansion f(denom_, trunc_k_);
    for (const auto& [k, c] : coeffs_) {
        f.coeffs_.emplace(k, -c);
    }
    return f;
}

FourierExpansion FourierExpansion::operator+(const FourierExpansion& o) const {
    long d = std::lcm(denom_, o.denom_);
    FourierExpansion a = align(*this, d);
    FourierExpansion b = align(o, d);
    FourierExpansion r(d, std::min(a.trunc_k_, b.trunc_k_));
    for (const auto& [k, c] : a.coeffs_) {
        if (k < r.trunc_k_) {
            r.coeffs_.emplace(k, c);
        }
    }
    for (const auto& [k, c] : b.coeffs_) {
        if (k < r.trunc_k_) {
            auto [it, fresh] = r.coeffs_.try_emplace(k, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) {
                    r.coeffs_.erase(it);
                }
            }
        }
    }
    return r;
}

FourierExpansion FourierExpansion::operator-(const FourierExpansion& o) const {
    return *this + (-o);
}

FourierExpansion FourierExpansion::operator*(const FourierExpansion& o) const {
    long d = std::lcm(denom_, o.denom_);
    FourierExpansion a = align(*this, d);
    FourierExpansion b = align(o, d);
    long amin = a.coeffs_.empty() ? a.trunc_k_ : a.coeffs_.begin()->first;
    long bmin = b.coeffs_.empty() ? b.trunc_k_ : b.coeffs_.begin()->first;
    FourierExpansion r(d, std::min(a.trunc_k_ + bmin, b.trunc_k_ + amin));
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            long k = ka + kb;
            if (k >= r.trunc_k_) {
                break;
            }
            auto [it, fresh] = r.coeffs_.try_emplace(k, Rational(ca * cb));
            if (!fresh) {
                it->second += ca * cb;
                if (it->second.is_zero()) {
                    r.coeffs_.erase(it);
                }
            }
        }
    }
    return r;
}

FourierExpansion FourierExpansion::scale(const Rational& c) const {
    FourierExpansion r(denom_, trunc_k_);
    if (!c.is_zero()) {
        for (const auto& [k, v] : coeffs_) {
            r.coeffs_.emplace(k, Rational(c * v));
        }
    }
    return r;
}

FourierExpansion FourierExpansion::shift(const Rational& e) const {
    long q = static_cast<long>(denominator(e));
    long d = std::lcm(denom_, q);
    FourierExpansion a = align(*this, d);
    long off = static_cast<long>(numerator(e)) * (d / q);
    FourierExpansion r(d, a.trunc_k_ + off);
    for (const auto& [k, c] : a.coeffs_) {
        r.coeffs_.emplace(k + off, c);
    }
    return r;
}

FourierExpansion FourierExpansion::inverse() const {
    if (coeffs_.empty()) {
        throw std::logic_error("FourierExpansion::inverse: zero series");
    }
    long k0 = coeffs_.begin()->first;
    long T = trunc_k_ - k0;
    std::vector<Rational> A(T, Rational(0));
    for (const auto& [k, c] : coeffs_) {
        A[k - k0] = c;
    }
    std::vector<Rational> B(T, Rational(0));
    B[0] = Rational(1) / A[0];
    for (long n = 1; n < T; ++n) {
        Rational s(0);
        for (long i = 1; i <= n; ++i) {
            if (!A[i].is_zero() && !B[n - i].is_zero()) {
                s += A[i] * B[n - i];
            }
        }
        B[n] = -s / A[0];
    }
    FourierExpansion r(denom_, trunc_k_ - 2 * k0);
    for (long n = 0; n < T; ++n) {
        if (!B[n].is_zero()) {
            r.coeffs_.emplace(n - k0, B[n]);
        }
    }
    return r;
}

FourierExpansion FourierExpansion::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    if (e == 0) {
        long kmin = coeffs_.empty() ? trunc_k_ : coeffs_.begin()->first;
        FourierExpansion r(denom_, trunc_k_ - kmin);
        r.set(0, Rational(1));
        return r;
    }
    std::optional<FourierExpansion> acc;
    FourierExpansion base = *this;
    long n = e;
    while (true) {
        if (n & 1) {
            acc = acc ? *acc * base : base;
        }
        n >>= 1;
        if (n == 0) {
            break;
        }
        base = base * base;
    }
    return *acc;
}

FourierExpansion FourierExpansion::dilate(long m) const {
    if (m < 1) {
        throw std::invalid_argument("FourierExpansion::dilate: m must be >= 1");
    }
    FourierExpansion r(denom_, m * (trunc_k_ - 1) + 1);
    for (const auto& [k, c] : coeffs_) {
        r.coeffs_.emplace(k * m, c);
    }
    return r;
}

FourierExpansion FourierExpansion::root_substitute(long root, int sign) const {
    if (root < 1) {
        throw std::invalid_argument("FourierExpansion::root_substitute: root must be >= 1");
    }
    if (sign < 0 && denom_ != 1) {
        throw std::invalid_argument(
            "FourierExpansion::root_substitute: sign flip needs integer exponents");
    }
    FourierExpansion r(denom_ * root, trunc_k_);
    for (const auto& [k, c] : coeffs_) {
        r.coeffs_.emplace(k, (sign < 0 && (k % 2 != 0)) ? -c : c);
    }
    return r;
}

FourierExpansion FourierExpansion::truncate(const Rational& order) const {
    long t = std::min(trunc_k_, trunc_index_for(order, denom_));
    FourierExpansion r(denom_, t);
    for (const auto& [k, c] : coeffs_) {
        if (k < t) {
            r.coeffs_.emplace(k, c);
        }
    }
    return r;
}

Complex FourierExpansion::eval(const PrecisionContext& ctx, const Complex& tau) const {
    auto guard = ctx.scope();
    if (coeffs_.empty()) {
        return Complex(Real(0), Real(0));
    }
    std::vector<std::pair<long, Rational>> t(coeffs_.begin(), coeffs_.end());
    long k0 = t.front().first;
    long g = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        g = std::gcd(g, t[i].first - k0);
    }
    Complex z = promote(tau);
    Complex w = e_of(ctx, Complex(z.re / denom_, z.im / denom_));
    if (g == 0) {
        return to_real(t.front().second) * pow_int(w, k0);
    }
    Complex y = pow_int(w, g);
    Complex acc(to_real(t.back().second), Real(0));
    for (std::size_t i = t.size() - 1; i-- > 0;) {
        long steps = (t[i + 1].first - t[i].first) / g;
        acc = acc * pow_int(y, steps);
        acc += Complex(to_real(t[i].second), Real(0));
    }
    return acc * pow_int(w, k0);
}

bool FourierExpansion::has_integer_coeffs(long multiple) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const auto& kv) {
        return denominator(Rational(kv.second * multiple)) == 1;
    });
}

FourierExpansion pochhammer(const Rational& base_exponent, int sign, const Rational& step,
                            long n, const Rational& order) {
    FourierExpansion acc = FourierExpansion::one(order);
    Rational e = base_exponent;
    for (long m = 0; m < n; ++m) {
        if (e <= order) {
            acc = acc - acc.shift(e).scale(Rational(sign)).truncate(order);
        }
        e += step;
    }
    return acc;
}

FourierExpansion pochhammer_infinite(const Rational& base_exponent, int sign,
                                     const Rational& step, const Rational& order) {
    if (base_exponent <= 0 || step <= 0) {
        throw std::invalid_argument("pochhammer_infinite: exponents must increase from > 0");
    }
    FourierExpansion acc = FourierExpansion::one(order);
    for (Rational e = base_exponent; e <= order; e += step) {
        acc = acc - acc.shift(e).scale(Rational(sign)).truncate(order);
    }
    return acc;
}

namespace {

using TermFn = std::function<FourierExpansion(long n, const Rational& order)>;

// Sum over n >= n0 of summands whose minimal exponent min_exp(n) is strictly
// increasing; stops once it exceeds M.
FourierExpansion sum_summands(long M, long n0, const std::function<Rational(long)>& min_exp,
                              const TermFn& term) {
    Rational order(M);
    FourierExpansion acc(1, M + 1);
    for (long n = n0; min_exp(n) <= order; ++n) {
        acc = acc + term(n, order).truncate(order);
    }
    return acc;
}

Rational half(long a) { return Rational(a, 2); }

FourierExpansion mock_theta_order2(const std::string& name, long M) {
    if (name == "A") {
        return sum_summands(
            M, 0, [](long n) { return Rational((n + 1) * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 2, n, o)
                    .shift(Rational((n + 1) * (n + 1)))
                    * pochhammer(1, 1, 2, n + 1, o).pow(-2);
            });
    }
    if (name == "B") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(2, -1, 2, n, o)
                    .shift(Rational(n * (n + 1)))
                    * pochhammer(1, 1, 2, n + 1, o).pow(-2);
            });
    }
    if (name == "mu") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, 1, 2, n, o)
                    .shift(Rational(n * n))
                    .scale(Rational(n % 2 == 0 ? 1 : -1))
                    * pochhammer(2, -1, 2, n, o).pow(-2);
            });
    }
    throw std::invalid_argument("mock_theta: unknown order-2 series " + name);
}

FourierExpansion mock_theta_order3(const std::string& name, long M) {
    if (name == "f") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, n, o).pow(-2).shift(Rational(n * n));
            });
    }
    if (name == "phi") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(2, -1, 2, n, o).inverse().shift(Rational(n * n));
            });
    }
    if (name == "psi") {
        return sum_summands(
            M, 1, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, 1, 2, n, o).inverse().shift(Rational(n * n));
            });
    }
    if (name == "chi") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, n, o).shift(Rational(n * n))
                    * pochhammer(3, -1, 3, n, o).inverse();
            });
    }
    if (name == "omega") {
        return sum_summands(
            M, 0, [](long n) { return Rational(2 * n * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, 1, 2, n + 1, o).pow(-2).shift(Rational(2 * n * (n + 1)));
            });
    }
    if (name == "nu") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 2, n + 1, o).inverse().shift(Rational(n * (n + 1)));
            });
    }
    throw std::invalid_argument("mock_theta: unknown order-3 series " + name);
}

FourierExpansion mock_theta_order5(const std::string& name, long M) {
    if (name == "f0") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, n, o).inverse().shift(Rational(n * n));
            });
    }
    if (name == "f1") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, n, o).inverse().shift(Rational(n * (n + 1)));
            });
    }
    if (name == "F0") {
        return sum_summands(
            M, 0, [](long n) { return Rational(2 * n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, 1, 2, n, o).inverse().shift(Rational(2 * n * n));
            });
    }
    if (name == "F1") {
        return sum_summands(
            M, 0, [](long n) { return Rational(2 * n * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, 1, 2, n + 1, o).inverse().shift(Rational(2 * n * (n + 1)));
            });
    }
    if (name == "psi0") {
        return sum_summands(
            M, 0, [](long n) { return half((n + 1) * (n + 2)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, n, o).shift(half((n + 1) * (n + 2)));
            });
    }
    if (name == "psi1") {
        return sum_summands(
            M, 0, [](long n) { return half(n * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, n, o).shift(half(n * (n + 1)));
            });
    }
    if (name == "phi0") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 2, n, o).shift(Rational(n * n));
            });
    }
    if (name == "phi1") {
        return sum_summands(
            M, 0, [](long n) { return Rational((n + 1) * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 2, n, o).shift(Rational((n + 1) * (n + 1)));
            });
    }
    throw std::invalid_argument("mock_theta: unknown order-5 series " + name);
}

// The alternating series sum (-1)^n a_n with a_n -> a_inf != 0 termwise; the
// order-6 mu is its average of even and odd partial sums, equal to
// a_inf/2 + sum (-1)^n (a_n - a_inf), which converges coefficient-wise.
FourierExpansion order6_mu(long M) {
    Rational order(M);
    FourierExpansion a_inf =
        pochhammer_infinite(1, 1, 2, order) * pochhammer_infinite(1, -1, 1, order).inverse();
    a_inf = a_inf.truncate(order);
    FourierExpansion acc = a_inf.scale(Rational(1, 2));
    FourierExpansion a_n = FourierExpansion::one(order);
    for (long n = 0; n <= M; ++n) {
        if (n > 0) {
            // a_n = a_{n-1} * (1 - q^{2n-1}) / (1 + q^n)
            a_n = a_n - a_n.shift(Rational(2 * n - 1)).truncate(order);
            a_n = (a_n * pochhammer(Rational(n), -1, 1, 1, order).inverse()).truncate(order);
        }
        FourierExpansion diff = a_n - a_inf;
        acc = acc + (n % 2 == 0 ? diff : -diff);
    }
    return acc;
}

FourierExpansion mock_theta_order6(const std::string& name, long M) {
    if (name == "phi") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, 1, 2, n, o)
                    .shift(Rational(n * n))
                    .scale(Rational(n % 2 == 0 ? 1 : -1))
                    * pochhammer(1, -1, 1, 2 * n, o).inverse();
            });
    }
    if (name == "psi") {
        return sum_summands(
            M, 0, [](long n) { return Rational((n + 1) * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, 1, 2, n, o)
                    .shift(Rational((n + 1) * (n + 1)))
                    .scale(Rational(n % 2 == 0 ? 1 : -1))
                    * pochhammer(1, -1, 1, 2 * n + 1, o).inverse();
            });
    }
    if (name == "rho") {
        return sum_summands(
            M, 0, [](long n) { return half(n * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, n, o).shift(half(n * (n + 1)))
                    * pochhammer(1, 1, 2, n + 1, o).inverse();
            });
    }
    if (name == "sigma") {
        return sum_summands(
            M, 0, [](long n) { return half((n + 1) * (n + 2)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, n, o).shift(half((n + 1) * (n + 2)))
                    * pochhammer(1, 1, 2, n + 1, o).inverse();
            });
    }
    if (name == "lambda") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n); },
            [](long n, const Rational& o) {
                return pochhammer(1, 1, 2, n, o)
                    .shift(Rational(n))
                    .scale(Rational(n % 2 == 0 ? 1 : -1))
                    * pochhammer(1, -1, 1, n, o).inverse();
            });
    }
    if (name == "mu") {
        return order6_mu(M);
    }
    if (name == "nu") {
        return sum_summands(
            M, 1, [](long n) { return Rational(n); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, 2 * n - 1, o).shift(Rational(n))
                    * pochhammer(1, 1, 2, n, o).inverse();
            });
    }
    if (name == "xi") {
        return sum_summands(
            M, 1, [](long n) { return Rational(n); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, 2 * n - 2, o).shift(Rational(n))
                    * pochhammer(1, 1, 2, n, o).inverse();
            });
    }
    throw std::invalid_argument("mock_theta: unknown order-6 series " + name);
}

FourierExpansion mock_theta_order7(const std::string& name, long M) {
    if (name == "F0") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(Rational(n + 1), 1, 1, n, o).inverse().shift(Rational(n * n));
            });
    }
    if (name == "F1") {
        return sum_summands(
            M, 1, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(Rational(n), 1, 1, n, o).inverse().shift(Rational(n * n));
            });
    }
    if (name == "F2") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(Rational(n + 1), 1, 1, n + 1, o)
                    .inverse()
                    .shift(Rational(n * (n + 1)));
            });
    }
    throw std::invalid_argument("mock_theta: unknown order-7 series " + name);
}

FourierExpansion mock_theta_order8(const std::string& name, long M) {
    if (name == "S0") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 2, n, o).shift(Rational(n * n))
                    * pochhammer(2, -1, 2, n, o).inverse();
            });
    }
    if (name == "S1") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * (n + 2)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 2, n, o).shift(Rational(n * (n + 2)))
                    * pochhammer(2, -1, 2, n, o).inverse();
            });
    }
    if (name == "T0") {
        return sum_summands(
            M, 0, [](long n) { return Rational((n + 1) * (n + 2)); },
            [](long n, const Rational& o) {
                return pochhammer(2, -1, 2, n, o).shift(Rational((n + 1) * (n + 2)))
                    * pochhammer(1, -1, 2, n + 1, o).inverse();
            });
    }
    if (name == "T1") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(2, -1, 2, n, o).shift(Rational(n * (n + 1)))
                    * pochhammer(1, -1, 2, n + 1, o).inverse();
            });
    }
    if (name == "U0") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 2, n, o).shift(Rational(n * n))
                    * pochhammer(4, -1, 4, n, o).inverse();
            });
    }
    if (name == "U1") {
        return sum_summands(
            M, 0, [](long n) { return Rational((n + 1) * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 2, n, o).shift(Rational((n + 1) * (n + 1)))
                    * pochhammer(2, -1, 4, n + 1, o).inverse();
            });
    }
    if (name == "V0") {
        FourierExpansion s = sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 2, n, o).shift(Rational(n * n))
                    * pochhammer(1, 1, 2, n, o).inverse();
            });
        return s.scale(Rational(2)) - FourierExpansion::one(Rational(M));
    }
    if (name == "V1") {
        return sum_summands(
            M, 0, [](long n) { return Rational((n + 1) * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 2, n, o).shift(Rational((n + 1) * (n + 1)))
                    * pochhammer(1, 1, 2, n + 1, o).inverse();
            });
    }
    throw std::invalid_argument("mock_theta: unknown order-8 series " + name);
}

FourierExpansion mock_theta_order10(const std::string& name, long M) {
    if (name == "phi") {
        return sum_summands(
            M, 0, [](long n) { return half(n * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, 1, 2, n + 1, o).inverse().shift(half(n * (n + 1)));
            });
    }
    if (name == "psi") {
        return sum_summands(
            M, 0, [](long n) { return half((n + 1) * (n + 2)); },
            [](long n, const Rational& o) {
                return pochhammer(1, 1, 2, n + 1, o).inverse().shift(half((n + 1) * (n + 2)));
            });
    }
    if (name == "X") {
        return sum_summands(
            M, 0, [](long n) { return Rational(n * n); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, 2 * n, o)
                    .inverse()
                    .shift(Rational(n * n))
                    .scale(Rational(n % 2 == 0 ? 1 : -1));
            });
    }
    if (name == "chi") {
        return sum_summands(
            M, 0, [](long n) { return Rational((n + 1) * (n + 1)); },
            [](long n, const Rational& o) {
                return pochhammer(1, -1, 1, 2 * n + 1, o)
                    .inverse()
                    .shift(Rational((n + 1) * (n + 1)))
                    .scale(Rational(n % 2 == 0 ? 1 : -1));
            });
    }
    throw std::invalid_argument("mock_theta: unknown order-10 series " + name);
}

}  // namespace

FourierExpansion mock_theta(const SeriesId& id, long M) {
    switch (id.order) {
        case 2:
            return mock_theta_order2(id.name, M);
        case 3:
            return mock_theta_order3(id.name, M);
        case 5:
            return mock_theta_order5(id.name, M);
        case 6:
            return mock_theta_order6(id.name, M);
        case 7:
            return mock_theta_order7(id.name, M);
        case 8:
            return mock_theta_order8(id.name, M);
        case 10:
            return mock_theta_order10(id.name, M);
        default:
            throw std::invalid_argument("mock_theta: unknown order " + std::to_string(id.order));
    }
}

FourierExpansion eta_product(const std::vector<std::pair<long, long>>& factors, long M) {
    Rational prefactor(0);
    for (const auto& [m, e] : factors) {
        prefactor += Rational(m * e, 24);
    }
    long series_order = M - floor_rational(prefactor) + 1;
    Rational order(series_order);
    FourierExpansion acc = FourierExpansion::one(order);
    for (const auto& [m, e] : factors) {
        // Euler product of eta(m z) without its q^{m/24} prefactor, via the
        // pentagonal number expansion of (q^m; q^m)_infinity.
        FourierExpansion pent(1, series_order + 1);
        for (long j = 0;; ++j) {
            long k1 = m * j * (3 * j - 1) / 2;
            long k2 = m * j * (3 * j + 1) / 2;
            if (k1 > series_order && k2 > series_order) {
                break;
            }
            Rational s(j % 2 == 0 ? 1 : -1);
            if (k1 <= series_order) {
                pent = pent + FourierExpansion::monomial(s, Rational(k1), order);
            }
            if (j > 0 && k2 <= series_order) {
                pent = pent + FourierExpansion::monomial(s, Rational(k2), order);
            }
        }
        acc = (acc * pent.pow(e)).truncate(order);
    }
    return acc.shift(prefactor).truncate(Rational(M));
}

FourierExpansion eisenstein_e4(long M) {
    std::vector<Integer> sigma3(static_cast<std::size_t>(M) + 1, Integer(0));
    for (long d = 1; d <= M; ++d) {
        Integer d3 = Integer(d) * d * d;
        for (long n = d; n <= M; n += d) {
            sigma3[n] += d3;
        }
    }
    FourierExpansion r(1, M + 1);
    r = r + FourierExpansion::one(Rational(M));
    for (long n = 1; n <= M; ++n) {
        r = r + FourierExpansion::monomial(Rational(240 * sigma3[n]), Rational(n), Rational(M));
    }
    return r;
}

namespace {

FourierExpansion eta_quotient_pair_difference(const std::vector<std::pair<long, long>>& top,
                                              long power, const Rational& c, long M) {
    std::vector<std::pair<long, long>> direct;
    std::vector<std::pair<long, long>> flipped;
    for (const auto& [m, e] : top) {
        direct.emplace_back(m, e * power);
        flipped.emplace_back(m, -e * power);
    }
    return eta_product(direct, M) - eta_product(flipped, M).scale(c);
}

}  // namespace

FourierExpansion e_function(const std::string& tag, long M) {
    const std::vector<std::pair<long, long>> q6 = {{1, 1}, {3, 1}, {4, -1}, {12, -1}};
    const std::vector<std::pair<long, long>> q5 = {{1, 1},  {12, 1}, {15, 1}, {20, 1},
                                                   {3, -1}, {4, -1}, {5, -1}, {60, -1}};
    const std::vector<std::pair<long, long>> q7 = {{1, 1},  {6, 1},  {14, 1}, {21, 1},
                                                   {2, -1}, {3, -1}, {7, -1}, {42, -1}};
    const std::vector<std::pair<long, long>> q10 = {{1, 1}, {2, 1}, {5, -1}, {10, -1}};
    if (tag == "e61") {
        return eta_quotient_pair_difference(q6, 2, Rational(16), M);
    }
    if (tag == "e62") {
        return eta_quotient_pair_difference(q6, 4, Rational(256), M);
    }
    if (tag == "E6") {
        return e_function("e62", M) + e_function("e61", M).scale(Rational(3));
    }
    if (tag == "e3") {
        long Ms = M + 6;  // slack so every dilated E4 is exact through M + 1
        FourierExpansion num = eisenstein_e4(Ms)
            + eisenstein_e4(Ms / 2).dilate(2).scale(Rational(4))
            - eisenstein_e4(Ms / 3).dilate(3).scale(Rational(9))
            - eisenstein_e4(Ms / 6).dilate(6).scale(Rational(36));
        FourierExpansion den = eta_product({{1, 2}, {2, 2}, {3, 2}, {6, 2}}, Ms);
        return (num.truncate(Rational(M + 1)) * den.inverse())
            .scale(Rational(-1, 40))
            .truncate(Rational(M));
    }
    if (tag == "e51") {
        return eta_quotient_pair_difference(q5, 1, Rational(1), M);
    }
    if (tag == "e52") {
        return eta_quotient_pair_difference(q5, 2, Rational(1), M);
    }
    if (tag == "E5") {
        return -(e_function("e52", M) + e_function("e51", M));
    }
    if (tag == "e7") {
        return eta_quotient_pair_difference(q7, 2, Rational(1), M);
    }
    if (tag == "e10") {
        return eta_quotient_pair_difference(q10, 2, Rational(25), M);
    }
    throw std::invalid_argument("e_function: unknown tag " + tag);
}

long e_function_level(const std::string& tag) {
    if (tag == "e61" || tag == "e62" || tag == "E6") {
        return 12;
    }
    if (tag == "e3") {
        return 6;
    }
    if (tag == "e51" || tag == "e52" || tag == "E5") {
        return 60;
    }
    if (tag == "e7") {
        return 42;
    }
    if (tag == "e10") {
        return 10;
    }
    throw std::invalid_argument("e_function_level: unknown tag " + tag);
}

FourierExpansion theta_na_expansion(long N, long a, long M) {
    long d = 4 * N;
    long bound = 0;
    while ((bound + 1) * (bound + 1) <= M * d) {
        ++bound;
    }
    FourierExpansion r(d, M * d + 1);
    // all n == a (mod 2N) with |n| <= bound, i.e. n^2/4N <= M
    for (long n = a - 2 * N * floor_div(a + bound, 2 * N); n <= bound; n += 2 * N) {
        if (n != 0) {
            r = r + FourierExpansion::monomial(Rational(n), Rational(n * n, d), Rational(M));
        }
    }
    return r;
}

IdentityCheck verify_series_identity(const FourierExpansion& lhs, const FourierExpansion& rhs,
                                     const Rational& order) {
    if (lhs.truncation_order() <= order || rhs.truncation_order() <= order) {
        throw std::invalid_argument("verify_series_identity: operands not exact through order");
    }
    FourierExpansion diff = (lhs - rhs).truncate(order);
    if (diff.is_zero()) {
        return {true, std::nullopt, Rational(0), Rational(0)};
    }
    Rational at = diff.leading_exponent();
    return {false, at, lhs.coeff(at), rhs.coeff(at)};
}

}  // namespace mocktheta
