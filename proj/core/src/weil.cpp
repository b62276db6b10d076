#include "mocktheta/weil.hpp"

#include <numeric>
#include <stdexcept>

namespace mocktheta {

namespace {

Rational mod_one(Rational x) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const Integer num = numerator(x), den = denominator(x);
    Integer q = num / den;
    if (num % den != 0 && num < 0) --q;
    return x - Rational(q);
}

long norm_residue(long r, long mod) { return ((r % mod) + mod) % mod; }

}  // namespace

Rational DiscriminantModule::qform(long r) const { return mod_one(Rational(r * r, 4 * level)); }

Rational DiscriminantModule::bform(long r, long rp) const {
    return mod_one(Rational(r * rp, 2 * level));
}

RepMatrix::RepMatrix(long dim) : n(dim), entries(static_cast<size_t>(dim * dim)) {}

RepMatrix RepMatrix::operator*(const RepMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("RepMatrix: dimension mismatch");
    RepMatrix out(n);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) {
            const Complex& lik = at(i, k);
            if (lik.re.is_zero() && lik.im.is_zero()) continue;
            for (long j = 0; j < n; ++j) out.at(i, j) = out.at(i, j) + lik * o.at(k, j);
        }
    return out;
}

std::vector<Complex> RepMatrix::apply(const std::vector<Complex>& v) const {
    if (static_cast<long>(v.size()) != n) throw std::invalid_argument("RepMatrix: vector mismatch");
    std::vector<Complex> out(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out[i] = out[i] + at(i, j) * v[j];
    return out;
}

RepMatrix rho_T(const PrecisionContext& ctx, long level, bool dual) {
    PrecisionContext::Scope guard(ctx);
    const DiscriminantModule dm{level};
    RepMatrix m(dm.size());
    for (long r = 0; r < dm.size(); ++r) {
        Rational ph = dm.qform(r);
        if (dual) ph = -ph;
        m.at(r, r) = e_of(ctx, Complex{to_real(ph), Real(0)});
    }
    return m;
}

RepMatrix rho_S(const PrecisionContext& ctx, long level, bool dual) {
    PrecisionContext::Scope guard(ctx);
    const DiscriminantModule dm{level};
    RepMatrix m(dm.size());
    const Real scale = Real(1) / sqrt(Real(2 * level));
    const Rational eighth(dual ? 1 : -1, 8);
    const Complex front = e_of(ctx, Complex{to_real(eighth), Real(0)});
    for (long rp = 0; rp < dm.size(); ++rp)
        for (long r = 0; r < dm.size(); ++r) {
            Rational ph = dm.bform(r, rp);
            if (!dual) ph = -ph;
            const Complex ent = e_of(ctx, Complex{to_real(ph), Real(0)});
            m.at(rp, r) = front * ent * scale;
        }
    return m;
}

long sigma_q_residue(long level, long exact_divisor, long r) {
    const long q = exact_divisor;
    if (q <= 0 || level % q != 0 || std::gcd(q, level / q) != 1)
        throw std::invalid_argument("sigma_q_residue: not an exact divisor");
    const long qc = level / q;
    for (long t = 0; t < qc; ++t) {
        const long s = norm_residue(-r + 2 * q * t, 2 * level);
        if (norm_residue(s - r, 2 * qc) == 0) return s;
    }
    throw std::runtime_error("sigma_q_residue: CRT lift not found");
}

std::vector<long> sigma_Q(long level, long exact_divisor) {
    std::vector<long> perm(static_cast<size_t>(2 * level));
    for (long r = 0; r < 2 * level; ++r) perm[r] = sigma_q_residue(level, exact_divisor, r);
    return perm;
}

long exact_divisor_product(long q1, long q2, long level) {
    for (long q : {q1, q2})
        if (q <= 0 || level % q != 0 || std::gcd(q, level / q) != 1)
            throw std::invalid_argument("exact_divisor_product: not an exact divisor");
    const long g = std::gcd(q1, q2);
    return q1 * q2 / (g * g);
}

ALMatrix atkin_lehner_matrix(long level, long exact_divisor) {
    const long q = exact_divisor, qc = level / exact_divisor;
    if (q <= 0 || level % q != 0 || std::gcd(q, qc) != 1)
        throw std::invalid_argument("atkin_lehner_matrix: not an exact divisor");
    if (qc == 1) return ALMatrix{0, -1, 1, 0, level, q};  // Fricke [[0,-1],[N,0]]
    // Solve Q u + (N/Q) v = 1, u normalized into [0, N/Q); then
    // [[Q, -v], [N, Q u]] has determinant Q(Qu + (N/Q)v) = Q.
    long u = 0, v = 0;
    for (long t = 0; t < qc; ++t)
        if (norm_residue(q * t - 1, qc) == 0) {
            u = t;
            v = (1 - q * u) / qc;
            break;
        }
    if (q * u + qc * v != 1) throw std::runtime_error("atkin_lehner_matrix: gcd failed");
    return ALMatrix{1, -v, 1, u, level, q};
}

Complex atkin_lehner_slash(const PrecisionContext& ctx,
                           const std::function<Complex(const Complex&)>& f,
                           long level, long exact_divisor, const Complex& tau) {
    PrecisionContext::Scope guard(ctx);
    const ALMatrix w = atkin_lehner_matrix(level, exact_divisor);
    const Real a = Real(w.q) * w.alpha, b = Real(w.beta);
    const Real c = Real(level) * w.gamma, d = Real(w.q) * w.delta;
    const Complex num{a * tau.re + b, a * tau.im};
    const Complex den{c * tau.re + d, c * tau.im};
    return f(num * inv_c(den));
}

}  // namespace mocktheta
