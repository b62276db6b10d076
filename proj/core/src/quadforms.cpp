#include "mocktheta/quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mocktheta {

Mat2 Mat2::operator*(const Mat2& o) const {
    return {p * o.p + q * o.r, p * o.q + q * o.s,
            r * o.p + s * o.r, r * o.q + s * o.s};
}

Mat2 Mat2::inverse_unimodular() const {
    const long d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("Mat2: not unimodular");
    return {d * s, -d * q, -d * r, d * p};
}

BinaryQF BinaryQF::apply(const Mat2& g) const {
    const long a2 = a * g.p * g.p + b * g.p * g.r + c * g.r * g.r;
    const long b2 = 2 * a * g.p * g.q + b * (g.p * g.s + g.q * g.r) + 2 * c * g.r * g.s;
    const long c2 = a * g.q * g.q + b * g.q * g.s + c * g.s * g.s;
    return {a2, b2, c2};
}

namespace {

long floor_div_l(long x, long y) {
    long q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

bool is_reduced_pos(const BinaryQF& f) {
    if (!(-f.a < f.b && f.b <= f.a && f.a <= f.c)) return false;
    if (f.a == f.c && f.b < 0) return false;
    return true;
}

std::pair<BinaryQF, Mat2> reduce_positive(BinaryQF f) {
    Mat2 g = Mat2::identity();
    // Translate b into (-a, a], swap when a > c, repeat.
    for (int guard = 0; guard < 1024; ++guard) {
        if (is_reduced_pos(f)) return {f, g};
        const long k = -floor_div_l(f.b + f.a, 2 * f.a);  // b + 2ka in (-a, a]
        if (k != 0) {
            const Mat2 t{1, k, 0, 1};
            f = f.apply(t);
            g = g * t;
            continue;
        }
        if (f.a > f.c || (f.a == f.c && f.b < 0)) {
            const Mat2 s{0, -1, 1, 0};
            f = f.apply(s);
            g = g * s;
            continue;
        }
        if (f.b == -f.a) {  // normalize boundary b = -a to b = a
            const Mat2 t{1, 1, 0, 1};
            f = f.apply(t);
            g = g * t;
            continue;
        }
        break;
    }
    throw std::runtime_error("sl2_reduce: reduction did not terminate");
}

}  // namespace

std::pair<BinaryQF, Mat2> sl2_reduce(const BinaryQF& form) {
    if (form.disc() >= 0) throw std::invalid_argument("sl2_reduce: form must be definite");
    if (form.positive_definite()) return reduce_positive(form);
    auto [red, g] = reduce_positive(form.negated());
    return {red.negated(), g};
}

std::vector<Mat2> automorphs(const BinaryQF& form) {
    if (form.disc() >= 0) throw std::invalid_argument("automorphs: form must be definite");
    auto [red, g] = sl2_reduce(form);
    const Mat2 ginv = g.inverse_unimodular();
    // Automorphs of a reduced definite form have entries in {-1, 0, 1};
    // search a slightly larger box and conjugate back.
    std::vector<Mat2> out;
    for (long p = -2; p <= 2; ++p)
        for (long q = -2; q <= 2; ++q)
            for (long r = -2; r <= 2; ++r)
                for (long s = -2; s <= 2; ++s) {
                    const Mat2 m{p, q, r, s};
                    if (m.det() != 1) continue;
                    if (red.apply(m) == red) out.push_back(g * m * ginv);
                }
    return out;
}

std::optional<Mat2> gamma0_equivalent(const BinaryQF& lhs, const BinaryQF& rhs, long level) {
    if (lhs.disc() != rhs.disc())
        throw std::invalid_argument("gamma0_equivalent: discriminants differ");
    if (lhs.positive_definite() != rhs.positive_definite()) return std::nullopt;
    auto [lred, lg] = sl2_reduce(lhs);
    auto [rred, rg] = sl2_reduce(rhs);
    if (!(lred == rred)) return std::nullopt;
    const Mat2 rginv = rg.inverse_unimodular();
    for (const Mat2& s : automorphs(lred)) {
        const Mat2 g = lg * s * rginv;
        if (g.r % level == 0) return g;
    }
    return std::nullopt;
}

long stabilizer_weight(const BinaryQF& form, long level) {
    long inside = 0;
    for (const Mat2& m : automorphs(form))
        if (m.r % level == 0) ++inside;
    if (inside % 2 != 0) throw std::runtime_error("stabilizer_weight: odd stabilizer");
    return inside / 2;
}

Complex HeegnerOrbit::cm(const PrecisionContext& ctx) const { return cm_point(ctx, rep); }

std::vector<long> square_roots_mod(long disc, long level) {
    std::vector<long> roots;
    const long m = 4 * level;
    for (long r = 0; r < 2 * level; ++r) {
        long d = (disc % m + m) % m;
        if ((r * r) % m == d) roots.push_back(r);
    }
    return roots;
}

namespace {

std::vector<HeegnerOrbit> scan_heegner(long level, long disc, long r, int sign, long cap) {
    std::vector<HeegnerOrbit> orbits;
    for (long j = 1; j <= cap; ++j) {
        const long a = sign * level * j;
        const long abs2a = 2 * level * j;
        // b = r (mod 2N); translations by T^k shift b by 2a while staying in
        // the congruence class, so one window of length 2|a| suffices.
        for (long b = r; b < r + abs2a; b += 2 * level) {
            const long num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            const BinaryQF cand{a, b, num / (4 * a)};
            bool known = false;
            for (const auto& orb : orbits) {
                if (gamma0_equivalent(orb.rep, cand, level)) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                HeegnerOrbit orb;
                orb.rep = cand;
                orb.reduced = sl2_reduce(cand).first;
                orb.omega = stabilizer_weight(cand, level);
                orbits.push_back(orb);
            }
        }
    }
    return orbits;
}

}  // namespace

std::vector<HeegnerOrbit> enumerate_heegner(long level, long disc, long r, int sign,
                                            long scan_multiplier) {
    if (disc >= 0) throw std::invalid_argument("enumerate_heegner: discriminant must be negative");
    if (sign != 1 && sign != -1) throw std::invalid_argument("enumerate_heegner: sign must be +-1");
    const long m = 4 * level;
    if (((r * r - disc) % m + m) % m != 0)
        throw std::invalid_argument("enumerate_heegner: r^2 != D mod 4N");

    // The orbit of minimal |a| need not satisfy |a| <= N sqrt(|D|/3); keep
    // doubling the scanned range until a full doubling finds nothing new.
    long cap = scan_multiplier *
               (static_cast<long>(std::ceil(std::sqrt(static_cast<double>(-disc) / 3.0))) + 1);
    std::vector<HeegnerOrbit> orbits = scan_heegner(level, disc, r, sign, cap);
    bool stable = false;
    for (int round = 0; round < 10 && !stable; ++round) {
        std::vector<HeegnerOrbit> wider = scan_heegner(level, disc, r, sign, 2 * cap);
        stable = wider.size() == orbits.size();
        orbits = std::move(wider);
        cap *= 2;
    }
    if (!stable) throw std::runtime_error("enumerate_heegner: orbit count did not stabilize");

    std::sort(orbits.begin(), orbits.end(), [](const HeegnerOrbit& x, const HeegnerOrbit& y) {
        return std::tie(x.reduced.a, x.reduced.b, x.reduced.c, x.rep.a, x.rep.b, x.rep.c) <
               std::tie(y.reduced.a, y.reduced.b, y.reduced.c, y.rep.a, y.rep.b, y.rep.c);
    });
    return orbits;
}

Complex cm_point(const PrecisionContext& ctx, const BinaryQF& form) {
    if (form.disc() >= 0) throw std::invalid_argument("cm_point: form must be definite");
    PrecisionContext::Scope guard(ctx);
    const Real root = sqrt(Real(-form.disc()));
    const Real den = 2 * Real(form.a);
    // For a < 0 the root with positive imaginary part is (-b - i sqrt|D|)/2a.
    const Real sgn = form.a > 0 ? Real(1) : Real(-1);
    return Complex{Real(-form.b) / den, sgn * root / den};
}

std::string orbits_to_json(const PrecisionContext& ctx, const std::vector<HeegnerOrbit>& orbits) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& orb : orbits) {
        const Complex z = orb.cm(ctx);
        if (!first) os << ",";
        first = false;
        os << "{\"a\":" << orb.rep.a << ",\"b\":" << orb.rep.b << ",\"c\":" << orb.rep.c
           << ",\"omega\":" << orb.omega
           << ",\"cm_re\":\"" << format_real(ctx, z.re) << "\""
           << ",\"cm_im\":\"" << format_real(ctx, z.im) << "\"}";
    }
    os << "]";
    return os.str();
}

}  // namespace mocktheta
