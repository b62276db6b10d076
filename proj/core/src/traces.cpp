#include "mocktheta/traces.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace mocktheta {

namespace {

// Reduces z into |Re| <= 1/2, |z| >= 1 by T and S steps, accumulating the
// eta multiplier (value = eta_mult * eta(w)) and the Moebius pivot product
// (value = e4_mult * E4(w)): eta(z+n) = e(n/24) eta(z), eta(-1/z) =
// sqrt(-iz) eta(z), E4(-1/z) = z^4 E4(z).
struct ReducedPoint {
    Complex w;
    Complex eta_mult;
    Complex e4_mult;
};

ReducedPoint reduce_to_fundamental(const PrecisionContext& ctx, const Complex& z) {
    ReducedPoint out{promote(z), Complex(Real(1), Real(0)), Complex(Real(1), Real(0))};
    for (int step = 0; step < 4000; ++step) {
        long n = std::llround(out.w.re.convert_to<double>());
        if (n != 0) {
            // eta(w) = eta((w - n) + n) = e(n/24) eta(w - n)
            out.w.re -= n;
            long res = ((n % 24) + 24) % 24;
            out.eta_mult *= e_of(ctx, Complex(to_real(Rational(res, 24)), Real(0)));
        }
        if (norm_c(out.w) >= 1) return out;
        // w -> -1/w
        Complex piv = out.w;
        out.eta_mult = out.eta_mult * inv_c(principal_sqrt(ctx, Complex(piv.im, -piv.re)));
        Complex p2 = piv * piv;
        out.e4_mult = out.e4_mult * inv_c(p2 * p2);
        out.w = -inv_c(piv);
    }
    throw std::logic_error("modular reduction did not terminate");
}

long series_length(const PrecisionContext& ctx, double v) {
    double need = (ctx.working_digits() + 6) * std::numbers::ln10;
    return static_cast<long>(need / (2 * std::numbers::pi * v)) + 2;
}

// eta at a fundamental-domain point: e(w/24) prod (1 - q^n).
Complex eta_at_reduced(const PrecisionContext& ctx, const Complex& w) {
    long M = series_length(ctx, w.im.convert_to<double>());
    Complex q = e_of(ctx, w);
    Complex prod(Real(1), Real(0));
    Complex p = q;
    for (long n = 1; n <= M; ++n) {
        prod *= Complex(Real(1) - p.re, -p.im);
        p *= q;
    }
    return e_of(ctx, Complex(w.re / 24, w.im / 24)) * prod;
}

Complex e4_at_reduced(const PrecisionContext& ctx, const Complex& w) {
    long M = series_length(ctx, w.im.convert_to<double>());
    std::vector<long long> s3(M + 1, 0);
    for (long d = 1; d <= M; ++d) {
        long long d3 = static_cast<long long>(d) * d * d;
        for (long m = d; m <= M; m += d) s3[m] += d3;
    }
    Complex q = e_of(ctx, w);
    Complex acc(Real(1), Real(0));
    Complex p(Real(1), Real(0));
    for (long n = 1; n <= M; ++n) {
        p *= q;
        acc += to_real(Integer(240 * s3[n])) * p;
    }
    return acc;
}

Complex eta_product(const PrecisionContext& ctx, const Complex& z, std::initializer_list<long> ms) {
    Complex prod(Real(1), Real(0));
    for (long m : ms) prod *= eta_eval(ctx, Complex(z.re * m, z.im * m));
    return prod;
}

// The single eta quotient each family is built from.
Complex base_quotient(const PrecisionContext& ctx, const std::string& tag, const Complex& z) {
    if (tag == "e61" || tag == "e62" || tag == "E6")
        return eta_product(ctx, z, {1, 3}) * inv_c(eta_product(ctx, z, {4, 12}));
    if (tag == "e51" || tag == "e52" || tag == "E5")
        return eta_product(ctx, z, {1, 12, 15, 20}) * inv_c(eta_product(ctx, z, {3, 4, 5, 60}));
    if (tag == "e7")
        return eta_product(ctx, z, {1, 6, 14, 21}) * inv_c(eta_product(ctx, z, {2, 3, 7, 42}));
    if (tag == "e10")
        return eta_product(ctx, z, {1, 2}) * inv_c(eta_product(ctx, z, {5, 10}));
    throw std::invalid_argument("no eta quotient for tag " + tag);
}

const std::vector<TraceFunction>& catalog() {
    static const std::vector<TraceFunction> table = {
        {"one", 1, 0},  {"e61", 12, 1}, {"e62", 12, 2}, {"E6", 12, 2}, {"e3", 6, 1},
        {"e51", 60, 1}, {"e52", 60, 2}, {"E5", 60, 2},  {"e7", 42, 1}, {"e10", 10, 1},
    };
    return table;
}

}  // namespace

Complex eta_eval(const PrecisionContext& ctx, const Complex& z) {
    auto scope = ctx.scope();
    if (!(z.im > 0)) throw std::domain_error("eta needs a point in the upper half plane");
    auto red = reduce_to_fundamental(ctx, z);
    return red.eta_mult * eta_at_reduced(ctx, red.w);
}

Complex e4_eval(const PrecisionContext& ctx, const Complex& z) {
    auto scope = ctx.scope();
    if (!(z.im > 0)) throw std::domain_error("E4 needs a point in the upper half plane");
    auto red = reduce_to_fundamental(ctx, z);
    return red.e4_mult * e4_at_reduced(ctx, red.w);
}

const TraceFunction& trace_function(const std::string& tag) {
    for (const auto& tf : catalog())
        if (tf.tag == tag) return tf;
    throw std::invalid_argument("unknown trace function tag " + tag);
}

std::vector<std::string> trace_function_tags() {
    std::vector<std::string> tags;
    for (const auto& tf : catalog()) tags.push_back(tf.tag);
    return tags;
}

Complex trace_function_eval(const PrecisionContext& ctx, const std::string& tag,
                            const Complex& z_in) {
    auto scope = ctx.scope();
    Complex z = promote(z_in);
    if (tag == "one") return Complex(Real(1), Real(0));
    if (tag == "e3") {
        Complex num = e4_eval(ctx, z) + to_real(Integer(4)) * e4_eval(ctx, Complex(2 * z.re, 2 * z.im)) -
                      to_real(Integer(9)) * e4_eval(ctx, Complex(3 * z.re, 3 * z.im)) -
                      to_real(Integer(36)) * e4_eval(ctx, Complex(6 * z.re, 6 * z.im));
        Complex den = eta_product(ctx, z, {1, 2, 3, 6});
        return num * inv_c(den * den) * to_real(Rational(-1, 40));
    }
    Complex p = base_quotient(ctx, tag, z);
    Complex p2 = p * p;
    if (tag == "e61") return p2 - to_real(Integer(16)) * inv_c(p2);
    if (tag == "e62") {
        Complex p4 = p2 * p2;
        return p4 - to_real(Integer(256)) * inv_c(p4);
    }
    if (tag == "E6") {
        Complex p4 = p2 * p2;
        return (p4 - to_real(Integer(256)) * inv_c(p4)) +
               to_real(Integer(3)) * (p2 - to_real(Integer(16)) * inv_c(p2));
    }
    if (tag == "e51") return p - inv_c(p);
    if (tag == "e52") return p2 - inv_c(p2);
    if (tag == "E5") return -(p2 - inv_c(p2)) - (p - inv_c(p));
    if (tag == "e7") return p2 - inv_c(p2);
    if (tag == "e10") return p2 - to_real(Integer(25)) * inv_c(p2);
    throw std::invalid_argument("unknown trace function tag " + tag);
}

namespace {

// Orbit enumeration with the doubling certificate: the reduced-form lists at
// scan multipliers m and 2m must agree.
std::vector<HeegnerOrbit> stable_orbits(long level, long disc, long r, int sign) {
    for (long mult = 1; mult <= 8; mult *= 2) {
        auto a = enumerate_heegner(level, disc, r, sign, mult);
        auto b = enumerate_heegner(level, disc, r, sign, 2 * mult);
        bool same = a.size() == b.size();
        for (size_t i = 0; same && i < a.size(); ++i) same = a[i].reduced == b[i].reduced;
        if (same) return a;
    }
    throw std::runtime_error("Heegner orbit scan did not stabilize under doubling");
}

Complex trace_sum(const PrecisionContext& ctx, const std::string& tag, long level, long disc,
                  long r, int sign, long* orbit_count) {
    auto scope = ctx.scope();
    auto orbits = stable_orbits(level, disc, r, sign);
    if (orbit_count) *orbit_count = static_cast<long>(orbits.size());
    Complex acc(Real(0), Real(0));
    for (const auto& orbit : orbits) {
        Complex val = trace_function_eval(ctx, tag, orbit.cm(ctx));
        acc += val * to_real(Rational(1, orbit.omega));
    }
    return acc;
}

void check_trace_args(const std::string& tag, long level, long disc, long r) {
    const auto& tf = trace_function(tag);
    if (tf.level != 1 && tf.level != level)
        throw std::domain_error("tag " + tag + " lives on level " + std::to_string(tf.level));
    long m = 4 * level;
    if (((r * r - disc) % m + m) % m != 0)
        throw std::domain_error("discriminant fails the congruence D = r^2 (mod 4N)");
}

}  // namespace

Complex trace(const PrecisionContext& ctx, const std::string& tag, long level, long disc,
              long r, int sign) {
    auto scope = ctx.scope();
    check_trace_args(tag, level, disc, r);
    if (disc >= 0) return Complex(Real(0), Real(0));
    return trace_sum(ctx, tag, level, disc, r, sign, nullptr);
}

TraceResult trace_full(const PrecisionContext& ctx, const std::string& tag, long level,
                       long disc, long r) {
    auto scope = ctx.scope();
    check_trace_args(tag, level, disc, r);
    TraceResult res;
    res.certificate = Real(0);
    if (disc >= 0) {
        res.plus = res.minus = res.diff_over_sqrt = Complex(Real(0), Real(0));
        res.degenerate = true;
        return res;
    }
    res.plus = trace_sum(ctx, tag, level, disc, r, +1, &res.orbit_count_plus);
    res.minus = trace_sum(ctx, tag, level, disc, r, -1, &res.orbit_count_minus);
    res.diff_over_sqrt = Complex(Real(0), Real(1) / sqrt(to_real(Integer(-disc)))) *
                         (res.plus - res.minus);
    PrecisionContext wide = ctx.doubled();
    Complex plus2 = trace_sum(wide, tag, level, disc, r, +1, nullptr);
    Complex minus2 = trace_sum(wide, tag, level, disc, r, -1, nullptr);
    Real gap = abs_c(res.plus - plus2);
    Real gap2 = abs_c(res.minus - minus2);
    res.certificate = gap > gap2 ? gap : gap2;
    return res;
}

Complex trace_diff_over_sqrt(const PrecisionContext& ctx, const std::string& tag, long level,
                             long disc, long r) {
    auto scope = ctx.scope();
    check_trace_args(tag, level, disc, r);
    if (disc >= 0) return Complex(Real(0), Real(0));
    Complex plus = trace_sum(ctx, tag, level, disc, r, +1, nullptr);
    Complex minus = trace_sum(ctx, tag, level, disc, r, -1, nullptr);
    return Complex(Real(0), Real(1) / sqrt(to_real(Integer(-disc)))) * (plus - minus);
}

}  // namespace mocktheta
