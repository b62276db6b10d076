#pragma once

#include "mocktheta/numerics.hpp"
#include "mocktheta/quadforms.hpp"

#include <string>
#include <vector>

namespace mocktheta {

/// Dedekind eta. The point is reduced into the fundamental domain by
/// exact T/S steps with multiplier tracking (eta(z+1) = e(1/24) eta(z),
/// eta(-1/z) = sqrt(-iz) eta(z)), then the product converges with
/// |q| <= e^{-pi sqrt3}.
Complex eta_eval(const PrecisionContext& ctx, const Complex& z);

/// Normalized weight-4 Eisenstein series E_4 = 1 + 240 sum sigma_3(n) q^n,
/// reduced the same way with multiplier (cz+d)^4.
Complex e4_eval(const PrecisionContext& ctx, const Complex& z);

/// One weight-0 weakly holomorphic input to the trace machinery.
struct TraceFunction {
    std::string tag;  ///< e61, e62, E6, e3, e51, e52, E5, e7, e10, one
    long level;       ///< natural Gamma_0 level (1 for the constant)
    long pole_order;  ///< principal part starts at q^{-pole_order}
};

const TraceFunction& trace_function(const std::string& tag);
std::vector<std::string> trace_function_tags();

/// Value of the tagged function at z in the upper half plane.
Complex trace_function_eval(const PrecisionContext& ctx, const std::string& tag,
                            const Complex& z);

/// tr^{sign}_F(D, r) = sum F(z_Q)/omega_Q over the Gamma_0(level)-orbits of
/// definite forms [a, b, c] with level | a, sign(a) = sign, b^2-4ac = D and
/// b = r (mod 2 level). Throws std::domain_error unless D = r^2 (mod 4 level)
/// and the tag's natural level matches (the constant accepts any level).
/// D >= 0 is the degenerate empty set: returns 0.
Complex trace(const PrecisionContext& ctx, const std::string& tag, long level, long disc,
              long r, int sign);

struct TraceResult {
    Complex plus;
    Complex minus;
    Complex diff_over_sqrt;  ///< i/sqrt(-D) (plus - minus)
    long orbit_count_plus = 0;
    long orbit_count_minus = 0;
    Real certificate;        ///< gap against the doubled-digits recomputation
    bool degenerate = false; ///< D >= 0: empty trace set, all values zero
};

/// Both traces with the doubled-precision certificate.
TraceResult trace_full(const PrecisionContext& ctx, const std::string& tag, long level,
                       long disc, long r);

/// i/sqrt(-D) (tr^+ - tr^-), the combination every coefficient formula uses.
Complex trace_diff_over_sqrt(const PrecisionContext& ctx, const std::string& tag, long level,
                             long disc, long r);

}  // namespace mocktheta
