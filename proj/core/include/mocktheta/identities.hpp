#ifndef MOCKTHETA_IDENTITIES_HPP
#define MOCKTHETA_IDENTITIES_HPP

#include "mocktheta/qseries.hpp"
#include "mocktheta/traces.hpp"

#include <string>
#include <vector>

namespace mocktheta {

/**
 * One parity branch of a coefficient formula.  For applicable n the series
 * coefficient equals
 *
 *   c * i * (tr+ - tr-)(D(n), r) / sqrt(-D(n)),   D(n) = d0 + d1 n,
 *
 * where the traces run over Heegner orbits of the formula's level.  A branch
 * only makes sense while D(n) < 0; instances with D(n) >= 0 are reported as
 * degenerate and carry no claim.
 */
struct FormulaCase {
    int parity;  ///< -1 every n, 0 even n only, 1 odd n only
    Rational c;
    long d0;
    long d1;
    long r;
};

/// Trace formula for the coefficients of one catalog series.
struct CoefficientFormula {
    std::string name;       ///< stable lookup key, e.g. "sigma6" or "F0_5"
    SeriesId series;
    long multiplier;        ///< series-side scale (2 for the halved sixth order mu)
    std::string input_tag;  ///< weight-0 input handed to the trace engine
    long level;
    long n_min;
    std::vector<FormulaCase> cases;
};

/// All twenty-five coefficient formulas.
const std::vector<CoefficientFormula>& formula_table();

/// Lookup by name; throws std::invalid_argument for an unknown name.
const CoefficientFormula& formula(const std::string& name);

/// Everything measured for a single instance (one n of one formula).
struct CoefficientInstance {
    long n = 0;
    long disc = 0;
    long r = 0;
    bool degenerate = false;  ///< D(n) >= 0: no definite forms, skipped
    Rational series_side;     ///< exact coefficient, multiplier included
    Complex trace_side;
    Real gap;                 ///< |trace_side - series_side|, 0 when degenerate
};

CoefficientInstance check_coefficient(const PrecisionContext& ctx,
                                      const CoefficientFormula& f, long n);

/// Aggregate over n_min <= n <= n_max.
struct VerificationReport {
    std::string name;
    long checked = 0;
    long degenerate = 0;
    Real worst_gap;
    std::vector<CoefficientInstance> instances;
};

VerificationReport verify_range(const PrecisionContext& ctx, const std::string& name,
                                long n_max);

}  // namespace mocktheta

#endif
