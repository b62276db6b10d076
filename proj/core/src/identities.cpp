#include "mocktheta/identities.hpp"

#include <stdexcept>

namespace mocktheta {

namespace {

constexpr int kAll = -1;
constexpr int kEven = 0;
constexpr int kOdd = 1;

std::vector<CoefficientFormula> build_table() {
    auto one_case = [](const Rational& c, long d0, long d1, long r) {
        return std::vector<FormulaCase>{{kAll, c, d0, d1, r}};
    };
    auto split = [](const Rational& ce, long d0e, long d1e, long re, const Rational& co,
                    long d0o, long d1o, long ro) {
        return std::vector<FormulaCase>{{kEven, ce, d0e, d1e, re}, {kOdd, co, d0o, d1o, ro}};
    };
    std::vector<CoefficientFormula> t;
    // third order, level 6
    t.push_back({"f3", {3, "f"}, 1, "e3", 6, 1, one_case(Rational(1, 2), 1, -24, 1)});
    t.push_back({"omega3", {3, "omega"}, 1, "e3", 6, 1,
                 split(Rational(-1, 8), -8, -12, 4, Rational(-1, 8), -8, -12, 2)});
    // fifth order, level 60; the first family reads off the combined input,
    // the second one the simple quotient
    t.push_back({"f0_5", {5, "f0"}, 1, "E5", 60, 1, one_case(Rational(-1, 2), 4, -240, 2)});
    t.push_back({"f1_5", {5, "f1"}, 1, "E5", 60, 1, one_case(Rational(-1, 2), -44, -240, 14)});
    t.push_back({"F0_5", {5, "F0"}, 1, "E5", 60, 1,
                 split(Rational(1, 4), 1, -120, 1, Rational(1, 4), 1, -120, 11)});
    t.push_back({"F1_5", {5, "F1"}, 1, "E5", 60, 1,
                 split(Rational(1, 4), -71, -120, 13, Rational(1, 4), -71, -120, 7)});
    t.push_back({"psi0_5", {5, "psi0"}, 1, "e51", 60, 1, one_case(Rational(-1, 2), 4, -240, 2)});
    t.push_back(
        {"psi1_5", {5, "psi1"}, 1, "e51", 60, 1, one_case(Rational(-1, 2), -44, -240, 14)});
    t.push_back({"phi0_5", {5, "phi0"}, 1, "e51", 60, 1,
                 split(Rational(1, 2), 1, -120, 1, Rational(-1, 2), 1, -120, 11)});
    t.push_back({"phi1_5", {5, "phi1"}, 1, "e51", 60, 1,
                 split(Rational(-1, 2), 49, -120, 7, Rational(1, 2), 49, -120, 13)});
    // sixth order, level 12
    t.push_back({"sigma6", {6, "sigma"}, 1, "e61", 12, 0, one_case(Rational(-1, 4), 4, -48, 2)});
    t.push_back({"rho6", {6, "rho"}, 1, "e61", 12, 0, one_case(Rational(-1, 4), -12, -48, 6)});
    t.push_back({"phi6", {6, "phi"}, 1, "e61", 12, 0,
                 split(Rational(1, 2), 1, -48, 1, Rational(1, 2), 25, -48, 5)});
    t.push_back({"psi6", {6, "psi"}, 1, "e61", 12, 0,
                 split(Rational(1, 4), 9, -48, 3, Rational(-1, 4), 33, -48, 9)});
    t.push_back({"mu6", {6, "mu"}, 2, "E6", 12, 0, one_case(Rational(1, 2), 4, -48, 2)});
    t.push_back({"lambda6", {6, "lambda"}, 1, "E6", 12, 0, one_case(Rational(1, 4), 36, -48, 6)});
    t.push_back({"nu6", {6, "nu"}, 1, "E6", 12, 0,
                 split(Rational(-1, 8), 1, -48, 1, Rational(-1, 8), 25, -48, 5)});
    t.push_back({"xi6", {6, "xi"}, 1, "E6", 12, 0,
                 split(Rational(-1, 16), 9, -48, 3, Rational(1, 16), 33, -48, 9)});
    // seventh order, level 42
    t.push_back({"F0_7", {7, "F0"}, 1, "e7", 42, 1, one_case(Rational(1, 2), 1, -168, 1)});
    t.push_back({"F1_7", {7, "F1"}, 1, "e7", 42, 1, one_case(Rational(-1, 2), 25, -168, 5)});
    t.push_back({"F2_7", {7, "F2"}, 1, "e7", 42, 1, one_case(Rational(-1, 2), -47, -168, 11)});
    // tenth order, level 10
    t.push_back({"X10", {10, "X"}, 1, "e10", 10, 1, one_case(Rational(1, 2), 1, -40, 1)});
    t.push_back({"chi10", {10, "chi"}, 1, "e10", 10, 1, one_case(Rational(1, 2), 9, -40, 3)});
    t.push_back({"phi10", {10, "phi"}, 1, "e10", 10, 1,
                 split(Rational(-1, 4), -4, -20, 6, Rational(-1, 4), -4, -20, 4)});
    t.push_back({"psi10", {10, "psi"}, 1, "e10", 10, 1,
                 split(Rational(-1, 4), 4, -20, 2, Rational(-1, 4), 4, -20, 8)});
    return t;
}

const FormulaCase& case_for(const CoefficientFormula& f, long n) {
    for (const auto& fc : f.cases) {
        if (fc.parity == kAll) return fc;
        if (fc.parity == kEven && n % 2 == 0) return fc;
        if (fc.parity == kOdd && n % 2 != 0) return fc;
    }
    throw std::logic_error("formula " + f.name + " has no case for n");
}

}  // namespace

const std::vector<CoefficientFormula>& formula_table() {
    static const std::vector<CoefficientFormula> table = build_table();
    return table;
}

const CoefficientFormula& formula(const std::string& name) {
    for (const auto& f : formula_table())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown coefficient formula " + name);
}

CoefficientInstance check_coefficient(const PrecisionContext& ctx, const CoefficientFormula& f,
                                      long n) {
    if (n < f.n_min) throw std::domain_error("n below the formula's range");
    auto scope = ctx.scope();
    const auto& fc = case_for(f, n);
    CoefficientInstance out;
    out.n = n;
    out.disc = fc.d0 + fc.d1 * n;
    out.r = fc.r;
    out.series_side = Rational(mock_theta(f.series, n).coeff(Rational(n)) * f.multiplier);
    out.gap = Real(0);
    if (out.disc >= 0) {
        out.degenerate = true;
        return out;
    }
    out.trace_side =
        to_real(fc.c) * trace_diff_over_sqrt(ctx, f.input_tag, f.level, out.disc, fc.r);
    out.gap = abs_c(out.trace_side - Complex(to_real(out.series_side), Real(0)));
    return out;
}

VerificationReport verify_range(const PrecisionContext& ctx, const std::string& name,
                                long n_max) {
    const auto& f = formula(name);
    VerificationReport rep;
    rep.name = name;
    rep.worst_gap = Real(0);
    for (long n = f.n_min; n <= n_max; ++n) {
        auto inst = check_coefficient(ctx, f, n);
        if (inst.degenerate) {
            ++rep.degenerate;
        } else {
            ++rep.checked;
            if (inst.gap > rep.worst_gap) rep.worst_gap = inst.gap;
        }
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

}  // namespace mocktheta
