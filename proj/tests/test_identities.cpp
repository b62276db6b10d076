#include <doctest.h>

#include <mocktheta/identities.hpp>

#include <set>

using namespace mocktheta;

namespace {

const PrecisionContext ctx;

}  // namespace

TEST_CASE("formula table is structurally sound") {
    const auto& table = formula_table();
    CHECK(table.size() == 25);
    std::set<std::string> names;
    for (const auto& f : table) {
        CAPTURE(f.name);
        CHECK(names.insert(f.name).second);
        CHECK(trace_function(f.input_tag).level == f.level);
        CHECK(f.multiplier >= 1);
        REQUIRE(!f.cases.empty());
        // every branch respects the discriminant congruence on its parity
        for (long n = f.n_min; n <= f.n_min + 7; ++n) {
            bool covered = false;
            for (const auto& fc : f.cases) {
                if (fc.parity == 0 && n % 2 != 0) continue;
                if (fc.parity == 1 && n % 2 == 0) continue;
                covered = true;
                long disc = fc.d0 + fc.d1 * n;
                long m = 4 * f.level;
                CHECK(((fc.r * fc.r - disc) % m + m) % m == 0);
                CHECK(fc.d1 < 0);
            }
            CHECK(covered);
        }
    }
    CHECK(formula("sigma6").series.order == 6);
    CHECK_THROWS_AS(formula("sigma"), std::invalid_argument);
}

TEST_CASE("coefficients match traces across all families, small range") {
    // one representative per input function; the full table runs in the
    // acceptance suite
    for (const char* name : {"f3", "omega3", "psi0_5", "F1_5", "phi6", "xi6", "F2_7", "psi10"}) {
        auto rep = verify_range(ctx, name, 6);
        CAPTURE(name);
        CHECK(rep.checked >= 5);
        CHECK(rep.worst_gap < Real("1e-50"));
    }
}

TEST_CASE("degenerate instances are flagged, not compared") {
    auto rep = verify_range(ctx, "mu6", 3);
    REQUIRE(rep.instances.size() == 4);
    CHECK(rep.degenerate == 1);
    CHECK(rep.checked == 3);
    const auto& first = rep.instances.front();
    CHECK(first.n == 0);
    CHECK(first.disc == 4);
    CHECK(first.degenerate);
    // the series value exists there (it is 1), which is exactly why the
    // degenerate case must not silently claim zero
    CHECK(first.series_side == 1);
    CHECK(first.gap == 0);
    CHECK_THROWS_AS(check_coefficient(ctx, formula("f3"), 0), std::domain_error);
}

TEST_CASE("trace side is linear in the input function") {
    auto scope = ctx.scope();
    long disc = -44, r = 2;
    Complex a = trace_diff_over_sqrt(ctx, "e61", 12, disc, r);
    Complex b = trace_diff_over_sqrt(ctx, "e62", 12, disc, r);
    Complex c = trace_diff_over_sqrt(ctx, "E6", 12, disc, r);
    CHECK(abs_c(c - (b + to_real(Integer(3)) * a)) < Real("1e-60"));
    Complex d = trace_diff_over_sqrt(ctx, "e51", 60, -236, 2);
    Complex e = trace_diff_over_sqrt(ctx, "e52", 60, -236, 2);
    Complex f = trace_diff_over_sqrt(ctx, "E5", 60, -236, 2);
    CHECK(abs_c(f + (e + d)) < Real("1e-60"));
}

TEST_CASE("a corrupted prefactor is caught") {
    // guards against the comparison being vacuous
    CoefficientFormula broken = formula("f3");
    broken.cases[0].c += Rational(1, 7);
    auto inst = check_coefficient(ctx, broken, 1);
    CHECK(inst.gap > Real("0.01"));
    CoefficientFormula wrong_r = formula("sigma6");
    wrong_r.cases[0].r = 10;  // still satisfies the congruence mod 48
    auto inst2 = check_coefficient(ctx, wrong_r, 2);
    CHECK(inst2.gap > Real("0.01"));
}
