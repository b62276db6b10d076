#include "mocktheta/completions.hpp"

#include "mocktheta/weil.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace mocktheta {

namespace {

long ceil_to_long(const Rational& x) {
    Integer num = boost::multiprecision::numerator(x);
    Integer den = boost::multiprecision::denominator(x);
    Integer q = num / den;
    if (num % den > 0) q += 1;
    return q.convert_to<long>();
}

double to_double(const Real& x) { return x.convert_to<double>(); }

SymReal sym(const Rational& rat, long root = 1, long sin_num = 0, long sin_den = 0) {
    return SymReal{rat, root, sin_num, sin_den};
}

SymReal neg(SymReal s) {
    s.rat = -s.rat;
    return s;
}

std::vector<std::vector<SymReal>> zero_matrix(int dim) {
    return std::vector<std::vector<SymReal>>(dim, std::vector<SymReal>(dim, sym(0)));
}

std::vector<std::vector<SymReal>> perm_matrix(const std::vector<int>& cols) {
    auto m = zero_matrix(static_cast<int>(cols.size()));
    for (size_t i = 0; i < cols.size(); ++i) m[i][cols[i]] = sym(1);
    return m;
}

std::vector<std::vector<QuadScalar>> zero_lift(long two_n, int dim) {
    return std::vector<std::vector<QuadScalar>>(two_n, std::vector<QuadScalar>(dim));
}

CompletionFamily make_order2() {
    CompletionFamily f;
    f.label = FamilyLabel::order2;
    f.dim = 6;
    f.components = {
        {{2, "A"}, Rational(-1, 16), QuadScalar(4), 2, +1, 0},
        {{2, "A"}, Rational(-1, 16), QuadScalar(4), 2, -1, 0},
        {{2, "B"}, Rational(1, 4), QuadScalar(1, 8), 2, +1, 0},
        {{2, "B"}, Rational(1, 4), QuadScalar(1, 8), 2, -1, 0},
        {{2, "mu"}, Rational(-1, 16), QuadScalar(1), 2, +1, 0},
        {{2, "mu"}, Rational(-1, 16), QuadScalar(1), 2, -1, 0},
    };
    f.t_perm = {1, 0, 3, 2, 5, 4};
    f.t_phase = {Rational(-1, 16), Rational(-1, 16), Rational(1, 4),
                 Rational(1, 4),   Rational(-1, 16), Rational(-1, 16)};
    f.s_matrix = perm_matrix({5, 3, 4, 1, 2, 0});
    f.has_shadow = true;
    f.theta_level = 4;
    f.g_prefactor = QuadScalar(Rational(1, 2), 2);
    f.xi_prefactor = QuadScalar(-1);
    f.shadow = {
        {{QuadScalar(1), 1}, {QuadScalar(1), 3}},
        {{QuadScalar(1), 1}, {QuadScalar(-1), 3}},
        {{QuadScalar(1, 2), 2}},
        {{QuadScalar(-1, 2), 2}},
        {{QuadScalar(-1), 1}, {QuadScalar(1), 3}},
        {{QuadScalar(-1), 1}, {QuadScalar(-1), 3}},
    };
    return f;
}

CompletionFamily make_order3a() {
    CompletionFamily f;
    f.label = FamilyLabel::order3a;
    f.dim = 6;
    f.components = {
        {{3, "phi"}, Rational(-1, 48), QuadScalar(1), 2, +1, 0},
        {{3, "phi"}, Rational(-1, 48), QuadScalar(1), 2, -1, 0},
        {{3, "psi"}, Rational(-1, 48), QuadScalar(2), 2, +1, 0},
        {{3, "psi"}, Rational(-1, 48), QuadScalar(2), 2, -1, 0},
        {{3, "nu"}, Rational(1, 6), QuadScalar(1, 2), 2, +1, 0},
        {{3, "nu"}, Rational(1, 6), QuadScalar(1, 2), 2, -1, 0},
    };
    f.t_perm = {1, 0, 3, 2, 5, 4};
    f.t_phase = {Rational(-1, 48), Rational(-1, 48), Rational(-1, 48),
                 Rational(-1, 48), Rational(1, 6),   Rational(1, 6)};
    f.s_matrix = perm_matrix({2, 5, 0, 4, 3, 1});
    f.has_shadow = true;
    f.theta_level = 12;
    f.g_prefactor = QuadScalar(Rational(1, 12), 6);
    f.xi_prefactor = QuadScalar(Rational(-1, 6), 3);
    f.shadow = {
        {{QuadScalar(-1), 1}, {QuadScalar(-1), 5}, {QuadScalar(-1), 7}, {QuadScalar(-1), 11}},
        {{QuadScalar(-1), 1}, {QuadScalar(1), 5}, {QuadScalar(-1), 7}, {QuadScalar(1), 11}},
        {{QuadScalar(1), 1}, {QuadScalar(1), 5}, {QuadScalar(1), 7}, {QuadScalar(1), 11}},
        {{QuadScalar(1), 1}, {QuadScalar(-1), 5}, {QuadScalar(1), 7}, {QuadScalar(-1), 11}},
        {{QuadScalar(-1, 2), 4}, {QuadScalar(-1, 2), 8}},
        {{QuadScalar(1, 2), 4}, {QuadScalar(1, 2), 8}},
    };
    return f;
}

CompletionFamily make_order3b() {
    CompletionFamily f;
    f.label = FamilyLabel::order3b;
    f.dim = 3;
    f.components = {
        {{3, "f"}, Rational(-1, 24), QuadScalar(1), 1, +1, 0},
        {{3, "omega"}, Rational(1, 3), QuadScalar(2), 2, +1, 0},
        {{3, "omega"}, Rational(1, 3), QuadScalar(2), 2, -1, 0},
    };
    f.t_perm = {0, 2, 1};
    f.t_phase = {Rational(-1, 24), Rational(1, 3), Rational(1, 3)};
    f.s_matrix = zero_matrix(3);
    f.s_matrix[0][1] = sym(1);
    f.s_matrix[1][0] = sym(1);
    f.s_matrix[2][2] = sym(-1);
    f.has_lift = true;
    f.lift_level = 6;
    f.lift = zero_lift(12, 3);
    f.lift[1][0] = QuadScalar(1);
    f.lift[5][0] = QuadScalar(-1);
    f.lift[7][0] = QuadScalar(1);
    f.lift[11][0] = QuadScalar(-1);
    f.lift[2][1] = QuadScalar(-1);
    f.lift[2][2] = QuadScalar(1);
    f.lift[10][1] = QuadScalar(1);
    f.lift[10][2] = QuadScalar(-1);
    f.lift[4][1] = QuadScalar(-1);
    f.lift[4][2] = QuadScalar(-1);
    f.lift[8][1] = QuadScalar(1);
    f.lift[8][2] = QuadScalar(1);
    return f;
}

void fill_order5_common(CompletionFamily& f) {
    f.t_perm = {0, 1, 4, 5, 2, 3};
    f.t_phase = {Rational(-1, 60),  Rational(11, 60), Rational(-1, 240),
                 Rational(71, 240), Rational(-1, 240), Rational(71, 240)};
    // (2/sqrt5) M: sqrt2 sin -> (2/5)sqrt10 sin, sin/sqrt2 -> (1/5)sqrt10 sin,
    // bare sin -> (2/5)sqrt5 sin.
    auto a1 = sym(Rational(2, 5), 10, 1, 5);
    auto a2 = sym(Rational(2, 5), 10, 2, 5);
    auto b1 = sym(Rational(1, 5), 10, 1, 5);
    auto b2 = sym(Rational(1, 5), 10, 2, 5);
    auto c1 = sym(Rational(2, 5), 5, 1, 5);
    auto c2 = sym(Rational(2, 5), 5, 2, 5);
    auto z = sym(0);
    // last diagonal entry is -sin(2 pi/5): the scaled matrix must square to
    // the identity, which pins the sign (confirmed by the lift intertwining)
    f.s_matrix = {
        {z, z, a1, a2, z, z},
        {z, z, a2, neg(a1), z, z},
        {b1, b2, z, z, z, z},
        {b2, neg(b1), z, z, z, z},
        {z, z, z, z, c2, c1},
        {z, z, z, z, c1, neg(c2)},
    };
    f.has_lift = true;
    f.lift_level = 60;
    f.lift = zero_lift(120, 6);
    for (long r = 1; r < 60; ++r) {
        long mod10 = r % 10;
        long g = std::gcd(r, 60L);
        int a_r = (r < 30) ? +1 : -1;
        long m60 = r % 60;
        int b_r = (m60 == 1 || m60 == 59 || m60 == 13 || m60 == 47) ? +1 : -1;
        auto add = [&](int comp, int val) {
            f.lift[r][comp] = QuadScalar(val);
            f.lift[120 - r][comp] = QuadScalar(-val);
        };
        if ((mod10 == 1 || mod10 == 9) && g == 1) {
            add(2, a_r);
            add(4, b_r);
        } else if ((mod10 == 2 || mod10 == 8) && g == 2) {
            add(0, -1);
        } else if ((mod10 == 3 || mod10 == 7) && g == 1) {
            add(3, a_r);
            add(5, b_r);
        } else if ((mod10 == 4 || mod10 == 6) && g == 2) {
            add(1, -1);
        }
    }
}

CompletionFamily make_order5_1() {
    CompletionFamily f;
    f.label = FamilyLabel::order5_1;
    f.dim = 6;
    f.components = {
        {{5, "f0"}, Rational(-1, 60), QuadScalar(1), 1, +1, 0},
        {{5, "f1"}, Rational(11, 60), QuadScalar(1), 1, +1, 0},
        {{5, "F0"}, Rational(-1, 240), QuadScalar(1), 2, +1, Rational(-1)},
        {{5, "F1"}, Rational(71, 240), QuadScalar(1), 2, +1, 0},
        {{5, "F0"}, Rational(-1, 240), QuadScalar(1), 2, -1, Rational(-1)},
        {{5, "F1"}, Rational(71, 240), QuadScalar(1), 2, -1, 0},
    };
    fill_order5_common(f);
    return f;
}

CompletionFamily make_order5_2() {
    CompletionFamily f;
    f.label = FamilyLabel::order5_2;
    f.dim = 6;
    f.components = {
        {{5, "psi0"}, Rational(-1, 60), QuadScalar(2), 1, +1, 0},
        {{5, "psi1"}, Rational(11, 60), QuadScalar(2), 1, +1, 0},
        {{5, "phi0"}, Rational(-1, 240), QuadScalar(1), 2, -1, 0},
        {{5, "phi1"}, Rational(-49, 240), QuadScalar(-1), 2, -1, 0},
        {{5, "phi0"}, Rational(-1, 240), QuadScalar(1), 2, +1, 0},
        {{5, "phi1"}, Rational(-49, 240), QuadScalar(1), 2, +1, 0},
    };
    fill_order5_common(f);
    return f;
}

void fill_order6_common(CompletionFamily& f) {
    f.t_perm = {0, 1, 3, 2, 5, 4};
    f.t_phase = {Rational(-1, 12), Rational(1, 4),   Rational(-1, 48),
                 Rational(-1, 48), Rational(-3, 16), Rational(-3, 16)};
    auto r3 = sym(Rational(1, 3), 3);   // 1/sqrt3
    auto r6 = sym(Rational(1, 3), 6);   // sqrt(2/3)
    auto z = sym(0);
    f.s_matrix = {
        {z, z, r3, z, r6, z},
        {z, z, r6, z, neg(r3), z},
        {r3, r6, z, z, z, z},
        {z, z, z, r3, z, neg(r6)},
        {r6, neg(r3), z, z, z, z},
        {z, z, z, neg(r6), z, neg(r3)},
    };
    f.has_shadow = true;
    f.theta_level = 12;
    f.g_prefactor = QuadScalar(Rational(1, 12), 6);
    f.xi_prefactor = QuadScalar(Rational(-1, 6), 3);
    f.shadow = {
        {{QuadScalar(1, 2), 2}, {QuadScalar(1, 2), 10}},
        {{QuadScalar(2), 6}},
        {{QuadScalar(-1), 1}, {QuadScalar(-1), 5}, {QuadScalar(1), 7}, {QuadScalar(1), 11}},
        {{QuadScalar(-1), 1}, {QuadScalar(1), 5}, {QuadScalar(1), 7}, {QuadScalar(-1), 11}},
        {{QuadScalar(-1, 2), 3}, {QuadScalar(1, 2), 9}},
        {{QuadScalar(-1, 2), 3}, {QuadScalar(-1, 2), 9}},
    };
    f.has_lift = true;
    f.lift_level = 12;
    f.lift = zero_lift(24, 6);
    QuadScalar s2(1, 2);
    f.lift[2][0] = -s2;
    f.lift[22][0] = s2;
    f.lift[10][0] = -s2;
    f.lift[14][0] = s2;
    f.lift[6][1] = QuadScalar(-2);
    f.lift[18][1] = QuadScalar(2);
    for (long r : {1L, 17L}) { f.lift[r][2] = QuadScalar(1); f.lift[r][3] = QuadScalar(1); }
    for (long r : {23L, 7L}) { f.lift[r][2] = QuadScalar(-1); f.lift[r][3] = QuadScalar(-1); }
    for (long r : {5L, 13L}) { f.lift[r][2] = QuadScalar(1); f.lift[r][3] = QuadScalar(-1); }
    for (long r : {19L, 11L}) { f.lift[r][2] = QuadScalar(-1); f.lift[r][3] = QuadScalar(1); }
    f.lift[3][4] = s2;
    f.lift[3][5] = s2;
    f.lift[21][4] = -s2;
    f.lift[21][5] = -s2;
    f.lift[9][4] = -s2;
    f.lift[9][5] = s2;
    f.lift[15][4] = s2;
    f.lift[15][5] = -s2;
}

CompletionFamily make_order6_1() {
    CompletionFamily f;
    f.label = FamilyLabel::order6_1;
    f.dim = 6;
    f.components = {
        {{6, "sigma"}, Rational(-1, 12), QuadScalar(1, 8), 1, +1, 0},
        {{6, "rho"}, Rational(1, 4), QuadScalar(2), 1, +1, 0},
        {{6, "phi"}, Rational(-1, 48), QuadScalar(1), 2, +1, 0},
        {{6, "phi"}, Rational(-1, 48), QuadScalar(1), 2, -1, 0},
        {{6, "psi"}, Rational(-3, 16), QuadScalar(1, 2), 2, +1, 0},
        {{6, "psi"}, Rational(-3, 16), QuadScalar(1, 2), 2, -1, 0},
    };
    fill_order6_common(f);
    return f;
}

CompletionFamily make_order6_2() {
    CompletionFamily f;
    f.label = FamilyLabel::order6_2;
    f.dim = 6;
    f.components = {
        {{6, "mu"}, Rational(-1, 12), QuadScalar(-1, 2), 1, +1, 0},
        {{6, "lambda"}, Rational(1, 4), QuadScalar(-1), 1, +1, 0},
        {{6, "nu"}, Rational(-1, 48), QuadScalar(-2), 2, +1, 0},
        {{6, "nu"}, Rational(-1, 48), QuadScalar(-2), 2, -1, 0},
        {{6, "xi"}, Rational(-3, 16), QuadScalar(-1, 8), 2, +1, 0},
        {{6, "xi"}, Rational(-3, 16), QuadScalar(-1, 8), 2, -1, 0},
    };
    fill_order6_common(f);
    return f;
}

CompletionFamily make_order7() {
    CompletionFamily f;
    f.label = FamilyLabel::order7;
    f.dim = 3;
    f.components = {
        {{7, "F0"}, Rational(-1, 168), QuadScalar(1), 1, +1, 0},
        {{7, "F2"}, Rational(47, 168), QuadScalar(1), 1, +1, 0},
        {{7, "F1"}, Rational(-25, 168), QuadScalar(1), 1, +1, 0},
    };
    f.t_perm = {0, 1, 2};
    f.t_phase = {Rational(-1, 168), Rational(47, 168), Rational(-25, 168)};
    auto s = [](long k) { return sym(Rational(2, 7), 7, k, 7); };
    f.s_matrix = {
        {s(1), s(3), s(2)},
        {s(3), neg(s(2)), s(1)},
        {s(2), s(1), neg(s(3))},
    };
    f.has_lift = true;
    f.lift_level = 42;
    f.lift = zero_lift(84, 3);
    f.lift[1][0] = QuadScalar(1);
    f.lift[83][0] = QuadScalar(-1);
    f.lift[41][0] = QuadScalar(1);
    f.lift[43][0] = QuadScalar(-1);
    for (long r = 2; r <= 40; ++r) {
        long m = (r * r) % 168;
        int comp = m == 1 ? 0 : m == 121 ? 1 : m == 25 ? 2 : -1;
        if (comp < 0) continue;
        f.lift[r][comp] = QuadScalar(-1);
        f.lift[84 - r][comp] = QuadScalar(1);
    }
    return f;
}

CompletionFamily make_order8() {
    CompletionFamily f;
    f.label = FamilyLabel::order8;
    f.dim = 12;
    QuadScalar one(1), s2(1, 2), s8(1, 8);
    f.components = {
        {{8, "V0"}, Rational(0), one, 2, +1, 0},
        {{8, "V0"}, Rational(0), one, 2, -1, 0},
        {{8, "V1"}, Rational(-1, 8), s8, 2, +1, 0},
        {{8, "V1"}, Rational(-1, 8), s8, 2, -1, 0},
        {{8, "S0"}, Rational(-1, 32), s2, 2, +1, 0},
        {{8, "S0"}, Rational(-1, 32), s2, 2, -1, 0},
        {{8, "S1"}, Rational(7, 32), s2, 2, +1, 0},
        {{8, "S1"}, Rational(7, 32), s2, 2, -1, 0},
        {{8, "T0"}, Rational(-1, 32), s8, 2, +1, 0},
        {{8, "T0"}, Rational(-1, 32), s8, 2, -1, 0},
        {{8, "T1"}, Rational(7, 32), s8, 2, +1, 0},
        {{8, "T1"}, Rational(7, 32), s8, 2, -1, 0},
    };
    f.t_perm = {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10};
    f.t_phase = {Rational(0),      Rational(0),      Rational(-1, 8), Rational(-1, 8),
                 Rational(-1, 32), Rational(-1, 32), Rational(7, 32), Rational(7, 32),
                 Rational(-1, 32), Rational(-1, 32), Rational(7, 32), Rational(7, 32)};
    auto h = sym(Rational(1, 2), 2);           // 1/sqrt2
    auto p1 = sym(Rational(1), 1, 1, 8);       // sin(pi/8)
    auto p3 = sym(Rational(1), 1, 3, 8);       // sin(3pi/8)
    f.s_matrix = zero_matrix(12);
    auto& m = f.s_matrix;
    m[0][4] = h;  m[0][6] = h;
    m[1][8] = h;  m[1][10] = h;
    m[2][4] = h;  m[2][6] = neg(h);
    m[3][8] = neg(h); m[3][10] = h;
    m[4][0] = h;  m[4][2] = h;
    m[5][9] = p1; m[5][11] = p3;
    m[6][0] = h;  m[6][2] = neg(h);
    m[7][9] = p3; m[7][11] = neg(p1);
    m[8][1] = h;  m[8][3] = neg(h);
    m[9][5] = p1; m[9][7] = p3;
    m[10][1] = h; m[10][3] = h;
    m[11][5] = p3; m[11][7] = neg(p1);
    f.has_shadow = true;
    f.theta_level = 8;
    f.g_prefactor = QuadScalar(Rational(1, 4), 2);
    f.xi_prefactor = QuadScalar(Rational(-1, 2));
    f.shadow = {
        {{QuadScalar(1, 2), 4}},
        {{QuadScalar(-1, 2), 4}},
        {{one, 2}, {one, 6}},
        {{one, 2}, {one, 6}},
        {{QuadScalar(-1), 1}, {QuadScalar(1), 7}},
        {{QuadScalar(-1), 1}, {QuadScalar(-1), 7}},
        {{QuadScalar(1), 3}, {QuadScalar(-1), 5}},
        {{QuadScalar(-1), 3}, {QuadScalar(-1), 5}},
        {{QuadScalar(1), 1}, {QuadScalar(-1), 7}},
        {{QuadScalar(1), 1}, {QuadScalar(1), 7}},
        {{QuadScalar(-1), 3}, {QuadScalar(1), 5}},
        {{QuadScalar(1), 3}, {QuadScalar(1), 5}},
    };
    return f;
}

CompletionFamily make_order10() {
    CompletionFamily f;
    f.label = FamilyLabel::order10;
    f.dim = 6;
    f.components = {
        {{10, "phi"}, Rational(1, 10), QuadScalar(1), 2, +1, 0},
        {{10, "psi"}, Rational(-1, 10), QuadScalar(1), 2, +1, 0},
        {{10, "phi"}, Rational(1, 10), QuadScalar(1), 2, -1, 0},
        {{10, "psi"}, Rational(-1, 10), QuadScalar(1), 2, -1, 0},
        {{10, "X"}, Rational(-1, 40), QuadScalar(1), 1, +1, 0},
        {{10, "chi"}, Rational(-9, 40), QuadScalar(1), 1, +1, 0},
    };
    f.t_perm = {2, 3, 0, 1, 4, 5};
    f.t_phase = {Rational(1, 10),  Rational(-1, 10), Rational(1, 10),
                 Rational(-1, 10), Rational(-1, 40), Rational(-9, 40)};
    auto s1 = sym(Rational(2, 5), 5, 1, 5);
    auto s2 = sym(Rational(2, 5), 5, 2, 5);
    auto z = sym(0);
    f.s_matrix = {
        {z, z, z, z, s2, neg(s1)},
        {z, z, z, z, s1, s2},
        {z, z, s2, s1, z, z},
        {z, z, s1, neg(s2), z, z},
        {s2, s1, z, z, z, z},
        {neg(s1), s2, z, z, z, z},
    };
    f.has_lift = true;
    f.lift_level = 10;
    f.lift = zero_lift(20, 6);
    f.lift[6][0] = QuadScalar(-1);
    f.lift[6][2] = QuadScalar(-1);
    f.lift[14][0] = QuadScalar(1);
    f.lift[14][2] = QuadScalar(1);
    f.lift[4][0] = QuadScalar(-1);
    f.lift[4][2] = QuadScalar(1);
    f.lift[16][0] = QuadScalar(1);
    f.lift[16][2] = QuadScalar(-1);
    f.lift[2][1] = QuadScalar(-1);
    f.lift[2][3] = QuadScalar(-1);
    f.lift[18][1] = QuadScalar(1);
    f.lift[18][3] = QuadScalar(1);
    f.lift[8][1] = QuadScalar(-1);
    f.lift[8][3] = QuadScalar(1);
    f.lift[12][1] = QuadScalar(1);
    f.lift[12][3] = QuadScalar(-1);
    f.lift[1][4] = QuadScalar(1);
    f.lift[19][4] = QuadScalar(-1);
    f.lift[9][4] = QuadScalar(-1);
    f.lift[11][4] = QuadScalar(1);
    f.lift[3][5] = QuadScalar(1);
    f.lift[17][5] = QuadScalar(-1);
    f.lift[7][5] = QuadScalar(-1);
    f.lift[13][5] = QuadScalar(1);
    return f;
}

const std::map<FamilyLabel, CompletionFamily>& registry() {
    static const std::map<FamilyLabel, CompletionFamily> reg = [] {
        std::map<FamilyLabel, CompletionFamily> m;
        for (auto&& fam : {make_order2(), make_order3a(), make_order3b(), make_order5_1(),
                           make_order5_2(), make_order6_1(), make_order6_2(), make_order7(),
                           make_order8(), make_order10()}) {
            m.emplace(fam.label, fam);
        }
        return m;
    }();
    return reg;
}

// Truncation index so the dropped series tail at Im(tau) = v stays below the
// working tolerance; the sqrt term absorbs subexponential coefficient growth.
long expansion_order_for(const PrecisionContext& ctx, double v) {
    double need = (ctx.working_digits() + 10) * std::numbers::ln10;
    double denom = 2 * std::numbers::pi * v;
    double x = need / denom;
    for (int i = 0; i < 4; ++i) x = (need + std::numbers::pi * std::sqrt(x + 1)) / denom;
    long m = static_cast<long>(x) + 4;
    return (m / 32 + 1) * 32;
}

Complex e_of_rational(const PrecisionContext& ctx, const Rational& r) {
    return e_of(ctx, Complex(to_real(r), Real(0)));
}

void require_upper_half(const Complex& tau) {
    if (!(tau.im > 0)) throw std::domain_error("point must lie in the upper half-plane");
}

// theta_{N,a}(z) for all residues a at once.  Direct series when Im z is
// comfortable, otherwise one modular inversion.  The direct sum walks
// E^{n^2} incrementally (two multiplications per n), one exponential total.
std::vector<Complex> theta_vector_direct(const PrecisionContext& ctx, long level, const Complex& z) {
    long two_n = 2 * level;
    double v = to_double(z.im);
    double need = (ctx.working_digits() + 8) * std::numbers::ln10;
    long nmax = static_cast<long>(std::sqrt(4.0 * level * need / (2 * std::numbers::pi * v))) +
                two_n + 2;
    if (nmax > 2000000) throw std::domain_error("theta evaluation point too close to the real axis");
    Complex E = e_of(ctx, z * to_real(Rational(1, 4 * level)));
    Complex E2 = E * E;
    std::vector<Complex> out(two_n, Complex(Real(0), Real(0)));
    Complex p = E;        // E^{m^2} at m = 1
    Complex u = E2 * E;   // E^{2m+1} at m = 1
    for (long m = 1; m <= nmax; ++m) {
        long rp = m % two_n;
        long rm = (two_n - rp) % two_n;
        Real mr = to_real(Integer(m));
        out[rp] += mr * p;
        out[rm] -= mr * p;
        p *= u;
        u *= E2;
    }
    return out;
}

std::vector<Complex> theta_vector(const PrecisionContext& ctx, long level, const Complex& z_in) {
    if (!(z_in.im > 0)) throw std::domain_error("theta point must lie in the upper half-plane");
    Complex z = promote(z_in);
    Real threshold = Real(1) / 5;
    if (z.im >= threshold) return theta_vector_direct(ctx, level, z);
    Complex w = -inv_c(z);
    if (w.im < threshold) return theta_vector_direct(ctx, level, z);
    long two_n = 2 * level;
    auto base = theta_vector_direct(ctx, level, w);
    // zeta[m] = e(-m / 2N)
    std::vector<Complex> zeta(two_n);
    zeta[0] = Complex(Real(1), Real(0));
    Complex step = e_of_rational(ctx, Rational(-1, two_n));
    for (long m = 1; m < two_n; ++m) zeta[m] = zeta[m - 1] * step;
    Complex pref = w * principal_sqrt(ctx, w) * e_of_rational(ctx, Rational(-1, 8));
    pref = pref / sqrt(to_real(Integer(two_n)));
    std::vector<Complex> out(two_n, Complex(Real(0), Real(0)));
    for (long a = 0; a < two_n; ++a) {
        Complex s(Real(0), Real(0));
        for (long k = 0; k < two_n; ++k) s += zeta[(a * k) % two_n] * base[k];
        out[a] = pref * s;
    }
    return out;
}

// Class sums S_a = sum_{n == a (2N), n != 0} sgn(n) e(-n^2 tau / 4N) erfc(|n| sqrt(pi v / N))
// shared by all components of a closed-form G evaluation.
std::map<long, Complex> period_class_sums(const PrecisionContext& ctx, long level,
                                          const std::vector<long>& residues, const Complex& tau) {
    long two_n = 2 * level;
    Real v = tau.im;
    double need = (ctx.working_digits() + 8) * std::numbers::ln10;
    long nmax = static_cast<long>(std::sqrt(2.0 * level * need / (std::numbers::pi * to_double(v)))) +
                two_n + 2;
    Real arg_scale = sqrt(pi_value() * v / to_real(Integer(level)));
    std::map<long, Complex> sums;
    for (long raw : residues) {
        long a = ((raw % two_n) + two_n) % two_n;
        if (sums.count(a)) continue;
        Complex s(Real(0), Real(0));
        for (long n = a - two_n * ((a + nmax) / two_n); n <= nmax; n += two_n) {
            if (n == 0) continue;
            Complex term = e_of(ctx, tau * to_real(Rational(-n * n, 4 * level)));
            Real w = erfc(ctx, to_real(Integer(std::labs(n))) * arg_scale);
            if (n > 0)
                s += term * w;
            else
                s -= term * w;
        }
        sums.emplace(a, s);
    }
    return sums;
}

using NodeTable = std::map<Real, VectorPoint>;

// Integrate the i-th component of a memoized vector integrand with tanh-sinh.
template <typename NodeFn>
Complex integrate_component(boost::math::quadrature::tanh_sinh<Real>& integ, NodeFn&& node,
                            size_t i, const Real& a, const Real& b, const Real& tol) {
    Real re = integ.integrate([&](const Real& t) { return Real(node(t)[i].re); }, a, b, tol);
    Real im = integ.integrate([&](const Real& t) { return Real(node(t)[i].im); }, a, b, tol);
    return Complex(re, im);
}

std::vector<Real> panel_edges(double upper) {
    std::vector<Real> edges{Real(0)};
    for (double cut : {4.0, 64.0}) {
        if (upper > cut) edges.push_back(Real(cut));
    }
    edges.push_back(Real(upper));
    return edges;
}

Complex mordell_integrand(MordellKind kind, const Complex& alpha, const Real& x) {
    Complex ax = alpha * x;
    Complex gauss = exp_c(-(alpha * (x * x)));
    Complex den = Complex(Real(1), Real(0)) + exp_c(-(ax * Real(2)));
    Complex num;
    switch (kind) {
        case MordellKind::J:
            num = exp_c(-ax) * Real(2);
            break;
        case MordellKind::J1:
            num = exp_c(-(ax * to_real(Rational(1, 3)))) + exp_c(-(ax * to_real(Rational(5, 3))));
            break;
        case MordellKind::K:
            gauss = exp_c(-(alpha * (x * x)) / Real(2));
            num = exp_c(-(ax / Real(2))) + exp_c(-(ax * to_real(Rational(3, 2))));
            break;
        case MordellKind::K1:
            gauss = exp_c(-(alpha * (x * x)) / Real(2));
            num = exp_c(-(ax * to_real(Rational(1, 6)))) + exp_c(-(ax * to_real(Rational(11, 6)))) -
                  exp_c(-(ax * to_real(Rational(5, 6)))) - exp_c(-(ax * to_real(Rational(7, 6))));
            break;
    }
    return gauss * num / den;
}

}  // namespace

std::string to_string(FamilyLabel label) {
    switch (label) {
        case FamilyLabel::order2: return "order2";
        case FamilyLabel::order3a: return "order3a";
        case FamilyLabel::order3b: return "order3b";
        case FamilyLabel::order5_1: return "order5_1";
        case FamilyLabel::order5_2: return "order5_2";
        case FamilyLabel::order6_1: return "order6_1";
        case FamilyLabel::order6_2: return "order6_2";
        case FamilyLabel::order7: return "order7";
        case FamilyLabel::order8: return "order8";
        case FamilyLabel::order10: return "order10";
    }
    throw std::logic_error("unknown family label");
}

std::optional<FamilyLabel> family_from_string(const std::string& name) {
    for (FamilyLabel label : all_families()) {
        if (to_string(label) == name) return label;
    }
    return std::nullopt;
}

const std::vector<FamilyLabel>& all_families() {
    static const std::vector<FamilyLabel> all = {
        FamilyLabel::order2,   FamilyLabel::order3a,  FamilyLabel::order3b, FamilyLabel::order5_1,
        FamilyLabel::order5_2, FamilyLabel::order6_1, FamilyLabel::order6_2, FamilyLabel::order7,
        FamilyLabel::order8,   FamilyLabel::order10};
    return all;
}

Real SymReal::value(const PrecisionContext& ctx) const {
    auto scope = ctx.scope();
    if (rat == 0) return Real(0);
    Real x = to_real(rat);
    if (root != 1) x *= sqrt(to_real(Integer(root)));
    if (sin_den != 0) x *= sin(pi_value() * to_real(Rational(sin_num, sin_den)));
    return x;
}

const CompletionFamily& completion_family(FamilyLabel label) { return registry().at(label); }

FourierExpansion component_expansion(FamilyLabel label, int i, const Rational& order) {
    const auto& fam = completion_family(label);
    const auto& comp = fam.components.at(static_cast<size_t>(i));
    static std::mutex mu;
    static std::map<std::pair<int, int>, FourierExpansion> cache;
    std::pair<int, int> key{static_cast<int>(label), i};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second.truncation_order() > order)
            return it->second.truncate(order);
    }
    Rational base_order = (order - comp.shift) * comp.root;
    long m = std::max(ceil_to_long(base_order) + 1, 4L);
    FourierExpansion s = mock_theta(comp.id, m).root_substitute(comp.root, comp.sign);
    if (comp.offset != 0)
        s = s + FourierExpansion::monomial(comp.offset, Rational(0), s.truncation_order());
    s = s.shift(comp.shift);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it == cache.end() || it->second.truncation_order() < s.truncation_order())
            cache.insert_or_assign(key, s);
    }
    return s.truncate(order);
}

VectorPoint eval_F(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau) {
    auto scope = ctx.scope();
    require_upper_half(tau);
    const auto& fam = completion_family(label);
    long order = expansion_order_for(ctx, to_double(tau.im));
    VectorPoint out(fam.dim);
    for (int i = 0; i < fam.dim; ++i) {
        FourierExpansion ex = component_expansion(label, i, Rational(order));
        out[i] = ex.eval(ctx, tau) * fam.components[i].scale.value(ctx);
    }
    return out;
}

VectorPoint eval_shadow_g(const PrecisionContext& ctx, FamilyLabel label, const Complex& z) {
    auto scope = ctx.scope();
    const auto& fam = completion_family(label);
    if (!fam.has_shadow)
        throw std::domain_error("no shadow printed for family " + to_string(label));
    auto tv = theta_vector(ctx, fam.theta_level, z);
    VectorPoint out(fam.dim, Complex(Real(0), Real(0)));
    for (int i = 0; i < fam.dim; ++i) {
        for (const auto& term : fam.shadow[i]) {
            out[i] += tv[term.residue] * term.coeff.value(ctx);
        }
    }
    return out;
}

ScaledExpansion shadow_expansion(FamilyLabel label, int i, long M) {
    const auto& fam = completion_family(label);
    if (!fam.has_shadow)
        throw std::domain_error("no shadow printed for family " + to_string(label));
    const auto& terms = fam.shadow.at(static_cast<size_t>(i));
    // Every printed component is (common radical) x (rational theta combination).
    long root = terms.front().coeff.root;
    FourierExpansion sum(1, M + 1);
    for (const auto& term : terms) {
        if (term.coeff.root != root)
            throw std::logic_error("shadow component mixes incompatible radicals");
        sum = sum + theta_na_expansion(fam.theta_level, term.residue, M).scale(term.coeff.rat);
    }
    return {QuadScalar(Rational(1), root), sum};
}

Complex theta_period_integral(const PrecisionContext& ctx, long level,
                              const std::vector<ShadowTerm>& combination, const Complex& tau) {
    auto scope = ctx.scope();
    require_upper_half(tau);
    std::vector<long> residues;
    for (const auto& t : combination) residues.push_back(t.residue);
    auto sums = period_class_sums(ctx, level, residues, tau);
    long two_n = 2 * level;
    Complex total(Real(0), Real(0));
    for (const auto& t : combination) {
        long a = ((t.residue % two_n) + two_n) % two_n;
        total += sums.at(a) * t.coeff.value(ctx);
    }
    // each theta term integrates to i sgn(n) sqrt(2N) e(-n^2 tau/4N) erfc(...)
    return Complex(Real(0), sqrt(to_real(Integer(two_n)))) * total;
}

VectorPoint eval_G_closedform(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau) {
    auto scope = ctx.scope();
    require_upper_half(tau);
    const auto& fam = completion_family(label);
    if (!fam.has_shadow)
        throw std::domain_error("no shadow printed for family " + to_string(label));
    std::vector<long> residues;
    for (const auto& comp : fam.shadow)
        for (const auto& t : comp) residues.push_back(t.residue);
    auto sums = period_class_sums(ctx, fam.theta_level, residues, tau);
    long two_n = 2 * fam.theta_level;
    Real pref = fam.g_prefactor.value(ctx);
    Real root = sqrt(to_real(Integer(two_n)));
    VectorPoint out(fam.dim, Complex(Real(0), Real(0)));
    for (int i = 0; i < fam.dim; ++i) {
        Complex s(Real(0), Real(0));
        for (const auto& t : fam.shadow[i]) {
            long a = ((t.residue % two_n) + two_n) % two_n;
            s += sums.at(a) * t.coeff.value(ctx);
        }
        // G_i = i * pref * (i sqrt(2N) s) = -pref sqrt(2N) s
        out[i] = s * (-pref * root);
    }
    return out;
}

VectorPoint eval_G_quadrature(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau_in) {
    auto scope = ctx.scope();
    require_upper_half(tau_in);
    Complex tau = promote(tau_in);
    const auto& fam = completion_family(label);
    if (!fam.has_shadow)
        throw std::domain_error("no shadow printed for family " + to_string(label));
    long level = fam.theta_level;
    Real v = tau.im;
    // coefficient table per component
    std::vector<std::vector<std::pair<Real, long>>> coeffs(fam.dim);
    for (int i = 0; i < fam.dim; ++i)
        for (const auto& t : fam.shadow[i])
            coeffs[i].emplace_back(t.coeff.value(ctx), t.residue);
    Complex base(-tau.re, tau.im);  // -conj(tau)
    NodeTable memo;
    auto node = [&](const Real& t) -> const VectorPoint& {
        auto it = memo.find(t);
        if (it == memo.end()) {
            Complex z(base.re, base.im + t);
            auto tv = theta_vector(ctx, level, z);
            Real w = Real(1) / sqrt(2 * v + t);
            VectorPoint vals(fam.dim, Complex(Real(0), Real(0)));
            for (int i = 0; i < fam.dim; ++i) {
                for (const auto& [c, a] : coeffs[i]) vals[i] += tv[a] * c;
                vals[i] = vals[i] * w;
            }
            it = memo.emplace(t, std::move(vals)).first;
        }
        return it->second;
    };
    double upper = 2.0 * level * (ctx.working_digits() + 6) * std::numbers::ln10 / std::numbers::pi;
    auto edges = panel_edges(upper);
    boost::math::quadrature::tanh_sinh<Real> integ(15, Real("1e-500"));
    Real tol = ctx.tolerance() * Real("1e-8");
    Real pref = fam.g_prefactor.value(ctx);
    VectorPoint out(fam.dim, Complex(Real(0), Real(0)));
    for (int i = 0; i < fam.dim; ++i) {
        Complex acc(Real(0), Real(0));
        for (size_t p = 0; p + 1 < edges.size(); ++p)
            acc += integrate_component(integ, node, i, edges[p], edges[p + 1], tol);
        out[i] = acc * (-pref);
    }
    return out;
}

VectorPoint eval_H(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau) {
    auto scope = ctx.scope();
    auto F = eval_F(ctx, label, tau);
    auto G = eval_G_closedform(ctx, label, tau);
    VectorPoint out(F.size());
    for (size_t i = 0; i < F.size(); ++i) out[i] = F[i] - G[i];
    return out;
}

Complex theta_point(const PrecisionContext& ctx, long level, long residue, const Complex& z) {
    auto scope = ctx.scope();
    long two_n = 2 * level;
    long a = ((residue % two_n) + two_n) % two_n;
    return theta_vector(ctx, level, z)[a];
}

Real check_transform(const PrecisionContext& ctx, FamilyLabel label, Generator gen,
                     const Complex& tau_in) {
    auto scope = ctx.scope();
    require_upper_half(tau_in);
    Complex tau = promote(tau_in);
    const auto& fam = completion_family(label);
    auto vec = [&](const Complex& t) {
        return fam.has_shadow ? eval_H(ctx, label, t) : eval_F(ctx, label, t);
    };
    Real resid(0);
    if (gen == Generator::T) {
        auto lhs = vec(Complex(tau.re + 1, tau.im));
        auto rhs = vec(tau);
        for (int i = 0; i < fam.dim; ++i) {
            Complex expect = e_of_rational(ctx, fam.t_phase[i]) * rhs[fam.t_perm[i]];
            Real d = abs_c(lhs[i] - expect);
            if (d > resid) resid = d;
        }
    } else {
        if (!fam.has_shadow)
            throw std::domain_error(
                "S-residual needs the completed vector; no shadow printed for family " +
                to_string(label));
        auto lhs = vec(-inv_c(tau));
        auto rhs = vec(tau);
        Complex factor = principal_sqrt(ctx, Complex(tau.im, -tau.re));  // sqrt(-i tau)
        for (int i = 0; i < fam.dim; ++i) {
            Complex row(Real(0), Real(0));
            for (int j = 0; j < fam.dim; ++j) {
                if (fam.s_matrix[i][j].is_zero()) continue;
                row += rhs[j] * fam.s_matrix[i][j].value(ctx);
            }
            Real d = abs_c(lhs[i] - factor * row);
            if (d > resid) resid = d;
        }
    }
    return resid;
}

VectorPoint xi_fd(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau_in,
                  const Real& h_in) {
    auto scope = ctx.scope();
    require_upper_half(tau_in);
    Complex tau = promote(tau_in);
    Real h = promote(h_in);
    const auto& fam = completion_family(label);
    auto vec = [&](const Complex& t) {
        return fam.has_shadow ? eval_H(ctx, label, t) : eval_F(ctx, label, t);
    };
    auto fp = vec(Complex(tau.re + h, tau.im));
    auto fm = vec(Complex(tau.re - h, tau.im));
    auto gp = vec(Complex(tau.re, tau.im + h));
    auto gm = vec(Complex(tau.re, tau.im - h));
    Real sv = sqrt(tau.im);
    VectorPoint out(fam.dim);
    for (int i = 0; i < fam.dim; ++i) {
        Complex du = (fp[i] - fm[i]) / (2 * h);
        Complex dv = (gp[i] - gm[i]) / (2 * h);
        Complex dbar = du + Complex(Real(0), Real(1)) * dv;  // 2 d/d conj(tau)
        out[i] = Complex(Real(0), sv) * conj(dbar);          // i sqrt(v) conj(...)
    }
    return out;
}

VectorPoint laplacian_fd(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau_in,
                         const Real& h_in) {
    auto scope = ctx.scope();
    require_upper_half(tau_in);
    Complex tau = promote(tau_in);
    Real h = promote(h_in);
    const auto& fam = completion_family(label);
    auto vec = [&](const Complex& t) {
        return fam.has_shadow ? eval_H(ctx, label, t) : eval_F(ctx, label, t);
    };
    auto f0 = vec(tau);
    auto fp = vec(Complex(tau.re + h, tau.im));
    auto fm = vec(Complex(tau.re - h, tau.im));
    auto gp = vec(Complex(tau.re, tau.im + h));
    auto gm = vec(Complex(tau.re, tau.im - h));
    Real v = tau.im;
    Real h2 = h * h;
    VectorPoint out(fam.dim);
    for (int i = 0; i < fam.dim; ++i) {
        Complex d2u = (fp[i] - f0[i] * Real(2) + fm[i]) / h2;
        Complex d2v = (gp[i] - f0[i] * Real(2) + gm[i]) / h2;
        Complex du = (fp[i] - fm[i]) / (2 * h);
        Complex dv = (gp[i] - gm[i]) / (2 * h);
        // weight 1/2: -v^2 (d2u + d2v) + (i/2) v (du + i dv)
        out[i] = -((d2u + d2v) * (v * v)) +
                 Complex(Real(0), v / 2) * (du + Complex(Real(0), Real(1)) * dv);
    }
    return out;
}

Complex mordell(const PrecisionContext& ctx, MordellKind kind, const Complex& alpha_in) {
    auto scope = ctx.scope();
    if (!(alpha_in.re > 0)) throw std::domain_error("Mordell integral needs Re(alpha) > 0");
    Complex alpha = promote(alpha_in);
    bool half = kind == MordellKind::K || kind == MordellKind::K1;
    Real need = (ctx.working_digits() + 8) * log(Real(10));
    Real rate = half ? alpha.re / 2 : alpha.re;
    Real X = sqrt(need / rate) + 1;
    boost::math::quadrature::tanh_sinh<Real> integ(15, Real("1e-500"));
    Real tol = ctx.tolerance() * Real("1e-8");
    std::map<Real, Complex> memo;
    auto node = [&](const Real& x) -> const Complex& {
        auto it = memo.find(x);
        if (it == memo.end()) it = memo.emplace(x, mordell_integrand(kind, alpha, x)).first;
        return it->second;
    };
    Real re = integ.integrate([&](const Real& x) { return Real(node(x).re); }, Real(0), X, tol);
    Real im = integ.integrate([&](const Real& x) { return Real(node(x).im); }, Real(0), X, tol);
    return Complex(re, im);
}

VectorPoint eval_R6(const PrecisionContext& ctx, const Complex& tau_in, R6Method method) {
    auto scope = ctx.scope();
    require_upper_half(tau_in);
    Complex tau = promote(tau_in);
    if (method == R6Method::mordell) {
        Real pi = pi_value();
        Complex it = inv_c(tau);
        Complex a6 = Complex(Real(0), 6 * pi) * it;        // 6 pi i / tau
        Complex a32 = Complex(Real(0), 3 * pi / 2) * it;   // 3 pi i / (2 tau)
        Complex a3 = Complex(Real(0), 3 * pi) * it;        // 3 pi i / tau
        Complex pref = Complex(Real(0), sqrt(Real(6))) * it;
        Real s2 = sqrt(Real(2));
        Real s8 = 2 * s2;
        VectorPoint out(6);
        out[0] = pref * (mordell(ctx, MordellKind::J1, a6) * (-s8));
        out[1] = pref * (mordell(ctx, MordellKind::J, a6) * Real(-2));
        out[2] = pref * mordell(ctx, MordellKind::J1, a32);
        out[3] = pref * mordell(ctx, MordellKind::K1, a3);
        out[4] = pref * (mordell(ctx, MordellKind::J, a32) / s2);
        out[5] = pref * (mordell(ctx, MordellKind::K, a3) * s2);
        return out;
    }
    const auto& fam = completion_family(FamilyLabel::order6_1);
    long level = fam.theta_level;
    std::vector<std::vector<std::pair<Real, long>>> coeffs(fam.dim);
    for (int i = 0; i < fam.dim; ++i)
        for (const auto& t : fam.shadow[i])
            coeffs[i].emplace_back(t.coeff.value(ctx), t.residue);
    double wd = ctx.working_digits();
    // below t_floor every theta term is < 10^-(wd+16); skip the node entirely
    double t_floor = 2 * std::numbers::pi / (4.0 * level * (wd + 16) * std::numbers::ln10);
    double upper = 2.0 * level * (wd + 6) * std::numbers::ln10 / std::numbers::pi;
    NodeTable memo;
    auto node = [&](const Real& t) -> const VectorPoint& {
        auto it = memo.find(t);
        if (it == memo.end()) {
            VectorPoint vals(fam.dim, Complex(Real(0), Real(0)));
            if (t > t_floor) {
                auto tv = theta_vector(ctx, level, Complex(Real(0), t));
                Complex root = inv_c(principal_sqrt(ctx, tau * t + Complex(Real(0), Real(1))));
                for (int i = 0; i < fam.dim; ++i) {
                    for (const auto& [c, a] : coeffs[i]) vals[i] += tv[a] * c;
                    vals[i] = vals[i] * root;
                }
            }
            it = memo.emplace(t, std::move(vals)).first;
        }
        return it->second;
    };
    auto edges = panel_edges(upper);
    boost::math::quadrature::tanh_sinh<Real> integ(15, Real("1e-500"));
    Real tol = ctx.tolerance() * Real("1e-8");
    // i^{3/2} dz with z = it contributes e(5/8) overall
    Complex pref = e_of_rational(ctx, Rational(5, 8)) / sqrt(Real(24));
    VectorPoint out(fam.dim);
    for (int i = 0; i < fam.dim; ++i) {
        Complex acc(Real(0), Real(0));
        for (size_t p = 0; p + 1 < edges.size(); ++p)
            acc += integrate_component(integ, node, i, edges[p], edges[p + 1], tol);
        out[i] = pref * acc;
    }
    return out;
}

WeilLift lift_to_weil(FamilyLabel label, const Rational& order) {
    const auto& fam = completion_family(label);
    if (!fam.has_lift)
        throw std::domain_error("no lift printed for family " + to_string(label));
    long two_n = 2 * fam.lift_level;
    WeilLift lift;
    lift.level = fam.lift_level;
    long k = ceil_to_long(order) + 1;
    lift.components.assign(two_n, FourierExpansion(1, k));
    for (long r = 0; r < two_n; ++r) {
        for (int i = 0; i < fam.dim; ++i) {
            QuadScalar c = fam.lift[r][i] * fam.components[i].scale;
            if (c.rat == 0) continue;
            if (!c.is_rational())
                throw std::logic_error("lift combination is not rational for family " +
                                       to_string(label));
            lift.components[r] =
                lift.components[r] + component_expansion(label, i, order).scale(c.rat);
        }
    }
    return lift;
}

VectorPoint eval_lift(const PrecisionContext& ctx, FamilyLabel label, const Complex& tau) {
    auto scope = ctx.scope();
    const auto& fam = completion_family(label);
    if (!fam.has_lift)
        throw std::domain_error("no lift printed for family " + to_string(label));
    if (!fam.has_shadow)
        throw std::domain_error("full lift values need a shadow; family " + to_string(label) +
                                " carries only the exact expansion");
    auto H = eval_H(ctx, label, tau);
    long two_n = 2 * fam.lift_level;
    VectorPoint out(two_n, Complex(Real(0), Real(0)));
    for (long r = 0; r < two_n; ++r)
        for (int i = 0; i < fam.dim; ++i)
            if (fam.lift[r][i].rat != 0) out[r] += H[i] * fam.lift[r][i].value(ctx);
    return out;
}

PrincipalPart principal_part(const WeilLift& lift) {
    PrincipalPart pp;
    pp.level = lift.level;
    for (size_t r = 0; r < lift.components.size(); ++r) {
        const auto& comp = lift.components[r];
        for (const auto& [k, c] : comp.terms()) {
            if (k > 0 || c == 0) continue;
            pp.terms[static_cast<long>(r)].emplace_back(Rational(k, comp.denom()), c);
        }
    }
    return pp;
}

Real lift_intertwining_residual(const PrecisionContext& ctx, FamilyLabel label, Generator gen) {
    auto scope = ctx.scope();
    const auto& fam = completion_family(label);
    if (!fam.has_lift)
        throw std::domain_error("no lift printed for family " + to_string(label));
    long two_n = 2 * fam.lift_level;
    int d = fam.dim;
    // numeric lift matrix
    std::vector<std::vector<Real>> L(two_n, std::vector<Real>(d, Real(0)));
    for (long r = 0; r < two_n; ++r)
        for (int i = 0; i < d; ++i)
            if (fam.lift[r][i].rat != 0) L[r][i] = fam.lift[r][i].value(ctx);
    std::vector<std::vector<Complex>> lhs(two_n, std::vector<Complex>(d, Complex(Real(0), Real(0))));
    std::vector<std::vector<Complex>> rhs = lhs;
    if (gen == Generator::T) {
        RepMatrix rho = rho_T(ctx, fam.lift_level, true);
        for (long r = 0; r < two_n; ++r) {
            for (int i = 0; i < d; ++i) {
                lhs[r][fam.t_perm[i]] += Complex(L[r][i], Real(0)) * e_of_rational(ctx, fam.t_phase[i]);
            }
            for (int j = 0; j < d; ++j) rhs[r][j] = rho.at(r, r) * L[r][j];
        }
    } else {
        RepMatrix rho = rho_S(ctx, fam.lift_level, true);
        Complex phase = e_of_rational(ctx, Rational(1, 8));
        for (long r = 0; r < two_n; ++r) {
            for (int j = 0; j < d; ++j) {
                Complex a(Real(0), Real(0));
                for (int i = 0; i < d; ++i) {
                    if (fam.s_matrix[i][j].is_zero()) continue;
                    a += Complex(L[r][i] * fam.s_matrix[i][j].value(ctx), Real(0));
                }
                lhs[r][j] = a;
                Complex b(Real(0), Real(0));
                for (long s = 0; s < two_n; ++s) {
                    b += rho.at(r, s) * L[s][j];
                }
                rhs[r][j] = phase * b;
            }
        }
    }
    Real resid(0);
    for (long r = 0; r < two_n; ++r) {
        for (int j = 0; j < d; ++j) {
            Real diff = abs_c(lhs[r][j] - rhs[r][j]);
            if (diff > resid) resid = diff;
        }
    }
    return resid;
}

}  // namespace mocktheta
