#include "sierpile/paperdata.hpp"

#include "sierpile/linalg.hpp"

namespace sierpile {
namespace paper {

std::array<Rat, 7> mn_basis(int n) {
    return {Rat(1),
            rat_pow(Rat(3, 5), n),
            rat_pow(Rat(2, 5), n),
            rat_pow(Rat(1, 15), n),
            rat_pow(Rat(1, 25), n),
            rat_pow(Rat(2, 75), n),
            rat_pow(Rat(1, 375), n)};
}

namespace {
CutMatrix make(std::initializer_list<std::initializer_list<Rat>> rows) {
    CutMatrix m;
    int r = 0;
    for (auto& row : rows) {
        int c = 0;
        for (auto& x : row) m[r][c++] = x;
        ++r;
    }
    return m;
}
Rat q(long a, long b) { return Rat(a, b); }
}  // namespace

const CutMatrix& bcut_tree() {
    static const CutMatrix m = make(
        {{q(0, 1), q(605, 1176), q(0, 1), q(0, 1), q(-1375, 588), q(0, 1), q(3125, 1176)},
         {q(0, 1), q(110, 147), q(-605, 1512), q(0, 1), q(2375, 2646), q(1375, 1512),
          q(-15625, 2646)},
         {q(11, 14), q(-375, 392), q(55, 189), q(-25, 14), q(5375, 1323), q(-1375, 756),
          q(40625, 10584)},
         {q(3, 14), q(-15, 49), q(55, 504), q(25, 14), q(-4625, 1764), q(1375, 1512),
          q(-3125, 5292)}});
    return m;
}

const CutMatrix& lcut_tree() {
    static const CutMatrix m = make(
        {{q(0, 1), q(605, 1176), q(0, 1), q(0, 1), q(-1375, 588), q(0, 1), q(3125, 1176)},
         {q(0, 1), q(110, 147), q(-275, 378), q(0, 1), q(2375, 2646), q(625, 378),
          q(-15625, 2646)},
         {q(11, 14), q(-375, 392), q(100, 189), q(-20, 21), q(5375, 1323), q(-625, 189),
          q(40625, 10584)},
         {q(3, 14), q(-15, 49), q(25, 126), q(20, 21), q(-4625, 1764), q(625, 378),
          q(-3125, 5292)}});
    return m;
}

const CutMatrix& bcut_s2() {
    static const CutMatrix m = make(
        {{q(0, 1), q(121, 392), q(0, 1), q(0, 1), q(-275, 196), q(0, 1), q(625, 392)},
         {q(0, 1), q(22, 49), q(-11, 252), q(0, 1), q(475, 882), q(85, 63), q(-3125, 882)},
         {q(11, 14), q(-225, 392), q(2, 63), q(-2, 7), q(1075, 441), q(-170, 63),
          q(8125, 3528)},
         {q(3, 14), q(-9, 49), q(1, 84), q(2, 7), q(-925, 588), q(85, 63), q(-625, 1764)}});
    return m;
}

const CutMatrix& rcut_s2() {
    static const CutMatrix m = make(
        {{q(0, 1), q(363, 392), q(0, 1), q(0, 1), q(-110, 392), q(0, 1), q(-1625, 392)},
         {q(0, 1), q(66, 49), q(-77, 72), q(0, 1), q(95, 882), q(-25, 72), q(8125, 882)},
         {q(11, 14), q(-675, 392), q(7, 9), q(-2, 7), q(215, 441), q(25, 36),
          q(-21125, 3528)},
         {q(3, 14), q(-27, 49), q(7, 24), q(2, 7), q(-185, 588), q(-25, 72),
          q(1625, 1764)}});
    return m;
}

const CutMatrix& lcut_s2() {
    static const CutMatrix m = make(
        {{q(0, 1), q(363, 392), q(0, 1), q(0, 1), q(-110, 392), q(0, 1), q(-1625, 392)},
         {q(0, 1), q(66, 49), q(-319, 252), q(0, 1), q(95, 882), q(25, 252), q(8125, 882)},
         {q(11, 14), q(-675, 392), q(58, 63), q(3, 14), q(215, 441), q(-25, 126),
          q(-21125, 3528)},
         {q(3, 14), q(-27, 49), q(29, 84), q(-3, 14), q(-185, 588), q(25, 252),
          q(1625, 1764)}});
    return m;
}

const CutMatrix& bcut_r() {
    static const CutMatrix m = make(
        {{q(0, 1), q(363, 392), q(0, 1), q(0, 1), q(814, 392), q(0, 1), q(195, 392)},
         {q(0, 1), q(66, 49), q(-2629, 2520), q(0, 1), q(-703, 882), q(-227, 168),
          q(-325, 294)},
         {q(11, 14), q(-675, 392), q(239, 315), q(57, 70), q(-1591, 441), q(227, 84),
          q(845, 1176)},
         {q(3, 14), q(-27, 49), q(239, 840), q(-57, 70), q(1369, 588), q(-227, 168),
          q(-65, 588)}});
    return m;
}

DescDist eval_cut(const CutMatrix& m, int n) {
    auto b = mn_basis(n);
    DescDist d = dist_zero();
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 7; ++j) d[k] += m[k][j] * b[j];
    return d;
}

DescDist table1_eta2(int n) {
    Rat t = rat_pow(Rat(2, 5), n);
    DescDist d = dist_zero();
    d[1] = t;
    d[2] = 1 - t;
    return d;
}

DescDist table1_eta2bar(int n) {
    Rat a = rat_pow(Rat(3, 5), n), b = rat_pow(Rat(2, 5), n), c = rat_pow(Rat(1, 25), n);
    DescDist d = dist_zero();
    d[0] = Rat(33, 28) * a - Rat(5, 28) * c;
    d[1] = Rat(39, 28) * a - Rat(29, 18) * b + Rat(55, 252) * c;
    d[2] = 1 - Rat(18, 7) * a + Rat(29, 18) * b - Rat(5, 126) * c;
    return d;
}

DescDist table1_eta3(int n) {
    Rat a = rat_pow(Rat(3, 5), n), b = rat_pow(Rat(2, 5), n), c = rat_pow(Rat(1, 25), n);
    DescDist d = dist_zero();
    d[0] = Rat(11, 14) * a - Rat(3, 14) * c;
    d[1] = Rat(39, 42) * a - Rat(28, 42) * b + Rat(11, 42) * c;
    d[2] = 1 - Rat(12, 7) * a + Rat(2, 3) * b - Rat(1, 21) * c;
    return d;
}

std::array<std::array<Rat, 3>, 3> root_recursion_matrix() {
    return {{{q(12, 30), q(0, 1), q(0, 1)},
             {q(6, 30), q(12, 30), q(9, 30)},
             {q(14, 50), q(12, 50), q(12, 50)}}};
}

std::array<Rat, 3> root_recursion_delta2() { return {q(18, 30), q(3, 30), q(12, 50)}; }

std::array<std::array<long, 5>, 5> matrix_m() {
    return {{{300, 50, 50, 50, 0},
             {195, 150, 30, 30, 45},
             {195, 30, 150, 30, 45},
             {195, 30, 30, 150, 45},
             {108, 78, 78, 78, 108}}};
}

std::array<long, 5> m_eigenvalues() { return {450, 150, 120, 120, 18}; }

std::array<std::array<long, 5>, 5> m_eigenvectors() {
    return {{{1, 1, 1, 1, 1},
             {-1, 1, 1, 1, 3},
             {0, -1, 0, 1, 0},
             {0, -1, 1, 0, 0},
             {125, -235, -235, -235, 461}}};
}

Rat zeta_limit() { return q(7259, 5616); }
Rat mean_height_limit() { return q(24107, 11232); }

std::array<Rat, 4> dbar_limits() {
    return {q(10957, 40464), q(22737599, 87978852), q(33273907, 87978852),
            q(3619595, 39101712)};
}

std::array<Rat, 4> wbar_limits() {
    return {q(10957, 161856), q(649680671, 4222984896), q(1448254439, 4222984896),
            q(1839170699, 4222984896)};
}

std::array<std::array<Rat, 4>, 3> PaperPipeline::e_vec(int n) {
    auto add = [](DescDist a, const DescDist& b) {
        for (int k = 0; k < 5; ++k) a[k] += b[k];
        return a;
    };
    DescDist eT = add(eval_cut(bcut_tree(), n), add(eval_cut(lcut_tree(), n),
                                                    eval_cut(lcut_tree(), n)));
    DescDist eS = add(eval_cut(bcut_s2(), n), add(eval_cut(rcut_s2(), n),
                                                  eval_cut(lcut_s2(), n)));
    DescDist eR = add(eval_cut(bcut_r(), n), add(eval_cut(bcut_r(), n),
                                                 eval_cut(bcut_r(), n)));
    std::array<std::array<Rat, 4>, 3> out;
    for (int k = 0; k < 4; ++k) {
        out[0][k] = eT[k];
        out[1][k] = eS[k];
        out[2][k] = eR[k];
    }
    return out;
}

namespace {

// collapsed 3-class transition (S1=S2=S3): rows over (T, S, R)
const std::array<std::array<Rat, 3>, 3>& collapsed_a() {
    static const std::array<std::array<Rat, 3>, 3> a = {
        {{Rat(2), Rat(1), Rat(0)},
         {Rat(195, 150), Rat(210, 150), Rat(45, 150)},
         {Rat(108, 150), Rat(234, 150), Rat(108, 150)}}};
    return a;
}

std::array<Rat, 4> limit_from(const std::function<std::array<std::array<Rat, 4>, 3>(int)>& ev) {
    // lim D_n / 3^n = Perron projection of sum_m 3^-m e_m; left Perron u of A (uA = 3u)
    const auto& A = collapsed_a();
    std::array<std::array<Rat, 3>, 3> At;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) At[i][j] = A[j][i] - (i == j ? Rat(3) : Rat(0));
    auto u = nullspace_vector_3(At);
    Rat usum = u[0] + u[1] + u[2];
    std::array<Rat, 4> lim;
    for (int k = 0; k < 4; ++k) {
        // s_m = u . e_m; exact geometric-tail sum via minimal linear recurrence
        auto f = [&](int m) {
            auto e = ev(m);
            return u[0] * e[0][k] + u[1] * e[1][k] + u[2] * e[2][k];
        };
        lim[k] = weighted_tail_sum(f, Rat(1, 3)) / usum * Rat(2, 3);
    }
    return lim;
}

}  // namespace

std::array<Rat, 4> PaperPipeline::dbar_limit() { return limit_from(&PaperPipeline::e_vec); }

std::array<Rat, 4> PaperPipeline::wbar_limit() {
    auto d = dbar_limit();
    std::array<Rat, 4> w;
    for (int i = 0; i < 4; ++i) {
        w[i] = 0;
        for (int j = 0; j <= i; ++j) w[i] += d[j] / (4 - j);
    }
    return w;
}

Rat PaperPipeline::zeta() {
    auto d = dbar_limit();
    Rat z(0);
    for (int i = 0; i < 4; ++i) z += i * d[i];
    return z;
}

Rat PaperPipeline::wbar() {
    auto w = wbar_limit();
    Rat s(0);
    for (int i = 0; i < 4; ++i) s += i * w[i];
    return s;
}

}  // namespace paper
}  // namespace sierpile
