#include "sierpile/linalg.hpp"

namespace sierpile {

std::vector<Rat> minimal_recurrence(const std::vector<Rat>& s) {
    std::vector<Rat> C{Rat(1)}, B{Rat(1)};
    int L = 0, m = 1;
    Rat b(1);
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rat d = s[n];
        for (int i = 1; i <= L; ++i) d += C[i] * s[n - i];
        if (d == 0) {
            ++m;
        } else if (2 * L <= static_cast<int>(n)) {
            auto T = C;
            Rat coef = d / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, Rat(0));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
            L = static_cast<int>(n) + 1 - L;
            B = T;
            b = d;
            m = 1;
        } else {
            Rat coef = d / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, Rat(0));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
            ++m;
        }
    }
    return C;
}

Rat weighted_tail_sum(const std::function<Rat(int)>& f, const Rat& z, int fit_terms,
                      int check_terms) {
    std::vector<Rat> s;
    for (int m = 1; m <= fit_terms + check_terms; ++m) s.push_back(f(m));
    std::vector<Rat> fit(s.begin(), s.begin() + fit_terms);
    auto C = minimal_recurrence(fit);
    const int p = static_cast<int>(C.size()) - 1;
    for (std::size_t n = p; n < s.size(); ++n) {
        Rat acc(0);
        for (int j = 0; j <= p; ++j) acc += C[j] * s[n - j];
        if (acc != 0) throw std::runtime_error("weighted_tail_sum: recurrence check failed");
    }
    // S(z) = sum_{k>=0} s_{k+1} z^k = P(z)/C(z)
    Rat num(0), den(0), zp(1);
    for (int i = 0; i < p; ++i) {
        Rat pi = s[i];
        for (int j = 1; j <= i; ++j) pi += C[j] * s[i - j];
        num += pi * zp;
        zp *= z;
    }
    zp = 1;
    for (int j = 0; j <= p; ++j) {
        den += C[j] * zp;
        zp *= z;
    }
    if (p == 0) return Rat(0);
    return z * num / den;
}

std::vector<Rat> nullspace_vector(std::vector<std::vector<Rat>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int pr = -1;
        for (int rr = r; rr < n; ++rr)
            if (m[rr][c] != 0) {
                pr = rr;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        Rat pv = m[r][c];
        for (auto& x : m[r]) x /= pv;
        for (int rr = 0; rr < n; ++rr) {
            if (rr == r || m[rr][c] == 0) continue;
            Rat fme = m[rr][c];
            for (int cc = 0; cc < n; ++cc) m[rr][cc] -= fme * m[r][cc];
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    int free = -1;
    for (int c = 0; c < n; ++c)
        if (!is_piv[c]) free = c;
    if (free < 0) throw std::runtime_error("nullspace_vector: matrix nonsingular");
    std::vector<Rat> u(n, Rat(0));
    u[free] = 1;
    for (std::size_t rr = 0; rr < piv.size(); ++rr) u[piv[rr]] = -m[rr][free];
    return u;
}

std::array<Rat, 3> nullspace_vector_3(const std::array<std::array<Rat, 3>, 3>& m) {
    std::vector<std::vector<Rat>> v(3, std::vector<Rat>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v[i][j] = m[i][j];
    auto u = nullspace_vector(v);
    return {u[0], u[1], u[2]};
}

BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int sw = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    sw = r;
                    break;
                }
            if (sw < 0) return 0;
            std::swap(m[k], m[sw]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace sierpile
