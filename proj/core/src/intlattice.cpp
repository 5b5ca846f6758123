#include "permfp/intlattice.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace permfp {

IntMat int_identity(int n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
    int n = static_cast<int>(a.size());
    int k = n ? static_cast<int>(a[0].size()) : 0;
    int m = k ? static_cast<int>(b[0].size()) : (b.empty() ? 0 : static_cast<int>(b[0].size()));
    assert(b.size() == static_cast<size_t>(k));
    IntMat out(n, std::vector<Int>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

IntMat int_transpose(const IntMat& a) {
    int n = static_cast<int>(a.size());
    int m = n ? static_cast<int>(a[0].size()) : 0;
    IntMat out(m, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) out[j][i] = a[i][j];
    return out;
}

namespace {

void swap_rows(IntMat& m, int i, int j) { std::swap(m[i], m[j]); }
void swap_cols(IntMat& m, int i, int j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}
void add_row(IntMat& m, int dst, int src, const Int& c) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += c * m[src][j];
}
void add_col(IntMat& m, int dst, int src, const Int& c) {
    for (auto& row : m) row[dst] += c * row[src];
}
void negate_row(IntMat& m, int i) {
    for (auto& v : m[i]) v = -v;
}
void negate_col(IntMat& m, int i) {
    for (auto& row : m) row[i] = -row[i];
}

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
    int n = static_cast<int>(a.size());
    int m = n ? static_cast<int>(a[0].size()) : 0;
    SmithForm f;
    f.s = a;
    f.u = int_identity(n);
    f.v = int_identity(m);
    auto& s = f.s;

    int t = 0;
    while (t < n && t < m) {
        // find a nonzero pivot with minimal |value| in the remaining block
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j) {
                if (s[i][j] == 0) continue;
                Int v = abs(s[i][j]);
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // all zero
        if (pi != t) {
            swap_rows(s, pi, t);
            swap_rows(f.u, pi, t);
        }
        if (pj != t) {
            swap_cols(s, pj, t);
            swap_cols(f.v, pj, t);
        }

        bool clean = true;
        for (int i = t + 1; i < n; ++i) {
            if (s[i][t] == 0) continue;
            Int q = s[i][t] / s[t][t];
            add_row(s, i, t, -q);
            add_row(f.u, i, t, -q);
            if (s[i][t] != 0) clean = false;
        }
        for (int j = t + 1; j < m; ++j) {
            if (s[t][j] == 0) continue;
            Int q = s[t][j] / s[t][t];
            add_col(s, j, t, -q);
            add_col(f.v, j, t, -q);
            if (s[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // pivot shrank; repeat with the same t

        // pivot must divide every remaining entry for the Smith chain condition
        bool divides = true;
        for (int i = t + 1; i < n && divides; ++i)
            for (int j = t + 1; j < m && divides; ++j)
                if (s[i][j] % s[t][t] != 0) {
                    add_row(s, t, i, 1);
                    add_row(f.u, t, i, 1);
                    divides = false;
                }
        if (!divides) continue;

        if (s[t][t] < 0) {
            negate_row(s, t);
            negate_row(f.u, t);
        }
        ++t;
    }
    f.rank = t;
    return f;
}

IntMat int_kernel(const IntMat& a) {
    int m = a.empty() ? 0 : static_cast<int>(a[0].size());
    SmithForm f = smith_normal_form(a);
    // a v e_j has j-th Smith column as image; columns past the rank are a
    // kernel basis since s e_j = 0 there.
    IntMat out(m, std::vector<Int>(m - f.rank, 0));
    for (int j = f.rank; j < m; ++j)
        for (int i = 0; i < m; ++i) out[i][j - f.rank] = f.v[i][j];
    return out;
}

int int_rank(const IntMat& a) { return smith_normal_form(a).rank; }

std::optional<std::vector<Int>> int_solve(const IntMat& a, const std::vector<Int>& b) {
    int n = static_cast<int>(a.size());
    int m = n ? static_cast<int>(a[0].size()) : 0;
    assert(static_cast<int>(b.size()) == n);
    SmithForm f = smith_normal_form(a);
    // a x = b  <=>  s y = u b with x = v y
    std::vector<Int> ub(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ub[i] += f.u[i][j] * b[j];
    std::vector<Int> y(m, 0);
    for (int i = 0; i < n; ++i) {
        Int d = (i < m && i < f.rank) ? f.s[i][i] : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    std::vector<Int> x(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) x[i] += f.v[i][j] * y[j];
    return x;
}

Int int_abs_det(const IntMat& a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    if (static_cast<int>(a[0].size()) != n) throw std::invalid_argument("int_abs_det: not square");
    SmithForm f = smith_normal_form(a);
    if (f.rank < n) return 0;
    Int d = 1;
    for (int i = 0; i < n; ++i) d *= f.s[i][i];
    return abs(d);
}

}  // namespace permfp
