#include "tameblocks/lattice.hpp"

#include "tameblocks/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

namespace tameblocks {

namespace {

long long mul_checked(long long x, long long y) {
    __int128 p = static_cast<__int128>(x) * y;
    if (p > INT64_MAX || p < INT64_MIN)
        throw validation_error("integer overflow in lattice arithmetic");
    return static_cast<long long>(p);
}

void add_row(IntRowMat& m, size_t dst, size_t src, long long f) {
    for (size_t j = 0; j < m[dst].size(); ++j)
        m[dst][j] += mul_checked(f, m[src][j]);
}

void add_col(IntRowMat& m, size_t dst, size_t src, long long f) {
    for (size_t i = 0; i < m.size(); ++i)
        m[i][dst] += mul_checked(f, m[i][src]);
}

void swap_col(IntRowMat& m, size_t a, size_t b) {
    for (auto& row : m)
        std::swap(row[a], row[b]);
}

IntRowMat identity_rows(size_t n) {
    IntRowMat r(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        r[i][i] = 1;
    return r;
}

} // namespace

IntRowMat matmul(const IntRowMat& a, const IntRowMat& b) {
    size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    IntRowMat r(m, std::vector<long long>(n, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0)
                continue;
            for (size_t j = 0; j < n; ++j)
                r[i][j] += mul_checked(a[i][t], b[t][j]);
        }
    return r;
}

SmithForm smith_normal_form(const IntRowMat& a) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    SmithForm s;
    s.d = a;
    s.u = identity_rows(m);
    s.v = identity_rows(n);
    auto& d = s.d;

    size_t t = 0;
    while (t < m && t < n) {
        // Locate a minimal nonzero entry in the remaining block.
        size_t pi = t, pj = t;
        long long best = 0;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                long long v = d[i][j] < 0 ? -d[i][j] : d[i][j];
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0)
            break;
        std::swap(d[t], d[pi]);
        std::swap(s.u[t], s.u[pi]);
        if (pj != t) {
            swap_col(d, t, pj);
            swap_col(s.v, t, pj);
        }

        bool clean = true;
        for (size_t i = t + 1; i < m; ++i)
            if (d[i][t] != 0) {
                long long q = d[i][t] / d[t][t];
                add_row(d, i, t, -q);
                add_row(s.u, i, t, -q);
                if (d[i][t] != 0)
                    clean = false;
            }
        for (size_t j = t + 1; j < n; ++j)
            if (d[t][j] != 0) {
                long long q = d[t][j] / d[t][t];
                add_col(d, j, t, -q);
                add_col(s.v, j, t, -q);
                if (d[t][j] != 0)
                    clean = false;
            }
        if (!clean)
            continue; // pivot shrank; repeat with a smaller pivot

        // Enforce divisibility of the remaining block by the pivot.
        bool fixed = false;
        for (size_t i = t + 1; i < m && !fixed; ++i)
            for (size_t j = t + 1; j < n && !fixed; ++j)
                if (d[i][j] % d[t][t] != 0) {
                    add_row(d, t, i, 1);
                    add_row(s.u, t, i, 1);
                    fixed = true;
                }
        if (fixed)
            continue;

        if (d[t][t] < 0) {
            for (size_t j = 0; j < n; ++j)
                d[t][j] = -d[t][j];
            for (size_t j = 0; j < m; ++j)
                s.u[t][j] = -s.u[t][j];
        }
        ++t;
    }

    s.diagonal.assign(std::min(m, n), 0);
    for (size_t i = 0; i < s.diagonal.size(); ++i)
        s.diagonal[i] = d[i][i];
    return s;
}

std::vector<std::vector<long long>> integer_kernel(const IntRowMat& a) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    if (n == 0)
        return {};
    SmithForm s = smith_normal_form(a);
    std::vector<std::vector<long long>> basis;
    for (size_t j = 0; j < n; ++j) {
        bool in_kernel = j >= std::min(m, n) || s.diagonal[j] == 0;
        if (!in_kernel)
            continue;
        std::vector<long long> col(n);
        for (size_t i = 0; i < n; ++i)
            col[i] = s.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

std::optional<std::vector<long long>> solve_integral(const IntRowMat& a,
                                                     const std::vector<long long>& b) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    SmithForm s = smith_normal_form(a);
    // U A V = D, so A x = b  <=>  D y = U b with x = V y.
    std::vector<long long> ub(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            ub[i] += mul_checked(s.u[i][j], b[j]);
    std::vector<long long> y(n, 0);
    for (size_t i = 0; i < m; ++i) {
        long long di = i < std::min(m, n) ? s.diagonal[i] : 0;
        if (di == 0) {
            if (ub[i] != 0)
                return std::nullopt;
        } else {
            if (ub[i] % di != 0)
                return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    std::vector<long long> x(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            x[i] += mul_checked(s.v[i][j], y[j]);
    return x;
}

long long lattice_index(int r, const std::vector<std::vector<long long>>& generators) {
    if (r == 0)
        return 1;
    IntRowMat cols(static_cast<size_t>(r), std::vector<long long>(generators.size(), 0));
    for (size_t g = 0; g < generators.size(); ++g)
        for (int i = 0; i < r; ++i)
            cols[static_cast<size_t>(i)][g] = generators[g][static_cast<size_t>(i)];
    SmithForm s = smith_normal_form(cols);
    long long idx = 1;
    for (int i = 0; i < r; ++i) {
        long long di = static_cast<size_t>(i) < s.diagonal.size() ? s.diagonal[i] : 0;
        if (di == 0)
            return 0;
        idx = mul_checked(idx, di);
    }
    return idx;
}

} // namespace tameblocks
