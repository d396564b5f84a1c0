#include "tameblocks/intmat.hpp"

#include "tameblocks/errors.hpp"

namespace tameblocks {

IntMat IntMat::identity(int size) {
    IntMat m(size);
    for (int i = 0; i < size; ++i)
        m.at(i, i) = 1;
    return m;
}

bool IntMat::is_identity() const { return *this == identity(n); }

IntMat operator*(const IntMat& x, const IntMat& y) {
    IntMat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            long long xik = x.at(i, k);
            if (xik == 0)
                continue;
            for (int j = 0; j < x.n; ++j)
                r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

IntMat transpose(const IntMat& m) {
    IntMat r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            r.at(j, i) = m.at(i, j);
    return r;
}

std::vector<long long> mat_vec(const IntMat& m, const std::vector<long long>& v) {
    std::vector<long long> r(static_cast<size_t>(m.n), 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            r[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

RatVec mat_vec(const IntMat& m, const RatVec& v) {
    RatVec r(static_cast<size_t>(m.n));
    for (int i = 0; i < m.n; ++i) {
        Rational acc(0);
        for (int j = 0; j < m.n; ++j)
            acc = acc + Rational(m.at(i, j)) * v[static_cast<size_t>(j)];
        r[static_cast<size_t>(i)] = acc;
    }
    return r;
}

long long det(const IntMat& m) {
    // Bareiss fraction-free elimination.
    int n = m.n;
    if (n == 0)
        return 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = m.at(i, j);
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    __int128 d = a[n - 1][n - 1] * sign;
    if (d > INT64_MAX || d < INT64_MIN)
        throw validation_error("determinant overflow");
    return static_cast<long long>(d);
}

int matrix_order(const IntMat& m, int bound) {
    IntMat p = m;
    for (int k = 1; k <= bound; ++k) {
        if (p.is_identity())
            return k;
        p = p * m;
    }
    throw bound_error("matrix order exceeds bound");
}

std::optional<IntMat> inverse_unimodular(const IntMat& m) {
    long long d = det(m);
    if (d != 1 && d != -1)
        return std::nullopt;
    // For det = ±1 the inverse is the order-1 predecessor in the cyclic group
    // when the order is finite; fall back to adjugate via rational elimination.
    int n = m.n;
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug[i][j] = Rational(m.at(i, j));
        aug[i][n + i] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!aug[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return std::nullopt;
        std::swap(aug[col], aug[pivot]);
        Rational inv(aug[col][col].den, aug[col][col].num);
        for (int j = 0; j < 2 * n; ++j)
            aug[col][j] = aug[col][j] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col].is_zero())
                continue;
            Rational f = aug[r][col];
            for (int j = 0; j < 2 * n; ++j)
                aug[r][j] = aug[r][j] - f * aug[col][j];
        }
    }
    IntMat inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!aug[i][n + j].is_integer())
                return std::nullopt;
            inv.at(i, j) = aug[i][n + j].num;
        }
    return inv;
}

} // namespace tameblocks
