#pragma once

#include "tameblocks/rational.hpp"

#include <optional>
#include <vector>

namespace tameblocks {

// Square integer matrix, row-major. Acts on column vectors.
struct IntMat {
    int n = 0;
    std::vector<long long> a;

    IntMat() = default;
    explicit IntMat(int size) : n(size), a(static_cast<size_t>(size) * size, 0) {}

    static IntMat identity(int size);

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

    bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
    bool operator<(const IntMat& o) const { return a < o.a; }

    bool is_identity() const;
};

IntMat operator*(const IntMat& x, const IntMat& y);
IntMat transpose(const IntMat& m);
std::vector<long long> mat_vec(const IntMat& m, const std::vector<long long>& v);
RatVec mat_vec(const IntMat& m, const RatVec& v);
long long det(const IntMat& m);

// Exact multiplicative order; throws bound_error if it exceeds `bound`.
int matrix_order(const IntMat& m, int bound = 4096);

// Inverse of a matrix with det = ±1; nullopt otherwise.
std::optional<IntMat> inverse_unimodular(const IntMat& m);

} // namespace tameblocks
