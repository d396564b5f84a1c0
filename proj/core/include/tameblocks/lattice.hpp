#pragma once

#include <optional>
#include <vector>

namespace tameblocks {

using IntRowMat = std::vector<std::vector<long long>>; // possibly rectangular, row-major

// Smith normal form U*A*V = D with U, V unimodular and D diagonal with
// d1 | d2 | ... ; diagonal entries are nonnegative.
struct SmithForm {
    IntRowMat u, v, d;
    std::vector<long long> diagonal; // min(m,n) entries, trailing zeros kept
};

SmithForm smith_normal_form(const IntRowMat& a);

IntRowMat matmul(const IntRowMat& a, const IntRowMat& b);

// Basis of the integer kernel {x in Z^n : A x = 0}.
std::vector<std::vector<long long>> integer_kernel(const IntRowMat& a);

// One integral solution of A x = b, if any.
std::optional<std::vector<long long>> solve_integral(const IntRowMat& a,
                                                     const std::vector<long long>& b);

// Index [Z^r : L] of the sublattice spanned by the given generators; 0 when the
// span has rank < r (infinite index).
long long lattice_index(int r, const std::vector<std::vector<long long>>& generators);

} // namespace tameblocks
