#pragma once

#include "tameblocks/intmat.hpp"
#include "tameblocks/rational.hpp"

#include <string>
#include <vector>

namespace tameblocks {

/**
 * Based root datum (X, X_vee, Phi, Phi_vee, Delta) in coordinates: X = Z^rank,
 * the pairing is the standard dot product, roots and coroots are integer
 * vectors, and the base is a subset of root indices. Reducible and
 * non-semisimple data (torus factors) are allowed; the affine combinatorics is
 * built per irreducible component of the derived part.
 *
 * Canonical form: roots sorted lexicographically with their coroots attached,
 * simple indices sorted so the simple roots are lexicographically increasing.
 * validate_root_datum establishes the canonical form; everything downstream
 * assumes it.
 */
struct RootDatum {
    int rank = 0;
    std::vector<std::vector<long long>> roots;
    std::vector<std::vector<long long>> coroots;
    std::vector<int> simple; // indices into roots
    std::string name;

    bool is_torus() const { return roots.empty(); }
    const std::vector<long long>& simple_root(int k) const {
        return roots[static_cast<size_t>(simple[static_cast<size_t>(k)])];
    }
    const std::vector<long long>& simple_coroot(int k) const {
        return coroots[static_cast<size_t>(simple[static_cast<size_t>(k)])];
    }
};

// Checks every invariant and returns the datum in canonical order; throws
// validation_error naming the first violated invariant and offending index.
RootDatum validate_root_datum(RootDatum raw);

// Finite-order lattice automorphism stabilizing the base.
struct BasedAutomorphism {
    IntMat matrix;
    int order = 1;
};

BasedAutomorphism based_automorphism(const RootDatum& rd, IntMat matrix);

// Permutation induced on simple positions by a based matrix.
std::vector<int> simple_action(const RootDatum& rd, const IntMat& theta);

// (X_vee, X, Phi_vee, Phi) with the simple coroots as base.
RootDatum dual_root_datum(const RootDatum& rd);

// Transport of a based automorphism across duality. Plain transpose: this is
// the contravariant transport, t(ab) = t(b)t(a).
BasedAutomorphism transpose_automorphism(const RootDatum& rd, const BasedAutomorphism& theta);

// Sub-datum spanned by a subset of the base (positions into rd.simple).
RootDatum levi_subdatum(const RootDatum& rd, const std::vector<int>& simple_positions);

// Coefficients of an element of the root lattice in the simple basis.
RatVec simple_coefficients(const RootDatum& rd, const std::vector<long long>& v);

struct Component {
    std::vector<int> simple_positions; // positions into rd.simple
    std::vector<int> root_indices;
    std::vector<long long> highest_root;
    std::vector<long long> marks; // highest root coefficients on this component's simples
};

std::vector<Component> components(const RootDatum& rd);

/**
 * One node of the affine simple system. Finite nodes carry a simple root with
 * offset 0; the extra node per component carries the affine root delta -
 * (highest root), i.e. linear part -(highest root) and offset 1. The affine
 * function of a node on the apartment X_vee tensor Q is
 * x -> <linear, x> + offset.
 */
struct AffineNode {
    std::vector<long long> linear;
    int offset = 0;
    int component = 0;
};

// Per component: the finite simple nodes in canonical order, then the affine
// node. Empty for a torus datum.
std::vector<AffineNode> affine_simple_system(const RootDatum& rd);

} // namespace tameblocks
