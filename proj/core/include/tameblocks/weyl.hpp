#pragma once

#include "tameblocks/root_datum.hpp"

#include <cstddef>
#include <vector>

namespace tameblocks {

// Finite Weyl group as explicit integer matrices on X, generated by the simple
// reflections s_alpha(x) = x - <x, alpha_vee> alpha. Elements are kept sorted
// so groups compare as sets.
struct WeylGroup {
    int rank = 0;
    std::vector<IntMat> generators; // simple reflections, base order
    std::vector<IntMat> elements;   // sorted

    size_t order() const { return elements.size(); }
};

IntMat reflection_matrix(int rank, const std::vector<long long>& root,
                         const std::vector<long long>& coroot);

WeylGroup generate_weyl(const RootDatum& rd, size_t bound = 1000000);

std::vector<IntMat> close_under_product(std::vector<IntMat> gens, int rank,
                                        size_t bound = 1000000);

bool subgroup_contains(const std::vector<IntMat>& sorted_big, const std::vector<IntMat>& small);

// Orbit of v mod 1, sorted; `elements` is any finite matrix group on X.
std::vector<RatVec> orbit_of(const RatVec& v, const std::vector<IntMat>& elements);

// Lexicographically minimal element of the orbit, entries in [0,1).
RatVec canonical_rep(const RatVec& v, const std::vector<IntMat>& elements);

struct Subgroup {
    std::vector<IntMat> elements; // sorted
    std::vector<std::vector<long long>> generating_roots;
    bool reflection_generated = false;

    size_t order() const { return elements.size(); }
};

// {w in H : w v = v mod 1}. generating_roots lists the roots beta with
// <v, beta_vee> integral; reflection_generated records whether their closure
// is the whole stabilizer (the connectedness proxy used downstream).
Subgroup stabilizer(const RatVec& v, const std::vector<IntMat>& h, const RootDatum& rd);

// Subgroup of W0 generated by the linear parts of the affine reflections at
// the nodes J. Certifies injectivity of the affine-to-linear projection by
// closing the affine action alongside.
Subgroup reflection_subgroup(const RootDatum& rd, const std::vector<AffineNode>& nodes,
                             const std::vector<int>& j);

// Subgroup generated by {s_beta : <v, beta_vee> = 0 mod 1}.
Subgroup fixing_reflection_subgroup(const RatVec& v, const RootDatum& rd);

} // namespace tameblocks
