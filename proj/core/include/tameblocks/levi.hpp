#pragma once

#include "tameblocks/inertial_params.hpp"

#include <optional>
#include <vector>

namespace tameblocks {

// Standard F-stable Levi: a theta-stable subset of the base with its
// reflection subgroup W_M inside W0.
struct LeviContext {
    std::vector<int> simple_positions; // sorted positions into rd.simple
    Subgroup group;
};

LeviContext make_levi_context(const RootDatum& rd, const FrobeniusDescriptor& f,
                              std::vector<int> simple_positions);

// W_M-orbit parameter -> W0-orbit parameter.
InertialParam levi_param_map(const RatVec& rep_m, const WeylGroup& w0,
                             const FrobeniusDescriptor& f, Lambda lambda);

// All F-stable W_M-orbits inside the W0-orbit of phi (canonical W_M reps,
// sorted); possibly empty.
std::vector<RatVec> restriction_fibers(const InertialParam& phi, const LeviContext& m,
                                       const WeylGroup& w0, const FrobeniusDescriptor& f);

// C_dual(phi) inside the Levi dual, through the Weyl reformulation: the W0
// stabilizer of the representative lies in W_M (the fixing reflections are
// checked alongside for reporting).
bool satisfies_equivalence_criterion(const RatVec& rep_m, const LeviContext& m,
                                     const RootDatum& rd, const WeylGroup& w0);

// Witness that phi extends into a proper Levi of the L-group: a Frobenius
// twist w, a proper twist-stable standard Levi, a representative v and an
// element of W_M with w'' w theta(q v) = v.
struct DiscretenessWitness {
    IntMat twist;
    std::vector<int> levi_positions;
    RatVec vector;
    IntMat inner;
};

std::optional<DiscretenessWitness> discreteness_witness(const InertialParam& phi,
                                                        const RootDatum& rd,
                                                        const FrobeniusDescriptor& f,
                                                        const WeylGroup& w0);

bool is_discrete(const InertialParam& phi, const RootDatum& rd, const FrobeniusDescriptor& f,
                 const WeylGroup& w0);

} // namespace tameblocks
