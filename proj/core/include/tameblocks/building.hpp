#pragma once

#include "tameblocks/inertial_params.hpp"

#include <string>
#include <vector>

namespace tameblocks {

/**
 * Facet types of the fundamental alcove.
 *
 * Conventions. Nodes are indices into affine_simple_system(rd). A facet type
 * is the set J of nodes whose affine roots vanish on the face; J is proper on
 * every irreducible component. Smaller faces have larger J: a facet with node
 * set J' is a face of the facet with node set J exactly when J' contains J
 * (the chamber is J = {} and the alcove vertices drop one node per component).
 * The barycenter is the average of the face's alcove vertices, an exact
 * rational point where precisely the J-nodes vanish.
 *
 * Frobenius acts on nodes through theta and, for inner twists, the affine
 * diagram rotation; on classes at a facet it acts by the rotation's linear
 * part composed with v -> theta(q v).
 */
struct FacetType {
    std::vector<int> nodes; // sorted node indices
    RatVec barycenter;

    std::string key() const; // "J={i,j,...}", stable across runs
};

// One generator of the apartment symmetry group used by the 0-coherence
// conjugation condition: a permutation of the affine nodes together with the
// linear part transporting classes.
struct BuildingSymmetry {
    std::vector<int> node_perm;
    IntMat transport;
};

struct BuildingContext {
    RootDatum rd;
    FrobeniusDescriptor frob;
    WeylGroup w0;
    std::vector<AffineNode> nodes;
    std::vector<int> frob_node_perm; // rotation o theta on nodes
    IntMat facet_twist;              // rotation linear part (identity when absent)
    std::vector<FacetType> facets;   // F-stable types, canonical order
    std::vector<Subgroup> facet_groups;
    std::vector<BuildingSymmetry> symmetries;

    int facet_index(const std::vector<int>& nodes) const;
};

BuildingContext make_building_context(const RootDatum& rd, const FrobeniusDescriptor& f,
                                      size_t weyl_bound = 1000000);

// All F-stable proper facet types with barycenters (standalone form).
std::vector<FacetType> facet_types(const RootDatum& rd, const FrobeniusDescriptor& f);

// Root datum of the parahoric quotient at a facet: roots integral on the
// barycenter, base the linear parts of J.
RootDatum parahoric_quotient(const RootDatum& rd, const std::vector<AffineNode>& nodes,
                             const FacetType& facet);

// Frobenius on classes at a facet of this building.
RatVec facet_frobenius_image(const BuildingContext& ctx, const RatVec& v);

// Fiber-defining map: class at a facet -> inertial parameter (W0-orbit).
RatVec psi_sigma(const BuildingContext& ctx, const RatVec& class_rep);

// Re-canonicalize a class from a facet to one of its faces (J grows).
RatVec face_restriction(const BuildingContext& ctx, int from_facet, int to_facet,
                        const RatVec& class_rep);

// Classes attached to each facet type, aligned with ctx.facets; each list is
// sorted and holds canonical representatives in the facet's group.
struct ClassSystem {
    std::vector<std::vector<RatVec>> classes;
};

ClassSystem compute_S_phi(const BuildingContext& ctx, const InertialParam& phi);

bool is_attained(const BuildingContext& ctx, const InertialParam& phi);

struct CheckReport {
    bool pass = true;
    std::string detail; // first counterexample when failing
};

// 0-coherence: face-restriction preimage condition over all comparable facet
// pairs, and equivariance under the apartment symmetry generators.
CheckReport verify_zero_coherence(const BuildingContext& ctx, const ClassSystem& s);

struct PartitionReport {
    bool pass = true;
    std::string detail;
    std::vector<size_t> facet_class_counts; // full class count per facet at level N
};

// The fibers S_phi over all parameters of order dividing N partition the
// F-stable invertible classes of order dividing N at every facet type.
PartitionReport verify_partition(const BuildingContext& ctx, long long n, Lambda lambda);

} // namespace tameblocks
