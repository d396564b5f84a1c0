#pragma once

#include "tameblocks/lattice.hpp"
#include "tameblocks/semisimple_classes.hpp"

#include <vector>

namespace tameblocks {

/**
 * Tame inertial parameter: an F-stable W0-orbit in X tensor (Q/Z)_{p'} of
 * order invertible in the coefficient ring, stored by its canonical
 * representative.
 */
struct InertialParam {
    RatVec rep;
    Lambda lambda = Lambda::Qlbar;
    long long order = 1;

    bool operator==(const InertialParam& o) const {
        return rep == o.rep && lambda == o.lambda;
    }
};

// Validates F-stability and invertibility of the order.
InertialParam make_inertial_param(const RatVec& v, const WeylGroup& w0,
                                  const FrobeniusDescriptor& f, Lambda lambda);

std::vector<InertialParam> enumerate_inertial_params(const RootDatum& rd,
                                                     const FrobeniusDescriptor& f,
                                                     const WeylGroup& w0, long long n,
                                                     Lambda lambda);

// All Qlbar-parameters of order dividing n whose ell-regular part is phi.
std::vector<InertialParam> refine_to_ql(const InertialParam& phi, const RootDatum& rd,
                                        const FrobeniusDescriptor& f, const WeylGroup& w0,
                                        long long n);

// Connectedness of the dual centralizer, via the reflection proxy: the full
// orbit stabilizer equals the subgroup generated by the fixing reflections.
bool centralizer_connected(const InertialParam& phi, const RootDatum& rd, const WeylGroup& w0);

// True when the proxy is not exact a priori: the dual group's fundamental
// group X / (root lattice) has torsion.
bool connectedness_is_proxy(const RootDatum& rd);

// Parameters factoring through the type-w unramified torus: W0-orbits of the
// vectors fixed by (w theta) o (q-power) of order dividing n.
std::vector<InertialParam> twisted_torus_params(const RootDatum& rd, const FrobeniusDescriptor& f,
                                                const WeylGroup& w0, const IntMat& w, long long n);

// Lattice-level torus decomposition for a finite-order automorphism:
// Z-bases of ker(1-theta) and of the image lattice (1-theta)X, plus the index
// [X : X^theta + (1-theta)X].
struct TorusDecomposition {
    std::vector<std::vector<long long>> fixed_basis;
    std::vector<std::vector<long long>> image_basis;
    long long index = 1;
};

TorusDecomposition torus_theta_decomposition(int rank, const IntMat& theta);

} // namespace tameblocks
