#pragma once

#include "tameblocks/root_datum.hpp"
#include "tameblocks/weyl.hpp"

#include <optional>
#include <vector>

namespace tameblocks {

enum class Lambda { Qlbar, Zlbar };

// Semisimple class vector in X tensor (Q/Z)_{p'}: entries in [0,1), reduced
// denominators prime to p.
struct ClassVector {
    RatVec v;
    long long p = 0;
};

ClassVector make_class_vector(RatVec v, long long p);

/**
 * Frobenius data: F acts on class vectors by v -> theta(q v) mod 1.
 * diagram_rotation (one integer per irreducible component) twists the affine
 * diagram of an inner form; it acts on facet data, not on the parameter-level
 * Frobenius.
 */
struct FrobeniusDescriptor {
    BasedAutomorphism theta;
    long long q = 0;
    long long p = 0;
    std::optional<long long> ell;
    Lambda lambda = Lambda::Qlbar;
    std::optional<std::vector<long long>> diagram_rotation;
};

// Checks q = p^k, ell != p, lambda = Zlbar requires ell. Rotation validity is
// checked against the affine diagram when a building context is built.
void validate_frobenius(const FrobeniusDescriptor& f);

// lcm of reduced denominators.
long long class_order(const RatVec& v);

bool order_invertible(long long order, const FrobeniusDescriptor& f, Lambda lambda);

RatVec frobenius_image(const RatVec& v, const FrobeniusDescriptor& f);

// A class = orbit under a context group, stored by its canonical representative.
struct GeometricClass {
    RatVec rep;
};

// True iff the orbit of `canonical` under `context` is F-stable.
bool is_F_stable(const RatVec& canonical, const std::vector<IntMat>& context,
                 const FrobeniusDescriptor& f);

// Prime-to-ell component: for order m = ell^a m', returns (ell^a u) v where
// u ell^a = 1 mod m'. Idempotent; the difference v - result has ell-power order.
RatVec ell_regular_part(const RatVec& v, long long ell);

// All F-stable W0-orbits of vectors of order dividing N (and prime to ell for
// Zlbar), as sorted canonical representatives. Requires gcd(N, p) = 1.
std::vector<RatVec> enumerate_F_stable_orbits(const RootDatum& rd, const FrobeniusDescriptor& f,
                                              const WeylGroup& w0, long long n, Lambda lambda);

// All vectors in (1/N) Z^rank mod 1 (raw enumeration helper).
std::vector<RatVec> all_level_vectors(int rank, long long n);

} // namespace tameblocks
