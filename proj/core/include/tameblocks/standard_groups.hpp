#pragma once

#include "tameblocks/semisimple_classes.hpp"

namespace tameblocks {

// Catalog of standard based root data in the usual coordinates.

RootDatum torus_datum(int rank);
RootDatum sl2_datum();
RootDatum pgl2_datum();
RootDatum gl_datum(int n);
RootDatum sp4_datum();
RootDatum so5_datum();

// Simply connected datum from a Cartan matrix (weight coordinates: the
// coroots are the coordinate basis).
RootDatum simply_connected_datum(const std::string& name,
                                 const std::vector<std::vector<long long>>& cartan);

BasedAutomorphism identity_automorphism(const RootDatum& rd);

// Outer automorphism x -> -reverse(x) of gl_datum(n).
BasedAutomorphism gl_flip(const RootDatum& rd);

FrobeniusDescriptor split_frobenius(const RootDatum& rd, long long q, long long p,
                                    Lambda lambda = Lambda::Qlbar,
                                    std::optional<long long> ell = std::nullopt);

} // namespace tameblocks
