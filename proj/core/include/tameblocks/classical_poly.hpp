#pragma once

#include "tameblocks/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tameblocks {

/**
 * Characteristic polynomials of semisimple classes of classical groups, kept
 * in factored eigenvalue form: eigenvalues are exponents in (Q/Z)_{p'}
 * (additive notation, so 0 stands for the eigenvalue 1 and X - 1), grouped
 * into q-power orbits. A q-orbit is an irreducible factor over the q-element
 * field; a multiset of orbits is a monic separable polynomial. Unitary
 * polynomials live over the quadratic extension and use q^2-orbits.
 */
using EigenOrbit = std::vector<Rational>; // sorted, closed under the Frobenius power

struct VecRatLess {
    bool operator()(const EigenOrbit& a, const EigenOrbit& b) const { return lex_less(a, b); }
};

struct OrbitPolynomial {
    long long q = 0;
    bool unitary = false;
    std::map<EigenOrbit, long long, VecRatLess> orbits;

    long long degree() const;
    bool operator==(const OrbitPolynomial& o) const {
        return q == o.q && unitary == o.unitary && orbits == o.orbits;
    }
    std::string str() const;
};

EigenOrbit q_power_orbit(const Rational& v, long long q);

// The family tells where the class lives on the dual side and fixes the
// eigenvalue rule of the natural representation:
//   OddOrthogonal  SO_{2n+1}, dual of Sp_2n:      {±v_i} plus one 0,  N = 2n+1
//   Symplectic     Sp_2n, dual of SO_{2n+1}:      {±v_i},             N = 2n
//   EvenOrthogonal SO_2n:                         {±v_i},             N = 2n
//   Unitary        GL_n over the quadratic ext.:  {v_i},              N = n
enum class ClassicalFamily { OddOrthogonal, Symplectic, EvenOrthogonal, Unitary };

struct ClassicalType {
    ClassicalFamily family = ClassicalFamily::OddOrthogonal;
    int n = 0;

    long long natural_dimension() const;
};

// Eigenvalue multiset of the class grouped into q-orbits. Incomplete orbits
// (possible for classes that are not Frobenius-rational) are completed, so
// the result is always a polynomial over the q-element field; for rational
// classes the grouping is exact and the degree is the family's N.
OrbitPolynomial char_polynomial(const RatVec& v, ClassicalType t, long long q);

// Multiset stability under v -> -v, or v -> -q v for unitary types.
bool is_self_dual(const OrbitPolynomial& p);

// Polynomial of the class glued from a vertex decomposition: the multiset
// union, with one eigenvalue-1 factor removed for the symplectic-group family
// (ambient OddOrthogonal polynomials).
OrbitPolynomial vertex_polynomial(const OrbitPolynomial& p1, const OrbitPolynomial& p2,
                                  ClassicalType ambient);

// Jordan block sizes m >= 1 with 2s - (m+1) even and nonnegative; their sum
// is floor(s^2). s is a half-integer given as 2s.
std::vector<long long> jordan_multiplicities(long long two_s);

long long floor_s_squared(long long two_s);

// Inertial restriction of a Jordan set: each (orbit, m) contributes m copies.
OrbitPolynomial jordan_inertial_restriction(
    const std::vector<std::pair<EigenOrbit, long long>>& jordan, long long q, bool unitary);

// a_Q multiplicities per self-dual unit (a negation-stable orbit, or an orbit
// paired with its negative) for a pair of factor polynomials.
using AMultTable = std::map<std::vector<Rational>, std::pair<long long, long long>, VecRatLess>;

AMultTable derive_a_table(const OrbitPolynomial& p1, const OrbitPolynomial& p2);

struct CompatibilityReport {
    bool pass = true;
    std::string detail;
    size_t units = 0;      // self-dual units examined
    size_t splittings = 0; // admissible Jordan splittings checked
};

// Checks that the Jordan-assembled inertial polynomial reproduces the vertex
// product for every admissible splitting of the reducibility sums. The
// a-table defaults to the one derived from the factor polynomials; passing a
// perturbed table exercises the failure path.
CompatibilityReport verify_compatibility(const RatVec& s1, const RatVec& s2,
                                         ClassicalType ambient, long long q,
                                         const std::optional<AMultTable>& table = std::nullopt);

} // namespace tameblocks
