#include "tameblocks/classical_poly.hpp"

#include "tameblocks/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tameblocks {

namespace {

EigenOrbit negate_orbit(const EigenOrbit& o) {
    EigenOrbit r;
    for (const auto& e : o)
        r.push_back((-e).mod1());
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<Rational> expand_eigenvalues(const OrbitPolynomial& p) {
    std::vector<Rational> all;
    for (const auto& [orbit, mult] : p.orbits)
        for (long long k = 0; k < mult; ++k)
            all.insert(all.end(), orbit.begin(), orbit.end());
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

long long OrbitPolynomial::degree() const {
    long long d = 0;
    for (const auto& [orbit, mult] : orbits)
        d += mult * static_cast<long long>(orbit.size());
    return d;
}

std::string OrbitPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [orbit, mult] : orbits) {
        if (!first)
            os << " * ";
        first = false;
        os << "{";
        for (size_t i = 0; i < orbit.size(); ++i)
            os << (i ? "," : "") << orbit[i].str();
        os << "}^" << mult;
    }
    if (first)
        os << "1";
    return os.str();
}

EigenOrbit q_power_orbit(const Rational& v, long long q) {
    std::set<Rational> seen;
    Rational x = v.mod1();
    while (seen.insert(x).second)
        x = (x * Rational(q)).mod1();
    return {seen.begin(), seen.end()};
}

long long ClassicalType::natural_dimension() const {
    switch (family) {
    case ClassicalFamily::OddOrthogonal:
        return 2ll * n + 1;
    case ClassicalFamily::Symplectic:
    case ClassicalFamily::EvenOrthogonal:
        return 2ll * n;
    case ClassicalFamily::Unitary:
        return n;
    }
    return 0;
}

OrbitPolynomial char_polynomial(const RatVec& v, ClassicalType t, long long q) {
    if (static_cast<int>(v.size()) != t.n)
        throw validation_error("class vector length does not match the classical rank");
    std::vector<Rational> eigen;
    for (const auto& x : v) {
        eigen.push_back(x.mod1());
        if (t.family != ClassicalFamily::Unitary)
            eigen.push_back((-x).mod1());
    }
    if (t.family == ClassicalFamily::OddOrthogonal)
        eigen.push_back(Rational(0));

    OrbitPolynomial p;
    p.q = q;
    p.unitary = t.family == ClassicalFamily::Unitary;
    // Unitary polynomials live over the quadratic extension: q^2-orbits.
    long long step = p.unitary ? q * q : q;
    std::map<EigenOrbit, long long, VecRatLess> counts;
    for (const auto& e : eigen)
        counts[q_power_orbit(e, step)] += 1;
    for (const auto& [orbit, c] : counts) {
        long long size = static_cast<long long>(orbit.size());
        p.orbits[orbit] = (c + size - 1) / size; // exact for orbit-closed multisets
    }
    return p;
}

bool is_self_dual(const OrbitPolynomial& p) {
    auto eigen = expand_eigenvalues(p);
    std::vector<Rational> image;
    for (const auto& e : eigen) {
        Rational m = p.unitary ? (-(e * Rational(p.q))).mod1() : (-e).mod1();
        image.push_back(m);
    }
    std::sort(image.begin(), image.end());
    return image == eigen;
}

OrbitPolynomial vertex_polynomial(const OrbitPolynomial& p1, const OrbitPolynomial& p2,
                                  ClassicalType ambient) {
    if (p1.q != p2.q || p1.unitary != p2.unitary)
        throw validation_error("vertex factors live over different fields");
    OrbitPolynomial r = p1;
    for (const auto& [orbit, mult] : p2.orbits)
        r.orbits[orbit] += mult;
    if (ambient.family == ClassicalFamily::OddOrthogonal) {
        EigenOrbit one{Rational(0)};
        auto it = r.orbits.find(one);
        if (it == r.orbits.end() ||
            p1.orbits.find(one) == p1.orbits.end() ||
            p2.orbits.find(one) == p2.orbits.end())
            throw validation_error("symplectic vertex factors must both contain the eigenvalue 1");
        if (--(it->second) == 0)
            r.orbits.erase(it);
    }
    return r;
}

std::vector<long long> jordan_multiplicities(long long two_s) {
    if (two_s < 0)
        throw validation_error("reducibility point must be nonnegative");
    std::vector<long long> out;
    for (long long m = two_s - 1; m >= 1; m -= 2)
        out.push_back(m);
    return out;
}

long long floor_s_squared(long long two_s) { return (two_s * two_s) / 4; }

OrbitPolynomial jordan_inertial_restriction(
    const std::vector<std::pair<EigenOrbit, long long>>& jordan, long long q, bool unitary) {
    OrbitPolynomial p;
    p.q = q;
    p.unitary = unitary;
    for (const auto& [orbit, m] : jordan) {
        if (m <= 0)
            throw validation_error("Jordan multiplicities are positive");
        p.orbits[orbit] += m;
    }
    return p;
}

AMultTable derive_a_table(const OrbitPolynomial& p1, const OrbitPolynomial& p2) {
    auto unit_of = [](const EigenOrbit& orbit) {
        EigenOrbit neg = negate_orbit(orbit);
        if (neg == orbit)
            return orbit;
        EigenOrbit unit = orbit;
        unit.insert(unit.end(), neg.begin(), neg.end());
        std::sort(unit.begin(), unit.end());
        return unit;
    };
    auto mult_of = [&](const OrbitPolynomial& p, const EigenOrbit& orbit) {
        auto it = p.orbits.find(orbit);
        return it == p.orbits.end() ? 0ll : it->second;
    };
    AMultTable table;
    std::set<EigenOrbit, VecRatLess> orbits;
    for (const auto& [orbit, mult] : p1.orbits)
        orbits.insert(orbit);
    for (const auto& [orbit, mult] : p2.orbits)
        orbits.insert(orbit);
    for (const auto& orbit : orbits) {
        EigenOrbit neg = negate_orbit(orbit);
        long long a1 = mult_of(p1, orbit), a2 = mult_of(p2, orbit);
        if (neg != orbit) {
            if (mult_of(p1, neg) != a1 || mult_of(p2, neg) != a2)
                throw validation_error("factor polynomial is not self-dual");
            if (neg < orbit)
                continue; // count each dual pair once
        }
        EigenOrbit unit = unit_of(orbit);
        table[unit] = {a1, a2};
    }
    return table;
}

CompatibilityReport verify_compatibility(const RatVec& s1, const RatVec& s2,
                                         ClassicalType ambient, long long q,
                                         const std::optional<AMultTable>& table) {
    ClassicalType t1, t2;
    switch (ambient.family) {
    case ClassicalFamily::OddOrthogonal:
        t1 = {ClassicalFamily::OddOrthogonal, static_cast<int>(s1.size())};
        t2 = {ClassicalFamily::OddOrthogonal, static_cast<int>(s2.size())};
        break;
    case ClassicalFamily::Symplectic:
        t1 = {ClassicalFamily::EvenOrthogonal, static_cast<int>(s1.size())};
        t2 = {ClassicalFamily::Symplectic, static_cast<int>(s2.size())};
        break;
    case ClassicalFamily::EvenOrthogonal:
        t1 = {ClassicalFamily::EvenOrthogonal, static_cast<int>(s1.size())};
        t2 = {ClassicalFamily::EvenOrthogonal, static_cast<int>(s2.size())};
        break;
    case ClassicalFamily::Unitary:
        t1 = {ClassicalFamily::Unitary, static_cast<int>(s1.size())};
        t2 = {ClassicalFamily::Unitary, static_cast<int>(s2.size())};
        break;
    }
    if (static_cast<int>(s1.size() + s2.size()) != ambient.n)
        throw validation_error("vertex factor ranks do not sum to the ambient rank");

    OrbitPolynomial p1 = char_polynomial(s1, t1, q);
    OrbitPolynomial p2 = char_polynomial(s2, t2, q);
    OrbitPolynomial target = vertex_polynomial(p1, p2, ambient);

    AMultTable a = table ? *table : derive_a_table(p1, p2);

    CompatibilityReport report;
    EigenOrbit one{Rational(0)};

    // Representable values of floor(s^2) for half-integral s.
    auto representable = [](long long value) {
        for (long long k = 0; k * k <= value; ++k)
            if (k * k == value || k * k + k == value)
                return true;
        return false;
    };

    OrbitPolynomial assembled;
    assembled.q = q;
    assembled.unitary = p1.unitary;
    for (const auto& [unit, counts] : a) {
        long long total = counts.first + counts.second;
        if (ambient.family == ClassicalFamily::OddOrthogonal && unit == one)
            total -= 1;
        if (total < 0) {
            report.pass = false;
            report.detail = "negative adjusted multiplicity for the eigenvalue-1 unit";
            return report;
        }
        if (total == 0)
            continue;

        // Split the unit back into orbits (a self-dual orbit, or a dual pair).
        long long step = p1.unitary ? q * q : q;
        std::set<EigenOrbit, VecRatLess> unit_orbits;
        for (const auto& e : unit)
            unit_orbits.insert(q_power_orbit(e, step));
        bool self_dual_unit = unit_orbits.size() == 1;

        if (self_dual_unit) {
            ++report.units;
            std::vector<std::pair<long long, long long>> splittings;
            for (long long u = 0; u <= total; ++u)
                if (representable(u) && representable(total - u))
                    splittings.push_back({u, total - u});
            if (splittings.empty()) {
                report.pass = false;
                report.detail = "no admissible Jordan splitting for unit " + str(unit) +
                                " with total " + std::to_string(total);
                return report;
            }
            const EigenOrbit& orbit = *unit_orbits.begin();
            for (const auto& [u, vv] : splittings) {
                ++report.splittings;
                std::vector<std::pair<EigenOrbit, long long>> jordan;
                for (long long two_s = 0; two_s * two_s <= 4 * u + 4; ++two_s)
                    if (floor_s_squared(two_s) == u) {
                        for (long long m : jordan_multiplicities(two_s))
                            jordan.push_back({orbit, m});
                        break;
                    }
                for (long long two_s = 0; two_s * two_s <= 4 * (total - u) + 4; ++two_s)
                    if (floor_s_squared(two_s) == vv) {
                        for (long long m : jordan_multiplicities(two_s))
                            jordan.push_back({orbit, m});
                        break;
                    }
                OrbitPolynomial part = jordan_inertial_restriction(jordan, q, p1.unitary);
                long long got = part.orbits.count(orbit) ? part.orbits.at(orbit) : 0;
                if (got != total) {
                    report.pass = false;
                    report.detail = "Jordan assembly of unit " + str(unit) + " yields " +
                                    std::to_string(got) + " copies, expected " +
                                    std::to_string(total);
                    return report;
                }
            }
            assembled.orbits[orbit] += total;
        } else {
            // A dual pair P P^tau with P != P^tau supports no self-dual cuspidal;
            // its multiplicities transfer to the inertial side unconstrained.
            for (const auto& orbit : unit_orbits)
                assembled.orbits[orbit] += total;
        }
    }

    if (!(assembled == target)) {
        report.pass = false;
        report.detail = "inertial polynomial " + assembled.str() + " differs from the vertex product " +
                        target.str();
    }
    return report;
}

} // namespace tameblocks
