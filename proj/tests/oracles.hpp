#pragma once

// Brute-force oracles for the test suite. Everything here recomputes expected
// values by naive search, independent of the library's code paths.

#include "tameblocks/root_datum.hpp"
#include "tameblocks/weyl.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using namespace tameblocks;

// Orbit by worklist closure under a generator list (not by group elements).
inline std::vector<RatVec> orbit_by_generators(const RatVec& v, const std::vector<IntMat>& gens) {
    std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> seen(lex_less);
    std::vector<RatVec> work{mod1(v)};
    seen.insert(work[0]);
    while (!work.empty()) {
        RatVec x = work.back();
        work.pop_back();
        for (const auto& g : gens) {
            RatVec y = mod1(mat_vec(g, x));
            if (seen.insert(y).second)
                work.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

// Highest root by dominance closure: keep adding simple roots while the sum
// stays a root.
inline std::vector<long long> highest_root_by_closure(const RootDatum& rd,
                                                      const std::vector<int>& simple_positions) {
    std::set<std::vector<long long>> roots(rd.roots.begin(), rd.roots.end());
    std::vector<long long> r = rd.simple_root(simple_positions.front());
    bool grew = true;
    while (grew) {
        grew = false;
        for (int k : simple_positions) {
            std::vector<long long> cand = r;
            for (size_t i = 0; i < cand.size(); ++i)
                cand[i] += rd.simple_root(k)[i];
            if (roots.count(cand)) {
                r = cand;
                grew = true;
            }
        }
    }
    return r;
}

// Multiplicative order of a class vector by scanning multiples.
inline long long order_by_scan(const RatVec& v) {
    for (long long k = 1;; ++k) {
        bool zero = true;
        for (const auto& x : v)
            if (!(x * Rational(k)).mod1().is_zero())
                zero = false;
        if (zero)
            return k;
    }
}

// ell-regular part by scanning the cyclic group generated by v: the unique
// multiple u*v with order prime to ell differing from v by an ell-power-order
// element.
inline RatVec ell_regular_by_scan(const RatVec& v, long long ell) {
    long long m = order_by_scan(v);
    for (long long u = 0; u < m; ++u) {
        RatVec cand = mod1(scale(u, v));
        if (order_by_scan(cand) % ell == 0 && order_by_scan(cand) != 1)
            continue;
        long long actual = order_by_scan(cand);
        if (actual % ell == 0)
            continue;
        RatVec diff = mod1(sub(v, cand));
        long long d = order_by_scan(diff);
        bool ell_power = true;
        while (d > 1) {
            if (d % ell != 0)
                ell_power = false;
            d /= ell;
        }
        if (ell_power)
            return cand;
    }
    return mod1(v);
}

// Index of the subgroup generated inside a finite matrix group, by coset
// counting.
inline size_t coset_count(const std::vector<IntMat>& group, const std::vector<IntMat>& subgroup) {
    std::set<std::set<IntMat>> cosets;
    for (const auto& g : group) {
        std::set<IntMat> coset;
        for (const auto& h : subgroup)
            coset.insert(g * h);
        cosets.insert(coset);
    }
    return cosets.size();
}

} // namespace oracle
