#include "tameblocks/semisimple_classes.hpp"

#include "tameblocks/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tameblocks {

ClassVector make_class_vector(RatVec v, long long p) {
    ClassVector c{mod1(std::move(v)), p};
    for (const auto& x : c.v)
        if (x.den % p == 0)
            throw validation_error("class vector denominator divisible by p (not tame)");
    return c;
}

void validate_frobenius(const FrobeniusDescriptor& f) {
    if (f.p < 2)
        throw validation_error("p must be a prime");
    long long q = f.q;
    if (q < 2)
        throw validation_error("q must be a prime power");
    while (q % f.p == 0)
        q /= f.p;
    if (q != 1)
        throw validation_error("q is not a power of p");
    if (f.ell && *f.ell == f.p)
        throw validation_error("ell must differ from p");
    if (f.lambda == Lambda::Zlbar && !f.ell)
        throw validation_error("lambda = Zlbar requires ell");
}

long long class_order(const RatVec& v) {
    long long m = 1;
    for (const auto& x : v)
        m = std::lcm(m, x.mod1().den);
    return m;
}

bool order_invertible(long long order, const FrobeniusDescriptor& f, Lambda lambda) {
    if (order % f.p == 0)
        return false;
    if (lambda == Lambda::Zlbar && f.ell && order % *f.ell == 0)
        return false;
    return true;
}

RatVec frobenius_image(const RatVec& v, const FrobeniusDescriptor& f) {
    return mod1(mat_vec(f.theta.matrix, scale(f.q, v)));
}

bool is_F_stable(const RatVec& canonical, const std::vector<IntMat>& context,
                 const FrobeniusDescriptor& f) {
    return canonical_rep(frobenius_image(canonical, f), context) == canonical;
}

RatVec ell_regular_part(const RatVec& v, long long ell) {
    if (ell < 2)
        throw validation_error("ell must be a prime");
    long long m = class_order(v);
    long long la = 1;
    long long mprime = m;
    while (mprime % ell == 0) {
        mprime /= ell;
        la *= ell;
    }
    if (la == 1)
        return mod1(v);
    // u with u * la = 1 mod m'.
    long long u = 0;
    for (long long c = 1; c <= mprime; ++c)
        if ((static_cast<__int128>(c) * la) % mprime == 1 % mprime) {
            u = c;
            break;
        }
    return mod1(scale(la * u, v));
}

std::vector<RatVec> all_level_vectors(int rank, long long n) {
    std::vector<RatVec> out;
    std::vector<long long> digits(static_cast<size_t>(rank), 0);
    while (true) {
        RatVec v(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i)
            v[static_cast<size_t>(i)] = Rational(digits[static_cast<size_t>(i)], n);
        out.push_back(std::move(v));
        int i = 0;
        for (; i < rank; ++i) {
            if (++digits[static_cast<size_t>(i)] < n)
                break;
            digits[static_cast<size_t>(i)] = 0;
        }
        if (i == rank)
            break;
    }
    return out;
}

std::vector<RatVec> enumerate_F_stable_orbits(const RootDatum& rd, const FrobeniusDescriptor& f,
                                              const WeylGroup& w0, long long n, Lambda lambda) {
    if (n <= 0)
        throw validation_error("level N must be positive");
    if (n % f.p == 0)
        throw validation_error("p divides N");
    std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> reps(lex_less);
    for (const auto& v : all_level_vectors(rd.rank, n)) {
        RatVec rep = canonical_rep(v, w0.elements);
        if (reps.count(rep))
            continue;
        if (!order_invertible(class_order(rep), f, lambda))
            continue;
        if (!is_F_stable(rep, w0.elements, f))
            continue;
        reps.insert(rep);
    }
    return {reps.begin(), reps.end()};
}

} // namespace tameblocks
