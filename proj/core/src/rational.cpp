#include "tameblocks/rational.hpp"

#include "tameblocks/errors.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace tameblocks {

namespace {

long long checked_ll(__int128 x) {
    if (x > INT64_MAX || x < INT64_MIN)
        throw validation_error("rational arithmetic overflow");
    return static_cast<long long>(x);
}

} // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0)
        throw validation_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
    __int128 d = static_cast<__int128>(den) * o.den;
    return Rational(checked_ll(n), checked_ll(d));
}

Rational Rational::operator-(const Rational& o) const { return *this + Rational(-o.num, o.den); }

Rational Rational::operator*(const Rational& o) const {
    __int128 n = static_cast<__int128>(num) * o.num;
    __int128 d = static_cast<__int128>(den) * o.den;
    return Rational(checked_ll(n), checked_ll(d));
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

Rational Rational::mod1() const {
    long long r = num % den;
    if (r < 0)
        r += den;
    return Rational(r, den);
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw validation_error("cannot parse rational '" + text + "'");
    }
}

RatVec mod1(const RatVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = v[i].mod1();
    return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

RatVec scale(long long k, const RatVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = v[i] * Rational(k);
    return r;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i])
            return true;
        if (b[i] < a[i])
            return false;
    }
    return a.size() < b.size();
}

bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

RatVec zero_vector(int n) { return RatVec(static_cast<size_t>(n)); }

std::string str(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i].str();
    os << ")";
    return os.str();
}

Rational pair_int(const std::vector<long long>& a, const RatVec& v) {
    Rational acc(0);
    for (size_t i = 0; i < a.size(); ++i)
        acc = acc + v[i] * Rational(a[i]);
    return acc;
}

} // namespace tameblocks
