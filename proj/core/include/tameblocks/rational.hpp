#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tameblocks {

// Exact rational with int64 numerator/denominator, always stored reduced with
// den > 0. Magnitudes in this library are bounded by the enumeration levels
// (denominators are orders of roots of unity), but all products go through
// __int128 and overflow aborts rather than wrapping.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    Rational(long long n) : num(n), den(1) {}

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const { return Rational(-num, den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this == o || *this < o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    // Representative in [0, 1).
    Rational mod1() const;

    std::string str() const; // canonical "num/den"
};

Rational parse_rational(const std::string& text);

using RatVec = std::vector<Rational>;

RatVec mod1(const RatVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(long long k, const RatVec& v);
bool lex_less(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);
RatVec zero_vector(int n);
std::string str(const RatVec& v);

// Dot product of an integer covector with a rational vector.
Rational pair_int(const std::vector<long long>& a, const RatVec& v);

} // namespace tameblocks
