#pragma once

// Exact rational numbers on 64-bit integers. Region witnesses and
// polynomial interpolation stay tiny (numerators bounded by a few
// hundred), so no bignum backend is needed; intermediate products are
// widened to 128 bits and narrowing is checked.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "shiarr/errors.hpp"

namespace shiarr {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d) {
        if (d == 0) throw InvalidInput("rational with zero denominator");
        __int128 nn = n, dd = d;
        if (dd < 0) { nn = -nn; dd = -dd; }
        normalize(nn, dd);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const {
        return make((__int128)num_ * o.den_ + (__int128)o.num_ * den_, (__int128)den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return make((__int128)num_ * o.den_ - (__int128)o.num_ * den_, (__int128)den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return make((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw InvalidInput("rational division by zero");
        return make((__int128)num_ * o.den_, (__int128)den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
    bool is_integer() const { return den_ == 1; }

    // "3", "-5/2"
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    static std::optional<Rational> parse(const std::string& s) {
        try {
            size_t slash = s.find('/');
            if (slash == std::string::npos) {
                size_t used = 0;
                long long n = std::stoll(s, &used);
                if (used != s.size()) return std::nullopt;
                return Rational(n);
            }
            size_t used = 0;
            long long n = std::stoll(s.substr(0, slash), &used);
            if (used != slash) return std::nullopt;
            long long d = std::stoll(s.substr(slash + 1), &used);
            if (used != s.size() - slash - 1 || d == 0) return std::nullopt;
            return Rational(n, d);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

private:
    static Rational make(__int128 n, __int128 d) {
        Rational r;
        if (d < 0) { n = -n; d = -d; }
        r.normalize(n, d);
        return r;
    }

    void normalize(__int128 n, __int128 d) {
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw InternalInvariantError("rational overflow");
        num_ = (long long)n;
        den_ = (long long)d;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    long long num_;
    long long den_;
};

}  // namespace shiarr
