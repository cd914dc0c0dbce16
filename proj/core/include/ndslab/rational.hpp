#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "ndslab/errors.hpp"

namespace ndslab {

/// Exact rational number in lowest terms with a positive denominator.
///
/// All arithmetic is exact; a configurable denominator bit budget (default
/// 512) aborts with RationalOverflowError instead of ever rounding.
class Rational {
public:
    using rep = boost::multiprecision::cpp_rational;
    using bigint = boost::multiprecision::cpp_int;

    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long long num, long long den);
    explicit Rational(rep v);

    /// Accepts "p/q", plain integers, and finite decimals ("0.4" -> 2/5).
    static Rational parse(std::string_view text);

    bigint numerator() const { return boost::multiprecision::numerator(v_); }
    bigint denominator() const { return boost::multiprecision::denominator(v_); }

    std::string str() const;
    double to_double() const { return v_.convert_to<double>(); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }
    Rational abs() const { return v_.sign() < 0 ? Rational(rep(-v_)) : *this; }

    Rational operator-() const { return Rational(rep(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(rep(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(rep(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(rep(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    const rep& raw() const { return v_; }

    static void set_denominator_bit_limit(unsigned bits);
    static unsigned denominator_bit_limit();

private:
    rep v_;
    void check_budget() const;
};

inline Rational abs(const Rational& a) { return a.abs(); }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace ndslab
