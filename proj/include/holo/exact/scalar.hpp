#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace holo::exact {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/**
 * Gaussian rational re + im*i. Both parts are kept in lowest terms by the
 * underlying GMP rationals, so equality is structural.
 */
class Scalar
{
public:
    Scalar() = default;
    Scalar(int value) : re_(value) {}
    Scalar(long value) : re_(value) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar fraction(long num, long den, long im_num = 0, long im_den = 1);
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == 1; }

    Scalar conj() const { return Scalar(re_, -im_); }
    // |z|^2, always real and exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::complex<double> to_complex() const;
    std::complex<long double> to_complex_ld() const;

    /// "a/b" for real values, "(a/b+c/d i)" otherwise; denominators of 1
    /// are omitted.
    std::string to_string() const;
    static Scalar parse(std::string_view text);

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Nearest fraction with denominator bounded by max_den (continued fractions).
Rational rationalize(long double value, long max_den);

} // namespace holo::exact
