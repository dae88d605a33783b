#include "holo/exact/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "holo/errors.hpp"

namespace holo::exact {

Scalar Scalar::fraction(long num, long den, long im_num, long im_den)
{
    if (den == 0 || im_den == 0)
        throw ParseError("zero denominator");
    return Scalar(Rational(num, den), Rational(im_num, im_den));
}

Scalar Scalar::inverse() const
{
    Rational n = norm2();
    if (n.is_zero())
        throw std::domain_error("inverse of zero scalar");
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    if (!o.im_.is_zero())
        im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    if (!o.im_.is_zero())
        im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.im_.is_zero()) {
        if (o.re_.is_zero())
            throw std::domain_error("division by zero scalar");
        re_ /= o.re_;
        if (!im_.is_zero())
            im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::complex<double> Scalar::to_complex() const
{
    return {re_.convert_to<double>(), im_.convert_to<double>()};
}

std::complex<long double> Scalar::to_complex_ld() const
{
    return {re_.convert_to<long double>(), im_.convert_to<long double>()};
}

std::string rational_to_string(const Rational& q)
{
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string Scalar::to_string() const
{
    if (im_.is_zero())
        return rational_to_string(re_);
    std::string out = "(" + rational_to_string(re_);
    if (im_ < 0)
        out += "-" + rational_to_string(-im_);
    else
        out += "+" + rational_to_string(im_);
    return out + "i)";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

std::string strip(std::string_view text)
{
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view raw)
{
    std::string text = strip(raw);
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(raw) + "'");
    using boost::multiprecision::mpz_int;
    mpz_int d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(raw) + "'");
    Rational q(mpz_int{std::string(num)}, d);
    return negative ? Rational(-q) : q;
}

Scalar Scalar::parse(std::string_view raw)
{
    std::string text = strip(raw);
    if (text.empty())
        throw ParseError("empty scalar");
    if (text.front() != '(') {
        if (text.back() == 'i') {
            std::string_view body(text.data(), text.size() - 1);
            if (body.empty() || body == "+")
                return Scalar(Rational(0), Rational(1));
            if (body == "-")
                return Scalar(Rational(0), Rational(-1));
            return Scalar(Rational(0), parse_rational(body));
        }
        return Scalar(parse_rational(text));
    }
    if (text.back() != ')')
        throw ParseError("unbalanced parenthesis in '" + std::string(raw) + "'");
    std::string inner = text.substr(1, text.size() - 2);
    if (inner.empty() || inner.back() != 'i')
        return Scalar(parse_rational(inner));
    inner.pop_back();
    // split at the last sign that is not at position 0
    std::size_t split = std::string::npos;
    for (std::size_t k = inner.size(); k-- > 1;)
        if (inner[k] == '+' || inner[k] == '-') {
            split = k;
            break;
        }
    if (split == std::string::npos) {
        if (inner.empty() || inner == "+")
            return Scalar(Rational(0), Rational(1));
        if (inner == "-")
            return Scalar(Rational(0), Rational(-1));
        return Scalar(Rational(0), parse_rational(inner));
    }
    Rational re = parse_rational(std::string_view(inner).substr(0, split));
    std::string imag = inner.substr(split);
    Rational im;
    if (imag == "+")
        im = 1;
    else if (imag == "-")
        im = -1;
    else
        im = parse_rational(imag);
    return Scalar(re, im);
}

Rational rationalize(long double value, long max_den)
{
    if (!std::isfinite(value))
        throw std::domain_error("cannot rationalize a non-finite value");
    long double x = value;
    // convergents h/k
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        long double a_ld = std::floor(x);
        if (std::fabs(a_ld) > 1e15L)
            break;
        long long a = static_cast<long long>(a_ld);
        long long h2 = a * h1 + h0;
        long long k2 = a * k1 + k0;
        if (k2 > max_den)
            break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        long double frac = x - a_ld;
        if (std::fabs(frac) < 1e-18L)
            break;
        x = 1.0L / frac;
    }
    if (k1 == 0)
        return Rational(static_cast<long long>(std::llround(value)));
    return Rational(h1, k1);
}

} // namespace holo::exact
