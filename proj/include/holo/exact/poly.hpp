#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "holo/exact/scalar.hpp"

namespace holo::exact {

/// Polynomial ring C[x1..xn] truncated at total degree D.
struct Ring
{
    int n_vars = 1;
    int trunc = 1;

    friend bool operator==(const Ring&, const Ring&) = default;
};

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Exact polynomial over Gaussian rationals. Products whose degree would
/// exceed the ring's truncation throw DegreeOverflow instead of dropping
/// terms.
class TruncPoly
{
public:
    using Terms = std::map<Exponent, Scalar>;

    TruncPoly() = default;
    explicit TruncPoly(Ring ring);

    static TruncPoly constant(Ring ring, const Scalar& c);
    // k is 0-based; prints as x<k+1>
    static TruncPoly variable(Ring ring, int k);
    static TruncPoly monomial(Ring ring, const Exponent& e, const Scalar& c = Scalar(1));
    static TruncPoly parse(std::string_view text, Ring ring);

    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // -1 for the zero polynomial
    int degree() const;
    Scalar coeff(const Exponent& e) const;
    Scalar constant_term() const;

    void add_term(const Exponent& e, const Scalar& c);

    TruncPoly& operator+=(const TruncPoly& o);
    TruncPoly& operator-=(const TruncPoly& o);
    TruncPoly& operator*=(const Scalar& c);
    friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
    friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
    friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
    friend TruncPoly operator*(TruncPoly a, const Scalar& c) { return a *= c; }
    friend TruncPoly operator*(const Scalar& c, TruncPoly a) { return a *= c; }
    TruncPoly operator-() const;

    friend bool operator==(const TruncPoly& a, const TruncPoly& b)
    {
        return a.ring_.n_vars == b.ring_.n_vars && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncPoly& a, const TruncPoly& b) { return !(a == b); }

    TruncPoly derivative(int k) const;
    TruncPoly conj() const;
    // Same terms in a ring with a different cap; throws if terms do not fit.
    TruncPoly with_trunc(int trunc) const;

    Scalar evaluate(const std::vector<Scalar>& point) const;
    std::complex<long double> evaluate(const std::vector<std::complex<long double>>& point) const;

    std::string to_string() const;

private:
    Ring ring_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const TruncPoly& p);

/// All exponent vectors in n variables with total degree <= d, ordered by
/// degree and then lexicographically.
std::vector<Exponent> monomials_up_to(int n_vars, int d);

void check_same_ring(const Ring& a, const Ring& b, const char* where);

} // namespace holo::exact
