#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "holo/exact/poly.hpp"

namespace holo::exact {

enum class PairingMode { hermitian, bilinear };

const char* to_string(PairingMode mode);
PairingMode parse_pairing_mode(std::string_view text);

/// Bit k of an index set means dx_{k+1} is present.
using IndexSet = std::uint32_t;

int popcount(IndexSet s);
std::string index_set_string(IndexSet s);

/// Polynomial-coefficient differential form of fixed degree k.
class ExteriorForm
{
public:
    using Components = std::map<IndexSet, TruncPoly>;

    ExteriorForm() = default;
    ExteriorForm(Ring ring, int degree);

    static ExteriorForm zero(Ring ring, int degree) { return ExteriorForm(ring, degree); }
    static ExteriorForm function(const TruncPoly& f);
    // f dx_{k+1}
    static ExteriorForm dx(Ring ring, int k, const TruncPoly* coeff = nullptr);
    static ExteriorForm basis(Ring ring, IndexSet set, const TruncPoly& coeff);

    const Ring& ring() const { return ring_; }
    int degree() const { return degree_; }
    const Components& components() const { return comps_; }
    TruncPoly component(IndexSet set) const;
    bool is_zero() const { return comps_.empty(); }
    // maximum polynomial degree across components, -1 if zero
    int poly_degree() const;

    void add_component(IndexSet set, const TruncPoly& f);

    ExteriorForm& operator+=(const ExteriorForm& o);
    ExteriorForm& operator-=(const ExteriorForm& o);
    friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
    friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
    ExteriorForm operator-() const;
    friend ExteriorForm operator*(const Scalar& c, const ExteriorForm& a);
    friend ExteriorForm operator*(const TruncPoly& f, const ExteriorForm& a);

    friend bool operator==(const ExteriorForm& a, const ExteriorForm& b)
    {
        return a.degree_ == b.degree_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const ExteriorForm& a, const ExteriorForm& b) { return !(a == b); }

    ExteriorForm d() const;
    ExteriorForm conj() const;
    ExteriorForm with_trunc(int trunc) const;

    std::string to_string() const;

private:
    Ring ring_;
    int degree_ = 0;
    Components comps_;
};

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

/// Flat polytorus pairing: dx_I orthonormal, monomials orthonormal.
Scalar torus_pairing(const ExteriorForm& a, const ExteriorForm& b, PairingMode mode);

// Sign of dx_I ^ dx_J relative to dx_{I u J}; 0 when I and J intersect.
int wedge_sign(IndexSet i, IndexSet j);

} // namespace holo::exact
