#pragma once

#include "holo/exact/matrix.hpp"

namespace holo::dg {

using exact::ExteriorForm;
using exact::FormMatrix;
using exact::PolyMatrix;
using exact::Ring;
using exact::Scalar;
using exact::ScalarMatrix;
using exact::TruncPoly;

struct FreeModule
{
    int rank = 1;
    Ring ring;

    friend bool operator==(const FreeModule&, const FreeModule&) = default;
};

/// Element of Omega^k(F): an r x 1 column of k-forms.
using FormValued = FormMatrix;
/// Element of Hom(F, Omega^k(G)): an r_G x r_F matrix of k-forms.
using HomElement = FormMatrix;

FormValued section(const PolyMatrix& column);

/// Holomorphic connection d + A on a free module.
class Connection
{
public:
    Connection() = default;
    Connection(FreeModule module, FormMatrix a);
    static Connection trivial(FreeModule module);

    const FreeModule& module() const { return module_; }
    const FormMatrix& matrix() const { return a_; }
    const Ring& ring() const { return module_.ring; }

    // s: r x 1 column of 0-forms
    FormValued apply(const FormValued& s) const;

    /// Nabla^(k) on Omega^k(F), built termwise as
    /// d(w) (x) e_a + (-1)^k w ^ nabla(e_a).
    FormValued extend(const FormValued& v) const;

    /// dA + A ^ A.
    HomElement curvature() const;
    /// Columns nabla^(1)(nabla e_a), computed through extend().
    HomElement curvature_operator() const;

    Connection operator+(const HomElement& xi) const;

private:
    FreeModule module_;
    FormMatrix a_;
};

/// Covariant derivative of an End-valued p-form: d b + A ^ b - (-1)^p b ^ A.
HomElement covariant_end(const FormMatrix& a, const HomElement& b);

/// Covariant derivative on Hom(F, Omega^p(G)) for connections a_G, a_F:
/// d b + a_G ^ b - (-1)^p b ^ a_F.
HomElement covariant_hom(const FormMatrix& a_target, const FormMatrix& a_source, const HomElement& b);

/// Evaluates (p)nabla K for the curvature and reports whether it vanishes.
bool bianchi_check(const Connection& c);

} // namespace holo::dg
