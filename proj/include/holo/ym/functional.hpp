#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "holo/brane/cohomology.hpp"

namespace holo::ym {

using brane::BraneComplex;
using brane::CohomologyResult;
using brane::FormFamily;
using brane::GaugeField;
using dg::Connection;
using dg::HomElement;
using exact::FormMatrix;
using exact::PairingMode;
using exact::PolyMatrix;
using exact::Ring;
using exact::Scalar;
using exact::ScalarMatrix;
using exact::TruncPoly;

/// Pairing of End-valued forms of equal degree. Hermitian mode is the
/// Frobenius pairing sum <X_ab, (G Y G^{-1})_ab> for the frame metric G
/// (identity when absent); bilinear mode is the trace form sum (X_ab, Y_ba),
/// which needs no metric.
Scalar pair(const FormMatrix& x, const FormMatrix& y, PairingMode mode, const ScalarMatrix* metric = nullptr);

/// ||K||^2 = (K, K).
Scalar ym_sheaf(const Connection& c, PairingMode mode, const ScalarMatrix* metric = nullptr);

/// K(lambda) = k0 + sum lambda_i b_i + sum lambda_i lambda_j bb_ij.
struct CurvatureExpansion
{
    HomElement k0;
    std::vector<HomElement> b;
    std::vector<std::vector<HomElement>> bb;
    /// Frame metric used by hermitian pairings (empty means identity).
    std::optional<ScalarMatrix> metric;

    std::size_t size() const { return b.size(); }
    HomElement at(const std::vector<Scalar>& lambda) const;
};

/// b_i = d E_i + A0 E_i + E_i A0 and bb_ij = E_i E_j.
CurvatureExpansion curvature_expansion(const Connection& base, const std::vector<HomElement>& e);

/// A0 + sum lambda_i E_i.
Connection connection_at(const Connection& base, const std::vector<HomElement>& e, const std::vector<Scalar>& lambda);

/// P as a polynomial in m variables (bilinear) or in lambda_1..lambda_m,
/// conj(lambda_1)..conj(lambda_m) (hermitian), total degree <= 4.
struct YMPolynomial
{
    int m = 0;
    PairingMode mode = PairingMode::bilinear;
    TruncPoly p;

    static YMPolynomial zero(int m, PairingMode mode);
    int n_vars() const { return mode == PairingMode::bilinear ? m : 2 * m; }
    Scalar evaluate(const std::vector<Scalar>& lambda) const;
    std::complex<long double> evaluate(const std::vector<std::complex<long double>>& lambda) const;
    bool is_constant() const { return p.is_constant(); }
    YMPolynomial& operator+=(const YMPolynomial& o);
    YMPolynomial operator*(const Scalar& c) const;
};

YMPolynomial build_P(const CurvatureExpansion& ce, PairingMode mode);

/// Brane-level data: each induced connection theta^j and its expansion along
/// the restricted variations. P_brane = sum_j (-1)^j P_j.
struct BraneExpansion
{
    std::map<int, Connection> theta;
    std::map<int, CurvatureExpansion> expansions;
    std::map<int, std::vector<HomElement>> directions;
};

BraneExpansion brane_expansion(const GaugeField& psi, const std::vector<FormFamily>& variations,
                               const CohomologyResult& h);
YMPolynomial brane_P(const BraneExpansion& be, int m, PairingMode mode);

/// sum_j (-1)^j ||K_{theta^j}||^2 with the cohomology metric.
Scalar ym_brane(const GaugeField& g, const CohomologyResult& h, PairingMode mode);

/// Bilinear: the m partials. Hermitian: the 2m real partials in
/// (Re lambda_1..Re lambda_m, Im lambda_1..Im lambda_m), as polynomials in
/// those real unknowns.
struct GradientSystem
{
    int m = 0;
    PairingMode mode = PairingMode::bilinear;
    int unknowns = 0;
    std::vector<TruncPoly> equations;

    /// Unknowns to lambda (identity in bilinear mode).
    std::vector<std::complex<long double>> to_lambda(const std::vector<std::complex<long double>>& x) const;
    std::vector<Scalar> to_lambda(const std::vector<Scalar>& x) const;
    bool is_zero() const;
    int max_degree() const;
};

GradientSystem gradient_system(const YMPolynomial& p);

/// Substitute polynomials for the variables of p.
TruncPoly substitute(const TruncPoly& p, const std::vector<TruncPoly>& images, Ring target);

} // namespace holo::ym
