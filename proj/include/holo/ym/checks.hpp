#pragma once

#include <complex>
#include <optional>
#include <string>

#include "holo/ym/solver.hpp"

namespace holo::ym {

using brane::ChainMap;
using brane::Point;

/// Richardson steps and tolerances of the finite-difference check.
inline constexpr long double kFdStepCoarse = 1e-4L;
inline constexpr long double kFdStepFine = 1e-5L;
inline constexpr long double kFdRelTol = 1e-6L;
/// Round-off floor below which a finite difference counts as zero.
inline constexpr long double kFdAbsFloor = 1e-9L;

struct StationarityReport
{
    /// sum_j (-1)^j <K_theta^j, nabla_theta^j xi^j>, exact.
    Scalar pairing;
    /// d/d eps YM(psi + eps xi) at 0 predicted from the pairing: 2 Re(pairing)
    /// in hermitian mode, 2 pairing in bilinear mode.
    std::complex<long double> predicted;
    /// Richardson-extrapolated central difference on the float shadow.
    std::complex<long double> fd;
    long double abs_error = 0;
    bool agree = false;
};

StationarityReport stationarity_check(const GaugeField& psi, const FormFamily& xi, const CohomologyResult& h,
                                      PairingMode mode);

struct OrthogonalityReport
{
    std::size_t checked = 0;
    /// Index and value of the first direction with a nonzero pairing.
    std::optional<std::size_t> witness;
    Scalar witness_value;
    int cap = 0;
    bool orthogonal() const { return !witness.has_value(); }
};

/// End-valued 1-forms with one monomial coefficient of degree <= cap.
std::vector<HomElement> hom_basis(Ring ring, int rank, int cap);

/// <K, nabla^(1) b> = 0 for every b in `directions`, or for the full
/// basis of End-valued 1-forms of coefficient degree <= trunc - deg A when
/// none are given.
OrthogonalityReport orthogonality_check(const Connection& c, PairingMode mode,
                                        const std::vector<HomElement>* directions = nullptr,
                                        const ScalarMatrix* metric = nullptr);

struct EulerPoincareReport
{
    /// sum_i (-1)^i ||K_{A^i}||^2 over the terms.
    Scalar terms;
    /// sum_j (-1)^j ||K_{theta^j}||^2 over the cohomology.
    Scalar cohomology;
    bool equal() const { return terms == cohomology; }
};

/// Throws NotCompatible for an incompatible family and RankJump when the
/// cohomology is not locally free at the points.
EulerPoincareReport euler_poincare_check(const BraneComplex& f, const FormFamily& a, PairingMode mode,
                                         const std::vector<Point>& points);

struct ConeReport
{
    EulerPoincareReport source;
    EulerPoincareReport target;
    EulerPoincareReport cone;
    /// YM(beta) - YM(alpha) == YM(cone) on the cohomology.
    bool additive() const { return target.cohomology - source.cohomology == cone.cohomology; }
    /// Same identity on the alternating term sums.
    bool additive_terms() const { return target.terms - source.terms == cone.terms; }
};

/// (d f + beta f - f alpha)^i = 0 for every i, else the first failing index.
std::optional<int> chain_map_compatibility_defect(const BraneComplex& a, const BraneComplex& b, const ChainMap& f,
                                                  const FormFamily& alpha, const FormFamily& beta);

/// Cone(f) with the block-diagonal connection (alpha^{i+1}, beta^i).
ConeReport cone_ym(const BraneComplex& a, const FormFamily& alpha, const BraneComplex& b, const FormFamily& beta,
                   const ChainMap& f, PairingMode mode, const std::vector<Point>& points);

/// Split data F^i = H^i (+) G^i with delta(a, b) = (0, delta_G b). Each H
/// block carries a base connection and its own variation directions; G
/// carries the zero connection.
struct SplitBlock
{
    int index = 0;
    FormMatrix a0;
    std::vector<FormMatrix> directions;
};

struct SplitData
{
    Ring ring;
    std::vector<SplitBlock> h;
    std::map<int, int> g_ranks;
    std::map<int, PolyMatrix> g_delta;
};

struct SplitAssembly
{
    BraneComplex complex;
    FormFamily base;
    std::vector<FormFamily> variations;
};

SplitAssembly assemble_split(const SplitData& data);

struct SemisimpleReport
{
    SplitAssembly assembly;
    YMPolynomial p;
    /// Critical parameters used for the check.
    std::vector<Scalar> lambda;
    bool found_critical = false;
    /// Every gradient component vanishes exactly at lambda.
    bool stationary = false;
    std::map<int, OrthogonalityReport> per_degree;
    bool ok() const;
};

/// Builds the brane P along the block variations, finds an exact critical
/// lambda (linear gradients are solved exactly; otherwise a Newton point is
/// rationalized and re-verified), then runs orthogonality_check on every
/// induced theta^j against its own block directions.
SemisimpleReport semisimple_converse_harness(const SplitData& data, PairingMode mode,
                                             const SolverConfig& cfg = {});

} // namespace holo::ym
