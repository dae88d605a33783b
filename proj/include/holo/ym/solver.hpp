#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "holo/ym/functional.hpp"

namespace holo::ym {

using cvec = std::vector<std::complex<long double>>;

struct SolverConfig
{
    int starts = 64;
    std::uint64_t seed = 1;
    /// Maximum |F_i| accepted at a reported point.
    double tol = 1e-12;
    int max_iter = 200;
    int threads = 1;
    /// Starts are drawn from the box |Re|, |Im| <= radius (real box in
    /// hermitian mode, where the unknowns are real).
    double radius = 2.0;
};

struct CriticalPoint
{
    /// Solution in the solver unknowns and as lambda.
    cvec x;
    cvec lambda;
    long double residual = 0;
    /// 1 for a regular root; for singular isolated roots an estimate from the
    /// linear convergence rate of Newton.
    int multiplicity = 1;
    /// Number of starts that converged into this point.
    int hits = 0;
};

struct CriticalSet
{
    PairingMode mode = PairingMode::bilinear;
    int unknowns = 0;
    std::vector<CriticalPoint> isolated;
    /// Points on positive-dimensional components, one per converged cluster.
    std::vector<CriticalPoint> nonisolated_points;
    bool nonisolated = false;
    /// Kernel direction of the Jacobian at the first nonisolated point.
    cvec witness;
    /// 3^unknowns.
    long long bezout_bound = 1;
    int converged_starts = 0;
};

/// Multi-start Newton with minimum-norm steps; deterministic for a fixed
/// (seed, starts) independent of the thread count. Throws
/// ToleranceUnreachable when no start converges on a nonzero system.
CriticalSet solve_critical(const GradientSystem& sys, const SolverConfig& cfg);

/// max_i |F_i(x)|.
long double residual(const GradientSystem& sys, const cvec& x);

} // namespace holo::ym
