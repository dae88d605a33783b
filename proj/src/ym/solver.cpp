#include "holo/ym/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <random>
#include <thread>

namespace holo::ym {

namespace {

using cld = std::complex<long double>;
using CMat = Eigen::Matrix<cld, Eigen::Dynamic, Eigen::Dynamic>;
using CVec = Eigen::Matrix<cld, Eigen::Dynamic, 1>;

struct FloatPoly
{
    std::vector<std::pair<exact::Exponent, cld>> terms;

    explicit FloatPoly(const TruncPoly& p)
    {
        for (const auto& [e, c] : p.terms())
            terms.emplace_back(e, c.to_complex_ld());
    }

    cld operator()(const std::vector<std::vector<cld>>& powers) const
    {
        cld total = 0;
        for (const auto& [e, c] : terms) {
            cld t = c;
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k])
                    t *= powers[k][e[k]];
            total += t;
        }
        return total;
    }
};

struct Compiled
{
    int n = 0;
    std::vector<FloatPoly> f;
    std::vector<std::vector<FloatPoly>> jac;

    explicit Compiled(const GradientSystem& sys) : n(sys.unknowns)
    {
        for (const auto& eq : sys.equations) {
            f.emplace_back(eq);
            jac.emplace_back();
            for (int k = 0; k < n; ++k)
                jac.back().emplace_back(eq.derivative(k));
        }
    }

    std::vector<std::vector<cld>> powers(const cvec& x) const
    {
        std::vector<std::vector<cld>> pw(n, std::vector<cld>(5, 1));
        for (int k = 0; k < n; ++k)
            for (int d = 1; d < 5; ++d)
                pw[k][d] = pw[k][d - 1] * x[k];
        return pw;
    }

    CVec value(const cvec& x) const
    {
        const auto pw = powers(x);
        CVec v(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            v(i) = f[i](pw);
        return v;
    }

    CMat jacobian(const cvec& x) const
    {
        const auto pw = powers(x);
        CMat j(f.size(), n);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (int k = 0; k < n; ++k)
                j(i, k) = jac[i][k](pw);
        return j;
    }
};

long double norm(const cvec& x)
{
    long double s = 0;
    for (const auto& c : x)
        s += std::norm(c);
    return std::sqrt(s);
}

long double max_abs(const CVec& v)
{
    long double m = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        m = std::max(m, std::abs(v(i)));
    return m;
}

long double distance(const cvec& a, const cvec& b)
{
    long double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += std::norm(a[k] - b[k]);
    return std::sqrt(s);
}

struct Run
{
    bool converged = false;
    cvec x;
    long double residual = 0;
    int multiplicity = 1;
};

Run newton(const Compiled& c, cvec x, const SolverConfig& cfg)
{
    Run run;
    std::vector<long double> steps;
    for (int it = 0; it < cfg.max_iter; ++it) {
        const CVec fx = c.value(x);
        if (max_abs(fx) == 0)
            break;
        Eigen::CompleteOrthogonalDecomposition<CMat> cod(c.jacobian(x));
        const CVec dx = cod.solve(-fx);
        long double step = 0;
        for (int k = 0; k < c.n; ++k) {
            x[k] += dx(k);
            step += std::norm(dx(k));
        }
        step = std::sqrt(step);
        steps.push_back(step);
        const long double scale = 1 + norm(x);
        if (!std::isfinite(static_cast<double>(scale)) || scale > 1e8)
            return run;
        if (step <= 1e-17L * scale)
            break;
    }
    run.x = x;
    run.residual = max_abs(c.value(x));
    run.converged = run.residual <= cfg.tol;
    // linear rate (m - 1) / m near a singular isolated root
    if (steps.size() >= 6) {
        std::vector<long double> ratios;
        for (std::size_t k = steps.size() - 5; k + 1 < steps.size(); ++k)
            if (steps[k] > 1e-14L)
                ratios.push_back(steps[k + 1] / steps[k]);
        if (!ratios.empty()) {
            std::sort(ratios.begin(), ratios.end());
            const long double r = ratios[ratios.size() / 2];
            if (r > 0.3L && r < 0.99L)
                run.multiplicity = static_cast<int>(std::lround(1.0L / (1.0L - r)));
        }
    }
    return run;
}

cvec random_start(std::uint64_t seed, int s, int n, bool real, double radius)
{
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(s + 1)));
    std::uniform_real_distribution<double> u(-radius, radius);
    cvec x(n);
    for (int k = 0; k < n; ++k) {
        const double re = u(rng), im = u(rng);
        x[k] = cld(re, real ? 0.0 : im);
    }
    return x;
}

bool canonical_less(const cvec& a, const cvec& b)
{
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].real() != b[k].real())
            return a[k].real() < b[k].real();
        if (a[k].imag() != b[k].imag())
            return a[k].imag() < b[k].imag();
    }
    return false;
}

/// Kernel directions of the Jacobian when it is numerically rank deficient,
/// each with its phase fixed so that the largest component is real positive.
std::vector<cvec> kernel_directions(const Compiled& c, const cvec& x, bool real)
{
    const CMat j = c.jacobian(x);
    Eigen::JacobiSVD<CMat> svd(j, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const long double smax = sv.size() ? sv(0) : 0;
    std::vector<cvec> out;
    for (int col = 0; col < c.n; ++col) {
        if (col < sv.size() && sv(col) > 1e-8L * std::max<long double>(smax, 1))
            continue;
        CVec v = svd.matrixV().col(col);
        Eigen::Index big = 0;
        for (Eigen::Index k = 1; k < v.size(); ++k)
            if (std::abs(v(k)) > std::abs(v(big)) + 1e-12L)
                big = k;
        v *= std::conj(v(big)) / std::abs(v(big));
        cvec dir(c.n);
        long double s = 0;
        for (int k = 0; k < c.n; ++k) {
            dir[k] = real ? cld(v(k).real(), 0) : v(k);
            s += std::norm(dir[k]);
        }
        s = std::sqrt(s);
        for (auto& z : dir)
            z /= s;
        out.push_back(std::move(dir));
    }
    return out;
}

/// Solve F(x) = 0 together with <v, x - p> = t by minimum-norm Gauss-Newton.
/// Success means the solution set reaches distance t from p along v.
bool constrained_solution(const Compiled& c, const cvec& p, const cvec& v, long double t, const SolverConfig& cfg)
{
    cvec x = p;
    for (int k = 0; k < c.n; ++k)
        x[k] += t * v[k];
    auto constraint = [&](const cvec& y) {
        cld g = -t;
        for (int k = 0; k < c.n; ++k)
            g += std::conj(v[k]) * (y[k] - p[k]);
        return g;
    };
    const long double scale = 1 + norm(p);
    for (int it = 0; it < cfg.max_iter; ++it) {
        const CVec fx = c.value(x);
        CVec rhs(fx.size() + 1);
        rhs.head(fx.size()) = -fx;
        rhs(fx.size()) = -constraint(x);
        CMat j(fx.size() + 1, c.n);
        j.topRows(fx.size()) = c.jacobian(x);
        for (int k = 0; k < c.n; ++k)
            j(fx.size(), k) = std::conj(v[k]);
        Eigen::CompleteOrthogonalDecomposition<CMat> cod(j);
        const CVec dx = cod.solve(rhs);
        long double step = 0;
        for (int k = 0; k < c.n; ++k) {
            x[k] += dx(k);
            step += std::norm(dx(k));
        }
        if (std::sqrt(step) <= 1e-17L * scale)
            break;
    }
    return max_abs(c.value(x)) <= cfg.tol && std::abs(constraint(x)) <= 1e-12L * scale;
}

} // namespace

long double residual(const GradientSystem& sys, const cvec& x)
{
    return max_abs(Compiled(sys).value(x));
}

CriticalSet solve_critical(const GradientSystem& sys, const SolverConfig& cfg)
{
    if (!(cfg.tol > 0))
        throw ToleranceUnreachable("solver tolerance must be positive");
    CriticalSet out;
    out.mode = sys.mode;
    out.unknowns = sys.unknowns;
    for (int k = 0; k < sys.unknowns; ++k)
        out.bezout_bound *= 3;
    const bool real = sys.mode == PairingMode::hermitian;
    if (sys.unknowns == 0)
        return out;
    if (sys.is_zero()) {
        // every point is critical
        out.nonisolated = true;
        out.witness.assign(sys.unknowns, 0);
        out.witness[0] = 1;
        CriticalPoint origin;
        origin.x.assign(sys.unknowns, 0);
        origin.lambda = sys.to_lambda(origin.x);
        out.nonisolated_points.push_back(origin);
        return out;
    }

    const Compiled c(sys);
    std::vector<Run> runs(cfg.starts);
    const int workers = std::max(1, std::min(cfg.threads, cfg.starts));
    auto work = [&](int w) {
        for (int s = w; s < cfg.starts; s += workers)
            runs[s] = newton(c, random_start(cfg.seed, s, c.n, real, cfg.radius), cfg);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }

    std::vector<Run> good;
    for (auto& r : runs)
        if (r.converged)
            good.push_back(std::move(r));
    out.converged_starts = static_cast<int>(good.size());
    if (good.empty())
        throw ToleranceUnreachable("no Newton start reached residual " + std::to_string(cfg.tol));
    std::stable_sort(good.begin(), good.end(), [](const Run& a, const Run& b) { return canonical_less(a.x, b.x); });

    struct Cluster
    {
        Run rep;
        int hits = 0;
    };
    std::vector<Cluster> clusters;
    for (auto& r : good) {
        bool merged = false;
        for (auto& cl : clusters) {
            if (distance(cl.rep.x, r.x) <= 1e-6L * (1 + norm(r.x))) {
                ++cl.hits;
                if (r.residual < cl.rep.residual)
                    cl.rep = r;
                merged = true;
                break;
            }
        }
        if (!merged)
            clusters.push_back(Cluster{r, 1});
    }

    for (const auto& cl : clusters) {
        CriticalPoint p;
        p.x = cl.rep.x;
        p.lambda = sys.to_lambda(p.x);
        p.residual = cl.rep.residual;
        p.hits = cl.hits;
        const auto dirs = kernel_directions(c, p.x, real);
        if (dirs.empty()) {
            out.isolated.push_back(std::move(p));
            continue;
        }
        const long double t = 1e-3L * (1 + norm(p.x));
        const cvec* curve = nullptr;
        for (const auto& v : dirs)
            if (constrained_solution(c, p.x, v, t, cfg)) {
                curve = &v;
                break;
            }
        if (curve) {
            if (!out.nonisolated)
                out.witness = *curve;
            out.nonisolated = true;
            out.nonisolated_points.push_back(std::move(p));
        } else {
            p.multiplicity = std::max(2, cl.rep.multiplicity);
            out.isolated.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace holo::ym
