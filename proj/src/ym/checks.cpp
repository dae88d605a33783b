#include "holo/ym/checks.hpp"

#include <cmath>
#include <tuple>

#include "holo/exact/linear.hpp"

namespace holo::ym {

using exact::form_zero;
using exact::Rational;

namespace {

using cld = std::complex<long double>;
using FloatKey = std::tuple<std::size_t, std::size_t, exact::IndexSet, exact::Exponent>;
using FloatForm = std::map<FloatKey, cld>;

FloatForm shadow(const FormMatrix& x)
{
    FloatForm out;
    for (std::size_t a = 0; a < x.rows(); ++a)
        for (std::size_t b = 0; b < x.cols(); ++b)
            for (const auto& [s, f] : x(a, b).components())
                for (const auto& [e, c] : f.terms())
                    out[{a, b, s, e}] = c.to_complex_ld();
    return out;
}

cld float_pair(const FloatForm& x, const FloatForm& y, PairingMode mode)
{
    cld total = 0;
    for (const auto& [k, c] : x) {
        FloatKey other = k;
        if (mode == PairingMode::bilinear)
            std::swap(std::get<0>(other), std::get<1>(other));
        auto it = y.find(other);
        if (it == y.end())
            continue;
        total += (mode == PairingMode::hermitian ? std::conj(c) : c) * it->second;
    }
    return total;
}

FormMatrix family_at(const FormFamily& fam, Ring ring, int i, int rank)
{
    auto it = fam.find(i);
    return it == fam.end() ? form_zero(ring, 1, rank, rank) : it->second;
}

/// YM(theta + h xi) on the float shadow of the exact curvature.
cld shadow_ym(const std::map<int, Connection>& theta, const std::map<int, HomElement>& xi,
              const CohomologyResult& h, PairingMode mode, const Rational& step)
{
    cld total = 0;
    for (const auto& [j, c] : theta) {
        const Connection moved = c + Scalar(step) * xi.at(j);
        const HomElement k = moved.curvature();
        FloatForm y;
        if (mode == PairingMode::hermitian) {
            const ScalarMatrix& g = h.at(j).gram;
            y = shadow(g * k * *exact::inverse(g));
        } else {
            y = shadow(k);
        }
        const cld v = float_pair(shadow(k), y, mode);
        total += (j % 2 == 0) ? v : -v;
    }
    return total;
}

} // namespace

StationarityReport stationarity_check(const GaugeField& psi, const FormFamily& xi, const CohomologyResult& h,
                                      PairingMode mode)
{
    StationarityReport rep;
    const auto theta = brane::induced_connections(psi, h);
    std::map<int, HomElement> xi_j;
    for (const auto& [j, c] : theta) {
        const auto& sp = h.at(j);
        auto it = xi.find(j);
        xi_j.emplace(j, it == xi.end() ? form_zero(c.ring(), 1, sp.rank, sp.rank) : sp.restrict(it->second));
        const Scalar v = pair(c.curvature(), dg::covariant_end(c.matrix(), xi_j.at(j)), mode, &sp.gram);
        rep.pairing += (j % 2 == 0) ? v : -v;
    }
    const cld p = rep.pairing.to_complex_ld();
    rep.predicted = mode == PairingMode::hermitian ? cld(2 * p.real(), 0) : 2.0L * p;

    auto central = [&](const Rational& step, long double hstep) {
        return (shadow_ym(theta, xi_j, h, mode, step) - shadow_ym(theta, xi_j, h, mode, -step)) / (2 * hstep);
    };
    const cld d1 = central(Rational(1, 10000), kFdStepCoarse);
    const cld d2 = central(Rational(1, 100000), kFdStepFine);
    const long double h1 = kFdStepCoarse * kFdStepCoarse, h2 = kFdStepFine * kFdStepFine;
    rep.fd = (h1 * d2 - h2 * d1) / (h1 - h2);
    rep.abs_error = std::abs(rep.fd - rep.predicted);
    rep.agree = rep.abs_error <= kFdRelTol * std::abs(rep.predicted) + kFdAbsFloor;
    return rep;
}

std::vector<HomElement> hom_basis(Ring ring, int rank, int cap)
{
    std::vector<HomElement> out;
    if (cap < 0)
        return out;
    const auto monos = exact::monomials_up_to(ring.n_vars, cap);
    for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b)
            for (int k = 0; k < ring.n_vars; ++k)
                for (const auto& e : monos) {
                    HomElement x = form_zero(ring, 1, rank, rank);
                    const TruncPoly mono = TruncPoly::monomial(ring, e);
                    x(a, b) = exact::ExteriorForm::dx(ring, k, &mono);
                    out.push_back(std::move(x));
                }
    return out;
}

OrthogonalityReport orthogonality_check(const Connection& c, PairingMode mode,
                                        const std::vector<HomElement>* directions, const ScalarMatrix* metric)
{
    OrthogonalityReport rep;
    std::vector<HomElement> basis;
    if (!directions) {
        rep.cap = c.ring().trunc - std::max(0, exact::max_poly_degree(c.matrix()));
        basis = hom_basis(c.ring(), c.module().rank, rep.cap);
        directions = &basis;
    } else {
        rep.cap = -1;
    }
    const HomElement k = c.curvature();
    for (std::size_t idx = 0; idx < directions->size(); ++idx) {
        const Scalar v = pair(k, dg::covariant_end(c.matrix(), (*directions)[idx]), mode, metric);
        ++rep.checked;
        if (!v.is_zero()) {
            rep.witness = idx;
            rep.witness_value = v;
            break;
        }
    }
    return rep;
}

EulerPoincareReport euler_poincare_check(const BraneComplex& f, const FormFamily& a, PairingMode mode,
                                         const std::vector<Point>& points)
{
    if (auto bad = brane::compatibility_defect(f, a))
        throw NotCompatible("connection family is not compatible with delta^" + std::to_string(*bad));
    EulerPoincareReport rep;
    for (int i : f.indices()) {
        const Scalar v = ym_sheaf(Connection(f.module(i), family_at(a, f.ring(), i, f.rank(i))), mode);
        rep.terms += (i % 2 == 0) ? v : -v;
    }
    const CohomologyResult h = brane::cohomology(f, points);
    rep.cohomology = ym_brane(GaugeField::from_connections(f, a), h, mode);
    return rep;
}

std::optional<int> chain_map_compatibility_defect(const BraneComplex& a, const BraneComplex& b, const ChainMap& f,
                                                  const FormFamily& alpha, const FormFamily& beta)
{
    const Ring ring = a.ring();
    for (const auto& [i, fi] : f.components) {
        const FormMatrix lhs = exact::d(fi) + family_at(beta, ring, i, b.rank(i)) * fi -
                               fi * family_at(alpha, ring, i, a.rank(i));
        if (!lhs.is_zero())
            return i;
    }
    return std::nullopt;
}

ConeReport cone_ym(const BraneComplex& a, const FormFamily& alpha, const BraneComplex& b, const FormFamily& beta,
                   const ChainMap& f, PairingMode mode, const std::vector<Point>& points)
{
    if (auto bad = chain_map_compatibility_defect(a, b, f, alpha, beta))
        throw NotCompatible("chain map component " + std::to_string(*bad) + " does not intertwine the connections");
    const BraneComplex c = brane::cone(a, b, f);
    const Ring ring = a.ring();
    FormFamily gamma;
    for (int i : c.indices())
        gamma.emplace(i, exact::block_diag(family_at(alpha, ring, i + 1, a.rank(i + 1)),
                                           family_at(beta, ring, i, b.rank(i))));
    ConeReport rep;
    rep.source = euler_poincare_check(a, alpha, mode, points);
    rep.target = euler_poincare_check(b, beta, mode, points);
    rep.cone = euler_poincare_check(c, gamma, mode, points);
    return rep;
}

SplitAssembly assemble_split(const SplitData& data)
{
    const Ring ring = data.ring;
    std::map<int, const SplitBlock*> blocks;
    for (const auto& blk : data.h)
        if (!blocks.emplace(blk.index, &blk).second)
            throw DimensionMismatch("two H blocks at index " + std::to_string(blk.index));
    auto h_rank = [&](int i) {
        auto it = blocks.find(i);
        return it == blocks.end() ? 0 : static_cast<int>(it->second->a0.rows());
    };
    auto g_rank = [&](int i) {
        auto it = data.g_ranks.find(i);
        return it == data.g_ranks.end() ? 0 : it->second;
    };
    std::map<int, int> ranks;
    for (const auto& [i, blk] : blocks)
        ranks[i] += 0;
    for (const auto& [i, r] : data.g_ranks)
        ranks[i] += 0;
    for (auto& [i, r] : ranks)
        r = h_rank(i) + g_rank(i);
    std::map<int, PolyMatrix> deltas;
    for (const auto& [i, dg_i] : data.g_delta) {
        PolyMatrix m = exact::poly_zero(ring, ranks[i + 1], ranks[i]);
        m.set_block(h_rank(i + 1), h_rank(i), dg_i);
        deltas.emplace(i, m);
    }
    SplitAssembly out;
    out.complex = BraneComplex(ring, ranks, deltas);
    for (const auto& [i, r] : ranks) {
        FormMatrix a = form_zero(ring, 1, r, r);
        if (auto it = blocks.find(i); it != blocks.end())
            a.set_block(0, 0, it->second->a0);
        out.base.emplace(i, a);
    }
    for (const auto& [i, blk] : blocks)
        for (const auto& e : blk->directions) {
            FormMatrix x = form_zero(ring, 1, ranks[i], ranks[i]);
            x.set_block(0, 0, e);
            out.variations.push_back(FormFamily{{i, x}});
        }
    return out;
}

bool SemisimpleReport::ok() const
{
    if (!found_critical || !stationary)
        return false;
    for (const auto& [j, r] : per_degree)
        if (!r.orthogonal())
            return false;
    return true;
}

namespace {

/// Exact solution of a gradient system of degree <= 1.
std::optional<std::vector<Scalar>> solve_affine(const GradientSystem& g)
{
    const int n = g.unknowns;
    ScalarMatrix m = exact::scalar_zero(g.equations.size(), n);
    std::vector<Scalar> rhs;
    for (std::size_t r = 0; r < g.equations.size(); ++r) {
        const TruncPoly& eq = g.equations[r];
        for (int k = 0; k < n; ++k) {
            exact::Exponent e(n, 0);
            e[k] = 1;
            m(r, k) = eq.coeff(e);
        }
        rhs.push_back(-eq.constant_term());
    }
    const auto sol = exact::solve_linear(m, rhs);
    if (!sol.consistent)
        return std::nullopt;
    return sol.particular;
}

} // namespace

SemisimpleReport semisimple_converse_harness(const SplitData& data, PairingMode mode, const SolverConfig& cfg)
{
    SemisimpleReport rep;
    rep.assembly = assemble_split(data);
    const auto& asmb = rep.assembly;
    const int m = static_cast<int>(asmb.variations.size());
    const CohomologyResult h = brane::cohomology(asmb.complex, brane::default_eval_points(data.ring));
    const BraneExpansion be =
        brane_expansion(GaugeField::from_connections(asmb.complex, asmb.base), asmb.variations, h);
    rep.p = brane_P(be, m, mode);
    const GradientSystem g = gradient_system(rep.p);

    std::optional<std::vector<Scalar>> x;
    if (g.max_degree() <= 1) {
        x = solve_affine(g);
    } else {
        const CriticalSet cs = solve_critical(g, cfg);
        for (const auto& pt : cs.isolated) {
            std::vector<Scalar> cand;
            for (const auto& z : pt.x)
                cand.emplace_back(exact::rationalize(z.real(), 1000000), exact::rationalize(z.imag(), 1000000));
            bool zero = true;
            for (const auto& eq : g.equations)
                zero = zero && eq.evaluate(cand).is_zero();
            if (zero) {
                x = cand;
                break;
            }
        }
    }
    if (!x)
        return rep;
    rep.found_critical = true;
    rep.stationary = true;
    for (const auto& eq : g.equations)
        rep.stationary = rep.stationary && eq.evaluate(*x).is_zero();
    rep.lambda = g.to_lambda(*x);

    for (const auto& [j, theta] : be.theta) {
        const auto& dirs = be.directions.at(j);
        const Connection at = connection_at(theta, dirs, rep.lambda);
        std::vector<HomElement> own;
        for (const auto& dvec : dirs)
            if (!dvec.is_zero())
                own.push_back(dvec);
        rep.per_degree.emplace(j, orthogonality_check(at, mode, &own, &h.at(j).gram));
    }
    return rep;
}

} // namespace holo::ym
