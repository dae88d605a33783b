#include "holo/ym/functional.hpp"

#include "holo/exact/linear.hpp"

namespace holo::ym {

using exact::Exponent;
using exact::form_zero;

Scalar pair(const FormMatrix& x, const FormMatrix& y, PairingMode mode, const ScalarMatrix* metric)
{
    if (x.rows() != y.cols() || x.cols() != y.rows() || x.rows() != x.cols())
        throw DimensionMismatch("pairing " + x.shape() + " with " + y.shape());
    Scalar total;
    if (mode == PairingMode::bilinear) {
        for (std::size_t a = 0; a < x.rows(); ++a)
            for (std::size_t b = 0; b < x.cols(); ++b)
                total += exact::torus_pairing(x(a, b), y(b, a), mode);
        return total;
    }
    const FormMatrix* yy = &y;
    FormMatrix twisted;
    if (metric) {
        auto inv = exact::inverse(*metric);
        if (!inv || metric->rows() != y.rows())
            throw DimensionMismatch("pairing metric must be invertible and " + y.shape());
        twisted = *metric * y * *inv;
        yy = &twisted;
    }
    for (std::size_t a = 0; a < x.rows(); ++a)
        for (std::size_t b = 0; b < x.cols(); ++b)
            total += exact::torus_pairing(x(a, b), (*yy)(a, b), mode);
    return total;
}

Scalar ym_sheaf(const Connection& c, PairingMode mode, const ScalarMatrix* metric)
{
    const HomElement k = c.curvature();
    return pair(k, k, mode, metric);
}

HomElement CurvatureExpansion::at(const std::vector<Scalar>& lambda) const
{
    if (lambda.size() != b.size())
        throw DimensionMismatch("expansion has " + std::to_string(b.size()) + " parameters, got " +
                                std::to_string(lambda.size()));
    HomElement k = k0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        k += lambda[i] * b[i];
        for (std::size_t j = 0; j < b.size(); ++j)
            k += (lambda[i] * lambda[j]) * bb[i][j];
    }
    return k;
}

CurvatureExpansion curvature_expansion(const Connection& base, const std::vector<HomElement>& e)
{
    CurvatureExpansion ce;
    ce.k0 = base.curvature();
    for (const auto& ei : e) {
        if (ei.rows() != base.matrix().rows() || ei.cols() != base.matrix().cols() ||
            ei.zero().degree() != 1)
            throw DimensionMismatch("variation must be a " + base.matrix().shape() + " matrix of 1-forms, got " +
                                    ei.shape());
        ce.b.push_back(dg::covariant_end(base.matrix(), ei));
    }
    ce.bb.resize(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
            ce.bb[i].push_back(e[i] * e[j]);
    return ce;
}

Connection connection_at(const Connection& base, const std::vector<HomElement>& e, const std::vector<Scalar>& lambda)
{
    if (lambda.size() != e.size())
        throw DimensionMismatch("connection_at: " + std::to_string(e.size()) + " directions, " +
                                std::to_string(lambda.size()) + " parameters");
    FormMatrix a = base.matrix();
    for (std::size_t i = 0; i < e.size(); ++i)
        a += lambda[i] * e[i];
    return Connection(base.module(), a);
}

YMPolynomial YMPolynomial::zero(int m, PairingMode mode)
{
    YMPolynomial out;
    out.m = m;
    out.mode = mode;
    out.p = TruncPoly(Ring{out.n_vars(), 4});
    return out;
}

Scalar YMPolynomial::evaluate(const std::vector<Scalar>& lambda) const
{
    if (static_cast<int>(lambda.size()) != m)
        throw DimensionMismatch("P has " + std::to_string(m) + " parameters");
    std::vector<Scalar> pt = lambda;
    if (mode == PairingMode::hermitian)
        for (const auto& l : lambda)
            pt.push_back(l.conj());
    return p.evaluate(pt);
}

std::complex<long double> YMPolynomial::evaluate(const std::vector<std::complex<long double>>& lambda) const
{
    if (static_cast<int>(lambda.size()) != m)
        throw DimensionMismatch("P has " + std::to_string(m) + " parameters");
    std::vector<std::complex<long double>> pt = lambda;
    if (mode == PairingMode::hermitian)
        for (const auto& l : lambda)
            pt.push_back(std::conj(l));
    return p.evaluate(pt);
}

YMPolynomial& YMPolynomial::operator+=(const YMPolynomial& o)
{
    if (o.m != m || o.mode != mode)
        throw DimensionMismatch("adding polynomials with different parameter spaces");
    p += o.p;
    return *this;
}

YMPolynomial YMPolynomial::operator*(const Scalar& c) const
{
    YMPolynomial out = *this;
    out.p *= c;
    return out;
}

YMPolynomial build_P(const CurvatureExpansion& ce, PairingMode mode)
{
    const int m = static_cast<int>(ce.size());
    YMPolynomial out = YMPolynomial::zero(m, mode);
    struct Term
    {
        Exponent mono;
        const HomElement* block;
    };
    std::vector<Term> terms;
    auto push = [&](Exponent e, const HomElement& x) {
        if (!x.is_zero())
            terms.push_back(Term{std::move(e), &x});
    };
    push(Exponent(m, 0), ce.k0);
    for (int i = 0; i < m; ++i) {
        Exponent e(m, 0);
        e[i] = 1;
        push(e, ce.b[i]);
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Exponent e(m, 0);
            ++e[i];
            ++e[j];
            push(e, ce.bb[i][j]);
        }
    const ScalarMatrix* metric = ce.metric ? &*ce.metric : nullptr;
    const Ring ring = out.p.ring();
    for (const auto& ta : terms)
        for (const auto& tb : terms) {
            const Scalar c = pair(*ta.block, *tb.block, mode, metric);
            if (c.is_zero())
                continue;
            Exponent e(out.n_vars(), 0);
            for (int k = 0; k < m; ++k) {
                if (mode == PairingMode::bilinear) {
                    e[k] = ta.mono[k] + tb.mono[k];
                } else {
                    e[k] = tb.mono[k];
                    e[m + k] = ta.mono[k];
                }
            }
            out.p += TruncPoly::monomial(ring, e, c);
        }
    return out;
}

BraneExpansion brane_expansion(const GaugeField& psi, const std::vector<FormFamily>& variations,
                               const CohomologyResult& h)
{
    BraneExpansion out;
    const Ring ring = psi.complex.ring();
    for (const auto& [j, sp] : h.spaces) {
        if (sp.rank == 0)
            continue;
        const dg::FreeModule mod{sp.rank, ring};
        Connection theta(mod, sp.restrict(psi.b_at(j)));
        std::vector<HomElement> dirs;
        for (const auto& xi : variations) {
            auto it = xi.find(j);
            dirs.push_back(it == xi.end() ? form_zero(ring, 1, sp.rank, sp.rank) : sp.restrict(it->second));
        }
        CurvatureExpansion ce = curvature_expansion(theta, dirs);
        ce.metric = sp.gram;
        out.theta.emplace(j, std::move(theta));
        out.expansions.emplace(j, std::move(ce));
        out.directions.emplace(j, std::move(dirs));
    }
    return out;
}

YMPolynomial brane_P(const BraneExpansion& be, int m, PairingMode mode)
{
    YMPolynomial out = YMPolynomial::zero(m, mode);
    for (const auto& [j, ce] : be.expansions) {
        YMPolynomial pj = build_P(ce, mode);
        out += (j % 2 == 0) ? pj : pj * Scalar(-1);
    }
    return out;
}

Scalar ym_brane(const GaugeField& g, const CohomologyResult& h, PairingMode mode)
{
    Scalar total;
    for (const auto& [j, theta] : brane::induced_connections(g, h)) {
        const Scalar v = ym_sheaf(theta, mode, &h.at(j).gram);
        total += (j % 2 == 0) ? v : -v;
    }
    return total;
}

std::vector<std::complex<long double>> GradientSystem::to_lambda(const std::vector<std::complex<long double>>& x) const
{
    if (mode == PairingMode::bilinear)
        return x;
    std::vector<std::complex<long double>> out(m);
    for (int k = 0; k < m; ++k)
        out[k] = x[k] + std::complex<long double>(0, 1) * x[m + k];
    return out;
}

std::vector<Scalar> GradientSystem::to_lambda(const std::vector<Scalar>& x) const
{
    if (mode == PairingMode::bilinear)
        return x;
    std::vector<Scalar> out(m);
    for (int k = 0; k < m; ++k)
        out[k] = x[k] + Scalar::i() * x[m + k];
    return out;
}

bool GradientSystem::is_zero() const
{
    for (const auto& e : equations)
        if (!e.is_zero())
            return false;
    return true;
}

int GradientSystem::max_degree() const
{
    int d = -1;
    for (const auto& e : equations)
        d = std::max(d, e.degree());
    return d;
}

TruncPoly substitute(const TruncPoly& p, const std::vector<TruncPoly>& images, Ring target)
{
    if (static_cast<int>(images.size()) != p.ring().n_vars)
        throw DimensionMismatch("substitute needs one image per variable");
    TruncPoly out(target);
    std::vector<std::vector<TruncPoly>> powers(images.size());
    for (const auto& [e, c] : p.terms()) {
        TruncPoly term = TruncPoly::constant(target, c);
        for (std::size_t k = 0; k < e.size(); ++k) {
            auto& pw = powers[k];
            if (pw.empty())
                pw.push_back(TruncPoly::constant(target, 1));
            while (static_cast<int>(pw.size()) <= e[k])
                pw.push_back(pw.back() * images[k]);
            if (e[k] > 0)
                term = term * pw[e[k]];
        }
        out += term;
    }
    return out;
}

GradientSystem gradient_system(const YMPolynomial& p)
{
    GradientSystem g;
    g.m = p.m;
    g.mode = p.mode;
    if (p.mode == PairingMode::bilinear) {
        g.unknowns = p.m;
        for (int k = 0; k < p.m; ++k)
            g.equations.push_back(p.p.derivative(k));
        return g;
    }
    // lambda_k = u_k + i v_k, conj(lambda_k) = u_k - i v_k
    const int m = p.m;
    g.unknowns = 2 * m;
    const Ring real{2 * m, 4};
    std::vector<TruncPoly> images(2 * m);
    for (int k = 0; k < m; ++k) {
        const TruncPoly u = TruncPoly::variable(real, k), v = TruncPoly::variable(real, m + k);
        images[k] = u + Scalar::i() * v;
        images[m + k] = u - Scalar::i() * v;
    }
    const TruncPoly q = substitute(p.p, images, real);
    for (int k = 0; k < 2 * m; ++k)
        g.equations.push_back(q.derivative(k));
    return g;
}

} // namespace holo::ym
