#include "holo/brane/hom.hpp"

#include <algorithm>

namespace holo::brane {

using exact::CoordinateSpace;
using exact::SparseRow;

HomComplex::HomComplex(const BraneComplex& a, const BraneComplex& b, HomOptions opts) : opts_(opts)
{
    exact::check_same_ring(a.ring(), b.ring(), "hom_complex");
    if (opts.m_min > opts.m_max)
        throw DimensionMismatch("empty m range for hom_complex");
    e_ = std::max(a.diff_degree(), b.diff_degree());
    const int trunc = std::max(a.ring().trunc, cap(opts.m_max + 1));
    a_ = a.with_trunc(trunc);
    b_ = b.with_trunc(trunc);
    const Ring ring{a.ring().n_vars, trunc};
    for (int m = opts.m_min; m <= opts.m_max + 1; ++m) {
        std::vector<Block> bl;
        std::size_t offset = 0;
        for (int q : a_.indices()) {
            const int target = b_.rank(q + m);
            if (target == 0)
                continue;
            CoordinateSpace space(ring, opts.form_degree, target, a_.rank(q), cap(m));
            const std::size_t dim = space.dim();
            bl.push_back(Block{q, std::move(space), offset});
            offset += dim;
        }
        blocks_.emplace(m, std::move(bl));
    }
}

const std::vector<HomComplex::Block>& HomComplex::blocks(int m) const
{
    auto it = blocks_.find(m);
    if (it == blocks_.end())
        throw DimensionMismatch("Hom^" + std::to_string(m) + " outside the configured range");
    return it->second;
}

std::size_t HomComplex::dim(int m) const
{
    std::size_t d = 0;
    for (const auto& b : blocks(m))
        d += b.space.dim();
    return d;
}

HomCochain HomComplex::apply(int m, const HomCochain& g) const
{
    const Ring ring = a_.ring();
    const int k = opts_.form_degree;
    const Scalar sign = ((m + 1) % 2) ? Scalar(-1) : Scalar(1);
    HomCochain out;
    for (const auto& blk : blocks(m + 1)) {
        const int q = blk.q;
        FormMatrix term = exact::form_zero(ring, k, b_.rank(q + m + 1), a_.rank(q));
        auto gq = g.find(q);
        if (gq != g.end())
            term += b_.delta(q + m) * gq->second;
        auto gq1 = g.find(q + 1);
        if (gq1 != g.end())
            term += sign * (gq1->second * a_.delta(q));
        out.emplace(q, std::move(term));
    }
    return out;
}

HomCochain HomComplex::from_vector(int m, const std::vector<Scalar>& v) const
{
    if (v.size() != dim(m))
        throw DimensionMismatch("Hom cochain vector length");
    HomCochain out;
    for (const auto& blk : blocks(m)) {
        std::vector<Scalar> part(v.begin() + blk.offset, v.begin() + blk.offset + blk.space.dim());
        out.emplace(blk.q, blk.space.from_vector(part));
    }
    return out;
}

HomCochain HomComplex::basis_element(int m, std::size_t idx) const
{
    std::vector<Scalar> v(dim(m));
    v.at(idx) = Scalar(1);
    return from_vector(m, v);
}

SparseRow HomComplex::coordinates(int m, const HomCochain& g) const
{
    SparseRow out;
    for (const auto& blk : blocks(m)) {
        auto it = g.find(blk.q);
        if (it == g.end())
            continue;
        for (auto& [k, v] : blk.space.to_sparse(it->second))
            out.emplace(blk.offset + k, v);
    }
    for (const auto& [q, mat] : g) {
        const bool known = std::any_of(blocks(m).begin(), blocks(m).end(), [&](const Block& b) { return b.q == q; });
        if (!known && !mat.is_zero())
            throw DimensionMismatch("cochain component at q=" + std::to_string(q) + " outside Hom^" +
                                    std::to_string(m));
    }
    return out;
}

std::size_t HomComplex::delta_rank(int m) const
{
    if (m < opts_.m_min || m > opts_.m_max)
        throw DimensionMismatch("delta_H^" + std::to_string(m) + " outside the configured range");
    auto it = rank_cache_.find(m);
    if (it != rank_cache_.end())
        return it->second;
    // columns of delta_H^m as sparse vectors; the column rank equals the rank
    std::vector<SparseRow> cols;
    const std::size_t n = dim(m);
    for (std::size_t k = 0; k < n; ++k)
        cols.push_back(coordinates(m + 1, apply(m, basis_element(m, k))));
    std::size_t r = exact::sparse_rank(dim(m + 1), cols);
    rank_cache_.emplace(m, r);
    return r;
}

std::size_t HomComplex::cohomology_dim(int m) const
{
    if (m - 1 < opts_.m_min || m > opts_.m_max)
        throw DimensionMismatch("H^" + std::to_string(m) + " needs Hom^" + std::to_string(m - 1) + ".." +
                                std::to_string(m + 1) + " in range");
    return dim(m) - delta_rank(m) - delta_rank(m - 1);
}

} // namespace holo::brane
