#include "holo/brane/complex.hpp"

#include <algorithm>

namespace holo::brane {

using exact::poly_zero;

namespace {

void check_delta_shape(const std::map<int, int>& ranks, int i, const PolyMatrix& m)
{
    auto rank_of = [&](int k) {
        auto it = ranks.find(k);
        return it == ranks.end() ? 0 : it->second;
    };
    if (m.rows() != static_cast<std::size_t>(rank_of(i + 1)) || m.cols() != static_cast<std::size_t>(rank_of(i)))
        throw DimensionMismatch("delta^" + std::to_string(i) + " is " + m.shape() + ", expected " +
                                std::to_string(rank_of(i + 1)) + "x" + std::to_string(rank_of(i)));
}

} // namespace

std::optional<SquareDefect> BraneComplex::square_defect(const std::map<int, PolyMatrix>& deltas)
{
    for (const auto& [i, d0] : deltas) {
        auto it = deltas.find(i + 1);
        if (it == deltas.end())
            continue;
        PolyMatrix sq = it->second * d0;
        for (std::size_t r = 0; r < sq.rows(); ++r)
            for (std::size_t c = 0; c < sq.cols(); ++c)
                if (!sq(r, c).is_zero())
                    return SquareDefect{i, r, c, sq(r, c)};
    }
    return std::nullopt;
}

BraneComplex::BraneComplex(Ring ring, std::map<int, int> ranks, std::map<int, PolyMatrix> deltas) : ring_(ring)
{
    for (const auto& [i, r] : ranks) {
        if (r < 0)
            throw DimensionMismatch("negative rank at index " + std::to_string(i));
        if (r > 0)
            ranks_.emplace(i, r);
    }
    for (auto& [i, m] : deltas) {
        check_delta_shape(ranks_, i, m);
        if (m.rows() == 0 || m.cols() == 0 || m.is_zero())
            continue;
        exact::check_same_ring(m.zero().ring(), ring, "differential");
        deltas_.emplace(i, std::move(m));
    }
    if (auto defect = square_defect(deltas_))
        throw NotAComplex("delta^" + std::to_string(defect->index + 1) + " delta^" + std::to_string(defect->index) +
                          " has entry (" + std::to_string(defect->row) + "," + std::to_string(defect->col) +
                          ") = " + defect->value.to_string());
}

BraneComplex BraneComplex::single(Ring ring, int rank, int index)
{
    return BraneComplex(ring, {{index, rank}}, {});
}

int BraneComplex::rank(int i) const
{
    auto it = ranks_.find(i);
    return it == ranks_.end() ? 0 : it->second;
}

std::vector<int> BraneComplex::indices() const
{
    std::vector<int> out;
    for (const auto& [i, r] : ranks_)
        out.push_back(i);
    return out;
}

int BraneComplex::min_index() const { return ranks_.empty() ? 0 : ranks_.begin()->first; }
int BraneComplex::max_index() const { return ranks_.empty() ? 0 : ranks_.rbegin()->first; }

int BraneComplex::total_rank() const
{
    int t = 0;
    for (const auto& [i, r] : ranks_)
        t += r;
    return t;
}

PolyMatrix BraneComplex::delta(int i) const
{
    auto it = deltas_.find(i);
    if (it != deltas_.end())
        return it->second;
    return poly_zero(ring_, rank(i + 1), rank(i));
}

int BraneComplex::diff_degree() const
{
    int e = 0;
    for (const auto& [i, m] : deltas_)
        e = std::max(e, exact::max_degree(m));
    return e;
}

BraneComplex BraneComplex::with_trunc(int trunc) const
{
    std::map<int, PolyMatrix> deltas;
    for (const auto& [i, m] : deltas_)
        deltas.emplace(i, exact::with_trunc(m, trunc));
    return BraneComplex(Ring{ring_.n_vars, trunc}, ranks_, deltas);
}

PolyMatrix ChainMap::at(const BraneComplex& a, const BraneComplex& b, int i) const
{
    auto it = components.find(i);
    if (it != components.end()) {
        if (it->second.rows() != static_cast<std::size_t>(b.rank(i)) ||
            it->second.cols() != static_cast<std::size_t>(a.rank(i)))
            throw DimensionMismatch("chain map component " + std::to_string(i) + " has shape " + it->second.shape());
        return it->second;
    }
    return poly_zero(a.ring(), b.rank(i), a.rank(i));
}

bool is_chain_map(const BraneComplex& a, const BraneComplex& b, const ChainMap& f)
{
    const int lo = std::min(a.min_index(), b.min_index()) - 1;
    const int hi = std::max(a.max_index(), b.max_index()) + 1;
    for (int i = lo; i <= hi; ++i)
        if (b.delta(i) * f.at(a, b, i) != f.at(a, b, i + 1) * a.delta(i))
            return false;
    return true;
}

BraneComplex direct_sum(const BraneComplex& a, const BraneComplex& b)
{
    exact::check_same_ring(a.ring(), b.ring(), "direct sum");
    std::map<int, int> ranks = a.ranks();
    for (const auto& [i, r] : b.ranks())
        ranks[i] += r;
    std::map<int, PolyMatrix> deltas;
    for (const auto& [i, r] : ranks)
        if (ranks.count(i + 1))
            deltas.emplace(i, exact::block_diag(a.delta(i), b.delta(i)));
    return BraneComplex(a.ring(), ranks, deltas);
}

BraneComplex shift(const BraneComplex& a, int l)
{
    std::map<int, int> ranks;
    std::map<int, PolyMatrix> deltas;
    const Scalar sign = (l % 2) ? Scalar(-1) : Scalar(1);
    for (const auto& [i, r] : a.ranks())
        ranks.emplace(i - l, r);
    for (const auto& [i, r] : a.ranks())
        deltas.emplace(i - l, sign * a.delta(i));
    for (const auto& [i, r] : a.ranks())
        if (!ranks.count(i - l - 1))
            deltas.emplace(i - l - 1, sign * a.delta(i - 1));
    return BraneComplex(a.ring(), ranks, deltas);
}

BraneComplex cone(const BraneComplex& a, const BraneComplex& b, const ChainMap& f)
{
    exact::check_same_ring(a.ring(), b.ring(), "cone");
    if (!is_chain_map(a, b, f))
        throw NotAChainMap("cone of a map that does not commute with the differentials");
    const Ring ring = a.ring();
    const int lo = std::min(a.min_index() - 1, b.min_index()) - 1;
    const int hi = std::max(a.max_index() - 1, b.max_index()) + 1;
    std::map<int, int> ranks;
    for (int i = lo; i <= hi; ++i)
        ranks[i] = a.rank(i + 1) + b.rank(i);
    std::map<int, PolyMatrix> deltas;
    for (int i = lo; i < hi; ++i) {
        const int ra = a.rank(i + 1), rb = b.rank(i);
        const int ra2 = a.rank(i + 2), rb2 = b.rank(i + 1);
        PolyMatrix m = poly_zero(ring, ra2 + rb2, ra + rb);
        m.set_block(0, 0, a.delta(i + 1));
        const Scalar sign = ((i + 1) % 2) ? Scalar(-1) : Scalar(1);
        m.set_block(ra2, 0, sign * f.at(a, b, i + 1));
        m.set_block(ra2, ra, b.delta(i));
        deltas.emplace(i, std::move(m));
    }
    return BraneComplex(ring, ranks, deltas);
}

JetComplex JetComplex::of(const BraneComplex& f)
{
    const int n = f.ring().n_vars;
    std::map<int, int> ranks;
    std::map<int, PolyMatrix> deltas;
    for (const auto& [i, r] : f.ranks())
        ranks.emplace(i, r * (1 + n));
    for (const auto& [i, r] : f.ranks()) {
        const PolyMatrix d = f.delta(i);
        const std::size_t r1 = f.rank(i + 1);
        PolyMatrix m = poly_zero(f.ring(), r1 * (1 + n), r * (1 + n));
        for (int k = 0; k <= n; ++k)
            m.set_block(k * r1, k * r, d);
        deltas.emplace(i, std::move(m));
    }
    return JetComplex{f, BraneComplex(f.ring(), ranks, deltas)};
}

PolyMatrix JetComplex::pi(int i) const
{
    const std::size_t r = base.rank(i);
    PolyMatrix m = poly_zero(base.ring(), r, raw.rank(i));
    m.set_block(0, 0, exact::poly_identity(base.ring(), r));
    return m;
}

PolyMatrix JetComplex::iota(int i) const
{
    const std::size_t r = base.rank(i);
    const std::size_t n = base.ring().n_vars;
    PolyMatrix m = poly_zero(base.ring(), raw.rank(i), r * n);
    m.set_block(r, 0, exact::poly_identity(base.ring(), r * n));
    return m;
}

} // namespace holo::brane
