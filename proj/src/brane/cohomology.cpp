#include "holo/brane/cohomology.hpp"

#include "holo/exact/linear.hpp"

namespace holo::brane {

using exact::adjoint;
using exact::scalar_zero;

FormMatrix CohomologySpace::restrict(const FormMatrix& x) const { return proj * x * reps; }

int CohomologyResult::rank(int j) const
{
    auto it = spaces.find(j);
    return it == spaces.end() ? 0 : it->second.rank;
}

const CohomologySpace& CohomologyResult::at(int j) const
{
    auto it = spaces.find(j);
    if (it == spaces.end())
        throw DimensionMismatch("no cohomology space at index " + std::to_string(j));
    return it->second;
}

std::vector<Point> default_eval_points(Ring ring)
{
    const int n = ring.n_vars;
    std::vector<Point> pts(4, Point(n));
    for (int k = 0; k < n; ++k) {
        pts[1][k] = Scalar(1);
        pts[2][k] = Scalar(k % 2 ? -1 : 2);
        pts[3][k] = Scalar(exact::Rational(k % 2 ? 1 : -1, k + 2));
    }
    return pts;
}

namespace {

std::string point_string(const Point& p)
{
    std::string out = "(";
    for (std::size_t k = 0; k < p.size(); ++k)
        out += (k ? "," : "") + p[k].to_string();
    return out + ")";
}

} // namespace

CohomologyResult cohomology(const BraneComplex& f, const std::vector<Point>& points)
{
    if (points.empty())
        throw DimensionMismatch("cohomology needs at least one evaluation point");
    CohomologyResult out;
    const int lo = f.min_index() - 1, hi = f.max_index();
    std::map<int, ScalarMatrix> base;
    for (int i = lo; i <= hi; ++i) {
        const PolyMatrix d = f.delta(i);
        int first_rank = -1;
        for (std::size_t p = 0; p < points.size(); ++p) {
            ScalarMatrix m = exact::evaluate(d, points[p]);
            const int r = static_cast<int>(exact::rank(m));
            if (p == 0) {
                first_rank = r;
                base.emplace(i, std::move(m));
            } else if (r != first_rank) {
                throw RankJump("rank of delta^" + std::to_string(i) + " is " + std::to_string(first_rank) + " at " +
                               point_string(points[0]) + " but " + std::to_string(r) + " at " +
                               point_string(points[p]));
            }
        }
        out.delta_ranks.emplace(i, first_rank);
    }
    for (int j : f.indices()) {
        const std::size_t r = f.rank(j);
        const ScalarMatrix& dj = base.at(j);
        const ScalarMatrix dprev_adj = adjoint(base.at(j - 1));
        ScalarMatrix stacked = scalar_zero(dj.rows() + dprev_adj.rows(), r);
        stacked.set_block(0, 0, dj);
        stacked.set_block(dj.rows(), 0, dprev_adj);
        CohomologySpace sp;
        sp.degree = j;
        sp.reps = exact::kernel_basis(stacked);
        sp.rank = static_cast<int>(sp.reps.cols());
        if (sp.rank > 0) {
            const PolyMatrix rp = exact::to_poly(f.ring(), sp.reps);
            const PolyMatrix rp_adj = exact::to_poly(f.ring(), adjoint(sp.reps));
            if (!(f.delta(j) * rp).is_zero() || !(rp_adj * f.delta(j - 1)).is_zero())
                throw NonGlobalFrame("H^" + std::to_string(j) +
                                     ": representatives at the base point are not global cocycles orthogonal to the "
                                     "image of delta^" +
                                     std::to_string(j - 1));
            const ScalarMatrix ra = adjoint(sp.reps);
            sp.gram = ra * sp.reps;
            sp.proj = *exact::inverse(sp.gram) * ra;
        } else {
            sp.proj = scalar_zero(0, r);
            sp.gram = scalar_zero(0, 0);
        }
        out.spaces.emplace(j, std::move(sp));
    }
    return out;
}

std::map<int, dg::Connection> induced_connections(const GaugeField& g, const CohomologyResult& h)
{
    std::map<int, dg::Connection> out;
    for (const auto& [j, sp] : h.spaces) {
        if (sp.rank == 0)
            continue;
        const FreeModule m{sp.rank, g.complex.ring()};
        out.emplace(j, dg::Connection(m, sp.restrict(g.b_at(j))));
    }
    return out;
}

std::map<int, dg::Connection> compatible_family_connections(const BraneComplex& f, const FormFamily& a,
                                                            const CohomologyResult& h)
{
    return induced_connections(GaugeField::from_connections(f, a), h);
}

HomElement variation_difference(const GaugeField& psi, const GaugeField& phi, const CohomologySpace& space)
{
    return space.restrict(phi.b_at(space.degree) - psi.b_at(space.degree));
}

} // namespace holo::brane
