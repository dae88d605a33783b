#include "holo/ym/instances.hpp"

namespace holo::ym {

using brane::random_adapted;
using exact::ExteriorForm;
using exact::form_zero;

namespace {

FormMatrix family_at(const FormFamily& fam, Ring ring, int i, int rank)
{
    auto it = fam.find(i);
    return it == fam.end() ? form_zero(ring, 1, rank, rank) : it->second;
}

} // namespace

SheafInstance nilpotent_instance(int trunc)
{
    const Ring ring{2, trunc};
    SheafInstance inst{Connection::trivial(dg::FreeModule{2, ring}), {}};
    const TruncPoly one = TruncPoly::constant(ring, 1);
    HomElement e1 = form_zero(ring, 1, 2, 2), e2 = form_zero(ring, 1, 2, 2);
    e1(0, 1) = ExteriorForm::dx(ring, 0, &one);
    e2(1, 0) = ExteriorForm::dx(ring, 1, &one);
    inst.directions = {e1, e2};
    return inst;
}

SheafInstance random_sheaf_instance(RandomSource& rs, Ring ring, int rank, int m, int conn_degree, int dir_degree)
{
    const dg::FreeModule mod{rank, ring};
    SheafInstance inst{Connection(mod, rs.one_form_matrix(ring, rank, rank, conn_degree, 0.6, true)), {}};
    for (int i = 0; i < m; ++i) {
        HomElement e = rs.one_form_matrix(ring, rank, rank, dir_degree, 0.6, true);
        if (e.is_zero()) {
            const TruncPoly c = TruncPoly::constant(ring, rs.nonzero_scalar(true));
            e(rs.uniform_int(0, rank - 1), rs.uniform_int(0, rank - 1)) =
                ExteriorForm::dx(ring, rs.uniform_int(0, ring.n_vars - 1), &c);
        }
        inst.directions.push_back(std::move(e));
    }
    return inst;
}

SheafInstance random_rank_one_closed(RandomSource& rs, Ring ring, int m, int conn_degree, int dir_degree)
{
    const dg::FreeModule mod{1, ring};
    SheafInstance inst{Connection(mod, rs.one_form_matrix(ring, 1, 1, conn_degree, 1.0, true)), {}};
    for (int i = 0; i < m; ++i) {
        ExteriorForm w = ExteriorForm::function(rs.poly(ring, dir_degree + 1, 3, true)).d();
        const TruncPoly c = TruncPoly::constant(ring, rs.nonzero_scalar(true));
        w += ExteriorForm::dx(ring, rs.uniform_int(0, ring.n_vars - 1), &c);
        HomElement e = form_zero(ring, 1, 1, 1);
        e(0, 0) = w;
        inst.directions.push_back(std::move(e));
    }
    return inst;
}

FormFamily family_sum(const BraneComplex& a, const FormFamily& fa, const BraneComplex& b, const FormFamily& fb)
{
    const Ring ring = a.ring();
    FormFamily out;
    std::map<int, int> idx = a.ranks();
    for (const auto& [i, r] : b.ranks())
        idx[i] += r;
    for (const auto& [i, r] : idx)
        out.emplace(i, exact::block_diag(family_at(fa, ring, i, a.rank(i)), family_at(fb, ring, i, b.rank(i))));
    return out;
}

ConeInstance random_cone_instance(RandomSource& rs, Ring ring, int conn_degree)
{
    const auto a = random_adapted(rs, ring, rs.uniform_int(1, 3), 2, conn_degree);
    const auto c = random_adapted(rs, ring, rs.uniform_int(1, 3), 2, conn_degree);
    const Scalar s = rs.nonzero_scalar(true);
    ConeInstance out;
    switch (rs.uniform_int(0, 3)) {
    case 0:
        out = ConeInstance{a.complex, a.connections, c.complex, c.connections, ChainMap{}};
        break;
    case 1: {
        out = ConeInstance{a.complex, a.connections, brane::direct_sum(a.complex, c.complex),
                           family_sum(a.complex, a.connections, c.complex, c.connections), ChainMap{}};
        for (int i : a.complex.indices()) {
            PolyMatrix inc = exact::poly_zero(ring, out.b.rank(i), a.complex.rank(i));
            inc.set_block(0, 0, s * exact::poly_identity(ring, a.complex.rank(i)));
            out.f.components.emplace(i, inc);
        }
        break;
    }
    case 2: {
        out = ConeInstance{brane::direct_sum(a.complex, c.complex),
                           family_sum(a.complex, a.connections, c.complex, c.connections), a.complex, a.connections,
                           ChainMap{}};
        for (int i : a.complex.indices()) {
            PolyMatrix proj = exact::poly_zero(ring, a.complex.rank(i), out.a.rank(i));
            proj.set_block(0, 0, s * exact::poly_identity(ring, a.complex.rank(i)));
            out.f.components.emplace(i, proj);
        }
        break;
    }
    default:
        out = ConeInstance{a.complex, a.connections, a.complex, a.connections, ChainMap{}};
        for (int i : a.complex.indices())
            out.f.components.emplace(i, s * exact::poly_identity(ring, a.complex.rank(i)));
    }
    return out;
}

SplitData random_split_data(RandomSource& rs, Ring ring, int conn_degree)
{
    SplitData data;
    data.ring = ring;
    const int blocks = rs.uniform_int(1, 3);
    for (int i = 0; i < blocks; ++i) {
        SplitBlock blk;
        blk.index = i;
        const int r = rs.uniform_int(1, 2);
        blk.a0 = rs.one_form_matrix(ring, r, r, conn_degree, 0.7, true);
        const int dirs = rs.uniform_int(1, 2);
        for (int k = 0; k < dirs; ++k) {
            const TruncPoly p = rs.coin() ? TruncPoly::constant(ring, 1)
                                          : TruncPoly::variable(ring, rs.uniform_int(0, ring.n_vars - 1));
            ScalarMatrix tau = rs.scalar_matrix(r, r, true);
            if (tau.is_zero())
                tau = exact::scalar_identity(r);
            FormMatrix e = form_zero(ring, 1, r, r);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b)
                    if (!tau(a, b).is_zero()) {
                        const TruncPoly coeff = tau(a, b) * p;
                        e(a, b) = ExteriorForm::dx(ring, 0, &coeff);
                    }
            blk.directions.push_back(std::move(e));
        }
        data.h.push_back(std::move(blk));
    }
    if (rs.coin()) {
        const int g0 = rs.uniform_int(-1, 2), rg = rs.uniform_int(1, 2);
        data.g_ranks = {{g0, rg}, {g0 + 1, rg}};
        data.g_delta = {{g0, exact::to_poly(ring, rs.invertible(rg, 3))}};
    }
    return data;
}

StationarityInstance random_stationarity_instance(RandomSource& rs, Ring ring, bool flat)
{
    const auto inst = random_adapted(rs, ring, rs.uniform_int(1, 3), 2, 1);
    FormFamily family = inst.connections;
    if (flat)
        for (auto& [i, a] : family)
            a = form_zero(ring, 1, a.rows(), a.cols());
    StationarityInstance out{GaugeField::from_connections(inst.complex, family), {},
                             brane::cohomology(inst.complex, brane::default_eval_points(ring))};
    const auto sol = brane::gauge_solve(inst.complex, brane::GaugeOptions{1});
    for (int k = 0; k < 3 && !sol.affine_basis.empty(); ++k) {
        const auto& dir = sol.affine_basis[rs.uniform_int(0, static_cast<int>(sol.affine_basis.size()) - 1)];
        const Scalar c = rs.nonzero_scalar(true);
        for (const auto& [i, m] : dir) {
            auto it = out.xi.find(i);
            if (it == out.xi.end())
                out.xi.emplace(i, c * m);
            else
                it->second += c * m;
        }
    }
    return out;
}

} // namespace holo::ym
