#include "holo/brane/instances.hpp"

#include <algorithm>

#include "holo/exact/linear.hpp"

namespace holo::brane {

using exact::poly_identity;
using exact::poly_zero;

Frame random_frame(exact::RandomSource& rs, Ring ring, int rank, bool polynomial)
{
    const exact::ScalarMatrix c = rs.invertible(rank, 4);
    const auto c_inv = exact::inverse(c);
    Frame f{exact::to_poly(ring, c), exact::to_poly(ring, *c_inv)};
    if (!polynomial || rank < 2 || ring.trunc < 2)
        return f;
    // one elementary operation I + p E_ab with deg p = 1
    const int a = rs.uniform_int(0, rank - 1);
    int b = rs.uniform_int(0, rank - 2);
    if (b >= a)
        ++b;
    TruncPoly p = TruncPoly::variable(ring, rs.uniform_int(0, ring.n_vars - 1)) *
                  Scalar(rs.uniform_int(1, 2) * (rs.coin() ? 1 : -1));
    PolyMatrix e = poly_identity(ring, rank), e_inv = poly_identity(ring, rank);
    e(a, b) = p;
    e_inv(a, b) = -p;
    return Frame{e * f.g, f.g_inv * e_inv};
}

ScalarMatrix random_unitary(exact::RandomSource& rs, int n)
{
    static const int triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}};
    ScalarMatrix u = exact::scalar_zero(n, n);
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k)
        perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rs.engine());
    static const Scalar phases[] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
    for (int k = 0; k < n; ++k)
        u(k, perm[k]) = phases[rs.uniform_int(0, 3)];
    for (int step = 0; step < n; ++step) {
        if (n < 2)
            break;
        const int a = rs.uniform_int(0, n - 1);
        int b = rs.uniform_int(0, n - 2);
        if (b >= a)
            ++b;
        const auto& t = triples[rs.uniform_int(0, 3)];
        const Scalar c(exact::Rational(t[0], t[2])), s(exact::Rational(t[1], t[2]));
        ScalarMatrix g = exact::scalar_identity(n);
        g(a, a) = c;
        g(b, b) = c;
        g(a, b) = -s;
        g(b, a) = s;
        u = g * u;
    }
    return u;
}

StandardForm random_standard_form(exact::RandomSource& rs, int terms, int max_rank)
{
    StandardForm sf;
    int incoming = 0;
    for (int i = 0; i < terms; ++i) {
        const int r = rs.uniform_int(std::max(1, incoming), std::max(max_rank, incoming));
        sf.ranks[i] = r;
        const int room = r - incoming;
        const int out = (i + 1 < terms) ? rs.uniform_int(0, room) : 0;
        sf.out_rank[i] = out;
        incoming = out;
    }
    return sf;
}

PolyMatrix standard_delta(Ring ring, const StandardForm& sf, int i)
{
    auto rank = [&](int k) {
        auto it = sf.ranks.find(k);
        return it == sf.ranks.end() ? 0 : it->second;
    };
    auto out = [&](int k) {
        auto it = sf.out_rank.find(k);
        return it == sf.out_rank.end() ? 0 : it->second;
    };
    PolyMatrix n = poly_zero(ring, rank(i + 1), rank(i));
    const int in_prev = out(i - 1);
    for (int k = 0; k < out(i); ++k)
        n(k, in_prev + k) = TruncPoly::constant(ring, 1);
    return n;
}

namespace {

BraneComplex koszul(exact::RandomSource& rs, Ring ring)
{
    const Scalar c = rs.nonzero_scalar();
    if (ring.n_vars >= 2 && rs.coin()) {
        PolyMatrix d0 = poly_zero(ring, 2, 1), d1 = poly_zero(ring, 1, 2);
        d0(0, 0) = -(c * TruncPoly::variable(ring, 1));
        d0(1, 0) = c * TruncPoly::variable(ring, 0);
        d1(0, 0) = TruncPoly::variable(ring, 0);
        d1(0, 1) = TruncPoly::variable(ring, 1);
        return BraneComplex(ring, {{0, 1}, {1, 2}, {2, 1}}, {{0, d0}, {1, d1}});
    }
    PolyMatrix d = poly_zero(ring, 1, 1);
    d(0, 0) = c * TruncPoly::variable(ring, rs.uniform_int(0, ring.n_vars - 1));
    return BraneComplex(ring, {{0, 1}, {1, 1}}, {{0, d}});
}

} // namespace

BraneComplex random_complex(exact::RandomSource& rs, const RandomComplexOptions& opts)
{
    const Ring ring{opts.n_vars, opts.trunc};
    if (opts.koszul && ring.trunc >= 1 && rs.coin(0.2))
        return koszul(rs, ring);
    const int terms = rs.uniform_int(1, opts.max_terms);
    StandardForm sf = random_standard_form(rs, terms, opts.max_rank);
    const bool poly = opts.polynomial_frames && ring.trunc >= 2;
    std::map<int, Frame> frames;
    for (const auto& [i, r] : sf.ranks)
        frames.emplace(i, random_frame(rs, ring, r, poly && rs.coin()));
    std::map<int, PolyMatrix> deltas;
    for (int i = 0; i + 1 < terms; ++i)
        deltas.emplace(i, frames.at(i + 1).g * standard_delta(ring, sf, i) * frames.at(i).g_inv);
    return BraneComplex(ring, sf.ranks, deltas);
}

AdaptedInstance random_adapted(exact::RandomSource& rs, Ring ring, int terms, int max_rank, int conn_degree)
{
    AdaptedInstance out;
    out.form = random_standard_form(rs, terms, max_rank);
    const StandardForm& sf = out.form;
    std::map<int, Frame> frames;
    for (const auto& [i, r] : sf.ranks) {
        const ScalarMatrix u = random_unitary(rs, r);
        frames.emplace(i, Frame{exact::to_poly(ring, u), exact::to_poly(ring, exact::adjoint(u))});
    }
    std::map<int, PolyMatrix> deltas;
    for (int i = 0; i + 1 < terms; ++i)
        deltas.emplace(i, frames.at(i + 1).g * standard_delta(ring, sf, i) * frames.at(i).g_inv);
    out.complex = BraneComplex(ring, sf.ranks, deltas);

    FormMatrix carried = exact::form_zero(ring, 1, 0, 0);
    for (int i = 0; i < terms; ++i) {
        const int r = sf.ranks.at(i);
        const int in = static_cast<int>(carried.rows());
        const int outgoing = sf.out_rank.at(i);
        const int rest = r - in - outgoing;
        FormMatrix m = exact::form_zero(ring, 1, r, r);
        m.set_block(0, 0, carried);
        if (outgoing > 0) {
            carried = rs.one_form_matrix(ring, outgoing, outgoing, conn_degree, 0.5, true);
            m.set_block(in, in, carried);
        } else {
            carried = exact::form_zero(ring, 1, 0, 0);
        }
        if (rest > 0)
            m.set_block(in + outgoing, in + outgoing, rs.one_form_matrix(ring, rest, rest, conn_degree, 0.5, true));
        out.connections.emplace(i, frames.at(i).g * m * frames.at(i).g_inv);
    }
    return out;
}

} // namespace holo::brane
