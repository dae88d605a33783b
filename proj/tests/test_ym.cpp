#include <doctest.h>

#include "holo/exact/linear.hpp"
#include "holo/ym/instances.hpp"
#include "oracles.hpp"

using namespace holo;
using namespace holo::exact;
using namespace holo::ym;

namespace {

constexpr PairingMode kModes[] = {PairingMode::bilinear, PairingMode::hermitian};

std::vector<Scalar> random_lambda(RandomSource& rs, int m, bool complex)
{
    std::vector<Scalar> l;
    for (int i = 0; i < m; ++i)
        l.push_back(rs.scalar(complex));
    return l;
}

FormMatrix one(const ExteriorForm& w)
{
    FormMatrix a = form_zero(w.ring(), w.degree(), 1, 1);
    a(0, 0) = w;
    return a;
}

} // namespace

TEST_CASE("curvature expansion examples")
{
    RandomSource rs(1);
    const Ring r{2, 3};
    const Connection base(dg::FreeModule{2, r}, rs.one_form_matrix(r, 2, 2, 1, 0.7, true));
    const auto empty = curvature_expansion(base, {});
    CHECK(empty.k0 == base.curvature());
    CHECK(empty.at({}) == base.curvature());

    const TruncPoly c = TruncPoly::constant(r, 3);
    HomElement e = form_zero(r, 1, 2, 2);
    e(0, 1) = ExteriorForm::dx(r, 0, &c);
    e(1, 1) = ExteriorForm::dx(r, 0, &c);
    const auto flat = curvature_expansion(Connection::trivial(dg::FreeModule{2, r}), {e});
    CHECK(flat.b[0].is_zero());
    CHECK(flat.bb[0][0].is_zero());

    const SheafInstance nil = nilpotent_instance(2);
    const auto ce = curvature_expansion(nil.base, nil.directions);
    HomElement expect = form_zero(nil.base.ring(), 2, 2, 2);
    expect(0, 0) = ExteriorForm::basis(nil.base.ring(), 0b11, TruncPoly::constant(nil.base.ring(), 1));
    expect(1, 1) = ExteriorForm::basis(nil.base.ring(), 0b11, TruncPoly::constant(nil.base.ring(), -1));
    CHECK(ce.bb[0][1] + ce.bb[1][0] == expect);
}

TEST_CASE("curvature expansion reproduces the curvature")
{
    RandomSource rs(2);
    for (int t = 0; t < 8; ++t) {
        const int m = 1 + t % 3;
        const SheafInstance inst = random_sheaf_instance(rs, Ring{2, 4}, 1 + t % 2, m, 1, 1);
        const auto ce = curvature_expansion(inst.base, inst.directions);
        for (int k = 0; k < 20; ++k) {
            const auto l = random_lambda(rs, m, true);
            CHECK(connection_at(inst.base, inst.directions, l).curvature() == ce.at(l));
        }
    }
}

TEST_CASE("build_P examples")
{
    const SheafInstance nil = nilpotent_instance(2);
    const auto ce = curvature_expansion(nil.base, nil.directions);
    const YMPolynomial pb = build_P(ce, PairingMode::bilinear);
    REQUIRE(pb.p.terms().size() == 1);
    CHECK(pb.p.coeff({2, 2}) == Scalar(2));
    const YMPolynomial ph = build_P(ce, PairingMode::hermitian);
    REQUIRE(ph.p.terms().size() == 1);
    CHECK(ph.p.coeff({1, 1, 1, 1}) == Scalar(2));

    CurvatureExpansion zero = ce;
    zero.k0 = form_zero(ce.k0.zero().ring(), 2, 2, 2);
    for (auto& b : zero.b)
        b = zero.k0;
    for (auto& row : zero.bb)
        for (auto& b : row)
            b = zero.k0;
    CHECK(build_P(zero, PairingMode::bilinear).p.is_zero());

    // rank one, flat base, constant directions
    const Ring r{2, 2};
    const TruncPoly c1 = TruncPoly::constant(r, 2), c2 = TruncPoly::constant(r, Scalar(1, 1));
    const auto rk1 = curvature_expansion(Connection::trivial(dg::FreeModule{1, r}),
                                         {one(ExteriorForm::dx(r, 0, &c1)), one(ExteriorForm::dx(r, 1, &c2))});
    for (PairingMode mode : kModes)
        CHECK(build_P(rk1, mode).is_constant());
}

TEST_CASE("P agrees with ym_sheaf and the brute-force oracle")
{
    RandomSource rs(3);
    for (int t = 0; t < 10; ++t) {
        const int m = 1 + t % 3;
        const SheafInstance inst = random_sheaf_instance(rs, Ring{2, 4}, 1 + t % 3, m, 1, 1);
        const auto ce = curvature_expansion(inst.base, inst.directions);
        for (PairingMode mode : kModes) {
            const YMPolynomial p = build_P(ce, mode);
            CHECK(p.p.degree() <= 4);
            CHECK(gradient_system(p).max_degree() <= 3);
            CHECK(p.p == oracle::brute_force_P(inst.base.matrix(), inst.directions, mode));
            for (int k = 0; k < 5; ++k) {
                const auto l = random_lambda(rs, m, true);
                const Scalar v = p.evaluate(l);
                CHECK(v == ym_sheaf(connection_at(inst.base, inst.directions, l), mode));
                if (mode == PairingMode::hermitian) {
                    CHECK(v.im() == 0);
                    CHECK(v.re() >= 0);
                }
            }
        }
    }
}

TEST_CASE("gradient system examples")
{
    const Ring r{2, 4};
    YMPolynomial p = YMPolynomial::zero(2, PairingMode::bilinear);
    CHECK(gradient_system(p).is_zero());
    p.p = TruncPoly::parse("x1^2*x2^2", r);
    const GradientSystem g = gradient_system(p);
    REQUIRE(g.equations.size() == 2);
    CHECK(g.equations[0] == TruncPoly::parse("2*x1*x2^2", r));
    CHECK(g.equations[1] == TruncPoly::parse("2*x1^2*x2", r));

    // hermitian: |l|^2 = u^2 + v^2
    YMPolynomial h = YMPolynomial::zero(1, PairingMode::hermitian);
    h.p = TruncPoly::parse("x1*x2", Ring{2, 4});
    const GradientSystem gh = gradient_system(h);
    REQUIRE(gh.unknowns == 2);
    CHECK(gh.equations[0] == TruncPoly::parse("2*x1", Ring{2, 4}));
    CHECK(gh.equations[1] == TruncPoly::parse("2*x2", Ring{2, 4}));
}

TEST_CASE("solve_critical examples")
{
    const Ring r{2, 4};
    YMPolynomial sq = YMPolynomial::zero(2, PairingMode::bilinear);
    sq.p = TruncPoly::parse("1/2*x1^2 + 1/2*x2^2", r);
    const CriticalSet one_point = solve_critical(gradient_system(sq), {});
    REQUIRE(one_point.isolated.size() == 1);
    CHECK(one_point.isolated[0].residual == 0);
    CHECK(std::abs(one_point.isolated[0].lambda[0]) < 1e-15L);
    CHECK_FALSE(one_point.nonisolated);

    const SheafInstance nil = nilpotent_instance(2);
    const YMPolynomial p = build_P(curvature_expansion(nil.base, nil.directions), PairingMode::bilinear);
    const CriticalSet cs = solve_critical(gradient_system(p), {});
    CHECK(cs.nonisolated);
    CHECK(cs.witness.size() == 2);

    YMPolynomial zero = YMPolynomial::zero(2, PairingMode::bilinear);
    CHECK(solve_critical(gradient_system(zero), {}).nonisolated);
}

TEST_CASE("solve_critical respects the Bezout bound and is deterministic")
{
    RandomSource rs(4);
    for (int t = 0; t < 3; ++t) {
        const SheafInstance inst = random_sheaf_instance(rs, Ring{2, 4}, 2, 2, 1, 1);
        const auto g = gradient_system(build_P(curvature_expansion(inst.base, inst.directions), PairingMode::bilinear));
        SolverConfig cfg;
        cfg.seed = 7 + t;
        const CriticalSet a = solve_critical(g, cfg);
        cfg.threads = 3;
        const CriticalSet b = solve_critical(g, cfg);
        CHECK(a.bezout_bound == 9);
        CHECK(a.isolated.size() <= 9);
        for (const auto& pt : a.isolated)
            CHECK(pt.residual <= 1e-12L);
        REQUIRE(a.isolated.size() == b.isolated.size());
        for (std::size_t k = 0; k < a.isolated.size(); ++k)
            CHECK(a.isolated[k].x == b.isolated[k].x);
    }
}

TEST_CASE("ym_sheaf and ym_brane examples")
{
    const Ring r{2, 2};
    for (PairingMode mode : kModes)
        CHECK(ym_sheaf(Connection::trivial(dg::FreeModule{2, r}), mode).is_zero());
    const TruncPoly x1 = TruncPoly::variable(r, 0);
    const Connection c(dg::FreeModule{1, r}, one(ExteriorForm::dx(r, 1, &x1)));
    CHECK(ym_sheaf(c, PairingMode::hermitian) == Scalar(1));

    RandomSource rs(5);
    const Ring r3{2, 3};
    const brane::BraneComplex acyclic(r3, {{0, 2}, {1, 2}}, {{0, poly_identity(r3, 2)}});
    const FormMatrix a = rs.one_form_matrix(r3, 2, 2, 1, 0.7, true);
    const auto h_ac = brane::cohomology(acyclic, brane::default_eval_points(r3));
    for (PairingMode mode : kModes)
        CHECK(ym_brane(GaugeField::from_connections(acyclic, {{0, a}, {1, a}}), h_ac, mode).is_zero());

    const auto single = brane::BraneComplex::single(r3, 2);
    const auto h1 = brane::cohomology(single, brane::default_eval_points(r3));
    for (PairingMode mode : kModes)
        CHECK(ym_brane(GaugeField::from_connections(single, {{0, a}}), h1, mode) ==
              ym_sheaf(Connection(dg::FreeModule{2, r3}, a), mode));

    const brane::BraneComplex two(r3, {{0, 1}, {1, 2}}, {});
    const FormMatrix a0 = rs.one_form_matrix(r3, 1, 1, 1, 1.0, true);
    const FormMatrix a1 = rs.one_form_matrix(r3, 2, 2, 1, 0.7, true);
    const auto h2 = brane::cohomology(two, brane::default_eval_points(r3));
    for (PairingMode mode : kModes)
        CHECK(ym_brane(GaugeField::from_connections(two, {{0, a0}, {1, a1}}), h2, mode) ==
              ym_sheaf(Connection(dg::FreeModule{1, r3}, a0), mode) -
                  ym_sheaf(Connection(dg::FreeModule{2, r3}, a1), mode));
}

TEST_CASE("stationarity check")
{
    RandomSource rs(6);
    const Ring r{2, 3};
    int nontrivial = 0;
    for (int t = 0; t < 8; ++t) {
        const auto inst = random_stationarity_instance(rs, r, false);
        for (PairingMode mode : kModes) {
            const auto rep = stationarity_check(inst.psi, inst.xi, inst.h, mode);
            CHECK(rep.agree);
            if (!rep.pairing.is_zero())
                ++nontrivial;
            const auto none = stationarity_check(inst.psi, {}, inst.h, mode);
            CHECK(none.pairing.is_zero());
            CHECK(none.fd == std::complex<long double>(0));
        }
    }
    CHECK(nontrivial > 0);
    for (int t = 0; t < 4; ++t) {
        const auto inst = random_stationarity_instance(rs, r, true);
        for (PairingMode mode : kModes) {
            const auto rep = stationarity_check(inst.psi, inst.xi, inst.h, mode);
            CHECK(rep.pairing.is_zero());
            CHECK(rep.agree);
        }
    }
}

TEST_CASE("orthogonality check")
{
    const Ring r{2, 3};
    for (PairingMode mode : kModes)
        CHECK(orthogonality_check(Connection::trivial(dg::FreeModule{2, r}), mode).orthogonal());

    // constant curvature dx1^dx2 pairs nontrivially with d(x1 dx2) in the
    // polynomial model, so the full span fails
    const TruncPoly x1 = TruncPoly::variable(r, 0);
    const Connection c(dg::FreeModule{1, r}, one(ExteriorForm::dx(r, 1, &x1)));
    const auto full = orthogonality_check(c, PairingMode::hermitian);
    CHECK_FALSE(full.orthogonal());
    // closed directions see nothing
    RandomSource rs(7);
    const auto closed = random_rank_one_closed(rs, r, 3, 1, 1);
    for (PairingMode mode : kModes)
        CHECK(orthogonality_check(c, mode, &closed.directions).orthogonal());

    // non-stationary: grad P != 0 at lambda = 0
    const auto inst = random_sheaf_instance(rs, r, 2, 2, 1, 1);
    const auto g = gradient_system(build_P(curvature_expansion(inst.base, inst.directions), PairingMode::bilinear));
    bool moving = false;
    for (const auto& eq : g.equations)
        moving = moving || !eq.constant_term().is_zero();
    if (moving)
        CHECK_FALSE(orthogonality_check(inst.base, PairingMode::bilinear, &inst.directions).orthogonal());
}

TEST_CASE("Euler-Poincare identity")
{
    RandomSource rs(8);
    const Ring r{2, 3};
    for (int t = 0; t < 10; ++t) {
        const auto inst = brane::random_adapted(rs, r, 1 + t % 3, 3, 1);
        for (PairingMode mode : kModes) {
            const auto rep = euler_poincare_check(inst.complex, inst.connections, mode, brane::default_eval_points(r));
            CHECK(rep.equal());
        }
        FormFamily zero;
        for (int i : inst.complex.indices())
            zero.emplace(i, form_zero(r, 1, inst.complex.rank(i), inst.complex.rank(i)));
        const auto flat = euler_poincare_check(inst.complex, zero, PairingMode::hermitian, brane::default_eval_points(r));
        CHECK(flat.terms.is_zero());
        CHECK(flat.cohomology.is_zero());
    }
    const brane::BraneComplex two(r, {{0, 1}, {1, 1}}, {{0, poly_identity(r, 1)}});
    const FormFamily bad{{0, rs.one_form_matrix(r, 1, 1, 1, 1.0, false)}};
    CHECK_THROWS_AS(euler_poincare_check(two, bad, PairingMode::bilinear, brane::default_eval_points(r)),
                    NotCompatible);
}

TEST_CASE("cone additivity")
{
    RandomSource rs(9);
    const Ring r{2, 3};
    for (int t = 0; t < 10; ++t) {
        const auto inst = random_cone_instance(rs, r, 1);
        for (PairingMode mode : kModes) {
            const auto rep = cone_ym(inst.a, inst.alpha, inst.b, inst.beta, inst.f, mode, brane::default_eval_points(r));
            CHECK(rep.additive());
            CHECK(rep.additive_terms());
        }
    }
}

TEST_CASE("semisimple converse harness")
{
    RandomSource rs(10);
    const Ring r{2, 3};
    int checked = 0;
    for (int t = 0; t < 8; ++t) {
        const SplitData data = random_split_data(rs, r, 1);
        for (PairingMode mode : kModes) {
            const auto rep = semisimple_converse_harness(data, mode);
            if (!rep.found_critical)
                continue;
            ++checked;
            CHECK(rep.stationary);
            CHECK(rep.ok());
        }
    }
    CHECK(checked >= 8);

    SplitData flat;
    flat.ring = r;
    SplitBlock blk;
    blk.a0 = form_zero(r, 1, 2, 2);
    const TruncPoly c = TruncPoly::constant(r, 1);
    FormMatrix e = form_zero(r, 1, 2, 2);
    e(0, 1) = ExteriorForm::dx(r, 0, &c);
    blk.directions = {e};
    flat.h = {blk};
    for (PairingMode mode : kModes) {
        const auto rep = semisimple_converse_harness(flat, mode);
        CHECK(rep.p.p.is_zero());
        CHECK(rep.ok());
    }
}
