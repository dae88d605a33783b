#include <doctest.h>

#include "holo/brane/cohomology.hpp"
#include "holo/brane/hom.hpp"
#include "holo/brane/instances.hpp"
#include "holo/exact/linear.hpp"

using namespace holo;
using namespace holo::exact;
using namespace holo::brane;

namespace {

PolyMatrix poly1(Ring ring, const char* s)
{
    PolyMatrix m = poly_zero(ring, 1, 1);
    m(0, 0) = TruncPoly::parse(s, ring);
    return m;
}

BraneComplex identity_complex(Ring ring, int r)
{
    return BraneComplex(ring, {{0, r}, {1, r}}, {{0, poly_identity(ring, r)}});
}

bool same_complex(const BraneComplex& a, const BraneComplex& b)
{
    if (a.ranks() != b.ranks())
        return false;
    for (int i : a.indices())
        if (a.delta(i) != b.delta(i))
            return false;
    return true;
}

/// Sparse coordinates of a family in Hom^0(F, Omega^1 F).
SparseRow family_coords(const HomComplex& h, const FormFamily& fam)
{
    return h.coordinates(0, HomCochain(fam.begin(), fam.end()));
}

bool in_span(std::size_t n, const std::vector<SparseRow>& gens, const SparseRow& v)
{
    std::vector<SparseRow> with = gens;
    with.push_back(v);
    return sparse_rank(n, with) == sparse_rank(n, gens);
}

} // namespace

TEST_CASE("complex construction rejects nonzero squares")
{
    const Ring r{1, 2};
    CHECK_THROWS_AS(BraneComplex(r, {{0, 1}, {1, 1}, {2, 1}}, {{0, poly1(r, "1")}, {1, poly1(r, "1")}}), NotAComplex);
    CHECK_THROWS_AS(BraneComplex(r, {{0, 1}, {1, 2}}, {{0, poly1(r, "1")}}), DimensionMismatch);
    auto defect = BraneComplex::square_defect({{0, poly1(r, "x1")}, {1, poly1(r, "2")}});
    REQUIRE(defect.has_value());
    CHECK(defect->value == TruncPoly::parse("2*x1", r));
}

TEST_CASE("shift examples")
{
    RandomSource rs(11);
    for (int t = 0; t < 10; ++t) {
        BraneComplex a = random_complex(rs, {});
        CHECK(same_complex(shift(a, 0), a));
        CHECK(same_complex(shift(shift(a, 1), 1), shift(a, 2)));
        CHECK(same_complex(shift(shift(a, 1), -1), a));
        const BraneComplex s = shift(a, 1);
        for (int i : s.indices())
            CHECK(s.delta(i) == -(a.delta(i + 1)));
    }
}

TEST_CASE("cone examples")
{
    const Ring r{2, 3};
    const BraneComplex f = BraneComplex::single(r, 2);
    const BraneComplex c = cone(f, f, ChainMap{{{0, poly_identity(r, 2)}}});
    CHECK(c.rank(-1) == 2);
    CHECK(c.rank(0) == 2);
    const auto h = cohomology(c, default_eval_points(r));
    CHECK(h.rank(-1) == 0);
    CHECK(h.rank(0) == 0);

    RandomSource rs(5);
    const BraneComplex a = random_complex(rs, {2, 4, 3, 2, true, false});
    const BraneComplex b = random_complex(rs, {2, 4, 3, 2, true, false});
    const BraneComplex z = cone(a, b, ChainMap{});
    const BraneComplex a1 = shift(a, 1);
    for (int i = z.min_index(); i <= z.max_index(); ++i) {
        const PolyMatrix d = z.delta(i);
        CHECK(d.block(0, 0, a1.rank(i + 1), a1.rank(i)) == a1.delta(i));
        CHECK(d.block(a1.rank(i + 1), a1.rank(i), b.rank(i + 1), b.rank(i)) == b.delta(i));
        CHECK(d.block(a1.rank(i + 1), 0, b.rank(i + 1), a1.rank(i)).is_zero());
    }
}

TEST_CASE("cone of random chain maps squares to zero")
{
    RandomSource rs(21);
    for (int t = 0; t < 12; ++t) {
        const BraneComplex a = random_complex(rs, {2, 4, 3, 2, true, true});
        // f = c I + delta H + H delta is a chain map for any H
        ChainMap f;
        const Scalar c = rs.scalar();
        std::map<int, PolyMatrix> hh;
        for (int i : a.indices())
            if (a.rank(i - 1) > 0)
                hh.emplace(i, rs.poly_matrix(a.ring(), a.rank(i - 1), a.rank(i), 1));
        auto h_at = [&](int i) {
            auto it = hh.find(i);
            return it == hh.end() ? poly_zero(a.ring(), a.rank(i - 1), a.rank(i)) : it->second;
        };
        for (int i : a.indices())
            f.components.emplace(i, c * poly_identity(a.ring(), a.rank(i)) + a.delta(i - 1) * h_at(i) +
                                        h_at(i + 1) * a.delta(i));
        REQUIRE(is_chain_map(a, a, f));
        CHECK_NOTHROW(cone(a, a, f));
    }
    const Ring r{1, 2};
    const BraneComplex two(r, {{0, 1}, {1, 1}}, {{0, poly1(r, "x1")}});
    CHECK_THROWS_AS(cone(two, two, ChainMap{{{0, poly1(r, "1")}}}), NotAChainMap);
}

TEST_CASE("jet complex")
{
    const Ring r{2, 3};
    const JetComplex single = JetComplex::of(BraneComplex::single(r, 2));
    CHECK(single.raw.rank(0) == 6);
    CHECK(single.raw.delta(0).is_zero());

    RandomSource rs(8);
    for (int t = 0; t < 10; ++t) {
        const BraneComplex f = random_complex(rs, {2, 4, 3, 2, true, true});
        const JetComplex j = JetComplex::of(f);
        for (int i = f.min_index() - 1; i <= f.max_index(); ++i) {
            CHECK((j.pi(i) * j.iota(i)).is_zero());
            CHECK(j.pi(i + 1) * j.raw.delta(i) == f.delta(i) * j.pi(i));
            PolyMatrix one_delta = poly_zero(f.ring(), 0, 0);
            for (int k = 0; k < f.ring().n_vars; ++k)
                one_delta = block_diag(one_delta, f.delta(i));
            CHECK(j.raw.delta(i) * j.iota(i) == j.iota(i + 1) * one_delta);
        }
    }
}

TEST_CASE("hom complex examples")
{
    const Ring r{2, 2};
    const BraneComplex f = BraneComplex::single(r, 2);
    const HomComplex h(f, f, {0, 2, -1, 1});
    CHECK(h.dim(0) == 4 * 6);
    CHECK(h.dim(1) == 0);
    CHECK(h.cohomology_dim(0) == 24);

    const HomComplex far(f, shift(f, -5), {0, 2, -1, 1});
    CHECK(far.dim(-1) == 0);
    CHECK(far.dim(0) == 0);
    CHECK(far.dim(1) == 0);
}

TEST_CASE("hom differential squares to zero")
{
    RandomSource rs(3);
    for (int t = 0; t < 8; ++t) {
        const BraneComplex a = random_complex(rs, {2, 4, 3, 2, true, true});
        const BraneComplex b = random_complex(rs, {2, 4, 3, 2, true, true});
        const int k = t % 2;
        const HomComplex h(a, b, {k, 1, -1, 1});
        for (std::size_t idx = 0; idx < h.dim(-1); ++idx) {
            const HomCochain once = h.apply(-1, h.basis_element(-1, idx));
            const HomCochain twice = h.apply(0, once);
            for (const auto& [q, m] : twice)
                CHECK(m.is_zero());
        }
    }
}

TEST_CASE("gauge_solve on a single rank one module")
{
    for (int trunc : {1, 2, 4}) {
        const Ring r{1, trunc};
        const BraneComplex f = BraneComplex::single(r, 1);
        const GaugeSolution sol = gauge_solve(f);
        REQUIRE(sol.exists);
        CHECK(sol.strict);
        CHECK(sol.affine_basis.size() == static_cast<std::size_t>(trunc + 1));
        CHECK(verify(*sol.field).ok());
        FormFamily zero{{0, form_zero(r, 1, 1, 1)}};
        CHECK(verify(GaugeField::from_connections(f, zero)).ok());
    }
}

TEST_CASE("gauge_solve on the acyclic identity complex")
{
    const Ring r{2, 3};
    const BraneComplex f = identity_complex(r, 2);
    const GaugeSolution sol = gauge_solve(f);
    REQUIRE(sol.exists);
    CHECK(verify(*sol.field).ok());
    CHECK(sol.affine_basis.empty());
}

TEST_CASE("gauge_solve reports the obstruction of multiplication by x1")
{
    const Ring r{1, 3};
    const BraneComplex f(r, {{0, 1}, {1, 1}}, {{0, poly1(r, "x1")}});
    const GaugeSolution sol = gauge_solve(f);
    CHECK_FALSE(sol.exists);
    CHECK_FALSE(sol.obstruction.empty());
    CHECK_FALSE(sol.field.has_value());
}

TEST_CASE("gauge_solve solutions pass substitution and match Ext0 dimension")
{
    RandomSource rs(17);
    int solved = 0, obstructed = 0;
    for (int t = 0; t < 14; ++t) {
        const int n = 1 + t % 2;
        const BraneComplex f = random_complex(rs, {n, 4, 3, 2, true, true});
        const GaugeSolution sol = gauge_solve(f);
        const HomComplex h(f, f, {1, sol.unknown_cap, -1, 1});
        CHECK(sol.affine_basis.size() == h.cohomology_dim(0));
        if (sol.exists) {
            ++solved;
            CHECK(verify(*sol.field).ok());
        } else {
            ++obstructed;
        }
    }
    CHECK(solved > 0);
}

TEST_CASE("two gauge fields differ by the returned span")
{
    RandomSource rs(29);
    for (int t = 0; t < 6; ++t) {
        const Ring ring{2, 4};
        const AdaptedInstance inst = random_adapted(rs, ring, 3, 2, 1);
        const GaugeSolution sol = gauge_solve(inst.complex);
        REQUIRE(sol.exists);
        const GaugeField phi = GaugeField::from_connections(inst.complex, inst.connections);
        REQUIRE(verify(phi).ok());
        REQUIRE(sol.field->strict());
        const HomComplex h(inst.complex, inst.complex, {1, sol.unknown_cap, -1, 1});
        std::vector<SparseRow> gens;
        for (const auto& fam : sol.affine_basis)
            gens.push_back(family_coords(h, fam));
        for (const auto& fam : homotopy_directions(inst.complex, sol.unknown_cap - inst.complex.diff_degree()))
            gens.push_back(family_coords(h, fam));
        FormFamily diff;
        for (int i : inst.complex.indices())
            diff.emplace(i, phi.b_at(i) - sol.field->b_at(i));
        CHECK(in_span(h.dim(0), gens, family_coords(h, diff)));
    }
}

TEST_CASE("cohomology examples")
{
    const Ring r{2, 3};
    const auto pts = default_eval_points(r);
    const auto single = cohomology(BraneComplex::single(r, 3), pts);
    CHECK(single.rank(0) == 3);
    const auto acyclic = cohomology(identity_complex(r, 2), pts);
    CHECK(acyclic.rank(0) == 0);
    CHECK(acyclic.rank(1) == 0);

    const Ring r1{1, 2};
    const BraneComplex mult(r1, {{0, 1}, {1, 1}}, {{0, poly1(r1, "x1")}});
    CHECK_THROWS_AS(cohomology(mult, {{Scalar(0)}, {Scalar(1)}}), RankJump);
    const auto at_one = cohomology(mult, {{Scalar(1)}, {Scalar(2)}});
    CHECK(at_one.rank(0) == 0);
    CHECK(at_one.rank(1) == 0);

    // constant rank but the orthogonal complement of the image moves
    PolyMatrix tilt = poly_zero(r1, 2, 1);
    tilt(0, 0) = TruncPoly::parse("x1", r1);
    tilt(1, 0) = TruncPoly::constant(r1, 1);
    const BraneComplex moving(r1, {{0, 1}, {1, 2}}, {{0, tilt}});
    CHECK_THROWS_AS(cohomology(moving, default_eval_points(r1)), NonGlobalFrame);
}

TEST_CASE("cohomology representatives")
{
    RandomSource rs(41);
    for (int t = 0; t < 8; ++t) {
        const AdaptedInstance inst = random_adapted(rs, Ring{2, 3}, 3, 3, 1);
        const auto h = cohomology(inst.complex, default_eval_points(inst.complex.ring()));
        int euler = 0, cohom = 0;
        for (int j : inst.complex.indices()) {
            euler += (j % 2 ? -1 : 1) * inst.complex.rank(j);
            cohom += (j % 2 ? -1 : 1) * h.rank(j);
            const auto& sp = h.at(j);
            const int expected =
                inst.form.ranks.at(j) - inst.form.out_rank.at(j) - (j > 0 ? inst.form.out_rank.at(j - 1) : 0);
            CHECK(sp.rank == expected);
            if (sp.rank > 0)
                CHECK(sp.proj * sp.reps == scalar_identity(sp.rank));
        }
        CHECK(euler == cohom);
    }
}

TEST_CASE("induced connections")
{
    RandomSource rs(2);
    const Ring r{2, 3};
    const BraneComplex single = BraneComplex::single(r, 2);
    const FormMatrix a = rs.one_form_matrix(r, 2, 2, 1, 0.7, true);
    const auto h1 = cohomology(single, default_eval_points(r));
    const auto theta = induced_connections(GaugeField::from_connections(single, {{0, a}}), h1);
    REQUIRE(theta.count(0) == 1);
    CHECK(theta.at(0).matrix() == a);

    const BraneComplex acyclic = identity_complex(r, 2);
    const GaugeSolution sol = gauge_solve(acyclic);
    REQUIRE(sol.exists);
    CHECK(induced_connections(*sol.field, cohomology(acyclic, default_eval_points(r))).empty());

    for (int t = 0; t < 6; ++t) {
        const AdaptedInstance inst = random_adapted(rs, Ring{2, 4}, 3, 2, 1);
        const auto h = cohomology(inst.complex, default_eval_points(inst.complex.ring()));
        const GaugeField psi = GaugeField::from_connections(inst.complex, inst.connections);
        const auto base = induced_connections(psi, h);
        for (const auto& dir : homotopy_directions(inst.complex, 1)) {
            const auto moved = induced_connections(psi.shifted(dir, Scalar(3)), h);
            for (const auto& [j, c] : base)
                CHECK(moved.at(j).matrix() == c.matrix());
        }
    }
}

TEST_CASE("compatible family connections")
{
    const Ring r{2, 3};
    RandomSource rs(6);
    const BraneComplex constant(r, {{0, 2}, {1, 3}}, {{0, to_poly(r, rs.scalar_matrix(3, 2))}});
    const FormFamily zero{{0, form_zero(r, 1, 2, 2)}, {1, form_zero(r, 1, 3, 3)}};
    for (const auto& [j, c] : compatible_family_connections(constant, zero, cohomology(constant, default_eval_points(r))))
        CHECK(c.matrix().is_zero());

    // F^0 = H (+) G, F^1 = G, delta^0 (a, b) = b
    PolyMatrix d0 = poly_zero(r, 1, 2);
    d0(0, 1) = TruncPoly::constant(r, 1);
    const BraneComplex split(r, {{0, 2}, {1, 1}}, {{0, d0}});
    const FormMatrix ah = rs.one_form_matrix(r, 1, 1, 2, 1.0, true);
    const FormMatrix ag = rs.one_form_matrix(r, 1, 1, 2, 1.0, true);
    const FormFamily fam{{0, block_diag(ah, ag)}, {1, ag}};
    const auto theta = compatible_family_connections(split, fam, cohomology(split, default_eval_points(r)));
    REQUIRE(theta.count(0) == 1);
    CHECK(theta.at(0).matrix() == ah);
    CHECK(theta.count(1) == 0);

    const FormFamily bad{{0, block_diag(ah, ag)}, {1, ah + ag}};
    CHECK_THROWS_AS(compatible_family_connections(split, bad, cohomology(split, default_eval_points(r))),
                    NotCompatible);
}

TEST_CASE("variation difference")
{
    const Ring r{2, 3};
    RandomSource rs(9);
    const BraneComplex single = BraneComplex::single(r, 2);
    const FormMatrix a = rs.one_form_matrix(r, 2, 2, 1, 0.7, true);
    const FormMatrix b = rs.one_form_matrix(r, 2, 2, 1, 0.7, true);
    const auto h = cohomology(single, default_eval_points(r));
    const GaugeField psi = GaugeField::from_connections(single, {{0, a}});
    const GaugeField phi = GaugeField::from_connections(single, {{0, b}});
    CHECK(variation_difference(psi, psi, h.at(0)).is_zero());
    CHECK(variation_difference(psi, phi, h.at(0)) == b - a);

    for (int t = 0; t < 4; ++t) {
        const AdaptedInstance inst = random_adapted(rs, Ring{2, 4}, 3, 2, 1);
        const auto hc = cohomology(inst.complex, default_eval_points(inst.complex.ring()));
        const GaugeSolution sol = gauge_solve(inst.complex);
        REQUIRE(sol.exists);
        const GaugeField& base = *sol.field;
        const auto theta = induced_connections(base, hc);
        for (const auto& dir : sol.affine_basis) {
            const GaugeField one = base.shifted(dir);
            REQUIRE(verify(one).ok());
            for (const auto& [j, sp] : hc.spaces) {
                if (sp.rank == 0)
                    continue;
                const HomElement xi1 = variation_difference(base, one, sp);
                for (const Scalar& lambda : {Scalar(2), Scalar(Rational(-1, 3)), Scalar(1, 1)}) {
                    const GaugeField moved = base.shifted(dir, lambda);
                    CHECK(variation_difference(base, moved, sp) == lambda * xi1);
                    const auto theta_moved = induced_connections(moved, hc);
                    CHECK(theta_moved.at(j).matrix() - theta.at(j).matrix() == lambda * xi1);
                }
            }
        }
    }
}
