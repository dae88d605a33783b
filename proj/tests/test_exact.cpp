#include <doctest.h>

#include "holo/exact/linear.hpp"
#include "holo/exact/random.hpp"

using namespace holo;
using namespace holo::exact;

namespace {

const Ring R2{2, 3};

TruncPoly P(const char* s, Ring r = R2) { return TruncPoly::parse(s, r); }

ExteriorForm one_form(Ring r, std::initializer_list<const char*> coeffs)
{
    ExteriorForm out(r, 1);
    int k = 0;
    for (const char* c : coeffs)
        out.add_component(IndexSet(1) << k++, P(c, r));
    return out;
}

} // namespace

TEST_CASE("scalar parse and print")
{
    CHECK(Scalar::parse("3/6").to_string() == "1/2");
    CHECK(Scalar::parse("(3/2+1/2i)") == Scalar::fraction(3, 2, 1, 2));
    CHECK(Scalar::parse("(1-2i)").to_string() == "(1-2i)");
    CHECK(Scalar::parse("-4/2").to_string() == "-2");
    CHECK(Scalar::parse("(0+1i)") == Scalar::i());
    CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
    CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
    CHECK(Scalar::fraction(1, 2, 1, 2).inverse() == Scalar::fraction(1, 1, -1, 1));
}

TEST_CASE("rationalize recovers small fractions")
{
    CHECK(rationalize(0.3333333333333333L, 1000) == Rational(1, 3));
    CHECK(rationalize(-2.5L, 10) == Rational(-5, 2));
    CHECK(rationalize(7.0L, 10) == Rational(7));
}

TEST_CASE("polynomial grammar")
{
    Ring r{3, 4};
    TruncPoly p = TruncPoly::parse("(3/2+1/2i)*x1^2*x2 - x3", r);
    CHECK(p.terms().size() == 2);
    CHECK(p.coeff({2, 1, 0}) == Scalar::fraction(3, 2, 1, 2));
    CHECK(p.coeff({0, 0, 1}) == Scalar(-1));
    CHECK(TruncPoly::parse(p.to_string(), r) == p);
    CHECK(TruncPoly::parse("  2 ", r) == TruncPoly::constant(r, 2));
    CHECK(TruncPoly::parse("-x1 + x1", r).is_zero());
    CHECK(TruncPoly::parse("x1*x1", r) == TruncPoly::parse("x1^2", r));
    CHECK(TruncPoly::parse("1/2*x2", r).to_string() == "1/2*x2");
    CHECK_THROWS_AS(TruncPoly::parse("x4", r), ParseError);
    CHECK_THROWS_AS(TruncPoly::parse("x1 +", r), ParseError);
    CHECK_THROWS_AS(TruncPoly::parse("x1 x2", r), ParseError);
    CHECK_THROWS_AS(TruncPoly::parse("x1^5", r), DegreeOverflow);
    CHECK(TruncPoly(r).to_string() == "0");
}

TEST_CASE("poly_arith examples")
{
    CHECK((P("x1") + P("-x1")).is_zero());
    CHECK(P("x1") * P("x2") == P("x1*x2"));
    CHECK_THROWS_AS(P("x1^2") * P("x2^2"), DegreeOverflow);
    CHECK_THROWS_AS(P("x1") + TruncPoly::parse("x1", Ring{2, 4}), DimensionMismatch);
}

TEST_CASE("exterior_d examples")
{
    ExteriorForm f = ExteriorForm::function(P("x1*x2"));
    CHECK(f.d() == one_form(R2, {"x2", "x1"}));
    CHECK(ExteriorForm::function(P("x1^2*x2")).d().d().is_zero());
    ExteriorForm w = one_form(R2, {"0", "x1"});
    CHECK(w.d() == ExteriorForm::basis(R2, 0b11, P("1")));
}

TEST_CASE("wedge examples")
{
    ExteriorForm dx1 = ExteriorForm::dx(R2, 0), dx2 = ExteriorForm::dx(R2, 1);
    CHECK(wedge(dx1, dx1).is_zero());
    CHECK(wedge(dx1, dx2) == ExteriorForm::basis(R2, 0b11, P("1")));
    CHECK(wedge(dx2, dx1) == ExteriorForm::basis(R2, 0b11, P("-1")));
    CHECK(wedge(one_form(R2, {"x1", "0"}), one_form(R2, {"0", "x2"})) ==
          ExteriorForm::basis(R2, 0b11, P("x1*x2")));
    CHECK(wedge_sign(0b101, 0b010) == -1);
    CHECK(wedge_sign(0b010, 0b101) == -1);
    CHECK(wedge_sign(0b011, 0b100) == 1);
}

TEST_CASE("torus_pairing examples")
{
    ExteriorForm a = one_form(R2, {"x1", "0"});
    CHECK(torus_pairing(a, a, PairingMode::hermitian) == Scalar(1));
    CHECK(torus_pairing(a, one_form(R2, {"x2", "0"}), PairingMode::hermitian) == Scalar(0));
    ExteriorForm i_dx1 = one_form(R2, {"(0+1i)", "0"});
    CHECK(torus_pairing(i_dx1, i_dx1, PairingMode::bilinear) == Scalar(-1));
    CHECK(torus_pairing(i_dx1, i_dx1, PairingMode::hermitian) == Scalar(1));
    CHECK_THROWS_AS(torus_pairing(a, a.d(), PairingMode::hermitian), DegreeMismatch);
}

TEST_CASE("solve_linear examples")
{
    auto id = scalar_identity(3);
    auto s = solve_linear(id, {1, 2, 3});
    REQUIRE(s.consistent);
    CHECK(s.particular == std::vector<Scalar>{1, 2, 3});
    CHECK(s.kernel.empty());

    auto z = solve_linear(scalar_zero(2, 2), {0, 0});
    REQUIRE(z.consistent);
    CHECK(z.particular == std::vector<Scalar>{0, 0});
    CHECK(z.kernel.size() == 2);

    ScalarMatrix m = scalar_zero(2, 2);
    m(0, 0) = 1; m(0, 1) = 1; m(1, 0) = 2; m(1, 1) = 2;
    auto n = solve_linear(m, {1, 3});
    CHECK_FALSE(n.consistent);
    CHECK(n.witness_row == 1u);
    CHECK_THROWS_AS(solve_linear(m, {1}), DimensionMismatch);
}

TEST_CASE("property: polynomial ring axioms")
{
    RandomSource rs(11);
    Ring r{3, 6};
    for (int t = 0; t < 50; ++t) {
        TruncPoly a = rs.poly(r, 2, 3, true), b = rs.poly(r, 2, 3, true), c = rs.poly(r, 2, 3, true);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        for (int k = 0; k < r.n_vars; ++k)
            CHECK((a * b).derivative(k) == a.derivative(k) * b + a * b.derivative(k));
    }
}

TEST_CASE("property: d^2 = 0, graded commutativity, Leibniz")
{
    RandomSource rs(12);
    Ring r{3, 6};
    for (int t = 0; t < 40; ++t) {
        int p = rs.uniform_int(0, 2), q = rs.uniform_int(0, 1);
        ExteriorForm a = rs.form(r, p, 3, 3, true), b = rs.form(r, q, 3, 3, true);
        CHECK(a.d().d().is_zero());
        ExteriorForm ab = wedge(a, b);
        ExteriorForm ba = wedge(b, a);
        CHECK(ab == ((p * q) % 2 ? -ba : ba));
        ExteriorForm rhs = wedge(a.d(), b) + ((p % 2) ? -wedge(a, b.d()) : wedge(a, b.d()));
        CHECK(ab.d() == rhs);
    }
}

TEST_CASE("property: pairings")
{
    RandomSource rs(13);
    Ring r{2, 4};
    for (int t = 0; t < 40; ++t) {
        ExteriorForm a = rs.form(r, 1, 3, 3, true), b = rs.form(r, 1, 3, 3, true);
        CHECK(torus_pairing(a, b, PairingMode::hermitian) == torus_pairing(b, a, PairingMode::hermitian).conj());
        CHECK(torus_pairing(a, b, PairingMode::bilinear) == torus_pairing(b, a, PairingMode::bilinear));
        Scalar n = torus_pairing(a, a, PairingMode::hermitian);
        CHECK(n.is_real());
        if (a.is_zero())
            CHECK(n.is_zero());
        else
            CHECK(n.re() > 0);
    }
}

TEST_CASE("property: solve_linear by substitution")
{
    RandomSource rs(14);
    for (int t = 0; t < 40; ++t) {
        std::size_t rows = rs.uniform_int(1, 6), cols = rs.uniform_int(1, 6);
        ScalarMatrix m = rs.scalar_matrix(rows, cols, t % 2 == 0, 0.5);
        std::vector<Scalar> x0(cols);
        for (auto& v : x0)
            v = rs.scalar();
        std::vector<Scalar> b = m * x0;
        auto sol = solve_linear(m, b);
        REQUIRE(sol.consistent);
        CHECK(m * sol.particular == b);
        CHECK(sol.kernel.size() + rank(m) == cols);
        for (const auto& k : sol.kernel)
            CHECK(m * k == std::vector<Scalar>(rows));
    }
}

TEST_CASE("inverse of unimodular matrices")
{
    RandomSource rs(15);
    for (int t = 0; t < 10; ++t) {
        ScalarMatrix g = rs.invertible(3);
        auto inv = inverse(g);
        REQUIRE(inv.has_value());
        CHECK(g * *inv == scalar_identity(3));
    }
    CHECK_FALSE(inverse(scalar_zero(2, 2)).has_value());
}
