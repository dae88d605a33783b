#include <doctest.h>

#include <algorithm>
#include <set>

#include "holo/errors.hpp"
#include "holo/schubert/strata.hpp"

using namespace holo;
using namespace holo::schubert;

namespace {

Permutation P(const char* s)
{
    return Permutation::parse(s);
}

std::set<std::string> strings(const std::vector<Permutation>& ps)
{
    std::set<std::string> out;
    for (const auto& p : ps)
        out.insert(p.to_string());
    return out;
}

} // namespace

TEST_CASE("permutation parsing and validation")
{
    CHECK(P("312").values() == std::vector<int>{3, 1, 2});
    CHECK(P("3,1,2") == P("312"));
    CHECK(P("3 1 2") == P("312"));
    CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").to_string() == "10,1,2,3,4,5,6,7,8,9");
    CHECK_THROWS_AS(P("112"), ParseError);
    CHECK_THROWS_AS(P("14"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("1a"), ParseError);
    CHECK(P("312").compose(P("132")) == P("321"));
}

TEST_CASE("length examples")
{
    CHECK(P("123").length() == 0);
    CHECK(P("312").length() == 2);
    CHECK(P("231").length() == 2);
    CHECK(P("132").length() == 1);
    CHECK(P("213").length() == 1);
    CHECK(P("321").length() == 3);
}

TEST_CASE("length of w plus length of w composed with the longest element")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_permutations(n))
            CHECK(w.length() + w.compose(Permutation::longest(n)).length() == n * (n - 1) / 2);
}

TEST_CASE("bruhat order is a partial order with identity bottom and longest top")
{
    for (int n = 1; n <= 4; ++n) {
        const auto perms = all_permutations(n);
        for (const auto& u : perms) {
            CHECK(bruhat_leq(u, u));
            CHECK(bruhat_leq(Permutation::identity(n), u));
            CHECK(bruhat_leq(u, Permutation::longest(n)));
            for (const auto& v : perms) {
                if (u != v && bruhat_leq(u, v)) {
                    CHECK_FALSE(bruhat_leq(v, u));
                    CHECK(u.length() < v.length());
                }
                for (const auto& w : perms)
                    if (bruhat_leq(u, v) && bruhat_leq(v, w))
                        CHECK(bruhat_leq(u, w));
            }
        }
    }
    CHECK(Permutation::longest(4).length() == 6);
    CHECK_THROWS_AS(bruhat_leq(P("12"), P("123")), SizeMismatch);
}

TEST_CASE("bruhat order on S3 matches the eight-edge diagram")
{
    CHECK(bruhat_leq(P("132"), P("312")));
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& [v, w] : covering_relations(3))
        edges.emplace(v.to_string(), w.to_string());
    const std::set<std::pair<std::string, std::string>> expected = {
        {"123", "132"}, {"123", "213"}, {"132", "312"}, {"132", "231"},
        {"213", "312"}, {"213", "231"}, {"312", "321"}, {"231", "321"},
    };
    CHECK(edges == expected);

    std::set<std::set<std::string>> incomparable;
    for (const auto& [a, b] : incomparable_pairs(3))
        incomparable.insert({a.to_string(), b.to_string()});
    const std::set<std::set<std::string>> pairs = {{"312", "231"}, {"132", "213"}};
    CHECK(incomparable == pairs);
}

TEST_CASE("bruhat order is the transitive closure of its covering relations")
{
    for (int n = 2; n <= 4; ++n) {
        const auto perms = all_permutations(n);
        std::set<std::pair<Permutation, Permutation>> reach;
        for (const auto& p : perms)
            reach.emplace(p, p);
        for (const auto& e : covering_relations(n))
            reach.insert(e);
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& [a, b] : std::vector(reach.begin(), reach.end()))
                for (const auto& [c, d] : std::vector(reach.begin(), reach.end()))
                    if (b == c && reach.emplace(a, d).second)
                        grew = true;
        }
        for (const auto& u : perms)
            for (const auto& v : perms)
                CHECK(bruhat_leq(u, v) == (reach.count({u, v}) == 1));
        // covering steps raise the length by one
        for (const auto& [v, w] : covering_relations(n))
            CHECK(w.length() == v.length() + 1);
    }
}

TEST_CASE("schubert closures")
{
    CHECK(strings(schubert_closure(P("123"))) == std::set<std::string>{"123"});
    CHECK(schubert_closure(P("321")).size() == 6);
    CHECK(strings(schubert_closure(P("312"))) == std::set<std::string>{"123", "132", "213", "312"});
}

TEST_CASE("singularity criterion")
{
    for (const auto& w : all_permutations(3))
        CHECK_FALSE(is_singular(w).has_value());

    const auto a = is_singular(P("3412"));
    REQUIRE(a.has_value());
    CHECK(a->positions == std::array<int, 4>{1, 2, 3, 4});
    CHECK(a->pattern == "3412");

    const auto b = is_singular(P("4231"));
    REQUIRE(b.has_value());
    CHECK(b->pattern == "4231");

    std::set<std::string> singular;
    for (const auto& w : all_permutations(4))
        if (is_singular(w))
            singular.insert(w.to_string());
    CHECK(singular == std::set<std::string>{"3412", "4231"});

    // the witness really is an occurrence of its pattern
    for (const auto& w : all_permutations(5))
        if (const auto s = is_singular(w)) {
            const auto [i, j, k, l] = s->positions;
            CHECK(i < j);
            CHECK(j < k);
            CHECK(k < l);
            if (s->pattern == "3412")
                CHECK((w(k) < w(l) && w(l) < w(i) && w(i) < w(j)));
            else
                CHECK((w(l) < w(j) && w(j) < w(k) && w(k) < w(i)));
        }
}

TEST_CASE("flag catalog")
{
    const auto cat = flag3_catalog();
    CHECK(cat.generators.size() == 6);
    REQUIRE(cat.tower.size() == 4);
    std::vector<int> dims;
    for (const auto& z : cat.tower)
        dims.push_back(z.dimension);
    CHECK(dims == std::vector<int>{3, 2, 1, 0});
    CHECK(cat.tower[1].components == std::vector<std::string>{"C2", "C3"});
    CHECK(cat.tower[2].components == std::vector<std::string>{"C4", "C5"});
    CHECK(cat.tower[0].cells.size() == 6);
    CHECK(cat.tower[1].cells == std::vector<std::string>{"C2", "C3", "C4", "C5", "C6"});
    CHECK(cat.tower[3].cells == std::vector<std::string>{"C6"});
    for (const auto& z : cat.tower) {
        CHECK(z.codim_one);
        CHECK(z.affine_complement);
        CHECK(cat.hodge.at(z.label) == 0);
    }
    for (const auto& c : cat.cells)
        CHECK(c.dimension == c.w.length());

    const auto& l2 = cat.generator("L2");
    CHECK(l2.support == "C2");
    CHECK(l2.ambient == "Z1");
    CHECK(l2.divisor == "-C3");
    CHECK(cat.generator("L1").divisor == "-C2-C3");
    CHECK(cat.generator("L6").divisor == "skyscraper");

    std::set<std::string> supports;
    for (const auto& g : cat.generators)
        supports.insert(g.support);
    CHECK(supports.size() == 6);
    for (const auto& c : cat.cells)
        CHECK(supports.count(c.label) == 1);

    // every generator support is open in its ambient stratum
    for (const auto& g : cat.generators) {
        const auto* z = cat.stratum(g.ambient);
        REQUIRE(z != nullptr);
        CHECK(std::find(z->components.begin(), z->components.end(), g.support) != z->components.end());
    }
}

TEST_CASE("hom vanishing verdicts")
{
    const auto cat = flag3_catalog();
    const auto a = hom_vanishing_verdict(cat, "L1", "L2");
    CHECK(a.vanishes);
    CHECK(a.reason == "disjoint-support");
    const auto b = hom_vanishing_verdict(cat, "L3", "L3");
    CHECK(b.vanishes);
    CHECK(b.reason == "hodge-vanishing");
    int count = 0;
    for (const auto& r : cat.generators)
        for (const auto& s : cat.generators)
            count += hom_vanishing_verdict(cat, r.label, s.label).vanishes;
    CHECK(count == 36);
    CHECK_THROWS_AS(hom_vanishing_verdict(cat, "L1", "L7"), UnknownLabel);
}

TEST_CASE("uniqueness verdicts")
{
    const auto cat = flag3_catalog();
    const auto v = uniqueness_verdict(cat);
    CHECK(v.at_most_one);
    CHECK(v.failing().empty());
    CHECK(v.conditions.size() == 5 + 36);

    auto bad = cat;
    bad.hodge["Z2"] = 1;
    const auto w = uniqueness_verdict(bad);
    CHECK_FALSE(w.at_most_one);
    const auto failing = w.failing();
    CHECK(std::find(failing.begin(), failing.end(), "h10 vanishing") != failing.end());
    CHECK(std::find(failing.begin(), failing.end(), "Hom(L2, L2 (x) Omega^1) = 0") != failing.end());

    auto shared = cat;
    shared.generators[1].support = "C1";
    CHECK_FALSE(uniqueness_verdict(shared).at_most_one);

    auto not_affine = cat;
    not_affine.tower[2].affine_complement = false;
    const auto na = uniqueness_verdict(not_affine);
    CHECK_FALSE(na.at_most_one);
    CHECK(na.failing() == std::vector<std::string>{"affine complements"});

    StrataCatalog trivial;
    trivial.cells.push_back(Cell{"C1", P("1"), 0});
    trivial.tower.push_back(Stratum{"Z0", {"C1"}, {"C1"}, 0, true, true});
    trivial.generators.push_back(Generator{"L1", "C1", "Z0", "skyscraper", "Z0"});
    trivial.hodge["Z0"] = 0;
    CHECK(uniqueness_verdict(trivial).at_most_one);
}
