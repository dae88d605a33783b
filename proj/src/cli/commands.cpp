#include "holo/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <regex>
#include <iostream>
#include <sstream>

#include "holo/brane/gauge.hpp"
#include "holo/brane/hom.hpp"
#include "holo/cli/model.hpp"
#include "holo/cli/report.hpp"
#include "holo/schubert/strata.hpp"
#include "holo/ym/checks.hpp"
#include "holo/ym/instances.hpp"

namespace holo::cli {

using nlohmann::json;
using brane::ChainMap;
using brane::CohomologyResult;
using brane::GaugeField;
using exact::Scalar;
using exact::TruncPoly;

int exit_code_for(const Error& e)
{
    if (dynamic_cast<const RankJump*>(&e) || dynamic_cast<const DegreeOverflow*>(&e) ||
        dynamic_cast<const ToleranceUnreachable*>(&e))
        return kNumericalFailure;
    return kParseError;
}

namespace {

struct Globals
{
    OutputFormat format = OutputFormat::json;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    int threads = 1;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read model file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json perm_json(const schubert::Permutation& p)
{
    return p.values();
}

schubert::Permutation perm_arg(const std::string& text)
{
    try {
        return schubert::Permutation::parse(text);
    } catch (const ParseError& e) {
        throw ParseError(std::string("--perm: ") + e.what());
    }
}

// ---------------------------------------------------------------- schubert

json catalog_json(const schubert::StrataCatalog& cat)
{
    json cells = json::array();
    for (const auto& c : cat.cells)
        cells.push_back({{"label", c.label}, {"perm", perm_json(c.w)}, {"dimension", c.dimension}});
    json tower = json::array();
    for (const auto& z : cat.tower)
        tower.push_back({{"label", z.label},
                         {"components", z.components},
                         {"cells", z.cells},
                         {"dimension", z.dimension},
                         {"codim_one", z.codim_one},
                         {"affine_complement", z.affine_complement}});
    json gens = json::array();
    for (const auto& g : cat.generators)
        gens.push_back({{"label", g.label},
                        {"support", g.support},
                        {"ambient", g.ambient},
                        {"divisor", g.divisor},
                        {"hodge_stratum", g.hodge_stratum}});
    json hodge = json::object();
    for (const auto& [k, v] : cat.hodge)
        hodge[k] = v;
    return json{{"cells", cells}, {"tower", tower}, {"generators", gens}, {"hodge", hodge}};
}

schubert::StrataCatalog catalog_from_json(const json& j)
{
    auto need = [](const json& o, const std::string& where, const char* key) -> const json& {
        if (!o.is_object() || !o.contains(key))
            throw ParseError("at " + where + ": missing field '" + key + "'");
        return o[key];
    };
    schubert::StrataCatalog cat;
    try {
        for (std::size_t k = 0; k < need(j, "/", "cells").size(); ++k) {
            const std::string w = "/cells/" + std::to_string(k);
            const json& c = j["cells"][k];
            schubert::Cell cell;
            cell.label = need(c, w, "label").get<std::string>();
            if (c.contains("perm")) {
                cell.w = schubert::Permutation(c["perm"].get<std::vector<int>>());
                cell.dimension = cell.w.length();
            }
            if (c.contains("dimension"))
                cell.dimension = c["dimension"].get<int>();
            cat.cells.push_back(std::move(cell));
        }
        for (std::size_t k = 0; k < need(j, "/", "tower").size(); ++k) {
            const std::string w = "/tower/" + std::to_string(k);
            const json& z = j["tower"][k];
            schubert::Stratum s;
            s.label = need(z, w, "label").get<std::string>();
            s.cells = need(z, w, "cells").get<std::vector<std::string>>();
            s.components = z.value("components", std::vector<std::string>{});
            s.dimension = z.value("dimension", 0);
            s.codim_one = z.value("codim_one", false);
            s.affine_complement = z.value("affine_complement", false);
            cat.tower.push_back(std::move(s));
        }
        for (std::size_t k = 0; k < need(j, "/", "generators").size(); ++k) {
            const std::string w = "/generators/" + std::to_string(k);
            const json& g = j["generators"][k];
            schubert::Generator gen;
            gen.label = need(g, w, "label").get<std::string>();
            gen.support = need(g, w, "support").get<std::string>();
            gen.divisor = need(g, w, "divisor").get<std::string>();
            gen.ambient = g.value("ambient", std::string());
            gen.hodge_stratum = need(g, w, "hodge_stratum").get<std::string>();
            cat.generators.push_back(std::move(gen));
        }
        for (const auto& [k, v] : need(j, "/", "hodge").items())
            cat.hodge[k] = v.get<int>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed catalog: ") + e.what());
    }
    return cat;
}

void cmd_schubert_order(Report& r, int n)
{
    if (n < 1 || n > 5)
        throw ParseError("--n must lie in 1..5");
    json edges = json::array();
    for (const auto& [v, w] : schubert::covering_relations(n))
        edges.push_back({perm_json(v), perm_json(w)});
    json incomparable = json::array();
    for (const auto& [v, w] : schubert::incomparable_pairs(n))
        incomparable.push_back({perm_json(v), perm_json(w)});
    r.set("n", n, true);
    r.set("edge_count", edges.size(), true);
    r.set("covering_edges", edges, true);
    r.set("incomparable_pairs", incomparable, true);
}

void cmd_schubert_smooth(Report& r, const std::string& text)
{
    const auto w = perm_arg(text);
    const auto s = schubert::is_singular(w);
    r.set("perm", perm_json(w), true);
    r.set("length", w.length(), true);
    r.set("singular", s.has_value(), true);
    if (s)
        r.set("witness", json{{"positions", s->positions}, {"pattern", s->pattern}}, true);
}

void cmd_schubert_closure(Report& r, const std::string& text)
{
    const auto w = perm_arg(text);
    json members = json::array();
    for (const auto& v : schubert::schubert_closure(w))
        members.push_back(perm_json(v));
    r.set("perm", perm_json(w), true);
    r.set("size", members.size(), true);
    r.set("closure", members, true);
}

void cmd_schubert_strata(Report& r, bool flag3, const std::string& catalog_path, std::vector<std::string>& files)
{
    schubert::StrataCatalog cat;
    if (!catalog_path.empty()) {
        files.push_back(read_file(catalog_path));
        json j;
        try {
            j = json::parse(files.back());
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed JSON: ") + e.what());
        }
        cat = catalog_from_json(j);
        // supplied flags are taken at face value
        r.set("assumptions", "hodge, codim_one and affine_complement flags are unchecked inputs", true);
    } else if (flag3) {
        cat = schubert::flag3_catalog();
    } else {
        throw ParseError("strata needs --flag3 or --catalog FILE");
    }
    json verdicts = json::array();
    for (const auto& a : cat.generators)
        for (const auto& b : cat.generators) {
            const auto v = schubert::hom_vanishing_verdict(cat, a.label, b.label);
            verdicts.push_back({{"r", a.label}, {"s", b.label}, {"vanishes", v.vanishes}, {"reason", v.reason}});
        }
    const auto u = schubert::uniqueness_verdict(cat);
    json conditions = json::array();
    for (const auto& c : u.conditions)
        conditions.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    r.set("catalog", catalog_json(cat), true);
    r.set("generator_count", cat.generators.size(), true);
    r.set("hom_verdicts", verdicts, true);
    r.set("verdict", u.at_most_one ? "at_most_one" : "not_concluded", true);
    r.set("conditions", conditions, true);
    r.set("failing", u.failing(), true);
}

// ---------------------------------------------------------------- complex

json poly_family_json(const std::map<int, exact::PolyMatrix>& m)
{
    json out = json::object();
    for (const auto& [i, a] : m)
        out[std::to_string(i)] = poly_matrix_json(a);
    return out;
}

json form_family_json(const brane::FormFamily& f)
{
    json out = json::object();
    for (const auto& [i, a] : f)
        out[std::to_string(i)] = one_form_json(a);
    return out;
}

void cmd_cohomology(Report& r, const Model& m)
{
    const auto f = m.complex();
    json ranks = json::object();
    try {
        const auto h = brane::cohomology(f, m.points());
        for (int i : f.indices())
            ranks[std::to_string(i)] = h.rank(i);
        json dr = json::object();
        for (const auto& [i, k] : h.delta_ranks)
            dr[std::to_string(i)] = k;
        r.set("ranks", ranks, true);
        r.set("delta_ranks", dr, true);
        r.set("locally_free", true, true);
    } catch (const RankJump& e) {
        r.set("locally_free", false, true);
        r.set("diagnostic", json{{"error", e.kind()}, {"message", e.what()}}, true);
        throw;
    }
}

int cmd_gauge_solve(Report& r, const Model& m)
{
    const auto f = m.complex();
    const auto sol = brane::gauge_solve(f);
    r.set("exists", sol.exists, true);
    r.set("strict", sol.strict, true);
    r.set("affine_dimension", sol.affine_basis.size(), true);
    r.set("unknown_cap", sol.unknown_cap, true);
    r.set("unknowns", sol.unknowns, true);
    r.set("equations", sol.equations, true);
    if (sol.field) {
        const auto& g = *sol.field;
        r.set("field", json{{"S", poly_family_json(g.s)}, {"B", form_family_json(g.b)}, {"h", poly_family_json(g.h)}},
              true);
        json basis = json::array();
        for (const auto& fam : sol.affine_basis)
            basis.push_back(form_family_json(fam));
        r.set("affine_basis", basis, true);
    }
    if (!sol.exists) {
        r.set("obstruction", sol.obstruction, true);
        return kObstruction;
    }
    return kOk;
}

void cmd_hom(Report& r, const Model& m, int form_degree, std::optional<int> cap)
{
    const auto f = m.complex();
    const int base_cap = cap ? *cap : m.ring.trunc - f.diff_degree();
    const brane::HomComplex h(f, f, {form_degree, base_cap, -1, 1});
    r.set("form_degree", form_degree, true);
    r.set("base_cap", base_cap, true);
    r.set("dims", json{{"-1", h.dim(-1)}, {"0", h.dim(0)}, {"1", h.dim(1)}}, true);
    r.set("h0_rank", h.cohomology_dim(0), true);
}

// ---------------------------------------------------------------- ym

struct YmContext
{
    brane::BraneComplex f;
    GaugeField psi;
    CohomologyResult h;
    std::vector<brane::FormFamily> vars;
    std::vector<std::string> names;
};

YmContext ym_context(const Model& m)
{
    if (!m.has_base())
        throw ParseError("at /base_connections: ym commands need base connections");
    YmContext c;
    c.f = m.complex();
    c.psi = GaugeField::from_connections(c.f, m.base);
    c.h = brane::cohomology(c.f, m.points());
    for (const auto& [name, fam] : m.variations) {
        c.names.push_back(name);
        c.vars.push_back(fam);
    }
    return c;
}

ym::YMPolynomial model_P(const YmContext& c, exact::PairingMode mode)
{
    const auto be = ym::brane_expansion(c.psi, c.vars, c.h);
    return ym::brane_P(be, static_cast<int>(c.vars.size()), mode);
}

json lambda_names(int m, exact::PairingMode mode)
{
    json out = json::array();
    for (int i = 1; i <= m; ++i)
        out.push_back("l" + std::to_string(i));
    if (mode == exact::PairingMode::hermitian)
        for (int i = 1; i <= m; ++i)
            out.push_back("conj(l" + std::to_string(i) + ")");
    return out;
}

/// P printed in lambda names instead of the ring's x_k.
std::string lambda_text(const TruncPoly& p, const json& names)
{
    const std::regex var("x([0-9]+)");
    const std::string text = p.to_string();
    std::string out;
    auto last = text.cbegin();
    for (std::sregex_iterator it(text.begin(), text.end(), var), end; it != end; ++it) {
        out.append(last, text.cbegin() + it->position());
        out += names[std::stoul((*it)[1]) - 1].get<std::string>();
        last = text.cbegin() + it->position() + it->length();
    }
    out.append(last, text.cend());
    return out;
}

json poly_terms(const TruncPoly& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exponent", e}, {"coefficient", c.to_string()}});
    return terms;
}

std::vector<Scalar> parse_lambda(const std::string& text, int m)
{
    std::vector<Scalar> out;
    if (text.empty())
        return std::vector<Scalar>(m);
    std::string cur;
    int depth = 0;
    auto flush = [&] {
        try {
            out.push_back(Scalar::parse(cur));
        } catch (const ParseError& e) {
            throw ParseError("--lambda entry " + std::to_string(out.size() + 1) + ": " + e.what());
        }
        cur.clear();
    };
    for (char ch : text) {
        depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
        if (ch == ',' && depth == 0)
            flush();
        else
            cur.push_back(ch);
    }
    flush();
    if (static_cast<int>(out.size()) != m)
        throw ParseError("--lambda needs " + std::to_string(m) + " entries, found " + std::to_string(out.size()));
    return out;
}

GaugeField shifted(const YmContext& c, const std::vector<Scalar>& lambda)
{
    GaugeField g = c.psi;
    for (std::size_t k = 0; k < lambda.size(); ++k)
        if (!lambda[k].is_zero())
            g = g.shifted(c.vars[k], lambda[k]);
    return g;
}

json scalars_json(const std::vector<Scalar>& v)
{
    json out = json::array();
    for (const auto& s : v)
        out.push_back(s.to_string());
    return out;
}

void cmd_ym_polynomial(Report& r, const Model& m)
{
    const auto c = ym_context(m);
    const auto p = model_P(c, m.mode);
    const auto g = ym::gradient_system(p);
    r.set("mode", exact::to_string(m.mode), true);
    r.set("m", p.m, true);
    const json names = lambda_names(p.m, m.mode);
    r.set("variables", names, true);
    r.set("P", lambda_text(p.p, names), true);
    r.set("terms", poly_terms(p.p), true);
    r.set("degree", p.p.degree(), true);
    r.set("gradient_degree", g.max_degree(), true);
    r.set("constant", p.is_constant(), true);
}

constexpr std::size_t kMaxListedPoints = 8;

void cmd_ym_solve(Report& r, const Model& m, const ym::SolverConfig& cfg)
{
    const auto c = ym_context(m);
    const auto p = model_P(c, m.mode);
    const auto sys = ym::gradient_system(p);
    const auto set = ym::solve_critical(sys, cfg);
    auto point_json = [](const ym::CriticalPoint& pt) {
        json lam = json::array();
        for (const auto& z : pt.lambda)
            lam.push_back(complex_json(z));
        return json{{"lambda", lam},
                    {"residual", static_cast<double>(pt.residual)},
                    {"multiplicity", pt.multiplicity},
                    {"hits", pt.hits}};
    };
    json points = json::array(), residuals = json::array(), nonisolated = json::array();
    for (const auto& pt : set.isolated) {
        points.push_back(point_json(pt));
        residuals.push_back(static_cast<double>(pt.residual));
    }
    // one sample per cluster is plenty to locate a component
    for (std::size_t k = 0; k < set.nonisolated_points.size() && k < kMaxListedPoints; ++k)
        nonisolated.push_back(point_json(set.nonisolated_points[k]));
    json witness = json::array();
    for (const auto& z : set.witness)
        witness.push_back(complex_json(z));
    r.set("mode", exact::to_string(set.mode), true);
    r.set("m", p.m, true);
    r.set("unknowns", set.unknowns, true);
    r.set("bezout_bound", set.bezout_bound, true);
    r.set("points", points, false);
    r.set("residuals", residuals, false);
    r.set("nonisolated", set.nonisolated, false);
    r.set("nonisolated_points", nonisolated, false);
    r.set("nonisolated_point_count", set.nonisolated_points.size(), false);
    r.set("witnesses", set.nonisolated ? json::array({witness}) : json::array(), false);
    r.set("converged_starts", set.converged_starts, false);
}

void cmd_ym_value(Report& r, const Model& m, const std::string& lambda_text)
{
    const auto c = ym_context(m);
    const auto lambda = parse_lambda(lambda_text, static_cast<int>(c.vars.size()));
    const Scalar value = ym::ym_brane(shifted(c, lambda), c.h, m.mode);
    r.set("lambda", scalars_json(lambda), true);
    r.set("value", value.to_string(), true);
    if (!c.vars.empty()) {
        const auto p = model_P(c, m.mode);
        std::vector<Scalar> args = lambda;
        if (m.mode == exact::PairingMode::hermitian)
            for (const auto& l : lambda)
                args.push_back(l.conj());
        r.set("P_at_lambda", p.p.evaluate(args).to_string(), true);
        r.set("consistent", p.p.evaluate(args) == value, true);
    }
}

int cmd_ym_check(Report& r, const Model& m, const std::string& lambda_text)
{
    const auto c = ym_context(m);
    const auto lambda = parse_lambda(lambda_text, static_cast<int>(c.vars.size()));
    const GaugeField g = shifted(c, lambda);
    bool identities = true;

    json stationarity = json::array();
    for (std::size_t k = 0; k < c.vars.size(); ++k) {
        const auto s = ym::stationarity_check(g, c.vars[k], c.h, m.mode);
        identities = identities && s.agree;
        stationarity.push_back({{"variation", c.names[k]},
                                {"pairing", s.pairing.to_string()},
                                {"predicted", complex_json(s.predicted)},
                                {"finite_difference", complex_json(s.fd)},
                                {"abs_error", static_cast<double>(s.abs_error)},
                                {"agree", s.agree}});
    }

    const auto be = ym::brane_expansion(g, {}, c.h);
    json orth = json::object();
    bool all_orth = true;
    for (const auto& [j, theta] : be.theta) {
        const auto& gram = c.h.at(j).gram;
        const auto rep = ym::orthogonality_check(theta, m.mode, nullptr, &gram);
        all_orth = all_orth && rep.orthogonal();
        json o{{"checked", rep.checked}, {"cap", rep.cap}, {"orthogonal", rep.orthogonal()}};
        if (rep.witness)
            o["witness"] = {{"index", *rep.witness}, {"value", rep.witness_value.to_string()}};
        orth[std::to_string(j)] = o;
    }

    bool critical = true;
    if (!c.vars.empty()) {
        const auto sys = ym::gradient_system(model_P(c, m.mode));
        std::vector<Scalar> x;
        if (m.mode == exact::PairingMode::hermitian) {
            for (const auto& l : lambda)
                x.push_back(Scalar(l.re()));
            for (const auto& l : lambda)
                x.push_back(Scalar(l.im()));
        } else {
            x = lambda;
        }
        for (const auto& eq : sys.equations)
            critical = critical && eq.evaluate(x).is_zero();
    }

    r.set("lambda", scalars_json(lambda), true);
    r.set("stationarity", stationarity, false);
    r.set("orthogonality", orth, true);
    r.set("all_orthogonal", all_orth, true);
    r.set("critical_along_variations", critical, true);
    r.set("identities_hold", identities, false);
    return identities ? kOk : kIdentityFailure;
}

// ---------------------------------------------------------------- check

struct Suite
{
    json checks = json::array();
    bool pass = true;

    void add(const std::string& name, const std::string& status, json detail = nullptr)
    {
        json c{{"name", name}, {"status", status}};
        if (!detail.is_null())
            c["detail"] = std::move(detail);
        checks.push_back(std::move(c));
        pass = pass && status != "fail";
    }
};

bool leibniz_holds(const dg::Connection& c, bool& tested)
{
    const auto ring = c.ring();
    const int r = c.module().rank;
    for (int k = 0; k < ring.n_vars; ++k) {
        const TruncPoly f = TruncPoly::variable(ring, k);
        for (int a = 0; a < r; ++a) {
            auto e = exact::poly_zero(ring, r, 1);
            e(a, 0) = TruncPoly::constant(ring, Scalar(1));
            auto fe = exact::poly_zero(ring, r, 1);
            fe(a, 0) = f;
            try {
                const auto lhs = c.apply(dg::section(fe));
                const auto rhs = exact::d(fe) + f * c.apply(dg::section(e));
                tested = true;
                if (lhs != rhs)
                    return false;
            } catch (const DegreeOverflow&) {
                // x_k A leaves the truncation; nothing to compare
            }
        }
    }
    return true;
}

Suite identity_suite(const Model& m)
{
    Suite s;
    if (const auto defect = brane::BraneComplex::square_defect(m.deltas)) {
        s.add("delta^2 = 0", "fail",
              json{{"index", defect->index},
                   {"row", defect->row},
                   {"col", defect->col},
                   {"value", defect->value.to_string()}});
        return s;
    }
    s.add("delta^2 = 0", "pass");
    const auto f = m.complex();
    if (!m.has_base())
        return s;

    for (const auto& [i, a] : m.base) {
        const dg::Connection c({f.rank(i), m.ring}, a);
        const std::string at = "[" + std::to_string(i) + "]";
        bool tested = false;
        const bool leibniz = leibniz_holds(c, tested);
        s.add("leibniz" + at, !tested ? "skipped" : leibniz ? "pass" : "fail");
        s.add("curvature paths" + at, c.curvature() == c.curvature_operator() ? "pass" : "fail");
        s.add("bianchi" + at, dg::bianchi_check(c) ? "pass" : "fail");
    }

    if (const auto bad = brane::compatibility_defect(f, m.base)) {
        const json why = "family is not compatible with delta at index " + std::to_string(*bad);
        s.add("gauge field", "skipped", why);
        s.add("euler-poincare", "skipped", why);
        s.add("cone additivity", "skipped", why);
        return s;
    }
    s.add("gauge field", brane::verify(GaugeField::from_connections(f, m.base)).ok() ? "pass" : "fail");

    try {
        const auto ep = ym::euler_poincare_check(f, m.base, m.mode, m.points());
        s.add("euler-poincare", ep.equal() ? "pass" : "fail",
              json{{"terms", ep.terms.to_string()}, {"cohomology", ep.cohomology.to_string()}});

        ChainMap id;
        for (int i : f.indices())
            id.components[i] = exact::poly_identity(m.ring, f.rank(i));
        const auto cone = ym::cone_ym(f, m.base, f, m.base, id, m.mode, m.points());
        const bool ok = cone.additive() && cone.additive_terms() && cone.cone.cohomology.is_zero();
        s.add("cone additivity", ok ? "pass" : "fail",
              json{{"cone_cohomology", cone.cone.cohomology.to_string()}, {"cone_terms", cone.cone.terms.to_string()}});

        const auto h = brane::cohomology(f, m.points());
        const GaugeField psi = GaugeField::from_connections(f, m.base);
        for (const auto& [name, xi] : m.variations) {
            const auto st = ym::stationarity_check(psi, xi, h, m.mode);
            s.add("stationarity[" + name + "]", st.agree ? "pass" : "fail",
                  json{{"pairing", st.pairing.to_string()}, {"abs_error", static_cast<double>(st.abs_error)}});
        }
    } catch (const RankJump& e) {
        s.add("euler-poincare", "skipped", std::string(e.kind()) + ": " + e.what());
    }
    return s;
}

Model fuzz_model(exact::RandomSource& rs, int k)
{
    const Ring ring{2, 4};
    const auto inst = ym::random_stationarity_instance(rs, ring, false);
    Model m;
    m.ring = ring;
    const auto& f = inst.psi.complex;
    m.ranks = f.ranks();
    for (int i : f.indices())
        if (f.ranks().count(i + 1))
            m.deltas[i] = f.delta(i);
    m.base = inst.psi.b;
    m.variations.emplace_back("xi", inst.xi);
    m.mode = k % 2 ? exact::PairingMode::bilinear : exact::PairingMode::hermitian;
    return m;
}

int cmd_check(Report& r, const std::optional<Model>& model, int fuzz, std::uint64_t seed)
{
    bool pass = true;
    if (model) {
        const auto s = identity_suite(*model);
        r.set("checks", s.checks, false);
        pass = s.pass;
    }
    if (fuzz > 0) {
        exact::RandomSource rs(seed);
        json runs = json::array();
        int failures = 0;
        for (int k = 0; k < fuzz; ++k) {
            const Model m = fuzz_model(rs, k);
            const auto s = identity_suite(m);
            json run{{"instance", k}, {"pass", s.pass}, {"checks", s.checks.size()}};
            if (!s.pass) {
                ++failures;
                run["failing"] = s.checks;
                run["model"] = model_to_json(m);
            }
            runs.push_back(std::move(run));
        }
        r.set("fuzz", json{{"instances", fuzz}, {"seed", seed}, {"failures", failures}, {"runs", runs}}, false);
        pass = pass && failures == 0;
    }
    if (!model && fuzz <= 0)
        throw ParseError("check needs a model file or --fuzz N");
    r.set("all_pass", pass, false);
    return pass ? kOk : kIdentityFailure;
}

/// Drops flags that change only the rendering or the worker count.
std::vector<std::string> echo_args(const std::vector<std::string>& args)
{
    std::vector<std::string> out;
    for (std::size_t k = 0; k < args.size(); ++k) {
        const auto& a = args[k];
        if (a == "--output" || a == "--threads") {
            ++k;
            continue;
        }
        if (a.rfind("--output=", 0) == 0 || a.rfind("--threads=", 0) == 0)
            continue;
        out.push_back(a);
    }
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact gauge-field and Yang-Mills computations on polynomial branes"};
    app.name("holobrane");
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    std::string output = "json";
    std::uint64_t seed = 0;
    double tol = 0;
    app.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "table"}));
    auto* seed_opt = app.add_option("--seed", seed, "Random seed for the solver and fuzzing");
    auto* tol_opt = app.add_option("--tol", tol, "Solver residual tolerance");
    app.add_option("--threads", g.threads, "Solver worker threads")->check(CLI::Range(1, 64));

    int n = 3;
    std::string perm, catalog_path, model_path, lambda_text;
    bool flag3 = false;
    int form_degree = 1, starts = 0, fuzz = 0;
    std::optional<int> cap;

    auto* schubert_cmd = app.add_subcommand("schubert", "Bruhat order, smoothness and strata");
    schubert_cmd->require_subcommand(1);
    auto* order = schubert_cmd->add_subcommand("order", "Covering relations of S_n");
    order->add_option("--n", n, "Permutation size")->required();
    auto* smooth = schubert_cmd->add_subcommand("smooth", "Singularity criterion");
    smooth->add_option("--perm", perm, "One-line notation")->required();
    auto* strata = schubert_cmd->add_subcommand("strata", "Stratification catalog and verdicts");
    strata->add_flag("--flag3", flag3, "Complete flags of C^3");
    strata->add_option("--catalog", catalog_path, "Catalog JSON file");
    auto* closure = schubert_cmd->add_subcommand("closure", "Schubert variety as a set of cells");
    closure->add_option("--perm", perm, "One-line notation")->required();

    auto* complex_cmd = app.add_subcommand("complex", "Brane complex computations");
    complex_cmd->require_subcommand(1);
    auto* cohom = complex_cmd->add_subcommand("cohomology", "Cohomology ranks");
    cohom->add_option("model", model_path)->required();
    auto* gauge = complex_cmd->add_subcommand("gauge", "Gauge fields");
    gauge->require_subcommand(1);
    auto* gauge_solve = gauge->add_subcommand("solve", "Existence and affine structure");
    gauge_solve->add_option("model", model_path)->required();
    auto* hom = complex_cmd->add_subcommand("hom", "H^0 of Hom(F, Omega^k F)");
    hom->add_option("model", model_path)->required();
    hom->add_option("--form-degree", form_degree, "k")->check(CLI::Range(0, 8));
    hom->add_option("--cap", cap, "Coefficient cap of Hom^0");

    auto* ym_cmd = app.add_subcommand("ym", "Yang-Mills functional");
    ym_cmd->require_subcommand(1);
    auto* poly = ym_cmd->add_subcommand("polynomial", "Exact P(lambda)");
    poly->add_option("model", model_path)->required();
    auto* solve = ym_cmd->add_subcommand("solve", "Critical points of P");
    solve->add_option("model", model_path)->required();
    solve->add_option("--starts", starts, "Newton starts")->check(CLI::Range(1, 100000));
    auto* value = ym_cmd->add_subcommand("value", "YM at a parameter");
    value->add_option("model", model_path)->required();
    value->add_option("--lambda", lambda_text, "Comma separated exact scalars");
    auto* ymcheck = ym_cmd->add_subcommand("check", "Stationarity and orthogonality at a parameter");
    ymcheck->add_option("model", model_path)->required();
    ymcheck->add_option("--lambda", lambda_text, "Comma separated exact scalars");

    auto* check = app.add_subcommand("check", "Identity suite");
    check->add_option("model", model_path);
    check->add_option("--fuzz", fuzz, "Random models to test")->check(CLI::Range(0, 100000));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e, out, err);
        err << "error[ParseError]: " << e.what() << "\n";
        return kParseError;
    }
    g.format = output == "table" ? OutputFormat::table : OutputFormat::json;
    if (seed_opt->count())
        g.seed = seed;
    if (tol_opt->count())
        g.tol = tol;

    const auto echoed = echo_args(args);
    Report report;
    for (const auto& a : echoed)
        report.command += (report.command.empty() ? "" : " ") + a;
    std::vector<std::string> files;
    int code = kOk;

    auto load = [&] {
        files.push_back(read_file(model_path));
        return parse_model_text(files.back());
    };

    try {
        if (order->parsed()) {
            cmd_schubert_order(report, n);
        } else if (smooth->parsed()) {
            cmd_schubert_smooth(report, perm);
        } else if (closure->parsed()) {
            cmd_schubert_closure(report, perm);
        } else if (strata->parsed()) {
            cmd_schubert_strata(report, flag3, catalog_path, files);
        } else if (cohom->parsed()) {
            const auto m = load();
            try {
                cmd_cohomology(report, m);
            } catch (const RankJump& e) {
                report.digest = inputs_digest(echoed, files);
                out << render(report, g.format);
                err << "error[" << e.kind() << "]: " << e.what() << "\n";
                return kNumericalFailure;
            }
        } else if (gauge_solve->parsed()) {
            code = cmd_gauge_solve(report, load());
        } else if (hom->parsed()) {
            cmd_hom(report, load(), form_degree, cap);
        } else if (poly->parsed()) {
            cmd_ym_polynomial(report, load());
        } else if (solve->parsed()) {
            const auto m = load();
            ym::SolverConfig cfg = m.solver;
            if (g.seed)
                cfg.seed = *g.seed;
            if (g.tol)
                cfg.tol = *g.tol;
            if (starts > 0)
                cfg.starts = starts;
            cfg.threads = g.threads;
            cmd_ym_solve(report, m, cfg);
        } else if (value->parsed()) {
            cmd_ym_value(report, load(), lambda_text);
        } else if (ymcheck->parsed()) {
            code = cmd_ym_check(report, load(), lambda_text);
        } else if (check->parsed()) {
            std::optional<Model> m;
            if (!model_path.empty())
                m = load();
            code = cmd_check(report, m, fuzz, g.seed.value_or(1));
        }
    } catch (const Error& e) {
        err << "error[" << e.kind() << "]: " << e.what() << "\n";
        return exit_code_for(e);
    }
    report.digest = inputs_digest(echoed, files);
    out << render(report, g.format);
    if (code == kObstruction)
        err << "gauge field obstructed: " << report.results.value("obstruction", std::string()) << "\n";
    return code;
}

} // namespace holo::cli
