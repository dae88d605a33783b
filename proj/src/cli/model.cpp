#include "holo/cli/model.hpp"

#include <set>

#include "holo/errors.hpp"

namespace holo::cli {

using nlohmann::json;

BraneComplex Model::complex() const
{
    return BraneComplex(ring, ranks, deltas);
}

std::vector<Point> Model::points() const
{
    return eval_points.empty() ? brane::default_eval_points(ring) : eval_points;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ParseError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& field(const json& j, const std::string& where, const char* key)
{
    if (!j.is_object())
        fail(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end())
        fail(where, std::string("missing field '") + key + "'");
    return *it;
}

int as_int(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        fail(where, "expected an integer");
    return j.get<int>();
}

std::string as_string(const json& j, const std::string& where)
{
    if (!j.is_string())
        fail(where, "expected a string");
    return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& where)
{
    if (!j.is_array())
        fail(where, "expected an array");
    return j;
}

/// Polynomial entries may be strings or integers.
exact::TruncPoly poly_entry(const json& j, const std::string& where, Ring ring)
{
    try {
        if (j.is_number_integer())
            return exact::TruncPoly::constant(ring, Scalar(exact::Rational(j.get<long>())));
        return exact::TruncPoly::parse(as_string(j, where), ring);
    } catch (const ParseError& e) {
        if (std::string(e.what()).rfind("at /", 0) == 0)
            throw;
        fail(where, e.what());
    } catch (const DegreeOverflow& e) {
        fail(where, e.what());
    }
}

PolyMatrix poly_matrix(const json& j, const std::string& where, Ring ring, std::size_t rows, std::size_t cols)
{
    as_array(j, where);
    if (j.size() != rows)
        fail(where, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
    PolyMatrix m = exact::poly_zero(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rw = where + "/" + std::to_string(r);
        as_array(j[r], rw);
        if (j[r].size() != cols)
            fail(rw, "expected " + std::to_string(cols) + " columns, found " + std::to_string(j[r].size()));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = poly_entry(j[r][c], rw + "/" + std::to_string(c), ring);
    }
    return m;
}

/// One matrix per dx_k.
FormMatrix one_form(const json& j, const std::string& where, Ring ring, int rank)
{
    as_array(j, where);
    if (static_cast<int>(j.size()) != ring.n_vars)
        fail(where, "expected one matrix per dx (" + std::to_string(ring.n_vars) + "), found " +
                        std::to_string(j.size()));
    std::vector<PolyMatrix> parts;
    for (int k = 0; k < ring.n_vars; ++k)
        parts.push_back(poly_matrix(j[k], where + "/" + std::to_string(k), ring, rank, rank));
    return exact::join_one_form(ring, parts);
}

FormFamily family(const json& j, const std::string& where, const Model& m)
{
    as_array(j, where);
    FormFamily out;
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string w = where + "/" + std::to_string(e);
        const int idx = as_int(field(j[e], w, "index"), w + "/index");
        const auto it = m.ranks.find(idx);
        if (it == m.ranks.end())
            fail(w + "/index", "no module at index " + std::to_string(idx));
        if (out.count(idx))
            fail(w + "/index", "index " + std::to_string(idx) + " given twice");
        out[idx] = one_form(field(j[e], w, "one_form_matrix"), w + "/one_form_matrix", m.ring, it->second);
    }
    for (const auto& [idx, r] : m.ranks)
        if (!out.count(idx))
            fail(where, "no one_form_matrix for index " + std::to_string(idx));
    return out;
}

Point point(const json& j, const std::string& where, Ring ring)
{
    as_array(j, where);
    if (static_cast<int>(j.size()) != ring.n_vars)
        fail(where, "expected " + std::to_string(ring.n_vars) + " coordinates");
    Point p;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string w = where + "/" + std::to_string(k);
        try {
            p.push_back(Scalar::parse(as_string(j[k], w)));
        } catch (const ParseError& e) {
            if (std::string(e.what()).rfind("at /", 0) == 0)
                throw;
            fail(w, e.what());
        }
    }
    return p;
}

} // namespace

Model parse_model(const json& j)
{
    Model m;
    const json& ring = field(j, "", "ring");
    m.ring.n_vars = as_int(field(ring, "/ring", "n_vars"), "/ring/n_vars");
    m.ring.trunc = as_int(field(ring, "/ring", "trunc_degree"), "/ring/trunc_degree");
    if (m.ring.n_vars < 1 || m.ring.n_vars > 8)
        fail("/ring/n_vars", "must lie in 1..8");
    if (m.ring.trunc < 1)
        fail("/ring/trunc_degree", "must be positive");

    const json& modules = as_array(field(j, "", "modules"), "/modules");
    if (modules.empty())
        fail("/modules", "at least one module is required");
    for (std::size_t k = 0; k < modules.size(); ++k) {
        const std::string w = "/modules/" + std::to_string(k);
        const int idx = as_int(field(modules[k], w, "index"), w + "/index");
        const int rank = as_int(field(modules[k], w, "rank"), w + "/rank");
        if (rank < 0)
            fail(w + "/rank", "must be nonnegative");
        if (!m.ranks.emplace(idx, rank).second)
            fail(w + "/index", "index " + std::to_string(idx) + " given twice");
    }
    for (int i = m.ranks.begin()->first; i <= m.ranks.rbegin()->first; ++i)
        if (!m.ranks.count(i))
            fail("/modules", "indices must be consecutive; " + std::to_string(i) + " is missing");

    if (j.contains("differentials")) {
        const json& ds = as_array(j["differentials"], "/differentials");
        for (std::size_t k = 0; k < ds.size(); ++k) {
            const std::string w = "/differentials/" + std::to_string(k);
            const int from = as_int(field(ds[k], w, "from_index"), w + "/from_index");
            if (!m.ranks.count(from) || !m.ranks.count(from + 1))
                fail(w + "/from_index", "needs modules at " + std::to_string(from) + " and " +
                                            std::to_string(from + 1));
            if (m.deltas.count(from))
                fail(w + "/from_index", "differential given twice");
            m.deltas[from] = poly_matrix(field(ds[k], w, "matrix"), w + "/matrix", m.ring, m.ranks.at(from + 1),
                                         m.ranks.at(from));
        }
    }

    if (j.contains("base_connections"))
        m.base = family(j["base_connections"], "/base_connections", m);

    if (j.contains("variations")) {
        const json& vs = as_array(j["variations"], "/variations");
        std::set<std::string> names;
        for (std::size_t k = 0; k < vs.size(); ++k) {
            const std::string w = "/variations/" + std::to_string(k);
            std::string name = as_string(field(vs[k], w, "name"), w + "/name");
            if (!names.insert(name).second)
                fail(w + "/name", "variation '" + name + "' given twice");
            m.variations.emplace_back(name, family(field(vs[k], w, "family"), w + "/family", m));
        }
    }

    if (j.contains("pairing")) {
        const std::string w = "/pairing/mode";
        const std::string mode = as_string(field(j["pairing"], "/pairing", "mode"), w);
        try {
            m.mode = exact::parse_pairing_mode(mode);
        } catch (const ParseError& e) {
            fail(w, e.what());
        }
    }

    if (j.contains("solver")) {
        const json& s = j["solver"];
        if (!s.is_object())
            fail("/solver", "expected an object");
        if (s.contains("starts"))
            m.solver.starts = as_int(s["starts"], "/solver/starts");
        if (s.contains("seed")) {
            if (!s["seed"].is_number_unsigned())
                fail("/solver/seed", "expected a nonnegative integer");
            m.solver.seed = s["seed"].get<std::uint64_t>();
        }
        if (s.contains("tol")) {
            if (!s["tol"].is_number())
                fail("/solver/tol", "expected a number");
            m.solver.tol = s["tol"].get<double>();
        }
        if (s.contains("max_iter"))
            m.solver.max_iter = as_int(s["max_iter"], "/solver/max_iter");
        if (m.solver.starts < 1)
            fail("/solver/starts", "must be positive");
    }

    if (j.contains("eval_points")) {
        const json& ps = as_array(j["eval_points"], "/eval_points");
        for (std::size_t k = 0; k < ps.size(); ++k)
            m.eval_points.push_back(point(ps[k], "/eval_points/" + std::to_string(k), m.ring));
    }
    return m;
}

Model parse_model_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_model(j);
}

json poly_matrix_json(const PolyMatrix& a)
{
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c)
            row.push_back(a(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json one_form_json(const FormMatrix& a)
{
    json out = json::array();
    for (const auto& part : exact::split_one_form(a))
        out.push_back(poly_matrix_json(part));
    return out;
}

json form_json(const FormMatrix& a)
{
    std::map<exact::IndexSet, PolyMatrix> parts;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            for (const auto& [set, f] : a(r, c).components()) {
                auto it = parts.find(set);
                if (it == parts.end())
                    it = parts.emplace(set, exact::poly_zero(f.ring(), a.rows(), a.cols())).first;
                it->second(r, c) = f;
            }
    json out = json::object();
    for (const auto& [set, m] : parts)
        out[exact::index_set_string(set)] = poly_matrix_json(m);
    return out;
}

json model_to_json(const Model& m)
{
    json j;
    j["ring"] = {{"n_vars", m.ring.n_vars}, {"trunc_degree", m.ring.trunc}};
    j["modules"] = json::array();
    for (const auto& [idx, r] : m.ranks)
        j["modules"].push_back({{"index", idx}, {"rank", r}});
    j["differentials"] = json::array();
    for (const auto& [idx, d] : m.deltas)
        j["differentials"].push_back({{"from_index", idx}, {"matrix", poly_matrix_json(d)}});
    auto fam = [](const FormFamily& f) {
        json out = json::array();
        for (const auto& [idx, a] : f)
            out.push_back({{"index", idx}, {"one_form_matrix", one_form_json(a)}});
        return out;
    };
    if (m.has_base())
        j["base_connections"] = fam(m.base);
    j["variations"] = json::array();
    for (const auto& [name, f] : m.variations)
        j["variations"].push_back({{"name", name}, {"family", fam(f)}});
    j["pairing"] = {{"mode", exact::to_string(m.mode)}};
    j["solver"] = {{"starts", m.solver.starts},
                   {"seed", m.solver.seed},
                   {"tol", m.solver.tol},
                   {"max_iter", m.solver.max_iter}};
    if (!m.eval_points.empty()) {
        j["eval_points"] = json::array();
        for (const auto& p : m.eval_points) {
            json row = json::array();
            for (const auto& x : p)
                row.push_back(x.to_string());
            j["eval_points"].push_back(std::move(row));
        }
    }
    return j;
}

} // namespace holo::cli
