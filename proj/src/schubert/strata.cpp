#include "holo/schubert/strata.hpp"

#include <algorithm>
#include <set>

#include "holo/errors.hpp"

namespace holo::schubert {

const Generator& StrataCatalog::generator(const std::string& label) const
{
    for (const auto& g : generators)
        if (g.label == label)
            return g;
    throw UnknownLabel("no generator labeled '" + label + "'");
}

const Stratum* StrataCatalog::stratum(const std::string& label) const
{
    for (const auto& z : tower)
        if (z.label == label)
            return &z;
    return nullptr;
}

std::vector<std::string> UniquenessVerdict::failing() const
{
    std::vector<std::string> out;
    for (const auto& c : conditions)
        if (!c.holds)
            out.push_back(c.name);
    return out;
}

StrataCatalog flag3_catalog()
{
    StrataCatalog cat;
    const char* words[] = {"321", "312", "231", "132", "213", "123"};
    for (int k = 0; k < 6; ++k) {
        const auto w = Permutation::parse(words[k]);
        cat.cells.push_back(Cell{"C" + std::to_string(k + 1), w, w.length()});
    }
    auto label_of = [&](const Permutation& w) {
        for (const auto& c : cat.cells)
            if (c.w == w)
                return c.label;
        throw UnknownLabel("permutation " + w.to_string() + " is not a cell of the catalog");
    };

    const std::vector<std::vector<int>> comps = {{0}, {1, 2}, {3, 4}, {5}};
    for (std::size_t k = 0; k < comps.size(); ++k) {
        Stratum z;
        z.label = "Z" + std::to_string(k);
        std::set<std::string> inside;
        for (int c : comps[k]) {
            z.components.push_back(cat.cells[c].label);
            z.dimension = std::max(z.dimension, cat.cells[c].dimension);
            for (const auto& v : schubert_closure(cat.cells[c].w))
                inside.insert(label_of(v));
        }
        for (const auto& c : cat.cells)
            if (inside.count(c.label))
                z.cells.push_back(c.label);
        if (k > 0) {
            const auto& prev = cat.tower.back();
            z.codim_one = prev.dimension - z.dimension == 1;
            // the complement is a disjoint union of cells, each an affine space
            z.affine_complement = true;
            for (const auto& c : prev.cells)
                if (!inside.count(c)) {
                    bool is_open_cell = false;
                    for (const auto& top : prev.components)
                        is_open_cell = is_open_cell || top == c;
                    z.affine_complement = z.affine_complement && is_open_cell;
                }
        }
        cat.tower.push_back(std::move(z));
        cat.hodge[cat.tower.back().label] = 0;
    }

    cat.generators = {
        {"L1", "C1", "Z0", "-C2-C3", "Z1"},
        {"L2", "C2", "Z1", "-C3", "Z2"},
        {"L3", "C3", "Z1", "-C2", "Z2"},
        {"L4", "C4", "Z2", "-C5", "Z3"},
        {"L5", "C5", "Z2", "-C4", "Z3"},
        {"L6", "C6", "Z3", "skyscraper", "Z3"},
    };
    return cat;
}

HomVerdict hom_vanishing_verdict(const StrataCatalog& catalog, const std::string& r, const std::string& s)
{
    const Generator& a = catalog.generator(r);
    const Generator& b = catalog.generator(s);
    HomVerdict v;
    if (r != s) {
        v.vanishes = a.support != b.support;
        v.reason = v.vanishes ? "disjoint-support" : "shared-support";
        v.detail = r + " on " + a.support + ", " + s + " on " + b.support;
        return v;
    }
    const auto it = catalog.hodge.find(a.hodge_stratum);
    if (it == catalog.hodge.end())
        throw UnknownLabel("no h^{1,0} datum for stratum '" + a.hodge_stratum + "'");
    v.vanishes = it->second == 0;
    v.reason = v.vanishes ? "hodge-vanishing" : "hodge-nonzero";
    v.detail = "h^{1,0}(" + a.hodge_stratum + ") = " + std::to_string(it->second);
    return v;
}

UniquenessVerdict uniqueness_verdict(const StrataCatalog& catalog)
{
    UniquenessVerdict out;
    auto add = [&](std::string name, bool holds, std::string detail) {
        out.conditions.push_back(Condition{std::move(name), holds, std::move(detail)});
    };

    {
        bool nested = !catalog.tower.empty();
        std::string detail = nested ? "" : "empty tower";
        for (std::size_t k = 1; k < catalog.tower.size(); ++k) {
            const auto& outer = catalog.tower[k - 1].cells;
            for (const auto& c : catalog.tower[k].cells)
                if (std::find(outer.begin(), outer.end(), c) == outer.end()) {
                    nested = false;
                    detail = c + " lies in " + catalog.tower[k].label + " but not in " + catalog.tower[k - 1].label;
                }
        }
        add("strata nested", nested, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (const auto& z : catalog.tower)
            if (!z.codim_one) {
                ok = false;
                detail = z.label + " is not a hypersurface of its predecessor";
            }
        add("codimension-one strata", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (const auto& z : catalog.tower)
            if (!z.affine_complement) {
                ok = false;
                detail = "complement of " + z.label + " is not affine";
            }
        add("affine complements", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (const auto& z : catalog.tower) {
            const auto it = catalog.hodge.find(z.label);
            if (it == catalog.hodge.end() || it->second != 0) {
                ok = false;
                detail = it == catalog.hodge.end() ? "no h^{1,0} datum for " + z.label
                                                   : "h^{1,0}(" + z.label + ") = " + std::to_string(it->second);
            }
        }
        add("h10 vanishing", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        std::set<std::string> seen;
        for (const auto& g : catalog.generators) {
            bool known = false;
            for (const auto& c : catalog.cells)
                known = known || c.label == g.support;
            if (!known) {
                ok = false;
                detail = g.label + " is supported on unknown cell " + g.support;
            } else if (!seen.insert(g.support).second) {
                ok = false;
                detail = "two generators share cell " + g.support;
            }
        }
        add("supports pairwise disjoint", ok, detail);
    }
    for (const auto& a : catalog.generators)
        for (const auto& b : catalog.generators) {
            bool holds = false;
            std::string detail;
            try {
                const auto v = hom_vanishing_verdict(catalog, a.label, b.label);
                holds = v.vanishes;
                detail = v.reason + ": " + v.detail;
            } catch (const UnknownLabel& e) {
                detail = e.what();
            }
            add("Hom(" + a.label + ", " + b.label + " (x) Omega^1) = 0", holds, detail);
        }

    out.at_most_one = std::all_of(out.conditions.begin(), out.conditions.end(),
                                  [](const Condition& c) { return c.holds; });
    return out;
}

} // namespace holo::schubert
