#pragma once

#include <map>
#include <string>
#include <vector>

#include "holo/schubert/permutation.hpp"

namespace holo::schubert {

/// Schubert cell C_w^0, an affine space of dimension l(w).
struct Cell
{
    std::string label;
    Permutation w;
    int dimension = 0;
};

/// A member Z_k of the tower Z_0 > Z_1 > ..., a union of Schubert varieties.
struct Stratum
{
    std::string label;
    /// Schubert varieties whose union is Z_k.
    std::vector<std::string> components;
    /// Every cell inside Z_k (closure of the components), in catalog order.
    std::vector<std::string> cells;
    int dimension = 0;
    /// Z_k is a hypersurface of Z_{k-1} (trivially true for Z_0).
    bool codim_one = true;
    /// Z_{k-1} minus Z_k is affine (trivially true for Z_0).
    bool affine_complement = true;
};

/// A generator L_k of the derived category, carried as labeled data.
struct Generator
{
    std::string label;
    /// The cell C_k^0 that contains its support.
    std::string support;
    /// Stratum whose structure sheaf twists to the generator.
    std::string ambient;
    /// "-C2-C3", "-C3", "skyscraper", ...
    std::string divisor;
    /// Stratum whose h^{1,0} equals dim Hom(L_k, L_k (x) Omega^1).
    std::string hodge_stratum;
};

struct StrataCatalog
{
    std::vector<Cell> cells;
    std::vector<Stratum> tower;
    std::vector<Generator> generators;
    /// Stratum label -> h^{1,0}; supplied data, not computed.
    std::map<std::string, int> hodge;

    const Generator& generator(const std::string& label) const;
    const Stratum* stratum(const std::string& label) const;
};

/// The complete flags of C^3 with cells w1..w6 = 321, 312, 231, 132, 213, 123.
StrataCatalog flag3_catalog();

struct HomVerdict
{
    bool vanishes = false;
    /// "disjoint-support", "hodge-vanishing", "shared-support" or "hodge-nonzero".
    std::string reason;
    std::string detail;
};

/// Throws UnknownLabel for labels outside the catalog.
HomVerdict hom_vanishing_verdict(const StrataCatalog& catalog, const std::string& r, const std::string& s);

struct Condition
{
    std::string name;
    bool holds = false;
    std::string detail;
};

struct UniquenessVerdict
{
    bool at_most_one = false;
    std::vector<Condition> conditions;

    /// Names of the conditions that fail.
    std::vector<std::string> failing() const;
};

/// At most one gauge field on every brane when the tower hypotheses hold
/// and every Hom(L_r, L_s (x) Omega^1) vanishes.
UniquenessVerdict uniqueness_verdict(const StrataCatalog& catalog);

} // namespace holo::schubert
