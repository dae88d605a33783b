#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holo/brane/complex.hpp"

namespace holo::brane {

/// Index -> End-valued form matrix on that term; used for connection
/// families, variations and affine directions.
using FormFamily = std::map<int, FormMatrix>;

/// Gauge field psi : F -> J^1(F). On the basis of F^i, psi^i(e_a) =
/// (S^i e_a, B^i e_a); h^i : F^i -> F^{i-1} witnesses pi o psi - id = delta h + h delta.
struct GaugeField
{
    BraneComplex complex;
    std::map<int, PolyMatrix> s;
    FormFamily b;
    std::map<int, PolyMatrix> h;

    PolyMatrix s_at(int i) const;
    FormMatrix b_at(int i) const;
    PolyMatrix h_at(int i) const;
    bool strict() const;

    /// Gauge field with S = I, h = 0 and B^i = A^i. Throws NotCompatible
    /// unless delta A^i = A^{i+1} delta + d(delta) for every i.
    static GaugeField from_connections(const BraneComplex& f, const FormFamily& a);

    /// psi + c xi, changing only the B part.
    GaugeField shifted(const FormFamily& xi, const Scalar& c = Scalar(1)) const;
};

/// Index of the first term where delta A^i = A^{i+1} delta + d(delta) fails.
std::optional<int> compatibility_defect(const BraneComplex& f, const FormFamily& a);

struct GaugeCheck
{
    bool chain_map = false;
    bool homotopy = false;
    bool ok() const { return chain_map && homotopy; }
};

/// Substitution check of both defining identities.
GaugeCheck verify(const GaugeField& g);

struct GaugeOptions
{
    /// Coefficient cap for S and B; h uses cap - e. Negative means D - e.
    int unknown_cap = -1;
};

struct GaugeSolution
{
    bool exists = false;
    /// True when a solution with S = I and h = 0 was found.
    bool strict = false;
    std::optional<GaugeField> field;
    /// Representatives of Z^0 / B^0 in Hom^0(F, Omega^1 F); the solution set
    /// modulo homotopy is field + span(affine_basis).
    std::vector<FormFamily> affine_basis;
    int unknown_cap = 0;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::string obstruction;
};

GaugeSolution gauge_solve(const BraneComplex& f, GaugeOptions opts = {});

/// Generators delta H + H delta of B^0 with H at coefficient cap `cap`.
std::vector<FormFamily> homotopy_directions(const BraneComplex& f, int cap);

} // namespace holo::brane
