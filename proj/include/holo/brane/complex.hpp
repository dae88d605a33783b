#pragma once

#include <map>
#include <optional>
#include <vector>

#include "holo/dg/connection.hpp"

namespace holo::brane {

using dg::FormValued;
using dg::FreeModule;
using dg::HomElement;
using exact::FormMatrix;
using exact::PolyMatrix;
using exact::Ring;
using exact::Scalar;
using exact::ScalarMatrix;
using exact::TruncPoly;

/// First nonzero entry of some delta^{i+1} delta^i.
struct SquareDefect
{
    int index = 0;
    std::size_t row = 0;
    std::size_t col = 0;
    TruncPoly value;
};

/// Bounded complex of free modules; delta^i maps term i to term i+1 and is
/// stored as an r_{i+1} x r_i polynomial matrix.
class BraneComplex
{
public:
    BraneComplex() = default;
    /// Zero ranks are dropped. Throws NotAComplex if delta^2 != 0.
    BraneComplex(Ring ring, std::map<int, int> ranks, std::map<int, PolyMatrix> deltas);

    static BraneComplex single(Ring ring, int rank, int index = 0);
    /// First nonzero entry of some delta^{i+1} delta^i.
    static std::optional<SquareDefect> square_defect(const std::map<int, PolyMatrix>& deltas);

    const Ring& ring() const { return ring_; }
    int rank(int i) const;
    FreeModule module(int i) const { return FreeModule{rank(i), ring_}; }
    const std::map<int, int>& ranks() const { return ranks_; }
    /// Indices with nonzero rank, ascending.
    std::vector<int> indices() const;
    bool empty() const { return ranks_.empty(); }
    int min_index() const;
    int max_index() const;
    int total_rank() const;

    /// delta^i, an explicit zero matrix when absent.
    PolyMatrix delta(int i) const;
    /// Maximum polynomial degree among the differentials (0 if all constant).
    int diff_degree() const;
    bool has_constant_differentials() const { return diff_degree() == 0; }

    BraneComplex with_trunc(int trunc) const;

private:
    Ring ring_;
    std::map<int, int> ranks_;
    std::map<int, PolyMatrix> deltas_;
};

/// Components f^i : A^i -> B^i.
struct ChainMap
{
    std::map<int, PolyMatrix> components;

    PolyMatrix at(const BraneComplex& a, const BraneComplex& b, int i) const;
};

bool is_chain_map(const BraneComplex& a, const BraneComplex& b, const ChainMap& f);

/// A (+) B with block-diagonal differentials.
BraneComplex direct_sum(const BraneComplex& a, const BraneComplex& b);

/// Terms A^{i+l} with differential (-1)^l delta.
BraneComplex shift(const BraneComplex& a, int l);

/// Cone(f)^i = A^{i+1} (+) B^i with delta_C(a, b) = (delta a, (-1)^{i+1} f a + delta b).
BraneComplex cone(const BraneComplex& a, const BraneComplex& b, const ChainMap& f);

/// Jet complex J^1(F): term i has raw rank r_i (1 + n), laid out as
/// (sigma, beta_1, ..., beta_n) where beta = sum_k beta_k dx_k. The
/// differential is delta (+) (1 (x) delta).
struct JetComplex
{
    BraneComplex base;
    BraneComplex raw;

    static JetComplex of(const BraneComplex& f);
    /// pi^i : J^i -> F^i and iota^i : Omega^1(F^i) -> J^i as raw matrices.
    PolyMatrix pi(int i) const;
    PolyMatrix iota(int i) const;
};

} // namespace holo::brane
