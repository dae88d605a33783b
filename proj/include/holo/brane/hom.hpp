#pragma once

#include <map>

#include "holo/brane/complex.hpp"
#include "holo/exact/coords.hpp"

namespace holo::brane {

struct HomOptions
{
    /// k for Hom(A, Omega^k(B)); the target differential is 1 (x) delta_B.
    int form_degree = 0;
    /// Coefficient cap in Hom^0; Hom^m uses base_cap + m e with e the largest
    /// differential degree, so delta_H maps each truncated space into the next.
    int base_cap = 0;
    int m_min = -1;
    int m_max = 1;
};

/// Element of Hom^m: components g^q : A^q -> Omega^k(B^{q+m}).
using HomCochain = std::map<int, FormMatrix>;

/// Truncated Hom complex Hom^m(A, Omega^k(B)) with
/// (delta_H g)^q = delta_B g^q + (-1)^{m+1} g^{q+1} delta_A.
class HomComplex
{
public:
    HomComplex(const BraneComplex& a, const BraneComplex& b, HomOptions opts);

    const HomOptions& options() const { return opts_; }
    int step() const { return e_; }
    int cap(int m) const { return opts_.base_cap + m * e_; }

    std::size_t dim(int m) const;
    /// Rank of delta_H^m : Hom^m -> Hom^{m+1}; needs m and m+1 in range.
    std::size_t delta_rank(int m) const;
    /// dim Hom^m - rank delta^m - rank delta^{m-1}; needs m-1..m+1 in range.
    std::size_t cohomology_dim(int m) const;

    HomCochain apply(int m, const HomCochain& g) const;
    HomCochain basis_element(int m, std::size_t idx) const;
    exact::SparseRow coordinates(int m, const HomCochain& g) const;
    HomCochain from_vector(int m, const std::vector<Scalar>& v) const;

private:
    struct Block
    {
        int q;
        exact::CoordinateSpace space;
        std::size_t offset;
    };
    const std::vector<Block>& blocks(int m) const;

    BraneComplex a_;
    BraneComplex b_;
    HomOptions opts_;
    int e_ = 0;
    std::map<int, std::vector<Block>> blocks_;
    mutable std::map<int, std::size_t> rank_cache_;
};

} // namespace holo::brane
