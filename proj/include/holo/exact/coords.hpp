#pragma once

#include <map>
#include <utility>
#include <vector>

#include "holo/exact/linear.hpp"

namespace holo::exact {

/// Coordinates on the finite-dimensional space of rows x cols matrices of
/// k-forms whose coefficients have degree <= cap. Ordering: row, column,
/// index set, monomial.
class CoordinateSpace
{
public:
    CoordinateSpace() = default;
    CoordinateSpace(Ring ring, int degree, std::size_t rows, std::size_t cols, int cap);

    std::size_t dim() const { return rows_ * cols_ * cell_.size(); }
    std::size_t cell_dim() const { return cell_.size(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int degree() const { return degree_; }
    int cap() const { return cap_; }
    const Ring& ring() const { return ring_; }

    FormMatrix basis_element(std::size_t idx) const;
    FormMatrix from_vector(const std::vector<Scalar>& v) const;
    /// Throws DegreeOverflow if m has a coefficient beyond the cap.
    SparseRow to_sparse(const FormMatrix& m) const;
    std::vector<Scalar> to_vector(const FormMatrix& m) const;

    PolyMatrix poly_from_vector(const std::vector<Scalar>& v) const;
    SparseRow poly_to_sparse(const PolyMatrix& m) const;

private:
    Ring ring_;
    int degree_ = 0;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    int cap_ = 0;
    std::vector<std::pair<IndexSet, Exponent>> cell_;
    std::map<std::pair<IndexSet, Exponent>, std::size_t> lookup_;
};

} // namespace holo::exact
