#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "holo/exact/matrix.hpp"

namespace holo::exact {

using SparseRow = std::map<std::size_t, Scalar>;

/// Linear system given row by row; rows are sparse maps column -> coefficient.
struct SparseSystem
{
    std::size_t n_cols = 0;
    std::vector<SparseRow> rows;
    std::vector<Scalar> rhs;

    explicit SparseSystem(std::size_t cols = 0) : n_cols(cols) {}
    void add_row(SparseRow row, Scalar b = Scalar());
};

struct LinearSolution
{
    bool consistent = false;
    std::vector<Scalar> particular;
    std::vector<std::vector<Scalar>> kernel;
    std::size_t rank = 0;
    // Index of an input row whose reduction left 0 = b != 0; set when
    // inconsistent.
    std::optional<std::size_t> witness_row;
};

/// Exact RREF solve. Free variables are set to zero in the particular
/// solution; the kernel has one vector per free column.
LinearSolution solve_linear(const ScalarMatrix& m, const std::vector<Scalar>& b);
LinearSolution solve_sparse(const SparseSystem& sys, bool want_kernel = true);

std::size_t rank(const ScalarMatrix& m);
std::size_t sparse_rank(std::size_t n_cols, const std::vector<SparseRow>& rows);

/// Indices of the candidates that, taken in order, extend span(base) by one
/// dimension each. Together with base they span span(base + candidates).
std::vector<std::size_t> extend_basis(std::size_t n_cols, const std::vector<SparseRow>& base,
                                      const std::vector<SparseRow>& candidates);

/// Basis of the right kernel, one column per vector.
ScalarMatrix kernel_basis(const ScalarMatrix& m);
std::optional<ScalarMatrix> inverse(const ScalarMatrix& m);

} // namespace holo::exact
