#include "holo/exact/linear.hpp"

namespace holo::exact {

void SparseSystem::add_row(SparseRow row, Scalar b)
{
    for (auto it = row.begin(); it != row.end();) {
        if (it->first >= n_cols)
            throw DimensionMismatch("sparse row column out of range");
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
}

namespace {

// Row echelon form built incrementally. Each pivot row has leading
// coefficient 1 at its pivot column and no entries to the left of it.
class Echelon
{
public:
    explicit Echelon(std::size_t n_cols) : n_cols_(n_cols) {}

    // Returns false when the row reduces to 0 = b with b != 0.
    bool insert(SparseRow row, Scalar b)
    {
        return insert_impl(std::move(row), std::move(b)) != Outcome::inconsistent;
    }

    // True when the row was independent of the rows seen so far.
    bool add_independent(SparseRow row)
    {
        return insert_impl(std::move(row), Scalar()) == Outcome::new_pivot;
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    enum class Outcome { new_pivot, dependent, inconsistent };

    Outcome insert_impl(SparseRow row, Scalar b)
    {
        auto it = row.begin();
        while (it != row.end()) {
            auto pv = pivots_.find(it->first);
            if (pv == pivots_.end()) {
                ++it;
                continue;
            }
            const std::size_t c = it->first;
            const Scalar factor = it->second;
            for (const auto& [j, v] : pv->second.row) {
                if (j == c)
                    continue;
                Scalar& slot = row[j];
                slot -= factor * v;
                if (slot.is_zero())
                    row.erase(j);
            }
            if (!pv->second.b.is_zero())
                b -= factor * pv->second.b;
            row.erase(c);
            it = row.upper_bound(c);
        }
        if (row.empty())
            return b.is_zero() ? Outcome::dependent : Outcome::inconsistent;
        const std::size_t c = row.begin()->first;
        const Scalar inv = row.begin()->second.inverse();
        for (auto& [j, v] : row)
            v *= inv;
        b *= inv;
        pivots_.emplace(c, Pivot{std::move(row), std::move(b)});
        return Outcome::new_pivot;
    }

public:
    // Back substitution with the given values on free columns.
    std::vector<Scalar> back_substitute(const std::vector<Scalar>& free_values, bool use_rhs) const
    {
        std::vector<Scalar> x = free_values;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const std::size_t c = it->first;
            Scalar v = use_rhs ? it->second.b : Scalar();
            for (const auto& [j, a] : it->second.row)
                if (j != c && !x[j].is_zero())
                    v -= a * x[j];
            x[c] = v;
        }
        return x;
    }

    std::vector<std::size_t> free_columns() const
    {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n_cols_; ++j)
            if (!pivots_.count(j))
                out.push_back(j);
        return out;
    }

private:
    struct Pivot
    {
        SparseRow row;
        Scalar b;
    };
    std::size_t n_cols_;
    std::map<std::size_t, Pivot> pivots_;
};

} // namespace

LinearSolution solve_sparse(const SparseSystem& sys, bool want_kernel)
{
    if (sys.rows.size() != sys.rhs.size())
        throw DimensionMismatch("sparse system rhs length");
    Echelon ech(sys.n_cols);
    LinearSolution out;
    out.consistent = true;
    for (std::size_t i = 0; i < sys.rows.size(); ++i)
        if (!ech.insert(sys.rows[i], sys.rhs[i]) && out.consistent) {
            out.consistent = false;
            out.witness_row = i;
        }
    out.rank = ech.rank();
    if (!out.consistent)
        return out;
    const std::vector<Scalar> zeros(sys.n_cols);
    out.particular = ech.back_substitute(zeros, true);
    if (want_kernel)
        for (std::size_t f : ech.free_columns()) {
            std::vector<Scalar> seed = zeros;
            seed[f] = Scalar(1);
            out.kernel.push_back(ech.back_substitute(seed, false));
        }
    return out;
}

namespace {

SparseSystem to_sparse(const ScalarMatrix& m, const std::vector<Scalar>& b)
{
    SparseSystem sys(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseRow row;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                row.emplace(j, m(i, j));
        sys.add_row(std::move(row), b.empty() ? Scalar() : b[i]);
    }
    return sys;
}

} // namespace

LinearSolution solve_linear(const ScalarMatrix& m, const std::vector<Scalar>& b)
{
    if (b.size() != m.rows())
        throw DimensionMismatch("solve_linear: rhs has " + std::to_string(b.size()) + " entries for " +
                                std::to_string(m.rows()) + " rows");
    return solve_sparse(to_sparse(m, b));
}

std::size_t sparse_rank(std::size_t n_cols, const std::vector<SparseRow>& rows)
{
    Echelon ech(n_cols);
    for (const auto& r : rows)
        ech.insert(r, Scalar());
    return ech.rank();
}

std::vector<std::size_t> extend_basis(std::size_t n_cols, const std::vector<SparseRow>& base,
                                      const std::vector<SparseRow>& candidates)
{
    Echelon ech(n_cols);
    for (const auto& r : base)
        ech.add_independent(r);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (ech.add_independent(candidates[k]))
            out.push_back(k);
    return out;
}

std::size_t rank(const ScalarMatrix& m)
{
    return solve_sparse(to_sparse(m, {}), false).rank;
}

ScalarMatrix kernel_basis(const ScalarMatrix& m)
{
    LinearSolution sol = solve_sparse(to_sparse(m, {}));
    ScalarMatrix out = scalar_zero(m.cols(), sol.kernel.size());
    for (std::size_t k = 0; k < sol.kernel.size(); ++k)
        for (std::size_t i = 0; i < m.cols(); ++i)
            out(i, k) = sol.kernel[k][i];
    return out;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    ScalarMatrix out = scalar_zero(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> e(n);
        e[j] = Scalar(1);
        LinearSolution sol = solve_linear(m, e);
        if (!sol.consistent || !sol.kernel.empty())
            return std::nullopt;
        for (std::size_t i = 0; i < n; ++i)
            out(i, j) = sol.particular[i];
    }
    return out;
}

} // namespace holo::exact
