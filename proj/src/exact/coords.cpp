#include "holo/exact/coords.hpp"

namespace holo::exact {

CoordinateSpace::CoordinateSpace(Ring ring, int degree, std::size_t rows, std::size_t cols, int cap)
    : ring_(ring), degree_(degree), rows_(rows), cols_(cols), cap_(cap)
{
    if (cap > ring.trunc)
        throw DegreeOverflow("coordinate cap " + std::to_string(cap) + " exceeds D=" + std::to_string(ring.trunc));
    if (cap < 0 || degree > ring.n_vars)
        return;
    const auto monos = monomials_up_to(ring.n_vars, cap);
    for (IndexSet s = 0; s < (IndexSet(1) << ring.n_vars); ++s) {
        if (popcount(s) != degree)
            continue;
        for (const auto& e : monos) {
            lookup_.emplace(std::make_pair(s, e), cell_.size());
            cell_.emplace_back(s, e);
        }
    }
}

FormMatrix CoordinateSpace::basis_element(std::size_t idx) const
{
    std::vector<Scalar> v(dim());
    v.at(idx) = Scalar(1);
    return from_vector(v);
}

FormMatrix CoordinateSpace::from_vector(const std::vector<Scalar>& v) const
{
    if (v.size() != dim())
        throw DimensionMismatch("coordinate vector length");
    FormMatrix out = form_zero(ring_, degree_, rows_, cols_);
    const std::size_t c = cell_.size();
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        const std::size_t entry = k / c;
        const auto& [s, e] = cell_[k % c];
        out(entry / cols_, entry % cols_).add_component(s, TruncPoly::monomial(ring_, e, v[k]));
    }
    return out;
}

SparseRow CoordinateSpace::to_sparse(const FormMatrix& m) const
{
    if (m.rows() != rows_ || m.cols() != cols_)
        throw DimensionMismatch("coordinate space " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " given " + m.shape());
    if (m.zero().degree() != degree_)
        throw DegreeMismatch("coordinate space form degree");
    SparseRow out;
    const std::size_t c = cell_.size();
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            for (const auto& [s, f] : m(i, j).components())
                for (const auto& [e, coeff] : f.terms()) {
                    auto it = lookup_.find({s, e});
                    if (it == lookup_.end())
                        throw DegreeOverflow("coefficient of degree " + std::to_string(total_degree(e)) +
                                             " outside coordinate cap " + std::to_string(cap_));
                    out.emplace((i * cols_ + j) * c + it->second, coeff);
                }
    return out;
}

std::vector<Scalar> CoordinateSpace::to_vector(const FormMatrix& m) const
{
    std::vector<Scalar> out(dim());
    for (auto& [k, v] : to_sparse(m))
        out[k] = v;
    return out;
}

PolyMatrix CoordinateSpace::poly_from_vector(const std::vector<Scalar>& v) const
{
    if (degree_ != 0)
        throw DegreeMismatch("poly_from_vector on a space of positive degree");
    FormMatrix f = from_vector(v);
    PolyMatrix out = poly_zero(ring_, rows_, cols_);
    for (std::size_t k = 0; k < f.data().size(); ++k)
        out.data()[k] = f.data()[k].component(0);
    return out;
}

SparseRow CoordinateSpace::poly_to_sparse(const PolyMatrix& m) const { return to_sparse(to_forms(m)); }

} // namespace holo::exact
