#include "holo/exact/matrix.hpp"

#include <bit>

namespace holo::exact {

namespace {

void check_inner(std::size_t a_cols, std::size_t b_rows, const char* where)
{
    if (a_cols != b_rows)
        throw DimensionMismatch(std::string(where) + ": inner dimensions " + std::to_string(a_cols) +
                                " and " + std::to_string(b_rows));
}

} // namespace

ScalarMatrix scalar_zero(std::size_t rows, std::size_t cols) { return ScalarMatrix(rows, cols, Scalar()); }

ScalarMatrix scalar_identity(std::size_t n)
{
    ScalarMatrix out = scalar_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        out(i, i) = Scalar(1);
    return out;
}

PolyMatrix poly_zero(Ring ring, std::size_t rows, std::size_t cols)
{
    return PolyMatrix(rows, cols, TruncPoly(ring));
}

PolyMatrix poly_identity(Ring ring, std::size_t n)
{
    PolyMatrix out = poly_zero(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        out(i, i) = TruncPoly::constant(ring, 1);
    return out;
}

FormMatrix form_zero(Ring ring, int degree, std::size_t rows, std::size_t cols)
{
    return FormMatrix(rows, cols, ExteriorForm(ring, degree));
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b)
{
    check_inner(a.cols(), b.rows(), "scalar matrix product");
    ScalarMatrix out = scalar_zero(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += x * b(k, j);
        }
    return out;
}

ScalarVector operator*(const ScalarMatrix& a, const ScalarVector& v)
{
    check_inner(a.cols(), v.size(), "matrix-vector product");
    ScalarVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero())
                out[i] += a(i, k) * v[k];
    return out;
}

ScalarMatrix operator*(const Scalar& c, const ScalarMatrix& a)
{
    ScalarMatrix out = a;
    for (auto& x : out.data())
        x *= c;
    return out;
}

ScalarMatrix adjoint(const ScalarMatrix& a)
{
    ScalarMatrix out = scalar_zero(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(j, i) = a(i, j).conj();
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    check_inner(a.cols(), b.rows(), "poly matrix product");
    PolyMatrix out(a.rows(), b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

PolyMatrix operator*(const Scalar& c, const PolyMatrix& a)
{
    PolyMatrix out = a;
    for (auto& x : out.data())
        x *= c;
    return out;
}

PolyMatrix to_poly(Ring ring, const ScalarMatrix& a)
{
    PolyMatrix out = poly_zero(ring, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = TruncPoly::constant(ring, a(i, j));
    return out;
}

ScalarMatrix evaluate(const PolyMatrix& a, const std::vector<Scalar>& point)
{
    ScalarMatrix out = scalar_zero(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j).evaluate(point);
    return out;
}

PolyMatrix with_trunc(const PolyMatrix& a, int trunc)
{
    PolyMatrix out(a.rows(), a.cols(), a.zero().with_trunc(trunc));
    for (std::size_t k = 0; k < a.data().size(); ++k)
        out.data()[k] = a.data()[k].with_trunc(trunc);
    return out;
}

int max_degree(const PolyMatrix& a)
{
    int d = -1;
    for (const auto& x : a.data())
        d = std::max(d, x.degree());
    return d;
}

FormMatrix operator*(const FormMatrix& a, const FormMatrix& b)
{
    check_inner(a.cols(), b.rows(), "form matrix product");
    FormMatrix out = form_zero(a.zero().ring(), a.zero().degree() + b.zero().degree(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += wedge(a(i, k), b(k, j));
        }
    return out;
}

FormMatrix operator*(const PolyMatrix& a, const FormMatrix& b)
{
    check_inner(a.cols(), b.rows(), "poly-form product");
    FormMatrix out = form_zero(b.zero().ring(), b.zero().degree(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

FormMatrix operator*(const FormMatrix& a, const PolyMatrix& b)
{
    check_inner(a.cols(), b.rows(), "form-poly product");
    FormMatrix out = form_zero(a.zero().ring(), a.zero().degree(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += b(k, j) * a(i, k);
        }
    return out;
}

FormMatrix operator*(const Scalar& c, const FormMatrix& a)
{
    FormMatrix out = a;
    for (auto& x : out.data())
        x = c * x;
    return out;
}

FormMatrix operator*(const TruncPoly& f, const FormMatrix& a)
{
    FormMatrix out = a;
    for (auto& x : out.data())
        x = f * x;
    return out;
}

PolyMatrix operator*(const TruncPoly& f, const PolyMatrix& a)
{
    PolyMatrix out = a;
    for (auto& x : out.data())
        x = f * x;
    return out;
}

FormMatrix operator*(const ScalarMatrix& a, const FormMatrix& b)
{
    return to_poly(b.zero().ring(), a) * b;
}

FormMatrix operator*(const FormMatrix& a, const ScalarMatrix& b)
{
    return a * to_poly(a.zero().ring(), b);
}

FormMatrix to_forms(const PolyMatrix& a)
{
    FormMatrix out = form_zero(a.zero().ring(), 0, a.rows(), a.cols());
    for (std::size_t k = 0; k < a.data().size(); ++k)
        out.data()[k] = ExteriorForm::function(a.data()[k]);
    return out;
}

FormMatrix d(const FormMatrix& a)
{
    FormMatrix out = form_zero(a.zero().ring(), a.zero().degree() + 1, a.rows(), a.cols());
    for (std::size_t k = 0; k < a.data().size(); ++k)
        out.data()[k] = a.data()[k].d();
    return out;
}

FormMatrix d(const PolyMatrix& a) { return d(to_forms(a)); }

FormMatrix with_trunc(const FormMatrix& a, int trunc)
{
    FormMatrix out(a.rows(), a.cols(), a.zero().with_trunc(trunc));
    for (std::size_t k = 0; k < a.data().size(); ++k)
        out.data()[k] = a.data()[k].with_trunc(trunc);
    return out;
}

int max_poly_degree(const FormMatrix& a)
{
    int d = -1;
    for (const auto& x : a.data())
        d = std::max(d, x.poly_degree());
    return d;
}

std::vector<PolyMatrix> split_one_form(const FormMatrix& a)
{
    const Ring ring = a.zero().ring();
    if (a.zero().degree() != 1)
        throw DegreeMismatch("split_one_form expects a matrix of 1-forms");
    std::vector<PolyMatrix> parts(ring.n_vars, poly_zero(ring, a.rows(), a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (const auto& [s, f] : a(i, j).components())
                parts[std::countr_zero(s)](i, j) = f;
    return parts;
}

FormMatrix join_one_form(Ring ring, const std::vector<PolyMatrix>& parts)
{
    if (static_cast<int>(parts.size()) != ring.n_vars)
        throw DimensionMismatch("one-form needs one matrix per dx");
    const std::size_t r = parts.empty() ? 0 : parts[0].rows();
    const std::size_t c = parts.empty() ? 0 : parts[0].cols();
    FormMatrix out = form_zero(ring, 1, r, c);
    for (int k = 0; k < ring.n_vars; ++k) {
        if (parts[k].rows() != r || parts[k].cols() != c)
            throw DimensionMismatch("one-form parts differ in shape");
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (!parts[k](i, j).is_zero())
                    out(i, j).add_component(IndexSet(1) << k, parts[k](i, j));
    }
    return out;
}

std::string to_string(const ScalarMatrix& a)
{
    std::string out = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < a.cols(); ++j)
            out += (j ? ", " : "") + a(i, j).to_string();
        out += "]";
    }
    return out + "]";
}

std::string to_string(const PolyMatrix& a)
{
    std::string out = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < a.cols(); ++j)
            out += (j ? ", " : "") + a(i, j).to_string();
        out += "]";
    }
    return out + "]";
}

} // namespace holo::exact
