#include "holo/dg/connection.hpp"

namespace holo::dg {

using exact::form_zero;

FormValued section(const PolyMatrix& column) { return exact::to_forms(column); }

Connection::Connection(FreeModule module, FormMatrix a) : module_(module), a_(std::move(a))
{
    if (module.rank < 1)
        throw DimensionMismatch("free module rank must be positive");
    if (a_.rows() != static_cast<std::size_t>(module.rank) || a_.cols() != static_cast<std::size_t>(module.rank))
        throw DimensionMismatch("connection matrix " + a_.shape() + " on a rank " + std::to_string(module.rank) +
                                " module");
    if (a_.zero().degree() != 1)
        throw DegreeMismatch("connection matrix must consist of 1-forms");
    exact::check_same_ring(a_.zero().ring(), module.ring, "connection");
}

Connection Connection::trivial(FreeModule module)
{
    return Connection(module, form_zero(module.ring, 1, module.rank, module.rank));
}

FormValued Connection::apply(const FormValued& s) const
{
    if (s.zero().degree() != 0)
        throw DegreeMismatch("connection applies to sections (0-forms)");
    return exact::d(s) + a_ * s;
}

FormValued Connection::extend(const FormValued& v) const
{
    const int k = v.zero().degree();
    const std::size_t r = module_.rank;
    if (v.rows() != r || v.cols() != 1)
        throw DimensionMismatch("extend expects an r x 1 column");
    FormValued out = form_zero(ring(), k + 1, r, 1);
    for (std::size_t a = 0; a < r; ++a) {
        const ExteriorForm& w = v(a, 0);
        if (w.is_zero())
            continue;
        out(a, 0) += w.d();
        // w ^ nabla(e_a), nabla(e_a) = column a of A
        for (std::size_t b = 0; b < r; ++b) {
            ExteriorForm term = exact::wedge(w, a_(b, a));
            out(b, 0) += (k % 2) ? -term : term;
        }
    }
    return out;
}

HomElement Connection::curvature() const { return exact::d(a_) + a_ * a_; }

HomElement Connection::curvature_operator() const
{
    const std::size_t r = module_.rank;
    HomElement out = form_zero(ring(), 2, r, r);
    for (std::size_t a = 0; a < r; ++a) {
        FormValued e = form_zero(ring(), 0, r, 1);
        e(a, 0) = ExteriorForm::function(TruncPoly::constant(ring(), 1));
        FormValued ke = extend(apply(e));
        for (std::size_t b = 0; b < r; ++b)
            out(b, a) = ke(b, 0);
    }
    return out;
}

Connection Connection::operator+(const HomElement& xi) const { return Connection(module_, a_ + xi); }

HomElement covariant_hom(const FormMatrix& a_target, const FormMatrix& a_source, const HomElement& b)
{
    const int p = b.zero().degree();
    HomElement right = b * a_source;
    return exact::d(b) + a_target * b - ((p % 2) ? -right : right);
}

HomElement covariant_end(const FormMatrix& a, const HomElement& b) { return covariant_hom(a, a, b); }

bool bianchi_check(const Connection& c) { return covariant_end(c.matrix(), c.curvature()).is_zero(); }

} // namespace holo::dg
