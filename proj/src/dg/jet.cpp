#include "holo/dg/jet.hpp"

#include "holo/exact/coords.hpp"

namespace holo::dg {

using exact::form_zero;

JetElement jet_zero(const FreeModule& m)
{
    return {form_zero(m.ring, 0, m.rank, 1), form_zero(m.ring, 1, m.rank, 1)};
}

JetElement jet_action(const TruncPoly& f, const JetElement& j)
{
    const ExteriorForm df = ExteriorForm::function(f).d();
    JetElement out{j.sigma, j.beta};
    for (std::size_t a = 0; a < j.sigma.rows(); ++a) {
        out.sigma(a, 0) = f * j.sigma(a, 0);
        out.beta(a, 0) = f * j.beta(a, 0) + exact::wedge(df, j.sigma(a, 0));
    }
    return out;
}

JetElement eta(const FormValued& sigma)
{
    if (sigma.zero().degree() != 0)
        throw DegreeMismatch("eta expects a section");
    return {sigma, form_zero(sigma.zero().ring(), 1, sigma.rows(), 1)};
}

JetElement JetMorphism::apply(const FormValued& sigma) const
{
    // sum_a sigma_a . phi(e_a) under the twisted action
    return {s * sigma, b * sigma + s * exact::d(sigma)};
}

Connection splitting_to_connection(const FreeModule& m, const JetMorphism& phi)
{
    if (phi.s != exact::poly_identity(m.ring, m.rank))
        throw NotASplitting("pi o phi != id: sigma-part is " + exact::to_string(phi.s));
    // phi - eta sends sigma to (0, B sigma + d sigma)
    return Connection(m, phi.b);
}

JetMorphism connection_to_splitting(const Connection& c)
{
    return {exact::poly_identity(c.ring(), c.module().rank), c.matrix()};
}

JetElement atiyah_iota(const FormValued& beta)
{
    return {form_zero(beta.zero().ring(), 0, beta.rows(), 1), beta};
}

FormValued atiyah_pi(const JetElement& j) { return j.sigma; }

AtiyahReport atiyah_exactness(const FreeModule& m)
{
    using exact::CoordinateSpace;
    using exact::SparseRow;
    const int cap = m.ring.trunc;
    CoordinateSpace f0(m.ring, 0, m.rank, 1, cap);
    CoordinateSpace f1(m.ring, 1, m.rank, 1, cap);
    const std::size_t n0 = f0.dim(), n1 = f1.dim();

    auto jet_coords = [&](const JetElement& j) {
        SparseRow out = f0.to_sparse(j.sigma);
        for (auto& [k, v] : f1.to_sparse(j.beta))
            out.emplace(n0 + k, v);
        return out;
    };

    // images of basis vectors as columns; rank of the column set
    std::vector<SparseRow> iota_cols, pi_cols;
    for (std::size_t k = 0; k < n1; ++k)
        iota_cols.push_back(jet_coords(atiyah_iota(f1.basis_element(k))));
    std::vector<SparseRow> pi_iota;
    for (std::size_t k = 0; k < n1; ++k)
        pi_iota.push_back(f0.to_sparse(atiyah_pi(atiyah_iota(f1.basis_element(k)))));
    for (std::size_t k = 0; k < n0 + n1; ++k) {
        JetElement j = k < n0 ? JetElement{f0.basis_element(k), form_zero(m.ring, 1, m.rank, 1)}
                              : JetElement{form_zero(m.ring, 0, m.rank, 1), f1.basis_element(k - n0)};
        pi_cols.push_back(f0.to_sparse(atiyah_pi(j)));
    }
    const std::size_t rank_iota = exact::sparse_rank(n0 + n1, iota_cols);
    const std::size_t rank_pi = exact::sparse_rank(n0, pi_cols);

    AtiyahReport r;
    r.iota_injective = rank_iota == n1;
    r.pi_surjective = rank_pi == n0;
    r.pi_iota_zero = true;
    for (const auto& row : pi_iota)
        r.pi_iota_zero = r.pi_iota_zero && row.empty();
    // dim ker(pi) = dim J - rank(pi); with pi o iota = 0 this equals rank(iota)
    // exactly when ker(pi) = im(iota)
    r.ker_pi_eq_im_iota = r.pi_iota_zero && (n0 + n1 - rank_pi == rank_iota);
    return r;
}

} // namespace holo::dg
