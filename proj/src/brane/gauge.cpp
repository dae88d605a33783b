#include "holo/brane/gauge.hpp"

#include <functional>

#include "holo/exact/coords.hpp"
#include "holo/exact/linear.hpp"

namespace holo::brane {

using exact::CoordinateSpace;
using exact::form_zero;
using exact::poly_identity;
using exact::poly_zero;
using exact::SparseRow;

PolyMatrix GaugeField::s_at(int i) const
{
    auto it = s.find(i);
    return it != s.end() ? it->second : poly_identity(complex.ring(), complex.rank(i));
}

FormMatrix GaugeField::b_at(int i) const
{
    auto it = b.find(i);
    return it != b.end() ? it->second : form_zero(complex.ring(), 1, complex.rank(i), complex.rank(i));
}

PolyMatrix GaugeField::h_at(int i) const
{
    auto it = h.find(i);
    return it != h.end() ? it->second : poly_zero(complex.ring(), complex.rank(i - 1), complex.rank(i));
}

bool GaugeField::strict() const
{
    for (int i : complex.indices())
        if (s_at(i) != poly_identity(complex.ring(), complex.rank(i)) || !h_at(i).is_zero() ||
            !h_at(i + 1).is_zero())
            return false;
    return true;
}

std::optional<int> compatibility_defect(const BraneComplex& f, const FormFamily& a)
{
    auto a_at = [&](int i) {
        auto it = a.find(i);
        return it != a.end() ? it->second : form_zero(f.ring(), 1, f.rank(i), f.rank(i));
    };
    for (const auto& [i, m] : a)
        if (m.rows() != static_cast<std::size_t>(f.rank(i)) || m.cols() != m.rows())
            throw DimensionMismatch("connection matrix at index " + std::to_string(i) + " is " + m.shape());
    for (int i = f.min_index() - 1; i <= f.max_index(); ++i) {
        const PolyMatrix d = f.delta(i);
        if (d.rows() == 0 || d.cols() == 0)
            continue;
        if (d * a_at(i) != a_at(i + 1) * d + exact::d(d))
            return i;
    }
    return std::nullopt;
}

GaugeField GaugeField::from_connections(const BraneComplex& f, const FormFamily& a)
{
    if (auto bad = compatibility_defect(f, a))
        throw NotCompatible("connections do not intertwine delta^" + std::to_string(*bad));
    GaugeField g{f, {}, {}, {}};
    for (int i : f.indices()) {
        g.s.emplace(i, poly_identity(f.ring(), f.rank(i)));
        auto it = a.find(i);
        g.b.emplace(i, it != a.end() ? it->second : form_zero(f.ring(), 1, f.rank(i), f.rank(i)));
    }
    return g;
}

GaugeField GaugeField::shifted(const FormFamily& xi, const Scalar& c) const
{
    GaugeField out = *this;
    for (const auto& [i, x] : xi)
        out.b[i] = b_at(i) + c * x;
    return out;
}

GaugeCheck verify(const GaugeField& g)
{
    const BraneComplex& f = g.complex;
    GaugeCheck out{true, true};
    for (int i = f.min_index() - 1; i <= f.max_index(); ++i) {
        const PolyMatrix d = f.delta(i);
        if (d.rows() == 0 || d.cols() == 0)
            continue;
        // delta_J psi^i = psi^{i+1} delta^i, compared on basis vectors
        if (d * g.s_at(i) != g.s_at(i + 1) * d)
            out.chain_map = false;
        if (d * g.b_at(i) != g.b_at(i + 1) * d + g.s_at(i + 1) * exact::d(d))
            out.chain_map = false;
    }
    for (int i : f.indices()) {
        PolyMatrix lhs = g.s_at(i) - poly_identity(f.ring(), f.rank(i));
        PolyMatrix rhs = poly_zero(f.ring(), f.rank(i), f.rank(i));
        if (f.rank(i - 1) > 0)
            rhs += f.delta(i - 1) * g.h_at(i);
        if (f.rank(i + 1) > 0)
            rhs += g.h_at(i + 1) * f.delta(i);
        if (lhs != rhs)
            out.homotopy = false;
    }
    return out;
}

namespace {

enum class Kind { s, b, h };
enum class Eq { chain_s, chain_b, homotopy };

const char* eq_label(Eq e)
{
    switch (e) {
    case Eq::chain_s: return "delta S = S delta";
    case Eq::chain_b: return "delta B = B delta + S d(delta)";
    case Eq::homotopy: return "S - id = delta h + h delta";
    }
    return "";
}

struct UnknownBlock
{
    Kind kind;
    int index;
    CoordinateSpace space;
    std::size_t offset;
};

struct EquationBlock
{
    Eq eq;
    int index;
    CoordinateSpace space;
    std::size_t offset;
};

/// Linear system in the (S, B, h) unknowns assembled column by column.
class GaugeSystem
{
public:
    GaugeSystem(const BraneComplex& f, int cap, bool strict) : f_(f), strict_(strict)
    {
        const Ring ring = f.ring();
        const int e = f.diff_degree();
        std::size_t off = 0;
        for (int i : f.indices()) {
            const std::size_t r = f.rank(i);
            if (!strict) {
                unknowns_.push_back({Kind::s, i, CoordinateSpace(ring, 0, r, r, cap), off});
                off += unknowns_.back().space.dim();
            }
            unknowns_.push_back({Kind::b, i, CoordinateSpace(ring, 1, r, r, cap), off});
            off += unknowns_.back().space.dim();
            if (!strict && f.rank(i - 1) > 0) {
                unknowns_.push_back({Kind::h, i, CoordinateSpace(ring, 0, f.rank(i - 1), r, cap - e), off});
                off += unknowns_.back().space.dim();
            }
        }
        n_unknowns_ = off;
        off = 0;
        for (int i : f.indices()) {
            const std::size_t r = f.rank(i), r1 = f.rank(i + 1);
            if (r1 > 0) {
                if (!strict)
                    add_eq(Eq::chain_s, i, CoordinateSpace(ring, 0, r1, r, ring.trunc), off);
                add_eq(Eq::chain_b, i, CoordinateSpace(ring, 1, r1, r, ring.trunc), off);
            }
            if (!strict)
                add_eq(Eq::homotopy, i, CoordinateSpace(ring, 0, r, r, ring.trunc), off);
        }
        n_equations_ = off;
    }

    std::size_t unknowns() const { return n_unknowns_; }
    std::size_t equations() const { return n_equations_; }
    const std::vector<UnknownBlock>& unknown_blocks() const { return unknowns_; }

    exact::SparseSystem assemble(bool homogeneous) const
    {
        labels_.clear();
        std::map<std::size_t, SparseRow> rows;
        for (const auto& u : unknowns_)
            for (std::size_t k = 0; k < u.space.dim(); ++k) {
                const FormMatrix x = u.space.basis_element(k);
                contributions(u, x, [&](Eq eq, int i, const FormMatrix& val) {
                    const EquationBlock& blk = equation(eq, i);
                    for (auto& [c, v] : blk.space.to_sparse(val)) {
                        Scalar& slot = rows[blk.offset + c][u.offset + k];
                        slot += v;
                    }
                });
            }
        std::map<std::size_t, Scalar> rhs;
        if (!homogeneous)
            for (const auto& blk : equations_) {
                FormMatrix val = form_zero(f_.ring(), blk.space.degree(), blk.space.rows(), blk.space.cols());
                if (blk.eq == Eq::homotopy)
                    val = exact::to_forms(poly_identity(f_.ring(), blk.space.rows()));
                else if (blk.eq == Eq::chain_b && strict_)
                    val = exact::d(f_.delta(blk.index));
                for (auto& [c, v] : blk.space.to_sparse(val))
                    rhs[blk.offset + c] = v;
            }
        exact::SparseSystem sys(n_unknowns_);
        std::map<std::size_t, bool> seen;
        for (auto& [r, row] : rows) {
            auto it = rhs.find(r);
            sys.add_row(row, it == rhs.end() ? Scalar() : it->second);
            labels_.push_back(r);
            seen[r] = true;
        }
        for (auto& [r, v] : rhs)
            if (!seen.count(r)) {
                sys.add_row({}, v);
                labels_.push_back(r);
            }
        return sys;
    }

    std::string describe_row(std::size_t sys_row) const
    {
        const std::size_t r = labels_.at(sys_row);
        for (const auto& blk : equations_)
            if (r >= blk.offset && r < blk.offset + blk.space.dim())
                return std::string(eq_label(blk.eq)) + " at index " + std::to_string(blk.index);
        return "unknown equation";
    }

    GaugeField decode(const std::vector<Scalar>& v) const
    {
        GaugeField g{f_, {}, {}, {}};
        for (const auto& u : unknowns_) {
            std::vector<Scalar> part(v.begin() + u.offset, v.begin() + u.offset + u.space.dim());
            FormMatrix m = u.space.from_vector(part);
            if (u.kind == Kind::b)
                g.b.emplace(u.index, m);
            else if (u.kind == Kind::s)
                g.s.emplace(u.index, u.space.poly_from_vector(part));
            else
                g.h.emplace(u.index, u.space.poly_from_vector(part));
        }
        if (strict_)
            for (int i : f_.indices())
                g.s.emplace(i, poly_identity(f_.ring(), f_.rank(i)));
        return g;
    }

private:
    void add_eq(Eq eq, int i, CoordinateSpace space, std::size_t& off)
    {
        const std::size_t dim = space.dim();
        equations_.push_back({eq, i, std::move(space), off});
        off += dim;
    }

    const EquationBlock& equation(Eq eq, int i) const
    {
        for (const auto& blk : equations_)
            if (blk.eq == eq && blk.index == i)
                return blk;
        throw DimensionMismatch("missing equation block");
    }

    bool has_eq(Eq eq, int i) const
    {
        for (const auto& blk : equations_)
            if (blk.eq == eq && blk.index == i)
                return true;
        return false;
    }

    using Sink = std::function<void(Eq, int, const FormMatrix&)>;

    void contributions(const UnknownBlock& u, const FormMatrix& x, const Sink& sink) const
    {
        const int i = u.index;
        auto emit = [&](Eq eq, int idx, const FormMatrix& val) {
            if (has_eq(eq, idx))
                sink(eq, idx, val);
        };
        switch (u.kind) {
        case Kind::s:
            emit(Eq::chain_s, i, f_.delta(i) * x);
            emit(Eq::chain_s, i - 1, -(x * f_.delta(i - 1)));
            emit(Eq::chain_b, i - 1, -(x * exact::d(f_.delta(i - 1))));
            emit(Eq::homotopy, i, x);
            break;
        case Kind::b:
            emit(Eq::chain_b, i, f_.delta(i) * x);
            emit(Eq::chain_b, i - 1, -(x * f_.delta(i - 1)));
            break;
        case Kind::h:
            // h^i : F^i -> F^{i-1}
            emit(Eq::homotopy, i, -(f_.delta(i - 1) * x));
            emit(Eq::homotopy, i - 1, -(x * f_.delta(i - 1)));
            break;
        }
    }

    const BraneComplex& f_;
    bool strict_;
    std::vector<UnknownBlock> unknowns_;
    std::vector<EquationBlock> equations_;
    std::size_t n_unknowns_ = 0;
    std::size_t n_equations_ = 0;
    mutable std::vector<std::size_t> labels_;
};

FormFamily decode_b(const GaugeSystem& sys, const std::vector<Scalar>& v)
{
    FormFamily out;
    for (const auto& u : sys.unknown_blocks()) {
        if (u.kind != Kind::b)
            continue;
        std::vector<Scalar> part(v.begin() + u.offset, v.begin() + u.offset + u.space.dim());
        out.emplace(u.index, u.space.from_vector(part));
    }
    return out;
}

SparseRow encode_b(const GaugeSystem& sys, const FormFamily& fam)
{
    SparseRow out;
    for (const auto& u : sys.unknown_blocks()) {
        if (u.kind != Kind::b)
            continue;
        auto it = fam.find(u.index);
        if (it == fam.end())
            continue;
        for (auto& [k, v] : u.space.to_sparse(it->second))
            out.emplace(u.offset + k, v);
    }
    return out;
}

SparseRow to_row(const std::vector<Scalar>& v)
{
    SparseRow out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero())
            out.emplace(k, v[k]);
    return out;
}

} // namespace

std::vector<FormFamily> homotopy_directions(const BraneComplex& f, int cap)
{
    std::vector<FormFamily> out;
    const Ring ring = f.ring();
    for (int i : f.indices()) {
        if (f.rank(i - 1) == 0)
            continue;
        // H : F^i -> Omega^1(F^{i-1}); delta H + H delta touches indices i and i-1
        CoordinateSpace space(ring, 1, f.rank(i - 1), f.rank(i), cap);
        for (std::size_t k = 0; k < space.dim(); ++k) {
            const FormMatrix x = space.basis_element(k);
            FormFamily dir;
            dir.emplace(i, f.delta(i - 1) * x);
            dir.emplace(i - 1, x * f.delta(i - 1));
            out.push_back(std::move(dir));
        }
    }
    return out;
}

GaugeSolution gauge_solve(const BraneComplex& f, GaugeOptions opts)
{
    const int e = f.diff_degree();
    const int cap = opts.unknown_cap >= 0 ? opts.unknown_cap : f.ring().trunc - e;
    if (cap < 0)
        throw DegreeOverflow("gauge_solve: D=" + std::to_string(f.ring().trunc) +
                             " is smaller than the differential degree " + std::to_string(e));
    if (cap + e > f.ring().trunc)
        throw DegreeOverflow("gauge_solve: unknown cap " + std::to_string(cap) + " plus differential degree " +
                             std::to_string(e) + " exceeds D=" + std::to_string(f.ring().trunc));
    GaugeSolution out;
    out.unknown_cap = cap;

    GaugeSystem strict(f, cap, true);
    exact::SparseSystem strict_sys = strict.assemble(false);
    exact::LinearSolution strict_sol = exact::solve_sparse(strict_sys, false);

    // Z^0: kernel of the homogeneous strict system; B^0: homotopy directions
    exact::SparseSystem homogeneous = strict_sys;
    for (auto& b : homogeneous.rhs)
        b = Scalar();
    exact::LinearSolution z0 = exact::solve_sparse(homogeneous, true);
    std::vector<SparseRow> boundaries;
    if (cap - e >= 0)
        for (const auto& dir : homotopy_directions(f, cap - e))
            boundaries.push_back(encode_b(strict, dir));
    std::vector<SparseRow> cycles;
    for (const auto& k : z0.kernel)
        cycles.push_back(to_row(k));
    for (std::size_t idx : exact::extend_basis(strict.unknowns(), boundaries, cycles))
        out.affine_basis.push_back(decode_b(strict, z0.kernel[idx]));

    if (strict_sol.consistent) {
        out.exists = true;
        out.strict = true;
        out.field = strict.decode(strict_sol.particular);
        out.unknowns = strict.unknowns();
        out.equations = strict.equations();
        return out;
    }

    GaugeSystem full(f, cap, false);
    exact::SparseSystem full_sys = full.assemble(false);
    exact::LinearSolution full_sol = exact::solve_sparse(full_sys, false);
    out.unknowns = full.unknowns();
    out.equations = full.equations();
    if (full_sol.consistent) {
        out.exists = true;
        out.field = full.decode(full_sol.particular);
        return out;
    }
    out.obstruction = "no gauge field with coefficient degree <= " + std::to_string(cap) +
                      "; inconsistent equation: " + full.describe_row(*full_sol.witness_row);
    return out;
}

} // namespace holo::brane
