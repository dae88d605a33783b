#include "holo/exact/form.hpp"

#include <bit>

#include "holo/errors.hpp"

namespace holo::exact {

const char* to_string(PairingMode mode)
{
    return mode == PairingMode::hermitian ? "hermitian" : "bilinear";
}

PairingMode parse_pairing_mode(std::string_view text)
{
    if (text == "hermitian")
        return PairingMode::hermitian;
    if (text == "bilinear")
        return PairingMode::bilinear;
    throw ParseError("unknown pairing mode '" + std::string(text) + "'");
}

int popcount(IndexSet s) { return std::popcount(s); }

std::string index_set_string(IndexSet s)
{
    if (s == 0)
        return "1";
    std::string out;
    for (int k = 0; k < 32; ++k)
        if (s & (IndexSet(1) << k)) {
            if (!out.empty())
                out += "^";
            out += "dx" + std::to_string(k + 1);
        }
    return out;
}

int wedge_sign(IndexSet i, IndexSet j)
{
    if (i & j)
        return 0;
    // count pairs (a in I, b in J) with a > b
    int swaps = 0;
    for (IndexSet rest = j; rest; rest &= rest - 1) {
        IndexSet low = rest & (~rest + 1);
        IndexSet above = i & ~((low << 1) - 1);
        swaps += std::popcount(above);
    }
    return (swaps % 2) ? -1 : 1;
}

ExteriorForm::ExteriorForm(Ring ring, int degree) : ring_(ring), degree_(degree)
{
    if (degree < 0)
        throw DimensionMismatch("negative form degree");
}

ExteriorForm ExteriorForm::function(const TruncPoly& f)
{
    ExteriorForm out(f.ring(), 0);
    out.add_component(0, f);
    return out;
}

ExteriorForm ExteriorForm::dx(Ring ring, int k, const TruncPoly* coeff)
{
    if (k < 0 || k >= ring.n_vars)
        throw DimensionMismatch("dx index out of range");
    ExteriorForm out(ring, 1);
    out.add_component(IndexSet(1) << k, coeff ? *coeff : TruncPoly::constant(ring, 1));
    return out;
}

ExteriorForm ExteriorForm::basis(Ring ring, IndexSet set, const TruncPoly& coeff)
{
    ExteriorForm out(ring, popcount(set));
    out.add_component(set, coeff);
    return out;
}

TruncPoly ExteriorForm::component(IndexSet set) const
{
    auto it = comps_.find(set);
    return it == comps_.end() ? TruncPoly(ring_) : it->second;
}

int ExteriorForm::poly_degree() const
{
    int d = -1;
    for (const auto& [s, f] : comps_)
        d = std::max(d, f.degree());
    return d;
}

void ExteriorForm::add_component(IndexSet set, const TruncPoly& f)
{
    if (popcount(set) != degree_)
        throw DegreeMismatch("component of size " + std::to_string(popcount(set)) + " in a " +
                             std::to_string(degree_) + "-form");
    if (set >> ring_.n_vars)
        throw DimensionMismatch("index set uses variables beyond n_vars");
    check_same_ring(ring_, f.ring(), "form component");
    if (f.is_zero())
        return;
    auto [it, inserted] = comps_.try_emplace(set, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero())
            comps_.erase(it);
    }
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o)
{
    if (o.degree_ != degree_)
        throw DegreeMismatch("adding forms of degree " + std::to_string(degree_) + " and " +
                             std::to_string(o.degree_));
    check_same_ring(ring_, o.ring_, "form add");
    for (const auto& [s, f] : o.comps_)
        add_component(s, f);
    return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o)
{
    return *this += -o;
}

ExteriorForm ExteriorForm::operator-() const
{
    ExteriorForm out = *this;
    for (auto& [s, f] : out.comps_)
        f = -f;
    return out;
}

ExteriorForm operator*(const Scalar& c, const ExteriorForm& a)
{
    ExteriorForm out(a.ring_, a.degree_);
    if (c.is_zero())
        return out;
    out.comps_ = a.comps_;
    for (auto& [s, f] : out.comps_)
        f *= c;
    return out;
}

ExteriorForm operator*(const TruncPoly& g, const ExteriorForm& a)
{
    ExteriorForm out(a.ring_, a.degree_);
    for (const auto& [s, f] : a.comps_)
        out.add_component(s, g * f);
    return out;
}

ExteriorForm ExteriorForm::d() const
{
    ExteriorForm out(ring_, degree_ + 1);
    for (const auto& [s, f] : comps_)
        for (int k = 0; k < ring_.n_vars; ++k) {
            IndexSet bit = IndexSet(1) << k;
            if (s & bit)
                continue;
            TruncPoly df = f.derivative(k);
            if (df.is_zero())
                continue;
            int sign = wedge_sign(bit, s);
            out.add_component(s | bit, sign > 0 ? df : -df);
        }
    return out;
}

ExteriorForm ExteriorForm::conj() const
{
    ExteriorForm out = *this;
    for (auto& [s, f] : out.comps_)
        f = f.conj();
    return out;
}

ExteriorForm ExteriorForm::with_trunc(int trunc) const
{
    ExteriorForm out(Ring{ring_.n_vars, trunc}, degree_);
    for (const auto& [s, f] : comps_)
        out.add_component(s, f.with_trunc(trunc));
    return out;
}

std::string ExteriorForm::to_string() const
{
    if (comps_.empty())
        return "0";
    std::string out;
    for (const auto& [s, f] : comps_) {
        if (!out.empty())
            out += " + ";
        if (s == 0)
            out += "(" + f.to_string() + ")";
        else
            out += "(" + f.to_string() + ")*" + index_set_string(s);
    }
    return out;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b)
{
    check_same_ring(a.ring(), b.ring(), "wedge");
    ExteriorForm out(a.ring(), a.degree() + b.degree());
    for (const auto& [sa, fa] : a.components())
        for (const auto& [sb, fb] : b.components()) {
            int sign = wedge_sign(sa, sb);
            if (sign == 0)
                continue;
            TruncPoly prod = fa * fb;
            out.add_component(sa | sb, sign > 0 ? prod : -prod);
        }
    return out;
}

Scalar torus_pairing(const ExteriorForm& a, const ExteriorForm& b, PairingMode mode)
{
    if (a.degree() != b.degree())
        throw DegreeMismatch("pairing forms of degree " + std::to_string(a.degree()) + " and " +
                             std::to_string(b.degree()));
    Scalar total;
    for (const auto& [s, fa] : a.components()) {
        auto it = b.components().find(s);
        if (it == b.components().end())
            continue;
        const auto& tb = it->second.terms();
        for (const auto& [e, ca] : fa.terms()) {
            auto jt = tb.find(e);
            if (jt == tb.end())
                continue;
            total += (mode == PairingMode::hermitian ? ca.conj() : ca) * jt->second;
        }
    }
    return total;
}

} // namespace holo::exact
