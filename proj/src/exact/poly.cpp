#include "holo/exact/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "holo/errors.hpp"

namespace holo::exact {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_same_ring(const Ring& a, const Ring& b, const char* where)
{
    if (a.n_vars != b.n_vars || a.trunc != b.trunc)
        throw DimensionMismatch(std::string(where) + ": operands live in different rings (n=" +
                                std::to_string(a.n_vars) + ",D=" + std::to_string(a.trunc) + " vs n=" +
                                std::to_string(b.n_vars) + ",D=" + std::to_string(b.trunc) + ")");
}

TruncPoly::TruncPoly(Ring ring) : ring_(ring)
{
    if (ring.n_vars < 1 || ring.trunc < 0)
        throw DimensionMismatch("ring needs n_vars >= 1 and trunc >= 0");
}

TruncPoly TruncPoly::constant(Ring ring, const Scalar& c)
{
    TruncPoly p(ring);
    p.add_term(Exponent(ring.n_vars, 0), c);
    return p;
}

TruncPoly TruncPoly::variable(Ring ring, int k)
{
    if (k < 0 || k >= ring.n_vars)
        throw DimensionMismatch("variable index out of range");
    Exponent e(ring.n_vars, 0);
    e[k] = 1;
    return monomial(ring, e);
}

TruncPoly TruncPoly::monomial(Ring ring, const Exponent& e, const Scalar& c)
{
    TruncPoly p(ring);
    p.add_term(e, c);
    return p;
}

bool TruncPoly::is_constant() const { return degree() <= 0; }

int TruncPoly::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, total_degree(e));
    return d;
}

Scalar TruncPoly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar TruncPoly::constant_term() const { return coeff(Exponent(ring_.n_vars, 0)); }

void TruncPoly::add_term(const Exponent& e, const Scalar& c)
{
    if (static_cast<int>(e.size()) != ring_.n_vars)
        throw DimensionMismatch("exponent length does not match n_vars");
    if (c.is_zero())
        return;
    if (total_degree(e) > ring_.trunc)
        throw DegreeOverflow("term of degree " + std::to_string(total_degree(e)) + " exceeds D=" +
                             std::to_string(ring_.trunc));
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o)
{
    check_same_ring(ring_, o.ring_, "poly add");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o)
{
    check_same_ring(ring_, o.ring_, "poly sub");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

TruncPoly& TruncPoly::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b)
{
    check_same_ring(a.ring_, b.ring_, "poly mul");
    TruncPoly out(a.ring_);
    if (a.is_zero() || b.is_zero())
        return out;
    if (a.degree() + b.degree() > a.ring_.trunc)
        throw DegreeOverflow("product of degrees " + std::to_string(a.degree()) + " and " +
                             std::to_string(b.degree()) + " exceeds D=" + std::to_string(a.ring_.trunc));
    Exponent e(a.ring_.n_vars);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int k = 0; k < a.ring_.n_vars; ++k)
                e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

TruncPoly TruncPoly::operator-() const
{
    TruncPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

TruncPoly TruncPoly::derivative(int k) const
{
    if (k < 0 || k >= ring_.n_vars)
        throw DimensionMismatch("derivative index out of range");
    TruncPoly out(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0)
            continue;
        Exponent f = e;
        f[k] -= 1;
        out.add_term(f, c * Scalar(e[k]));
    }
    return out;
}

TruncPoly TruncPoly::conj() const
{
    TruncPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = c.conj();
    return out;
}

TruncPoly TruncPoly::with_trunc(int trunc) const
{
    TruncPoly out(Ring{ring_.n_vars, trunc});
    for (const auto& [e, c] : terms_)
        out.add_term(e, c);
    return out;
}

Scalar TruncPoly::evaluate(const std::vector<Scalar>& point) const
{
    if (static_cast<int>(point.size()) != ring_.n_vars)
        throw DimensionMismatch("evaluation point has wrong length");
    Scalar total;
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (int k = 0; k < ring_.n_vars; ++k)
            for (int p = 0; p < e[k]; ++p)
                term *= point[k];
        total += term;
    }
    return total;
}

std::complex<long double> TruncPoly::evaluate(const std::vector<std::complex<long double>>& point) const
{
    if (static_cast<int>(point.size()) != ring_.n_vars)
        throw DimensionMismatch("evaluation point has wrong length");
    std::complex<long double> total = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<long double> term = c.to_complex_ld();
        for (int k = 0; k < ring_.n_vars; ++k)
            for (int p = 0; p < e[k]; ++p)
                term *= point[k];
        total += term;
    }
    return total;
}

namespace {

// Canonical print order: by total degree, then x1-heavy first.
bool print_before(const Exponent& a, const Exponent& b)
{
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    return a > b;
}

std::string monomial_string(const Exponent& e)
{
    std::string out;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "x" + std::to_string(k + 1);
        if (e[k] > 1)
            out += "^" + std::to_string(e[k]);
    }
    return out;
}

} // namespace

std::string TruncPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_)
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return print_before(a->first, b->first); });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const Scalar& c = t->second;
        std::string mono = monomial_string(t->first);
        bool negative = c.is_real() && c.re() < 0;
        Scalar mag = negative ? -c : c;
        std::string coef;
        if (mono.empty())
            coef = mag.to_string();
        else if (!mag.is_one())
            coef = mag.to_string() + "*";
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += coef + mono;
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const TruncPoly& p) { return os << p.to_string(); }

namespace {

class PolyParser
{
public:
    PolyParser(std::string_view text, Ring ring) : ring_(ring)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s_.push_back(c);
    }

    TruncPoly run()
    {
        if (s_.empty())
            fail("empty polynomial");
        TruncPoly out(ring_);
        bool first = true;
        while (pos_ < s_.size()) {
            Scalar sign(1);
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                if (s_[pos_] == '-')
                    sign = Scalar(-1);
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [e, c] = term();
            out.add_term(e, sign * c);
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'\n  " + s_ +
                         "\n  " + std::string(pos_, ' ') + "^");
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    std::pair<Exponent, Scalar> term()
    {
        Exponent e(ring_.n_vars, 0);
        Scalar c(1);
        factor(e, c);
        while (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            factor(e, c);
        }
        return {e, c};
    }

    void factor(Exponent& e, Scalar& c)
    {
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char ch = s_[pos_];
        if (ch == 'x') {
            ++pos_;
            int k = std::stoi(digits());
            if (k < 1 || k > ring_.n_vars)
                fail("variable x" + std::to_string(k) + " outside 1.." + std::to_string(ring_.n_vars));
            int power = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                power = std::stoi(digits());
            }
            e[k - 1] += power;
        } else if (ch == '(') {
            std::size_t close = s_.find(')', pos_);
            if (close == std::string::npos)
                fail("unbalanced parenthesis");
            try {
                c *= Scalar::parse(std::string_view(s_).substr(pos_, close - pos_ + 1));
            } catch (const ParseError&) {
                fail("malformed coefficient");
            }
            pos_ = close + 1;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num = digits();
            std::string den = "1";
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                den = digits();
            }
            Scalar v = Scalar(parse_rational(num + "/" + den));
            if (pos_ < s_.size() && s_[pos_] == 'i') {
                ++pos_;
                v = v * Scalar::i();
            }
            c *= v;
        } else if (ch == 'i') {
            ++pos_;
            c *= Scalar::i();
        } else {
            fail(std::string("unexpected character '") + ch + "'");
        }
    }

    Ring ring_;
    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

TruncPoly TruncPoly::parse(std::string_view text, Ring ring) { return PolyParser(text, ring).run(); }

std::vector<Exponent> monomials_up_to(int n_vars, int d)
{
    std::vector<Exponent> out;
    if (d < 0)
        return out;
    for (int deg = 0; deg <= d; ++deg) {
        // all compositions of deg into n_vars parts, x1-heavy first
        Exponent e(n_vars, 0);
        std::vector<Exponent> level;
        auto rec = [&](auto&& self, int k, int left) -> void {
            if (k == n_vars - 1) {
                e[k] = left;
                level.push_back(e);
                return;
            }
            for (int a = left; a >= 0; --a) {
                e[k] = a;
                self(self, k + 1, left - a);
            }
        };
        rec(rec, 0, deg);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace holo::exact
