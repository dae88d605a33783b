#include "holo/schubert/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "holo/errors.hpp"

namespace holo::schubert {

Permutation::Permutation(std::vector<int> t) : t_(std::move(t))
{
    const int n = size();
    if (n < 1)
        throw ParseError("a permutation needs at least one entry");
    std::vector<bool> seen(n + 1, false);
    for (int v : t_) {
        if (v < 1 || v > n)
            throw ParseError("entry " + std::to_string(v) + " is outside 1.." + std::to_string(n));
        if (seen[v])
            throw ParseError("entry " + std::to_string(v) + " repeats");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> t(n);
    for (int a = 0; a < n; ++a)
        t[a] = a + 1;
    return Permutation(t);
}

Permutation Permutation::longest(int n)
{
    std::vector<int> t(n);
    for (int a = 0; a < n; ++a)
        t[a] = n - a;
    return Permutation(t);
}

Permutation Permutation::parse(std::string_view text)
{
    std::vector<int> t;
    const bool separated = text.find_first_of(", ") != std::string_view::npos;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char ch = text[pos];
        if (ch == ',' || ch == ' ') {
            ++pos;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("unexpected '" + std::string(1, ch) + "' at column " + std::to_string(pos + 1) +
                             " in '" + std::string(text) + "'");
        if (!separated) {
            t.push_back(ch - '0');
            ++pos;
            continue;
        }
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        t.push_back(v);
    }
    return Permutation(t);
}

int Permutation::length() const
{
    int inv = 0;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (t_[a] > t_[b])
                ++inv;
    return inv;
}

Permutation Permutation::compose(const Permutation& other) const
{
    if (other.size() != size())
        throw SizeMismatch("composing permutations of sizes " + std::to_string(size()) + " and " +
                           std::to_string(other.size()));
    std::vector<int> t(size());
    for (int a = 0; a < size(); ++a)
        t[a] = t_[other.t_[a] - 1];
    return Permutation(t);
}

std::string Permutation::to_string() const
{
    std::string out;
    for (int a = 0; a < size(); ++a) {
        if (size() > 9 && a)
            out += ",";
        out += std::to_string(t_[a]);
    }
    return out;
}

bool bruhat_leq(const Permutation& v, const Permutation& w)
{
    const int n = v.size();
    if (w.size() != n)
        throw SizeMismatch("comparing permutations of sizes " + std::to_string(n) + " and " +
                           std::to_string(w.size()));
    // running rank counts per j as i grows
    std::vector<int> rv(n + 1, 0), rw(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = v(i); j <= n; ++j)
            ++rv[j];
        for (int j = w(i); j <= n; ++j)
            ++rw[j];
        for (int j = 1; j <= n; ++j)
            if (rv[j] < rw[j])
                return false;
    }
    return true;
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> t = Permutation::identity(n).values();
    std::vector<Permutation> out;
    do {
        out.emplace_back(t);
    } while (std::next_permutation(t.begin(), t.end()));
    return out;
}

std::vector<std::pair<Permutation, Permutation>> covering_relations(int n)
{
    const auto perms = all_permutations(n);
    const std::size_t m = perms.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            leq[a][b] = bruhat_leq(perms[a], perms[b]);
    std::vector<std::pair<Permutation, Permutation>> out;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b || !leq[a][b])
                continue;
            bool covered = true;
            for (std::size_t c = 0; c < m && covered; ++c)
                if (c != a && c != b && leq[a][c] && leq[c][b])
                    covered = false;
            if (covered)
                out.emplace_back(perms[a], perms[b]);
        }
    return out;
}

std::vector<std::pair<Permutation, Permutation>> incomparable_pairs(int n)
{
    const auto perms = all_permutations(n);
    std::vector<std::pair<Permutation, Permutation>> out;
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = a + 1; b < perms.size(); ++b)
            if (!bruhat_leq(perms[a], perms[b]) && !bruhat_leq(perms[b], perms[a]))
                out.emplace_back(perms[a], perms[b]);
    return out;
}

std::vector<Permutation> schubert_closure(const Permutation& w)
{
    std::vector<Permutation> out;
    for (const auto& v : all_permutations(w.size()))
        if (bruhat_leq(v, w))
            out.push_back(v);
    return out;
}

std::optional<SingularWitness> is_singular(const Permutation& w)
{
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    const int ti = w(i), tj = w(j), tk = w(k), tl = w(l);
                    if (tk < tl && tl < ti && ti < tj)
                        return SingularWitness{{i, j, k, l}, "3412"};
                    if (tl < tj && tj < tk && tk < ti)
                        return SingularWitness{{i, j, k, l}, "4231"};
                }
    return std::nullopt;
}

} // namespace holo::schubert
