#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace holo::schubert {

/// One-line notation (t_1, ..., t_n) of a bijection on {1..n}.
class Permutation
{
public:
    Permutation() = default;
    /// Throws ParseError unless `t` is a permutation of 1..n with n >= 1.
    explicit Permutation(std::vector<int> t);

    static Permutation identity(int n);
    /// n, n-1, ..., 1
    static Permutation longest(int n);
    /// "312", "3,1,2" or "3 1 2"; separators are required once n >= 10.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(t_.size()); }
    /// t(a) for 1-based a.
    int operator()(int a) const { return t_[a - 1]; }
    const std::vector<int>& values() const { return t_; }

    /// #{a < b : t(a) > t(b)}
    int length() const;
    /// (this o other)(a) = this(other(a))
    Permutation compose(const Permutation& other) const;

    /// "312" for n <= 9, else comma separated.
    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> t_;
};

/// r_u(i, j) = #{a <= i : u(a) <= j}; v <= w iff r_v >= r_w entrywise.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Pairs (v, w) with v < w and no u strictly between, ordered by v then w.
std::vector<std::pair<Permutation, Permutation>> covering_relations(int n);

/// Unordered pairs comparable in neither direction, each listed once.
std::vector<std::pair<Permutation, Permutation>> incomparable_pairs(int n);

/// {v : v <= w} in lexicographic order.
std::vector<Permutation> schubert_closure(const Permutation& w);

struct SingularWitness
{
    /// 1-based positions i < j < k < l.
    std::array<int, 4> positions{};
    /// "3412" for t_k < t_l < t_i < t_j, "4231" for t_l < t_j < t_k < t_i.
    std::string pattern;
};

/// First quadruple (lexicographic in positions) realizing either pattern.
std::optional<SingularWitness> is_singular(const Permutation& w);

} // namespace holo::schubert
