#pragma once

// Permutations in one-line notation, the eight symmetries of the square,
// direct and skew sums, and the backtracking containment oracle every
// greedy matcher in this library is checked against.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wilf {

/// A bijection on {1..n} stored in one-line notation. The empty permutation
/// (n = 0) is a valid value and is contained in every permutation.
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless `values` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> values);

    static Permutation increasing(int n);
    static Permutation decreasing(int n);

    /// Whitespace- or comma-separated integers; a bare digit string such as
    /// "2413" is read one digit per entry (n <= 9 only).
    static Permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }

    /// Value at 0-based position `i` (values are 1-based).
    int operator[](std::size_t i) const { return values_[i]; }
    std::span<const int> values() const noexcept { return values_; }

    /// Compact digit string when n <= 9, otherwise space separated.
    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

/// Order-isomorphic reduction of a sequence of distinct integers.
Permutation standardize(std::span<const int> sequence);

// Symmetries act on the point set {(i, p_i)}: reverse flips x, complement
// flips y, inverse swaps the axes. Composite names read as function
// composition, so reverse_inverse = reverse ∘ inverse.
enum class Symmetry : std::uint8_t {
    identity,
    reverse,
    complement,
    inverse,
    reverse_complement,
    reverse_inverse,
    complement_inverse,
    reverse_complement_inverse,
};

inline constexpr std::array<Symmetry, 8> all_symmetries{
    Symmetry::identity,
    Symmetry::reverse,
    Symmetry::complement,
    Symmetry::inverse,
    Symmetry::reverse_complement,
    Symmetry::reverse_inverse,
    Symmetry::complement_inverse,
    Symmetry::reverse_complement_inverse,
};

/// outer ∘ inner: apply `inner` first.
Symmetry compose(Symmetry outer, Symmetry inner);
Symmetry inverse_of(Symmetry s);

std::string_view to_string(Symmetry s);
/// Accepts the enumerator names with '-' or '_' separators, plus the short
/// forms "rc", "ri", "ci", "rci".
Symmetry parse_symmetry(std::string_view name);

Permutation apply_symmetry(const Permutation& p, Symmetry s);

enum class SumKind { direct, skew };

/// Direct sum shifts q's values up by |p|; skew sum shifts p's values up by |q|.
Permutation compose(const Permutation& p, const Permutation& q, SumKind kind);

inline Permutation direct_sum(const Permutation& p, const Permutation& q) {
    return compose(p, q, SumKind::direct);
}
inline Permutation skew_sum(const Permutation& p, const Permutation& q) {
    return compose(p, q, SumKind::skew);
}

/// The unique finest decomposition into sum-indecomposable components.
std::vector<Permutation> sum_decompose(const Permutation& p);

/// Graph on 1-based positions; (i, j) with i < j is an edge iff p_i > p_j.
struct InversionGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // sorted, first < second

    int degree(int v) const;
    bool connected() const;
    /// A single vertex counts as a path.
    bool is_path() const;

    bool operator==(const InversionGraph&) const = default;
};

InversionGraph inversion_graph(const Permutation& p);

/// True iff some subsequence of `text` is order-isomorphic to `pattern`.
/// Plain backtracking over pattern positions, left to right.
bool contains_bruteforce(const Permutation& text, const Permutation& pattern);

/// All permutations of size n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace wilf
