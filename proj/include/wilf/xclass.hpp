#pragma once

// The X-class Av(2143, 2413, 3142, 3412) as words over signed pair letters
// terminated by a monotone letter, with greedy containment and the
// generating functions that make key-equal patterns Wilf-equivalent.

#include "wilf/permutation.hpp"
#include "wilf/series.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wilf::xclass {

class Letter {
public:
    enum class Kind : std::uint8_t { pair, mono, one };

    /// (a, b) != (0, 0) with both coordinates >= 0 or both <= 0.
    static Letter pair(int a, int b);
    /// |m| >= 2.
    static Letter mono(int m);
    static Letter one();

    Kind kind() const noexcept { return kind_; }
    bool is_pair() const noexcept { return kind_ == Kind::pair; }
    bool is_mono() const noexcept { return kind_ == Kind::mono; }

    /// Pair coordinates; for a monotone letter `first()` is m.
    int first() const noexcept { return a_; }
    int second() const noexcept { return b_; }

    /// +1, -1, or 0 for the letter 1.
    int sign() const noexcept;
    int size() const noexcept;

    std::string to_string() const;

    auto operator<=>(const Letter&) const = default;

private:
    Letter(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

    Kind kind_;
    int a_;
    int b_;
};

/// Either the single letter 1, or pair letters followed by one monotone
/// letter with strictly alternating signs throughout.
class Word {
public:
    /// Throws std::invalid_argument("not in L: ...") on a malformed word.
    explicit Word(std::vector<Letter> letters);

    /// Grammar: "1", or letters "(a,b)" ending in "(m)"; whitespace optional.
    static Word parse(std::string_view text);

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    int size() const noexcept { return size_; }
    const Letter& terminal() const { return letters_.back(); }
    bool is_one() const noexcept { return letters_.front().kind() == Letter::Kind::one; }
    /// Crossed permutations are exactly the words with at least two letters.
    bool crossed() const noexcept { return letters_.size() >= 2; }

    std::string to_string() const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
    int size_ = 0;
};

bool is_member(const Permutation& p);

/// Word -> permutation: (a,b)v with (a,b) positive becomes a ⊕ v ⊕ b, with
/// (a,b) negative becomes |a| ⊖ v ⊖ |b|.
Permutation decode(const Word& w);

/// Inverse of decode. Throws std::invalid_argument("not in class") for p outside X.
Word encode(const Permutation& p);

/// Every word of size exactly n (n >= 1), each once, in generation order.
std::vector<Word> enumerate_words(int n);

/// Does the permutation of `letters` (a suffix of a word) contain the
/// monotone permutation m (increasing for m > 0)? Valid for |m| >= 1.
bool monotone_contained(int m, std::span<const Letter> letters);
inline bool monotone_contained(int m, const Word& w) { return monotone_contained(m, w.letters()); }

/// Split position of the minimal prefix whose same-sign-as-q content
/// dominates |q| coordinatewise. Monotone letters carry no pair content.
std::optional<std::size_t> ab_prefix_length(std::span<const Letter> letters, const Letter& q);

struct PrefixSplit {
    std::vector<Letter> prefix;
    std::vector<Letter> remainder;
};

std::optional<PrefixSplit> ab_prefix(const Word& w, const Letter& q);

/// Greedy containment of decode(pattern) in decode(text), peeling one
/// (a,b)-prefix of the text per pattern pair letter.
bool greedy_contains(const Word& pattern, const Word& text);

/// Generating function of P(q) by size: alternating words over pair letters
/// starting with q's sign whose q-sign content first dominates |q| at the
/// last letter.
Series f_series(const Letter& q, int order);

enum class MVariant {
    all_words,              ///< every word whose permutation contains m
    start_sign_restricted,  ///< additionally the first letter has m's sign
};

/// Words containing the monotone permutation m, |m| >= 2.
Series m_series(int m, int order, MVariant variant);

/// 1/(1-x)^2 * prod_{i<n} F_{w_i} * M_{w_n}, the generating function of the
/// words containing a crossed pattern w. Throws std::invalid_argument
/// ("use monotone census") for single-letter patterns.
Series inv_gf(const Word& w, int order, MVariant variant = MVariant::start_sign_restricted);

/// Pair letters with coordinates made absolute and sorted, as a sorted
/// multiset, plus |m| of the terminal letter (0 for the word 1).
struct WilfKey {
    std::vector<std::pair<int, int>> pairs;
    int terminal = 0;

    std::string to_string() const;
    auto operator<=>(const WilfKey&) const = default;
};

WilfKey wilf_key(const Word& w);

}  // namespace wilf::xclass
