#pragma once

// Subpermutations of the increasing oscillation 2,4,1,6,3,8,5,... as words
// over its sum-indecomposables. Each letter is a zigzag path (its inversion
// graph); containment, symmetries and the local bijections all work on those
// paths.

#include "wilf/permutation.hpp"

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wilf::sio {

enum class Slope : std::uint8_t { up, down };

constexpr Slope flip(Slope s) noexcept { return s == Slope::up ? Slope::down : Slope::up; }

enum class TypeMark : std::uint8_t { up, down, undefined };

std::string_view to_string(TypeMark t);

class Letter {
public:
    enum class Kind : std::uint8_t { a, b, w, m };

    static Letter a() { return Letter(Kind::a, 1); }
    static Letter b() { return Letter(Kind::b, 2); }
    /// k >= 3; slopes Down, Up, Down, ...
    static Letter w(int k);
    /// k >= 3; slopes Up, Down, Up, ...
    static Letter m(int k);

    Kind kind() const noexcept { return kind_; }
    int size() const noexcept { return size_; }
    bool zigzag() const noexcept { return kind_ == Kind::w || kind_ == Kind::m; }

    /// k - 1 slopes for W(k)/M(k); empty for a and b.
    std::vector<Slope> slopes() const;
    TypeMark start() const noexcept;
    TypeMark finish() const noexcept;

    Permutation to_perm() const;
    std::string to_string() const;

    auto operator<=>(const Letter&) const = default;

private:
    Letter(Kind kind, int size) : kind_(kind), size_(size) {}

    Kind kind_;
    int size_;
};

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    /// Whitespace-separated tokens a, b, w<k>, m<k>. An empty string (or "ε")
    /// is the empty word.
    static Word parse(std::string_view text);

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int size() const noexcept { return size_; }

    Word slice(std::size_t from, std::size_t to) const;
    friend Word operator+(const Word& lhs, const Word& rhs);

    std::string to_string() const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
    int size_ = 0;
};

/// A connected zigzag: `vertices` points whose first edge has slope `first`
/// (ignored below two vertices). Letters are zigzags; so are the pieces the
/// bijections cut out of and glue back into letters.
struct Zigzag {
    int vertices = 1;
    Slope first = Slope::down;

    Slope slope_at(int edge) const noexcept { return edge % 2 == 0 ? first : flip(first); }
    Slope last() const noexcept { return slope_at(vertices - 2); }

    static Zigzag of(const Letter& l);
    Letter letter() const;
};

Permutation word_to_perm(const Word& w);
/// Throws std::invalid_argument("not in SIO: ...") naming the first offending
/// sum component.
Word perm_to_word(const Permutation& p);

/// (Start of the first letter, Finish of the last letter).
std::pair<TypeMark, TypeMark> type_of(const Word& w);

inline bool has_defined_type(const Word& w) {
    const auto [s, f] = type_of(w);
    return s != TypeMark::undefined && f != TypeMark::undefined;
}

bool pack_into_letter(const Word& pattern, const Letter& letter);
bool sio_contains(const Word& pattern, const Word& text);

/// Position of a vertex inside a word: letter index and 0-based vertex of
/// that letter's path.
struct Anchor {
    std::size_t letter = 0;
    int vertex = 0;

    bool operator==(const Anchor&) const = default;
};

/// Last vertex used by the leftmost embedding of a nonempty pattern.
std::optional<Anchor> leftmost_end(const Word& pattern, const Word& text);
/// First vertex used by the rightmost embedding of a nonempty pattern.
std::optional<Anchor> rightmost_start(const Word& pattern, const Word& text);

/// identity, reverse-complement, inverse and their composite fix SIO.
bool is_class_symmetry(Symmetry s);
inline constexpr std::array<Symmetry, 4> class_symmetries{
    Symmetry::identity,
    Symmetry::reverse_complement,
    Symmetry::inverse,
    Symmetry::reverse_complement_inverse,
};

/// Symmetry acting on letter paths. Throws std::invalid_argument when `s`
/// does not fix SIO.
Word sio_symmetry(const Word& w, Symmetry s);

/// Symmetries other than the identity that keep both (defined) type marks of x.
std::vector<Symmetry> type_preserving_symmetries(const Word& x);

/// Size- and type-preserving bijection of SIO exchanging Av(x) and Av(s(x)).
/// Words over the unusable prefix/suffix alphabets for x's type are kept;
/// the essential middle is trimmed to x's type, mapped by s, and the
/// trimmed edges are put back.
class LemmaBijection {
public:
    /// Throws std::invalid_argument("type mismatch ...") unless x has a
    /// defined type that s preserves.
    LemmaBijection(Word x, Symmetry s);

    const Word& source() const noexcept { return source_; }
    const Word& image() const noexcept { return image_; }
    Symmetry symmetry() const noexcept { return symmetry_; }

    Word operator()(const Word& w) const;

private:
    bool in_prefix_alphabet(const Letter& l) const;
    bool in_suffix_alphabet(const Letter& l) const;

    Word source_;
    Word image_;
    Symmetry symmetry_;
    TypeMark start_;
    TypeMark finish_;
};

Word lemma_bijection(const Word& x, Symmetry s, const Word& w);

using WordMap = std::function<Word(const Word&)>;

/// Lifts a bijection witnessing X ~ Y to one witnessing P X S ~ P Y S. The
/// usable middle between the leftmost P and the rightmost S (starting two
/// vertices past P, ending two before S) is mapped by `inner` and glued
/// back; words not containing P S are fixed.
class SubstitutionBijection {
public:
    SubstitutionBijection(Word prefix, Word suffix, WordMap inner);

    Word operator()(const Word& w) const;

private:
    Word prefix_;
    Word suffix_;
    WordMap inner_;
};

Word substitution_bijection(const Word& prefix, const Word& suffix, const WordMap& inner, const Word& w);

/// All words of size n, each once; n = 0 gives the empty word.
std::vector<Word> enumerate_sio(int n);

/// Sum-indecomposable letters of size n: 1, 1, 2, 2, 2, ...
std::vector<Letter> letters_of_size(int n);

/// Greedy count of pairwise-disjoint contiguous occurrences of f in w.
int disjoint_factor_count(const Word& w, const Word& f);

/// Words reachable in one step by replacing a factor F with a defined type
/// by s(F) for a type-preserving class symmetry s (F != s(F)).
std::vector<Word> factor_rewrites(const Word& w);

}  // namespace wilf::sio
