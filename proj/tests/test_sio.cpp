#include "wilf/census.hpp"
#include "wilf/series.hpp"
#include "wilf/sio.hpp"

#include "doctest.h"

#include <map>
#include <set>

using namespace wilf;
using namespace wilf::sio;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
Word S(const char* s) { return Word::parse(s); }

std::vector<Word> words_up_to(int max_n, int min_n = 1) {
    std::vector<Word> out;
    for (int n = min_n; n <= max_n; ++n) {
        auto layer = enumerate_sio(n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

// Standardized prefix of the increasing oscillation 2,4,1,6,3,8,5,...
Permutation oscillation(int length) {
    std::vector<int> v;
    for (int i = 1; i <= length; ++i) v.push_back(i == 1 ? 2 : (i % 2 == 1 ? i - 2 : i + 2));
    return standardize(v);
}

// Checks that f permutes each size layer, keeps the type, and carries
// avoiders of x exactly onto avoiders of y.
void check_bijection(const std::function<Word(const Word&)>& f, const Word& x, const Word& y, int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        const auto layer = enumerate_sio(n);
        std::set<Word> images;
        for (const Word& w : layer) {
            const Word v = f(w);
            REQUIRE(v.size() == n);
            REQUIRE(type_of(v) == type_of(w));
            REQUIRE_MESSAGE(sio_contains(x, w) == sio_contains(y, v), w.to_string(), " -> ", v.to_string());
            images.insert(v);
        }
        REQUIRE(images.size() == layer.size());
    }
}

}  // namespace

TEST_CASE("letters") {
    CHECK(Letter::a().to_perm() == P("1"));
    CHECK(Letter::b().to_perm() == P("21"));
    CHECK(Letter::w(3).to_perm() == P("231"));
    CHECK(Letter::m(3).to_perm() == P("312"));
    CHECK(Letter::w(4).to_perm() == P("2413"));
    CHECK(Letter::m(4).to_perm() == P("3142"));
    CHECK(Letter::w(5).to_perm() == P("24153"));
    CHECK(Letter::m(5).to_perm() == P("31524"));
    CHECK(Letter::w(6).to_perm() == P("241635"));
    CHECK_THROWS_AS(Letter::w(2), std::invalid_argument);
    CHECK_THROWS_AS(Letter::m(1), std::invalid_argument);

    CHECK(Letter::w(4).slopes() == std::vector{Slope::down, Slope::up, Slope::down});
    CHECK(Letter::m(3).slopes() == std::vector{Slope::up, Slope::down});
    CHECK(Letter::b().slopes().empty());
    CHECK(Letter::a().start() == TypeMark::undefined);
    CHECK(Letter::b().finish() == TypeMark::undefined);
    for (int k = 3; k <= 12; ++k) {
        CHECK(Letter::w(k).start() == TypeMark::down);
        CHECK(Letter::m(k).start() == TypeMark::up);
        CHECK((Letter::w(k).finish() == TypeMark::up) == (k % 2 == 1));
        CHECK((Letter::m(k).finish() == TypeMark::down) == (k % 2 == 1));
        const Permutation p = Letter::w(k).to_perm();
        const auto g = inversion_graph(p);
        CHECK(g.is_path());
        CHECK(contains_bruteforce(oscillation(2 * k + 2), p));
        CHECK(Letter::m(k).to_perm() == apply_symmetry(p, Symmetry::inverse));
    }
}

TEST_CASE("word grammar") {
    CHECK(S("w3 a m4 b").to_string() == "w3 a m4 b");
    CHECK(S("w3 a m4 b").size() == 10);
    CHECK(S("").empty());
    CHECK(S("ε").empty());
    CHECK(S("  a   b ") == S("a b"));
    CHECK_THROWS_AS(S("c"), std::invalid_argument);
    CHECK_THROWS_AS(S("w2"), std::invalid_argument);
    CHECK_THROWS_AS(S("w3x"), std::invalid_argument);
    CHECK(S("a b w3").slice(1, 3) == S("b w3"));
    CHECK(S("a") + S("b") == S("a b"));
}

TEST_CASE("words and permutations") {
    CHECK(word_to_perm(S("w4")) == P("2413"));
    CHECK(perm_to_word(P("2413")) == S("w4"));
    CHECK(word_to_perm(S("a b")) == P("132"));
    CHECK(perm_to_word(P("132")) == S("a b"));
    CHECK(word_to_perm(S("w3 m3")) == P("231645"));
    CHECK(perm_to_word(P("231645")) == S("w3 m3"));
    CHECK(word_to_perm(S("")).empty());
    CHECK_THROWS_WITH_AS(perm_to_word(P("321")), doctest::Contains("not in SIO"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(perm_to_word(P("1432")), doctest::Contains("component 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(perm_to_word(P("213654")), doctest::Contains("component 3"), std::invalid_argument);
    CHECK(perm_to_word(P("1 2 4 3 5 7 6 9 8 10 11 13 12")) == S("a a b a b b a a b"));

    for (const Word& w : words_up_to(10)) REQUIRE(perm_to_word(word_to_perm(w)) == w);
}

TEST_CASE("words are exactly the subpermutations of the oscillation") {
    for (int n = 1; n <= 7; ++n) {
        std::set<Permutation> from_words;
        for (const Word& w : enumerate_sio(n)) from_words.insert(word_to_perm(w));
        const Permutation host = oscillation(2 * n + 2);
        std::set<Permutation> filtered;
        for (const auto& p : all_permutations(n))
            if (contains_bruteforce(host, p)) filtered.insert(p);
        REQUIRE(from_words == filtered);
    }
}

TEST_CASE("types") {
    using T = std::pair<TypeMark, TypeMark>;
    CHECK(type_of(S("w4")) == T{TypeMark::down, TypeMark::down});
    CHECK(type_of(S("b")) == T{TypeMark::undefined, TypeMark::undefined});
    CHECK(type_of(S("w3 m4")) == T{TypeMark::down, TypeMark::up});
    CHECK(type_of(S("m3 a")) == T{TypeMark::up, TypeMark::undefined});
    CHECK_FALSE(has_defined_type(S("m3 a")));
    CHECK(has_defined_type(S("m3 a w5")));
}

TEST_CASE("packing into a letter") {
    CHECK(pack_into_letter(S("w3 a m4 b"), Letter::m(16)));
    CHECK_FALSE(pack_into_letter(S("w3 a m4 b"), Letter::m(14)));
    CHECK(pack_into_letter(S("a a"), Letter::w(3)));
    CHECK_FALSE(pack_into_letter(S("a a a"), Letter::w(4)));
    CHECK(pack_into_letter(S("m3"), Letter::w(4)));
    CHECK_FALSE(pack_into_letter(S("m3"), Letter::w(3)));
    CHECK(pack_into_letter(S(""), Letter::a()));
}

TEST_CASE("containment fixtures") {
    CHECK(sio_contains(S("w3 m4"), S("w3 a m4")));
    CHECK_FALSE(sio_contains(S("m3"), S("w3")));
    CHECK(sio_contains(S("w5 b"), S("w5 b")));
    CHECK(sio_contains(S("a a a"), S("b w3")));
    CHECK(sio_contains(S(""), S("")));
}

TEST_CASE("packing agrees with the oracle") {
    const auto patterns = words_up_to(5);
    const auto texts = words_up_to(9);
    census::parallel_for(patterns.size(), [&](std::size_t i) {
        const Permutation p = word_to_perm(patterns[i]);
        for (const Word& t : texts) {
            if (sio_contains(patterns[i], t) != contains_bruteforce(word_to_perm(t), p)) {
                throw std::runtime_error(patterns[i].to_string() + " in " + t.to_string());
            }
        }
    });
}

TEST_CASE("anchors") {
    CHECK(leftmost_end(S("a"), S("w3")) == Anchor{0, 0});
    CHECK(rightmost_start(S("a"), S("w3")) == Anchor{0, 2});
    CHECK(leftmost_end(S("w3"), S("a m5")) == Anchor{1, 3});
    CHECK(rightmost_start(S("w3"), S("a m5")) == Anchor{1, 1});
    CHECK(leftmost_end(S("a b"), S("a b")) == Anchor{1, 1});
    CHECK(rightmost_start(S("a b"), S("a b")) == Anchor{0, 0});
    CHECK_FALSE(leftmost_end(S("w4"), S("w3 m3")).has_value());
    CHECK_FALSE(rightmost_start(S("b b"), S("b")).has_value());
    CHECK_THROWS_AS(leftmost_end(S(""), S("a")), std::invalid_argument);
}

TEST_CASE("symmetries on words") {
    CHECK(sio_symmetry(S("w5"), Symmetry::inverse) == S("m5"));
    CHECK(sio_symmetry(S("w4"), Symmetry::reverse_complement) == S("w4"));
    CHECK(sio_symmetry(S("w3 m4"), Symmetry::reverse_complement_inverse) == S("w4 w3"));
    CHECK(sio_symmetry(S("a b w3"), Symmetry::reverse_complement) == S("m3 b a"));
    CHECK_THROWS_AS(sio_symmetry(S("a"), Symmetry::reverse), std::invalid_argument);
    CHECK(is_class_symmetry(Symmetry::inverse));
    CHECK_FALSE(is_class_symmetry(Symmetry::complement_inverse));

    for (const Word& w : words_up_to(9, 0)) {
        const Permutation p = word_to_perm(w);
        for (Symmetry s : class_symmetries) REQUIRE(word_to_perm(sio_symmetry(w, s)) == apply_symmetry(p, s));
    }
    // the remaining four symmetries leave the class
    CHECK_FALSE(contains_bruteforce(oscillation(20), apply_symmetry(P("123"), Symmetry::reverse)));
}

TEST_CASE("type-preserving symmetries") {
    CHECK(type_preserving_symmetries(S("w3 m4")) == std::vector{Symmetry::reverse_complement_inverse});
    CHECK(type_preserving_symmetries(S("w4")) == std::vector{Symmetry::reverse_complement});
    CHECK(type_preserving_symmetries(S("a w4")).empty());
    for (const Word& w : words_up_to(8)) {
        for (Symmetry s : type_preserving_symmetries(w)) {
            REQUIRE(s != Symmetry::inverse);
            const auto [start, finish] = type_of(w);
            REQUIRE((s == Symmetry::reverse_complement) == (start == finish));
        }
    }
}

TEST_CASE("symmetry bijection fixtures") {
    const LemmaBijection phi(S("m3"), Symmetry::reverse_complement_inverse);
    CHECK(phi(S("w7 a m5")) == S("w6 a w6"));
    CHECK(phi(S("a b w3 b")) == S("a b w3 b"));
    CHECK(phi(S("")) == S(""));
    CHECK(lemma_bijection(S("m5 w3 m3"), Symmetry::reverse_complement_inverse, S("w7 a m5")) == S("w6 a w6"));
    CHECK_THROWS_WITH_AS(LemmaBijection(S("a w3"), Symmetry::reverse_complement), doctest::Contains("type mismatch"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(LemmaBijection(S("w3 m4"), Symmetry::reverse_complement), doctest::Contains("type mismatch"),
                         std::invalid_argument);
    CHECK_THROWS_AS(LemmaBijection(S("w3"), Symmetry::reverse), std::invalid_argument);
    CHECK(phi.image() == sio_symmetry(S("m3"), Symmetry::reverse_complement_inverse));
}

TEST_CASE("symmetry bijections are involutions and exchange avoiders") {
    for (const Word& x : words_up_to(4)) {
        for (Symmetry s : type_preserving_symmetries(x)) {
            const LemmaBijection phi(x, s);
            for (const Word& w : words_up_to(8, 0)) REQUIRE(phi(phi(w)) == w);
            check_bijection(phi, x, phi.image(), 8);
        }
    }
}

TEST_CASE("substitution bijection") {
    const LemmaBijection inner(S("w3 m4"), Symmetry::reverse_complement_inverse);
    CHECK(inner.image() == S("w4 w3"));

    SUBCASE("empty context is the inner map") {
        const SubstitutionBijection psi(S(""), S(""), inner);
        for (const Word& w : words_up_to(9, 0)) REQUIRE(psi(w) == inner(w));
    }
    SUBCASE("words without the context are fixed") {
        const SubstitutionBijection psi(S("w3"), S("m3"), inner);
        CHECK(psi(S("a b a")) == S("a b a"));
        CHECK(psi(S("m3 w3")) == S("m3 w3"));
    }
    SUBCASE("a-context") {
        const SubstitutionBijection psi(S("a"), S("a"), inner);
        check_bijection(psi, S("a w3 m4 a"), S("a w4 w3 a"), 10);
    }
    SUBCASE("mixed context") {
        const SubstitutionBijection psi(S("b"), S("a a"), inner);
        check_bijection(psi, S("b w3 m4 a a"), S("b w4 w3 a a"), 10);
    }
}

TEST_CASE("enumeration") {
    const auto two = enumerate_sio(2);
    CHECK(std::set(two.begin(), two.end()) == std::set{S("a a"), S("b")});
    const auto three = enumerate_sio(3);
    CHECK(std::set(three.begin(), three.end()) == std::set{S("a a a"), S("a b"), S("b a"), S("w3"), S("m3")});
    CHECK(enumerate_sio(0) == std::vector{S("")});

    const std::vector<int> indecomposable{1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2};
    for (int n = 1; n <= 12; ++n) CHECK(letters_of_size(n).size() == static_cast<std::size_t>(indecomposable[n - 1]));

    // 1/(1 - A(x)) with A(x) = (x + x^3)/(1 - x)
    const std::vector<Integer> numer{1, -1};
    const std::vector<Integer> denom{1, -2, 0, -1};
    const Series expected = expand_rational(numer, denom, 12);
    for (int n = 0; n <= 12; ++n) {
        const auto layer = enumerate_sio(n);
        CHECK(expected[n] == layer.size());
        CHECK(std::set(layer.begin(), layer.end()).size() == layer.size());
    }
}

TEST_CASE("disjoint factor count") {
    CHECK(disjoint_factor_count(S("w3 m4 w3 m4"), S("w3 m4")) == 2);
    CHECK(disjoint_factor_count(S("w3 w3 m4"), S("w3 m4")) == 1);
    CHECK(disjoint_factor_count(S("a a a"), S("a a")) == 1);
    CHECK(disjoint_factor_count(S("a a a a"), S("a a")) == 2);
    CHECK(disjoint_factor_count(S(""), S("a")) == 0);
    CHECK_THROWS_AS(disjoint_factor_count(S("a"), S("")), std::invalid_argument);
}

TEST_CASE("no incompatible pairs among small letters") {
    std::vector<Letter> small;
    for (int k = 1; k <= 5; ++k)
        for (const Letter& l : letters_of_size(k)) small.push_back(l);
    for (const Letter& pi : small) {
        for (const Letter& theta : small) {
            const Permutation sum = direct_sum(pi.to_perm(), theta.to_perm());
            bool embeds = false;
            for (int k = 1; k <= pi.size() + theta.size() + 2 && !embeds; ++k)
                for (const Letter& host : letters_of_size(k))
                    embeds = embeds || contains_bruteforce(host.to_perm(), sum);
            CHECK_MESSAGE(embeds, pi.to_string(), " + ", theta.to_string());
        }
    }
}

TEST_CASE("factor rewrites preserve avoidance vectors") {
    CHECK(factor_rewrites(S("a w3 m4")) == std::vector{S("a w4 w3")});
    CHECK(factor_rewrites(S("a b")).empty());
    for (int k = 4; k <= 7; ++k) {
        const auto patterns = enumerate_sio(k);
        const auto vectors = census::avoidance_vectors(patterns, 11);
        std::map<Word, census::Counts> vector_of;
        for (std::size_t i = 0; i < patterns.size(); ++i) vector_of.emplace(patterns[i], vectors[i]);
        for (const Word& w : patterns) {
            for (const Word& v : factor_rewrites(w)) {
                REQUIRE(v.size() == w.size());
                REQUIRE_MESSAGE(vector_of.at(v) == vector_of.at(w), w.to_string(), " ~ ", v.to_string());
            }
        }
    }
}

TEST_CASE("bijections for multi-letter sources") {
    std::size_t cases = 0;
    for (int n = 6; n <= 7; ++n) {
        for (const Word& x : enumerate_sio(n)) {
            for (Symmetry s : type_preserving_symmetries(x)) {
                const LemmaBijection phi(x, s);
                check_bijection(phi, x, phi.image(), 9);
                const SubstitutionBijection psi(S("a"), S("b"), phi);
                check_bijection(psi, S("a") + x + S("b"), S("a") + phi.image() + S("b"), 10);
                ++cases;
            }
        }
    }
    CHECK(cases > 4);
}
