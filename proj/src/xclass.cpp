#include "wilf/xclass.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace wilf::xclass {

Letter Letter::pair(int a, int b) {
    if (a == 0 && b == 0) throw std::invalid_argument("not in L: pair letter (0,0)");
    if ((a > 0 && b < 0) || (a < 0 && b > 0)) {
        throw std::invalid_argument("not in L: pair letter with mixed signs");
    }
    return Letter(Kind::pair, a, b);
}

Letter Letter::mono(int m) {
    if (std::abs(m) < 2) throw std::invalid_argument("not in L: monotone letter needs |m| >= 2");
    return Letter(Kind::mono, m, 0);
}

Letter Letter::one() { return Letter(Kind::one, 1, 0); }

int Letter::sign() const noexcept {
    if (kind_ == Kind::one) return 0;
    return (a_ > 0 || b_ > 0) ? 1 : -1;
}

int Letter::size() const noexcept {
    switch (kind_) {
    case Kind::pair: return std::abs(a_) + std::abs(b_);
    case Kind::mono: return std::abs(a_);
    case Kind::one: return 1;
    }
    return 0;
}

std::string Letter::to_string() const {
    switch (kind_) {
    case Kind::pair: return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
    case Kind::mono: return "(" + std::to_string(a_) + ")";
    case Kind::one: return "1";
    }
    return {};
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("not in L: empty word");
    if (letters_.size() == 1 && letters_[0].kind() == Letter::Kind::one) {
        size_ = 1;
        return;
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const Letter& l = letters_[i];
        const bool last = i + 1 == letters_.size();
        if (l.kind() == Letter::Kind::one) throw std::invalid_argument("not in L: letter 1 inside a longer word");
        if (last && !l.is_mono()) throw std::invalid_argument("not in L: word must end with a monotone letter");
        if (!last && !l.is_pair()) throw std::invalid_argument("not in L: monotone letter before the end");
        if (i > 0 && letters_[i - 1].sign() == l.sign()) {
            throw std::invalid_argument("not in L: letter signs must alternate");
        }
        size_ += l.size();
    }
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    int integer() {
        skip_space();
        int v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc{}) fail("expected an integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return v;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("not in L: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Word Word::parse(std::string_view text) {
    Parser in(text);
    if (in.accept('1')) {
        if (!in.done()) in.fail("trailing input after 1");
        return Word({Letter::one()});
    }
    std::vector<Letter> letters;
    while (!in.done()) {
        in.expect('(');
        const int a = in.integer();
        if (in.accept(',')) {
            const int b = in.integer();
            in.expect(')');
            letters.push_back(Letter::pair(a, b));
        } else {
            in.expect(')');
            letters.push_back(Letter::mono(a));
        }
    }
    return Word(std::move(letters));
}

std::string Word::to_string() const {
    std::string out;
    for (const Letter& l : letters_) out += l.to_string();
    return out;
}

bool is_member(const Permutation& p) {
    static const std::vector<Permutation> basis{Permutation::parse("2143"), Permutation::parse("2413"),
                                                Permutation::parse("3142"), Permutation::parse("3412")};
    return std::none_of(basis.begin(), basis.end(),
                        [&](const Permutation& b) { return contains_bruteforce(p, b); });
}

Permutation decode(const Word& w) {
    if (w.is_one()) return Permutation::increasing(1);
    const Letter& t = w.terminal();
    Permutation core = t.first() > 0 ? Permutation::increasing(t.first()) : Permutation::decreasing(-t.first());
    const auto letters = w.letters();
    for (auto it = letters.rbegin() + 1; it != letters.rend(); ++it) {
        const int a = std::abs(it->first());
        const int b = std::abs(it->second());
        if (it->sign() > 0) {
            core = direct_sum(direct_sum(Permutation::increasing(a), core), Permutation::increasing(b));
        } else {
            core = skew_sum(skew_sum(Permutation::decreasing(a), core), Permutation::decreasing(b));
        }
    }
    return core;
}

Word encode(const Permutation& p) {
    if (p.empty()) throw std::invalid_argument("not in class: empty permutation has no word");
    std::vector<int> cur(p.values().begin(), p.values().end());
    std::vector<Letter> letters;
    for (;;) {
        const int n = static_cast<int>(cur.size());
        if (n == 1) {
            if (!letters.empty()) throw std::invalid_argument("not in class");
            return Word({Letter::one()});
        }
        const bool increasing = std::is_sorted(cur.begin(), cur.end());
        const bool decreasing = std::is_sorted(cur.rbegin(), cur.rend());
        if (increasing || decreasing) {
            letters.push_back(Letter::mono(increasing ? n : -n));
            break;
        }
        int a = 0, b = 0;
        std::vector<int> middle;
        if (cur.front() == 1 || cur.back() == n) {
            while (cur[a] == a + 1) ++a;
            while (cur[n - 1 - b] == n - b) ++b;
            for (int i = a; i < n - b; ++i) middle.push_back(cur[i] - a);
            letters.push_back(Letter::pair(a, b));
        } else if (cur.front() == n || cur.back() == 1) {
            while (cur[a] == n - a) ++a;
            while (cur[n - 1 - b] == b + 1) ++b;
            for (int i = a; i < n - b; ++i) middle.push_back(cur[i] - b);
            letters.push_back(Letter::pair(-a, -b));
        } else {
            throw std::invalid_argument("not in class: " + p.to_string() + " is not in Av(2143, 2413, 3142, 3412)");
        }
        cur = std::move(middle);
    }
    try {
        return Word(std::move(letters));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not in class: " + p.to_string() + " is not in Av(2143, 2413, 3142, 3412)");
    }
}

namespace {

void extend_words(int remaining, int sign, std::vector<Letter>& prefix, std::vector<Word>& out) {
    if (remaining >= 2) {
        for (int s : {1, -1}) {
            if (sign != 0 && s != sign) continue;
            prefix.push_back(Letter::mono(s * remaining));
            out.emplace_back(prefix);
            prefix.pop_back();
        }
    }
    for (int u = 1; u <= remaining - 2; ++u) {
        for (int s : {1, -1}) {
            if (sign != 0 && s != sign) continue;
            for (int a = u; a >= 0; --a) {
                prefix.push_back(Letter::pair(s * a, s * (u - a)));
                extend_words(remaining - u, -s, prefix, out);
                prefix.pop_back();
            }
        }
    }
}

}  // namespace

std::vector<Word> enumerate_words(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_words needs n >= 1");
    std::vector<Word> out;
    if (n == 1) {
        out.emplace_back(std::vector<Letter>{Letter::one()});
        return out;
    }
    std::vector<Letter> prefix;
    extend_words(n, 0, prefix, out);
    return out;
}

bool monotone_contained(int m, std::span<const Letter> letters) {
    if (m == 0) throw std::invalid_argument("monotone pattern must be nonzero");
    const int want = m > 0 ? 1 : -1;
    int content = 0;
    for (const Letter& l : letters) {
        switch (l.kind()) {
        case Letter::Kind::pair:
            if (l.sign() == want) content += l.size();
            break;
        case Letter::Kind::mono: content += l.sign() == want ? l.size() : 1; break;
        case Letter::Kind::one: content += 1; break;
        }
    }
    return content >= std::abs(m);
}

std::optional<std::size_t> ab_prefix_length(std::span<const Letter> letters, const Letter& q) {
    if (!q.is_pair()) throw std::invalid_argument("ab_prefix needs a pair letter");
    const int need_a = std::abs(q.first());
    const int need_b = std::abs(q.second());
    int have_a = 0, have_b = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const Letter& l = letters[i];
        if (!l.is_pair()) return std::nullopt;
        if (l.sign() != q.sign()) continue;
        have_a += std::abs(l.first());
        have_b += std::abs(l.second());
        if (have_a >= need_a && have_b >= need_b) return i + 1;
    }
    return std::nullopt;
}

std::optional<PrefixSplit> ab_prefix(const Word& w, const Letter& q) {
    const auto letters = w.letters();
    const auto len = ab_prefix_length(letters, q);
    if (!len) return std::nullopt;
    return PrefixSplit{{letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(*len)},
                       {letters.begin() + static_cast<std::ptrdiff_t>(*len), letters.end()}};
}

bool greedy_contains(const Word& pattern, const Word& text) {
    if (pattern.is_one()) return true;
    auto rest = text.letters();
    const auto pat = pattern.letters();
    for (std::size_t i = 0; i + 1 < pat.size(); ++i) {
        const auto len = ab_prefix_length(rest, pat[i]);
        if (!len) return false;
        rest = rest.subspan(*len);
    }
    return monotone_contained(pattern.terminal().first(), rest);
}

namespace {

std::vector<Integer> zeros(int order) { return std::vector<Integer>(static_cast<std::size_t>(order) + 1); }

}  // namespace

Series f_series(const Letter& q, int order) {
    if (!q.is_pair()) throw std::invalid_argument("f_series needs a pair letter");
    const int qa = std::abs(q.first());
    const int qb = std::abs(q.second());
    const int width = qb + 1;
    auto cell = [width](int ra, int rb) { return static_cast<std::size_t>(ra * width + rb); };

    // pending[s][r]: partial words of size s, residual demand r, about to
    // take a letter of q's sign.
    std::vector<std::vector<Integer>> pending(static_cast<std::size_t>(order) + 1,
                                              std::vector<Integer>(static_cast<std::size_t>((qa + 1) * width)));
    pending[0][cell(qa, qb)] = 1;
    auto f = zeros(order);
    for (int s = 0; s <= order; ++s) {
        for (int ra = 0; ra <= qa; ++ra) {
            for (int rb = 0; rb <= qb; ++rb) {
                const Integer ways = pending[s][cell(ra, rb)];
                if (ways == 0) continue;
                for (int u = 1; s + u <= order; ++u) {
                    for (int a = 0; a <= u; ++a) {
                        const int na = std::max(0, ra - a);
                        const int nb = std::max(0, rb - (u - a));
                        if (na == 0 && nb == 0) {
                            f[s + u] += ways;
                            continue;
                        }
                        // An opposite-sign letter of size t has t + 1 shapes.
                        for (int t = 1; s + u + t <= order; ++t) pending[s + u + t][cell(na, nb)] += ways * (t + 1);
                    }
                }
            }
        }
    }
    return Series(std::move(f), order);
}

Series m_series(int m, int order, MVariant variant) {
    if (std::abs(m) < 2) throw std::invalid_argument("m_series needs |m| >= 2");
    const int want = m > 0 ? 1 : -1;
    const int need = std::abs(m);
    // state[s][content][next]: next = 0 free, 1 positive, 2 negative.
    auto idx = [](int sign) { return sign == 0 ? 0 : (sign > 0 ? 1 : 2); };
    std::vector<std::vector<std::array<Integer, 3>>> state(
        static_cast<std::size_t>(order) + 1, std::vector<std::array<Integer, 3>>(static_cast<std::size_t>(need) + 1));
    state[0][0][idx(variant == MVariant::all_words ? 0 : want)] = 1;
    auto out = zeros(order);
    for (int s = 0; s <= order; ++s) {
        for (int c = 0; c <= need; ++c) {
            for (int next : {0, 1, -1}) {
                const Integer ways = state[s][c][idx(next)];
                if (ways == 0) continue;
                for (int g : {1, -1}) {
                    if (next != 0 && g != next) continue;
                    for (int k = 2; s + k <= order; ++k) {
                        const int total = c + (g == want ? k : 1);
                        if (total >= need) out[s + k] += ways;
                    }
                    for (int u = 1; s + u <= order; ++u) {
                        const int nc = std::min(need, c + (g == want ? u : 0));
                        state[s + u][nc][idx(-g)] += ways * (u + 1);
                    }
                }
            }
        }
    }
    return Series(std::move(out), order);
}

Series inv_gf(const Word& w, int order, MVariant variant) {
    if (!w.crossed()) throw std::invalid_argument("use monotone census: inv_gf needs a crossed pattern");
    const std::vector<Integer> one{1};
    const std::vector<Integer> square{1, -2, 1};
    Series g = expand_rational(one, square, order);
    const auto letters = w.letters();
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) g = g * f_series(letters[i], order);
    return g * m_series(w.terminal().first(), order, variant);
}

std::string WilfKey::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0) out += ",";
        out += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    return out + "};" + std::to_string(terminal);
}

WilfKey wilf_key(const Word& w) {
    WilfKey key;
    if (w.is_one()) return key;
    const auto letters = w.letters();
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        const int a = std::abs(letters[i].first());
        const int b = std::abs(letters[i].second());
        key.pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(key.pairs.begin(), key.pairs.end());
    key.terminal = std::abs(w.terminal().first());
    return key;
}

}  // namespace wilf::xclass
