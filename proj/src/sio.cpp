#include "wilf/sio.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wilf::sio {

std::string_view to_string(TypeMark t) {
    switch (t) {
    case TypeMark::up: return "up";
    case TypeMark::down: return "down";
    case TypeMark::undefined: return "undefined";
    }
    return "?";
}

namespace {

TypeMark mark(Slope s) { return s == Slope::up ? TypeMark::up : TypeMark::down; }

// First k vertices along the inversion-graph path of the increasing
// oscillation 2,4,1,6,3,8,5,...; that path visits positions 1,3,2,5,4,7,6,...
Permutation oscillation_prefix_path(int k) {
    auto value_at = [](int pos) { return pos == 1 ? 2 : (pos % 2 == 1 ? pos - 2 : pos + 2); };
    std::vector<int> positions;
    for (int j = 1; j <= k; ++j) positions.push_back(j == 1 ? 1 : (j % 2 == 0 ? j + 1 : j - 1));
    std::sort(positions.begin(), positions.end());
    std::vector<int> values;
    for (int pos : positions) values.push_back(value_at(pos));
    return standardize(values);
}

}  // namespace

Letter Letter::w(int k) {
    if (k < 3) throw std::invalid_argument("w<k> needs k >= 3");
    return Letter(Kind::w, k);
}

Letter Letter::m(int k) {
    if (k < 3) throw std::invalid_argument("m<k> needs k >= 3");
    return Letter(Kind::m, k);
}

std::vector<Slope> Letter::slopes() const {
    std::vector<Slope> out;
    if (!zigzag()) return out;
    const Zigzag z = Zigzag::of(*this);
    for (int e = 0; e + 1 < size_; ++e) out.push_back(z.slope_at(e));
    return out;
}

TypeMark Letter::start() const noexcept {
    if (!zigzag()) return TypeMark::undefined;
    return kind_ == Kind::w ? TypeMark::down : TypeMark::up;
}

TypeMark Letter::finish() const noexcept {
    if (!zigzag()) return TypeMark::undefined;
    return mark(Zigzag::of(*this).last());
}

Permutation Letter::to_perm() const {
    switch (kind_) {
    case Kind::a: return Permutation::increasing(1);
    case Kind::b: return Permutation::decreasing(2);
    case Kind::w: return oscillation_prefix_path(size_);
    case Kind::m: return apply_symmetry(oscillation_prefix_path(size_), Symmetry::inverse);
    }
    return {};
}

std::string Letter::to_string() const {
    switch (kind_) {
    case Kind::a: return "a";
    case Kind::b: return "b";
    case Kind::w: return "w" + std::to_string(size_);
    case Kind::m: return "m" + std::to_string(size_);
    }
    return {};
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const Letter& l : letters_) size_ += l.size();
}

Word Word::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Letter> letters;
    std::string tok;
    while (in >> tok) {
        if (tok == "ε") continue;
        if (tok == "a") {
            letters.push_back(Letter::a());
        } else if (tok == "b") {
            letters.push_back(Letter::b());
        } else if ((tok[0] == 'w' || tok[0] == 'm') && tok.size() > 1) {
            int k = 0;
            auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), k);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                throw std::invalid_argument("bad SIO letter '" + tok + "'");
            }
            letters.push_back(tok[0] == 'w' ? Letter::w(k) : Letter::m(k));
        } else {
            throw std::invalid_argument("bad SIO letter '" + tok + "'");
        }
    }
    return Word(std::move(letters));
}

Word Word::slice(std::size_t from, std::size_t to) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(to)));
}

Word operator+(const Word& lhs, const Word& rhs) {
    std::vector<Letter> all(lhs.letters_);
    all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(all));
}

std::string Word::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out += ' ';
        out += letters_[i].to_string();
    }
    return out;
}

Zigzag Zigzag::of(const Letter& l) {
    switch (l.kind()) {
    case Letter::Kind::a: return {1, Slope::down};
    case Letter::Kind::b: return {2, Slope::down};
    case Letter::Kind::w: return {l.size(), Slope::down};
    case Letter::Kind::m: return {l.size(), Slope::up};
    }
    return {};
}

Letter Zigzag::letter() const {
    if (vertices < 1) throw std::logic_error("zigzag without vertices");
    if (vertices == 1) return Letter::a();
    if (vertices == 2) return Letter::b();
    return first == Slope::down ? Letter::w(vertices) : Letter::m(vertices);
}

namespace {

std::vector<Zigzag> zigzags(std::span<const Letter> letters) {
    std::vector<Zigzag> out;
    out.reserve(letters.size());
    for (const Letter& l : letters) out.push_back(Zigzag::of(l));
    return out;
}

Word to_word(const std::vector<Zigzag>& parts) {
    std::vector<Letter> letters;
    letters.reserve(parts.size());
    for (const Zigzag& z : parts) letters.push_back(z.letter());
    return Word(std::move(letters));
}

struct Placement {
    int start;
    int end;
};

// Earliest placement of `pattern` in `host` using vertices >= lo.
std::optional<Placement> place_left(const Letter& pattern, const Zigzag& host, int lo) {
    const int edges = pattern.size() - 1;
    int start = lo;
    if (pattern.zigzag()) {
        if (start > host.vertices - 2) return std::nullopt;
        if (host.slope_at(start) != Zigzag::of(pattern).first) ++start;
    }
    if (start + edges > host.vertices - 1) return std::nullopt;
    return Placement{start, start + edges};
}

// Latest placement of `pattern` in `host` using vertices <= hi.
std::optional<Placement> place_right(const Letter& pattern, const Zigzag& host, int hi) {
    const int edges = pattern.size() - 1;
    int start = hi - edges;
    if (start < 0) return std::nullopt;
    if (pattern.zigzag() && host.slope_at(start) != Zigzag::of(pattern).first) --start;
    if (start < 0) return std::nullopt;
    return Placement{start, start + edges};
}

std::vector<Zigzag> transform(std::vector<Zigzag> parts, Symmetry s) {
    switch (s) {
    case Symmetry::identity: break;
    case Symmetry::inverse:
        for (Zigzag& z : parts) z.first = flip(z.first);
        break;
    case Symmetry::reverse_complement:
        std::reverse(parts.begin(), parts.end());
        for (Zigzag& z : parts) z.first = z.last();
        break;
    case Symmetry::reverse_complement_inverse:
        std::reverse(parts.begin(), parts.end());
        for (Zigzag& z : parts) z.first = flip(z.last());
        break;
    default: throw std::invalid_argument("symmetry " + std::string(to_string(s)) + " does not fix SIO");
    }
    return parts;
}

}  // namespace

Permutation word_to_perm(const Word& w) {
    Permutation out;
    for (const Letter& l : w.letters()) out = direct_sum(out, l.to_perm());
    return out;
}

Word perm_to_word(const Permutation& p) {
    std::vector<Letter> letters;
    const auto parts = sum_decompose(p);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Permutation& c = parts[i];
        const int k = c.size();
        if (k == 1) {
            letters.push_back(Letter::a());
            continue;
        }
        if (k == 2) {
            letters.push_back(Letter::b());
            continue;
        }
        const InversionGraph g = inversion_graph(c);
        std::optional<Letter> candidate;
        if (g.is_path()) candidate = g.degree(1) == 2 ? Letter::m(k) : Letter::w(k);
        if (!candidate || candidate->to_perm() != c) {
            throw std::invalid_argument("not in SIO: sum component " + std::to_string(i + 1) + " (" + c.to_string() +
                                        ") of " + p.to_string() + " is not a letter");
        }
        letters.push_back(*candidate);
    }
    return Word(std::move(letters));
}

std::pair<TypeMark, TypeMark> type_of(const Word& w) {
    if (w.empty()) return {TypeMark::undefined, TypeMark::undefined};
    return {w.letters().front().start(), w.letters().back().finish()};
}

bool sio_contains(const Word& pattern, const Word& text) {
    const auto pat = pattern.letters();
    std::size_t next = 0;
    for (const Letter& host_letter : text.letters()) {
        if (next == pat.size()) break;
        const Zigzag host = Zigzag::of(host_letter);
        int lo = 0;
        while (next < pat.size()) {
            const auto at = place_left(pat[next], host, lo);
            if (!at) break;
            lo = at->end + 2;
            ++next;
        }
    }
    return next == pat.size();
}

bool pack_into_letter(const Word& pattern, const Letter& letter) {
    return sio_contains(pattern, Word({letter}));
}

std::optional<Anchor> leftmost_end(const Word& pattern, const Word& text) {
    if (pattern.empty()) throw std::invalid_argument("leftmost_end needs a nonempty pattern");
    const auto pat = pattern.letters();
    const auto host_letters = text.letters();
    std::size_t next = 0;
    for (std::size_t t = 0; t < host_letters.size(); ++t) {
        const Zigzag host = Zigzag::of(host_letters[t]);
        int lo = 0;
        while (next < pat.size()) {
            const auto at = place_left(pat[next], host, lo);
            if (!at) break;
            lo = at->end + 2;
            if (++next == pat.size()) return Anchor{t, at->end};
        }
    }
    return std::nullopt;
}

std::optional<Anchor> rightmost_start(const Word& pattern, const Word& text) {
    if (pattern.empty()) throw std::invalid_argument("rightmost_start needs a nonempty pattern");
    const auto pat = pattern.letters();
    const auto host_letters = text.letters();
    std::size_t remaining = pat.size();
    for (std::size_t t = host_letters.size(); t-- > 0;) {
        const Zigzag host = Zigzag::of(host_letters[t]);
        int hi = host.vertices - 1;
        while (remaining > 0) {
            const auto at = place_right(pat[remaining - 1], host, hi);
            if (!at) break;
            hi = at->start - 2;
            if (--remaining == 0) return Anchor{t, at->start};
        }
    }
    return std::nullopt;
}

bool is_class_symmetry(Symmetry s) {
    return std::find(class_symmetries.begin(), class_symmetries.end(), s) != class_symmetries.end();
}

Word sio_symmetry(const Word& w, Symmetry s) {
    if (!is_class_symmetry(s)) {
        throw std::invalid_argument("symmetry " + std::string(to_string(s)) + " does not fix SIO");
    }
    return to_word(transform(zigzags(w.letters()), s));
}

std::vector<Symmetry> type_preserving_symmetries(const Word& x) {
    std::vector<Symmetry> out;
    if (!has_defined_type(x)) return out;
    const auto t = type_of(x);
    for (Symmetry s : class_symmetries) {
        if (s != Symmetry::identity && type_of(sio_symmetry(x, s)) == t) out.push_back(s);
    }
    return out;
}

LemmaBijection::LemmaBijection(Word x, Symmetry s) : source_(std::move(x)), symmetry_(s) {
    if (!has_defined_type(source_)) {
        throw std::invalid_argument("type mismatch: '" + source_.to_string() + "' has an undefined Start or Finish");
    }
    image_ = sio_symmetry(source_, s);
    if (type_of(image_) != type_of(source_)) {
        throw std::invalid_argument("type mismatch: " + std::string(to_string(s)) + " changes the type of '" +
                                    source_.to_string() + "'");
    }
    std::tie(start_, finish_) = type_of(source_);
}

bool LemmaBijection::in_prefix_alphabet(const Letter& l) const {
    if (!l.zigzag()) return true;
    return l == (start_ == TypeMark::up ? Letter::w(3) : Letter::m(3));
}

bool LemmaBijection::in_suffix_alphabet(const Letter& l) const {
    if (!l.zigzag()) return true;
    return l == (finish_ == TypeMark::up ? Letter::m(3) : Letter::w(3));
}

Word LemmaBijection::operator()(const Word& w) const {
    const auto letters = w.letters();
    const std::size_t n = letters.size();
    std::size_t begin = 0;
    while (begin < n && in_prefix_alphabet(letters[begin])) ++begin;
    std::size_t end = n;
    while (end > begin && in_suffix_alphabet(letters[end - 1])) --end;
    if (begin == end) return w;

    // Trim the essential part E to the type of the source, map, then restore.
    auto parts = zigzags(letters.subspan(begin, end - begin));
    const bool trim_front = letters[begin].start() != start_;
    const bool trim_back = letters[end - 1].finish() != finish_;
    if (trim_front) {
        parts.front().vertices -= 1;
        parts.front().first = flip(parts.front().first);
    }
    if (trim_back) parts.back().vertices -= 1;
    if (parts.front().vertices < 2 || parts.back().vertices < 2) {
        throw std::logic_error("trimmed essential part lost its end edge");
    }
    parts = transform(std::move(parts), symmetry_);
    if (trim_front) {
        parts.front().vertices += 1;
        parts.front().first = flip(parts.front().first);
    }
    if (trim_back) parts.back().vertices += 1;

    return w.slice(0, begin) + to_word(parts) + w.slice(end, n);
}

Word lemma_bijection(const Word& x, Symmetry s, const Word& w) { return LemmaBijection(x, s)(w); }

namespace {

Zigzag segment(const Zigzag& z, int from, int count) { return {count, z.slope_at(from)}; }

// Joins two zigzags with one extra edge of slope `edge` between them.
// Short pieces (a lone vertex or an unoriented edge) take their orientation
// from the joining edge.
Zigzag glue(const Zigzag& left, Slope edge, const Zigzag& right) {
    if (right.vertices >= 3 && right.first != flip(edge)) {
        throw std::logic_error("inner bijection changed the Start of the usable part");
    }
    Zigzag out{left.vertices + right.vertices, edge};
    if (left.vertices >= 2) {
        // left's last edge has the opposite slope to the joining edge
        out.first = (left.vertices - 2) % 2 == 0 ? flip(edge) : edge;
        if (left.vertices >= 3 && left.first != out.first) {
            throw std::logic_error("inner bijection changed the Finish of the usable part");
        }
    }
    return out;
}

}  // namespace

SubstitutionBijection::SubstitutionBijection(Word prefix, Word suffix, WordMap inner)
    : prefix_(std::move(prefix)), suffix_(std::move(suffix)), inner_(std::move(inner)) {}

Word SubstitutionBijection::operator()(const Word& w) const {
    const auto parts = zigzags(w.letters());
    const std::size_t n = parts.size();
    if (n == 0) return w;

    // Usable region: from vertex `from` of letter xi to vertex `to` of letter yi.
    std::size_t xi = 0;
    int from = 0;
    if (!prefix_.empty()) {
        const auto end = leftmost_end(prefix_, w);
        if (!end) return w;
        xi = end->letter;
        from = end->vertex + 2;
    }
    std::size_t yi = n - 1;
    int to = parts[yi].vertices - 1;
    if (!suffix_.empty()) {
        const auto start = rightmost_start(suffix_, w);
        if (!start) return w;
        yi = start->letter;
        to = start->vertex - 2;
    }
    if (xi > yi || (xi == yi && to < from - 2)) return w;  // P S does not embed

    std::vector<Zigzag> middle;
    bool x_usable = true;
    bool y_usable = true;
    if (xi == yi) {
        const int count = to - from + 1;
        if (count <= 0) return w;
        middle.push_back(segment(parts[xi], from, count));
    } else {
        const int cx = parts[xi].vertices - from;
        x_usable = cx > 0;
        if (x_usable) middle.push_back(segment(parts[xi], from, cx));
        for (std::size_t k = xi + 1; k < yi; ++k) middle.push_back(parts[k]);
        y_usable = to >= 0;
        if (y_usable) middle.push_back(segment(parts[yi], 0, to + 1));
    }
    if (middle.empty()) return w;

    const Word usable = to_word(middle);
    const Word mapped = inner_(usable);
    if (mapped.size() != usable.size() || type_of(mapped) != type_of(usable)) {
        throw std::logic_error("inner bijection is not size- and type-preserving on '" + usable.to_string() + "'");
    }
    auto glued = zigzags(mapped.letters());

    std::vector<Zigzag> out(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(xi));
    if (!x_usable) {
        out.push_back(parts[xi]);
    } else if (from > 0) {
        const Zigzag head{from, parts[xi].first};
        glued.front() = glue(head, parts[xi].slope_at(from - 1), glued.front());
    }
    if (y_usable && !suffix_.empty()) {
        const int tail_count = parts[yi].vertices - (to + 1);
        const Zigzag tail = segment(parts[yi], to + 1, tail_count);
        glued.back() = glue(glued.back(), parts[yi].slope_at(to), tail);
    }
    out.insert(out.end(), glued.begin(), glued.end());
    if (!y_usable) out.push_back(parts[yi]);
    out.insert(out.end(), parts.begin() + static_cast<std::ptrdiff_t>(yi) + 1, parts.end());
    return to_word(out);
}

Word substitution_bijection(const Word& prefix, const Word& suffix, const WordMap& inner, const Word& w) {
    return SubstitutionBijection(prefix, suffix, inner)(w);
}

std::vector<Letter> letters_of_size(int n) {
    if (n == 1) return {Letter::a()};
    if (n == 2) return {Letter::b()};
    if (n >= 3) return {Letter::w(n), Letter::m(n)};
    return {};
}

namespace {

void extend_sio(int remaining, std::vector<Letter>& prefix, std::vector<Word>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = 1; k <= remaining; ++k) {
        for (const Letter& l : letters_of_size(k)) {
            prefix.push_back(l);
            extend_sio(remaining - k, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

std::vector<Word> enumerate_sio(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_sio needs n >= 0");
    std::vector<Word> out;
    std::vector<Letter> prefix;
    extend_sio(n, prefix, out);
    return out;
}

int disjoint_factor_count(const Word& w, const Word& f) {
    if (f.empty()) throw std::invalid_argument("disjoint_factor_count needs a nonempty factor");
    const auto text = w.letters();
    const auto factor = f.letters();
    int count = 0;
    std::size_t i = 0;
    while (i + factor.size() <= text.size()) {
        if (std::equal(factor.begin(), factor.end(), text.begin() + static_cast<std::ptrdiff_t>(i))) {
            ++count;
            i += factor.size();
        } else {
            ++i;
        }
    }
    return count;
}

std::vector<Word> factor_rewrites(const Word& w) {
    std::set<Word> found;
    const std::size_t n = w.length();
    for (std::size_t i = 0; i < n; ++i) {
        if (!w.letters()[i].zigzag()) continue;
        for (std::size_t j = i + 1; j <= n; ++j) {
            const Word factor = w.slice(i, j);
            for (Symmetry s : type_preserving_symmetries(factor)) {
                const Word image = sio_symmetry(factor, s);
                if (image != factor) found.insert(w.slice(0, i) + image + w.slice(j, n));
            }
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace wilf::sio
