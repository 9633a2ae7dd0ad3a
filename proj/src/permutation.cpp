#include "wilf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace wilf {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const auto n = values_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values_) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
            throw std::invalid_argument("not a permutation: values must be a bijection on 1.." +
                                        std::to_string(n));
        }
        seen[v] = true;
    }
}

Permutation Permutation::increasing(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    const bool compact = !text.empty() &&
                         std::all_of(text.begin(), text.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    std::vector<int> values;
    if (compact) {
        if (text.size() > 9) {
            throw std::invalid_argument("digit-string permutations are limited to n <= 9; use separators");
        }
        for (char c : text) values.push_back(c - '0');
        return Permutation(std::move(values));
    }
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc{}) {
            throw std::invalid_argument("bad permutation text: '" + std::string(text) + "'");
        }
        values.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
    std::string out;
    const bool compact = size() <= 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

Permutation standardize(std::span<const int> sequence) {
    std::vector<std::size_t> order(sequence.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sequence[a] < sequence[b]; });
    std::vector<int> ranks(sequence.size());
    for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(ranks));
}

namespace {

// Each symmetry as a signed permutation matrix acting on centred
// coordinates (2x - (n+1), 2y - (n+1)).
struct Matrix {
    int a, b, c, d;
    bool operator==(const Matrix&) const = default;
};

constexpr std::array<Matrix, 8> kMatrices{{
    {1, 0, 0, 1},    // identity
    {-1, 0, 0, 1},   // reverse
    {1, 0, 0, -1},   // complement
    {0, 1, 1, 0},    // inverse
    {-1, 0, 0, -1},  // reverse ∘ complement
    {0, -1, 1, 0},   // reverse ∘ inverse
    {0, 1, -1, 0},   // complement ∘ inverse
    {0, -1, -1, 0},  // reverse ∘ complement ∘ inverse
}};

constexpr std::array<std::string_view, 8> kNames{
    "identity",           "reverse",
    "complement",         "inverse",
    "reverse-complement", "reverse-inverse",
    "complement-inverse", "reverse-complement-inverse",
};

Matrix multiply(const Matrix& l, const Matrix& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

Symmetry from_matrix(const Matrix& m) {
    for (std::size_t i = 0; i < kMatrices.size(); ++i) {
        if (kMatrices[i] == m) return static_cast<Symmetry>(i);
    }
    throw std::logic_error("matrix outside the symmetry group");
}

const Matrix& matrix_of(Symmetry s) { return kMatrices[static_cast<std::size_t>(s)]; }

}  // namespace

Symmetry compose(Symmetry outer, Symmetry inner) {
    return from_matrix(multiply(matrix_of(outer), matrix_of(inner)));
}

Symmetry inverse_of(Symmetry s) {
    for (Symmetry t : all_symmetries) {
        if (compose(t, s) == Symmetry::identity) return t;
    }
    throw std::logic_error("symmetry without inverse");
}

std::string_view to_string(Symmetry s) { return kNames[static_cast<std::size_t>(s)]; }

Symmetry parse_symmetry(std::string_view name) {
    std::string norm(name);
    std::replace(norm.begin(), norm.end(), '_', '-');
    if (norm == "rc") return Symmetry::reverse_complement;
    if (norm == "ri") return Symmetry::reverse_inverse;
    if (norm == "ci") return Symmetry::complement_inverse;
    if (norm == "rci") return Symmetry::reverse_complement_inverse;
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == norm) return static_cast<Symmetry>(i);
    }
    throw std::invalid_argument("unknown symmetry '" + std::string(name) + "'");
}

Permutation apply_symmetry(const Permutation& p, Symmetry s) {
    const int n = p.size();
    const Matrix& m = matrix_of(s);
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        const int x = 2 * (i + 1) - (n + 1);
        const int y = 2 * p[i] - (n + 1);
        const int nx = m.a * x + m.b * y;
        const int ny = m.c * x + m.d * y;
        out[(nx + n + 1) / 2 - 1] = (ny + n + 1) / 2;
    }
    return Permutation(std::move(out));
}

Permutation compose(const Permutation& p, const Permutation& q, SumKind kind) {
    std::vector<int> out;
    out.reserve(p.size() + q.size());
    const int p_shift = kind == SumKind::skew ? q.size() : 0;
    const int q_shift = kind == SumKind::direct ? p.size() : 0;
    for (int v : p.values()) out.push_back(v + p_shift);
    for (int v : q.values()) out.push_back(v + q_shift);
    return Permutation(std::move(out));
}

std::vector<Permutation> sum_decompose(const Permutation& p) {
    std::vector<Permutation> parts;
    int start = 0;
    int running_max = 0;
    for (int i = 0; i < p.size(); ++i) {
        running_max = std::max(running_max, p[i]);
        if (running_max == i + 1) {
            std::vector<int> block;
            for (int j = start; j <= i; ++j) block.push_back(p[j] - start);
            parts.emplace_back(std::move(block));
            start = i + 1;
        }
    }
    return parts;
}

int InversionGraph::degree(int v) const {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const auto& e) {
        return e.first == v || e.second == v;
    }));
}

bool InversionGraph::connected() const {
    if (vertices <= 1) return true;
    std::vector<int> parent(vertices + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = vertices;
    for (auto [u, v] : edges) {
        const int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    return components == 1;
}

bool InversionGraph::is_path() const {
    if (vertices == 0) return false;
    if (static_cast<int>(edges.size()) != vertices - 1 || !connected()) return false;
    for (int v = 1; v <= vertices; ++v) {
        if (degree(v) > 2) return false;
    }
    return true;
}

InversionGraph inversion_graph(const Permutation& p) {
    InversionGraph g;
    g.vertices = p.size();
    for (int i = 0; i < p.size(); ++i) {
        for (int j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j]) g.edges.emplace_back(i + 1, j + 1);
        }
    }
    return g;
}

namespace {

class Matcher {
public:
    Matcher(const Permutation& text, const Permutation& pattern)
        : text_(text), pattern_(pattern), chosen_(pattern.size()) {}

    bool run() { return extend(0, 0); }

private:
    bool extend(int k, int from) {
        const int m = pattern_.size();
        if (k == m) return true;
        const int last_start = text_.size() - (m - k);
        for (int i = from; i <= last_start; ++i) {
            if (consistent(k, i)) {
                chosen_[k] = i;
                if (extend(k + 1, i + 1)) return true;
            }
        }
        return false;
    }

    bool consistent(int k, int i) const {
        for (int j = 0; j < k; ++j) {
            if ((pattern_[j] < pattern_[k]) != (text_[chosen_[j]] < text_[i])) return false;
        }
        return true;
    }

    const Permutation& text_;
    const Permutation& pattern_;
    std::vector<int> chosen_;
};

}  // namespace

bool contains_bruteforce(const Permutation& text, const Permutation& pattern) {
    if (pattern.size() > text.size()) return false;
    return Matcher(text, pattern).run();
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace wilf
