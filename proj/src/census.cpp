#include "wilf/census.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace wilf::census {

using nlohmann::ordered_json;

std::string_view to_string(ClassTag c) { return c == ClassTag::x ? "X" : "SIO"; }

BudgetExceeded::BudgetExceeded(int completed)
    : std::runtime_error("budget exhausted after n = " + std::to_string(completed)), completed_(completed) {}

Budget::Budget(double seconds)
    : deadline_(std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds))) {}

void Budget::check(int completed) const {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_) throw BudgetExceeded(completed);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

template <class W, class Enumerate, class Contains>
std::vector<Counts> layered_vectors(const std::vector<W>& patterns, int N, const Budget& budget, Enumerate enumerate,
                                    Contains contains) {
    std::vector<Counts> out(patterns.size(), Counts(static_cast<std::size_t>(std::max(N, 0)), 0));
    for (int n = 1; n <= N; ++n) {
        budget.check(n - 1);
        const std::vector<W> layer = enumerate(n);
        parallel_for(patterns.size(), [&](std::size_t i) {
            const W& p = patterns[i];
            std::uint64_t avoiders = layer.size();
            if (p.size() <= n) {
                avoiders = static_cast<std::uint64_t>(
                    std::count_if(layer.begin(), layer.end(), [&](const W& t) { return !contains(p, t); }));
            }
            out[i][static_cast<std::size_t>(n - 1)] = avoiders;
        });
    }
    budget.check(N);
    return out;
}

// Groups names by a key, members sorted, groups ordered by first member.
template <class Key>
Groups group_by(const std::vector<std::string>& names, const std::vector<Key>& keys) {
    std::map<Key, std::vector<std::string>> buckets;
    for (std::size_t i = 0; i < names.size(); ++i) buckets[keys[i]].push_back(names[i]);
    Groups out;
    for (auto& [key, members] : buckets) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t i) {
        while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
        return i;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

std::vector<std::size_t> rewrite_roots(const std::vector<sio::Word>& words) {
    std::map<sio::Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    std::vector<std::vector<sio::Word>> images(words.size());
    parallel_for(words.size(), [&](std::size_t i) { images[i] = sio::factor_rewrites(words[i]); });
    DisjointSets sets(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (const sio::Word& img : images[i]) {
            const auto it = index.find(img);
            if (it == index.end()) {
                throw std::logic_error("rewrite of '" + words[i].to_string() + "' left the layer");
            }
            sets.unite(i, it->second);
        }
    }
    std::vector<std::size_t> roots(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) roots[i] = sets.find(i);
    return roots;
}

template <class W>
std::vector<std::string> texts(const std::vector<W>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const W& w : words) out.push_back(w.to_string());
    return out;
}

template <class W>
std::vector<W> sorted_by_text(std::vector<W> words) {
    std::sort(words.begin(), words.end(),
              [](const W& a, const W& b) { return a.to_string() < b.to_string(); });
    return words;
}

Groups violations_of(const Groups& theory, const std::map<std::string, Counts>& vector_of) {
    Groups out;
    for (const auto& g : theory) {
        const Counts& first = vector_of.at(g.front());
        for (const auto& name : g) {
            if (vector_of.at(name) != first) {
                out.push_back(g);
                break;
            }
        }
    }
    return out;
}

std::string status(std::size_t members, int horizon) {
    return members > 1 ? "empirically equivalent (" + std::to_string(horizon) + ")" : "singleton";
}

}  // namespace

std::vector<Counts> avoidance_vectors(const std::vector<xclass::Word>& patterns, int N, const Budget& budget) {
    return layered_vectors(patterns, N, budget, xclass::enumerate_words,
                           [](const xclass::Word& p, const xclass::Word& t) { return xclass::greedy_contains(p, t); });
}

std::vector<Counts> avoidance_vectors(const std::vector<sio::Word>& patterns, int N, const Budget& budget) {
    return layered_vectors(patterns, N, budget, sio::enumerate_sio,
                           [](const sio::Word& p, const sio::Word& t) { return sio::sio_contains(p, t); });
}

Counts avoidance_vector(const xclass::Word& pattern, int N, const Budget& budget) {
    return avoidance_vectors(std::vector<xclass::Word>{pattern}, N, budget).front();
}

Counts avoidance_vector(const sio::Word& pattern, int N, const Budget& budget) {
    return avoidance_vectors(std::vector<sio::Word>{pattern}, N, budget).front();
}

Groups rewrite_classes(const std::vector<sio::Word>& words) {
    return group_by(texts(words), rewrite_roots(words));
}

CensusReport census(ClassTag tag, int pattern_size, int horizon, const Budget& budget) {
    if (pattern_size < 1) throw std::invalid_argument("pattern size must be at least 1");
    if (pattern_size > horizon) throw std::invalid_argument("pattern size exceeds the horizon");
    CensusReport report;
    report.tag = tag;
    report.pattern_size = pattern_size;
    report.horizon = horizon;

    std::vector<std::string> names;
    std::vector<Counts> vectors;
    if (tag == ClassTag::x) {
        const auto patterns = sorted_by_text(xclass::enumerate_words(pattern_size));
        names = texts(patterns);
        vectors = avoidance_vectors(patterns, horizon, budget);
        std::vector<xclass::WilfKey> keys;
        for (const auto& p : patterns) keys.push_back(xclass::wilf_key(p));
        report.theory_groups = group_by(names, keys);
    } else {
        const auto patterns = sorted_by_text(sio::enumerate_sio(pattern_size));
        names = texts(patterns);
        vectors = avoidance_vectors(patterns, horizon, budget);
        report.theory_groups = group_by(names, rewrite_roots(patterns));
    }
    std::map<std::string, Counts> vector_of;
    for (std::size_t i = 0; i < names.size(); ++i) {
        report.vectors.push_back({names[i], pattern_size, vectors[i]});
        vector_of.emplace(names[i], vectors[i]);
    }
    report.groups = group_by(names, vectors);
    report.refinement_violations = violations_of(report.theory_groups, vector_of);
    return report;
}

std::string to_json(const CensusReport& report) {
    std::map<std::string, Counts> vector_of;
    for (const auto& v : report.vectors) vector_of.emplace(v.pattern, v.counts);

    ordered_json j;
    j["class"] = to_string(report.tag);
    j["pattern_size"] = report.pattern_size;
    j["horizon"] = report.horizon;
    j["vectors"] = ordered_json::array();
    for (const auto& v : report.vectors) {
        j["vectors"].push_back({{"pattern", v.pattern}, {"size", v.size}, {"counts", v.counts}});
    }
    j["groups"] = ordered_json::array();
    for (const auto& g : report.groups) {
        j["groups"].push_back({{"members", g}, {"counts", vector_of.at(g.front())}, {"status", status(g.size(), report.horizon)}});
    }
    const char* theory = report.tag == ClassTag::x ? "key_groups" : "rewrite_groups";
    j[theory] = ordered_json::array();
    for (const auto& g : report.theory_groups) {
        ordered_json entry{{"members", g}};
        if (report.tag == ClassTag::x) {
            entry["key"] = xclass::wilf_key(xclass::Word::parse(g.front())).to_string();
        }
        j[theory].push_back(std::move(entry));
    }
    j["refines_vector_groups"] = report.refinement_violations.empty();
    j["refinement_violations"] = report.refinement_violations;
    return j.dump(2) + "\n";
}

std::string to_csv(const CensusReport& report) {
    std::ostringstream out;
    out << "pattern,size";
    for (int n = 1; n <= report.horizon; ++n) out << ",n" << n;
    out << '\n';
    for (const auto& v : report.vectors) {
        out << '"' << v.pattern << "\"," << v.size;
        for (auto c : v.counts) out << ',' << c;
        out << '\n';
    }
    return out.str();
}

CollapseStats collapse_stats(ClassTag tag, int max_n, int empirical_limit, int horizon, const Budget& budget) {
    CollapseStats stats;
    stats.tag = tag;
    stats.max_n = max_n;
    stats.horizon = horizon;
    std::vector<std::size_t> last_roots;
    std::vector<sio::Word> last_layer;
    for (int n = 1; n <= max_n; ++n) {
        budget.check(n - 1);
        CollapseRow row;
        row.n = n;
        if (tag == ClassTag::x) {
            const auto words = xclass::enumerate_words(n);
            row.class_count = words.size();
            std::set<xclass::WilfKey> keys;
            for (const auto& w : words) keys.insert(xclass::wilf_key(w));
            row.theoretical = keys.size();
            if (n <= empirical_limit) {
                const auto vectors = avoidance_vectors(words, horizon, budget);
                row.empirical = std::set<Counts>(vectors.begin(), vectors.end()).size();
            }
        } else {
            auto words = sio::enumerate_sio(n);
            row.class_count = words.size();
            auto roots = rewrite_roots(words);
            row.theoretical = std::set<std::size_t>(roots.begin(), roots.end()).size();
            if (n <= empirical_limit) {
                const auto vectors = avoidance_vectors(words, horizon, budget);
                row.empirical = std::set<Counts>(vectors.begin(), vectors.end()).size();
            }
            last_roots = std::move(roots);
            last_layer = std::move(words);
        }
        stats.rows.push_back(row);
    }
    if (tag == ClassTag::sio && max_n >= 1) {
        const sio::Word factor = sio::Word::parse("w3 m4");
        stats.factor = factor.to_string();
        std::unordered_map<std::size_t, std::uint64_t> class_size;
        for (auto r : last_roots) ++class_size[r];
        for (std::size_t i = 0; i < last_layer.size(); ++i) {
            const int count = sio::disjoint_factor_count(last_layer[i], factor);
            ++stats.factor_distribution[count];
            if (class_size[last_roots[i]] < (std::uint64_t{1} << count)) ++stats.bound_failures;
        }
    }
    return stats;
}

std::string to_json(const CollapseStats& stats) {
    ordered_json j;
    j["class"] = to_string(stats.tag);
    j["max_n"] = stats.max_n;
    j["horizon"] = stats.horizon;
    j["rows"] = ordered_json::array();
    for (const auto& r : stats.rows) {
        ordered_json row{{"n", r.n}, {"class_count", r.class_count}};
        row["w_emp"] = r.empirical ? ordered_json(*r.empirical) : ordered_json(nullptr);
        row["w_thy"] = r.theoretical;
        row["w_thy_over_c"] = r.theory_ratio();
        j["rows"].push_back(std::move(row));
    }
    if (stats.tag == ClassTag::sio) {
        ordered_json dist = ordered_json::array();
        for (const auto& [count, words] : stats.factor_distribution) {
            dist.push_back({{"disjoint_occurrences", count}, {"words", words}, {"class_size_lower_bound", std::uint64_t{1} << count}});
        }
        j["factor"] = stats.factor;
        j["factor_size"] = stats.max_n;
        j["factor_distribution"] = std::move(dist);
        j["lower_bound_failures"] = stats.bound_failures;
    }
    return j.dump(2) + "\n";
}

DiscrepancyReport discrepancy(int horizon, const Budget& budget) {
    const sio::Word base = sio::Word::parse("w3 m4");
    const std::vector<sio::Word> words{base, sio::Word::parse("w4 w3"), sio::Word::parse("w4 m3")};
    const auto vectors = avoidance_vectors(words, horizon, budget);

    DiscrepancyReport report;
    report.horizon = horizon;
    report.base = base.to_string();
    report.base_counts = vectors[0];
    for (std::size_t i = 1; i < words.size(); ++i) {
        DiscrepancyCandidate c;
        c.word = words[i].to_string();
        c.counts = vectors[i];
        c.matches = vectors[i] == vectors[0];
        for (Symmetry s : sio::class_symmetries) {
            if (sio::sio_symmetry(base, s) == words[i]) {
                c.symmetry = s;
                break;
            }
        }
        c.type_preserved = sio::type_of(words[i]) == sio::type_of(base);
        report.candidates.push_back(std::move(c));
    }
    return report;
}

std::string to_json(const DiscrepancyReport& report) {
    const auto [start, finish] = sio::type_of(sio::Word::parse(report.base));
    ordered_json j;
    j["horizon"] = report.horizon;
    j["base"] = report.base;
    j["base_type"] = {to_string(start), to_string(finish)};
    j["base_counts"] = report.base_counts;
    j["candidates"] = ordered_json::array();
    for (const auto& c : report.candidates) {
        const auto [s, f] = sio::type_of(sio::Word::parse(c.word));
        ordered_json entry;
        entry["word"] = c.word;
        entry["type"] = {to_string(s), to_string(f)};
        entry["counts"] = c.counts;
        entry["matches_base"] = c.matches;
        entry["symmetry_image"] = c.symmetry ? ordered_json(std::string(to_string(*c.symmetry))) : ordered_json(nullptr);
        entry["lemma_type_check"] = c.symmetry && c.type_preserved ? "passes" : "fails";
        j["candidates"].push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

}  // namespace wilf::census
