#pragma once

// Avoidance-vector censuses over the X-class and SIO: full enumeration of
// each size layer, pattern-level fan-out, grouping by vector and by the
// theoretical equivalences, and collapse statistics.

#include "wilf/sio.hpp"
#include "wilf/xclass.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wilf::census {

enum class ClassTag { x, sio };

std::string_view to_string(ClassTag c);

using Counts = std::vector<std::uint64_t>;

/// Thrown when a wall-clock budget runs out; `completed` is the largest
/// size layer fully processed.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(int completed);
    int completed() const noexcept { return completed_; }

private:
    int completed_;
};

class Budget {
public:
    Budget() = default;
    explicit Budget(double seconds);

    bool unlimited() const noexcept { return !deadline_; }
    /// Throws BudgetExceeded(completed) once the deadline has passed.
    void check(int completed) const;

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

/// Runs body(i) for i in [0, count) on a pool of worker threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// counts[n - 1] = |Av(pattern) of size n| for n = 1..N.
Counts avoidance_vector(const xclass::Word& pattern, int N, const Budget& budget = {});
Counts avoidance_vector(const sio::Word& pattern, int N, const Budget& budget = {});

/// One vector per pattern, sharing each enumerated layer across patterns.
std::vector<Counts> avoidance_vectors(const std::vector<xclass::Word>& patterns, int N, const Budget& budget = {});
std::vector<Counts> avoidance_vectors(const std::vector<sio::Word>& patterns, int N, const Budget& budget = {});

struct AvoidanceVector {
    std::string pattern;
    int size = 0;
    Counts counts;
};

using Groups = std::vector<std::vector<std::string>>;

struct CensusReport {
    ClassTag tag = ClassTag::x;
    int pattern_size = 0;
    int horizon = 0;
    std::vector<AvoidanceVector> vectors;  ///< sorted by pattern text
    Groups groups;                         ///< equal avoidance vectors
    Groups theory_groups;                  ///< Wilf keys (X) or rewrite closure (SIO)
    /// Theory groups that straddle two vector groups; must stay empty.
    Groups refinement_violations;
};

CensusReport census(ClassTag tag, int pattern_size, int horizon, const Budget& budget = {});

/// Deterministic JSON (2-space indent) and CSV renderings.
std::string to_json(const CensusReport& report);
std::string to_csv(const CensusReport& report);

/// Partition of `words` (by text) into rewrite-closure classes.
Groups rewrite_classes(const std::vector<sio::Word>& words);

struct CollapseRow {
    int n = 0;
    std::uint64_t class_count = 0;
    std::optional<std::uint64_t> empirical;  ///< distinct vectors, when computed
    std::uint64_t theoretical = 0;           ///< keys (X) or closure classes (SIO)
    double theory_ratio() const { return static_cast<double>(theoretical) / static_cast<double>(class_count); }
};

struct CollapseStats {
    ClassTag tag = ClassTag::x;
    int max_n = 0;
    int horizon = 0;
    std::vector<CollapseRow> rows;
    // SIO only: disjoint occurrences of `factor` over all words of size max_n.
    std::string factor;
    std::map<int, std::uint64_t> factor_distribution;
    /// Words whose closure class has fewer than 2^count members.
    std::uint64_t bound_failures = 0;
};

/// Rows for n = 1..max_n; w_n(emp) only for n <= empirical_limit, using
/// vectors to `horizon`.
CollapseStats collapse_stats(ClassTag tag, int max_n, int empirical_limit, int horizon, const Budget& budget = {});

std::string to_json(const CollapseStats& stats);

struct DiscrepancyCandidate {
    std::string word;
    Counts counts;
    bool matches = false;
    /// Class symmetry carrying the base word here, if any.
    std::optional<Symmetry> symmetry;
    bool type_preserved = false;
};

struct DiscrepancyReport {
    int horizon = 0;
    std::string base;
    Counts base_counts;
    std::vector<DiscrepancyCandidate> candidates;
};

/// Compares "w3 m4" with "w4 w3" and "w4 m3" by avoidance vectors.
DiscrepancyReport discrepancy(int horizon, const Budget& budget = {});

std::string to_json(const DiscrepancyReport& report);

}  // namespace wilf::census
