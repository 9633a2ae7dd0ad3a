// wilfc: encoders, containment, censuses and collapse statistics for the
// X-class and SIO.
//
// Exit status: 0 success, 1 invalid input, 2 budget exhausted.

#include "wilf/census.hpp"
#include "wilf/series.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <set>

namespace {

using namespace wilf;

struct Options {
    int max_n = 0;
    int pattern_size = 4;
    std::string out;
    std::string format = "json";
    std::string m_variant = "restricted";
    double budget_seconds = 0;
    std::vector<std::string> args;
    bool discrepancy = false;
    int empirical_limit = 0;
};

census::Budget make_budget(const Options& o) {
    return o.budget_seconds > 0 ? census::Budget(o.budget_seconds) : census::Budget();
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file) throw std::invalid_argument("cannot write " + o.out);
    file << text;
}

std::string line(const std::string& s) { return s + "\n"; }

const std::string& arg(const Options& o, std::size_t i) {
    if (o.args.size() <= i) throw std::invalid_argument("missing argument");
    return o.args[i];
}

void x_count(const Options& o) {
    const int N = o.max_n > 0 ? o.max_n : 10;
    const Series gf = x_class_series(N);
    std::string text = "n,enumerated,gf_coefficient\n";
    const census::Budget budget = make_budget(o);
    for (int n = 1; n <= N; ++n) {
        budget.check(n - 1);
        text += std::to_string(n) + "," + std::to_string(xclass::enumerate_words(n).size()) + "," + gf[n].str() + "\n";
    }
    emit(o, text);
}

void x_keys(const Options& o) {
    const int N = o.max_n > 0 ? o.max_n : 10;
    const Series series = partition_key_series(N);
    std::string text = "n,distinct_keys,series_coefficient\n";
    for (int n = 1; n <= N; ++n) {
        std::set<xclass::WilfKey> keys;
        for (const auto& w : xclass::enumerate_words(n)) keys.insert(xclass::wilf_key(w));
        text += std::to_string(n) + "," + std::to_string(keys.size()) + "," + series[n].str() + "\n";
    }
    emit(o, text);
}

void x_invgf(const Options& o) {
    const int N = o.max_n > 0 ? o.max_n : 10;
    const auto variant =
        o.m_variant == "all" ? xclass::MVariant::all_words : xclass::MVariant::start_sign_restricted;
    emit(o, line(xclass::inv_gf(xclass::Word::parse(arg(o, 0)), N, variant).to_string()));
}

void run_census(const Options& o, census::ClassTag tag) {
    const int N = o.max_n > 0 ? o.max_n : (tag == census::ClassTag::x ? 10 : 12);
    const auto report = census::census(tag, o.pattern_size, N, make_budget(o));
    emit(o, o.format == "csv" ? census::to_csv(report) : census::to_json(report));
}

void sio_bijection(const Options& o) {
    const sio::LemmaBijection phi(sio::Word::parse(arg(o, 0)), parse_symmetry(arg(o, 1)));
    emit(o, line(phi(sio::Word::parse(arg(o, 2))).to_string()));
}

void sio_stats(const Options& o) {
    const int N = o.max_n > 0 ? o.max_n : 12;
    if (o.discrepancy) {
        emit(o, census::to_json(census::discrepancy(N, make_budget(o))));
        return;
    }
    const int limit = o.empirical_limit > 0 ? o.empirical_limit : std::min(N, 8);
    emit(o, census::to_json(census::collapse_stats(census::ClassTag::sio, N, limit, N, make_budget(o))));
}

void x_stats(const Options& o) {
    const int N = o.max_n > 0 ? o.max_n : 10;
    const int limit = o.empirical_limit > 0 ? o.empirical_limit : std::min(N, 5);
    emit(o, census::to_json(census::collapse_stats(census::ClassTag::x, N, limit, N, make_budget(o))));
}

struct XAdapter {
    static Permutation decode_perm(const xclass::Word& w) { return xclass::decode(w); }
};
struct SioAdapter {
    static Permutation decode_perm(const sio::Word& w) { return sio::word_to_perm(w); }
};

template <class Pattern, class Adapter, class Enumerate, class Fast>
std::uint64_t oracle_mismatches(int max_pattern, int max_text, Enumerate enumerate, Fast fast) {
    std::vector<Pattern> patterns;
    std::vector<std::pair<Pattern, Permutation>> texts;
    for (int k = 1; k <= max_pattern; ++k) {
        for (auto& w : enumerate(k)) patterns.push_back(w);
    }
    for (int n = 1; n <= max_text; ++n) {
        for (auto& w : enumerate(n)) texts.emplace_back(w, Adapter::decode_perm(w));
    }
    std::atomic<std::uint64_t> bad{0};
    census::parallel_for(patterns.size(), [&](std::size_t i) {
        const Permutation p = Adapter::decode_perm(patterns[i]);
        for (const auto& [t, tp] : texts) {
            if (fast(patterns[i], t) != contains_bruteforce(tp, p)) ++bad;
        }
    });
    return bad;
}

int selfcheck() {
    const auto x_bad = oracle_mismatches<xclass::Word, XAdapter>(
        4, 7, xclass::enumerate_words, [](const auto& p, const auto& t) { return xclass::greedy_contains(p, t); });
    const auto s_bad = oracle_mismatches<sio::Word, SioAdapter>(
        5, 8, sio::enumerate_sio, [](const auto& p, const auto& t) { return sio::sio_contains(p, t); });
    std::cout << (x_bad == 0 ? "[PASS]" : "[FAIL]") << " xclass greedy vs oracle (pattern <= 4, text <= 7): "
              << x_bad << " mismatches\n";
    std::cout << (s_bad == 0 ? "[PASS]" : "[FAIL]") << " sio packing vs oracle (pattern <= 5, text <= 8): " << s_bad
              << " mismatches\n";
    return x_bad == 0 && s_bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wilf-collapse censuses for the X-class and SIO"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--max-n", o.max_n, "Largest size / series order");
        cmd->add_option("--out", o.out, "Write output to this path");
        cmd->add_option("--budget-seconds", o.budget_seconds, "Wall-clock budget");
    };
    auto add_census = [&](CLI::App* cmd) {
        cmd->add_option("--pattern-size", o.pattern_size, "Pattern size k")->check(CLI::PositiveNumber);
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    std::function<void()> action;
    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help, int nargs,
                   std::function<void()> fn) {
        CLI::App* cmd = parent->add_subcommand(name, help);
        if (nargs > 0) cmd->add_option("args", o.args, "Arguments")->expected(nargs)->required();
        add_common(cmd);
        cmd->callback([&action, fn] { action = fn; });
        return cmd;
    };

    CLI::App* x = app.add_subcommand("xclass", "X-class words and censuses");
    x->require_subcommand(1);
    sub(x, "encode", "Permutation -> word", 1, [&] { emit(o, line(xclass::encode(Permutation::parse(arg(o, 0))).to_string())); });
    sub(x, "decode", "Word -> permutation", 1, [&] { emit(o, line(xclass::decode(xclass::Word::parse(arg(o, 0))).to_string())); });
    sub(x, "contains", "PATTERN TEXT (words)", 2, [&] {
        emit(o, line(xclass::greedy_contains(xclass::Word::parse(arg(o, 0)), xclass::Word::parse(arg(o, 1))) ? "true" : "false"));
    });
    sub(x, "count", "Class counts against the generating function", 0, [&] { x_count(o); });
    add_census(sub(x, "census", "Avoidance-vector census", 0, [&] { run_census(o, census::ClassTag::x); }));
    sub(x, "invgf", "Series of words containing WORD", 1, [&] { x_invgf(o); })
        ->add_option("--m-variant", o.m_variant, "Terminal factor variant")
        ->check(CLI::IsMember({"all", "restricted"}));
    sub(x, "keys", "Distinct Wilf keys per size against the partition series", 0, [&] { x_keys(o); });
    sub(x, "stats", "Collapse statistics", 0, [&] { x_stats(o); })
        ->add_option("--empirical-limit", o.empirical_limit, "Largest size for distinct vectors");

    CLI::App* s = app.add_subcommand("sio", "SIO words, bijections and censuses");
    s->require_subcommand(1);
    sub(s, "encode", "Permutation -> word", 1, [&] { emit(o, line(sio::perm_to_word(Permutation::parse(arg(o, 0))).to_string())); });
    sub(s, "decode", "Word -> permutation", 1, [&] { emit(o, line(sio::word_to_perm(sio::Word::parse(arg(o, 0))).to_string())); });
    sub(s, "contains", "PATTERN TEXT (words)", 2, [&] {
        emit(o, line(sio::sio_contains(sio::Word::parse(arg(o, 0)), sio::Word::parse(arg(o, 1))) ? "true" : "false"));
    });
    add_census(sub(s, "census", "Avoidance-vector census", 0, [&] { run_census(o, census::ClassTag::sio); }));
    sub(s, "bijection", "X SYMMETRY W: apply the symmetry bijection to W", 3, [&] { sio_bijection(o); });
    CLI::App* stats = sub(s, "stats", "Collapse statistics", 0, [&] { sio_stats(o); });
    stats->add_flag("--discrepancy", o.discrepancy, "Compare w3 m4 with w4 w3 and w4 m3");
    stats->add_option("--empirical-limit", o.empirical_limit, "Largest size for distinct vectors");

    int code = 0;
    app.add_subcommand("selfcheck", "Run the oracle-equivalence suites")->callback([&] {
        action = [&] { code = selfcheck(); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    try {
        action();
    } catch (const census::BudgetExceeded& e) {
        std::cerr << "wilfc: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "wilfc: " << e.what() << "\n";
        return 1;
    }
    return code;
}
