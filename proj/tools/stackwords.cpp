// Command-line front end for the stackwords library.
//
// Exit status: 0 success/pass, 1 verification failure, 2 usage or parse
// error, 3 resource cap.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stackwords/stackwords.hpp"

namespace sw = stackwords;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

struct int_range {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

// "LO..HI" or a single "N"
int_range parse_range(const std::string& text, const char* flag) {
    auto bad = [&] { return sw::usage_error(std::string(flag) + ": expected N or LO..HI, got '" + text + "'"); };
    auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw bad();
        return static_cast<std::size_t>(std::stoull(s));
    };
    int_range r;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        r.lo = number(text.substr(0, dots));
        r.hi = number(text.substr(dots + 2));
    } else {
        r.lo = r.hi = number(text);
    }
    if (r.lo > r.hi) throw sw::usage_error(std::string(flag) + ": LO must not exceed HI in '" + text + "'");
    return r;
}

struct common_options {
    std::string seq;
    std::string dfao_path;
    std::size_t prefix_init = sw::stabilization_policy{}.min_initial;
    std::size_t prefix_max = sw::stabilization_policy{}.max_length;
    unsigned window = sw::stabilization_policy{}.window;
    bool pure_doubling = false;
    std::string format = "text";
    std::string out;

    sw::stabilization_policy policy() const {
        sw::stabilization_policy p;
        p.min_initial = prefix_init;
        p.max_length = prefix_max;
        p.window = window;
        p.use_known_targets = !pure_doubling;
        return p;
    }

    sw::infinite_word sequence(const char* fallback = nullptr) const {
        if (!seq.empty() && !dfao_path.empty()) throw sw::usage_error("give either --seq or --dfao, not both");
        if (!dfao_path.empty()) return sw::dfao_word(sw::load_dfao(dfao_path), dfao_path);
        const std::string name = seq.empty() && fallback ? fallback : seq;
        if (name == "f") return sw::paperfolding_word();
        if (name == "t") return sw::thue_morse_word();
        if (name.empty()) throw sw::usage_error("a sequence is required: --seq f|t or --dfao FILE");
        throw sw::usage_error("unknown sequence '" + name + "' (built-ins are f and t)");
    }
};

void add_common(CLI::App* cmd, common_options& o, bool with_sequence = true) {
    if (with_sequence) {
        cmd->add_option("--seq", o.seq, "built-in sequence: f (paperfolding) or t (Thue-Morse)");
        cmd->add_option("--dfao", o.dfao_path, "DFAO description file defining the sequence");
    }
    cmd->add_option("--prefix-init", o.prefix_init, "minimum initial prefix length");
    cmd->add_option("--prefix-max", o.prefix_max, "prefix length cap");
    cmd->add_option("--window", o.window, "stable doublings required");
    cmd->add_flag("--pure-doubling", o.pure_doubling, "ignore closed-form complexity targets");
    cmd->add_option("--format", o.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", o.out, "output file (default: standard output)");
}

void emit(const common_options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file) throw sw::usage_error("cannot write '" + o.out + "'");
    file << text;
}

template <class T>
std::string join(const std::vector<T>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    return out.str();
}

int run_word(const std::string& op, const std::string& text, std::uint64_t k) {
    const auto w = sw::parse_word(text);
    const auto alphabet = std::max<std::size_t>(sw::alphabet_bound(w), 1);
    auto print = [&](const sw::word& r) { std::cout << sw::format_word(r, alphabet) << '\n'; };
    if (op == "hare") print(sw::hare(w));
    else if (op == "tortoise") print(sw::tortoise(w));
    else if (op == "sort") print(sw::sort(w));
    else if (op == "iterate") print(sw::iterate_tortoise(w, k));
    else if (op == "nearly") print(sw::nearly_abelian_key(w));
    else if (op == "index") std::cout << sw::tortoise_sort_index(w) << '\n';
    else throw sw::usage_error("unknown word operation '" + op + "'");
    return 0;
}

sw::complexity_kind parse_kind(const std::string& kind) {
    if (kind == "rho") return sw::complexity_kind::factor;
    if (kind == "ab") return sw::complexity_kind::abelian;
    if (kind == "tortoise") return sw::complexity_kind::tortoise;
    if (kind == "nearly") return sw::complexity_kind::nearly_abelian;
    throw sw::usage_error("unknown table kind '" + kind + "'");
}

int run_table(const std::string& kind_name, const common_options& o, const std::string& n_text,
              std::uint64_t k) {
    const auto kind = parse_kind(kind_name);
    const auto range = parse_range(n_text, "--n");
    if (k == 0) throw sw::usage_error("--k must be at least 1");
    sw::factor_catalog catalog(o.sequence(), o.policy());
    const auto table = sw::tabulate(catalog, kind, range.lo, range.hi, k);
    if (o.format == "csv") {
        emit(o, sw::to_csv(table));
    } else if (o.format == "json") {
        emit(o, sw::to_json(table).dump(2) + "\n");
    } else {
        std::size_t lo = table.rows.front().prefix_length, hi = lo;
        for (const auto& r : table.rows) {
            lo = std::min(lo, r.prefix_length);
            hi = std::max(hi, r.prefix_length);
        }
        std::ostringstream out;
        out << join(table.counts()) << '\n'
            << "# " << sw::to_string(kind) << (kind == sw::complexity_kind::tortoise ? "(k=" + std::to_string(k) + ")" : "")
            << " of " << table.sequence << ", n=" << range.lo << ".." << range.hi << ", prefix lengths "
            << lo << ".." << hi << '\n';
        emit(o, out.str());
    }
    return 0;
}

int run_stat(const std::string& kind, const common_options& o, const std::string& k_text,
             std::size_t n_max) {
    const auto ks = parse_range(k_text, "--k");
    if (ks.lo == 0) throw sw::usage_error("--k must be at least 1");
    if (n_max == 0) throw sw::usage_error("--nmax must be at least 1");
    std::vector<std::string> values;
    sw::json rows = sw::json::array();
    std::string label;
    if (kind == "abel") {
        sw::factor_catalog catalog(o.sequence(), o.policy());
        label = "abel_" + catalog.sequence().name + "(k)";
        for (auto k = ks.lo; k <= ks.hi; ++k) {
            const auto s = sw::abel_stat(catalog, k, n_max);
            values.push_back(s.value ? std::to_string(*s.value) : "none");
            rows.push_back({{"k", k}, {"value", s.value ? sw::json(*s.value) : sw::json(nullptr)}, {"n_max", n_max}});
        }
    } else if (kind == "threshold") {
        if (!o.dfao_path.empty() || (!o.seq.empty() && o.seq != "f"))
            throw sw::usage_error("stat threshold is defined for the paperfolding word only");
        sw::factor_catalog catalog(sw::paperfolding_word(), o.policy());
        label = "s(k)";
        for (auto k = ks.lo; k <= ks.hi; ++k) {
            const auto s = sw::pf_threshold(catalog, k, n_max);
            values.push_back(std::to_string(s.value));
            rows.push_back({{"k", k}, {"value", s.value}, {"n_max", n_max}});
        }
    } else {
        throw sw::usage_error("unknown statistic '" + kind + "'");
    }
    if (o.format == "json") {
        emit(o, sw::json{{"statistic", kind}, {"values", rows}}.dump(2) + "\n");
    } else if (o.format == "csv") {
        std::string out = "k,value,n_max\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            out += std::to_string(ks.lo + i) + ',' + values[i] + ',' + std::to_string(n_max) + '\n';
        emit(o, out);
    } else {
        emit(o, join(values) + "\n# " + label + " for k=" + std::to_string(ks.lo) + ".." +
                    std::to_string(ks.hi) + ", verified for n <= " + std::to_string(n_max) + "\n");
    }
    return 0;
}

int run_verify(const std::string& suite, const common_options& o, const std::string& n_text) {
    const auto range = parse_range(n_text, "--n");
    const auto policy = o.policy();
    const bool all = suite == "all";
    if (!all && std::ranges::find(sw::suite_names(), suite) == sw::suite_names().end())
        throw sw::usage_error("unknown suite '" + suite + "'");

    std::optional<sw::factor_catalog> f, t, custom;
    auto catalog_for = [&](const char* name) -> sw::factor_catalog& {
        if (std::string(name) == "f") {
            if (!f) f.emplace(sw::paperfolding_word(), policy);
            return *f;
        }
        if (!t) t.emplace(sw::thue_morse_word(), policy);
        return *t;
    };

    std::vector<sw::verification_report> reports;
    for (const auto& name : sw::suite_names()) {
        if (!all && name != suite) continue;
        const auto lo = all ? std::max(range.lo, sw::suite_minimum(name)) : range.lo;
        if (lo > range.hi) continue;
        if (name == "pf-inj") reports.push_back(sw::verify_pf_injectivity(catalog_for("f"), lo, range.hi));
        if (name == "pf-rho") reports.push_back(sw::verify_pf_rho_formula(catalog_for("f"), lo, range.hi));
        if (name == "tm-classes") reports.push_back(sw::verify_tm_class_structure(catalog_for("t"), lo, range.hi));
        if (name == "tm-counters") reports.push_back(sw::verify_tm_counters(catalog_for("t"), lo, range.hi));
        if (name == "tm-rho") reports.push_back(sw::verify_tm_rho_formula(catalog_for("t"), lo, range.hi));
        if (name == "lemma1" || name == "sandwich") {
            auto run = [&](sw::factor_catalog& c) {
                reports.push_back(name == "lemma1" ? sw::verify_left_special_lemma(c, lo, range.hi)
                                                   : sw::verify_sandwich(c, lo, range.hi));
            };
            if (!o.seq.empty() || !o.dfao_path.empty()) {
                if (!custom) custom.emplace(o.sequence(), policy);
                run(*custom);
            } else {
                run(catalog_for("f"));
                run(catalog_for("t"));
            }
        }
    }
    if (reports.empty()) throw sw::usage_error("range " + n_text + " selects no suite");

    bool passed = true;
    for (const auto& r : reports) passed = passed && r.passed;
    if (o.format == "json") {
        // a single report is an object; several become {"overall", "reports"}
        sw::json out;
        if (reports.size() == 1) {
            out = sw::to_json(reports.front());
        } else {
            out = {{"overall", passed ? "pass" : "fail"}, {"reports", sw::json::array()}};
            for (const auto& r : reports) out["reports"].push_back(sw::to_json(r));
        }
        emit(o, out.dump(2) + "\n");
    } else {
        std::string out;
        for (const auto& r : reports) out += sw::to_text(r);
        if (reports.size() > 1) out += std::string("overall: ") + (passed ? "PASS" : "FAIL") + "\n";
        emit(o, out);
    }
    return passed ? 0 : exit_fail;
}

int run_prefix(const common_options& o, std::size_t length) {
    const auto x = o.sequence();
    emit(o, sw::format_word(sw::prefix(x, length), x.alphabet_size) + "\n");
    return 0;
}

int run_factors(const common_options& o, std::size_t n) {
    const auto x = o.sequence();
    const auto fs = sw::stable_factors(x, n, o.policy());
    if (o.format == "json") emit(o, sw::to_json(fs, x.alphabet_size).dump(2) + "\n");
    else emit(o, sw::to_text(fs, x.alphabet_size));
    return 0;
}

int run_classes(const common_options& o, std::size_t n, std::uint64_t k) {
    if (k == 0) throw sw::usage_error("--k must be at least 1");
    const auto x = o.sequence();
    sw::factor_catalog catalog(x, o.policy());
    const auto report = sw::classify(catalog, n, k);
    if (o.format == "json") {
        emit(o, sw::to_json(report, x.alphabet_size).dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    out << report.classes.size() << " classes of " << catalog.factors(n).size() << " length-" << n
        << " factors of " << report.sequence << " (k=" << k << ", prefix " << report.prefix_length_used << ")\n";
    for (const auto* cls : report.nontrivial()) {
        out << "key " << sw::format_word(cls->key, x.alphabet_size) << ":\n";
        for (const auto& m : cls->members)
            out << "  " << sw::format_word(m.factor, x.alphabet_size) << " @" << report.index_base + m.first_offset << '\n';
    }
    emit(o, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tortoise/hare stack-sorting on words and tortoise complexity of infinite words"};
    app.require_subcommand(1);

    std::string word_op, word_text;
    std::uint64_t word_k = 1;
    auto* word_cmd = app.add_subcommand("word", "apply a word operation");
    word_cmd->add_option("op", word_op, "hare | tortoise | sort | index | iterate | nearly")->required();
    word_cmd->add_option("word", word_text, "digit string or comma-separated symbols")->required();
    word_cmd->add_option("--k", word_k, "iterations for 'iterate'");

    common_options table_opts;
    std::string table_kind, table_n;
    std::uint64_t table_k = 1;
    auto* table_cmd = app.add_subcommand("table", "complexity table over a range of n");
    table_cmd->add_option("kind", table_kind, "rho | ab | tortoise | nearly")->required();
    table_cmd->add_option("--n", table_n, "LO..HI")->required();
    table_cmd->add_option("--k", table_k, "tortoise iterations");
    add_common(table_cmd, table_opts);

    common_options stat_opts;
    std::string stat_kind, stat_k = "1";
    std::size_t stat_nmax = 40;
    auto* stat_cmd = app.add_subcommand("stat", "abel_x(k) or the paperfolding threshold s(k)");
    stat_cmd->add_option("kind", stat_kind, "abel | threshold")->required();
    stat_cmd->add_option("--k", stat_k, "LO[..HI]");
    stat_cmd->add_option("--nmax", stat_nmax, "largest n scanned");
    add_common(stat_cmd, stat_opts);

    common_options verify_opts;
    std::string verify_suite, verify_n;
    auto* verify_cmd = app.add_subcommand("verify", "bounded-range theorem checks");
    verify_cmd->add_option("suite", verify_suite,
                           "pf-inj | pf-rho | tm-classes | tm-counters | tm-rho | lemma1 | sandwich | all")
        ->required();
    verify_cmd->add_option("--n", verify_n, "LO..HI")->required();
    add_common(verify_cmd, verify_opts);

    common_options prefix_opts;
    std::size_t prefix_length = 0;
    auto* prefix_cmd = app.add_subcommand("prefix", "print a prefix of a sequence");
    prefix_cmd->add_option("--length", prefix_length, "number of symbols")->required();
    add_common(prefix_cmd, prefix_opts);

    common_options factors_opts;
    std::size_t factors_n = 0;
    auto* factors_cmd = app.add_subcommand("factors", "list the distinct length-n factors");
    factors_cmd->add_option("--n", factors_n, "factor length")->required();
    add_common(factors_cmd, factors_opts);

    common_options classes_opts;
    std::size_t classes_n = 0;
    std::uint64_t classes_k = 1;
    auto* classes_cmd = app.add_subcommand("classes", "k-tortoise classes of the length-n factors");
    classes_cmd->add_option("--n", classes_n, "factor length")->required();
    classes_cmd->add_option("--k", classes_k, "tortoise iterations");
    add_common(classes_cmd, classes_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*word_cmd) return run_word(word_op, word_text, word_k);
        if (*table_cmd) return run_table(table_kind, table_opts, table_n, table_k);
        if (*stat_cmd) return run_stat(stat_kind, stat_opts, stat_k, stat_nmax);
        if (*verify_cmd) return run_verify(verify_suite, verify_opts, verify_n);
        if (*prefix_cmd) return run_prefix(prefix_opts, prefix_length);
        if (*factors_cmd) return run_factors(factors_opts, factors_n);
        if (*classes_cmd) return run_classes(classes_opts, classes_n, classes_k);
    } catch (const sw::resource_cap_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_cap;
    } catch (const sw::iteration_cap_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_cap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
