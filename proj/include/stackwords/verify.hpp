#pragma once

/**
 * @file verify.hpp
 * @brief Bounded-range checks of the tortoise-complexity theorems for f and t.
 *
 * Each verifier enumerates stable factor sets for every n in [n_lo, n_hi],
 * checks one statement, and returns a report. Reports are a pure function
 * of (sequence, range, policy): classes and witnesses come out in
 * lexicographic order and positions use the sequence's native indexing.
 * Nothing here is a proof for unbounded n; the range is part of the report.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "complexity.hpp"
#include "errors.hpp"
#include "factor_enum.hpp"
#include "sequences.hpp"
#include "word.hpp"
#include "word_ops.hpp"

namespace stackwords {

struct witness {
    std::size_t n = 0;
    std::string note;
    std::vector<word> words;
    std::vector<std::uint64_t> positions;  // native indices, parallel to `words`
};

struct verification_report {
    std::string theorem;
    std::string sequence;
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    bool passed = true;
    std::map<std::size_t, std::size_t> prefix_lengths;  // per n
    std::map<std::string, std::int64_t> summary;
    std::vector<witness> witnesses;

    void fail(witness w) {
        passed = false;
        witnesses.push_back(std::move(w));
    }
};

namespace detail {

inline void check_range(const char* who, std::size_t lo, std::size_t hi, std::size_t min_lo) {
    if (lo > hi) throw usage_error(std::string(who) + ": empty range");
    if (lo < min_lo)
        throw usage_error(std::string(who) + ": range must start at n >= " + std::to_string(min_lo));
}

inline verification_report start_report(const char* theorem, const factor_catalog& c,
                                         std::size_t lo, std::size_t hi) {
    verification_report r;
    r.theorem = theorem;
    r.sequence = c.sequence().name;
    r.n_lo = lo;
    r.n_hi = hi;
    return r;
}

inline witness class_witness(std::size_t n, const factor_set& fs, const equivalence_class& cls,
                             std::string note) {
    witness w{n, std::move(note), {}, {}};
    for (const auto& m : cls.members) {
        w.words.push_back(m.factor);
        w.positions.push_back(fs.index_base + m.first_offset);
    }
    return w;
}

inline bool starts_with(word_view w, std::initializer_list<symbol> head) {
    return w.size() >= head.size() && std::ranges::equal(w.first(head.size()), head);
}

inline bool is_left_special(factor_catalog& c, const word& y) {
    if (y.empty()) return c.factors(1).size() >= 2;
    const auto report = special_factors(c, y.size());
    return std::ranges::binary_search(report.left_special, y);
}

inline void require_binary(const char* who, const factor_catalog& c) {
    if (c.sequence().alphabet_size != 2)
        throw usage_error(std::string(who) + ": needs a binary sequence");
}

} // namespace detail

/// Every k=1 tortoise class of f's length-n factors is a singleton.
inline verification_report verify_pf_injectivity(factor_catalog& f, std::size_t n_lo, std::size_t n_hi) {
    detail::check_range("pf-inj", n_lo, n_hi, 1);
    auto r = detail::start_report("pf-inj", f, n_lo, n_hi);
    std::int64_t classes = 0;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const auto& fs = f.factors(n);
        r.prefix_lengths[n] = fs.prefix_length_used;
        const auto report = classify(f, n, 1);
        classes += static_cast<std::int64_t>(report.classes.size());
        for (const auto* cls : report.nontrivial())
            r.fail(detail::class_witness(n, fs, *cls, "distinct tortoise-equivalent factors"));
    }
    r.summary["classes_checked"] = classes;
    return r;
}

/// ρ_f(n) = 4n and ρ_f^t(n) = 4n; the two halves are tallied separately.
inline verification_report verify_pf_rho_formula(factor_catalog& f, std::size_t n_lo, std::size_t n_hi) {
    detail::check_range("pf-rho", n_lo, n_hi, 1);
    auto r = detail::start_report("pf-rho", f, n_lo, n_hi);
    std::int64_t rho_failures = 0, tortoise_failures = 0;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        r.prefix_lengths[n] = f.factors(n).prefix_length_used;
        const auto plain = rho(f, n);
        const auto tort = rho_tortoise(f, n, 1);
        if (plain != 4 * n) {
            ++rho_failures;
            r.fail({n, "rho: " + std::to_string(plain) + " != " + std::to_string(4 * n), {}, {}});
        }
        if (tort != 4 * n) {
            ++tortoise_failures;
            r.fail({n, "tortoise: " + std::to_string(tort) + " != " + std::to_string(4 * n), {}, {}});
        }
    }
    r.summary["rho_failures"] = rho_failures;
    r.summary["tortoise_failures"] = tortoise_failures;
    return r;
}

/// Nontrivial tortoise classes of t have the shape {01y, 10y} with y left special.
inline verification_report verify_tm_class_structure(factor_catalog& t, std::size_t n_lo, std::size_t n_hi) {
    detail::check_range("tm-classes", n_lo, n_hi, 9);
    auto r = detail::start_report("tm-classes", t, n_lo, n_hi);
    std::int64_t nontrivial = 0;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const auto& fs = t.factors(n);
        r.prefix_lengths[n] = fs.prefix_length_used;
        const auto report = classify(t, n, 1);
        for (const auto* cls : report.nontrivial()) {
            ++nontrivial;
            if (cls->members.size() != 2) {
                r.fail(detail::class_witness(n, fs, *cls, "class has more than two members"));
                continue;
            }
            // members are sorted, so a 01-prefixed word comes first
            const word_view a = cls->members[0].factor;
            const word_view b = cls->members[1].factor;
            if (!detail::starts_with(a, {0, 1}) || !detail::starts_with(b, {1, 0}) ||
                !std::ranges::equal(a.subspan(2), b.subspan(2))) {
                r.fail(detail::class_witness(n, fs, *cls, "class is not of the form {01y, 10y}"));
                continue;
            }
            const word y(a.begin() + 2, a.end());
            if (!detail::is_left_special(t, y))
                r.fail(detail::class_witness(n, fs, *cls, "y = " + format_word(y) + " is not left special"));
        }
    }
    r.summary["nontrivial_classes"] = nontrivial;
    return r;
}

/**
 * The four candidate witnesses of a length-n tortoise collision in t, at
 * offsets 2^{m+1}-2, 2^{m+1}+2^{m-1}-2, 2^{m+1}+2^{m-1}+2^{m-2}-2 and
 * 2^{m+1}+2^m-2, where m is the bit length of n-3.
 */
struct counter_positions {
    std::size_t n = 0;
    unsigned m = 0;
    bool leading_10 = false;  // binary expansion of n-3 starts 10 (else 11)
    std::array<std::uint64_t, 4> positions{};
    std::array<word, 4> words{};

    /// Counters that can witness a collision: all four after 10, the first and last after 11.
    std::vector<std::size_t> admissible() const {
        if (leading_10) return {0, 1, 2, 3};
        return {0, 3};
    }
};

inline counter_positions tm_counter_words(std::size_t n) {
    if (n < 11) throw domain_error("tm_counter_words: needs n >= 11, got " + std::to_string(n));
    counter_positions c;
    c.n = n;
    const std::uint64_t v = n - 3;
    c.m = static_cast<unsigned>(std::bit_width(v));
    c.leading_10 = ((v >> (c.m - 2)) & 1u) == 0;
    const std::uint64_t top = std::uint64_t{1} << (c.m + 1);
    const std::uint64_t half = std::uint64_t{1} << (c.m - 1);
    const std::uint64_t quarter = std::uint64_t{1} << (c.m - 2);
    c.positions = {top - 2, top + half - 2, top + half + quarter - 2, top + 2 * half - 2};
    for (std::size_t i = 0; i < 4; ++i) {
        c.words[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) c.words[i][j] = thue_morse_at(c.positions[i] + j);
    }
    return c;
}

/// Every nontrivial tortoise class of t is an admissible counter word plus its partner.
inline verification_report verify_tm_counters(factor_catalog& t, std::size_t n_lo, std::size_t n_hi) {
    detail::check_range("tm-counters", n_lo, n_hi, 11);
    auto r = detail::start_report("tm-counters", t, n_lo, n_hi);
    std::int64_t nontrivial = 0;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const auto& fs = t.factors(n);
        r.prefix_lengths[n] = fs.prefix_length_used;
        const auto counters = tm_counter_words(n);
        for (std::size_t i = 0; i < 4; ++i)
            if (counters.positions[i] + n > fs.prefix_length_used)
                throw resource_cap_error("tm-counters: counter word at t_" +
                                         std::to_string(counters.positions[i]) +
                                         " lies outside the enumerated prefix");
        const auto report = classify(t, n, 1);
        for (const auto* cls : report.nontrivial()) {
            ++nontrivial;
            bool hit = false;
            for (auto i : counters.admissible())
                for (const auto& m : cls->members) hit = hit || m.factor == counters.words[i];
            if (cls->members.size() != 2)
                r.fail(detail::class_witness(n, fs, *cls, "class has more than two members"));
            else if (!hit)
                r.fail(detail::class_witness(n, fs, *cls,
                                             std::string("no admissible counter word (n-3 starts ") +
                                                 (counters.leading_10 ? "10)" : "11)")));
        }
    }
    r.summary["nontrivial_classes"] = nontrivial;
    return r;
}

/**
 * ρ_t^t(n) = ρ_t(n) - 4 when n-3 starts 10 in binary, else ρ_t(n) - 2.
 * The enumerated ρ_t(n) is also cross-checked against the recurrences.
 */
inline verification_report verify_tm_rho_formula(factor_catalog& t, std::size_t n_lo, std::size_t n_hi) {
    detail::check_range("tm-rho", n_lo, n_hi, 10);
    auto r = detail::start_report("tm-rho", t, n_lo, n_hi);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        r.prefix_lengths[n] = t.factors(n).prefix_length_used;
        const auto plain = rho(t, n);
        const auto tort = rho_tortoise(t, n, 1);
        const auto recurrence = *thue_morse_complexity(n);
        const std::uint64_t v = n - 3;
        const bool leading_10 = ((v >> (std::bit_width(v) - 2)) & 1u) == 0;
        const auto expected = plain - (leading_10 ? 4 : 2);
        if (plain != recurrence)
            r.fail({n, "rho_t = " + std::to_string(plain) + " but recurrence gives " +
                           std::to_string(recurrence), {}, {}});
        if (tort != expected)
            r.fail({n, "rho_t^t = " + std::to_string(tort) + ", expected " + std::to_string(expected),
                    {}, {}});
    }
    return r;
}

/**
 * For tortoise-equivalent w = uv != w' = u'v (u, u' holding exactly one 1),
 * zv must be left special, z the longest common suffix of u and u'.
 */
inline verification_report verify_left_special_lemma(factor_catalog& x, std::size_t n_lo, std::size_t n_hi) {
    detail::check_range("lemma1", n_lo, n_hi, 1);
    detail::require_binary("lemma1", x);
    auto r = detail::start_report("lemma1", x, n_lo, n_hi);
    std::int64_t pairs = 0;
    auto second_one = [](word_view w) {
        std::size_t seen = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == 1 && ++seen == 2) return i;
        return w.size();
    };
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const auto& fs = x.factors(n);
        r.prefix_lengths[n] = fs.prefix_length_used;
        const auto report = classify(x, n, 1);
        for (const auto* cls : report.nontrivial()) {
            for (std::size_t i = 0; i < cls->members.size(); ++i)
                for (std::size_t j = i + 1; j < cls->members.size(); ++j) {
                    const word_view w = cls->members[i].factor;
                    const word_view w2 = cls->members[j].factor;
                    if (std::ranges::count(w, 1) == 0 || std::ranges::count(w2, 1) == 0) continue;
                    ++pairs;
                    const witness pair{n, "", {word(w.begin(), w.end()), word(w2.begin(), w2.end())},
                                       {fs.index_base + cls->members[i].first_offset,
                                        fs.index_base + cls->members[j].first_offset}};
                    const auto cut = second_one(w);
                    if (cut != second_one(w2) || !std::ranges::equal(w.subspan(cut), w2.subspan(cut))) {
                        auto bad = pair;
                        bad.note = "no common tail after the second 1";
                        r.fail(bad);
                        continue;
                    }
                    std::size_t common = 0;
                    while (common < cut && w[cut - 1 - common] == w2[cut - 1 - common]) ++common;
                    const word y(w.begin() + static_cast<std::ptrdiff_t>(cut - common), w.end());
                    if (!detail::is_left_special(x, y)) {
                        auto bad = pair;
                        bad.note = "zv = " + format_word(y) + " is not left special";
                        r.fail(bad);
                    }
                }
        }
    }
    r.summary["pairs_checked"] = pairs;
    return r;
}

/// ρ^t(n) <= ρ(n) on the range; the largest gap is reported as the empirical C.
inline verification_report verify_sandwich(factor_catalog& x, std::size_t n_lo, std::size_t n_hi) {
    detail::check_range("sandwich", n_lo, n_hi, 1);
    detail::require_binary("sandwich", x);
    auto r = detail::start_report("sandwich", x, n_lo, n_hi);
    std::int64_t max_gap = 0, positive = 0;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        r.prefix_lengths[n] = x.factors(n).prefix_length_used;
        const auto plain = static_cast<std::int64_t>(rho(x, n));
        const auto tort = static_cast<std::int64_t>(rho_tortoise(x, n, 1));
        if (tort > plain) {
            r.fail({n, "rho^t = " + std::to_string(tort) + " exceeds rho = " + std::to_string(plain), {}, {}});
            continue;
        }
        max_gap = std::max(max_gap, plain - tort);
        if (plain > tort) ++positive;
    }
    r.summary["empirical_C"] = max_gap;
    r.summary["positive_gaps"] = positive;
    return r;
}

/// Least B such that every length-B factor contains a 1, searched up to max_b.
inline std::optional<std::size_t> ones_gap_bound(factor_catalog& x, std::size_t max_b) {
    for (std::size_t b = 1; b <= max_b; ++b) {
        const auto& fs = x.factors(b);
        if (std::ranges::all_of(fs.entries, [](const factor_entry& e) {
                return std::ranges::count(e.factor, 1) > 0;
            }))
            return b;
    }
    return std::nullopt;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"pf-inj", "pf-rho",  "tm-classes", "tm-counters",
                                                "tm-rho", "lemma1", "sandwich"};
    return names;
}

/// Smallest n each suite accepts when run as part of `all`.
inline std::size_t suite_minimum(const std::string& suite) {
    if (suite == "pf-inj" || suite == "pf-rho") return 8;
    if (suite == "tm-classes") return 9;
    if (suite == "tm-rho") return 10;
    if (suite == "tm-counters") return 11;
    return 1;
}

} // namespace stackwords
