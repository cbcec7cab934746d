#pragma once

/**
 * @file complexity.hpp
 * @brief Factor, abelian, k-tortoise and nearly-abelian complexity.
 *
 * All equivalence-based counts go through bucket_by_key: the abelian count
 * keys factors by their sorted rearrangement, k-tortoise by tortoise^(k),
 * nearly-abelian by tortoise^(⟨w⟩-1).
 */

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "factor_enum.hpp"
#include "sequences.hpp"
#include "word.hpp"
#include "word_ops.hpp"

namespace stackwords {

using key_function = std::function<word(word_view)>;

inline key_function abelian_key() {
    return [](word_view w) { return sort(w); };
}

inline key_function tortoise_key(std::uint64_t k) {
    if (k == 0) throw usage_error("k-tortoise equivalence needs k >= 1");
    return [k](word_view w) { return canonical_key(w, k); };
}

inline key_function nearly_abelian_key_fn() {
    return [](word_view w) { return nearly_abelian_key(w); };
}

/// Partition of a factor set by key; classes ordered by key, members by factor.
inline std::map<word, std::vector<const factor_entry*>> bucket_by_key(const factor_set& fs,
                                                                     const key_function& key) {
    std::map<word, std::vector<const factor_entry*>> buckets;
    for (const auto& e : fs.entries) buckets[key(e.factor)].push_back(&e);
    return buckets;
}

inline std::uint64_t count_classes(const factor_set& fs, const key_function& key) {
    return bucket_by_key(fs, key).size();
}

inline std::uint64_t rho(factor_catalog& c, std::size_t n) { return c.factors(n).size(); }

inline std::uint64_t rho_ab(factor_catalog& c, std::size_t n) {
    return count_classes(c.factors(n), abelian_key());
}

inline std::uint64_t rho_tortoise(factor_catalog& c, std::size_t n, std::uint64_t k) {
    return count_classes(c.factors(n), tortoise_key(k));
}

inline std::uint64_t rho_nearly_ab(factor_catalog& c, std::size_t n) {
    return count_classes(c.factors(n), nearly_abelian_key_fn());
}

inline std::uint64_t rho(const infinite_word& x, std::size_t n, const stabilization_policy& p = {}) {
    factor_catalog c(x, p);
    return rho(c, n);
}

inline std::uint64_t rho_ab(const infinite_word& x, std::size_t n, const stabilization_policy& p = {}) {
    factor_catalog c(x, p);
    return rho_ab(c, n);
}

inline std::uint64_t rho_tortoise(const infinite_word& x, std::size_t n, std::uint64_t k,
                                  const stabilization_policy& p = {}) {
    factor_catalog c(x, p);
    return rho_tortoise(c, n, k);
}

inline std::uint64_t rho_nearly_ab(const infinite_word& x, std::size_t n,
                                   const stabilization_policy& p = {}) {
    factor_catalog c(x, p);
    return rho_nearly_ab(c, n);
}

// ---------------------------------------------------------------------------
// Tables

enum class complexity_kind { factor, abelian, tortoise, nearly_abelian };

inline std::string to_string(complexity_kind kind) {
    switch (kind) {
    case complexity_kind::factor: return "rho";
    case complexity_kind::abelian: return "ab";
    case complexity_kind::tortoise: return "tortoise";
    case complexity_kind::nearly_abelian: return "nearly";
    }
    return "?";
}

struct complexity_row {
    std::size_t n;
    std::uint64_t count;
    std::size_t prefix_length;
};

struct complexity_table {
    std::string sequence;
    complexity_kind kind = complexity_kind::factor;
    std::uint64_t k = 1;  // meaningful for tortoise tables only
    std::vector<complexity_row> rows;

    std::vector<std::uint64_t> counts() const {
        std::vector<std::uint64_t> out;
        for (const auto& r : rows) out.push_back(r.count);
        return out;
    }
};

inline complexity_table tabulate(factor_catalog& c, complexity_kind kind, std::size_t n_lo,
                                 std::size_t n_hi, std::uint64_t k = 1) {
    if (n_lo > n_hi) throw usage_error("tabulate: empty n range");
    complexity_table t{c.sequence().name, kind, k, {}};
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const auto& fs = c.factors(n);
        std::uint64_t count = 0;
        switch (kind) {
        case complexity_kind::factor: count = fs.size(); break;
        case complexity_kind::abelian: count = count_classes(fs, abelian_key()); break;
        case complexity_kind::tortoise: count = count_classes(fs, tortoise_key(k)); break;
        case complexity_kind::nearly_abelian: count = count_classes(fs, nearly_abelian_key_fn()); break;
        }
        t.rows.push_back({n, count, fs.prefix_length_used});
    }
    return t;
}

// ---------------------------------------------------------------------------
// Statistics

/**
 * abel_x(k): the last n up to which ρ^{t(k)} and ρ^ab agree. Empty `value`
 * means no disagreement was found for n <= n_max.
 */
struct agreement_stat {
    std::uint64_t k = 1;
    std::optional<std::size_t> value;
    std::size_t n_max = 0;
};

inline agreement_stat abel_stat(factor_catalog& c, std::uint64_t k, std::size_t n_max) {
    if (k == 0) throw usage_error("abel_stat: k must be positive");
    if (n_max == 0) throw usage_error("abel_stat: n_max must be positive");
    for (std::size_t n = 1; n <= n_max; ++n)
        if (rho_tortoise(c, n, k) != rho_ab(c, n)) return {k, n - 1, n_max};
    return {k, std::nullopt, n_max};
}

inline agreement_stat abel_stat(const infinite_word& x, std::uint64_t k, std::size_t n_max,
                                const stabilization_policy& p = {}) {
    factor_catalog c(x, p);
    return abel_stat(c, k, n_max);
}

/// s(k) for the paperfolding word, verified on [s, n_max] only.
struct threshold_stat {
    std::uint64_t k = 1;
    std::size_t value = 0;
    std::size_t n_max = 0;
};

/// `c` must be a catalog of the paperfolding word.
inline threshold_stat pf_threshold(factor_catalog& c, std::uint64_t k, std::size_t n_max) {
    if (k == 0) throw usage_error("pf_threshold: k must be positive");
    if (n_max == 0) throw usage_error("pf_threshold: n_max must be positive");
    std::size_t last_miss = 0;
    for (std::size_t n = 1; n <= n_max; ++n)
        if (rho_tortoise(c, n, k) != 4 * n) last_miss = n;
    if (last_miss == n_max)
        throw usage_error("pf_threshold: rho_f^t(" + std::to_string(k) + ")(n) != 4n at n_max = " +
                          std::to_string(n_max) + "; no threshold within range");
    return {k, last_miss + 1, n_max};
}

inline threshold_stat pf_threshold(std::uint64_t k, std::size_t n_max, const stabilization_policy& p = {}) {
    factor_catalog c(paperfolding_word(), p);
    return pf_threshold(c, k, n_max);
}

// ---------------------------------------------------------------------------
// Class reports

struct equivalence_class {
    word key;
    std::vector<factor_entry> members;  // sorted by factor
};

struct class_report {
    std::string sequence;
    std::size_t n = 0;
    std::uint64_t k = 1;
    std::size_t prefix_length_used = 0;
    std::uint64_t index_base = 0;
    std::vector<equivalence_class> classes;  // ordered by key

    std::vector<const equivalence_class*> nontrivial() const {
        std::vector<const equivalence_class*> out;
        for (const auto& cls : classes)
            if (cls.members.size() >= 2) out.push_back(&cls);
        return out;
    }
};

inline class_report classify(factor_catalog& c, std::size_t n, std::uint64_t k) {
    const auto& fs = c.factors(n);
    class_report r{fs.sequence, n, k, fs.prefix_length_used, fs.index_base, {}};
    for (auto& [key, members] : bucket_by_key(fs, tortoise_key(k))) {
        equivalence_class cls{key, {}};
        for (const auto* e : members) cls.members.push_back(*e);
        r.classes.push_back(std::move(cls));
    }
    return r;
}

inline class_report classify(const infinite_word& x, std::size_t n, std::uint64_t k,
                             const stabilization_policy& p = {}) {
    factor_catalog c(x, p);
    return classify(c, n, k);
}

} // namespace stackwords
