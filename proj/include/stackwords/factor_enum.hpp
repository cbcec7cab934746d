#pragma once

/**
 * @file factor_enum.hpp
 * @brief Distinct factors of sequence prefixes, Parikh vectors, special factors.
 *
 * Windows are deduplicated with a polynomial rolling hash; buckets keep the
 * offsets of their representatives so collisions are resolved by comparing
 * the symbols themselves. A factor's identity is its exact symbol sequence.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "sequences.hpp"
#include "word.hpp"

namespace stackwords {

/**
 * Prefix-doubling schedule for approximating the factor set of an infinite
 * word. Starting at max(min_initial, per_length * n) the prefix doubles
 * until the distinct count is unchanged for `window` consecutive doublings,
 * or the sequence's closed-form ρ(n) is reached (unless `use_known_targets`
 * is off).
 */
struct stabilization_policy {
    std::size_t min_initial = 1024;
    std::size_t per_length = 64;
    unsigned window = 2;
    std::size_t max_length = std::size_t{1} << 24;
    bool use_known_targets = true;

    std::size_t initial(std::size_t n) const { return std::max(min_initial, per_length * n); }
};

struct factor_entry {
    word factor;
    std::size_t first_offset;  // least starting offset in the enumerated prefix

    bool operator==(const factor_entry&) const = default;
};

struct factor_set {
    std::string sequence;
    std::size_t factor_length = 0;
    std::size_t prefix_length_used = 0;
    std::uint64_t index_base = 0;
    std::vector<factor_entry> entries;  // sorted lexicographically by factor

    std::size_t size() const { return entries.size(); }

    const factor_entry* find(word_view w) const {
        auto it = std::ranges::lower_bound(entries, w, std::ranges::lexicographical_compare,
                                           [](const factor_entry& e) { return word_view{e.factor}; });
        if (it == entries.end() || !std::ranges::equal(it->factor, w)) return nullptr;
        return &*it;
    }
    bool contains(word_view w) const { return find(w) != nullptr; }

    /// First occurrence in the sequence's own indexing (e.g. t_126, f_1).
    std::uint64_t native_position(const factor_entry& e) const { return index_base + e.first_offset; }

    std::vector<word> words() const {
        std::vector<word> out;
        out.reserve(entries.size());
        for (const auto& e : entries) out.push_back(e.factor);
        return out;
    }
};

/// Incremental enumerator of the distinct length-n windows of a growing prefix.
class factor_scanner {
public:
    factor_scanner(const infinite_word& x, std::size_t n) : buffer_(x), length_(n) {
        power_ = 1;
        for (std::size_t i = 1; i < n; ++i) power_ *= base;
    }

    std::size_t factor_length() const { return length_; }
    std::size_t scanned_length() const { return buffer_.size(); }
    std::size_t distinct() const { return length_ == 0 ? 1 : representatives_; }

    void scan_to(std::size_t prefix_length) {
        if (prefix_length <= buffer_.size()) return;
        buffer_.extend(prefix_length);
        if (length_ == 0) return;
        const auto text = buffer_.view();
        // windows [next_, prefix_length - length_]
        if (prefix_length < length_) return;
        const std::size_t last = prefix_length - length_;
        for (; next_ <= last; ++next_) {
            if (next_ == 0) {
                hash_ = 0;
                for (std::size_t i = 0; i < length_; ++i) hash_ = hash_ * base + text[i] + 1;
            } else {
                hash_ = (hash_ - (std::uint64_t{text[next_ - 1]} + 1) * power_) * base +
                        text[next_ + length_ - 1] + 1;
            }
            auto& bucket = buckets_[hash_];
            const auto window = text.subspan(next_, length_);
            const bool seen = std::ranges::any_of(bucket, [&](std::size_t off) {
                return std::ranges::equal(text.subspan(off, length_), window);
            });
            if (!seen) {
                bucket.push_back(next_);
                ++representatives_;
            }
        }
    }

    factor_set snapshot() const {
        factor_set fs;
        fs.sequence = buffer_.source().name;
        fs.factor_length = length_;
        fs.prefix_length_used = buffer_.size();
        fs.index_base = buffer_.source().index_base;
        if (length_ == 0) {
            fs.entries.push_back({{}, 0});
            return fs;
        }
        const auto text = buffer_.view();
        fs.entries.reserve(representatives_);
        for (const auto& [h, offsets] : buckets_)
            for (auto off : offsets)
                fs.entries.push_back({word(text.begin() + off, text.begin() + off + length_), off});
        std::ranges::sort(fs.entries, {}, &factor_entry::factor);
        return fs;
    }

private:
    static constexpr std::uint64_t base = 0x9e3779b97f4a7c15ull;

    prefix_buffer buffer_;
    std::size_t length_;
    std::size_t next_ = 0;
    std::uint64_t hash_ = 0;
    std::uint64_t power_ = 1;
    std::size_t representatives_ = 0;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

/// Distinct length-n factors of the length-L prefix.
inline factor_set factors(const infinite_word& x, std::size_t n, std::size_t prefix_length) {
    if (prefix_length < n)
        throw usage_error("factors: prefix length " + std::to_string(prefix_length) +
                          " is shorter than factor length " + std::to_string(n));
    factor_scanner scanner(x, n);
    scanner.scan_to(prefix_length);
    return scanner.snapshot();
}

/// Length-n factors of x over a prefix long enough for the count to settle.
inline factor_set stable_factors(const infinite_word& x, std::size_t n,
                                 const stabilization_policy& policy = {}) {
    std::size_t length = std::max(policy.initial(n), n);
    if (length > policy.max_length)
        throw resource_cap_error("stable_factors: initial prefix " + std::to_string(length) +
                                 " exceeds the cap " + std::to_string(policy.max_length));
    factor_scanner scanner(x, n);
    scanner.scan_to(length);

    std::optional<std::uint64_t> target;
    if (policy.use_known_targets && x.known_complexity) target = x.known_complexity(n);

    auto count = scanner.distinct();
    unsigned stable_runs = 0;
    while (!(target && count == *target) && stable_runs < policy.window) {
        if (length > policy.max_length / 2)
            throw resource_cap_error("stable_factors: length-" + std::to_string(n) + " factors of " +
                                     x.name + " still growing at prefix length " +
                                     std::to_string(length) + " (cap " +
                                     std::to_string(policy.max_length) + ")");
        length *= 2;
        scanner.scan_to(length);
        if (scanner.distinct() == count) {
            ++stable_runs;
        } else {
            count = scanner.distinct();
            stable_runs = 0;
        }
    }
    return scanner.snapshot();
}

/// Memoized stable factor sets of one sequence under one policy.
class factor_catalog {
public:
    explicit factor_catalog(infinite_word x, stabilization_policy policy = {})
        : sequence_(std::move(x)), policy_(policy) {}

    const infinite_word& sequence() const { return sequence_; }
    const stabilization_policy& policy() const { return policy_; }

    const factor_set& factors(std::size_t n) {
        auto it = cache_.find(n);
        if (it == cache_.end()) it = cache_.emplace(n, stable_factors(sequence_, n, policy_)).first;
        return it->second;
    }

private:
    infinite_word sequence_;
    stabilization_policy policy_;
    std::map<std::size_t, factor_set> cache_;
};

struct parikh_vector {
    std::vector<std::size_t> counts;  // counts[s] = occurrences of symbol s

    bool operator==(const parikh_vector&) const = default;
    auto operator<=>(const parikh_vector&) const = default;
};

inline parikh_vector parikh(word_view w, std::size_t alphabet_size = 0) {
    parikh_vector p;
    p.counts.assign(std::max(alphabet_size, alphabet_bound(w)), 0);
    for (symbol s : w) ++p.counts[s];
    return p;
}

struct special_factor_report {
    std::size_t factor_length = 0;
    std::size_t prefix_length_used = 0;  // of the length n+1 enumeration
    std::vector<word> left_special;      // sorted
    std::vector<word> right_special;     // sorted
};

/**
 * Left (right) special length-n factors: those with two distinct one-symbol
 * extensions on the left (right) among the stable length-(n+1) factors.
 */
inline special_factor_report special_factors(factor_catalog& catalog, std::size_t n) {
    if (n == 0) throw usage_error("special_factors: factor length must be positive");
    const auto& longer = catalog.factors(n + 1);
    std::map<word, std::pair<std::vector<symbol>, std::vector<symbol>>> ext;
    auto note = [](std::vector<symbol>& v, symbol s) {
        if (std::ranges::find(v, s) == v.end()) v.push_back(s);
    };
    for (const auto& e : longer.entries) {
        const word_view u = e.factor;
        note(ext[word(u.begin() + 1, u.end())].first, u.front());
        note(ext[word(u.begin(), u.end() - 1)].second, u.back());
    }
    special_factor_report r;
    r.factor_length = n;
    r.prefix_length_used = longer.prefix_length_used;
    for (const auto& [w, lr] : ext) {
        if (lr.first.size() >= 2) r.left_special.push_back(w);
        if (lr.second.size() >= 2) r.right_special.push_back(w);
    }
    return r;
}

inline special_factor_report special_factors(const infinite_word& x, std::size_t n,
                                             const stabilization_policy& policy = {}) {
    factor_catalog catalog(x, policy);
    return special_factors(catalog, n);
}

} // namespace stackwords
