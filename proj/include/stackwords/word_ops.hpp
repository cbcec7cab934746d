#pragma once

/**
 * @file word_ops.hpp
 * @brief Stack-sorting operators on words: hare, tortoise and friends.
 *
 * Every nonempty word factors around its largest symbol n as
 *
 *     w = A_1 n A_2 n ... n A_{k+1}
 *
 * with every A_i over symbols < n. The two operators recurse on the blocks:
 *
 *     hare(w)     = hare(A_1) hare(A_2) ... hare(A_{k+1}) n^k
 *     tortoise(w) = tortoise(A_1) tortoise(A_2) n tortoise(A_3) n ... n tortoise(A_{k+1}) n
 *
 * Both only ever reorder symbols of the input, and blocks are contiguous
 * ranges of it, so the production versions walk index ranges with an
 * explicit work stack. Plain recursive versions live in `reference` and are
 * used for differential testing.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

#ifndef STACKWORDS_TORTOISE_SPLICE_OFFSET
#define STACKWORDS_TORTOISE_SPLICE_OFFSET 0
#endif

namespace stackwords {

struct block_decomposition {
    symbol max_symbol = 0;
    std::size_t occurrence_count = 0;
    std::vector<word> blocks;  // occurrence_count + 1 entries, possibly empty

    bool operator==(const block_decomposition&) const = default;
};

/// Split `w` around every occurrence of its largest symbol.
inline block_decomposition decompose_by_max(word_view w) {
    if (w.empty()) throw usage_error("decompose_by_max: the empty word has no maximal symbol");
    block_decomposition d;
    d.max_symbol = *std::ranges::max_element(w);
    auto start = w.begin();
    for (auto it = w.begin(); it != w.end(); ++it) {
        if (*it != d.max_symbol) continue;
        d.blocks.emplace_back(start, it);
        start = it + 1;
        ++d.occurrence_count;
    }
    d.blocks.emplace_back(start, w.end());
    return d;
}

/// Inverse of decompose_by_max.
inline word interleave(const block_decomposition& d) {
    word w;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        if (i) w.push_back(d.max_symbol);
        w.insert(w.end(), d.blocks[i].begin(), d.blocks[i].end());
    }
    return w;
}

inline word sort(word_view w) {
    word out(w.begin(), w.end());
    std::ranges::sort(out);
    return out;
}

inline bool is_sorted(word_view w) { return std::ranges::is_sorted(w); }

namespace detail {

// Offset from the first 1 of the symbol the binary tortoise removes. Only the
// mutation build sets it nonzero.
inline constexpr std::size_t tortoise_splice_offset = STACKWORDS_TORTOISE_SPLICE_OFFSET;

enum class sorter { hare, tortoise };

struct walk_task {
    std::size_t begin;
    std::size_t end;
    bool literal;
};

inline word binary_tortoise(word_view w) {
    word out(w.begin(), w.end());
    const auto first = std::ranges::find(w, symbol{1});
    if (first == w.end()) return out;
    const auto moved = std::min(static_cast<std::size_t>(first - w.begin()) + tortoise_splice_offset,
                                w.size() - 1);
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(moved));
    out.push_back(1);
    return out;
}

inline word stack_walk(word_view w, sorter mode) {
    word out;
    out.reserve(w.size());
    // literal tasks carry the symbol in `begin`
    std::vector<walk_task> stack{{0, w.size(), false}};
    std::vector<std::size_t> marks;
    while (!stack.empty()) {
        walk_task t = stack.back();
        stack.pop_back();
        if (t.literal) {
            out.push_back(static_cast<symbol>(t.begin));
            continue;
        }
        if (t.begin == t.end) continue;

        symbol top = w[t.begin];
        for (std::size_t i = t.begin; i < t.end; ++i) top = std::max(top, w[i]);
        marks.clear();
        for (std::size_t i = t.begin; i < t.end; ++i)
            if (w[i] == top) marks.push_back(i);
        const std::size_t k = marks.size();

        auto block = [&](std::size_t i) -> walk_task {
            std::size_t b = i == 0 ? t.begin : marks[i - 1] + 1;
            std::size_t e = i == k ? t.end : marks[i];
            return {b, e, false};
        };
        const walk_task lit{top, 0, true};

        if (mode == sorter::hare) {
            for (std::size_t i = 0; i < k; ++i) stack.push_back(lit);
            for (std::size_t i = k + 1; i-- > 0;) stack.push_back(block(i));
            continue;
        }
        // Output order: A_1 A_2 top A_3 top ... A_{k+1} top. Pushed in reverse.
        stack.push_back(lit);
        for (std::size_t i = k + 1; i-- > 0;) {
            stack.push_back(block(i));
            if (i > 1) stack.push_back(lit);
        }
    }
    return out;
}

} // namespace detail

inline word hare(word_view w) {
    if (alphabet_bound(w) <= 2) return sort(w);
    return detail::stack_walk(w, detail::sorter::hare);
}

inline word tortoise(word_view w) {
    if (alphabet_bound(w) <= 2) return detail::binary_tortoise(w);
    return detail::stack_walk(w, detail::sorter::tortoise);
}

/// k-fold tortoise. Sorted words are fixed points, so iteration stops there.
inline word iterate_tortoise(word_view w, std::uint64_t k) {
    word cur(w.begin(), w.end());
    for (std::uint64_t i = 0; i < k && !is_sorted(cur); ++i) cur = tortoise(cur);
    return cur;
}

/**
 * Least j with tortoise^(j)(w) = sort(w).
 *
 * Termination is guaranteed mathematically; the ℓ(w)² guard only turns an
 * implementation defect into an iteration_cap_error instead of a hang.
 */
inline std::uint64_t tortoise_sort_index(word_view w) {
    const std::uint64_t cap = std::uint64_t{w.size()} * w.size();
    word cur(w.begin(), w.end());
    for (std::uint64_t j = 0; j <= cap; ++j) {
        if (is_sorted(cur)) return j;
        cur = tortoise(cur);
    }
    throw iteration_cap_error("tortoise_sort_index: word " + format_word(w) +
                              " not sorted after " + std::to_string(cap) + " applications");
}

/// Representative of the k-tortoise class of `w`: tortoise^(k)(w).
inline word canonical_key(word_view w, std::uint64_t k) {
    if (k == 0) throw usage_error("canonical_key: k must be positive");
    return iterate_tortoise(w, k);
}

/// tortoise^(⟨w⟩-1)(w): one application short of sorted. Sorted words map to themselves.
inline word nearly_abelian_key(word_view w) {
    const auto index = tortoise_sort_index(w);
    if (index == 0) return word(w.begin(), w.end());
    return iterate_tortoise(w, index - 1);
}

namespace reference {

// Direct transcriptions of the recursive definitions.

inline word hare(word_view w) {
    if (w.empty()) return {};
    const auto d = decompose_by_max(w);
    word out;
    for (const auto& b : d.blocks) {
        auto part = reference::hare(b);
        out.insert(out.end(), part.begin(), part.end());
    }
    out.insert(out.end(), d.occurrence_count, d.max_symbol);
    return out;
}

inline word tortoise(word_view w) {
    if (w.empty()) return {};
    const auto d = decompose_by_max(w);
    word out;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        if (i >= 2) out.push_back(d.max_symbol);
        auto part = reference::tortoise(d.blocks[i]);
        out.insert(out.end(), part.begin(), part.end());
    }
    out.push_back(d.max_symbol);
    return out;
}

} // namespace reference

} // namespace stackwords
