#pragma once

/**
 * @file word.hpp
 * @brief Finite words over a totally ordered integer alphabet.
 *
 * A symbol is a small non-negative integer and the alphabet order is the
 * integer order. Words are plain vectors so they compose with the standard
 * algorithms; equality and ordering are lexicographic.
 */

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace stackwords {

using symbol = std::uint16_t;
using word = std::vector<symbol>;
using word_view = std::span<const symbol>;

inline constexpr std::size_t max_alphabet_size = 1u << 16;

/// Number of symbols needed to spell `w` (largest symbol + 1, or 0 for ε).
inline std::size_t alphabet_bound(word_view w) {
    if (w.empty()) return 0;
    return std::size_t{*std::ranges::max_element(w)} + 1;
}

/**
 * Serialize a word. Alphabets of at most ten symbols are written as digit
 * strings ("0110"); larger alphabets as comma-separated integers ("3,11,0").
 * When `alphabet_size` is 0 it is inferred from the word itself.
 */
inline std::string format_word(word_view w, std::size_t alphabet_size = 0) {
    if (alphabet_size == 0) alphabet_size = alphabet_bound(w);
    std::string out;
    if (alphabet_size <= 10) {
        out.reserve(w.size());
        for (symbol s : w) out.push_back(static_cast<char>('0' + s));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(w[i]);
    }
    return out;
}

/// Inverse of format_word. A string containing a comma is read as integers.
inline word parse_word(std::string_view text) {
    word w;
    if (text.find(',') == std::string_view::npos) {
        w.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9')
                throw usage_error("invalid symbol '" + std::string(1, c) + "' in word \"" +
                                  std::string(text) + "\"");
            w.push_back(static_cast<symbol>(c - '0'));
        }
        return w;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto field = text.substr(start, end - start);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() ||
            value >= max_alphabet_size)
            throw usage_error("invalid symbol \"" + std::string(field) + "\" in word \"" +
                              std::string(text) + "\"");
        w.push_back(static_cast<symbol>(value));
        start = end + 1;
    }
    return w;
}

struct word_hash {
    std::size_t operator()(word_view w) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (symbol s : w) {
            h ^= s;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
    std::size_t operator()(const word& w) const noexcept { return (*this)(word_view{w}); }
};

} // namespace stackwords
