#pragma once

/**
 * @file report_io.hpp
 * @brief Text, CSV and JSON renderings of factor sets, tables, class and
 *        verification reports.
 *
 * Words are serialized with format_word (digit strings for alphabets of at
 * most ten symbols). Positions are native indices of the sequence. Object
 * keys come out sorted, so JSON output is byte-stable for equal inputs.
 */

#include <algorithm>
#include <ostream>
#include <ranges>
#include <sstream>
#include <string>

#include <json.hpp>

#include "complexity.hpp"
#include "factor_enum.hpp"
#include "verify.hpp"

namespace stackwords {

using json = nlohmann::json;

/// One factor per line, lexicographic order.
inline std::string to_text(const factor_set& fs, std::size_t alphabet_size = 0) {
    std::string out;
    for (const auto& e : fs.entries) {
        out += format_word(e.factor, alphabet_size);
        out += '\n';
    }
    return out;
}

inline json to_json(const factor_set& fs, std::size_t alphabet_size = 0) {
    json factors = json::array();
    for (const auto& e : fs.entries)
        factors.push_back({{"word", format_word(e.factor, alphabet_size)},
                           {"first_position", fs.native_position(e)}});
    return {{"sequence", fs.sequence},
            {"factor_length", fs.factor_length},
            {"prefix_length", fs.prefix_length_used},
            {"count", fs.size()},
            {"factors", std::move(factors)}};
}

inline std::string to_csv(const complexity_table& t) {
    std::string out = "n,count,prefix_length\n";
    for (const auto& r : t.rows)
        out += std::to_string(r.n) + ',' + std::to_string(r.count) + ',' +
               std::to_string(r.prefix_length) + '\n';
    return out;
}

inline json to_json(const complexity_table& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"n", r.n}, {"count", r.count}, {"prefix_length", r.prefix_length}});
    json j{{"sequence", t.sequence}, {"kind", to_string(t.kind)}, {"rows", std::move(rows)}};
    if (t.kind == complexity_kind::tortoise) j["k"] = t.k;
    return j;
}

inline json to_json(const class_report& r, std::size_t alphabet_size = 0) {
    auto members_json = [&](const equivalence_class& cls) {
        json members = json::array();
        for (const auto& m : cls.members)
            members.push_back({{"word", format_word(m.factor, alphabet_size)},
                               {"first_position", r.index_base + m.first_offset}});
        return members;
    };
    json nontrivial = json::array();
    for (const auto* cls : r.nontrivial())
        nontrivial.push_back({{"key", format_word(cls->key, alphabet_size)}, {"members", members_json(*cls)}});
    json classes = json::array();
    for (const auto& cls : r.classes)
        classes.push_back({{"key", format_word(cls.key, alphabet_size)}, {"members", members_json(cls)}});
    return {{"sequence", r.sequence},
            {"n", r.n},
            {"k", r.k},
            {"prefix_length", r.prefix_length_used},
            {"class_count", r.classes.size()},
            {"classes", std::move(classes)},
            {"nontrivial_classes", std::move(nontrivial)}};
}

inline json to_json(const verification_report& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
        json words = json::array();
        for (const auto& x : w.words) words.push_back(format_word(x));
        witnesses.push_back({{"n", w.n}, {"note", w.note}, {"words", std::move(words)}, {"positions", w.positions}});
    }
    json prefixes = json::object();
    for (const auto& [n, len] : r.prefix_lengths) prefixes[std::to_string(n)] = len;
    return {{"theorem", r.theorem},
            {"sequence", r.sequence},
            {"range", {r.n_lo, r.n_hi}},
            {"outcome", r.passed ? "pass" : "fail"},
            {"prefix_lengths", std::move(prefixes)},
            {"summary", r.summary},
            {"witnesses", std::move(witnesses)}};
}

inline std::string to_text(const verification_report& r) {
    std::ostringstream out;
    out << r.theorem << " [" << r.sequence << ", n=" << r.n_lo << ".." << r.n_hi << "]: "
        << (r.passed ? "PASS" : "FAIL");
    if (!r.prefix_lengths.empty()) {
        auto [lo, hi] = std::ranges::minmax(r.prefix_lengths | std::views::values);
        out << " (prefix " << lo;
        if (hi != lo) out << ".." << hi;
        out << ')';
    }
    out << '\n';
    for (const auto& [key, value] : r.summary) out << "  " << key << " = " << value << '\n';
    for (const auto& w : r.witnesses) {
        out << "  n=" << w.n << ": " << w.note << '\n';
        for (std::size_t i = 0; i < w.words.size(); ++i) {
            out << "    " << format_word(w.words[i]);
            if (i < w.positions.size()) out << " @" << w.positions[i];
            out << '\n';
        }
    }
    return out.str();
}

} // namespace stackwords
