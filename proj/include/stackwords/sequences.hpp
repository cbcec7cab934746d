#pragma once

/**
 * @file sequences.hpp
 * @brief Infinite words: closed-form generators, DFAO interpreter, prefixes.
 */

#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace stackwords {

/// Paperfolding word f = (f_n)_{n>=1}: with n = n'2^k, n' odd, f_n = 0 iff n' ≡ 1 (mod 4).
inline symbol paperfolding_at(std::uint64_t n) {
    if (n == 0) throw domain_error("paperfolding_at: f is indexed from 1");
    const auto odd = n >> std::countr_zero(n);
    return (odd & 3u) == 1 ? 0 : 1;
}

/// Thue-Morse word t = (t_n)_{n>=0}: parity of the binary digit sum of n.
inline symbol thue_morse_at(std::uint64_t n) { return static_cast<symbol>(std::popcount(n) & 1); }

/// ρ_f(n), known in closed form for n >= 7; small values tabulated.
inline std::optional<std::uint64_t> paperfolding_complexity(std::size_t n) {
    static constexpr std::uint64_t small[] = {1, 2, 4, 8, 12, 18, 23};
    if (n < std::size(small)) return small[n];
    return 4 * std::uint64_t{n};
}

/// ρ_t(n) via ρ(2m) = ρ(m) + ρ(m+1), ρ(2m+1) = 2ρ(m+1) for m >= 2.
inline std::optional<std::uint64_t> thue_morse_complexity(std::size_t n) {
    static constexpr std::uint64_t small[] = {1, 2, 4, 6};
    if (n < std::size(small)) return small[n];
    const auto m = n / 2;
    if (n % 2 == 0) return *thue_morse_complexity(m) + *thue_morse_complexity(m + 1);
    return 2 * *thue_morse_complexity(m + 1);
}

/**
 * An indexed symbol source. `at` is total on indices >= index_base and must
 * be deterministic. `known_complexity`, when set, returns ρ(n) in closed
 * form; factor enumeration may use it to stop prefix doubling early.
 */
struct infinite_word {
    std::string name;
    std::size_t alphabet_size = 2;
    std::uint64_t index_base = 0;
    std::function<symbol(std::uint64_t)> at;
    std::function<std::optional<std::uint64_t>(std::size_t)> known_complexity;
};

inline infinite_word paperfolding_word() {
    return {"f", 2, 1, paperfolding_at, paperfolding_complexity};
}

inline infinite_word thue_morse_word() {
    return {"t", 2, 0, thue_morse_at, thue_morse_complexity};
}

inline infinite_word constant_word(symbol value, std::size_t alphabet_size = 2) {
    return {"const" + std::to_string(value), alphabet_size, 0,
            [value](std::uint64_t) { return value; },
            [](std::size_t) -> std::optional<std::uint64_t> { return 1; }};
}

/// Length-L prefix x.at(base) ... x.at(base + L - 1).
inline word prefix(const infinite_word& x, std::size_t length) {
    word w(length);
    for (std::size_t i = 0; i < length; ++i) w[i] = x.at(x.index_base + i);
    return w;
}

/// Materialized prefix that can only grow. Not safe for concurrent extension.
class prefix_buffer {
public:
    explicit prefix_buffer(const infinite_word& source) : source_(&source) {}

    const infinite_word& source() const { return *source_; }
    std::size_t size() const { return symbols_.size(); }
    word_view view() const { return symbols_; }

    void extend(std::size_t length) {
        symbols_.reserve(length);
        while (symbols_.size() < length)
            symbols_.push_back(source_->at(source_->index_base + symbols_.size()));
    }

private:
    const infinite_word* source_;
    word symbols_;
};

// ---------------------------------------------------------------------------
// DFAO

/**
 * Deterministic finite automaton with output, read most-significant digit
 * first. States are dense indices; `state_names` keeps the identifiers used
 * in the text format.
 */
struct dfao {
    unsigned base = 2;
    std::size_t alphabet_size = 2;
    std::size_t initial = 0;
    std::vector<std::string> state_names;
    std::vector<symbol> outputs;                    // per state
    std::vector<std::vector<std::size_t>> delta;    // delta[state][digit]

    std::size_t state_count() const { return outputs.size(); }
};

inline symbol dfao_eval(const dfao& d, std::uint64_t n) {
    // Collect digits least-significant first, then replay from the top.
    std::uint8_t digits[64];
    int count = 0;
    for (; n > 0; n /= d.base) digits[count++] = static_cast<std::uint8_t>(n % d.base);
    auto state = d.initial;
    while (count-- > 0) state = d.delta[state][digits[count]];
    return d.outputs[state];
}

inline infinite_word dfao_word(dfao d, std::string name, std::uint64_t index_base = 0) {
    const auto alphabet = d.alphabet_size;
    return {std::move(name), alphabet, index_base,
            [d = std::move(d)](std::uint64_t n) { return dfao_eval(d, n); }, {}};
}

/**
 * Parse the DFAO text format:
 *
 *     base <b> alphabet <A> initial <s0>
 *     state <id> output <sym>        (one per state)
 *     trans <from> <digit> <to>      (one per state and digit)
 *
 * Blank lines and '#' comments are ignored. Structural problems raise
 * parse_error with the line number; missing transitions or outputs raise
 * validation_error naming the gap.
 */
inline dfao parse_dfao(std::istream& in) {
    dfao d;
    std::map<std::string, std::size_t> ids;
    std::string initial_name;
    bool have_header = false;
    std::vector<std::vector<std::optional<std::size_t>>> pending;
    std::vector<std::tuple<std::size_t, std::string, unsigned long, std::string>> transitions;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) continue;

        auto expect = [&](const char* label) {
            std::string tok;
            if (!(fields >> tok) || tok != label)
                throw parse_error(lineno, std::string("expected '") + label + "'");
        };
        auto number = [&](const char* what) {
            std::string tok;
            if (!(fields >> tok)) throw parse_error(lineno, std::string("missing ") + what);
            try {
                std::size_t used = 0;
                auto v = std::stoul(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                return v;
            } catch (const std::exception&) {
                throw parse_error(lineno, std::string("bad ") + what + " '" + tok + "'");
            }
        };
        auto name = [&](const char* what) {
            std::string tok;
            if (!(fields >> tok)) throw parse_error(lineno, std::string("missing ") + what);
            return tok;
        };
        auto no_trailing = [&] {
            std::string extra;
            if (fields >> extra) throw parse_error(lineno, "unexpected '" + extra + "'");
        };

        if (keyword == "base") {
            if (have_header) throw parse_error(lineno, "duplicate header");
            auto b = number("base");
            if (b < 2 || b > 255) throw parse_error(lineno, "base must be in [2, 255]");
            d.base = static_cast<unsigned>(b);
            expect("alphabet");
            auto a = number("alphabet size");
            if (a < 1 || a > max_alphabet_size) throw parse_error(lineno, "alphabet size out of range");
            d.alphabet_size = a;
            expect("initial");
            initial_name = name("initial state");
            no_trailing();
            have_header = true;
        } else if (!have_header) {
            throw parse_error(lineno, "expected header 'base <b> alphabet <A> initial <s0>'");
        } else if (keyword == "state") {
            auto id = name("state id");
            expect("output");
            auto out = number("output symbol");
            no_trailing();
            if (out >= d.alphabet_size)
                throw parse_error(lineno, "output " + std::to_string(out) + " outside alphabet");
            if (ids.contains(id)) throw parse_error(lineno, "duplicate state '" + id + "'");
            ids.emplace(id, d.outputs.size());
            d.state_names.push_back(id);
            d.outputs.push_back(static_cast<symbol>(out));
        } else if (keyword == "trans") {
            auto from = name("source state");
            auto digit = number("digit");
            auto to = name("target state");
            no_trailing();
            if (digit >= d.base)
                throw parse_error(lineno, "digit " + std::to_string(digit) + " outside base");
            transitions.emplace_back(lineno, from, digit, to);
        } else {
            throw parse_error(lineno, "unknown keyword '" + keyword + "'");
        }
    }
    if (!have_header) throw parse_error(lineno + 1, "missing header 'base <b> alphabet <A> initial <s0>'");

    auto resolve = [&](std::size_t at, const std::string& id) {
        auto it = ids.find(id);
        if (it == ids.end()) throw parse_error(at, "undeclared state '" + id + "'");
        return it->second;
    };
    pending.assign(d.outputs.size(), std::vector<std::optional<std::size_t>>(d.base));
    for (const auto& [at, from, digit, to] : transitions) {
        auto& slot = pending[resolve(at, from)][digit];
        if (slot) throw parse_error(at, "duplicate transition from '" + from + "' on " + std::to_string(digit));
        slot = resolve(at, to);
    }
    if (d.outputs.empty()) throw validation_error("DFAO declares no states");
    if (!ids.contains(initial_name))
        throw validation_error("initial state '" + initial_name + "' is not declared");
    d.initial = ids.at(initial_name);

    d.delta.assign(d.outputs.size(), std::vector<std::size_t>(d.base));
    for (std::size_t s = 0; s < pending.size(); ++s)
        for (unsigned digit = 0; digit < d.base; ++digit) {
            if (!pending[s][digit])
                throw validation_error("missing transition from state '" + d.state_names[s] +
                                       "' on digit " + std::to_string(digit));
            d.delta[s][digit] = *pending[s][digit];
        }
    return d;
}

inline dfao parse_dfao(const std::string& text) {
    std::istringstream in(text);
    return parse_dfao(in);
}

inline dfao load_dfao(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open DFAO file '" + path + "'");
    return parse_dfao(in);
}

inline std::string to_text(const dfao& d) {
    std::ostringstream out;
    out << "base " << d.base << " alphabet " << d.alphabet_size << " initial "
        << d.state_names[d.initial] << '\n';
    for (std::size_t s = 0; s < d.state_count(); ++s)
        out << "state " << d.state_names[s] << " output " << d.outputs[s] << '\n';
    for (std::size_t s = 0; s < d.state_count(); ++s)
        for (unsigned digit = 0; digit < d.base; ++digit)
            out << "trans " << d.state_names[s] << ' ' << digit << ' '
                << d.state_names[d.delta[s][digit]] << '\n';
    return out.str();
}

/// Two states tracking the parity of 1-digits.
inline dfao thue_morse_dfao() {
    return parse_dfao(
        "base 2 alphabet 2 initial even\n"
        "state even output 0\n"
        "state odd output 1\n"
        "trans even 0 even\n"
        "trans even 1 odd\n"
        "trans odd 0 odd\n"
        "trans odd 1 even\n");
}

/**
 * f_n is the binary digit just above the lowest 1 of n. Reading msd-first,
 * each state remembers the last digit read and the digit that preceded the
 * most recent 1; the latter is the output. State 'pXrY' = last digit X,
 * recorded digit Y. n = 0 (outside f's domain) evaluates to 0.
 */
inline dfao paperfolding_dfao() {
    return parse_dfao(
        "base 2 alphabet 2 initial p0r0\n"
        "state p0r0 output 0\n"
        "state p0r1 output 1\n"
        "state p1r0 output 0\n"
        "state p1r1 output 1\n"
        "trans p0r0 0 p0r0\n"
        "trans p0r0 1 p1r0\n"
        "trans p0r1 0 p0r1\n"
        "trans p0r1 1 p1r0\n"
        "trans p1r0 0 p0r0\n"
        "trans p1r0 1 p1r1\n"
        "trans p1r1 0 p0r1\n"
        "trans p1r1 1 p1r1\n");
}

} // namespace stackwords
