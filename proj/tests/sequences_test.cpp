#include <gtest/gtest.h>

#include <string>

#include "oracles.hpp"
#include "stackwords/sequences.hpp"

namespace sw = stackwords;

namespace {
const std::string data_dir = STACKWORDS_DATA_DIR;

const std::string f54 = "001001100011011000100111001101100010011000110111001001";
const std::string t54 = "011010011001011010010110011010011001011001101001011010";
} // namespace

TEST(Paperfolding, Examples) {
    EXPECT_EQ(sw::paperfolding_at(1), 0);
    EXPECT_EQ(sw::paperfolding_at(3), 1);
    EXPECT_EQ(sw::paperfolding_at(6), 1);
    EXPECT_THROW(sw::paperfolding_at(0), sw::domain_error);
}

TEST(ThueMorse, Examples) {
    EXPECT_EQ(sw::thue_morse_at(0), 0);
    EXPECT_EQ(sw::thue_morse_at(1), 1);
    EXPECT_EQ(sw::thue_morse_at(5), 0);
}

TEST(Prefix, Examples) {
    EXPECT_EQ(sw::format_word(sw::prefix(sw::paperfolding_word(), 12)), "001001100011");
    EXPECT_EQ(sw::format_word(sw::prefix(sw::thue_morse_word(), 12)), "011010011001");
    EXPECT_TRUE(sw::prefix(sw::thue_morse_word(), 0).empty());
}

TEST(Prefix, PublishedPrefixes) {
    EXPECT_EQ(sw::format_word(sw::prefix(sw::paperfolding_word(), 54)), f54);
    EXPECT_EQ(sw::format_word(sw::prefix(sw::thue_morse_word(), 54)), t54);
}

TEST(Prefix, ClosedFormsMatchRecursiveOracles) {
    EXPECT_EQ(sw::format_word(sw::prefix(sw::paperfolding_word(), 4096)), oracle::paperfolding_prefix(4096));
    EXPECT_EQ(sw::format_word(sw::prefix(sw::thue_morse_word(), 4096)), oracle::thue_morse_prefix(4096));
}

TEST(Prefix, ShorterPrefixIsPrefixOfLonger) {
    for (const auto& x : {sw::paperfolding_word(), sw::thue_morse_word()}) {
        const auto longest = sw::prefix(x, 300);
        for (std::size_t len = 0; len <= 300; len += 13) {
            const auto p = sw::prefix(x, len);
            EXPECT_TRUE(std::equal(p.begin(), p.end(), longest.begin())) << x.name << " " << len;
        }
    }
}

TEST(PrefixBuffer, MatchesPrefixAsItGrows) {
    const auto t = sw::thue_morse_word();
    sw::prefix_buffer buffer(t);
    buffer.extend(10);
    buffer.extend(5);
    EXPECT_EQ(buffer.size(), 10u);
    buffer.extend(100);
    const auto expected = sw::prefix(t, 100);
    EXPECT_TRUE(std::ranges::equal(buffer.view(), expected));
}

TEST(Dfao, BuiltinsAgreeWithClosedFormsUpTo2To20) {
    const auto tm = sw::thue_morse_dfao();
    const auto pf = sw::paperfolding_dfao();
    EXPECT_EQ(sw::dfao_eval(tm, 0), 0);
    EXPECT_EQ(sw::dfao_eval(tm, 5), 0);
    EXPECT_EQ(sw::dfao_eval(pf, 3), 1);
    for (std::uint64_t n = 0; n <= (1u << 20); ++n) ASSERT_EQ(sw::dfao_eval(tm, n), sw::thue_morse_at(n)) << n;
    for (std::uint64_t n = 1; n <= (1u << 20); ++n) ASSERT_EQ(sw::dfao_eval(pf, n), sw::paperfolding_at(n)) << n;
}

TEST(Dfao, ShippedFilesLoadAndMatchBuiltins) {
    const auto tm = sw::load_dfao(data_dir + "/thue_morse.dfao");
    EXPECT_EQ(sw::to_text(tm), sw::to_text(sw::thue_morse_dfao()));
    const auto pf = sw::load_dfao(data_dir + "/paperfolding.dfao");
    EXPECT_EQ(sw::to_text(pf), sw::to_text(sw::paperfolding_dfao()));
    const auto zero = sw::load_dfao(data_dir + "/constant_zero.dfao");
    for (std::uint64_t n = 0; n < 64; ++n) EXPECT_EQ(sw::dfao_eval(zero, n), 0);
}

TEST(Dfao, TextRoundTrip) {
    const auto pf = sw::paperfolding_dfao();
    const auto again = sw::parse_dfao(sw::to_text(pf));
    EXPECT_EQ(sw::to_text(again), sw::to_text(pf));
    for (std::uint64_t n = 1; n < 5000; ++n) ASSERT_EQ(sw::dfao_eval(again, n), sw::paperfolding_at(n));
}

TEST(Dfao, WordIndexBase) {
    const auto x = sw::dfao_word(sw::paperfolding_dfao(), "pf", 1);
    EXPECT_EQ(sw::prefix(x, 54), sw::prefix(sw::paperfolding_word(), 54));
}

TEST(Dfao, MissingTransitionIsValidationError) {
    const std::string text =
        "base 2 alphabet 2 initial a\n"
        "state a output 0\n"
        "state b output 1\n"
        "trans a 0 a\n"
        "trans a 1 b\n"
        "trans b 0 b\n";
    try {
        sw::parse_dfao(text);
        FAIL() << "expected validation_error";
    } catch (const sw::validation_error& e) {
        EXPECT_NE(std::string(e.what()).find("'b' on digit 1"), std::string::npos) << e.what();
    }
}

TEST(Dfao, EmptyFileIsParseError) {
    EXPECT_THROW(sw::parse_dfao(std::string{}), sw::parse_error);
}

TEST(Dfao, ParseErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            sw::parse_dfao(text);
        } catch (const sw::parse_error& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("state a output 0\n"), 1u);
    EXPECT_EQ(line_of("base 2 alphabet 2 initial a\nstate a output 7\n"), 2u);
    EXPECT_EQ(line_of("# c\nbase 2 alphabet 2 initial a\nstate a output 0\ntrans a 2 a\n"), 4u);
    EXPECT_EQ(line_of("base 2 alphabet 2 initial a\nstate a output 0\nbogus\n"), 3u);
    EXPECT_EQ(line_of("base 2 alphabet 2 initial a\nstate a output 0\ntrans a 0 zz\ntrans a 1 a\n"), 3u);
}

TEST(Dfao, UndeclaredInitialStateIsValidationError) {
    EXPECT_THROW(sw::parse_dfao("base 2 alphabet 2 initial q\nstate a output 0\ntrans a 0 a\ntrans a 1 a\n"),
                 sw::validation_error);
}

TEST(Dfao, LoadMissingFileIsUsageError) {
    EXPECT_THROW(sw::load_dfao(data_dir + "/does_not_exist.dfao"), sw::usage_error);
}

TEST(KnownComplexity, RecurrencesReproducePublishedValues) {
    const std::vector<std::uint64_t> t15{2, 4, 6, 10, 12, 16, 20, 22, 24, 28, 32, 36, 40, 42, 44};
    const std::vector<std::uint64_t> f14{2, 4, 8, 12, 18, 23, 28, 32, 36, 40, 44, 48, 52, 56};
    for (std::size_t n = 1; n <= 15; ++n) EXPECT_EQ(*sw::thue_morse_complexity(n), t15[n - 1]) << n;
    for (std::size_t n = 1; n <= 14; ++n) EXPECT_EQ(*sw::paperfolding_complexity(n), f14[n - 1]) << n;
    EXPECT_EQ(*sw::thue_morse_complexity(58), 178u);
}
