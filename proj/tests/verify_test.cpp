#include <gtest/gtest.h>

#include <set>
#include <string>

#include "oracles.hpp"
#include "stackwords/report_io.hpp"
#include "stackwords/verify.hpp"

namespace sw = stackwords;

namespace {

std::set<std::string> witness_words(const sw::witness& w) {
    std::set<std::string> out;
    for (const auto& x : w.words) out.insert(sw::format_word(x));
    return out;
}

// One catalog per sequence for the whole binary; the verifiers only read from it.
sw::factor_catalog& fold() {
    static sw::factor_catalog c(sw::paperfolding_word());
    return c;
}

sw::factor_catalog& thue() {
    static sw::factor_catalog c(sw::thue_morse_word());
    return c;
}

const std::string t_text = oracle::thue_morse_prefix(1 << 14);

std::string t_window(std::size_t pos, std::size_t n) { return t_text.substr(pos, n); }

} // namespace

TEST(PfInjectivity, Examples) {
    EXPECT_TRUE(sw::verify_pf_injectivity(fold(), 8, 64).passed);

    const auto five = sw::verify_pf_injectivity(fold(), 5, 5);
    EXPECT_FALSE(five.passed);
    ASSERT_FALSE(five.witnesses.empty());
    for (const auto& w : five.witnesses) {
        ASSERT_GE(w.words.size(), 2u);
        EXPECT_NE(w.words[0], w.words[1]);
        EXPECT_EQ(sw::tortoise(w.words[0]), sw::tortoise(w.words[1]));
    }

    const auto two = sw::verify_pf_injectivity(fold(), 2, 2);
    EXPECT_FALSE(two.passed);
    ASSERT_EQ(two.witnesses.size(), 1u);
    EXPECT_EQ(witness_words(two.witnesses[0]), (std::set<std::string>{"01", "10"}));
}

TEST(PfInjectivity, WitnessPositionsReproduceWords) {
    const auto r = sw::verify_pf_injectivity(fold(), 3, 7);
    const auto text = oracle::paperfolding_prefix(1 << 12);
    for (const auto& w : r.witnesses)
        for (std::size_t i = 0; i < w.words.size(); ++i)  // f is 1-indexed
            EXPECT_EQ(text.substr(w.positions[i] - 1, w.n), sw::format_word(w.words[i]));
}

TEST(PfRho, Examples) {
    EXPECT_TRUE(sw::verify_pf_rho_formula(fold(), 8, 64).passed);
    const auto seven = sw::verify_pf_rho_formula(fold(), 7, 7);
    EXPECT_FALSE(seven.passed);
    EXPECT_EQ(seven.summary.at("tortoise_failures"), 1);
    EXPECT_EQ(seven.summary.at("rho_failures"), 0);
}

TEST(TmClasses, Examples) {
    const auto fifty_eight = sw::verify_tm_class_structure(thue(), 58, 58);
    EXPECT_TRUE(fifty_eight.passed);
    EXPECT_EQ(fifty_eight.summary.at("nontrivial_classes"), 2);

    const auto twelve = sw::verify_tm_class_structure(thue(), 12, 12);
    EXPECT_TRUE(twelve.passed);
    // every class is a pair, so the gap 36 - 32 counts classes, not merged words
    EXPECT_EQ(twelve.summary.at("nontrivial_classes"), 4);
    EXPECT_EQ(sw::rho(thue(), 12) - sw::rho_tortoise(thue(), 12, 1), 4u);

    EXPECT_THROW(sw::verify_tm_class_structure(thue(), 8, 20), sw::usage_error);
}

// The {01y, 10y} shape holds from n = 10; n = 9 has one class outside it.
TEST(TmClasses, ShapeFailsOnlyAtNine) {
    EXPECT_TRUE(sw::verify_tm_class_structure(thue(), 10, 64).passed);
    const auto r = sw::verify_tm_class_structure(thue(), 9, 64);
    EXPECT_FALSE(r.passed);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(r.witnesses[0].n, 9u);
    EXPECT_EQ(witness_words(r.witnesses[0]), (std::set<std::string>{"001011001", "010011001"}));
    EXPECT_EQ(r.witnesses[0].positions, (std::vector<std::uint64_t>{17, 3}));
}

TEST(CounterWords, Examples) {
    const auto c58 = sw::tm_counter_words(58);
    EXPECT_EQ(c58.m, 6u);
    EXPECT_FALSE(c58.leading_10);
    EXPECT_EQ(c58.positions[0], 126u);
    EXPECT_EQ(c58.positions[3], 190u);
    const auto w1 = sw::format_word(c58.words[0]);
    EXPECT_EQ(w1.substr(0, 16), "0110010110011010");
    EXPECT_EQ(w1.substr(w1.size() - 6), "010110");
    EXPECT_EQ(sw::format_word(c58.words[3]).substr(0, 10), "0101101001");
    EXPECT_EQ(c58.admissible(), (std::vector<std::size_t>{0, 3}));

    // n - 3 = 8 = [1000]_2 has bit length 4
    const auto c11 = sw::tm_counter_words(11);
    EXPECT_EQ(c11.m, 4u);
    EXPECT_TRUE(c11.leading_10);
    EXPECT_EQ(c11.positions, (std::array<std::uint64_t, 4>{30, 38, 42, 46}));

    EXPECT_THROW(sw::tm_counter_words(10), sw::domain_error);
}

TEST(CounterWords, AreFactorsAtTheClaimedPositions) {
    for (std::size_t n = 11; n <= 64; ++n) {
        const auto c = sw::tm_counter_words(n);
        const auto& fs = thue().factors(n);
        for (std::size_t i = 0; i < 4; ++i) {
            if (i > 0) {
                EXPECT_LT(c.positions[i - 1], c.positions[i]);
            }
            EXPECT_EQ(c.words[i].size(), n);
            EXPECT_EQ(sw::format_word(c.words[i]), t_window(c.positions[i], n));
            const auto* e = fs.find(c.words[i]);
            ASSERT_NE(e, nullptr);
            EXPECT_EQ(fs.native_position(*e), c.positions[i]) << "n=" << n << " counter " << i + 1;
        }
    }
}

// All four counters sit in nontrivial classes after 10, only the first and last after 11.
TEST(CounterWords, NontrivialMembershipMatchesLeadingBits) {
    for (std::size_t n = 11; n <= 64; ++n) {
        const auto c = sw::tm_counter_words(n);
        const auto report = sw::classify(thue(), n, 1);
        std::vector<std::size_t> in_nontrivial;
        for (std::size_t i = 0; i < 4; ++i)
            for (const auto* cls : report.nontrivial())
                for (const auto& m : cls->members)
                    if (m.factor == c.words[i]) in_nontrivial.push_back(i);
        EXPECT_EQ(in_nontrivial, c.admissible()) << n;
        EXPECT_EQ(sw::rho(thue(), n) - sw::rho_tortoise(thue(), n, 1), c.leading_10 ? 4u : 2u) << n;
    }
}

TEST(TmCounters, Examples) {
    EXPECT_TRUE(sw::verify_tm_counters(thue(), 11, 64).passed);

    const auto report = sw::classify(thue(), 58, 1);
    std::set<std::string> members;
    for (const auto* cls : report.nontrivial())
        for (const auto& m : cls->members) members.insert(sw::format_word(m.factor));
    const std::set<std::string> named{t_window(126, 58), t_window(190, 58), t_window(62, 58),
                                      t_window(94, 58)};
    EXPECT_EQ(members, named);

    // v1 = t_62 ... t_119 is the partner of w1
    const auto v1 = sw::parse_word(t_window(62, 58));
    const auto w1 = sw::tm_counter_words(58).words[0];
    EXPECT_NE(v1, w1);
    EXPECT_EQ(sw::tortoise(v1), sw::tortoise(w1));
    EXPECT_NE(sw::tortoise(w1), sw::tortoise(sw::tm_counter_words(58).words[3]));
}

TEST(TmRho, Examples) {
    EXPECT_TRUE(sw::verify_tm_rho_formula(thue(), 10, 64).passed);
    EXPECT_EQ(sw::rho_tortoise(thue(), 11, 1), 28u);
    EXPECT_EQ(sw::rho_tortoise(thue(), 15, 1), 42u);
    EXPECT_EQ(sw::rho_tortoise(thue(), 58, 1), 176u);
    EXPECT_THROW(sw::verify_tm_rho_formula(thue(), 9, 12), sw::usage_error);
}

TEST(TmRho, RecurrenceCrossCheckUsesPureEnumeration) {
    sw::stabilization_policy pure;
    pure.use_known_targets = false;
    sw::factor_catalog t(sw::thue_morse_word(), pure);
    EXPECT_TRUE(sw::verify_tm_rho_formula(t, 10, 64).passed);
}

TEST(LeftSpecialLemma, Examples) {
    const auto t = sw::verify_left_special_lemma(thue(), 9, 40);
    EXPECT_TRUE(t.passed);
    EXPECT_GT(t.summary.at("pairs_checked"), 0);

    const auto f = sw::verify_left_special_lemma(fold(), 2, 7);
    EXPECT_TRUE(f.passed);
    EXPECT_GT(f.summary.at("pairs_checked"), 0);

    sw::factor_catalog zero(sw::constant_word(0));
    const auto vacuous = sw::verify_left_special_lemma(zero, 1, 10);
    EXPECT_TRUE(vacuous.passed);
    EXPECT_EQ(vacuous.summary.at("pairs_checked"), 0);
}

TEST(Sandwich, Examples) {
    const auto t = sw::verify_sandwich(thue(), 10, 64);
    EXPECT_TRUE(t.passed);
    EXPECT_EQ(t.summary.at("empirical_C"), 4);

    const auto f = sw::verify_sandwich(fold(), 8, 64);
    EXPECT_TRUE(f.passed);
    EXPECT_EQ(f.summary.at("empirical_C"), 0);

    const auto small = sw::verify_sandwich(fold(), 1, 7);
    EXPECT_TRUE(small.passed);
    for (std::size_t n = 3; n <= 7; ++n) EXPECT_GT(sw::rho(fold(), n), sw::rho_tortoise(fold(), n, 1)) << n;
    // n = 2 also merges 01 with 10
    EXPECT_EQ(small.summary.at("positive_gaps"), 6);
}

TEST(GapBound, MinimalBounds) {
    EXPECT_EQ(sw::ones_gap_bound(fold(), 9), 4u);
    EXPECT_EQ(sw::ones_gap_bound(thue(), 9), 3u);
    sw::factor_catalog zero(sw::constant_word(0));
    EXPECT_FALSE(sw::ones_gap_bound(zero, 9).has_value());
}

TEST(Reports, ReproducibleAndRecordPrefixes) {
    sw::factor_catalog fresh(sw::thue_morse_word());
    const auto a = sw::to_json(sw::verify_tm_counters(thue(), 11, 40)).dump();
    const auto b = sw::to_json(sw::verify_tm_counters(fresh, 11, 40)).dump();
    EXPECT_EQ(a, b);
    const auto r = sw::verify_pf_rho_formula(fold(), 8, 20);
    EXPECT_EQ(r.prefix_lengths.size(), 13u);
    EXPECT_EQ(sw::to_text(r), sw::to_text(sw::verify_pf_rho_formula(fold(), 8, 20)));
}

TEST(Reports, FailureJsonCarriesWitness) {
    const auto j = sw::to_json(sw::verify_pf_injectivity(fold(), 2, 2));
    EXPECT_EQ(j["outcome"], "fail");
    EXPECT_EQ(j["range"], sw::json::array({2, 2}));
    ASSERT_EQ(j["witnesses"].size(), 1u);
    EXPECT_EQ(j["witnesses"][0]["words"], sw::json::array({"01", "10"}));
}

TEST(Suites, NamesAndMinimums) {
    EXPECT_EQ(sw::suite_names().size(), 7u);
    EXPECT_EQ(sw::suite_minimum("pf-inj"), 8u);
    EXPECT_EQ(sw::suite_minimum("tm-classes"), 9u);
    EXPECT_EQ(sw::suite_minimum("tm-rho"), 10u);
    EXPECT_EQ(sw::suite_minimum("tm-counters"), 11u);
    EXPECT_EQ(sw::suite_minimum("sandwich"), 1u);
}
