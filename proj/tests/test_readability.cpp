#include <gtest/gtest.h>

#include <mailfeat/readability.hpp>

using namespace mailfeat;

namespace {

ReadabilityCounts sample()
{
    ReadabilityCounts c;
    c.n_words = 30;
    c.n_sentences = 3;
    c.n_syllables = 45;
    c.n_complex_words = 6;
    c.n_simple_words = 24;
    c.n_monosyllable_words = 18;
    c.n_chars_in_words = 150;
    c.n_letters_in_words = 150;
    return c;
}

} // namespace

TEST(ReadabilityCounts, Empty)
{
    EXPECT_EQ(readability_counts(tokenize(""), false), ReadabilityCounts{});
}

TEST(ReadabilityCounts, StopwordRemoval)
{
    const auto tk = tokenize("The cat sat.");
    const auto without = readability_counts(tk, true);
    EXPECT_EQ(without.n_words, 2u);
    EXPECT_EQ(without.n_sentences, 1u);
    EXPECT_EQ(without.n_syllables, 2u);
    EXPECT_TRUE(without.stopwords_removed);
    EXPECT_EQ(readability_counts(tk, false).n_words, 3u);
}

TEST(ReadabilityCounts, Invariants)
{
    const auto c = readability_counts(tokenize("Beautiful tables are everywhere. Honestly, it is remarkable!"), false);
    EXPECT_EQ(c.n_simple_words + c.n_complex_words, c.n_words);
    EXPECT_LE(c.n_monosyllable_words, c.n_simple_words);
    EXPECT_GE(c.n_syllables, c.n_words);
}

TEST(ReadabilitySuite, AllZeroCounts)
{
    for (double v : compute_readability_suite({}, {}))
        EXPECT_EQ(v, 0.0);
}

TEST(ReadabilitySuite, WorkedExample)
{
    const auto r = compute_readability_suite(sample(), sample());
    EXPECT_NEAR(r[6], 12.0, 1e-12);   // FI
    EXPECT_NEAR(r[8], 69.785, 1e-12); // FRES
    EXPECT_NEAR(r[18], 1.0 / 12.0, 1e-12);
    EXPECT_EQ(r[0], 24);
    EXPECT_EQ(r[2], 6);
    EXPECT_NEAR(r[4], 1.5, 1e-12);
}

TEST(ReadabilitySuite, FogMinusSimpleFogIdentity)
{
    const auto c = sample();
    const auto r = compute_readability_suite(c, c);
    const double W = 30, C = 6, Sim = 24;
    EXPECT_NEAR(r[6] - r[16], 40.0 * (C - Sim) / W, 1e-9);
}

TEST(ReadabilitySuite, SingleVariantsUseWithStopwordCounts)
{
    auto without = sample();
    without.n_words = 10;
    without.n_simple_words = 4;
    const auto a = compute_readability_suite(sample(), without);
    const auto b = compute_readability_suite(sample(), sample());
    for (std::size_t i = 20; i < 23; ++i)
        EXPECT_EQ(a[i], b[i]);
}

TEST(ReadabilitySuite, FiniteForPositiveCounts)
{
    ReadabilityCounts c;
    c.n_words = 1;
    c.n_sentences = 1;
    c.n_simple_words = 1;
    c.n_monosyllable_words = 1;
    c.n_syllables = 1;
    for (double v : compute_readability_suite(c, c))
        EXPECT_TRUE(std::isfinite(v));
}
