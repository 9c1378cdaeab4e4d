#include <gtest/gtest.h>

#include <cmath>

#include <mailfeat/lexical.hpp>

using namespace mailfeat;

namespace {

std::array<double, lexical_feature_count> suite(std::vector<std::string> tokens)
{
    return compute_lexical_suite(frequency_spectrum(tokens));
}

} // namespace

TEST(Spectrum, Empty)
{
    const auto fs = frequency_spectrum(std::vector<std::string>{});
    EXPECT_EQ(fs.N, 0u);
    EXPECT_EQ(fs.V, 0u);
    EXPECT_TRUE(fs.spectrum.empty());
}

TEST(Spectrum, SmallExample)
{
    const std::vector<std::string> tokens{"a", "b", "a"};
    const auto fs = frequency_spectrum(tokens);
    EXPECT_EQ(fs.N, 3u);
    EXPECT_EQ(fs.V, 2u);
    EXPECT_EQ(fs.spectrum.at(1), 1u);
    EXPECT_EQ(fs.spectrum.at(2), 1u);
}

TEST(LexicalSuite, SingleRepeatedType)
{
    const auto r = suite({"a", "a", "a", "a"});
    EXPECT_EQ(r[0], 1);
    EXPECT_EQ(r[1], 0);
    EXPECT_EQ(r[3], 0);
    EXPECT_DOUBLE_EQ(r[4], 7500);
    EXPECT_EQ(r[5], 0);
    EXPECT_DOUBLE_EQ(r[6], 100.0 * std::log(4.0));
}

TEST(LexicalSuite, AllHapax)
{
    const auto r = suite({"a", "b", "c", "d"});
    EXPECT_DOUBLE_EQ(r[3], 2.0);
    EXPECT_DOUBLE_EQ(r[4], 0.0);
    EXPECT_EQ(r[1], 4);
    EXPECT_DOUBLE_EQ(r[6], 100.0 * std::log(4.0) / 0.01);
}

TEST(LexicalSuite, Empty)
{
    for (double v : suite({}))
        EXPECT_EQ(v, 0.0);
}

TEST(LexicalSuite, YuleKIgnoresRelabeling)
{
    const auto a = suite({"x", "y", "y", "z", "z", "z"});
    const auto b = suite({"p", "q", "q", "r", "r", "r"});
    EXPECT_EQ(a, b);
}

TEST(LexicalSuite, SichelAndDislegomena)
{
    const auto r = suite({"a", "a", "b", "b", "c"});
    EXPECT_EQ(r[2], 2);
    EXPECT_DOUBLE_EQ(r[5], 2.0 / 3.0);
}
