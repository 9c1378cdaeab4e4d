#include <gtest/gtest.h>

#include <cmath>

#include <mailfeat/features_body.hpp>

using namespace mailfeat;

namespace {

std::array<double, body_feature_count> body_of(const std::string& text, const std::string& html = "")
{
    EmailParts parts;
    parts.text_body = text;
    parts.html_body = html;
    static const Lexicons lexicons;
    return body_features(parts, make_analysis_text(parts), lexicons);
}

double get(const std::array<double, body_feature_count>& f, std::string_view id)
{
    return f[full_catalog().index_of(id).value() - fid("B01")];
}

} // namespace

TEST(BodyFeatures, EmptyBodyIsAllZero)
{
    for (double v : body_of(""))
        EXPECT_EQ(v, 0.0);
}

TEST(BodyFeatures, QuestionAndExclamationRuns)
{
    const auto f = body_of("Hi!! See $5??");
    EXPECT_EQ(get(f, "B33"), 2);
    EXPECT_EQ(get(f, "B34"), 1);
    EXPECT_EQ(get(f, "B31"), 2);
    EXPECT_EQ(get(f, "B32"), 1);
    EXPECT_EQ(get(f, "B45"), 1);
}

TEST(BodyFeatures, HtmlTagCounts)
{
    const auto f = body_of("", "<a href=x>a</a><a href=x>b</a><img>");
    EXPECT_EQ(get(f, "B03"), 2);
    EXPECT_EQ(get(f, "B04"), 1);
    EXPECT_EQ(get(f, "B06"), 1);
    EXPECT_EQ(get(f, "B07"), 3);
    EXPECT_EQ(get(f, "B05"), 1);
}

TEST(BodyFeatures, HandCountedParagraphs)
{
    const auto f = body_of("Hi there, Bob.\n\nBUY now: 42 items!!");
    const std::vector<std::pair<const char*, double>> expected{
        {"B08", 0},  {"B11", 0},  {"B12", 2},  {"B13", 16},   {"B14", 3},   {"B15", 3},
        {"B16", 2},  {"B17", 7},  {"B18", 5},  {"B19", 35},   {"B20", 0},   {"B21", 5},
        {"B22", 21}, {"B23", 7},  {"B25", 0},  {"B26", 5},    {"B27", 0},   {"B28", 1},
        {"B29", 1},  {"B30", 0},  {"B31", 0},  {"B32", 0},    {"B33", 2},   {"B34", 1},
        {"B35", 1},  {"B36", 0},  {"B37", 2},  {"B38", 2},    {"B39", 1},   {"B40", 3.5},
        {"B41", 11.5}, {"B42", 3.5}, {"B43", 2}, {"B44", 0},  {"B45", 0},   {"B46", 2},
        {"B47", 1},  {"B48", 1},  {"B49", 6},  {"B50", 0},    {"B51", 0},   {"B52", 0},
        {"B53", 3},  {"B54", 0.8}, {"B55", 1}, {"B56", 1},    {"B57", 0},   {"B58", 1},
        {"B59", 5}};
    for (const auto& [id, v] : expected)
        EXPECT_DOUBLE_EQ(get(f, id), v) << id;
    EXPECT_DOUBLE_EQ(get(f, "B24"), 23.0 / 7.0);
    EXPECT_DOUBLE_EQ(get(f, "B09"), std::log(2.0));
    EXPECT_DOUBLE_EQ(get(f, "B10"), std::log(2.0));
}

TEST(BodyFeatures, EllipsisAndTabs)
{
    const auto f = body_of("wait.....\tthen... ok.");
    EXPECT_EQ(get(f, "B36"), 2);
    EXPECT_EQ(get(f, "B29"), 9);
    EXPECT_EQ(get(f, "B20"), 1);
}

TEST(BodyFeatures, PlainTextWinsOverHtml)
{
    EmailParts parts;
    parts.text_body = "plain words";
    parts.html_body = "<p>html words here</p>";
    EXPECT_EQ(make_analysis_text(parts).tk.tokens.size(), 2u);
    parts.text_body.clear();
    EXPECT_EQ(make_analysis_text(parts).tk.tokens.size(), 3u);
}

TEST(BodyFeatures, LexiconHitsCountMultiplicity)
{
    const auto lex = parse_lexicon("t", "free\n# comment\nact now\n");
    const std::vector<std::string> tokens{"free", "free", "offer", "act", "now"};
    EXPECT_EQ(count_lexicon_hits(tokens, lex), 3u);
    EXPECT_EQ(count_lexicon_hits(std::vector<std::string>{}, lex), 0u);
}

TEST(TfIsf, Conventions)
{
    EXPECT_EQ(tf_isf(tokenize(""), false), 0.0);
    EXPECT_EQ(tf_isf(tokenize("one sentence with words only"), false), 0.0);
    EXPECT_EQ(tf_isf(tokenize("The the. The."), true), 0.0);
}

TEST(Lexicons, ShippedListsAreLoaded)
{
    EXPECT_EQ(default_stopwords().size(), 174u);
    EXPECT_GE(default_spam_words().size(), 250u);
    EXPECT_GE(default_function_words().size(), 250u);
    EXPECT_TRUE(default_stopwords().contains("the"));
}
