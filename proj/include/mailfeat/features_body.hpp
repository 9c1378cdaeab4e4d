#pragma once

// Body features B01..B59, computed on the analysis text (plain body, or the
// stripped HTML body when there is no plain part) and on the raw HTML body.

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "catalog.hpp"
#include "detail/utf8.hpp"
#include "eml.hpp"
#include "lexicon.hpp"
#include "textkit.hpp"

namespace mailfeat {

struct AnalysisText {
    std::string text;
    TokenizedText tk;
    std::vector<std::string> lower_tokens;
};

inline AnalysisText make_analysis_text(const EmailParts& parts)
{
    AnalysisText at;
    at.text = !parts.text_body.empty() ? parts.text_body : strip_html(parts.html_body);
    at.tk = tokenize(at.text);
    at.lower_tokens = lowercase_tokens(at.tk);
    return at;
}

/// Mean over distinct terms of tf(t) * ln(S / sf(t)), where S is the sentence
/// count and sf(t) the number of sentences containing t. Stopwords are
/// removed first when a list is given. 0 when there are no sentences or terms.
inline double tf_isf(const TokenizedText& tk, const Lexicon* stopwords)
{
    const std::size_t S = tk.sentences.size();
    if (S == 0)
        return 0;
    std::unordered_map<std::string, std::size_t> tf;
    std::unordered_map<std::string, std::size_t> sf;
    for (const auto& sentence : tk.sentences) {
        std::unordered_set<std::string> seen;
        for (std::size_t i = sentence.begin; i < sentence.end; ++i) {
            auto term = detail::to_lower_utf8(tk.tokens[i]);
            if (stopwords && stopwords->contains(term))
                continue;
            ++tf[term];
            if (seen.insert(term).second)
                ++sf[term];
        }
    }
    if (tf.empty())
        return 0;
    double sum = 0;
    for (const auto& [term, count] : tf)
        sum += static_cast<double>(count) * std::log(static_cast<double>(S) / static_cast<double>(sf[term]));
    return sum / static_cast<double>(tf.size());
}

inline double tf_isf(const TokenizedText& tk, bool drop_stopwords)
{
    return tf_isf(tk, drop_stopwords ? &default_stopwords() : nullptr);
}

/// Punctuation and character-run counts over the analysis text.
struct PunctuationCounts {
    std::size_t single_quotes = 0;
    std::size_t commas = 0;
    std::size_t periods = 0;
    std::size_t semicolons = 0;
    std::size_t question_marks = 0;
    std::size_t multi_question_runs = 0; // runs of two or more
    std::size_t exclamation_marks = 0;
    std::size_t multi_exclamation_runs = 0;
    std::size_t colons = 0;
    std::size_t ellipses = 0; // runs of three or more periods
    std::size_t dollars = 0;
    std::size_t longest_upper_run = 0;
    std::size_t lines = 0;
};

inline PunctuationCounts punctuation_counts(std::string_view text)
{
    PunctuationCounts p;
    const auto cps = detail::decode_utf8_lenient(text);
    std::size_t upper_run = 0;
    for (std::size_t i = 0; i < cps.size();) {
        const char32_t c = cps[i];
        upper_run = detail::is_upper(c) ? upper_run + 1 : 0;
        p.longest_upper_run = std::max(p.longest_upper_run, upper_run);
        if (c == '.' || c == '?' || c == '!') {
            std::size_t j = i;
            while (j < cps.size() && cps[j] == c)
                ++j;
            const std::size_t run = j - i;
            if (c == '.') {
                p.periods += run;
                p.ellipses += run >= 3;
            } else if (c == '?') {
                p.question_marks += run;
                p.multi_question_runs += run >= 2;
            } else {
                p.exclamation_marks += run;
                p.multi_exclamation_runs += run >= 2;
            }
            i = j;
            continue;
        }
        p.single_quotes += c == '\'';
        p.commas += c == ',';
        p.semicolons += c == ';';
        p.colons += c == ':';
        p.dollars += c == '$';
        p.lines += c == '\n';
        ++i;
    }
    if (!cps.empty() && cps.back() != '\n')
        ++p.lines;
    return p;
}

inline constexpr std::size_t body_feature_count = 59;

inline std::array<double, body_feature_count> body_features(const EmailParts& parts, const AnalysisText& at,
                                                            const Lexicons& lexicons)
{
    std::array<double, body_feature_count> f{};
    constexpr std::size_t base = fid("B01");
    auto at_id = [&](std::size_t index) -> double& { return f[index - base]; };
    const auto& tk = at.tk;

    at_id(fid("B01")) = static_cast<double>(count_lexicon_hits(at.lower_tokens, lexicons.spam_words));
    at_id(fid("B02")) = static_cast<double>(count_lexicon_hits(at.lower_tokens, lexicons.function_words));

    const auto html = html_tag_stats(parts.html_body);
    at_id(fid("B03")) = static_cast<double>(html.n_anchors);
    at_id(fid("B04")) = static_cast<double>(html.n_unique_anchors);
    at_id(fid("B05")) = static_cast<double>(html.n_non_anchor_tags);
    at_id(fid("B06")) = static_cast<double>(html.n_images);
    at_id(fid("B07")) = static_cast<double>(html.n_all_tags);

    const auto ws = word_shape_stats(tk.tokens);
    at_id(fid("B08")) = static_cast<double>(ws.n_alnum_mixed_words);
    at_id(fid("B09")) = tf_isf(tk, nullptr);
    at_id(fid("B10")) = tf_isf(tk, &lexicons.stopwords);

    const std::unordered_set<std::string> distinct(at.lower_tokens.begin(), at.lower_tokens.end());
    const std::size_t n_words = tk.tokens.size();
    at_id(fid("B11")) = static_cast<double>(n_words - distinct.size());

    std::size_t min_len = 0, word_chars = 0, long_words = 0, short_words = 0;
    for (std::size_t i = 0; i < n_words; ++i) {
        const std::size_t len = detail::count_code_points(tk.tokens[i]);
        min_len = i == 0 ? len : std::min(min_len, len);
        word_chars += len;
        long_words += len > 6;
        short_words += len >= 1 && len <= 3;
    }
    at_id(fid("B12")) = static_cast<double>(min_len);

    const auto punct = punctuation_counts(at.text);
    const auto& cc = tk.chars;
    at_id(fid("B13")) = static_cast<double>(cc.lower);
    at_id(fid("B14")) = static_cast<double>(punct.longest_upper_run);
    at_id(fid("B15")) = static_cast<double>(punct.lines);
    at_id(fid("B16")) = static_cast<double>(cc.digit);
    at_id(fid("B17")) = static_cast<double>(cc.whitespace);
    at_id(fid("B18")) = static_cast<double>(cc.upper);
    at_id(fid("B19")) = static_cast<double>(cc.total);
    at_id(fid("B20")) = static_cast<double>(cc.tabs);
    at_id(fid("B21")) = static_cast<double>(cc.special);
    at_id(fid("B22")) = static_cast<double>(cc.alpha);

    auto ratio = [](double num, std::size_t den) { return den == 0 ? 0.0 : num / static_cast<double>(den); };
    at_id(fid("B23")) = static_cast<double>(n_words);
    at_id(fid("B24")) = ratio(static_cast<double>(word_chars), n_words);
    at_id(fid("B25")) = static_cast<double>(long_words);
    at_id(fid("B26")) = static_cast<double>(short_words);

    at_id(fid("B27")) = static_cast<double>(punct.single_quotes);
    at_id(fid("B28")) = static_cast<double>(punct.commas);
    at_id(fid("B29")) = static_cast<double>(punct.periods);
    at_id(fid("B30")) = static_cast<double>(punct.semicolons);
    at_id(fid("B31")) = static_cast<double>(punct.question_marks);
    at_id(fid("B32")) = static_cast<double>(punct.multi_question_runs);
    at_id(fid("B33")) = static_cast<double>(punct.exclamation_marks);
    at_id(fid("B34")) = static_cast<double>(punct.multi_exclamation_runs);
    at_id(fid("B35")) = static_cast<double>(punct.colons);
    at_id(fid("B36")) = static_cast<double>(punct.ellipses);

    const std::size_t n_sent = tk.sentences.size();
    const std::size_t n_para = tk.paragraphs.size();
    at_id(fid("B37")) = static_cast<double>(n_sent);
    at_id(fid("B38")) = static_cast<double>(n_para);
    at_id(fid("B39")) = ratio(static_cast<double>(n_sent), n_para);
    at_id(fid("B40")) = ratio(static_cast<double>(n_words), n_para);
    at_id(fid("B41")) = ratio(static_cast<double>(word_chars), n_para);
    at_id(fid("B42")) = ratio(static_cast<double>(n_words), n_sent);
    std::size_t upper_start = 0, lower_start = 0;
    for (const auto& s : tk.sentences) {
        const auto first = detail::decode_utf8_lenient(tk.tokens[s.begin]).front();
        upper_start += detail::is_upper(first);
        lower_start += detail::is_lower(first);
    }
    at_id(fid("B43")) = static_cast<double>(upper_start);
    at_id(fid("B44")) = static_cast<double>(lower_start);
    at_id(fid("B45")) = static_cast<double>(punct.dollars);

    at_id(fid("B46")) = static_cast<double>(ws.n_capitalized_words);
    at_id(fid("B47")) = static_cast<double>(ws.n_all_upper_words);
    at_id(fid("B48")) = static_cast<double>(ws.n_digit_words);
    at_id(fid("B49")) = static_cast<double>(ws.n_letter_only_words);
    at_id(fid("B50")) = static_cast<double>(ws.n_single_letter_words);
    at_id(fid("B51")) = static_cast<double>(ws.n_single_digit_words);
    at_id(fid("B52")) = static_cast<double>(ws.n_single_char_words);
    at_id(fid("B53")) = ws.max_upper_to_lower_ratio;
    at_id(fid("B54")) = ws.min_char_diversity;
    at_id(fid("B55")) = ws.max_upper_to_all_ratio;
    at_id(fid("B56")) = ws.max_digit_to_all_ratio;
    at_id(fid("B57")) = ws.max_nonalnum_to_all_ratio;
    at_id(fid("B58")) = static_cast<double>(ws.max_repeated_char_run);
    at_id(fid("B59")) = static_cast<double>(ws.max_word_length);
    return f;
}

inline void extract_body_features(const EmailParts& parts, const AnalysisText& at, const Lexicons& lexicons,
                                  const Selection& selection, FeatureValues& out)
{
    if (!selection.any_in(FeatureGroup::Body))
        return;
    const auto f = body_features(parts, at, lexicons);
    constexpr std::size_t first = fid("B01");
    for (std::size_t i = 0; i < f.size(); ++i)
        if (selection.contains(first + i))
            out[first + i] = f[i];
}

} // namespace mailfeat
