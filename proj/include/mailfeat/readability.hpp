#pragma once

// Readability features R01..R23: ten indices evaluated with and without
// stopwords, plus SMOG-I, ARI and Coleman-Liau on the full word stream.
// Any formula whose word or sentence count is zero yields 0.

#include <array>
#include <cmath>
#include <cstddef>

#include "catalog.hpp"
#include "detail/utf8.hpp"
#include "lexicon.hpp"
#include "textkit.hpp"

namespace mailfeat {

struct ReadabilityCounts {
    std::size_t n_words = 0;
    std::size_t n_sentences = 0;
    std::size_t n_chars_in_words = 0;
    std::size_t n_letters_in_words = 0;
    std::size_t n_syllables = 0;
    std::size_t n_simple_words = 0;  // at most two syllables
    std::size_t n_complex_words = 0; // three or more syllables
    std::size_t n_monosyllable_words = 0;
    bool stopwords_removed = false;

    bool operator==(const ReadabilityCounts&) const = default;
};

/// Counts over the lowercased word tokens, optionally without stopwords.
/// Sentence count is always the original segmentation's.
inline ReadabilityCounts readability_counts(const TokenizedText& tk, const Lexicon* stopwords)
{
    ReadabilityCounts c;
    c.stopwords_removed = stopwords != nullptr;
    c.n_sentences = tk.sentences.size();
    for (const auto& token : tk.tokens) {
        const auto lower = detail::to_lower_utf8(token);
        if (stopwords && stopwords->contains(lower))
            continue;
        const auto cps = detail::decode_utf8_lenient(lower);
        ++c.n_words;
        c.n_chars_in_words += cps.size();
        for (char32_t cp : cps)
            c.n_letters_in_words += detail::is_letter(cp);
        const auto syl = count_syllables(lower);
        c.n_syllables += syl;
        if (syl <= 2)
            ++c.n_simple_words;
        else
            ++c.n_complex_words;
        if (syl == 1)
            ++c.n_monosyllable_words;
    }
    return c;
}

inline ReadabilityCounts readability_counts(const TokenizedText& tk, bool drop_stopwords)
{
    return readability_counts(tk, drop_stopwords ? &default_stopwords() : nullptr);
}

/// The ten indices computed for one count set.
struct ReadabilityIndices {
    double simple_words = 0;
    double complex_words = 0;
    double syllables_per_word = 0;
    double fog = 0;
    double flesch_reading_ease = 0;
    double smog = 0;
    double forcast = 0;
    double flesch_kincaid = 0;
    double simple_word_fog = 0;
    double inverse_fog = 0;
};

inline ReadabilityIndices readability_indices(const ReadabilityCounts& c)
{
    ReadabilityIndices r;
    if (c.n_words == 0 || c.n_sentences == 0)
        return r;
    const double W = static_cast<double>(c.n_words);
    const double S = static_cast<double>(c.n_sentences);
    const double Sy = static_cast<double>(c.n_syllables);
    const double C = static_cast<double>(c.n_complex_words);
    const double Sim = static_cast<double>(c.n_simple_words);
    const double M = static_cast<double>(c.n_monosyllable_words);

    r.simple_words = Sim;
    r.complex_words = C;
    r.syllables_per_word = Sy / W;
    r.fog = 0.4 * (W / S + 100.0 * C / W);
    r.flesch_reading_ease = 206.835 - 1.015 * (W / S) - 84.6 * (Sy / W);
    r.smog = 1.0430 * std::sqrt(C * 30.0 / S) + 3.1291;
    // FORCAST scaled from its 150-word sample to the whole text
    r.forcast = 20.0 - (M * 150.0 / W) / 10.0;
    r.flesch_kincaid = 0.39 * (W / S) + 11.8 * (Sy / W) - 15.59;
    r.simple_word_fog = 0.4 * (W / S + 100.0 * Sim / W);
    r.inverse_fog = r.fog > 0 ? 1.0 / r.fog : 0.0;
    return r;
}

inline constexpr std::size_t readability_feature_count = 23;

/// R01..R23 from the with-stopword and without-stopword count sets.
inline std::array<double, readability_feature_count> compute_readability_suite(const ReadabilityCounts& with_sw,
                                                                               const ReadabilityCounts& without_sw)
{
    const auto a = readability_indices(with_sw);
    const auto b = readability_indices(without_sw);
    std::array<double, readability_feature_count> r{
        a.simple_words,        b.simple_words,
        a.complex_words,       b.complex_words,
        a.syllables_per_word,  b.syllables_per_word,
        a.fog,                 b.fog,
        a.flesch_reading_ease, b.flesch_reading_ease,
        a.smog,                b.smog,
        a.forcast,             b.forcast,
        a.flesch_kincaid,      b.flesch_kincaid,
        a.simple_word_fog,     b.simple_word_fog,
        a.inverse_fog,         b.inverse_fog,
        0, 0, 0};
    if (with_sw.n_words > 0 && with_sw.n_sentences > 0) {
        const double W = static_cast<double>(with_sw.n_words);
        const double S = static_cast<double>(with_sw.n_sentences);
        const double C = static_cast<double>(with_sw.n_complex_words);
        const double Ch = static_cast<double>(with_sw.n_chars_in_words);
        const double L = static_cast<double>(with_sw.n_letters_in_words);
        r[20] = 3.0 + std::sqrt(C * 30.0 / S);
        r[21] = 4.71 * (Ch / W) + 0.5 * (W / S) - 21.43;
        r[22] = 0.0588 * (100.0 * L / W) - 0.296 * (100.0 * S / W) - 15.8;
    }
    return r;
}

inline void extract_readability_features(const TokenizedText& tk, const Lexicon& stopwords,
                                         const Selection& selection, FeatureValues& out)
{
    if (!selection.any_in(FeatureGroup::Readability))
        return;
    const auto r = compute_readability_suite(readability_counts(tk, nullptr), readability_counts(tk, &stopwords));
    constexpr std::size_t first = fid("R01");
    for (std::size_t i = 0; i < r.size(); ++i)
        if (selection.contains(first + i))
            out[first + i] = r[i];
}

} // namespace mailfeat
