#pragma once

// Lexical-diversity features L01..L07 from the token frequency spectrum.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <unordered_map>

#include "catalog.hpp"

namespace mailfeat {

struct FrequencySpectrum {
    std::size_t N = 0; // tokens
    std::size_t V = 0; // types
    std::map<std::size_t, std::size_t> spectrum; // frequency i -> number of types seen exactly i times
    std::map<std::string, std::size_t> counts;   // type -> frequency
};

inline FrequencySpectrum frequency_spectrum(std::span<const std::string> lowercase_tokens)
{
    FrequencySpectrum fs;
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& t : lowercase_tokens)
        ++counts[t];
    fs.N = lowercase_tokens.size();
    fs.V = counts.size();
    for (const auto& [word, n] : counts) {
        ++fs.spectrum[n];
        fs.counts.emplace(word, n);
    }
    return fs;
}

inline constexpr std::size_t lexical_feature_count = 7;

/// Vocabulary richness (V), hapax legomena, hapax dislegomena, entropy in
/// bits, Yule's K, Sichel's S and Honore's R. Honore's denominator
/// (1 - V1/V) is clamped to at least 0.01. Everything is 0 for an empty text.
inline std::array<double, lexical_feature_count> compute_lexical_suite(const FrequencySpectrum& fs)
{
    std::array<double, lexical_feature_count> r{};
    if (fs.N == 0 || fs.V == 0)
        return r;
    const double N = static_cast<double>(fs.N);
    const double V = static_cast<double>(fs.V);
    auto v_of = [&](std::size_t i) {
        const auto it = fs.spectrum.find(i);
        return it == fs.spectrum.end() ? 0.0 : static_cast<double>(it->second);
    };
    const double v1 = v_of(1);
    const double v2 = v_of(2);

    double entropy = 0;
    double sum_i2 = 0;
    for (const auto& [i, vi] : fs.spectrum) {
        const double p = static_cast<double>(i) / N;
        entropy -= static_cast<double>(vi) * p * std::log2(p);
        sum_i2 += static_cast<double>(i) * static_cast<double>(i) * static_cast<double>(vi);
    }

    r[0] = V;
    r[1] = v1;
    r[2] = v2;
    r[3] = std::max(entropy, 0.0);
    r[4] = 1e4 * (sum_i2 - N) / (N * N);
    r[5] = v2 / V;
    r[6] = 100.0 * std::log(N) / std::max(1.0 - v1 / V, 0.01);
    return r;
}

inline void extract_lexical_features(std::span<const std::string> lowercase_tokens, const Selection& selection,
                                     FeatureValues& out)
{
    if (!selection.any_in(FeatureGroup::Lexical))
        return;
    const auto r = compute_lexical_suite(frequency_spectrum(lowercase_tokens));
    constexpr std::size_t first = fid("L01");
    for (std::size_t i = 0; i < r.size(); ++i)
        if (selection.contains(first + i))
            out[first + i] = r[i];
}

} // namespace mailfeat
