#pragma once

// Registry of every extractable feature with stable IDs and canonical column
// order: H01..H49, B01..B59, R01..R23, L01..L07, A01..A02.

#include <array>
#include <bitset>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "detail/ascii.hpp"

namespace mailfeat {

enum class FeatureGroup { HeaderMetadata, HeaderSubject, Body, Readability, Lexical, Attachment };

enum class ValueKind { boolean01, count, real };

/// Which feature listing a definition belongs to, and its row there.
enum class Listing { header, body, readability, lexical, attachment };

struct FeatureDef {
    std::string_view id;
    std::string_view name;
    FeatureGroup group;
    ValueKind value_kind;
    Listing listing;
    int row;                  // 1-based row (or bullet) within the listing
    std::string_view variant; // "with stopwords" / "without stopwords" / ""
};

inline constexpr std::size_t feature_count = 140;

using FeatureValues = std::array<double, feature_count>;

namespace detail {

using G = FeatureGroup;
using K = ValueKind;
using Li = Listing;

inline constexpr std::string_view with_sw = "with stopwords";
inline constexpr std::string_view without_sw = "without stopwords";

inline constexpr std::array<FeatureDef, feature_count> feature_table = {{
    {"H01", "Year", G::HeaderMetadata, K::count, Li::header, 1, ""},
    {"H02", "Month", G::HeaderMetadata, K::count, Li::header, 2, ""},
    {"H03", "Day", G::HeaderMetadata, K::count, Li::header, 3, ""},
    {"H04", "Hour", G::HeaderMetadata, K::count, Li::header, 4, ""},
    {"H05", "Minute", G::HeaderMetadata, K::count, Li::header, 5, ""},
    {"H06", "Second", G::HeaderMetadata, K::count, Li::header, 6, ""},
    {"H07", "From Google?", G::HeaderMetadata, K::boolean01, Li::header, 7, ""},
    {"H08", "From AOL?", G::HeaderMetadata, K::boolean01, Li::header, 8, ""},
    {"H09", "From Gov?", G::HeaderMetadata, K::boolean01, Li::header, 9, ""},
    {"H10", "From HTML?", G::HeaderMetadata, K::boolean01, Li::header, 10, ""},
    {"H11", "From MIL?", G::HeaderMetadata, K::boolean01, Li::header, 11, ""},
    {"H12", "From Yahoo?", G::HeaderMetadata, K::boolean01, Li::header, 12, ""},
    {"H13", "From Example?", G::HeaderMetadata, K::boolean01, Li::header, 13, ""},
    {"H14", "To Hotmail?", G::HeaderMetadata, K::boolean01, Li::header, 14, ""},
    {"H15", "To Yahoo?", G::HeaderMetadata, K::boolean01, Li::header, 15, ""},
    {"H16", "To Example?", G::HeaderMetadata, K::boolean01, Li::header, 16, ""},
    {"H17", "To MSN?", G::HeaderMetadata, K::boolean01, Li::header, 17, ""},
    {"H18", "To Localhost?", G::HeaderMetadata, K::boolean01, Li::header, 18, ""},
    {"H19", "To Google?", G::HeaderMetadata, K::boolean01, Li::header, 19, ""},
    {"H20", "To AOL?", G::HeaderMetadata, K::boolean01, Li::header, 20, ""},
    {"H21", "To Gov?", G::HeaderMetadata, K::boolean01, Li::header, 21, ""},
    {"H22", "To MIL?", G::HeaderMetadata, K::boolean01, Li::header, 22, ""},
    {"H23", "Count of \"To\" Email", G::HeaderMetadata, K::count, Li::header, 23, ""},
    {"H24", "Replay to Google?", G::HeaderMetadata, K::boolean01, Li::header, 24, ""},
    {"H25", "Replay to Hotmail?", G::HeaderMetadata, K::boolean01, Li::header, 25, ""},
    {"H26", "Replay to MIL?", G::HeaderMetadata, K::boolean01, Li::header, 26, ""},
    {"H27", "Replay to Yahoo?", G::HeaderMetadata, K::boolean01, Li::header, 27, ""},
    {"H28", "Replay to AOL?", G::HeaderMetadata, K::boolean01, Li::header, 28, ""},
    {"H29", "Replay to Gov?", G::HeaderMetadata, K::boolean01, Li::header, 29, ""},
    {"H30", "X-Mailman-Version", G::HeaderMetadata, K::boolean01, Li::header, 30, ""},
    {"H31", "Exist Text/Plain?", G::HeaderMetadata, K::boolean01, Li::header, 31, ""},
    {"H32", "Exist Multipart/Mixed?", G::HeaderMetadata, K::boolean01, Li::header, 32, ""},
    {"H33", "Exist Multipart/Alternative?", G::HeaderMetadata, K::boolean01, Li::header, 33, ""},
    {"H34", "No. of characters.", G::HeaderSubject, K::count, Li::header, 34, ""},
    {"H35", "No. of capitalised words.", G::HeaderSubject, K::count, Li::header, 35, ""},
    {"H36", "No. of words in all uppercase.", G::HeaderSubject, K::count, Li::header, 36, ""},
    {"H37", "No. of words that are digits.", G::HeaderSubject, K::count, Li::header, 37, ""},
    {"H38", "No. of words containing only letters.", G::HeaderSubject, K::count, Li::header, 38, ""},
    {"H39", "No. of words containing letters and numbers.", G::HeaderSubject, K::count, Li::header, 39, ""},
    {"H40", "No. of words that are single letters.", G::HeaderSubject, K::count, Li::header, 40, ""},
    {"H41", "No. of words that are single digits.", G::HeaderSubject, K::count, Li::header, 41, ""},
    {"H42", "No. of words that are single characters.", G::HeaderSubject, K::count, Li::header, 42, ""},
    {"H43", "Max ratio of uppercase to lowercase letters of each word", G::HeaderSubject, K::real, Li::header, 43, ""},
    {"H44", "Min character diversity of each word.", G::HeaderSubject, K::real, Li::header, 44, ""},
    {"H45", "Max ratio of uppercase letters to all characters of each word.", G::HeaderSubject, K::real, Li::header, 45, ""},
    {"H46", "Max ratio of digit characters to all characters of each word.", G::HeaderSubject, K::real, Li::header, 46, ""},
    {"H47", "Max ratio of non-alphanumerics to all characters of each word", G::HeaderSubject, K::real, Li::header, 47, ""},
    {"H48", "Max of the longest repeated character.", G::HeaderSubject, K::count, Li::header, 48, ""},
    {"H49", "Max of the character lengths of words.", G::HeaderSubject, K::count, Li::header, 49, ""},

    {"B01", "Count of Spam Words", G::Body, K::count, Li::body, 1, ""},
    {"B02", "Count of Function Words", G::Body, K::count, Li::body, 2, ""},
    {"B03", "Count of HTML Anchor", G::Body, K::count, Li::body, 3, ""},
    {"B04", "Count of Unique HTML Anchor", G::Body, K::count, Li::body, 4, ""},
    {"B05", "Count of HTML Not Anchor", G::Body, K::count, Li::body, 5, ""},
    {"B06", "Count of HTML Image", G::Body, K::count, Li::body, 6, ""},
    {"B07", "Count of HTML All Tags", G::Body, K::count, Li::body, 7, ""},
    {"B08", "Count of Alpha-numeric Words", G::Body, K::count, Li::body, 8, ""},
    {"B09", "TF-ISF", G::Body, K::real, Li::body, 9, ""},
    {"B10", "TF•ISF without stopwords", G::Body, K::real, Li::body, 10, ""},
    {"B11", "Count of duplicate words.", G::Body, K::count, Li::body, 11, ""},
    {"B12", "Minimum word length", G::Body, K::count, Li::body, 12, ""},
    {"B13", "Count of lowercase letters", G::Body, K::count, Li::body, 13, ""},
    {"B14", "Longest sequence of adjacent capital letters", G::Body, K::count, Li::body, 14, ""},
    {"B15", "Count of lines", G::Body, K::count, Li::body, 15, ""},
    {"B16", "Total No. of digit character", G::Body, K::count, Li::body, 16, ""},
    {"B17", "Total No. of white space", G::Body, K::count, Li::body, 17, ""},
    {"B18", "Total No. of upper case character", G::Body, K::count, Li::body, 18, ""},
    {"B19", "Total No. of characters", G::Body, K::count, Li::body, 19, ""},
    {"B20", "Total No. of tabs", G::Body, K::count, Li::body, 20, ""},
    {"B21", "Total No. of special characters", G::Body, K::count, Li::body, 21, ""},
    {"B22", "Total number of alpha characters", G::Body, K::count, Li::body, 22, ""},
    {"B23", "Total No. of words", G::Body, K::count, Li::body, 23, ""},
    {"B24", "Average word length", G::Body, K::real, Li::body, 24, ""},
    {"B25", "Words longer than 6 characters", G::Body, K::count, Li::body, 25, ""},
    {"B26", "Total No. of words (1 - 3 Characters)", G::Body, K::count, Li::body, 26, ""},
    {"B27", "No. of single quotes", G::Body, K::count, Li::body, 27, ""},
    {"B28", "No. of commas", G::Body, K::count, Li::body, 28, ""},
    {"B29", "No. of periods", G::Body, K::count, Li::body, 29, ""},
    {"B30", "No. of semi-colons", G::Body, K::count, Li::body, 30, ""},
    {"B31", "Number of question marks", G::Body, K::count, Li::body, 31, ""},
    {"B32", "No. of multiple question marks", G::Body, K::count, Li::body, 32, ""},
    {"B33", "No. of exclamation marks", G::Body, K::count, Li::body, 33, ""},
    {"B34", "No. of multiple exclamation marks", G::Body, K::count, Li::body, 34, ""},
    {"B35", "No. of colons", G::Body, K::count, Li::body, 35, ""},
    {"B36", "No. of ellipsis", G::Body, K::count, Li::body, 36, ""},
    {"B37", "Total No. of sentences", G::Body, K::count, Li::body, 37, ""},
    {"B38", "Total No. of paragraphs", G::Body, K::count, Li::body, 38, ""},
    {"B39", "Average No. of sentences per paragraph", G::Body, K::real, Li::body, 39, ""},
    {"B40", "Average number of words pre paragraph", G::Body, K::real, Li::body, 40, ""},
    {"B41", "Average No. of character per paragraph", G::Body, K::real, Li::body, 41, ""},
    {"B42", "Average No. of word per sentences", G::Body, K::real, Li::body, 42, ""},
    {"B43", "No. of sentence begin with upper case", G::Body, K::count, Li::body, 43, ""},
    {"B44", "No. of sentence begin with lower case", G::Body, K::count, Li::body, 44, ""},
    {"B45", "Character frequency \"$\"", G::Body, K::count, Li::body, 45, ""},
    {"B46", "No. of capitalized words.", G::Body, K::count, Li::body, 46, ""},
    {"B47", "No. of words in all uppercase.", G::Body, K::count, Li::body, 47, ""},
    {"B48", "Number of words that are digits.", G::Body, K::count, Li::body, 48, ""},
    {"B49", "No. of words containing only letters.", G::Body, K::count, Li::body, 49, ""},
    {"B50", "No. of words that are single letters.", G::Body, K::count, Li::body, 50, ""},
    {"B51", "No. of words that are single digits.", G::Body, K::count, Li::body, 51, ""},
    {"B52", "Number of words that are single characters.", G::Body, K::count, Li::body, 52, ""},
    {"B53", "Max ratio of uppercase letters to lowercase letters of each word.", G::Body, K::real, Li::body, 53, ""},
    {"B54", "Min of character diversity of each word.", G::Body, K::real, Li::body, 54, ""},
    {"B55", "Max ratio of uppercase letters to all characters of each word.", G::Body, K::real, Li::body, 55, ""},
    {"B56", "Max ratio of digit characters to all characters of each word.", G::Body, K::real, Li::body, 56, ""},
    {"B57", "Max ratio of non-alphanumerics to all characters of each word.", G::Body, K::real, Li::body, 57, ""},
    {"B58", "Max of the longest repeating character.", G::Body, K::count, Li::body, 58, ""},
    {"B59", "Max of the character lengths of words.", G::Body, K::count, Li::body, 59, ""},

    {"R01", "Number of simple words (with stopwords)", G::Readability, K::count, Li::readability, 1, with_sw},
    {"R02", "Number of simple words (without stopwords)", G::Readability, K::count, Li::readability, 1, without_sw},
    {"R03", "Number of complex words (with stopwords)", G::Readability, K::count, Li::readability, 2, with_sw},
    {"R04", "Number of complex words (without stopwords)", G::Readability, K::count, Li::readability, 2, without_sw},
    {"R05", "Word length (with stopwords)", G::Readability, K::real, Li::readability, 3, with_sw},
    {"R06", "Word length (without stopwords)", G::Readability, K::real, Li::readability, 3, without_sw},
    {"R07", "Fog Index (FI) (with stopwords)", G::Readability, K::real, Li::readability, 4, with_sw},
    {"R08", "Fog Index (FI) (without stopwords)", G::Readability, K::real, Li::readability, 4, without_sw},
    {"R09", "Flesch Reading Ease Score (FRES) (with stopwords)", G::Readability, K::real, Li::readability, 5, with_sw},
    {"R10", "Flesch Reading Ease Score (FRES) (without stopwords)", G::Readability, K::real, Li::readability, 5, without_sw},
    {"R11", "SMOG index (with stopwords)", G::Readability, K::real, Li::readability, 6, with_sw},
    {"R12", "SMOG index (without stopwords)", G::Readability, K::real, Li::readability, 6, without_sw},
    {"R13", "FORCAST index (with stopwords)", G::Readability, K::real, Li::readability, 7, with_sw},
    {"R14", "FORCAST index (without stopwords)", G::Readability, K::real, Li::readability, 7, without_sw},
    {"R15", "Flesch-Kincaid Readability Index (FKRI) (with stopwords)", G::Readability, K::real, Li::readability, 8, with_sw},
    {"R16", "Flesch-Kincaid Readability Index (FKRI) (without stopwords)", G::Readability, K::real, Li::readability, 8, without_sw},
    {"R17", "Simple Word FI (with stopwords)", G::Readability, K::real, Li::readability, 9, with_sw},
    {"R18", "Simple Word FI (without stopwords)", G::Readability, K::real, Li::readability, 9, without_sw},
    {"R19", "Inverse FI (with stopwords)", G::Readability, K::real, Li::readability, 10, with_sw},
    {"R20", "Inverse FI (without stopwords)", G::Readability, K::real, Li::readability, 10, without_sw},
    {"R21", "SMOG-I", G::Readability, K::real, Li::readability, 11, ""},
    {"R22", "Automated Readability Index (ARI)", G::Readability, K::real, Li::readability, 12, ""},
    {"R23", "Coleman-Liau Index (CLI)", G::Readability, K::real, Li::readability, 13, ""},

    {"L01", "Vocabulary Richness", G::Lexical, K::count, Li::lexical, 1, ""},
    {"L02", "Hapax legomena", G::Lexical, K::count, Li::lexical, 2, ""},
    {"L03", "Hapax dislegomena", G::Lexical, K::count, Li::lexical, 3, ""},
    {"L04", "Entropy", G::Lexical, K::real, Li::lexical, 4, ""},
    {"L05", "YuleK", G::Lexical, K::real, Li::lexical, 5, ""},
    {"L06", "SichelS", G::Lexical, K::real, Li::lexical, 6, ""},
    {"L07", "Honore", G::Lexical, K::real, Li::lexical, 7, ""},

    {"A01", "Number of all attachment files", G::Attachment, K::count, Li::attachment, 1, ""},
    {"A02", "Number of unique content types of attachment files", G::Attachment, K::count, Li::attachment, 2, ""},
}};

} // namespace detail

/// Column index of a feature ID, usable in constant expressions: fid("B03") == 51.
consteval std::size_t fid(std::string_view id)
{
    for (std::size_t i = 0; i < detail::feature_table.size(); ++i)
        if (detail::feature_table[i].id == id)
            return i;
    throw "unknown feature id";
}

inline constexpr std::string_view group_name(FeatureGroup g)
{
    switch (g) {
    case FeatureGroup::HeaderMetadata: return "HeaderMetadata";
    case FeatureGroup::HeaderSubject: return "HeaderSubject";
    case FeatureGroup::Body: return "Body";
    case FeatureGroup::Readability: return "Readability";
    case FeatureGroup::Lexical: return "Lexical";
    case FeatureGroup::Attachment: return "Attachment";
    }
    return "";
}

inline constexpr std::string_view value_kind_name(ValueKind k)
{
    switch (k) {
    case ValueKind::boolean01: return "boolean01";
    case ValueKind::count: return "count";
    case ValueKind::real: return "real";
    }
    return "";
}

inline constexpr std::string_view listing_name(Listing l)
{
    switch (l) {
    case Listing::header: return "header";
    case Listing::body: return "body";
    case Listing::readability: return "readability";
    case Listing::lexical: return "lexical";
    case Listing::attachment: return "attachment";
    }
    return "";
}

class FeatureCatalog {
public:
    std::span<const FeatureDef> defs() const { return detail::feature_table; }
    std::size_t size() const { return detail::feature_table.size(); }

    std::optional<std::size_t> index_of(std::string_view id) const
    {
        for (std::size_t i = 0; i < size(); ++i)
            if (detail::iequals(detail::feature_table[i].id, id))
                return i;
        return std::nullopt;
    }

    std::size_t count(FeatureGroup g) const
    {
        std::size_t n = 0;
        for (const auto& d : defs())
            n += d.group == g;
        return n;
    }
};

inline const FeatureCatalog& full_catalog()
{
    static const FeatureCatalog catalog;
    return catalog;
}

class UnknownSelector : public std::invalid_argument {
public:
    explicit UnknownSelector(const std::string& name)
        : std::invalid_argument("unknown feature selector: " + name), name_(name)
    {
    }
    const std::string& selector() const { return name_; }

private:
    std::string name_;
};

/// A resolved feature selection, always in canonical catalog order.
class Selection {
public:
    Selection() = default;

    static Selection all()
    {
        Selection s;
        s.mask_.set();
        return s;
    }

    void add(std::size_t index) { mask_.set(index); }
    bool contains(std::size_t index) const { return mask_.test(index); }
    bool empty() const { return mask_.none(); }
    std::size_t size() const { return mask_.count(); }

    bool any_in(FeatureGroup g) const
    {
        const auto defs = full_catalog().defs();
        for (std::size_t i = 0; i < defs.size(); ++i)
            if (mask_.test(i) && defs[i].group == g)
                return true;
        return false;
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < feature_count; ++i)
            if (mask_.test(i))
                out.push_back(i);
        return out;
    }

    std::vector<const FeatureDef*> defs() const
    {
        std::vector<const FeatureDef*> out;
        for (const auto i : indices())
            out.push_back(&full_catalog().defs()[i]);
        return out;
    }

    bool operator==(const Selection&) const = default;

private:
    std::bitset<feature_count> mask_;
};

namespace detail {

// Named groups, plus "Header" and "Payload" for the two composite levels.
inline bool add_group(Selection& sel, std::string_view name)
{
    std::vector<FeatureGroup> groups;
    if (iequals(name, "Header"))
        groups = {FeatureGroup::HeaderMetadata, FeatureGroup::HeaderSubject};
    else if (iequals(name, "Payload"))
        groups = {FeatureGroup::Body, FeatureGroup::Readability, FeatureGroup::Lexical};
    else
        for (const auto g : {FeatureGroup::HeaderMetadata, FeatureGroup::HeaderSubject, FeatureGroup::Body,
                             FeatureGroup::Readability, FeatureGroup::Lexical, FeatureGroup::Attachment})
            if (iequals(name, group_name(g)))
                groups.push_back(g);
    if (groups.empty())
        return false;
    const auto defs = full_catalog().defs();
    for (std::size_t i = 0; i < defs.size(); ++i)
        for (const auto g : groups)
            if (defs[i].group == g)
                sel.add(i);
    return true;
}

} // namespace detail

/// Resolves group names and feature IDs (case-insensitive). An empty spec
/// selects everything.
inline Selection resolve_selection(std::span<const std::string> spec)
{
    Selection sel;
    bool any = false;
    for (const auto& raw : spec) {
        const auto name = detail::trim(raw);
        if (name.empty())
            continue;
        any = true;
        if (detail::add_group(sel, name))
            continue;
        if (const auto idx = full_catalog().index_of(name)) {
            sel.add(*idx);
            continue;
        }
        throw UnknownSelector(std::string(name));
    }
    return any ? sel : Selection::all();
}

/// Splits a comma-separated CLI value into selectors.
inline std::vector<std::string> split_selectors(std::string_view csv)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const auto comma = csv.find(',', start);
        const auto end = comma == std::string_view::npos ? csv.size() : comma;
        const auto piece = detail::trim(csv.substr(start, end - start));
        if (!piece.empty())
            out.emplace_back(piece);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace mailfeat
