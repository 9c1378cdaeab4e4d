#pragma once

// Header features H01..H49: date decomposition, sender/recipient/reply-to
// domain flags, MIME structure flags, recipient count and subject word shape.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "default_data.hpp"
#include "detail/ascii.hpp"
#include "eml.hpp"
#include "textkit.hpp"

namespace mailfeat {

struct DateParts {
    int year = 0;
    int month = 0;
    int day = 0;
    int hour = 0;
    int minute = 0;
    int second = 0;
    bool valid = false;

    bool operator==(const DateParts&) const = default;
};

namespace detail {

inline int month_from_name(std::string_view tok)
{
    static constexpr std::string_view months[] = {"jan", "feb", "mar", "apr", "may", "jun",
                                                  "jul", "aug", "sep", "oct", "nov", "dec"};
    if (tok.size() < 3)
        return 0;
    const std::string lower = lower_ascii(tok);
    for (int m = 0; m < 12; ++m)
        if (std::string_view(lower).substr(0, 3) == months[m])
            return m + 1;
    return 0;
}

inline bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

inline int to_int(std::string_view s)
{
    int v = 0;
    for (char c : s)
        v = v * 10 + (c - '0');
    return v;
}

// "hh:mm" or "hh:mm:ss"
inline bool parse_clock(std::string_view tok, int& h, int& m, int& s)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto colon = tok.find(':', start);
        fields.push_back(tok.substr(start, colon == std::string_view::npos ? tok.npos : colon - start));
        if (colon == std::string_view::npos)
            break;
        start = colon + 1;
    }
    if (fields.size() < 2 || fields.size() > 3)
        return false;
    for (const auto f : fields)
        if (!all_digits(f) || f.size() > 2)
            return false;
    h = to_int(fields[0]);
    m = to_int(fields[1]);
    s = fields.size() == 3 ? to_int(fields[2]) : 0;
    return true;
}

} // namespace detail

/// Parses an RFC 5322 date, tolerating a missing weekday, missing seconds,
/// two-digit years, obsolete zone names and trailing comments. The clock
/// fields are the sender's local values; the zone is not applied.
inline DateParts parse_date_header(std::string_view value)
{
    using namespace detail;
    std::string cleaned;
    int depth = 0;
    for (char c : value) {
        if (c == '(')
            ++depth;
        else if (c == ')' && depth > 0)
            --depth;
        else if (depth == 0)
            cleaned.push_back(c == ',' ? ' ' : c);
    }

    std::optional<int> year, month, day, hour, minute;
    int second = 0;
    std::size_t pos = 0;
    const std::string_view text = cleaned;
    while (pos < text.size()) {
        while (pos < text.size() && is_ascii_space(text[pos]))
            ++pos;
        std::size_t end = pos;
        while (end < text.size() && !is_ascii_space(text[end]))
            ++end;
        const auto tok = text.substr(pos, end - pos);
        pos = end;
        if (tok.empty())
            continue;

        if (tok.find(':') != std::string_view::npos) {
            int h = 0, m = 0, s = 0;
            if (!hour && parse_clock(tok, h, m, s)) {
                hour = h;
                minute = m;
                second = s;
            }
            continue;
        }
        if ((tok.front() == '+' || tok.front() == '-') && all_digits(tok.substr(1)))
            continue; // numeric zone
        if (all_digits(tok)) {
            const int v = to_int(tok);
            if (!day && tok.size() <= 2 && v >= 1 && v <= 31)
                day = v;
            else if (!year && tok.size() <= 4)
                year = tok.size() == 4 ? v : (tok.size() == 3 ? v + 1900 : (v < 50 ? v + 2000 : v + 1900));
            continue;
        }
        if (!month)
            if (const int m = month_from_name(tok))
                month = m;
        // weekday names and zone names fall through
    }

    DateParts d;
    if (!(year && month && day && hour && minute))
        return d;
    if (*hour > 23 || *minute > 59 || second > 60 || *year < 1000)
        return d;
    d = DateParts{*year, *month, *day, *hour, *minute, second, true};
    return d;
}

class DomainTableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// keyword -> domain patterns. Patterns starting with '.' match a whole
/// dot-separated label of the domain; other patterns match as substrings.
class DomainKeywordTable {
public:
    static constexpr std::array<std::string_view, 9> keywords = {
        "google", "aol", "gov", "hotmail", "mil", "yahoo", "example", "msn", "localhost"};

    static DomainKeywordTable defaults()
    {
        DomainKeywordTable t;
        t.merge(mailfeat::defaults::domains_toml);
        return t;
    }

    /// Overrides entries from `key = ["pattern", ...]` lines; other keys keep their values.
    void merge(std::string_view toml)
    {
        std::size_t pos = 0;
        int line_no = 0;
        while (pos < toml.size()) {
            auto nl = toml.find('\n', pos);
            if (nl == std::string_view::npos)
                nl = toml.size();
            ++line_no;
            auto line = detail::trim(toml.substr(pos, nl - pos));
            pos = nl + 1;
            if (line.empty() || line.front() == '#')
                continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw DomainTableError("line " + std::to_string(line_no) + ": expected key = [..]");
            const std::string key = detail::lower_ascii(detail::trim(line.substr(0, eq)));
            auto rhs = detail::trim(line.substr(eq + 1));
            if (rhs.size() < 2 || rhs.front() != '[' || rhs.back() != ']')
                throw DomainTableError("line " + std::to_string(line_no) + ": value must be a list");
            if (std::find(keywords.begin(), keywords.end(), key) == keywords.end())
                throw DomainTableError("line " + std::to_string(line_no) + ": unknown keyword " + key);
            std::vector<std::string> patterns;
            rhs = rhs.substr(1, rhs.size() - 2);
            std::size_t i = 0;
            while (i < rhs.size()) {
                const auto q = rhs.find('"', i);
                if (q == std::string_view::npos)
                    break;
                const auto close = rhs.find('"', q + 1);
                if (close == std::string_view::npos)
                    throw DomainTableError("line " + std::to_string(line_no) + ": unterminated string");
                const auto pat = detail::lower_ascii(rhs.substr(q + 1, close - q - 1));
                if (!pat.empty())
                    patterns.push_back(pat);
                i = close + 1;
            }
            set(key, std::move(patterns));
        }
    }

    void set(const std::string& keyword, std::vector<std::string> patterns)
    {
        for (auto& [k, v] : entries_) {
            if (k == keyword) {
                v = std::move(patterns);
                return;
            }
        }
        entries_.emplace_back(keyword, std::move(patterns));
    }

    const std::vector<std::string>& patterns(std::string_view keyword) const
    {
        static const std::vector<std::string> none;
        for (const auto& [k, v] : entries_)
            if (k == keyword)
                return v;
        return none;
    }

private:
    std::vector<std::pair<std::string, std::vector<std::string>>> entries_;
};

namespace detail {

inline bool domain_matches(std::string_view domain, std::string_view pattern)
{
    if (pattern.starts_with('.')) {
        const auto label = pattern.substr(1);
        std::size_t start = 0;
        while (start <= domain.size()) {
            const auto dot = domain.find('.', start);
            const auto end = dot == std::string_view::npos ? domain.size() : dot;
            if (domain.substr(start, end - start) == label)
                return true;
            if (dot == std::string_view::npos)
                break;
            start = dot + 1;
        }
        return false;
    }
    return domain.find(pattern) != std::string_view::npos;
}

} // namespace detail

/// 1 iff any address's domain (text after the last '@', lowercased) matches a
/// pattern mapped to `keyword`. Malformed addresses only take part in the
/// "localhost" check, which searches the whole lowercased string.
inline int domain_flag(std::span<const Address> addrs, std::string_view keyword, const DomainKeywordTable& table)
{
    const auto& pats = table.patterns(keyword);
    for (const auto& a : addrs) {
        if (a.is_malformed) {
            if (keyword != "localhost")
                continue;
            const auto whole = detail::lower_ascii(a.addr_spec);
            for (const auto& p : pats)
                if (whole.find(p.starts_with('.') ? p.substr(1) : p) != std::string::npos)
                    return 1;
            continue;
        }
        const auto at = a.addr_spec.rfind('@');
        const auto domain = detail::lower_ascii(std::string_view(a.addr_spec).substr(at + 1));
        for (const auto& p : pats)
            if (detail::domain_matches(domain, p))
                return 1;
    }
    return 0;
}

inline constexpr std::size_t header_feature_count = 49;

/// Computes all 49 header features in column order H01..H49.
inline std::array<double, header_feature_count> header_features(const ParsedEmail& email,
                                                                const DomainKeywordTable& table)
{
    std::array<double, header_feature_count> f{};
    auto at = [&](std::string_view id) -> double& { return f[full_catalog().index_of(id).value()]; };

    const auto date = parse_date_header(header_value(email, "Date").value_or(""));
    at("H01") = date.year;
    at("H02") = date.month;
    at("H03") = date.day;
    at("H04") = date.hour;
    at("H05") = date.minute;
    at("H06") = date.second;

    const auto& from = email.parts.from_addr;
    const auto& to = email.parts.to_addrs;
    const auto reply_to = header_addresses(email, "Reply-To");

    static constexpr std::pair<std::string_view, std::string_view> from_flags[] = {
        {"H07", "google"}, {"H08", "aol"}, {"H09", "gov"}, {"H10", "hotmail"},
        {"H11", "mil"}, {"H12", "yahoo"}, {"H13", "example"}};
    static constexpr std::pair<std::string_view, std::string_view> to_flags[] = {
        {"H14", "hotmail"}, {"H15", "yahoo"}, {"H16", "example"}, {"H17", "msn"}, {"H18", "localhost"},
        {"H19", "google"}, {"H20", "aol"}, {"H21", "gov"}, {"H22", "mil"}};
    static constexpr std::pair<std::string_view, std::string_view> reply_flags[] = {
        {"H24", "google"}, {"H25", "hotmail"}, {"H26", "mil"},
        {"H27", "yahoo"}, {"H28", "aol"}, {"H29", "gov"}};
    for (const auto& [id, kw] : from_flags)
        at(id) = domain_flag(from, kw, table);
    for (const auto& [id, kw] : to_flags)
        at(id) = domain_flag(to, kw, table);
    at("H23") = static_cast<double>(to.size());
    for (const auto& [id, kw] : reply_flags)
        at(id) = domain_flag(reply_to, kw, table);

    at("H30") = header_value(email, "X-Mailman-Version").has_value() ? 1 : 0;
    bool plain = false, mixed = false, alternative = false;
    visit_parts(email.mime_tree, [&](const MimePart& p) {
        plain = plain || p.content_type == "text/plain";
        mixed = mixed || p.content_type == "multipart/mixed";
        alternative = alternative || p.content_type == "multipart/alternative";
    });
    at("H31") = plain;
    at("H32") = mixed;
    at("H33") = alternative;

    const auto& subject = email.parts.subject;
    const auto words = tokenize(subject).tokens;
    const auto ws = word_shape_stats(words);
    at("H34") = static_cast<double>(detail::count_code_points(subject));
    at("H35") = static_cast<double>(ws.n_capitalized_words);
    at("H36") = static_cast<double>(ws.n_all_upper_words);
    at("H37") = static_cast<double>(ws.n_digit_words);
    at("H38") = static_cast<double>(ws.n_letter_only_words);
    at("H39") = static_cast<double>(ws.n_alnum_mixed_words);
    at("H40") = static_cast<double>(ws.n_single_letter_words);
    at("H41") = static_cast<double>(ws.n_single_digit_words);
    at("H42") = static_cast<double>(ws.n_single_char_words);
    at("H43") = ws.max_upper_to_lower_ratio;
    at("H44") = ws.min_char_diversity;
    at("H45") = ws.max_upper_to_all_ratio;
    at("H46") = ws.max_digit_to_all_ratio;
    at("H47") = ws.max_nonalnum_to_all_ratio;
    at("H48") = static_cast<double>(ws.max_repeated_char_run);
    at("H49") = static_cast<double>(ws.max_word_length);
    return f;
}

/// Writes the selected header features into `out` (catalog-indexed).
inline void extract_header_features(const ParsedEmail& email, const Selection& selection,
                                    const DomainKeywordTable& table, FeatureValues& out)
{
    if (!selection.any_in(FeatureGroup::HeaderMetadata) && !selection.any_in(FeatureGroup::HeaderSubject))
        return;
    const auto f = header_features(email, table);
    constexpr std::size_t first = fid("H01");
    for (std::size_t i = 0; i < f.size(); ++i)
        if (selection.contains(first + i))
            out[first + i] = f[i];
}

} // namespace mailfeat
