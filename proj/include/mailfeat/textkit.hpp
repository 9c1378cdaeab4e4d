#pragma once

// Deterministic text primitives shared by every payload extractor:
// tokenization with sentence/paragraph segmentation, syllable counting,
// per-word shape statistics, and a tolerant HTML tag scanner.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "detail/ascii.hpp"
#include "detail/utf8.hpp"

namespace mailfeat {

/// Half-open index range [begin, end).
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool operator==(const Span&) const = default;
};

struct CharCounts {
    std::size_t total = 0;
    std::size_t alpha = 0;
    std::size_t digit = 0;
    std::size_t upper = 0;
    std::size_t lower = 0;
    std::size_t whitespace = 0; // includes tabs and newlines
    std::size_t tabs = 0;
    std::size_t special = 0; // everything that is not alpha, digit or whitespace

    bool operator==(const CharCounts&) const = default;
};

struct TokenizedText {
    std::vector<std::string> tokens;  // case preserved
    std::vector<Span> sentences;      // token index ranges
    std::vector<Span> paragraphs;     // sentence index ranges
    CharCounts chars;
};

namespace detail {

constexpr bool is_word_joiner(char32_t cp) { return cp == '\'' || cp == '-' || cp == 0x2019; }

constexpr bool is_terminator(char32_t cp) { return cp == '.' || cp == '?' || cp == '!'; }

constexpr bool is_closer(char32_t cp)
{
    return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == '}' || cp == 0x2019 ||
           cp == 0x201D || cp == 0xBB;
}

inline bool is_horizontal_space(char32_t cp) { return is_space(cp) && cp != '\n'; }

} // namespace detail

/// Splits text into word tokens, sentences and paragraphs.
///
/// Tokens are maximal alphanumeric runs with internal apostrophes or hyphens.
/// A run of '.', '?' or '!' followed by whitespace (optionally after closing
/// quotes/brackets) or end of text ends a sentence, except a lone '.' right
/// after a single-letter token ("J. Smith"). Blank lines end both the sentence
/// and the paragraph. Sentences and paragraphs without tokens are dropped.
inline TokenizedText tokenize(std::string_view text)
{
    using namespace detail;
    TokenizedText out;
    const std::u32string cps = decode_utf8_lenient(text);
    const std::size_t n = cps.size();

    for (char32_t cp : cps) {
        switch (classify(cp)) {
        case CharClass::upper:
            ++out.chars.upper;
            ++out.chars.alpha;
            break;
        case CharClass::lower:
            ++out.chars.lower;
            ++out.chars.alpha;
            break;
        case CharClass::caseless_letter:
            ++out.chars.alpha;
            break;
        case CharClass::digit:
            ++out.chars.digit;
            break;
        case CharClass::whitespace:
            ++out.chars.whitespace;
            if (cp == '\t')
                ++out.chars.tabs;
            break;
        case CharClass::other:
            ++out.chars.special;
            break;
        }
    }
    out.chars.total = n;

    std::size_t sentence_start = 0;
    std::size_t paragraph_start = 0;
    auto close_sentence = [&] {
        if (out.tokens.size() > sentence_start)
            out.sentences.push_back({sentence_start, out.tokens.size()});
        sentence_start = out.tokens.size();
    };
    auto close_paragraph = [&] {
        close_sentence();
        if (out.sentences.size() > paragraph_start)
            out.paragraphs.push_back({paragraph_start, out.sentences.size()});
        paragraph_start = out.sentences.size();
    };

    std::size_t i = 0;
    while (i < n) {
        const char32_t cp = cps[i];
        if (is_alnum(cp)) {
            const std::size_t start = i;
            while (i < n) {
                if (is_alnum(cps[i])) {
                    ++i;
                } else if (is_word_joiner(cps[i]) && i + 1 < n && is_alnum(cps[i + 1])) {
                    i += 2;
                } else {
                    break;
                }
            }
            out.tokens.push_back(encode_utf8(std::u32string_view(cps).substr(start, i - start)));
            continue;
        }
        if (is_terminator(cp)) {
            const std::size_t start = i;
            while (i < n && is_terminator(cps[i]))
                ++i;
            std::size_t j = i;
            while (j < n && is_closer(cps[j]))
                ++j;
            const bool at_break = j == n || is_space(cps[j]);
            const bool single_period = i - start == 1 && cp == '.';
            const bool after_initial = single_period && start >= 1 && is_letter(cps[start - 1]) &&
                                       (start == 1 || !is_alnum(cps[start - 2])) &&
                                       !(start >= 2 && is_word_joiner(cps[start - 2]));
            if (at_break && !after_initial)
                close_sentence();
            continue;
        }
        if (cp == '\n') {
            std::size_t j = i + 1;
            while (j < n && is_horizontal_space(cps[j]))
                ++j;
            if (j < n && cps[j] == '\n') {
                close_paragraph();
                i = j;
                continue;
            }
        }
        ++i;
    }
    close_paragraph();
    return out;
}

/// Heuristic English syllable count: maximal vowel groups (a, e, i, o, u, y),
/// minus a terminal silent 'e' unless it follows 'l' ("table"), floor 1.
/// Words without letters count as one syllable.
inline std::size_t count_syllables(std::string_view word)
{
    const auto cps = detail::decode_utf8_lenient(word);
    std::string letters;
    for (char32_t cp : cps) {
        const char32_t lc = detail::to_lower(cp);
        if (lc < 0x80 && lc >= 'a' && lc <= 'z')
            letters.push_back(static_cast<char>(lc));
        else if (detail::is_letter(cp))
            letters.push_back('#'); // non-ASCII letter, consonant-like
        else
            letters.push_back(' ');
    }
    auto vowel = [](char c) {
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
    };
    std::size_t groups = 0;
    bool prev_vowel = false;
    for (char c : letters) {
        const bool v = vowel(c);
        if (v && !prev_vowel)
            ++groups;
        prev_vowel = v;
    }
    // trailing letters of the word, ignoring trailing non-letters
    const auto last = letters.find_last_not_of(' ');
    if (groups > 0 && last != std::string::npos && letters[last] == 'e' && last >= 1 &&
        letters[last - 1] != 'l' && letters[last - 1] != ' ') {
        --groups;
    }
    return std::max<std::size_t>(groups, 1);
}

struct WordShapeStats {
    std::size_t n_chars = 0; // total characters over all words
    std::size_t n_capitalized_words = 0;
    std::size_t n_all_upper_words = 0;
    std::size_t n_digit_words = 0;
    std::size_t n_letter_only_words = 0;
    std::size_t n_alnum_mixed_words = 0;
    std::size_t n_single_letter_words = 0;
    std::size_t n_single_digit_words = 0;
    std::size_t n_single_char_words = 0;
    double max_upper_to_lower_ratio = 0;
    double min_char_diversity = 0;
    double max_upper_to_all_ratio = 0;
    double max_digit_to_all_ratio = 0;
    double max_nonalnum_to_all_ratio = 0;
    std::size_t max_repeated_char_run = 0;
    std::size_t max_word_length = 0;
};

/// Per-word shape statistics over case-preserved words.
///
/// Capitalized: first character uppercase and at least one lowercase letter.
/// All-uppercase: at least one letter and no lowercase letters. Mixed: at least
/// one letter and one digit. The upper/lower ratio of a word without lowercase
/// letters divides by 1. Extremes over an empty list are 0.
inline WordShapeStats word_shape_stats(std::span<const std::string> words)
{
    using namespace detail;
    WordShapeStats st;
    bool first = true;
    for (const auto& w : words) {
        const auto cps = decode_utf8_lenient(w);
        if (cps.empty())
            continue;
        std::size_t upper = 0, lower = 0, letters = 0, digits = 0, other = 0;
        std::size_t run = 0, best_run = 0;
        char32_t prev = 0;
        for (char32_t cp : cps) {
            switch (classify(cp)) {
            case CharClass::upper:
                ++upper;
                ++letters;
                break;
            case CharClass::lower:
                ++lower;
                ++letters;
                break;
            case CharClass::caseless_letter:
                ++letters;
                break;
            case CharClass::digit:
                ++digits;
                break;
            default:
                ++other;
                break;
            }
            run = (run > 0 && cp == prev) ? run + 1 : 1;
            best_run = std::max(best_run, run);
            prev = cp;
        }
        const std::size_t len = cps.size();
        const double dlen = static_cast<double>(len);
        st.n_chars += len;

        if (is_upper(cps.front()) && lower > 0)
            ++st.n_capitalized_words;
        if (letters > 0 && lower == 0)
            ++st.n_all_upper_words;
        if (digits == len)
            ++st.n_digit_words;
        if (letters == len)
            ++st.n_letter_only_words;
        if (letters > 0 && digits > 0)
            ++st.n_alnum_mixed_words;
        if (len == 1) {
            ++st.n_single_char_words;
            if (letters == 1)
                ++st.n_single_letter_words;
            if (digits == 1)
                ++st.n_single_digit_words;
        }

        const double ul = static_cast<double>(upper) / static_cast<double>(lower > 0 ? lower : 1);
        std::u32string distinct = cps;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        const double diversity = static_cast<double>(distinct.size()) / dlen;

        st.max_upper_to_lower_ratio = std::max(st.max_upper_to_lower_ratio, ul);
        st.min_char_diversity = first ? diversity : std::min(st.min_char_diversity, diversity);
        st.max_upper_to_all_ratio = std::max(st.max_upper_to_all_ratio, upper / dlen);
        st.max_digit_to_all_ratio = std::max(st.max_digit_to_all_ratio, digits / dlen);
        st.max_nonalnum_to_all_ratio = std::max(st.max_nonalnum_to_all_ratio, other / dlen);
        st.max_repeated_char_run = std::max(st.max_repeated_char_run, best_run);
        st.max_word_length = std::max(st.max_word_length, len);
        first = false;
    }
    return st;
}

struct HtmlStats {
    std::size_t n_anchors = 0;
    std::size_t n_unique_anchors = 0;
    std::size_t n_non_anchor_tags = 0;
    std::size_t n_images = 0;
    std::size_t n_all_tags = 0;

    bool operator==(const HtmlStats&) const = default;
};

namespace detail {

struct TagToken {
    std::string name; // lowercase; empty for comments/doctype/processing instructions
    bool closing = false;
    std::size_t end = 0; // index one past '>' (or text end)
    std::optional<std::string> href;
};

inline bool is_tag_name_char(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
           c == ':' || c == '_';
}

// Reads the attribute list of an opening tag, returning the href value when present.
inline std::optional<std::string> scan_attributes(std::string_view html, std::size_t& i)
{
    std::optional<std::string> href;
    const std::size_t n = html.size();
    while (i < n && html[i] != '>') {
        if (is_ascii_space(html[i]) || html[i] == '/') {
            ++i;
            continue;
        }
        const std::size_t name_start = i;
        while (i < n && !is_ascii_space(html[i]) && html[i] != '=' && html[i] != '>' && html[i] != '/')
            ++i;
        const std::string attr = lower_ascii(html.substr(name_start, i - name_start));
        while (i < n && is_ascii_space(html[i]))
            ++i;
        std::string value;
        bool has_value = false;
        if (i < n && html[i] == '=') {
            has_value = true;
            ++i;
            while (i < n && is_ascii_space(html[i]))
                ++i;
            if (i < n && (html[i] == '"' || html[i] == '\'')) {
                const char q = html[i++];
                const auto close = html.find(q, i);
                const auto stop = close == std::string_view::npos ? n : close;
                value = std::string(html.substr(i, stop - i));
                i = close == std::string_view::npos ? n : close + 1;
            } else {
                const std::size_t vs = i;
                while (i < n && !is_ascii_space(html[i]) && html[i] != '>')
                    ++i;
                value = std::string(html.substr(vs, i - vs));
            }
        }
        if (attr == "href" && !href)
            href = has_value ? value : std::string();
        if (attr.empty() && !has_value && i < n && html[i] != '>')
            ++i;
    }
    if (i < n)
        ++i;
    return href;
}

// Reads the markup construct starting at html[i] == '<'. Returns nullopt when
// the '<' does not start markup (plain text).
inline std::optional<TagToken> read_markup(std::string_view html, std::size_t i)
{
    const std::size_t n = html.size();
    if (i + 1 >= n)
        return std::nullopt;
    TagToken tok;
    if (html.substr(i).starts_with("<!--")) {
        const auto close = html.find("-->", i + 4);
        tok.end = close == std::string_view::npos ? n : close + 3;
        return tok;
    }
    if (html[i + 1] == '!' || html[i + 1] == '?') {
        const auto close = html.find('>', i);
        tok.end = close == std::string_view::npos ? n : close + 1;
        return tok;
    }
    std::size_t j = i + 1;
    if (html[j] == '/') {
        tok.closing = true;
        ++j;
    }
    if (j >= n || !((html[j] >= 'a' && html[j] <= 'z') || (html[j] >= 'A' && html[j] <= 'Z')))
        return std::nullopt;
    const std::size_t name_start = j;
    while (j < n && is_tag_name_char(html[j]))
        ++j;
    tok.name = lower_ascii(html.substr(name_start, j - name_start));
    if (tok.closing) {
        const auto close = html.find('>', j);
        tok.end = close == std::string_view::npos ? n : close + 1;
    } else {
        tok.href = scan_attributes(html, j);
        tok.end = j;
    }
    return tok;
}

// Position just past the matching raw-text close tag (</script>, </style>).
inline std::size_t skip_raw_text(std::string_view html, std::size_t from, std::string_view name)
{
    const std::string lowered = lower_ascii(html.substr(from));
    const auto close = lowered.find("</" + std::string(name));
    if (close == std::string::npos)
        return html.size();
    return from + close;
}

} // namespace detail

/// Counts opening tags with a tolerant scanner (no DOM). Comments, doctype
/// and processing instructions are ignored; script/style bodies are skipped.
/// Anchor uniqueness keys on the trimmed, lowercased href; anchors without
/// href share one key.
inline HtmlStats html_tag_stats(std::string_view html)
{
    HtmlStats st;
    std::unordered_set<std::string> hrefs;
    bool anchor_without_href = false;
    std::size_t i = 0;
    while (i < html.size()) {
        if (html[i] != '<') {
            ++i;
            continue;
        }
        const auto tok = detail::read_markup(html, i);
        if (!tok) {
            ++i;
            continue;
        }
        i = tok->end;
        if (tok->name.empty() || tok->closing)
            continue;
        ++st.n_all_tags;
        if (tok->name == "a") {
            ++st.n_anchors;
            if (tok->href)
                hrefs.insert(detail::lower_ascii(detail::trim(*tok->href)));
            else
                anchor_without_href = true;
        } else {
            ++st.n_non_anchor_tags;
            if (tok->name == "img")
                ++st.n_images;
            if (tok->name == "script" || tok->name == "style")
                i = detail::skip_raw_text(html, i, tok->name);
        }
    }
    st.n_unique_anchors = hrefs.size() + (anchor_without_href ? 1 : 0);
    return st;
}

namespace detail {

inline bool is_inline_tag(std::string_view name)
{
    static constexpr std::string_view inline_tags[] = {
        "a", "abbr", "b", "big", "cite", "code", "em", "font", "i", "kbd", "mark", "q", "s",
        "samp", "small", "span", "strike", "strong", "sub", "sup", "tt", "u", "var", "wbr"};
    return std::find(std::begin(inline_tags), std::end(inline_tags), name) != std::end(inline_tags);
}

inline bool is_line_break_tag(const TagToken& tok)
{
    if (tok.name == "br")
        return true;
    return tok.closing && (tok.name == "p" || tok.name == "div");
}

inline std::optional<char32_t> named_entity(std::string_view name)
{
    if (name == "amp")
        return U'&';
    if (name == "lt")
        return U'<';
    if (name == "gt")
        return U'>';
    if (name == "quot")
        return U'"';
    if (name == "apos")
        return U'\'';
    if (name == "nbsp")
        return U' ';
    return std::nullopt;
}

// Decodes entities in a text run; unknown or malformed entities stay literal.
inline std::string decode_entities(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '&') {
            out.push_back(text[i]);
            continue;
        }
        const auto semi = text.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back('&');
            continue;
        }
        const auto body = text.substr(i + 1, semi - i - 1);
        std::optional<char32_t> cp;
        if (body.size() >= 2 && body[0] == '#') {
            char32_t value = 0;
            bool ok = true;
            const bool hex = body[1] == 'x' || body[1] == 'X';
            const auto digits = body.substr(hex ? 2 : 1);
            ok = !digits.empty();
            for (char c : digits) {
                const int d = hex ? hex_value(c) : (c >= '0' && c <= '9' ? c - '0' : -1);
                if (d < 0 || value > 0x10FFFF) {
                    ok = false;
                    break;
                }
                value = value * (hex ? 16 : 10) + static_cast<char32_t>(d);
            }
            if (ok && value > 0 && value <= 0x10FFFF && !(value >= 0xD800 && value <= 0xDFFF))
                cp = value;
        } else {
            cp = named_entity(body);
        }
        if (!cp) {
            out.push_back('&');
            continue;
        }
        append_utf8(out, *cp);
        i = semi;
    }
    return out;
}

} // namespace detail

/// Removes markup and returns readable text. Script and style bodies are
/// dropped, entities decoded, <br>, </p> and </div> become newlines, other
/// block-level tags become at most one separating space.
inline std::string strip_html(std::string_view html)
{
    std::string out;
    std::size_t pending_newlines = 0;
    bool pending_space = false;
    auto emit_text = [&](std::string_view raw) {
        if (raw.empty())
            return;
        const std::string text = detail::decode_entities(raw);
        if (text.empty())
            return;
        out.append(pending_newlines, '\n');
        if (pending_newlines == 0 && pending_space && !out.empty() && !detail::is_ascii_space(out.back()) &&
            !detail::is_ascii_space(text.front()))
            out.push_back(' ');
        pending_newlines = 0;
        pending_space = false;
        out += text;
    };

    std::size_t i = 0;
    std::size_t text_start = 0;
    while (i < html.size()) {
        if (html[i] != '<') {
            ++i;
            continue;
        }
        const auto tok = detail::read_markup(html, i);
        if (!tok) {
            ++i;
            continue;
        }
        emit_text(html.substr(text_start, i - text_start));
        i = tok->end;
        if (!tok->closing && (tok->name == "script" || tok->name == "style")) {
            i = detail::skip_raw_text(html, i, tok->name);
            const auto close = detail::read_markup(html, i);
            i = close ? close->end : html.size();
        } else if (detail::is_line_break_tag(*tok)) {
            ++pending_newlines;
        } else if (!tok->name.empty() && !detail::is_inline_tag(tok->name)) {
            pending_space = true;
        }
        text_start = i;
    }
    emit_text(html.substr(text_start));
    out.append(pending_newlines, '\n');
    return out;
}

} // namespace mailfeat
