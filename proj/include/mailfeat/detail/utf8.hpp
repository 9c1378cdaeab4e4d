#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mailfeat::detail {

inline void append_utf8(std::string& out, char32_t cp)
{
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Decodes one code point starting at `pos`; returns 0 length on an invalid sequence.
inline std::size_t utf8_sequence(std::string_view s, std::size_t pos, char32_t& cp)
{
    const auto b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) {
        cp = b0;
        return 1;
    }
    std::size_t len = 0;
    char32_t value = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        value = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        value = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        value = b0 & 0x07;
    } else {
        return 0;
    }
    if (pos + len > s.size())
        return 0;
    for (std::size_t i = 1; i < len; ++i) {
        const auto b = static_cast<unsigned char>(s[pos + i]);
        if ((b & 0xC0) != 0x80)
            return 0;
        value = (value << 6) | (b & 0x3F);
    }
    // reject overlong forms, surrogates and out-of-range values
    static constexpr char32_t min_for_len[] = {0, 0, 0x80, 0x800, 0x10000};
    if (value < min_for_len[len] || value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF))
        return 0;
    cp = value;
    return len;
}

inline bool is_valid_utf8(std::string_view s)
{
    char32_t cp = 0;
    for (std::size_t i = 0; i < s.size();) {
        const auto n = utf8_sequence(s, i, cp);
        if (n == 0)
            return false;
        i += n;
    }
    return true;
}

/// Decodes UTF-8; bytes that do not form a valid sequence map to their Latin-1 code point.
inline std::u32string decode_utf8_lenient(std::string_view s)
{
    std::u32string out;
    out.reserve(s.size());
    char32_t cp = 0;
    for (std::size_t i = 0; i < s.size();) {
        const auto n = utf8_sequence(s, i, cp);
        if (n == 0) {
            out.push_back(static_cast<unsigned char>(s[i]));
            ++i;
        } else {
            out.push_back(cp);
            i += n;
        }
    }
    return out;
}

inline std::string encode_utf8(std::u32string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : s)
        append_utf8(out, cp);
    return out;
}

inline std::string latin1_to_utf8(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        append_utf8(out, static_cast<unsigned char>(c));
    return out;
}

/// Valid UTF-8 passes through; each invalid byte is re-read as Latin-1.
inline std::string repair_utf8(std::string_view s)
{
    if (is_valid_utf8(s))
        return std::string(s);
    return encode_utf8(decode_utf8_lenient(s));
}

// Character classes used by every counting feature. Only ASCII and the Latin-1
// letter block carry case; other code points >= U+0100 that are not punctuation
// or space are treated as caseless letters.
enum class CharClass { upper, lower, caseless_letter, digit, whitespace, other };

inline CharClass classify(char32_t cp)
{
    if (cp < 0x80) {
        if (cp >= 'A' && cp <= 'Z')
            return CharClass::upper;
        if (cp >= 'a' && cp <= 'z')
            return CharClass::lower;
        if (cp >= '0' && cp <= '9')
            return CharClass::digit;
        if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\v' || cp == '\f')
            return CharClass::whitespace;
        return CharClass::other;
    }
    if (cp == 0xA0 || cp == 0x85 || cp == 0x2028 || cp == 0x2029 || cp == 0x3000 ||
        (cp >= 0x2000 && cp <= 0x200A))
        return CharClass::whitespace;
    if (cp < 0xC0 || cp == 0xD7 || cp == 0xF7)
        return CharClass::other;
    if (cp <= 0xDE)
        return CharClass::upper;
    if (cp <= 0xFF)
        return CharClass::lower;
    // general punctuation, symbols, arrows, box drawing, dingbats
    if ((cp >= 0x2000 && cp <= 0x2BFF) || (cp >= 0x3000 && cp <= 0x303F) ||
        (cp >= 0xFE30 && cp <= 0xFE4F) || (cp >= 0xFF00 && cp <= 0xFF0F) ||
        (cp >= 0x1F000 && cp <= 0x1FAFF) || (cp >= 0xE000 && cp <= 0xF8FF))
        return CharClass::other;
    return CharClass::caseless_letter;
}

inline bool is_letter(char32_t cp)
{
    const auto c = classify(cp);
    return c == CharClass::upper || c == CharClass::lower || c == CharClass::caseless_letter;
}

inline bool is_digit(char32_t cp) { return classify(cp) == CharClass::digit; }
inline bool is_alnum(char32_t cp) { return is_letter(cp) || is_digit(cp); }
inline bool is_upper(char32_t cp) { return classify(cp) == CharClass::upper; }
inline bool is_lower(char32_t cp) { return classify(cp) == CharClass::lower; }
inline bool is_space(char32_t cp) { return classify(cp) == CharClass::whitespace; }

inline char32_t to_lower(char32_t cp)
{
    if (cp >= 'A' && cp <= 'Z')
        return cp + 32;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7)
        return cp + 32;
    return cp;
}

inline std::string to_lower_utf8(std::string_view s)
{
    auto cps = decode_utf8_lenient(s);
    for (auto& cp : cps)
        cp = to_lower(cp);
    return encode_utf8(cps);
}

inline std::size_t count_code_points(std::string_view s) { return decode_utf8_lenient(s).size(); }

} // namespace mailfeat::detail
