#pragma once

// Transfer-encoding and header-encoding decoders used by the EML parser.
// All decoders are lenient: malformed input degrades, it never throws.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "detail/ascii.hpp"
#include "detail/utf8.hpp"

namespace mailfeat {

namespace detail {

constexpr int base64_value(char c) noexcept
{
    if (c >= 'A' && c <= 'Z')
        return c - 'A';
    if (c >= 'a' && c <= 'z')
        return c - 'a' + 26;
    if (c >= '0' && c <= '9')
        return c - '0' + 52;
    if (c == '+' || c == '-')
        return 62;
    if (c == '/' || c == '_')
        return 63;
    return -1;
}

// windows-1252 assignments for 0x80..0x9F; zero entries fall back to Latin-1.
inline constexpr std::array<char32_t, 32> cp1252_high = {
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
    0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0x0178};

} // namespace detail

/// Decodes base64, skipping characters outside the alphabet. Stops at the first '='.
inline std::string decode_base64(std::string_view in)
{
    std::string out;
    out.reserve(in.size() * 3 / 4);
    std::uint32_t acc = 0;
    int bits = 0;
    for (char c : in) {
        if (c == '=')
            break;
        const int v = detail::base64_value(c);
        if (v < 0)
            continue;
        acc = (acc << 6) | static_cast<std::uint32_t>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<char>((acc >> bits) & 0xFF));
        }
    }
    return out;
}

/// Quoted-printable body decoding. Soft line breaks ("=" at end of line) are
/// removed; invalid escapes are kept literally.
inline std::string decode_quoted_printable(std::string_view in)
{
    std::string out;
    out.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        const char c = in[i];
        if (c != '=') {
            out.push_back(c);
            continue;
        }
        // soft break: '=' followed by optional trailing whitespace then a newline
        std::size_t j = i + 1;
        while (j < in.size() && detail::is_wsp(in[j]))
            ++j;
        if (j < in.size() && (in[j] == '\n' || in[j] == '\r')) {
            if (in[j] == '\r' && j + 1 < in.size() && in[j + 1] == '\n')
                ++j;
            i = j;
            continue;
        }
        if (j == in.size()) {
            i = j;
            continue;
        }
        if (i + 2 < in.size()) {
            const int hi = detail::hex_value(in[i + 1]);
            const int lo = detail::hex_value(in[i + 2]);
            if (hi >= 0 && lo >= 0) {
                out.push_back(static_cast<char>(hi * 16 + lo));
                i += 2;
                continue;
            }
        }
        out.push_back(c);
    }
    return out;
}

/// The "Q" encoding of RFC 2047 encoded-words: like quoted-printable, '_' is a space.
inline std::string decode_q_word(std::string_view in)
{
    std::string out;
    out.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        const char c = in[i];
        if (c == '_') {
            out.push_back(' ');
        } else if (c == '=' && i + 2 < in.size() &&
                   detail::hex_value(in[i + 1]) >= 0 && detail::hex_value(in[i + 2]) >= 0) {
            out.push_back(static_cast<char>(detail::hex_value(in[i + 1]) * 16 +
                                            detail::hex_value(in[i + 2])));
            i += 2;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

/// Converts `bytes` declared in `charset` to UTF-8.
///
/// utf-8, us-ascii and an empty charset are read as UTF-8 with per-byte Latin-1
/// repair; windows-1252 uses its own table; every other charset (including
/// unrecognized ones) maps bytes one-to-one as Latin-1, so conversion never fails.
inline std::string charset_to_utf8(std::string_view bytes, std::string_view charset)
{
    const std::string cs = detail::lower_ascii(detail::trim(charset));
    if (cs.empty() || cs == "utf-8" || cs == "utf8" || cs == "us-ascii" || cs == "ascii" ||
        cs == "ansi_x3.4-1968")
        return detail::repair_utf8(bytes);
    if (cs == "windows-1252" || cs == "cp1252" || cs == "x-cp1252") {
        std::string out;
        out.reserve(bytes.size());
        for (char c : bytes) {
            const auto b = static_cast<unsigned char>(c);
            char32_t cp = b;
            if (b >= 0x80 && b <= 0x9F && detail::cp1252_high[b - 0x80] != 0)
                cp = detail::cp1252_high[b - 0x80];
            detail::append_utf8(out, cp);
        }
        return out;
    }
    return detail::latin1_to_utf8(bytes);
}

/// Resolves RFC 2047 encoded-words in a header value and returns UTF-8.
/// Whitespace between two adjacent encoded-words is dropped. Raw 8-bit text
/// outside encoded-words is repaired to UTF-8.
inline std::string decode_encoded_words(std::string_view value)
{
    std::string out;
    bool last_was_word = false;
    std::size_t i = 0;
    while (i < value.size()) {
        const auto start = value.find("=?", i);
        if (start == std::string_view::npos) {
            out += detail::repair_utf8(value.substr(i));
            break;
        }
        // =?charset?enc?text?=
        const auto q1 = value.find('?', start + 2);
        const auto q2 = q1 == std::string_view::npos ? q1 : value.find('?', q1 + 1);
        const auto end = q2 == std::string_view::npos ? q2 : value.find("?=", q2 + 1);
        if (q1 == std::string_view::npos || q2 != q1 + 2 || end == std::string_view::npos) {
            out += detail::repair_utf8(value.substr(i, start + 2 - i));
            i = start + 2;
            last_was_word = false;
            continue;
        }
        const std::string_view between = value.substr(i, start - i);
        if (!(last_was_word && detail::trim(between).empty()))
            out += detail::repair_utf8(between);

        std::string_view charset = value.substr(start + 2, q1 - start - 2);
        // RFC 2231 language suffix: charset*lang
        if (const auto star = charset.find('*'); star != std::string_view::npos)
            charset = charset.substr(0, star);
        const char enc = detail::ascii_lower(value[q1 + 1]);
        const std::string_view payload = value.substr(q2 + 1, end - q2 - 1);
        if (enc == 'b')
            out += charset_to_utf8(decode_base64(payload), charset);
        else if (enc == 'q')
            out += charset_to_utf8(decode_q_word(payload), charset);
        else
            out += detail::repair_utf8(value.substr(start, end + 2 - start));
        i = end + 2;
        last_was_word = true;
    }
    return out;
}

} // namespace mailfeat
