#pragma once

// RFC 5322 / MIME parsing of one-message-per-file EML input.
//
// parse_eml() turns raw bytes into a ParsedEmail: the decoded header list, the
// MIME tree, and the seven canonical parts (From, To, CC, BCC, Subject, text
// body, HTML body) plus attachment metadata. The parser is deliberately
// forgiving: bad parts degrade to empty strings. The only hard failure is a
// message with neither a header/body separator nor a single header line.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codec.hpp"
#include "detail/ascii.hpp"

namespace mailfeat {

struct RawMessage {
    std::filesystem::path source_path;
    std::string bytes;
};

class MalformedMessage : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Header {
    std::string name;      // case preserved
    std::string value;     // unfolded, trimmed, encoded-words resolved (UTF-8)
    std::string raw_value; // unfolded and trimmed, still encoded

    bool operator==(const Header&) const = default;
};

enum class Disposition { none, inline_part, attachment };

struct MimePart {
    std::string content_type = "text/plain"; // lowercase type/subtype
    bool content_type_declared = false;
    std::string charset;
    Disposition disposition = Disposition::none;
    std::optional<std::string> filename;
    std::string decoded_body; // UTF-8 with '\n' line endings for text/*, raw bytes otherwise
    std::vector<MimePart> children;
    bool is_attachment = false;

    bool is_multipart() const { return content_type.starts_with("multipart/"); }
    bool is_text() const { return content_type.starts_with("text/"); }
};

struct Address {
    std::string display_name;
    std::string addr_spec;
    bool is_malformed = false;

    bool operator==(const Address&) const = default;
};

struct AttachmentInfo {
    std::optional<std::string> filename;
    std::string content_type; // never empty
    std::size_t size_bytes = 0;

    bool operator==(const AttachmentInfo&) const = default;
};

struct EmailParts {
    std::vector<Address> from_addr;
    std::vector<Address> to_addrs;
    std::vector<Address> cc_addrs;
    std::vector<Address> bcc_addrs;
    std::string subject;
    std::string text_body;
    std::string html_body;
    std::vector<AttachmentInfo> attachments;

    bool operator==(const EmailParts&) const = default;
};

struct ParsedEmail {
    std::vector<Header> headers;
    MimePart mime_tree;
    EmailParts parts;
};

namespace detail {

inline constexpr int max_mime_depth = 32;

inline std::string normalize_newlines(std::string_view in)
{
    std::string out;
    out.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (in[i] == '\r') {
            out.push_back('\n');
            if (i + 1 < in.size() && in[i + 1] == '\n')
                ++i;
        } else {
            out.push_back(in[i]);
        }
    }
    return out;
}

// Returns the header name if `line` looks like "name:" (obsolete "name :" allowed).
inline std::optional<std::string_view> header_name(std::string_view line)
{
    std::size_t i = 0;
    while (i < line.size()) {
        const auto c = static_cast<unsigned char>(line[i]);
        if (c == ':' || c <= 32 || c >= 127)
            break;
        ++i;
    }
    if (i == 0)
        return std::nullopt;
    std::size_t j = i;
    while (j < line.size() && is_wsp(line[j]))
        ++j;
    if (j >= line.size() || line[j] != ':')
        return std::nullopt;
    return line.substr(0, i);
}

struct HeaderBlock {
    std::vector<Header> headers;
    std::string_view body;
    bool found_separator = false;
};

// Splits "\n"-normalized text into a header block and the body.
inline HeaderBlock split_header_block(std::string_view text, bool skip_envelope)
{
    HeaderBlock block;
    const bool has_blank_line = text.starts_with("\n") || text.find("\n\n") != std::string_view::npos;

    std::string name;
    std::string value;
    bool open = false;
    auto close_header = [&] {
        if (!open)
            return;
        const auto raw = std::string(trim(value));
        block.headers.push_back(Header{name, decode_encoded_words(raw), raw});
        open = false;
    };

    std::size_t pos = 0;
    bool first = true;
    while (pos <= text.size()) {
        if (pos == text.size()) {
            block.body = {};
            break;
        }
        const auto nl = text.find('\n', pos);
        const auto line_end = nl == std::string_view::npos ? text.size() : nl;
        const auto next = nl == std::string_view::npos ? text.size() : nl + 1;
        const std::string_view line = text.substr(pos, line_end - pos);

        if (first && skip_envelope && line.starts_with("From ")) {
            first = false;
            pos = next;
            continue;
        }
        first = false;

        if (line.empty()) {
            close_header();
            block.found_separator = true;
            block.body = text.substr(next);
            return block;
        }
        if (is_wsp(line.front())) {
            if (open)
                value += line;
            pos = next;
            continue;
        }
        if (const auto hn = header_name(line)) {
            close_header();
            name = std::string(*hn);
            value = std::string(line.substr(line.find(':') + 1));
            open = true;
            pos = next;
            continue;
        }
        if (!has_blank_line) {
            // no separator anywhere: the header block ends at the first non-header line
            close_header();
            block.body = text.substr(pos);
            return block;
        }
        // stray garbage inside a header block that does end in a blank line
        close_header();
        pos = next;
    }
    close_header();
    return block;
}

inline const Header* find_header(const std::vector<Header>& headers, std::string_view name)
{
    for (const auto& h : headers)
        if (iequals(h.name, name))
            return &h;
    return nullptr;
}

inline std::string unquote(std::string_view s)
{
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        std::string out;
        for (std::size_t i = 1; i + 1 < s.size(); ++i) {
            if (s[i] == '\\' && i + 2 < s.size())
                ++i;
            out.push_back(s[i]);
        }
        return out;
    }
    return std::string(s);
}

struct StructuredValue {
    std::string token; // lowercased main value ("text/plain", "attachment")
    std::vector<std::pair<std::string, std::string>> params; // lowercased names
};

// Parses `value; name=val; name="quoted val"` (Content-Type, Content-Disposition).
// RFC 2231 `name*=charset''pct-encoded` and continuations `name*0=` are joined.
inline StructuredValue parse_structured(std::string_view value)
{
    StructuredValue out;
    std::vector<std::string_view> pieces;
    {
        bool quoted = false;
        std::size_t start = 0;
        for (std::size_t i = 0; i < value.size(); ++i) {
            const char c = value[i];
            if (c == '\\' && quoted) {
                ++i;
                continue;
            }
            if (c == '"')
                quoted = !quoted;
            else if (c == ';' && !quoted) {
                pieces.push_back(value.substr(start, i - start));
                start = i + 1;
            }
        }
        pieces.push_back(value.substr(start));
    }
    out.token = lower_ascii(trim(pieces.front()));
    // strip trailing comments like "text/plain (generated)"
    if (const auto paren = out.token.find('('); paren != std::string::npos)
        out.token = std::string(trim(std::string_view(out.token).substr(0, paren)));

    std::vector<std::pair<std::string, std::string>> continued;
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        const auto piece = trim(pieces[i]);
        const auto eq = piece.find('=');
        if (eq == std::string_view::npos)
            continue;
        std::string name = lower_ascii(trim(piece.substr(0, eq)));
        std::string val = unquote(piece.substr(eq + 1));
        if (name.empty())
            continue;
        if (const auto star = name.find('*'); star != std::string::npos) {
            const bool extended = name.back() == '*';
            const std::string base = name.substr(0, star);
            if (extended) {
                // charset'lang'pct-encoded
                std::string_view v = val;
                std::string charset;
                if (const auto q1 = v.find('\''); q1 != std::string_view::npos) {
                    const auto q2 = v.find('\'', q1 + 1);
                    if (q2 != std::string_view::npos) {
                        charset = std::string(v.substr(0, q1));
                        v = v.substr(q2 + 1);
                    }
                }
                std::string bytes;
                for (std::size_t k = 0; k < v.size(); ++k) {
                    if (v[k] == '%' && k + 2 < v.size() && hex_value(v[k + 1]) >= 0 &&
                        hex_value(v[k + 2]) >= 0) {
                        bytes.push_back(static_cast<char>(hex_value(v[k + 1]) * 16 + hex_value(v[k + 2])));
                        k += 2;
                    } else {
                        bytes.push_back(v[k]);
                    }
                }
                val = charset_to_utf8(bytes, charset);
            }
            bool merged = false;
            for (auto& [n, existing] : continued) {
                if (n == base) {
                    existing += val;
                    merged = true;
                }
            }
            if (!merged)
                continued.emplace_back(base, val);
            continue;
        }
        out.params.emplace_back(std::move(name), std::move(val));
    }
    for (auto& [n, v] : continued) {
        bool present = false;
        for (const auto& p : out.params)
            present = present || p.first == n;
        if (!present)
            out.params.emplace_back(n, std::move(v));
    }
    return out;
}

inline std::optional<std::string> param(const StructuredValue& sv, std::string_view name)
{
    for (const auto& [n, v] : sv.params)
        if (n == name)
            return v;
    return std::nullopt;
}

// Splits a multipart body on its boundary delimiter lines. The newline that
// precedes a delimiter belongs to the delimiter. Preamble and epilogue are dropped.
inline std::vector<std::string_view> split_multipart(std::string_view body, std::string_view boundary)
{
    std::vector<std::string_view> parts;
    const std::string delim = "--" + std::string(boundary);
    std::optional<std::size_t> part_start;
    std::size_t pos = 0;
    while (pos < body.size()) {
        const auto nl = body.find('\n', pos);
        const auto line_end = nl == std::string_view::npos ? body.size() : nl;
        const auto next = nl == std::string_view::npos ? body.size() : nl + 1;
        const auto line = body.substr(pos, line_end - pos);
        if (line.starts_with(delim)) {
            const auto rest = line.substr(delim.size());
            const bool closing = rest.starts_with("--");
            if (closing || trim(rest).empty()) {
                if (part_start) {
                    auto end = pos;
                    if (end > *part_start && body[end - 1] == '\n')
                        --end;
                    parts.push_back(body.substr(*part_start, end - *part_start));
                }
                if (closing)
                    return parts;
                part_start = next;
            }
        }
        pos = next;
    }
    if (part_start && *part_start <= body.size())
        parts.push_back(body.substr(*part_start));
    return parts;
}

inline MimePart parse_entity(const std::vector<Header>& headers, std::string_view body,
                             std::string_view default_type, bool in_alternative, int depth)
{
    MimePart part;
    part.content_type = std::string(default_type);

    StructuredValue ctype;
    if (const auto* h = find_header(headers, "Content-Type")) {
        ctype = parse_structured(h->value);
        if (ctype.token.find('/') != std::string::npos && ctype.token.front() != '/' &&
            ctype.token.back() != '/') {
            part.content_type = ctype.token;
            part.content_type_declared = true;
        }
    }
    part.charset = lower_ascii(param(ctype, "charset").value_or(""));

    StructuredValue disp;
    if (const auto* h = find_header(headers, "Content-Disposition")) {
        disp = parse_structured(h->value);
        if (disp.token == "attachment")
            part.disposition = Disposition::attachment;
        else if (disp.token == "inline")
            part.disposition = Disposition::inline_part;
    }
    if (auto fn = param(disp, "filename"); fn && !fn->empty())
        part.filename = std::move(fn);
    else if (auto nm = param(ctype, "name"); nm && !nm->empty())
        part.filename = std::move(nm);

    if (part.is_multipart()) {
        const auto boundary = param(ctype, "boundary");
        if (!boundary || boundary->empty() || depth >= max_mime_depth)
            return part;
        const bool alt = in_alternative || part.content_type == "multipart/alternative";
        const std::string_view child_default =
            part.content_type == "multipart/digest" ? "message/rfc822" : "text/plain";
        for (const auto chunk : split_multipart(body, *boundary)) {
            auto block = split_header_block(chunk, false);
            if (!block.found_separator && block.headers.empty())
                block.body = chunk;
            part.children.push_back(
                parse_entity(block.headers, block.body, child_default, alt, depth + 1));
        }
        return part;
    }

    std::string cte;
    if (const auto* h = find_header(headers, "Content-Transfer-Encoding"))
        cte = lower_ascii(trim(h->value));
    std::string bytes;
    if (cte == "base64")
        bytes = decode_base64(body);
    else if (cte == "quoted-printable")
        bytes = decode_quoted_printable(body);
    else
        bytes = std::string(body);

    if (part.is_text())
        part.decoded_body = normalize_newlines(charset_to_utf8(bytes, part.charset));
    else
        part.decoded_body = std::move(bytes);

    part.is_attachment = part.disposition == Disposition::attachment || part.filename.has_value() ||
                         part.content_type == "message/rfc822" ||
                         (!part.is_text() && !in_alternative);
    return part;
}

inline void append_body(std::string& target, const std::string& piece)
{
    if (piece.empty())
        return;
    if (!target.empty() && target.back() != '\n')
        target.push_back('\n');
    target += piece;
}

inline void collect_parts(const MimePart& node, EmailParts& parts)
{
    if (node.is_multipart()) {
        for (const auto& child : node.children)
            collect_parts(child, parts);
        return;
    }
    if (node.is_attachment) {
        parts.attachments.push_back(AttachmentInfo{
            node.filename,
            node.content_type_declared ? node.content_type : std::string("application/octet-stream"),
            node.decoded_body.size()});
        return;
    }
    if (node.content_type == "text/plain")
        append_body(parts.text_body, node.decoded_body);
    else if (node.content_type == "text/html")
        append_body(parts.html_body, node.decoded_body);
}

inline std::string strip_comments(std::string_view s, std::string* first_comment)
{
    std::string out;
    int depth = 0;
    bool quoted = false;
    std::string comment;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '\\' && i + 1 < s.size()) {
            (depth > 0 ? comment : out).push_back(s[++i]);
            continue;
        }
        if (depth == 0 && c == '"')
            quoted = !quoted;
        if (!quoted && c == '(') {
            if (depth++ > 0)
                comment.push_back(c);
            continue;
        }
        if (!quoted && c == ')' && depth > 0) {
            if (--depth > 0)
                comment.push_back(c);
            else if (first_comment && first_comment->empty())
                *first_comment = std::string(trim(comment));
            continue;
        }
        (depth > 0 ? comment : out).push_back(c);
    }
    return out;
}

inline Address parse_mailbox(std::string_view element)
{
    Address addr;
    const auto lt = [&] {
        bool quoted = false;
        for (std::size_t i = 0; i < element.size(); ++i) {
            if (element[i] == '"')
                quoted = !quoted;
            else if (element[i] == '<' && !quoted)
                return i;
        }
        return std::string_view::npos;
    }();
    std::string spec;
    if (lt != std::string_view::npos) {
        auto gt = element.find('>', lt);
        if (gt == std::string_view::npos)
            gt = element.size();
        spec = strip_comments(element.substr(lt + 1, gt - lt - 1), nullptr);
        // obsolete route: <@relay1,@relay2:user@host>
        if (const auto colon = spec.rfind(':'); colon != std::string::npos && spec.front() == '@')
            spec = spec.substr(colon + 1);
        addr.display_name = decode_encoded_words(unquote(strip_comments(element.substr(0, lt), nullptr)));
    } else {
        std::string comment;
        spec = strip_comments(element, &comment);
        addr.display_name = decode_encoded_words(comment);
    }
    addr.addr_spec = std::string(trim(spec));
    const auto at = addr.addr_spec.find('@');
    const bool one_at = at != std::string::npos && addr.addr_spec.find('@', at + 1) == std::string::npos;
    bool has_space = false;
    for (char c : addr.addr_spec)
        has_space = has_space || is_ascii_space(c);
    addr.is_malformed = !one_at || at == 0 || at + 1 == addr.addr_spec.size() || has_space;
    if (addr.addr_spec.empty())
        addr.addr_spec = std::string(trim(element));
    return addr;
}

} // namespace detail

/// Parses an RFC 5322 address-list (raw, still encoded). Group syntax is
/// flattened; "undisclosed-recipients:;" yields no addresses.
inline std::vector<Address> parse_address_list(std::string_view raw)
{
    std::vector<Address> out;
    std::string current;
    bool quoted = false;
    int angle = 0;
    int paren = 0;
    bool saw_addr_char = false;
    auto flush = [&] {
        const auto element = detail::trim(current);
        if (!element.empty())
            out.push_back(detail::parse_mailbox(element));
        current.clear();
        saw_addr_char = false;
    };
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const char c = raw[i];
        if (c == '\\' && i + 1 < raw.size()) {
            current.push_back(c);
            current.push_back(raw[++i]);
            continue;
        }
        if (paren == 0 && c == '"')
            quoted = !quoted;
        else if (!quoted && c == '(')
            ++paren;
        else if (!quoted && c == ')' && paren > 0)
            --paren;
        else if (!quoted && paren == 0 && c == '<')
            ++angle;
        else if (!quoted && paren == 0 && c == '>' && angle > 0)
            --angle;

        const bool top = !quoted && paren == 0 && angle == 0;
        if (top && (c == ',' || c == ';')) {
            flush();
            continue;
        }
        if (top && c == ':' && !saw_addr_char) {
            // group display name
            current.clear();
            continue;
        }
        if (!quoted && paren == 0 && (c == '@' || c == '<'))
            saw_addr_char = true;
        current.push_back(c);
    }
    flush();
    return out;
}

/// Case-insensitive lookup of the first header named `name` (decoded value).
inline std::optional<std::string> header_value(const ParsedEmail& email, std::string_view name)
{
    if (const auto* h = detail::find_header(email.headers, name))
        return h->value;
    return std::nullopt;
}

/// All occurrences of `name`, in message order.
inline std::vector<std::string> header_values(const ParsedEmail& email, std::string_view name)
{
    std::vector<std::string> values;
    for (const auto& h : email.headers)
        if (detail::iequals(h.name, name))
            values.push_back(h.value);
    return values;
}

inline std::vector<Address> header_addresses(const ParsedEmail& email, std::string_view name)
{
    if (const auto* h = detail::find_header(email.headers, name))
        return parse_address_list(h->raw_value);
    return {};
}

inline ParsedEmail parse_eml(std::string_view bytes)
{
    if (bytes.empty())
        throw MalformedMessage("empty message");
    const std::string text = detail::normalize_newlines(bytes);
    auto block = detail::split_header_block(text, true);
    if (!block.found_separator && block.headers.empty())
        throw MalformedMessage("no header/body separator and no header line");

    ParsedEmail email;
    email.headers = std::move(block.headers);
    email.mime_tree = detail::parse_entity(email.headers, block.body, "text/plain", false, 0);

    auto& parts = email.parts;
    parts.from_addr = header_addresses(email, "From");
    parts.to_addrs = header_addresses(email, "To");
    parts.cc_addrs = header_addresses(email, "Cc");
    parts.bcc_addrs = header_addresses(email, "Bcc");
    parts.subject = header_value(email, "Subject").value_or("");
    detail::collect_parts(email.mime_tree, parts);
    return email;
}

inline ParsedEmail parse_eml(const RawMessage& raw) { return parse_eml(raw.bytes); }

/// Visits every node of the MIME tree in document order.
template <typename Fn>
void visit_parts(const MimePart& node, Fn&& fn)
{
    fn(node);
    for (const auto& child : node.children)
        visit_parts(child, fn);
}

/// Serializes the header list as "Name: value" lines using decoded values.
inline std::string serialize_headers(const ParsedEmail& email)
{
    std::string out;
    for (const auto& h : email.headers) {
        out += h.name;
        out += ": ";
        out += h.value;
        out += '\n';
    }
    return out;
}

} // namespace mailfeat
