#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "default_data.hpp"
#include "detail/utf8.hpp"
#include "textkit.hpp"

namespace mailfeat {

class LexiconError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A word list. Entries are stored as lowercased token sequences produced by
/// the same tokenizer used for message text, so "e-mail" or "click here"
/// match exactly what tokenize() yields.
class Lexicon {
public:
    Lexicon() = default;

    Lexicon(std::string name, std::span<const std::string_view> entries, std::filesystem::path source = {})
        : name_(std::move(name)), source_path_(std::move(source))
    {
        for (const auto e : entries)
            add(e);
    }

    void add(std::string_view entry)
    {
        const auto tk = tokenize(detail::to_lower_utf8(entry));
        if (tk.tokens.empty())
            return;
        std::string key;
        for (const auto& t : tk.tokens) {
            if (!key.empty())
                key.push_back(' ');
            key += t;
        }
        if (by_length_[tk.tokens.size()].insert(key).second)
            ++size_;
    }

    bool contains(std::string_view lowercase_word) const
    {
        const auto it = by_length_.find(1);
        return it != by_length_.end() && it->second.contains(std::string(lowercase_word));
    }

    const std::string& name() const { return name_; }
    const std::filesystem::path& source_path() const { return source_path_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    /// Entry sets keyed by entry length in tokens.
    const std::map<std::size_t, std::unordered_set<std::string>>& entries_by_length() const
    {
        return by_length_;
    }

private:
    std::string name_;
    std::filesystem::path source_path_;
    std::map<std::size_t, std::unordered_set<std::string>> by_length_;
    std::size_t size_ = 0;
};

/// Parses the lexicon file format: one entry per line, '#' starts a comment line.
inline Lexicon parse_lexicon(std::string name, std::string_view content, std::filesystem::path source = {})
{
    Lexicon lex(std::move(name), {}, std::move(source));
    std::size_t pos = 0;
    while (pos < content.size()) {
        auto nl = content.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = content.size();
        const auto line = detail::trim(content.substr(pos, nl - pos));
        if (!line.empty() && line.front() != '#')
            lex.add(line);
        pos = nl + 1;
    }
    return lex;
}

inline std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw LexiconError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Lexicon load_lexicon(std::string name, const std::filesystem::path& path)
{
    return parse_lexicon(std::move(name), read_text_file(path), path);
}

inline const Lexicon& default_stopwords()
{
    static const Lexicon lex("stopwords", defaults::stopwords);
    return lex;
}

inline const Lexicon& default_spam_words()
{
    static const Lexicon lex("spam-words", defaults::spam_words);
    return lex;
}

inline const Lexicon& default_function_words()
{
    static const Lexicon lex("function-words", defaults::function_words);
    return lex;
}

/// Number of token occurrences matching a lexicon entry, with multiplicity.
/// Multi-token entries match contiguous token runs; every (position, entry)
/// match counts once.
inline std::size_t count_lexicon_hits(std::span<const std::string> lowercase_tokens, const Lexicon& lex)
{
    std::size_t hits = 0;
    const auto& sets = lex.entries_by_length();
    std::string key;
    for (std::size_t i = 0; i < lowercase_tokens.size(); ++i) {
        for (const auto& [len, entries] : sets) {
            if (i + len > lowercase_tokens.size())
                break;
            key.clear();
            for (std::size_t k = 0; k < len; ++k) {
                if (k)
                    key.push_back(' ');
                key += lowercase_tokens[i + k];
            }
            hits += entries.contains(key);
        }
    }
    return hits;
}

inline std::vector<std::string> lowercase_tokens(const TokenizedText& tk)
{
    std::vector<std::string> out;
    out.reserve(tk.tokens.size());
    for (const auto& t : tk.tokens)
        out.push_back(detail::to_lower_utf8(t));
    return out;
}

inline std::size_t count_lexicon_hits(const TokenizedText& tk, const Lexicon& lex)
{
    return count_lexicon_hits(lowercase_tokens(tk), lex);
}

/// The three word lists the payload extractors consult.
struct Lexicons {
    Lexicon spam_words = default_spam_words();
    Lexicon function_words = default_function_words();
    Lexicon stopwords = default_stopwords();
};

} // namespace mailfeat
