#pragma once

// Corpus-level driver: scan a folder of .eml files, extract the selected
// features on a bounded worker pool, and write rows in scan order to a CSV
// dataset plus an error log.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <thread>
#include <vector>

#include "catalog.hpp"
#include "eml.hpp"
#include "extract.hpp"

namespace mailfeat {

namespace fs = std::filesystem;

class CorpusNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyCorpus : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutputNotWritable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Recursively lists files with a case-insensitive ".eml" extension,
/// returned as corpus-relative paths sorted bytewise.
inline std::vector<fs::path> scan_corpus(const fs::path& dir)
{
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw CorpusNotFound("corpus directory not found: " + dir.string());
    std::vector<std::string> rel;
    fs::recursive_directory_iterator it(dir, fs::directory_options::skip_permission_denied, ec);
    if (ec)
        throw CorpusNotFound("cannot read corpus directory: " + dir.string());
    for (const auto end = fs::recursive_directory_iterator(); it != end; it.increment(ec)) {
        if (ec)
            break;
        if (!it->is_regular_file(ec))
            continue;
        if (!detail::iequals(it->path().extension().string(), ".eml"))
            continue;
        rel.push_back(fs::relative(it->path(), dir, ec).generic_string());
    }
    if (rel.empty())
        throw EmptyCorpus("no .eml files under " + dir.string());
    std::sort(rel.begin(), rel.end());
    return {rel.begin(), rel.end()};
}

enum class LabelMode { none, from_subdir };
enum class ErrorPolicy { skip, zero_row };

struct CorpusRunConfig {
    fs::path corpus_dir;
    std::vector<std::string> selection; // group names and/or feature ids; empty = all
    fs::path output_csv;                // default: <corpus>/mailfeat_out/features.csv
    fs::path error_file;                // default: <corpus>/mailfeat_out/errors.log
    LabelMode label_mode = LabelMode::none;
    std::optional<fs::path> spam_words;
    std::optional<fs::path> function_words;
    std::optional<fs::path> stopwords;
    std::optional<fs::path> domains;
    unsigned worker_count = 1;
    ErrorPolicy on_error = ErrorPolicy::skip;
    std::optional<fs::path> dump_parts_dir;
    std::ostream* status = nullptr; // receives "k/N processed" lines
};

struct RunError {
    std::string email_id;
    std::string kind;
    std::string message;
};

struct RunReport {
    std::size_t total_emails = 0;
    std::size_t succeeded = 0;
    std::size_t failed = 0;
    std::vector<RunError> errors;
    std::chrono::steady_clock::duration elapsed{};
};

/// CSV number formatting: integers (count/boolean features) without a decimal
/// point, reals fixed to 6 decimals with trailing zeros removed.
inline std::string format_value(double v, ValueKind kind)
{
    if (kind != ValueKind::real) {
        const auto n = static_cast<long long>(std::llround(v));
        return std::to_string(n);
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
    std::string s(buf, res.ptr);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0')
            s.pop_back();
        if (s.back() == '.')
            s.pop_back();
    }
    if (s == "-0")
        s = "0";
    return s;
}

/// RFC 4180 field quoting.
inline std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

/// Writes the dataset header and rows. Shared by emit_csv and the corpus runner.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, const Selection& selection, bool with_label)
        : out_(out), defs_(selection.defs()), with_label_(with_label)
    {
        out_ << "email_id";
        for (const auto* d : defs_)
            out_ << ',' << d->id;
        if (with_label_)
            out_ << ",label";
        out_ << '\n';
    }

    void write(const FeatureVector& row)
    {
        out_ << csv_field(row.email_id);
        for (std::size_t i = 0; i < defs_.size(); ++i)
            out_ << ',' << format_value(i < row.values.size() ? row.values[i].second : 0.0, defs_[i]->value_kind);
        if (with_label_)
            out_ << ',' << csv_field(row.label.value_or(""));
        out_ << '\n';
    }

private:
    std::ostream& out_;
    std::vector<const FeatureDef*> defs_;
    bool with_label_;
};

inline void emit_csv(const std::vector<FeatureVector>& rows, const Selection& selection, const fs::path& path)
{
    std::error_code ec;
    if (path.has_parent_path())
        fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw OutputNotWritable("cannot write " + path.string());
    const bool with_label = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.label.has_value(); });
    CsvWriter writer(out, selection, with_label);
    for (const auto& r : rows)
        writer.write(r);
    out.flush();
    if (!out)
        throw OutputNotWritable("write failed: " + path.string());
}

/// Builds the shared extraction context from the config's override files.
inline ExtractionContext load_context(const CorpusRunConfig& cfg)
{
    ExtractionContext ctx;
    if (cfg.spam_words)
        ctx.lexicons.spam_words = load_lexicon("spam-words", *cfg.spam_words);
    if (cfg.function_words)
        ctx.lexicons.function_words = load_lexicon("function-words", *cfg.function_words);
    if (cfg.stopwords)
        ctx.lexicons.stopwords = load_lexicon("stopwords", *cfg.stopwords);
    if (cfg.domains)
        ctx.domains.merge(read_text_file(*cfg.domains));
    return ctx;
}

namespace detail {

struct EmailOutcome {
    std::optional<FeatureValues> values;
    RunError error;
};

inline std::optional<std::string> label_for(const std::string& email_id, LabelMode mode)
{
    if (mode == LabelMode::none)
        return std::nullopt;
    const auto slash = email_id.find('/');
    return slash == std::string::npos ? std::string() : email_id.substr(0, slash);
}

inline void dump_parts(const fs::path& dir, const std::string& email_id, const EmailParts& parts)
{
    std::string flat = email_id;
    std::replace(flat.begin(), flat.end(), '/', '_');
    std::ofstream out(dir / (flat + ".parts.txt"), std::ios::binary | std::ios::trunc);
    auto addrs = [](const std::vector<Address>& list) {
        std::string s;
        for (const auto& a : list) {
            if (!s.empty())
                s += ", ";
            s += a.display_name.empty() ? a.addr_spec : a.display_name + " <" + a.addr_spec + ">";
        }
        return s;
    };
    out << "From: " << addrs(parts.from_addr) << '\n'
        << "To: " << addrs(parts.to_addrs) << '\n'
        << "CC: " << addrs(parts.cc_addrs) << '\n'
        << "BCC: " << addrs(parts.bcc_addrs) << '\n'
        << "Subject: " << parts.subject << '\n'
        << "--- text body ---\n" << parts.text_body << '\n'
        << "--- html body ---\n" << parts.html_body << '\n';
}

inline EmailOutcome process_email(const CorpusRunConfig& cfg, const fs::path& rel, const Selection& selection,
                                  const ExtractionContext& ctx)
{
    EmailOutcome outcome;
    const std::string id = rel.generic_string();
    std::ifstream in(cfg.corpus_dir / rel, std::ios::binary);
    if (!in) {
        outcome.error = {id, "ReadError", "cannot open file"};
        return outcome;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        const auto email = parse_eml(RawMessage{cfg.corpus_dir / rel, ss.str()});
        if (cfg.dump_parts_dir)
            dump_parts(*cfg.dump_parts_dir, id, email.parts);
        outcome.values = extract_features(email, selection, ctx);
    } catch (const MalformedMessage& e) {
        outcome.error = {id, "MalformedMessage", e.what()};
    } catch (const std::exception& e) {
        outcome.error = {id, "ExtractionError", e.what()};
    }
    return outcome;
}

inline std::string error_line(const RunError& e)
{
    std::string msg = e.message;
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::replace(msg.begin(), msg.end(), '\t', ' ');
    return e.email_id + '\t' + e.kind + '\t' + msg + '\n';
}

} // namespace detail

inline fs::path default_output_dir(const fs::path& corpus_dir) { return corpus_dir / "mailfeat_out"; }

/// Runs the whole pipeline. Rows are written in scan order regardless of
/// worker completion order, so output is independent of worker_count.
inline RunReport run_extraction(CorpusRunConfig cfg)
{
    const auto started = std::chrono::steady_clock::now();
    const Selection selection = resolve_selection(cfg.selection);
    const ExtractionContext ctx = load_context(cfg);
    const auto files = scan_corpus(cfg.corpus_dir);

    if (cfg.output_csv.empty())
        cfg.output_csv = default_output_dir(cfg.corpus_dir) / "features.csv";
    if (cfg.error_file.empty())
        cfg.error_file = default_output_dir(cfg.corpus_dir) / "errors.log";
    std::error_code ec;
    for (const auto* p : {&cfg.output_csv, &cfg.error_file})
        if (p->has_parent_path())
            fs::create_directories(p->parent_path(), ec);
    if (cfg.dump_parts_dir)
        fs::create_directories(*cfg.dump_parts_dir, ec);
    std::ofstream csv(cfg.output_csv, std::ios::binary | std::ios::trunc);
    if (!csv)
        throw OutputNotWritable("cannot write " + cfg.output_csv.string());
    std::ofstream errors(cfg.error_file, std::ios::binary | std::ios::trunc);
    if (!errors)
        throw OutputNotWritable("cannot write " + cfg.error_file.string());

    const bool with_label = cfg.label_mode == LabelMode::from_subdir;
    CsvWriter writer(csv, selection, with_label);

    const std::size_t n = files.size();
    std::vector<std::optional<detail::EmailOutcome>> slots(n);
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            auto outcome = detail::process_email(cfg, files[i], selection, ctx);
            {
                std::lock_guard lock(mutex);
                slots[i] = std::move(outcome);
            }
            ready.notify_all();
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.worker_count, static_cast<unsigned>(n)));
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(worker);

    RunReport report;
    report.total_emails = n;
    for (std::size_t i = 0; i < n; ++i) {
        detail::EmailOutcome outcome;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return slots[i].has_value(); });
            outcome = std::move(*slots[i]);
            slots[i].reset();
        }
        const std::string id = files[i].generic_string();
        if (outcome.values) {
            ++report.succeeded;
            writer.write(make_feature_vector(id, *outcome.values, selection, detail::label_for(id, cfg.label_mode)));
        } else {
            ++report.failed;
            errors << detail::error_line(outcome.error);
            if (cfg.on_error == ErrorPolicy::zero_row)
                writer.write(make_feature_vector(id, FeatureValues{}, selection, detail::label_for(id, cfg.label_mode)));
            report.errors.push_back(std::move(outcome.error));
        }
        if (cfg.status)
            *cfg.status << (i + 1) << '/' << n << " processed\n";
    }
    pool.clear();

    csv.flush();
    errors.flush();
    if (!csv || !errors)
        throw OutputNotWritable("write failed");
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

} // namespace mailfeat
