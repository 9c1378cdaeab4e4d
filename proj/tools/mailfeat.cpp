// mailfeat: build a feature dataset from a folder of .eml files.
//
//   mailfeat extract --corpus <dir> [--features H01,Body,...] [--out <csv>] ...
//   mailfeat catalog [--json | --markdown]
//
// Exit codes: 0 success (per-email failures included), 1 configuration
// error, 2 corpus error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <mailfeat/catalog_export.hpp>
#include <mailfeat/mailfeat.hpp>

namespace {

constexpr int exit_config = 1;
constexpr int exit_corpus = 2;

int run_catalog(bool json, bool markdown)
{
    if (json) {
        std::cout << mailfeat::catalog_to_json().dump(2) << '\n';
    } else if (markdown) {
        std::cout << mailfeat::catalog_markdown();
    } else {
        for (const auto& d : mailfeat::full_catalog().defs())
            std::cout << d.id << '\t' << mailfeat::group_name(d.group) << '\t'
                      << mailfeat::value_kind_name(d.value_kind) << '\t' << d.name << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Email corpus feature extraction"};
    app.require_subcommand(1);

    mailfeat::CorpusRunConfig cfg;
    std::string features;
    std::string on_error = "skip";
    std::string out_path, err_path, dump_dir;
    std::string spam, function_words, stopwords, domains;
    bool label_from_dir = false;
    bool quiet = false;

    auto* extract = app.add_subcommand("extract", "Extract features from every .eml file under a corpus folder");
    extract->add_option("--corpus", cfg.corpus_dir, "Corpus folder (scanned recursively)")->required();
    extract->add_option("--features", features, "Comma-separated groups and/or feature IDs (default: all)");
    extract->add_option("--out", out_path, "Output CSV (default: <corpus>/mailfeat_out/features.csv)");
    extract->add_option("--errors", err_path, "Error log (default: <corpus>/mailfeat_out/errors.log)");
    extract->add_flag("--label-from-dir", label_from_dir, "Add a label column from the first sub-folder name");
    extract->add_option("--spam-words", spam, "Spam word list file");
    extract->add_option("--function-words", function_words, "Function word list file");
    extract->add_option("--stopwords", stopwords, "Stopword list file");
    extract->add_option("--domains", domains, "Domain keyword table (key = [\"pattern\", ...])");
    extract->add_option("--workers", cfg.worker_count, "Worker threads")->check(CLI::PositiveNumber);
    extract->add_option("--on-error", on_error, "Failed emails: skip or zero-row")
        ->check(CLI::IsMember({"skip", "zero-row"}));
    extract->add_option("--dump-parts", dump_dir, "Debug: write each email's split parts into this folder");
    extract->add_flag("--quiet", quiet, "Suppress progress output");

    bool json = false;
    bool markdown = false;
    auto* catalog = app.add_subcommand("catalog", "Print the feature dictionary");
    auto* json_flag = catalog->add_flag("--json", json, "Machine-readable JSON");
    catalog->add_flag("--markdown", markdown, "Markdown table")->excludes(json_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    if (catalog->parsed())
        return run_catalog(json, markdown);

    cfg.selection = mailfeat::split_selectors(features);
    cfg.output_csv = out_path;
    cfg.error_file = err_path;
    cfg.label_mode = label_from_dir ? mailfeat::LabelMode::from_subdir : mailfeat::LabelMode::none;
    cfg.on_error = on_error == "zero-row" ? mailfeat::ErrorPolicy::zero_row : mailfeat::ErrorPolicy::skip;
    if (!spam.empty())
        cfg.spam_words = spam;
    if (!function_words.empty())
        cfg.function_words = function_words;
    if (!stopwords.empty())
        cfg.stopwords = stopwords;
    if (!domains.empty())
        cfg.domains = domains;
    if (!dump_dir.empty())
        cfg.dump_parts_dir = dump_dir;
    if (!quiet)
        cfg.status = &std::cerr;

    try {
        const auto report = mailfeat::run_extraction(cfg);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
        std::cerr << report.succeeded << " succeeded, " << report.failed << " failed, " << report.total_emails
                  << " total (" << ms << " ms)\n";
        return 0;
    } catch (const mailfeat::CorpusNotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_corpus;
    } catch (const mailfeat::EmptyCorpus& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_corpus;
    } catch (const std::exception& e) {
        // UnknownSelector, unreadable lexicon/domain files, unwritable outputs
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
}
