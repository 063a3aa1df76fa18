// gwa: Cartan data, Borel-half embeddings and rewriting checks from the shell.
//
//   gwa analyze --catalog B2
//   gwa verify --matrix "2 -1; -1 2" --mode classical --checks datum,weyl-embedding
//   gwa rewrite --catalog A1 --mode quantum --word "F1 E1"
//
// Exit status: 0 when every selected check passes, 1 when one fails, 2 on
// bad input.

#include "CLI11.hpp"
#include "gwa/cli/job.hpp"

#include <filesystem>
#include <iostream>

namespace {

void add_common(CLI::App* sub, gwa::cli::JobSpec& job, std::string& matrix, std::string& catalog)
{
    auto* m = sub->add_option("--matrix", matrix, "inline rows (\"2 -1; -1 2\") or a matrix file");
    auto* c = sub->add_option("--catalog", catalog, "built-in matrix: A1 A2 A1xA1 A3 B2 G2 A1_1");
    m->excludes(c);
    sub->add_option("--mode", job.mode, "classical, quantum or both")
        ->check(CLI::IsMember({"classical", "quantum", "both"}))
        ->capture_default_str();
    sub->add_option("--format", job.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    sub->add_option("--degree-bound", job.degree_bound, "overlap degree bound for rewriting")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"generalized Weyl algebra checks for Kac-Moody Borel halves"};
    app.require_subcommand(1);
    gwa::cli::JobSpec job;
    std::string matrix;
    std::string catalog;
    std::string checks;
    bool verbose = false;

    auto* analyze = app.add_subcommand("analyze", "Cartan data only");
    add_common(analyze, job, matrix, catalog);

    auto* verify = app.add_subcommand("verify", "run the selected checks");
    add_common(verify, job, matrix, catalog);
    verify->add_option("--checks", checks,
                       "comma list of datum, borel-upper, borel-lower, weyl-embedding, quantum-weyl, biproduct "
                       "(default: all)");
    verify->add_flag("--verbose,-v", verbose, "list passing entries too");
    verify->add_flag("--corrupt-beta", job.corrupt_beta)->group("");

    auto* rewrite = app.add_subcommand("rewrite", "normal form of one word");
    add_common(rewrite, job, matrix, catalog);
    rewrite->add_option("--word", job.word, "e.g. \"F1 E1\" or \"K1^-1*E2\"")->required();

    CLI11_PARSE(app, argc, argv);

    job.command = app.get_subcommands().front()->get_name();
    if (!catalog.empty()) {
        job.source = gwa::cli::JobSpec::Source::Catalog;
        job.matrix = catalog;
    } else {
        job.matrix = matrix;
        std::error_code ec;
        job.source = !matrix.empty() && std::filesystem::is_regular_file(matrix, ec) ? gwa::cli::JobSpec::Source::File
                                                                                     : gwa::cli::JobSpec::Source::Inline;
    }
    if (!checks.empty()) {
        job.checks.clear();
        std::string item;
        for (char ch : checks + ",") {
            if (ch == ',') {
                if (!item.empty()) {
                    job.checks.push_back(item);
                }
                item.clear();
            } else if (ch != ' ') {
                item += ch;
            }
        }
    }

    try {
        const auto report = gwa::cli::run(job);
        std::cout << (job.format == "structured" ? gwa::cli::emit_structured(report)
                                                 : gwa::cli::emit_text(report, verbose));
        return gwa::cli::exit_status(report);
    } catch (const std::exception& e) {
        std::cerr << "gwa: " << e.what() << "\n";
        return 2;
    }
}
