#pragma once

#include "gwa/cli/matrix_input.hpp"
#include "gwa/cli/report.hpp"

#include <string>
#include <vector>

namespace gwa::cli {

/// Canonical check order; reports list sections in this order.
const std::vector<std::string>& all_checks();

struct JobSpec {
    enum class Source { Catalog, Inline, File };

    std::string command = "verify";  // analyze | verify | rewrite
    Source source = Source::Catalog;
    std::string matrix;  // catalog name, inline text, or file path
    std::string mode = "both";
    std::vector<std::string> checks = all_checks();
    int degree_bound = 4;
    std::string format = "text";
    bool corrupt_beta = false;
    std::string word;  // rewrite input

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Reads and validates the matrix named by the job.
MatrixInput load_matrix(const JobSpec& job);

/// Runs the selected pipelines. Engine failures become failed sections;
/// input errors (InputError, CartanError) propagate.
Report run(const JobSpec& job);

inline int exit_status(const Report& r) { return r.passed ? 0 : 1; }

}  // namespace gwa::cli
