#pragma once

// The run report and its two renderings. The structured form is versioned
// ("gwa-report/1"), keeps a fixed field order, and round-trips exactly; see
// docs/report-schema.md.

#include "gwa/check.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gwa::cli {

inline constexpr const char* kSchema = "gwa-report/1";

struct JobEcho {
    std::string source;  // "catalog:A2", "inline", or a file path
    std::string mode;    // classical | quantum | both
    std::vector<std::string> checks;
    int degree_bound = 4;
    bool corrupt_beta = false;
    bool operator==(const JobEcho&) const = default;
};

struct MatrixEcho {
    std::vector<std::vector<int>> entries;
    std::vector<int> d;
    int rank = 0;
    int corank = 0;
    std::vector<std::vector<std::string>> q;  // quasi-inverse, exact rationals
    std::vector<std::string> g;
    std::vector<std::vector<int>> m;          // torus directions m_i
    std::vector<std::vector<int>> complement;  // torus complement u_k
    bool operator==(const MatrixEcho&) const = default;
};

struct Section {
    std::string check;   // datum, borel-upper, ...
    std::string mode;    // classical | quantum
    std::string status;  // pass | fail | skipped
    CheckSection body;
    std::int64_t timing_us = 0;
    bool operator==(const Section&) const = default;
};

struct RewriteOutput {
    std::string mode;
    std::string input;
    std::string normal_form;
    bool operator==(const RewriteOutput&) const = default;
};

struct Report {
    std::string schema = kSchema;
    std::string command;  // analyze | verify | rewrite
    JobEcho job;
    MatrixEcho matrix;
    std::vector<Section> sections;
    std::vector<RewriteOutput> rewrites;
    bool passed = true;
    bool operator==(const Report&) const = default;
};

/// Pretty-printed JSON document.
std::string emit_structured(const Report& r);
/// Inverse of emit_structured; throws std::invalid_argument on schema mismatch
/// or malformed input.
Report parse_structured(const std::string& text);
/// The structured form with every timing zeroed (for determinism checks).
std::string canonical_structured(const Report& r);

std::string emit_text(const Report& r, bool verbose = false);

}  // namespace gwa::cli
