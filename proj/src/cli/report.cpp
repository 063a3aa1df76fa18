#include "gwa/cli/report.hpp"

#include "json.hpp"

#include <sstream>

namespace gwa::cli {

using json = nlohmann::ordered_json;

namespace {

json entry_json(const CheckEntry& e)
{
    return json{{"id", e.id},
                {"statement", e.statement},
                {"holds", e.holds},
                {"expected", e.expected},
                {"residual", e.residual}};
}

json section_json(const Section& s)
{
    json entries = json::array();
    for (const auto& e : s.body.entries) {
        entries.push_back(entry_json(e));
    }
    return json{{"check", s.check},
                {"mode", s.mode},
                {"status", s.status},
                {"name", s.body.name},
                {"evidences", s.body.evidences},
                {"entries", entries},
                {"notes", s.body.notes},
                {"witness", s.body.witness},
                {"error", s.body.error},
                {"timing_us", s.timing_us}};
}

json to_json(const Report& r)
{
    json sections = json::array();
    for (const auto& s : r.sections) {
        sections.push_back(section_json(s));
    }
    json rewrites = json::array();
    for (const auto& w : r.rewrites) {
        rewrites.push_back(json{{"mode", w.mode}, {"input", w.input}, {"normal_form", w.normal_form}});
    }
    return json{{"schema", r.schema},
                {"command", r.command},
                {"job",
                 {{"source", r.job.source},
                  {"mode", r.job.mode},
                  {"checks", r.job.checks},
                  {"degree_bound", r.job.degree_bound},
                  {"corrupt_beta", r.job.corrupt_beta}}},
                {"matrix",
                 {{"entries", r.matrix.entries},
                  {"d", r.matrix.d},
                  {"rank", r.matrix.rank},
                  {"corank", r.matrix.corank},
                  {"quasi_inverse", r.matrix.q},
                  {"g", r.matrix.g},
                  {"m", r.matrix.m},
                  {"torus_complement", r.matrix.complement}}},
                {"sections", sections},
                {"rewrites", rewrites},
                {"passed", r.passed}};
}

}  // namespace

std::string emit_structured(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string canonical_structured(const Report& r)
{
    Report copy = r;
    for (auto& s : copy.sections) {
        s.timing_us = 0;
    }
    return emit_structured(copy);
}

Report parse_structured(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("report: ") + e.what());
    }
    try {
        Report r;
        r.schema = j.at("schema").get<std::string>();
        if (r.schema != kSchema) {
            throw std::invalid_argument("report: unsupported schema '" + r.schema + "', expected " + kSchema);
        }
        r.command = j.at("command").get<std::string>();
        const auto& job = j.at("job");
        r.job.source = job.at("source").get<std::string>();
        r.job.mode = job.at("mode").get<std::string>();
        r.job.checks = job.at("checks").get<std::vector<std::string>>();
        r.job.degree_bound = job.at("degree_bound").get<int>();
        r.job.corrupt_beta = job.at("corrupt_beta").get<bool>();
        const auto& m = j.at("matrix");
        r.matrix.entries = m.at("entries").get<std::vector<std::vector<int>>>();
        r.matrix.d = m.at("d").get<std::vector<int>>();
        r.matrix.rank = m.at("rank").get<int>();
        r.matrix.corank = m.at("corank").get<int>();
        r.matrix.q = m.at("quasi_inverse").get<std::vector<std::vector<std::string>>>();
        r.matrix.g = m.at("g").get<std::vector<std::string>>();
        r.matrix.m = m.at("m").get<std::vector<std::vector<int>>>();
        r.matrix.complement = m.at("torus_complement").get<std::vector<std::vector<int>>>();
        for (const auto& s : j.at("sections")) {
            Section sec;
            sec.check = s.at("check").get<std::string>();
            sec.mode = s.at("mode").get<std::string>();
            sec.status = s.at("status").get<std::string>();
            sec.body.name = s.at("name").get<std::string>();
            sec.body.evidences = s.at("evidences").get<std::string>();
            for (const auto& e : s.at("entries")) {
                sec.body.entries.push_back({e.at("id").get<std::string>(), e.at("statement").get<std::string>(),
                                            e.at("residual").get<std::string>(), e.at("holds").get<bool>(),
                                            e.at("expected").get<bool>()});
            }
            sec.body.notes = s.at("notes").get<std::vector<std::string>>();
            sec.body.witness = s.at("witness").get<std::vector<std::string>>();
            sec.body.error = s.at("error").get<std::string>();
            sec.timing_us = s.at("timing_us").get<std::int64_t>();
            r.sections.push_back(std::move(sec));
        }
        for (const auto& w : j.at("rewrites")) {
            r.rewrites.push_back({w.at("mode").get<std::string>(), w.at("input").get<std::string>(),
                                  w.at("normal_form").get<std::string>()});
        }
        r.passed = j.at("passed").get<bool>();
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("report: ") + e.what());
    }
}

namespace {

std::string join_ints(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? " " : "") + std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::string emit_text(const Report& r, bool verbose)
{
    std::ostringstream out;
    out << "gwa " << r.command << "  " << r.job.source << "  mode " << r.job.mode << "\n";
    out << "C =";
    for (std::size_t i = 0; i < r.matrix.entries.size(); ++i) {
        out << (i ? "; " : " ") << join_ints(r.matrix.entries[i]);
    }
    out << "\nd = (" << join_ints(r.matrix.d) << ")  rank " << r.matrix.rank << "  corank " << r.matrix.corank << "\n";
    out << "Q =";
    for (std::size_t i = 0; i < r.matrix.q.size(); ++i) {
        out << (i ? "; " : " ");
        for (std::size_t k = 0; k < r.matrix.q[i].size(); ++k) {
            out << (k ? " " : "") << r.matrix.q[i][k];
        }
    }
    out << "\ng =";
    for (const auto& g : r.matrix.g) {
        out << " " << g;
    }
    out << "\n";
    for (std::size_t i = 0; i < r.matrix.m.size(); ++i) {
        out << "m" << i + 1 << " = (" << join_ints(r.matrix.m[i]) << ")\n";
    }
    for (std::size_t k = 0; k < r.matrix.complement.size(); ++k) {
        out << "u" << k + 1 << " = (" << join_ints(r.matrix.complement[k]) << ")\n";
    }

    int failed = 0;
    int counted = 0;
    for (const auto& s : r.sections) {
        std::string tag = s.status == "pass" ? "PASS" : s.status == "fail" ? "FAIL" : "SKIP";
        if (s.status != "skipped") {
            ++counted;
            failed += s.status == "fail";
        }
        std::size_t ok = 0;
        for (const auto& e : s.body.entries) {
            ok += e.ok();
        }
        out << "\n[" << tag << "] " << s.check << "/" << s.mode << "  " << s.body.name;
        if (!s.body.entries.empty()) {
            out << "  (" << ok << "/" << s.body.entries.size() << " entries)";
        }
        out << "  " << (s.timing_us + 500) / 1000 << " ms\n";
        if (!s.body.evidences.empty()) {
            out << "  evidences: " << s.body.evidences << "\n";
        }
        if (!s.body.error.empty()) {
            out << "  error: " << s.body.error << "\n";
        }
        for (const auto& e : s.body.entries) {
            if (!e.ok() || verbose) {
                out << "  " << (e.ok() ? "ok  " : "BAD ") << e.id << ": " << e.statement;
                if (!e.expected) {
                    out << "  [expected to fail]";
                }
                out << "\n      residual " << e.residual << "\n";
            }
        }
        for (const auto& n : s.body.notes) {
            out << "  note: " << n << "\n";
        }
        for (const auto& w : s.body.witness) {
            out << "  witness: " << w << "\n";
        }
    }
    for (const auto& w : r.rewrites) {
        out << "\n" << w.mode << ": " << w.input << " -> " << w.normal_form << "\n";
    }
    if (counted > 0) {
        out << "\n" << (r.passed ? "PASS" : "FAIL") << "  " << counted - failed << "/" << counted << " sections passed\n";
    }
    return out.str();
}

}  // namespace gwa::cli
