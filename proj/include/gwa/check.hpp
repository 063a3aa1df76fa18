#pragma once

#include <string>
#include <vector>

namespace gwa {

// One evaluated condition. `holds` is the mathematical outcome (residual is
// exactly zero); `expected` is what the construction predicts. Documented
// discrepancies are entries with expected == false.
struct CheckEntry {
    std::string id;
    std::string statement;
    std::string residual = "0";
    bool holds = true;
    bool expected = true;

    bool ok() const { return holds == expected; }
    bool operator==(const CheckEntry&) const = default;
};

struct CheckSection {
    std::string name;
    std::string evidences;  // the result this section substantiates
    std::vector<CheckEntry> entries;
    std::vector<std::string> notes;
    std::vector<std::string> witness;  // denominators or other certificates
    std::string error;                 // non-empty if the pipeline threw

    bool passed() const
    {
        if (!error.empty()) {
            return false;
        }
        for (const auto& e : entries) {
            if (!e.ok()) {
                return false;
            }
        }
        return true;
    }

    void add(std::string id, std::string statement, bool holds, std::string residual = "0", bool expected = true)
    {
        entries.push_back({std::move(id), std::move(statement), std::move(residual), holds, expected});
    }

    bool operator==(const CheckSection&) const = default;
};

}  // namespace gwa
