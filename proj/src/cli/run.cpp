#include "gwa/cli/job.hpp"

#include "gwa/biproduct/rewrite.hpp"
#include "gwa/morphisms/morphisms.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>

namespace gwa::cli {

const std::vector<std::string>& all_checks()
{
    static const std::vector<std::string> names{"datum",          "borel-upper",  "borel-lower",
                                                "weyl-embedding", "quantum-weyl", "biproduct"};
    return names;
}

void JobSpec::validate() const
{
    if (command != "analyze" && command != "verify" && command != "rewrite") {
        throw std::invalid_argument("unknown command '" + command + "'");
    }
    if (mode != "classical" && mode != "quantum" && mode != "both") {
        throw std::invalid_argument("--mode must be classical, quantum or both");
    }
    if (format != "text" && format != "structured") {
        throw std::invalid_argument("--format must be text or structured");
    }
    if (matrix.empty()) {
        throw std::invalid_argument("no matrix given (use --matrix or --catalog)");
    }
    if (command == "verify") {
        if (checks.empty()) {
            throw std::invalid_argument("--checks selects nothing");
        }
        for (const auto& c : checks) {
            if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end()) {
                throw std::invalid_argument("unknown check '" + c + "'");
            }
        }
        const bool biproduct = std::find(checks.begin(), checks.end(), "biproduct") != checks.end();
        if (biproduct && degree_bound < 2) {
            throw std::invalid_argument("--degree-bound must be at least 2 when biproduct is selected");
        }
    }
    if (command == "rewrite") {
        if (degree_bound < 2) {
            throw std::invalid_argument("--degree-bound must be at least 2");
        }
        if (word.empty()) {
            throw std::invalid_argument("rewrite needs --word");
        }
    }
}

MatrixInput load_matrix(const JobSpec& job)
{
    switch (job.source) {
    case JobSpec::Source::Catalog:
        return {validate_gcm(catalog_matrix(job.matrix)), std::nullopt};
    case JobSpec::Source::Inline:
        return parse_matrix(job.matrix);
    case JobSpec::Source::File: {
        std::ifstream in(job.matrix);
        if (!in) {
            throw std::invalid_argument("cannot read matrix file '" + job.matrix + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_matrix_file(buf.str());
    }
    }
    throw std::logic_error("unreachable");
}

namespace {

MatrixEcho echo(const CartanMatrix& c, const CartanAux& aux)
{
    MatrixEcho m;
    for (int i = 0; i < c.n(); ++i) {
        std::vector<int> row;
        for (int j = 0; j < c.n(); ++j) {
            row.push_back(c(i, j));
        }
        m.entries.push_back(row);
    }
    m.d = aux.d;
    m.rank = aux.rank;
    m.corank = aux.corank;
    for (Eigen::Index i = 0; i < aux.Q.rows(); ++i) {
        std::vector<std::string> row;
        for (Eigen::Index j = 0; j < aux.Q.cols(); ++j) {
            row.push_back(to_string(aux.Q(i, j)));
        }
        m.q.push_back(row);
    }
    for (const auto& g : aux.g) {
        m.g.push_back(to_string(g));
    }
    for (const auto& p : aux.dual_pairs) {
        m.m.emplace_back(p.m.data(), p.m.data() + p.m.size());
    }
    for (const auto& u : aux.torus_complement) {
        m.complement.emplace_back(u.data(), u.data() + u.size());
    }
    return m;
}

void absorb(CheckSection& into, const CheckSection& from)
{
    into.entries.insert(into.entries.end(), from.entries.begin(), from.entries.end());
    into.notes.insert(into.notes.end(), from.notes.begin(), from.notes.end());
    into.witness.insert(into.witness.end(), from.witness.begin(), from.witness.end());
}

struct Inputs {
    CartanMatrix c;
    CartanAux aux;
    int degree_bound = 4;
    bool corrupt_beta = false;
};

ClassicalDatum classical_datum(const Inputs& in)
{
    auto cd = build_classical_datum(in.c, in.aux);
    if (in.corrupt_beta) {
        cd = with_beta(cd, std::vector<HPoly>(cd.beta.size(), HPoly(static_cast<std::size_t>(in.c.n()))));
    }
    return cd;
}

CheckSection datum_classical(const Inputs& in)
{
    const auto cd = classical_datum(in);
    auto s = check_bound_classical(cd);
    s.name = "canonical Cartan datum";
    const auto fr = check_full_rank(cd);
    s.add("full-rank", "D_i(b_i) are algebraically independent (Jacobian determinant nonzero)", fr.independent,
          to_string(fr.jacobian_det, cd.context->names()));
    s.notes.push_back("birational generation of the coefficient ring: " + fr.birational);
    if (in.corrupt_beta) {
        s.notes.push_back("beta forced to 0 (--corrupt-beta)");
    }
    return s;
}

CheckSection datum_quantum(const Inputs& in)
{
    auto s = check_bound_quantum(build_quantum_datum(in.c, in.aux));
    s.name = "quantum datum";
    return s;
}

CheckSection borel_classical(const Inputs& in, bool upper)
{
    const auto cd = classical_datum(in);
    const auto a = upper ? borel_upper_assignment(in.c, cd) : borel_lower_assignment(in.c, cd);
    auto s = verify(a, std::optional(classical_witness_basis(cd)));
    s.name = upper ? "upper Borel half into the Weyl-type algebra" : "lower Borel half into the Weyl-type algebra";
    s.evidences = "birational equivalence of the classical Borel subalgebra with a generalized Weyl algebra";
    return s;
}

CheckSection borel_quantum(const Inputs& in, bool upper)
{
    const auto qd = build_quantum_datum(in.c, in.aux);
    const auto o = fix_orientation(in.c, qd, upper);
    const auto signs = o.signs.empty() ? std::vector<int>(static_cast<std::size_t>(in.c.n()), upper ? 1 : -1) : o.signs;
    const auto a = quantum_borel_assignment(in.c, qd, upper, signs);
    auto s = verify(a, std::optional(quantum_witness_basis()));
    s.name = upper ? "upper quantum Borel half into the quantum torus" : "lower quantum Borel half into the quantum torus";
    s.evidences = "birational equivalence of the quantum Borel subalgebra with a quantum Weyl-type algebra";
    s.notes.insert(s.notes.end(), o.notes.begin(), o.notes.end());
    absorb(s, check_localized(in.c, qd, a, upper));
    return s;
}

CheckSection weyl_classical(const Inputs& in)
{
    const auto cd = classical_datum(in);
    auto s = verify(weyl_assignment(cd, in.aux), std::optional(classical_witness_basis(cd)));
    s.name = "Weyl algebra generators in the skew Laurent model";
    s.evidences = "embedding of the Weyl algebra with the alternate basis alpha_i";
    return s;
}

CheckSection qweyl(const Inputs& in)
{
    const auto qd = build_quantum_datum(in.c, in.aux);
    auto s = check_omega(qd);
    absorb(s, verify(quantum_weyl_assignment(qd), std::optional(quantum_witness_basis())));
    s.name = "quantum Weyl algebra from the omega weights";
    s.evidences = "rational quantum Weyl algebra inside the quantum torus";
    return s;
}

template <class S>
CheckSection biproduct_common(const RewriteSystem<S>& raw, int bound, CheckSection mixed, const std::string& label)
{
    const auto raw_rep = check_local_confluence(raw, bound);
    const auto done = complete(raw, bound);
    auto s = confluence_section(check_local_confluence(done.system, bound), label);
    s.name = "merged Borel halves by rewriting (" + label + ")";
    s.evidences = "the merged product of the two Borel halves has a PBW basis (bounded check)";
    s.notes.insert(s.notes.begin(), "order: " + raw.order_descriptor() + "; " + std::to_string(raw.rules().size()) +
                                        " rules before completion");
    s.notes.push_back("before completion: " + std::to_string(raw_rep.ambiguities.size()) + " ambiguities, " +
                      std::to_string(raw_rep.unresolved()) + " unresolved");
    for (const auto& a : raw_rep.ambiguities) {
        if (!a.resolved) {
            s.notes.push_back("unresolved before completion: " + a.word + " [" + a.rule_a + " / " + a.rule_b + "]");
        }
    }
    s.notes.push_back("completion added " + std::to_string(done.added.size()) + " rules in " +
                      std::to_string(done.rounds) + " rounds" + (done.converged ? "" : " (round limit reached)"));
    for (const auto& a : done.added) {
        s.notes.push_back("added " + a);
    }
    absorb(s, mixed);
    const auto oi = order_independence(done.system, 100, std::min(bound, 4), 0x5eedULL);
    s.add("order-independence", "leftmost and rightmost reduction agree on 100 random inputs", oi.disagreements == 0,
          oi.disagreements == 0 ? "0" : std::to_string(oi.disagreements) + " mismatches, e.g. " + oi.first_mismatch);
    if (raw.alphabet().n == 1) {
        const auto census = pbw_census(done.system, std::max(bound, 2));
        s.add("pbw-census", "normal words of length <= " + std::to_string(std::max(bound, 2)) +
                                " are exactly the ordered monomials",
              census.matches, census.matches ? "0" : "census differs");
    }
    return s;
}

CheckSection biproduct_classical(const Inputs& in)
{
    auto rs = build_classical_rules(in.c);
    return biproduct_common(rs, in.degree_bound, mixed_relation_check(rs, in.c), "classical");
}

CheckSection biproduct_quantum(const Inputs& in)
{
    auto rs = build_quantum_rules(in.c, in.aux.d);
    return biproduct_common(rs, in.degree_bound, mixed_relation_check(rs, in.c, in.aux.d), "quantum");
}

using Pipeline = std::function<CheckSection(const Inputs&)>;

// nullptr: the check has no pipeline in this mode.
Pipeline pipeline_for(const std::string& check, const std::string& mode)
{
    const bool classical = mode == "classical";
    if (check == "datum") {
        return classical ? Pipeline(datum_classical) : Pipeline(datum_quantum);
    }
    if (check == "borel-upper" || check == "borel-lower") {
        const bool upper = check == "borel-upper";
        if (classical) {
            return [upper](const Inputs& in) { return borel_classical(in, upper); };
        }
        return [upper](const Inputs& in) { return borel_quantum(in, upper); };
    }
    if (check == "weyl-embedding") {
        return classical ? Pipeline(weyl_classical) : nullptr;
    }
    if (check == "quantum-weyl") {
        return classical ? nullptr : Pipeline(qweyl);
    }
    if (check == "biproduct") {
        return classical ? Pipeline(biproduct_classical) : Pipeline(biproduct_quantum);
    }
    throw std::invalid_argument("unknown check '" + check + "'");
}

std::vector<std::string> modes_of(const std::string& mode)
{
    if (mode == "both") {
        return {"classical", "quantum"};
    }
    return {mode};
}

}  // namespace

Report run(const JobSpec& job)
{
    job.validate();
    const auto input = load_matrix(job);
    Inputs in{input.matrix, analyze(input.matrix, input.d), job.degree_bound, job.corrupt_beta};

    Report r;
    r.command = job.command;
    r.job.source = job.source == JobSpec::Source::Catalog ? "catalog:" + job.matrix
                   : job.source == JobSpec::Source::File  ? job.matrix
                                                          : "inline";
    r.job.mode = job.mode;
    r.job.degree_bound = job.degree_bound;
    r.job.corrupt_beta = job.corrupt_beta;
    r.matrix = echo(in.c, in.aux);

    if (job.command == "analyze") {
        return r;
    }
    if (job.command == "rewrite") {
        for (const auto& mode : modes_of(job.mode)) {
            RewriteOutput out;
            out.mode = mode;
            if (mode == "classical") {
                const auto rs = complete(build_classical_rules(in.c), job.degree_bound).system;
                const auto w = rs.alphabet().parse(job.word);
                out.input = word_to_string(w, rs.alphabet().names());
                out.normal_form = rs.show(rs.normal_form(NCPoly<Rational>::word(w)));
            } else {
                const auto rs = complete(build_quantum_rules(in.c, in.aux.d), job.degree_bound).system;
                const auto w = rs.alphabet().parse(job.word);
                out.input = word_to_string(w, rs.alphabet().names());
                out.normal_form = rs.show(rs.normal_form(NCPoly<QScalar>::word(w)));
            }
            r.rewrites.push_back(out);
        }
        return r;
    }

    // verify: canonical order, independent sections run concurrently.
    for (const auto& c : all_checks()) {
        if (std::find(job.checks.begin(), job.checks.end(), c) != job.checks.end()) {
            r.job.checks.push_back(c);
        }
    }
    struct Pending {
        Section section;
        std::future<std::pair<CheckSection, std::int64_t>> result;
    };
    std::vector<Pending> pending;
    for (const auto& check : r.job.checks) {
        for (const auto& mode : modes_of(job.mode)) {
            Pending p;
            p.section.check = check;
            p.section.mode = mode;
            auto fn = pipeline_for(check, mode);
            if (!fn) {
                p.section.status = "skipped";
                p.section.body.name = check + " has no " + mode + " pipeline";
                pending.push_back(std::move(p));
                continue;
            }
            p.result = std::async(std::launch::async, [fn, &in] {
                const auto t0 = std::chrono::steady_clock::now();
                CheckSection s;
                try {
                    s = fn(in);
                } catch (const std::exception& e) {
                    s.error = e.what();
                }
                const auto us =
                    std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
                return std::make_pair(std::move(s), static_cast<std::int64_t>(us));
            });
            pending.push_back(std::move(p));
        }
    }
    for (auto& p : pending) {
        if (p.result.valid()) {
            auto [body, us] = p.result.get();
            p.section.body = std::move(body);
            p.section.timing_us = us;
            p.section.status = p.section.body.passed() ? "pass" : "fail";
        }
        r.passed = r.passed && p.section.status != "fail";
        r.sections.push_back(std::move(p.section));
    }
    return r;
}

}  // namespace gwa::cli
