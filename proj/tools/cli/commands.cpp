// Copyright 2026 The qdt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qdt/axioms.hpp"
#include "qdt/classical.hpp"
#include "qdt/errors.hpp"
#include "qdt/games.hpp"
#include "qdt/gleason.hpp"
#include "qdt/hilbert.hpp"
#include "qdt/io.hpp"
#include "qdt/registry.hpp"

namespace qdt::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kAxiomsDefaultTol = 1e-9;
constexpr double kFitDefaultTol = 1e-6;
constexpr double kInsufficientReasonDefaultTol = 1e-12;
constexpr std::size_t kPivotalSamplesShown = 5;

std::string join_dims(const std::vector<std::size_t> &dims) {
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        s += (i ? "," : "") + std::to_string(dims[i]);
    }
    return s;
}

std::vector<std::size_t> dims_or(const RunConfig &c, std::vector<std::size_t> fallback) {
    return c.dims.empty() ? fallback : c.dims;
}

ojson complex_json(Complex z) { return ojson::array({jnum(z.real()), jnum(z.imag())}); }

ojson vector_json(const CVector &v) {
    ojson out = ojson::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_json(v(i)));
    }
    return out;
}

ojson basis_json(const OrthonormalBasis &b) {
    ojson out = ojson::array();
    for (const auto &v : b) {
        out.push_back(vector_json(v.amplitudes()));
    }
    return out;
}

ojson matrix_json(const CMatrix &m) {
    ojson out = ojson::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out.push_back(vector_json(m.row(r).transpose()));
    }
    return out;
}

ojson game_json(const QuantumGame &g) {
    ojson out;
    out["dim"] = g.dim();
    out["amplitudes"] = vector_json(g.amplitudes());
    ojson u = ojson::array();
    for (double x : g.utilities()) {
        u.push_back(jnum(x));
    }
    out["utilities"] = std::move(u);
    out["eigenvectors"] = basis_json(g.eigenbasis());
    return out;
}

ojson residual_json(const AxiomResidual &r) {
    ojson out;
    out["residual"] = jnum(r.residual);
    ojson params = ojson::object();
    for (const auto &[k, v] : r.parameters) {
        params[k] = jnum(v);
    }
    out["parameters"] = std::move(params);
    out["game"] = game_json(r.game);
    return out;
}

std::string vector_text(const CVector &v) {
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const Complex z = v(i);
        s += (i ? "; " : "") + num(z.real());
        if (z.imag() != 0.0) {
            s += (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
        }
    }
    return s + ")";
}

const FunctionalEntry &require_functional(const std::string &name) {
    const FunctionalEntry *entry = find_functional(name);
    if (entry == nullptr) {
        std::string known;
        for (const auto &e : functional_registry()) {
            known += (known.empty() ? "" : ", ") + e.name;
        }
        throw UsageError("unknown functional '" + name + "' (registered: " + known + ")");
    }
    return *entry;
}

std::string axiom_status(bool documented_pass, bool passed) {
    if (documented_pass) {
        return passed ? "pass" : "REGRESSION";
    }
    return passed ? "unexpected-pass" : "expected-fail";
}

StateVector fixture_chi(std::size_t dim) {
    if (dim < 2) {
        throw UsageError("the uniform-support fixture needs dim >= 2");
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    v(0) = 1.0;
    v(1) = 1.0;
    return StateVector::normalized(std::move(v));
}

std::vector<UtilityPair> parse_pairs(const std::string &text) {
    std::vector<UtilityPair> pairs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw UsageError("--pairs entries must look like x1:x2, got '" + item + "'");
        }
        try {
            pairs.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
        } catch (const std::exception &) {
            throw UsageError("--pairs: cannot parse '" + item + "'");
        }
    }
    if (pairs.empty()) {
        throw UsageError("--pairs: at least one pair is required");
    }
    return pairs;
}

} // namespace

CommandOutcome cmd_axioms(const RunConfig &c) {
    const FunctionalEntry &entry = require_functional(c.functional);
    SuiteConfig suite;
    suite.dims = dims_or(c, {2});
    suite.trials = c.trials;
    suite.tolerance = c.tol.value_or(kAxiomsDefaultTol);
    suite.seed = c.seed;

    Report r;
    r.command = "axioms";
    r.config = {{"functional", entry.name},
                {"dims", join_dims(suite.dims)},
                {"trials", std::to_string(suite.trials)},
                {"tol", num(suite.tolerance)},
                {"seed", std::to_string(suite.seed)}};
    if (c.game_file) {
        r.config.emplace_back("game", *c.game_file);
    }

    const AxiomReport report = run_suite(entry.functional, suite);
    bool regression = false;
    ojson axioms = ojson::array();
    Table table{"axioms",
                {"id", "paper_eq", "expected", "status", "trials", "max_residual",
                 "pass_fraction"},
                {}};
    for (const auto &s : report.axioms) {
        const bool documented = entry.expects_pass(s.axiom);
        const std::string status = axiom_status(documented, s.all_passed());
        regression = regression || (documented && !s.all_passed());
        ojson a;
        a["id"] = std::string(axiom_id(s.axiom));
        a["paper_eq"] = axiom_equation(s.axiom);
        a["expected"] = documented ? "pass" : "fail";
        a["status"] = status;
        a["trials"] = s.trials;
        a["max_residual"] = jnum(s.max_residual);
        a["pass_fraction"] = jnum(s.pass_fraction());
        a["worst_case"] = (!s.all_passed() && s.worst_case) ? residual_json(*s.worst_case)
                                                             : ojson(nullptr);
        axioms.push_back(std::move(a));
        table.rows.push_back({std::string(axiom_id(s.axiom)),
                              std::to_string(axiom_equation(s.axiom)),
                              documented ? "pass" : "fail", status,
                              std::to_string(s.trials), num(s.max_residual),
                              num(s.pass_fraction())});
    }
    r.body["functional"] = entry.name;
    r.body["seed"] = suite.seed;
    r.body["tolerance"] = jnum(suite.tolerance);
    r.body["axioms"] = std::move(axioms);
    r.tables.push_back(std::move(table));

    const auto implication = check_implication_displacement_zerosum_to_sum(
        entry.functional, suite.trials, derive_seed(suite.seed, 0x1111), suite.tolerance);
    const std::string implication_status =
        implication.vacuous() ? "vacuous" : (implication.holds() ? "holds" : "VIOLATED");
    ojson imp;
    imp["trials"] = implication.trials;
    imp["premises_held"] = implication.premises_held;
    imp["violations"] = implication.violations;
    imp["max_conclusion_residual"] = jnum(implication.max_conclusion_residual);
    imp["status"] = implication_status;
    r.body["implication"] = std::move(imp);
    r.tables.push_back(Table{"implication displacement+zero_sum => sum_relation",
                             {"trials", "premises_held", "violations",
                              "max_conclusion_residual", "status"},
                             {{std::to_string(implication.trials),
                               std::to_string(implication.premises_held),
                               std::to_string(implication.violations),
                               num(implication.max_conclusion_residual),
                               implication_status}}});
    regression = regression || !implication.holds();

    if (c.game_file) {
        const QuantumGame game = load_game(*c.game_file);
        const auto &V = entry.functional;
        std::vector<AxiomResidual> checks;
        checks.push_back(check_displacement(V, game, 1.0));
        checks.push_back(check_zero_sum(V, game));
        const auto supp = support(game);
        const bool two_outcome = game.dim() >= 2 && std::all_of(supp.begin(), supp.end(),
                                                                [](std::size_t j) { return j < 2; });
        if (two_outcome) {
            checks.push_back(
                check_displacement(V, game, -game.utilities()[0] - game.utilities()[1]));
            checks.push_back(check_sum_relation(V, game));
            checks.push_back(check_general_swap(V, game));
        } else {
            r.notes.emplace_back("game file has support outside outcomes 0 and 1; "
                                 "sum_relation and general_swap skipped");
        }
        Table gt{"game file checks", {"id", "k", "residual", "passed"}, {}};
        ojson gj = ojson::array();
        for (const auto &chk : checks) {
            const bool ok = chk.residual <= suite.tolerance;
            const auto k = chk.parameters.find("k");
            gt.rows.push_back({std::string(axiom_id(chk.axiom)),
                               k == chk.parameters.end() ? "" : num(k->second),
                               num(chk.residual), ok ? "yes" : "no"});
            ojson item = residual_json(chk);
            item["id"] = std::string(axiom_id(chk.axiom));
            item["passed"] = ok;
            gj.push_back(std::move(item));
        }
        r.body["game_value"] = jnum(V(game));
        r.body["game_checks"] = std::move(gj);
        r.tables.push_back(std::move(gt));
    }

    r.body["verdict"] = regression ? "regression" : "ok";
    return {regression ? kExitCheckFailed : kExitOk, std::move(r)};
}

CommandOutcome cmd_pivotal(const RunConfig &c) {
    const auto dims = dims_or(c, {2});
    const double tol = c.tol.value_or(kAxiomsDefaultTol);
    Report r;
    r.command = "pivotal";
    r.config = {{"dims", join_dims(dims)},
                {"trials", std::to_string(c.trials)},
                {"tol", num(tol)},
                {"seed", std::to_string(c.seed)}};

    Table summary{"summary",
                  {"functional", "expected", "trials", "max_residual", "pass_fraction",
                   "status"},
                  {}};
    Table samples{"samples", {"functional", "x1", "x2", "value", "mean", "residual"}, {}};
    ojson rows = ojson::array();
    bool regression = false;
    for (const auto &entry : functional_registry()) {
        AxiomStats stats{Axiom::Pivotal, 0, 0, 0.0, std::nullopt};
        ojson shown = ojson::array();
        for (std::size_t t = 0; t < c.trials; ++t) {
            Rng rng = make_rng(c.seed, t);
            const std::size_t d = dims[t % dims.size()];
            const OrthonormalBasis basis = random_basis(d, rng);
            const double x1 = uniform_real(rng, -kDefaultUtilityBound, kDefaultUtilityBound);
            const double x2 = uniform_real(rng, -kDefaultUtilityBound, kDefaultUtilityBound);
            const double phase = uniform_real(rng, 0.0, 2.0 * std::numbers::pi);
            AxiomResidual res = check_pivotal(entry.functional, x1, x2, basis, phase);
            if (t < kPivotalSamplesShown) {
                const double value = entry.functional(res.game);
                const double mean = 0.5 * (x1 + x2);
                samples.rows.push_back(
                    {entry.name, num(x1), num(x2), num(value), num(mean), num(res.residual)});
                ojson s;
                s["x1"] = jnum(x1);
                s["x2"] = jnum(x2);
                s["value"] = jnum(value);
                s["mean"] = jnum(mean);
                s["residual"] = jnum(res.residual);
                shown.push_back(std::move(s));
            }
            stats.record(std::move(res), tol);
        }
        const bool documented = entry.expects_pass(Axiom::Pivotal);
        const std::string status = axiom_status(documented, stats.all_passed());
        regression = regression || (documented && !stats.all_passed());
        summary.rows.push_back({entry.name, documented ? "pass" : "fail",
                                std::to_string(stats.trials), num(stats.max_residual),
                                num(stats.pass_fraction()), status});
        ojson row;
        row["functional"] = entry.name;
        row["expected"] = documented ? "pass" : "fail";
        row["trials"] = stats.trials;
        row["max_residual"] = jnum(stats.max_residual);
        row["pass_fraction"] = jnum(stats.pass_fraction());
        row["status"] = status;
        row["samples"] = std::move(shown);
        rows.push_back(std::move(row));
    }
    r.body["functionals"] = std::move(rows);
    r.body["verdict"] = regression ? "regression" : "ok";
    r.tables.push_back(std::move(summary));
    r.tables.push_back(std::move(samples));
    return {regression ? kExitCheckFailed : kExitOk, std::move(r)};
}

CommandOutcome cmd_gleason_fit(const RunConfig &c) {
    const double tol = c.tol.value_or(kFitDefaultTol);
    std::optional<DensityOperator> reference;
    std::optional<FrameFunction> frame;
    std::optional<ContextualAssignment> contextual;
    std::string source;
    bool fiducials = c.fiducials;

    Rng generator_rng = make_rng(c.seed, 0);
    if (c.rho_file) {
        reference = load_density_operator(*c.rho_file);
        source = "file:" + *c.rho_file;
        if (!c.dims.empty() && c.dims.front() != reference->dim()) {
            throw UsageError("--dim does not match the density-operator file");
        }
    } else {
        const std::size_t d = dims_or(c, {3}).front();
        if (d < 2) {
            throw UsageError("gleason-fit needs dim >= 2");
        }
        source = c.generator;
        if (c.generator == "maximally-mixed") {
            reference = DensityOperator::maximally_mixed(d);
        } else if (c.generator == "random-pure") {
            reference = DensityOperator::pure(random_state(d, generator_rng));
        } else if (c.generator == "random-mixed") {
            reference = random_density_operator(d, generator_rng);
        } else if (c.generator == "uniform-support") {
            contextual = uniform_support_assignment(fixture_chi(d));
            frame = flatten_assignment(*contextual);
            fiducials = true;
        } else {
            throw UsageError("unknown generator '" + c.generator +
                             "' (maximally-mixed, random-pure, random-mixed, uniform-support)");
        }
    }
    if (reference) {
        frame = born_frame_function(*reference);
    }
    const std::size_t d = frame->dim();
    const std::size_t probes = c.probes == 0 ? 10 * d * d : c.probes;

    Report r;
    r.command = "gleason-fit";
    r.config = {{"source", source},
                {"dim", std::to_string(d)},
                {"probes", std::to_string(probes)},
                {"fiducials", fiducials ? "yes" : "no"},
                {"tol", num(tol)},
                {"seed", std::to_string(c.seed)}};

    Rng fit_rng = make_rng(c.seed, 1);
    FitOptions options;
    options.num_probes = probes;
    options.include_fiducials = fiducials;
    const FitResult fit = fit_density_operator(*frame, options, fit_rng);
    const DensityVerification v = verify_density_operator(fit.rho, tol);
    r.notes = fit.warnings;

    std::optional<double> distance;
    if (reference) {
        distance = trace_distance(fit.rho.matrix(), reference->matrix());
    }
    const bool residual_ok = fit.fit_residual <= kFitResidualFlag;
    const bool distance_ok = !distance || *distance <= tol;
    const bool ok = v.passed() && residual_ok && distance_ok;

    std::vector<std::string> flags;
    if (!v.positive()) {
        flags.emplace_back("not positive semidefinite");
    }
    if (!v.hermitian() || !v.unit_trace()) {
        flags.emplace_back("hermiticity/trace");
    }
    if (!residual_ok) {
        flags.emplace_back("fit residual above " + num(kFitResidualFlag));
    }
    if (!distance_ok) {
        flags.emplace_back("trace distance above tol");
    }

    r.body["dim"] = d;
    r.body["num_probes"] = fit.probes_used;
    r.body["seed"] = c.seed;
    r.body["fit_residual"] = jnum(fit.fit_residual);
    r.body["hermiticity_error"] = jnum(v.hermiticity_error);
    r.body["trace_error"] = jnum(v.trace_error);
    r.body["min_eigenvalue"] = jnum(v.min_eigenvalue);
    r.body["trace_distance_to_reference"] = distance ? jnum(*distance) : ojson(nullptr);
    r.body["attempts"] = fit.attempts;
    r.body["rho"] = matrix_json(fit.rho.matrix());

    Table t{"fit", {"quantity", "value"}, {}};
    t.rows.push_back({"probes used", std::to_string(fit.probes_used)});
    t.rows.push_back({"fit_residual", num(fit.fit_residual)});
    t.rows.push_back({"hermiticity_error", num(v.hermiticity_error)});
    t.rows.push_back({"trace_error", num(v.trace_error)});
    t.rows.push_back({"min_eigenvalue", num(v.min_eigenvalue)});
    t.rows.push_back({"trace_distance_to_reference", distance ? num(*distance) : "n/a"});

    if (contextual) {
        const auto search = detect_contextuality(*contextual, c.trials, derive_seed(c.seed, 2));
        if (search.witness) {
            const auto &w = *search.witness;
            ojson wj;
            wj["psi"] = vector_json(w.psi.amplitudes());
            wj["first_basis"] = basis_json(w.first);
            wj["second_basis"] = basis_json(w.second);
            wj["first_value"] = jnum(w.first_value);
            wj["second_value"] = jnum(w.second_value);
            wj["gap"] = jnum(w.gap);
            r.body["contextuality_witness"] = std::move(wj);
            t.rows.push_back({"contextuality gap", num(w.gap)});
        } else {
            r.body["contextuality_witness"] = nullptr;
        }
    }
    r.tables.push_back(std::move(t));
    ojson fl = ojson::array();
    for (const auto &f : flags) {
        fl.push_back(f);
    }
    r.body["flags"] = std::move(fl);
    r.body["verdict"] = ok ? "quantum" : "flagged";
    if (!flags.empty()) {
        std::string all;
        for (const auto &f : flags) {
            all += (all.empty() ? "" : "; ") + f;
        }
        r.notes.push_back("flagged: " + all);
    }
    return {ok ? kExitOk : kExitCheckFailed, std::move(r)};
}

CommandOutcome cmd_contextuality(const RunConfig &c) {
    const std::size_t d = dims_or(c, {3}).front();
    const double tol = c.tol.value_or(kWitnessTolerance);
    const StateVector chi = fixture_chi(d);
    std::optional<ContextualAssignment> a;
    if (c.assignment == "uniform") {
        a = uniform_support_assignment(chi);
    } else if (c.assignment == "born") {
        a = assignment_from_frame_function(born_frame_function(DensityOperator::pure(chi)));
    } else {
        throw UsageError("unknown assignment '" + c.assignment + "' (uniform, born)");
    }

    Report r;
    r.command = "contextuality";
    r.config = {{"assignment", c.assignment},
                {"dim", std::to_string(d)},
                {"chi", vector_text(chi.amplitudes())},
                {"trials", std::to_string(c.trials)},
                {"tol", num(tol)},
                {"seed", std::to_string(c.seed)}};

    const auto result = detect_contextuality(*a, c.trials, c.seed, tol);
    r.notes = result.warnings;
    r.body["trials_run"] = result.trials_run;
    Table t{"witness", {"field", "value"}, {}};
    if (result.witness) {
        const auto &w = *result.witness;
        ojson wj;
        wj["trial"] = w.trial;
        wj["psi"] = vector_json(w.psi.amplitudes());
        wj["first_basis"] = basis_json(w.first);
        wj["second_basis"] = basis_json(w.second);
        wj["first_value"] = jnum(w.first_value);
        wj["second_value"] = jnum(w.second_value);
        wj["gap"] = jnum(w.gap);
        r.body["witness"] = std::move(wj);
        t.rows.push_back({"trial", std::to_string(w.trial)});
        t.rows.push_back({"psi", vector_text(w.psi.amplitudes())});
        for (std::size_t i = 0; i < w.first.dim(); ++i) {
            t.rows.push_back({"first basis[" + std::to_string(i) + "]",
                              vector_text(w.first[i].amplitudes())});
        }
        for (std::size_t i = 0; i < w.second.dim(); ++i) {
            t.rows.push_back({"second basis[" + std::to_string(i) + "]",
                              vector_text(w.second[i].amplitudes())});
        }
        t.rows.push_back({"value in first basis", num(w.first_value)});
        t.rows.push_back({"value in second basis", num(w.second_value)});
        t.rows.push_back({"gap", num(w.gap)});
        r.body["verdict"] = "contextual";
    } else {
        r.body["witness"] = nullptr;
        t.rows.push_back({"result", "none found in budget"});
        r.body["verdict"] = "none found in budget";
    }
    r.tables.push_back(std::move(t));
    return {kExitOk, std::move(r)};
}

CommandOutcome cmd_insufficient_reason(const RunConfig &c) {
    const double tol = c.tol.value_or(kInsufficientReasonDefaultTol);
    const auto pairs = parse_pairs(c.pairs);
    std::vector<MonotoneTransform> transforms;
    if (c.transform == "all") {
        transforms = builtin_transforms();
    } else {
        try {
            transforms.push_back(MonotoneTransform::parse(c.transform));
        } catch (const Error &e) {
            throw UsageError(e.what());
        }
    }

    Report r;
    r.command = "insufficient-reason";
    r.config = {{"transform", c.transform},
                {"pairs", c.pairs},
                {"tol", num(tol)},
                {"seed", std::to_string(c.seed)}};

    bool failed = false;
    Table t{"solutions", {"transform", "p1", "p2", "residual", "status"}, {}};
    ojson sols = ojson::array();
    for (const auto &F : transforms) {
        ojson s;
        s["transform"] = F.name();
        try {
            const auto sol = solve_insufficient_reason(F, pairs);
            const bool ok =
                std::abs(sol.p1 - 0.5) <= tol && std::abs(sol.p2 - 0.5) <= tol;
            failed = failed || !ok;
            s["p1"] = jnum(sol.p1);
            s["p2"] = jnum(sol.p2);
            s["residual"] = jnum(sol.residual);
            s["status"] = ok ? "uniform" : "NON-UNIFORM";
            t.rows.push_back({F.name(), num(sol.p1), num(sol.p2), num(sol.residual),
                              ok ? "uniform" : "NON-UNIFORM"});
        } catch (const DegenerateInput &e) {
            failed = true;
            s["p1"] = nullptr;
            s["p2"] = nullptr;
            s["residual"] = nullptr;
            s["status"] = "underdetermined";
            s["error"] = e.what();
            t.rows.push_back({F.name(), "", "", "", "underdetermined"});
        } catch (const DomainError &e) {
            failed = true;
            s["status"] = "domain-error";
            s["error"] = e.what();
            t.rows.push_back({F.name(), "", "", "", "domain-error"});
        }
        sols.push_back(std::move(s));
    }
    r.body["solutions"] = std::move(sols);
    r.tables.push_back(std::move(t));

    // Which registered functionals agree with p = (1/2, 1/2), F = identity on
    // the equal-superposition game of the first pair.
    const UtilityPair first = pairs.front();
    const OrthonormalBasis basis = OrthonormalBasis::computational(2);
    const QuantumGame game = equal_superposition_game(basis, first.x1, first.x2);
    Table bridge{"bridge to p = (1/2, 1/2)", {"functional", "value", "residual"}, {}};
    ojson bj = ojson::array();
    for (const auto &entry : functional_registry()) {
        const double value = entry.functional(game);
        const double res = consistency_bridge(value, MonotoneTransform::identity(), {0.5, 0.5},
                                              first);
        bridge.rows.push_back({entry.name, num(value), num(res)});
        ojson b;
        b["functional"] = entry.name;
        b["value"] = jnum(value);
        b["residual"] = jnum(res);
        bj.push_back(std::move(b));
    }
    r.body["bridge"] = std::move(bj);
    r.tables.push_back(std::move(bridge));
    r.body["verdict"] = failed ? "failed" : "ok";
    return {failed ? kExitCheckFailed : kExitOk, std::move(r)};
}

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err,
        const std::optional<std::string> &env_seed) {
    RunConfig config;
    if (env_seed) {
        try {
            std::size_t used = 0;
            config.seed = std::stoull(*env_seed, &used);
            if (used != env_seed->size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            err << "error: " << kSeedEnvVar << " must be an unsigned integer\n";
            return kExitUsage;
        }
    }

    CLI::App app{"qdt: numerical checks of decision-theoretic quantum value functionals"};
    app.require_subcommand(1);
    std::string format_text = "json";
    double tol_value = 0.0;

    auto common = [&](CLI::App *sub, bool with_dims) {
        if (with_dims) {
            sub->add_option("--dim", config.dims, "Dimension(s), comma separated")
                ->delimiter(',')
                ->check(CLI::PositiveNumber);
        }
        sub->add_option("--trials", config.trials, "Number of random trials")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tol", tol_value, "Pass tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--seed", config.seed, "Master seed (default $QDT_SEED or 1)");
        sub->add_option("--format", format_text, "json, markdown or csv")
            ->check(CLI::IsMember({"json", "markdown", "csv"}));
    };

    auto *axioms = app.add_subcommand("axioms", "Run the axiom suite for one functional");
    common(axioms, true);
    axioms->add_option("--functional", config.functional, "born, uniform or deterministic");
    axioms->add_option("--game", config.game_file, "Also check one game from a JSON file");

    auto *fit = app.add_subcommand("gleason-fit", "Reconstruct a density operator from a frame function");
    common(fit, true);
    fit->add_option("--generator", config.generator,
                    "maximally-mixed, random-pure, random-mixed or uniform-support");
    fit->add_option("--rho", config.rho_file, "Reference density operator JSON file");
    fit->add_option("--probes", config.probes, "Haar probe count (default 10*dim^2)");
    fit->add_flag("--fiducials", config.fiducials, "Add the d^2 fiducial probe states");

    auto *ctx = app.add_subcommand("contextuality", "Search for a contextuality witness");
    common(ctx, true);
    ctx->add_option("--assignment", config.assignment, "uniform or born");

    auto *piv = app.add_subcommand("pivotal", "Tabulate equal-superposition values");
    common(piv, true);

    auto *ir = app.add_subcommand("insufficient-reason", "Solve for (p1, p2) from the swap symmetry");
    common(ir, false);
    ir->add_option("--transform", config.transform, "all, identity, exp[:a], power:p");
    ir->add_option("--pairs", config.pairs, "Probe pairs x1:x2[,x1:x2...]");

    std::vector<std::string> argv_storage{"qdt"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &s : argv_storage) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    config.format = format_text == "markdown" ? Format::Markdown
                    : format_text == "csv"    ? Format::Csv
                                              : Format::Json;
    CLI::App *chosen = app.get_subcommands().front();
    config.command = chosen->get_name();
    if (chosen->count("--tol") > 0) {
        config.tol = tol_value;
    }

    try {
        CommandOutcome outcome{kExitInternal, {}};
        if (config.command == "axioms") {
            outcome = cmd_axioms(config);
        } else if (config.command == "gleason-fit") {
            outcome = cmd_gleason_fit(config);
        } else if (config.command == "contextuality") {
            outcome = cmd_contextuality(config);
        } else if (config.command == "pivotal") {
            outcome = cmd_pivotal(config);
        } else {
            outcome = cmd_insufficient_reason(config);
        }
        out << render(outcome.report, config.format);
        for (const auto &note : outcome.report.notes) {
            err << "warning: " << note << '\n';
        }
        return outcome.exit_code;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace qdt::cli
