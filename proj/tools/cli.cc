// Copyright 2026 The ecpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"

#include "ecpsim/ecpsim.hpp"

namespace ecpsim::cli {

namespace {

using nlohmann::json;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json complex_json(Complex c) {
    return json::array({c.real(), c.imag()});
}

/// Interleaved (re, im) amplitudes.
json amplitudes_json(const PureState &s) {
    json out = json::array();
    for (Complex c : s.amplitudes()) {
        out.push_back(c.real());
        out.push_back(c.imag());
    }
    return out;
}

void check_alpha_sq(double alpha_sq) {
    if (!(alpha_sq > 0 && alpha_sq < 1)) {
        throw std::invalid_argument("--alpha-sq must lie strictly between 0 and 1");
    }
}

struct Weights {
    Complex alpha;
    Complex beta;
};

Weights weights(double alpha_sq, double phase) {
    check_alpha_sq(alpha_sq);
    return {std::sqrt(alpha_sq), std::polar(std::sqrt(1 - alpha_sq), phase)};
}

std::optional<FamilyId> family_alias(const std::string &name) {
    static const std::map<std::string, FamilyId> aliases = {{"Q4", FamilyId::L05p3},
                                                            {"Q5", FamilyId::L07p1},
                                                            {"W", FamilyId::La2_03p1},
                                                            {"GHZ", FamilyId::L03p1_03p1}};
    auto it = aliases.find(name);
    if (it != aliases.end()) {
        return it->second;
    }
    for (FamilyId f : kAllFamilies) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

ChannelState cat_channel(Weights w, int n) {
    if (n < 2) {
        throw std::invalid_argument("--n must be at least 2");
    }
    int m = n - 1;
    return channel_state(w.alpha, w.beta, basis_state(m, std::uint64_t{0}),
                         basis_state(m, (std::uint64_t{1} << m) - 1));
}

ChannelState channel_from(const std::string &source, Weights w, int n) {
    if (source == "cat") {
        return cat_channel(w, n);
    }
    if (source == "bell") {
        return cat_channel(w, 2);
    }
    if (source == "ghz_like") {
        return ghz_like(w.alpha, w.beta);
    }
    if (auto f = family_alias(source)) {
        return family_representative(*f).channel.with_weights(w.alpha, w.beta);
    }
    throw std::invalid_argument("unknown channel source '" + source + "'");
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    file << text;
}

std::string corrections_text(const std::vector<Correction> &fix) {
    std::string s;
    for (const Correction &c : fix) {
        if (!s.empty()) s += ' ';
        s += std::string(pauli_name(c.gate)) + "@" + std::to_string(c.label);
    }
    return s;
}

// ---- run ----

struct RunOptions {
    std::string protocol;
    int n = 3;
    double alpha_sq = 0.8;
    double phase = 0;
    bool complex = false;
    std::string family = "cat";
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
    bool optical = false;
    std::string format = "json";
    std::string out;
};

ProtocolReport run_protocol(const RunOptions &o, bool phase_given) {
    double phase = o.phase;
    if (o.complex && !phase_given) {
        phase = std::numbers::pi / 2;
    }
    Weights w = weights(o.alpha_sq, phase);
    switch (parse_protocol(o.protocol)) {
        case ProtocolKind::Cat:
            return ecp_cat(w.alpha, w.beta, o.n);
        case ProtocolKind::GhzLike:
            return ecp_ghz_like(w.alpha, w.beta);
        case ProtocolKind::Ecp1:
            return ecp1(channel_from(o.family, w, o.n));
        case ProtocolKind::Ecp2:
            return ecp2(channel_from(o.family, w, o.n));
    }
    throw std::invalid_argument("unknown protocol");
}

std::string run_command(const RunOptions &o, bool phase_given) {
    ProtocolReport r = run_protocol(o, phase_given);
    std::optional<SampleStats> stats;
    if (o.trials > 0) {
        stats = o.optical ? optical_ecp_run(r, o.trials, o.seed) : sample(r, o.trials, o.seed);
    }
    std::optional<ClosedForm> form = closed_form_for(r);

    std::ostringstream text;
    if (o.format == "csv") {
        text << "outcome,probability,verdict,corrections,fidelity";
        if (stats && !o.optical) text << ",sampled";
        text << "\n";
        for (const BranchRecord &b : r.branches) {
            std::string label = outcome_label(b.outcome);
            text << label << "," << num(b.probability) << ","
                 << (b.verdict == Verdict::Success ? "success" : "fail") << ","
                 << corrections_text(b.corrections) << "," << (b.fidelity ? num(*b.fidelity) : "");
            if (stats && !o.optical) {
                auto it = stats->outcome_histogram.find(label);
                text << "," << (it == stats->outcome_histogram.end() ? 0 : it->second);
            }
            text << "\n";
        }
        return text.str();
    }
    if (o.format != "json") {
        throw std::invalid_argument("--format must be json or csv");
    }

    json j;
    j["protocol"] = protocol_name(r.protocol);
    j["alpha"] = complex_json(r.alpha);
    j["beta"] = complex_json(r.beta);
    j["alpha_sq"] = o.alpha_sq;
    j["channel_form"] = channel_form_name(r.channel_form);
    j["output_labels"] = r.output_labels;
    j["success_probability"] = r.success_probability;
    j["probability_sum"] = r.probability_sum();
    j["closed_form"] = form ? json(closed_form_name(*form)) : json(nullptr);
    j["eta_printed"] = form ? json(eta_closed_form(*form, r.alpha, r.beta)) : json(nullptr);
    j["target"] = amplitudes_json(r.target);
    json branches = json::array();
    for (const BranchRecord &b : r.branches) {
        json jb;
        jb["outcome"] = outcome_label(b.outcome);
        jb["probability"] = b.probability;
        jb["verdict"] = b.verdict == Verdict::Success ? "success" : "fail";
        json fixes = json::array();
        for (const Correction &c : b.corrections) {
            fixes.push_back({{"gate", pauli_name(c.gate)}, {"label", c.label}});
        }
        jb["corrections"] = fixes;
        jb["fidelity"] = b.fidelity ? json(*b.fidelity) : json(nullptr);
        jb["post_state"] = amplitudes_json(b.post_state);
        branches.push_back(jb);
    }
    j["branches"] = branches;
    if (stats) {
        j["sample"] = {{"trials", stats->trials},
                       {"seed", stats->seed},
                       {"optical", o.optical},
                       {"successes", stats->successes},
                       {"empirical_rate", stats->empirical_rate},
                       {"histogram", stats->outcome_histogram}};
    }
    return j.dump(2) + "\n";
}

// ---- sweep ----

struct SweepOptions {
    int points = 99;
    double alpha_sq_min = 0.01;
    double alpha_sq_max = 0.99;
    bool with_numeric = false;
    std::string base = "negativity";
    std::string convention = "total";
    bool unit_maximal = false;
    bool no_fail = false;
    std::string format = "csv";
    std::string out;
};

constexpr ClosedForm kSweepForms[] = {ClosedForm::BellGhzBellType, ClosedForm::GhzLikeBellType,
                                      ClosedForm::BellGhzOneQubit, ClosedForm::GhzLikeOneQubit};

/// The run that realizes each closed form numerically.
ProtocolReport sweep_run(ClosedForm form, Weights w) {
    switch (form) {
        case ClosedForm::BellGhzBellType:
            return ecp_cat(w.alpha, w.beta, 3);
        case ClosedForm::GhzLikeBellType:
            return ecp_ghz_like(w.alpha, w.beta);
        case ClosedForm::BellGhzOneQubit:
            return ecp2(cat_channel(w, 2));
        case ClosedForm::GhzLikeOneQubit:
            return ecp2(ghz_like(w.alpha, w.beta));
    }
    throw std::invalid_argument("unknown closed form");
}

std::string sweep_command(const SweepOptions &o) {
    if (o.points < 2) {
        throw std::invalid_argument("--points must be at least 2");
    }
    check_alpha_sq(o.alpha_sq_min);
    check_alpha_sq(o.alpha_sq_max);
    if (!(o.alpha_sq_min < o.alpha_sq_max)) {
        throw std::invalid_argument("--alpha-sq-min must be below --alpha-sq-max");
    }
    BaseMeasure base = parse_base_measure(o.base);
    E0Convention convention = parse_e0_convention(o.convention);
    EfficiencyOptions eff{!o.no_fail, o.unit_maximal};

    std::ostringstream text;
    json rows = json::array();
    if (o.format == "csv") {
        text << kSweepHeader;
        if (o.with_numeric) {
            for (ClosedForm f : kSweepForms) text << ",eta_numeric_" << closed_form_name(f);
        }
        text << "\n";
    } else if (o.format != "json") {
        throw std::invalid_argument("--format must be csv or json");
    }
    for (int k = 0; k < o.points; k++) {
        double a2 = o.alpha_sq_min + (o.alpha_sq_max - o.alpha_sq_min) * k / (o.points - 1);
        Weights w = weights(a2, 0);
        double p_s = 2 * std::norm(w.alpha) * std::norm(w.beta);
        std::vector<double> printed, numeric;
        for (ClosedForm f : kSweepForms) {
            printed.push_back(eta_closed_form(f, w.alpha, w.beta));
            if (o.with_numeric) {
                numeric.push_back(eta_for_run(sweep_run(f, w), base, convention, eff));
            }
        }
        if (o.format == "csv") {
            text << num(std::sqrt(a2)) << "," << num(p_s);
            for (double v : printed) text << "," << num(v);
            for (double v : numeric) text << "," << num(v);
            text << "\n";
        } else {
            json row = {{"alpha", std::sqrt(a2)}, {"alpha_sq", a2}, {"p_s", p_s}};
            for (std::size_t i = 0; i < printed.size(); i++) {
                std::string name(closed_form_name(kSweepForms[i]));
                row["eta_" + name] = printed[i];
                if (o.with_numeric) row["eta_numeric_" + name] = numeric[i];
            }
            rows.push_back(row);
        }
    }
    if (o.format == "json") {
        json j = {{"base", o.base}, {"convention", o.convention}, {"rows", rows}};
        return j.dump(2) + "\n";
    }
    return text.str();
}

// ---- families ----

struct FamiliesOptions {
    std::string id;
    std::vector<std::optional<double>> params = std::vector<std::optional<double>>(4);
    std::string format = "text";
    std::string out;
};

std::string catalogue_name(const FamilySpec &spec) {
    for (const FamilyRepresentative &row : family_catalogue()) {
        if (row.spec.family != spec.family || row.spec.params.size() != spec.params.size()) {
            continue;
        }
        bool same = true;
        for (std::size_t i = 0; i < spec.params.size(); i++) {
            same = same && std::abs(row.spec.params[i] - spec.params[i]) <= kExactTolerance;
        }
        if (same) {
            return row.name;
        }
    }
    return "";
}

std::string join_params(FamilyId f) {
    std::string s;
    for (const std::string &p : family_parameter_names(f)) {
        if (!s.empty()) s += ";";
        s += p;
    }
    return s;
}

std::string families_command(const FamiliesOptions &o) {
    std::ostringstream text;
    if (o.id.empty()) {
        json rows = json::array();
        text << "id,parameters,name\n";
        for (FamilyId f : kAllFamilies) {
            FamilyRepresentative rep = family_representative(f);
            text << family_name(f) << "," << join_params(f) << "," << rep.name << "\n";
            rows.push_back({{"id", family_name(f)},
                            {"parameters", family_parameter_names(f)},
                            {"name", rep.name}});
        }
        return o.format == "json" ? json(rows).dump(2) + "\n" : text.str();
    }

    auto f = family_alias(o.id);
    if (!f) {
        throw std::invalid_argument("unknown family '" + o.id + "'");
    }
    std::vector<Complex> given;
    for (const auto &p : o.params) {
        if (p) given.push_back(*p);
    }
    std::optional<PureState> state;
    std::optional<ChannelState> channel;
    std::string name;
    FamilySpec spec(*f, given.empty() ? family_representative(*f).spec.params : given);
    if (given.empty()) {
        FamilyRepresentative rep = family_representative(*f);
        state = rep.state;
        channel = rep.channel;
        name = rep.name;
    } else {
        FamilyState fs = family_state(spec);
        state = fs.state;
        channel = fs.channel;
        name = catalogue_name(spec);
    }

    if (o.format == "json") {
        json j = {{"id", family_name(*f)}, {"name", name}, {"state", amplitudes_json(*state)}};
        json params = json::array();
        for (Complex c : spec.params) params.push_back(complex_json(c));
        j["parameters"] = params;
        if (channel) {
            j["channel"] = {{"alpha", complex_json(channel->alpha())},
                            {"beta", complex_json(channel->beta())},
                            {"psi0", amplitudes_json(channel->psi0())},
                            {"psi1", amplitudes_json(channel->psi1())}};
        } else {
            j["channel"] = nullptr;
        }
        return j.dump(2) + "\n";
    }
    text << "family: " << family_name(*f) << "\n";
    text << "parameters:";
    auto names = family_parameter_names(*f);
    for (std::size_t i = 0; i < names.size(); i++) {
        text << " " << names[i] << "=" << num(spec.params[i].real());
    }
    text << "\nstate: " << state->str() << "\n";
    if (channel) {
        text << "channel.alpha: " << num(channel->alpha().real()) << "\n";
        text << "channel.beta: " << num(channel->beta().real()) << "\n";
        text << "channel.psi0: " << channel->psi0().str() << "\n";
        text << "channel.psi1: " << channel->psi1().str() << "\n";
    } else {
        text << "channel: none\n";
    }
    text << "name: " << (name.empty() ? "-" : name) << "\n";
    return text.str();
}

// ---- measure ----

struct MeasureOptions {
    std::string state;
    std::string measure;
    double alpha_sq = 0.8;
    int n = 3;
    std::vector<int> cut;
    std::string out;
};

PureState measure_source(const MeasureOptions &o) {
    const double h = 1 / std::sqrt(2.0);
    if (o.state == "bell_type") {
        Weights w = weights(o.alpha_sq, 0);
        return bell_type(w.alpha, w.beta);
    }
    if (o.state == "cat") {
        Weights w = weights(o.alpha_sq, 0);
        return cat(w.alpha, w.beta, o.n);
    }
    if (o.state == "ghz_like") {
        Weights w = weights(o.alpha_sq, 0);
        return ghz_like(w.alpha, w.beta).assembled();
    }
    if (o.state == "bell") {
        return bell_ket(BellLabel::PsiPlus);
    }
    if (o.state == "GHZ") {
        return cat(h, h, o.n);
    }
    if (o.state == "W") {
        return PureState::normalized(3, {0, 1, 1, 0, 1, 0, 0, 0});
    }
    if (o.state == "product") {
        if (o.n < 1 || o.n > kMaxQubits) {
            throw std::invalid_argument("--n out of range");
        }
        return basis_state(o.n, std::uint64_t{0});
    }
    for (FamilyId f : kAllFamilies) {
        if (family_name(f) == o.state) {
            return family_representative(f).state;
        }
    }
    throw std::invalid_argument("unknown state source '" + o.state + "'");
}

std::string cut_text(const std::vector<int> &side) {
    std::string s;
    for (int q : side) {
        if (!s.empty()) s += ";";
        s += std::to_string(q);
    }
    return s;
}

std::string measure_command(const MeasureOptions &o) {
    PureState s = measure_source(o);
    std::ostringstream text;
    text << "measure,cut,value\n";

    auto base_of = [](const std::string &name) {
        std::string b = name;
        std::replace(b.begin(), b.end(), '-', '_');
        return parse_base_measure(b);
    };
    for (const char *prefix : {"yu-song-", "sabin-"}) {
        std::string p = prefix;
        if (o.measure.rfind(p, 0) != 0) {
            continue;
        }
        BaseMeasure base = base_of(o.measure.substr(p.size()));
        std::vector<double> values = one_vs_rest(s, base);
        for (std::size_t k = 0; k < values.size(); k++) {
            text << o.measure << "," << k + 1 << "," << num(values[k]) << "\n";
        }
        double mean = p == "sabin-" ? multipartite_geometric(s, base)
                                    : multipartite_arithmetic(s, base);
        text << o.measure << ",mean," << num(mean) << "\n";
        return text.str();
    }

    BaseMeasure base = base_of(o.measure);
    std::vector<int> side = o.cut;
    if (side.empty()) {
        if (s.num_qubits() != 2) {
            throw std::invalid_argument("--cut is required for states with more than 2 qubits");
        }
        side = {1};
    }
    double value = base == BaseMeasure::Tangle && s.num_qubits() == 2
                       ? tangle_2q(s)
                       : bipartite(s, Bipartition{side}, base);
    text << o.measure << "," << cut_text(side) << "," << num(value) << "\n";
    return text.str();
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app("Entanglement concentration protocol simulator", "ecpsim");
    app.require_subcommand(1);

    RunOptions run;
    CLI::App *run_cmd = app.add_subcommand("run", "Run one protocol and report every branch");
    run_cmd->add_option("--protocol", run.protocol, "cat | ghz_like | ecp1 | ecp2")->required();
    run_cmd->add_option("--n", run.n, "Cat qubit count (cat protocol and cat channel)");
    run_cmd->add_option("--alpha-sq", run.alpha_sq, "|alpha|^2 in (0, 1)");
    CLI::Option *phase_opt = run_cmd->add_option("--phase", run.phase, "Phase of beta in radians");
    run_cmd->add_flag("--complex", run.complex, "Use an imaginary beta (phase pi/2)");
    run_cmd->add_option("--family", run.family,
                        "Channel for ecp1/ecp2: cat, bell, ghz_like, a family id, Q4, Q5, W, GHZ");
    run_cmd->add_option("--trials", run.trials, "Monte Carlo trials (0 = enumeration only)");
    run_cmd->add_option("--seed", run.seed, "Sampling seed");
    run_cmd->add_flag("--optical", run.optical, "Sample through the linear-optics analyzer");
    run_cmd->add_option("--format", run.format, "json | csv");
    run_cmd->add_option("--out", run.out, "Output path");

    SweepOptions sweep;
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "Tabulate efficiencies over a grid of alpha");
    sweep_cmd->add_option("--points", sweep.points, "Grid size");
    sweep_cmd->add_option("--alpha-sq-min", sweep.alpha_sq_min);
    sweep_cmd->add_option("--alpha-sq-max", sweep.alpha_sq_max);
    sweep_cmd->add_flag("--with-numeric", sweep.with_numeric, "Append measured efficiencies");
    sweep_cmd->add_option("--base", sweep.base, "von_neumann | negativity | tangle");
    sweep_cmd->add_option("--convention", sweep.convention, "total | target_only | printed");
    sweep_cmd->add_flag("--unit-maximal", sweep.unit_maximal, "Take E_m = 1");
    sweep_cmd->add_flag("--no-fail", sweep.no_fail, "Drop the failure-branch term");
    sweep_cmd->add_option("--format", sweep.format, "csv | json");
    sweep_cmd->add_option("--out", sweep.out, "Output path");

    FamiliesOptions fam;
    CLI::App *fam_cmd = app.add_subcommand("families", "List or construct 4-qubit family states");
    fam_cmd->add_option("--id", fam.id, "Family id or alias");
    const char *param_flags[] = {"--a", "--b", "--c", "--d"};
    std::vector<double> param_values(4);
    std::vector<CLI::Option *> param_opts;
    for (int k = 0; k < 4; k++) {
        param_opts.push_back(fam_cmd->add_option(param_flags[k], param_values[k]));
    }
    fam_cmd->add_option("--format", fam.format, "text | json");
    fam_cmd->add_option("--out", fam.out, "Output path");

    MeasureOptions meas;
    CLI::App *meas_cmd = app.add_subcommand("measure", "Evaluate an entanglement measure");
    meas_cmd->add_option("--state", meas.state,
                         "bell_type, cat, ghz_like, bell, GHZ, W, product, or a family id")
        ->required();
    meas_cmd->add_option("--measure", meas.measure,
                         "von-neumann | negativity | tangle | yu-song-<base> | sabin-<base>")
        ->required();
    meas_cmd->add_option("--alpha-sq", meas.alpha_sq);
    meas_cmd->add_option("--n", meas.n);
    meas_cmd->add_option("--cut", meas.cut, "Qubits on one side of the cut")->delimiter(',');
    meas_cmd->add_option("--out", meas.out, "Output path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run_cmd) {
            emit(run_command(run, phase_opt->count() > 0), run.out, out);
        } else if (*sweep_cmd) {
            emit(sweep_command(sweep), sweep.out, out);
        } else if (*fam_cmd) {
            for (int k = 0; k < 4; k++) {
                if (param_opts[k]->count() > 0) fam.params[k] = param_values[k];
            }
            if (fam.format != "text" && fam.format != "json") {
                throw std::invalid_argument("--format must be text or json");
            }
            emit(families_command(fam), fam.out, out);
        } else if (*meas_cmd) {
            emit(measure_command(meas), meas.out, out);
        }
    } catch (const InvariantViolation &e) {
        err << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace ecpsim::cli
