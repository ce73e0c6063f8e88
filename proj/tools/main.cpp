// Command-line front end: thermal-entanglement curves, critical
// temperatures, reduced density matrices, figure data and calibration runs
// for small Heisenberg-family spin rings.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinring/model_config.hpp"
#include "spinring/run.hpp"

namespace {

struct CliOptions {
    int sites = 2;
    double coupling = 1.0;
    double zz_weight = 0.0;
    std::vector<double> fields;
    std::vector<double> uniform_fields;
    std::vector<double> impurity_fields;
    std::string boundary = "cyclic";
    std::vector<int> pair = {1, 2};
    double tau_start = 0.02;
    double tau_stop = 3.0;
    int tau_count = 150;
    double tau = 1.0;
    std::vector<double> bracket;
    double tol = 1e-6;
    std::string format = "csv";
    std::string out;
    std::string config_path;
    std::string figure_id = "fig1";
    std::vector<double> fig_b;
};

void add_model_options(CLI::App* sub, CliOptions& o) {
    sub->add_option("--sites", o.sites, "number of sites N (2..10)");
    sub->add_option("--coupling", o.coupling, "exchange coupling J (J>0 antiferromagnetic)");
    sub->add_option("--zz-weight", o.zz_weight, "weight of the sz-sz term (0 = XX model)");
    sub->add_option("--field", o.fields, "per-site field b_n; repeat once per site");
    sub->add_option("--uniform-field", o.uniform_fields,
                    "uniform field B (b=B per site; b=B/2 for N=2); repeatable for tc sweeps");
    sub->add_option("--impurity-field", o.impurity_fields,
                    "impurity field B (b=B*|J| on the last site); repeatable for tc sweeps");
    sub->add_option("--boundary", o.boundary, "cyclic or open")
        ->check(CLI::IsMember({"cyclic", "open"}));
    sub->add_option("--config", o.config_path, "key = value config file mirroring the flags");
}

void add_output_options(CLI::App* sub, CliOptions& o) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out,
                    "output path; relative paths resolve against $SPINRING_OUT_DIR; "
                    "stdout when omitted");
}

void add_pair_option(CLI::App* sub, CliOptions& o) {
    sub->add_option("--pair", o.pair, "pair of sites, 1-based (e.g. --pair 1 2)")
        ->expected(2);
}

void add_grid_options(CLI::App* sub, CliOptions& o) {
    sub->add_option("--tau-start", o.tau_start, "first scaled temperature kT/|J|");
    sub->add_option("--tau-stop", o.tau_stop, "last scaled temperature kT/|J|");
    sub->add_option("--tau-count", o.tau_count, "number of grid points (>= 2)");
}

// Config-file values fill in whatever was not passed on the command line.
void apply_config(CLI::App* sub, CliOptions& o) {
    if (o.config_path.empty()) return;
    const spinring::KeyValueConfig kv = spinring::KeyValueConfig::parse_file(o.config_path);

    static const std::vector<std::string> known = {
        "sites",     "coupling",  "zz-weight", "field",  "uniform-field", "impurity-field",
        "boundary",  "pair",      "tau-start", "tau-stop", "tau-count",   "tau",
        "bracket",   "tol",       "format",    "out",    "fig-b"};
    for (const auto& key : kv.keys())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::invalid_argument("config: unknown key '" + key + "'");

    const auto unset = [sub](const char* flag) {
        const CLI::Option* opt = sub->get_option_no_throw(flag);
        return opt != nullptr && opt->count() == 0;
    };

    if (unset("--sites") && kv.has("sites")) o.sites = kv.get_int("sites");
    if (unset("--coupling") && kv.has("coupling")) o.coupling = kv.get_double("coupling");
    if (unset("--zz-weight") && kv.has("zz-weight")) o.zz_weight = kv.get_double("zz-weight");
    if (unset("--field") && kv.has("field")) o.fields = kv.get_double_list("field");
    if (unset("--uniform-field") && kv.has("uniform-field"))
        o.uniform_fields = kv.get_double_list("uniform-field");
    if (unset("--impurity-field") && kv.has("impurity-field"))
        o.impurity_fields = kv.get_double_list("impurity-field");
    if (unset("--boundary") && kv.has("boundary")) o.boundary = kv.get_string("boundary");
    if (unset("--pair") && kv.has("pair")) {
        const auto p = kv.get_double_list("pair");
        if (p.size() != 2) throw std::invalid_argument("config: pair needs exactly two sites");
        o.pair = {static_cast<int>(p[0]), static_cast<int>(p[1])};
    }
    if (unset("--tau-start") && kv.has("tau-start")) o.tau_start = kv.get_double("tau-start");
    if (unset("--tau-stop") && kv.has("tau-stop")) o.tau_stop = kv.get_double("tau-stop");
    if (unset("--tau-count") && kv.has("tau-count")) o.tau_count = kv.get_int("tau-count");
    if (unset("--tau") && kv.has("tau")) o.tau = kv.get_double("tau");
    if (unset("--bracket") && kv.has("bracket")) o.bracket = kv.get_double_list("bracket");
    if (unset("--tol") && kv.has("tol")) o.tol = kv.get_double("tol");
    if (unset("--format") && kv.has("format")) o.format = kv.get_string("format");
    if (unset("--out") && kv.has("out")) o.out = kv.get_string("out");
    if (unset("--fig-b") && kv.has("fig-b")) o.fig_b = kv.get_double_list("fig-b");
}

spinring::RunConfig build_run_config(const std::string& command, CLI::App* sub, CliOptions& o) {
    apply_config(sub, o);

    spinring::RunConfig rc;
    rc.command = spinring::command_from_string(command);

    int patterns = 0;
    if (!o.fields.empty()) ++patterns;
    if (!o.uniform_fields.empty()) ++patterns;
    if (!o.impurity_fields.empty()) ++patterns;
    if (patterns > 1)
        throw std::invalid_argument(
            "--field, --uniform-field and --impurity-field are mutually exclusive");

    rc.model.n_sites = o.sites;
    rc.model.coupling = o.coupling;
    rc.model.zz_weight = o.zz_weight;
    rc.model.boundary = spinring::boundary_from_string(o.boundary);
    if (!o.fields.empty()) {
        rc.model.fields = o.fields;
        rc.field_pattern = spinring::FieldPattern::Explicit;
    } else {
        rc.model.fields.assign(static_cast<std::size_t>(std::max(o.sites, 0)), 0.0);
        if (!o.uniform_fields.empty()) {
            rc.field_pattern = spinring::FieldPattern::Uniform;
            rc.field_values = o.uniform_fields;
        } else if (!o.impurity_fields.empty()) {
            rc.field_pattern = spinring::FieldPattern::Impurity;
            rc.field_values = o.impurity_fields;
        }
    }
    if (rc.command != spinring::Command::Calibrate) rc.model.validate();

    if (o.pair.size() != 2) throw std::invalid_argument("--pair needs exactly two sites");
    rc.pair = {o.pair[0] - 1, o.pair[1] - 1};

    rc.grid = {o.tau_start, o.tau_stop, o.tau_count};
    rc.tau = o.tau;
    if (!o.bracket.empty()) {
        if (o.bracket.size() != 2)
            throw std::invalid_argument("--bracket needs exactly two temperatures");
        rc.bracket_low = o.bracket[0];
        rc.bracket_high = o.bracket[1];
    }
    rc.tol = o.tol;
    rc.format = spinring::format_from_string(o.format);
    rc.out_path = o.out;
    if (rc.command == spinring::Command::Figure)
        rc.figure = spinring::figure_from_string(o.figure_id);
    rc.figure_fields = o.fig_b;
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thermal entanglement in small Heisenberg-family spin rings"};
    app.require_subcommand(1);

    CliOptions o;

    CLI::App* curve = app.add_subcommand("curve", "concurrence vs scaled temperature tau");
    add_model_options(curve, o);
    add_pair_option(curve, o);
    add_grid_options(curve, o);
    add_output_options(curve, o);

    CLI::App* tc = app.add_subcommand(
        "tc", "critical temperature by bisection; sweeps over repeated field values");
    add_model_options(tc, o);
    add_pair_option(tc, o);
    tc->add_option("--bracket", o.bracket, "bisection bracket (low high); default 0.01|J| 5|J|")
        ->expected(2);
    tc->add_option("--tol", o.tol, "bisection tolerance (>= 1e-8)");
    add_output_options(tc, o);

    CLI::App* rho = app.add_subcommand("rho", "reduced density matrix of a pair at tau");
    add_model_options(rho, o);
    add_pair_option(rho, o);
    rho->add_option("--tau", o.tau, "scaled temperature kT/|J|");
    add_output_options(rho, o);

    CLI::App* figure = app.add_subcommand("figure", "multi-curve figure data sets");
    figure->add_option("id", o.figure_id, "fig1 (uniform field), fig2a (C12) or fig2b (C13)")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2a", "fig2b"}));
    add_model_options(figure, o);
    add_grid_options(figure, o);
    figure->add_option("--fig-b", o.fig_b, "field values B, one curve each");
    add_output_options(figure, o);

    CLI::App* calibrate =
        app.add_subcommand("calibrate", "closed forms vs exact diagonalization on a fixed grid");
    calibrate->add_option("--config", o.config_path, "key = value config file");
    add_output_options(calibrate, o);

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* active = app.get_subcommands().front();
        o.coupling = (active == figure && active->get_option("--coupling")->count() == 0)
                         ? -1.0
                         : o.coupling;
        const spinring::RunConfig rc = build_run_config(active->get_name(), active, o);
        return spinring::run(rc, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
