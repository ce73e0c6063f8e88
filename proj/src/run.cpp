#include "spinring/run.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "spinring/closed_form.hpp"
#include "spinring/concurrence.hpp"
#include "spinring/critical_scan.hpp"
#include "spinring/linalg.hpp"
#include "spinring/model_config.hpp"
#include "spinring/thermal.hpp"

namespace spinring {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::vector<double> linspace(double start, double stop, int count) {
    if (count < 2) throw std::invalid_argument("linspace: count must be >= 2");
    if (!(start < stop)) throw std::invalid_argument("linspace: start must be < stop");
    std::vector<double> out(static_cast<std::size_t>(count));
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) out[i] = start + step * i;
    out.back() = stop;
    return out;
}

std::string to_string(Command c) {
    switch (c) {
        case Command::Curve: return "curve";
        case Command::Tc: return "tc";
        case Command::Rho: return "rho";
        case Command::Figure: return "figure";
        default: return "calibrate";
    }
}

std::string to_string(FigureId f) {
    switch (f) {
        case FigureId::Fig1: return "fig1";
        case FigureId::Fig2a: return "fig2a";
        default: return "fig2b";
    }
}

Command command_from_string(const std::string& s) {
    if (s == "curve") return Command::Curve;
    if (s == "tc") return Command::Tc;
    if (s == "rho") return Command::Rho;
    if (s == "figure") return Command::Figure;
    if (s == "calibrate") return Command::Calibrate;
    throw std::invalid_argument("unknown command '" + s + "'");
}

FigureId figure_from_string(const std::string& s) {
    if (s == "fig1") return FigureId::Fig1;
    if (s == "fig2a") return FigureId::Fig2a;
    if (s == "fig2b") return FigureId::Fig2b;
    throw std::invalid_argument("unknown figure id '" + s + "' (expected fig1, fig2a or fig2b)");
}

OutputFormat format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + s + "' (expected csv or json)");
}

namespace {

struct ResolvedModel {
    ModelSpec spec;
    std::string note;  // field-mapping convention applied
};

ResolvedModel resolve_model(const RunConfig& config, double field_value) {
    ResolvedModel out;
    switch (config.field_pattern) {
        case FieldPattern::Explicit:
            out.spec = config.model;
            out.note = "per-site fields as given (engine fields b_n)";
            break;
        case FieldPattern::Uniform: {
            out.spec = config.model;
            if (config.model.n_sites == 2) {
                out.spec.fields.assign(2, 0.5 * field_value);
                out.note = "uniform field B=" + format_double(field_value) +
                           " mapped to per-site b=B/2 (two-site convention)";
            } else {
                out.spec.fields.assign(static_cast<std::size_t>(config.model.n_sites),
                                       field_value);
                out.note = "uniform field B=" + format_double(field_value) +
                           " mapped to per-site b=B (ring convention)";
            }
            break;
        }
        case FieldPattern::Impurity: {
            out.spec = config.model;
            out.spec.fields.assign(static_cast<std::size_t>(config.model.n_sites), 0.0);
            out.spec.fields.back() = field_value * std::abs(config.model.coupling);
            out.note = "impurity field B=" + format_double(field_value) +
                       " mapped to b=B*|J| on site " + std::to_string(config.model.n_sites);
            break;
        }
    }
    out.spec.validate();
    return out;
}

std::string pair_text(std::pair<int, int> pair) {
    // reported 1-based, matching the CLI surface
    return std::to_string(pair.first + 1) + "," + std::to_string(pair.second + 1);
}

json model_json(const ModelSpec& spec) {
    json m;
    m["sites"] = spec.n_sites;
    m["coupling"] = spec.coupling;
    m["zz_weight"] = spec.zz_weight;
    m["boundary"] = to_string(spec.boundary);
    m["fields"] = spec.fields;
    return m;
}

json meta_json(const RunConfig& config, const ModelSpec& spec, const std::string& note) {
    json meta;
    meta["generator"] = kToolVersion;
    meta["command"] = to_string(config.command);
    meta["model"] = model_json(spec);
    meta["pair"] = {config.pair.first + 1, config.pair.second + 1};
    meta["field_convention"] = note;
    return meta;
}

void csv_header(std::ostream& out, const RunConfig& config, const ModelSpec& spec,
                const std::string& note) {
    out << "# " << kToolVersion << "\n";
    out << "# command: " << to_string(config.command) << "\n";
    out << "# model: " << model_spec_summary(spec) << "\n";
    out << "# pair: " << pair_text(config.pair) << "\n";
    out << "# field-convention: " << note << "\n";
}

std::string optional_tc_text(const std::optional<double>& tc) {
    return tc ? format_double(*tc) : std::string("NONE");
}

void validate_common(const RunConfig& config) {
    if (config.command == Command::Calibrate) return;
    const auto [a, b] = config.pair;
    if (a == b) throw std::invalid_argument("pair sites must be distinct");
    if (a < 0 || b < 0 || a >= config.model.n_sites || b >= config.model.n_sites)
        throw std::invalid_argument("pair site out of range 1.." +
                                    std::to_string(config.model.n_sites));
    if (config.command == Command::Curve || config.command == Command::Figure) {
        if (config.grid.count < 2) throw std::invalid_argument("tau grid needs count >= 2");
        if (!(config.grid.start < config.grid.stop))
            throw std::invalid_argument("tau grid needs start < stop");
        if (!(config.grid.start > 0.0)) throw std::invalid_argument("tau grid must be positive");
    }
    if (config.field_pattern != FieldPattern::Explicit && config.field_values.empty())
        throw std::invalid_argument("no field value given for the selected field pattern");
    if (config.field_pattern != FieldPattern::Explicit && config.field_values.size() > 1 &&
        config.command != Command::Tc)
        throw std::invalid_argument("multiple field values are only supported by 'tc' sweeps");
}

double single_field_value(const RunConfig& config) {
    return config.field_values.empty() ? 0.0 : config.field_values.front();
}

std::pair<double, double> resolve_bracket(const RunConfig& config, const ModelSpec& spec) {
    if (config.bracket_low > 0.0 || config.bracket_high > 0.0) {
        if (!(config.bracket_low > 0.0 && config.bracket_low < config.bracket_high))
            throw std::invalid_argument("bracket must satisfy 0 < low < high");
        return {config.bracket_low, config.bracket_high};
    }
    const double j = std::abs(spec.coupling);
    if (j == 0.0)
        throw std::domain_error("default bracket scales with |J|, but coupling is 0");
    return {kDefaultBracketLowFactor * j, kDefaultBracketHighFactor * j};
}

// ---- curve ---------------------------------------------------------------

std::string emit_curve(const RunConfig& config, const ConcurrenceCurve& c) {
    std::ostringstream out;
    if (config.format == OutputFormat::Csv) {
        csv_header(out, config, c.spec, c.field_note);
        out << "tau,concurrence\n";
        for (const auto& p : c.points)
            out << format_double(p.tau) << "," << format_double(p.concurrence) << "\n";
    } else {
        json j;
        j["meta"] = meta_json(config, c.spec, c.field_note);
        json points = json::array();
        for (const auto& p : c.points)
            points.push_back({{"tau", p.tau}, {"concurrence", p.concurrence}});
        j["points"] = std::move(points);
        out << j.dump(2) << "\n";
    }
    return out.str();
}

// ---- tc -------------------------------------------------------------------

std::string emit_tc(const RunConfig& config, const ModelSpec& spec, const std::string& note,
                    const CriticalResult& r) {
    std::ostringstream out;
    if (config.format == OutputFormat::Csv) {
        csv_header(out, config, spec, note);
        out << "t_c,bracket_low,bracket_high,tolerance,iterations,concurrence_low,"
               "concurrence_high\n";
        out << optional_tc_text(r.t_c) << "," << format_double(r.bracket_low) << ","
            << format_double(r.bracket_high) << "," << format_double(r.tolerance) << ","
            << r.iterations << "," << format_double(r.concurrence_low) << ","
            << format_double(r.concurrence_high) << "\n";
    } else {
        json j;
        j["meta"] = meta_json(config, spec, note);
        json rec;
        if (r.t_c)
            rec["t_c"] = *r.t_c;
        else
            rec["t_c"] = nullptr;
        rec["bracket"] = {r.bracket_low, r.bracket_high};
        rec["tolerance"] = r.tolerance;
        rec["iterations"] = r.iterations;
        rec["concurrence_low"] = r.concurrence_low;
        rec["concurrence_high"] = r.concurrence_high;
        j["result"] = std::move(rec);
        out << j.dump(2) << "\n";
    }
    return out.str();
}

std::string emit_sweep(const RunConfig& config, const ModelSpec& template_spec,
                       const std::string& note, const std::vector<FieldSweepRow>& rows) {
    std::ostringstream out;
    if (config.format == OutputFormat::Csv) {
        csv_header(out, config, template_spec, note);
        out << "B,t_c\n";
        for (const auto& row : rows)
            out << format_double(row.field) << "," << optional_tc_text(row.t_c) << "\n";
    } else {
        json j;
        j["meta"] = meta_json(config, template_spec, note);
        json arr = json::array();
        for (const auto& row : rows) {
            json rec;
            rec["B"] = row.field;
            if (row.t_c)
                rec["t_c"] = *row.t_c;
            else
                rec["t_c"] = nullptr;
            rec["concurrence_low"] = row.concurrence_low;
            rec["concurrence_high"] = row.concurrence_high;
            arr.push_back(std::move(rec));
        }
        j["rows"] = std::move(arr);
        out << j.dump(2) << "\n";
    }
    return out.str();
}

// ---- rho ------------------------------------------------------------------

std::string emit_rho(const RunConfig& config, const ModelSpec& spec, const std::string& note,
                     double temperature, const ComplexMatrix& rho) {
    std::ostringstream out;
    if (config.format == OutputFormat::Csv) {
        csv_header(out, config, spec, note);
        out << "# tau: " << format_double(config.tau)
            << " temperature: " << format_double(temperature) << "\n";
        out << "row,col,re,im\n";
        for (std::size_t r = 0; r < rho.dim(); ++r)
            for (std::size_t c = 0; c < rho.dim(); ++c)
                out << r << "," << c << "," << format_double(rho(r, c).real()) << ","
                    << format_double(rho(r, c).imag()) << "\n";
    } else {
        json j;
        j["meta"] = meta_json(config, spec, note);
        j["meta"]["tau"] = config.tau;
        j["meta"]["temperature"] = temperature;
        json rows = json::array();
        for (std::size_t r = 0; r < rho.dim(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < rho.dim(); ++c)
                row.push_back({{"re", rho(r, c).real()}, {"im", rho(r, c).imag()}});
            rows.push_back(std::move(row));
        }
        j["rho"] = std::move(rows);
        out << j.dump(2) << "\n";
    }
    return out.str();
}

// ---- figure ----------------------------------------------------------------

struct FigureSeries {
    std::string label;
    ModelSpec spec;
    std::string note;
    ConcurrenceCurve curve;
};

std::vector<FigureSeries> figure_series(const RunConfig& config) {
    std::vector<double> fields = config.figure_fields;
    if (fields.empty())
        fields = (config.figure == FigureId::Fig1) ? std::vector<double>{1.0, 1.5, 2.0}
                                                   : std::vector<double>{0.5, 1.0, 2.0, 10.0};
    const std::vector<double> taus = linspace(config.grid.start, config.grid.stop,
                                              config.grid.count);

    std::vector<FigureSeries> series;
    if (config.figure == FigureId::Fig1) {
        const double j = config.model.coupling;
        for (double b : fields) {
            FigureSeries s;
            s.label = "J=" + format_double(j) + " B=" + format_double(b);
            s.spec = three_site_uniform_model(j, b);
            s.note = "uniform field B=" + format_double(b) +
                     " mapped to per-site b=B (ring convention)";
            series.push_back(std::move(s));
        }
    } else {
        const double jmag = std::abs(config.model.coupling) > 0.0
                                ? std::abs(config.model.coupling)
                                : 1.0;
        for (double sign : {1.0, -1.0}) {
            for (double b : fields) {
                FigureSeries s;
                s.label = "J=" + format_double(sign * jmag) + " B=" + format_double(b);
                s.spec = three_site_impurity_model(sign * jmag, b);
                s.note = "impurity field B=" + format_double(b) + " mapped to b=B*|J| on site 3";
                series.push_back(std::move(s));
            }
        }
    }

    for (auto& s : series) {
        const std::pair<int, int> pair = (config.figure == FigureId::Fig2b)
                                             ? std::pair<int, int>{0, 2}
                                             : std::pair<int, int>{0, 1};
        try {
            s.curve = curve(s.spec, pair, taus, s.note);
        } catch (const std::exception& e) {
            throw std::runtime_error("figure series " + s.label + " failed: " + e.what());
        }
    }
    return series;
}

std::string emit_figure(const RunConfig& config, const std::vector<FigureSeries>& series) {
    std::ostringstream out;
    if (config.format == OutputFormat::Csv) {
        out << "# " << kToolVersion << "\n";
        out << "# command: figure " << to_string(config.figure) << "\n";
        for (const auto& s : series) {
            out << "# series " << s.label << ": " << model_spec_summary(s.spec)
                << " pair: " << pair_text(s.curve.pair) << "\n";
            out << "# series " << s.label << " field-convention: " << s.note << "\n";
        }
        out << "series,tau,concurrence\n";
        for (const auto& s : series)
            for (const auto& p : s.curve.points)
                out << s.label << "," << format_double(p.tau) << ","
                    << format_double(p.concurrence) << "\n";
    } else {
        json j;
        j["meta"]["generator"] = kToolVersion;
        j["meta"]["command"] = "figure " + to_string(config.figure);
        json arr = json::array();
        for (const auto& s : series) {
            json rec;
            rec["label"] = s.label;
            rec["model"] = model_json(s.spec);
            rec["pair"] = {s.curve.pair.first + 1, s.curve.pair.second + 1};
            rec["field_convention"] = s.note;
            json points = json::array();
            for (const auto& p : s.curve.points)
                points.push_back({{"tau", p.tau}, {"concurrence", p.concurrence}});
            rec["points"] = std::move(points);
            arr.push_back(std::move(rec));
        }
        j["series"] = std::move(arr);
        out << j.dump(2) << "\n";
    }
    return out.str();
}

// ---- calibrate -------------------------------------------------------------

struct CalibrationReport {
    double two_site_dev = 0.0;
    double three_site_dev = 0.0;
    double concurrence_route_dev = 0.0;
};

CalibrationReport run_calibration() {
    CalibrationReport rep;
    const std::vector<double> js = {-2.0, -1.0, 1.0, 2.0};
    const std::vector<double> bs = {0.0, 0.5, 1.0, 2.0};
    const std::vector<double> ts = {0.2, 0.5, 1.0, 2.0, 5.0};
    for (double j : js) {
        for (double b : bs) {
            for (double t : ts) {
                const ComplexMatrix closed2 = rho12_two_site(j, b, t);
                const ComplexMatrix ed2 =
                    gibbs_state(build_hamiltonian(two_site_model(j, b)), t).rho;
                rep.two_site_dev = std::max(rep.two_site_dev, max_abs_diff(closed2, ed2));

                const auto [closed3, el] = rho12_three_site_uniform(j, b, t);
                const ComplexMatrix ed3 = partial_trace(
                    gibbs_state(build_hamiltonian(three_site_uniform_model(j, b)), t).rho, {0, 1},
                    3);
                rep.three_site_dev = std::max(rep.three_site_dev, max_abs_diff(closed3, ed3));

                const double c_formula = concurrence_three_site(j, b, t);
                const double c_wootters = concurrence(closed3).concurrence;
                rep.concurrence_route_dev =
                    std::max(rep.concurrence_route_dev, std::abs(c_formula - c_wootters));
            }
        }
    }
    return rep;
}

std::string emit_calibration(const RunConfig& config, const CalibrationReport& rep) {
    std::ostringstream out;
    if (config.format == OutputFormat::Csv) {
        out << "# " << kToolVersion << "\n";
        out << "# command: calibrate\n";
        out << "# grid: J in {-2,-1,1,2} B in {0,0.5,1,2} T in {0.2,0.5,1,2,5}\n";
        out << "# two-site mapping: per-site b = B/2; three-site mapping: per-site b = B\n";
        out << "check,max_abs_deviation\n";
        out << "two_site_closed_form_vs_ed," << format_double(rep.two_site_dev) << "\n";
        out << "three_site_closed_form_vs_ed," << format_double(rep.three_site_dev) << "\n";
        out << "three_site_concurrence_routes," << format_double(rep.concurrence_route_dev)
            << "\n";
    } else {
        json j;
        j["meta"]["generator"] = kToolVersion;
        j["meta"]["command"] = "calibrate";
        j["meta"]["grid"] = "J in {-2,-1,1,2} B in {0,0.5,1,2} T in {0.2,0.5,1,2,5}";
        j["meta"]["conventions"] = "two-site: b = B/2 per site; three-site: b = B per site";
        j["two_site_closed_form_vs_ed"] = rep.two_site_dev;
        j["three_site_closed_form_vs_ed"] = rep.three_site_dev;
        j["three_site_concurrence_routes"] = rep.concurrence_route_dev;
        out << j.dump(2) << "\n";
    }
    return out.str();
}

// ---- output ----------------------------------------------------------------

void write_artifact(const RunConfig& config, const std::string& content, std::ostream& status) {
    if (config.out_path.empty()) {
        std::cout << content;
        return;
    }
    std::string path = config.out_path;
    if (path.front() != '/') {
        if (const char* dir = std::getenv(kOutputDirEnvVar); dir && *dir)
            path = std::string(dir) + "/" + path;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
    status << "wrote " << path << "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& status) {
    validate_common(config);

    switch (config.command) {
        case Command::Curve: {
            const ResolvedModel rm = resolve_model(config, single_field_value(config));
            const std::vector<double> taus =
                linspace(config.grid.start, config.grid.stop, config.grid.count);
            const ConcurrenceCurve c = curve(rm.spec, config.pair, taus, rm.note);
            write_artifact(config, emit_curve(config, c), status);
            return 0;
        }
        case Command::Tc: {
            if (config.field_pattern != FieldPattern::Explicit &&
                config.field_values.size() > 1) {
                const ResolvedModel rm = resolve_model(config, config.field_values.front());
                const auto [lo, hi] = resolve_bracket(config, rm.spec);
                const auto make_spec = [&config](double b) {
                    return resolve_model(config, b).spec;
                };
                const auto rows = sweep_field(make_spec, config.pair, config.field_values, lo, hi,
                                              config.tol);
                write_artifact(config, emit_sweep(config, rm.spec, rm.note, rows), status);
                return 0;
            }
            const ResolvedModel rm = resolve_model(config, single_field_value(config));
            const auto [lo, hi] = resolve_bracket(config, rm.spec);
            const CriticalResult r =
                find_critical_temperature(rm.spec, config.pair, lo, hi, config.tol);
            write_artifact(config, emit_tc(config, rm.spec, rm.note, r), status);
            return 0;
        }
        case Command::Rho: {
            const ResolvedModel rm = resolve_model(config, single_field_value(config));
            const double j = std::abs(rm.spec.coupling);
            if (j == 0.0) throw std::domain_error("rho: tau scaling requires a nonzero coupling");
            const double temperature = config.tau * j;
            const ComplexMatrix h = build_hamiltonian(rm.spec);
            const ThermalState state = gibbs_state(h, temperature);
            auto pair = config.pair;
            if (pair.first > pair.second) std::swap(pair.first, pair.second);
            const ComplexMatrix reduced =
                partial_trace(state.rho, {pair.first, pair.second}, rm.spec.n_sites);
            write_artifact(config, emit_rho(config, rm.spec, rm.note, temperature, reduced),
                           status);
            return 0;
        }
        case Command::Figure: {
            const auto series = figure_series(config);
            write_artifact(config, emit_figure(config, series), status);
            return 0;
        }
        case Command::Calibrate: {
            const CalibrationReport rep = run_calibration();
            status << "two-site closed form vs exact diagonalization (b = B/2): max |dev| = "
                   << format_double(rep.two_site_dev) << "\n";
            status << "three-site closed form vs exact diagonalization (b = B): max |dev| = "
                   << format_double(rep.three_site_dev) << "\n";
            status << "three-site concurrence formula vs Wootters route: max |dev| = "
                   << format_double(rep.concurrence_route_dev) << "\n";
            write_artifact(config, emit_calibration(config, rep), status);
            return 0;
        }
    }
    throw std::logic_error("unhandled command");
}

}  // namespace spinring
