#ifndef SPINRING_RUN_HPP
#define SPINRING_RUN_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spinring/spin_model.hpp"

namespace spinring {

inline constexpr const char* kToolVersion = "spinring 0.1.0";
/// Default output directory is taken from this environment variable when
/// the output path is relative.
inline constexpr const char* kOutputDirEnvVar = "SPINRING_OUT_DIR";

enum class Command { Curve, Tc, Rho, Figure, Calibrate };
enum class OutputFormat { Csv, Json };
enum class FigureId { Fig1, Fig2a, Fig2b };

/// How per-site fields were specified. Uniform and Impurity values are in
/// the conventions of the closed forms (see closed_form.hpp); Explicit
/// fields are raw engine fields b_n.
enum class FieldPattern { Explicit, Uniform, Impurity };

struct GridSpec {
    double start = 0.02;
    double stop = 3.0;
    int count = 150;
};

struct RunConfig {
    Command command = Command::Curve;
    ModelSpec model;  // fields member is used when field_pattern == Explicit
    FieldPattern field_pattern = FieldPattern::Explicit;
    std::vector<double> field_values;  // swept B values for Uniform/Impurity
    std::pair<int, int> pair{0, 1};    // 0-based site indices
    GridSpec grid;
    double tau = 1.0;  // scaled temperature for the rho command
    double bracket_low = 0.0;   // 0 selects the default (0.01, 5)*|J|
    double bracket_high = 0.0;
    double tol = 1e-6;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;  // empty writes the artifact to stdout
    FigureId figure = FigureId::Fig1;
    std::vector<double> figure_fields;  // empty selects per-figure defaults
};

/// Executes the command and writes the artifact; returns the process exit
/// status. Progress and calibration summaries go to `status`.
int run(const RunConfig& config, std::ostream& status);

/// Fixed 15-significant-digit decimal rendering used by all emitters.
std::string format_double(double v);

std::vector<double> linspace(double start, double stop, int count);

std::string to_string(Command c);
std::string to_string(FigureId f);
Command command_from_string(const std::string& s);
FigureId figure_from_string(const std::string& s);
OutputFormat format_from_string(const std::string& s);

}  // namespace spinring

#endif
