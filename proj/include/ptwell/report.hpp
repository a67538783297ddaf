#pragma once

// Runs behind the command-line tool: table and figure reproductions, single
// solves, and their CSV / JSON forms.

#include <optional>
#include <string>
#include <vector>

#include "ptwell/extrapolation.hpp"
#include "ptwell/geometry.hpp"
#include "ptwell/shooting.hpp"

namespace ptwell::report {

enum class Command { eigen, wkb, limit, table, figure1, period };
enum class Format { csv, json };

struct RunConfig {
    Command command = Command::eigen;
    int M = 1;
    double epsilon = 0.0;
    int k = 0;
    std::optional<int> k_max;
    std::optional<int> table_id;
    double tol = 1e-10;
    double radius_factor = 1.0;
    Format format = Format::csv;
    std::string output_path;  // empty: standard output
    double E = 1.0;           // period
    double eps_max = 4.0;     // figure1
    double step = 0.5;        // figure1
};

// Throws DomainError when the combination of fields is invalid.
void validate(const RunConfig& config);

shooting::Options solver_options(double tol, double radius_factor = 1.0);

// ---- tables ----------------------------------------------------------------

struct TableRow {
    double epsilon;        // row label as printed
    double model_epsilon;  // eps of the Hamiltonian actually solved
    std::optional<double> E0;
    std::optional<double> value;  // F (tables 1, 2) or R0 (table 3)
    std::optional<double> R1;
    std::optional<double> R2;
    bool converged = false;
    std::string message;
};

struct TableReport {
    int table_id = 1;
    int M = 1;
    std::string value_column;  // "F" or "R0"
    std::vector<TableRow> rows;
    bool all_converged = false;
};

// Row labels 8, 18, ..., 58. Tables 1 and 3 solve M = 1 at the label. Table 2
// solves x^4 (ix)^eps at eps = label - 2, i.e. -x^2 (ix)^label, which is the
// convention its printed energies follow; F and the extrapolation use the
// model eps.
TableReport run_table(int table_id, const shooting::Options& opt = {});

// Same, from given ground-state energies (one per row, empty = failed solve).
TableReport assemble_table(int table_id, const std::vector<std::optional<double>>& energies);

std::vector<double> table_labels();
double table_model_epsilon(int table_id, double label);

std::string table_csv(const TableReport& report);
std::string table_json(const TableReport& report);
TableReport parse_table_csv(int table_id, const std::string& text);

// ---- figure ----------------------------------------------------------------

struct CurvePoint {
    double epsilon;
    double E;
    bool converged;
};

struct FigureReport {
    int k_max = 0;
    std::vector<std::vector<CurvePoint>> curves;  // one per level
    std::vector<bool> monotone;
    bool all_converged = false;
};

// M = 1 levels k = 0..k_max on eps = 0, step, ..., eps_max.
FigureReport run_figure1(double eps_max, int k_max, double step, const shooting::Options& opt = {});
std::string figure_csv(const FigureReport& report);
std::string figure_json(const FigureReport& report);

// ---- single solves -----------------------------------------------------------

struct EigenReport {
    ModelSpec model;
    std::vector<shooting::EigenResult> results;
    bool all_converged() const;
};

EigenReport run_eigen(const ModelSpec& model, int k_min, int k_max, const shooting::Options& opt = {});
std::string eigen_csv(const EigenReport& report);
std::string eigen_json(const EigenReport& report);
// Inverse of eigen_json: eigen_json(parse_eigen_json(s)) == s for any s it produced.
EigenReport parse_eigen_json(const std::string& text);

std::string wkb_output(const ModelSpec& model, int k_max, Format format);
std::string limit_output(int M, int k_max, Format format);
std::string period_output(double epsilon, double E, Format format);

// Executes a validated config and returns {text, success}.
struct RunOutput {
    std::string text;
    bool success;
};
RunOutput run(const RunConfig& config);

}  // namespace ptwell::report
