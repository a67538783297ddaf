#include "ptwell/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ptwell/classical.hpp"
#include "ptwell/error.hpp"
#include "ptwell/limit.hpp"
#include "ptwell/wkb.hpp"

namespace ptwell::report {

using ojson = nlohmann::ordered_json;

namespace {

std::string fixed5(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5f", v);
    return buf;
}

std::string fixed5(const std::optional<double>& v) { return v ? fixed5(*v) : std::string(); }

// Shortest form that reads back to the same double ("8", "0.5", ...).
std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

ojson optional_number(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::optional<double> parse_cell(const std::string& cell) {
    if (cell.empty()) return std::nullopt;
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw DomainError("csv: malformed number '" + cell + "'");
    return v;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

void validate(const RunConfig& c) {
    if (c.table_id && c.command != Command::table) throw DomainError("config: --table is only valid with 'table'");
    if (c.command == Command::table && !c.table_id) throw DomainError("config: 'table' needs --table 1|2|3");
    if (c.table_id && (*c.table_id < 1 || *c.table_id > 3)) throw DomainError("config: table id must be 1, 2 or 3");
    if (!(c.tol >= 1e-13 && c.tol <= 1e-6)) throw DomainError("config: tol must lie in [1e-13, 1e-6]");
    if (!(c.radius_factor >= 1.0)) throw DomainError("config: radius factor must be >= 1");
    if (c.M < 1) throw DomainError("config: M must be >= 1");
    if (!(c.epsilon >= 0.0)) throw DomainError("config: epsilon must be >= 0");
    if (c.k < 0 || (c.k_max && *c.k_max < 0)) throw DomainError("config: level indices must be >= 0");
    if (c.command == Command::figure1) {
        if (!(c.eps_max >= 0.0 && c.eps_max <= 10.0)) throw DomainError("config: eps-max must lie in [0, 10]");
        if (!(c.step > 0.0)) throw DomainError("config: step must be positive");
    }
    if (c.command == Command::period && !(c.E > 0.0)) throw DomainError("config: E must be positive");
}

shooting::Options solver_options(double tol, double radius_factor) {
    shooting::Options opt;
    opt.tol = tol;
    opt.rtol = std::clamp(0.1 * tol, 1e-13, 1e-11);
    opt.radius_factor = radius_factor;
    return opt;
}

// ---- tables ----------------------------------------------------------------

std::vector<double> table_labels() { return {8.0, 18.0, 28.0, 38.0, 48.0, 58.0}; }

double table_model_epsilon(int table_id, double label) { return table_id == 2 ? label - 2.0 : label; }

TableReport assemble_table(int table_id, const std::vector<std::optional<double>>& energies) {
    if (table_id < 1 || table_id > 3) throw DomainError("table id must be 1, 2 or 3");
    const std::vector<double> labels = table_labels();
    if (energies.size() != labels.size()) throw DomainError("assemble_table: one energy per row required");
    TableReport rep;
    rep.table_id = table_id;
    rep.M = table_id == 2 ? 2 : 1;
    rep.value_column = table_id == 3 ? "R0" : "F";

    std::vector<double> grid;
    for (double l : labels) grid.push_back(table_model_epsilon(table_id, l));
    std::vector<std::optional<double>> seq(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        TableRow row{labels[i], grid[i], energies[i], std::nullopt, std::nullopt, std::nullopt, energies[i].has_value(),
                     energies[i] ? "" : "ground-state solve failed"};
        if (energies[i]) {
            const double F = limit::F_of_eps(*energies[i], grid[i], rep.M);
            seq[i] = table_id == 3 ? (F - 1.0 / 16.0) * grid[i] : F;
            row.value = seq[i];
        }
        rep.rows.push_back(row);
    }
    // extrapolants from the window ending at each row, where all of it is available
    for (int order = 1; order <= 2; ++order) {
        for (std::size_t n = order; n < labels.size(); ++n) {
            std::vector<double> e, v;
            for (std::size_t j = n - order; j <= n; ++j) {
                if (!seq[j]) break;
                e.push_back(grid[j]);
                v.push_back(*seq[j]);
            }
            if (v.size() != static_cast<std::size_t>(order) + 1) continue;
            const double r = extrapolation::richardson(e, v, order).front();
            (order == 1 ? rep.rows[n].R1 : rep.rows[n].R2) = r;
        }
    }
    rep.all_converged = std::all_of(rep.rows.begin(), rep.rows.end(), [](const TableRow& r) { return r.converged; });
    return rep;
}

TableReport run_table(int table_id, const shooting::Options& opt) {
    if (table_id < 1 || table_id > 3) throw DomainError("table id must be 1, 2 or 3");
    const int M = table_id == 2 ? 2 : 1;
    std::vector<ModelSpec> grid;
    for (double l : table_labels()) grid.push_back(ModelSpec{M, table_model_epsilon(table_id, l)});
    const shooting::ScanResult scan = shooting::scan_levels(grid, 0, opt);
    std::vector<std::optional<double>> energies;
    std::vector<std::string> messages;
    for (const shooting::ScanPoint& p : scan.points) {
        energies.push_back(p.result.converged ? std::optional<double>(p.result.E.real()) : std::nullopt);
        messages.push_back(p.result.message);
    }
    TableReport rep = assemble_table(table_id, energies);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        if (!messages[i].empty()) rep.rows[i].message = messages[i];
    }
    return rep;
}

std::string table_csv(const TableReport& rep) {
    std::string out = "epsilon,E0," + rep.value_column + ",R1,R2\n";
    for (const TableRow& r : rep.rows) {
        out += shortest(r.epsilon) + "," + fixed5(r.E0) + "," + fixed5(r.value) + "," + fixed5(r.R1) + "," +
               fixed5(r.R2) + "\n";
    }
    return out;
}

std::string table_json(const TableReport& rep) {
    ojson rows = ojson::array();
    for (const TableRow& r : rep.rows) {
        rows.push_back({{"epsilon", r.epsilon},
                        {"model_epsilon", r.model_epsilon},
                        {"E0", optional_number(r.E0)},
                        {rep.value_column, optional_number(r.value)},
                        {"R1", optional_number(r.R1)},
                        {"R2", optional_number(r.R2)},
                        {"converged", r.converged},
                        {"message", r.message}});
    }
    return dump({{"table", rep.table_id}, {"model", {{"M", rep.M}}}, {"rows", rows}});
}

TableReport parse_table_csv(int table_id, const std::string& text) {
    TableReport rep;
    rep.table_id = table_id;
    rep.M = table_id == 2 ? 2 : 1;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw DomainError("csv: empty input");
    const std::vector<std::string> head = split(line, ',');
    if (head.size() != 5 || head[0] != "epsilon" || head[1] != "E0" || head[3] != "R1" || head[4] != "R2") {
        throw DomainError("csv: unexpected header '" + line + "'");
    }
    rep.value_column = head[2];
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != 5) throw DomainError("csv: expected 5 cells in '" + line + "'");
        TableRow r{};
        r.epsilon = *parse_cell(cells[0]);
        r.model_epsilon = table_model_epsilon(table_id, r.epsilon);
        r.E0 = parse_cell(cells[1]);
        r.value = parse_cell(cells[2]);
        r.R1 = parse_cell(cells[3]);
        r.R2 = parse_cell(cells[4]);
        r.converged = r.E0.has_value();
        rep.rows.push_back(r);
    }
    rep.all_converged = std::all_of(rep.rows.begin(), rep.rows.end(), [](const TableRow& r) { return r.converged; });
    return rep;
}

// ---- figure ----------------------------------------------------------------

FigureReport run_figure1(double eps_max, int k_max, double step, const shooting::Options& opt) {
    if (!(eps_max >= 0.0 && eps_max <= 10.0)) throw DomainError("run_figure1: eps_max must lie in [0, 10]");
    if (!(step > 0.0)) throw DomainError("run_figure1: step must be positive");
    if (k_max < 0) throw DomainError("run_figure1: k_max must be >= 0");
    std::vector<ModelSpec> grid;
    const int n = static_cast<int>(std::floor(eps_max / step + 1e-9));
    for (int i = 0; i <= n; ++i) grid.push_back(ModelSpec{1, i * step});
    if (eps_max - n * step > 1e-9 * std::max(1.0, eps_max)) grid.push_back(ModelSpec{1, eps_max});
    const shooting::ScanResult scan = shooting::scan_levels(grid, k_max, opt);

    FigureReport rep;
    rep.k_max = k_max;
    rep.curves.resize(k_max + 1);
    rep.monotone = scan.monotone;
    rep.all_converged = true;
    for (const shooting::ScanPoint& p : scan.points) {
        const bool ok = p.result.converged;
        rep.all_converged = rep.all_converged && ok;
        rep.curves[p.result.k].push_back(
            {p.model.epsilon, ok ? p.result.E.real() : std::numeric_limits<double>::quiet_NaN(), ok});
    }
    return rep;
}

std::string figure_csv(const FigureReport& rep) {
    std::string out = "k,epsilon,E,converged\n";
    for (std::size_t k = 0; k < rep.curves.size(); ++k) {
        for (const CurvePoint& p : rep.curves[k]) {
            out += std::to_string(k) + "," + shortest(p.epsilon) + "," + (p.converged ? shortest(p.E) : "") + "," +
                   (p.converged ? "true" : "false") + "\n";
        }
    }
    return out;
}

std::string figure_json(const FigureReport& rep) {
    ojson curves = ojson::array();
    for (std::size_t k = 0; k < rep.curves.size(); ++k) {
        ojson pts = ojson::array();
        for (const CurvePoint& p : rep.curves[k]) {
            pts.push_back({{"epsilon", p.epsilon}, {"E", p.converged ? ojson(p.E) : ojson(nullptr)}, {"converged", p.converged}});
        }
        curves.push_back({{"k", k}, {"monotone", static_cast<bool>(rep.monotone[k])}, {"points", pts}});
    }
    return dump({{"model", {{"M", 1}}}, {"curves", curves}});
}

// ---- single solves -----------------------------------------------------------

bool EigenReport::all_converged() const {
    return std::all_of(results.begin(), results.end(), [](const shooting::EigenResult& r) { return r.converged; });
}

EigenReport run_eigen(const ModelSpec& model, int k_min, int k_max, const shooting::Options& opt) {
    validate(model);
    if (k_min < 0 || k_max < k_min) throw DomainError("run_eigen: need 0 <= k_min <= k_max");
    EigenReport rep{model, {}};
    for (int k = k_min; k <= k_max; ++k) {
        try {
            rep.results.push_back(shooting::solve_level(model, k, std::nullopt, opt));
        } catch (const Error& e) {
            shooting::EigenResult r;
            r.k = k;
            r.message = e.what();
            rep.results.push_back(r);
        }
    }
    return rep;
}

std::string eigen_csv(const EigenReport& rep) {
    std::string out = "k,E,residual,converged\n";
    for (const shooting::EigenResult& r : rep.results) {
        out += std::to_string(r.k) + "," + shortest(r.E.real()) + "," + shortest(r.residual) + "," +
               (r.converged ? "true" : "false") + "\n";
    }
    return out;
}

std::string eigen_json(const EigenReport& rep) {
    ojson results = ojson::array();
    for (const shooting::EigenResult& r : rep.results) {
        results.push_back({{"k", r.k}, {"E", r.E.real()}, {"residual", r.residual}, {"converged", r.converged}});
    }
    return dump({{"model", {{"M", rep.model.M}, {"epsilon", rep.model.epsilon}}}, {"results", results}});
}

EigenReport parse_eigen_json(const std::string& text) {
    const ojson j = ojson::parse(text);
    EigenReport rep;
    rep.model.M = j.at("model").at("M").get<int>();
    rep.model.epsilon = j.at("model").at("epsilon").get<double>();
    for (const ojson& r : j.at("results")) {
        shooting::EigenResult e;
        e.k = r.at("k").get<int>();
        e.E = r.at("E").get<double>();
        e.residual = r.at("residual").get<double>();
        e.converged = r.at("converged").get<bool>();
        rep.results.push_back(e);
    }
    return rep;
}

std::string wkb_output(const ModelSpec& model, int k_max, Format format) {
    validate(model);
    std::string csv = "k,E_quadrature,E_closed,E_next\n";
    ojson results = ojson::array();
    for (int k = 0; k <= k_max; ++k) {
        const double quad = wkb::energy_quadrature(model, k);
        std::optional<double> closed, next;
        if (model.M == 1) {
            closed = wkb::energy_closed(k, model.epsilon);
            next = wkb::energy_next(k, model.epsilon);
        }
        csv += std::to_string(k) + "," + shortest(quad) + "," + (closed ? shortest(*closed) : "") + "," +
               (next ? shortest(*next) : "") + "\n";
        results.push_back({{"k", k},
                           {"E_quadrature", quad},
                           {"E_closed", optional_number(closed)},
                           {"E_next", optional_number(next)}});
    }
    if (format == Format::csv) return csv;
    return dump({{"model", {{"M", model.M}, {"epsilon", model.epsilon}}}, {"results", results}});
}

std::string limit_output(int M, int k_max, Format format) {
    const std::vector<limit::LimitLevel> levels = limit::nu_spectrum(M, k_max);
    const bool has_condition = M == 1 || M == 2;
    std::string csv = "k,P,nu,F,quantization_residual\n";
    ojson results = ojson::array();
    for (const limit::LimitLevel& l : levels) {
        std::optional<double> q;
        if (has_condition) q = limit::quantization_residual(M, l.nu);
        csv += std::to_string(l.k) + "," + std::to_string(l.P) + "," + shortest(l.nu) + "," + shortest(l.F) + "," +
               (q ? shortest(*q) : "") + "\n";
        results.push_back(
            {{"k", l.k}, {"P", l.P}, {"nu", l.nu}, {"F", l.F}, {"quantization_residual", optional_number(q)}});
    }
    if (format == Format::csv) return csv;
    return dump({{"model", {{"M", M}}}, {"results", results}});
}

std::string period_output(double epsilon, double E, Format format) {
    const classical::PeriodResult p = classical::period_exact(epsilon, E);
    std::optional<double> asym;
    if (epsilon > 0.0) asym = classical::period_asymptotic(epsilon, E);
    if (format == Format::csv) {
        return "epsilon,E,T,ET_product,T_asymptotic\n" + shortest(epsilon) + "," + shortest(E) + "," + shortest(p.T) + "," +
               shortest(p.ET_product) + "," + (asym ? shortest(*asym) : "") + "\n";
    }
    return dump({{"model", {{"M", 1}, {"epsilon", epsilon}}},
                 {"results", ojson::array({{{"E", E}, {"T", p.T}, {"ET_product", p.ET_product},
                                            {"T_asymptotic", optional_number(asym)}}})}});
}

RunOutput run(const RunConfig& c) {
    validate(c);
    const shooting::Options opt = solver_options(c.tol, c.radius_factor);
    const bool csv = c.format == Format::csv;
    switch (c.command) {
        case Command::eigen: {
            const int lo = c.k_max ? 0 : c.k;
            const int hi = c.k_max ? *c.k_max : c.k;
            const EigenReport rep = run_eigen(ModelSpec{c.M, c.epsilon}, lo, hi, opt);
            return {csv ? eigen_csv(rep) : eigen_json(rep), rep.all_converged()};
        }
        case Command::wkb:
            return {wkb_output(ModelSpec{c.M, c.epsilon}, c.k_max.value_or(c.k), c.format), true};
        case Command::limit:
            return {limit_output(c.M, c.k_max.value_or(c.k), c.format), true};
        case Command::table: {
            const TableReport rep = run_table(*c.table_id, opt);
            return {csv ? table_csv(rep) : table_json(rep), rep.all_converged};
        }
        case Command::figure1: {
            const FigureReport rep = run_figure1(c.eps_max, c.k_max.value_or(4), c.step, opt);
            return {csv ? figure_csv(rep) : figure_json(rep), rep.all_converged};
        }
        case Command::period:
            return {period_output(c.epsilon, c.E, c.format), true};
    }
    throw DomainError("unknown command");
}

}  // namespace ptwell::report
