// ptwell: spectra of p^2 + x^{2M} (ix)^eps from the command line.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ptwell/error.hpp"
#include "ptwell/report.hpp"

namespace {

using ptwell::report::Command;
using ptwell::report::Format;
using ptwell::report::RunConfig;

struct Flags {
    bool model = false;
    bool levels = false;
    bool solver = false;
};

void add_options(CLI::App* sub, RunConfig& cfg, std::optional<int>& k_max, Flags f) {
    static const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
    if (f.model) {
        sub->add_option("--M", cfg.M, "power index M >= 1")->capture_default_str();
        sub->add_option("--epsilon", cfg.epsilon, "deformation eps >= 0")->capture_default_str();
    }
    if (f.levels) {
        sub->add_option("--k", cfg.k, "level index")->capture_default_str();
        sub->add_option("--k-max", k_max, "levels 0..k-max");
    }
    if (f.solver) {
        sub->add_option("--tol", cfg.tol, "relative eigenvalue tolerance in [1e-13, 1e-6]")->capture_default_str();
        sub->add_option("--radius-factor", cfg.radius_factor, "outer radius multiplier")->capture_default_str();
    }
    sub->add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", cfg.output_path, "write to this file instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra of PT-symmetric Hamiltonians p^2 + x^{2M}(ix)^eps"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::optional<int> k_max;
    std::optional<int> table_id;

    auto* eigen = app.add_subcommand("eigen", "shooting eigenvalues");
    add_options(eigen, cfg, k_max, {true, true, true});
    auto* wkb = app.add_subcommand("wkb", "WKB estimates");
    add_options(wkb, cfg, k_max, {true, true, false});
    auto* lim = app.add_subcommand("limit", "large-eps spectrum");
    lim->add_option("--M", cfg.M, "power index M >= 1")->capture_default_str();
    add_options(lim, cfg, k_max, {false, true, false});
    auto* table = app.add_subcommand("table", "reproduce a ground-state table");
    table->add_option("--table", table_id, "table id 1, 2 or 3")->required()->check(CLI::Range(1, 3));
    add_options(table, cfg, k_max, {false, false, true});
    auto* fig = app.add_subcommand("figure1", "M = 1 level curves for eps in [0, eps-max]");
    fig->add_option("--eps-max", cfg.eps_max, "largest eps (<= 10)")->capture_default_str();
    fig->add_option("--step", cfg.step, "eps spacing")->capture_default_str();
    fig->add_option("--k-max", k_max, "levels 0..k-max (default 4)");
    add_options(fig, cfg, k_max, {false, false, true});
    auto* period = app.add_subcommand("period", "classical period");
    period->add_option("--epsilon", cfg.epsilon, "deformation eps >= 0")->capture_default_str();
    period->add_option("--E", cfg.E, "energy E > 0")->capture_default_str();
    add_options(period, cfg, k_max, {false, false, false});

    CLI11_PARSE(app, argc, argv);

    const std::map<CLI::App*, Command> commands{{eigen, Command::eigen}, {wkb, Command::wkb},
                                                {lim, Command::limit},  {table, Command::table},
                                                {fig, Command::figure1}, {period, Command::period}};
    for (const auto& [sub, cmd] : commands) {
        if (sub->parsed()) cfg.command = cmd;
    }
    cfg.k_max = k_max;
    cfg.table_id = table_id;

    try {
        const ptwell::report::RunOutput out = ptwell::report::run(cfg);
        if (cfg.output_path.empty()) {
            std::cout << out.text;
        } else {
            std::ofstream file(cfg.output_path, std::ios::binary);
            if (!file) {
                std::cerr << "error: cannot open " << cfg.output_path << "\n";
                return 2;
            }
            file << out.text;
        }
        if (!out.success) std::cerr << "warning: at least one solve did not converge\n";
        return out.success ? 0 : 1;
    } catch (const ptwell::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ptwell::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
