// diskfit: closed-form least-squares fits of analytic and planar harmonic
// functions over unit-disk geometries, with built-in reproduction tables and
// verification suites.
//
// Exit codes: 0 success, 1 tolerance failure, 2 configuration error,
// 3 numerical failure.

#include "diskfit/cases.hpp"
#include "diskfit/config.hpp"
#include "diskfit/errors.hpp"
#include "diskfit/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 2;
    }
    out << content;
    return 0;
}

int cmd_reproduce(const std::string& table, const std::string& out_path) {
    diskfit::cases::TableReport rep;
    if (table == "table1")
        rep = diskfit::cases::report_summary_table();
    else if (table == "table2-3")
        rep = diskfit::cases::report_case_table();
    else if (table == "r2case")
        rep = diskfit::cases::report_planar();
    else if (table == "detcheck")
        rep = diskfit::cases::report_detcheck();
    else {
        std::cerr << "error: unknown table '" << table
                  << "' (expected table1, table2-3, r2case or detcheck)\n";
        return 2;
    }
    for (const auto& line : rep.lines)
        std::cerr << (line.pass ? "ok   " : "FAIL ") << line.name << "  " << line.detail
                  << "\n";
    int rc = write_output(out_path, rep.csv);
    if (rc != 0) return rc;
    return rep.pass() ? 0 : 1;
}

int cmd_fit(const std::string& config_path, const std::string& out_path) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read config " << config_path << "\n";
        return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    diskfit::config::ParsedConfig cfg = diskfit::config::parse_fit_config(ss.str());
    diskfit::FitResult result = diskfit::fit(cfg.problem, cfg.options);
    return write_output(out_path, diskfit::config::fit_result_json(cfg, result));
}

int cmd_verify(const std::string& suite) {
    auto results = diskfit::verify::run_suite(suite);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << "  " << r.detail << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Least-squares pole and log-source fits on unit-disk geometries"};
    app.require_subcommand(1);

    std::string table, out_path, config_path, suite;

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "Run a built-in experiment table, emit CSV");
    reproduce->add_option("table", table, "table1 | table2-3 | r2case | detcheck")
        ->required();
    reproduce->add_option("-o,--out", out_path, "output CSV path (default stdout)");

    CLI::App* fit = app.add_subcommand("fit", "Run a fit described by a JSON config");
    fit->add_option("config", config_path, "path to the JSON config")->required();
    fit->add_option("-o,--out", out_path, "output JSON path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "Run a property-check suite");
    verify->add_option("suite", suite, "kernels | linalg | appendixB | all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (reproduce->parsed()) return cmd_reproduce(table, out_path);
        if (fit->parsed()) return cmd_fit(config_path, out_path);
        if (verify->parsed()) return cmd_verify(suite);
    } catch (const diskfit::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const diskfit::ContractError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
