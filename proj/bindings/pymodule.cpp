// Python bindings for the main library operations.  Structured inputs and
// results cross the boundary as JSON strings; the diskfit python package
// wraps them with dict conveniences.

#include "diskfit/cases.hpp"
#include "diskfit/config.hpp"
#include "diskfit/errors.hpp"
#include "diskfit/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

namespace py = pybind11;

namespace {

using Cd = std::complex<double>;

diskfit::XComplex to_xc(const Cd& z) { return {z.real(), z.imag()}; }
Cd to_cd(const diskfit::XComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

std::string fit_json(const std::string& config_json) {
    diskfit::config::ParsedConfig cfg = diskfit::config::parse_fit_config(config_json);
    diskfit::FitResult result = diskfit::fit(cfg.problem, cfg.options);
    return diskfit::config::fit_result_json(cfg, result);
}

diskfit::NormKind parse_norm(const std::string& norm, const std::string& geometry) {
    bool interior = geometry == "interior";
    if (norm == "sigma")
        return interior ? diskfit::NormKind::SigmaInterior
                        : diskfit::NormKind::SigmaExterior;
    if (norm == "dirichlet")
        return interior ? diskfit::NormKind::DirichletInterior
                        : diskfit::NormKind::DirichletExterior;
    if (norm == "energy") return diskfit::NormKind::EnergyReal;
    throw diskfit::ConfigError("unknown norm: " + norm);
}

diskfit::BasisElement parse_element(const std::string& kind, const Cd& z, int order,
                                    const Cd& paired) {
    diskfit::BasisElement b;
    b.location = to_xc(z);
    b.order = order;
    b.paired = to_xc(paired);
    if (kind == "pole")
        b.kind = order > 1 ? diskfit::BasisKind::HigherPole
                           : diskfit::BasisKind::SimplePole;
    else if (kind == "log_origin")
        b.kind = diskfit::BasisKind::LogOrigin;
    else if (kind == "log_paired")
        b.kind = diskfit::BasisKind::LogPaired;
    else if (kind == "inverse_z")
        b.kind = diskfit::BasisKind::InverseZ;
    else if (kind == "real_log")
        b.kind = diskfit::BasisKind::RealLog;
    else if (kind == "real_dipole_x")
        b.kind = diskfit::BasisKind::RealDipoleX;
    else if (kind == "real_dipole_y")
        b.kind = diskfit::BasisKind::RealDipoleY;
    else
        throw diskfit::ConfigError("unknown basis kind: " + kind);
    return b;
}

Cd gram_entry_py(const std::string& norm, const std::string& geometry,
                 const std::string& row_kind, const Cd& row_z, int row_order,
                 const std::string& col_kind, const Cd& col_z, int col_order) {
    diskfit::Geometry geo = geometry == "interior" ? diskfit::Geometry::Interior
                                                   : diskfit::Geometry::Exterior;
    diskfit::BasisElement row = parse_element(row_kind, row_z, row_order, Cd(0));
    diskfit::BasisElement col = parse_element(col_kind, col_z, col_order, Cd(0));
    return to_cd(diskfit::gram_entry(parse_norm(norm, geometry), geo, row, col));
}

Cd moment_entry_py(const std::string& norm, const std::string& geometry,
                   const std::string& kind, const Cd& z, int order,
                   const std::string& target) {
    diskfit::Geometry geo = geometry == "interior" ? diskfit::Geometry::Interior
                                                   : diskfit::Geometry::Exterior;
    diskfit::BasisElement b = parse_element(kind, z, order, Cd(0));
    return to_cd(diskfit::moment_entry(parse_norm(norm, geometry), geo, b,
                                       diskfit::builtin_target(target)));
}

Cd cauchy_determinant_py(const std::vector<Cd>& sources) {
    std::vector<diskfit::XComplex> zs;
    zs.reserve(sources.size());
    for (const Cd& z : sources) zs.push_back(to_xc(z));
    return to_cd(diskfit::cauchy_determinant(zs));
}

Cd target_value_py(const std::string& name, const Cd& z) {
    return to_cd(diskfit::builtin_target(name).eval(to_xc(z)));
}

py::dict target_summary_py(const std::string& name, int count) {
    diskfit::TargetFunction t = diskfit::builtin_target(name);
    diskfit::EvalStats s = diskfit::target_summary(
        t, diskfit::RingSpec{diskfit::XReal(1), count, diskfit::XReal(0)});
    py::dict d;
    d["avg_magnitude"] = s.avg_magnitude.to_double();
    d["max_magnitude"] = s.max_magnitude.to_double();
    d["sigma_norm"] = s.sigma_norm_estimate.to_double();
    return d;
}

py::dict reproduce_py(const std::string& table) {
    diskfit::cases::TableReport rep;
    if (table == "table1")
        rep = diskfit::cases::report_summary_table();
    else if (table == "table2-3")
        rep = diskfit::cases::report_case_table();
    else if (table == "r2case")
        rep = diskfit::cases::report_planar();
    else if (table == "detcheck")
        rep = diskfit::cases::report_detcheck();
    else
        throw diskfit::ConfigError("unknown table: " + table);
    py::dict d;
    d["pass"] = rep.pass();
    d["csv"] = rep.csv;
    py::list lines;
    for (const auto& l : rep.lines) {
        py::dict e;
        e["name"] = l.name;
        e["pass"] = l.pass;
        e["detail"] = l.detail;
        lines.append(e);
    }
    d["lines"] = lines;
    return d;
}

py::list verify_py(const std::string& suite) {
    py::list out;
    for (const auto& r : diskfit::verify::run_suite(suite)) {
        py::dict e;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        out.append(e);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_diskfit, m) {
    m.doc() = "Closed-form least-squares pole/log-source fits on unit-disk geometries";

    py::register_exception<diskfit::ConfigError>(m, "ConfigError");
    py::register_exception<diskfit::ContractError>(m, "ContractError");

    m.def("fit_json", &fit_json, py::arg("config_json"),
          "Run a fit from a JSON config string; returns the result JSON");
    m.def("gram_entry", &gram_entry_py, py::arg("norm"), py::arg("geometry"),
          py::arg("row_kind"), py::arg("row_z"), py::arg("row_order"),
          py::arg("col_kind"), py::arg("col_z"), py::arg("col_order"),
          "Closed-form inner product (B_row, B_col)");
    m.def("moment_entry", &moment_entry_py, py::arg("norm"), py::arg("geometry"),
          py::arg("kind"), py::arg("z"), py::arg("order"), py::arg("target"),
          "Closed-form moment (B, f) for a builtin target");
    m.def("cauchy_determinant", &cauchy_determinant_py, py::arg("sources"),
          "det T for the exterior-sigma simple-pole system");
    m.def("target_value", &target_value_py, py::arg("name"), py::arg("z"),
          "Evaluate a builtin target");
    m.def("target_summary", &target_summary_py, py::arg("name"),
          py::arg("count") = 1000, "Ring statistics of a builtin target");
    m.def("reproduce", &reproduce_py, py::arg("table"),
          "Run a built-in experiment table; returns {pass, csv, lines}");
    m.def("verify", &verify_py, py::arg("suite"),
          "Run a property-check suite; returns a list of {name, pass, detail}");
}
