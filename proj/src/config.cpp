#include "diskfit/config.hpp"

#include "diskfit/errors.hpp"

#include <json.hpp>

namespace diskfit::config {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing field");
    return *it;
}

XComplex parse_point(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(path, "expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

void parse_basis_element(const json& j, const std::string& path, NormKind norm,
                         std::vector<BasisElement>& out) {
    if (!j.is_object()) fail(path, "expected an object");
    std::string kind = require(j, "kind", path).get<std::string>();

    BasisElement b;
    bool needs_z = true;
    if (kind == "pole" || kind == "pole_order_m") {
        b.kind = BasisKind::SimplePole;
        if (j.contains("order")) {
            int m = j["order"].get<int>();
            if (m < 1 || m > 5) fail(path + ".order", "pole order must be in [1,5]");
            b.order = m;
            if (m > 1) b.kind = BasisKind::HigherPole;
        } else if (kind == "pole_order_m") {
            fail(path + ".order", "pole_order_m requires an order field");
        }
    } else if (kind == "log_origin") {
        b.kind = BasisKind::LogOrigin;
    } else if (kind == "log_paired") {
        b.kind = BasisKind::LogPaired;
        b.paired = parse_point(require(j, "paired", path), path + ".paired");
    } else if (kind == "inverse_z") {
        b.kind = BasisKind::InverseZ;
        needs_z = false;
    } else if (kind == "real_log") {
        b.kind = BasisKind::RealLog;
    } else if (kind == "real_dipole") {
        // expands to the X/Y completion pair at this location
        b.kind = BasisKind::RealDipoleX;
    } else {
        fail(path + ".kind", "unknown kind '" + kind + "'");
    }
    if (needs_z) b.location = parse_point(require(j, "z", path), path + ".z");

    if (norm == NormKind::EnergyReal && !is_real_basis(b.kind))
        fail(path + ".kind", "energy norm requires real_log/real_dipole elements");
    if (norm != NormKind::EnergyReal && is_real_basis(b.kind))
        fail(path + ".kind", "real-plane elements require the energy norm");

    out.push_back(b);
    if (kind == "real_dipole") {
        BasisElement y = b;
        y.kind = BasisKind::RealDipoleY;
        out.push_back(y);
    }
}

} // namespace

ParsedConfig parse_fit_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("config", "expected a JSON object");

    ParsedConfig cfg;

    std::string geometry = require(j, "geometry", "config").get<std::string>();
    if (geometry == "exterior")
        cfg.problem.geometry = Geometry::Exterior;
    else if (geometry == "interior")
        cfg.problem.geometry = Geometry::Interior;
    else
        fail("config.geometry", "expected 'exterior' or 'interior'");

    std::string norm = require(j, "norm", "config").get<std::string>();
    bool interior = cfg.problem.geometry == Geometry::Interior;
    if (norm == "sigma")
        cfg.problem.norm = interior ? NormKind::SigmaInterior : NormKind::SigmaExterior;
    else if (norm == "dirichlet")
        cfg.problem.norm =
            interior ? NormKind::DirichletInterior : NormKind::DirichletExterior;
    else if (norm == "energy")
        cfg.problem.norm = NormKind::EnergyReal;
    else
        fail("config.norm", "expected 'sigma', 'dirichlet' or 'energy'");

    const json& basis = require(j, "basis", "config");
    if (!basis.is_array() || basis.empty())
        fail("config.basis", "expected a nonempty array");
    for (size_t i = 0; i < basis.size(); ++i)
        parse_basis_element(basis[i], "config.basis[" + std::to_string(i) + "]",
                            cfg.problem.norm, cfg.problem.basis);

    const json& target = require(j, "target", "config");
    if (!target.is_object()) fail("config.target", "expected an object");
    if (target.contains("samples"))
        fail("config.target.samples",
             "sampled-data targets are not supported (analytic built-ins only)");
    std::string name = require(target, "builtin", "config.target").get<std::string>();
    try {
        cfg.problem.target = builtin_target(name);
    } catch (const ContractError&) {
        fail("config.target.builtin", "unknown builtin '" + name + "'");
    }

    if (j.contains("rings")) {
        const json& rings = j["rings"];
        if (!rings.is_array()) fail("config.rings", "expected an array");
        for (size_t i = 0; i < rings.size(); ++i) {
            const json& r = rings[i];
            std::string path = "config.rings[" + std::to_string(i) + "]";
            RingSpec spec;
            spec.radius = XReal(require(r, "radius", path).get<double>());
            if (r.contains("count")) spec.count = r["count"].get<int>();
            if (spec.count < 1) fail(path + ".count", "count must be >= 1");
            cfg.rings.push_back(spec);
        }
    }

    if (j.contains("assembly_precision")) {
        std::string p = j["assembly_precision"].get<std::string>();
        if (p == "extended")
            cfg.options.assembly = AssemblyPrecision::Extended;
        else if (p == "double")
            cfg.options.assembly = AssemblyPrecision::Double;
        else
            fail("config.assembly_precision", "expected 'extended' or 'double'");
    }
    if (j.contains("truncate_smallest")) {
        int k = j["truncate_smallest"].get<int>();
        if (k < 0) fail("config.truncate_smallest", "must be >= 0");
        cfg.options.truncate_smallest = k;
    }

    // structural validation with config-level reporting
    try {
        validate(cfg.problem);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

std::string fit_result_json(const ParsedConfig& cfg, const FitResult& result) {
    json out;
    json mu = json::array();
    for (const XComplex& m : result.mu)
        mu.push_back({m.re.to_double(), m.im.to_double()});
    out["mu"] = mu;
    out["condition_number"] = result.spectrum.condition_number.to_double();
    json eig = json::array();
    for (const XReal& lam : result.spectrum.eigenvalues) eig.push_back(lam.to_double());
    out["eigenvalues"] = eig;
    json res = json::array();
    for (const XReal& r : result.collocation_residuals) res.push_back(r.to_double());
    out["collocation_residuals"] = res;
    out["cost_drop"] = result.cost_drop.to_double();
    if (result.determinant_check) {
        const DeterminantCheck& d = *result.determinant_check;
        out["determinant_check"] = {
            {"eigen_route", d.eigen_route.str(25)},
            {"closed_form_route_re", d.closed_form_route.re.str(25)},
            {"closed_form_route_im", d.closed_form_route.im.str(25)},
            {"relative_difference", d.relative_difference.to_double()},
        };
    }
    json rings = json::array();
    for (const RingSpec& spec : cfg.rings) {
        EvalStats s = error_stats(result, cfg.problem, spec);
        rings.push_back({
            {"radius", spec.radius.to_double()},
            {"count", spec.count},
            {"rms", s.rms.to_double()},
            {"std_about_mean", s.std_about_mean.to_double()},
            {"max_magnitude", s.max_magnitude.to_double()},
            {"avg_magnitude", s.avg_magnitude.to_double()},
            {"sigma_norm_estimate", s.sigma_norm_estimate.to_double()},
        });
    }
    out["rings"] = rings;
    return out.dump(2) + "\n";
}

} // namespace diskfit::config
