#include "gsel/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gsel::cli {

namespace {

using nlohmann::json;

// The dense Liouvillian has (3 (n_max + 1))^4 complex entries; 20 is ~250 MB.
constexpr int kMaxCutoff = 20;

std::string join(const std::string& prefix, const std::string& key)
{
    return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed)
{
    for (const auto& item : obj.items()) {
        bool known = false;
        for (auto name : allowed) known = known || item.key() == name;
        if (!known) throw ConfigError(join(path, item.key()), "unknown key");
    }
}

const json& require_object(const json& v, const std::string& path)
{
    if (!v.is_object()) throw ConfigError(path, "expected an object");
    return v;
}

double number(const json& v, const std::string& path)
{
    if (!v.is_number()) throw ConfigError(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(path, "must be finite");
    return x;
}

double non_negative(const json& v, const std::string& path)
{
    const double x = number(v, path);
    if (x < 0.0) throw ConfigError(path, "must be non-negative");
    return x;
}

int integer(const json& v, const std::string& path)
{
    if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw ConfigError(path, "out of range");
    }
    return static_cast<int>(x);
}

bool boolean(const json& v, const std::string& path)
{
    if (!v.is_boolean()) throw ConfigError(path, "expected true or false");
    return v.get<bool>();
}

std::string string(const json& v, const std::string& path)
{
    if (!v.is_string()) throw ConfigError(path, "expected a string");
    return v.get<std::string>();
}

MuReference mu_reference(const json& v, const std::string& path)
{
    try {
        return parse_mu_reference(string(v, path));
    } catch (const ContractViolation&) {
        throw ConfigError(path, "expected one of absolute, omega_G, omega_G_plus_omega_minus, "
                                "omega_G_plus_omega_plus, omega_plus");
    }
}

MuSpec parse_mu(const json& v)
{
    if (v.is_number()) return {MuReference::absolute, number(v, "mu")};
    if (v.is_string()) return {mu_reference(v, "mu"), 0.0};
    if (!v.is_object()) throw ConfigError("mu", "expected a number, a reference name or an object");
    reject_unknown(v, "mu", {"reference", "offset"});
    MuSpec spec;
    if (!v.contains("reference")) throw ConfigError("mu.reference", "missing required field");
    spec.reference = mu_reference(v.at("reference"), "mu.reference");
    if (v.contains("offset")) spec.offset = number(v.at("offset"), "mu.offset");
    return spec;
}

FrequencyGrid parse_grid(const json& v)
{
    require_object(v, "grid");
    reject_unknown(v, "grid", {"min", "max", "points"});
    FrequencyGrid grid;
    if (v.contains("min")) grid.min = number(v.at("min"), "grid.min");
    if (v.contains("max")) grid.max = number(v.at("max"), "grid.max");
    if (v.contains("points")) grid.points = integer(v.at("points"), "grid.points");
    if (grid.points < 2) throw ConfigError("grid.points", "must be at least 2");
    if (!(grid.min < grid.max)) throw ConfigError("grid.max", "must exceed grid.min");
    if (grid.min < 0.0) throw ConfigError("grid.min", "must be non-negative");
    return grid;
}

SweepConfig parse_sweep(const json& v)
{
    require_object(v, "sweep");
    reject_unknown(v, "sweep", {"variable", "values"});
    SweepConfig sweep;
    if (!v.contains("variable")) throw ConfigError("sweep.variable", "missing required field");
    const std::string var = string(v.at("variable"), "sweep.variable");
    if (var == "eta") {
        sweep.variable = SweepVariable::eta;
    } else if (var == "mu") {
        sweep.variable = SweepVariable::mu;
    } else {
        throw ConfigError("sweep.variable", "expected eta or mu");
    }
    if (!v.contains("values")) throw ConfigError("sweep.values", "missing required field");
    const json& values = v.at("values");
    if (!values.is_array()) throw ConfigError("sweep.values", "expected an array");
    if (values.empty()) throw ConfigError("sweep.values", "must not be empty");
    for (std::size_t k = 0; k < values.size(); ++k) {
        const std::string path = "sweep.values[" + std::to_string(k) + "]";
        sweep.values.push_back(sweep.variable == SweepVariable::eta ? non_negative(values[k], path)
                                                                    : number(values[k], path));
    }
    return sweep;
}

std::string filename(const json& v, const std::string& path)
{
    std::string name = string(v, path);
    if (name.empty()) throw ConfigError(path, "must not be empty");
    return name;
}

void write_parameters(std::ostream& os, const RunConfig& config)
{
    os << "# gsel " << version() << '\n';
    os << "# gamma_in=" << format_number(config.gamma_in) << " gamma_out=" << format_number(config.gamma_out)
       << " gamma_cav=" << format_number(config.gamma_cav) << " omega_e=" << format_number(config.omega_e)
       << " omega_s=" << format_number(config.omega_s) << " n_max=" << config.n_max << '\n';
    os << "# mu_reference=" << to_string(config.mu.reference) << " mu_offset=" << format_number(config.mu.offset)
       << '\n';
    if (config.methods.spectrum) {
        os << "# grid_min=" << format_number(config.grid.min) << " grid_max=" << format_number(config.grid.max)
           << " grid_points=" << config.grid.points << '\n';
    }
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    out.close();
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

// Analytic reference for the regime mu falls into; NaN between the polariton
// thresholds, where neither formula applies, or for unequal reservoir rates.
Fluxes analytic_for(const SimulationResult& run, const RunConfig& config)
{
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    if (config.gamma_in != config.gamma_out) return {nan, nan, nan};
    const double eta = run.params.eta();
    const double mu = run.params.mu;
    const auto& E = run.basis.energies;
    if (mu < E(run.basis.minus()) - kGateTolerance) return analytic_gse(eta, config.gamma_in, config.gamma_cav);
    if (mu >= E(run.basis.plus()) - kGateTolerance) return analytic_el(eta, config.gamma_in, config.gamma_cav);
    return {nan, nan, nan};
}

} // namespace

SystemParams RunConfig::params_at(double eta_value) const
{
    SystemParams p;
    p.omega_c = 1.0;
    p.omega_e = omega_e;
    p.omega_s = omega_s;
    p.rabi = eta_value * p.omega_c;
    p.gamma_in = gamma_in;
    p.gamma_out = gamma_out;
    p.gamma_cav = gamma_cav;
    p.mu = 0.0;
    return p;
}

RunSettings RunConfig::settings() const
{
    RunSettings s;
    s.n_max = n_max;
    s.mu = mu;
    s.grid = grid;
    s.spectrum = methods.spectrum;
    s.ratemodel = methods.ratemodel;
    return s;
}

RunConfig validate_config(std::string_view text)
{
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("", "top level must be an object");
    reject_unknown(root, "",
                   {"eta", "gamma", "gamma_in", "gamma_out", "gamma_cav", "omega_e", "omega_s", "n_max", "mu", "grid",
                    "sweep", "outputs", "methods"});

    RunConfig c;
    if (root.contains("eta")) c.eta = non_negative(root.at("eta"), "eta");
    if (root.contains("gamma")) {
        if (root.contains("gamma_in") || root.contains("gamma_out")) {
            throw ConfigError("gamma", "give either gamma or gamma_in/gamma_out, not both");
        }
        c.gamma_in = c.gamma_out = non_negative(root.at("gamma"), "gamma");
    }
    if (root.contains("gamma_in")) c.gamma_in = non_negative(root.at("gamma_in"), "gamma_in");
    if (root.contains("gamma_out")) c.gamma_out = non_negative(root.at("gamma_out"), "gamma_out");
    if (root.contains("gamma_cav")) c.gamma_cav = non_negative(root.at("gamma_cav"), "gamma_cav");
    if (root.contains("omega_e")) c.omega_e = non_negative(root.at("omega_e"), "omega_e");
    if (root.contains("omega_s")) c.omega_s = non_negative(root.at("omega_s"), "omega_s");
    if (root.contains("n_max")) c.n_max = integer(root.at("n_max"), "n_max");
    if (c.n_max < 1 || c.n_max > kMaxCutoff) {
        throw ConfigError("n_max", "must be between 1 and " + std::to_string(kMaxCutoff));
    }
    if (root.contains("mu")) c.mu = parse_mu(root.at("mu"));
    if (root.contains("grid")) c.grid = parse_grid(root.at("grid"));
    if (root.contains("sweep")) c.sweep = parse_sweep(root.at("sweep"));

    if (root.contains("outputs")) {
        const json& o = require_object(root.at("outputs"), "outputs");
        reject_unknown(o, "outputs", {"spectrum", "sweep"});
        if (o.contains("spectrum")) c.outputs.spectrum = filename(o.at("spectrum"), "outputs.spectrum");
        if (o.contains("sweep")) c.outputs.sweep = filename(o.at("sweep"), "outputs.sweep");
    }
    if (root.contains("methods")) {
        const json& m = require_object(root.at("methods"), "methods");
        reject_unknown(m, "methods", {"spectrum", "ratemodel", "analytic"});
        if (m.contains("spectrum")) c.methods.spectrum = boolean(m.at("spectrum"), "methods.spectrum");
        if (m.contains("ratemodel")) c.methods.ratemodel = boolean(m.at("ratemodel"), "methods.ratemodel");
        if (m.contains("analytic")) c.methods.analytic = boolean(m.at("analytic"), "methods.analytic");
    }

    const bool eta_swept = c.sweep && c.sweep->variable == SweepVariable::eta;
    if (!c.eta && !eta_swept) throw ConfigError("eta", "missing required field");
    return c;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("", "cannot read config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return validate_config(buffer.str());
}

std::string_view version()
{
    return "0.1.0";
}

std::string format_number(double value)
{
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::filesystem::path run_spectrum(const RunConfig& config, const std::filesystem::path& out_dir)
{
    if (!config.methods.spectrum) throw ConfigError("methods.spectrum", "spectrum mode requires the spectrum method");
    if (!config.eta) throw ConfigError("eta", "spectrum mode requires a fixed eta");

    const SimulationResult run = simulate(config.params_at(*config.eta), config.settings());
    const Spectrum& spec = *run.spectrum;

    std::ostringstream os;
    write_parameters(os, config);
    os << "# eta=" << format_number(*config.eta) << " mu=" << format_number(run.params.mu) << '\n';
    os << "# peak_centers";
    for (const auto& w : run.windows->windows) os << ' ' << w.name << '=' << format_number(w.center);
    os << '\n';
    if (run.windows->resolution_warning) os << "# warning: peak centers closer than ten grid spacings\n";
    if (!spec.failed_points.empty()) {
        os << "# failed_points=" << spec.failed_points.size() << " (singular resolvent, written as nan)\n";
    }
    os << "omega,S\n";
    for (std::size_t k = 0; k < spec.omegas.size(); ++k) {
        os << format_number(spec.omegas[k]) << ',' << format_number(spec.values[k]) << '\n';
    }
    const auto path = out_dir / config.outputs.spectrum;
    write_file(path, os.str());
    return path;
}

std::filesystem::path run_sweep(const RunConfig& config, const std::filesystem::path& out_dir)
{
    if (!config.sweep) throw ConfigError("sweep", "sweep mode requires a sweep section");
    const auto& methods = config.methods;
    if (!methods.spectrum && !methods.analytic && !methods.ratemodel) {
        throw ConfigError("methods", "sweep needs at least one of spectrum, analytic, ratemodel");
    }
    const bool over_eta = config.sweep->variable == SweepVariable::eta;

    std::ostringstream os;
    write_parameters(os, config);
    if (over_eta) {
        os << "# sweep over eta\n";
    } else {
        os << "# sweep over mu offsets; mu column holds the resolved chemical potential; eta="
           << format_number(*config.eta) << '\n';
    }
    if (methods.analytic) os << "# analytic columns: GSE formula below E_-, EL formula at or above E_+, nan between\n";

    os << (over_eta ? "eta" : "mu");
    if (methods.spectrum) os << ",f_C,f_plus,f_minus";
    if (methods.analytic) os << ",f_C_analytic,f_plus_analytic,f_minus_analytic";
    if (methods.ratemodel) os << ",f_C_rate,f_plus_rate,f_minus_rate";
    os << '\n';

    // The analytic columns need the dressed energies, so every row runs the
    // pipeline; the spectrum itself is skipped unless requested.
    for (const double value : config.sweep->values) {
        RunSettings settings = config.settings();
        double eta = config.eta.value_or(0.0);
        if (over_eta) {
            eta = value;
        } else {
            settings.mu.offset = value;
        }
        const SimulationResult run = simulate(config.params_at(eta), settings);

        const auto row = [&os](const Fluxes& f) {
            os << ',' << format_number(f.central) << ',' << format_number(f.plus) << ',' << format_number(f.minus);
        };
        os << format_number(over_eta ? eta : run.params.mu);
        if (methods.spectrum) row(run.peak_fluxes);
        if (methods.analytic) row(analytic_for(run, config));
        if (methods.ratemodel) row(run.rate_model->fluxes);
        os << '\n';
    }
    const auto path = out_dir / config.outputs.sweep;
    write_file(path, os.str());
    return path;
}

} // namespace gsel::cli
