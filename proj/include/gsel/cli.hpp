// cli.hpp: JSON run configuration and the CSV writers behind the command-line tool

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsel/simulation.hpp"

namespace gsel::cli {

// Invalid configuration. key() is the dotted path of the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key))
    {
    }
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

enum class SweepVariable { eta, mu };

struct SweepConfig {
    SweepVariable variable{SweepVariable::eta};
    std::vector<double> values;
};

struct Methods {
    bool spectrum{true};
    bool ratemodel{false};
    bool analytic{true};
};

struct Outputs {
    std::string spectrum{"spectrum.csv"};
    std::string sweep{"sweep.csv"};
};

/// Fully defaulted run description.
///
/// eta may be absent only when the sweep runs over eta. In a mu sweep each
/// value replaces mu.offset.
struct RunConfig {
    std::optional<double> eta;
    double gamma_in{0.5e-6};
    double gamma_out{0.5e-6};
    double gamma_cav{7e-4};
    double omega_e{1.0};
    double omega_s{0.0};
    int n_max{8};
    MuSpec mu{};
    FrequencyGrid grid{};
    std::optional<SweepConfig> sweep;
    Outputs outputs{};
    Methods methods{};

    // Parameters at coupling eta, with mu left for resolve_mu.
    SystemParams params_at(double eta_value) const;
    RunSettings settings() const;
};

// Parses and validates a JSON document. Unknown keys are rejected.
RunConfig validate_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

std::string_view version();

// Both return the path written. Throw ConfigError for settings the mode
// cannot use, NumericalError from the solvers and std::runtime_error on I/O
// failure.
std::filesystem::path run_spectrum(const RunConfig& config, const std::filesystem::path& out_dir);
std::filesystem::path run_sweep(const RunConfig& config, const std::filesystem::path& out_dir);

// printf("%.17g"), which round-trips every double; non-finite values print
// as nan / inf / -inf.
std::string format_number(double value);

} // namespace gsel::cli
