// gsel: compute emission spectra and flux sweeps from a JSON config.
//
//   gsel --config run.json --out results --mode spectrum
//
// Exit codes: 0 success, 1 configuration or I/O error, 2 numerical failure.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "gsel/cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Emission spectra of a cavity coupled to a transport electron"};
    std::string config_path;
    std::string out_dir = ".";
    std::string mode = "spectrum";
    app.add_option("--config", config_path, "JSON configuration file")->required();
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--mode", mode, "spectrum or sweep")->check(CLI::IsMember({"spectrum", "sweep"}));
    app.set_version_flag("--version", std::string(gsel::cli::version()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const auto config = gsel::cli::load_config(config_path);
        const auto written = mode == "sweep" ? gsel::cli::run_sweep(config, out_dir)
                                             : gsel::cli::run_spectrum(config, out_dir);
        std::cout << written.string() << '\n';
        return 0;
    } catch (const gsel::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const gsel::ContractViolation& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const gsel::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
