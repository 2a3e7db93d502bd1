#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "presets.hpp"
#include "rinorm/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw rinorm::ConfigInvalid("cannot read config file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rearrangement-invariant norm experiments"};
    std::string mode, config_path, out_dir;
    std::uint64_t seed = 42;
    int n = 0;
    app.add_option("mode", mode, "preset name, or 'run' for a config-driven run")->required();
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_dir, "output directory")->required();
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_option("--n", n, "size override (pieces / combos / attempts)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        const std::string config = config_path.empty() ? "" : read_file(config_path);
        const rinorm::tools::RunReport report =
            mode == "run" ? rinorm::tools::run_custom(config, seed, n)
                          : rinorm::tools::run_preset(mode, config, seed, n);
        rinorm::tools::emit_report(report, out_dir);
        std::cout << report.mode << ": " << (report.pass ? "PASS" : "FAIL") << " ("
                  << report.wall_ms << " ms), report under " << out_dir << "\n";
        return report.pass ? 0 : 1;
    } catch (const rinorm::UnknownPreset& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rinorm::ConfigInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rinorm::IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rinorm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
