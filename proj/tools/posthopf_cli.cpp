#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "posthopf/cli.hpp"

using namespace posthopf;

namespace {

const std::map<std::string, Mode> kModes{{"relaxed", Mode::relaxed}, {"weak", Mode::weak}};
const std::map<std::string, Parameterization> kParams{{"generator32", Parameterization::generator32},
                                                      {"full64", Parameterization::full64}};

int finish(const RunReport& report, const std::string& json_path) {
    if (report.status == RunStatus::error) std::cerr << report.human_text;
    else std::cout << report.human_text;
    if (!json_path.empty()) {
        try {
            write_file(json_path, canonical_dump(report.payload));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return static_cast<int>(RunStatus::error);
        }
    }
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hopf algebra and post-Hopf structure toolkit"};
    app.require_subcommand(1);

    std::string json_path;
    Mode mode = Mode::relaxed;

    auto* verify = app.add_subcommand("verify", "Check Hopf axioms and the axioms of an operation");
    std::string hopf_spec = "builtin:h4", op_spec;
    verify->add_option("--hopf", hopf_spec, "builtin:h4 or a JSON file")->capture_default_str();
    verify->add_option("--op", op_spec, "JSON file or family:<i..vi>[:a=<rational>]");
    verify->add_option("--mode", mode, "relaxed or weak")->transform(CLI::CheckedTransformer(kModes));
    verify->add_option("--json", json_path, "Write the JSON report here");

    auto* families = app.add_subcommand("families", "Print the six built-in family tables");
    bool check = false, unicode = false;
    families->add_flag("--check", check, "Run the relaxed suite and the unitality check on each");
    families->add_flag("--unicode", unicode, "Render v, gv as ν, gν");
    families->add_option("--json", json_path, "Write the JSON report here");

    auto* classify = app.add_subcommand("classify", "Re-derive the classification on H4");
    Parameterization param = Parameterization::generator32;
    SolverLimits limits;
    classify->add_option("--mode", mode, "relaxed or weak")->transform(CLI::CheckedTransformer(kModes));
    classify->add_option("--param", param, "generator32 or full64")->transform(CLI::CheckedTransformer(kParams));
    classify->add_option("--json", json_path, "Write the JSON report here");
    classify->add_option("--max-branches", limits.max_branches, "Branch limit")->capture_default_str();
    classify->add_option("--max-depth", limits.max_depth, "Depth limit")->capture_default_str();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Brute-force all structures on H4 over F_p");
    std::uint32_t prime = 0;
    std::size_t workers = 1;
    enumerate_cmd->add_option("--prime", prime, "Odd prime, at most 13")->required();
    enumerate_cmd->add_option("--mode", mode, "relaxed or weak")->transform(CLI::CheckedTransformer(kModes));
    enumerate_cmd->add_option("--out", json_path, "Write the JSON report here");
    enumerate_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 64));

    auto* grouplikes = app.add_subcommand("grouplikes", "List the group-like elements of H4");
    grouplikes->add_option("--json", json_path, "Write the JSON report here");

    auto* primitives = app.add_subcommand("primitives", "Basis of the (g,h)-skew-primitive space of H4");
    std::string g_name, h_name;
    primitives->add_option("left", g_name, "Left group-like (basis name or index)")->required();
    primitives->add_option("right", h_name, "Right group-like (basis name or index)")->required();
    primitives->add_option("--json", json_path, "Write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(RunStatus::error);
    }

    if (verify->parsed()) return finish(cmd_verify(hopf_spec, op_spec, mode), json_path);
    if (families->parsed()) return finish(cmd_families(check, unicode), json_path);
    if (classify->parsed()) return finish(cmd_classify(mode, param, limits), json_path);
    if (enumerate_cmd->parsed()) return finish(cmd_enumerate(prime, mode, workers), json_path);
    if (grouplikes->parsed()) return finish(cmd_grouplikes(), json_path);
    if (primitives->parsed()) return finish(cmd_primitives(g_name, h_name), json_path);
    return static_cast<int>(RunStatus::error);
}
