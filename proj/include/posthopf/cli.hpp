#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "posthopf/classifier.hpp"
#include "posthopf/ffenum.hpp"
#include "posthopf/io.hpp"

namespace posthopf {

enum class RunStatus { pass = 0, fail = 1, error = 2 };

const char* to_string(RunStatus s);

/// Result of one command: exit status, text for the terminal and a JSON payload.
struct RunReport {
    RunStatus status = RunStatus::pass;
    std::string human_text;
    json payload = json::object();
    int exit_code() const { return static_cast<int>(status); }
};

/// `hopf_spec` is "builtin:h4" or a JSON path; `op_spec` is empty, a JSON
/// path, or "family:<i..vi>[:a=<rational>]".
RunReport cmd_verify(const std::string& hopf_spec, const std::string& op_spec, Mode mode);

RunReport cmd_families(bool check, bool unicode);

RunReport cmd_classify(Mode mode, Parameterization parameterization, const SolverLimits& limits = {});

RunReport cmd_enumerate(std::uint32_t prime, Mode mode, std::size_t workers = 1);

RunReport cmd_grouplikes();

/// Arguments name group-likes: a basis name ("1", "g") or a basis index.
RunReport cmd_primitives(const std::string& g, const std::string& h);

/// Families (as symbolic tables) that pass in the given mode; weak keeps
/// the ones whose unitality residuals vanish.
std::vector<TriangleOp<Polynomial>> reference_families(Mode mode);

}  // namespace posthopf
