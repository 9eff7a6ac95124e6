#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "posthopf/hopf.hpp"
#include "posthopf/report.hpp"
#include "posthopf/triangle.hpp"

namespace posthopf {

using json = nlohmann::json;

/// Deterministic text form: sorted keys, two-space indent, arrays of
/// scalars kept on one line, trailing newline.
std::string canonical_dump(const json& j);

json hopf_to_json(const HopfStructure& h);
/// Throws std::invalid_argument on schema violations.
HopfStructure hopf_from_json(const json& j);

json op_to_json(const TriangleOp<Rational>& op);
json op_to_json(const TriangleOp<Polynomial>& op);
json op_to_json(const TriangleOp<PrimeFieldElement>& op);

using AnyOp = std::variant<TriangleOp<Rational>, TriangleOp<Polynomial>, TriangleOp<PrimeFieldElement>>;

/// Reads {"dim", "ring", "table"}; the "poly" ring is parsed into `registry`
/// (a fresh one when null). Throws std::invalid_argument.
AnyOp op_from_json(const json& j, RegistryPtr registry = nullptr);
TriangleOp<Polynomial> poly_op_from_json(const json& j, const RegistryPtr& registry);

json report_to_json(const AxiomReport& r);

/// Reads a whole file; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace posthopf
