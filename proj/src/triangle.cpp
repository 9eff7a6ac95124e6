#include "posthopf/triangle.hpp"

#include <stdexcept>

#include "posthopf/io.hpp"

namespace posthopf {

namespace detail {
extern const std::string_view kFamiliesJson;
extern const std::string_view kH4Json;
}  // namespace detail

const char* to_string(Mode m) { return m == Mode::weak ? "weak" : "relaxed"; }

Mode parse_mode(std::string_view text) {
    if (text == "relaxed") return Mode::relaxed;
    if (text == "weak") return Mode::weak;
    throw std::invalid_argument("mode must be 'relaxed' or 'weak'");
}

const char* to_string(Family f) {
    switch (f) {
        case Family::i: return "i";
        case Family::ii: return "ii";
        case Family::iii: return "iii";
        case Family::iv: return "iv";
        case Family::v: return "v";
        case Family::vi: return "vi";
    }
    return "?";
}

Family parse_family(std::string_view roman) {
    for (Family f : all_families)
        if (roman == to_string(f)) return f;
    throw std::invalid_argument("unknown family '" + std::string(roman) + "' (expected i..vi)");
}

bool family_has_parameter(Family f) { return f == Family::i || f == Family::ii; }

std::string_view builtin_families_json() { return detail::kFamiliesJson; }
std::string_view builtin_h4_json() { return detail::kH4Json; }

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

TriangleOp<Polynomial> family_table(Family f, const std::optional<Polynomial>& param) {
    if (param && !family_has_parameter(f))
        throw std::invalid_argument(std::string("family (") + to_string(f) + ") takes no parameter");
    static const json doc = json::parse(builtin_families_json());
    for (const auto& entry : doc.at("families")) {
        if (entry.at("name").get<std::string>() != to_string(f)) continue;
        auto reg = make_registry();
        auto op = poly_op_from_json(entry.at("op"), reg);
        if (!param) return op;
        auto a = reg->find("a");
        if (!a) return op;
        return op.map<Polynomial>([&](const Polynomial& p) { return p.substitute(*a, *param); });
    }
    throw std::logic_error("family table missing from embedded data");
}

}  // namespace posthopf
