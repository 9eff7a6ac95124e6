#include "posthopf/cli.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace posthopf {

namespace {

constexpr std::array<const char*, 12> kHopfAxioms{
    "associativity",   "left_unit",  "right_unit",           "coassociativity",
    "left_counit",     "right_counit", "comul_multiplicative", "counit_multiplicative",
    "comul_unit",      "counit_unit", "antipode_left",        "antipode_right"};

constexpr std::array<const char*, 6> kOpAxioms{"coalgebra_hom",  "counit_compat",     "distributivity",
                                               "weighted_assoc", "counit_absorption", "unitality"};

const std::vector<std::string> kUnicodeNames{"1", "g", "ν", "gν"};

std::string describe(const AxiomEntry& e) {
    std::string s = e.axiom + "(";
    for (std::size_t k = 0; k < e.indices.size(); ++k) s += (k ? "," : "") + std::to_string(e.indices[k]);
    return s + ") = " + e.residual;
}

RunReport error_report(const std::string& message) {
    RunReport r;
    r.status = RunStatus::error;
    r.human_text = "error: " + message + "\n";
    r.payload = json{{"status", "error"}, {"error", message}};
    return r;
}

/// One "name  PASS|FAIL  first-residual" line per axiom id.
void list_axioms(std::ostringstream& out, const std::string& prefix, const AxiomReport& report,
                 const std::vector<const char*>& ids) {
    for (const char* id : ids) {
        const auto* f = report.first_failure(id);
        out << prefix << "  " << id << std::string(22 - std::string(id).size(), ' ') << (f ? "FAIL" : "PASS");
        if (f) out << "  " << describe(*f);
        out << "\n";
    }
}

template <class R>
AxiomReport check_op(const Hopf<R>& h, const TriangleOp<R>& op, Mode mode) {
    auto report = check_structure(h, op, mode);
    report.merge(check_counit_absorption(h, op));
    return report;
}

/// Witness basis element of the first unitality failure, if any.
std::optional<std::string> unitality_witness(const AxiomReport& report, const std::vector<std::string>& names) {
    const auto* f = report.first_failure("unitality");
    if (!f) return std::nullopt;
    return names.at(f->indices.at(0));
}

HopfStructure load_hopf(const std::string& spec) {
    if (spec == "builtin:h4") return sweedler_h4();
    if (spec.rfind("builtin:", 0) == 0) throw std::invalid_argument("unknown built-in Hopf structure '" + spec + "'");
    return hopf_from_json(json::parse(read_file(spec)));
}

AnyOp load_op(const std::string& spec) {
    if (spec.rfind("family:", 0) == 0) {
        std::string rest = spec.substr(7);
        std::optional<Polynomial> param;
        if (auto colon = rest.find(':'); colon != std::string::npos) {
            std::string arg = rest.substr(colon + 1);
            rest = rest.substr(0, colon);
            if (arg.rfind("a=", 0) != 0) throw std::invalid_argument("family parameter must read a=<rational>");
            param = Polynomial(Rational::parse(arg.substr(2)));
        }
        return family_table(parse_family(rest), param);
    }
    return op_from_json(json::parse(read_file(spec)));
}

RegistryPtr registry_of(const TriangleOp<Polynomial>& op) {
    for (const auto& cell : op.cells())
        for (const auto& e : cell)
            if (e.registry()) return e.registry();
    return make_registry();
}

std::vector<std::pair<Family, TriangleOp<Polynomial>>> named_references(Mode mode) {
    std::vector<std::pair<Family, TriangleOp<Polynomial>>> out;
    for (Family f : all_families) {
        auto table = family_table(f);
        auto hp = to_polynomial(sweedler_h4(), registry_of(table));
        if (mode == Mode::weak && !check_unitality(hp, table).passed()) continue;
        out.emplace_back(f, std::move(table));
    }
    return out;
}

std::vector<Rational> parse_group_like(const HopfStructure& h, const std::string& name) {
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (h.basis()[i] == name || std::to_string(i) == name) return h.basis_vector(i);
    throw std::invalid_argument("unknown basis element '" + name + "'");
}

}  // namespace

const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::pass: return "pass";
        case RunStatus::fail: return "fail";
        case RunStatus::error: return "error";
    }
    return "error";
}

std::vector<TriangleOp<Polynomial>> reference_families(Mode mode) {
    std::vector<TriangleOp<Polynomial>> out;
    for (auto& [f, t] : named_references(mode)) out.push_back(std::move(t));
    return out;
}

RunReport cmd_verify(const std::string& hopf_spec, const std::string& op_spec, Mode mode) {
    try {
        auto h = load_hopf(hopf_spec);
        std::ostringstream out;
        auto hopf_report = verify_hopf_axioms(h);
        list_axioms(out, "hopf", hopf_report, {kHopfAxioms.begin(), kHopfAxioms.end()});
        bool ok = hopf_report.passed();
        json payload{{"mode", to_string(mode)}, {"hopf", report_to_json(hopf_report)}};

        if (!op_spec.empty()) {
            auto any = load_op(op_spec);
            auto op_report = std::visit(
                [&](const auto& op) -> AxiomReport {
                    using R = std::decay_t<decltype(op)>;
                    if (op.dim() != h.dim()) throw std::invalid_argument("operation and Hopf structure differ in dimension");
                    if constexpr (std::is_same_v<R, TriangleOp<Rational>>) {
                        return check_op(h, op, mode);
                    } else if constexpr (std::is_same_v<R, TriangleOp<Polynomial>>) {
                        return check_op(to_polynomial(h, registry_of(op)), op, mode);
                    } else {
                        return check_op(to_prime_field(h, op.at(0, 0).at(0).modulus()), op, mode);
                    }
                },
                any);
            std::vector<const char*> ids(kOpAxioms.begin(), kOpAxioms.end() - 1);
            if (mode == Mode::weak) ids.push_back("unitality");
            list_axioms(out, "op", op_report, ids);
            if (auto w = unitality_witness(op_report, h.basis())) out << "op  unitality witness: " << *w << "\n";
            ok = ok && op_report.passed();
            payload["op"] = report_to_json(op_report);
        }

        RunReport r;
        r.status = ok ? RunStatus::pass : RunStatus::fail;
        out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
        r.human_text = out.str();
        payload["status"] = to_string(r.status);
        r.payload = std::move(payload);
        return r;
    } catch (const std::exception& e) {
        return error_report(e.what());
    }
}

RunReport cmd_families(bool check, bool unicode) {
    const auto h = sweedler_h4();
    const auto& names = unicode ? kUnicodeNames : h.basis();
    std::ostringstream out;
    json list = json::array();
    bool ok = true;
    for (Family f : all_families) {
        auto table = family_table(f);
        json entry{{"name", to_string(f)},
                   {"params", family_has_parameter(f) ? json::array({"a"}) : json::array()},
                   {"table", op_to_json(table)}};
        out << "(" << to_string(f) << ")" << (family_has_parameter(f) ? "  parameter a" : "") << "\n";
        out << render_table(table, names);
        if (check) {
            auto hp = to_polynomial(h, registry_of(table));
            auto relaxed = check_op(hp, table, Mode::relaxed);
            auto unital = check_unitality(hp, table);
            auto witness = unitality_witness(unital, names);
            out << "relaxed " << (relaxed.passed() ? "PASS" : "FAIL") << "  unital "
                << (unital.passed() ? "yes" : "no (fails at " + *witness + ")") << "\n";
            ok = ok && relaxed.passed();
            entry["relaxed"] = relaxed.passed();
            entry["unital"] = unital.passed();
            entry["witness"] = witness ? json(*witness) : json(nullptr);
        }
        out << "\n";
        list.push_back(std::move(entry));
    }
    RunReport r;
    r.status = ok ? RunStatus::pass : RunStatus::fail;
    r.human_text = out.str();
    r.payload = json{{"families", list}, {"status", to_string(r.status)}};
    return r;
}

RunReport cmd_classify(Mode mode, Parameterization parameterization, const SolverLimits& limits) {
    try {
        auto result = classify_h4(mode, parameterization, limits);
        if (result.stats.limit_hit) return error_report("solver limits exceeded");
        auto refs = named_references(mode);
        std::vector<TriangleOp<Polynomial>> known;
        for (const auto& [f, t] : refs) known.push_back(t);
        auto match = match_families(result, known);
        const auto names = sweedler_h4().basis();

        std::ostringstream out;
        out << "mode " << to_string(mode) << ", parameterization " << to_string(parameterization) << "\n";
        out << "nodes " << result.stats.nodes << ", branches " << result.branches.size() << ", unresolved "
            << result.unresolved_count() << ", maximal families " << result.maximal_families.size() << "\n\n";
        json matches = json::array();
        for (std::size_t i = 0; i < result.maximal_families.size(); ++i) {
            const auto& b = result.maximal_families[i];
            std::string label = "unmatched";
            for (auto [fi, ki] : match.pairs)
                if (fi == i) {
                    label = std::string("(") + to_string(refs[ki].first) + ")";
                    matches.push_back(json{{"found", i}, {"family", to_string(refs[ki].first)}});
                }
            out << "family " << i + 1 << " ~ " << label;
            if (!b.free_params.empty()) {
                out << "  parameters";
                for (const auto& p : b.free_params) out << " " << p;
            }
            out << "\n" << render_table(*b.table, names) << "\n";
        }
        for (auto k : match.unmatched_known) out << "missing family (" << to_string(refs[k].first) << ")\n";
        const bool ok = match.bijection() && result.unresolved_count() == 0;
        out << "bijection with reference families: " << (match.bijection() ? "yes" : "no") << "\n";
        out << "result: " << (ok ? "PASS" : "FAIL") << "\n";

        RunReport r;
        r.status = ok ? RunStatus::pass : RunStatus::fail;
        r.human_text = out.str();
        r.payload = classification_to_json(result, mode, parameterization);
        r.payload["matches"] = matches;
        r.payload["bijection"] = match.bijection();
        r.payload["status"] = to_string(r.status);
        return r;
    } catch (const std::exception& e) {
        return error_report(e.what());
    }
}

RunReport cmd_enumerate(std::uint32_t prime, Mode mode, std::size_t workers) {
    try {
        EnumerationTask task;
        task.prime = prime;
        task.mode = mode;
        task.workers = workers;
        auto report = enumerate(task);
        if (report.stats.limit_exceeded) return error_report("enumeration limits exceeded");
        auto diff = compare_with_families(report, reference_families(mode));
        const auto h = sweedler_h4_mod_p(prime);
        std::size_t absorbing = 0;
        for (const auto& op : report.structures) absorbing += check_counit_absorption(h, op).passed() ? 1 : 0;
        const bool ok = diff.empty() && absorbing == report.count();

        std::ostringstream out;
        out << "p=" << prime << " " << to_string(mode) << ": " << report.count() << " structures\n";
        out << "row candidates (raw/surviving):";
        for (std::size_t r = 0; r < 4; ++r)
            out << " " << report.stats.raw_candidates[r] << "/" << report.stats.surviving_candidates[r];
        out << "\n";
        out << "family evaluations " << diff.family_evaluations << ", only enumerated " << diff.only_enumerated.size()
            << ", only in families " << diff.only_families.size() << "\n";
        out << "x▷1 = ε(x)1 holds for " << absorbing << "/" << report.count() << "\n";
        out << "result: " << (ok ? "PASS" : "FAIL") << "\n";

        RunReport r;
        r.status = ok ? RunStatus::pass : RunStatus::fail;
        r.human_text = out.str();
        r.payload = enumeration_to_json(report);
        r.payload["diff"] = diff_to_json(diff);
        r.payload["status"] = to_string(r.status);
        return r;
    } catch (const std::exception& e) {
        return error_report(e.what());
    }
}

RunReport cmd_grouplikes() {
    const auto h = sweedler_h4();
    std::ostringstream out;
    json list = json::array();
    out << "G(H4) = {";
    bool first = true;
    for (const auto& g : group_likes(h)) {
        auto text = render_element(g, h.basis());
        out << (first ? "" : ", ") << text;
        list.push_back(text);
        first = false;
    }
    out << "}\n";
    RunReport r;
    r.human_text = out.str();
    r.payload = json{{"group_likes", list}, {"status", "pass"}};
    return r;
}

RunReport cmd_primitives(const std::string& g, const std::string& k) {
    try {
        const auto h = sweedler_h4();
        auto gv = parse_group_like(h, g);
        auto kv = parse_group_like(h, k);
        if (!is_group_like(h, gv)) throw std::invalid_argument("'" + g + "' is not group-like");
        if (!is_group_like(h, kv)) throw std::invalid_argument("'" + k + "' is not group-like");
        auto basis = skew_primitives(h, gv, kv);
        json list = json::array();
        std::ostringstream out;
        out << "P_{" << g << "," << k << "} = ";
        if (basis.empty()) out << "{0}";
        else out << "span{";
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto text = render_element(basis[i], h.basis());
            out << (i ? ", " : "") << text;
            list.push_back(text);
        }
        if (!basis.empty()) out << "}";
        out << "\n";
        RunReport r;
        r.human_text = out.str();
        r.payload = json{{"g", g}, {"h", k}, {"basis", list}, {"dimension", basis.size()}, {"status", "pass"}};
        return r;
    } catch (const std::exception& e) {
        return error_report(e.what());
    }
}

}  // namespace posthopf
