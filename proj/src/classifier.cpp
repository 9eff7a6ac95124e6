#include "posthopf/classifier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace posthopf {

const char* to_string(Parameterization p) { return p == Parameterization::full64 ? "full64" : "generator32"; }

Parameterization parse_parameterization(std::string_view text) {
    if (text == "generator32") return Parameterization::generator32;
    if (text == "full64") return Parameterization::full64;
    throw std::invalid_argument("parameterization must be 'generator32' or 'full64'");
}

UnknownOp build_unknown_op(const HopfStructure& h4, Parameterization parameterization) {
    if (h4.dim() != 4) throw std::invalid_argument("build_unknown_op: expects the 4-dimensional Sweedler algebra");
    UnknownOp out{TriangleOp<Polynomial>::filled(4, Polynomial()), make_registry(), {}};
    auto fresh = [&](std::size_t x, std::size_t y, std::size_t k) {
        VarId v = out.registry->add("c_" + std::to_string(x) + "_" + std::to_string(y) + "_" + std::to_string(k));
        out.unknowns.push_back(v);
        return Polynomial::variable(out.registry, v);
    };
    if (parameterization == Parameterization::full64) {
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t y = 0; y < 4; ++y)
                for (std::size_t k = 0; k < 4; ++k) out.op.at(x, y)[k] = fresh(x, y, k);
        return out;
    }
    GeneratorTable<Polynomial> gt;
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y : {1, 2}) {
            Vec<Polynomial> cell;
            for (std::size_t k = 0; k < 4; ++k) cell.push_back(fresh(x, y, k));
            (y == 1 ? gt.on_g : gt.on_v)[x] = std::move(cell);
        }
    out.op = extend_generators(to_polynomial(h4, out.registry), gt);
    return out;
}

ConstraintSystem generate_constraints(const HopfStructure& h, const UnknownOp& unknown, Mode mode) {
    ConstraintSystem sys{unknown.registry, unknown.unknowns, {}, mode};
    auto hp = to_polynomial(h, unknown.registry);
    std::set<Polynomial> seen;
    ResidualSink<Polynomial> sink = [&](std::string_view axiom, const std::vector<std::size_t>& idx,
                                        const Polynomial& residual) {
        if (residual.is_zero()) return;
        if (!seen.insert(residual.monic()).second) return;
        std::string prov(axiom);
        prov += "(";
        for (std::size_t i = 0; i < idx.size(); ++i) prov += (i ? "," : "") + std::to_string(idx[i]);
        prov += ")";
        sys.equations.push_back({residual, std::move(prov)});
    };
    for_each_coalgebra_hom_residual(hp, unknown.op, sink);
    for_each_distributivity_residual(hp, unknown.op, sink);
    for_each_weighted_assoc_residual(hp, unknown.op, sink);
    if (mode == Mode::weak) for_each_unitality_residual(hp, unknown.op, sink);
    return sys;
}

namespace {

std::string param_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "p" + std::to_string(i);
}

std::set<VarId> table_variables(const TriangleOp<Polynomial>& op) {
    std::set<VarId> vars;
    for (const auto& cell : op.cells())
        for (const auto& p : cell)
            for (VarId v : p.variables()) vars.insert(v);
    return vars;
}

RegistryPtr table_registry(const TriangleOp<Polynomial>& op) {
    for (const auto& cell : op.cells())
        for (const auto& p : cell)
            if (p.registry() && !p.is_constant()) return p.registry();
    return nullptr;
}

std::string table_key(const TriangleOp<Polynomial>& op) { return canonical_dump(op_to_json(op)); }

}  // namespace

std::size_t ClassificationResult::unresolved_count() const {
    return static_cast<std::size_t>(std::count_if(branches.begin(), branches.end(), [](const Branch& b) {
        return b.status == BranchStatus::unresolved;
    }));
}

ClassificationResult solve(const ConstraintSystem& system, const UnknownOp& unknown, const SolverLimits& limits) {
    std::vector<Polynomial> polys;
    polys.reserve(system.equations.size());
    for (const auto& e : system.equations) polys.push_back(e.poly);
    auto outcome = solve_polynomial_system(polys, system.unknowns, limits);

    ClassificationResult result;
    result.stats = outcome.stats;
    const auto& reg = *system.registry;
    for (auto& sb : outcome.branches) {
        Branch b;
        b.status = sb.status;
        b.trail = std::move(sb.trail);
        if (sb.status != BranchStatus::resolved) {
            for (const auto& [v, value] : sb.assignments) b.assignments.emplace(reg.name(v), value);
            for (VarId v : sb.free_vars) b.free_params.push_back(reg.name(v));
            for (const auto& r : sb.remaining) b.remaining.push_back(r.to_string());
            result.branches.push_back(std::move(b));
            continue;
        }
        auto params = make_registry();
        std::map<VarId, VarId> rename;
        for (std::size_t i = 0; i < sb.free_vars.size(); ++i) {
            rename[sb.free_vars[i]] = params->add(param_name(i));
            b.free_params.push_back(param_name(i));
        }
        for (VarId v : system.unknowns) {
            auto it = sb.assignments.find(v);
            Polynomial value = it != sb.assignments.end() ? it->second : Polynomial::variable(system.registry, v);
            b.assignments.emplace(reg.name(v), value.remap(rename, params));
        }
        b.table = unknown.op.map<Polynomial>(
            [&](const Polynomial& p) { return p.substitute(sb.assignments).remap(rename, params); });
        result.branches.push_back(std::move(b));
    }
    return result;
}

bool specializes(const TriangleOp<Polynomial>& general, const TriangleOp<Polynomial>& special) {
    if (general.dim() != special.dim()) return false;
    auto match = make_registry();
    std::map<VarId, VarId> gmap, smap;
    std::vector<VarId> unknowns;
    auto greg = table_registry(general);
    auto sreg = table_registry(special);
    for (VarId v : table_variables(general)) {
        gmap[v] = match->add("G_" + greg->name(v));
        unknowns.push_back(gmap[v]);
    }
    for (VarId v : table_variables(special)) smap[v] = match->add("S_" + sreg->name(v));

    std::vector<Polynomial> eqs;
    for (std::size_t c = 0; c < general.cells().size(); ++c)
        for (std::size_t k = 0; k < general.dim(); ++k) {
            auto d = general.cells()[c][k].remap(gmap, match) - special.cells()[c][k].remap(smap, match);
            if (!d.is_zero()) eqs.push_back(std::move(d));
        }
    if (eqs.empty()) return true;
    std::set<VarId> eligible(unknowns.begin(), unknowns.end());
    auto outcome = solve_polynomial_system(eqs, unknowns, {}, eligible);
    return std::any_of(outcome.branches.begin(), outcome.branches.end(),
                       [](const SolvedBranch& b) { return b.status == BranchStatus::resolved; });
}

std::vector<Branch> subsume(const std::vector<Branch>& branches) {
    std::vector<std::pair<std::string, const Branch*>> keyed;
    for (const auto& b : branches) {
        if (b.status != BranchStatus::resolved || !b.table)
            throw std::invalid_argument("subsume: every branch must be resolved");
        keyed.emplace_back(table_key(*b.table), &b);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    // Identical tables collapse first; the remaining pairwise tests run on distinct tables.
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
                keyed.end());
    std::vector<Branch> out;
    for (std::size_t ib = 0; ib < keyed.size(); ++ib) {
        const auto& b = *keyed[ib].second->table;
        bool removed = false;
        for (std::size_t ia = 0; ia < keyed.size() && !removed; ++ia) {
            if (ia == ib) continue;
            const auto& a = *keyed[ia].second->table;
            if (!specializes(a, b)) continue;
            removed = ia < ib || !specializes(b, a);
        }
        if (!removed) out.push_back(*keyed[ib].second);
    }
    return out;
}

bool same_family(const TriangleOp<Polynomial>& a, const TriangleOp<Polynomial>& b) {
    return table_variables(a).size() == table_variables(b).size() && specializes(a, b) && specializes(b, a);
}

MatchReport match_families(const std::vector<TriangleOp<Polynomial>>& found,
                           const std::vector<TriangleOp<Polynomial>>& known) {
    MatchReport report;
    std::vector<bool> used(known.size(), false);
    for (std::size_t f = 0; f < found.size(); ++f) {
        bool matched = false;
        for (std::size_t k = 0; k < known.size() && !matched; ++k) {
            if (used[k] || !same_family(found[f], known[k])) continue;
            used[k] = true;
            matched = true;
            report.pairs.emplace_back(f, k);
        }
        if (!matched) report.unmatched_found.push_back(f);
    }
    for (std::size_t k = 0; k < known.size(); ++k)
        if (!used[k]) report.unmatched_known.push_back(k);
    return report;
}

MatchReport match_families(const ClassificationResult& result, const std::vector<TriangleOp<Polynomial>>& known) {
    std::vector<TriangleOp<Polynomial>> found;
    for (const auto& b : result.maximal_families) found.push_back(*b.table);
    return match_families(found, known);
}

ClassificationResult classify_h4(Mode mode, Parameterization parameterization, const SolverLimits& limits) {
    auto h4 = sweedler_h4();
    auto unknown = build_unknown_op(h4, parameterization);
    auto system = generate_constraints(h4, unknown, mode);
    auto result = solve(system, unknown, limits);
    std::vector<Branch> resolved;
    for (const auto& b : result.branches)
        if (b.status == BranchStatus::resolved) resolved.push_back(b);
    result.maximal_families = subsume(resolved);
    return result;
}

std::vector<TriangleOp<Polynomial>> builtin_family_tables() {
    std::vector<TriangleOp<Polynomial>> out;
    for (Family f : all_families) out.push_back(family_table(f));
    return out;
}

json classification_to_json(const ClassificationResult& result, Mode mode, Parameterization parameterization) {
    json families = json::array();
    for (const auto& b : result.maximal_families)
        families.push_back(json{{"table", op_to_json(*b.table)}, {"free_params", b.free_params}});
    json unresolved = json::array();
    for (const auto& b : result.branches) {
        if (b.status != BranchStatus::unresolved) continue;
        unresolved.push_back(json{{"remaining", b.remaining}, {"trail", b.trail}});
    }
    json stats{{"nodes", result.stats.nodes},
               {"substitutions", result.stats.substitutions},
               {"splits", result.stats.splits},
               {"pruned", result.stats.pruned},
               {"resolved_branches", result.branches.size() - result.unresolved_count()},
               {"unresolved_branches", result.unresolved_count()},
               {"limit_hit", result.stats.limit_hit}};
    return json{{"mode", to_string(mode)},
                {"parameterization", to_string(parameterization)},
                {"families", families},
                {"stats", stats},
                {"unresolved", unresolved}};
}

}  // namespace posthopf
