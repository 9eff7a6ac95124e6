#include "posthopf/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace posthopf {

const char* to_string(BranchStatus s) {
    switch (s) {
        case BranchStatus::resolved: return "resolved";
        case BranchStatus::inconsistent: return "inconsistent";
        case BranchStatus::unresolved: return "unresolved";
    }
    return "?";
}

namespace {

using EquationSet = std::set<Polynomial>;

struct Node {
    EquationSet equations;
    /// Side conditions f != 0 from earlier split siblings.
    EquationSet nonzero;
    std::map<VarId, Polynomial> assignments;
    std::vector<std::string> trail;
    std::size_t depth = 0;
};

class Search {
  public:
    Search(const std::vector<Polynomial>& original, const std::vector<VarId>& unknowns, const SolverLimits& limits,
           const std::optional<std::set<VarId>>& eligible)
        : original_(original), unknowns_(unknowns), limits_(limits), eligible_(eligible) {}

    SolveOutcome run() {
        Node root;
        for (const auto& e : original_) insert(root.equations, e);
        explore(std::move(root));
        return std::move(outcome_);
    }

  private:
    static void insert(EquationSet& eqs, const Polynomial& p) {
        if (!p.is_zero()) eqs.insert(p.monic());
    }

    bool is_eligible(VarId v) const { return !eligible_ || eligible_->contains(v); }

    bool has_eligible_variable(const Polynomial& p) const {
        if (!eligible_) return !p.is_constant();
        for (VarId v : p.variables())
            if (eligible_->contains(v)) return true;
        return false;
    }

    std::string name(const Polynomial& like, VarId v) const {
        return like.registry() ? like.registry()->name(v) : "x" + std::to_string(v);
    }

    /// Picks (equation, variable) for a constant-coefficient linear
    /// elimination: smallest support, then lowest variable id.
    std::optional<std::pair<const Polynomial*, VarId>> pick_elimination(const EquationSet& eqs) const {
        std::optional<std::pair<const Polynomial*, VarId>> best;
        std::size_t best_support = 0;
        for (const auto& eq : eqs) {
            auto vars = eq.variables();
            if (best && vars.size() > best_support) continue;
            for (VarId v : vars) {
                if (!is_eligible(v)) continue;
                if (best && vars.size() == best_support && v >= best->second) break;
                if (eq.degree_in(v) != 1) continue;
                if (!eq.coefficient_in(v, 1).is_constant()) continue;
                best = std::make_pair(&eq, v);
                best_support = vars.size();
                break;
            }
        }
        return best;
    }

    void finish(Node& node, BranchStatus status) {
        if (status == BranchStatus::inconsistent) {
            ++outcome_.stats.pruned;
            return;
        }
        SolvedBranch b;
        b.assignments = std::move(node.assignments);
        for (VarId v : unknowns_)
            if (!b.assignments.contains(v)) b.free_vars.push_back(v);
        b.status = status;
        b.trail = std::move(node.trail);
        if (status == BranchStatus::unresolved) {
            ++outcome_.stats.unresolved;
            b.remaining.assign(node.equations.begin(), node.equations.end());
        } else {
            verify(b);
        }
        outcome_.branches.push_back(std::move(b));
    }

    void verify(const SolvedBranch& b) const {
        for (const auto& eq : original_) {
            if (!eq.substitute(b.assignments).is_zero())
                throw std::logic_error("solver: resolved branch fails verification on equation " + eq.to_string());
        }
    }

    void explore(Node node) {
        ++outcome_.stats.nodes;
        if (outcome_.stats.nodes > limits_.max_branches) {
            outcome_.stats.limit_hit = true;
            node.trail.push_back("limit: max_branches");
            finish(node, BranchStatus::unresolved);
            return;
        }
        for (;;) {
            for (const auto& eq : node.equations) {
                if (!has_eligible_variable(eq)) {
                    node.trail.push_back("inconsistent: " + eq.to_string() + " = 0");
                    finish(node, BranchStatus::inconsistent);
                    return;
                }
            }
            auto pick = pick_elimination(node.equations);
            if (!pick) break;
            const Polynomial& eq = *pick->first;
            VarId v = pick->second;
            Rational c = eq.coefficient_in(v, 1).constant_term();
            Polynomial value = (eq.coefficient_in(v, 0)).scale(-c.inverse());
            node.trail.push_back(name(eq, v) + " := " + value.to_string());
            EquationSet next;
            for (const auto& other : node.equations) insert(next, other.substitute(v, value));
            for (auto& [var, rhs] : node.assignments) rhs = rhs.substitute(v, value);
            EquationSet still_nonzero;
            bool contradiction = false;
            for (const auto& f : node.nonzero) {
                auto g = f.substitute(v, value);
                if (g.is_zero()) contradiction = true;
                else if (!g.is_constant()) still_nonzero.insert(g.monic());
            }
            node.nonzero = std::move(still_nonzero);
            node.assignments[v] = std::move(value);
            node.equations = std::move(next);
            ++outcome_.stats.substitutions;
            if (contradiction) {
                node.trail.push_back("inconsistent: a nonzero side condition vanished");
                finish(node, BranchStatus::inconsistent);
                return;
            }
        }
        if (node.equations.empty()) {
            finish(node, BranchStatus::resolved);
            return;
        }
        if (node.depth >= limits_.max_depth) {
            outcome_.stats.limit_hit = true;
            node.trail.push_back("limit: max_depth");
            finish(node, BranchStatus::unresolved);
            return;
        }
        for (const auto& eq : node.equations) {
            auto factors = try_factor_split(eq);
            if (!factors) continue;
            ++outcome_.stats.splits;
            // Factors already known to be nonzero cannot vanish.
            std::vector<Polynomial> distinct;
            for (const auto& f : *factors) {
                auto m = f.monic();
                if (node.nonzero.contains(m)) continue;
                if (std::find(distinct.begin(), distinct.end(), m) == distinct.end()) distinct.push_back(m);
            }
            if (distinct.empty()) {
                node.trail.push_back("inconsistent: every factor of " + eq.to_string() + " is nonzero");
                finish(node, BranchStatus::inconsistent);
                return;
            }
            // Child k takes f_k = 0 and f_1..f_{k-1} != 0, so the children are disjoint.
            std::string split_label = "split " + eq.to_string() + ": ";
            for (std::size_t k = 0; k < distinct.size(); ++k) {
                Node child;
                child.equations = node.equations;
                child.equations.erase(eq);
                insert(child.equations, distinct[k]);
                child.nonzero = node.nonzero;
                for (std::size_t m = 0; m < k; ++m) child.nonzero.insert(distinct[m]);
                child.assignments = node.assignments;
                child.trail = node.trail;
                child.trail.push_back(split_label + distinct[k].to_string());
                child.depth = node.depth + 1;
                explore(std::move(child));
            }
            return;
        }
        finish(node, BranchStatus::unresolved);
    }

    const std::vector<Polynomial>& original_;
    const std::vector<VarId>& unknowns_;
    SolverLimits limits_;
    const std::optional<std::set<VarId>>& eligible_;
    SolveOutcome outcome_;
};

}  // namespace

SolveOutcome solve_polynomial_system(const std::vector<Polynomial>& equations, const std::vector<VarId>& unknowns,
                                     const SolverLimits& limits, const std::optional<std::set<VarId>>& eligible) {
    return Search(equations, unknowns, limits, eligible).run();
}

}  // namespace posthopf
