#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "posthopf/polynomial.hpp"

namespace posthopf {

struct SolverLimits {
    std::size_t max_branches = 10000;
    std::size_t max_depth = 64;
};

enum class BranchStatus { resolved, inconsistent, unresolved };

const char* to_string(BranchStatus s);

/// One leaf of the case tree, expressed in the original indeterminates.
struct SolvedBranch {
    /// Fully back-substituted: no assigned variable occurs on a right-hand side.
    std::map<VarId, Polynomial> assignments;
    /// Unknowns left unassigned, in id order.
    std::vector<VarId> free_vars;
    BranchStatus status = BranchStatus::unresolved;
    /// Equations left over when the branch could not be resolved.
    std::vector<Polynomial> remaining;
    /// Decisions taken on the way down, e.g. "split t1*t2: t1".
    std::vector<std::string> trail;
};

struct SolverStats {
    std::size_t nodes = 0;
    std::size_t substitutions = 0;
    std::size_t splits = 0;
    std::size_t pruned = 0;
    std::size_t unresolved = 0;
    bool limit_hit = false;
};

struct SolveOutcome {
    /// Resolved and unresolved leaves in exploration order; inconsistent
    /// leaves are only counted in stats.pruned.
    std::vector<SolvedBranch> branches;
    SolverStats stats;
};

/// Depth-first case-splitting solver for polynomial systems over Q.
///
/// Per node: prune on a nonzero constant equation; eliminate a variable
/// that occurs linearly with a constant coefficient (smallest support
/// first, then lowest id); otherwise split the canonically smallest
/// splittable equation into one child per factor. Resolved leaves are
/// re-checked against the input system and a failure throws
/// std::logic_error.
///
/// When `eligible` is given only those variables may be solved for; an
/// equation that mentions none of them must vanish identically, so a
/// nonzero one prunes the branch.
SolveOutcome solve_polynomial_system(const std::vector<Polynomial>& equations, const std::vector<VarId>& unknowns,
                                     const SolverLimits& limits = {},
                                     const std::optional<std::set<VarId>>& eligible = std::nullopt);

}  // namespace posthopf
