#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "posthopf/hopf.hpp"
#include "posthopf/io.hpp"
#include "posthopf/polynomial.hpp"
#include "posthopf/solver.hpp"
#include "posthopf/triangle.hpp"

namespace posthopf {

enum class Parameterization { generator32, full64 };

const char* to_string(Parameterization p);
Parameterization parse_parameterization(std::string_view text);

/// A table whose entries are polynomials in fresh unknowns c_x_y_k.
struct UnknownOp {
    TriangleOp<Polynomial> op;
    RegistryPtr registry;
    std::vector<VarId> unknowns;
};

/// generator32: one unknown per coefficient of x ▷ g and x ▷ v, completed
/// through extend_generators. full64: one unknown per table coefficient.
UnknownOp build_unknown_op(const HopfStructure& h4, Parameterization parameterization);

struct Equation {
    Polynomial poly;
    /// Axiom id and basis indices, e.g. "distributivity(0,1,1)[2]".
    std::string provenance;
};

struct ConstraintSystem {
    RegistryPtr registry;
    std::vector<VarId> unknowns;
    std::vector<Equation> equations;
    Mode mode = Mode::relaxed;
};

/// Every residual component of the structure axioms as a polynomial
/// equation (plus unitality in weak mode); zero residuals are dropped and
/// duplicates (up to a constant factor) keep their first provenance.
ConstraintSystem generate_constraints(const HopfStructure& h, const UnknownOp& unknown, Mode mode);

/// A solution family with its free parameters renamed a, b, c, ...
struct Branch {
    /// Original unknown name -> value in the parameters.
    std::map<std::string, Polynomial> assignments;
    std::vector<std::string> free_params;
    BranchStatus status = BranchStatus::unresolved;
    std::vector<std::string> remaining;
    std::vector<std::string> trail;
    /// Completed table, entries in the parameters (resolved branches only).
    std::optional<TriangleOp<Polynomial>> table;
};

struct ClassificationResult {
    std::vector<Branch> branches;
    SolverStats stats;
    std::vector<Branch> maximal_families;
    std::size_t unresolved_count() const;
};

ClassificationResult solve(const ConstraintSystem& system, const UnknownOp& unknown, const SolverLimits& limits = {});

/// True when some assignment of `general`'s indeterminates (as polynomials
/// in `special`'s) turns the table of `general` into that of `special`.
bool specializes(const TriangleOp<Polynomial>& general, const TriangleOp<Polynomial>& special);

/// Drops every branch that another branch specializes to (of two
/// equivalent branches the canonically first survives); sorted by
/// serialized table.
std::vector<Branch> subsume(const std::vector<Branch>& branches);

struct MatchReport {
    /// (index into found, index into known)
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> unmatched_found;
    std::vector<std::size_t> unmatched_known;
    bool bijection() const { return unmatched_found.empty() && unmatched_known.empty(); }
};

/// Two parameterized tables match when they have the same number of
/// parameters and each specializes to the other.
bool same_family(const TriangleOp<Polynomial>& a, const TriangleOp<Polynomial>& b);
MatchReport match_families(const std::vector<TriangleOp<Polynomial>>& found,
                           const std::vector<TriangleOp<Polynomial>>& known);
MatchReport match_families(const ClassificationResult& result, const std::vector<TriangleOp<Polynomial>>& known);

/// build_unknown_op -> generate_constraints -> solve -> subsume.
ClassificationResult classify_h4(Mode mode, Parameterization parameterization, const SolverLimits& limits = {});

/// The six built-in tables, in order (i)..(vi).
std::vector<TriangleOp<Polynomial>> builtin_family_tables();

json classification_to_json(const ClassificationResult& result, Mode mode, Parameterization parameterization);

}  // namespace posthopf
