#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "posthopf/hopf.hpp"
#include "posthopf/io.hpp"
#include "posthopf/prime_field.hpp"
#include "posthopf/triangle.hpp"

namespace posthopf {

using Fp = PrimeFieldElement;
using FpOp = TriangleOp<Fp>;

/// Generator values x ▷ g and x ▷ v of one row.
struct RowValue {
    Vec<Fp> on_g;
    Vec<Fp> on_v;
    friend bool operator==(const RowValue&, const RowValue&) = default;
    friend bool operator<(const RowValue& a, const RowValue& b) {
        return a.on_g != b.on_g ? a.on_g < b.on_g : a.on_v < b.on_v;
    }
};

enum class Pruning {
    /// Rows drawn from the counit-compatible subspace, checks stop at the
    /// first nonzero residual.
    staged,
    /// Every raw pair in F_p^8, every row-local residual evaluated.
    none,
};

struct EnumerationLimits {
    /// 0 means unlimited.
    std::size_t max_row_candidates = 0;
    std::size_t max_structures = 0;
};

struct EnumerationTask {
    std::uint32_t prime = 3;
    Mode mode = Mode::relaxed;
    EnumerationLimits limits{};
    /// Worker threads for the combination phase, partitioned by row-1 candidate.
    std::size_t workers = 1;
};

struct EnumerationStats {
    /// Indexed by row (1, g, v, gv).
    std::array<std::uint64_t, 4> raw_candidates{};
    std::array<std::uint64_t, 4> surviving_candidates{};
    std::uint64_t full_checks = 0;
    std::uint64_t passed = 0;
    bool limit_exceeded = false;
};

struct EnumerationReport {
    std::uint32_t prime = 3;
    Mode mode = Mode::relaxed;
    /// Pairwise distinct, sorted by flattened coefficients. Empty when a limit was hit.
    std::vector<FpOp> structures;
    std::size_t count() const { return structures.size(); }
    EnumerationStats stats;
    std::chrono::milliseconds elapsed{0};
};

/// H4 over F_p; p must be an odd prime at most 13.
Hopf<Fp> sweedler_h4_mod_p(std::uint32_t p);

/// All values of row `row` (0..3 in the order 1, g, v, gv) consistent with
/// every residual of the structure axioms that only involves rows
/// 0..row, given the earlier rows. Unitality joins in weak mode. Sorted.
std::vector<RowValue> row_candidates(const Hopf<Fp>& h4, std::size_t row, const std::vector<RowValue>& assigned,
                                     Mode mode = Mode::relaxed, Pruning pruning = Pruning::staged);

/// Every consistent assignment of the first `rows` rows, built row by row
/// with row_candidates. Sorted.
std::vector<std::vector<RowValue>> enumerate_prefixes(const Hopf<Fp>& h4, std::size_t rows, Mode mode,
                                                      Pruning pruning);

/// Completes a full assignment through extend_generators.
FpOp complete_rows(const Hopf<Fp>& h4, const std::vector<RowValue>& rows);

/// Exhaustive search; emitted tables pass the complete axiom suite exactly.
EnumerationReport enumerate(const EnumerationTask& task);

/// Canonical order on tables over one field: flattened coefficient values.
bool canonical_less(const FpOp& a, const FpOp& b);

/// {evaluate_mod_p(family, params := values)} over every parameter value
/// in F_p, deduplicated and sorted.
std::vector<FpOp> evaluate_families(const std::vector<TriangleOp<Polynomial>>& families, std::uint32_t p);

struct FamilyDiff {
    std::vector<FpOp> only_enumerated;
    std::vector<FpOp> only_families;
    std::size_t family_evaluations = 0;
    bool empty() const { return only_enumerated.empty() && only_families.empty(); }
};

FamilyDiff compare_with_families(const EnumerationReport& report, const std::vector<TriangleOp<Polynomial>>& families);

/// {"prime", "mode", "structures": [op...], "stats": {...}}; elapsed time is
/// left out so the payload is reproducible.
json enumeration_to_json(const EnumerationReport& report);
json diff_to_json(const FamilyDiff& diff);

}  // namespace posthopf
