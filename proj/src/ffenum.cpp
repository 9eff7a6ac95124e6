#include "posthopf/ffenum.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace posthopf {

namespace {

constexpr std::size_t kRows = 4;
constexpr std::size_t kG = 1;
constexpr std::size_t kV = 2;

Fp zero_of(const Hopf<Fp>& h) { return h.zero(); }

bool all_zero(const Vec<Fp>& v) {
    return std::all_of(v.begin(), v.end(), [](const Fp& x) { return x.is_zero(); });
}

/// Table whose rows 0..assigned.size()-1 are exact; later rows are zero.
FpOp partial_table(const Hopf<Fp>& h, const std::vector<RowValue>& assigned) {
    GeneratorTable<Fp> gt;
    for (std::size_t x = 0; x < kRows; ++x) {
        if (x < assigned.size()) {
            gt.on_g[x] = assigned[x].on_g;
            gt.on_v[x] = assigned[x].on_v;
        } else {
            gt.on_g[x] = h.zero_vector(kRows);
            gt.on_v[x] = h.zero_vector(kRows);
        }
    }
    return extend_generators(h, gt);
}

/// Δ(e_i▷e_j) = Σ (e_i1▷e_j1)⊗(e_i2▷e_j2) and ε(e_i▷e_j) = ε(e_i)ε(e_j).
bool coalgebra_cell_ok(const Hopf<Fp>& h, const FpOp& op, std::size_t i, std::size_t j) {
    if (apply_counit(h, op.at(i, j)) != h.counit()[i] * h.counit()[j]) return false;
    const auto n = h.dim();
    auto lhs = comultiply(h, op.at(i, j));
    for (const auto& s : h.comul_terms(i))
        for (const auto& t : h.comul_terms(j)) {
            Fp c = s.coef * t.coef;
            const auto& left = op.at(s.left, t.left);
            const auto& right = op.at(s.right, t.right);
            for (std::size_t p = 0; p < n; ++p) {
                if (left[p].is_zero()) continue;
                Fp cp = c * left[p];
                for (std::size_t q = 0; q < n; ++q)
                    if (!right[q].is_zero()) lhs[p * n + q] -= cp * right[q];
            }
        }
    return all_zero(lhs);
}

bool distributivity_ok(const Hopf<Fp>& h, const FpOp& op, std::size_t i, std::size_t j, std::size_t k) {
    const auto n = h.dim();
    Vec<Fp> jk(n, zero_of(h));
    for (const auto& t : h.mul_terms(j, k)) jk[t.k] += t.coef;
    auto diff = apply_basis(h, op, i, jk);
    for (const auto& s : h.comul_terms(i)) {
        auto prod = multiply(h, op.at(s.left, j), op.at(s.right, k));
        for (std::size_t c = 0; c < n; ++c) diff[c] -= s.coef * prod[c];
    }
    return all_zero(diff);
}

/// w = Σ e_i1 (e_i2 ▷ e_j).
Vec<Fp> weighted_left(const Hopf<Fp>& h, const FpOp& op, std::size_t i, std::size_t j) {
    Vec<Fp> w(h.dim(), zero_of(h));
    for (const auto& s : h.comul_terms(i)) {
        auto prod = multiply(h, h.basis_vector(s.left), op.at(s.right, j));
        for (std::size_t c = 0; c < h.dim(); ++c) w[c] += s.coef * prod[c];
    }
    return w;
}

bool weighted_ok(const Hopf<Fp>& h, const FpOp& op, std::size_t i, std::size_t j, std::size_t k, const Vec<Fp>& w) {
    auto diff = apply_basis(h, op, i, op.at(j, k));
    auto rhs = apply_to_basis(h, op, w, k);
    for (std::size_t c = 0; c < h.dim(); ++c) diff[c] -= rhs[c];
    return all_zero(diff);
}

/// Highest row index in the support of w, or -1 for w = 0.
long top_row(const Vec<Fp>& w) {
    for (std::size_t c = w.size(); c-- > 0;)
        if (!w[c].is_zero()) return static_cast<long>(c);
    return -1;
}

/// Every residual that becomes decidable once row r is fixed. With
/// early_exit the first nonzero residual stops the scan.
bool row_local_ok(const Hopf<Fp>& h, const FpOp& op, std::size_t r, Mode mode, bool early_exit) {
    const auto n = h.dim();
    bool ok = true;
    auto take = [&](bool result) {
        ok = ok && result;
        return !early_exit || ok;
    };
    if (mode == Mode::weak && r == 0)
        for (std::size_t j = 0; j < n; ++j)
            if (!take(op.at(0, j) == h.basis_vector(j))) return false;
    for (std::size_t j = 0; j < n; ++j)
        if (!take(coalgebra_cell_ok(h, op, r, j))) return false;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (!take(distributivity_ok(h, op, r, j, k))) return false;
    for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t j = 0; j <= r; ++j) {
            auto w = weighted_left(h, op, i, j);
            long top = top_row(w);
            if (top > static_cast<long>(r)) continue;
            if (std::max(i, j) != r && top != static_cast<long>(r)) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!take(weighted_ok(h, op, i, j, k, w))) return false;
        }
    return ok;
}

/// Odometer over F_p^len.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t p) {
    for (auto& d : digits) {
        if (++d < p) return true;
        d = 0;
    }
    return false;
}

Vec<Fp> to_vec(const std::vector<std::uint32_t>& digits, std::size_t offset, std::uint32_t p) {
    Vec<Fp> v;
    for (std::size_t c = 0; c < kRows; ++c) v.emplace_back(digits[offset + c], p);
    return v;
}

/// Replaces the pivot coordinate so that ε(v) = target.
bool fix_counit(const Hopf<Fp>& h, Vec<Fp>& v, const Fp& target) {
    const auto& eps = h.counit();
    std::size_t pivot = 0;
    while (pivot < eps.size() && eps[pivot].is_zero()) ++pivot;
    if (pivot == eps.size()) return target.is_zero();
    v[pivot] = zero_of(h);
    v[pivot] = (target - apply_counit(h, v)) / eps[pivot];
    return true;
}

std::vector<RowValue> row_candidates_impl(const Hopf<Fp>& h, std::size_t row, const std::vector<RowValue>& assigned,
                                          Mode mode, Pruning pruning, std::uint64_t* raw) {
    if (h.dim() != kRows) throw std::invalid_argument("row_candidates: expects the 4-dimensional Sweedler algebra");
    if (row >= kRows || assigned.size() != row)
        throw std::invalid_argument("row_candidates: rows must be assigned in order 1, g, v, gv");
    const auto p = h.zero().modulus();
    auto rows = assigned;
    rows.push_back({h.zero_vector(kRows), h.zero_vector(kRows)});
    std::vector<RowValue> out;
    std::uint64_t examined = 0;

    const bool staged = pruning == Pruning::staged;
    // Staged: three free coordinates per column, the pivot fixed by ε.
    const std::size_t free_per_column = staged ? kRows - 1 : kRows;
    std::vector<std::uint32_t> digits(2 * free_per_column, 0);
    const Fp target_g = h.counit()[row] * h.counit()[kG];
    const Fp target_v = h.counit()[row] * h.counit()[kV];
    do {
        RowValue cand;
        if (staged) {
            std::vector<std::uint32_t> full(2 * kRows, 0);
            for (std::size_t c = 0; c < kRows - 1; ++c) {
                full[c + 1] = digits[c];
                full[kRows + c + 1] = digits[kRows - 1 + c];
            }
            cand.on_g = to_vec(full, 0, p);
            cand.on_v = to_vec(full, kRows, p);
            if (!fix_counit(h, cand.on_g, target_g) || !fix_counit(h, cand.on_v, target_v)) continue;
        } else {
            cand.on_g = to_vec(digits, 0, p);
            cand.on_v = to_vec(digits, kRows, p);
        }
        ++examined;
        rows.back() = cand;
        if (row_local_ok(h, partial_table(h, rows), row, mode, staged)) out.push_back(std::move(cand));
    } while (advance(digits, p));
    if (raw) *raw += examined;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Fp> flatten(const FpOp& op) {
    std::vector<Fp> out;
    for (const auto& c : op.cells()) out.insert(out.end(), c.begin(), c.end());
    return out;
}

struct Worker {
    const Hopf<Fp>* h;
    Mode mode;
    EnumerationLimits limits;
    EnumerationStats stats{};
    std::vector<FpOp> found;

    void descend(std::vector<RowValue>& rows) {
        if (stats.limit_exceeded) return;
        if (rows.size() == kRows) {
            auto op = complete_rows(*h, rows);
            ++stats.full_checks;
            if (check_structure(*h, op, mode).passed()) {
                ++stats.passed;
                found.push_back(std::move(op));
                if (limits.max_structures && found.size() > limits.max_structures) stats.limit_exceeded = true;
            }
            return;
        }
        const auto r = rows.size();
        auto cands = row_candidates_impl(*h, r, rows, mode, Pruning::staged, &stats.raw_candidates[r]);
        stats.surviving_candidates[r] += cands.size();
        if (limits.max_row_candidates && cands.size() > limits.max_row_candidates) {
            stats.limit_exceeded = true;
            return;
        }
        for (auto& c : cands) {
            rows.push_back(std::move(c));
            descend(rows);
            rows.pop_back();
        }
    }
};

}  // namespace

Hopf<Fp> sweedler_h4_mod_p(std::uint32_t p) {
    if (!is_odd_prime(p) || p > 13) throw std::invalid_argument("enumeration supports odd primes 3..13, got " + std::to_string(p));
    return to_prime_field(sweedler_h4(), p);
}

std::vector<RowValue> row_candidates(const Hopf<Fp>& h4, std::size_t row, const std::vector<RowValue>& assigned,
                                     Mode mode, Pruning pruning) {
    return row_candidates_impl(h4, row, assigned, mode, pruning, nullptr);
}

std::vector<std::vector<RowValue>> enumerate_prefixes(const Hopf<Fp>& h4, std::size_t rows, Mode mode,
                                                      Pruning pruning) {
    if (rows > kRows) throw std::invalid_argument("enumerate_prefixes: at most four rows");
    std::vector<std::vector<RowValue>> level{{}};
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::vector<RowValue>> next;
        for (const auto& prefix : level)
            for (auto& c : row_candidates(h4, r, prefix, mode, pruning)) {
                auto extended = prefix;
                extended.push_back(std::move(c));
                next.push_back(std::move(extended));
            }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

FpOp complete_rows(const Hopf<Fp>& h4, const std::vector<RowValue>& rows) {
    if (rows.size() != kRows) throw std::invalid_argument("complete_rows: expects four rows");
    return partial_table(h4, rows);
}

bool canonical_less(const FpOp& a, const FpOp& b) { return flatten(a) < flatten(b); }

EnumerationReport enumerate(const EnumerationTask& task) {
    const auto start = std::chrono::steady_clock::now();
    const auto h = sweedler_h4_mod_p(task.prime);
    EnumerationReport report;
    report.prime = task.prime;
    report.mode = task.mode;

    std::vector<RowValue> empty;
    auto top = row_candidates_impl(h, 0, empty, task.mode, Pruning::staged, &report.stats.raw_candidates[0]);
    report.stats.surviving_candidates[0] = top.size();
    if (task.limits.max_row_candidates && top.size() > task.limits.max_row_candidates) report.stats.limit_exceeded = true;

    const std::size_t n_workers = std::max<std::size_t>(1, std::min(task.workers, top.size()));
    std::vector<Worker> workers(n_workers, Worker{&h, task.mode, task.limits, {}, {}});
    auto run = [&](std::size_t w) {
        for (std::size_t t = w; t < top.size(); t += n_workers) {
            std::vector<RowValue> rows{top[t]};
            workers[w].descend(rows);
        }
    };
    if (!report.stats.limit_exceeded) {
        if (n_workers == 1) {
            run(0);
        } else {
            std::vector<std::thread> threads;
            for (std::size_t w = 0; w < n_workers; ++w) threads.emplace_back(run, w);
            for (auto& t : threads) t.join();
        }
    }

    for (auto& w : workers) {
        for (std::size_t r = 1; r < kRows; ++r) {
            report.stats.raw_candidates[r] += w.stats.raw_candidates[r];
            report.stats.surviving_candidates[r] += w.stats.surviving_candidates[r];
        }
        report.stats.full_checks += w.stats.full_checks;
        report.stats.passed += w.stats.passed;
        report.stats.limit_exceeded = report.stats.limit_exceeded || w.stats.limit_exceeded;
        for (auto& op : w.found) report.structures.push_back(std::move(op));
    }
    std::sort(report.structures.begin(), report.structures.end(), canonical_less);
    report.structures.erase(std::unique(report.structures.begin(), report.structures.end()), report.structures.end());
    if (task.limits.max_structures && report.structures.size() > task.limits.max_structures)
        report.stats.limit_exceeded = true;
    if (report.stats.limit_exceeded) report.structures.clear();
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

std::vector<FpOp> evaluate_families(const std::vector<TriangleOp<Polynomial>>& families, std::uint32_t p) {
    std::vector<FpOp> out;
    for (const auto& fam : families) {
        std::vector<VarId> vars;
        for (const auto& cell : fam.cells())
            for (const auto& e : cell)
                for (auto v : e.variables())
                    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        std::vector<std::uint32_t> digits(vars.size(), 0);
        do {
            std::map<VarId, Fp> at;
            for (std::size_t k = 0; k < vars.size(); ++k) at.emplace(vars[k], Fp(digits[k], p));
            out.push_back(fam.map<Fp>([&](const Polynomial& e) { return e.evaluate_mod_p(at, p); }));
        } while (advance(digits, p));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FamilyDiff compare_with_families(const EnumerationReport& report, const std::vector<TriangleOp<Polynomial>>& families) {
    auto expected = evaluate_families(families, report.prime);
    auto found = report.structures;
    std::sort(found.begin(), found.end(), canonical_less);
    FamilyDiff diff;
    diff.family_evaluations = expected.size();
    std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(),
                        std::back_inserter(diff.only_enumerated), canonical_less);
    std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(),
                        std::back_inserter(diff.only_families), canonical_less);
    return diff;
}

json enumeration_to_json(const EnumerationReport& report) {
    json structures = json::array();
    for (const auto& op : report.structures) structures.push_back(op_to_json(op));
    json stats = {
        {"raw_candidates", report.stats.raw_candidates},
        {"surviving_candidates", report.stats.surviving_candidates},
        {"full_checks", report.stats.full_checks},
        {"passed", report.stats.passed},
        {"limit_exceeded", report.stats.limit_exceeded},
    };
    return {{"prime", report.prime},
            {"mode", to_string(report.mode)},
            {"count", report.count()},
            {"structures", structures},
            {"stats", stats}};
}

json diff_to_json(const FamilyDiff& diff) {
    json a = json::array(), b = json::array();
    for (const auto& op : diff.only_enumerated) a.push_back(op_to_json(op));
    for (const auto& op : diff.only_families) b.push_back(op_to_json(op));
    return {{"family_evaluations", diff.family_evaluations}, {"only_enumerated", a}, {"only_families", b}};
}

}  // namespace posthopf
