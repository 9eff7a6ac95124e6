#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "posthopf/hopf.hpp"
#include "posthopf/polynomial.hpp"
#include "posthopf/report.hpp"

namespace posthopf {

/// Structure constants of a bilinear operation x ▷ y on an n-dimensional
/// algebra: cell (i, j) holds the coordinates of e_i ▷ e_j.
template <class R>
class TriangleOp {
  public:
    TriangleOp(std::size_t dim, std::vector<Vec<R>> cells) : n_(dim), cells_(std::move(cells)) {
        if (cells_.size() != n_ * n_) throw std::invalid_argument("triangle op: expected n*n cells");
        for (const auto& c : cells_)
            if (c.size() != n_) throw std::invalid_argument("triangle op: cell length != dim");
    }

    static TriangleOp filled(std::size_t dim, const R& zero) {
        return TriangleOp(dim, std::vector<Vec<R>>(dim * dim, Vec<R>(dim, zero)));
    }

    std::size_t dim() const { return n_; }
    const Vec<R>& at(std::size_t i, std::size_t j) const { return cells_.at(i * n_ + j); }
    Vec<R>& at(std::size_t i, std::size_t j) { return cells_.at(i * n_ + j); }
    const std::vector<Vec<R>>& cells() const { return cells_; }

    template <class S, class F>
    TriangleOp<S> map(F f) const {
        std::vector<Vec<S>> out;
        out.reserve(cells_.size());
        for (const auto& c : cells_) {
            Vec<S> v;
            v.reserve(c.size());
            for (const auto& x : c) v.push_back(f(x));
            out.push_back(std::move(v));
        }
        return TriangleOp<S>(n_, std::move(out));
    }

    friend bool operator==(const TriangleOp& a, const TriangleOp& b) { return a.n_ == b.n_ && a.cells_ == b.cells_; }

  private:
    std::size_t n_;
    std::vector<Vec<R>> cells_;
};

/// Values x ▷ g and x ▷ v for every basis element x of H4; the rest of the
/// table follows from distributivity (see extend_generators).
template <class R>
struct GeneratorTable {
    std::array<Vec<R>, 4> on_g;
    std::array<Vec<R>, 4> on_v;
};

namespace detail {
template <class R>
void require_compatible(const Hopf<R>& h, const TriangleOp<R>& op) {
    if (h.dim() != op.dim()) throw std::invalid_argument("triangle op: dimension differs from the Hopf structure");
}
}  // namespace detail

/// Bilinear extension of the table.
template <class R>
Vec<R> apply(const Hopf<R>& h, const TriangleOp<R>& op, const Vec<R>& x, const Vec<R>& y) {
    detail::require_compatible(h, op);
    const auto n = h.dim();
    detail::require_length(x, n, "apply");
    detail::require_length(y, n, "apply");
    Vec<R> out(n, h.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const auto& cell = op.at(i, j);
            R xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!cell[k].is_zero()) out[k] += xy * cell[k];
        }
    }
    return out;
}

/// e_i ▷ y for a basis element e_i.
template <class R>
Vec<R> apply_basis(const Hopf<R>& h, const TriangleOp<R>& op, std::size_t i, const Vec<R>& y) {
    const auto n = h.dim();
    Vec<R> out(n, h.zero());
    for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        const auto& cell = op.at(i, j);
        for (std::size_t k = 0; k < n; ++k)
            if (!cell[k].is_zero()) out[k] += y[j] * cell[k];
    }
    return out;
}

/// x ▷ e_j for a basis element e_j.
template <class R>
Vec<R> apply_to_basis(const Hopf<R>& h, const TriangleOp<R>& op, const Vec<R>& x, std::size_t j) {
    const auto n = h.dim();
    Vec<R> out(n, h.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        const auto& cell = op.at(i, j);
        for (std::size_t k = 0; k < n; ++k)
            if (!cell[k].is_zero()) out[k] += x[i] * cell[k];
    }
    return out;
}

namespace detail {
template <class R>
void emit_components(const ResidualSink<R>& sink, std::string_view id, std::vector<std::size_t> idx,
                     const Vec<R>& lhs, const Vec<R>& rhs) {
    idx.push_back(0);
    for (std::size_t c = 0; c < lhs.size(); ++c) {
        idx.back() = c;
        sink(id, idx, lhs[c] - rhs[c]);
    }
}
}  // namespace detail

/// ▷ as a coalgebra map H⊗H -> H: components of
/// Δ(e_i▷e_j) - Σ (e_i1▷e_j1)⊗(e_i2▷e_j2)  ("coalgebra_hom", indices i, j, component)
/// and ε(e_i▷e_j) - ε(e_i)ε(e_j)            ("counit_compat", indices i, j).
template <class R>
void for_each_coalgebra_hom_residual(const Hopf<R>& h, const TriangleOp<R>& op, const ResidualSink<R>& sink) {
    detail::require_compatible(h, op);
    const auto n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto lhs = comultiply(h, op.at(i, j));
            Vec<R> rhs(n * n, h.zero());
            for (const auto& s : h.comul_terms(i))
                for (const auto& t : h.comul_terms(j)) {
                    R c = s.coef * t.coef;
                    const auto& left = op.at(s.left, t.left);
                    const auto& right = op.at(s.right, t.right);
                    for (std::size_t p = 0; p < n; ++p) {
                        if (left[p].is_zero()) continue;
                        R cp = c * left[p];
                        for (std::size_t q = 0; q < n; ++q)
                            if (!right[q].is_zero()) rhs[p * n + q] += cp * right[q];
                    }
                }
            detail::emit_components(sink, "coalgebra_hom", {i, j}, lhs, rhs);
            sink("counit_compat", {i, j}, apply_counit(h, op.at(i, j)) - h.counit()[i] * h.counit()[j]);
        }
}

/// x ▷ (yz) = (x1 ▷ y)(x2 ▷ z) on basis triples ("distributivity").
template <class R>
void for_each_distributivity_residual(const Hopf<R>& h, const TriangleOp<R>& op, const ResidualSink<R>& sink) {
    detail::require_compatible(h, op);
    const auto n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<R> jk(n, h.zero());
                for (const auto& t : h.mul_terms(j, k)) jk[t.k] += t.coef;
                auto lhs = apply_basis(h, op, i, jk);
                Vec<R> rhs(n, h.zero());
                for (const auto& s : h.comul_terms(i)) {
                    auto prod = multiply(h, op.at(s.left, j), op.at(s.right, k));
                    for (std::size_t c = 0; c < n; ++c)
                        if (!prod[c].is_zero()) rhs[c] += s.coef * prod[c];
                }
                detail::emit_components(sink, "distributivity", {i, j, k}, lhs, rhs);
            }
}

/// x ▷ (y ▷ z) = (x1 (x2 ▷ y)) ▷ z on basis triples ("weighted_assoc").
template <class R>
void for_each_weighted_assoc_residual(const Hopf<R>& h, const TriangleOp<R>& op, const ResidualSink<R>& sink) {
    detail::require_compatible(h, op);
    const auto n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // w = Σ e_i1 (e_i2 ▷ e_j), shared by every k.
            Vec<R> w(n, h.zero());
            for (const auto& s : h.comul_terms(i)) {
                auto prod = multiply(h, h.basis_vector(s.left), op.at(s.right, j));
                for (std::size_t c = 0; c < n; ++c)
                    if (!prod[c].is_zero()) w[c] += s.coef * prod[c];
            }
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = apply_basis(h, op, i, op.at(j, k));
                auto rhs = apply_to_basis(h, op, w, k);
                detail::emit_components(sink, "weighted_assoc", {i, j, k}, lhs, rhs);
            }
        }
}

/// 1 ▷ e_j = e_j ("unitality").
template <class R>
void for_each_unitality_residual(const Hopf<R>& h, const TriangleOp<R>& op, const ResidualSink<R>& sink) {
    detail::require_compatible(h, op);
    for (std::size_t j = 0; j < h.dim(); ++j)
        detail::emit_components(sink, "unitality", {j}, apply(h, op, h.unit(), h.basis_vector(j)), h.basis_vector(j));
}

/// e_i ▷ 1 = ε(e_i) 1 ("counit_absorption").
template <class R>
void for_each_counit_absorption_residual(const Hopf<R>& h, const TriangleOp<R>& op, const ResidualSink<R>& sink) {
    detail::require_compatible(h, op);
    const auto n = h.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vec<R> target(n, h.zero());
        for (std::size_t k = 0; k < n; ++k) target[k] = h.counit()[i] * h.unit()[k];
        detail::emit_components(sink, "counit_absorption", {i}, apply(h, op, h.basis_vector(i), h.unit()), target);
    }
}

#define POSTHOPF_REPORT_WRAPPER(name, walker)                                    \
    template <class R>                                                           \
    AxiomReport name(const Hopf<R>& h, const TriangleOp<R>& op) {                \
        AxiomReport report;                                                      \
        walker<R>(h, op, ReportSink<R>{&report});                                \
        return report;                                                           \
    }

POSTHOPF_REPORT_WRAPPER(check_coalgebra_hom, for_each_coalgebra_hom_residual)
POSTHOPF_REPORT_WRAPPER(check_distributivity, for_each_distributivity_residual)
POSTHOPF_REPORT_WRAPPER(check_weighted_assoc, for_each_weighted_assoc_residual)
POSTHOPF_REPORT_WRAPPER(check_unitality, for_each_unitality_residual)
POSTHOPF_REPORT_WRAPPER(check_counit_absorption, for_each_counit_absorption_residual)

#undef POSTHOPF_REPORT_WRAPPER

enum class Mode { relaxed, weak };

const char* to_string(Mode m);
Mode parse_mode(std::string_view text);

/// Coalgebra map + distributivity + weighted associativity, plus unitality in weak mode.
template <class R>
AxiomReport check_structure(const Hopf<R>& h, const TriangleOp<R>& op, Mode mode) {
    AxiomReport report = check_coalgebra_hom(h, op);
    report.merge(check_distributivity(h, op));
    report.merge(check_weighted_assoc(h, op));
    if (mode == Mode::weak) report.merge(check_unitality(h, op));
    return report;
}

/// Completes a generator table on H4 (basis 1, g, v, gv) using 1 = g·g and
/// gv = g·v:  x ▷ 1 := (x1 ▷ g)(x2 ▷ g),  x ▷ gv := (x1 ▷ g)(x2 ▷ v).
template <class R>
TriangleOp<R> extend_generators(const Hopf<R>& h4, const GeneratorTable<R>& gt) {
    if (h4.dim() != 4) throw std::invalid_argument("extend_generators: expects the 4-dimensional Sweedler algebra");
    for (std::size_t x = 0; x < 4; ++x) {
        detail::require_length(gt.on_g[x], 4, "extend_generators");
        detail::require_length(gt.on_v[x], 4, "extend_generators");
    }
    auto op = TriangleOp<R>::filled(4, h4.zero());
    for (std::size_t x = 0; x < 4; ++x) {
        op.at(x, 1) = gt.on_g[x];
        op.at(x, 2) = gt.on_v[x];
        Vec<R> col1(4, h4.zero()), col3(4, h4.zero());
        for (const auto& t : h4.comul_terms(x)) {
            auto gg = multiply(h4, gt.on_g[t.left], gt.on_g[t.right]);
            auto gv = multiply(h4, gt.on_g[t.left], gt.on_v[t.right]);
            for (std::size_t k = 0; k < 4; ++k) {
                if (!gg[k].is_zero()) col1[k] += t.coef * gg[k];
                if (!gv[k].is_zero()) col3[k] += t.coef * gv[k];
            }
        }
        op.at(x, 0) = std::move(col1);
        op.at(x, 3) = std::move(col3);
    }
    return op;
}

/// Generator columns (g and v) of a table on H4.
template <class R>
GeneratorTable<R> generator_columns(const TriangleOp<R>& op) {
    GeneratorTable<R> gt;
    for (std::size_t x = 0; x < 4; ++x) {
        gt.on_g[x] = op.at(x, 1);
        gt.on_v[x] = op.at(x, 2);
    }
    return gt;
}

// ---------------------------------------------------------------------------
// Built-in classification families on H4.

enum class Family { i, ii, iii, iv, v, vi };

inline constexpr std::array<Family, 6> all_families{Family::i, Family::ii, Family::iii,
                                                    Family::iv, Family::v, Family::vi};

const char* to_string(Family f);
Family parse_family(std::string_view roman);
bool family_has_parameter(Family f);

/// The family's table with polynomial entries. For (i) and (ii) the
/// parameter defaults to a fresh indeterminate "a"; supplying a parameter
/// for (iii)-(vi) throws std::invalid_argument.
TriangleOp<Polynomial> family_table(Family f, const std::optional<Polynomial>& param = std::nullopt);

/// Embedded canonical JSON holding the six family tables.
std::string_view builtin_families_json();
/// Embedded canonical JSON of the Sweedler algebra.
std::string_view builtin_h4_json();
/// FNV-1a 64-bit checksum, used to pin the embedded data.
std::uint64_t fnv1a64(std::string_view bytes);

/// Text rendering in the row/column order of the basis, one row per line:
///   "v | 0, a-ag, -av, -agv"
template <class R>
std::string render_table(const TriangleOp<R>& op, const std::vector<std::string>& names) {
    std::string out = "▷ | ";
    for (std::size_t j = 0; j < op.dim(); ++j) out += (j ? ", " : "") + names.at(j);
    out += "\n";
    for (std::size_t i = 0; i < op.dim(); ++i) {
        out += names.at(i) + " | ";
        for (std::size_t j = 0; j < op.dim(); ++j) out += (j ? ", " : "") + render_element(op.at(i, j), names);
        out += "\n";
    }
    return out;
}

}  // namespace posthopf
