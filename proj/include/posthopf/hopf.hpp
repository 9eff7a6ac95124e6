#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "posthopf/polynomial.hpp"
#include "posthopf/prime_field.hpp"
#include "posthopf/rational.hpp"
#include "posthopf/report.hpp"

namespace posthopf {

/// Coordinates of an element of H (length n) or of H⊗H (length n², with
/// e_i⊗e_j at index i*n + j).
template <class R>
using Vec = std::vector<R>;

/// Callback receiving each residual component of an identity check.
template <class R>
using ResidualSink = std::function<void(std::string_view axiom, const std::vector<std::size_t>& indices, const R& residual)>;

/// A finite-dimensional Hopf algebra given by structure constants over R.
///
///   mul(i, j, k)    coefficient of e_k in e_i e_j
///   comul(i, j, k)  coefficient of e_j⊗e_k in Δ(e_i)
///   antipode(i, j)  coefficient of e_j in S(e_i)
///
/// Values are immutable once constructed. Sparse term lists of the mul and
/// comul tensors are precomputed for the expansion kernels.
template <class R>
class Hopf {
  public:
    struct MulTerm {
        std::size_t k;
        R coef;
    };
    struct ComulTerm {
        std::size_t left;
        std::size_t right;
        R coef;
    };

    Hopf(std::vector<std::string> basis, std::vector<R> mul_tensor, std::vector<R> unit_vector,
         std::vector<R> comul_tensor, std::vector<R> counit_vector, std::vector<R> antipode_matrix, R zero_element,
         R one_element)
        : n_(basis.size()),
          basis_(std::move(basis)),
          mul_(std::move(mul_tensor)),
          unit_(std::move(unit_vector)),
          comul_(std::move(comul_tensor)),
          counit_(std::move(counit_vector)),
          antipode_(std::move(antipode_matrix)),
          zero_(std::move(zero_element)),
          one_(std::move(one_element)) {
        if (n_ == 0) throw std::invalid_argument("hopf: dimension must be positive");
        if (mul_.size() != n_ * n_ * n_ || comul_.size() != n_ * n_ * n_ || unit_.size() != n_ ||
            counit_.size() != n_ || antipode_.size() != n_ * n_)
            throw std::invalid_argument("hopf: tensor sizes inconsistent with dimension " + std::to_string(n_));
        mul_terms_.resize(n_ * n_);
        comul_terms_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    if (!mul(i, j, k).is_zero()) mul_terms_[i * n_ + j].push_back({k, mul(i, j, k)});
                    if (!comul(i, j, k).is_zero()) comul_terms_[i].push_back({j, k, comul(i, j, k)});
                }
    }

    std::size_t dim() const { return n_; }
    const std::vector<std::string>& basis() const { return basis_; }
    const R& zero() const { return zero_; }
    const R& one() const { return one_; }

    const R& mul(std::size_t i, std::size_t j, std::size_t k) const { return mul_[(i * n_ + j) * n_ + k]; }
    const R& comul(std::size_t i, std::size_t j, std::size_t k) const { return comul_[(i * n_ + j) * n_ + k]; }
    const R& antipode(std::size_t i, std::size_t j) const { return antipode_[i * n_ + j]; }
    const std::vector<R>& unit() const { return unit_; }
    const std::vector<R>& counit() const { return counit_; }

    const std::vector<R>& mul_tensor() const { return mul_; }
    const std::vector<R>& comul_tensor() const { return comul_; }
    const std::vector<R>& antipode_matrix() const { return antipode_; }

    const std::vector<MulTerm>& mul_terms(std::size_t i, std::size_t j) const { return mul_terms_[i * n_ + j]; }
    const std::vector<ComulTerm>& comul_terms(std::size_t i) const { return comul_terms_[i]; }

    Vec<R> zero_vector(std::size_t length) const { return Vec<R>(length, zero_); }
    Vec<R> basis_vector(std::size_t i) const {
        Vec<R> v(n_, zero_);
        v.at(i) = one_;
        return v;
    }

    /// Same structure with every constant pushed through f.
    template <class S, class F>
    Hopf<S> map(F f, S zero, S one) const {
        auto conv = [&](const std::vector<R>& xs) {
            std::vector<S> out;
            out.reserve(xs.size());
            for (const auto& x : xs) out.push_back(f(x));
            return out;
        };
        return Hopf<S>(basis_, conv(mul_), conv(unit_), conv(comul_), conv(counit_), conv(antipode_),
                       std::move(zero), std::move(one));
    }

  private:
    std::size_t n_;
    std::vector<std::string> basis_;
    std::vector<R> mul_;
    std::vector<R> unit_;
    std::vector<R> comul_;
    std::vector<R> counit_;
    std::vector<R> antipode_;
    R zero_;
    R one_;
    std::vector<std::vector<MulTerm>> mul_terms_;
    std::vector<std::vector<ComulTerm>> comul_terms_;
};

using HopfStructure = Hopf<Rational>;

/// Symbolic copy of a rational structure, with constants in the given registry.
Hopf<Polynomial> to_polynomial(const HopfStructure& h, const RegistryPtr& registry);
/// Image of a rational structure in F_p.
Hopf<PrimeFieldElement> to_prime_field(const HopfStructure& h, std::uint32_t p);

namespace detail {
template <class R>
void require_length(const Vec<R>& v, std::size_t n, const char* what) {
    if (v.size() != n)
        throw std::invalid_argument(std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                                    std::to_string(v.size()));
}
}  // namespace detail

template <class R>
Vec<R> multiply(const Hopf<R>& h, const Vec<R>& a, const Vec<R>& b) {
    const auto n = h.dim();
    detail::require_length(a, n, "multiply");
    detail::require_length(b, n, "multiply");
    Vec<R> out(n, h.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            R ab = a[i] * b[j];
            for (const auto& t : h.mul_terms(i, j)) out[t.k] += ab * t.coef;
        }
    }
    return out;
}

template <class R>
Vec<R> comultiply(const Hopf<R>& h, const Vec<R>& a) {
    const auto n = h.dim();
    detail::require_length(a, n, "comultiply");
    Vec<R> out(n * n, h.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& t : h.comul_terms(i)) out[t.left * n + t.right] += a[i] * t.coef;
    }
    return out;
}

template <class R>
R apply_counit(const Hopf<R>& h, const Vec<R>& a) {
    detail::require_length(a, h.dim(), "counit");
    R out = h.zero();
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (!a[i].is_zero() && !h.counit()[i].is_zero()) out += a[i] * h.counit()[i];
    return out;
}

template <class R>
Vec<R> apply_antipode(const Hopf<R>& h, const Vec<R>& a) {
    const auto n = h.dim();
    detail::require_length(a, n, "antipode");
    Vec<R> out(n, h.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!h.antipode(i, j).is_zero()) out[j] += a[i] * h.antipode(i, j);
    }
    return out;
}

/// x⊗y as an element of H⊗H.
template <class R>
Vec<R> tensor(const Hopf<R>& h, const Vec<R>& x, const Vec<R>& y) {
    const auto n = h.dim();
    Vec<R> out(n * n, h.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!y[j].is_zero()) out[i * n + j] = x[i] * y[j];
    }
    return out;
}

/// Componentwise product in the algebra H⊗H.
template <class R>
Vec<R> tensor_multiply(const Hopf<R>& h, const Vec<R>& s, const Vec<R>& t) {
    const auto n = h.dim();
    Vec<R> out(n * n, h.zero());
    for (std::size_t a = 0; a < n * n; ++a) {
        if (s[a].is_zero()) continue;
        for (std::size_t b = 0; b < n * n; ++b) {
            if (t[b].is_zero()) continue;
            R st = s[a] * t[b];
            for (const auto& l : h.mul_terms(a / n, b / n))
                for (const auto& r : h.mul_terms(a % n, b % n)) out[l.k * n + r.k] += st * l.coef * r.coef;
        }
    }
    return out;
}

/// Emits every residual of the Hopf algebra axioms. Ids: associativity,
/// left_unit, right_unit, coassociativity, left_counit, right_counit,
/// comul_multiplicative, counit_multiplicative, comul_unit, counit_unit,
/// antipode_left, antipode_right.
template <class R>
void for_each_hopf_residual(const Hopf<R>& h, const ResidualSink<R>& sink) {
    const auto n = h.dim();
    std::vector<Vec<R>> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(h.basis_vector(i));
    auto emit_vec = [&](std::string_view id, std::vector<std::size_t> idx, const Vec<R>& lhs, const Vec<R>& rhs) {
        idx.push_back(0);
        for (std::size_t c = 0; c < lhs.size(); ++c) {
            idx.back() = c;
            sink(id, idx, lhs[c] - rhs[c]);
        }
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ij = multiply(h, e[i], e[j]);
            for (std::size_t k = 0; k < n; ++k)
                emit_vec("associativity", {i, j, k}, multiply(h, ij, e[k]), multiply(h, e[i], multiply(h, e[j], e[k])));
        }
    for (std::size_t i = 0; i < n; ++i) {
        emit_vec("left_unit", {i}, multiply(h, h.unit(), e[i]), e[i]);
        emit_vec("right_unit", {i}, multiply(h, e[i], h.unit()), e[i]);
    }

    // Coassociativity in H⊗H⊗H, index (a, b, c) -> (a*n + b)*n + c.
    for (std::size_t i = 0; i < n; ++i) {
        Vec<R> left(n * n * n, h.zero()), right(n * n * n, h.zero());
        for (const auto& t : h.comul_terms(i)) {
            for (const auto& u : h.comul_terms(t.left))
                left[(u.left * n + u.right) * n + t.right] += t.coef * u.coef;
            for (const auto& u : h.comul_terms(t.right))
                right[(t.left * n + u.left) * n + u.right] += t.coef * u.coef;
        }
        emit_vec("coassociativity", {i}, left, right);

        Vec<R> lc(n, h.zero()), rc(n, h.zero());
        for (const auto& t : h.comul_terms(i)) {
            if (!h.counit()[t.left].is_zero()) lc[t.right] += t.coef * h.counit()[t.left];
            if (!h.counit()[t.right].is_zero()) rc[t.left] += t.coef * h.counit()[t.right];
        }
        emit_vec("left_counit", {i}, lc, e[i]);
        emit_vec("right_counit", {i}, rc, e[i]);
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ij = multiply(h, e[i], e[j]);
            emit_vec("comul_multiplicative", {i, j}, comultiply(h, ij),
                     tensor_multiply(h, comultiply(h, e[i]), comultiply(h, e[j])));
            sink("counit_multiplicative", {i, j}, apply_counit(h, ij) - h.counit()[i] * h.counit()[j]);
        }
    emit_vec("comul_unit", {}, comultiply(h, h.unit()), tensor(h, h.unit(), h.unit()));
    sink("counit_unit", {}, apply_counit(h, h.unit()) - h.one());

    for (std::size_t i = 0; i < n; ++i) {
        Vec<R> left(n, h.zero()), right(n, h.zero());
        for (const auto& t : h.comul_terms(i)) {
            auto l = multiply(h, apply_antipode(h, e[t.left]), e[t.right]);
            auto r = multiply(h, e[t.left], apply_antipode(h, e[t.right]));
            for (std::size_t k = 0; k < n; ++k) {
                left[k] += t.coef * l[k];
                right[k] += t.coef * r[k];
            }
        }
        Vec<R> target(n, h.zero());
        for (std::size_t k = 0; k < n; ++k) target[k] = h.counit()[i] * h.unit()[k];
        emit_vec("antipode_left", {i}, left, target);
        emit_vec("antipode_right", {i}, right, target);
    }
}

template <class R>
AxiomReport verify_hopf_axioms(const Hopf<R>& h) {
    AxiomReport report;
    for_each_hopf_residual<R>(h, ReportSink<R>{&report});
    return report;
}

/// Sweedler's 4-dimensional Hopf algebra with basis 1, g, v, gv.
HopfStructure sweedler_h4();
/// The one-dimensional Hopf algebra k.
HopfStructure trivial_hopf();
/// Group algebra k[Z/2] with basis 1, g.
HopfStructure group_algebra_z2();

/// All group-like elements (Δx = x⊗x, ε(x) = 1), found with the branch
/// solver. Throws std::runtime_error when the solution set is not a finite
/// set of rational points.
std::vector<Vec<Rational>> group_likes(const HopfStructure& h);

/// Basis of the (g, h)-skew-primitive space {c : Δc = g⊗c + c⊗h}. Basis
/// vectors come from the RREF kernel and are scaled so that their first
/// nonzero coordinate is positive, ordered by descending highest nonzero
/// coordinate. Throws std::invalid_argument when g or h is not group-like.
std::vector<Vec<Rational>> skew_primitives(const HopfStructure& h, const Vec<Rational>& g, const Vec<Rational>& k);

bool is_group_like(const HopfStructure& h, const Vec<Rational>& x);

/// Renders an element like "1-g", "2v+gv" or "(a+1)g" using the given names
/// (defaults to the structure's basis names).
template <class R>
std::string render_element(const Vec<R>& v, const std::vector<std::string>& names);

}  // namespace posthopf
