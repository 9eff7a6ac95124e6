#include "posthopf/hopf.hpp"

#include <algorithm>
#include <stdexcept>

#include "posthopf/matrix.hpp"
#include "posthopf/solver.hpp"

namespace posthopf {

Hopf<Polynomial> to_polynomial(const HopfStructure& h, const RegistryPtr& registry) {
    return h.map<Polynomial>([&](const Rational& r) { return Polynomial(registry, r); }, Polynomial(registry, 0),
                             Polynomial(registry, 1));
}

Hopf<PrimeFieldElement> to_prime_field(const HopfStructure& h, std::uint32_t p) {
    return h.map<PrimeFieldElement>([p](const Rational& r) { return PrimeFieldElement::from_rational(r, p); },
                                    PrimeFieldElement(0, p), PrimeFieldElement(1, p));
}

namespace {

struct TensorBuilder {
    std::size_t n;
    std::vector<Rational> mul, comul, antipode;
    explicit TensorBuilder(std::size_t dim)
        : n(dim), mul(dim * dim * dim), comul(dim * dim * dim), antipode(dim * dim) {}
    void set_mul(std::size_t i, std::size_t j, std::size_t k, long c) { mul[(i * n + j) * n + k] = c; }
    void set_comul(std::size_t i, std::size_t j, std::size_t k, long c) { comul[(i * n + j) * n + k] = c; }
    void set_antipode(std::size_t i, std::size_t j, long c) { antipode[i * n + j] = c; }
};

}  // namespace

HopfStructure sweedler_h4() {
    // Basis 1, g, v, gv with g^2 = 1, v^2 = 0, gv + vg = 0.
    enum { one = 0, g = 1, v = 2, gv = 3 };
    TensorBuilder t(4);
    t.set_mul(one, one, one, 1);
    t.set_mul(one, g, g, 1);
    t.set_mul(one, v, v, 1);
    t.set_mul(one, gv, gv, 1);
    t.set_mul(g, one, g, 1);
    t.set_mul(g, g, one, 1);
    t.set_mul(g, v, gv, 1);
    t.set_mul(g, gv, v, 1);
    t.set_mul(v, one, v, 1);
    t.set_mul(v, g, gv, -1);
    t.set_mul(gv, one, gv, 1);
    t.set_mul(gv, g, v, -1);

    t.set_comul(one, one, one, 1);
    t.set_comul(g, g, g, 1);
    t.set_comul(v, g, v, 1);
    t.set_comul(v, v, one, 1);
    t.set_comul(gv, one, gv, 1);
    t.set_comul(gv, gv, g, 1);

    t.set_antipode(one, one, 1);
    t.set_antipode(g, g, 1);
    t.set_antipode(v, gv, -1);
    t.set_antipode(gv, v, 1);

    return HopfStructure({"1", "g", "v", "gv"}, std::move(t.mul), {1, 0, 0, 0}, std::move(t.comul), {1, 1, 0, 0},
                         std::move(t.antipode), Rational(0), Rational(1));
}

HopfStructure trivial_hopf() {
    return HopfStructure({"1"}, {1}, {1}, {1}, {1}, {1}, Rational(0), Rational(1));
}

HopfStructure group_algebra_z2() {
    TensorBuilder t(2);
    t.set_mul(0, 0, 0, 1);
    t.set_mul(0, 1, 1, 1);
    t.set_mul(1, 0, 1, 1);
    t.set_mul(1, 1, 0, 1);
    t.set_comul(0, 0, 0, 1);
    t.set_comul(1, 1, 1, 1);
    t.set_antipode(0, 0, 1);
    t.set_antipode(1, 1, 1);
    return HopfStructure({"1", "g"}, std::move(t.mul), {1, 0}, std::move(t.comul), {1, 1}, std::move(t.antipode),
                         Rational(0), Rational(1));
}

bool is_group_like(const HopfStructure& h, const Vec<Rational>& x) {
    if (x.size() != h.dim()) return false;
    return comultiply(h, x) == tensor(h, x, x) && apply_counit(h, x).is_one();
}

std::vector<Vec<Rational>> group_likes(const HopfStructure& h) {
    const auto n = h.dim();
    auto reg = make_registry();
    std::vector<VarId> unknowns;
    Vec<Polynomial> x;
    for (std::size_t i = 0; i < n; ++i) {
        unknowns.push_back(reg->add("x" + std::to_string(i)));
        x.push_back(Polynomial::variable(reg, unknowns.back()));
    }
    auto hp = to_polynomial(h, reg);
    std::vector<Polynomial> eqs;
    auto dx = comultiply(hp, x);
    auto xx = tensor(hp, x, x);
    for (std::size_t c = 0; c < n * n; ++c) eqs.push_back(dx[c] - xx[c]);
    eqs.push_back(apply_counit(hp, x) - Polynomial(reg, 1));

    auto outcome = solve_polynomial_system(eqs, unknowns);
    std::vector<Vec<Rational>> result;
    for (const auto& b : outcome.branches) {
        if (b.status != BranchStatus::resolved)
            throw std::runtime_error("group_likes: unresolved branch in the group-like system");
        if (!b.free_vars.empty()) throw std::runtime_error("group_likes: solution set is not finite");
        Vec<Rational> point;
        for (VarId v : unknowns) point.push_back(b.assignments.at(v).constant_term());
        if (std::find(result.begin(), result.end(), point) == result.end()) result.push_back(std::move(point));
    }
    std::sort(result.begin(), result.end(), [&](const Vec<Rational>& a, const Vec<Rational>& b) {
        return render_element(a, h.basis()) < render_element(b, h.basis());
    });
    return result;
}

std::vector<Vec<Rational>> skew_primitives(const HopfStructure& h, const Vec<Rational>& g, const Vec<Rational>& k) {
    if (!is_group_like(h, g) || !is_group_like(h, k))
        throw std::invalid_argument("skew_primitives: arguments must be group-like");
    const auto n = h.dim();
    // Column c is the image of e_c under c -> Δ(c) - g⊗c - c⊗k.
    ExactMatrix<Rational> m(n * n, n, Rational(0));
    for (std::size_t c = 0; c < n; ++c) {
        auto e = h.basis_vector(c);
        auto d = comultiply(h, e);
        auto ge = tensor(h, g, e);
        auto ek = tensor(h, e, k);
        for (std::size_t r = 0; r < n * n; ++r) m(r, c) = d[r] - ge[r] - ek[r];
    }
    auto basis = kernel_basis(m);
    for (auto& v : basis) {
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); });
        if (it != v.end() && it->sign() < 0)
            for (auto& r : v) r = -r;
    }
    // Highest nonzero coordinate first: {v, 1-g} rather than {1-g, v}.
    auto top = [](const Vec<Rational>& v) {
        std::size_t t = 0;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero()) t = c;
        return t;
    };
    std::stable_sort(basis.begin(), basis.end(),
                     [&](const Vec<Rational>& a, const Vec<Rational>& b) { return top(a) > top(b); });
    return basis;
}

namespace {

std::string coefficient_text(const Rational& r, bool& compound) {
    compound = false;
    return r.to_string();
}
std::string coefficient_text(const PrimeFieldElement& r, bool& compound) {
    compound = false;
    return r.to_string();
}
std::string coefficient_text(const Polynomial& p, bool& compound) {
    compound = p.terms().size() > 1;
    return p.to_compact_string();
}

}  // namespace

template <class R>
std::string render_element(const Vec<R>& v, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        bool compound = false;
        std::string c = coefficient_text(v[i], compound);
        bool is_unit_basis = names.at(i) == "1";
        std::string piece;
        if (is_unit_basis)
            piece = c;
        else if (compound)
            piece = "(" + c + ")" + names[i];
        else if (c == "1")
            piece = names[i];
        else if (c == "-1")
            piece = "-" + names[i];
        else
            piece = c + names[i];
        if (!out.empty() && piece.front() != '-') out += "+";
        out += piece;
    }
    return out.empty() ? "0" : out;
}

template std::string render_element<Rational>(const Vec<Rational>&, const std::vector<std::string>&);
template std::string render_element<Polynomial>(const Vec<Polynomial>&, const std::vector<std::string>&);
template std::string render_element<PrimeFieldElement>(const Vec<PrimeFieldElement>&, const std::vector<std::string>&);

}  // namespace posthopf
