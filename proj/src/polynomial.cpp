#include "posthopf/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace posthopf {

// ---------------------------------------------------------------------------
// Registry

Registry::Registry(const std::vector<std::string>& names) {
    for (const auto& n : names) add(n);
}

VarId Registry::add(std::string name) {
    if (index_.contains(name)) throw std::invalid_argument("registry: duplicate indeterminate '" + name + "'");
    auto id = static_cast<VarId>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    return id;
}

VarId Registry::get_or_add(std::string_view name) {
    if (auto id = find(name)) return *id;
    return add(std::string(name));
}

std::optional<VarId> Registry::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(VarId v, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(v, exponent);
    return m;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

std::uint32_t Monomial::degree_in(VarId v) const {
    for (const auto& f : factors_)
        if (f.first == v) return f.second;
    return 0;
}

Monomial Monomial::without(VarId v) const {
    Monomial m;
    for (const auto& f : factors_)
        if (f.first != v) m.factors_.push_back(f);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            m.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            m.factors_.push_back(*j++);
        } else {
            m.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return m;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first ? 1 : -1;
        if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second ? 1 : -1;
    }
    if (fa.size() == fb.size()) return 0;
    // Equal total degree forces both lists to be exhausted together.
    return fa.size() > fb.size() ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) terms_.push_back({Monomial{}, constant});
}

Polynomial::Polynomial(RegistryPtr registry, const Rational& constant) : Polynomial(constant) {
    registry_ = std::move(registry);
}

Polynomial Polynomial::variable(RegistryPtr registry, VarId v) {
    if (!registry || v >= registry->size()) throw std::invalid_argument("polynomial: unknown indeterminate");
    return Polynomial(std::move(registry), {{Monomial::variable(v), Rational(1)}}, true);
}

Polynomial Polynomial::from_terms(RegistryPtr registry, std::vector<Term> terms) {
    canonicalize(terms);
    return Polynomial(std::move(registry), std::move(terms), true);
}

void Polynomial::canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.monomial, b.monomial) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial)
            out.back().coefficient += t.coefficient;
        else
            out.push_back(std::move(t));
        if (out.back().coefficient.is_zero()) out.pop_back();
    }
    terms = std::move(out);
}

RegistryPtr Polynomial::common_registry(const Polynomial& a, const Polynomial& b) {
    if (!a.registry_) return b.registry_;
    if (!b.registry_ || a.registry_ == b.registry_) return a.registry_;
    if (a.is_constant() && b.is_constant()) return a.registry_;
    if (a.is_constant()) return b.registry_;
    if (b.is_constant()) return a.registry_;
    throw std::invalid_argument("polynomial: registry mismatch");
}

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_unit()) return terms_.back().coefficient;
    return Rational(0);
}

std::uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.total_degree(); }

std::uint32_t Polynomial::degree_in(VarId v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree_in(v));
    return d;
}

std::vector<VarId> Polynomial::variables() const {
    std::set<VarId> vs;
    for (const auto& t : terms_)
        for (const auto& f : t.monomial.factors()) vs.insert(f.first);
    return {vs.begin(), vs.end()};
}

Polynomial Polynomial::coefficient_in(VarId v, std::uint32_t d) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.monomial.degree_in(v) == d) out.push_back({t.monomial.without(v), t.coefficient});
    return from_terms(registry_, std::move(out));
}

Polynomial Polynomial::substitute(VarId v, const Polynomial& value) const {
    if (degree_in(v) == 0) return *this;
    // When v is the only variable the result lives entirely in value's registry.
    auto vars = variables();
    auto reg = (vars.size() == 1 && value.registry_) ? value.registry_ : common_registry(*this, value);
    std::vector<Polynomial> powers{Polynomial(reg, Rational(1))};
    std::vector<Term> kept;
    Polynomial result(reg, Rational(0));
    for (const auto& t : terms_) {
        auto e = t.monomial.degree_in(v);
        if (e == 0) {
            kept.push_back(t);
            continue;
        }
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        result += Polynomial(reg, {{t.monomial.without(v), t.coefficient}}, true) * powers[e];
    }
    result += from_terms(reg, std::move(kept));
    result.registry_ = reg;
    return result;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& values) const {
    // Variables left untouched keep this registry; otherwise take the values'.
    RegistryPtr reg;
    bool all_replaced = true;
    for (VarId v : variables())
        if (!values.contains(v)) all_replaced = false;
    if (!all_replaced) reg = registry_;
    for (const auto& [v, val] : values)
        if (!reg && val.registry() && !val.is_constant()) reg = val.registry();
    if (!reg) reg = registry_;
    Polynomial result(reg, Rational(0));
    std::map<std::pair<VarId, std::uint32_t>, Polynomial> power_cache;
    auto power = [&](VarId v, std::uint32_t e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        Polynomial p(reg, Rational(1));
        const auto& base = values.at(v);
        for (std::uint32_t i = 0; i < e; ++i) p *= base;
        return power_cache.emplace(key, std::move(p)).first->second;
    };
    for (const auto& t : terms_) {
        Polynomial term(reg, t.coefficient);
        Monomial rest;
        for (const auto& [v, e] : t.monomial.factors()) {
            if (values.contains(v))
                term *= power(v, e);
            else
                rest = rest * Monomial::variable(v, e);
        }
        if (!rest.is_unit()) term *= Polynomial(registry_, {{rest, Rational(1)}}, true);
        result += term;
    }
    return result;
}

Polynomial Polynomial::remap(const std::map<VarId, VarId>& ids, RegistryPtr target) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (const auto& [v, e] : t.monomial.factors()) {
            auto it = ids.find(v);
            if (it == ids.end()) throw std::invalid_argument("polynomial: remap misses an occurring variable");
            m = m * Monomial::variable(it->second, e);
        }
        out.push_back({std::move(m), t.coefficient});
    }
    return from_terms(std::move(target), std::move(out));
}

Polynomial Polynomial::scale(const Rational& c) const {
    if (c.is_zero()) return Polynomial(registry_, Rational(0));
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coefficient *= c;
    return Polynomial(registry_, std::move(out), true);
}

Polynomial Polynomial::monic() const {
    if (terms_.empty() || terms_.front().coefficient.is_one()) return *this;
    return scale(terms_.front().coefficient.inverse());
}

Polynomial Polynomial::divide_by_variable(VarId v) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        auto e = t.monomial.degree_in(v);
        if (e == 0) throw std::invalid_argument("polynomial: variable does not divide every term");
        out.push_back({t.monomial.without(v) * Monomial::variable(v, e - 1), t.coefficient});
    }
    return from_terms(registry_, std::move(out));
}

PrimeFieldElement Polynomial::evaluate_mod_p(const std::map<VarId, PrimeFieldElement>& assignment,
                                             std::uint32_t modulus) const {
    PrimeFieldElement acc(0, modulus);
    for (const auto& t : terms_) {
        PrimeFieldElement term = PrimeFieldElement::from_rational(t.coefficient, modulus);
        for (const auto& [v, e] : t.monomial.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                std::string name = registry_ ? registry_->name(v) : std::to_string(v);
                throw std::invalid_argument("evaluate_mod_p: indeterminate '" + name + "' is not assigned");
            }
            for (std::uint32_t i = 0; i < e; ++i) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    registry_ = common_registry(*this, o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        int c = i == terms_.end() ? -1 : (j == o.terms_.end() ? 1 : grlex_compare(i->monomial, j->monomial));
        if (c > 0) {
            out.push_back(std::move(*i++));
        } else if (c < 0) {
            out.push_back(*j++);
        } else {
            Rational s = i->coefficient + j->coefficient;
            if (!s.is_zero()) out.push_back({std::move(i->monomial), std::move(s)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    auto reg = Polynomial::common_registry(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(reg, Rational(0));
    if (a.terms_.size() == 1 && a.terms_[0].monomial.is_unit()) {
        auto r = b.scale(a.terms_[0].coefficient);
        r.registry_ = reg;
        return r;
    }
    if (b.terms_.size() == 1 && b.terms_[0].monomial.is_unit()) {
        auto r = a.scale(b.terms_[0].coefficient);
        r.registry_ = reg;
        return r;
    }
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    return Polynomial::from_terms(reg, std::move(out));
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = grlex_compare(a.terms_[i].monomial, b.terms_[i].monomial);
        if (c != 0) return c < 0;
        if (a.terms_[i].coefficient != b.terms_[i].coefficient)
            return a.terms_[i].coefficient < b.terms_[i].coefficient;
    }
    return a.terms_.size() < b.terms_.size();
}

std::string Polynomial::render(bool compact) const {
    if (terms_.empty()) return "0";
    std::string out;
    const char* mul = compact ? "" : "*";
    bool first = true;
    for (const auto& t : terms_) {
        bool negative = t.coefficient.sign() < 0;
        if (first)
            out += negative ? "-" : "";
        else if (compact)
            out += negative ? "-" : "+";
        else
            out += negative ? " - " : " + ";
        first = false;
        Rational mag = negative ? -t.coefficient : t.coefficient;
        bool unit = t.monomial.is_unit();
        bool wrote = false;
        if (unit || !mag.is_one()) {
            out += mag.to_string();
            wrote = true;
        }
        for (const auto& [v, e] : t.monomial.factors()) {
            if (wrote) out += mul;
            out += registry_ ? registry_->name(v) : "x" + std::to_string(v);
            if (e > 1) out += "^" + std::to_string(e);
            wrote = true;
        }
    }
    return out;
}

std::string Polynomial::to_string() const { return render(false); }
std::string Polynomial::to_compact_string() const { return render(true); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
  public:
    Parser(std::string_view text, const RegistryPtr& registry) : text_(text), registry_(registry) {}

    Polynomial parse() {
        Polynomial result(registry_, Rational(0));
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = get() == '-';
        }
        result += term(negative);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            result += term(op == '-');
        }
        return result;
    }

  private:
    Polynomial term(bool negative) {
        skip_ws();
        Rational coeff(1);
        Monomial mono;
        if (std::isdigit(static_cast<unsigned char>(peek())))
            coeff = rational_literal();
        else
            mono = varpow();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            skip_ws();
            mono = mono * varpow();
        }
        if (negative) coeff = -coeff;
        return Polynomial::from_terms(registry_, {{mono, coeff}});
    }

    Rational rational_literal() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
            ++pos_;
            std::size_t den_start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == den_start) fail("expected denominator");
        }
        return Rational::parse(text_.substr(start, pos_ - start));
    }

    Monomial varpow() {
        char c = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected indeterminate name");
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        if (!registry_) fail("no registry for indeterminate '" + std::string(name) + "'");
        VarId v = registry_->get_or_add(name);
        std::uint32_t e = 1;
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            std::size_t es = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == es) fail("expected exponent");
            e = static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(es, pos_ - es))));
            if (e == 0) fail("exponent must be positive");
        }
        return Monomial::variable(v, e);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return at_end() ? '\0' : text_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "': " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    const RegistryPtr& registry_;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const RegistryPtr& registry) {
    auto p = Parser(text, registry).parse();
    if (!p.registry_) p.registry_ = registry;
    return p;
}

// ---------------------------------------------------------------------------
// Factor splitting

std::optional<std::vector<Polynomial>> try_factor_split(const Polynomial& p) {
    if (p.is_constant()) return std::nullopt;
    const auto& reg = p.registry();

    // Monomial content: a variable dividing every term.
    for (VarId v : p.variables()) {
        bool divides = std::all_of(p.terms().begin(), p.terms().end(),
                                   [v](const Term& t) { return t.monomial.degree_in(v) > 0; });
        if (!divides) continue;
        Polynomial rest = p.divide_by_variable(v);
        if (rest.is_constant()) continue;
        // Absorb the rest's leading coefficient into the first factor.
        Rational lead = rest.terms().front().coefficient;
        return std::vector<Polynomial>{Polynomial::variable(reg, v).scale(lead), rest.monic()};
    }

    // Univariate quadratic with rational roots.
    auto vars = p.variables();
    if (vars.size() == 1 && p.degree_in(vars[0]) == 2) {
        VarId v = vars[0];
        Rational a = p.coefficient_in(v, 2).constant_term();
        Rational b = p.coefficient_in(v, 1).constant_term();
        Rational c = p.coefficient_in(v, 0).constant_term();
        Rational disc = b * b - Rational(4) * a * c;
        Rational root;
        if (!rational_sqrt(disc, root)) return std::nullopt;
        Rational r_hi = (-b + root) / (Rational(2) * a);
        Rational r_lo = (-b - root) / (Rational(2) * a);
        if (r_hi < r_lo) std::swap(r_hi, r_lo);
        Polynomial x = Polynomial::variable(reg, v);
        return std::vector<Polynomial>{(x - Polynomial(r_hi)).scale(a), x - Polynomial(r_lo)};
    }
    return std::nullopt;
}

}  // namespace posthopf
