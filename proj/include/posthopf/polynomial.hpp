#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posthopf/prime_field.hpp"
#include "posthopf/rational.hpp"

namespace posthopf {

using VarId = std::uint32_t;

/// Append-only table of indeterminates. Ids are dense and names unique.
class Registry {
  public:
    Registry() = default;
    explicit Registry(const std::vector<std::string>& names);

    VarId add(std::string name);
    VarId get_or_add(std::string_view name);
    std::optional<VarId> find(std::string_view name) const;
    const std::string& name(VarId id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VarId> index_;
};

using RegistryPtr = std::shared_ptr<Registry>;

inline RegistryPtr make_registry() { return std::make_shared<Registry>(); }

class Monomial {
  public:
    using Factor = std::pair<VarId, std::uint32_t>;

    Monomial() = default;
    static Monomial variable(VarId v, std::uint32_t exponent = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(VarId v) const;
    /// Copy with v removed entirely.
    Monomial without(VarId v) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

  private:
    std::vector<Factor> factors_;  // sorted by VarId, exponents > 0
};

/// Graded lexicographic comparison; lower VarId is the more significant
/// variable. Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
    Monomial monomial;
    Rational coefficient;
    friend bool operator==(const Term& a, const Term& b) = default;
};

/// Sparse multivariate polynomial over Rational in canonical form: terms are
/// sorted by descending grlex order and no coefficient is zero.
///
/// A polynomial with variables refers to the Registry that names them;
/// constants may carry no registry and combine with anything. Mixing two
/// different registries throws std::invalid_argument.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(RegistryPtr registry, const Rational& constant);

    static Polynomial variable(RegistryPtr registry, VarId v);
    static Polynomial from_terms(RegistryPtr registry, std::vector<Term> terms);
    /// Parses the textual grammar; unknown names are added to the registry.
    static Polynomial parse(std::string_view text, const RegistryPtr& registry);

    const RegistryPtr& registry() const { return registry_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_unit()); }
    bool is_one() const { return is_constant() && constant_term().is_one(); }
    Rational constant_term() const;
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(VarId v) const;
    /// Sorted list of variables that occur.
    std::vector<VarId> variables() const;

    /// Coefficient of v^d as a polynomial in the remaining variables.
    Polynomial coefficient_in(VarId v, std::uint32_t d) const;
    Polynomial substitute(VarId v, const Polynomial& value) const;
    Polynomial substitute(const std::map<VarId, Polynomial>& values) const;
    /// Renames variables into another registry; every occurring variable must be mapped.
    Polynomial remap(const std::map<VarId, VarId>& ids, RegistryPtr target) const;
    Polynomial scale(const Rational& c) const;
    /// Scaled so that the leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;
    /// Divides out a single factor of v; requires v to divide every term.
    Polynomial divide_by_variable(VarId v) const;

    PrimeFieldElement evaluate_mod_p(const std::map<VarId, PrimeFieldElement>& assignment,
                                     std::uint32_t modulus) const;

    std::string to_string() const;
    /// Dense rendering without spaces or '*', e.g. "a-ag" style table cells.
    std::string to_compact_string() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a) { return a.scale(Rational(-1)); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    /// Canonical order: compares term sequences from the leading term down.
    friend bool operator<(const Polynomial& a, const Polynomial& b);

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

  private:
    Polynomial(RegistryPtr registry, std::vector<Term> sorted_terms, bool)
        : registry_(std::move(registry)), terms_(std::move(sorted_terms)) {}

    static RegistryPtr common_registry(const Polynomial& a, const Polynomial& b);
    static void canonicalize(std::vector<Term>& terms);
    std::string render(bool compact) const;

    RegistryPtr registry_;
    std::vector<Term> terms_;
};

/// Splits p into non-constant factors whose product is p. Recognized shapes,
/// in order: a variable dividing every term; a univariate quadratic with
/// rational roots. Returns nullopt otherwise.
std::optional<std::vector<Polynomial>> try_factor_split(const Polynomial& p);

}  // namespace posthopf
