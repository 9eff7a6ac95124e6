#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "posthopf/rational.hpp"

namespace posthopf {

bool is_odd_prime(std::uint32_t p);

/// Element of F_p for an odd prime p. Every element carries its modulus;
/// combining elements of different fields throws std::invalid_argument.
class PrimeFieldElement {
  public:
    PrimeFieldElement(std::int64_t value, std::uint32_t modulus);

    /// Image of a rational under Q -> F_p. Throws std::domain_error when the
    /// denominator is divisible by p.
    static PrimeFieldElement from_rational(const Rational& r, std::uint32_t modulus);

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    PrimeFieldElement inverse() const;
    std::string to_string() const { return std::to_string(value_); }

    PrimeFieldElement& operator+=(const PrimeFieldElement& o);
    PrimeFieldElement& operator-=(const PrimeFieldElement& o);
    PrimeFieldElement& operator*=(const PrimeFieldElement& o);
    PrimeFieldElement& operator/=(const PrimeFieldElement& o);

    friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
    friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
    friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
    friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }
    friend PrimeFieldElement operator-(const PrimeFieldElement& a) {
        return PrimeFieldElement(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_);
    }

    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }
    friend bool operator<(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        return a.modulus_ != b.modulus_ ? a.modulus_ < b.modulus_ : a.value_ < b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& e) { return os << e.value_; }

  private:
    void require_same_field(const PrimeFieldElement& o) const;

    std::uint32_t value_;
    std::uint32_t modulus_;
};

}  // namespace posthopf
