#include "posthopf/prime_field.hpp"

#include <stdexcept>

namespace posthopf {

bool is_odd_prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
    if (!is_odd_prime(modulus))
        throw std::invalid_argument("prime field: modulus " + std::to_string(modulus) + " is not an odd prime");
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    value_ = static_cast<std::uint32_t>(r);
}

PrimeFieldElement PrimeFieldElement::from_rational(const Rational& r, std::uint32_t modulus) {
    mpz_class p(modulus);
    mpz_class num = r.numerator() % p;
    mpz_class den = r.denominator() % p;
    if (den == 0) throw std::domain_error("prime field: denominator divisible by " + std::to_string(modulus));
    return PrimeFieldElement(num.get_si(), modulus) / PrimeFieldElement(den.get_si(), modulus);
}

void PrimeFieldElement::require_same_field(const PrimeFieldElement& o) const {
    if (modulus_ != o.modulus_) throw std::invalid_argument("prime field: mixed-field operands");
}

PrimeFieldElement PrimeFieldElement::inverse() const {
    if (value_ == 0) throw std::domain_error("prime field: division by zero");
    // Extended Euclid on (value, modulus).
    std::int64_t a = value_, m = modulus_, x0 = 1, x1 = 0;
    while (m != 0) {
        std::int64_t q = a / m;
        std::int64_t t = a - q * m;
        a = m;
        m = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return PrimeFieldElement(x0, modulus_);
}

PrimeFieldElement& PrimeFieldElement::operator+=(const PrimeFieldElement& o) {
    require_same_field(o);
    value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) + o.value_) % modulus_);
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator-=(const PrimeFieldElement& o) {
    require_same_field(o);
    value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) + modulus_ - o.value_) % modulus_);
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator*=(const PrimeFieldElement& o) {
    require_same_field(o);
    value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) * o.value_) % modulus_);
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator/=(const PrimeFieldElement& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

}  // namespace posthopf
