#include "posthopf/rational.hpp"

#include <stdexcept>

namespace posthopf {

Rational::Rational(long numerator, long denominator) : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::domain_error("rational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("rational: cannot parse '" + std::string(text) + "'"); };
    auto is_integer_literal = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num, true)) throw bad();
    std::string num_str(num.front() == '+' ? num.substr(1) : num);
    if (slash == std::string_view::npos) return Rational(mpq_class(mpz_class(num_str)));
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den, false)) throw bad();
    mpz_class d(std::string{den});
    if (d == 0) throw std::domain_error("rational: zero denominator");
    return Rational(mpz_class(num_str), d);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("rational: division by zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const { return value_.get_str(); }

bool rational_sqrt(const Rational& r, Rational& root) {
    if (r.sign() < 0) return false;
    mpz_class n = r.numerator(), d = r.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    root = Rational(sn, sd);
    return true;
}

}  // namespace posthopf
