#include "orthoconn/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "orthoconn/errors.hpp"

namespace orthoconn {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (std::isdigit(static_cast<unsigned char>(ch)) == 0) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (!is_integer_literal(s)) throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw InvalidInput("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(text, text)));
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw InvalidInput("malformed rational: '" + std::string(text) + "'");
    mpz_class den = parse_integer(den_text, text);
    if (den == 0) throw InvalidInput("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw InvalidInput("not an integer: " + str());
    const mpz_class& n = value_.get_num();
    if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min())
        throw InvalidInput("integer out of range: " + str());
    return n.get_si();
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw InvalidInput("zero to a negative power");
        return Rational(1) / pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw InvalidInput("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace orthoconn
