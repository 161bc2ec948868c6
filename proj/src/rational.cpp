#include "qnil/rational.hpp"

#include "qnil/errors.hpp"

#include <cctype>

namespace qnil {

namespace {

BigInt from_int64(std::int64_t v) {
    // mpz_class has no portable int64 constructor on every platform
    return BigInt(std::to_string(v));
}

bool parse_integer(std::string_view s, BigInt& out) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(std::int64_t v) : value_(from_int64(v)) {}

Rational::Rational(const BigInt& v) : value_(v) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(from_int64(num), from_int64(den)) {}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    BigInt num;
    BigInt den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) throw ParseError("bad rational: '" + std::string(text) + "'");
    } else {
        auto dtext = text.substr(slash + 1);
        if (!parse_integer(text.substr(0, slash), num) || !parse_integer(dtext, den) || dtext[0] == '-' ||
            dtext[0] == '+') {
            throw ParseError("bad rational: '" + std::string(text) + "'");
        }
        if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

bool Rational::is_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(value_.get_num_mpz_t()) != 0 && mpz_perfect_square_p(value_.get_den_mpz_t()) != 0;
}

Rational Rational::sqrt() const {
    if (!is_square()) throw PreconditionError("sqrt of a non-square rational " + to_string());
    BigInt n = ::sqrt(value_.get_num());
    BigInt d = ::sqrt(value_.get_den());
    return Rational(n, d);
}

BigInt Rational::height() const {
    BigInt n = ::abs(value_.get_num());
    const BigInt& d = value_.get_den();
    return n > d ? n : d;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational");
    return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

}  // namespace qnil
