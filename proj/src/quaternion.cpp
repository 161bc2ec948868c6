#include "qnil/quaternion.hpp"

#include "qnil/errors.hpp"

#include <sstream>

namespace qnil {

Quaternion::Quaternion(AlgebraParams alg, Rational w, Rational x, Rational y, Rational z)
    : alg_(std::move(alg)), c_{std::move(w), std::move(x), std::move(y), std::move(z)} {}

Quaternion Quaternion::basis(const AlgebraParams& alg, int index) {
    Quaternion q(alg);
    q.c_.at(static_cast<std::size_t>(index)) = 1;
    return q;
}

void require_same_algebra(const Quaternion& p, const Quaternion& q) {
    if (!(p.algebra() == q.algebra())) throw ParameterError("quaternions from different algebras");
}

bool Quaternion::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool Quaternion::is_central() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

Quaternion Quaternion::conj() const { return Quaternion(alg_, c_[0], -c_[1], -c_[2], -c_[3]); }

Rational Quaternion::norm() const {
    // w^2 - a x^2 - b y^2 + ab z^2
    return c_[0] * c_[0] - alg_.a() * c_[1] * c_[1] - alg_.b() * c_[2] * c_[2] - alg_.k_square() * c_[3] * c_[3];
}

Rational Quaternion::trace() const { return c_[0] * 2; }

Quaternion Quaternion::pure_part() const { return Quaternion(alg_, 0, c_[1], c_[2], c_[3]); }

Quaternion Quaternion::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw DivisionByZero("inverse of zero quaternion");
    return conj() * n.inverse();
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
    require_same_algebra(*this, o);
    for (std::size_t t = 0; t < 4; ++t) c_[t] += o.c_[t];
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
    require_same_algebra(*this, o);
    for (std::size_t t = 0; t < 4; ++t) c_[t] -= o.c_[t];
    return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& o) { return *this = *this * o; }

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    require_same_algebra(p, q);
    const Rational& a = p.alg_.a();
    const Rational& b = p.alg_.b();
    const auto& [w1, x1, y1, z1] = p.c_;
    const auto& [w2, x2, y2, z2] = q.c_;
    // i^2 = a, j^2 = b, k^2 = -ab, ij = k, jk = -b i, ki = -a j
    Rational w = w1 * w2 + a * x1 * x2 + b * y1 * y2 + p.alg_.k_square() * z1 * z2;
    Rational x = w1 * x2 + x1 * w2 + b * (z1 * y2 - y1 * z2);
    Rational y = w1 * y2 + y1 * w2 + a * (x1 * z2 - z1 * x2);
    Rational z = w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2;
    return Quaternion(p.alg_, std::move(w), std::move(x), std::move(y), std::move(z));
}

Quaternion operator*(Quaternion p, const Rational& r) {
    for (auto& c : p.c_) c *= r;
    return p;
}

Quaternion Quaternion::operator-() const { return Quaternion(alg_, -c_[0], -c_[1], -c_[2], -c_[3]); }

bool operator==(const Quaternion& p, const Quaternion& q) { return p.c_ == q.c_ && p.alg_ == q.alg_; }

std::string Quaternion::to_string() const {
    static const char* units[] = {"", "i", "j", "k"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t t = 0; t < 4; ++t) {
        const Rational& c = c_[t];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (t == 0 || mag != Rational(1)) os << mag;
        os << units[t];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Quaternion commutator(const Quaternion& p, const Quaternion& q) { return p * q - q * p; }

bool quadratic_identity_check(const Quaternion& q) {
    return q * q == q * q.trace() - Quaternion::scalar(q.algebra(), q.norm());
}

Rational polar_form(const Quaternion& p, const Quaternion& q) {
    require_same_algebra(p, q);
    return (p * q.conj()).trace();
}

}  // namespace qnil
