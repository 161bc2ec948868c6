#pragma once

#include "qnil/algebra.hpp"
#include "qnil/rational.hpp"

#include <array>
#include <ostream>
#include <string>

namespace qnil {

/// Element w + x i + y j + z k of a quaternion algebra (a,b/Q).
class Quaternion {
public:
    /// Zero of the Hamilton algebra.
    Quaternion() = default;
    explicit Quaternion(AlgebraParams alg) : alg_(std::move(alg)) {}
    Quaternion(AlgebraParams alg, Rational w, Rational x = 0, Rational y = 0, Rational z = 0);

    static Quaternion scalar(const AlgebraParams& alg, const Rational& r) { return Quaternion(alg, r); }
    static Quaternion i(const AlgebraParams& alg) { return Quaternion(alg, 0, 1); }
    static Quaternion j(const AlgebraParams& alg) { return Quaternion(alg, 0, 0, 1); }
    static Quaternion k(const AlgebraParams& alg) { return Quaternion(alg, 0, 0, 0, 1); }
    /// Basis element 0..3 = 1, i, j, k.
    static Quaternion basis(const AlgebraParams& alg, int index);

    const AlgebraParams& algebra() const { return alg_; }
    const Rational& w() const { return c_[0]; }
    const Rational& x() const { return c_[1]; }
    const Rational& y() const { return c_[2]; }
    const Rational& z() const { return c_[3]; }
    const Rational& coord(int idx) const { return c_[static_cast<std::size_t>(idx)]; }
    const std::array<Rational, 4>& coords() const { return c_; }

    bool is_zero() const;
    /// Central iff the pure part vanishes.
    bool is_central() const;

    Quaternion conj() const;
    Rational norm() const;
    Rational trace() const;
    /// Pure part q - t(q)/2.
    Quaternion pure_part() const;
    /// Throws DivisionByZero for zero.
    Quaternion inverse() const;

    Quaternion& operator+=(const Quaternion& o);
    Quaternion& operator-=(const Quaternion& o);
    Quaternion& operator*=(const Quaternion& o);

    friend Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
    friend Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
    friend Quaternion operator*(Quaternion p, const Rational& r);
    friend Quaternion operator*(const Rational& r, Quaternion p) { return std::move(p) * r; }
    Quaternion operator-() const;

    /// Exact equality of coordinates and algebra.
    friend bool operator==(const Quaternion& p, const Quaternion& q);

    /// e.g. "1 - 2i + 1/2k"
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.to_string(); }

private:
    AlgebraParams alg_;
    std::array<Rational, 4> c_{};
};

/// Throws ParameterError unless p and q live in the same algebra.
void require_same_algebra(const Quaternion& p, const Quaternion& q);

inline Quaternion q_mul(const Quaternion& p, const Quaternion& q) { return p * q; }
inline Quaternion q_conj(const Quaternion& q) { return q.conj(); }
inline Rational q_norm(const Quaternion& q) { return q.norm(); }
inline Rational q_trace(const Quaternion& q) { return q.trace(); }
inline Quaternion q_inv(const Quaternion& q) { return q.inverse(); }

/// Lie commutator pq - qp.
Quaternion commutator(const Quaternion& p, const Quaternion& q);

/// Checks q^2 = t(q) q - N(q).
bool quadratic_identity_check(const Quaternion& q);

/// t(p conj(q)), the polar form of the norm.
Rational polar_form(const Quaternion& p, const Quaternion& q);

}  // namespace qnil
