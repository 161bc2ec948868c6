#pragma once

#include "qnil/rational.hpp"

#include <memory>
#include <vector>

namespace qnil {

/// A place of Q: prime == 0 stands for the real place.
struct Place {
    BigInt prime;

    bool is_real() const { return prime == 0; }
    friend bool operator==(const Place& x, const Place& y) { return x.prime == y.prime; }
};

namespace local {

/// Prime factorization of |n| (n != 0), ascending, with multiplicity.
std::vector<BigInt> factor(const BigInt& n);

/// Hilbert symbol (a,b)_v for nonzero rationals; returns +1 or -1.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// The real place, 2, and every odd prime dividing a numerator or denominator of a or b.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

/// Places where (a,b)_v = -1. Always an even number of them.
std::vector<Place> ramified_places(const Rational& a, const Rational& b);

/// True iff the nonzero rational e is a square in the completion Q_v.
bool is_local_square(const Rational& e, const Place& v);

}  // namespace local

/// True iff (a,b/Q) is a division algebra. Throws ParameterError on zero input.
bool is_division(const Rational& a, const Rational& b);

/// Parameters (a,b) of the quaternion algebra with i^2 = a, j^2 = b, k = ij = -ji.
/// Only division algebras can be constructed. Cheap to copy; shared and immutable.
class AlgebraParams {
public:
    /// The Hamilton quaternions over Q, (-1,-1).
    AlgebraParams();

    /// Throws ParameterError for zero parameters and NonDivisionAlgebra when split.
    static AlgebraParams create(const Rational& a, const Rational& b);

    const Rational& a() const { return data_->a; }
    const Rational& b() const { return data_->b; }
    /// k^2 = -ab
    const Rational& k_square() const { return data_->k2; }
    const std::vector<Place>& ramified() const { return data_->ramified; }

    friend bool operator==(const AlgebraParams& x, const AlgebraParams& y) {
        return x.data_ == y.data_ || (x.data_->a == y.data_->a && x.data_->b == y.data_->b);
    }

private:
    struct Data {
        Rational a, b, k2;
        std::vector<Place> ramified;
    };
    explicit AlgebraParams(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

}  // namespace qnil
