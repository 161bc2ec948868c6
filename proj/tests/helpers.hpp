#pragma once

#include "qnil/classify.hpp"
#include "qnil/conjugacy.hpp"
#include "qnil/decompose.hpp"
#include "qnil/generate.hpp"
#include "qnil/qmatrix.hpp"
#include "qnil/spectral.hpp"

#include <doctest.h>

namespace test {

using namespace qnil;

inline const AlgebraParams H{};

inline Quaternion q(Rational w, Rational x = 0, Rational y = 0, Rational z = 0) { return Quaternion(H, w, x, y, z); }
inline const Quaternion ZERO = q(0);
inline const Quaternion ONE = q(1);
inline const Quaternion I = q(0, 1);
inline const Quaternion J = q(0, 0, 1);
inline const Quaternion K = q(0, 0, 0, 1);

inline QMatrix mat(const std::vector<std::vector<Quaternion>>& rows) { return QMatrix::from_rows(rows); }
inline QVector vec(const std::vector<Quaternion>& v) { return QVector(v.front().algebra(), v); }

// Algebras used by the cross-algebra property tests.
inline std::vector<AlgebraParams> test_algebras() {
    return {AlgebraParams(), AlgebraParams::create(-1, -3), AlgebraParams::create(-2, -5), AlgebraParams::create(3, -1),
            AlgebraParams::create(Rational(-1, 2), Rational(7, 3))};
}

}  // namespace test
