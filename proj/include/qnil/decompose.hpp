#pragma once

#include "qnil/classify.hpp"
#include "qnil/qmatrix.hpp"
#include "qnil/rational_matrix.hpp"
#include "qnil/search.hpp"

#include <array>

namespace qnil {

/// Rational similarity P A Pinv.
struct RationalWitness {
    RatMatrix P;
    RatMatrix Pinv;
};

/// P A P^-1 has zero diagonal. Requires trace 0 and A not a nonzero scalar.
RationalWitness field_diag_zero(const RatMatrix& a);

/// [[a, delta], [1, b]] written as a sum of two square-zero matrices.
struct Completion2x2Certificate {
    Quaternion a, b, delta;
    Quaternion q;  // translate: a + q conjugate to -b + q
    Quaternion g;  // g (-b + q) g^-1 = a + q
    Quaternion s;  // a + q
    std::array<QMatrix, 2> summands;

    QMatrix completed() const;
    bool verify() const;
};

/// Requires t(a) + t(b) = 0.
Completion2x2Certificate completion_2x2(const Quaternion& a, const Quaternion& b);

/// Zero-diagonal similarity for a 2x2 matrix given a splitting K = N1 + N2 with N1^2 = N2^2 = 0.
SimilarityWitness diag_zero_from_pair(const QMatrix& k, const QMatrix& n1, const QMatrix& n2);

/// P M P^-1 has zero diagonal. Throws PreconditionError unless M is a sum of two nilpotents.
SimilarityWitness diag_zero_form(const QMatrix& m, const SearchConfig& cfg = {});

struct TwoNilpotentDecomposition {
    QMatrix N1, N2;
    SimilarityWitness witness;
    QMatrix diag_zero;  // P M P^-1
};

TwoNilpotentDecomposition decompose_two_nilpotents(const QMatrix& m, const SearchConfig& cfg = {});

/// N1 + N2 = M with both nilpotent. Throws DimensionError on shape mismatch.
bool verify_decomposition(const QMatrix& m, const QMatrix& n1, const QMatrix& n2);

}  // namespace qnil
