#pragma once

#include "qnil/conjugacy.hpp"
#include "qnil/qmatrix.hpp"
#include "qnil/search.hpp"

#include <optional>
#include <vector>

namespace qnil {

/// Q-basis of {X : M X = X q}. This is a Q-subspace, and a quaternionic
/// subspace only when q is central.
struct EigenSolution {
    Quaternion eigenvalue;
    std::vector<QVector> basis;
};

/// M^2 - t M + N I = 0
struct QuadraticRelation {
    Rational t;
    Rational N;
};

/// P M P^-1 = q I
struct DiagonalizationCertificate {
    Quaternion eigenvalue;
    SimilarityWitness witness;

    bool verify(const QMatrix& m) const;
};

EigenSolution eigenvectors_for(const QMatrix& m, const Quaternion& q);

/// Nonzero Y with M Y = Y t for M = [[S, x0], [0, t]].
QVector triangular_eigenvector(const QMatrix& s, const QVector& x0, const Quaternion& t);

std::optional<QuadraticRelation> quadratic_relation(const QMatrix& m);

/// T = [[1, c], [0, 1]] with T [[a, b], [0, a]] T^-1 = Diag(a, a), when b is a commutator [a, c].
std::optional<SimilarityWitness> diagonalize_2x2_jordanlike(const Quaternion& a, const Quaternion& b);

/// Certificate that M is similar to Diag(q, ..., q), or nullopt when it is not.
/// Throws BudgetExhausted if a class representative exists but is not found.
std::optional<DiagonalizationCertificate> unispectral_diagonalizable(const QMatrix& m, const SearchConfig& cfg = {});

}  // namespace qnil
