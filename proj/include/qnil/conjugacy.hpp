#pragma once

#include "qnil/quaternion.hpp"
#include "qnil/rational_matrix.hpp"
#include "qnil/search.hpp"

#include <optional>
#include <string>
#include <utility>

namespace qnil {

/// Conjugacy class {g q g^-1}. Noncentral classes are determined by (trace, norm);
/// central classes are singletons.
struct ConjClass {
    Rational trace;
    Rational norm;
    bool central = false;
    Quaternion representative;

    static ConjClass of(const Quaternion& q);

    bool is_zero() const { return central && representative.is_zero(); }
    bool contains(const Quaternion& q) const;
    std::string to_string() const;

    friend bool operator==(const ConjClass& x, const ConjClass& y);
};

/// 4x4 rational matrices of g -> p g and g -> g q in the basis (1, i, j, k).
RatMatrix left_mul_matrix(const Quaternion& p);
RatMatrix right_mul_matrix(const Quaternion& q);

Quaternion quaternion_from_coords(const AlgebraParams& alg, std::span<const Rational> coords);

bool are_conjugate(const Quaternion& p, const Quaternion& q);

/// Nonzero g with g q g^-1 = p. Throws ObstructionError when p, q are not conjugate.
Quaternion conjugator(const Quaternion& p, const Quaternion& q);

/// Particular solution c of p c - c q = d, or nullopt.
std::optional<Quaternion> sylvester_solve(const Quaternion& p, const Quaternion& q, const Quaternion& d);

/// r with (p + r) conjugate to (q + r). Requires t(p) = t(q).
Quaternion translate_conjugate(const Quaternion& p, const Quaternion& q);

/// (u, v) with u v - v u = p for a pure quaternion p.
std::pair<Quaternion, Quaternion> pure_as_commutator(const Quaternion& p);

/// True iff some pure s in the algebra satisfies s^2 = e.
bool has_pure_sqrt(const AlgebraParams& alg, const Rational& e);

/// Pure s with s^2 = e, or nullopt when none exists. Throws BudgetExhausted when one
/// exists but the bounded search does not find it.
std::optional<Quaternion> sqrt_pure(const AlgebraParams& alg, const Rational& e, const SearchConfig& cfg = {});

/// Element of trace t and norm n, or nullopt when the algebra has none.
std::optional<Quaternion> class_representative(const AlgebraParams& alg, const Rational& t, const Rational& n,
                                               const SearchConfig& cfg = {});

}  // namespace qnil
