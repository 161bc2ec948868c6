#pragma once

#include "qnil/rational.hpp"

#include <array>
#include <optional>
#include <utility>

namespace qnil::local {

/// (core, root) with n = core * root^2 and core squarefree, same sign as n. n != 0.
std::pair<BigInt, BigInt> squarefree_part(const BigInt& n);

/// t with t^2 = a mod m for squarefree m >= 1, |t| <= m/2; nullopt when a is not a square mod m.
std::optional<BigInt> sqrt_mod_squarefree(const BigInt& a, const BigInt& m);

/// Nontrivial integer (X, U, V) with X^2 = A U^2 + B V^2 for squarefree nonzero A, B,
/// by Lagrange's descent; nullopt when only the trivial solution exists.
std::optional<std::array<BigInt, 3>> solve_lagrange(const BigInt& A, const BigInt& B);

/// Rationals (x, y) with a x^2 + b y^2 = c, for c != 0 and -ab not a rational square.
std::optional<std::pair<Rational, Rational>> represent_binary(const Rational& a, const Rational& b, const Rational& c);

}  // namespace qnil::local
