#pragma once

#include "qnil/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qnil {

/// Dense matrix over Q. Used for the Q-linear systems that quaternionic
/// problems reduce to, and as the field-case input of the diagonal-zero reduction.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_scalar() const;
    Rational trace() const;

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
    friend RatMatrix operator+(const RatMatrix& x, const RatMatrix& y);
    friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y);
    friend bool operator==(const RatMatrix& x, const RatMatrix& y) = default;

    std::vector<Rational> column(std::size_t c) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    RatMatrix reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Gauss-Jordan elimination; pivot = first nonzero entry in column order.
RowEchelon rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Canonical kernel basis: one vector per free column, that column set to 1.
std::vector<std::vector<Rational>> kernel(const RatMatrix& m);

/// Particular solution of m x = rhs with free variables set to zero.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& rhs);

std::optional<RatMatrix> inverse(const RatMatrix& m);

}  // namespace qnil
