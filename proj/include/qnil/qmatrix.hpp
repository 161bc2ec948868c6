#pragma once

#include "qnil/quaternion.hpp"
#include "qnil/rational_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qnil {

/// Column vector of quaternions. Scalars act on the right.
class QVector {
public:
    QVector() = default;
    QVector(AlgebraParams alg, std::size_t n) : alg_(std::move(alg)), v_(n, Quaternion(alg_)) {}
    QVector(AlgebraParams alg, std::vector<Quaternion> entries);

    /// Standard basis vector e_index.
    static QVector unit(const AlgebraParams& alg, std::size_t n, std::size_t index);

    const AlgebraParams& algebra() const { return alg_; }
    std::size_t size() const { return v_.size(); }
    Quaternion& operator[](std::size_t i) { return v_[i]; }
    const Quaternion& operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Quaternion>& entries() const { return v_; }

    bool is_zero() const;

    /// X q
    QVector scale_right(const Quaternion& q) const;

    friend QVector operator+(const QVector& x, const QVector& y);
    friend QVector operator-(const QVector& x, const QVector& y);
    friend bool operator==(const QVector& x, const QVector& y) = default;

private:
    AlgebraParams alg_;
    std::vector<Quaternion> v_;
};

/// Dense rows x cols matrix over a quaternion algebra, acting on columns from the left.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(AlgebraParams alg, std::size_t rows, std::size_t cols);

    static QMatrix zero(const AlgebraParams& alg, std::size_t n) { return QMatrix(alg, n, n); }
    static QMatrix identity(const AlgebraParams& alg, std::size_t n);
    static QMatrix diag(const std::vector<Quaternion>& d);
    /// Scalar matrix q I; q need not be central.
    static QMatrix scalar(const Quaternion& q, std::size_t n);
    static QMatrix from_rows(const std::vector<std::vector<Quaternion>>& rows);
    static QMatrix from_rational(const AlgebraParams& alg, const RatMatrix& m);
    /// Matrix whose columns are the given vectors.
    static QMatrix from_columns(const std::vector<QVector>& cols);

    const AlgebraParams& algebra() const { return alg_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVector column(std::size_t c) const;
    void set_column(std::size_t c, const QVector& v);
    /// Rows [r0, r0+nr) x cols [c0, c0+nc).
    QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const QMatrix& b);

    bool is_zero() const;
    bool is_diagonal() const;
    bool has_zero_diagonal() const;
    /// All entries central (pure parts vanish).
    bool is_rational() const;
    std::optional<RatMatrix> to_rational() const;

    /// M q (every entry multiplied on the right)
    QMatrix scale_right(const Quaternion& q) const;
    /// q M
    QMatrix scale_left(const Quaternion& q) const;

    friend QMatrix operator+(const QMatrix& x, const QMatrix& y);
    friend QMatrix operator-(const QMatrix& x, const QMatrix& y);
    friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
    friend QVector operator*(const QMatrix& m, const QVector& v);
    QMatrix operator-() const;
    friend bool operator==(const QMatrix& x, const QMatrix& y);

    QMatrix pow(unsigned e) const;

    std::string to_string() const;

private:
    AlgebraParams alg_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> data_;
};

/// Basis change certificate: P invertible with Pinv = P^-1, verified on construction.
struct SimilarityWitness {
    QMatrix P;
    QMatrix Pinv;

    static SimilarityWitness identity(const AlgebraParams& alg, std::size_t n);
    /// Witness whose P^-1 has the given columns as a new basis; throws PreconditionError if singular.
    static SimilarityWitness from_basis(const std::vector<QVector>& basis);
    /// Checks P Pinv = Pinv P = I and throws VerificationFailure otherwise.
    static SimilarityWitness checked(QMatrix P, QMatrix Pinv);

    /// this applied after `first`: P = this.P * first.P
    SimilarityWitness after(const SimilarityWitness& first) const;
    SimilarityWitness inverse() const { return {Pinv, P}; }
    bool verify() const;
};

QMatrix m_add(const QMatrix& x, const QMatrix& y);
QMatrix m_mul(const QMatrix& x, const QMatrix& y);
QVector m_apply(const QMatrix& m, const QVector& v);
QMatrix m_scale_right(const QMatrix& m, const Quaternion& q);

struct RowReduction {
    QMatrix echelon;
    QMatrix transform;  // transform * M = echelon
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by left row operations; pivots normalized to 1.
RowReduction row_reduce(const QMatrix& m);
std::size_t rank(const QMatrix& m);

/// Right kernel {X : M X = 0}; one vector per free column.
std::vector<QVector> kernel_basis(const QMatrix& m);
/// Particular X with M X = B, free variables zero; nullopt when inconsistent.
std::optional<QVector> solve_right(const QMatrix& m, const QVector& rhs);
/// Right-linear independence of the vectors.
bool independent(const std::vector<QVector>& vs);

std::optional<QMatrix> invert(const QMatrix& m);

/// P M P^-1
QMatrix conjugate_by(const QMatrix& m, const SimilarityWitness& w);

bool is_nilpotent(const QMatrix& m);

/// t(sum of diagonal entries)
Rational reduced_trace(const QMatrix& m);

/// (strictly upper part, strictly lower part) of a zero-diagonal matrix.
std::pair<QMatrix, QMatrix> strict_split(const QMatrix& m);

/// (c, r) with A = c r^T iff rank(A) = 1; first nonzero entry of c is 1.
std::optional<std::pair<QVector, QVector>> rank1_factor(const QMatrix& a);

/// c r^T
QMatrix outer(const QVector& c, const QVector& r);
/// sum_j r_j c_j
Quaternion dot(const QVector& r, const QVector& c);

}  // namespace qnil
