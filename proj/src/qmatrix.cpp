#include "qnil/qmatrix.hpp"

#include "qnil/errors.hpp"

#include <sstream>

namespace qnil {

namespace {

void require_same_shape(const QMatrix& x, const QMatrix& y, const char* what) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionError(std::string(what) + ": shape mismatch");
    if (!(x.algebra() == y.algebra())) throw ParameterError(std::string(what) + ": algebra mismatch");
}

void require_square(const QMatrix& m, const char* what) {
    if (!m.is_square()) throw DimensionError(std::string(what) + ": matrix is not square");
}

}  // namespace

// ---- QVector ----

QVector::QVector(AlgebraParams alg, std::vector<Quaternion> entries) : alg_(std::move(alg)), v_(std::move(entries)) {
    for (const auto& q : v_) {
        if (!(q.algebra() == alg_)) throw ParameterError("vector entries from different algebras");
    }
}

QVector QVector::unit(const AlgebraParams& alg, std::size_t n, std::size_t index) {
    QVector v(alg, n);
    v[index] = Quaternion::scalar(alg, 1);
    return v;
}

bool QVector::is_zero() const {
    for (const auto& q : v_) {
        if (!q.is_zero()) return false;
    }
    return true;
}

QVector QVector::scale_right(const Quaternion& q) const {
    QVector out = *this;
    for (auto& e : out.v_) e = e * q;
    return out;
}

QVector operator+(const QVector& x, const QVector& y) {
    if (x.size() != y.size()) throw DimensionError("vector sum: length mismatch");
    QVector out = x;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
    return out;
}

QVector operator-(const QVector& x, const QVector& y) {
    if (x.size() != y.size()) throw DimensionError("vector difference: length mismatch");
    QVector out = x;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] -= y[i];
    return out;
}

// ---- QMatrix ----

QMatrix::QMatrix(AlgebraParams alg, std::size_t rows, std::size_t cols)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), data_(rows * cols, Quaternion(alg_)) {}

QMatrix QMatrix::identity(const AlgebraParams& alg, std::size_t n) {
    QMatrix m(alg, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion::scalar(alg, 1);
    return m;
}

QMatrix QMatrix::diag(const std::vector<Quaternion>& d) {
    if (d.empty()) throw DimensionError("diag of empty list");
    QMatrix m(d.front().algebra(), d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

QMatrix QMatrix::scalar(const Quaternion& q, std::size_t n) {
    QMatrix m(q.algebra(), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = q;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Quaternion>>& rows) {
    if (rows.empty() || rows.front().empty()) throw DimensionError("from_rows: empty matrix");
    QMatrix m(rows.front().front().algebra(), rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionError("from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (!(rows[r][c].algebra() == m.alg_)) throw ParameterError("from_rows: algebra mismatch");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

QMatrix QMatrix::from_rational(const AlgebraParams& alg, const RatMatrix& rm) {
    QMatrix m(alg, rm.rows(), rm.cols());
    for (std::size_t r = 0; r < rm.rows(); ++r) {
        for (std::size_t c = 0; c < rm.cols(); ++c) m(r, c) = Quaternion::scalar(alg, rm(r, c));
    }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
    if (cols.empty()) throw DimensionError("from_columns: no columns");
    QMatrix m(cols.front().algebra(), cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

QVector QMatrix::column(std::size_t c) const {
    QVector v(alg_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void QMatrix::set_column(std::size_t c, const QVector& v) {
    if (v.size() != rows_) throw DimensionError("set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    QMatrix b(alg_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    }
    return b;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("set_block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r) {
        for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }
}

bool QMatrix::is_zero() const {
    for (const auto& q : data_) {
        if (!q.is_zero()) return false;
    }
    return true;
}

bool QMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && !(*this)(r, c).is_zero()) return false;
        }
    }
    return true;
}

bool QMatrix::has_zero_diagonal() const {
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) {
        if (!(*this)(i, i).is_zero()) return false;
    }
    return true;
}

bool QMatrix::is_rational() const {
    for (const auto& q : data_) {
        if (!q.is_central()) return false;
    }
    return true;
}

std::optional<RatMatrix> QMatrix::to_rational() const {
    if (!is_rational()) return std::nullopt;
    RatMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).w();
    }
    return m;
}

QMatrix QMatrix::scale_right(const Quaternion& q) const {
    QMatrix out = *this;
    for (auto& e : out.data_) e = e * q;
    return out;
}

QMatrix QMatrix::scale_left(const Quaternion& q) const {
    QMatrix out = *this;
    for (auto& e : out.data_) e = q * e;
    return out;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
    require_same_shape(x, y, "matrix sum");
    QMatrix out = x;
    for (std::size_t t = 0; t < out.data_.size(); ++t) out.data_[t] += y.data_[t];
    return out;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) {
    require_same_shape(x, y, "matrix difference");
    QMatrix out = x;
    for (std::size_t t = 0; t < out.data_.size(); ++t) out.data_[t] -= y.data_[t];
    return out;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    if (x.cols_ != y.rows_) throw DimensionError("matrix product: inner dimensions differ");
    if (!(x.alg_ == y.alg_)) throw ParameterError("matrix product: algebra mismatch");
    QMatrix out(x.alg_, x.rows_, y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r) {
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const Quaternion& v = x(r, k);
            if (v.is_zero()) continue;
            for (std::size_t c = 0; c < y.cols_; ++c) {
                const Quaternion& w = y(k, c);
                if (!w.is_zero()) out(r, c) += v * w;
            }
        }
    }
    return out;
}

QVector operator*(const QMatrix& m, const QVector& v) {
    if (m.cols_ != v.size()) throw DimensionError("matrix-vector product: length mismatch");
    QVector out(m.alg_, m.rows_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

QMatrix QMatrix::operator-() const {
    QMatrix out = *this;
    for (auto& e : out.data_) e = -e;
    return out;
}

bool operator==(const QMatrix& x, const QMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.alg_ == y.alg_ && x.data_ == y.data_;
}

QMatrix QMatrix::pow(unsigned e) const {
    require_square(*this, "pow");
    QMatrix result = identity(alg_, rows_);
    QMatrix base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---- SimilarityWitness ----

SimilarityWitness SimilarityWitness::identity(const AlgebraParams& alg, std::size_t n) {
    return {QMatrix::identity(alg, n), QMatrix::identity(alg, n)};
}

SimilarityWitness SimilarityWitness::from_basis(const std::vector<QVector>& basis) {
    QMatrix s = QMatrix::from_columns(basis);
    auto inv = invert(s);
    if (!inv) throw PreconditionError("from_basis: vectors are not a basis");
    return checked(std::move(*inv), std::move(s));
}

SimilarityWitness SimilarityWitness::checked(QMatrix P, QMatrix Pinv) {
    SimilarityWitness w{std::move(P), std::move(Pinv)};
    if (!w.verify()) throw VerificationFailure("similarity witness: P * Pinv != I");
    return w;
}

SimilarityWitness SimilarityWitness::after(const SimilarityWitness& first) const {
    return {P * first.P, first.Pinv * Pinv};
}

bool SimilarityWitness::verify() const {
    if (!P.is_square() || P.rows() != Pinv.rows() || !Pinv.is_square()) return false;
    QMatrix id = QMatrix::identity(P.algebra(), P.rows());
    return P * Pinv == id && Pinv * P == id;
}

// ---- free functions ----

QMatrix m_add(const QMatrix& x, const QMatrix& y) { return x + y; }
QMatrix m_mul(const QMatrix& x, const QMatrix& y) { return x * y; }
QVector m_apply(const QMatrix& m, const QVector& v) { return m * v; }
QMatrix m_scale_right(const QMatrix& m, const Quaternion& q) { return m.scale_right(q); }

RowReduction row_reduce(const QMatrix& input) {
    QMatrix m = input;
    QMatrix t = QMatrix::identity(input.algebra(), input.rows());
    RowReduction out;
    std::size_t row = 0;
    auto swap_rows = [](QMatrix& x, std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < x.cols(); ++c) std::swap(x(r1, c), x(r2, c));
    };
    // row_r <- f * row_r
    auto scale_row = [](QMatrix& x, std::size_t r, const Quaternion& f) {
        for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) = f * x(r, c);
    };
    // row_r <- row_r - f * row_s
    auto eliminate = [](QMatrix& x, std::size_t r, std::size_t s, const Quaternion& f) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            if (!x(s, c).is_zero()) x(r, c) -= f * x(s, c);
        }
    };
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            swap_rows(m, piv, row);
            swap_rows(t, piv, row);
        }
        Quaternion inv = m(row, col).inverse();
        scale_row(m, row, inv);
        scale_row(t, row, inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Quaternion f = m(r, col);
            eliminate(m, r, row, f);
            eliminate(t, r, row, f);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = out.pivots.size();
    out.echelon = std::move(m);
    out.transform = std::move(t);
    return out;
}

std::size_t rank(const QMatrix& m) { return row_reduce(m).rank; }

std::vector<QVector> kernel_basis(const QMatrix& m) {
    RowReduction rr = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.algebra(), m.cols());
        v[f] = Quaternion::scalar(m.algebra(), 1);
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.echelon(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve_right(const QMatrix& m, const QVector& rhs) {
    if (rhs.size() != m.rows()) throw DimensionError("solve_right: rhs length mismatch");
    QMatrix aug(m.algebra(), m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    aug.set_column(m.cols(), rhs);
    RowReduction rr = row_reduce(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    QVector x(m.algebra(), m.cols());
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = rr.echelon(k, m.cols());
    return x;
}

bool independent(const std::vector<QVector>& vs) {
    if (vs.empty()) return true;
    return rank(QMatrix::from_columns(vs)) == vs.size();
}

std::optional<QMatrix> invert(const QMatrix& m) {
    require_square(m, "invert");
    RowReduction rr = row_reduce(m);
    if (rr.rank != m.rows()) return std::nullopt;
    return rr.transform;
}

QMatrix conjugate_by(const QMatrix& m, const SimilarityWitness& w) {
    if (w.P.cols() != m.rows() || m.cols() != w.Pinv.rows()) throw DimensionError("conjugate_by: shape mismatch");
    return w.P * m * w.Pinv;
}

bool is_nilpotent(const QMatrix& m) {
    require_square(m, "is_nilpotent");
    return m.pow(static_cast<unsigned>(m.rows())).is_zero();
}

Rational reduced_trace(const QMatrix& m) {
    require_square(m, "reduced_trace");
    Rational t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i).trace();
    return t;
}

std::pair<QMatrix, QMatrix> strict_split(const QMatrix& m) {
    require_square(m, "strict_split");
    if (!m.has_zero_diagonal()) throw PreconditionError("strict_split: diagonal is not zero");
    QMatrix upper(m.algebra(), m.rows(), m.cols());
    QMatrix lower(m.algebra(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > r) upper(r, c) = m(r, c);
            if (c < r) lower(r, c) = m(r, c);
        }
    }
    return {upper, lower};
}

QMatrix outer(const QVector& c, const QVector& r) {
    QMatrix m(c.algebra(), c.size(), r.size());
    for (std::size_t s = 0; s < c.size(); ++s) {
        for (std::size_t t = 0; t < r.size(); ++t) m(s, t) = c[s] * r[t];
    }
    return m;
}

Quaternion dot(const QVector& r, const QVector& c) {
    if (r.size() != c.size()) throw DimensionError("dot: length mismatch");
    Quaternion acc(r.algebra());
    for (std::size_t t = 0; t < r.size(); ++t) acc += r[t] * c[t];
    return acc;
}

std::optional<std::pair<QVector, QVector>> rank1_factor(const QMatrix& a) {
    if (rank(a) != 1) return std::nullopt;
    // pivot (s0, t0): first nonzero entry in row-major order
    std::size_t s0 = 0, t0 = 0;
    bool found = false;
    for (std::size_t s = 0; s < a.rows() && !found; ++s) {
        for (std::size_t t = 0; t < a.cols() && !found; ++t) {
            if (!a(s, t).is_zero()) {
                s0 = s;
                t0 = t;
                found = true;
            }
        }
    }
    QVector r(a.algebra(), a.cols());
    for (std::size_t t = 0; t < a.cols(); ++t) r[t] = a(s0, t);
    Quaternion inv = a(s0, t0).inverse();
    QVector c(a.algebra(), a.rows());
    for (std::size_t s = 0; s < a.rows(); ++s) c[s] = a(s, t0) * inv;
    if (!(outer(c, r) == a)) throw VerificationFailure("rank1_factor: factorization does not verify");
    return std::make_pair(c, r);
}

}  // namespace qnil
