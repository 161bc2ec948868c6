#include "qnil/spectral.hpp"

#include "qnil/errors.hpp"

namespace qnil {

namespace {

// Rational matrix of a Q-linear map on quaternion column vectors of length n,
// coordinates ordered (entry, basis element).
template <typename Map>
RatMatrix rational_matrix_of(const AlgebraParams& alg, std::size_t n_in, std::size_t n_out, Map&& map) {
    RatMatrix sys(4 * n_out, 4 * n_in);
    for (std::size_t j = 0; j < n_in; ++j) {
        for (int u = 0; u < 4; ++u) {
            QVector x(alg, n_in);
            x[j] = Quaternion::basis(alg, u);
            QVector img = map(x);
            for (std::size_t r = 0; r < n_out; ++r) {
                for (int t = 0; t < 4; ++t) sys(4 * r + t, 4 * j + u) = img[r].coord(t);
            }
        }
    }
    return sys;
}

QVector vector_from_coords(const AlgebraParams& alg, const std::vector<Rational>& c) {
    QVector v(alg, c.size() / 4);
    for (std::size_t r = 0; r < v.size(); ++r) v[r] = Quaternion(alg, c[4 * r], c[4 * r + 1], c[4 * r + 2], c[4 * r + 3]);
    return v;
}

std::vector<Rational> coords_of(const QVector& v) {
    std::vector<Rational> c;
    c.reserve(4 * v.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (int t = 0; t < 4; ++t) c.push_back(v[r].coord(t));
    }
    return c;
}

std::optional<Rational> rational_scalar_value(const QMatrix& m) {
    if (!m.is_diagonal() || !m(0, 0).is_central()) return std::nullopt;
    for (std::size_t i = 1; i < m.rows(); ++i) {
        if (!(m(i, i) == m(0, 0))) return std::nullopt;
    }
    return m(0, 0).w();
}

}  // namespace

bool DiagonalizationCertificate::verify(const QMatrix& m) const {
    if (!witness.verify() || witness.P.rows() != m.rows()) return false;
    return conjugate_by(m, witness) == QMatrix::scalar(eigenvalue, m.rows());
}

EigenSolution eigenvectors_for(const QMatrix& m, const Quaternion& q) {
    if (!m.is_square()) throw DimensionError("eigenvectors_for: matrix is not square");
    const AlgebraParams& alg = m.algebra();
    RatMatrix sys = rational_matrix_of(alg, m.rows(), m.rows(), [&](const QVector& x) { return m * x - x.scale_right(q); });
    EigenSolution out{q, {}};
    for (auto& k : kernel(sys)) out.basis.push_back(vector_from_coords(alg, k));
    return out;
}

QVector triangular_eigenvector(const QMatrix& s, const QVector& x0, const Quaternion& t) {
    const AlgebraParams& alg = t.algebra();
    std::size_t n1 = x0.size();
    QVector out(alg, n1 + 1);
    if (n1 == 0) {
        out[0] = Quaternion::scalar(alg, 1);
        return out;
    }
    if (s.rows() != n1 || s.cols() != n1) throw DimensionError("triangular_eigenvector: shape mismatch");
    auto sol = eigenvectors_for(s, t);
    if (!sol.basis.empty()) {
        for (std::size_t r = 0; r < n1; ++r) out[r] = sol.basis.front()[r];
        return out;
    }
    // t is not an eigenvalue of S, so X -> S X - X t is bijective: solve S X' - X' t = -x0.
    RatMatrix sys = rational_matrix_of(alg, n1, n1, [&](const QVector& x) { return s * x - x.scale_right(t); });
    auto rhs = coords_of(QVector(alg, n1) - x0);
    auto x = solve(sys, rhs);
    if (!x) throw VerificationFailure("triangular_eigenvector: Sylvester system unexpectedly inconsistent");
    QVector xp = vector_from_coords(alg, *x);
    for (std::size_t r = 0; r < n1; ++r) out[r] = xp[r];
    out[n1] = Quaternion::scalar(alg, 1);
    return out;
}

std::optional<QuadraticRelation> quadratic_relation(const QMatrix& m) {
    if (!m.is_square()) throw DimensionError("quadratic_relation: matrix is not square");
    std::size_t n = m.rows();
    QMatrix sq = m * m;
    // t vec(M) - N vec(I) = vec(M^2)
    RatMatrix sys(4 * n * n, 2);
    std::vector<Rational> rhs(4 * n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            for (int t = 0; t < 4; ++t) {
                std::size_t row = 4 * (r * n + c) + static_cast<std::size_t>(t);
                sys(row, 0) = m(r, c).coord(t);
                sys(row, 1) = (r == c && t == 0) ? Rational(-1) : Rational(0);
                rhs[row] = sq(r, c).coord(t);
            }
        }
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    QuadraticRelation rel{(*sol)[0], (*sol)[1]};
    QMatrix check = sq - m.scale_right(Quaternion::scalar(m.algebra(), rel.t)) +
                    QMatrix::scalar(Quaternion::scalar(m.algebra(), rel.N), n);
    if (!check.is_zero()) throw VerificationFailure("quadratic_relation: relation does not verify");
    return rel;
}

std::optional<SimilarityWitness> diagonalize_2x2_jordanlike(const Quaternion& a, const Quaternion& b) {
    require_same_algebra(a, b);
    auto c = sylvester_solve(a, a, b);  // a c - c a = b
    if (!c) return std::nullopt;
    const AlgebraParams& alg = a.algebra();
    Quaternion one = Quaternion::scalar(alg, 1);
    Quaternion zero(alg);
    auto w = SimilarityWitness::checked(QMatrix::from_rows({{one, *c}, {zero, one}}),
                                        QMatrix::from_rows({{one, -*c}, {zero, one}}));
    QMatrix m = QMatrix::from_rows({{a, b}, {zero, a}});
    if (!(conjugate_by(m, w) == QMatrix::diag({a, a}))) throw VerificationFailure("diagonalize_2x2_jordanlike: does not verify");
    return w;
}

std::optional<DiagonalizationCertificate> unispectral_diagonalizable(const QMatrix& m, const SearchConfig& cfg) {
    if (!m.is_square() || m.rows() == 0) throw DimensionError("unispectral_diagonalizable: need a nonempty square matrix");
    const AlgebraParams& alg = m.algebra();
    std::size_t n = m.rows();
    if (auto lambda = rational_scalar_value(m)) {
        return DiagonalizationCertificate{Quaternion::scalar(alg, *lambda), SimilarityWitness::identity(alg, n)};
    }
    // Similar to q I forces q^2 - t(q) q + N(q) = 0 on M.
    auto rel = quadratic_relation(m);
    if (!rel) return std::nullopt;
    // Split quadratic: q would be central and M scalar.
    if ((rel->t * rel->t - Rational(4) * rel->N).is_square()) return std::nullopt;
    // Prefer an eigenvalue already visible on the diagonal.
    std::optional<Quaternion> q;
    for (std::size_t i = 0; i < n && !q; ++i) {
        if (!m(i, i).is_central() && m(i, i).trace() == rel->t && m(i, i).norm() == rel->N) q = m(i, i);
    }
    if (!q) q = class_representative(alg, rel->t, rel->N, cfg);
    if (!q) return std::nullopt;
    // M generates a quadratic field K splitting the algebra; Q^n is then a direct sum of n
    // copies of the simple K (x) Q^op-module, so the q-eigenvectors span Q^n.
    auto eig = eigenvectors_for(m, *q);
    std::vector<QVector> chosen;
    std::size_t current_rank = 0;
    for (const auto& x : eig.basis) {
        chosen.push_back(x);
        std::size_t r = rank(QMatrix::from_columns(chosen));
        if (r == current_rank) {
            chosen.pop_back();
            continue;
        }
        current_rank = r;
        if (current_rank == n) break;
    }
    if (current_rank != n) {
        throw VerificationFailure("unispectral_diagonalizable: quadratic relation and representative found but eigenvectors do not span");
    }
    DiagonalizationCertificate cert{*q, SimilarityWitness::from_basis(chosen)};
    if (!cert.verify(m)) throw VerificationFailure("unispectral_diagonalizable: certificate does not verify");
    return cert;
}

}  // namespace qnil
