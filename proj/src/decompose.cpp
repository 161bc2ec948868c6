#include "qnil/decompose.hpp"

#include "qnil/errors.hpp"
#include "qnil/generate.hpp"
#include "qnil/spectral.hpp"

namespace qnil {

namespace {

std::vector<Rational> rat_unit(std::size_t n, std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = Rational(1);
    return v;
}

RatMatrix rat_from_columns(const std::vector<std::vector<Rational>>& cols) {
    std::size_t n = cols.front().size();
    RatMatrix m(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

std::vector<Rational> rat_apply(const RatMatrix& a, const std::vector<Rational>& x) {
    std::vector<Rational> y(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) y[r] += a(r, c) * x[c];
    }
    return y;
}

bool rat_independent(const std::vector<std::vector<Rational>>& vs) {
    return rank(rat_from_columns(vs)) == vs.size();
}

RatMatrix rat_block_diag_one(const RatMatrix& b) {
    RatMatrix m(b.rows() + 1, b.cols() + 1);
    m(0, 0) = Rational(1);
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) m(r + 1, c + 1) = b(r, c);
    }
    return m;
}

RatMatrix rat_trailing(const RatMatrix& b) {
    RatMatrix m(b.rows() - 1, b.cols() - 1);
    for (std::size_t r = 1; r < b.rows(); ++r) {
        for (std::size_t c = 1; c < b.cols(); ++c) m(r - 1, c - 1) = b(r, c);
    }
    return m;
}

bool rat_zero_diagonal(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m(i, i).is_zero()) return false;
    }
    return true;
}

std::vector<QVector> extend_to_basis(std::vector<QVector> vs, std::size_t n) {
    AlgebraParams alg = vs.front().algebra();
    for (std::size_t i = 0; i < n && vs.size() < n; ++i) {
        vs.push_back(QVector::unit(alg, n, i));
        if (!independent(vs)) vs.pop_back();
    }
    if (vs.size() != n) throw VerificationFailure("extend_to_basis: vectors are dependent");
    return vs;
}

// Witness diag(1, inner) applied after `outer`.
SimilarityWitness embed_after(const SimilarityWitness& inner, const SimilarityWitness& outer) {
    const AlgebraParams& alg = outer.P.algebra();
    std::size_t n = outer.P.rows();
    QMatrix p = QMatrix::identity(alg, n);
    QMatrix pinv = QMatrix::identity(alg, n);
    p.set_block(1, 1, inner.P);
    pinv.set_block(1, 1, inner.Pinv);
    return SimilarityWitness{p, pinv}.after(outer);
}

SimilarityWitness require_zero_diagonal(const QMatrix& m, SimilarityWitness w, const char* where) {
    if (!w.verify() || !conjugate_by(m, w).has_zero_diagonal()) {
        throw VerificationFailure(std::string(where) + ": conjugate does not have zero diagonal");
    }
    return w;
}

// Unit vectors, then a fixed-seed stream of dense vectors whose coordinate height grows
// from 1 to cfg.vector_height. Returns true as soon as `visit` does.
bool for_each_candidate_vector(const AlgebraParams& alg, std::size_t n, const SearchConfig& cfg, std::size_t budget,
                               const std::function<bool(const QVector&)>& visit) {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < n && seen < budget; ++i, ++seen) {
        if (visit(QVector::unit(alg, n, i))) return true;
    }
    constexpr std::uint64_t kCandidateSeed = 0x5eed;
    constexpr std::size_t kPerHeight = 32;
    Rng rng(kCandidateSeed);
    std::int64_t h = 1;
    for (std::size_t drawn = 0; seen < budget; ++seen, ++drawn) {
        if (drawn == kPerHeight && h < cfg.vector_height) {
            ++h;
            drawn = 0;
        }
        if (visit(rng.nonzero_vector(alg, n, h))) return true;
    }
    return false;
}

SimilarityWitness decided_diag_zero(const QMatrix& m, const Decision& d, const SearchConfig& cfg);

SimilarityWitness type_ii_path(const QMatrix& m, const TypeIIData& data) {
    const AlgebraParams& alg = m.algebra();
    std::size_t n = m.rows();
    const QVector& c = data.column;
    const QVector& r = data.row;
    std::vector<QVector> basis{c};
    if (data.image_eigenvalue.is_zero()) {
        std::size_t t = 0;
        while (r[t].is_zero()) ++t;
        basis.push_back(QVector::unit(alg, n, t).scale_right(r[t].inverse()));
    }
    for (const auto& k : kernel_basis(data.A)) {
        if (basis.size() == n) break;
        basis.push_back(k);
        if (!independent(basis)) basis.pop_back();
    }
    if (basis.size() != n) throw VerificationFailure("type II basis is incomplete");
    SimilarityWitness s = SimilarityWitness::from_basis(basis);
    auto rational = conjugate_by(m, s).to_rational();
    if (!rational) throw VerificationFailure("type II basis does not give a rational matrix");
    RationalWitness f = field_diag_zero(*rational);
    SimilarityWitness fw{QMatrix::from_rational(alg, f.P), QMatrix::from_rational(alg, f.Pinv)};
    return require_zero_diagonal(m, fw.after(s), "type II path");
}

SimilarityWitness size_two_path(const QMatrix& m, const Decision& d, const SearchConfig& cfg) {
    const AlgebraParams& alg = m.algebra();
    QMatrix sq = m * m;
    std::optional<DiagonalizationCertificate> cert = d.square_certificate;
    if (!cert) cert = unispectral_diagonalizable(sq, cfg);
    if (!cert) throw VerificationFailure("size-two path: M^2 has no diagonalisation certificate");
    std::optional<SimilarityWitness> found;
    auto attempt = [&](const QVector& x) {
        if (x.is_zero()) return false;
        QVector mx = m * x;
        if (!independent({x, mx})) return false;
        found = SimilarityWitness::from_basis({x, mx});
        return true;
    };
    for (std::size_t c = 0; c < 2 && !found; ++c) attempt(cert->witness.Pinv.column(c));
    if (!found) {
        auto eig = eigenvectors_for(sq, cert->eigenvalue);
        const auto& b = eig.basis;
        for_each_tuple_by_height(b.size(), 1, cfg.vector_height, [&](std::span<const std::int64_t> coef) {
            QVector x(alg, 2);
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (coef[i] != 0) x = x + b[i].scale_right(Quaternion::scalar(alg, Rational(coef[i])));
            }
            return attempt(x);
        });
    }
    if (!found) throw BudgetExhausted("size-two path: no eigenvector x of M^2 with (x, Mx) independent");
    return require_zero_diagonal(m, *found, "size-two path");
}

SimilarityWitness cyclic_path(const QMatrix& m, const SearchConfig& cfg) {
    const AlgebraParams& alg = m.algebra();
    std::optional<QVector> x;
    for_each_candidate_vector(alg, 3, cfg, cfg.cyclic_budget, [&](const QVector& v) {
        QVector mv = m * v;
        if (independent({v, mv, m * mv})) x = v;
        return x.has_value();
    });
    if (!x) throw BudgetExhausted("no cyclic vector found within the search budget");
    QVector mx = m * *x;
    QVector m2x = m * mx;
    auto coef = solve_right(QMatrix::from_columns({*x, mx, m2x}), m * m2x);
    if (!coef) throw VerificationFailure("cyclic vector does not give a companion form");
    const Quaternion& b = (*coef)[1];
    const Quaternion& a = (*coef)[2];
    Completion2x2Certificate comp = completion_2x2(Quaternion(alg), a);
    Quaternion delta = comp.delta - b;
    SimilarityWitness s = SimilarityWitness::from_basis({*x, mx, m2x + x->scale_right(delta)});
    QMatrix conj = conjugate_by(m, s);
    QMatrix block = conj.block(1, 1, 2, 2);
    if (!(block == comp.completed())) throw VerificationFailure("cyclic path: trailing block is not the completed matrix");
    SimilarityWitness inner = diag_zero_from_pair(block, comp.summands[0], comp.summands[1]);
    return require_zero_diagonal(m, embed_after(inner, s), "cyclic path");
}

// Perturbation lists in schedule order: zero list, single-slot units, then height order.
bool for_each_perturbation(const AlgebraParams& alg, std::size_t slots, const SearchConfig& cfg,
                           const std::function<bool(const std::vector<Quaternion>&)>& visit) {
    std::size_t tried = 0;
    std::vector<Quaternion> list(slots, Quaternion(alg));
    if (visit(list)) return true;
    ++tried;
    for (std::size_t s = 0; s < slots; ++s) {
        for (int unit = 0; unit < 4; ++unit) {
            for (int sign : {1, -1}) {
                list.assign(slots, Quaternion(alg));
                list[s] = Quaternion::basis(alg, unit) * Rational(sign);
                if (visit(list)) return true;
                if (++tried >= cfg.perturbation_budget) return false;
            }
        }
    }
    bool hit = false;
    for_each_tuple_by_height(4 * slots, 1, cfg.perturbation_height, [&](std::span<const std::int64_t> coords) {
        for (std::size_t s = 0; s < slots; ++s) {
            list[s] = Quaternion(alg, Rational(coords[4 * s]), Rational(coords[4 * s + 1]), Rational(coords[4 * s + 2]),
                                 Rational(coords[4 * s + 3]));
        }
        if (visit(list)) {
            hit = true;
            return true;
        }
        return ++tried >= cfg.perturbation_budget;
    });
    return hit;
}

SimilarityWitness inductive_path(const QMatrix& m, const SearchConfig& cfg) {
    const AlgebraParams& alg = m.algebra();
    std::size_t n = m.rows();
    std::optional<SimilarityWitness> result;
    std::size_t vectors_tried = 0;
    for_each_candidate_vector(alg, n, cfg, cfg.cyclic_budget, [&](const QVector& x) {
        QVector mx = m * x;
        if (!independent({x, mx})) return false;
        SimilarityWitness s = SimilarityWitness::from_basis(extend_to_basis({x, mx}, n));
        QMatrix conj = conjugate_by(m, s);
        for_each_perturbation(alg, n - 2, cfg, [&](const std::vector<Quaternion>& qs) {
            // T = I + sum_k E_{1k} q_k, and T^-1 = I - sum_k E_{1k} q_k
            QMatrix t = QMatrix::identity(alg, n);
            QMatrix tinv = QMatrix::identity(alg, n);
            for (std::size_t k = 0; k < qs.size(); ++k) {
                t(0, k + 2) = qs[k];
                tinv(0, k + 2) = -qs[k];
            }
            QMatrix moved = tinv * conj * t;
            QMatrix block = moved.block(1, 1, n - 1, n - 1);
            Decision d = is_sum_of_two_nilpotents(block, cfg);
            if (!d.answer) return false;
            SimilarityWitness step = SimilarityWitness{tinv, t}.after(s);
            SimilarityWitness inner = decided_diag_zero(block, d, cfg);
            result = embed_after(inner, step);
            return true;
        });
        return result.has_value() || ++vectors_tried >= cfg.vector_budget;
    });
    if (!result) throw BudgetExhausted("inductive step: no perturbation found within the search budget");
    return require_zero_diagonal(m, *result, "inductive path");
}

SimilarityWitness decided_diag_zero(const QMatrix& m, const Decision& d, const SearchConfig& cfg) {
    if (!d.answer) throw PreconditionError("diag_zero_form: matrix is not a sum of two nilpotents (" + to_string(d.reason) + ")");
    const AlgebraParams& alg = m.algebra();
    std::size_t n = m.rows();
    if (m.is_zero()) return SimilarityWitness::identity(alg, n);
    if (d.classification.verdict == Verdict::TypeII) return type_ii_path(m, *d.classification.type_ii);
    if (n == 2) return size_two_path(m, d, cfg);
    if (n == 3) return cyclic_path(m, cfg);
    return inductive_path(m, cfg);
}

}  // namespace

RationalWitness field_diag_zero(const RatMatrix& a) {
    std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionError("field_diag_zero: matrix is not square");
    if (!a.trace().is_zero()) throw PreconditionError("field_diag_zero: trace is nonzero");
    if (rat_zero_diagonal(a)) return {RatMatrix::identity(n), RatMatrix::identity(n)};
    if (a.is_scalar()) throw PreconditionError("field_diag_zero: nonzero scalar matrix");
    std::optional<std::vector<Rational>> x;
    for (std::size_t i = 0; i < n && !x; ++i) {
        auto e = rat_unit(n, i);
        if (rat_independent({e, rat_apply(a, e)})) x = e;
    }
    // every unit vector is an eigenvector, so A is diagonal with two distinct entries
    for (std::size_t i = 0; i < n && !x; ++i) {
        for (std::size_t j = i + 1; j < n && !x; ++j) {
            if (a(i, i) != a(j, j)) {
                auto e = rat_unit(n, i);
                e[j] = Rational(1);
                x = e;
            }
        }
    }
    std::vector<std::vector<Rational>> basis{*x, rat_apply(a, *x)};
    for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
        basis.push_back(rat_unit(n, i));
        if (!rat_independent(basis)) basis.pop_back();
    }
    RatMatrix s = rat_from_columns(basis);
    RatMatrix sinv = *inverse(s);
    RatMatrix b = sinv * a * s;
    RationalWitness inner = field_diag_zero(rat_trailing(b));
    RationalWitness w{rat_block_diag_one(inner.P) * sinv, s * rat_block_diag_one(inner.Pinv)};
    if (!(w.P * w.Pinv == RatMatrix::identity(n)) || !rat_zero_diagonal(w.P * a * w.Pinv)) {
        throw VerificationFailure("field_diag_zero: result does not verify");
    }
    return w;
}

QMatrix Completion2x2Certificate::completed() const {
    const AlgebraParams& alg = a.algebra();
    return QMatrix::from_rows({{a, delta}, {Quaternion::scalar(alg, 1), b}});
}

bool Completion2x2Certificate::verify() const {
    for (const auto& s : summands) {
        if (!(s * s).is_zero()) return false;
    }
    return summands[0] + summands[1] == completed();
}

Completion2x2Certificate completion_2x2(const Quaternion& a, const Quaternion& b) {
    require_same_algebra(a, b);
    if (!(a + b).trace().is_zero()) throw PreconditionError("completion_2x2: t(a + b) is nonzero");
    const AlgebraParams& alg = a.algebra();
    Quaternion one = Quaternion::scalar(alg, 1);
    Completion2x2Certificate cert;
    cert.a = a;
    cert.b = b;
    if (a == -b) {
        cert.q = Quaternion(alg);
        cert.g = one;
    } else {
        cert.q = translate_conjugate(a, -b);
        cert.g = conjugator(a + cert.q, -b + cert.q);
    }
    cert.s = a + cert.q;
    QMatrix dp = QMatrix::from_rows({{one, cert.q}, {Quaternion(alg), cert.g}});
    QMatrix dp_inv = QMatrix::from_rows({{one, -cert.q * cert.g.inverse()}, {Quaternion(alg), cert.g.inverse()}});
    QMatrix base = QMatrix::from_rows({{a, Quaternion(alg)}, {one, b}});
    Quaternion c = (dp * base * dp_inv)(0, 1);
    cert.delta = (cert.s * cert.s - c) * cert.g;
    const Quaternion& s = cert.s;
    cert.summands[0] = dp_inv * QMatrix::from_rows({{s, s * s}, {-one, -s}}) * dp;
    cert.summands[1] = dp_inv * QMatrix::from_rows({{Quaternion(alg), Quaternion(alg)}, {cert.g + one, Quaternion(alg)}}) * dp;
    if (!cert.verify()) throw VerificationFailure("completion_2x2: certificate does not verify");
    return cert;
}

SimilarityWitness diag_zero_from_pair(const QMatrix& k, const QMatrix& n1, const QMatrix& n2) {
    if (k.rows() != 2 || !k.is_square()) throw DimensionError("diag_zero_from_pair: expected a 2x2 matrix");
    if (!(n1 + n2 == k) || !(n1 * n1).is_zero() || !(n2 * n2).is_zero()) {
        throw PreconditionError("diag_zero_from_pair: not a splitting into square-zero matrices");
    }
    const AlgebraParams& alg = k.algebra();
    if (k.has_zero_diagonal()) return SimilarityWitness::identity(alg, 2);
    // With x in ker N2 and y in ker N1 independent, N1 = [[0,0],[*,0]] and N2 = [[0,*],[0,0]].
    // Otherwise both kernels are one line, which then contains the image of K.
    auto k1 = kernel_basis(n1);
    auto k2 = kernel_basis(n2);
    for (const auto& x : k2) {
        for (const auto& y : k1) {
            if (independent({x, y})) {
                return require_zero_diagonal(k, SimilarityWitness::from_basis({x, y}), "diag_zero_from_pair");
            }
        }
    }
    return require_zero_diagonal(k, SimilarityWitness::from_basis(extend_to_basis({k2.front()}, 2)), "diag_zero_from_pair");
}

SimilarityWitness diag_zero_form(const QMatrix& m, const SearchConfig& cfg) {
    return decided_diag_zero(m, is_sum_of_two_nilpotents(m, cfg), cfg);
}

TwoNilpotentDecomposition decompose_two_nilpotents(const QMatrix& m, const SearchConfig& cfg) {
    SimilarityWitness w = diag_zero_form(m, cfg);
    QMatrix d = conjugate_by(m, w);
    auto [upper, lower] = strict_split(d);
    TwoNilpotentDecomposition out{w.Pinv * upper * w.P, w.Pinv * lower * w.P, w, d};
    if (!verify_decomposition(m, out.N1, out.N2)) throw VerificationFailure("decomposition does not verify");
    return out;
}

bool verify_decomposition(const QMatrix& m, const QMatrix& n1, const QMatrix& n2) {
    if (!m.is_square() || n1.rows() != m.rows() || n1.cols() != m.cols() || n2.rows() != m.rows() ||
        n2.cols() != m.cols()) {
        throw DimensionError("verify_decomposition: shapes do not match");
    }
    return n1 + n2 == m && is_nilpotent(n1) && is_nilpotent(n2);
}

}  // namespace qnil
