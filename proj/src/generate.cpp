#include "qnil/generate.hpp"

#include "qnil/conjugacy.hpp"
#include "qnil/errors.hpp"

namespace qnil {

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Rng::rational(std::int64_t height) {
    std::int64_t p = integer(-height, height);
    std::int64_t q = integer(1, height);
    return Rational(p, q);
}

Quaternion Rng::integer_quaternion(const AlgebraParams& alg, std::int64_t height) {
    std::int64_t c[4];
    for (auto& v : c) v = integer(-height, height);
    return Quaternion(alg, c[0], c[1], c[2], c[3]);
}

Quaternion Rng::quaternion(const AlgebraParams& alg, std::int64_t height) {
    Rational c[4];
    for (auto& v : c) v = rational(height);
    return Quaternion(alg, c[0], c[1], c[2], c[3]);
}

Quaternion Rng::nonzero_quaternion(const AlgebraParams& alg, std::int64_t height) {
    for (;;) {
        Quaternion q = quaternion(alg, height);
        if (!q.is_zero()) return q;
    }
}

Quaternion Rng::noncentral_quaternion(const AlgebraParams& alg, std::int64_t height) {
    for (;;) {
        Quaternion q = quaternion(alg, height);
        if (!q.is_central()) return q;
    }
}

QVector Rng::nonzero_vector(const AlgebraParams& alg, std::size_t n, std::int64_t height) {
    for (;;) {
        QVector v(alg, n);
        for (std::size_t i = 0; i < n; ++i) v[i] = integer_quaternion(alg, height);
        if (!v.is_zero()) return v;
    }
}

QMatrix Rng::matrix(const AlgebraParams& alg, std::size_t rows, std::size_t cols, std::int64_t height) {
    QMatrix m(alg, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_quaternion(alg, height);
    }
    return m;
}

SimilarityWitness Rng::invertible(const AlgebraParams& alg, std::size_t n, std::int64_t height) {
    QMatrix lower = QMatrix::identity(alg, n);
    QMatrix upper = QMatrix::identity(alg, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < r; ++c) {
            lower(r, c) = integer_quaternion(alg, height);
            upper(c, r) = integer_quaternion(alg, height);
        }
    }
    QMatrix p = lower * upper;
    return SimilarityWitness::checked(p, *invert(p));
}

QMatrix Rng::square_zero(const AlgebraParams& alg, std::size_t n, std::int64_t height) {
    for (;;) {
        QVector c = nonzero_vector(alg, n, height);
        QVector r = nonzero_vector(alg, n, height);
        std::size_t t = 0;
        while (c[t].is_zero()) ++t;
        r[t] = Quaternion(alg);
        r[t] = -dot(r, c) * c[t].inverse();
        if (r.is_zero()) continue;
        return outer(c, r);
    }
}

std::string to_string(InstanceKind k) {
    switch (k) {
        case InstanceKind::GenericTraceZero: return "generic-trace-zero";
        case InstanceKind::TypeI: return "type-I";
        case InstanceKind::TypeII: return "type-II";
        case InstanceKind::TypeIII: return "type-III";
        case InstanceKind::Random: return "random";
    }
    return "?";
}

InstanceKind parse_instance_kind(const std::string& s) {
    for (auto k : {InstanceKind::GenericTraceZero, InstanceKind::TypeI, InstanceKind::TypeII, InstanceKind::TypeIII,
                   InstanceKind::Random}) {
        if (to_string(k) == s) return k;
    }
    throw ParseError("unknown instance kind: " + s);
}

namespace {

constexpr int kMaxAttempts = 200;

QMatrix make_type_ii(const InstanceSpec& spec, Rng& rng, const SearchConfig& cfg) {
    const AlgebraParams& alg = spec.algebra;
    std::size_t n = spec.n;
    Rational lambda = spec.lambda ? *spec.lambda : Rational(rng.integer(-3, 3));
    Quaternion target(alg);
    if (spec.supertrace) {
        auto [t, nn] = *spec.supertrace;
        if (t * t == Rational(4) * nn) {
            target = Quaternion::scalar(alg, t / Rational(2));
        } else {
            auto rep = class_representative(alg, t, nn, cfg);
            if (!rep) throw ParameterError("no quaternion with trace " + t.to_string() + " and norm " + nn.to_string());
            target = *rep;
        }
    }
    Quaternion scalar_part = Quaternion::scalar(alg, lambda * Rational(static_cast<std::int64_t>(n)));
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Quaternion g = rng.nonzero_quaternion(alg, spec.height);
        Quaternion qa = g * target * g.inverse() - scalar_part;
        QVector c = rng.nonzero_vector(alg, n, spec.height);
        QVector r = rng.nonzero_vector(alg, n, spec.height);
        std::size_t t = 0;
        while (c[t].is_zero()) ++t;
        r[t] = Quaternion(alg);
        r[t] = (qa - dot(r, c)) * c[t].inverse();
        if (r.is_zero()) continue;
        QMatrix m = QMatrix::scalar(Quaternion::scalar(alg, lambda), n) + outer(c, r);
        m = conjugate_by(m, rng.invertible(alg, n, 1));
        auto cls = classify(m, cfg);
        if (cls.verdict == Verdict::TypeII && ConjClass::of(target) == cls.type_ii->supertrace) return m;
    }
    throw ParameterError("could not generate a type-II instance with the requested data");
}

}  // namespace

QMatrix generate_instance(const InstanceSpec& spec, const SearchConfig& cfg) {
    const AlgebraParams& alg = spec.algebra;
    std::size_t n = spec.n;
    if (n == 0) throw ParameterError("instance size must be positive");
    if (spec.height < 1) throw ParameterError("height bound must be positive");
    Rng rng(spec.seed);
    switch (spec.kind) {
        case InstanceKind::TypeI: {
            Rational lambda = spec.lambda ? *spec.lambda : Rational(0);
            while (lambda.is_zero()) lambda = Rational(rng.integer(-9, 9));
            QMatrix m = QMatrix::scalar(Quaternion::scalar(alg, lambda), n);
            if (classify(m, cfg).verdict != Verdict::TypeI) throw VerificationFailure("type-I instance misclassified");
            return m;
        }
        case InstanceKind::TypeII: {
            if (n < 2) throw ParameterError("type-II instances need n >= 2");
            return make_type_ii(spec, rng, cfg);
        }
        case InstanceKind::TypeIII: {
            if (n != 3) throw ParameterError("type-III instances need n = 3");
            Quaternion q = rng.noncentral_quaternion(alg, spec.height);
            std::vector<Quaternion> d;
            for (int t = 0; t < 3; ++t) {
                Quaternion g = rng.nonzero_quaternion(alg, 1);
                d.push_back(g * q * g.inverse());
            }
            QMatrix m = conjugate_by(QMatrix::diag(d), rng.invertible(alg, 3, 1));
            if (classify(m, cfg).verdict != Verdict::TypeIII) throw VerificationFailure("type-III instance misclassified");
            return m;
        }
        case InstanceKind::GenericTraceZero: {
            for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
                QMatrix m(alg, n, n);
                if (n == 2) {
                    // at size two only sums of square-zero matrices qualify
                    m = rng.square_zero(alg, 2, spec.height) + rng.square_zero(alg, 2, spec.height);
                } else {
                    m = rng.matrix(alg, n, n, spec.height);
                    Rational tr = reduced_trace(m);
                    m(n - 1, n - 1) = m(n - 1, n - 1) - Quaternion::scalar(alg, tr / Rational(2));
                }
                if (!reduced_trace(m).is_zero()) throw VerificationFailure("trace-zero instance has nonzero trace");
                if (classify(m, cfg).verdict == Verdict::Generic) return m;
            }
            throw ParameterError("could not generate a generic trace-zero instance");
        }
        case InstanceKind::Random:
            return rng.matrix(alg, n, n, spec.height);
    }
    throw ParameterError("unknown instance kind");
}

}  // namespace qnil
