#include "qnil/classify.hpp"

#include "qnil/errors.hpp"

namespace qnil {

namespace {

void require_square(const QMatrix& m) {
    if (!m.is_square() || m.rows() == 0) throw DimensionError("expected a nonempty square matrix");
}

std::optional<TypeIIData> try_lambda(const QMatrix& m, const Rational& lambda) {
    const AlgebraParams& alg = m.algebra();
    QMatrix a = m - QMatrix::scalar(Quaternion::scalar(alg, lambda), m.rows());
    auto f = rank1_factor(a);
    if (!f) return std::nullopt;
    Quaternion qa = dot(f->second, f->first);
    Quaternion st = Quaternion::scalar(alg, lambda * Rational(static_cast<std::int64_t>(m.rows()))) + qa;
    return TypeIIData{lambda, a, f->first, f->second, qa, ConjClass::of(st)};
}

// Rational roots of lambda^2 - B lambda + C = 0 with quaternion coefficients.
std::vector<Rational> central_roots(const Quaternion& b, const Quaternion& c) {
    for (int t = 1; t < 4; ++t) {
        if (!b.coord(t).is_zero()) return {c.coord(t) / b.coord(t)};
    }
    if (!c.is_central()) return {};
    Rational disc = b.w() * b.w() - Rational(4) * c.w();
    if (!disc.is_square()) return {};
    Rational r = disc.sqrt();
    if (r.is_zero()) return {b.w() / Rational(2)};
    return {(b.w() - r) / Rational(2), (b.w() + r) / Rational(2)};
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Zero: return "Zero";
        case Verdict::TypeI: return "TypeI";
        case Verdict::TypeII: return "TypeII";
        case Verdict::TypeIII: return "TypeIII";
        case Verdict::Generic: return "Generic";
    }
    return "?";
}

std::string to_string(Reason r) {
    switch (r) {
        case Reason::TraceNonzero: return "TraceNonzero";
        case Reason::TypeI: return "TypeI";
        case Reason::TypeIISupertraceNonzero: return "TypeIISupertraceNonzero";
        case Reason::TypeIII: return "TypeIII";
        case Reason::N2SpectralObstruction: return "N2SpectralObstruction";
        case Reason::Yes: return "Yes";
    }
    return "?";
}

bool TypeIIData::reconstructs(const QMatrix& m) const {
    QMatrix rebuilt = QMatrix::scalar(Quaternion::scalar(m.algebra(), lambda), m.rows()) + outer(column, row);
    return rebuilt == m && rank(A) == 1 && A == outer(column, row);
}

ConjClass supertrace(const Rational& lambda, const QMatrix& a) {
    auto f = rank1_factor(a);
    if (!f) throw PreconditionError("supertrace: perturbation does not have rank one");
    Quaternion qa = dot(f->second, f->first);
    return ConjClass::of(Quaternion::scalar(a.algebra(), lambda * Rational(static_cast<std::int64_t>(a.rows()))) + qa);
}

std::optional<Rational> detect_type_I(const QMatrix& m) {
    require_square(m);
    if (!m.is_diagonal() || !m(0, 0).is_central() || m(0, 0).is_zero()) return std::nullopt;
    for (std::size_t i = 1; i < m.rows(); ++i) {
        if (!(m(i, i) == m(0, 0))) return std::nullopt;
    }
    return m(0, 0).w();
}

std::optional<TypeIIData> detect_type_II(const QMatrix& m) {
    require_square(m);
    std::size_t n = m.rows();
    if (n < 2) return std::nullopt;
    std::vector<Rational> candidates;
    std::optional<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t s = 0; s < n && !off; ++s) {
        for (std::size_t t = 0; t < n && !off; ++t) {
            if (s != t && !m(s, t).is_zero()) off = std::make_pair(s, t);
        }
    }
    if (off) {
        auto [s, t] = *off;
        Quaternion inv = m(s, t).inverse();
        if (n >= 3) {
            // rank one forces A_kk = A_kt A_st^-1 A_sk for k outside {s, t}
            std::size_t k = 0;
            while (k == s || k == t) ++k;
            Quaternion lambda = m(k, k) - m(k, t) * inv * m(s, k);
            if (lambda.is_central()) candidates.push_back(lambda.w());
        } else {
            // (M_tt - l) M_st^-1 (M_ss - l) = M_ts, multiplied by M_st on the left
            Quaternion x = m(s, t) * m(t, t) * inv;
            candidates = central_roots(x + m(s, s), x * m(s, s) - m(s, t) * m(t, s));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (m(i, i).is_central()) candidates.push_back(m(i, i).w());
        }
    }
    for (const auto& lambda : candidates) {
        if (auto d = try_lambda(m, lambda)) return d;
    }
    return std::nullopt;
}

std::optional<DiagonalizationCertificate> detect_type_III(const QMatrix& m, const SearchConfig& cfg) {
    require_square(m);
    if (m.rows() != 3 || m.is_zero()) return std::nullopt;
    return unispectral_diagonalizable(m, cfg);
}

Classification classify(const QMatrix& m, const SearchConfig& cfg) {
    require_square(m);
    Classification c;
    if (m.is_zero()) {
        c.verdict = Verdict::Zero;
        return c;
    }
    if (auto l = detect_type_I(m)) {
        c.verdict = Verdict::TypeI;
        c.scalar = l;
        return c;
    }
    if (auto d = detect_type_II(m)) {
        c.verdict = Verdict::TypeII;
        c.type_ii = std::move(d);
        return c;
    }
    if (auto cert = detect_type_III(m, cfg)) {
        c.verdict = Verdict::TypeIII;
        c.type_iii = std::move(cert);
        return c;
    }
    c.verdict = Verdict::Generic;
    return c;
}

namespace {

Decision decide_size_two(const QMatrix& m, Decision d, const SearchConfig& cfg) {
    d.square_certificate = unispectral_diagonalizable(m * m, cfg);
    d.matrix_certificate = unispectral_diagonalizable(m, cfg);
    bool yes = d.square_certificate.has_value();
    if (yes && d.matrix_certificate) {
        const Quaternion& q = d.matrix_certificate->eigenvalue;
        yes = q.trace().is_zero() && !q.is_central();
    }
    const auto& c = d.classification;
    if (c.verdict == Verdict::TypeII) {
        bool st_zero = c.type_ii->supertrace.is_zero();
        if (st_zero != yes) {
            throw VerificationFailure("size-two spectral criterion disagrees with the supertrace criterion");
        }
        if (!yes) {
            d.answer = false;
            d.reason = Reason::TypeIISupertraceNonzero;
            d.detail = "supertrace " + c.type_ii->supertrace.to_string();
            return d;
        }
    }
    d.answer = yes;
    d.reason = yes ? Reason::Yes : Reason::N2SpectralObstruction;
    if (!d.square_certificate) {
        d.detail = "M^2 is not unispectral diagonalisable";
    } else if (!yes) {
        d.detail = "M is unispectral diagonalisable with eigenvalue " + d.matrix_certificate->eigenvalue.to_string();
    }
    return d;
}

}  // namespace

Decision is_sum_of_two_nilpotents(const QMatrix& m, const SearchConfig& cfg) {
    require_square(m);
    std::size_t n = m.rows();
    Decision d;
    d.classification = classify(m, cfg);
    const auto& c = d.classification;
    Rational tr = reduced_trace(m);
    auto no = [&](Reason r, std::string detail) {
        d.answer = false;
        d.reason = r;
        d.detail = std::move(detail);
        return d;
    };
    if (c.verdict == Verdict::Zero) {
        d.answer = true;
        d.reason = Reason::Yes;
        return d;
    }
    if (c.verdict == Verdict::TypeI) return no(Reason::TypeI, "scalar " + c.scalar->to_string());
    if (n == 1) {
        if (!tr.is_zero()) return no(Reason::TraceNonzero, "reduced trace " + tr.to_string());
        return no(Reason::TypeIISupertraceNonzero, "supertrace " + ConjClass::of(m(0, 0)).to_string());
    }
    if (!tr.is_zero() && c.verdict == Verdict::Generic) return no(Reason::TraceNonzero, "reduced trace " + tr.to_string());
    if (n == 2) {
        if (!tr.is_zero()) return no(Reason::TraceNonzero, "reduced trace " + tr.to_string());
        return decide_size_two(m, std::move(d), cfg);
    }
    if (c.verdict == Verdict::TypeII) {
        if (!c.type_ii->supertrace.is_zero()) {
            return no(Reason::TypeIISupertraceNonzero, "supertrace " + c.type_ii->supertrace.to_string());
        }
        if (!tr.is_zero()) throw VerificationFailure("zero supertrace with nonzero reduced trace");
    }
    if (c.verdict == Verdict::TypeIII) {
        return no(Reason::TypeIII, "unispectral diagonalisable with eigenvalue " + c.type_iii->eigenvalue.to_string());
    }
    d.answer = true;
    d.reason = Reason::Yes;
    return d;
}

}  // namespace qnil
