#include "qnil/acceptance.hpp"

#include "qnil/classify.hpp"
#include "qnil/decompose.hpp"
#include "qnil/errors.hpp"
#include "qnil/generate.hpp"
#include "qnil/spectral.hpp"

#include <chrono>
#include <sstream>

namespace qnil {

namespace {

// Time limits in seconds; 0 means the criterion has no time limit.
constexpr double kLimitQuadratic = 1.0;
constexpr double kLimitConjugacy = 2.0;
constexpr double kLimitCompletion = 5.0;
constexpr double kLimitPerInstance = 2.0;
constexpr double kLimitSoundness = 60.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (!ok && failures_.size() < 3) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    bool ok() const { return failed_ == 0; }
    std::string summary(const std::string& ok_text) const {
        if (ok()) return ok_text;
        std::ostringstream os;
        os << failed_ << " of " << total_ << " checks failed";
        for (const auto& f : failures_) os << "; " << f;
        return os.str();
    }

private:
    std::size_t total_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

// Runs body, converting exceptions into failures and enforcing the time limit.
CriterionResult run(int id, std::string name, double limit, const std::function<std::string(Check&)>& body) {
    CriterionResult r{id, std::move(name), false, 0, ""};
    Check check;
    auto t0 = Clock::now();
    std::string text;
    try {
        text = body(check);
    } catch (const std::exception& e) {
        check.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = since(t0);
    r.detail = check.summary(text);
    r.passed = check.ok();
    if (limit > 0 && r.seconds >= limit) {
        r.passed = false;
        std::ostringstream os;
        os << r.detail << "; exceeded time limit";
        r.detail = os.str();
    }
    return r;
}

std::size_t count(const AcceptanceOptions& opt, std::size_t full, std::size_t quick) { return opt.quick ? quick : full; }

const AlgebraParams& hamilton() {
    static const AlgebraParams h;
    return h;
}

Quaternion unit(int idx) { return Quaternion::basis(hamilton(), idx); }

CriterionResult quadratic_identity(const AcceptanceOptions& opt) {
    return run(1, "quadratic identity", kLimitQuadratic, [&](Check& c) {
        Rng rng(opt.seed + 1);
        std::size_t n = 1000;
        for (std::size_t t = 0; t < n; ++t) {
            Quaternion q = rng.quaternion(hamilton(), 10);
            Quaternion lhs = q * q - q * q.trace() + Quaternion::scalar(hamilton(), q.norm());
            c.expect(lhs.is_zero(), "identity fails for " + q.to_string());
        }
        return std::to_string(n) + " quaternions of height <= 10";
    });
}

CriterionResult conjugacy_witnesses(const AcceptanceOptions& opt) {
    return run(2, "conjugacy witnesses", kLimitConjugacy, [&](Check& c) {
        Rng rng(opt.seed + 2);
        const auto& alg = hamilton();
        std::size_t same = 500, differ = 100;
        for (std::size_t t = 0; t < same; ++t) {
            Quaternion q = rng.quaternion(alg, 10);
            Quaternion g = rng.nonzero_quaternion(alg, 10);
            Quaternion p = g * q * g.inverse();
            c.expect(are_conjugate(p, q), "not conjugate: " + p.to_string() + ", " + q.to_string());
            Quaternion w = conjugator(p, q);
            c.expect(!w.is_zero() && w * q * w.inverse() == p, "witness fails for " + q.to_string());
        }
        std::size_t made = 0;
        while (made < differ) {
            Quaternion p = rng.quaternion(alg, 10), q = rng.quaternion(alg, 10);
            if (p.trace() == q.trace() && p.norm() == q.norm()) continue;
            ++made;
            c.expect(!are_conjugate(p, q), "distinct invariants reported conjugate");
        }
        return std::to_string(same) + " conjugate pairs, " + std::to_string(differ) + " non-conjugate pairs";
    });
}

CriterionResult jordan_blocks(const AcceptanceOptions& opt) {
    return run(3, "2x2 Jordan-like diagonalisation", 0, [&](Check& c) {
        Rng rng(opt.seed + 3);
        const auto& alg = hamilton();
        std::size_t yes = 200, no = 50;
        for (std::size_t t = 0; t < yes; ++t) {
            Quaternion a = rng.noncentral_quaternion(alg, 6);
            Quaternion cc = rng.quaternion(alg, 6);
            Quaternion b = commutator(a, cc);
            auto w = diagonalize_2x2_jordanlike(a, b);
            QMatrix m = QMatrix::from_rows({{a, b}, {Quaternion(alg), a}});
            c.expect(w && conjugate_by(m, *w) == QMatrix::diag({a, a}), "no diagonalisation for a=" + a.to_string());
        }
        for (std::size_t t = 0; t < no; ++t) {
            // [a, Q] is the plane of pure quaternions orthogonal to a; leave it along 1 or pure(a)
            Quaternion a = rng.noncentral_quaternion(alg, 6);
            Rational r = rng.rational(5), s = rng.rational(5);
            if (r.is_zero() && s.is_zero()) r = 1;
            Quaternion b = Quaternion::scalar(alg, r) + a.pure_part() * s + commutator(a, rng.quaternion(alg, 6));
            c.expect(!diagonalize_2x2_jordanlike(a, b).has_value(), "unexpected diagonalisation for b=" + b.to_string());
        }
        return std::to_string(yes) + " commutator cases verified, " + std::to_string(no) + " non-commutators rejected";
    });
}

CriterionResult completion(const AcceptanceOptions& opt) {
    return run(4, "completion", kLimitCompletion, [&](Check& c) {
        const auto& alg = hamilton();
        Quaternion i = unit(1), one = unit(0), zero(alg);
        auto w = completion_2x2(i, -i);
        c.expect(w.delta == -one, "worked instance: delta = " + w.delta.to_string());
        c.expect(w.summands[0] == QMatrix::from_rows({{i, -one}, {-one, -i}}), "worked instance: first summand");
        c.expect(w.summands[1] == QMatrix::from_rows({{zero, zero}, {one * Rational(2), zero}}), "worked instance: second summand");
        c.expect((w.summands[0] * w.summands[0]).is_zero() && (w.summands[1] * w.summands[1]).is_zero(),
                 "worked instance: squares");
        Rng rng(opt.seed + 4);
        std::size_t n = 200;
        for (std::size_t t = 0; t < n; ++t) {
            Quaternion a = rng.quaternion(alg, 6);
            Quaternion b = rng.quaternion(alg, 6);
            b = b - Quaternion::scalar(alg, (a + b).trace() / Rational(2));
            auto cert = completion_2x2(a, b);
            c.expect(cert.verify(), "certificate fails for a=" + a.to_string());
        }
        return "worked instance delta = -1 plus " + std::to_string(n) + " seeded certificates";
    });
}

QMatrix diag_i_zeros(std::size_t n, std::size_t count_i) {
    std::vector<Quaternion> d(n, Quaternion(hamilton()));
    for (std::size_t k = 0; k < count_i; ++k) d[k] = unit(1);
    return QMatrix::diag(d);
}

CriterionResult non_examples(const AcceptanceOptions&) {
    return run(5, "non-examples", 0, [&](Check& c) {
        for (std::size_t n = 2; n <= 5; ++n) {
            auto d = is_sum_of_two_nilpotents(diag_i_zeros(n, 1));
            c.expect(!d.answer, "Diag(i,0,...) accepted at n=" + std::to_string(n));
            if (n >= 3) c.expect(d.reason == Reason::TypeIISupertraceNonzero, "wrong reason at n=" + std::to_string(n));
        }
        auto d3 = is_sum_of_two_nilpotents(diag_i_zeros(3, 3));
        c.expect(!d3.answer && d3.reason == Reason::TypeIII, "Diag(i,i,i) not rejected as type III");
        for (std::size_t n = 1; n <= 5; ++n) {
            auto d = is_sum_of_two_nilpotents(QMatrix::scalar(unit(0) * Rational(5), n));
            c.expect(!d.answer && d.reason == Reason::TypeI, "5I not rejected as type I at n=" + std::to_string(n));
        }
        return "Diag(i,0,...,0) for n=2..5, Diag(i,i,i), 5I for n=1..5";
    });
}

CriterionResult boundary(const AcceptanceOptions&) {
    return run(6, "size three boundary", 0, [&](Check& c) {
        auto d3 = is_sum_of_two_nilpotents(diag_i_zeros(3, 3));
        c.expect(!d3.answer, "Diag(i,i,i) accepted");
        QMatrix m4 = diag_i_zeros(4, 4);
        auto d4 = is_sum_of_two_nilpotents(m4);
        c.expect(d4.answer, "Diag(i,i,i,i) rejected");
        if (d4.answer) {
            auto dec = decompose_two_nilpotents(m4);
            c.expect(verify_decomposition(m4, dec.N1, dec.N2), "Diag(i,i,i,i) decomposition fails");
        }
        QMatrix dijk = QMatrix::diag({unit(1), unit(2), unit(3)});
        auto d = is_sum_of_two_nilpotents(dijk);
        c.expect(!d.answer && d.reason == Reason::TypeIII, "Diag(i,j,k) not rejected as type III");
        c.expect(d.classification.type_iii && d.classification.type_iii->verify(dijk), "Diag(i,j,k) certificate fails");
        return "Diag(i,i,i) NO, Diag(i,i,i,i) YES and decomposed, Diag(i,j,k) type III certified";
    });
}

CriterionResult master_round_trip(const AcceptanceOptions& opt) {
    return run(7, "master round trip", 0, [&](Check& c) {
        std::size_t per_size = count(opt, 200, 20);
        double worst = 0;
        std::size_t total = 0;
        for (std::size_t n = 2; n <= 5; ++n) {
            for (std::size_t t = 0; t < per_size; ++t) {
                InstanceSpec spec;
                spec.n = n;
                spec.seed = opt.seed * 7919 + n * 100000 + t;
                spec.kind = t % 2 == 0 ? InstanceKind::GenericTraceZero : InstanceKind::TypeII;
                if (spec.kind == InstanceKind::TypeII) spec.lambda = Rational(static_cast<std::int64_t>(t % 7) - 3);
                QMatrix m = generate_instance(spec, opt.cfg);
                auto t0 = Clock::now();
                auto d = is_sum_of_two_nilpotents(m, opt.cfg);
                std::string where = "n=" + std::to_string(n) + " seed=" + std::to_string(spec.seed);
                c.expect(d.answer, "rejected " + where);
                if (d.answer) {
                    auto dec = decompose_two_nilpotents(m, opt.cfg);
                    c.expect(verify_decomposition(m, dec.N1, dec.N2), "decomposition fails " + where);
                }
                double s = since(t0);
                worst = std::max(worst, s);
                c.expect(s < kLimitPerInstance, "slow instance " + where);
                ++total;
            }
        }
        std::ostringstream os;
        os << total << " instances over n=2..5, slowest " << worst << " s (limit " << kLimitPerInstance << " s each)";
        return os.str();
    });
}

CriterionResult supertrace_well_defined(const AcceptanceOptions& opt) {
    return run(8, "supertrace well-definedness", 0, [&](Check& c) {
        Rng rng(opt.seed + 8);
        const auto& alg = hamilton();
        std::size_t n = 100;
        for (std::size_t t = 0; t < n; ++t) {
            Rational lambda = rng.rational(5);
            Rational mu = lambda + Rational(rng.integer(1, 9), rng.integer(1, 4));
            SimilarityWitness s = rng.invertible(alg, 2, 2);
            QMatrix m = conjugate_by(QMatrix::diag({Quaternion::scalar(alg, mu), Quaternion::scalar(alg, lambda)}), s);
            QMatrix a = m - QMatrix::scalar(Quaternion::scalar(alg, lambda), 2);
            QMatrix b = m - QMatrix::scalar(Quaternion::scalar(alg, mu), 2);
            c.expect(supertrace(lambda, a) == supertrace(mu, b), "supertraces differ for lambda=" + lambda.to_string());
        }
        return std::to_string(n) + " double splittings";
    });
}

CriterionResult fillmore(const AcceptanceOptions& opt) {
    return run(9, "rational zero-diagonal form", 0, [&](Check& c) {
        Rng rng(opt.seed + 9);
        std::size_t made = 0, target = 200;
        while (made < target) {
            auto n = static_cast<std::size_t>(rng.integer(2, 6));
            RatMatrix m(n, n);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t col = 0; col < n; ++col) m(r, col) = rng.rational(5);
            }
            m(n - 1, n - 1) -= m.trace();
            if (m.is_scalar()) continue;
            ++made;
            auto w = field_diag_zero(m);
            RatMatrix d = w.P * m * w.Pinv;
            bool zero_diag = true;
            for (std::size_t i = 0; i < n; ++i) zero_diag = zero_diag && d(i, i).is_zero();
            c.expect(w.P * w.Pinv == RatMatrix::identity(n) && zero_diag, "fails at n=" + std::to_string(n));
        }
        return std::to_string(target) + " nonscalar trace-zero rational matrices, n=2..6";
    });
}

CriterionResult soundness(const AcceptanceOptions& opt) {
    return run(10, "soundness of NO on a finite set", kLimitSoundness, [&](Check& c) {
        const auto& alg = hamilton();
        std::vector<Quaternion> set{Quaternion(alg)};
        for (int e = 0; e < 4; ++e) {
            set.push_back(unit(e));
            set.push_back(-unit(e));
        }
        std::vector<QMatrix> all;
        for (const auto& a : set)
            for (const auto& b : set)
                for (const auto& cc : set)
                    for (const auto& d : set) all.push_back(QMatrix::from_rows({{a, b}, {cc, d}}));
        std::vector<const QMatrix*> square_zero;
        for (const auto& m : all) {
            if ((m * m).is_zero()) square_zero.push_back(&m);
        }
        std::size_t rejected = 0, accepted = 0;
        for (const auto& m : all) {
            auto d = is_sum_of_two_nilpotents(m, opt.cfg);
            if (d.answer) {
                ++accepted;
                continue;
            }
            ++rejected;
            for (const QMatrix* n1 : square_zero) {
                QMatrix rest = m - *n1;
                c.expect(!(rest * rest).is_zero(), "rejected matrix splits: " + m.to_string());
            }
        }
        return std::to_string(rejected) + " rejected of " + std::to_string(all.size()) + " matrices, none split over " +
               std::to_string(square_zero.size()) + " square-zero candidates (finite check, not exhaustive over Q)";
    });
}

CriterionResult triangular(const AcceptanceOptions& opt) {
    return run(11, "triangular eigenvalues", 0, [&](Check& c) {
        Rng rng(opt.seed + 11);
        const auto& alg = hamilton();
        std::size_t n_cases = 100;
        for (std::size_t t = 0; t < n_cases; ++t) {
            auto n = static_cast<std::size_t>(rng.integer(1, 4));
            QMatrix tri(alg, n, n);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t col = r; col < n; ++col) tri(r, col) = rng.quaternion(alg, 4);
            }
            for (std::size_t d = 0; d < n; ++d) {
                QVector small = triangular_eigenvector(tri.block(0, 0, d, d), tri.block(0, d, d, 1).column(0), tri(d, d));
                QVector y(alg, n);
                for (std::size_t r = 0; r <= d; ++r) y[r] = small[r];
                c.expect(!y.is_zero() && tri * y == y.scale_right(tri(d, d)), "entry " + std::to_string(d) + " fails");
            }
        }
        return std::to_string(n_cases) + " upper-triangular matrices, n <= 4";
    });
}

}  // namespace

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << " (" << r.seconds << " s)";
    return os.str();
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<std::function<CriterionResult(const AcceptanceOptions&)>> criteria{
        quadratic_identity, conjugacy_witnesses, jordan_blocks, completion, non_examples, boundary,
        master_round_trip,  supertrace_well_defined, fillmore, soundness, triangular};
    std::vector<CriterionResult> out;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        // the exhaustive finite check dominates the runtime and has no sample count to shrink
        if (opt.quick && k + 1 == 10) continue;
        out.push_back(criteria[k](opt));
        if (on_result) on_result(out.back());
    }
    return out;
}

}  // namespace qnil
