#include "helpers.hpp"

#include "qnil/errors.hpp"

using namespace test;

namespace {

InstanceSpec spec_for(InstanceKind kind, std::size_t n, std::uint64_t seed) {
    InstanceSpec s;
    s.kind = kind;
    s.n = n;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("type I detection") {
    CHECK(detect_type_I(QMatrix::scalar(q(3), 3)) == Rational(3));
    CHECK_FALSE(detect_type_I(QMatrix::scalar(I, 3)));
    CHECK_FALSE(detect_type_I(QMatrix::zero(H, 3)));
    CHECK_FALSE(detect_type_I(QMatrix::diag({q(3), q(3), q(2)})));
}

TEST_CASE("type II detection examples") {
    auto d = detect_type_II(QMatrix::diag({I, ZERO, ZERO}));
    REQUIRE(d);
    CHECK(d->lambda == 0);
    CHECK(d->A == QMatrix::diag({I, ZERO, ZERO}));
    CHECK(d->supertrace == ConjClass::of(I));
    CHECK(d->supertrace.to_string() == "[t=0,N=1] rep=i");

    QMatrix m = mat({{q(2), ONE}, {ZERO, q(2)}});
    auto d2 = detect_type_II(m);
    REQUIRE(d2);
    CHECK(d2->lambda == 2);
    CHECK(d2->image_eigenvalue.is_zero());
    CHECK(d2->supertrace == ConjClass::of(q(4)));
    CHECK(d2->reconstructs(m));

    CHECK_FALSE(detect_type_II(QMatrix::identity(H, 3)));
    CHECK_FALSE(detect_type_II(QMatrix::diag({I, J, ZERO})));
}

TEST_CASE("type II detection on generated instances") {
    Rng pick(41);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            InstanceSpec s = spec_for(InstanceKind::TypeII, n, seed);
            s.lambda = Rational(pick.integer(-3, 3), pick.integer(1, 3));
            if (seed % 3 == 1) s.supertrace = std::make_pair(Rational(0), Rational(1));
            if (seed % 3 == 2) s.supertrace = std::make_pair(Rational(2), Rational(7));
            QMatrix m = generate_instance(s);
            auto d = detect_type_II(m);
            REQUIRE(d);
            CHECK(d->reconstructs(m));
            CHECK(rank(d->A) == 1);
            CHECK(supertrace(d->lambda, d->A) == d->supertrace);
            if (!s.supertrace) {
                CHECK(d->supertrace.is_zero());
                CHECK(reduced_trace(m) == 0);
            } else {
                CHECK(d->supertrace.trace == s.supertrace->first);
                CHECK(d->supertrace.norm == s.supertrace->second);
            }
        }
    }
}

TEST_CASE("the supertrace does not depend on the splitting") {
    Rng rng(42);
    for (int t = 0; t < 40; ++t) {
        Rational lambda(rng.integer(-5, 5), rng.integer(1, 3));
        Rational mu = lambda + Rational(rng.integer(1, 6));
        SimilarityWitness w = rng.invertible(H, 2, 2);
        QMatrix m = conjugate_by(QMatrix::diag({q(mu), q(lambda)}), w);
        QMatrix a = m - QMatrix::scalar(q(lambda), 2);
        QMatrix b = m - QMatrix::scalar(q(mu), 2);
        REQUIRE(rank(a) == 1);
        REQUIRE(rank(b) == 1);
        CHECK(supertrace(lambda, a) == supertrace(mu, b));
        CHECK(supertrace(lambda, a) == ConjClass::of(q(lambda + mu)));
    }
}

TEST_CASE("type III detection") {
    auto c = detect_type_III(QMatrix::diag({I, I, I}));
    REQUIRE(c);
    CHECK(c->eigenvalue == I);
    auto c2 = detect_type_III(QMatrix::diag({I, J, K}));
    REQUIRE(c2);
    CHECK(c2->verify(QMatrix::diag({I, J, K})));
    CHECK_FALSE(detect_type_III(QMatrix::diag({I, I, ONE})));
    CHECK_FALSE(detect_type_III(QMatrix::diag({I, I})));
    CHECK_FALSE(detect_type_III(QMatrix::zero(H, 3)));
}

TEST_CASE("classification examples") {
    CHECK(classify(QMatrix::diag({I, ZERO, ZERO})).verdict == Verdict::TypeII);
    CHECK(classify(QMatrix::scalar(q(5), 4)).verdict == Verdict::TypeI);
    CHECK(classify(mat({{ZERO, I, ZERO}, {ZERO, ZERO, J}, {ONE, ZERO, ZERO}})).verdict == Verdict::Generic);
    CHECK(classify(QMatrix::zero(H, 2)).verdict == Verdict::Zero);
    CHECK(classify(QMatrix::diag({I, I, I})).verdict == Verdict::TypeIII);
    // a scalar matrix is also unispectral; the scalar verdict takes priority
    CHECK(classify(QMatrix::scalar(q(2), 3)).verdict == Verdict::TypeI);
    CHECK_THROWS_AS(classify(QMatrix(H, 2, 3)), DimensionError);
}

TEST_CASE("decision examples") {
    auto d = is_sum_of_two_nilpotents(QMatrix::diag({I, ZERO}));
    CHECK_FALSE(d.answer);
    CHECK_FALSE(d.square_certificate);

    auto d3 = is_sum_of_two_nilpotents(QMatrix::diag({I, ZERO, ZERO}));
    CHECK_FALSE(d3.answer);
    CHECK(d3.reason == Reason::TypeIISupertraceNonzero);

    auto t3 = is_sum_of_two_nilpotents(QMatrix::diag({I, I, I}));
    CHECK_FALSE(t3.answer);
    CHECK(t3.reason == Reason::TypeIII);

    CHECK(is_sum_of_two_nilpotents(QMatrix::diag({I, I, I, I})).answer);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(is_sum_of_two_nilpotents(QMatrix::zero(H, n)).answer);

    auto s = is_sum_of_two_nilpotents(QMatrix::scalar(q(5), 3));
    CHECK(s.reason == Reason::TypeI);
    auto tr = is_sum_of_two_nilpotents(QMatrix::diag({ONE, I, J}));
    CHECK(tr.reason == Reason::TraceNonzero);

    CHECK(is_sum_of_two_nilpotents(mat({{ZERO, I}, {I, ZERO}})).answer);
    auto n2 = is_sum_of_two_nilpotents(QMatrix::diag({I, -I}));
    CHECK(n2.answer);
    auto j2 = is_sum_of_two_nilpotents(QMatrix::diag({I, J}));
    CHECK(j2.answer);
}

TEST_CASE("size one decisions") {
    CHECK(is_sum_of_two_nilpotents(mat({{ZERO}})).answer);
    CHECK(is_sum_of_two_nilpotents(mat({{q(2)}})).reason == Reason::TypeI);
    CHECK(is_sum_of_two_nilpotents(mat({{q(1, 1)}})).reason == Reason::TraceNonzero);
    auto p = is_sum_of_two_nilpotents(mat({{I}}));
    CHECK_FALSE(p.answer);
    CHECK(p.reason == Reason::TypeIISupertraceNonzero);
}

TEST_CASE("size two decision is consistent with supertraces") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        InstanceSpec s = spec_for(InstanceKind::TypeII, 2, seed);
        s.lambda = Rational(static_cast<std::int64_t>(seed % 5) - 2);
        if (seed % 2 == 0) s.supertrace = std::make_pair(Rational(0), Rational(static_cast<std::int64_t>(seed)));
        QMatrix m = generate_instance(s);
        auto d = is_sum_of_two_nilpotents(m);
        CHECK(d.answer == !s.supertrace.has_value());
    }
}

TEST_CASE("NO answers carry verifiable witnesses") {
    std::vector<QMatrix> inputs;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        inputs.push_back(generate_instance(spec_for(InstanceKind::TypeIII, 3, seed)));
        InstanceSpec s = spec_for(InstanceKind::TypeII, 3 + seed % 3, seed);
        s.supertrace = std::make_pair(Rational(1), Rational(3));
        inputs.push_back(generate_instance(s));
        inputs.push_back(generate_instance(spec_for(InstanceKind::TypeI, 2 + seed % 3, seed)));
    }
    for (const auto& m : inputs) {
        auto d = is_sum_of_two_nilpotents(m);
        REQUIRE_FALSE(d.answer);
        const auto& c = d.classification;
        switch (d.reason) {
            case Reason::TypeI:
                CHECK(m == QMatrix::scalar(Quaternion::scalar(H, *c.scalar), m.rows()));
                break;
            case Reason::TypeIISupertraceNonzero:
                CHECK(c.type_ii->reconstructs(m));
                CHECK_FALSE(c.type_ii->supertrace.is_zero());
                break;
            case Reason::TypeIII:
                CHECK(c.type_iii->verify(m));
                break;
            default:
                FAIL("unexpected reason " << to_string(d.reason));
        }
    }
}

TEST_CASE("classification is deterministic") {
    QMatrix m = generate_instance(spec_for(InstanceKind::TypeIII, 3, 7));
    auto a = classify(m), b = classify(m);
    REQUIRE(a.type_iii);
    REQUIRE(b.type_iii);
    CHECK(a.type_iii->eigenvalue == b.type_iii->eigenvalue);
    CHECK(a.type_iii->witness.P == b.type_iii->witness.P);
}

}
