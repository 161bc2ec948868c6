#include "helpers.hpp"

#include "qnil/errors.hpp"

using namespace test;

namespace {

RatMatrix rat(const std::vector<std::vector<std::int64_t>>& rows) {
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

bool rat_zero_diagonal(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m(i, i).is_zero()) return false;
    }
    return true;
}

void check_round_trip(const QMatrix& m) {
    auto d = decompose_two_nilpotents(m);
    CHECK(verify_decomposition(m, d.N1, d.N2));
    CHECK(d.witness.verify());
    CHECK(conjugate_by(m, d.witness) == d.diag_zero);
    CHECK(d.diag_zero.has_zero_diagonal());
    CHECK(reduced_trace(d.diag_zero) == 0);
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("rational zero-diagonal form") {
    RatMatrix d = rat({{1, 0}, {0, -1}});
    auto w = field_diag_zero(d);
    CHECK(rat_zero_diagonal(w.P * d * w.Pinv));
    // the basis (e1 + e2, e1 - e2) from the classical argument also works
    RatMatrix s = rat({{1, 1}, {1, -1}});
    CHECK(*inverse(s) * d * s == rat({{0, 1}, {1, 0}}));

    auto z = field_diag_zero(RatMatrix(3, 3));
    CHECK(z.P == RatMatrix::identity(3));
    RatMatrix d3 = rat({{2, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    auto w3 = field_diag_zero(d3);
    CHECK(w3.P * w3.Pinv == RatMatrix::identity(3));
    CHECK(rat_zero_diagonal(w3.P * d3 * w3.Pinv));
    CHECK_THROWS_AS(field_diag_zero(RatMatrix::identity(2)), PreconditionError);
    CHECK_THROWS_AS(field_diag_zero(rat({{1, 0}, {0, 0}})), PreconditionError);
}

TEST_CASE("rational zero-diagonal form on random inputs") {
    Rng rng(51);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.integer(2, 6));
        RatMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.rational(3);
        }
        m(n - 1, n - 1) -= m.trace();
        if (m.is_scalar()) continue;
        auto w = field_diag_zero(m);
        CHECK(w.P * w.Pinv == RatMatrix::identity(n));
        CHECK(rat_zero_diagonal(w.P * m * w.Pinv));
    }
}

TEST_CASE("completion of the worked instance") {
    auto c = completion_2x2(I, -I);
    CHECK(c.q.is_zero());
    CHECK(c.g == ONE);
    CHECK(c.s == I);
    CHECK(c.delta == q(-1));
    CHECK(c.summands[0] == mat({{I, -ONE}, {-ONE, -I}}));
    CHECK(c.summands[1] == mat({{ZERO, ZERO}, {q(2), ZERO}}));
    CHECK(c.completed() == mat({{I, -ONE}, {ONE, -I}}));
    CHECK(c.verify());
}

TEST_CASE("completion in degenerate and general cases") {
    auto z = completion_2x2(ZERO, ZERO);
    CHECK(z.verify());
    CHECK(z.delta.is_zero());
    auto zi = completion_2x2(ZERO, I);
    CHECK(zi.verify());
    CHECK((zi.a + zi.q) == zi.g * (-zi.b + zi.q) * zi.g.inverse());
    CHECK_THROWS_AS(completion_2x2(ONE, ZERO), PreconditionError);
    Rng rng(52);
    for (const auto& alg : test_algebras()) {
        for (int t = 0; t < 20; ++t) {
            Quaternion a = rng.quaternion(alg, 4);
            Quaternion b = rng.quaternion(alg, 4);
            b = b - Quaternion::scalar(alg, (a + b).trace() / Rational(2));
            auto c = completion_2x2(a, b);
            CHECK(c.verify());
            CHECK(c.s == a + c.q);
            CHECK(c.g * (-b + c.q) * c.g.inverse() == c.s);
        }
    }
}

TEST_CASE("zero-diagonal form examples") {
    QMatrix m = mat({{ZERO, I}, {I, ZERO}});
    SimilarityWitness w = diag_zero_form(m);
    CHECK(conjugate_by(m, w) == mat({{ZERO, -ONE}, {ONE, ZERO}}));
    CHECK(w.Pinv == QMatrix::diag({ONE, I}));
    CHECK_THROWS_AS(diag_zero_form(QMatrix::diag({I, ZERO, ZERO})), PreconditionError);
    CHECK(diag_zero_form(QMatrix::zero(H, 3)).P == QMatrix::identity(H, 3));
}

TEST_CASE("decomposition examples") {
    auto d = decompose_two_nilpotents(mat({{ZERO, I}, {I, ZERO}}));
    CHECK(d.N1 == mat({{ZERO, I}, {ZERO, ZERO}}));
    CHECK(d.N2 == mat({{ZERO, ZERO}, {I, ZERO}}));
    auto z = decompose_two_nilpotents(QMatrix::zero(H, 3));
    CHECK(z.N1.is_zero());
    CHECK(z.N2.is_zero());
    check_round_trip(QMatrix::diag({I, I, I, I}));
    check_round_trip(QMatrix::diag({I, J, K, -I - J - K}));
    check_round_trip(mat({{ZERO, I, ZERO}, {ZERO, ZERO, J}, {ONE, ZERO, ZERO}}));
    check_round_trip(QMatrix::diag({I, -I}));
    check_round_trip(QMatrix::diag({I, J}));
}

TEST_CASE("verification of decompositions") {
    QMatrix m = mat({{ZERO, I}, {I, ZERO}});
    auto d = decompose_two_nilpotents(m);
    CHECK(verify_decomposition(m, d.N1, d.N2));
    QMatrix non_nil = QMatrix::diag({I, -I});
    CHECK_FALSE(verify_decomposition(non_nil, non_nil, QMatrix::zero(H, 2)));
    CHECK_FALSE(verify_decomposition(m, d.N1, d.N1));
    CHECK_THROWS_AS(verify_decomposition(m, QMatrix::zero(H, 3), d.N2), DimensionError);
}

TEST_CASE("type II inputs with zero supertrace") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            InstanceSpec s;
            s.kind = InstanceKind::TypeII;
            s.n = n;
            s.seed = seed;
            s.lambda = Rational(static_cast<std::int64_t>(seed) - 3);
            check_round_trip(generate_instance(s));
        }
    }
    check_round_trip(mat({{ZERO, ONE}, {ZERO, ZERO}}));
    check_round_trip(mat({{ZERO, ONE, ZERO}, {ZERO, ZERO, ZERO}, {ZERO, ZERO, ZERO}}));
}

TEST_CASE("generic trace-zero inputs") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            InstanceSpec s;
            s.n = n;
            s.seed = seed;
            check_round_trip(generate_instance(s));
        }
    }
}

TEST_CASE("other algebras") {
    for (const auto& alg : test_algebras()) {
        for (std::size_t n = 2; n <= 4; ++n) {
            InstanceSpec s;
            s.algebra = alg;
            s.n = n;
            s.seed = 3;
            check_round_trip(generate_instance(s));
        }
    }
}

TEST_CASE("decomposition is deterministic") {
    InstanceSpec s;
    s.n = 4;
    s.seed = 9;
    QMatrix m = generate_instance(s);
    auto a = decompose_two_nilpotents(m), b = decompose_two_nilpotents(m);
    CHECK(a.N1 == b.N1);
    CHECK(a.witness.P == b.witness.P);
}

}
