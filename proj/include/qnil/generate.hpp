#pragma once

#include "qnil/classify.hpp"
#include "qnil/qmatrix.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

namespace qnil {

/// Seeded source of small random values. Draws are mapped by plain modulo so
/// streams do not depend on the standard library's distribution algorithms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform-ish integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi);
    /// p / q with |p| <= height and 1 <= q <= height.
    Rational rational(std::int64_t height);
    Quaternion integer_quaternion(const AlgebraParams& alg, std::int64_t height);
    Quaternion quaternion(const AlgebraParams& alg, std::int64_t height);
    Quaternion nonzero_quaternion(const AlgebraParams& alg, std::int64_t height);
    Quaternion noncentral_quaternion(const AlgebraParams& alg, std::int64_t height);
    QVector nonzero_vector(const AlgebraParams& alg, std::size_t n, std::int64_t height);
    QMatrix matrix(const AlgebraParams& alg, std::size_t rows, std::size_t cols, std::int64_t height);
    /// Product of random unit lower and upper triangular matrices, with its inverse.
    SimilarityWitness invertible(const AlgebraParams& alg, std::size_t n, std::int64_t height);
    /// c r^T with r . c = 0 and c, r nonzero.
    QMatrix square_zero(const AlgebraParams& alg, std::size_t n, std::int64_t height);

private:
    std::mt19937_64 engine_;
};

enum class InstanceKind { GenericTraceZero, TypeI, TypeII, TypeIII, Random };

std::string to_string(InstanceKind k);
/// Accepts generic-trace-zero, type-I, type-II, type-III, random. Throws ParseError.
InstanceKind parse_instance_kind(const std::string& s);

struct InstanceSpec {
    AlgebraParams algebra;
    std::size_t n = 3;
    InstanceKind kind = InstanceKind::GenericTraceZero;
    std::uint64_t seed = 1;
    std::int64_t height = 2;
    /// Scalar part for type-I and type-II; drawn from the seed when absent.
    std::optional<Rational> lambda;
    /// (trace, norm) of the type-II supertrace class; absent means the zero class.
    std::optional<std::pair<Rational, Rational>> supertrace;
};

/// Deterministic in the instance parameters. The result is re-classified and checked against the kind;
/// throws ParameterError for unsatisfiable specs.
QMatrix generate_instance(const InstanceSpec& spec, const SearchConfig& cfg = {});

}  // namespace qnil
