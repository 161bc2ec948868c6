#pragma once

#include "qnil/classify.hpp"
#include "qnil/decompose.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace qnil::io {

using Json = nlohmann::ordered_json;

// Rationals travel as strings "p" or "p/q"; parse errors throw ParseError.
Json to_json(const Rational& r);
Json to_json(const Quaternion& q);
Json to_json(const AlgebraParams& alg);
Json to_json(const QMatrix& m);
Json to_json(const SimilarityWitness& w);
Json to_json(const ConjClass& c);
Json to_json(const TwoNilpotentDecomposition& d);
Json to_json(const Classification& c);
Json to_json(const Decision& d);

Rational rational_from_json(const Json& j);
Quaternion quaternion_from_json(const AlgebraParams& alg, const Json& j);
/// Throws NonDivisionAlgebra for split parameters.
AlgebraParams algebra_from_json(const Json& j);
/// Uses `fallback` when the document carries no "algebra" field.
QMatrix matrix_from_json(const Json& j, const std::optional<AlgebraParams>& fallback = std::nullopt);
TwoNilpotentDecomposition decomposition_from_json(const Json& j);

/// Parses text as JSON, throwing ParseError on malformed input.
Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace qnil::io
