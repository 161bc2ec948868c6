#include "qnil/serialize.hpp"

#include "qnil/errors.hpp"

#include <fstream>
#include <sstream>

namespace qnil::io {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Quaternion& q) {
    Json j = Json::array();
    for (const auto& c : q.coords()) j.push_back(to_json(c));
    return j;
}

Json to_json(const AlgebraParams& alg) { return Json{{"a", to_json(alg.a())}, {"b", to_json(alg.b())}}; }

Json to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"algebra", to_json(m.algebra())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const SimilarityWitness& w) { return Json{{"P", to_json(w.P)}, {"Pinv", to_json(w.Pinv)}}; }

Json to_json(const ConjClass& c) {
    return Json{{"trace", to_json(c.trace)},
                {"norm", to_json(c.norm)},
                {"central", c.central},
                {"representative", to_json(c.representative)},
                {"text", c.to_string()}};
}

Json to_json(const TwoNilpotentDecomposition& d) {
    return Json{{"algebra", to_json(d.N1.algebra())},
                {"N1", to_json(d.N1)},
                {"N2", to_json(d.N2)},
                {"P", to_json(d.witness.P)},
                {"Pinv", to_json(d.witness.Pinv)},
                {"diagZero", to_json(d.diag_zero)}};
}

namespace {

Json certificate_json(const DiagonalizationCertificate& c) {
    return Json{{"eigenvalue", to_json(c.eigenvalue)}, {"P", to_json(c.witness.P)}, {"Pinv", to_json(c.witness.Pinv)}};
}

}  // namespace

Json to_json(const Classification& c) {
    Json j{{"verdict", to_string(c.verdict)}};
    if (c.scalar) j["lambda"] = to_json(*c.scalar);
    if (c.type_ii) {
        j["lambda"] = to_json(c.type_ii->lambda);
        j["A"] = to_json(c.type_ii->A);
        j["supertrace"] = to_json(c.type_ii->supertrace);
    }
    if (c.type_iii) j["certificate"] = certificate_json(*c.type_iii);
    return j;
}

Json to_json(const Decision& d) {
    Json j{{"answer", d.answer ? "YES" : "NO"}, {"reason", to_string(d.reason)}};
    j["classification"] = to_json(d.classification);
    if (!d.detail.empty()) j["detail"] = d.detail;
    if (!d.answer) {
        Json w = Json::object();
        const auto& c = d.classification;
        switch (d.reason) {
            case Reason::TypeI: w["lambda"] = to_json(*c.scalar); break;
            case Reason::TypeIISupertraceNonzero:
                if (c.type_ii) {
                    w["lambda"] = to_json(c.type_ii->lambda);
                    w["A"] = to_json(c.type_ii->A);
                    w["supertrace"] = to_json(c.type_ii->supertrace);
                }
                break;
            case Reason::TypeIII: w = certificate_json(*c.type_iii); break;
            case Reason::N2SpectralObstruction:
                w["squareDiagonalisable"] = d.square_certificate.has_value();
                if (d.matrix_certificate) w["matrixCertificate"] = certificate_json(*d.matrix_certificate);
                break;
            default: break;
        }
        j["witness"] = std::move(w);
    }
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError("expected a rational string, got " + j.dump());
}

Quaternion quaternion_from_json(const AlgebraParams& alg, const Json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("expected a quaternion [w, x, y, z], got " + j.dump());
    return Quaternion(alg, rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
                      rational_from_json(j[3]));
}

AlgebraParams algebra_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b")) throw ParseError("algebra needs fields a and b");
    return AlgebraParams::create(rational_from_json(j["a"]), rational_from_json(j["b"]));
}

QMatrix matrix_from_json(const Json& j, const std::optional<AlgebraParams>& fallback) try {
    if (!j.is_object() || !j.contains("entries")) throw ParseError("matrix needs an entries field");
    AlgebraParams alg = j.contains("algebra") ? algebra_from_json(j["algebra"]) : fallback.value_or(AlgebraParams());
    const Json& e = j["entries"];
    if (!e.is_array()) throw ParseError("entries must be an array of rows");
    std::size_t rows = e.size();
    std::size_t cols = rows == 0 ? 0 : e[0].size();
    if (j.contains("rows") && j["rows"].get<std::size_t>() != rows) throw ParseError("rows does not match entries");
    if (j.contains("cols") && j["cols"].get<std::size_t>() != cols) throw ParseError("cols does not match entries");
    QMatrix m(alg, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!e[r].is_array() || e[r].size() != cols) throw ParseError("ragged entries in row " + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = quaternion_from_json(alg, e[r][c]);
    }
    return m;
} catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix: ") + e.what());
}

TwoNilpotentDecomposition decomposition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("N1") || !j.contains("N2")) throw ParseError("decomposition needs N1 and N2");
    std::optional<AlgebraParams> alg;
    if (j.contains("algebra")) alg = algebra_from_json(j["algebra"]);
    TwoNilpotentDecomposition d;
    d.N1 = matrix_from_json(j["N1"], alg);
    d.N2 = matrix_from_json(j["N2"], alg);
    if (j.contains("P") && j.contains("Pinv")) {
        d.witness = SimilarityWitness{matrix_from_json(j["P"], alg), matrix_from_json(j["Pinv"], alg)};
    }
    if (j.contains("diagZero")) d.diag_zero = matrix_from_json(j["diagZero"], alg);
    return d;
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace qnil::io
