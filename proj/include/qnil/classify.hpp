#pragma once

#include "qnil/conjugacy.hpp"
#include "qnil/qmatrix.hpp"
#include "qnil/search.hpp"
#include "qnil/spectral.hpp"

#include <optional>
#include <string>

namespace qnil {

enum class Verdict { Zero, TypeI, TypeII, TypeIII, Generic };

/// M = lambda I + c r^T with lambda rational and c r^T of rank one.
struct TypeIIData {
    Rational lambda;
    QMatrix A;
    QVector column;  // c, first nonzero entry 1
    QVector row;     // r
    /// Eigenvalue of A on its image: A c = c q_a, q_a = r . c
    Quaternion image_eigenvalue;
    /// Class of n lambda + q_a.
    ConjClass supertrace;

    bool reconstructs(const QMatrix& m) const;
};

struct Classification {
    Verdict verdict = Verdict::Generic;
    std::optional<Rational> scalar;               // TypeI
    std::optional<TypeIIData> type_ii;            // TypeII
    std::optional<DiagonalizationCertificate> type_iii;  // TypeIII
};

enum class Reason { TraceNonzero, TypeI, TypeIISupertraceNonzero, TypeIII, N2SpectralObstruction, Yes };

struct Decision {
    bool answer = false;
    Reason reason = Reason::Yes;
    Classification classification;
    /// Size-two spectral data: certificate for M^2 when it exists, and for M when it exists.
    std::optional<DiagonalizationCertificate> square_certificate;
    std::optional<DiagonalizationCertificate> matrix_certificate;
    std::string detail;
};

std::string to_string(Verdict v);
std::string to_string(Reason r);

/// Supertrace n lambda + str(A) of lambda I + A for rank-one A.
ConjClass supertrace(const Rational& lambda, const QMatrix& a);

std::optional<Rational> detect_type_I(const QMatrix& m);
std::optional<TypeIIData> detect_type_II(const QMatrix& m);
std::optional<DiagonalizationCertificate> detect_type_III(const QMatrix& m, const SearchConfig& cfg = {});

/// Detectors applied in the order Zero, TypeI, TypeII, TypeIII.
Classification classify(const QMatrix& m, const SearchConfig& cfg = {});

Decision is_sum_of_two_nilpotents(const QMatrix& m, const SearchConfig& cfg = {});

}  // namespace qnil
