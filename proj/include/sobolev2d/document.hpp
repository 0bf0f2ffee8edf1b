#ifndef SOBOLEV2D_DOCUMENT_HPP
#define SOBOLEV2D_DOCUMENT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sobolev2d/bipoly.hpp"
#include "sobolev2d/matrix.hpp"
#include "sobolev2d/product_basis.hpp"
#include "sobolev2d/rational.hpp"
#include "sobolev2d/sobolev.hpp"

namespace sobolev2d {

inline constexpr const char* kToolName = "sobolev2d";
inline constexpr const char* kToolVersion = "1.0.0";

/// Malformed or inconsistent basis file.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DocumentDegree {
    int n = 0;
    /// Canonical representatives S_0^n .. S_n^n.
    std::vector<BiPoly> basis;
    /// Corner-shifted basis.
    std::vector<BiPoly> shifted;
    RationalMatrix h_hat;
    RationalMatrix coupling;
    RationalMatrix d;
    RationalMatrix c;

    friend bool operator==(const DocumentDegree&, const DocumentDegree&) = default;
};

/// Persisted form of a generated basis. degrees[n] describes degree n;
/// degree 0 holds the constant 1 and empty matrices.
struct BasisDocument {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    FamilyKind family = FamilyKind::Laguerre;
    Rational alpha;
    Rational beta;
    Corner corner;
    Rational lambda{1};
    int max_degree = 0;
    std::vector<DocumentDegree> degrees;

    ProductWeight weight() const;

    friend bool operator==(const BasisDocument&, const BasisDocument&) = default;
};

BasisDocument make_document(const SobolevBasis& basis);

nlohmann::ordered_json polynomial_to_json(const BiPoly& f);
BiPoly polynomial_from_json(const nlohmann::ordered_json& j, int degree);
nlohmann::ordered_json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const BasisDocument& doc);
/// Throws DocumentError on missing fields, bad rationals or shapes, and
/// ParameterError if the stored weight parameters are invalid.
BasisDocument from_json(const nlohmann::ordered_json& j);

/// Pretty-printed JSON with a trailing newline; stable key order.
std::string serialize(const BasisDocument& doc);
BasisDocument parse_document(const std::string& text);

void write_document(const BasisDocument& doc, const std::string& path);
BasisDocument read_document(const std::string& path);

}  // namespace sobolev2d

#endif  // SOBOLEV2D_DOCUMENT_HPP
