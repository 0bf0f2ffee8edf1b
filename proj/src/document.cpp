#include "sobolev2d/document.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "sobolev2d/errors.hpp"

namespace sobolev2d {

using json = nlohmann::ordered_json;

namespace {

Rational rational_from_json(const json& j, const std::string& what)
{
    if (!j.is_string()) throw DocumentError(what + ": expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw DocumentError(what + ": " + e.what());
    }
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw DocumentError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::string string_field(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_string()) throw DocumentError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<BiPoly> polynomials_from_json(const json& j, int n, const char* key)
{
    const json& arr = field(j, key);
    if (!arr.is_array()) throw DocumentError(std::string("field '") + key + "' must be an array");
    std::vector<BiPoly> out;
    for (const auto& p : arr) out.push_back(polynomial_from_json(p, n));
    return out;
}

json polynomials_to_json(const std::vector<BiPoly>& ps)
{
    json arr = json::array();
    for (const auto& p : ps) arr.push_back(polynomial_to_json(p));
    return arr;
}

}  // namespace

ProductWeight BasisDocument::weight() const
{
    return ProductWeight(WeightFamily(family, alpha), WeightFamily(family, beta), corner);
}

BasisDocument make_document(const SobolevBasis& basis)
{
    BasisDocument doc;
    doc.family = basis.weight.kind();
    doc.alpha = basis.weight.alpha();
    doc.beta = basis.weight.beta();
    doc.corner = basis.weight.corner();
    doc.lambda = basis.lambda;
    doc.max_degree = basis.max_degree;

    DocumentDegree zero;
    zero.basis = {BiPoly::constant(1)};
    zero.shifted = basis.shifted.at(0);
    doc.degrees.push_back(std::move(zero));
    for (const auto& block : basis.blocks) {
        DocumentDegree deg;
        deg.n = block.degree;
        deg.basis = block.basis;
        deg.shifted = basis.shifted.at(static_cast<std::size_t>(block.degree));
        deg.h_hat = block.h_hat;
        deg.coupling = block.coupling;
        deg.d = block.d;
        deg.c = block.c;
        doc.degrees.push_back(std::move(deg));
    }
    return doc;
}

json polynomial_to_json(const BiPoly& f)
{
    json arr = json::array();
    for (const auto& t : f.terms()) {
        json term;
        term["i"] = t.i;
        term["j"] = t.j;
        term["coeff"] = t.coeff.str();
        arr.push_back(std::move(term));
    }
    return arr;
}

BiPoly polynomial_from_json(const json& j, int degree)
{
    if (!j.is_array()) throw DocumentError("polynomial must be an array of terms");
    BiPoly f(degree);
    for (const auto& t : j) {
        const int i = int_field(t, "i");
        const int jj = int_field(t, "j");
        if (i < 0 || jj < 0 || i + jj > degree)
            throw DocumentError("term x^" + std::to_string(i) + " y^" + std::to_string(jj) + " exceeds degree " +
                                std::to_string(degree));
        f.add_to(i, jj, rational_from_json(field(t, "coeff"), "coeff"));
    }
    return f;
}

json matrix_to_json(const RationalMatrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const json& j)
{
    if (!j.is_array()) throw DocumentError("matrix must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j.at(r);
        if (!row.is_array() || row.size() != cols) throw DocumentError("matrix rows must be arrays of equal length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(row.at(c), "matrix entry");
    }
    return m;
}

json to_json(const BasisDocument& doc)
{
    json meta;
    meta["tool"] = doc.tool;
    meta["version"] = doc.version;
    meta["family"] = to_string(doc.family);
    meta["alpha"] = doc.alpha.str();
    meta["beta"] = doc.beta.str();
    meta["corner"] = json::array({doc.corner.x.str(), doc.corner.y.str()});
    meta["lambda"] = doc.lambda.str();
    meta["max_degree"] = doc.max_degree;

    json degrees = json::array();
    for (const auto& deg : doc.degrees) {
        json d;
        d["n"] = deg.n;
        d["basis"] = polynomials_to_json(deg.basis);
        d["shifted"] = polynomials_to_json(deg.shifted);
        d["h_hat"] = matrix_to_json(deg.h_hat);
        d["coupling"] = matrix_to_json(deg.coupling);
        d["D"] = matrix_to_json(deg.d);
        d["C"] = matrix_to_json(deg.c);
        degrees.push_back(std::move(d));
    }

    json out;
    out["metadata"] = std::move(meta);
    out["degrees"] = std::move(degrees);
    return out;
}

BasisDocument from_json(const json& j)
{
    BasisDocument doc;
    const json& meta = field(j, "metadata");
    doc.tool = string_field(meta, "tool");
    doc.version = string_field(meta, "version");
    try {
        doc.family = parse_family_kind(string_field(meta, "family"));
    } catch (const ParameterError& e) {
        throw DocumentError(e.what());
    }
    doc.alpha = rational_from_json(field(meta, "alpha"), "alpha");
    doc.beta = rational_from_json(field(meta, "beta"), "beta");
    const json& corner = field(meta, "corner");
    if (!corner.is_array() || corner.size() != 2) throw DocumentError("corner must be a pair");
    doc.corner = {rational_from_json(corner.at(0), "corner"), rational_from_json(corner.at(1), "corner")};
    doc.lambda = rational_from_json(field(meta, "lambda"), "lambda");
    if (doc.lambda.sign() <= 0) throw DocumentError("lambda must be positive");
    doc.max_degree = int_field(meta, "max_degree");
    if (doc.max_degree < 1) throw DocumentError("max_degree must be at least 1");

    const json& degrees = field(j, "degrees");
    if (!degrees.is_array() || static_cast<int>(degrees.size()) != doc.max_degree + 1)
        throw DocumentError("degrees must list degrees 0.." + std::to_string(doc.max_degree));
    for (std::size_t idx = 0; idx < degrees.size(); ++idx) {
        const json& d = degrees.at(idx);
        DocumentDegree deg;
        deg.n = int_field(d, "n");
        if (deg.n != static_cast<int>(idx)) throw DocumentError("degrees out of order at position " + std::to_string(idx));
        deg.basis = polynomials_from_json(d, deg.n, "basis");
        deg.shifted = polynomials_from_json(d, deg.n, "shifted");
        if (deg.basis.size() != idx + 1 || deg.shifted.size() != idx + 1)
            throw DocumentError("degree " + std::to_string(idx) + " must hold " + std::to_string(idx + 1) +
                                " polynomials");
        deg.h_hat = matrix_from_json(field(d, "h_hat"));
        deg.coupling = matrix_from_json(field(d, "coupling"));
        deg.d = matrix_from_json(field(d, "D"));
        deg.c = matrix_from_json(field(d, "C"));
        doc.degrees.push_back(std::move(deg));
    }
    doc.weight();  // validates the parameters
    return doc;
}

std::string serialize(const BasisDocument& doc) { return to_json(doc).dump(2) + "\n"; }

BasisDocument parse_document(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
    return from_json(j);
}

void write_document(const BasisDocument& doc, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << serialize(doc);
    if (!out) throw std::runtime_error("failed writing " + path);
}

BasisDocument read_document(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

}  // namespace sobolev2d
