#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lieclass/linalg.hpp"
#include "lieclass/matrix.hpp"
#include "lieclass/rational.hpp"

namespace lieclass {

enum class Level { lie_algebra, group };

inline std::string level_to_string(Level l) {
    return l == Level::lie_algebra ? "lie_algebra" : "group";
}

/// A real matrix representation given by generators: a Lie subalgebra of
/// gl(n,R) or a subgroup of Gl(n,R), depending on the level tag.
struct Representation {
    std::string name;
    std::size_t n = 0;
    Level level = Level::lie_algebra;
    std::vector<Matrix> generators;

    void validate() const {
        if (n == 0)
            throw ValidationError("dimension must be >= 1");
        if (generators.empty())
            throw ValidationError("generator list must be nonempty");
        for (std::size_t k = 0; k < generators.size(); ++k) {
            const Matrix& g = generators[k];
            if (!g.is_square() || g.rows() != n) {
                if (g.rows() != g.cols())
                    throw ValidationError("generator " + std::to_string(k) + " not square");
                throw ValidationError("generator " + std::to_string(k) + " has dimension " +
                                      std::to_string(g.rows()) + ", expected " + std::to_string(n));
            }
            if (level == Level::group && det(g) == 0)
                throw ValidationError("generator " + std::to_string(k) + " not invertible");
        }
    }
};

inline Rational entry_from_json(const nlohmann::json& e, std::size_t gen_index) {
    if (e.is_number_integer())
        return Rational(static_cast<long long>(e.get<long long>()));
    if (e.is_string())
        return parse_rational(e.get<std::string>());
    throw ValidationError("generator " + std::to_string(gen_index) +
                          ": entries must be integers or \"p/q\" strings");
}

/// Parses the standard input document:
/// {"name": str, "dimension": int, "level": "lie_algebra"|"group",
///  "generators": [[[entry,...],...],...]}, entries integer or "p/q".
inline Representation parse_representation(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ValidationError("document must be a JSON object");

    Representation rep;
    if (!doc.contains("name") || !doc["name"].is_string())
        throw ValidationError("missing or invalid field: name");
    rep.name = doc["name"].get<std::string>();

    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer() ||
        doc["dimension"].get<long long>() <= 0)
        throw ValidationError("missing or invalid field: dimension");
    rep.n = static_cast<std::size_t>(doc["dimension"].get<long long>());

    if (!doc.contains("level") || !doc["level"].is_string())
        throw ValidationError("missing or invalid field: level");
    const std::string level = doc["level"].get<std::string>();
    if (level == "lie_algebra") rep.level = Level::lie_algebra;
    else if (level == "group") rep.level = Level::group;
    else throw ValidationError("level must be \"lie_algebra\" or \"group\"");

    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw ValidationError("missing or invalid field: generators");
    std::size_t k = 0;
    for (const auto& gj : doc["generators"]) {
        if (!gj.is_array() || gj.empty())
            throw ValidationError("generator " + std::to_string(k) + " must be a nonempty 2d array");
        const std::size_t rows = gj.size();
        const std::size_t cols = gj.front().is_array() ? gj.front().size() : 0;
        if (cols == 0)
            throw ValidationError("generator " + std::to_string(k) + " must be a 2d array");
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            if (!gj[i].is_array() || gj[i].size() != cols)
                throw ValidationError("generator " + std::to_string(k) + " has ragged rows");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = entry_from_json(gj[i][j], k);
        }
        rep.generators.push_back(std::move(m));
        ++k;
    }
    rep.validate();
    return rep;
}

inline nlohmann::json representation_to_json(const Representation& rep) {
    nlohmann::json doc;
    doc["name"] = rep.name;
    doc["dimension"] = rep.n;
    doc["level"] = level_to_string(rep.level);
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : rep.generators) {
        nlohmann::json gm = nlohmann::json::array();
        for (std::size_t i = 0; i < g.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < g.cols(); ++j) {
                const Rational& e = g(i, j);
                if (boost::multiprecision::denominator(e) == 1 &&
                    boost::multiprecision::numerator(e) >= -1000000 &&
                    boost::multiprecision::numerator(e) <= 1000000)
                    row.push_back(static_cast<long long>(boost::multiprecision::numerator(e)));
                else
                    row.push_back(rational_to_string(e));
            }
            gm.push_back(std::move(row));
        }
        gens.push_back(std::move(gm));
    }
    doc["generators"] = std::move(gens);
    return doc;
}

} // namespace lieclass
