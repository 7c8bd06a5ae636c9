#include "amalgam/io.hpp"

#include <fstream>

#include "amalgam/errors.hpp"

namespace amalgam::io {

namespace {

Rational rational_field(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError("expected a rational string, got " + v.dump());
}

}  // namespace

json matrix_to_json(const Matrix<Rational>& m) {
    json entries = json::array();
    for (const auto& q : m.entries()) entries.push_back(to_string(q));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix<Rational> matrix_from_json(const json& j) {
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        std::vector<Rational> entries;
        for (const auto& e : j.at("entries")) entries.push_back(rational_field(e));
        return Matrix<Rational>(rows, cols, std::move(entries));
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

json int_matrix_to_json(const Matrix<std::int64_t>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        out.push_back(row);
    }
    return out;
}

json poly_to_json(const Poly& p) {
    json vars = json::array();
    if (p.vars()) {
        for (const auto& v : p.vars()->names()) vars.push_back(v);
    }
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        terms.push_back({{"exp", it->first}, {"coef", to_string(it->second)}});
    }
    return {{"vars", vars}, {"terms", terms}};
}

Poly poly_from_json(const json& j) {
    try {
        auto vars = make_vars(j.at("vars").get<std::vector<std::string>>());
        Poly p(vars);
        for (const auto& t : j.at("terms")) {
            p += Poly::monomial(vars, t.at("exp").get<Exponent>(), rational_field(t.at("coef")));
        }
        return p;
    } catch (const json::exception& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
}

std::vector<std::vector<Rational>> points_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("points file must be a JSON array");
    std::vector<std::vector<Rational>> pts;
    try {
        for (const auto& p : j) {
            std::vector<Rational> z;
            for (const auto& c : p.at("z")) z.push_back(rational_field(c));
            if (!pts.empty() && z.size() != pts.front().size()) throw ShapeError("points of unequal length");
            pts.push_back(std::move(z));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("points JSON: ") + e.what());
    }
    return pts;
}

json points_to_json(const std::vector<std::vector<Rational>>& pts) {
    json out = json::array();
    for (const auto& p : pts) {
        json z = json::array();
        for (const auto& c : p) z.push_back(to_string(c));
        out.push_back({{"z", z}});
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

}  // namespace amalgam::io
