#include "rcb/io.hpp"

#include <sstream>

namespace rcb {

namespace {

template <class S, class FromJson>
Vector<S> vector_from(const Json& j, FromJson&& from) {
    if (!j.is_array()) throw ParseError("expected an array of scalars");
    Vector<S> v;
    for (const auto& e : j) v.push_back(from(e));
    return v;
}

template <class S, class FromJson>
Matrix<S> matrix_from(const Json& j, FromJson&& from) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a matrix (array of rows)");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    Matrix<S> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = from(j[i][c]);
    }
    return m;
}

template <class S>
Json circle_to_json(const Circle<S>& c) {
    Json j;
    j["tangent"] = to_json(c.tangent);
    if (c.center)
        j["center"] = to_json(*c.center);
    else
        j["center"] = "infinity";
    return j;
}

template <class S, class VecFrom>
Circle<S> circle_from(const Json& j, VecFrom&& vec_from) {
    if (!j.contains("tangent") || !j.contains("center"))
        throw ParseError("circle record needs 'tangent' and 'center'");
    Circle<S> c;
    c.tangent = vec_from(j.at("tangent"));
    const Json& ctr = j.at("center");
    if (!(ctr.is_string() && ctr.get<std::string>() == "infinity")) c.center = vec_from(ctr);
    return c;
}

template <class S>
Json descriptor_to_json(const BundleDescriptor<S>& b) {
    return Json{{"side", family_name(b.side)}, {"imA", to_json(b.imA)}};
}

template <class S>
Json transform_to_json(const FractionalTransform<S>& t) {
    auto affine = [](const AffineMap<S>& a) {
        return Json{{"linear", to_json(a.linear)}, {"const", to_json(a.constant)}};
    };
    return Json{{"side", side_name(t.side)}, {"num", affine(t.num)}, {"den", affine(t.den)}};
}

Side side_from_json(const Json& j) {
    std::string s = j.get<std::string>();
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw ParseError("field 'side': expected \"left\" or \"right\", got \"" + s + "\"");
}

template <class S, class MatFrom, class VecFrom>
FractionalTransform<S> transform_from(const Json& j, MatFrom&& mat_from, VecFrom&& vec_from) {
    for (const char* key : {"side", "num", "den"})
        if (!j.contains(key))
            throw ParseError(std::string("transform record missing field '") + key + "'");
    auto affine = [&](const Json& a) {
        if (!a.contains("linear") || !a.contains("const"))
            throw ParseError("affine map needs 'linear' and 'const'");
        return AffineMap<S>{mat_from(a.at("linear")), vec_from(a.at("const"))};
    };
    FractionalTransform<S> t;
    t.side = side_from_json(j.at("side"));
    t.num = affine(j.at("num"));
    t.den = affine(j.at("den"));
    if (t.den.linear.is_zero() && is_zero_vector(t.den.constant))
        throw ParseError("transform denominator is identically zero");
    return t;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(to_json(x));
    return j;
}

Json to_json(const Vector<double>& v) {
    Json j = Json::array();
    for (double x : v) j.push_back(x);
    return j;
}

Json to_json(const Matrix<Rational>& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
    return j;
}

Json to_json(const Matrix<double>& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
    return j;
}

Json to_json(const Poly<Rational>& p) {
    Json j = Json::object();
    for (const auto& [mon, c] : p.terms()) {
        std::ostringstream key;
        for (std::size_t i = 0; i < mon.size(); ++i) {
            if (i) key << ",";
            key << mon[i];
        }
        j[key.str()] = to_string(c);
    }
    return j;
}

Json to_json(const VectorQuadraticMap<Rational>& g) {
    Json mats = Json::array();
    for (std::size_t k = 0; k < g.dimension(); ++k) mats.push_back(to_json(g.component(k)));
    return Json{{"n", g.dimension()}, {"matrices", mats}};
}

Json to_json(const VectorQuadraticMap<double>& g) {
    Json mats = Json::array();
    for (std::size_t k = 0; k < g.dimension(); ++k) mats.push_back(to_json(g.component(k)));
    return Json{{"n", g.dimension()}, {"matrices", mats}};
}

Json to_json(const Circle<Rational>& c) { return circle_to_json(c); }
Json to_json(const Circle<double>& c) { return circle_to_json(c); }
Json to_json(const BundleDescriptor<Rational>& b) { return descriptor_to_json(b); }
Json to_json(const BundleDescriptor<double>& b) { return descriptor_to_json(b); }
Json to_json(const FractionalTransform<Rational>& t) { return transform_to_json(t); }
Json to_json(const FractionalTransform<double>& t) { return transform_to_json(t); }

Json to_json(const Synthesis& s) {
    Json j;
    j["a"] = s.a ? to_json(*s.a) : Json(nullptr);
    j["gamma_prime"] = to_json(s.gamma_prime);
    j["mu"] = to_json(s.mu);
    j["radius"] = s.radius;
    return j;
}

Json to_json(const FitReport& r) {
    Json dirs = Json::array();
    for (const auto& d : r.directions) {
        Json jd;
        jd["direction"] = to_json(d.direction);
        jd["pole"] = d.pole;
        jd["passed"] = d.passed;
        jd["residual"] = d.residual;
        if (!d.pole) {
            Json fit;
            if (d.fit.is_line()) {
                fit["kind"] = "line";
                fit["direction"] = to_json(d.fit.plane_u);
            } else {
                fit["kind"] = "circle";
                fit["center"] = to_json(*d.fit.circle.center);
                fit["radius"] = d.fit.radius;
            }
            jd["fit"] = fit;
        }
        dirs.push_back(std::move(jd));
    }
    return Json{{"pass", r.pass}, {"max_residual", r.max_residual}, {"directions", dirs}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected an exact scalar string \"p/q\"");
}

double double_from_json(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_rational(j.get<std::string>()).get_d();
    throw ParseError("expected a numeric scalar");
}

Vector<Rational> rational_vector_from_json(const Json& j) {
    return vector_from<Rational>(j, rational_from_json);
}
Vector<double> double_vector_from_json(const Json& j) {
    return vector_from<double>(j, double_from_json);
}
Matrix<Rational> rational_matrix_from_json(const Json& j) {
    return matrix_from<Rational>(j, rational_from_json);
}
Matrix<double> double_matrix_from_json(const Json& j) {
    return matrix_from<double>(j, double_from_json);
}

namespace {

template <class S, class MatFrom>
VectorQuadraticMap<S> quadmap_from(const Json& j, MatFrom&& mat_from) {
    if (!j.contains("n") || !j.contains("matrices"))
        throw ParseError("quadratic map record needs 'n' and 'matrices'");
    const std::size_t n = j.at("n").get<std::size_t>();
    const Json& mats = j.at("matrices");
    if (!mats.is_array() || mats.size() != n)
        throw ParseError("field 'matrices': expected " + std::to_string(n) + " matrices");
    VectorQuadraticMap<S> g(n);
    const S half = S(1) / S(2);
    for (std::size_t k = 0; k < n; ++k) {
        Matrix<S> m = mat_from(mats[k]);
        if (m.rows() != n || m.cols() != n)
            throw ParseError("field 'matrices': component " + std::to_string(k) +
                             " is not " + std::to_string(n) + "x" + std::to_string(n));
        // Accept general matrices; only the symmetric part contributes.
        Matrix<S> sym = m + m.transposed();
        g.component(k) = half * sym;
    }
    return g;
}

}  // namespace

VectorQuadraticMap<Rational> quadmap_from_json(const Json& j) {
    return quadmap_from<Rational>(j, rational_matrix_from_json);
}
VectorQuadraticMap<double> quadmap_from_json_double(const Json& j) {
    return quadmap_from<double>(j, double_matrix_from_json);
}

Circle<Rational> circle_from_json(const Json& j) {
    return circle_from<Rational>(j, rational_vector_from_json);
}
Circle<double> circle_from_json_double(const Json& j) {
    return circle_from<double>(j, double_vector_from_json);
}

Family family_from_name(const std::string& name) {
    if (name == "left") return Family::left;
    if (name == "right") return Family::right;
    if (name == "both") return Family::both;
    throw ParseError("field 'side': expected left/right/both, got \"" + name + "\"");
}

namespace {

template <class S, class MatFrom>
BundleDescriptor<S> descriptor_from(const Json& j, MatFrom&& mat_from) {
    if (!j.contains("side") || !j.contains("imA"))
        throw ParseError("descriptor record needs 'side' and 'imA'");
    BundleDescriptor<S> b;
    b.side = family_from_name(j.at("side").get<std::string>());
    b.imA = mat_from(j.at("imA"));
    if (b.imA.rows() != 4 || b.imA.cols() != 4) throw ParseError("field 'imA': expected 4x4");
    for (std::size_t c = 0; c < 4; ++c)
        if (!is_zero(b.imA(0, c)))
            throw ParseError("field 'imA': images must be pure imaginary (row 0 nonzero)");
    return b;
}

}  // namespace

BundleDescriptor<Rational> descriptor_from_json(const Json& j) {
    return descriptor_from<Rational>(j, rational_matrix_from_json);
}
BundleDescriptor<double> descriptor_from_json_double(const Json& j) {
    return descriptor_from<double>(j, double_matrix_from_json);
}

FractionalTransform<Rational> transform_from_json(const Json& j) {
    return transform_from<Rational>(j, rational_matrix_from_json, rational_vector_from_json);
}
FractionalTransform<double> transform_from_json_double(const Json& j) {
    return transform_from<double>(j, double_matrix_from_json, double_vector_from_json);
}

}  // namespace rcb
