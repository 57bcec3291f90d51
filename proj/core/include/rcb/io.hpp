#pragma once

#include <json.hpp>

#include "rcb/bundle.hpp"
#include "rcb/fit.hpp"
#include "rcb/transform.hpp"

// JSON interchange format.  Exact scalars serialize as strings "p/q"
// (decimal integers, optional sign, q > 0); floats as JSON numbers.  Parsers
// of the float backend also accept rational strings.

namespace rcb {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const Vector<Rational>& v);
Json to_json(const Vector<double>& v);
Json to_json(const Matrix<Rational>& m);
Json to_json(const Matrix<double>& m);
Json to_json(const Poly<Rational>& p);  // monomial -> coefficient map
Json to_json(const VectorQuadraticMap<Rational>& g);
Json to_json(const VectorQuadraticMap<double>& g);
Json to_json(const Circle<Rational>& c);
Json to_json(const Circle<double>& c);
Json to_json(const BundleDescriptor<Rational>& b);
Json to_json(const BundleDescriptor<double>& b);
Json to_json(const FractionalTransform<Rational>& t);
Json to_json(const FractionalTransform<double>& t);
Json to_json(const Synthesis& s);
Json to_json(const FitReport& r);

Rational rational_from_json(const Json& j);
double double_from_json(const Json& j);
Vector<Rational> rational_vector_from_json(const Json& j);
Vector<double> double_vector_from_json(const Json& j);
Matrix<Rational> rational_matrix_from_json(const Json& j);
Matrix<double> double_matrix_from_json(const Json& j);
VectorQuadraticMap<Rational> quadmap_from_json(const Json& j);
VectorQuadraticMap<double> quadmap_from_json_double(const Json& j);
Circle<Rational> circle_from_json(const Json& j);
Circle<double> circle_from_json_double(const Json& j);
BundleDescriptor<Rational> descriptor_from_json(const Json& j);
BundleDescriptor<double> descriptor_from_json_double(const Json& j);
FractionalTransform<Rational> transform_from_json(const Json& j);
FractionalTransform<double> transform_from_json_double(const Json& j);

Family family_from_name(const std::string& name);

}  // namespace rcb
