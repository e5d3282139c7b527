#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lckcert/transverse.hpp"

namespace lckcert {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Malformed input; the message names the line/column or the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Model file layout: name, description, dim, structure [[i, j, k, "p/q"], ...] (1-based, i < j,
/// [e_i, e_j] ∋ value·e_k), J (2n rows of 2n rationals, J e_i = column i), theta.
LieModel model_from_json(const Json& j);
LieModel parse_model_text(const std::string& text, const std::string& source = "<input>");
LieModel load_model_file(const std::string& path);
Json model_to_json(const LieModel& m);

Json parse_json_text(const std::string& text, const std::string& source);
std::string read_text_file(const std::string& path);

/// Rationals are strings; integers are also accepted on input.
Rational rational_from_json(const Json& j, const std::string& field);
Json rationals_to_json(const Vec<Rational>& v);
Vec<Rational> rationals_from_json(const Json& j, const std::string& field);
/// Comma-separated list, e.g. "0,0,-1,0" or "1/2,0".
Vec<Rational> parse_rational_list(const std::string& text);

Json gauss_to_json(const Gauss& z);  // [re, im]
Gauss gauss_from_json(const Json& j, const std::string& field);
Json matrix_to_json(const GMatrix& m);

/// Real homogeneous form: {"degree": k, "coefficients": [...]} over the lexicographic e-basis.
Json form_to_json(const GradedForm& a, int degree);
GradedForm form_from_json(int dim, const Json& j, const std::string& field);
/// Real current as its functional on e-coordinates: {"degree": k, "functional": [...]}.
Json current_to_json(const Current& t, const ComplexFrame& frame);
Current current_from_json(const ComplexFrame& frame, const Json& j, const std::string& field);

Json decomposable_to_json(const Decomposable& g);
Decomposable decomposable_from_json(const Json& j, const std::string& field);

Json validation_to_json(const ValidationReport& r);

}  // namespace lckcert
