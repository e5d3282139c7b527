#include "lckcert/io.hpp"

#include <fstream>
#include <sstream>

namespace lckcert {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

const Json& require(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) field_error(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

int int_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  return j.get<int>();
}

std::string child(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset → line/column.
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) field_error(field, "expected a rational string such as \"1/2\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    field_error(field, e.what());
  }
}

Json rationals_to_json(const Vec<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vec<Rational> rationals_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array");
  Vec<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], child(field, i)));
  return out;
}

Vec<Rational> parse_rational_list(const std::string& text) {
  Vec<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in list \"" + text + "\"");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

LieModel model_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("model: expected a JSON object");
  LieModel m;
  const auto& name = require(j, "name", "");
  if (!name.is_string()) field_error("name", "expected a string");
  m.name = name.get<std::string>();
  if (auto it = j.find("description"); it != j.end()) {
    if (!it->is_string()) field_error("description", "expected a string");
    m.description = it->get<std::string>();
  }
  m.dim = int_from_json(require(j, "dim", ""), "dim");
  if (m.dim < 2 || m.dim % 2 != 0 || m.dim > kMaxDim)
    field_error("dim", "must be even and between 2 and " + std::to_string(kMaxDim));

  const auto& st = require(j, "structure", "");
  if (!st.is_array()) field_error("structure", "expected an array");
  for (std::size_t s = 0; s < st.size(); ++s) {
    const auto f = child("structure", s);
    const auto& e = st[s];
    if (!e.is_array() || e.size() != 4) field_error(f, "expected [i, j, k, \"p/q\"]");
    const int i = int_from_json(e[0], f + "[0]");
    const int jj = int_from_json(e[1], f + "[1]");
    const int k = int_from_json(e[2], f + "[2]");
    for (int idx : {i, jj, k})
      if (idx < 1 || idx > m.dim) field_error(f, "index out of range 1.." + std::to_string(m.dim));
    if (i >= jj) field_error(f, "requires i < j");
    m.structure.push_back({i - 1, jj - 1, k - 1, rational_from_json(e[3], f + "[3]")});
  }

  const auto& jm = require(j, "J", "");
  if (!jm.is_array() || static_cast<int>(jm.size()) != m.dim) field_error("J", "expected dim rows");
  m.J = QMatrix(m.dim, m.dim);
  for (int r = 0; r < m.dim; ++r) {
    const auto row = rationals_from_json(jm[r], child("J", r));
    if (static_cast<int>(row.size()) != m.dim) field_error(child("J", r), "expected dim entries");
    for (int c = 0; c < m.dim; ++c) m.J(r, c) = row[c];
  }

  m.theta = rationals_from_json(require(j, "theta", ""), "theta");
  if (static_cast<int>(m.theta.size()) != m.dim) field_error("theta", "expected dim entries");
  return m;
}

LieModel parse_model_text(const std::string& text, const std::string& source) {
  try {
    return model_from_json(parse_json_text(text, source));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(source, 0) == 0) throw;
    throw ParseError(source + ": " + msg);
  }
}

LieModel load_model_file(const std::string& path) { return parse_model_text(read_text_file(path), path); }

Json model_to_json(const LieModel& m) {
  Json j;
  j["name"] = m.name;
  j["description"] = m.description;
  j["dim"] = m.dim;
  Json st = Json::array();
  for (const auto& c : m.structure) st.push_back({c.i + 1, c.j + 1, c.k + 1, to_string(c.value)});
  j["structure"] = st;
  Json jm = Json::array();
  for (std::size_t r = 0; r < m.J.rows(); ++r) {
    Vec<Rational> row;
    for (std::size_t c = 0; c < m.J.cols(); ++c) row.push_back(m.J(r, c));
    jm.push_back(rationals_to_json(row));
  }
  j["J"] = jm;
  j["theta"] = rationals_to_json(m.theta);
  return j;
}

Json gauss_to_json(const Gauss& z) { return Json::array({to_string(z.re()), to_string(z.im())}); }

Gauss gauss_from_json(const Json& j, const std::string& field) {
  if (j.is_array() && j.size() == 2)
    return Gauss(rational_from_json(j[0], field + "[0]"), rational_from_json(j[1], field + "[1]"));
  return Gauss(rational_from_json(j, field));
}

Json matrix_to_json(const GMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(gauss_to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json form_to_json(const GradedForm& a, int k) {
  if (!a.is_homogeneous(k)) throw std::invalid_argument("form_to_json: form is not homogeneous");
  if (!a.is_real()) throw std::invalid_argument("form_to_json: form is not real");
  return {{"degree", k}, {"coefficients", rationals_to_json(a.real_component(k))}};
}

GradedForm form_from_json(int dim, const Json& j, const std::string& field) {
  const int k = int_from_json(require(j, "degree", field), field + ".degree");
  if (k < 0 || k > dim) field_error(field + ".degree", "out of range");
  const auto c = rationals_from_json(require(j, "coefficients", field), field + ".coefficients");
  if (c.size() != ExteriorBasis::get(dim).size(k)) field_error(field + ".coefficients", "wrong length for degree");
  return GradedForm::homogeneous(dim, k, c);
}

Json current_to_json(const Current& t, const ComplexFrame& frame) {
  Vec<Rational> f;
  for (const auto& c : t.real_basis_functional(frame)) {
    if (!c.is_real()) throw std::invalid_argument("current_to_json: current is not real");
    f.push_back(c.re());
  }
  return {{"degree", t.degree()}, {"functional", rationals_to_json(f)}};
}

Current current_from_json(const ComplexFrame& frame, const Json& j, const std::string& field) {
  const int k = int_from_json(require(j, "degree", field), field + ".degree");
  if (k < 0 || k > frame.dim()) field_error(field + ".degree", "out of range");
  const auto f = rationals_from_json(require(j, "functional", field), field + ".functional");
  if (f.size() != ExteriorBasis::get(frame.dim()).size(k)) field_error(field + ".functional", "wrong length for degree");
  return Current::from_real_functional(frame, k, f);
}

Json decomposable_to_json(const Decomposable& g) {
  Json out = Json::array();
  for (const auto& a : g.alphas) {
    Json v = Json::array();
    for (const auto& z : a) v.push_back(gauss_to_json(z));
    out.push_back(v);
  }
  return out;
}

Decomposable decomposable_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of alphas");
  Decomposable g;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) field_error(child(field, i), "expected an array");
    Vec<Gauss> v;
    for (std::size_t a = 0; a < j[i].size(); ++a) v.push_back(gauss_from_json(j[i][a], child(child(field, i), a)));
    g.alphas.push_back(std::move(v));
  }
  return g;
}

Json validation_to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

}  // namespace lckcert
