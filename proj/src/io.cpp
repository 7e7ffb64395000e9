#include "cliffhopf/io.hpp"

namespace cliffhopf::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

} // namespace

Json to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  if (!j.is_string()) fail(where, "expected a rational string such as \"-3/4\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    fail(where, "expected " + std::to_string(rows) + " rows of " + std::to_string(cols) + " entries");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) fail(row_where, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = scalar_from_json(j[r][c], row_where + "[" + std::to_string(c) + "]");
  }
  return m;
}

Json to_json(const Multivector& x) {
  Json out = Json::object();
  for (const auto& [b, c] : x.terms()) out[blade_key(b)] = to_json(c);
  return out;
}

Multivector multivector_from_json(const Json& j, int dim, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object of blade keys");
  Multivector x(dim);
  for (const auto& [key, value] : j.items())
    x.add_term(parse_blade_key(key, dim), scalar_from_json(value, where + "[\"" + key + "\"]"));
  return x;
}

Json to_json(const Tensor2& t) {
  Json out = Json::array();
  for (const auto& [k, c] : t.terms()) out.push_back(Json::array({blade_key(k.first), blade_key(k.second), to_json(c)}));
  return out;
}

Tensor2 tensor_from_json(const Json& j, int dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of [key, key, scalar] triples");
  Tensor2 t(dim);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string item = where + "[" + std::to_string(i) + "]";
    const Json& e = j[i];
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
      fail(item, "expected [key, key, scalar]");
    try {
      t.add_term(parse_blade_key(e[0].get<std::string>(), dim), parse_blade_key(e[1].get<std::string>(), dim),
                 scalar_from_json(e[2], item + "[2]"));
    } catch (const ParseError& err) {
      fail(item, err.what());
    }
  }
  return t;
}

Json to_json(const Word& w) { return Json(w); }

Json to_json(const GradedElement& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) out.push_back(Json::array({to_json(w), to_json(c)}));
  return out;
}

Json parse_text(const std::string& text, const std::string& source_name) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(source_name + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": malformed JSON");
  }
}

} // namespace cliffhopf::io
