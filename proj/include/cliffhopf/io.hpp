#pragma once

#include "cliffhopf/clifford.hpp"
#include "cliffhopf/tensor_shuffle.hpp"

#include <json.hpp>

#include <string>

namespace cliffhopf::io {

using Json = nlohmann::json;

/// Scalars are "p/q" strings; integers are also accepted on input.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& where);

/// Rows of scalar strings.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

/// Object mapping blade keys ("" for the unit, "0,2", ...) to scalars.
Json to_json(const Multivector& x);
Multivector multivector_from_json(const Json& j, int dim, const std::string& where);

/// Array of [key_a, key_b, scalar] triples.
Json to_json(const Tensor2& t);
Tensor2 tensor_from_json(const Json& j, int dim, const std::string& where);

/// Words are integer arrays; graded elements are arrays of [word, scalar].
Json to_json(const Word& w);
Json to_json(const GradedElement& x);

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_text(const std::string& text, const std::string& source_name);

} // namespace cliffhopf::io
