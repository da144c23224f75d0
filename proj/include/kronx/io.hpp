#pragma once

// Shared JSON matrix form: {"order": n, "field": ..., "terms": [[i, j, ...], ...]}
//   rational:       [i, j, num, den]
//   complex:        [i, j, re, im]
//   sqrt_rational:  [i, j, sign, num, den]   (sign * sqrt(num/den))
// Terms are written in (row, col) order. "field" is optional on input.

#include <string>
#include <variant>

#include <json.hpp>

#include "kronx/xsum.hpp"

namespace kronx::io {

using json = nlohmann::json;

json to_json(const XSum<Rational>& a);
json to_json(const XSum<SqrtRational>& a);
json to_json(const XSum<ComplexFloat>& a);

using AnyMatrix = std::variant<XSum<Rational>, XSum<SqrtRational>, XSum<ComplexFloat>>;

// throws DomainError on schema violations
AnyMatrix from_json(const json& j);
AnyMatrix read_matrix_file(const std::string& path);

XSum<ComplexFloat> as_complex(const AnyMatrix& m);

}  // namespace kronx::io
