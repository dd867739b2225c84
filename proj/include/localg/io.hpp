#pragma once

// JSON encodings of every domain type. Rationals are "p/q" strings, values
// are {"scalar": r} or {"mat2": [a, b, c, d]}; the remaining schemas are
// documented next to each encoder in io.cpp and in the README.

#include "json.hpp"

#include "localg/local_fun.hpp"
#include "localg/regions.hpp"
#include "localg/sing_sets.hpp"
#include "localg/terms.hpp"
#include "localg/value.hpp"

namespace localg {

using nlohmann::json;

json encode(const Rational& r);
json encode(const Value& v);
json encode(const MultiIndex& p);
json encode(const SmoothGrade& g);
json encode(const PolyTerm& t);
json encode(const Point& p);
json encode_points(std::span<const Point> pts);
json encode(const OpenBox& b);
json encode(const SingSet& s);
json encode(const SFamily& f);
json encode(const Chart& c);
json encode(const LocalFun& f);
json encode(const CompatReport& r);

// Decoders throw ParseError on malformed input.
Rational decode_rational(const json& j);
Value decode_value(const json& j);
MultiIndex decode_multi_index(const json& j);
SmoothGrade decode_grade(const json& j);
PolyTerm decode_term(const json& j);
Point decode_point(const json& j);
OpenBox decode_box(const json& j);
SingSet decode_sing_set(const json& j);
SFamily decode_family(const json& j);
LocalFun decode_local_fun(const json& j);

} // namespace localg
