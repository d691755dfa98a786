#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "circlespace/circle.hpp"
#include "circlespace/fibration.hpp"
#include "circlespace/foliation.hpp"
#include "circlespace/moebius.hpp"

namespace circlespace::io {

using nlohmann::json;

// Quaternions are [w, x, y, z], complex numbers [re, im]. Readers throw
// Error{ParseError} on malformed input.
json to_json(const Quaternion& q);
json to_json(Complex c);
json to_json(const CVector4& v);
json to_json(const Bivector& b);
json to_json(const WVector& w);
json to_json(const CircleRep& k);
json to_json(const QMatrix2& m);
json to_json(const WIsometry& g);
json to_json(const FibrationCurve& c);
json to_json(const FibrationReport& r);
json to_json(const Normalization& n);
json to_json(const Leaf& l);

Quaternion quaternion_from(const json& j);
Complex complex_from(const json& j);
Bivector bivector_from(const json& j);
WVector wvector_from(const json& j);
QMatrix2 qmatrix_from(const json& j);
WIsometry wisometry_from(const json& j);
FibrationCurve curve_from(const json& j);
Leaf leaf_from(const json& j);

json parse(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

// "w,x,y,z" (commas or whitespace).
Quaternion parse_quaternion(const std::string& text);

}  // namespace circlespace::io
