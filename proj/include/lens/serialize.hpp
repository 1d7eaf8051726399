#pragma once

#include <json.hpp>

#include "lens/covers.hpp"
#include "lens/fillings.hpp"
#include "lens/lattice.hpp"
#include "lens/slices.hpp"
#include "lens/tight.hpp"

namespace lens {

// Insertion-ordered so the emitted text is stable.
using Json = nlohmann::ordered_json;

// Integers are decimal strings, rationals {"num","den"} with den > 0.
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const NegCFrac& cf);
Json to_json(const CoverSpec& c);
Json to_json(const LiftVerdict& v);
Json to_json(const SliceDecomposition& dec);
Json to_json(const FillingReport& r);

CoverSpec cover_spec_from_json(const Json& j);
LiftVerdict lift_verdict_from_json(const Json& j);
FillingReport filling_report_from_json(const Json& j);

}  // namespace lens
