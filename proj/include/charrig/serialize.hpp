#pragma once

// JSON forms of cochains, chains, classes and the derived objects. Values
// are "p/q" strings keyed by the comma-joined vertex tuple; zero entries are
// omitted. nlohmann::json keeps object keys sorted, which is what makes the
// canonical report byte-stable.

#include "charrig/cochains.hpp"

#include "json.hpp"

namespace charrig {

using Json = nlohmann::json;

Json cochain_to_json(const Complex& x, const Cochain& c);
/// Throws ParseError for malformed documents and MismatchError for simplices
/// not in x.
Cochain cochain_from_json(const Complex& x, const Json& doc);

/// Integer chains use the same layout with ring "Z".
Json chain_to_json(const Complex& x, int degree, const IntVector& chain);
IntVector chain_from_json(const Complex& x, const Json& doc, int* degree = nullptr);

Json class_to_json(const Complex& x, const CohomologyClass& u);
Json rationals_to_json(const RatVector& v);
Json integers_to_json(const IntVector& v);

}  // namespace charrig
