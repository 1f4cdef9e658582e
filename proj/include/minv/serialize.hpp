#ifndef MINV_SERIALIZE_HPP
#define MINV_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "minv/construct.hpp"
#include "minv/group.hpp"
#include "minv/poly.hpp"
#include "minv/report.hpp"
#include "minv/verify.hpp"

namespace minv {

using Json = nlohmann::ordered_json;

// Polynomial wire format, bit-exact for golden tests:
//   { "p": int, "nvars": int, "terms": [ [coeff, [e1..en]], ... ] }
// with terms in canonical (graded lex, highest first) order.
Json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const Json& j);

// { "p": int, "n": int, "generators": [[row..]..],
//   "block": { "m": int, "g1": [..], "g2": [..] }? }
Json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const Json& j);

Json provenance_to_json(const Provenance& prov);
Json presentation_to_json(const InvariantPresentation& pres, bool include_generators);
Json certificate_to_json(const VerificationCertificate& cert);
Json report_to_json(const NoncollapseReport& report);

// CLI emission documents for the generator families.
Json dickson_document(int n, std::uint32_t p);
Json euler_document(int n, std::uint32_t p);

// Canonical byte form used for files and golden comparisons.
std::string dump_document(const Json& j);

} // namespace minv

#endif
