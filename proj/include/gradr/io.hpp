#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "gradr/poly.hpp"

namespace gradr {

using Json = nlohmann::ordered_json;

/// Ring definition document: name, group.factors, basis [{label, order,
/// degree}], mul as the upper triangle (i <= j) row-major, one.
/// Indented JSON with arrays of scalars kept on one line.
std::string dump_pretty(const Json& j);

Json presentation_to_json(const RingPresentation& p);
/// Throws ParseError on malformed input. Does not validate ring axioms.
RingPresentation presentation_from_json(const Json& j);

RingPresentation read_presentation(const std::filesystem::path& path);
void write_presentation(const RingPresentation& p, const std::filesystem::path& path);

Json elem_to_json(const Ring& ring, Elem x);
Elem elem_from_json(const Ring& ring, const Json& j);
Json degree_to_json(const Degree& d);
Degree degree_from_json(const Json& j);

/// Canonical element list as sorted coefficient vectors.
Json ideal_to_json(const IdealSet& I);
/// Generator literal: JSON list of coefficient vectors, or the shorthand
/// "1,0,0;0,1,0".
std::vector<Elem> parse_element_list(const Ring& ring, const std::string& text);

Json radical_to_json(const RadicalComputation& rc);
Json certificate_to_json(const RpCertificate& cert);

/// Polynomial literal: list of [exponent, coefficient-vector] pairs.
Poly parse_poly(const RingPtr& ring, const Degree& degX, const std::string& text);
Json poly_to_json(const Poly& f);

}  // namespace gradr
