#include "gradr/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gradr/errors.hpp"

namespace gradr {

namespace {

Coeffs coeffs_from_json(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an integer list");
  Coeffs c;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + ": non-integer entry");
    c.push_back(v.get<std::int64_t>());
  }
  if (c.size() != n)
    throw ParseError(std::string(what) + ": expected " + std::to_string(n) + " entries, got " +
                     std::to_string(c.size()));
  return c;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

bool flat(const Json& j) {
  if (j.is_array())
    return std::all_of(j.begin(), j.end(), [](const Json& v) {
      return v.is_primitive() || (v.is_array() && v.size() <= 16 &&
                                  std::all_of(v.begin(), v.end(),
                                              [](const Json& w) { return w.is_primitive(); }));
    });
  if (j.is_object())
    return j.dump().size() <= 96 &&
           std::all_of(j.begin(), j.end(), [](const Json& v) {
             return v.is_primitive() || (v.is_array() && flat(v));
           });
  return j.is_primitive();
}

void dump_to(const Json& j, int indent, std::string& out) {
  if (flat(j) || j.empty()) {
    out += j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    dump_to(it.value(), indent + 2, out);
  }
  out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string dump_pretty(const Json& j) {
  std::string out;
  dump_to(j, 0, out);
  return out;
}

Json degree_to_json(const Degree& d) { return Json(d.coords); }

Degree degree_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("degree: expected an integer list");
  Degree d;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("degree: non-integer entry");
    d.coords.push_back(v.get<std::int64_t>());
  }
  return d;
}

Json presentation_to_json(const RingPresentation& p) {
  Json j;
  j["name"] = p.name;
  j["group"] = Json{{"factors", p.group.factors()}};
  Json basis = Json::array();
  for (const auto& b : p.basis)
    basis.push_back(Json{{"label", b.label}, {"order", b.order}, {"degree", b.degree.coords}});
  j["basis"] = std::move(basis);
  Json mul = Json::array();
  for (std::size_t i = 0; i < p.rank(); ++i)
    for (std::size_t k = i; k < p.rank(); ++k) mul.push_back(p.mul[i][k]);
  j["mul"] = std::move(mul);
  j["one"] = p.one;
  return j;
}

RingPresentation presentation_from_json(const Json& j) {
  try {
    RingPresentation p;
    p.name = field(j, "name").get<std::string>();
    const auto& factors = field(field(j, "group"), "factors");
    std::vector<std::int64_t> f;
    for (const auto& v : factors) f.push_back(v.get<std::int64_t>());
    try {
      p.group = GradingGroup(std::move(f));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
    const auto& basis = field(j, "basis");
    if (!basis.is_array()) throw ParseError("basis: expected a list");
    for (const auto& b : basis)
      p.basis.push_back({field(b, "label").get<std::string>(),
                         field(b, "order").get<std::int64_t>(),
                         degree_from_json(field(b, "degree"))});
    const std::size_t n = p.basis.size();
    const auto& mul = field(j, "mul");
    if (!mul.is_array() || mul.size() != n * (n + 1) / 2)
      throw ParseError("mul: expected " + std::to_string(n * (n + 1) / 2) +
                       " coefficient vectors (upper triangle)");
    p.mul.assign(n, std::vector<Coeffs>(n));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i; k < n; ++k) {
        p.mul[i][k] = coeffs_from_json(mul[idx++], n, "mul entry");
        p.mul[k][i] = p.mul[i][k];
      }
    p.one = coeffs_from_json(field(j, "one"), n, "one");
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("ring file: ") + e.what());
  }
}

RingPresentation read_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return presentation_from_json(j);
}

void write_presentation(const RingPresentation& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << dump_pretty(presentation_to_json(p)) << '\n';
}

Json elem_to_json(const Ring& ring, Elem x) { return Json(ring.coeffs(x)); }

Elem elem_from_json(const Ring& ring, const Json& j) {
  return ring.from_coeffs(coeffs_from_json(j, ring.rank(), "element"));
}

Json ideal_to_json(const IdealSet& I) {
  Json j = Json::array();
  for (Elem x : I.elements()) j.push_back(I.ring()->coeffs(x));
  return j;
}

std::vector<Elem> parse_element_list(const Ring& ring, const std::string& text) {
  std::vector<Elem> out;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("element list: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("element list: expected a list");
    for (const auto& v : j) out.push_back(elem_from_json(ring, v));
    return out;
  }
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    if (group.find_first_not_of(" \t") == std::string::npos) continue;
    Coeffs c;
    std::stringstream parts(group);
    std::string part;
    while (std::getline(parts, part, ',')) {
      try {
        c.push_back(std::stoll(part));
      } catch (const std::exception&) {
        throw ParseError("element list: bad integer '" + part + "'");
      }
    }
    if (c.size() != ring.rank())
      throw ParseError("element list: expected " + std::to_string(ring.rank()) +
                       " coefficients per element");
    out.push_back(ring.from_coeffs(c));
  }
  return out;
}

Json radical_to_json(const RadicalComputation& rc) {
  const Ring& R = *rc.ideal.ring();
  Json exps = Json::array();
  for (const auto& [a, n] : rc.exponent_map)
    exps.push_back(Json{{"element", R.coeffs(a)}, {"exponent", n}});
  return Json{{"ideal", ideal_to_json(rc.ideal)},
              {"radical", ideal_to_json(rc.radical)},
              {"improper_input", rc.improper_input},
              {"exponent_map", std::move(exps)}};
}

Json certificate_to_json(const RpCertificate& cert) {
  const Ring& R = *cert.ideal.ring();
  Json j;
  j["ideal"] = ideal_to_json(cert.ideal);
  j["status"] = cert.radically_principal ? "RadicallyPrincipal" : "Not";
  j["witness"] = cert.witness ? Json(R.coeffs(*cert.witness)) : Json();
  j["witness_in_ideal"] = cert.witness_in_ideal ? Json(R.coeffs(*cert.witness_in_ideal)) : Json();
  Json all = Json::array();
  for (Elem c : cert.all_witnesses) all.push_back(R.coeffs(c));
  j["all_witnesses"] = std::move(all);
  j["radical"] = radical_to_json(cert.radical);
  return j;
}

Poly parse_poly(const RingPtr& ring, const Degree& degX, const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("polynomial: expected a list of [exponent, coeffs]");
  Poly f(ring, degX);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
        term[0].get<std::int64_t>() < 0)
      throw ParseError("polynomial: each term must be [exponent, coefficient-vector]");
    const auto k = static_cast<std::uint32_t>(term[0].get<std::int64_t>());
    f.set(k, ring->add(f.coeff(k), elem_from_json(*ring, term[1])));
  }
  return f;
}

Json poly_to_json(const Poly& f) {
  Json j = Json::array();
  for (const auto& [k, c] : f.terms()) j.push_back(Json::array({k, f.ring()->coeffs(c)}));
  return j;
}

}  // namespace gradr
