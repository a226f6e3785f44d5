// gradr: analyze finite commutative graded rings and certify their ideal
// structure from the command line.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gradr/constructions.hpp"
#include "gradr/corpus.hpp"
#include "gradr/errors.hpp"
#include "gradr/io.hpp"
#include "gradr/poly.hpp"
#include "gradr/report.hpp"
#include "gradr/suite.hpp"

namespace {

using namespace gradr;

enum Exit : int { kOk = 0, kTheorem = 1, kPrecondition = 2, kIo = 3, kCap = 4 };

struct Common {
  std::size_t cap = kDefaultCap;
  bool json = false;
  std::string out;
};

RingPtr load_ring(const std::string& path, std::size_t cap) {
  return Ring::create(read_presentation(path), cap);
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << dump_pretty(j) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParseError("cannot write " + out);
  f << dump_pretty(j) << '\n';
}

Degree parse_degree(const RingPtr& ring, const std::string& text) {
  if (text.empty()) return ring->group().default_indeterminate_degree();
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("degree: ") + e.what());
  }
  return ring->group().reduce(degree_from_json(j));
}

// validate

int cmd_validate(const std::string& path, const Common& c) {
  const auto p = read_presentation(path);
  const auto report = validate(p, c.cap);
  if (c.json) {
    Json v = Json::array();
    for (const auto& x : report.violations)
      v.push_back(Json{{"axiom", x.axiom}, {"indices", x.indices}, {"detail", x.detail}});
    emit(Json{{"ring", p.name}, {"valid", report.ok()}, {"violations", v}}, c.out);
  } else if (report.ok()) {
    std::cout << p.name << ": valid, " << *element_count(p, c.cap) << " elements\n";
  } else {
    std::cout << p.name << ": invalid\n" << report.to_string();
  }
  return report.ok() ? kOk : kPrecondition;
}

// analyze

int cmd_analyze(const std::string& path, const std::string& ideal, const Common& c) {
  const auto ring = load_ring(path, c.cap);
  if (!ideal.empty()) {
    const auto gens = parse_element_list(*ring, ideal);
    const auto I = ideal_from_arbitrary_gens(ring, gens);
    RadicalCache cache(ring);
    const auto j = analyze_ideal(I, cache);
    emit(j, c.out);
    std::cerr << ring->name() << ": ideal of " << I.size() << " elements, "
              << (j["graded"].get<bool>() ? "graded" : "not graded") << '\n';
    return kOk;
  }
  RingAnalysis a(ring);
  const auto j = analyze_ring(a);
  emit(j, c.out);
  const auto& f = j["flags"];
  std::cerr << std::boolalpha << ring->name() << ": " << ring->size() << " elements, "
            << j["graded_ideal_count"].get<std::size_t>() << " graded ideals, "
            << j["graded_primes"].size() << " graded primes; graded field "
            << f["graded_field"].get<bool>() << ", field " << f["field"].get<bool>()
            << ", graded radically principal "
            << f["graded_radically_principal_ring"].get<bool>() << '\n';
  return kOk;
}

// ideal

int cmd_ideal(const std::string& path, const std::string& gens, const std::string& op,
              const std::string& with, const Common& c) {
  const auto ring = load_ring(path, c.cap);
  auto I = ideal_from_arbitrary_gens(ring, parse_element_list(*ring, gens));
  if (!op.empty()) {
    const auto J = ideal_from_arbitrary_gens(ring, parse_element_list(*ring, with));
    if (op == "sum")
      I = ideal_sum(I, J);
    else if (op == "product")
      I = ideal_product(I, J);
    else if (op == "intersect")
      I = ideal_intersection(I, J);
    else
      throw InvalidArgument("unknown ideal operation '" + op + "'");
  }
  Json j;
  j["size"] = I.size();
  j["graded"] = is_graded(I);
  j["proper"] = I.is_proper();
  if (j["graded"].get<bool>()) {
    Json g = Json::array();
    for (Elem x : homogeneous_generators(I)) g.push_back(ring->coeffs(x));
    j["homogeneous_generators"] = std::move(g);
  }
  j["elements"] = ideal_to_json(I);
  if (c.json || !c.out.empty()) {
    emit(j, c.out);
  } else {
    std::cout << I.to_string() << "\n" << I.size() << " elements, "
              << (j["graded"].get<bool>() ? "graded" : "not graded") << '\n';
  }
  return kOk;
}

// suite

int cmd_suite(const std::string& corpus_dir, std::uint64_t seed, std::size_t count,
              const std::vector<std::string>& only, const Common& c) {
  std::vector<CorpusEntry> corpus =
      corpus_dir.empty() ? standard_corpus() : load_corpus_dir(corpus_dir, c.cap);
  if (count > 0) {
    auto extra = random_corpus(seed, count);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
  }
  SuiteOptions opt;
  opt.seed = seed;
  opt.only = only;
  const auto result = run_suite(corpus, opt);
  for (const auto& g : result.groups) {
    std::cerr << (g.passed() ? "PASS " : "FAIL ") << g.name << "  pass=" << g.pass
              << " fail=" << g.fail << " skip=" << g.skip << "  (" << g.description << ")\n";
    for (const auto& f : g.failures)
      std::cerr << "    " << f.ring << ": " << f.detail << '\n';
  }
  std::cerr << result.rings << " rings, " << (result.passed() ? "all groups passed" : "FAILED")
            << '\n';
  if (c.json || !c.out.empty()) emit(result.to_json(), c.out);
  if (!result.passed()) {
    // Dump the failing instances in full when they were not already emitted.
    if (!c.json && c.out.empty())
      for (const auto& g : result.groups)
        for (const auto& f : g.failures)
          std::cout << Json{{"group", g.name}, {"ring", f.ring}, {"detail", f.detail},
                            {"instance", f.instance}}
                           .dump()
                    << '\n';
    return kTheorem;
  }
  return kOk;
}

// corpus

int cmd_corpus(const std::string& dir, std::uint64_t seed, std::size_t count) {
  std::filesystem::create_directories(dir);
  auto corpus = standard_corpus();
  if (count > 0) {
    auto extra = random_corpus(seed, count);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
  }
  for (const auto& e : corpus) {
    std::string file = e.name;
    std::transform(file.begin(), file.end(), file.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    write_presentation(e.presentation, std::filesystem::path(dir) / (file + ".ring.json"));
  }
  std::cerr << "wrote " << corpus.size() << " ring files to " << dir << '\n';
  return kOk;
}

// construct

struct ConstructArgs {
  std::string kind;
  std::int64_t p = 2;
  std::int64_t n = 2;
  std::int64_t d = 1;
  std::string ring;
  std::vector<std::string> inputs;
  std::string gens;
  std::string s;
  std::string degx;
  std::string name;
};

void print_morphism(const std::string& title, const RingMorphism& f) {
  std::cerr << title << ": " << f.source->name() << " -> " << f.target->name() << '\n';
  const auto bad = verify_morphism(f);
  for (const auto& b : bad) std::cerr << "  morphism check failed: " << b << '\n';
  for (std::size_t i = 0; i < f.source->rank(); ++i) {
    const Elem b = f.source->basis(i);
    std::cerr << "  " << f.source->presentation().basis[i].label << " |-> "
              << f.target->to_string(f(b)) << '\n';
  }
}

int cmd_construct(ConstructArgs a, const Common& c) {
  // A single positional ring file stands in for --ring.
  if (a.ring.empty() && a.kind != "product" && !a.inputs.empty()) {
    a.ring = a.inputs.front();
    a.inputs.erase(a.inputs.begin());
  }
  RingPtr out;
  const auto& k = a.kind;
  if (k == "example23") {
    out = example_2_3(a.p);
  } else if (k == "gradedfieldF") {
    out = graded_field_F(a.p);
  } else if (k == "groupring") {
    out = group_ring(a.p, a.n);
  } else if (k == "cyclic") {
    out = cyclic(a.n);
  } else if (k == "truncpoly") {
    const auto r = load_ring(a.ring, c.cap);
    out = truncated_poly(r, a.d, parse_degree(r, a.degx));
  } else if (k == "quotient") {
    const auto r = load_ring(a.ring, c.cap);
    const auto I = ideal_from_arbitrary_gens(r, parse_element_list(*r, a.gens));
    auto q = quotient(I, a.name);
    print_morphism("projection", q.projection);
    out = q.ring;
  } else if (k == "localize") {
    const auto r = load_ring(a.ring, c.cap);
    const auto S = parse_element_list(*r, a.s);
    auto loc = localize(r, S, a.name);
    if (loc.zero_ring) std::cerr << "0 lies in the multiplicative closure: zero ring\n";
    std::cerr << "multiplicative closure has " << loc.multiplicative_set.size() << " elements\n";
    print_morphism("canonical map", loc.canonical);
    out = loc.ring;
  } else if (k == "product") {
    std::vector<std::string> files = a.inputs;
    if (!a.ring.empty()) files.insert(files.begin(), a.ring);
    if (files.empty()) throw InvalidArgument("product needs at least one ring file");
    std::vector<RingPtr> rings;
    for (const auto& f : files) rings.push_back(load_ring(f, c.cap));
    auto prod = direct_product_embedded(rings, a.name);
    for (std::size_t i = 0; i < prod.projections.size(); ++i)
      print_morphism("projection " + std::to_string(i), prod.projections[i]);
    out = prod.ring;
  } else {
    throw InvalidArgument("unknown construction '" + k + "'");
  }
  if (!a.name.empty() && out->name() != a.name) {
    auto p = out->presentation();
    p.name = a.name;
    out = Ring::create(std::move(p), c.cap);
  }
  std::cerr << out->name() << ": " << out->size() << " elements, rank " << out->rank() << '\n';
  if (c.out.empty())
    std::cout << dump_pretty(presentation_to_json(out->presentation())) << '\n';
  else
    write_presentation(out->presentation(), c.out);
  return kOk;
}

// poly

struct PolyArgs {
  std::string ring;
  std::string degx;
  std::string target;
  std::vector<std::string> gens;
  std::string f;
  std::string g;
  std::string a;
  std::uint32_t bound = 4;
  std::uint32_t nmax = 4;
  std::uint32_t dmax = 2;
};

Json membership_json(const Membership& m) {
  Json j;
  j["verdict"] = m.found ? "Witness" : "Unknown";
  j["bound"] = m.bound;
  if (m.found) {
    Json cof = Json::array();
    for (const auto& q : m.cofactors) cof.push_back(poly_to_json(q));
    j["cofactors"] = std::move(cof);
  }
  return j;
}

int cmd_poly_member(const PolyArgs& a, const Common& c) {
  const auto ring = load_ring(a.ring, c.cap);
  const auto degX = parse_degree(ring, a.degx);
  const auto target = parse_poly(ring, degX, a.target);
  std::vector<Poly> gens;
  for (const auto& g : a.gens) gens.push_back(parse_poly(ring, degX, g));
  const auto m = bounded_membership(target, gens, a.bound);
  emit(membership_json(m), c.out);
  std::cerr << target.to_string() << (m.found ? " is in" : " not found within the bound in")
            << " the ideal (cofactor degree <= " << a.bound << ")\n";
  return kOk;
}

int cmd_poly_divide(const PolyArgs& a, const Common& c) {
  const auto ring = load_ring(a.ring, c.cap);
  const auto degX = parse_degree(ring, a.degx);
  const auto d = poly_divide(parse_poly(ring, degX, a.f), parse_poly(ring, degX, a.g));
  emit(Json{{"quotient", poly_to_json(d.quotient)}, {"remainder", poly_to_json(d.remainder)}},
       c.out);
  std::cerr << "q = " << d.quotient.to_string() << ", r = " << d.remainder.to_string() << '\n';
  return kOk;
}

int cmd_poly_gcd(const PolyArgs& a, const Common& c) {
  const auto ring = load_ring(a.ring, c.cap);
  const auto degX = parse_degree(ring, a.degx);
  std::vector<Poly> gens;
  for (const auto& g : a.gens) gens.push_back(parse_poly(ring, degX, g));
  const auto s = euclidean_single_generator(gens);
  Json into = Json::array();
  for (const auto& q : s.into) into.push_back(poly_to_json(q));
  Json back = Json::array();
  for (const auto& q : s.back) back.push_back(poly_to_json(q));
  Json j;
  j["generator"] = poly_to_json(s.generator);
  j["generator_cofactors"] = std::move(into);
  j["quotients"] = std::move(back);
  emit(j, c.out);
  std::cerr << "single generator " << s.generator.to_string() << '\n';
  return kOk;
}

int cmd_poly_probe(const PolyArgs& a, const Common& c) {
  const auto ring = load_ring(a.ring, c.cap);
  const auto degX = parse_degree(ring, a.degx);
  const auto elems = parse_element_list(*ring, a.a);
  if (elems.size() != 1) throw InvalidArgument("probe needs exactly one element --a");
  const auto r = prop41_probe(ring, elems[0], a.nmax, a.dmax, degX);
  Json j;
  j["verdict"] = r.found ? "Witness" : "NoWitnessUpToBounds";
  j["witness"] = r.witness ? poly_to_json(*r.witness) : Json();
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["constant_witness"] = r.constant_witness;
  j["candidates_tried"] = r.candidates_tried;
  j["note"] = r.note;
  emit(j, c.out);
  std::cerr << (r.found ? "witness " + r.witness->to_string() : "no witness up to bounds")
            << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of finite commutative graded rings"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--cap", common.cap, "Element count cap for exhaustive operations");
  app.add_flag("--json", common.json, "Machine-readable output on stdout");
  app.add_option("--out", common.out, "Write output to this file instead of stdout");
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", common.cap, "Element count cap");
    sub->add_flag("--json", common.json, "Machine-readable output");
    sub->add_option("--out", common.out, "Output file");
  };

  std::string path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a ring file against the ring axioms");
  validate_cmd->add_option("ring", path, "Ring file")->required();
  add_common(validate_cmd);

  std::string ideal;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for a ring or one ideal");
  analyze_cmd->add_option("ring", path, "Ring file")->required();
  analyze_cmd->add_option("--ideal", ideal, "Generators, e.g. \"0,1,0;0,0,1\" or JSON");
  add_common(analyze_cmd);

  std::string gens, op, with;
  auto* ideal_cmd = app.add_subcommand("ideal", "Build an ideal and combine it with another");
  ideal_cmd->add_option("ring", path, "Ring file")->required();
  ideal_cmd->add_option("--gens", gens, "Generators")->required();
  ideal_cmd->add_option("--op", op, "sum, product or intersect")
      ->check(CLI::IsMember({"sum", "product", "intersect"}));
  ideal_cmd->add_option("--with", with, "Generators of the second ideal");
  add_common(ideal_cmd);

  std::string corpus_dir;
  std::uint64_t seed = 1;
  std::size_t count = 0;
  std::vector<std::string> only;
  auto* suite_cmd = app.add_subcommand("suite", "Run the theorem checks over a corpus");
  suite_cmd->add_option("--corpus", corpus_dir, "Directory of ring files (default: built-in)");
  suite_cmd->add_option("--seed", seed, "Seed for generated rings and sampling");
  suite_cmd->add_option("--count", count, "Number of generated rings to add");
  suite_cmd->add_option("--only", only, "Run only these groups");
  suite_cmd->add_flag("--list", "List the groups and exit");
  add_common(suite_cmd);

  std::string corpus_out;
  auto* corpus_cmd = app.add_subcommand("corpus", "Write the built-in corpus as ring files");
  corpus_cmd->add_option("dir", corpus_out, "Output directory")->required();
  corpus_cmd->add_option("--seed", seed, "Seed for generated rings");
  corpus_cmd->add_option("--count", count, "Number of generated rings to add");

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "Build a ring and write its file");
  construct_cmd->add_option("kind", ca.kind,
                            "quotient, product, localize, example23, gradedfieldF, "
                            "groupring, truncpoly or cyclic")
      ->required();
  construct_cmd->add_option("inputs", ca.inputs, "Ring file (or files, for product)");
  construct_cmd->add_option("--p", ca.p, "Prime");
  construct_cmd->add_option("--n", ca.n, "Modulus or group order");
  construct_cmd->add_option("--d", ca.d, "Truncation degree");
  construct_cmd->add_option("--ring", ca.ring, "Input ring file");
  construct_cmd->add_option("--gens", ca.gens, "Ideal generators for quotient");
  construct_cmd->add_option("--s", ca.s, "Multiplicative set generators for localize");
  construct_cmd->add_option("--degx", ca.degx, "Degree of X as a JSON list");
  construct_cmd->add_option("--name", ca.name, "Name of the new ring");
  add_common(construct_cmd);

  PolyArgs pa;
  auto* poly_cmd = app.add_subcommand("poly", "Polynomials over a finite graded ring");
  poly_cmd->require_subcommand(1);
  auto poly_common = [&](CLI::App* sub) {
    sub->add_option("--ring", pa.ring, "Coefficient ring file")->required();
    sub->add_option("--degx", pa.degx, "Degree of X as a JSON list");
    add_common(sub);
  };
  auto* member_cmd = poly_cmd->add_subcommand("member", "Bounded ideal membership");
  poly_common(member_cmd);
  member_cmd->add_option("--target", pa.target, "Polynomial, e.g. [[0,[1]],[2,[1]]]")->required();
  member_cmd->add_option("--gen", pa.gens, "Generator polynomial (repeatable)")
      ->required()
      ->allow_extra_args(false);
  member_cmd->add_option("--bound", pa.bound, "Maximum cofactor degree");
  auto* divide_cmd = poly_cmd->add_subcommand("divide", "Division with remainder");
  poly_common(divide_cmd);
  divide_cmd->add_option("--f", pa.f, "Dividend")->required();
  divide_cmd->add_option("--g", pa.g, "Divisor")->required();
  auto* gcd_cmd = poly_cmd->add_subcommand("gcd", "Single generator over a graded field");
  poly_common(gcd_cmd);
  gcd_cmd->add_option("--gen", pa.gens, "Generator polynomial (repeatable)")
      ->required()
      ->allow_extra_args(false);
  auto* probe_cmd = poly_cmd->add_subcommand("probe", "Search f with Grad(<a,X>) = Grad(<f>)");
  poly_common(probe_cmd);
  probe_cmd->add_option("--a", pa.a, "Homogeneous element")->required();
  probe_cmd->add_option("--nmax", pa.nmax, "Maximum exponent");
  probe_cmd->add_option("--dmax", pa.dmax, "Maximum X-degree of f");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kIo;
  }

  try {
    if (*validate_cmd) return cmd_validate(path, common);
    if (*analyze_cmd) return cmd_analyze(path, ideal, common);
    if (*ideal_cmd) return cmd_ideal(path, gens, op, with, common);
    if (*suite_cmd) {
      if (suite_cmd->count("--list") > 0) {
        for (const auto& [name, desc] : suite_groups()) std::cout << name << "  " << desc << '\n';
        return kOk;
      }
      return cmd_suite(corpus_dir, seed, count, only, common);
    }
    if (*corpus_cmd) return cmd_corpus(corpus_out, seed, count);
    if (*construct_cmd) return cmd_construct(ca, common);
    if (*member_cmd) return cmd_poly_member(pa, common);
    if (*divide_cmd) return cmd_poly_divide(pa, common);
    if (*gcd_cmd) return cmd_poly_gcd(pa, common);
    if (*probe_cmd) return cmd_poly_probe(pa, common);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kIo;
  } catch (const CrossCheckFailure& e) {
    std::cerr << "cross-check failure: " << e.what() << '\n';
    return kTheorem;
  } catch (const gradr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
