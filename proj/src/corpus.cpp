#include "gradr/corpus.hpp"

#include <algorithm>
#include <random>

#include "gradr/constructions.hpp"
#include "gradr/errors.hpp"
#include "gradr/io.hpp"

namespace gradr {

namespace {

RingPtr z_graded(const RingPtr& r) {
  return Ring::create(embed_grading(r->presentation(), GradingGroup({0}), 0));
}

Elem elem(const RingPtr& r, Coeffs c) { return r->from_coeffs(c); }

IdealSet gens_ideal(const RingPtr& r, std::vector<Coeffs> gens) {
  std::vector<Elem> e;
  for (auto& c : gens) e.push_back(elem(r, std::move(c)));
  return ideal_from_homogeneous_gens(r, e);
}

RingPtr renamed(const RingPtr& r, std::string name) {
  auto p = r->presentation();
  p.name = std::move(name);
  return Ring::create(std::move(p), r->cap());
}

}  // namespace

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> c;
  auto add = [&](std::string name, RingPtr r, std::string recipe) {
    auto ring = renamed(r, name);
    c.push_back({name, ring->presentation(), ring, {}, std::move(recipe)});
  };

  const auto ex23 = example_2_3(2);
  const auto gf3 = graded_field_F(3);
  const auto gr32 = group_ring(3, 2);
  const auto z2 = cyclic(2);
  const auto z6 = cyclic(6);
  const auto z12 = cyclic(12);
  const Degree one_z{{1}};
  const auto f2x4 = truncated_poly(z_graded(z2), 3, one_z);
  const auto ex23x2 = truncated_poly(ex23, 1, one_z);
  const auto fx2 = truncated_poly(gf3, 1, Degree{{1}});

  add("example23_F2", ex23, "example_2_3(2)");
  add("example23_F3", example_2_3(3), "example_2_3(3)");
  add("example23_F5", example_2_3(5), "example_2_3(5)");
  add("gradedfieldF_F2", graded_field_F(2), "graded_field_F(2)");
  add("gradedfieldF_F3", gf3, "graded_field_F(3)");
  add("gradedfieldF_F5", graded_field_F(5), "graded_field_F(5)");
  add("groupring_F2_Z3", group_ring(2, 3), "group_ring(2,3)");
  add("groupring_F3_Z2", gr32, "group_ring(3,2)");
  add("groupring_F2_Z4", group_ring(2, 4), "group_ring(2,4)");
  add("groupring_F2_Z2", group_ring(2, 2), "group_ring(2,2)");
  add("Z2", z2, "cyclic(2)");
  add("Z5", cyclic(5), "cyclic(5)");
  add("Z6", z6, "cyclic(6)");
  add("Z8", cyclic(8), "cyclic(8)");
  add("Z12", z12, "cyclic(12)");
  add("Z30", cyclic(30), "cyclic(30)");
  add("F2X_mod_X4", f2x4, "truncated_poly(Z2 over Z, 3, 1)");
  add("Z4X_mod_X3", truncated_poly(z_graded(cyclic(4)), 2, one_z),
      "truncated_poly(Z4 over Z, 2, 1)");
  add("gradedfieldF3_X_mod_X2", fx2, "truncated_poly(graded_field_F(3), 1, 1)");
  add("example23_F2_X_mod_X2", ex23x2, "truncated_poly(example_2_3(2), 1, 1)");
  add("example23_F2_X_mod_X3", truncated_poly(ex23, 2, one_z),
      "truncated_poly(example_2_3(2), 2, 1)");
  add("example23_F2_X_mod_X4", truncated_poly(ex23, 3, one_z),
      "truncated_poly(example_2_3(2), 3, 1)");
  add("example23_F3_X_mod_X2", truncated_poly(example_2_3(3), 1, one_z),
      "truncated_poly(example_2_3(3), 1, 1)");

  add("example23_F2_mod_x", quotient(gens_ideal(ex23, {{0, 1, 0}})).ring,
      "quotient(example_2_3(2), <x>)");
  add("example23_F3_mod_xy",
      quotient(gens_ideal(example_2_3(3), {{0, 1, 0}, {0, 0, 1}})).ring,
      "quotient(example_2_3(3), <x,y>)");
  add("F2X_mod_X2", quotient(gens_ideal(f2x4, {{0, 0, 1, 0}})).ring,
      "quotient(F2X_mod_X4, <X^2>)");
  add("Z12_mod_6", quotient(gens_ideal(z12, {{6}})).ring, "quotient(Z12, <6>)");
  add("example23_F2_X_mod_X2_mod_X", quotient(gens_ideal(ex23x2, {{0, 0, 0, 1, 0, 0}})).ring,
      "quotient(example23_F2_X_mod_X2, <X>)");

  const auto z2z2 = direct_product({z2, z2}).ring;
  const auto prod_gf = direct_product({gf3, gr32}).ring;
  add("Z2xZ2", z2z2, "product(Z2, Z2)");
  add("Z2xZ3", direct_product({z2, cyclic(3)}).ring, "product(Z2, Z3)");
  add("example23_F2_x_gradedfieldF_F3", direct_product_embedded({ex23, gf3}).ring,
      "product(example_2_3(2), graded_field_F(3)) over Z x Z/2");
  add("gradedfieldF_F3_x_groupring_F3_Z2", prod_gf, "product(graded_field_F(3), group_ring(3,2))");
  add("example23_F2_mod_x_x_mod_y",
      direct_product({quotient(gens_ideal(ex23, {{0, 1, 0}})).ring,
                      quotient(gens_ideal(ex23, {{0, 0, 1}})).ring})
          .ring,
      "product(quotient(example_2_3(2), <x>), quotient(example_2_3(2), <y>))");

  auto loc = [&](const RingPtr& r, std::vector<Coeffs> s) {
    std::vector<Elem> e;
    for (auto& v : s) e.push_back(elem(r, std::move(v)));
    return localize(r, e).ring;
  };
  add("Z6_loc_3", loc(z6, {{3}}), "localize(Z6, {3})");
  add("Z12_loc_2", loc(z12, {{2}}), "localize(Z12, {2})");
  add("Z2xZ2_loc_e1", loc(z2z2, {{1, 0}}), "localize(Z2xZ2, {(1,0)})");
  add("F2X_mod_X4_loc_X", loc(f2x4, {{0, 1, 0, 0}}), "localize(F2X_mod_X4, {X}) = 0");
  add("groupring_F2_Z4_loc_g", loc(group_ring(2, 4), {{0, 1, 0, 0}}),
      "localize(group_ring(2,4), {g})");
  add("gradedfieldF3xgroupring_loc_u", loc(prod_gf, {{0, 1, 0, 0}}),
      "localize(product(graded_field_F(3), group_ring(3,2)), {(u,0)})");
  add("gradedfieldF3_X_mod_X2_loc_u", loc(fx2, {{0, 1, 0, 0}}),
      "localize(gradedfieldF3_X_mod_X2, {u})");
  add("Z30_loc_5", loc(cyclic(30), {{5}}), "localize(Z30, {5})");
  return c;
}

std::vector<CorpusEntry> random_corpus(std::uint64_t seed, std::size_t count,
                                       std::size_t max_size) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  const std::vector<std::int64_t> primes{2, 3, 5};

  auto base = [&]() -> std::pair<RingPtr, std::string> {
    switch (pick(6)) {
      case 0: {
        auto p = primes[pick(2)];
        return {example_2_3(p), "example_2_3(" + std::to_string(p) + ")"};
      }
      case 1: {
        auto p = primes[pick(3)];
        return {graded_field_F(p), "graded_field_F(" + std::to_string(p) + ")"};
      }
      case 2: {
        auto p = primes[pick(2)];
        auto n = static_cast<std::int64_t>(2 + pick(3));
        return {group_ring(p, n),
                "group_ring(" + std::to_string(p) + "," + std::to_string(n) + ")"};
      }
      case 3: {
        auto n = static_cast<std::int64_t>(2 + pick(29));
        return {cyclic(n), "cyclic(" + std::to_string(n) + ")"};
      }
      case 4: {
        auto n = static_cast<std::int64_t>(2 + pick(4));
        auto d = static_cast<std::int64_t>(1 + pick(3));
        return {truncated_poly(z_graded(cyclic(n)), d, Degree{{1}}),
                "truncated_poly(Z" + std::to_string(n) + " over Z, " + std::to_string(d) + ", 1)"};
      }
      default: {
        auto p = primes[pick(2)];
        return {truncated_poly(graded_field_F(p), 1, Degree{{static_cast<std::int64_t>(pick(2))}}),
                "truncated_poly(graded_field_F(" + std::to_string(p) + "), 1, *)"};
      }
    }
  };

  auto layer = [&](const RingPtr& r, const std::string& recipe)
      -> std::pair<RingPtr, std::string> {
    switch (pick(3)) {
      case 0: {
        auto lattice = enumerate_graded_ideals(r);
        std::vector<const IdealSet*> proper;
        for (const auto& I : lattice)
          if (I.is_proper()) proper.push_back(&I);
        if (proper.empty()) return {r, recipe};
        const auto& I = *proper[pick(proper.size())];
        return {quotient(I).ring, "quotient(" + recipe + ", " + I.to_string() + ")"};
      }
      case 1: {
        auto [other, other_recipe] = base();
        if (r->size() * other->size() > max_size) return {r, recipe};
        return {direct_product_embedded({r, other}).ring,
                "product(" + recipe + ", " + other_recipe + ")"};
      }
      default: {
        const auto& h = r->homogeneous_elements();
        const Elem s = h[pick(h.size())];
        return {localize(r, {&s, 1}).ring,
                "localize(" + recipe + ", {" + r->to_string(s) + "})"};
      }
    }
  };

  std::vector<CorpusEntry> out;
  while (out.size() < count) {
    auto [r, recipe] = base();
    if (r->size() > max_size) continue;
    const auto layers = pick(3);
    for (std::size_t i = 0; i < layers; ++i) std::tie(r, recipe) = layer(r, recipe);
    if (r->size() > max_size) continue;
    const auto name = "random_" + std::to_string(seed) + "_" + std::to_string(out.size());
    auto ring = renamed(r, name);
    out.push_back({name, ring->presentation(), ring, {}, recipe});
  }
  return out;
}

std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir, std::size_t cap) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    CorpusEntry e;
    e.presentation = read_presentation(f);
    e.name = e.presentation.name;
    e.recipe = f.filename().string();
    try {
      e.ring = Ring::create(e.presentation, cap);
    } catch (const ValidationError& err) {
      e.invalid_reason = err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace gradr
