#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "ansulator/errors.hpp"
#include "ansulator/frobenius.hpp"
#include "ansulator/io.hpp"

using namespace ansu;

namespace {

// All subgroups of the pointed part, by bitmask closure (rank <= 16).
std::vector<std::vector<size_t>> all_subgroups(const FusionData& d) {
  const auto& elems = d.pointed->elements;
  const size_t n = elems.size();
  std::vector<std::vector<size_t>> out;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    if (!(mask & 1ul)) continue;  // must contain the unit
    bool closed = true;
    std::vector<size_t> members;
    for (size_t i = 0; i < n && closed; ++i) {
      if (!(mask >> i & 1ul)) continue;
      members.push_back(elems[i]);
      if (!(mask >> d.pointed->position_of(d.dual[elems[i]]) & 1ul)) closed = false;
      for (size_t j = 0; j < n && closed; ++j) {
        if (!(mask >> j & 1ul)) continue;
        if (!(mask >> d.pointed->position_of(d.fuse(elems[i], elems[j])) & 1ul)) closed = false;
      }
    }
    if (closed) out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

TEST_CASE("group algebra on toric code {0, e}") {
  auto cat = builtin_category("toric");
  auto f = group_algebra(cat, {0, 1});
  CHECK(verify_frobenius(f).empty());
  CHECK(f.lambda == Cyclotomic(2));
  CHECK(f.lambda_prime == Cyclotomic::one());
  CHECK(f.eps == Cyclotomic(2));
  CHECK(f.delta[0][0] == Cyclotomic(Rational(1, 2)));
}

TEST_CASE("unit subgroup works in any category, pointed or not") {
  for (const auto& name : {"fibonacci", "ising", "su2:3", "toric"}) {
    CAPTURE(name);
    auto f = group_algebra(builtin_category(name), {0});
    CHECK(verify_frobenius(f).empty());
    CHECK(f.lambda == Cyclotomic::one());
    CHECK(f.lambda_prime == Cyclotomic::one());
  }
}

TEST_CASE("trivial subgroup on a pointed category") {
  auto f = group_algebra(builtin_category("semion"), {0});
  CHECK(verify_frobenius(f).empty());
  CHECK(f.lambda == Cyclotomic::one());
  CHECK(f.lambda_prime == Cyclotomic::one());
}

TEST_CASE("semion full support is not isotropic") {
  CHECK_THROWS_AS((void)group_algebra(builtin_category("semion"), {0, 1}), NotIsotropic);
}

TEST_CASE("trivial Frobenius verifies everywhere") {
  CHECK(verify_frobenius(TrivialFrobenius{builtin_category("fibonacci")}).empty());
  CHECK(verify_frobenius(TrivialFrobenius{builtin_category("ising")}).empty());
}

TEST_CASE("single-scalar edits are caught") {
  auto cat = builtin_category("toric");
  auto good = group_algebra(cat, {0, 1});

  SUBCASE("m(e,e) = -1") {
    auto bad = good;
    bad.mu[1][1] = Cyclotomic(-1);
    CHECK(!verify_frobenius(bad).empty());
  }
  SUBCASE("eta flipped") {
    auto bad = good;
    bad.eta = Cyclotomic(2);
    CHECK(!verify_frobenius(bad).empty());
  }
  SUBCASE("randomized perturbation fuzz") {
    auto z8 = builtin_category("zn:8");
    // {0, 4} is the isotropic order-2 subgroup of Z8 with q(j) = zeta_16^{j^2}
    auto base = group_algebra(z8, {0, 4});
    REQUIRE(verify_frobenius(base).empty());
    std::mt19937_64 rng(2024);
    const Cyclotomic factors[] = {Cyclotomic(-1), Cyclotomic(2), Cyclotomic(Rational(1, 3)),
                                  Cyclotomic::root_of_unity(4, 1)};
    int caught = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
      auto bad = base;
      size_t h = base.support.size();
      std::uniform_int_distribution<int> which(0, 3);
      std::uniform_int_distribution<size_t> pick(0, h - 1);
      const Cyclotomic& fac = factors[rng() % 4];
      switch (which(rng)) {
        case 0: bad.mu[pick(rng)][pick(rng)] = bad.mu[0][0] * fac; break;
        case 1: bad.delta[pick(rng)][pick(rng)] = bad.delta[0][0] * fac; break;
        case 2: bad.eta = bad.eta * fac; break;
        default: bad.eps = bad.eps * fac; break;
      }
      if (!verify_frobenius(bad).empty()) ++caught;
    }
    CHECK(caught == trials);
  }
}

TEST_CASE("exhaustive subgroups of small pointed builtins") {
  for (const auto& name : {"toric", "semion", "zn:2", "zn:3", "zn:4", "zn:6", "zn:8", "zn:9",
                           "pointed:2x2x2:1,0,1:1,1,0", "pointed:4x2:0,0:1"}) {
    CAPTURE(name);
    auto cat = builtin_category(name);
    int admissible = 0;
    for (const auto& H : all_subgroups(*cat)) {
      try {
        auto f = group_algebra(cat, H);
        CHECK(verify_frobenius(f).empty());
        ++admissible;
      } catch (const NotIsotropic&) {
      } catch (const CocycleObstruction&) {
      }
    }
    CHECK(admissible >= 1);  // the trivial subgroup is always admissible
  }
}

TEST_CASE("renormalization rescales delta and eps") {
  auto cat = builtin_category("toric");
  PointedFrobenius f = group_algebra(cat, {0, 1});
  // variant with dl = 1, eps = 1: lambda' = 2
  for (auto& row : f.delta)
    for (auto& v : row) v = Cyclotomic::one();
  f.eps = Cyclotomic::one();
  f.lambda = (f.eps * f.eta).reduced();
  f.lambda_prime = Cyclotomic(2);
  REQUIRE(verify_frobenius(f).empty());

  PointedFrobenius r = renormalize_special(f);
  CHECK(r.delta[0][0] == Cyclotomic(Rational(1, 2)));
  CHECK(r.eps == Cyclotomic(2));
  CHECK(r.lambda_prime == Cyclotomic::one());
  CHECK(verify_frobenius(r).empty());

  PointedFrobenius rr = renormalize_special(r);
  CHECK(rr.delta[0][0] == r.delta[0][0]);
  CHECK(rr.eps == r.eps);

  FrobeniusAlgebra triv = TrivialFrobenius{cat};
  CHECK(std::holds_alternative<TrivialFrobenius>(renormalize_special(triv)));
}

TEST_CASE("frobenius files: round trip, verification on load, allow-invalid") {
  auto cat = builtin_category("toric");
  auto f = group_algebra(cat, {0, 1});
  const std::string path = "test_frobenius_roundtrip.json";
  save_frobenius(f, path);
  auto back = load_frobenius(path, cat);
  CHECK(back.support == f.support);
  CHECK(back.eps == f.eps);
  CHECK(back.lambda_prime == f.lambda_prime);
  CHECK(verify_frobenius(back).empty());

  // corrupt one scalar: loader refuses unless allow_invalid
  auto j = frobenius_to_json(f);
  j["eta"] = cyclotomic_to_json(Cyclotomic(3));
  const std::string bad = "test_frobenius_bad.json";
  std::ofstream(bad) << j.dump();
  CHECK_THROWS_AS((void)load_frobenius(bad, cat), ValidationError);
  CHECK_NOTHROW((void)load_frobenius(bad, cat, /*allow_invalid=*/true));

  // category name mismatch
  CHECK_THROWS_AS((void)load_frobenius(path, builtin_category("ising")), CategoryMismatch);
  std::remove(path.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("frobenius specs") {
  auto cat = builtin_category("toric");
  auto f = frobenius_from_spec("group:0,e", cat);
  CHECK(std::holds_alternative<PointedFrobenius>(f));
  CHECK(frobenius_description(f) == "group:0,e");
  auto t = frobenius_from_spec("trivial", cat);
  CHECK(std::holds_alternative<TrivialFrobenius>(t));
}
