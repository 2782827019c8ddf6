#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "ansulator/errors.hpp"
#include "ansulator/fusion_category.hpp"
#include "ansulator/io.hpp"

using namespace ansu;

namespace {

bool same_data(const FusionData& a, const FusionData& b) {
  if (a.name != b.name || a.labels != b.labels || a.dual != b.dual || a.fusion != b.fusion)
    return false;
  for (size_t i = 0; i < a.rank(); ++i)
    if (a.twist[i] != b.twist[i] || a.qdim[i] != b.qdim[i]) return false;
  if (a.total_dim != b.total_dim || a.global_dim_sq != b.global_dim_sq) return false;
  if (a.pointed.has_value() != b.pointed.has_value()) return false;
  if (a.pointed) {
    if (a.pointed->elements != b.pointed->elements) return false;
    for (size_t i = 0; i < a.pointed->elements.size(); ++i)
      for (size_t j = 0; j < a.pointed->elements.size(); ++j) {
        if (a.pointed->braiding[i][j] != b.pointed->braiding[i][j]) return false;
        for (size_t k = 0; k < a.pointed->elements.size(); ++k)
          if (a.pointed->omega[i][j][k] != b.pointed->omega[i][j][k]) return false;
      }
  }
  return true;
}

CycMatrix charge_conjugation(const FusionData& d) {
  CycMatrix c(d.rank(), std::vector<Cyclotomic>(d.rank()));
  for (size_t a = 0; a < d.rank(); ++a) c[a][d.dual[a]] = Cyclotomic::one();
  return c;
}

}  // namespace

TEST_CASE("builtins pass the validator") {
  for (const auto& name : {"unit", "fibonacci", "ising", "toric", "semion", "su2:2", "su2:4",
                           "zn:3", "zn:8", "pointed:2x2x2:1,0,1:1,1,0"}) {
    auto d = builtin_category(name);
    CHECK(validate_fusion_data(*d).empty());
  }
}

TEST_CASE("fibonacci data: golden ratio identities") {
  auto d = builtin_category("fibonacci");
  Cyclotomic phi = d->qdim[1];
  CHECK(phi * phi == phi + Cyclotomic::one());
  CHECK(d->twist[1] == Cyclotomic::root_of_unity(5, 2));
  CHECK(d->global_dim_sq == Cyclotomic(2) + phi);
  CHECK(std::abs(d->total_dim.embed(96).real() - 1.9021130325903071) < 1e-12);
}

TEST_CASE("ising data") {
  auto d = builtin_category("ising");
  CHECK(d->rank() == 3);
  CHECK(d->qdim[1] * d->qdim[1] == Cyclotomic(2));
  CHECK(d->twist[2] == Cyclotomic(-1));
  CHECK(d->total_dim == Cyclotomic(2));
  CHECK(is_modular(*d));
}

TEST_CASE("smatrix: fibonacci s~ = [[1, phi], [phi, -1]] and s~^2 = D^2 C") {
  auto d = builtin_category("fibonacci");
  auto s = compute_smatrix(*d);
  Cyclotomic phi = d->qdim[1];
  CHECK(s.stilde[0][0] == Cyclotomic::one());
  CHECK(s.stilde[0][1] == phi);
  CHECK(s.stilde[1][0] == phi);
  CHECK(s.stilde[1][1] == Cyclotomic(-1));
  CycMatrix ssq = cyc_mat_mul(s.stilde, s.stilde);
  CycMatrix expected = charge_conjugation(*d);
  for (auto& row : expected)
    for (auto& x : row) x = x * d->global_dim_sq;
  CHECK(cyc_mat_equal(ssq, expected));
}

TEST_CASE("smatrix: toric code is the +-1 bicharacter matrix") {
  auto d = builtin_category("toric");
  auto s = compute_smatrix(*d);
  // double braiding c(a,b) c(b,a), which for 1-dimensional objects is the
  // symmetric bicharacter; charge order 0, e, m, em
  int expected[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b) CHECK(s.stilde[a][b] == Cyclotomic(expected[a][b]));
  CHECK(is_modular(*d));
  CHECK(s.anomaly == Cyclotomic::one());  // p+ = D = 2
}

TEST_CASE("smatrix: unit category") {
  auto d = builtin_category("unit");
  auto s = compute_smatrix(*d);
  CHECK(s.stilde.size() == 1);
  CHECK(s.stilde[0][0] == Cyclotomic::one());
  CHECK(s.gauss_plus == Cyclotomic::one());
  CHECK(s.gauss_minus == Cyclotomic::one());
  CHECK(s.anomaly == Cyclotomic::one());
}

TEST_CASE("modularity: transparent label makes pointed Z4 with q = i^(j^2) degenerate") {
  auto d = builtin_category("pointed:4:2");  // q(j) = zeta_8^{2 j^2} = i^{j^2}
  CHECK_FALSE(is_modular(*d));
  // row of the transparent label 2 equals row 0 (all qdims are 1)
  auto s = compute_smatrix(*d);
  for (size_t b = 0; b < 4; ++b) CHECK(s.stilde[2][b] == s.stilde[0][b]);
  CHECK(is_modular(*builtin_category("zn:4")));
}

TEST_CASE("verlinde consistency for modular builtins, negative on a fusion edit") {
  for (const auto& name : {"fibonacci", "ising", "toric", "semion", "su2:3"}) {
    CAPTURE(name);
    CHECK(verlinde_consistency(*builtin_category(name)));
  }
  FusionData bad = make_fibonacci();
  bad.fusion[(1 * 2 + 1) * 2 + 1] = 2;  // N[tau][tau][tau] := 2
  CHECK_FALSE(verlinde_consistency(bad));
  CHECK_THROWS_AS((void)verlinde_consistency(*builtin_category("pointed:4:2")), NotModular);
}

TEST_CASE("gauss sums: p+ p- = D^2 for modular builtins, s~ symmetric") {
  for (const auto& name : {"fibonacci", "ising", "toric", "semion", "su2:2", "su2:5", "zn:5"}) {
    CAPTURE(name);
    auto d = builtin_category(name);
    auto s = compute_smatrix(*d);
    CHECK(s.gauss_plus * s.gauss_minus == d->global_dim_sq);
    for (size_t a = 0; a < d->rank(); ++a)
      for (size_t b = a; b < d->rank(); ++b) CHECK(s.stilde[a][b] == s.stilde[b][a]);
  }
}

TEST_CASE("su2 level k quantum dimensions match the sine ratios") {
  for (int k : {1, 2, 3, 6, 8}) {
    CAPTURE(k);
    auto d = builtin_category("su2:" + std::to_string(k));
    const double n = k + 2;
    for (size_t j = 0; j < d->rank(); ++j) {
      double expect = std::sin((j + 1) * M_PI / n) / std::sin(M_PI / n);
      CHECK(std::abs(d->qdim[j].embed(96).real() - expect) < 1e-10);
    }
    CHECK(is_modular(*d));
  }
  CHECK_THROWS_AS((void)builtin_category("su2:9"), UnsupportedSpec);
}

TEST_CASE("validator negatives") {
  SUBCASE("stale derived S-data after a twist edit") {
    FusionData d = make_fibonacci();
    SMatrixData stale = compute_smatrix(d);
    d.twist[1] = Cyclotomic::one();
    auto report = validate_fusion_data(d, stale);
    bool found = false;
    for (const auto& e : report) found |= e.find("derived-data mismatch") != std::string::npos;
    CHECK(found);
  }
  SUBCASE("broken duality table") {
    FusionData d = make_ising();
    d.dual = {0, 2, 1};
    auto report = validate_fusion_data(d);
    CHECK(!report.empty());
  }
  SUBCASE("dual-twist invariant: theta_{a*} != theta_a") {
    FusionData d = *builtin_category("zn:5");
    d.twist[1] = Cyclotomic::root_of_unity(5, 2);  // theta_4 stays zeta_5
    auto report = validate_fusion_data(d);
    bool found = false;
    for (const auto& e : report) found |= e.find("theta_{a*}") != std::string::npos;
    CHECK(found);
  }
  SUBCASE("stale global_dim_sq") {
    FusionData d = make_ising();
    d.global_dim_sq = Cyclotomic(5);
    auto report = validate_fusion_data(d);
    bool found = false;
    for (const auto& e : report) found |= e.find("derived-data mismatch") != std::string::npos;
    CHECK(found);
  }
  SUBCASE("ragged tensor throws MalformedData") {
    FusionData d = make_ising();
    d.fusion.pop_back();
    CHECK_THROWS_AS((void)validate_fusion_data(d), MalformedData);
  }
  SUBCASE("unit category is valid") {
    CHECK(validate_fusion_data(make_unit_category()).empty());
  }
}

TEST_CASE("category files: round trip, schema errors, validation errors") {
  const std::string path = "test_category_roundtrip.json";
  FusionData fib = make_fibonacci();
  save_category(fib, path);
  FusionData back = load_category(path);
  CHECK(same_data(fib, back));

  auto j = category_to_json(make_ising());
  SUBCASE("missing dual") {
    j.erase("dual");
    try {
      (void)category_from_json(j);
      FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
      CHECK(e.pointer == "/dual");
    }
  }
  SUBCASE("unknown key rejected") {
    j["extra"] = 1;
    CHECK_THROWS_AS((void)category_from_json(j), SchemaError);
  }
  SUBCASE("fsymbols key is reserved and accepted") {
    j["fsymbols"] = nlohmann::json::array();
    CHECK_NOTHROW((void)category_from_json(j));
  }
  SUBCASE("dual-twist violation is a ValidationError naming the invariant") {
    auto jz = category_to_json(*builtin_category("zn:5"));
    jz["twist"]["1"] = cyclotomic_to_json(Cyclotomic::root_of_unity(5, 2));
    const std::string bad = "test_category_badtwist.json";
    std::ofstream(bad) << jz.dump();
    try {
      (void)load_category(bad);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      bool found = false;
      for (const auto& r : e.report) found |= r.find("theta_{a*}") != std::string::npos;
      CHECK(found);
    }
    std::remove(bad.c_str());
  }
  std::remove(path.c_str());
}

TEST_CASE("pointed spec parsing errors") {
  CHECK_THROWS_AS((void)builtin_category("pointed:3:1"), InconsistentPointedData);  // odd n, odd m
  CHECK_THROWS_AS((void)builtin_category("pointed:100:2"), UnsupportedSpec);
  CHECK_THROWS_AS((void)builtin_category("nope"), UnsupportedSpec);
}
