#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "ansulator/frobenius.hpp"
#include "ansulator/fusion_category.hpp"

namespace ansu {

// Element of the genus-1 block space of the solid torus, in the basis {e_a}
// of core-circle skeins colored by the simple labels.  e_0 is the empty
// skein.
struct TorusVector {
  std::shared_ptr<const FusionData> category;
  std::vector<Cyclotomic> coeffs;
};

TorusVector basis_vector(std::shared_ptr<const FusionData> category, size_t label);
bool torus_vector_equal(const TorusVector& v, const TorusVector& w);

// Genus-1 mapping class as a word in the generators
//   S -> [[0,-1],[1,0]],  T -> [[1,1],[0,1]]  (Ti = T^{-1}),
// with the 2x2 integer matrix recomputed deterministically from the letters.
struct MCGWord {
  enum class Letter { S, T, Tinv };
  std::vector<Letter> letters;

  std::array<std::array<long long, 2>, 2> matrix() const;
  size_t length() const { return letters.size(); }
  MCGWord concat(const MCGWord& other) const;

  // dot-separated letters, "Ti" for the inverse twist: "S.T.T.Ti"
  static MCGWord parse(const std::string& s);
  std::string str() const;

  static MCGWord twist_power(long n);  // T^n (Ti^{-n} when n < 0)
};

// The projective SL(2,Z) action on the genus-1 blocks:
//   rho(T) = diag(theta_a),  rho(S) = s~ / D,
// extended multiplicatively over the letters.  Words containing S require a
// modular category (throws NotModular); pure twist words work for any valid
// category.
CycMatrix rho(const FusionData& category, const MCGWord& word);

// rho(word) applied to a vector, letter by letter (twists are diagonal).
TorusVector apply_rho(const FusionData& category, const MCGWord& word, TorusVector v);

// rho(S)^2 = C, (rho(S) rho(T))^3 = kappa rho(S)^2 with kappa = p+/D, and
// C rho(T) = rho(T) C, all exact.
bool check_mcg_relations(const FusionData& category);
bool check_mcg_relations(const FusionData& category, const SMatrixData& smat);

// The ansular correlator of the solid torus: the spine skein built from
// eta -> delta -> (one leg around the handle) -> mu -> eps.  Requires a
// verified algebra normalized to mu delta = id (throws NotVerified).
// F = I gives the empty skein e_0; a group algebra k[H] gives
// sum_{a in H} eta dl(a, a^{-1}) m(a, a^{-1}) eps e_a.
TorusVector xi_handlebody(const FrobeniusAlgebra& f);

// Coend pairing at genus 1: <e_a, e_b> = delta_{a, b*}, extended
// bilinearly (no conjugation).
Cyclotomic torus_pairing(const TorusVector& v, const TorusVector& w);

// Cached per-category block data (s-matrix, modularity, anomaly).  Entries
// are immutable once created; the cache is internally synchronized.
struct CategoryBlocks {
  SMatrixData smat;
  bool modular;
};
const CategoryBlocks& category_blocks(const FusionData& category);

}  // namespace ansu
