#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ansulator/cyclotomic.hpp"
#include "ansulator/fusion_category.hpp"

namespace ansu {

// Special symmetric commutative Frobenius algebra supported on a subgroup H
// of invertible simples, with 1-dimensional Hom components: all structure
// maps are scalars per component.
//
//   mu[i][j]    component of the product  X_a (x) X_b -> X_{ab}
//   delta[i][j] component of the coproduct X_{ab} -> X_a (x) X_b
//   eta         component of the unit   I -> X_0
//   eps         component of the counit X_0 -> I
//
// Tables are indexed by positions into `support` (label indices, support[0]
// is the unit label).  lambda = eps . eta and lambda_prime (mu delta =
// lambda' id) are stored alongside and recomputed by the verifier; a
// mismatch is a report entry.
struct PointedFrobenius {
  std::shared_ptr<const FusionData> category;
  std::vector<size_t> support;
  std::vector<std::vector<Cyclotomic>> mu;
  std::vector<std::vector<Cyclotomic>> delta;
  Cyclotomic eta;
  Cyclotomic eps;
  Cyclotomic lambda;
  Cyclotomic lambda_prime;

  size_t position_of(size_t label) const;
  size_t group_mul(size_t i, size_t j) const;  // product of support positions
  size_t group_inv(size_t i) const;
};

// F = I in any category; mu, eta, delta, eps all identities, lambda =
// lambda' = 1.
struct TrivialFrobenius {
  std::shared_ptr<const FusionData> category;
};

using FrobeniusAlgebra = std::variant<TrivialFrobenius, PointedFrobenius>;

// Group algebra k[H] for an isotropic subgroup H (twists and the restricted
// associator/braiding all trivial): m = 1, e = 1, dl = 1/|H|, eps = |H|,
// already normalized to mu delta = id.
// Throws NotASubgroup / NotIsotropic / CocycleObstruction / NotPointed.
PointedFrobenius group_algebra(std::shared_ptr<const FusionData> category,
                               const std::vector<size_t>& support_labels);

// Checks every axiom exactly; returns one entry per violation.
std::vector<std::string> verify_frobenius(const PointedFrobenius& f);
std::vector<std::string> verify_frobenius(const TrivialFrobenius& f);
std::vector<std::string> verify_frobenius(const FrobeniusAlgebra& f);

// Rescales delta by 1/lambda' and eps by lambda' so that mu delta = id.
// Idempotent once lambda' = 1.  Throws NotSpecial when lambda' = 0.
PointedFrobenius renormalize_special(const PointedFrobenius& f);
FrobeniusAlgebra renormalize_special(const FrobeniusAlgebra& f);

const std::shared_ptr<const FusionData>& frobenius_category(const FrobeniusAlgebra& f);
std::string frobenius_description(const FrobeniusAlgebra& f);

// CLI-facing resolver: "trivial" | "group:<label>,<label>,..." | file path.
// Loaded or constructed algebras are verified (unless allow_invalid) and
// renormalized.
FrobeniusAlgebra frobenius_from_spec(const std::string& spec,
                                     std::shared_ptr<const FusionData> category,
                                     bool allow_invalid = false);

}  // namespace ansu
