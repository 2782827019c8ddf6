#pragma once

#include <random>

#include "ansulator/cyclotomic.hpp"

namespace ansu::testutil {

// Deterministic random cyclotomic with small rational coefficients.
inline Cyclotomic random_cyclotomic(std::mt19937_64& rng, long order,
                                    long coeff_bound = 9, int max_terms = 4) {
  std::uniform_int_distribution<long> num(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<long> pos(0, order - 1);
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::vector<Rational> c(static_cast<size_t>(order), Rational(0));
  int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    c[static_cast<size_t>(pos(rng))] += r;
  }
  return Cyclotomic(order, std::move(c));
}

}  // namespace ansu::testutil
