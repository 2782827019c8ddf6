#include "ansulator/frobenius.hpp"

#include <algorithm>
#include <sstream>

#include "ansulator/errors.hpp"
#include "ansulator/io.hpp"

namespace ansu {

size_t PointedFrobenius::position_of(size_t label) const {
  for (size_t i = 0; i < support.size(); ++i)
    if (support[i] == label) return i;
  throw MalformedData("label index " + std::to_string(label) + " is not in the support");
}

size_t PointedFrobenius::group_mul(size_t i, size_t j) const {
  return position_of(category->fuse(support[i], support[j]));
}

size_t PointedFrobenius::group_inv(size_t i) const {
  return position_of(category->dual[support[i]]);
}

namespace {

// Support must be a subgroup of the pointed elements containing the unit.
// Returns an error string or empty.  The unit-only support {0} is accepted in
// any category: the associator and braiding scalars on the unit are 1.
std::string check_support_subgroup(const FusionData& cat, const std::vector<size_t>& support) {
  if (support.size() == 1 && support[0] == 0) return "";
  if (!cat.pointed) return "category carries no pointed data";
  if (support.empty() || support[0] != 0) return "support must contain the unit label first";
  for (size_t a : support) {
    if (!cat.pointed->contains(a)) return "support label '" + cat.labels[a] + "' is not in the pointed table";
    if (std::count(support.begin(), support.end(), a) != 1)
      return "support contains duplicate label '" + cat.labels[a] + "'";
  }
  auto in_support = [&](size_t lab) {
    return std::find(support.begin(), support.end(), lab) != support.end();
  };
  for (size_t a : support) {
    if (!in_support(cat.dual[a])) return "support is not closed under inverses";
    for (size_t b : support)
      if (!in_support(cat.fuse(a, b))) return "support is not closed under the group law";
  }
  return "";
}

}  // namespace

PointedFrobenius group_algebra(std::shared_ptr<const FusionData> category,
                               const std::vector<size_t>& support_labels) {
  const FusionData& cat = *category;
  std::vector<size_t> support = support_labels;
  if (std::find(support.begin(), support.end(), size_t{0}) == support.end())
    throw NotASubgroup("support must contain the unit label");
  std::stable_partition(support.begin(), support.end(), [](size_t a) { return a == 0; });
  const bool unit_only = support.size() == 1;
  if (!unit_only && !cat.pointed)
    throw NotPointed("group_algebra needs a category with pointed data");
  std::string err = check_support_subgroup(cat, support);
  if (!err.empty()) throw NotASubgroup(err);

  for (size_t a : support)
    if (cat.twist[a] != Cyclotomic::one())
      throw NotIsotropic("twist of '" + cat.labels[a] + "' is not 1 on the support");
  if (!unit_only) {
    const auto& p = *cat.pointed;
    for (size_t a : support)
      for (size_t b : support) {
        size_t ia = p.position_of(a), ib = p.position_of(b);
        for (size_t c : support)
          if (p.omega[ia][ib][p.position_of(c)] != Cyclotomic::one())
            throw CocycleObstruction("associator does not restrict trivially to the support");
        if (p.braiding[ia][ib] != Cyclotomic::one())
          throw CocycleObstruction("braiding does not restrict trivially to the support");
      }
  }

  const size_t H = support.size();
  PointedFrobenius f;
  f.category = std::move(category);
  f.support = std::move(support);
  f.mu.assign(H, std::vector<Cyclotomic>(H, Cyclotomic::one()));
  Rational inv_h(1, static_cast<long>(H));
  inv_h.canonicalize();
  f.delta.assign(H, std::vector<Cyclotomic>(H, Cyclotomic(inv_h)));
  f.eta = Cyclotomic::one();
  f.eps = Cyclotomic(static_cast<long>(H));
  f.lambda = f.eps;
  f.lambda_prime = Cyclotomic::one();
  return f;
}

std::vector<std::string> verify_frobenius(const TrivialFrobenius&) { return {}; }

std::vector<std::string> verify_frobenius(const PointedFrobenius& f) {
  std::vector<std::string> report;
  auto entry = [&](const std::string& s) { report.push_back("frobenius: " + s); };
  const FusionData& cat = *f.category;

  std::string err = check_support_subgroup(cat, f.support);
  if (!err.empty()) {
    entry(err);
    return report;
  }
  const size_t H = f.support.size();
  if (f.mu.size() != H || f.delta.size() != H) {
    entry("structure tables do not match the support size");
    return report;
  }
  for (const auto& row : f.mu)
    if (row.size() != H) {
      entry("mu table is ragged");
      return report;
    }
  for (const auto& row : f.delta)
    if (row.size() != H) {
      entry("delta table is ragged");
      return report;
    }

  const bool unit_only = H == 1;  // scalars on the unit are 1 in any category
  static const Cyclotomic kOne = Cyclotomic::one();
  auto omega = [&](size_t i, size_t j, size_t k) -> const Cyclotomic& {
    if (unit_only) return kOne;
    const auto& p = *cat.pointed;
    return p.omega[p.position_of(f.support[i])][p.position_of(f.support[j])]
                  [p.position_of(f.support[k])];
  };
  auto sigma = [&](size_t i, size_t j) -> const Cyclotomic& {
    if (unit_only) return kOne;
    const auto& p = *cat.pointed;
    return p.braiding[p.position_of(f.support[i])][p.position_of(f.support[j])];
  };
  auto mul = [&](size_t i, size_t j) { return f.group_mul(i, j); };
  auto name = [&](size_t i) { return cat.labels[f.support[i]]; };

  // unit-normalization gauge and the unit/counit axioms
  for (size_t a = 0; a < H; ++a) {
    if (f.mu[0][a] != Cyclotomic::one() || f.mu[a][0] != Cyclotomic::one())
      entry("mu is not unit-normalized at '" + name(a) + "'");
    if (f.eta * f.mu[0][a] != Cyclotomic::one())
      entry("unit axiom eta . m(0,a) = 1 fails at '" + name(a) + "'");
    if (f.eps * f.delta[0][a] != Cyclotomic::one() || f.eps * f.delta[a][0] != Cyclotomic::one())
      entry("counit axiom eps . dl = 1 fails at '" + name(a) + "'");
  }

  // associativity and coassociativity against the restricted associator
  for (size_t a = 0; a < H; ++a)
    for (size_t b = 0; b < H; ++b)
      for (size_t c = 0; c < H; ++c) {
        if (f.mu[a][b] * f.mu[mul(a, b)][c] != omega(a, b, c) * f.mu[b][c] * f.mu[a][mul(b, c)]) {
          entry("associativity fails at (" + name(a) + "," + name(b) + "," + name(c) + ")");
          goto assoc_done;
        }
        if (omega(a, b, c) * f.delta[a][b] * f.delta[mul(a, b)][c] !=
            f.delta[b][c] * f.delta[a][mul(b, c)]) {
          entry("coassociativity fails at (" + name(a) + "," + name(b) + "," + name(c) + ")");
          goto assoc_done;
        }
      }
assoc_done:

  // commutativity with respect to the braiding
  for (size_t a = 0; a < H; ++a)
    for (size_t b = 0; b < H; ++b)
      if (f.mu[b][a] * sigma(a, b) != f.mu[a][b]) {
        entry("commutativity mu . c = mu fails at (" + name(a) + "," + name(b) + ")");
        goto comm_done;
      }
comm_done:

  // Frobenius relations: for all a, b and u v = a b,
  //   m(a,b) dl(u,v) = dl(u, u^{-1}a) omega(u, u^{-1}a, b) m(u^{-1}a, b)
  //   m(a,b) dl(u,v) = dl(a^{-1}u, v) omega(a, a^{-1}u, v)^{-1} m(a, a^{-1}u)
  for (size_t a = 0; a < H; ++a)
    for (size_t b = 0; b < H; ++b)
      for (size_t u = 0; u < H; ++u) {
        size_t v = mul(mul(f.group_inv(u), a), b);
        size_t uia = mul(f.group_inv(u), a);
        Cyclotomic lhs = f.mu[a][b] * f.delta[u][v];
        if (lhs != f.delta[u][uia] * omega(u, uia, b) * f.mu[uia][b]) {
          entry("Frobenius relation (mu x id)(id x delta) fails at (" + name(a) + "," + name(b) +
                "," + name(u) + ")");
          goto frob_done;
        }
        size_t aiu = mul(f.group_inv(a), u);
        if (lhs != f.delta[aiu][v] * omega(a, aiu, v).inverse() * f.mu[a][aiu]) {
          entry("Frobenius relation (id x mu)(delta x id) fails at (" + name(a) + "," + name(b) +
                "," + name(u) + ")");
          goto frob_done;
        }
      }
frob_done:

  // twist-triviality on the support (symmetry condition, scalar shadow)
  for (size_t a = 0; a < H; ++a)
    if (cat.twist[f.support[a]] != Cyclotomic::one())
      entry("twist is not trivial on support at '" + name(a) + "'");

  // symmetry and non-degeneracy of the pairing eps . mu
  for (size_t a = 0; a < H; ++a) {
    size_t ai = f.group_inv(a);
    if (f.eps * f.mu[ai][a] * sigma(a, ai) != f.eps * f.mu[a][ai])
      entry("pairing eps . mu is not symmetric under the braiding at '" + name(a) + "'");
    if ((f.eps * f.mu[a][ai]).is_zero())
      entry("pairing eps . mu is degenerate at '" + name(a) + "'");
  }

  // specialness: eps eta = lambda != 0 and mu delta = lambda' id
  Cyclotomic lam = (f.eps * f.eta).reduced();
  if (lam.is_zero()) entry("specialness fails: eps . eta = 0");
  if (lam != f.lambda) entry("stored lambda does not match eps . eta");
  bool lp_set = false;
  Cyclotomic lp;
  for (size_t c = 0; c < H; ++c) {
    Cyclotomic acc = Cyclotomic::zero();
    for (size_t x = 0; x < H; ++x) {
      size_t y = mul(f.group_inv(x), c);
      acc = acc + f.delta[x][y] * f.mu[x][y];
    }
    acc = acc.reduced();
    if (!lp_set) {
      lp = acc;
      lp_set = true;
      if (lp.is_zero()) entry("specialness fails: mu . delta = 0");
      if (lp != f.lambda_prime) entry("stored lambda_prime does not match mu . delta");
    } else if (acc != lp) {
      entry("mu . delta is not a multiple of the identity at '" + name(c) + "'");
    }
  }
  return report;
}

std::vector<std::string> verify_frobenius(const FrobeniusAlgebra& f) {
  return std::visit([](const auto& alg) { return verify_frobenius(alg); }, f);
}

PointedFrobenius renormalize_special(const PointedFrobenius& f) {
  const size_t H = f.support.size();
  // recompute lambda' from the unit component of mu . delta
  Cyclotomic lp = Cyclotomic::zero();
  for (size_t x = 0; x < H; ++x) {
    size_t y = f.group_inv(x);
    lp = lp + f.delta[x][y] * f.mu[x][y];
  }
  lp = lp.reduced();
  if (lp.is_zero()) throw NotSpecial("mu . delta = 0; the algebra is not special");
  PointedFrobenius out = f;
  Cyclotomic lp_inv = lp.inverse();
  for (auto& row : out.delta)
    for (auto& v : row) v = (v * lp_inv).reduced();
  out.eps = (out.eps * lp).reduced();
  out.lambda = (out.eps * out.eta).reduced();
  out.lambda_prime = Cyclotomic::one();
  return out;
}

FrobeniusAlgebra renormalize_special(const FrobeniusAlgebra& f) {
  if (std::holds_alternative<TrivialFrobenius>(f)) return f;
  return renormalize_special(std::get<PointedFrobenius>(f));
}

const std::shared_ptr<const FusionData>& frobenius_category(const FrobeniusAlgebra& f) {
  return std::visit(
      [](const auto& alg) -> const std::shared_ptr<const FusionData>& { return alg.category; }, f);
}

std::string frobenius_description(const FrobeniusAlgebra& f) {
  if (std::holds_alternative<TrivialFrobenius>(f)) return "trivial";
  const auto& alg = std::get<PointedFrobenius>(f);
  std::string out = "group:";
  for (size_t i = 0; i < alg.support.size(); ++i) {
    if (i) out += ",";
    out += alg.category->labels[alg.support[i]];
  }
  return out;
}

FrobeniusAlgebra frobenius_from_spec(const std::string& spec,
                                     std::shared_ptr<const FusionData> category,
                                     bool allow_invalid) {
  if (spec == "trivial") return TrivialFrobenius{std::move(category)};
  if (spec.rfind("group:", 0) == 0) {
    std::vector<size_t> support;
    std::string rest = spec.substr(6);
    std::stringstream ss(rest);
    std::string label;
    while (std::getline(ss, label, ','))
      if (!label.empty()) support.push_back(category->label_index(label));
    return group_algebra(std::move(category), support);
  }
  PointedFrobenius f = load_frobenius(spec, std::move(category), allow_invalid);
  if (!allow_invalid) return renormalize_special(f);
  return f;
}

}  // namespace ansu
