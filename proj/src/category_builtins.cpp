#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ansulator/errors.hpp"
#include "ansulator/fusion_category.hpp"

namespace ansu {

namespace {

void set_n(FusionData& d, size_t a, size_t b, size_t c, unsigned m) {
  d.fusion[(a * d.rank() + b) * d.rank() + c] = m;
}

void finish(FusionData& d) {
  Cyclotomic dim_sq = Cyclotomic::zero();
  for (const auto& q : d.qdim) dim_sq = dim_sq + q * q;
  d.global_dim_sq = dim_sq.reduced();
  auto report = validate_fusion_data(d);
  if (!report.empty()) throw ValidationError(std::move(report));
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UnsupportedSpec("cannot parse " + what + " from '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

FusionData make_unit_category() {
  FusionData d;
  d.name = "unit";
  d.labels = {"1"};
  d.dual = {0};
  d.fusion = {1};
  d.twist = {Cyclotomic::one()};
  d.qdim = {Cyclotomic::one()};
  d.total_dim = Cyclotomic::one();
  PointedData p;
  p.elements = {0};
  p.braiding = {{Cyclotomic::one()}};
  p.omega = {{{Cyclotomic::one()}}};
  d.pointed = std::move(p);
  finish(d);
  return d;
}

FusionData make_fibonacci() {
  FusionData d;
  d.name = "fibonacci";
  d.labels = {"1", "tau"};
  d.dual = {0, 1};
  d.fusion.assign(8, 0);
  set_n(d, 0, 0, 0, 1);
  set_n(d, 0, 1, 1, 1);
  set_n(d, 1, 0, 1, 1);
  set_n(d, 1, 1, 0, 1);
  set_n(d, 1, 1, 1, 1);  // tau x tau = 1 + tau
  Cyclotomic phi = -(Cyclotomic::root_of_unity(5, 2) + Cyclotomic::root_of_unity(5, 3));
  d.twist = {Cyclotomic::one(), Cyclotomic::root_of_unity(5, 2)};
  d.qdim = {Cyclotomic::one(), phi};
  // D = 2 sin(2 pi / 5) with D^2 = 2 + phi; lives in Q(zeta_20)
  d.total_dim = Cyclotomic::root_of_unity(20, 19) - Cyclotomic::root_of_unity(20, 11);
  finish(d);
  return d;
}

FusionData make_ising() {
  FusionData d;
  d.name = "ising";
  d.labels = {"1", "sigma", "psi"};
  d.dual = {0, 1, 2};
  d.fusion.assign(27, 0);
  set_n(d, 0, 0, 0, 1);
  set_n(d, 0, 1, 1, 1);
  set_n(d, 0, 2, 2, 1);
  set_n(d, 1, 0, 1, 1);
  set_n(d, 2, 0, 2, 1);
  set_n(d, 1, 1, 0, 1);
  set_n(d, 1, 1, 2, 1);  // sigma x sigma = 1 + psi
  set_n(d, 1, 2, 1, 1);
  set_n(d, 2, 1, 1, 1);
  set_n(d, 2, 2, 0, 1);
  Cyclotomic sqrt2 = Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
  d.twist = {Cyclotomic::one(), Cyclotomic::root_of_unity(16, 1), Cyclotomic(-1)};
  d.qdim = {Cyclotomic::one(), sqrt2, Cyclotomic::one()};
  d.total_dim = Cyclotomic(2);
  finish(d);
  return d;
}

FusionData make_su2_level(int k) {
  if (k < 1 || k > 8) throw UnsupportedSpec("su2 level must satisfy 1 <= k <= 8");
  const long n = k + 2;
  FusionData d;
  d.name = "su2:" + std::to_string(k);
  const size_t L = static_cast<size_t>(k) + 1;
  for (size_t j = 0; j < L; ++j) d.labels.push_back(std::to_string(j));
  d.dual.resize(L);
  for (size_t j = 0; j < L; ++j) d.dual[j] = j;
  d.fusion.assign(L * L * L, 0);
  for (size_t i = 0; i < L; ++i)
    for (size_t j = 0; j < L; ++j)
      for (size_t l = 0; l < L; ++l) {
        long li = static_cast<long>(i), lj = static_cast<long>(j), ll = static_cast<long>(l);
        bool in_range = ll >= std::abs(li - lj) && ll <= std::min(li + lj, 2 * k - li - lj);
        if (in_range && (li + lj + ll) % 2 == 0) set_n(d, i, j, l, 1);
      }
  Cyclotomic zeta = Cyclotomic::root_of_unity(2 * n, 1);
  Cyclotomic denom_inv = (zeta - zeta.pow(-1)).inverse();
  d.twist.resize(L);
  d.qdim.resize(L);
  for (size_t j = 0; j < L; ++j) {
    long lj = static_cast<long>(j);
    d.qdim[j] = ((zeta.pow(lj + 1) - zeta.pow(-(lj + 1))) * denom_inv).reduced();
    d.twist[j] = Cyclotomic::root_of_unity(4 * n, lj * (lj + 2));
  }
  // D = sqrt(2n) / (2 sin(pi/n)), with 2 sin(pi/n) = zeta_{4n}^{3n+2} - zeta_{4n}^{3n-2}
  Cyclotomic two_sin =
      Cyclotomic::root_of_unity(4 * n, 3 * n + 2) - Cyclotomic::root_of_unity(4 * n, 3 * n - 2);
  d.total_dim = (integer_sqrt_cyclotomic(2 * n) * two_sin.inverse()).reduced();
  finish(d);
  return d;
}

FusionData make_pointed(const std::vector<long>& orders, const std::vector<long>& form_params,
                        const std::vector<long>& cross_params, std::string name) {
  const size_t r = orders.size();
  if (r == 0) throw UnsupportedSpec("pointed category needs at least one cyclic factor");
  long total = 1;
  for (long n : orders) {
    if (n < 1) throw UnsupportedSpec("cyclic factor orders must be positive");
    total *= n;
    if (total > 64) throw UnsupportedSpec("pointed group order is limited to 64");
  }
  if (form_params.size() != r)
    throw UnsupportedSpec("need one quadratic form parameter per cyclic factor");
  std::vector<long> cross(cross_params);
  if (cross.empty()) cross.assign(r * (r - 1) / 2, 0);
  if (cross.size() != r * (r - 1) / 2)
    throw UnsupportedSpec("need one cross parameter per unordered factor pair");
  for (size_t i = 0; i < r; ++i)
    if (orders[i] % 2 == 1 && form_params[i] % 2 != 0)
      throw InconsistentPointedData("odd cyclic factors only carry even form parameters");

  const size_t L = static_cast<size_t>(total);
  auto coords = [&](size_t idx) {
    std::vector<long> a(r);
    for (size_t i = r; i-- > 0;) {
      a[i] = static_cast<long>(idx) % orders[i];
      idx = static_cast<size_t>(static_cast<long>(idx) / orders[i]);
    }
    return a;
  };
  auto index_of = [&](const std::vector<long>& a) {
    size_t idx = 0;
    for (size_t i = 0; i < r; ++i) idx = idx * static_cast<size_t>(orders[i]) + static_cast<size_t>(a[i]);
    return idx;
  };

  FusionData d;
  d.name = name.empty() ? "pointed" : std::move(name);
  for (size_t idx = 0; idx < L; ++idx) {
    auto a = coords(idx);
    std::string lab;
    for (size_t i = 0; i < r; ++i) {
      if (i) lab += ".";
      lab += std::to_string(a[i]);
    }
    d.labels.push_back(lab);
  }
  d.dual.resize(L);
  d.fusion.assign(L * L * L, 0);
  for (size_t ia = 0; ia < L; ++ia) {
    auto a = coords(ia);
    std::vector<long> neg(r);
    for (size_t i = 0; i < r; ++i) neg[i] = (orders[i] - a[i]) % orders[i];
    d.dual[ia] = index_of(neg);
    for (size_t ib = 0; ib < L; ++ib) {
      auto b = coords(ib);
      std::vector<long> sum(r);
      for (size_t i = 0; i < r; ++i) sum[i] = (a[i] + b[i]) % orders[i];
      set_n(d, ia, ib, index_of(sum), 1);
    }
  }

  auto cross_at = [&](size_t i, size_t j) {  // i < j
    size_t pos = 0;
    for (size_t x = 0; x < i; ++x) pos += r - 1 - x;
    return cross[pos + (j - i - 1)];
  };
  auto sigma = [&](const std::vector<long>& a, const std::vector<long>& b) {
    Cyclotomic s = Cyclotomic::one();
    for (size_t i = 0; i < r; ++i)
      s = s * Cyclotomic::root_of_unity(2 * orders[i], form_params[i] * a[i] * b[i]);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = i + 1; j < r; ++j) {
        long g = std::gcd(orders[i], orders[j]);
        s = s * Cyclotomic::root_of_unity(g, cross_at(i, j) * a[i] * b[j]);
      }
    return s.reduced();
  };

  PointedData p;
  p.elements.resize(L);
  for (size_t i = 0; i < L; ++i) p.elements[i] = i;
  p.braiding.assign(L, std::vector<Cyclotomic>(L));
  p.omega.assign(L, std::vector<std::vector<Cyclotomic>>(L, std::vector<Cyclotomic>(L)));
  d.twist.resize(L);
  d.qdim.assign(L, Cyclotomic::one());
  for (size_t ia = 0; ia < L; ++ia) {
    auto a = coords(ia);
    for (size_t ib = 0; ib < L; ++ib) {
      auto b = coords(ib);
      p.braiding[ia][ib] = sigma(a, b);
      for (size_t ic = 0; ic < L; ++ic) {
        auto c = coords(ic);
        long parity = 0;
        for (size_t i = 0; i < r; ++i)
          if (b[i] + c[i] >= orders[i]) parity += form_params[i] * a[i];
        p.omega[ia][ib][ic] = (parity % 2 == 0) ? Cyclotomic::one() : Cyclotomic(-1);
      }
    }
    d.twist[ia] = p.braiding[ia][ia];
  }
  d.pointed = std::move(p);
  d.total_dim = integer_sqrt_cyclotomic(total);
  finish(d);
  return d;
}

namespace {

FusionData build_from_spec(const std::string& spec) {
  if (spec == "unit" || spec == "trivial") return make_unit_category();
  if (spec == "fibonacci" || spec == "fib") return make_fibonacci();
  if (spec == "ising") return make_ising();
  if (spec == "toric" || spec == "toric_code") {
    FusionData d = make_pointed({2, 2}, {0, 0}, {1}, "toric");
    d.labels = {"0", "e", "m", "em"};
    return d;
  }
  if (spec == "semion") {
    FusionData d = make_pointed({2}, {1}, {}, "semion");
    d.labels = {"0", "s"};
    return d;
  }
  auto parts = split(spec, ':');
  if (parts[0] == "su2" && parts.size() == 2)
    return make_su2_level(static_cast<int>(parse_long(parts[1], "su2 level")));
  if (parts[0] == "zn" && parts.size() == 2) {
    long n = parse_long(parts[1], "cyclic order");
    if (n < 2 || n > 64) throw UnsupportedSpec("zn order must satisfy 2 <= n <= 64");
    return make_pointed({n}, {n % 2 == 0 ? 1L : 2L}, {}, spec);
  }
  if (parts[0] == "pointed" && (parts.size() == 3 || parts.size() == 4)) {
    std::vector<long> orders, ms, cross;
    for (const auto& s : split(parts[1], 'x')) orders.push_back(parse_long(s, "cyclic order"));
    for (const auto& s : split(parts[2], ',')) ms.push_back(parse_long(s, "form parameter"));
    if (parts.size() == 4 && !parts[3].empty())
      for (const auto& s : split(parts[3], ',')) cross.push_back(parse_long(s, "cross parameter"));
    return make_pointed(orders, ms, cross, spec);
  }
  throw UnsupportedSpec("unknown builtin category spec '" + spec + "'");
}

}  // namespace

std::shared_ptr<const FusionData> builtin_category(const std::string& spec) {
  static std::map<std::string, std::shared_ptr<const FusionData>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(spec);
  if (it != cache.end()) return it->second;
  auto ptr = std::make_shared<const FusionData>(build_from_spec(spec));
  cache.emplace(spec, ptr);
  return ptr;
}

std::vector<std::string> builtin_category_names() {
  std::vector<std::string> out = {"unit", "fibonacci", "ising", "toric", "semion"};
  for (int k = 1; k <= 8; ++k) out.push_back("su2:" + std::to_string(k));
  for (int n = 2; n <= 9; ++n) out.push_back("zn:" + std::to_string(n));
  return out;
}

}  // namespace ansu
