#include "ansulator/fusion_category.hpp"

#include <algorithm>
#include <sstream>

#include "ansulator/errors.hpp"

namespace ansu {

size_t PointedData::position_of(size_t label) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == label) return i;
  throw MalformedData("label index " + std::to_string(label) + " is not in the pointed table");
}

bool PointedData::contains(size_t label) const {
  return std::find(elements.begin(), elements.end(), label) != elements.end();
}

size_t FusionData::label_index(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw MalformedData("unknown label '" + label + "' in category '" + name + "'");
}

bool FusionData::is_invertible(size_t a) const {
  // a is invertible iff a (x) a* contains only the unit, with multiplicity 1.
  for (size_t c = 0; c < rank(); ++c) {
    unsigned m = n(a, dual[a], c);
    if (c == 0 ? m != 1 : m != 0) return false;
  }
  return true;
}

std::vector<size_t> FusionData::invertible_labels() const {
  std::vector<size_t> out;
  for (size_t a = 0; a < rank(); ++a)
    if (is_invertible(a)) out.push_back(a);
  return out;
}

size_t FusionData::fuse(size_t a, size_t b) const {
  size_t found = rank();
  for (size_t c = 0; c < rank(); ++c) {
    if (n(a, b, c) == 0) continue;
    if (found != rank() || n(a, b, c) != 1)
      throw MalformedData("fuse() needs an invertible factor: " + labels[a] + " x " + labels[b]);
    found = c;
  }
  if (found == rank())
    throw MalformedData("empty fusion product " + labels[a] + " x " + labels[b]);
  return found;
}

namespace {

void require_well_formed(const FusionData& d) {
  const size_t L = d.rank();
  if (L == 0) throw MalformedData("category has no labels");
  if (d.dual.size() != L) throw MalformedData("dual table size != number of labels");
  if (d.fusion.size() != L * L * L) throw MalformedData("fusion tensor is ragged");
  if (d.twist.size() != L) throw MalformedData("twist table size != number of labels");
  if (d.qdim.size() != L) throw MalformedData("qdim table size != number of labels");
  for (size_t a : d.dual)
    if (a >= L) throw MalformedData("dual index out of range");
  if (d.pointed) {
    const auto& p = *d.pointed;
    const size_t H = p.elements.size();
    if (H == 0) throw MalformedData("pointed table has no elements");
    for (size_t e : p.elements)
      if (e >= L) throw MalformedData("pointed element index out of range");
    if (p.braiding.size() != H) throw MalformedData("braiding table is ragged");
    for (const auto& row : p.braiding)
      if (row.size() != H) throw MalformedData("braiding table is ragged");
    if (p.omega.size() != H) throw MalformedData("omega table is ragged");
    for (const auto& plane : p.omega) {
      if (plane.size() != H) throw MalformedData("omega table is ragged");
      for (const auto& row : plane)
        if (row.size() != H) throw MalformedData("omega table is ragged");
    }
  }
}

bool is_root_of_unity(const Cyclotomic& x) {
  // Roots of unity in Q(zeta_N) are +-zeta_N^k, so x^(2N) = 1 decides it.
  return x.pow(2 * x.order()) == Cyclotomic::one();
}

void check_pointed(const FusionData& d, std::vector<std::string>& report) {
  const auto& p = *d.pointed;
  const size_t H = p.elements.size();
  auto entry = [&](const std::string& s) { report.push_back("pointed: " + s); };

  if (p.elements[0] != 0) entry("elements[0] must be the unit label");
  for (size_t e : p.elements)
    if (!d.is_invertible(e)) entry("element '" + d.labels[e] + "' is not invertible");

  // closure under fusion and duals
  for (size_t i = 0; i < H; ++i) {
    if (!p.contains(d.dual[p.elements[i]]))
      entry("elements not closed under duals at '" + d.labels[p.elements[i]] + "'");
    for (size_t j = 0; j < H; ++j) {
      size_t c = d.fuse(p.elements[i], p.elements[j]);
      if (!p.contains(c)) {
        entry("elements not closed under fusion at '" + d.labels[p.elements[i]] + "' x '" +
              d.labels[p.elements[j]] + "'");
        return;  // tables cannot be interpreted beyond this point
      }
    }
  }

  auto mul = [&](size_t i, size_t j) { return p.position_of(d.fuse(p.elements[i], p.elements[j])); };
  const auto& sg = p.braiding;
  const auto& om = p.omega;

  for (size_t i = 0; i < H; ++i)
    for (size_t j = 0; j < H; ++j) {
      if (sg[i][j].is_zero()) entry("braiding scalar is zero");
      for (size_t k = 0; k < H; ++k)
        if (om[i][j][k].is_zero()) entry("omega scalar is zero");
    }
  if (!report.empty()) return;

  for (size_t i = 0; i < H; ++i) {
    if (sg[0][i] != Cyclotomic::one() || sg[i][0] != Cyclotomic::one())
      entry("braiding is not unit-normalized");
    for (size_t j = 0; j < H; ++j)
      if (om[0][i][j] != Cyclotomic::one() || om[i][0][j] != Cyclotomic::one() ||
          om[i][j][0] != Cyclotomic::one())
        entry("omega is not normalized");
  }

  // 3-cocycle identity
  for (size_t a = 0; a < H; ++a)
    for (size_t b = 0; b < H; ++b)
      for (size_t c = 0; c < H; ++c)
        for (size_t e = 0; e < H; ++e) {
          Cyclotomic lhs = om[b][c][e] * om[a][mul(b, c)][e] * om[a][b][c];
          Cyclotomic rhs = om[mul(a, b)][c][e] * om[a][b][mul(c, e)];
          if (lhs != rhs) {
            entry("omega fails the 3-cocycle identity at (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(e) + ")");
            goto cocycle_done;
          }
        }
cocycle_done:

  // hexagon relations
  for (size_t a = 0; a < H; ++a)
    for (size_t b = 0; b < H; ++b)
      for (size_t c = 0; c < H; ++c) {
        Cyclotomic h1l = om[b][c][a] * sg[a][mul(b, c)] * om[a][b][c];
        Cyclotomic h1r = sg[a][c] * om[b][a][c] * sg[a][b];
        if (h1l != h1r) {
          entry("hexagon (1) fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ")");
          goto hex_done;
        }
        Cyclotomic h2l = sg[mul(a, b)][c] * om[a][c][b];
        Cyclotomic h2r = sg[a][c] * sg[b][c] * om[c][a][b] * om[a][b][c];
        if (h2l != h2r) {
          entry("hexagon (2) fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ")");
          goto hex_done;
        }
      }
hex_done:

  // stored twists come from the braiding diagonal, and the balancing holds
  for (size_t a = 0; a < H; ++a) {
    if (d.twist[p.elements[a]] != sg[a][a])
      entry("twist of '" + d.labels[p.elements[a]] + "' does not equal the braiding diagonal");
    for (size_t b = 0; b < H; ++b) {
      Cyclotomic lhs = d.twist[p.elements[mul(a, b)]];
      Cyclotomic rhs = sg[a][b] * sg[b][a] * d.twist[p.elements[a]] * d.twist[p.elements[b]];
      if (lhs != rhs) {
        entry("balancing theta(ab) = b(a,b) b(b,a) theta(a) theta(b) fails");
        return;
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate_fusion_data(const FusionData& d) {
  require_well_formed(d);
  std::vector<std::string> report;
  const size_t L = d.rank();
  auto kron = [](size_t x, size_t y) -> unsigned { return x == y ? 1u : 0u; };

  // unit constraints
  for (size_t a = 0; a < L && report.size() < 64; ++a)
    for (size_t c = 0; c < L; ++c) {
      if (d.n(0, a, c) != kron(a, c))
        report.push_back("unit: N[0][" + d.labels[a] + "][" + d.labels[c] + "] != delta");
      if (d.n(a, 0, c) != kron(a, c))
        report.push_back("unit: N[" + d.labels[a] + "][0][" + d.labels[c] + "] != delta");
    }

  // duality
  if (d.dual[0] != 0) report.push_back("duality: 0* != 0");
  for (size_t a = 0; a < L; ++a) {
    if (d.dual[d.dual[a]] != a)
      report.push_back("duality: dual is not an involution at '" + d.labels[a] + "'");
    for (size_t b = 0; b < L; ++b)
      if (d.n(a, b, 0) != kron(b, d.dual[a])) {
        report.push_back("duality: N[" + d.labels[a] + "][" + d.labels[b] + "][0] != delta_{b,a*}");
        break;
      }
  }

  // fusion associativity: sum_e N[a][b][e] N[e][c][x] = sum_f N[b][c][f] N[a][f][x]
  for (size_t a = 0; a < L; ++a)
    for (size_t b = 0; b < L; ++b)
      for (size_t c = 0; c < L; ++c)
        for (size_t x = 0; x < L; ++x) {
          unsigned lhs = 0, rhs = 0;
          for (size_t e = 0; e < L; ++e) lhs += d.n(a, b, e) * d.n(e, c, x);
          for (size_t f = 0; f < L; ++f) rhs += d.n(b, c, f) * d.n(a, f, x);
          if (lhs != rhs) {
            report.push_back("fusion is not associative at (" + d.labels[a] + "," + d.labels[b] +
                             "," + d.labels[c] + "," + d.labels[x] + ")");
            goto assoc_done;
          }
        }
assoc_done:

  // twists
  if (d.twist[0] != Cyclotomic::one()) report.push_back("twist: theta_I != 1");
  for (size_t a = 0; a < L; ++a) {
    if (!is_root_of_unity(d.twist[a]))
      report.push_back("twist: theta of '" + d.labels[a] + "' is not a root of unity");
    if (d.twist[d.dual[a]] != d.twist[a])
      report.push_back("twist: theta_{a*} != theta_a at '" + d.labels[a] + "'");
  }

  // quantum dimensions and the total dimension
  if (d.qdim[0] != Cyclotomic::one()) report.push_back("qdim: d_I != 1");
  Cyclotomic dim_sq = Cyclotomic::zero();
  for (size_t a = 0; a < L; ++a) {
    if (d.qdim[a].conjugate() != d.qdim[a])
      report.push_back("qdim: d of '" + d.labels[a] + "' is not conjugation-fixed");
    if (!d.qdim[a].embeds_to_positive_real(kSignPrecisionBits, kSignMargin))
      report.push_back("qdim: d of '" + d.labels[a] + "' does not embed to a positive real");
    dim_sq = dim_sq + d.qdim[a] * d.qdim[a];
  }
  if (d.global_dim_sq != dim_sq)
    report.push_back("derived-data mismatch: stored D^2 != sum of d_a^2");
  if (d.total_dim * d.total_dim != dim_sq)
    report.push_back("total_dim: D^2 != sum of d_a^2");
  if (!d.total_dim.embeds_to_positive_real(kSignPrecisionBits, kSignMargin))
    report.push_back("total_dim: D does not embed to a positive real");

  if (d.pointed) check_pointed(d, report);
  return report;
}

std::vector<std::string> validate_fusion_data(const FusionData& d, const SMatrixData& derived) {
  std::vector<std::string> report = validate_fusion_data(d);
  SMatrixData fresh = compute_smatrix(d);
  if (derived.gauss_plus != fresh.gauss_plus)
    report.push_back("derived-data mismatch: stale gauss_plus");
  if (derived.gauss_minus != fresh.gauss_minus)
    report.push_back("derived-data mismatch: stale gauss_minus");
  if (derived.anomaly != fresh.anomaly)
    report.push_back("derived-data mismatch: stale anomaly");
  if (!cyc_mat_equal(derived.stilde, fresh.stilde))
    report.push_back("derived-data mismatch: stale stilde");
  return report;
}

SMatrixData compute_smatrix(const FusionData& d) {
  const size_t L = d.rank();
  SMatrixData out;
  out.stilde.assign(L, std::vector<Cyclotomic>(L));
  Cyclotomic dinv = d.total_dim.inverse();
  for (size_t a = 0; a < L; ++a) {
    Cyclotomic ta_inv = d.twist[a].inverse();
    for (size_t b = 0; b < L; ++b) {
      Cyclotomic acc = Cyclotomic::zero();
      Cyclotomic tb_inv = d.twist[b].inverse();
      for (size_t c = 0; c < L; ++c) {
        unsigned m = d.n(a, b, c);
        if (m == 0) continue;
        Cyclotomic term = d.twist[c] * ta_inv * tb_inv * d.qdim[c];
        if (m != 1) term = Cyclotomic(static_cast<long>(m)) * term;
        acc = acc + term;
      }
      out.stilde[a][b] = acc.reduced();
    }
  }
  out.s_normalized.assign(L, std::vector<Cyclotomic>(L));
  for (size_t a = 0; a < L; ++a)
    for (size_t b = 0; b < L; ++b) out.s_normalized[a][b] = (out.stilde[a][b] * dinv).reduced();

  Cyclotomic pp = Cyclotomic::zero(), pm = Cyclotomic::zero();
  for (size_t a = 0; a < L; ++a) {
    Cyclotomic dsq = d.qdim[a] * d.qdim[a];
    pp = pp + d.twist[a] * dsq;
    pm = pm + d.twist[a].inverse() * dsq;
  }
  out.gauss_plus = pp.reduced();
  out.gauss_minus = pm.reduced();
  out.anomaly = (out.gauss_plus * dinv).reduced();
  return out;
}

bool is_modular(const FusionData& d) {
  return cyc_mat_invertible(compute_smatrix(d).stilde);
}

bool verlinde_consistency(const FusionData& d) {
  if (!is_modular(d)) throw NotModular("Verlinde consistency requires a modular category");
  const size_t L = d.rank();
  SMatrixData s = compute_smatrix(d);
  Cyclotomic dsq_inv = (d.total_dim * d.total_dim).inverse();
  for (size_t a = 0; a < L; ++a)
    for (size_t b = 0; b < L; ++b)
      for (size_t c = 0; c < L; ++c) {
        Cyclotomic acc = Cyclotomic::zero();
        for (size_t x = 0; x < L; ++x) {
          acc = acc + s.stilde[a][x] * s.stilde[b][x] * s.stilde[c][x].conjugate() *
                          s.stilde[0][x].inverse();
        }
        acc = acc * dsq_inv;
        if (acc != Cyclotomic(static_cast<long>(d.n(a, b, c)))) return false;
      }
  return true;
}

CycMatrix cyc_identity(size_t n) {
  CycMatrix m(n, std::vector<Cyclotomic>(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = Cyclotomic::one();
  return m;
}

CycMatrix cyc_mat_mul(const CycMatrix& a, const CycMatrix& b) {
  const size_t n = a.size();
  CycMatrix out(n, std::vector<Cyclotomic>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Cyclotomic acc = Cyclotomic::zero();
      for (size_t k = 0; k < n; ++k) {
        if (a[i][k].is_zero()) continue;
        acc = acc + a[i][k] * b[k][j];
      }
      out[i][j] = acc.reduced();
    }
  return out;
}

std::vector<Cyclotomic> cyc_mat_vec(const CycMatrix& a, const std::vector<Cyclotomic>& v) {
  const size_t n = a.size();
  std::vector<Cyclotomic> out(n);
  for (size_t i = 0; i < n; ++i) {
    Cyclotomic acc = Cyclotomic::zero();
    for (size_t k = 0; k < n; ++k) {
      if (v[k].is_zero()) continue;
      acc = acc + a[i][k] * v[k];
    }
    out[i] = acc.reduced();
  }
  return out;
}

std::vector<Cyclotomic> cyc_vec_mat(const std::vector<Cyclotomic>& v, const CycMatrix& a) {
  const size_t n = a.size();
  std::vector<Cyclotomic> out(n);
  for (size_t j = 0; j < n; ++j) {
    Cyclotomic acc = Cyclotomic::zero();
    for (size_t k = 0; k < n; ++k) {
      if (v[k].is_zero()) continue;
      acc = acc + v[k] * a[k][j];
    }
    out[j] = acc.reduced();
  }
  return out;
}

bool cyc_mat_equal(const CycMatrix& a, const CycMatrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

bool cyc_mat_invertible(CycMatrix m) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = n;
    for (size_t row = col; row < n; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot == n) return false;
    std::swap(m[col], m[pivot]);
    Cyclotomic inv = m[col][col].inverse();
    for (size_t j = col; j < n; ++j) m[col][j] = (m[col][j] * inv).reduced();
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      Cyclotomic f = m[row][col];
      for (size_t j = col; j < n; ++j) m[row][j] = (m[row][j] - f * m[col][j]).reduced();
    }
  }
  return true;
}

}  // namespace ansu
