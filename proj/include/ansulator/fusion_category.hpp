#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ansulator/cyclotomic.hpp"

namespace ansu {

// Working precision and margin for the "embeds to a positive real" style
// decisions.  The sign of an exact nonzero real is decidable at finite
// precision given a lower bound; these are the documented defaults.
inline constexpr unsigned kSignPrecisionBits = 128;
inline constexpr double kSignMargin = 1e-20;

// Braiding and associator scalars on the invertible labels.  Tables are
// indexed by positions into `elements` (not by raw label index).
struct PointedData {
  std::vector<size_t> elements;  // invertible label indices; elements[0] == 0
  std::vector<std::vector<Cyclotomic>> braiding;            // sigma(a,b)
  std::vector<std::vector<std::vector<Cyclotomic>>> omega;  // associator 3-cocycle

  // Position of a label index inside `elements`; throws if absent.
  size_t position_of(size_t label) const;
  bool contains(size_t label) const;
};

// Skeletal ribbon fusion category: fusion multiplicities N[a][b][c], duals,
// twists theta_a, quantum dimensions d_a and an explicit total dimension D
// with D^2 = sum_a d_a^2.  F-symbols are not stored; everything computed
// here needs only this data (plus omega/braiding scalars on the pointed
// part).  Immutable after validation; safe for concurrent reads.
struct FusionData {
  std::string name;
  std::vector<std::string> labels;  // index 0 = monoidal unit
  std::vector<size_t> dual;         // involution a -> a*
  std::vector<unsigned> fusion;     // flattened N[a][b][c], c fastest
  std::vector<Cyclotomic> twist;
  std::vector<Cyclotomic> qdim;
  Cyclotomic global_dim_sq;  // D^2 (stored; validator recomputes and compares)
  Cyclotomic total_dim;      // D, explicit input verified by squaring
  std::optional<PointedData> pointed;

  size_t rank() const { return labels.size(); }
  unsigned n(size_t a, size_t b, size_t c) const {
    return fusion[(a * rank() + b) * rank() + c];
  }
  size_t label_index(const std::string& name) const;  // throws MalformedData
  bool is_invertible(size_t a) const;
  std::vector<size_t> invertible_labels() const;
  // Unique c with N[a][b][c] = 1; requires a (or b) invertible.
  size_t fuse(size_t a, size_t b) const;
};

struct SMatrixData {
  std::vector<std::vector<Cyclotomic>> stilde;        // s~_{ab}
  std::vector<std::vector<Cyclotomic>> s_normalized;  // s~ / D
  Cyclotomic gauss_plus;   // p+ = sum theta_a d_a^2
  Cyclotomic gauss_minus;  // p- = sum theta_a^{-1} d_a^2
  Cyclotomic anomaly;      // kappa = p+ / D
};

// Checks every invariant of the data model; returns one entry per violation
// (empty = valid).  Throws MalformedData for ragged tensors or out-of-range
// indices.
std::vector<std::string> validate_fusion_data(const FusionData& d);
// Additionally cross-checks externally held derived S-data against a fresh
// computation (catches stale gauss sums / stilde after mutation).
std::vector<std::string> validate_fusion_data(const FusionData& d, const SMatrixData& derived);

// s~_{ab} = sum_c N[a][b][c] (theta_c / (theta_a theta_b)) d_c,
// the trace of the double braiding c_{b,a} c_{a,b}.
SMatrixData compute_smatrix(const FusionData& d);

// True iff s~ is invertible over the cyclotomic field (exact elimination).
bool is_modular(const FusionData& d);

// Verlinde cross-validation: N[a][b][c] = sum_x s_ax s_bx conj(s_cx) / s_0x
// with s = s~/D, evaluated exactly.  Throws NotModular below precondition.
bool verlinde_consistency(const FusionData& d);

// Built-in examples.  Accepted specs:
//   "unit" | "fibonacci" | "ising" | "toric" | "toric_code" | "semion"
//   "su2:<k>"            su(2) level k, 1 <= k <= 8
//   "zn:<n>"             modular pointed Z_n, 2 <= n <= 64
//   "pointed:<n1>x<n2>x...:<m1>,<m2>,...[:<c12>,<c13>,...]"
// The pointed family carries the quadratic form q(g_i) = zeta_{2 n_i}^{m_i}
// per cyclic generator (m_i must be even when n_i is odd) and cross
// bicharacter exponents c_ij with beta(g_i, g_j) = zeta_{gcd(n_i,n_j)}^{c_ij}.
std::shared_ptr<const FusionData> builtin_category(const std::string& spec);
std::vector<std::string> builtin_category_names();

FusionData make_unit_category();
FusionData make_fibonacci();
FusionData make_ising();
FusionData make_su2_level(int k);
FusionData make_pointed(const std::vector<long>& orders, const std::vector<long>& form_params,
                        const std::vector<long>& cross_params, std::string name = "");

// Small exact dense matrices over the cyclotomics.
using CycMatrix = std::vector<std::vector<Cyclotomic>>;
CycMatrix cyc_identity(size_t n);
CycMatrix cyc_mat_mul(const CycMatrix& a, const CycMatrix& b);
std::vector<Cyclotomic> cyc_mat_vec(const CycMatrix& a, const std::vector<Cyclotomic>& v);
std::vector<Cyclotomic> cyc_vec_mat(const std::vector<Cyclotomic>& v, const CycMatrix& a);
bool cyc_mat_equal(const CycMatrix& a, const CycMatrix& b);
bool cyc_mat_invertible(CycMatrix m);  // consumes its argument

}  // namespace ansu
