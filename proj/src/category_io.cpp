#include <fstream>
#include <set>

#include "ansulator/errors.hpp"
#include "ansulator/io.hpp"

namespace ansu {

using nlohmann::json;

namespace {

const json& require_key(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + "/" + key, "missing required key");
  return *it;
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw SchemaError(where + "/" + it.key(), "unknown key");
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where, "expected a string");
  return j.get<std::string>();
}

long require_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where, "expected an integer");
  return j.get<long>();
}

size_t label_of(const FusionData& d, const json& j, const std::string& where) {
  std::string name = require_string(j, where);
  for (size_t i = 0; i < d.labels.size(); ++i)
    if (d.labels[i] == name) return i;
  throw SchemaError(where, "unknown label '" + name + "'");
}

json save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return j;
}

}  // namespace

json cyclotomic_to_json(const Cyclotomic& x) {
  Cyclotomic r = x.reduced();
  json coeffs = json::array();
  for (const auto& c : r.coeffs()) coeffs.push_back(rational_to_string(c));
  return json{{"order", r.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected a scalar object {order, coeffs}");
  reject_unknown_keys(j, {"order", "coeffs"}, where);
  long order = require_integer(require_key(j, "order", where), where + "/order");
  if (order < 1) throw SchemaError(where + "/order", "order must be positive");
  const json& coeffs = require_key(j, "coeffs", where);
  if (!coeffs.is_array() || coeffs.size() != static_cast<size_t>(order))
    throw SchemaError(where + "/coeffs", "expected exactly " + std::to_string(order) + " strings");
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    try {
      c.push_back(rational_from_string(require_string(coeffs[i], where + "/coeffs")));
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      throw SchemaError(where + "/coeffs/" + std::to_string(i), e.what());
    }
  }
  return Cyclotomic(order, std::move(c));
}

json category_to_json(const FusionData& d) {
  json j;
  j["name"] = d.name;
  j["labels"] = d.labels;
  json dual = json::array();
  for (size_t a = 0; a < d.rank(); ++a) dual.push_back(d.labels[d.dual[a]]);
  j["dual"] = dual;
  json fusion = json::array();
  for (size_t a = 0; a < d.rank(); ++a)
    for (size_t b = 0; b < d.rank(); ++b)
      for (size_t c = 0; c < d.rank(); ++c)
        if (d.n(a, b, c) != 0)
          fusion.push_back(json::array({d.labels[a], d.labels[b], d.labels[c], d.n(a, b, c)}));
  j["fusion"] = fusion;
  json twist = json::object(), qdim = json::object();
  for (size_t a = 0; a < d.rank(); ++a) {
    twist[d.labels[a]] = cyclotomic_to_json(d.twist[a]);
    qdim[d.labels[a]] = cyclotomic_to_json(d.qdim[a]);
  }
  j["twist"] = twist;
  j["qdim"] = qdim;
  j["total_dim"] = cyclotomic_to_json(d.total_dim);
  if (d.pointed) {
    const auto& p = *d.pointed;
    json elements = json::array();
    for (size_t e : p.elements) elements.push_back(d.labels[e]);
    json omega = json::array(), braiding = json::array();
    for (size_t i = 0; i < p.elements.size(); ++i)
      for (size_t k = 0; k < p.elements.size(); ++k) {
        if (p.braiding[i][k] != Cyclotomic::one())
          braiding.push_back(json::array({d.labels[p.elements[i]], d.labels[p.elements[k]],
                                          cyclotomic_to_json(p.braiding[i][k])}));
        for (size_t l = 0; l < p.elements.size(); ++l)
          if (p.omega[i][k][l] != Cyclotomic::one())
            omega.push_back(json::array({d.labels[p.elements[i]], d.labels[p.elements[k]],
                                         d.labels[p.elements[l]],
                                         cyclotomic_to_json(p.omega[i][k][l])}));
      }
    j["pointed"] = json{{"elements", elements}, {"omega", omega}, {"braiding", braiding}};
  }
  return j;
}

FusionData category_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("", "expected a category object");
  reject_unknown_keys(
      j, {"name", "labels", "dual", "fusion", "twist", "qdim", "total_dim", "pointed", "fsymbols"},
      "");
  FusionData d;
  d.name = require_string(require_key(j, "name", ""), "/name");

  const json& labels = require_key(j, "labels", "");
  if (!labels.is_array() || labels.empty()) throw SchemaError("/labels", "expected a non-empty array");
  std::set<std::string> seen;
  for (size_t i = 0; i < labels.size(); ++i) {
    std::string name = require_string(labels[i], "/labels/" + std::to_string(i));
    if (!seen.insert(name).second) throw SchemaError("/labels", "duplicate label '" + name + "'");
    d.labels.push_back(std::move(name));
  }
  const size_t L = d.rank();

  const json& dual = require_key(j, "dual", "");
  if (!dual.is_array() || dual.size() != L)
    throw SchemaError("/dual", "expected one entry per label");
  for (size_t i = 0; i < L; ++i) d.dual.push_back(label_of(d, dual[i], "/dual/" + std::to_string(i)));

  const json& fusion = require_key(j, "fusion", "");
  if (!fusion.is_array()) throw SchemaError("/fusion", "expected an array of [a,b,c,multiplicity]");
  d.fusion.assign(L * L * L, 0);
  for (size_t i = 0; i < fusion.size(); ++i) {
    const std::string where = "/fusion/" + std::to_string(i);
    const json& entry = fusion[i];
    if (!entry.is_array() || entry.size() != 4)
      throw SchemaError(where, "expected [a, b, c, multiplicity]");
    size_t a = label_of(d, entry[0], where), b = label_of(d, entry[1], where),
           c = label_of(d, entry[2], where);
    long m = require_integer(entry[3], where);
    if (m < 0) throw SchemaError(where, "multiplicity must be non-negative");
    size_t idx = (a * L + b) * L + c;
    if (d.fusion[idx] != 0) throw SchemaError(where, "duplicate fusion entry");
    d.fusion[idx] = static_cast<unsigned>(m);
  }

  const json& twist = require_key(j, "twist", "");
  const json& qdim = require_key(j, "qdim", "");
  for (const auto* tbl : {&twist, &qdim}) {
    const std::string where = tbl == &twist ? "/twist" : "/qdim";
    if (!tbl->is_object()) throw SchemaError(where, "expected a label -> scalar map");
    for (auto it = tbl->begin(); it != tbl->end(); ++it)
      if (!seen.count(it.key())) throw SchemaError(where + "/" + it.key(), "unknown label");
  }
  for (size_t a = 0; a < L; ++a) {
    if (!twist.contains(d.labels[a])) throw SchemaError("/twist/" + d.labels[a], "missing twist");
    if (!qdim.contains(d.labels[a])) throw SchemaError("/qdim/" + d.labels[a], "missing qdim");
    d.twist.push_back(cyclotomic_from_json(twist.at(d.labels[a]), "/twist/" + d.labels[a]));
    d.qdim.push_back(cyclotomic_from_json(qdim.at(d.labels[a]), "/qdim/" + d.labels[a]));
  }
  d.total_dim = cyclotomic_from_json(require_key(j, "total_dim", ""), "/total_dim");
  Cyclotomic dim_sq = Cyclotomic::zero();
  for (const auto& q : d.qdim) dim_sq = dim_sq + q * q;
  d.global_dim_sq = dim_sq.reduced();

  if (j.contains("pointed")) {
    const json& jp = j.at("pointed");
    reject_unknown_keys(jp, {"group", "elements", "omega", "braiding"}, "/pointed");
    PointedData p;
    const json& elements = require_key(jp, "elements", "/pointed");
    if (!elements.is_array() || elements.empty())
      throw SchemaError("/pointed/elements", "expected a non-empty array");
    for (size_t i = 0; i < elements.size(); ++i)
      p.elements.push_back(label_of(d, elements[i], "/pointed/elements/" + std::to_string(i)));
    const size_t H = p.elements.size();
    if (jp.contains("group")) {
      const json& g = jp.at("group");
      reject_unknown_keys(g, {"type", "orders"}, "/pointed/group");
      if (require_string(require_key(g, "type", "/pointed/group"), "/pointed/group/type") !=
          "product_of_cyclics")
        throw SchemaError("/pointed/group/type", "only product_of_cyclics is supported");
      const json& orders = require_key(g, "orders", "/pointed/group");
      if (!orders.is_array()) throw SchemaError("/pointed/group/orders", "expected an array");
      long total = 1;
      for (size_t i = 0; i < orders.size(); ++i)
        total *= require_integer(orders[i], "/pointed/group/orders/" + std::to_string(i));
      if (total != static_cast<long>(H))
        throw SchemaError("/pointed/group/orders", "orders do not multiply to the element count");
    }
    p.braiding.assign(H, std::vector<Cyclotomic>(H, Cyclotomic::one()));
    p.omega.assign(H, std::vector<std::vector<Cyclotomic>>(H, std::vector<Cyclotomic>(H, Cyclotomic::one())));
    auto pos = [&](size_t lab, const std::string& where) {
      for (size_t i = 0; i < H; ++i)
        if (p.elements[i] == lab) return i;
      throw SchemaError(where, "label is not a pointed element");
    };
    if (jp.contains("braiding")) {
      const json& br = jp.at("braiding");
      if (!br.is_array()) throw SchemaError("/pointed/braiding", "expected an array of [a,b,scalar]");
      for (size_t i = 0; i < br.size(); ++i) {
        const std::string where = "/pointed/braiding/" + std::to_string(i);
        if (!br[i].is_array() || br[i].size() != 3) throw SchemaError(where, "expected [a,b,scalar]");
        size_t a = pos(label_of(d, br[i][0], where), where);
        size_t b = pos(label_of(d, br[i][1], where), where);
        p.braiding[a][b] = cyclotomic_from_json(br[i][2], where);
      }
    }
    if (jp.contains("omega")) {
      const json& om = jp.at("omega");
      if (!om.is_array()) throw SchemaError("/pointed/omega", "expected an array of [a,b,c,scalar]");
      for (size_t i = 0; i < om.size(); ++i) {
        const std::string where = "/pointed/omega/" + std::to_string(i);
        if (!om[i].is_array() || om[i].size() != 4) throw SchemaError(where, "expected [a,b,c,scalar]");
        size_t a = pos(label_of(d, om[i][0], where), where);
        size_t b = pos(label_of(d, om[i][1], where), where);
        size_t c = pos(label_of(d, om[i][2], where), where);
        p.omega[a][b][c] = cyclotomic_from_json(om[i][3], where);
      }
    }
    d.pointed = std::move(p);
  }
  return d;
}

FusionData load_category(const std::string& path) {
  FusionData d = category_from_json(load_json(path));
  auto report = validate_fusion_data(d);
  if (!report.empty()) throw ValidationError(std::move(report));
  return d;
}

void save_category(const FusionData& d, const std::string& path) {
  auto report = validate_fusion_data(d);
  if (!report.empty()) throw ValidationError(std::move(report));
  save_json(category_to_json(d), path);
}

json frobenius_to_json(const PointedFrobenius& f) {
  const FusionData& cat = *f.category;
  json j;
  j["category"] = cat.name;
  json support = json::array();
  for (size_t a : f.support) support.push_back(cat.labels[a]);
  j["support"] = support;
  json mu = json::array(), delta = json::array();
  for (size_t i = 0; i < f.support.size(); ++i)
    for (size_t k = 0; k < f.support.size(); ++k) {
      mu.push_back(json::array({cat.labels[f.support[i]], cat.labels[f.support[k]],
                                cyclotomic_to_json(f.mu[i][k])}));
      delta.push_back(json::array({cat.labels[f.support[i]], cat.labels[f.support[k]],
                                   cyclotomic_to_json(f.delta[i][k])}));
    }
  j["mu"] = mu;
  j["delta"] = delta;
  j["eta"] = cyclotomic_to_json(f.eta);
  j["eps"] = cyclotomic_to_json(f.eps);
  j["lambda"] = cyclotomic_to_json(f.lambda);
  j["lambda_prime"] = cyclotomic_to_json(f.lambda_prime);
  return j;
}

PointedFrobenius frobenius_from_json(const json& j, std::shared_ptr<const FusionData> category) {
  if (!j.is_object()) throw SchemaError("", "expected a frobenius object");
  reject_unknown_keys(j, {"category", "support", "mu", "delta", "eta", "eps", "lambda", "lambda_prime"},
                      "");
  const FusionData& cat = *category;
  std::string catname = require_string(require_key(j, "category", ""), "/category");
  if (catname != cat.name)
    throw CategoryMismatch("frobenius file references category '" + catname + "' but '" +
                           cat.name + "' was supplied");
  PointedFrobenius f;
  f.category = std::move(category);
  const json& support = require_key(j, "support", "");
  if (!support.is_array() || support.empty())
    throw SchemaError("/support", "expected a non-empty array of labels");
  for (size_t i = 0; i < support.size(); ++i)
    f.support.push_back(label_of(cat, support[i], "/support/" + std::to_string(i)));
  const size_t H = f.support.size();
  auto pos = [&](size_t lab, const std::string& where) {
    for (size_t i = 0; i < H; ++i)
      if (f.support[i] == lab) return i;
    throw SchemaError(where, "label is not in the support");
  };
  f.mu.assign(H, std::vector<Cyclotomic>(H));
  f.delta.assign(H, std::vector<Cyclotomic>(H));
  std::vector<std::vector<bool>> mu_seen(H, std::vector<bool>(H, false)), dl_seen = mu_seen;
  for (const char* key : {"mu", "delta"}) {
    const json& tbl = require_key(j, key, "");
    const std::string base = std::string("/") + key;
    if (!tbl.is_array()) throw SchemaError(base, "expected an array of [a,b,scalar]");
    for (size_t i = 0; i < tbl.size(); ++i) {
      const std::string where = base + "/" + std::to_string(i);
      if (!tbl[i].is_array() || tbl[i].size() != 3) throw SchemaError(where, "expected [a,b,scalar]");
      size_t a = pos(label_of(cat, tbl[i][0], where), where);
      size_t b = pos(label_of(cat, tbl[i][1], where), where);
      Cyclotomic v = cyclotomic_from_json(tbl[i][2], where);
      if (std::string(key) == "mu") {
        mu_seen[a][b] = true;
        f.mu[a][b] = std::move(v);
      } else {
        dl_seen[a][b] = true;
        f.delta[a][b] = std::move(v);
      }
    }
  }
  for (size_t a = 0; a < H; ++a)
    for (size_t b = 0; b < H; ++b) {
      if (!mu_seen[a][b]) throw SchemaError("/mu", "missing entry for a support pair");
      if (!dl_seen[a][b]) throw SchemaError("/delta", "missing entry for a support pair");
    }
  f.eta = cyclotomic_from_json(require_key(j, "eta", ""), "/eta");
  f.eps = cyclotomic_from_json(require_key(j, "eps", ""), "/eps");
  f.lambda = cyclotomic_from_json(require_key(j, "lambda", ""), "/lambda");
  f.lambda_prime = cyclotomic_from_json(require_key(j, "lambda_prime", ""), "/lambda_prime");
  return f;
}

PointedFrobenius load_frobenius(const std::string& path, std::shared_ptr<const FusionData> category,
                                bool allow_invalid) {
  PointedFrobenius f = frobenius_from_json(load_json(path), std::move(category));
  if (!allow_invalid) {
    auto report = verify_frobenius(f);
    if (!report.empty()) throw ValidationError(std::move(report));
  }
  return f;
}

void save_frobenius(const PointedFrobenius& f, const std::string& path) {
  save_json(frobenius_to_json(f), path);
}

}  // namespace ansu
