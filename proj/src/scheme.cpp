#include "spherekern/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spherekern {

CoefficientScheme::CoefficientScheme(int d, int k_max, Rule rule, int j)
    : d_(d), k_max_(k_max), rule_(rule), j_(j) {
  if (d < 3) throw std::domain_error("CoefficientScheme: dimension must be >= 3");
  if (k_max < 0) throw std::domain_error("CoefficientScheme: K_max must be >= 0");
  if (rule == Rule::JZero && (j < 1 || j > d - 2)) {
    throw std::domain_error("CoefficientScheme: JZero axis must satisfy 1 <= j <= d-2");
  }
}

CoefficientScheme CoefficientScheme::full(int d, int k_max) {
  return CoefficientScheme(d, k_max, Rule::Full, 0);
}
CoefficientScheme CoefficientScheme::jzero(int d, int k_max, int j) {
  return CoefficientScheme(d, k_max, Rule::JZero, j);
}
CoefficientScheme CoefficientScheme::even_only(int d, int k_max) {
  return CoefficientScheme(d, k_max, Rule::EvenOnly, 0);
}
CoefficientScheme CoefficientScheme::odd_only(int d, int k_max) {
  return CoefficientScheme(d, k_max, Rule::OddOnly, 0);
}
CoefficientScheme CoefficientScheme::custom(int d, int k_max) {
  return CoefficientScheme(d, k_max, Rule::Custom, 0);
}

void CoefficientScheme::check_index_dim(const MultiIndex& a) const {
  a.require_admissible();
  if (a.dim() != d_) {
    throw std::domain_error("CoefficientScheme: multi-index dimension mismatch: " + a.str());
  }
  if (a.degree() > k_max_) {
    throw std::domain_error("CoefficientScheme: degree of " + a.str() + " exceeds K_max=" +
                            std::to_string(k_max_));
  }
}

void CoefficientScheme::set_unit_weights() {
  weight_kind_ = WeightKind::Unit;
  explicit_weights_.clear();
  geometric_ratio_ = 1.0;
}

void CoefficientScheme::set_geometric_weights(double ratio) {
  if (!(ratio > 0.0)) {
    throw std::domain_error("CoefficientScheme: geometric weight ratio must be positive");
  }
  weight_kind_ = WeightKind::Geometric;
  geometric_ratio_ = ratio;
  explicit_weights_.clear();
}

void CoefficientScheme::set_weight(const MultiIndex& a, double w) {
  check_index_dim(a);
  if (!(w > 0.0)) {
    throw std::domain_error("CoefficientScheme: weights must be positive, got " +
                            std::to_string(w) + " for " + a.str());
  }
  if (!index_active(a)) {
    throw std::domain_error("CoefficientScheme: cannot weight inactive index " + a.str());
  }
  if (weight_kind_ != WeightKind::Explicit) {
    weight_kind_ = WeightKind::Explicit;
    explicit_weights_.clear();
  }
  explicit_weights_[a] = w;
}

void CoefficientScheme::exclude_index(const MultiIndex& a) {
  check_index_dim(a);
  if (!degree_in_domain(a.degree()) || !index_in_rule(a)) {
    throw std::domain_error("CoefficientScheme: cannot exclude " + a.str() +
                            ", which the rule already leaves inactive");
  }
  auto& list = exclusions_[a.degree()];
  auto it = std::lower_bound(list.begin(), list.end(), a);
  if (it != list.end() && *it == a) return;
  list.insert(it, a);
}

bool CoefficientScheme::degree_in_domain(int k) const {
  if (k < 0 || k > k_max_) return false;
  if (rule_ == Rule::EvenOnly && k % 2 != 0) return false;
  if (rule_ == Rule::OddOnly && k % 2 != 1) return false;
  if (parity_ == DegreeParity::Even && k % 2 != 0) return false;
  if (parity_ == DegreeParity::Odd && k % 2 != 1) return false;
  return true;
}

std::vector<int> CoefficientScheme::domain_degrees() const {
  std::vector<int> out;
  for (int k = 0; k <= k_max_; ++k) {
    if (degree_in_domain(k)) out.push_back(k);
  }
  return out;
}

std::vector<int> CoefficientScheme::active_degrees() const {
  std::vector<int> out;
  for (int k = 0; k <= k_max_; ++k) {
    if (degree_in_domain(k) && active_count(k) > 0) out.push_back(k);
  }
  return out;
}

bool CoefficientScheme::index_in_rule(const MultiIndex& a) const {
  if (!degree_in_domain(a.degree())) return false;
  if (rule_ == Rule::JZero && a.component(j_) != 0) return false;
  return true;
}

bool CoefficientScheme::index_excluded(const MultiIndex& a) const {
  auto it = exclusions_.find(a.degree());
  if (it == exclusions_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), a);
}

bool CoefficientScheme::index_active(const MultiIndex& a) const {
  a.require_admissible();
  if (a.dim() != d_) {
    throw std::domain_error("CoefficientScheme: multi-index dimension mismatch: " + a.str());
  }
  if (a.degree() > k_max_) return false;
  return index_in_rule(a) && !index_excluded(a);
}

double CoefficientScheme::weight(const MultiIndex& a) const {
  if (!index_active(a)) return 0.0;
  switch (weight_kind_) {
    case WeightKind::Unit:
      return 1.0;
    case WeightKind::Geometric:
      return std::pow(geometric_ratio_, a.degree());
    case WeightKind::Explicit: {
      auto it = explicit_weights_.find(a);
      return it == explicit_weights_.end() ? 1.0 : it->second;
    }
  }
  return 1.0;
}

std::uint64_t CoefficientScheme::active_count(int k) const {
  if (!degree_in_domain(k)) return 0;
  const std::uint64_t total = dim_harmonic(d_, k);
  std::uint64_t in_rule = total;
  if (rule_ == Rule::JZero) in_rule = tau_jzero_count(d_, k, j_);
  auto it = exclusions_.find(k);
  const std::uint64_t excluded = it == exclusions_.end() ? 0 : it->second.size();
  return in_rule - excluded;
}

std::uint64_t CoefficientScheme::complement_count(int k) const {
  if (!degree_in_domain(k)) return 0;
  std::uint64_t structural = 0;
  if (rule_ == Rule::JZero) structural = dim_harmonic(d_, k) - tau_jzero_count(d_, k, j_);
  auto it = exclusions_.find(k);
  const std::uint64_t excluded = it == exclusions_.end() ? 0 : it->second.size();
  return structural + excluded;
}

std::vector<MultiIndex> CoefficientScheme::active_indices(int k) const {
  std::vector<MultiIndex> out;
  out.reserve(active_count(k));
  for_each_active(k, [&](const MultiIndex& a) { out.push_back(a); });
  return out;
}

bool CoefficientScheme::same_support(const CoefficientScheme& o) const {
  if (d_ != o.d_ || k_max_ != o.k_max_) return false;
  for (int k = 0; k <= k_max_; ++k) {
    if (degree_in_domain(k) != o.degree_in_domain(k)) return false;
    if (!degree_in_domain(k)) continue;
    if (rule_ == o.rule_ && j_ == o.j_) {
      auto a = exclusions_.find(k);
      auto b = o.exclusions_.find(k);
      const bool ea = a == exclusions_.end() || a->second.empty();
      const bool eb = b == o.exclusions_.end() || b->second.empty();
      if (ea != eb) return false;
      if (!ea && a->second != b->second) return false;
      continue;
    }
    // Different rules: compare membership index by index.
    if (active_count(k) != o.active_count(k)) return false;
    bool same = true;
    for_each_tau(d_, k, [&](const MultiIndex& a) {
      const bool ma = index_in_rule(a) && !index_excluded(a);
      const bool mb = o.index_in_rule(a) && !o.index_excluded(a);
      if (ma != mb) {
        same = false;
        return false;
      }
      return true;
    });
    if (!same) return false;
  }
  return true;
}

std::string rule_name(CoefficientScheme::Rule r) {
  switch (r) {
    case CoefficientScheme::Rule::Full: return "full";
    case CoefficientScheme::Rule::JZero: return "jzero";
    case CoefficientScheme::Rule::EvenOnly: return "even";
    case CoefficientScheme::Rule::OddOnly: return "odd";
    case CoefficientScheme::Rule::Custom: return "custom";
  }
  return "?";
}

nlohmann::json CoefficientScheme::to_json() const {
  nlohmann::json js;
  js["schema"] = "spherekern/1";
  js["d"] = d_;
  js["k_max"] = k_max_;
  js["rule"] = rule_name(rule_);
  if (rule_ == Rule::JZero) js["j"] = j_;
  if (parity_ != DegreeParity::All) {
    js["parity"] = parity_ == DegreeParity::Even ? "even" : "odd";
  }
  if (!exclusions_.empty()) {
    nlohmann::json ex = nlohmann::json::array();
    for (const auto& [k, list] : exclusions_) {
      nlohmann::json items = nlohmann::json::array();
      for (const MultiIndex& a : list) items.push_back(a.entries());
      ex.push_back(nlohmann::json::array({k, items}));
    }
    js["exclude"] = ex;
  }
  switch (weight_kind_) {
    case WeightKind::Unit:
      js["weights"] = "unit";
      break;
    case WeightKind::Geometric:
      js["weights"] = "geometric:" + std::to_string(geometric_ratio_);
      break;
    case WeightKind::Explicit: {
      nlohmann::json w = nlohmann::json::object();
      for (const auto& [a, v] : explicit_weights_) {
        std::string key;
        for (std::size_t i = 0; i < a.entries().size(); ++i) {
          if (i) key += ",";
          key += std::to_string(a.entries()[i]);
        }
        w[key] = v;
      }
      js["weights"] = w;
      break;
    }
  }
  return js;
}

namespace {
MultiIndex index_from_entries(const std::vector<int>& e, int d) {
  MultiIndex a(e);
  a.require_admissible();
  if (a.dim() != d) {
    throw std::domain_error("scheme JSON: multi-index " + a.str() + " has wrong length for d=" +
                            std::to_string(d));
  }
  return a;
}
}  // namespace

CoefficientScheme CoefficientScheme::from_json(const nlohmann::json& js) {
  if (!js.is_object()) throw std::domain_error("scheme JSON: expected an object");
  if (js.contains("schema") && js.at("schema").get<std::string>() != "spherekern/1") {
    throw std::domain_error("scheme JSON: unsupported schema '" +
                            js.at("schema").get<std::string>() + "' (expected spherekern/1)");
  }
  const int d = js.at("d").get<int>();
  const int k_max = js.at("k_max").get<int>();
  const std::string rule = js.at("rule").get<std::string>();

  CoefficientScheme s = [&]() {
    if (rule == "full") return full(d, k_max);
    if (rule == "jzero") return jzero(d, k_max, js.at("j").get<int>());
    if (rule == "even") return even_only(d, k_max);
    if (rule == "odd") return odd_only(d, k_max);
    if (rule == "custom") return custom(d, k_max);
    throw std::domain_error("scheme JSON: unknown rule '" + rule + "'");
  }();

  if (js.contains("parity")) {
    const std::string p = js.at("parity").get<std::string>();
    if (p == "all") s.set_parity(DegreeParity::All);
    else if (p == "even") s.set_parity(DegreeParity::Even);
    else if (p == "odd") s.set_parity(DegreeParity::Odd);
    else throw std::domain_error("scheme JSON: unknown parity '" + p + "'");
  }

  if (js.contains("exclude")) {
    for (const auto& entry : js.at("exclude")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw std::domain_error("scheme JSON: each exclude entry must be [k, [items...]]");
      }
      const int k = entry[0].get<int>();
      if (k < 0 || k > k_max) {
        throw std::domain_error("scheme JSON: exclude degree out of range: " + std::to_string(k));
      }
      // Items are either ordinals into the lexicographic enumeration of
      // tau_k or explicit multi-index arrays.
      std::vector<std::uint64_t> ordinals;
      std::vector<MultiIndex> direct;
      for (const auto& item : entry[1]) {
        if (item.is_number_integer()) {
          ordinals.push_back(item.get<std::uint64_t>());
        } else if (item.is_array()) {
          direct.push_back(index_from_entries(item.get<std::vector<int>>(), d));
        } else {
          throw std::domain_error("scheme JSON: exclude items must be ordinals or index arrays");
        }
      }
      if (!ordinals.empty()) {
        const std::uint64_t n = dim_harmonic(d, k);
        for (std::uint64_t o : ordinals) {
          if (o >= n) {
            throw std::domain_error("scheme JSON: exclude ordinal " + std::to_string(o) +
                                    " out of range at degree " + std::to_string(k));
          }
        }
        std::sort(ordinals.begin(), ordinals.end());
        std::uint64_t pos = 0, next = 0;
        for_each_tau(d, k, [&](const MultiIndex& a) {
          while (next < ordinals.size() && ordinals[next] == pos) {
            direct.push_back(a);
            ++next;
          }
          ++pos;
          return next < ordinals.size();
        });
      }
      for (const MultiIndex& a : direct) {
        if (a.degree() != k) {
          throw std::domain_error("scheme JSON: excluded index " + a.str() +
                                  " does not have degree " + std::to_string(k));
        }
        s.exclude_index(a);
      }
    }
  }

  if (js.contains("weights")) {
    const auto& w = js.at("weights");
    if (w.is_string()) {
      const std::string ws = w.get<std::string>();
      if (ws == "unit") {
        s.set_unit_weights();
      } else if (ws.rfind("geometric:", 0) == 0) {
        s.set_geometric_weights(std::stod(ws.substr(10)));
      } else {
        throw std::domain_error("scheme JSON: unknown weights value '" + ws + "'");
      }
    } else if (w.is_object()) {
      for (const auto& [key, value] : w.items()) {
        std::vector<int> e;
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ',')) e.push_back(std::stoi(part));
        s.set_weight(index_from_entries(e, d), value.get<double>());
      }
    } else {
      throw std::domain_error("scheme JSON: weights must be a string or an object");
    }
  }

  return s;
}

CoefficientScheme CoefficientScheme::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scheme file: " + path);
  nlohmann::json js;
  try {
    in >> js;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("scheme file " + path + ": " + e.what());
  }
  return from_json(js);
}

void CoefficientScheme::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scheme file: " + path);
  out << to_json().dump(2) << "\n";
}

}  // namespace spherekern
