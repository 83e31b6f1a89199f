#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spherekern/multi_index.hpp"

namespace spherekern {

// Which harmonics carry weight, degree by degree, up to a truncation K_max.
//
// A scheme is a base rule (which indices are active per degree), an optional
// parity filter on degrees, per-degree exclusion lists subtracted from the
// rule, and a positive weight model on the remaining indices.  Active sets
// are kept intensional: membership, counts and complements are answered per
// index or via streaming without materializing tau_k.
class CoefficientScheme {
 public:
  enum class Rule { Full, JZero, EvenOnly, OddOnly, Custom };
  enum class DegreeParity { All, Even, Odd };
  enum class WeightKind { Unit, Geometric, Explicit };

  static CoefficientScheme full(int d, int k_max);
  static CoefficientScheme jzero(int d, int k_max, int j);
  static CoefficientScheme even_only(int d, int k_max);
  static CoefficientScheme odd_only(int d, int k_max);
  static CoefficientScheme custom(int d, int k_max);

  int d() const { return d_; }
  int k_max() const { return k_max_; }
  Rule rule() const { return rule_; }
  int jzero_axis() const { return j_; }
  DegreeParity parity() const { return parity_; }
  WeightKind weight_kind() const { return weight_kind_; }

  void set_parity(DegreeParity p) { parity_ = p; }
  void set_unit_weights();
  void set_geometric_weights(double ratio);
  void set_weight(const MultiIndex& a, double w);  // explicit model; w > 0
  void exclude_index(const MultiIndex& a);         // must be rule-active

  // Degree gating by rule and parity only; does not consult exclusions.
  bool degree_in_domain(int k) const;
  // Degrees in [0, K_max] passing the gate.
  std::vector<int> domain_degrees() const;
  // N: domain degrees whose active set is nonempty.
  std::vector<int> active_degrees() const;

  bool index_in_rule(const MultiIndex& a) const;  // before exclusions
  bool index_active(const MultiIndex& a) const;
  bool index_excluded(const MultiIndex& a) const;
  double weight(const MultiIndex& a) const;  // 0 for inactive indices

  std::uint64_t active_count(int k) const;
  // |A_k^c| within tau_k for an in-domain degree; 0 for out-of-domain k.
  std::uint64_t complement_count(int k) const;

  std::vector<MultiIndex> active_indices(int k) const;

  template <typename F>
  void for_each_active(int k, F&& f) const {
    if (!degree_in_domain(k)) return;
    for_each_tau(d_, k, [&](const MultiIndex& a) {
      if (index_in_rule(a) && !index_excluded(a)) f(a);
      return true;
    });
  }

  // Streams A_k^c = tau_k \ A_k for an in-domain degree.  For rules without
  // a structural complement this only walks the exclusion list, so it stays
  // cheap even when tau_k is astronomically large.
  template <typename F>
  void for_each_complement(int k, F&& f) const {
    if (!degree_in_domain(k)) return;
    if (rule_ == Rule::JZero) {
      for_each_tau(d_, k, [&](const MultiIndex& a) {
        if (!index_in_rule(a) || index_excluded(a)) f(a);
        return true;
      });
      return;
    }
    auto it = exclusions_.find(k);
    if (it == exclusions_.end()) return;
    for (const MultiIndex& a : it->second) f(a);
  }

  const std::map<int, std::vector<MultiIndex>>& exclusions() const { return exclusions_; }

  // Same active sets (d, K_max, domain and per-degree membership); weights
  // are ignored.
  bool same_support(const CoefficientScheme& o) const;

  nlohmann::json to_json() const;
  static CoefficientScheme from_json(const nlohmann::json& js);
  static CoefficientScheme load_file(const std::string& path);
  void save_file(const std::string& path) const;

 private:
  CoefficientScheme(int d, int k_max, Rule rule, int j);
  void check_index_dim(const MultiIndex& a) const;

  int d_ = 3;
  int k_max_ = 0;
  Rule rule_ = Rule::Full;
  int j_ = 0;  // axis for JZero
  DegreeParity parity_ = DegreeParity::All;
  WeightKind weight_kind_ = WeightKind::Unit;
  double geometric_ratio_ = 1.0;
  std::map<MultiIndex, double> explicit_weights_;
  std::map<int, std::vector<MultiIndex>> exclusions_;  // sorted, deduplicated
};

std::string rule_name(CoefficientScheme::Rule r);

}  // namespace spherekern
