#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spherekern {

// Multi-index (a_1, ..., a_{d-1}) labelling one harmonic of degree a_{d-1}
// on S^{d-1}.  Admissible means |a_1| <= a_2 <= ... <= a_{d-1}.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);

  int dim() const { return static_cast<int>(e_.size()) + 1; }  // the d of S^{d-1}
  int degree() const { return e_.back(); }
  // 1-based component access: component(i) = a_i.
  int component(int i) const { return e_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& entries() const { return e_; }

  bool admissible() const;
  void require_admissible() const;  // throws std::domain_error if not

  auto operator<=>(const MultiIndex&) const = default;

  std::string str() const;  // "(a_1,...,a_{d-1})"

 private:
  std::vector<int> e_;
};

// dim H_k(S^{d-1}) = (2k+d-2) (k+d-3)! / (k! (d-2)!), exact in 64-bit
// integers; throws std::overflow_error if the value does not fit.
std::uint64_t dim_harmonic(int d, int k);

// |{alpha in tau_k : a_j = 0}| = C(k+d-2-j, d-2-j) for 1 <= j <= d-2.
std::uint64_t tau_jzero_count(int d, int k, int j);

// Streaming lexicographic traversal of tau_k^{d-1}; the callback returns
// false to stop early.  Order: ascending in (a_1, a_2, ..., a_{d-1}).
void for_each_tau(int d, int k, const std::function<bool(const MultiIndex&)>& fn);

// Materialized tau_k^{d-1} in lexicographic order.
std::vector<MultiIndex> enumerate_tau(int d, int k);

// The sub-family with a_j = 0 (which forces a_1 = ... = a_j = 0), again in
// lexicographic order.
std::vector<MultiIndex> enumerate_tau_jzero(int d, int k, int j);

}  // namespace spherekern
