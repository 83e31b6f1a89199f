#include "spherekern/multi_index.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace spherekern {

MultiIndex::MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw std::domain_error("MultiIndex: must have at least one component");
}

bool MultiIndex::admissible() const {
  if (e_.empty()) return false;
  int prev = std::abs(e_[0]);
  for (std::size_t i = 1; i < e_.size(); ++i) {
    if (e_[i] < prev) return false;
    prev = e_[i];
  }
  return true;
}

void MultiIndex::require_admissible() const {
  if (!admissible()) {
    throw std::domain_error("MultiIndex: not admissible (need |a_1| <= a_2 <= ... <= a_{d-1}): " +
                            str());
  }
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  s += ")";
  return s;
}

namespace {
using u128 = unsigned __int128;

u128 checked_mul(u128 a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<u128>::max() / b) {
    throw std::overflow_error("dim_harmonic: intermediate overflow");
  }
  return a * b;
}

std::uint64_t to_u64(u128 v, const char* what) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}
}  // namespace

std::uint64_t dim_harmonic(int d, int k) {
  if (d < 2) throw std::domain_error("dim_harmonic: dimension must be >= 2");
  if (k < 0) throw std::domain_error("dim_harmonic: degree must be >= 0");
  if (k == 0) return 1;
  if (d == 2) return 2;  // e^{ik t} and e^{-ik t}; the product form below needs d >= 3
  // (2k+d-2) * prod_{i=1}^{d-3} (k+i) / (d-2)!
  u128 num = static_cast<std::uint64_t>(2 * k + d - 2);
  for (int i = 1; i <= d - 3; ++i) num = checked_mul(num, static_cast<std::uint64_t>(k + i));
  u128 den = 1;
  for (int i = 2; i <= d - 2; ++i) den = checked_mul(den, static_cast<std::uint64_t>(i));
  if (num % den != 0) throw std::logic_error("dim_harmonic: non-integer result");
  return to_u64(num / den, "dim_harmonic");
}

std::uint64_t tau_jzero_count(int d, int k, int j) {
  if (d < 3) throw std::domain_error("tau_jzero_count: dimension must be >= 3");
  if (k < 0) throw std::domain_error("tau_jzero_count: degree must be >= 0");
  if (j < 1 || j > d - 2) {
    throw std::domain_error("tau_jzero_count: axis must satisfy 1 <= j <= d-2");
  }
  // C(k + d-2-j, d-2-j)
  const int r = d - 2 - j;
  u128 v = 1;
  for (int i = 1; i <= r; ++i) {
    v = checked_mul(v, static_cast<std::uint64_t>(k + i));
    v /= static_cast<std::uint64_t>(i);  // exact: product of i consecutive integers
  }
  return to_u64(v, "tau_jzero_count");
}

namespace {
// Lexicographic walk, most significant component first: a_1 ranges over
// [-k, k], every later a_i over [previous bound, k], a_{d-1} is pinned to k.
bool walk_tau(std::vector<int>& e, std::size_t pos, int k,
              const std::function<bool(const MultiIndex&)>& fn) {
  const std::size_t last = e.size() - 1;
  if (pos == last) return fn(MultiIndex(e));
  int lo;
  if (pos == 0) {
    lo = -k;
  } else if (pos == 1) {
    lo = std::abs(e[0]);
  } else {
    lo = e[pos - 1];
  }
  for (int a = lo; a <= k; ++a) {
    e[pos] = a;
    if (!walk_tau(e, pos + 1, k, fn)) return false;
  }
  return true;
}
}  // namespace

void for_each_tau(int d, int k, const std::function<bool(const MultiIndex&)>& fn) {
  if (d < 3) throw std::domain_error("for_each_tau: dimension must be >= 3");
  if (k < 0) throw std::domain_error("for_each_tau: degree must be >= 0");
  std::vector<int> e(static_cast<std::size_t>(d) - 1);
  e.back() = k;
  walk_tau(e, 0, k, fn);
}

std::vector<MultiIndex> enumerate_tau(int d, int k) {
  std::vector<MultiIndex> out;
  out.reserve(dim_harmonic(d, k));
  for_each_tau(d, k, [&](const MultiIndex& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

std::vector<MultiIndex> enumerate_tau_jzero(int d, int k, int j) {
  const std::uint64_t expect = tau_jzero_count(d, k, j);  // also validates arguments
  std::vector<MultiIndex> out;
  out.reserve(expect);
  for_each_tau(d, k, [&](const MultiIndex& a) {
    if (a.component(j) == 0) out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace spherekern
