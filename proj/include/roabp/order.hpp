#ifndef ROABP_ORDER_HPP
#define ROABP_ORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "roabp/errors.hpp"

namespace roabp {

/// Reading order of an roABP: position -> variable id (0-based internally,
/// 1-based in all textual/JSON surfaces).
class VariableOrder {
 public:
  VariableOrder() = default;
  explicit VariableOrder(std::vector<int> perm);

  static VariableOrder identity(int n);
  /// Comma-separated 1-based list, e.g. "2,1,3".
  static VariableOrder parse(const std::string& text, int n);

  int arity() const { return static_cast<int>(perm_.size()); }
  int var_at(int pos) const { return perm_[static_cast<std::size_t>(pos)]; }
  const std::vector<int>& perm() const { return perm_; }
  std::vector<int> one_based() const;
  std::string str() const;

  /// Mask of the first `count` variables in this order (the prefix cut).
  std::vector<bool> prefix_mask(int count) const;

  bool operator==(const VariableOrder& o) const { return perm_ == o.perm_; }

 private:
  std::vector<int> perm_;
};

/// All n! orders; throws CapError when n exceeds the cap.
std::vector<VariableOrder> all_orders(int n, int cap = 8);

/// `count` orders drawn with a seeded Fisher-Yates shuffle. Deterministic
/// across platforms (no std::shuffle / std::uniform_int_distribution).
std::vector<VariableOrder> sample_orders(int n, int count, std::uint64_t seed);

/// xorshift-style deterministic generator used anywhere the artifact needs
/// reproducible randomness independent of the standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /// Uniform-ish value in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace roabp

#endif  // ROABP_ORDER_HPP
