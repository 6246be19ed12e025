#include "roabp/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace roabp {

VariableOrder::VariableOrder(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<bool> hit(perm_.size(), false);
  for (int v : perm_) {
    if (v < 0 || v >= static_cast<int>(perm_.size()) || hit[static_cast<std::size_t>(v)])
      throw DomainError("variable order is not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
}

VariableOrder VariableOrder::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return VariableOrder(std::move(p));
}

VariableOrder VariableOrder::parse(const std::string& text, int n) {
  std::vector<int> p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      p.push_back(std::stoi(item) - 1);
    } catch (const std::exception&) {
      throw ParseError("bad order entry '" + item + "'");
    }
  }
  if (static_cast<int>(p.size()) != n)
    throw ParseError("order lists " + std::to_string(p.size()) + " variables, expected " +
                     std::to_string(n));
  return VariableOrder(std::move(p));
}

std::vector<int> VariableOrder::one_based() const {
  std::vector<int> out;
  out.reserve(perm_.size());
  for (int v : perm_) out.push_back(v + 1);
  return out;
}

std::string VariableOrder::str() const {
  std::string s;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(perm_[i] + 1);
  }
  return s;
}

std::vector<bool> VariableOrder::prefix_mask(int count) const {
  std::vector<bool> mask(perm_.size(), false);
  for (int i = 0; i < count; ++i) mask[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] = true;
  return mask;
}

std::vector<VariableOrder> all_orders(int n, int cap) {
  if (n > cap)
    throw CapError("exhaustive order enumeration capped at " + std::to_string(cap) +
                   " variables (got " + std::to_string(n) + "); use random sampling");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<VariableOrder> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<VariableOrder> sample_orders(int n, int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<VariableOrder> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = p.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(rng.below(i));
      std::swap(p[i - 1], p[j]);
    }
    out.emplace_back(std::move(p));
  }
  return out;
}

}  // namespace roabp
