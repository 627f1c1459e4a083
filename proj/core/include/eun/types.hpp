#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace eun {

using VarId = std::size_t;
using ValueIndex = std::uint32_t;

inline constexpr std::uint64_t kDefaultStateCap = 1'000'000;
inline constexpr double kDefaultTolerance = 1e-9;

enum class Layer { probability, utility };

inline constexpr Layer kBothLayers[] = {Layer::probability, Layer::utility};

std::string_view layer_name(Layer layer);

struct VariableSpec {
  std::string name;
  std::vector<std::string> domain;
  // Label of the reference value; empty selects the first domain label.
  std::string reference;
};

// Sorted, duplicate-free set of variable ids.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<VarId> ids);
  explicit VarSet(std::vector<VarId> ids);

  // {0, 1, ..., n-1}
  static VarSet all(std::size_t n);

  bool contains(VarId v) const;
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  VarId operator[](std::size_t k) const { return ids_[k]; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<VarId>& ids() const { return ids_; }

  void insert(VarId v);
  void erase(VarId v);
  bool disjoint(const VarSet& other) const;
  bool subset_of(const VarSet& other) const;

  friend VarSet operator|(const VarSet& a, const VarSet& b);
  friend VarSet operator&(const VarSet& a, const VarSet& b);
  friend VarSet operator-(const VarSet& a, const VarSet& b);
  friend bool operator==(const VarSet& a, const VarSet& b) = default;

 private:
  std::vector<VarId> ids_;
};

}  // namespace eun
