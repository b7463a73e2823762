#pragma once

#include "ferrand/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ferrand {

/// Direct sum of R(-d_i).
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> twists) : twists_(std::move(twists)) {}

  int rank() const { return static_cast<int>(twists_.size()); }
  const std::vector<int>& twists() const { return twists_; }
  int twist(int i) const { return twists_[static_cast<std::size_t>(i)]; }
  /// twist -> multiplicity
  std::map<int, int> multiplicities() const;
  /// e.g. "R(-2)+R^2(-3)", or "0".
  std::string to_string() const;

  friend bool operator==(const GradedFreeModule& a, const GradedFreeModule& b) { return a.twists_ == b.twists_; }

 private:
  std::vector<int> twists_;
};

/// Homogeneous map of graded free modules, stored as a target-rank by
/// source-rank matrix. A non-zero entry (i, j) has degree
/// source.twist(j) - target.twist(i).
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(RingPtr ring, GradedFreeModule source, GradedFreeModule target, std::vector<std::vector<Poly>> entries);
  /// Builds a map from its columns; source twists are read off the columns
  /// (a zero column gets twist `zero_twist`).
  static ModuleMap from_columns(RingPtr ring, GradedFreeModule target, const std::vector<std::vector<Poly>>& columns,
                                int zero_twist = 0);

  const RingPtr& ring() const { return ring_; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }
  const Poly& entry(int i, int j) const { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  std::vector<Poly> column(int j) const;
  const std::vector<std::vector<Poly>>& entries() const { return entries_; }

  /// this o inner.
  ModuleMap compose(const ModuleMap& inner) const;
  bool is_zero() const;
  bool has_unit_entry() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  GradedFreeModule source_, target_;
  std::vector<std::vector<Poly>> entries_;
};

/// Graded Betti numbers beta_{i,j} of R/I (beta_{0,0} = 1).
struct BettiTable {
  std::map<std::pair<int, int>, int> beta;

  int at(int i, int j) const;
  int total(int i) const;
  int length() const;
  /// Macaulay-style grid: columns i, rows j - i.
  std::string to_text() const;
  /// [[i, j, beta], ...] as a JSON string.
  std::string to_json() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.beta == b.beta; }
};

/// Chain F_L -> ... -> F_1 -> F_0; maps()[k] is d_{k+1}: F_{k+1} -> F_k.
class FreeResolution {
 public:
  FreeResolution() = default;
  FreeResolution(RingPtr ring, std::vector<ModuleMap> maps, bool minimal)
      : ring_(std::move(ring)), maps_(std::move(maps)), minimal_(minimal) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<ModuleMap>& maps() const { return maps_; }
  int length() const { return static_cast<int>(maps_.size()); }
  const GradedFreeModule& module(int i) const;
  bool minimal() const { return minimal_; }
  BettiTable betti() const;

 private:
  RingPtr ring_;
  std::vector<ModuleMap> maps_;
  bool minimal_ = false;
};

}  // namespace ferrand
