#pragma once

#include "ferrand/field.hpp"
#include "ferrand/monomial.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ferrand {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring context: variable names, coefficient field, monomial
/// order and a grading. Variables of weight 0 (parameters, auxiliary
/// elimination variables) are allowed as long as the order keeps them in
/// their own block.
class Ring {
 public:
  Ring(std::vector<std::string> names, Field field, MonomialOrder order, std::vector<int> weights);

  static RingPtr make(std::vector<std::string> names, Field field = Field::rationals(),
                      MonomialOrder order = MonomialOrder::degrevlex(), std::vector<int> weights = {});
  /// K[x0..xn] with degrevlex.
  static RingPtr projective(int n, Field field = Field::rationals());
  /// K[t,u] with degrevlex, t > u.
  static RingPtr binary(Field field = Field::rationals());

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_graded() const { return standard_; }

  int weighted_degree(const Monomial& m) const;
  /// Index of a variable by name; also resolves the aliases x,y,z,w to
  /// x0..x3 when the ring uses indexed names. Returns -1 if unknown.
  int index_of(std::string_view name) const;

  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_field(Field field) const;

  bool same_as(const Ring& other) const;

 private:
  std::vector<std::string> names_;
  Field field_;
  MonomialOrder order_;
  std::vector<int> weights_;
  bool standard_ = true;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace ferrand
