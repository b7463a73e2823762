#include "ferrand/ring.hpp"

#include "ferrand/errors.hpp"

#include <set>

namespace ferrand {

Ring::Ring(std::vector<std::string> names, Field field, MonomialOrder order, std::vector<int> weights)
    : names_(std::move(names)), field_(field), order_(std::move(order)), weights_(std::move(weights)) {
  if (names_.empty() || static_cast<int>(names_.size()) > kMaxVars)
    throw InputError("ring must have between 1 and " + std::to_string(kMaxVars) + " variables");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw InputError("duplicate variable names");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw InputError("weight vector length mismatch");
  for (int w : weights_) {
    if (w < 0) throw InputError("negative variable weight");
    if (w != 1) standard_ = false;
  }
  if (order_.kind() == MonomialOrder::Kind::Block) {
    int total = 0;
    for (int s : order_.blocks()) total += s;
    if (total != nvars()) throw InputError("block sizes do not cover the ring");
  }
  // Weight-0 variables must sit in blocks made only of weight-0 variables,
  // otherwise degrevlex within a block is not a well-order.
  std::vector<int> sizes = order_.kind() == MonomialOrder::Kind::Block ? order_.blocks() : std::vector<int>{nvars()};
  if (order_.kind() != MonomialOrder::Kind::Lex) {
    int lo = 0;
    for (int s : sizes) {
      bool zero = false, pos = false;
      for (int i = lo; i < lo + s; ++i) (weights_[i] == 0 ? zero : pos) = true;
      if (zero && pos) throw InputError("weight-0 variables must form their own order block");
      lo += s;
    }
  }
}

RingPtr Ring::make(std::vector<std::string> names, Field field, MonomialOrder order, std::vector<int> weights) {
  return std::make_shared<const Ring>(std::move(names), field, std::move(order), std::move(weights));
}

RingPtr Ring::projective(int n, Field field) {
  if (n < 0) throw InputError("negative projective dimension");
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make(std::move(names), field);
}

RingPtr Ring::binary(Field field) { return make({"t", "u"}, field); }

int Ring::weighted_degree(const Monomial& m) const {
  if (standard_) return m.degree();
  int d = 0;
  for (int i = 0; i < nvars(); ++i) d += weights_[i] * m[i];
  return d;
}

int Ring::index_of(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  static const char* aliases[] = {"x", "y", "z", "w"};
  for (int k = 0; k < 4; ++k) {
    if (name == aliases[k]) {
      std::string target = "x" + std::to_string(k);
      for (int i = 0; i < nvars(); ++i)
        if (names_[i] == target) return i;
    }
  }
  return -1;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(names_, field_, std::move(order), weights_); }

RingPtr Ring::with_field(Field field) const { return make(names_, field, order_, weights_); }

bool Ring::same_as(const Ring& other) const {
  return names_ == other.names_ && field_ == other.field_ && order_ == other.order_ && weights_ == other.weights_;
}

}  // namespace ferrand
