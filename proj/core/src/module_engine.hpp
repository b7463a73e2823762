#pragma once

// Vectors in graded free modules, Schreyer orders, module reduction and a
// small module Buchberger. Internal to the library.

#include "ferrand/module.hpp"

#include <vector>

namespace ferrand::detail {

struct MTerm {
  Monomial mono;
  int comp;
  Scalar coeff;
};
using MVec = std::vector<MTerm>;

// Data needed to compare m*e_i in a Schreyer order: the image of e_i pushed
// down to the base module (monomial and base component) and the chain of
// components met on the way, ending with i itself.
struct SchreyerKey {
  Monomial total;
  int base = 0;
  std::vector<int> chain;
};

class ModuleOrder {
 public:
  ModuleOrder() = default;
  // Position over term on the base module.
  explicit ModuleOrder(const MonomialOrder* ring_order) : ord_(ring_order) {}
  ModuleOrder(const MonomialOrder* ring_order, std::vector<SchreyerKey> keys)
      : ord_(ring_order), schreyer_(true), keys_(std::move(keys)) {}

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const;
  bool schreyer() const { return schreyer_; }
  const std::vector<SchreyerKey>& keys() const { return keys_; }
  const MonomialOrder& ring_order() const { return *ord_; }

  // Schreyer order on the free module whose i-th basis vector maps to
  // elements[i] (each sorted in this order, non-zero).
  ModuleOrder induced(const std::vector<MVec>& elements) const;

 private:
  const MonomialOrder* ord_ = nullptr;
  bool schreyer_ = false;
  std::vector<SchreyerKey> keys_;
};

void sort_terms(MVec& v, const ModuleOrder& ord, const Field& field);
// f += c * m * g
void add_scaled(MVec& f, const Scalar& c, const Monomial& m, const MVec& g, const ModuleOrder& ord, const Field& field);
void make_primitive(MVec& v, const Field& field);
void make_monic(MVec& v, const Field& field, MVec* companion = nullptr);
int vec_degree(const MVec& v, const Ring& ring, const std::vector<int>& twists);

// Reduction by an ordered list of module elements, first divisor wins.
class ModuleReducer {
 public:
  ModuleReducer(const std::vector<MVec>& basis, const ModuleOrder& ord, const Field& field);
  // Quotient terms per basis index are appended to `quotients` when given
  // (comp of a quotient term is unused).
  MVec reduce(MVec f, std::vector<MVec>* quotients = nullptr, bool full = true) const;

 private:
  int find(const Monomial& m, int comp) const;
  const std::vector<MVec>& basis_;
  const ModuleOrder& ord_;
  const Field& field_;
  std::vector<std::vector<int>> by_comp_;
  std::vector<Scalar> lead_inv_;
};

struct ModuleGB {
  std::vector<MVec> elements;
  // Row i writes elements[i] in the input generators (comp = input index),
  // filled only when tracking was requested.
  std::vector<MVec> transformation;
};

// Groebner basis of the submodule generated by `gens` under POT. Input
// vectors must be homogeneous w.r.t. `twists`; degree_limit < 0 means none.
ModuleGB module_buchberger(const std::vector<MVec>& gens, const RingPtr& ring, const std::vector<int>& twists,
                           bool track, int degree_limit = -1);

// Frame syzygies of a Groebner basis G living in a module ordered by `below`.
// Returned vectors live in R^{|G|} and are sorted by below.induced(G).
std::vector<MVec> schreyer_syzygies(const std::vector<MVec>& G, const ModuleOrder& below, const ModuleOrder& induced,
                                    const Field& field);

// Conversions with polynomial columns.
MVec column_to_vec(const std::vector<Poly>& column, const ModuleOrder& ord, const Field& field);
std::vector<Poly> vec_to_column(const MVec& v, const RingPtr& ring, int rank);

}  // namespace ferrand::detail
