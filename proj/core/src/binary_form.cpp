#include "ferrand/binary_form.hpp"

#include "ferrand/errors.hpp"

namespace ferrand {

namespace {

using Univariate = std::vector<Scalar>;  // coefficients, lowest degree first

void trim(Univariate& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Univariate remainder(Univariate a, const Univariate& b, const Field& field) {
  Scalar inv = field.inverse(b.back());
  while (a.size() >= b.size()) {
    Scalar q = field.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = field.sub(a[shift + i], field.mul(q, b[i]));
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate univariate_gcd(Univariate a, Univariate b, const Field& field) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = remainder(a, b, field);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

BinaryForm tu_monomial(const RingPtr& ring, int i, int j) {
  return Poly::monomial(ring, Monomial(2, {i, j}));
}

BinaryForm gcd_binary(const std::vector<BinaryForm>& forms) {
  RingPtr ring;
  int t_power = -1;
  Univariate g;
  bool have = false;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    ring = f.ring();
    if (ring->nvars() != 2) throw InputError("binary forms must live in a two-variable ring");
    auto deg = f.homogeneous_degree();
    if (!deg) throw InputError("binary form is not homogeneous: " + f.to_string());
    // f = t^alpha * h with t not dividing h; h dehomogenizes (t = 1) to a
    // polynomial in u of full degree.
    int alpha = f.terms()[0].mono[0];
    for (const auto& term : f.terms()) alpha = std::min(alpha, term.mono[0]);
    t_power = t_power < 0 ? alpha : std::min(t_power, alpha);
    Univariate h(static_cast<std::size_t>(*deg - alpha + 1));
    for (const auto& term : f.terms()) h[static_cast<std::size_t>(term.mono[1])] = term.coeff;
    g = have ? univariate_gcd(g, h, ring->field()) : h;
    have = true;
  }
  if (!have) throw InputError("gcd of an all-zero list of binary forms");
  trim(g);
  int e = static_cast<int>(g.size()) - 1;
  std::vector<Term> terms;
  for (int k = 0; k <= e; ++k)
    if (g[static_cast<std::size_t>(k)] != 0)
      terms.push_back({Monomial(2, {e - k + t_power, k}), g[static_cast<std::size_t>(k)]});
  return Poly::from_terms(ring, std::move(terms)).monic();
}

}  // namespace ferrand
