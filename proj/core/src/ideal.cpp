#include "ferrand/ideal.hpp"

#include "ferrand/errors.hpp"

#include <algorithm>
#include <mutex>

namespace ferrand {

struct Ideal::Cache {
  std::once_flag gb_once;
  GroebnerBasis gb;
  std::once_flag hilbert_once;
  HilbertData hilbert;
};

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw InputError("ideal without a ring");
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) throw InputError("generator lives in a different ring");
    if (!g.is_homogeneous()) throw InputError("non-homogeneous generator: " + g.to_string());
    gens_.push_back(g.ring() == ring_ ? std::move(g) : g.in_ring(ring_));
  }
}

Ideal Ideal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<Poly> gens;
  for (const auto& s : generators) gens.push_back(Poly::parse(ring, s));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Poly::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Poly> gens;
  for (int i = 0; i < ring->nvars(); ++i)
    if (ring->weights()[static_cast<std::size_t>(i)] > 0) gens.push_back(Poly::variable(ring, i));
  return Ideal(std::move(ring), std::move(gens));
}

std::vector<Poly> Ideal::sorted_generators() const {
  std::vector<Poly> g = gens_;
  sort_by_degree_and_order(g);
  return g;
}

const GroebnerBasis& Ideal::gb() const {
  if (!cache_) throw InputError("use of a default-constructed ideal");
  std::call_once(cache_->gb_once, [&] {
    cache_->gb = gens_.empty() ? GroebnerBasis(ring_, {}, true) : buchberger(gens_);
  });
  return cache_->gb;
}

bool Ideal::contains(const Poly& f) const { return gb().contains(f.ring() == ring_ || f.is_zero() ? f : f.in_ring(ring_)); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_unit() const {
  const auto& e = gb().elements();
  return e.size() == 1 && e[0].is_constant();
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  return a.gb().elements() == b.gb().elements();
}

std::string Ideal::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ">";
}

// ---------------------------------------------------------------- Hilbert

namespace {

using Series = std::vector<std::int64_t>;

void trim(Series& s) {
  while (s.size() > 1 && s.back() == 0) s.pop_back();
}

Series series_mul(const Series& a, const Series& b) {
  Series c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

void series_add_shifted(Series& acc, const Series& b, int shift) {
  if (acc.size() < b.size() + static_cast<std::size_t>(shift)) acc.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t j = 0; j < b.size(); ++j) acc[j + static_cast<std::size_t>(shift)] += b[j];
  trim(acc);
}

Series one_minus_t_pow(int k) {
  Series s(static_cast<std::size_t>(k) + 1, 0);
  s[0] += 1;
  s[static_cast<std::size_t>(k)] -= 1;
  trim(s);
  return s;
}

std::vector<Monomial> minimal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

Series numerator_rec(const std::vector<Monomial>& gens, int nvars) {
  if (gens.empty()) return {1};
  std::vector<int> count(static_cast<std::size_t>(nvars), 0);
  bool coprime = true;
  for (const auto& g : gens)
    for (int i = 0; i < nvars; ++i)
      if (g[i] > 0 && ++count[static_cast<std::size_t>(i)] > 1) coprime = false;
  if (coprime) {
    Series s{1};
    for (const auto& g : gens) s = series_mul(s, one_minus_t_pow(g.degree()));
    return s;
  }
  int x = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  int k = 256;
  for (const auto& g : gens)
    if (g[x] > 0) k = std::min(k, g[x]);
  std::vector<Monomial> without, colon;
  Monomial pivot = Monomial::variable(gens[0].nvars(), x, k);
  for (const auto& g : gens) {
    if (g[x] == 0) {
      without.push_back(g);
      colon.push_back(g);
    } else {
      colon.push_back(g / g.gcd(pivot));
    }
  }
  Series result = series_mul(numerator_rec(without, nvars), one_minus_t_pow(k));
  series_add_shifted(result, numerator_rec(minimal(std::move(colon)), nvars), k);
  return result;
}

// Polynomial in d given by binom(d + c, m) with m >= 0.
std::vector<Scalar> binomial_poly(int c, int m) {
  std::vector<Scalar> p{Scalar(1)};
  for (int i = 0; i < m; ++i) {
    // multiply by (d + c - i)
    std::vector<Scalar> q(p.size() + 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j + 1] += p[j];
      q[j] += p[j] * (c - i);
    }
    p = std::move(q);
  }
  mpz_class fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  for (auto& x : p) x /= fact;
  return p;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
  for (const auto& g : gens)
    if (g.is_one()) return {0};
  return numerator_rec(minimal(gens), nvars);
}

HilbertData hilbert_from_leading(const std::vector<Monomial>& leads, int nvars) {
  HilbertData h;
  Series q = hilbert_numerator(leads, nvars);
  int dim = nvars;
  auto at_one = [](const Series& s) {
    std::int64_t v = 0;
    for (auto c : s) v += c;
    return v;
  };
  if (q.size() == 1 && q[0] == 0) {
    h.numerator = {0};
    h.dimension = 0;
    h.regularity_index = 0;
    for (int d = 0; d <= 3; ++d) h.values[d] = 0;
    return h;
  }
  while (dim > 0 && at_one(q) == 0) {
    // divide by (1 - t): coefficients of the quotient are partial sums.
    Series r(q.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      r[i] = acc;
    }
    q = r;
    trim(q);
    --dim;
  }
  h.numerator = q;
  h.dimension = dim;
  if (dim > 0) {
    std::vector<Scalar> poly(static_cast<std::size_t>(dim), Scalar(0));
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k] == 0) continue;
      auto b = binomial_poly(dim - 1 - static_cast<int>(k), dim - 1);
      for (std::size_t j = 0; j < b.size(); ++j) poly[j] += b[j] * Scalar(q[k]);
    }
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    h.polynomial = poly;
  }
  int bound = std::max(0, static_cast<int>(q.size()) - 1 - dim + 1);
  while (bound > 0 && Scalar(h.value(bound - 1)) == h.polynomial_at(bound - 1)) --bound;
  h.regularity_index = bound;
  for (int d = 0; d <= bound + 3; ++d) h.values[d] = h.value(d);
  return h;
}

std::int64_t HilbertData::value(int d) const {
  if (d < 0) return 0;
  if (dimension == 0) return d < static_cast<int>(numerator.size()) ? numerator[static_cast<std::size_t>(d)] : 0;
  std::int64_t v = 0;
  for (std::size_t k = 0; k < numerator.size() && static_cast<int>(k) <= d; ++k)
    v += numerator[k] * binomial(d - static_cast<std::int64_t>(k) + dimension - 1, dimension - 1);
  return v;
}

Scalar HilbertData::polynomial_at(int d) const {
  Scalar v = 0, p = 1;
  for (const auto& c : polynomial) {
    v += c * p;
    p *= d;
  }
  return v;
}

std::optional<std::int64_t> HilbertData::degree() const {
  if (dimension != 2 || polynomial.size() != 2) return std::nullopt;
  return polynomial[1].get_num().get_si();
}

std::optional<std::int64_t> HilbertData::genus() const {
  if (dimension != 2 || polynomial.size() != 2) return std::nullopt;
  return 1 - polynomial[0].get_num().get_si();
}

std::string HilbertData::polynomial_string() const {
  if (polynomial.empty()) return "0";
  std::string s;
  for (int k = static_cast<int>(polynomial.size()) - 1; k >= 0; --k) {
    const Scalar& c = polynomial[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    std::string cs = c.get_str();
    bool neg = cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (!s.empty())
      s += neg ? "-" : "+";
    else if (neg)
      s += "-";
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (mono.empty())
      s += cs;
    else if (cs == "1")
      s += mono;
    else
      s += cs + "*" + mono;
  }
  return s;
}

const HilbertData& Ideal::hilbert() const {
  if (!ring_->standard_graded()) throw InputError("Hilbert data needs a standard graded ring");
  std::call_once(cache_->hilbert_once, [&] {
    cache_->hilbert = hilbert_from_leading(gb().leading_monomials(), ring_->nvars());
  });
  return cache_->hilbert;
}

std::int64_t hilbert_function(const Ideal& ideal, int d) { return ideal.hilbert().value(d); }

}  // namespace ferrand
