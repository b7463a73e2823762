#include "ferrand/cohomology.hpp"

#include "ferrand/errors.hpp"
#include "ferrand/linalg.hpp"
#include "ferrand/resolution.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <random>
#include <string_view>

namespace ferrand {

namespace {

int resolve_t_cap(const GammaOptions& options) {
  if (options.t_cap >= 0) return options.t_cap;
  if (const char* env = std::getenv("FERRAND_T_CAP")) {
    std::string_view s(env);
    int v = -1;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || v < 0)
      throw InputError("FERRAND_T_CAP must be a non-negative integer");
    return v;
  }
  return 40;
}

bool suitable(const Ideal& ideal, int i, int j) {
  auto xi = Poly::variable(ideal.ring(), i);
  auto xj = Poly::variable(ideal.ring(), j);
  if (quotient(ideal, xi) != ideal) return false;
  Ideal cut = sum(ideal, Ideal(ideal.ring(), {xi, xj}));
  return cut.is_unit() || cut.hilbert().dimension == 0;
}

void put_column(Matrix& m, int col, int row0, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) m.at(row0 + static_cast<int>(i), col) = v[i];
}

}  // namespace

std::optional<std::pair<int, int>> choose_section_forms(const Ideal& ideal) {
  const int n = ideal.ring()->nvars();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && suitable(ideal, i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

GammaSections::GammaSections(Ideal ideal, GammaOptions options) : ideal_(std::move(ideal)), t_cap_(resolve_t_cap(options)) {
  if (!ideal_.ring()->standard_graded()) throw InputError("sections need a standard graded ring");
  if (auto pick = choose_section_forms(ideal_)) {
    l1_ = pick->first;
    l2_ = pick->second;
    rao_ = rao_module(ideal_);
    return;
  }
  const RingPtr& ring = ideal_.ring();
  const int n = ring->nvars();
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Poly> images;
    for (int i = 0; i < n; ++i) {
      Poly img = Poly::variable(ring, i);
      if (i < 2)
        for (int k = 0; k < n; ++k)
          if (k != i) img += Poly::variable(ring, k) * ring->field().from_int(dist(gen));
      images.push_back(std::move(img));
    }
    std::vector<Poly> gens;
    for (const auto& g : ideal_.generators()) gens.push_back(g.substitute(ring, images));
    Ideal moved(ring, gens);
    if (suitable(moved, 0, 1)) {
      ideal_ = moved;
      change_ = std::move(images);
      l1_ = 0;
      l2_ = 1;
      rao_ = rao_module(ideal_);
      return;
    }
  }
  throw InvariantViolation("no linear forms with the required properties were found");
}

Poly GammaSections::transform(const Poly& f) const { return change_.empty() ? f : f.substitute(ideal_.ring(), change_); }

const QuotientPiece& GammaSections::quotient(int e) {
  auto it = quotients_.find(e);
  if (it == quotients_.end()) it = quotients_.emplace(e, QuotientPiece(ideal_, e)).first;
  return it->second;
}

const GammaSections::Piece& GammaSections::piece(int d, int t) {
  auto key = std::make_pair(d, t);
  if (auto it = pieces_.find(key); it != pieces_.end()) return it->second;
  Piece p;
  if (t + d >= 0) {
    const auto& src = quotient(t + d);
    const auto& dst = quotient(2 * t + d);
    const RingPtr& ring = ideal_.ring();
    Poly l1t = Poly::variable(ring, l1_).pow(t), l2t = Poly::variable(ring, l2_).pow(t);
    const int k = src.dim();
    Matrix m(dst.dim(), 2 * k);
    for (int c = 0; c < k; ++c) {
      Poly b = Poly::monomial(ring, src.basis()[static_cast<std::size_t>(c)]);
      put_column(m, c, 0, dst.coordinates(l2t * b));
      Poly nb = -(l1t * b);
      put_column(m, k + c, 0, dst.coordinates(nb));
    }
    for (const auto& v : nullspace(m, ring->field())) {
      Vec a(v.begin(), v.begin() + k);
      p.basis.push_back(src.element(a));
    }
  }
  return pieces_.emplace(key, std::move(p)).first->second;
}

int GammaSections::stable_t(int d) {
  if (auto it = stable_.find(d); it != stable_.end()) return it->second;
  // l^t kills the Rao module once t exceeds its degree span, so V_t(d)
  // is all of H^0(O_X(d)) from there on.
  int span = rao_.empty() ? 0 : rao_.rbegin()->first - rao_.begin()->first + 1;
  int t = std::max({span, -d, 0});
  if (t > t_cap_)
    throw CapExceeded("sections in degree " + std::to_string(d) + " need t = " + std::to_string(t) + " > cap " +
                      std::to_string(t_cap_));
  std::int64_t expected = hilbert_function(ideal_, d) + (rao_.count(d) ? rao_.at(d) : 0);
  if (static_cast<std::int64_t>(piece(d, t).basis.size()) != expected)
    throw InvariantViolation("sections in degree " + std::to_string(d) + " disagree with the local duality count");
  stable_[d] = t;
  return t;
}

std::int64_t GammaSections::dim(int d) { return static_cast<std::int64_t>(piece(d, stable_t(d)).basis.size()); }

const std::vector<Poly>& GammaSections::basis(int d, int t) { return piece(d, t).basis; }

Poly GammaSections::embed(const Poly& f, int t) const {
  Poly g = transform(f) * Poly::variable(ideal_.ring(), l1_).pow(t);
  return ideal_.gb().reduce(g);
}

std::optional<Vec> GammaSections::coordinates(const Poly& a, int d, int t) {
  const auto& b = basis(d, t);
  if (t + d < 0) return a.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
  const auto& q = quotient(t + d);
  Matrix m(q.dim(), static_cast<int>(b.size()) + 1);
  for (std::size_t c = 0; c < b.size(); ++c) put_column(m, static_cast<int>(c), 0, q.coordinates_reduced(b[c]));
  put_column(m, static_cast<int>(b.size()), 0, q.coordinates(a));
  const auto& field = ideal_.ring()->field();
  for (const auto& v : nullspace(m, field)) {
    const Scalar& last = v.back();
    if (last == 0) continue;
    Vec out;
    for (std::size_t c = 0; c < b.size(); ++c) out.push_back(field.neg(field.div(v[c], last)));
    return out;
  }
  return std::nullopt;
}

std::int64_t rao_from_sections(GammaSections& gamma, int j) { return gamma.dim(j) - hilbert_function(gamma.ideal(), j); }

NormalSheafResult h0_normal_sheaf(const Ideal& ideal, const std::vector<Poly>& generators, const ModuleMap& relations,
                                  GammaOptions options) {
  GammaSections gamma(ideal, options);
  const RingPtr& ring = gamma.ideal().ring();
  std::vector<int> degs;
  for (const auto& g : generators) {
    auto d = g.homogeneous_degree();
    if (!d) throw InputError("generators must be non-zero and homogeneous");
    degs.push_back(*d);
  }
  if (relations.rows() != static_cast<int>(generators.size())) throw InputError("relation matrix has the wrong shape");
  int t = 0;
  for (int d : degs) t = std::max(t, gamma.stable_t(d));
  std::vector<int> offset;
  int unknowns = 0;
  for (int d : degs) {
    offset.push_back(unknowns);
    unknowns += static_cast<int>(gamma.basis(d, t).size());
  }
  std::vector<Vec> rows;
  for (int k = 0; k < relations.cols(); ++k) {
    const int target = t + relations.source().twist(k);
    if (target < 0) continue;
    const auto& q = gamma.quotient(target);
    std::vector<Vec> cols(static_cast<std::size_t>(unknowns));
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const Poly& delta = relations.entry(static_cast<int>(i), k);
      const auto& b = gamma.basis(degs[i], t);
      for (std::size_t c = 0; c < b.size(); ++c)
        cols[static_cast<std::size_t>(offset[i]) + c] = delta.is_zero() ? Vec(static_cast<std::size_t>(q.dim()))
                                                                          : q.coordinates(gamma.transform(delta) * b[c]);
    }
    for (int rr = 0; rr < q.dim(); ++rr) {
      Vec row(static_cast<std::size_t>(unknowns));
      for (int c = 0; c < unknowns; ++c) row[static_cast<std::size_t>(c)] = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(rr)];
      rows.push_back(std::move(row));
    }
  }
  Matrix m(static_cast<int>(rows.size()), unknowns);
  for (std::size_t rr = 0; rr < rows.size(); ++rr)
    for (int c = 0; c < unknowns; ++c) m.at(static_cast<int>(rr), c) = rows[rr][static_cast<std::size_t>(c)];
  NormalSheafResult res;
  res.h0 = unknowns - rank(m, ring->field());
  res.t_used = t;
  res.generators = static_cast<int>(generators.size());
  res.relations = relations.cols();
  return res;
}

NormalSheafResult h0_normal_sheaf(const Ideal& ideal, GammaOptions options) {
  auto gens = minimal_generators(ideal);
  std::vector<int> tw;
  for (const auto& g : gens) tw.push_back(*g.homogeneous_degree());
  std::vector<std::vector<Poly>> row{gens};
  ModuleMap presentation(ideal.ring(), GradedFreeModule(tw), GradedFreeModule({0}), row);
  return h0_normal_sheaf(ideal, gens, syzygies(presentation), options);
}

bool section_with_products(GammaSections& gamma, int degree, const std::vector<std::pair<Poly, Poly>>& conditions) {
  const int t = gamma.stable_t(degree);
  const auto& b = gamma.basis(degree, t);
  const auto& field = gamma.ideal().ring()->field();
  std::vector<Vec> rows;
  const int nb = static_cast<int>(b.size());
  for (const auto& [m, f] : conditions) {
    auto e = m.homogeneous_degree();
    if (!e) throw InputError("multiplier must be homogeneous");
    auto fd = f.homogeneous_degree();
    if (!f.is_zero() && (!fd || *fd != degree + *e)) throw InputError("product condition has mismatched degrees");
    const auto& q = gamma.quotient(t + degree + *e);
    std::vector<Vec> cols;
    for (const auto& bc : b) cols.push_back(q.coordinates(gamma.transform(m) * bc));
    cols.push_back(q.coordinates(gamma.embed(f, t)));
    for (int rr = 0; rr < q.dim(); ++rr) {
      Vec row;
      for (const auto& c : cols) row.push_back(c[static_cast<std::size_t>(rr)]);
      rows.push_back(std::move(row));
    }
  }
  Matrix full(static_cast<int>(rows.size()), nb + 1), coeff(static_cast<int>(rows.size()), nb);
  for (std::size_t rr = 0; rr < rows.size(); ++rr)
    for (int c = 0; c <= nb; ++c) {
      full.at(static_cast<int>(rr), c) = rows[rr][static_cast<std::size_t>(c)];
      if (c < nb) coeff.at(static_cast<int>(rr), c) = rows[rr][static_cast<std::size_t>(c)];
    }
  return rank(full, field) == rank(coeff, field);
}

}  // namespace ferrand
