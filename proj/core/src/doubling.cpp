#include "ferrand/doubling.hpp"

#include "ferrand/errors.hpp"
#include "ferrand/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <random>
#include <string_view>

namespace ferrand {

namespace {

Vec binary_coords(const BinaryForm& f, int degree) {
  Vec v(static_cast<std::size_t>(std::max(degree + 1, 0)));
  for (const auto& term : f.terms()) {
    if (term.mono[0] + term.mono[1] != degree) throw InvariantViolation("binary form of unexpected degree");
    v[static_cast<std::size_t>(term.mono[1])] = term.coeff;
  }
  return v;
}

void check_form(const BinaryForm& f, int degree, const char* what) {
  if (f.is_zero()) return;
  auto d = f.homogeneous_degree();
  if (!d || *d != degree)
    throw InputError(std::string(what) + " entry " + f.to_string() + " must be a form of degree " + std::to_string(degree));
}

bool hilbert_matches(const Ideal& j, int r, int a) {
  const auto& h = j.hilbert();
  return h.dimension == 2 && h.polynomial_at(0) == a - r && h.polynomial_at(1) == r + a;
}

std::vector<int> identity_order(std::size_t n) {
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  return order;
}

// One degree of the kernel algorithm: combinations of standard monomials of
// J in degree d lying in I_C with eval_mu = 0.
std::vector<Poly> kernel_step(const Ideal& j, int d, const MuMap& mu, const RncContext& ctx) {
  const auto& field = ctx.ring()->field();
  auto std_monos = standard_monomials(j, d);
  if (std_monos.empty()) return {};
  QuotientPiece piece(ctx.ideal(), d);
  const int target = mu.r() * d - mu.r() - 2 + mu.a();
  const int rows = piece.dim() + std::max(target + 1, 0);
  Matrix m(rows, static_cast<int>(std_monos.size()));
  auto rho = compose_mu_psi(mu);
  auto gens = ctx.generators();
  for (std::size_t c = 0; c < std_monos.size(); ++c) {
    auto div = divide(Poly::monomial(ctx.ring(), std_monos[c]), gens);
    Vec nf = piece.coordinates(div.remainder);
    for (int i = 0; i < piece.dim(); ++i) m.at(i, static_cast<int>(c)) = nf[static_cast<std::size_t>(i)];
    if (target < 0) continue;
    BinaryForm e(ctx.binary());
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (!div.quotients[k].is_zero() && !rho[k].is_zero()) e += ctx.pullback(div.quotients[k]) * rho[k];
    Vec ev = binary_coords(e, target);
    for (int i = 0; i <= target; ++i) m.at(piece.dim() + i, static_cast<int>(c)) = ev[static_cast<std::size_t>(i)];
  }
  std::vector<Poly> out;
  for (const auto& v : nullspace(m, field)) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < std_monos.size(); ++c)
      if (v[c] != 0) terms.push_back({std_monos[c], v[c]});
    out.push_back(Poly::from_terms(ctx.ring(), std::move(terms)).primitive());
  }
  return out;
}

// Degreewise syzygies of rho over R/I_C, with (R/I_C)_e realized as binary
// forms of degree r e.
class SyzygyLifter {
 public:
  SyzygyLifter(const MuMap& mu, const RncContext& ctx) : mu_(mu), ctx_(ctx), rho_(compose_mu_psi(mu)) {
    for (std::size_t k = 0; k < ctx.quadrics().size(); ++k) degs_.push_back(2);
    for (std::size_t k = 0; k < ctx.linears().size(); ++k) degs_.push_back(1);
  }

  std::vector<Poly> step(int D) {
    const int r = mu_.r();
    const auto& field = ctx_.ring()->field();
    std::vector<int> offset, size;
    int total = 0;
    for (int dk : degs_) {
      int e = D - dk;
      offset.push_back(total);
      int s = e < 0 ? 0 : r * e + 1;
      size.push_back(s);
      total += s;
    }
    const int target = r * D - r - 2 + mu_.a();
    Matrix m(std::max(target + 1, 0), total);
    for (std::size_t k = 0; k < degs_.size(); ++k) {
      if (rho_[k].is_zero() || target < 0) continue;
      int e = D - degs_[k];
      for (int jj = 0; jj < size[k]; ++jj) {
        Vec col = binary_coords(tu_monomial(ctx_.binary(), r * e - jj, jj) * rho_[k], target);
        for (int i = 0; i <= target; ++i) m.at(i, offset[k] + jj) = col[static_cast<std::size_t>(i)];
      }
    }
    std::vector<Vec> syz = nullspace(m, field);

    EchelonBasis lower(total, field);
    for (const auto& v : prev_) {
      for (int x = 0; x <= r; ++x) {
        Vec w(static_cast<std::size_t>(total));
        for (std::size_t k = 0; k < degs_.size(); ++k) {
          int prev_size = D - 1 - degs_[k] < 0 ? 0 : r * (D - 1 - degs_[k]) + 1;
          for (int jj = 0; jj < prev_size; ++jj)
            w[static_cast<std::size_t>(offset[k] + jj + x)] = v[static_cast<std::size_t>(prev_offset_[k] + jj)];
        }
        lower.insert(std::move(w));
      }
    }
    std::vector<Poly> out;
    for (const auto& v : syz) {
      if (!lower.insert(v)) continue;
      Poly g(ctx_.ring());
      auto gens = ctx_.generators();
      for (std::size_t k = 0; k < degs_.size(); ++k) {
        int e = D - degs_[k];
        Poly c(ctx_.ring());
        for (int jj = 0; jj < size[k]; ++jj) {
          const Scalar& s = v[static_cast<std::size_t>(offset[k] + jj)];
          if (s != 0) c += Poly::monomial(ctx_.ring(), ctx_.lift_monomial(e, jj), s);
        }
        if (!c.is_zero()) g += c * gens[k];
      }
      if (!g.is_zero()) out.push_back(g.primitive());
    }
    prev_ = std::move(syz);
    prev_offset_ = offset;
    return out;
  }

 private:
  const MuMap& mu_;
  const RncContext& ctx_;
  std::vector<BinaryForm> rho_;
  std::vector<int> degs_;
  std::vector<Vec> prev_;
  std::vector<int> prev_offset_;
};

}  // namespace

MuMap::MuMap(int r, int n, int a, std::vector<BinaryForm> block1, std::vector<BinaryForm> block2)
    : r_(r), n_(n), a_(a), block1_(std::move(block1)), block2_(std::move(block2)) {
  if (r < 2 || n < r) throw InputError("mu needs 2 <= r <= n");
  if (a < 0) throw InputError("mu needs a >= 0");
  if (static_cast<int>(block1_.size()) != r - 1) throw InputError("block1 must have r-1 entries");
  if (static_cast<int>(block2_.size()) != n - r) throw InputError("block2 must have n-r entries");
  if (r == 2 && n == 2 && a != 0) throw InputError("r = n = 2 requires a = 0");
  for (const auto& f : block1_) {
    if (!f.is_zero()) binary_ = f.ring();
    check_form(f, a, "block1");
  }
  for (const auto& f : block2_) {
    if (!f.is_zero()) binary_ = f.ring();
    if (a < 2 && !f.is_zero()) throw InputError("block2 must vanish when a < 2");
    check_form(f, a - 2, "block2");
  }
  if (!binary_) throw InputError("mu is the zero map");
  if (binary_->nvars() != 2) throw InputError("mu entries must be binary forms");
  for (auto& f : block1_)
    if (f.is_zero()) f = BinaryForm(binary_);
  for (auto& f : block2_)
    if (f.is_zero()) f = BinaryForm(binary_);
  if (!gcd_binary(entries()).is_constant()) throw InputError("mu is not surjective (entries have a common factor)");
}

MuMap MuMap::parse(int r, int n, int a, const std::vector<std::string>& entries, Field field) {
  if (static_cast<int>(entries.size()) != n - 1) throw InputError("mu needs n-1 entries");
  auto ring = Ring::binary(field);
  std::vector<BinaryForm> b1, b2;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto f = Poly::parse(ring, entries[i]);
    (static_cast<int>(i) < r - 1 ? b1 : b2).push_back(std::move(f));
  }
  return MuMap(r, n, a, std::move(b1), std::move(b2));
}

std::vector<BinaryForm> MuMap::entries() const {
  std::vector<BinaryForm> e = block1_;
  e.insert(e.end(), block2_.begin(), block2_.end());
  return e;
}

MuMap MuMap::scaled(const Scalar& c) const {
  if (c == 0) throw InputError("scaling mu by zero");
  auto b1 = block1_, b2 = block2_;
  for (auto& f : b1) f *= c;
  for (auto& f : b2) f *= c;
  return MuMap(r_, n_, a_, std::move(b1), std::move(b2));
}

std::vector<std::vector<BinaryForm>> psi_matrix(int r, const RingPtr& binary) {
  if (r < 2) throw InputError("psi needs r >= 2");
  std::vector<std::vector<BinaryForm>> psi(static_cast<std::size_t>(r - 1));
  for (int p = 1; p <= r; ++p)
    for (int q = p + 1; q <= r; ++q) {
      for (auto& row : psi) row.emplace_back(binary);
      for (int h = p; h <= q - 1; ++h)
        psi[static_cast<std::size_t>(p + q - 2 - h)].back() += tu_monomial(binary, r - h - 1, h - 1);
    }
  return psi;
}

std::vector<BinaryForm> compose_mu_psi(const MuMap& mu) {
  auto psi = psi_matrix(mu.r(), mu.binary());
  std::vector<BinaryForm> out;
  for (std::size_t c = 0; c < psi[0].size(); ++c) {
    BinaryForm s(mu.binary());
    for (std::size_t row = 0; row < psi.size(); ++row) s += mu.block1()[row] * psi[row][c];
    out.push_back(std::move(s));
  }
  for (const auto& f : mu.block2()) out.push_back(f);
  if (std::all_of(out.begin(), out.end(), [](const Poly& f) { return f.is_zero(); }))
    throw InputError("mu o psi vanishes");
  return out;
}

int effective_degree_cap(const MuMap& mu, const DoublingOptions& options) {
  if (options.degree_cap >= 0) return options.degree_cap;
  if (const char* env = std::getenv("FERRAND_DEGREE_CAP")) {
    std::string_view s(env);
    int v = -1;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || v < 0)
      throw InputError("FERRAND_DEGREE_CAP must be a non-negative integer");
    return v;
  }
  return 2 * mu.a() + 2 * mu.r() + 4;
}

BinaryForm eval_mu(const Poly& f, const MuMap& mu, const RncContext& ctx, const std::vector<int>& divisor_order) {
  auto gens = ctx.generators();
  auto order = divisor_order.empty() ? identity_order(gens.size()) : divisor_order;
  if (order.size() != gens.size()) throw InputError("divisor order has the wrong length");
  std::vector<Poly> divisors;
  for (int i : order) divisors.push_back(gens[static_cast<std::size_t>(i)]);
  auto div = divide(f, divisors);
  if (!div.remainder.is_zero()) throw InputError("eval_mu: polynomial is not in I_C");
  auto rho = compose_mu_psi(mu);
  BinaryForm e(ctx.binary());
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto idx = static_cast<std::size_t>(order[k]);
    if (!div.quotients[k].is_zero() && !rho[idx].is_zero()) e += ctx.pullback(div.quotients[k]) * rho[idx];
  }
  return e;
}

DoubleCurve double_ideal(const MuMap& mu, DoublingAlgorithm algorithm, const DoublingOptions& options) {
  auto ctx = RncContext::make(mu.r(), mu.n(), mu.binary()->field());
  const int cap = effective_degree_cap(mu, options);
  std::vector<Poly> gens = power(ctx.ideal(), 2).generators();
  Ideal j(ctx.ring(), gens);
  std::vector<int> reversed = identity_order(ctx.generators().size());
  std::reverse(reversed.begin(), reversed.end());
  SyzygyLifter lifter(mu, ctx);
  int last_change = 0;
  for (int d = 1; d <= cap; ++d) {
    std::vector<Poly> fresh;
    if (algorithm == DoublingAlgorithm::DegreewiseKernel) {
      fresh = kernel_step(j, d, mu, ctx);
    } else {
      for (auto& g : lifter.step(d))
        if (!j.contains(g)) fresh.push_back(std::move(g));
    }
    for (const auto& g : fresh)
      if (!eval_mu(g, mu, ctx, reversed).is_zero())
        throw InvariantViolation("eval_mu depends on the division order for " + g.to_string());
    if (!fresh.empty()) {
      gens.insert(gens.end(), fresh.begin(), fresh.end());
      j = Ideal(ctx.ring(), gens);
      last_change = d;
    }
    if (d - last_change >= 2 && hilbert_matches(j, mu.r(), mu.a()) && is_saturated(j))
      return DoubleCurve(ctx, mu, Ideal(ctx.ring(), minimal_generators(j)), d);
  }
  throw CapExceeded("doubling: stop conditions not met by degree " + std::to_string(cap));
}

bool mu_equivalence_check(const MuMap& mu1, const MuMap& mu2) {
  if (mu1.r() != mu2.r() || mu1.n() != mu2.n() || mu1.a() != mu2.a()) return false;
  auto e1 = mu1.entries(), e2 = mu2.entries();
  const auto& field = mu1.binary()->field();
  std::optional<Scalar> c;
  for (std::size_t i = 0; i < e1.size(); ++i) {
    if (e1[i].is_zero() != e2[i].is_zero()) return false;
    if (e1[i].is_zero()) continue;
    if (!c) c = field.div(e2[i].leading_coeff(), e1[i].leading_coeff());
    if (!(e1[i].in_ring(mu2.binary()) * *c == e2[i])) return false;
  }
  return c.has_value();
}

std::vector<Scalar> random_constants(int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<Scalar> out;
  do {
    out.clear();
    for (int i = 0; i < count; ++i) out.emplace_back(dist(gen));
  } while (count > 0 && std::all_of(out.begin(), out.end(), [](const Scalar& s) { return s == 0; }));
  return out;
}

MuMap ag_mu(AgKind kind, int r, const std::vector<Scalar>& constants) {
  auto bin = Ring::binary();
  if (kind == AgKind::Canonical) {
    if (r < 2) throw InputError("canonical doubling needs r >= 2");
    std::vector<Scalar> c = constants.empty() ? std::vector<Scalar>(static_cast<std::size_t>(r - 1), Scalar(1)) : constants;
    if (static_cast<int>(c.size()) != r - 1) throw InputError("canonical doubling needs r-1 constants");
    std::vector<BinaryForm> b1;
    for (const auto& s : c) b1.push_back(Poly::constant(bin, s));
    return MuMap(r, r, 0, std::move(b1), {});
  }
  if (r < 2) throw InputError("elliptic doubling needs r >= 2");
  std::vector<BinaryForm> b1(static_cast<std::size_t>(r - 1), BinaryForm(bin)), b2;
  for (int i = 0; i <= r - 2; ++i) b2.push_back(tu_monomial(bin, r - 2 - i, i));
  return MuMap(r, 2 * r - 1, r, std::move(b1), std::move(b2));
}

std::vector<Poly> scroll_ideal_generators(const RncContext& ctx) {
  const int r = ctx.r();
  if (ctx.n() < 2 * r - 1) throw InputError("the scroll needs n >= 2r-1");
  std::vector<int> top, bottom;
  for (int i = 0; i <= r - 1; ++i) top.push_back(i);
  for (int i = r + 1; i <= 2 * r - 2; ++i) top.push_back(i);
  for (int i : top) bottom.push_back(i + 1);
  std::vector<Poly> out;
  auto x = [&](int i) { return Poly::variable(ctx.ring(), i); };
  for (std::size_t i = 0; i < top.size(); ++i)
    for (std::size_t k = i + 1; k < top.size(); ++k) {
      Poly m = x(top[i]) * x(bottom[k]) - x(top[k]) * x(bottom[i]);
      if (!m.is_zero()) out.push_back(m);
    }
  return out;
}

MuMap odd_conic_mu(int b) {
  if (b < 0) throw InputError("b must be non-negative");
  auto bin = Ring::binary();
  if (b == 0) return MuMap(2, 3, 0, {Poly::constant(bin, 1)}, {BinaryForm(bin)});
  return MuMap(2, 3, 2 * b, {tu_monomial(bin, 0, 2 * b)}, {tu_monomial(bin, 2 * b - 2, 0)});
}

MuMap even_conic_mu(int b) {
  if (b < 1) throw InputError("even genus double conics need b >= 1");
  auto bin = Ring::binary();
  return MuMap(2, 3, 2 * b + 1, {tu_monomial(bin, 0, 2 * b + 1)}, {tu_monomial(bin, 2 * b - 1, 0)});
}

namespace {
std::string pw(const char* v, int e) {
  if (e == 0) return "1";
  return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
}
}  // namespace

Ideal odd_conic_ideal(int b) {
  if (b < 0) throw InputError("b must be non-negative");
  auto ring = Ring::projective(3);
  if (b == 0) return Ideal::parse(ring, {"w", "(x*z-y^2)^2"});
  return Ideal::parse(ring, {"w^2", "w*(x*z-y^2)", "(x*z-y^2)^2",
                             pw("x", b - 1) + "*(x*z-y^2)-" + pw("z", b) + "*w"});
}

Ideal even_conic_ideal(int b) {
  if (b < 1) throw InputError("even genus double conics need b >= 1");
  auto ring = Ring::projective(3);
  return Ideal::parse(ring, {"w^2", "w*(x*z-y^2)", "(x*z-y^2)^2", pw("x", b) + "*(x*z-y^2)-y*" + pw("z", b) + "*w",
                             pw("x", b - 1) + "*y*(x*z-y^2)-" + pw("z", b + 1) + "*w"});
}

MuMap random_mu(int r, int n, int a, std::uint64_t seed, Field field) {
  if (r == 2 && n == 2 && a != 0) throw InputError("r = n = 2 requires a = 0");
  if (r == 2 && a == 1) throw InputError("no surjective mu exists for r = 2, a = 1 (a single linear form)");
  auto bin = Ring::binary(field);
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  auto form = [&](int d) {
    BinaryForm f(bin);
    if (d < 0) return f;
    for (int k = 0; k <= d; ++k) f += tu_monomial(bin, d - k, k) * field.from_int(dist(gen));
    return f;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<BinaryForm> b1, b2;
    for (int i = 0; i < r - 1; ++i) b1.push_back(form(a));
    for (int i = 0; i < n - r; ++i) b2.push_back(a >= 2 ? form(a - 2) : BinaryForm(bin));
    std::vector<BinaryForm> all = b1;
    all.insert(all.end(), b2.begin(), b2.end());
    if (std::all_of(all.begin(), all.end(), [](const Poly& f) { return f.is_zero(); })) continue;
    if (!gcd_binary(all).is_constant()) continue;
    return MuMap(r, n, a, std::move(b1), std::move(b2));
  }
  throw InputError("no surjective mu found for the given seed");
}

}  // namespace ferrand
