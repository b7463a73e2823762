#include "ferrand/poly.hpp"

#include "ferrand/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ferrand {

namespace {

std::string monomial_text(const Ring& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.names()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

int parse_int(std::string_view text, std::string_view context) {
  if (text.empty() || text.size() > 4) throw InputError("bad exponent in: " + std::string(context));
  int v = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw InputError("bad exponent in: " + std::string(context));
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace

void Poly::check_ring(const Poly& g) const {
  if (!same_ring(ring_, g.ring_)) throw InputError("polynomials live in different rings");
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  Poly p(ring);
  Scalar v = c;
  ring->field().normalize(v);
  if (v != 0) p.terms_.push_back({Monomial(ring->nvars()), v});
  return p;
}

Poly Poly::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars()) throw InputError("variable index out of range");
  Poly p(ring);
  p.terms_.push_back({Monomial::variable(ring->nvars(), index), Scalar(1)});
  return p;
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  if (m.nvars() != ring->nvars()) throw InputError("monomial length does not match the ring");
  Poly p(ring);
  Scalar v = c;
  ring->field().normalize(v);
  if (v != 0) p.terms_.push_back({m, v});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = ring->order();
  const auto& field = ring->field();
  for (auto& t : terms) {
    if (t.mono.nvars() != ring->nvars()) throw InputError("monomial length does not match the ring");
    field.normalize(t.coeff);
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  Poly p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

namespace {

// Recursive descent for texts with parentheses:
//   expr := ['+'|'-'] term (('+'|'-') term)*
//   term := power ('*' power)*
//   power := atom ['^' int]
//   atom := number ['/' number] | name | '(' expr ')'
struct ExprParser {
  RingPtr ring;
  const std::string& s;
  std::size_t pos = 0;

  Poly parse() {
    Poly p = expr();
    if (pos != s.size()) throw InputError("unexpected '" + std::string(1, s[pos]) + "' in: " + s);
    return p;
  }
  bool peek(char c) const { return pos < s.size() && s[pos] == c; }
  Poly expr() {
    bool neg = false;
    if (peek('+') || peek('-')) neg = s[pos++] == '-';
    Poly acc = term();
    if (neg) acc = -acc;
    while (peek('+') || peek('-')) {
      bool minus = s[pos++] == '-';
      Poly t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }
  Poly term() {
    Poly acc = power();
    while (peek('*')) {
      ++pos;
      acc *= power();
    }
    return acc;
  }
  Poly power() {
    Poly base = atom();
    if (!peek('^')) return base;
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return base.pow(parse_int(std::string_view(s).substr(start, pos - start), s));
  }
  Poly atom() {
    if (pos >= s.size()) throw InputError("unexpected end of: " + s);
    if (peek('(')) {
      ++pos;
      Poly p = expr();
      if (!peek(')')) throw InputError("missing ')' in: " + s);
      ++pos;
      return p;
    }
    std::size_t start = pos;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      return Poly::constant(ring, parse_scalar(std::string_view(s).substr(start, pos - start)));
    }
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    std::string_view name = std::string_view(s).substr(start, pos - start);
    int idx = ring->index_of(name);
    if (idx < 0) throw InputError("unknown variable '" + std::string(name) + "' in: " + s);
    return Poly::variable(ring, idx);
  }
};

}  // namespace

Poly Poly::parse(RingPtr ring, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InputError("empty polynomial text");
  if (s.find('(') != std::string::npos) return ExprParser{ring, s}.parse();
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw InputError("expected + or - in: " + s);
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view body(s.data() + pos, end - pos);
    if (body.empty()) throw InputError("empty term in: " + s);
    Scalar coeff = 1;
    Monomial mono(ring->nvars());
    std::size_t fpos = 0;
    while (fpos <= body.size()) {
      std::size_t fend = body.find('*', fpos);
      if (fend == std::string_view::npos) fend = body.size();
      std::string_view factor = body.substr(fpos, fend - fpos);
      if (factor.empty()) throw InputError("empty factor in: " + s);
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        coeff *= parse_scalar(factor);
      } else {
        std::size_t caret = factor.find('^');
        std::string_view name = factor.substr(0, caret);
        int exponent = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), s);
        int idx = ring->index_of(name);
        if (idx < 0) throw InputError("unknown variable '" + std::string(name) + "' in: " + s);
        mono.set(idx, mono[idx] + exponent);
      }
      fpos = fend + 1;
    }
    terms.push_back({mono, negative ? Scalar(-coeff) : coeff});
    pos = end;
  }
  return from_terms(std::move(ring), std::move(terms));
}

Scalar Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

std::optional<int> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = ring_->weighted_degree(terms_[0].mono);
  for (const auto& t : terms_)
    if (ring_->weighted_degree(t.mono) != d) return std::nullopt;
  return d;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_->weighted_degree(t.mono));
  return d;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = ring_->field().neg(t.coeff);
  return p;
}

void Poly::add_scaled(const Scalar& c, const Monomial& m, const Poly& g) {
  if (g.is_zero() || c == 0) return;
  if (!ring_) ring_ = g.ring_;
  const auto& ord = ring_->order();
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial gm = m * g.terms_[0].mono;
  while (i < terms_.size() || j < g.terms_.size()) {
    int cmp;
    if (i == terms_.size())
      cmp = -1;
    else if (j == g.terms_.size())
      cmp = 1;
    else
      cmp = ord.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else {
      Scalar v = field.mul(c, g.terms_[j].coeff);
      if (cmp == 0) {
        v = field.add(terms_[i].coeff, v);
        ++i;
      }
      if (v != 0) out.push_back({gm, std::move(v)});
      if (++j < g.terms_.size()) gm = m * g.terms_[j].mono;
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& g) {
  if (!ring_) {
    *this = g;
    return *this;
  }
  if (g.is_zero()) return *this;
  check_ring(g);
  add_scaled(Scalar(1), Monomial(ring_->nvars()), g);
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  if (!ring_) {
    *this = -g;
    return *this;
  }
  if (g.is_zero()) return *this;
  check_ring(g);
  add_scaled(ring_->field().from_int(-1), Monomial(ring_->nvars()), g);
  return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
  if (!f.ring_ || !g.ring_) return Poly(f.ring_ ? f.ring_ : g.ring_);
  f.check_ring(g);
  if (f.is_zero() || g.is_zero()) return Poly(f.ring_);
  const auto& field = f.ring_->field();
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) terms.push_back({a.mono * b.mono, field.mul(a.coeff, b.coeff)});
  return Poly::from_terms(f.ring_, std::move(terms));
}

Poly& Poly::operator*=(const Poly& g) {
  *this = *this * g;
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  Scalar v = c;
  if (ring_) ring_->field().normalize(v);
  if (v == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff = ring_->field().mul(t.coeff, v);
  return *this;
}

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
  Poly p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return p;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw InputError("negative power");
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  Scalar inv = ring_->field().inverse(leading_coeff());
  for (auto& t : p.terms_) t.coeff = ring_->field().mul(t.coeff, inv);
  return p;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  if (!ring_->field().is_rational()) return monic();
  mpz_class den = 1, num = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  // Scale by den/num; num is the gcd of numerators, all denominators divide den.
  Scalar factor(den, num);
  factor.canonicalize();
  if (leading_coeff() < 0) factor = -factor;
  if (factor == 1) return *this;
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= factor;
  return p;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != ring_->nvars()) throw InputError("evaluation point has wrong length");
  const auto& field = ring_->field();
  Scalar total = 0;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (int i = 0; i < t.mono.nvars(); ++i)
      for (int k = 0; k < t.mono[i]; ++k) v = field.mul(v, point[static_cast<std::size_t>(i)]);
    total = field.add(total, v);
  }
  return total;
}

Poly Poly::substitute(const RingPtr& target, const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != ring_->nvars()) throw InputError("substitution needs one image per variable");
  bool monomial_images = true;
  for (const auto& img : images) {
    if (!img.is_zero() && !same_ring(img.ring_, target)) throw InputError("image lives in the wrong ring");
    if (img.size() > 1) monomial_images = false;
  }
  const auto& field = target->field();
  if (monomial_images) {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      Scalar c = t.coeff;
      field.normalize(c);
      bool zero = false;
      for (int i = 0; i < t.mono.nvars() && !zero; ++i) {
        if (t.mono[i] == 0) continue;
        const auto& img = images[static_cast<std::size_t>(i)];
        if (img.is_zero()) {
          zero = true;
          break;
        }
        for (int k = 0; k < t.mono[i]; ++k) {
          m = m * img.terms_[0].mono;
          c = field.mul(c, img.terms_[0].coeff);
        }
      }
      if (!zero) terms.push_back({m, c});
    }
    return from_terms(target, std::move(terms));
  }
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };
  Poly result(target);
  for (const auto& t : terms_) {
    Poly term = constant(target, t.coeff);
    for (int i = 0; i < t.mono.nvars() && !term.is_zero(); ++i)
      if (t.mono[i] > 0) term *= power(static_cast<std::size_t>(i), t.mono[i]);
    result += term;
  }
  return result;
}

Poly Poly::in_ring(const RingPtr& target) const {
  if (target->names() != ring_->names()) throw InputError("rings have different variables");
  if (same_ring(target, ring_)) {
    Poly p = *this;
    p.ring_ = target;
    return p;
  }
  return from_terms(target, terms_);
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = scalar_to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (!first)
      s += negative ? '-' : '+';
    else if (negative)
      s += '-';
    first = false;
    std::string m = monomial_text(*ring_, t.mono);
    if (m.empty())
      s += c;
    else if (c == "1")
      s += m;
    else
      s += c + "*" + m;
  }
  return s;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (!same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

void sort_by_degree_and_order(std::vector<Poly>& polys) {
  std::stable_sort(polys.begin(), polys.end(), [](const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.ring()->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
}

}  // namespace ferrand
