#include "ferrand/monomial.hpp"

#include "ferrand/errors.hpp"

#include <numeric>
#include <sstream>

namespace ferrand {

Monomial::Monomial(int nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw InputError("variable count " + std::to_string(nvars) + " outside 0.." + std::to_string(kMaxVars));
  n_ = static_cast<std::uint16_t>(nvars);
}

Monomial::Monomial(int nvars, std::initializer_list<int> exps) : Monomial(nvars) {
  if (static_cast<int>(exps.size()) != nvars) throw InputError("exponent vector length mismatch");
  int i = 0;
  for (int e : exps) set(i++, e);
}

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  Monomial m(static_cast<int>(exps.size()));
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
  return m;
}

Monomial Monomial::variable(int nvars, int index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

std::vector<int> Monomial::exponents() const { return std::vector<int>(e_.begin(), e_.begin() + n_); }

void Monomial::set(int i, int exponent) {
  if (i < 0 || i >= n_) throw InputError("variable index out of range");
  if (exponent < 0 || exponent > 255) throw InputError("exponent out of range");
  e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(exponent);
  refresh();
}

void Monomial::refresh() {
  int d = 0;
  std::uint32_t mask = 0;
  for (int i = 0; i < n_; ++i) {
    d += e_[i];
    if (e_[i] != 0) mask |= 1u << i;
  }
  deg_ = static_cast<std::uint16_t>(d);
  mask_ = mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (int i = 0; i < n_; ++i) {
    int e = e_[i] + other.e_[i];
    if (e > 255) throw CapExceeded("exponent overflow");
    r.e_[i] = static_cast<std::uint8_t>(e);
  }
  r.deg_ = static_cast<std::uint16_t>(deg_ + other.deg_);
  r.mask_ = mask_ | other.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint8_t>(e_[i] - divisor.e_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (int i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r = *this;
  for (int i = 0; i < n_; ++i) r.e_[i] = std::min(e_[i], other.e_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < n_; ++i) h = (h ^ e_[i]) * 1099511628211ull;
  return h;
}

MonomialOrder MonomialOrder::block(std::vector<int> sizes) {
  for (int s : sizes)
    if (s <= 0) throw InputError("block sizes must be positive");
  if (sizes.size() == 1) return degrevlex();
  return MonomialOrder(Kind::Block, std::move(sizes));
}

MonomialOrder MonomialOrder::elimination(int elim_count, int nvars) {
  if (elim_count <= 0 || elim_count >= nvars) throw InputError("elimination block must be a proper subset");
  return block({elim_count, nvars - elim_count});
}

MonomialOrder MonomialOrder::from_name(const std::string& name) {
  if (name == "degrevlex") return degrevlex();
  if (name == "lex") return lex();
  if (name.rfind("block:", 0) == 0) {
    std::vector<int> sizes;
    std::stringstream ss(name.substr(6));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        sizes.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw InputError("bad block order: " + name);
      }
    }
    return block(sizes);
  }
  throw InputError("unknown monomial order: " + name);
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::DegRevLex:
      return "degrevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block: {
      std::string s = "block:";
      for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + std::to_string(blocks_[i]);
      return s;
    }
  }
  return "degrevlex";
}

int MonomialOrder::compare_slow(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw InputError("comparing monomials of different length");
  if (kind_ == Kind::Lex) {
    for (int i = 0; i < a.nvars(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  int lo = 0;
  for (int size : blocks_) {
    int hi = lo + size;
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    int c = compare_drl(a, b, lo, hi, da, db);
    if (c != 0) return c;
    lo = hi;
  }
  return 0;
}

}  // namespace ferrand
