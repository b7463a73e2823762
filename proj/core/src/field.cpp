#include "ferrand/field.hpp"

#include "ferrand/errors.hpp"

#include <charconv>

namespace ferrand {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::from_tag(std::string_view tag) {
  if (tag == "QQ") return rationals();
  if (tag.substr(0, 3) == "Fp:") {
    std::uint32_t p = 0;
    auto body = tag.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw InputError("bad field tag: " + std::string(tag));
    return prime(p);
  }
  throw InputError("unknown field tag: " + std::string(tag));
}

std::string Field::tag() const { return p_ == 0 ? "QQ" : "Fp:" + std::to_string(p_); }

void Field::normalize(Scalar& a) const {
  if (p_ == 0) return;
  if (a.get_den() == 1 && sgn(a.get_num()) >= 0 && a.get_num() < p_) return;
  mpz_class p = p_;
  mpz_class num = a.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = a.get_den() % p;
  if (den == 0) throw InputError("denominator divisible by the field characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  num = (num * inv) % p;
  a = Scalar(num);
}

Scalar Field::from_int(long v) const {
  Scalar a(v);
  normalize(a);
  return a;
}

Scalar Field::inverse(const Scalar& a) const {
  if (a == 0) throw InvariantViolation("division by zero scalar");
  if (p_ == 0) return 1 / a;
  mpz_class p = p_, inv;
  mpz_class v = a.get_num();
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Scalar(inv);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar c = a + b;
  if (p_ != 0 && c >= p_) c -= p_;
  return c;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar c = a - b;
  if (p_ != 0 && c < 0) c += p_;
  return c;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar c = a * b;
  normalize(c);
  return c;
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0 || a == 0) return -a;
  return Scalar(p_) - a;
}

std::string scalar_to_string(const Scalar& c) { return c.get_str(); }

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty coefficient");
  if (s[0] == '+') s.erase(0, 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && i == 0);
    if (!ok) throw InputError("bad coefficient: " + std::string(text));
  }
  Scalar v;
  if (v.set_str(s, 10) != 0) throw InputError("bad coefficient: " + std::string(text));
  if (v.get_den() == 0) throw InputError("zero denominator: " + std::string(text));
  v.canonicalize();
  return v;
}

}  // namespace ferrand
