#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ferrand {

/// Exact scalar. Over Q it is a canonical fraction; over F_p it is an
/// integer in [0, p) kept in that range by Field::normalize.
using Scalar = mpq_class;

/// Coefficient field: the rationals or a prime field F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  /// Accepts "QQ" or "Fp:<p>".
  static Field from_tag(std::string_view tag);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string tag() const;

  void normalize(Scalar& a) const;
  Scalar from_int(long v) const;
  Scalar inverse(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inverse(b)); }
  Scalar neg(const Scalar& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

std::string scalar_to_string(const Scalar& c);
/// Parses "p" or "p/q" with an optional sign.
Scalar parse_scalar(std::string_view text);

}  // namespace ferrand
