#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ferrand {

inline constexpr int kMaxVars = 16;

/// Exponent vector with cached total degree and support mask.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(int nvars, std::initializer_list<int> exps);
  static Monomial from_exponents(const std::vector<int>& exps);
  static Monomial variable(int nvars, int index, int power = 1);

  int nvars() const { return n_; }
  int degree() const { return deg_; }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  std::uint32_t support() const { return mask_; }
  bool is_one() const { return deg_ == 0; }
  std::vector<int> exponents() const;

  void set(int i, int exponent);

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || deg_ > other.deg_) return false;
    for (int i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  Monomial operator*(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  void refresh();
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
  std::uint16_t n_ = 0;
  std::uint32_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Product of degrevlex blocks, or pure lex. Within each block the
/// variable with the smaller index has higher precedence.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Block };

  MonomialOrder() = default;
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  /// Degrevlex blocks of the given sizes; the sizes must sum to the ring size.
  static MonomialOrder block(std::vector<int> sizes);
  /// Two blocks: the first elim_count variables, then the rest.
  static MonomialOrder elimination(int elim_count, int nvars);
  /// Parses "degrevlex", "lex" or "block:k1,k2,...".
  static MonomialOrder from_name(const std::string& name);

  Kind kind() const { return kind_; }
  const std::vector<int>& blocks() const { return blocks_; }
  std::string name() const;

  /// Returns -1, 0 or 1.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::DegRevLex && a.nvars() == b.nvars())
      return compare_drl(a, b, 0, a.nvars(), a.degree(), b.degree());
    return compare_slow(a, b);
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& x, const MonomialOrder& y) {
    return x.kind_ == y.kind_ && x.blocks_ == y.blocks_;
  }

 private:
  MonomialOrder(Kind k, std::vector<int> blocks) : kind_(k), blocks_(std::move(blocks)) {}
  static int compare_drl(const Monomial& a, const Monomial& b, int lo, int hi, int da, int db) {
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  int compare_slow(const Monomial& a, const Monomial& b) const;

  Kind kind_ = Kind::DegRevLex;
  std::vector<int> blocks_;
};

}  // namespace ferrand
