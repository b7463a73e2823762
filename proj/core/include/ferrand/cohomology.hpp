#pragma once

#include "ferrand/ideal.hpp"
#include "ferrand/module.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ferrand {

struct GammaOptions {
  /// Largest t allowed; negative means 40, or FERRAND_T_CAP when set.
  int t_cap = -1;
};

/// Twisted global sections H^0(O_X(d)) of a saturated curve ideal. Two
/// linear forms l1 = x_i, l2 = x_j are chosen so that l1 is a non-zero
/// divisor on R/I and R/(I + l1 + l2) is Artinian. A section s of degree d
/// is stored as A = l1^t s in (R/I)_{t+d}, and the sections form
/// V_t(d) = {A : l2^t A in l1^t (R/I)}, which grows with t up to H^0(O_X(d)).
/// The t used is the degree span of the Rao module (from local duality),
/// after which V_t(d) is all of H^0(O_X(d)); the dimension is checked
/// against that count.
class GammaSections {
 public:
  explicit GammaSections(Ideal ideal, GammaOptions options = {});

  const Ideal& ideal() const { return ideal_; }
  int l1() const { return l1_; }
  int l2() const { return l2_; }

  /// dim H^0(O_X(d)).
  std::int64_t dim(int d);
  /// The t used for degree d.
  int stable_t(int d);
  /// Basis of V_t(d) as normal forms of degree t + d.
  const std::vector<Poly>& basis(int d, int t);
  /// l1^t * f reduced, for f of degree d (a section coming from R/I).
  Poly embed(const Poly& f, int t) const;
  /// Coordinates of A in V_t(d) w.r.t. basis(d, t); nullopt if A is not in V_t(d).
  std::optional<Vec> coordinates(const Poly& a, int d, int t);
  /// Applies the coordinate change used internally (identity unless no
  /// pair of variables was suitable). basis(), embed() and coordinates()
  /// work in the changed coordinates.
  Poly transform(const Poly& f) const;
  bool changed_coordinates() const { return !change_.empty(); }
  /// (R/I)_e in the working coordinates.
  const QuotientPiece& quotient(int e);

 private:
  struct Piece {
    std::vector<Poly> basis;
  };
  const Piece& piece(int d, int t);
  Ideal ideal_;
  std::vector<Poly> change_;
  int l1_ = -1, l2_ = -1;
  int t_cap_;
  std::map<std::pair<int, int>, Piece> pieces_;
  std::map<int, QuotientPiece> quotients_;
  std::map<int, int> stable_;
  std::map<int, std::int64_t> rao_;
};

/// Picks variables (l1, l2) suited to GammaSections, or nullopt when no pair
/// of variables works.
std::optional<std::pair<int, int>> choose_section_forms(const Ideal& ideal);

/// Rao function value h^1(I_X(j)) = dim Gamma_j - dim (R/I)_j.
std::int64_t rao_from_sections(GammaSections& gamma, int j);

struct NormalSheafResult {
  std::int64_t h0 = 0;
  int t_used = 0;
  int generators = 0;
  int relations = 0;
};
/// dim Hom(I_X, Gamma_*(O_X))_0 from the presentation F2 -> F1 -> I_X given
/// by `generators` and the relation matrix `relations` (columns are syzygies
/// of the generators). Any presentation works.
NormalSheafResult h0_normal_sheaf(const Ideal& ideal, const std::vector<Poly>& generators, const ModuleMap& relations,
                                  GammaOptions options = {});
/// Same, with the minimal presentation.
NormalSheafResult h0_normal_sheaf(const Ideal& ideal, GammaOptions options = {});

/// Solves for a section xi of degree `degree` with m_k * xi = f_k for each
/// pair (m_k, f_k) (m_k a polynomial of degree e_k, f_k of degree degree +
/// e_k). Returns true when such a section exists.
bool section_with_products(GammaSections& gamma, int degree, const std::vector<std::pair<Poly, Poly>>& conditions);

}  // namespace ferrand
