#include "ferrand/linalg.hpp"

#include "ferrand/errors.hpp"

namespace ferrand {

Vec Matrix::row(int r) const {
  auto begin = data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
  return Vec(begin, begin + cols_);
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

namespace {

// In place: rows[target] -= factor * rows[source], from column `from` on.
void axpy(Vec& target, const Vec& source, const Scalar& factor, int from, const Field& field) {
  for (std::size_t c = static_cast<std::size_t>(from); c < source.size(); ++c)
    if (source[c] != 0) target[c] = field.sub(target[c], field.mul(factor, source[c]));
}

}  // namespace

Echelon row_reduce(const Matrix& m, const Field& field) {
  std::vector<Vec> work;
  work.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) work.push_back(m.row(r));
  Echelon out;
  std::size_t next = 0;
  for (int c = 0; c < m.cols() && next < work.size(); ++c) {
    std::size_t piv = next;
    while (piv < work.size() && work[piv][static_cast<std::size_t>(c)] == 0) ++piv;
    if (piv == work.size()) continue;
    std::swap(work[piv], work[next]);
    Vec& prow = work[next];
    Scalar inv = field.inverse(prow[static_cast<std::size_t>(c)]);
    for (std::size_t k = static_cast<std::size_t>(c); k < prow.size(); ++k)
      if (prow[k] != 0) prow[k] = field.mul(prow[k], inv);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == next || work[r][static_cast<std::size_t>(c)] == 0) continue;
      Scalar f = work[r][static_cast<std::size_t>(c)];
      axpy(work[r], prow, f, c, field);
    }
    out.pivots.push_back(c);
    ++next;
  }
  work.resize(next);
  out.rows = std::move(work);
  return out;
}

int rank(const Matrix& m, const Field& field) { return static_cast<int>(row_reduce(m, field).rows.size()); }

std::vector<Vec> nullspace(const Matrix& m, const Field& field) {
  Echelon e = row_reduce(m, field);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const Scalar& x = e.rows[i][static_cast<std::size_t>(f)];
      if (x != 0) v[static_cast<std::size_t>(e.pivots[i])] = field.neg(x);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec EchelonBasis::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != dim_) throw InvariantViolation("vector length mismatch in echelon basis");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& x = v[static_cast<std::size_t>(pivots_[i])];
    if (x == 0) continue;
    Scalar f = x;
    axpy(v, rows_[i], f, 0, field_);
  }
  return v;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(Vec v) {
  v = reduce(std::move(v));
  int piv = -1;
  for (int c = 0; c < dim_; ++c)
    if (v[static_cast<std::size_t>(c)] != 0) {
      piv = c;
      break;
    }
  if (piv < 0) return false;
  Scalar inv = field_.inverse(v[static_cast<std::size_t>(piv)]);
  for (auto& x : v)
    if (x != 0) x = field_.mul(x, inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

}  // namespace ferrand
