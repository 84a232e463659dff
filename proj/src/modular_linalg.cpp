#include "grouplab/modular_linalg.hpp"

#include <utility>

#include "grouplab/error.hpp"
#include "grouplab/group.hpp"

namespace grouplab {

PrimeField::PrimeField(Residue p)
    : p_(p),
      small_(p < (1u << 16)),
      tiny_(p < (1u << 13)),
      magic_(UINT64_C(0xFFFFFFFFFFFFFFFF) / p + 1),
      barrett_((UINT64_C(1) << 42) / p + 1) {
  if (!is_prime(p) || p >= (1u << 31)) throw Error(ErrorKind::InvalidArgument, "modulus must be a word-sized prime");
  if (small_) {
    inv_table_.assign(p, 0);
    for (Residue a = 1; a < p; ++a) inv_table_[a] = inv_slow(a);
  }
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue r = 1 % p_, b = a % p_;
  while (e > 0) {
    if (e & 1) r = static_cast<Residue>(static_cast<std::uint64_t>(r) * b % p_);
    b = static_cast<Residue>(static_cast<std::uint64_t>(b) * b % p_);
    e >>= 1;
  }
  return r;
}

Residue PrimeField::inv_slow(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorKind::InvalidArgument, "zero has no inverse");
  return pow(a, p_ - 2);
}

int row_reduce(Matrix& m, const PrimeField& f) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Residue s = f.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Residue t = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

int rank(Matrix m, const PrimeField& f) { return row_reduce(m, f); }

std::vector<Vec> span_basis(std::span<const Vec> vectors, const PrimeField& f) {
  if (vectors.empty()) return {};
  const int cols = static_cast<int>(vectors.front().size());
  Matrix m(static_cast<int>(vectors.size()), cols);
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(vectors[i].size()) != cols)
      throw Error(ErrorKind::InvalidArgument, "vectors differ in length");
    for (int j = 0; j < cols; ++j) m.at(i, j) = vectors[i][j] % f.modulus();
  }
  const int r = row_reduce(m, f);
  std::vector<Vec> out(r, Vec(cols));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) out[i][j] = m.at(i, j);
  return out;
}

std::vector<Vec> kernel_basis(Matrix m, const PrimeField& f) {
  const int r = row_reduce(m, f);
  std::vector<int> pivot_col(r, -1);
  std::vector<bool> is_pivot(m.cols, false);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) {
        pivot_col[i] = j;
        is_pivot[j] = true;
        break;
      }
  std::vector<Vec> out;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols, 0);
    x[free] = 1;
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = f.neg(m.at(i, free));
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vec> solve_square(Matrix m, Vec b, const PrimeField& f) {
  const int n = m.rows;
  if (m.cols != n || static_cast<int>(b.size()) != n)
    throw Error(ErrorKind::InvalidArgument, "solve_square needs a square system");
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      std::swap(b[piv], b[c]);
    }
    const Residue s = f.inv(m.at(c, c));
    for (int j = c; j < n; ++j) m.at(c, j) = f.mul(m.at(c, j), s);
    b[c] = f.mul(b[c], s);
    for (int i = 0; i < n; ++i) {
      if (i == c || m.at(i, c) == 0) continue;
      const Residue t = m.at(i, c);
      for (int j = c; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(c, j)));
      b[i] = f.sub(b[i], f.mul(t, b[c]));
    }
  }
  return b;
}

bool is_invertible(Matrix m, const PrimeField& f) {
  return m.rows == m.cols && row_reduce(m, f) == m.rows;
}

}  // namespace grouplab
