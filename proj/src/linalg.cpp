#include "poskit/linalg.hpp"

#include "poskit/errors.hpp"

#include <algorithm>
#include <cassert>

namespace poskit {

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InputError("dot product of vectors of different lengths");
  Rat sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

std::vector<int> rref_inplace(QMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[row], a[pivot]);
    const Rat lead = a[row][col];
    for (int c = col; c < cols; ++c) a[row][c] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rat factor = a[r][col];
      for (int c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank_of(QMat a) { return static_cast<int>(rref_inplace(a).size()); }

std::vector<QVec> nullspace_basis(const QMat& a, int cols) {
  QMat r = a;
  const std::vector<int> pivots = rref_inplace(r);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<QVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve_unique(const QMat& a, const QVec& b, int cols) {
  if (a.size() != b.size()) throw InputError("solve: row count mismatch");
  QMat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const std::vector<int> pivots = rref_inplace(aug);
  for (int p : pivots)
    if (p == cols) return std::nullopt; // pivot in the augmented column
  if (static_cast<int>(pivots.size()) != cols)
    throw InternalError("solve: system does not have a unique solution");
  QVec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

QMat invert(const QMat& a) {
  const int n = static_cast<int>(a.size());
  QMat aug = a;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(aug[i].size()) != n) throw InputError("invert: matrix not square");
    for (int j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  // [a | I] always has full row rank; a is invertible iff every pivot
  // stays inside the left block.
  const std::vector<int> pivots = rref_inplace(aug);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] != static_cast<int>(i)) throw InternalError("invert: singular matrix");
  if (static_cast<int>(pivots.size()) < n) throw InternalError("invert: singular matrix");
  QMat inv(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

QVec primitive_direction(const QVec& v) {
  Int den_lcm = 1;
  for (const Rat& x : v) den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(x));
  Int num_gcd = 0;
  std::vector<Int> scaled;
  scaled.reserve(v.size());
  for (const Rat& x : v) {
    Int n = boost::multiprecision::numerator(x) * (den_lcm / boost::multiprecision::denominator(x));
    num_gcd = boost::multiprecision::gcd(num_gcd, n);
    scaled.push_back(std::move(n));
  }
  if (num_gcd == 0) return QVec(v.size(), Rat(0));
  QVec out;
  out.reserve(v.size());
  for (const Int& n : scaled) out.emplace_back(n / num_gcd);
  return out;
}

bool is_zero_vector(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool lex_less(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

} // namespace poskit
