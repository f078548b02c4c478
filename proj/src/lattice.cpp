#include "flagbott/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace flagbott {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Vectors

IntVec vec_add(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), "vector dimension mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), "vector dimension mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), "vector dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  require(g != 0, "primitive() of the zero vector");
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

// ---------------------------------------------------------------------------
// Matrices

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
  rows_ = static_cast<int>(init.size());
  cols_ = rows_ > 0 ? static_cast<int>(init.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : init) {
    if (static_cast<int>(row.size()) != cols_) throw input_error("ragged matrix initializer");
    for (long long x : row) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::row(int i) const {
  IntVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.rows(), "mat_mul dimension mismatch: " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                    "x" + std::to_string(b.cols()));
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "mat_add dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Int det(const IntMatrix& m) {
  require(m.rows() == m.cols(), "det of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (w(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(w(k, j), w(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) w(i, j) = (w(k, k) * w(i, j) - w(i, k) * w(k, j)) / prev;
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

int rank(const IntMatrix& m) {
  // Fraction-free row echelon with column skipping.
  IntMatrix w = m;
  const int rows = w.rows(), cols = w.cols();
  int r = 0;
  Int prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (w(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j) std::swap(w(r, j), w(piv, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) w(i, j) = (w(r, c) * w(i, j) - w(i, c) * w(r, j)) / prev;
      w(i, c) = 0;
    }
    prev = w(r, c);
    ++r;
  }
  return r;
}

int rank_of(const std::vector<IntVec>& vecs, int dim) {
  IntMatrix m(static_cast<int>(vecs.size()), dim);
  for (size_t i = 0; i < vecs.size(); ++i) {
    require(static_cast<int>(vecs[i].size()) == dim, "rank_of dimension mismatch");
    for (int j = 0; j < dim; ++j) m(static_cast<int>(i), j) = vecs[i][j];
  }
  return rank(m);
}

std::pair<Int, IntMatrix> det_and_adjugate(const IntMatrix& m) {
  require(m.rows() == m.cols(), "adjugate of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return {Int(1), IntMatrix(0, 0)};
  // Fraction-free Gauss-Jordan on [m | I].
  IntMatrix w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = 1;
  }
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (w(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (w(i, k) != 0) {
          piv = i;
          break;
        }
      require(piv >= 0, "adjugate of a singular matrix");
      for (int j = 0; j < 2 * n; ++j) std::swap(w(k, j), w(piv, j));
      sign = -sign;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      for (int j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        w(i, j) = (w(k, k) * w(i, j) - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  Int d = sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
  IntMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj(i, j) = sign > 0 ? w(i, n + j) : Int(-w(i, n + j));
  return {d, adj};
}

bool is_generic(const IntMatrix& g) {
  require(g.rows() == g.cols(), "is_generic of a non-square matrix");
  const int n = g.rows();
  require(n <= 62, "is_generic: matrix too large for subset enumeration");
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i)) rows.push_back(i);
    const int k = static_cast<int>(rows.size());
    IntMatrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = g(rows[i], j);
    if (det(minor) == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  require(n > 0, "empty permutation word");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : word_) {
    require(v >= 1 && v <= n, "permutation value out of range: " + std::to_string(v));
    require(!seen[v - 1], "repeated permutation value: " + std::to_string(v));
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::swapped(int r, int s) const {
  std::vector<int> w = word_;
  std::swap(w[r - 1], w[s - 1]);
  return Permutation(std::move(w));
}

IntMatrix Permutation::to_row_matrix() const {
  const int n = size();
  IntMatrix b(n, n);
  for (int k = 1; k <= n; ++k) b(k - 1, word_[k - 1] - 1) = 1;
  return b;
}

IntMatrix Permutation::to_column_matrix() const {
  const int n = size();
  IntMatrix c(n, n);
  for (int k = 1; k <= n; ++k) c(word_[k - 1] - 1, k - 1) = 1;
  return c;
}

int Permutation::sign() const {
  int inv = 0;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

IntMatrix perm_to_row_matrix(const Permutation& w) { return w.to_row_matrix(); }

}  // namespace flagbott
