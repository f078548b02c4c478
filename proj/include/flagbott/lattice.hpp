#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flagbott {

// Exact arithmetic everywhere; tower entries grow multiplicatively and must
// never wrap.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

/// Malformed input (bad shapes, bad permutations, unreadable files).
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A requested enumeration would exceed the configured resource cap.
class cap_error : public std::runtime_error {
 public:
  explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

constexpr long long kDefaultCap = 1'000'000;

// ---------------------------------------------------------------------------
// Vectors

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& a);

/// v divided by the (positive) gcd of its entries. Throws on the zero vector.
IntVec primitive(const IntVec& v);

// ---------------------------------------------------------------------------
// Matrices

/// Dense row-major integer matrix. Indices are 0-based.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntVec row(int i) const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

/// Exact product. Throws input_error on a dimension mismatch.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);

/// Rank over the rationals.
int rank(const IntMatrix& m);

/// Rank of a list of vectors of common dimension.
int rank_of(const std::vector<IntVec>& vecs, int dim);

/// Determinant d and adjugate matrix adj with m * adj == d * I, computed by
/// fraction-free Gauss-Jordan elimination (Montante). Requires m nonsingular.
std::pair<Int, IntMatrix> det_and_adjugate(const IntMatrix& m);

/// Leading-column Plucker genericity: every k x k minor taken on the first k
/// columns and an arbitrary ascending row subset is nonzero. Exponential in
/// the matrix size; diagnostic use only.
bool is_generic(const IntMatrix& g);

// ---------------------------------------------------------------------------
// Permutations

/// A permutation of [n] in one-line notation: word[k-1] = w(k), values 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int k) const { return word_[k - 1]; }  // 1-based
  const std::vector<int>& word() const { return word_; }

  /// Right multiplication by the transposition (r,s): the one-line word with
  /// positions r and s swapped.
  Permutation swapped(int r, int s) const;

  /// Row permutation matrix B with B (t_1,...,t_n)^T = (t_{w(1)},...,t_{w(n)})^T.
  IntMatrix to_row_matrix() const;
  /// Column permutation matrix with (w(k),k)-entries equal to 1; B^T.
  IntMatrix to_column_matrix() const;

  /// Sign by inversion counting.
  int sign() const;

  bool operator==(const Permutation& other) const { return word_ == other.word_; }
  bool operator<(const Permutation& other) const { return word_ < other.word_; }

 private:
  std::vector<int> word_;
};

IntMatrix perm_to_row_matrix(const Permutation& w);

}  // namespace flagbott
