#include "flagbott/tower.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace flagbott {

namespace {

std::string key_name(int j, int l) {
  return "(" + std::to_string(j) + "," + std::to_string(l) + ")";
}

void check_dims(const std::vector<int>& dims) {
  if (dims.empty()) throw input_error("tower needs at least one stage");
  for (size_t j = 0; j < dims.size(); ++j)
    if (dims[j] < 1)
      throw input_error("stage dimension n_" + std::to_string(j + 1) + " must be positive");
}

template <typename Map, typename ShapeCheck>
void check_keys(const std::vector<int>& dims, const Map& map, ShapeCheck&& shape_ok) {
  const int m = static_cast<int>(dims.size());
  for (int j = 2; j <= m; ++j)
    for (int l = 1; l < j; ++l)
      if (!map.count({j, l})) throw input_error("missing tower entry for " + key_name(j, l));
  for (const auto& [key, value] : map) {
    const auto [j, l] = key;
    if (!(1 <= l && l < j && j <= m)) throw input_error("unexpected tower key " + key_name(j, l));
    shape_ok(j, l, value);
  }
}

}  // namespace

void validate_flag_tower(const FlagBottTower& t) {
  check_dims(t.dims);
  check_keys(t.dims, t.mats, [&t](int j, int l, const IntMatrix& a) {
    if (a.rows() != t.dims[j - 1] + 1 || a.cols() != t.dims[l - 1] + 1)
      throw input_error("matrix " + key_name(j, l) + " has shape " + std::to_string(a.rows()) +
                        "x" + std::to_string(a.cols()) + ", expected " +
                        std::to_string(t.dims[j - 1] + 1) + "x" + std::to_string(t.dims[l - 1] + 1));
  });
}

void validate_generalized_tower(const GeneralizedBottTower& t) {
  check_dims(t.dims);
  check_keys(t.dims, t.vecs, [&t](int j, int l, const IntVec& a) {
    if (static_cast<int>(a.size()) != t.dims[j - 1])
      throw input_error("vector " + key_name(j, l) + " has length " + std::to_string(a.size()) +
                        ", expected " + std::to_string(t.dims[j - 1]));
  });
}

IntMatrix lambda_matrix(const GeneralizedBottTower& t) {
  validate_generalized_tower(t);
  const int m = t.stages();
  int n = 0;
  std::vector<int> offset(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    offset[j] = n;
    n += t.dims[j];
  }
  IntMatrix lam(n, m);
  for (int j = 1; j <= m; ++j) {
    for (int k = 0; k < t.dims[j - 1]; ++k) lam(offset[j - 1] + k, j - 1) = -1;
    for (int l = 1; l < j; ++l) {
      const IntVec& a = t.vec(j, l);
      for (int k = 0; k < t.dims[j - 1]; ++k) lam(offset[j - 1] + k, l - 1) = a[k];
    }
  }
  return lam;
}

FlagBottTower associate(const GeneralizedBottTower& t) {
  validate_generalized_tower(t);
  FlagBottTower f;
  f.dims = t.dims;
  for (const auto& [key, a] : t.vecs) {
    const auto [j, l] = key;
    IntMatrix mat(t.dims[j - 1] + 1, t.dims[l - 1] + 1);
    for (int k = 0; k < t.dims[j - 1]; ++k) mat(k, 0) = a[k];
    f.mats.emplace(key, std::move(mat));
  }
  return f;
}

long long fixed_point_count(const std::vector<int>& dims, long long cap) {
  check_dims(dims);
  long long count = 1;
  for (int n : dims) {
    for (int k = 2; k <= n + 1; ++k) {
      count *= k;
      if (count > cap)
        throw cap_error("fixed point count exceeds cap " + std::to_string(cap));
    }
  }
  return count;
}

std::vector<FixedPoint> enumerate_fixed_points(const std::vector<int>& dims, long long cap) {
  const long long total = fixed_point_count(dims, cap);
  const int m = static_cast<int>(dims.size());
  std::vector<std::vector<Permutation>> block(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    std::vector<int> word(static_cast<size_t>(dims[j] + 1));
    std::iota(word.begin(), word.end(), 1);
    do {
      block[j].emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
  }
  std::vector<FixedPoint> points;
  points.reserve(static_cast<size_t>(total));
  std::vector<size_t> idx(static_cast<size_t>(m), 0);
  while (true) {
    FixedPoint p;
    p.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) p.push_back(block[j][idx[j]]);
    points.push_back(std::move(p));
    int j = m - 1;
    while (j >= 0 && ++idx[j] == block[j].size()) idx[j--] = 0;
    if (j < 0) break;
  }
  return points;
}

}  // namespace flagbott
