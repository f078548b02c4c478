#include "flagbott/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flagbott {

namespace {

// --- exact LP feasibility (phase-1 simplex, Bland's rule) -------------------

// Is {x >= 0 : A x = b} nonempty? A is m x n, exact rational arithmetic.
bool lp_feasible(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const int m = static_cast<int>(a.size());
  const int n = m > 0 ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (Rat& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  // Dense tableau over columns [original | artificial | rhs]; minimize the
  // sum of artificials starting from the artificial basis.
  const int cols = n + m + 1;
  std::vector<std::vector<Rat>> t(static_cast<size_t>(m + 1),
                                  std::vector<Rat>(static_cast<size_t>(cols), Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = b[i];
  }
  std::vector<int> basis(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) basis[i] = n + i;
  // z-row: reduced costs (cost 1 on artificials), z-rhs = -objective.
  for (int j = 0; j < cols; ++j) {
    Rat z = (j >= n && j < n + m) ? Rat(1) : Rat(0);
    for (int i = 0; i < m; ++i) z -= t[i][j];
    t[m][j] = z;
  }
  while (true) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best = 0;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rat ratio = t[i][cols - 1] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded; cannot happen in phase 1
    const Rat piv = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rat factor = t[i][enter];
      for (int j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[static_cast<size_t>(leave)] = enter;
  }
  return t[m][cols - 1] == 0;  // objective reached zero
}

// Does some point of cone c1 lie in cone c2 while using a generator of c1
// outside the common ray set? (Representations in a simplicial cone are
// unique, so this is exactly a violation of "intersection = common face".)
bool has_stray_point(const Fan& f, const ConeRef& c1, const ConeRef& c2,
                     const std::vector<int>& common) {
  for (int i : c1) {
    if (std::binary_search(common.begin(), common.end(), i)) continue;
    std::vector<std::vector<Rat>> a(static_cast<size_t>(f.dim));
    for (int k : c1) {
      if (k == i) continue;
      for (int d = 0; d < f.dim; ++d) a[d].push_back(Rat(f.rays[k][d]));
    }
    for (int k : c2)
      for (int d = 0; d < f.dim; ++d) a[d].push_back(Rat(-f.rays[k][d]));
    std::vector<Rat> b(static_cast<size_t>(f.dim));
    for (int d = 0; d < f.dim; ++d) b[d] = Rat(-f.rays[i][d]);
    if (lp_feasible(std::move(a), std::move(b))) return true;
  }
  return false;
}

std::string cone_name(const ConeRef& c) {
  std::string s = "{";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "}";
}

}  // namespace

int Fan::find_ray(const IntVec& v) const {
  for (size_t i = 0; i < rays.size(); ++i)
    if (rays[i] == v) return static_cast<int>(i);
  return -1;
}

bool Fan::is_cone(const ConeRef& tau) const {
  for (const ConeRef& c : max_cones)
    if (std::includes(c.begin(), c.end(), tau.begin(), tau.end())) return true;
  return false;
}

void Fan::normalize() {
  for (ConeRef& c : max_cones) std::sort(c.begin(), c.end());
  std::sort(max_cones.begin(), max_cones.end());
  max_cones.erase(std::unique(max_cones.begin(), max_cones.end()), max_cones.end());
}

void Fan::validate() const {
  std::set<IntVec> seen;
  for (const IntVec& r : rays) {
    if (static_cast<int>(r.size()) != dim) throw input_error("ray of wrong dimension");
    if (is_zero(r)) throw input_error("zero ray");
    if (primitive(r) != r) throw input_error("non-primitive ray");
    if (!seen.insert(r).second) throw input_error("duplicate ray");
  }
  for (const ConeRef& c : max_cones) {
    std::vector<IntVec> gens;
    int prev = -1;
    for (int i : c) {
      if (i < 0 || i >= static_cast<int>(rays.size()))
        throw input_error("cone ray index out of range");
      if (i <= prev) throw input_error("cone indices not strictly increasing");
      prev = i;
      gens.push_back(rays[static_cast<size_t>(i)]);
    }
    if (rank_of(gens, dim) != static_cast<int>(c.size()))
      throw input_error("non-simplicial cone " + cone_name(c));
  }
  for (size_t i = 0; i < max_cones.size(); ++i)
    for (size_t j = 0; j < max_cones.size(); ++j) {
      if (i == j || max_cones[i].size() >= max_cones[j].size()) continue;
      if (std::includes(max_cones[j].begin(), max_cones[j].end(), max_cones[i].begin(),
                        max_cones[i].end()))
        throw input_error("maximal cone " + cone_name(max_cones[i]) + " contained in " +
                          cone_name(max_cones[j]));
    }
}

Fan zero_fan(int dim) {
  Fan f;
  f.dim = dim;
  f.max_cones.push_back({});
  return f;
}

Fan star_subdivide(const Fan& f, const ConeRef& tau_in) {
  ConeRef tau = tau_in;
  std::sort(tau.begin(), tau.end());
  tau.erase(std::unique(tau.begin(), tau.end()), tau.end());
  if (tau.empty()) throw input_error("star subdivision along the empty cone");
  for (int i : tau)
    if (i < 0 || i >= static_cast<int>(f.rays.size()))
      throw input_error("star subdivision ray index out of range");
  if (!f.is_cone(tau))
    throw input_error("star subdivision target " + cone_name(tau) + " is not a cone of the fan");
  if (tau.size() == 1) return f;

  IntVec sum(static_cast<size_t>(f.dim), Int(0));
  for (int i : tau) sum = vec_add(sum, f.rays[static_cast<size_t>(i)]);
  const IntVec u_tau = primitive(sum);
  if (f.find_ray(u_tau) >= 0)
    throw input_error("star subdivision ray u_tau already present in the fan");

  Fan out;
  out.dim = f.dim;
  out.rays = f.rays;
  out.rays.push_back(u_tau);
  const int nu = static_cast<int>(out.rays.size()) - 1;
  for (const ConeRef& c : f.max_cones) {
    if (!std::includes(c.begin(), c.end(), tau.begin(), tau.end())) {
      out.max_cones.push_back(c);
      continue;
    }
    for (int drop : tau) {
      ConeRef split;
      split.reserve(c.size());
      for (int i : c)
        if (i != drop) split.push_back(i);
      split.push_back(nu);
      out.max_cones.push_back(std::move(split));
    }
  }
  out.normalize();
  return out;
}

Fan join_fans(const Fan& f1, const Fan& f2) {
  if (f1.dim != f2.dim) throw input_error("join of fans of different ambient dimension");
  for (const IntVec& r : f2.rays)
    if (f1.find_ray(r) >= 0) throw input_error("join of fans with a shared ray");
  Fan out;
  out.dim = f1.dim;
  out.rays = f1.rays;
  out.rays.insert(out.rays.end(), f2.rays.begin(), f2.rays.end());
  const int offset = static_cast<int>(f1.rays.size());
  for (const ConeRef& c1 : f1.max_cones)
    for (const ConeRef& c2 : f2.max_cones) {
      ConeRef u = c1;
      for (int i : c2) u.push_back(i + offset);
      std::vector<IntVec> gens;
      for (int i : u) gens.push_back(out.rays[static_cast<size_t>(i)]);
      if (rank_of(gens, out.dim) != static_cast<int>(u.size()))
        throw input_error("join produced a dependent cone");
      out.max_cones.push_back(std::move(u));
    }
  out.normalize();
  return out;
}

bool fans_equal(const Fan& f1, const Fan& f2) {
  if (f1.dim != f2.dim) return false;
  auto canonical = [](const Fan& f) {
    std::set<std::vector<IntVec>> cones;
    for (const ConeRef& c : f.max_cones) {
      std::vector<IntVec> gens;
      for (int i : c) gens.push_back(f.rays[static_cast<size_t>(i)]);
      std::sort(gens.begin(), gens.end());
      cones.insert(std::move(gens));
    }
    return cones;
  };
  return canonical(f1) == canonical(f2);
}

bool check_unimodular(const Fan& f) {
  for (const ConeRef& c : f.max_cones) {
    if (static_cast<int>(c.size()) != f.dim)
      throw input_error("non-full-dimensional maximal cone " + cone_name(c));
    IntMatrix m(f.dim, f.dim);
    for (int j = 0; j < f.dim; ++j)
      for (int i = 0; i < f.dim; ++i) m(i, j) = f.rays[static_cast<size_t>(c[j])][i];
    const Int d = det(m);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

FanReport check_fan(const Fan& f, bool assert_complete) {
  FanReport report;
  try {
    f.validate();
  } catch (const input_error& e) {
    report.violations.emplace_back(e.what());
    return report;  // deeper checks assume basic sanity
  }

  for (size_t i = 0; i < f.max_cones.size(); ++i)
    for (size_t j = i + 1; j < f.max_cones.size(); ++j) {
      const ConeRef& c1 = f.max_cones[i];
      const ConeRef& c2 = f.max_cones[j];
      std::vector<int> common;
      std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                            std::back_inserter(common));
      if (has_stray_point(f, c1, c2, common))
        report.violations.push_back("cones " + cone_name(c1) + " and " + cone_name(c2) +
                                    " do not intersect in their common face");
    }

  std::map<ConeRef, int> facet_count;
  for (const ConeRef& c : f.max_cones) {
    if (static_cast<int>(c.size()) != f.dim) continue;
    for (size_t drop = 0; drop < c.size(); ++drop) {
      ConeRef facet;
      for (size_t i = 0; i < c.size(); ++i)
        if (i != drop) facet.push_back(c[i]);
      ++facet_count[facet];
    }
  }
  for (const auto& [facet, count] : facet_count) {
    if (count > 2)
      report.violations.push_back("facet " + cone_name(facet) + " lies in " +
                                  std::to_string(count) + " maximal cones");
    else if (assert_complete && count != 2)
      report.violations.push_back("facet " + cone_name(facet) + " lies in " +
                                  std::to_string(count) + " maximal cones, expected 2");
  }
  return report;
}

}  // namespace flagbott
