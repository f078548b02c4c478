#include "flagbott/gkm.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace flagbott {

namespace {

std::vector<int> full_offsets(const std::vector<int>& dims) {
  std::vector<int> off(dims.size() + 1, 0);
  for (size_t j = 0; j < dims.size(); ++j) off[j + 1] = off[j] + dims[j] + 1;
  return off;
}

void check_fixed_point(const FlagBottTower& t, const FixedPoint& w) {
  if (static_cast<int>(w.size()) != t.stages())
    throw input_error("fixed point has " + std::to_string(w.size()) + " blocks, tower has " +
                      std::to_string(t.stages()));
  for (int j = 0; j < t.stages(); ++j)
    if (w[j].size() != t.dims[j] + 1)
      throw input_error("fixed point block " + std::to_string(j + 1) + " is a permutation of [" +
                        std::to_string(w[j].size()) + "], expected [" +
                        std::to_string(t.dims[j] + 1) + "]");
}

// X^(j)_l for all 1 <= l < j <= m at once; table[j][l], 1-based, unused
// entries empty.
std::vector<std::vector<IntMatrix>> x_table(const FlagBottTower& t, const FixedPoint& w) {
  const int m = t.stages();
  std::vector<IntMatrix> b(static_cast<size_t>(m + 1));
  for (int j = 1; j <= m; ++j) b[j] = w[j - 1].to_row_matrix();
  std::vector<std::vector<IntMatrix>> x(static_cast<size_t>(m + 1),
                                        std::vector<IntMatrix>(static_cast<size_t>(m + 1)));
  for (int j = 2; j <= m; ++j)
    for (int l = j - 1; l >= 1; --l) {
      IntMatrix acc = mat_mul(mat_mul(b[j], t.mat(j, l)), b[l]);
      for (int p = l + 1; p < j; ++p)
        acc = mat_add(acc, mat_mul(mat_mul(b[j], t.mat(j, p)), x[p][l]));
      x[j][l] = std::move(acc);
    }
  return x;
}

// Two integer vectors are dependent over Q iff one is zero or all 2x2 minors
// vanish.
bool dependent(const IntVec& a, const IntVec& b) {
  size_t i = 0;
  while (i < a.size() && a[i] == 0) ++i;
  if (i == a.size()) return true;  // a == 0
  if (is_zero(b)) return true;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[i] * b[k] != b[i] * a[k]) return false;
  return true;
}

// Is delta an integer multiple of base?
bool integer_multiple(const IntVec& delta, const IntVec& base) {
  size_t i = 0;
  while (i < base.size() && base[i] == 0) ++i;
  if (i == base.size()) return is_zero(delta);
  if (delta[i] % base[i] != 0) return false;
  const Int c = delta[i] / base[i];
  for (size_t k = 0; k < base.size(); ++k)
    if (delta[k] != c * base[k]) return false;
  return true;
}

bool match_edges(const std::vector<std::vector<int>>& candidates, std::vector<int>& assign,
                 std::vector<bool>& used, size_t pos) {
  if (pos == candidates.size()) return true;
  if (assign[pos] >= 0) return match_edges(candidates, assign, used, pos + 1);
  for (int q : candidates[pos]) {
    if (used[q]) continue;
    used[q] = true;
    assign[pos] = q;
    if (match_edges(candidates, assign, used, pos + 1)) return true;
    assign[pos] = -1;
    used[q] = false;
  }
  return false;
}

std::string word_string(const Permutation& w) {
  const bool wide = w.size() > 9;
  std::string s;
  for (int k = 1; k <= w.size(); ++k) {
    if (wide && k > 1) s += ',';
    s += std::to_string(w(k));
  }
  return s;
}

std::string vertex_name(const FixedPoint& v) {
  std::string s;
  for (size_t j = 0; j < v.size(); ++j) {
    if (j > 0) s += '|';
    s += word_string(v[j]);
  }
  return s;
}

std::string label_string(const IntVec& label) {
  std::string s;
  for (size_t i = 0; i < label.size(); ++i) {
    if (i > 0) s += ',';
    s += label[i].str();
  }
  return s;
}

}  // namespace

int full_dim(const std::vector<int>& dims) {
  int n = 0;
  for (int d : dims) n += d + 1;
  return n;
}

int effective_dim(const std::vector<int>& dims) {
  int n = 0;
  for (int d : dims) n += d;
  return n;
}

IntVec to_effective(const std::vector<int>& dims, const IntVec& full) {
  IntVec out;
  out.reserve(static_cast<size_t>(effective_dim(dims)));
  size_t pos = 0;
  for (int d : dims) {
    for (int k = 0; k < d; ++k) out.push_back(full[pos + k]);
    pos += static_cast<size_t>(d) + 1;
  }
  return out;
}

IntMatrix compute_X(const FlagBottTower& t, const FixedPoint& w, int j, int l) {
  validate_flag_tower(t);
  check_fixed_point(t, w);
  if (!(1 <= l && l < j && j <= t.stages()))
    throw input_error("compute_X indices out of range: j=" + std::to_string(j) +
                      " l=" + std::to_string(l));
  return x_table(t, w)[j][l];
}

std::vector<IntMatrix> weight_row_matrices(const FlagBottTower& t, const FixedPoint& w) {
  check_fixed_point(t, w);
  const int m = t.stages();
  const auto off = full_offsets(t.dims);
  const int n_full = off[m];
  const auto x = x_table(t, w);
  std::vector<IntMatrix> rows;
  rows.reserve(static_cast<size_t>(m));
  for (int j = 1; j <= m; ++j) {
    IntMatrix r(t.dims[j - 1] + 1, n_full);
    for (int l = 1; l < j; ++l)
      for (int i = 0; i <= t.dims[j - 1]; ++i)
        for (int c = 0; c <= t.dims[l - 1]; ++c) r(i, off[l - 1] + c) = x[j][l](i, c);
    const IntMatrix bj = w[j - 1].to_row_matrix();
    for (int i = 0; i <= t.dims[j - 1]; ++i)
      for (int c = 0; c <= t.dims[j - 1]; ++c) r(i, off[j - 1] + c) = bj(i, c);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<WeightVector> tangential_weights(const FlagBottTower& t, const FixedPoint& w,
                                             Basis basis) {
  validate_flag_tower(t);
  const auto rows = weight_row_matrices(t, w);
  std::vector<WeightVector> weights;
  for (int j = 1; j <= t.stages(); ++j)
    for (int r = 2; r <= t.dims[j - 1] + 1; ++r)
      for (int s = 1; s < r; ++s) {
        IntVec full = vec_sub(rows[j - 1].row(r - 1), rows[j - 1].row(s - 1));
        if (basis == Basis::effective) full = to_effective(t.dims, full);
        weights.push_back({std::move(full), basis});
      }
  return weights;
}

IntVec axial_function(const FlagBottTower& t, const FixedPoint& w, int block, int r, int s,
                      Basis basis) {
  if (r <= s) throw input_error("axial_function requires r > s");
  const auto rows = weight_row_matrices(t, w);
  IntVec full = vec_sub(rows[block - 1].row(r - 1), rows[block - 1].row(s - 1));
  return basis == Basis::effective ? to_effective(t.dims, full) : full;
}

int GkmGraph::degree() const {
  int d = 0;
  for (int n : dims) d += n * (n + 1) / 2;
  return d;
}

int GkmGraph::label_dim() const {
  return basis == Basis::full ? full_dim(dims) : effective_dim(dims);
}

int GkmGraph::reverse_edge(int e) const {
  const GkmEdge& edge = edges[e];
  for (int f : out_edges[edge.target]) {
    const GkmEdge& cand = edges[f];
    if (cand.target == edge.source && cand.block == edge.block && cand.r == edge.r &&
        cand.s == edge.s)
      return f;
  }
  throw std::logic_error("missing reverse edge");
}

GkmGraph build_gkm_graph(const FlagBottTower& t, Basis basis, long long cap) {
  validate_flag_tower(t);
  GkmGraph g;
  g.dims = t.dims;
  g.basis = basis;
  g.vertices = enumerate_fixed_points(t.dims, cap);

  std::map<std::vector<int>, int> index;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    std::vector<int> key;
    for (const Permutation& p : g.vertices[v])
      key.insert(key.end(), p.word().begin(), p.word().end());
    index.emplace(std::move(key), static_cast<int>(v));
  }

  g.out_edges.resize(g.vertices.size());
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const FixedPoint& w = g.vertices[v];
    const auto rows = weight_row_matrices(t, w);
    for (int j = 1; j <= t.stages(); ++j)
      for (int r = 2; r <= t.dims[j - 1] + 1; ++r)
        for (int s = 1; s < r; ++s) {
          FixedPoint target = w;
          target[j - 1] = w[j - 1].swapped(r, s);
          std::vector<int> key;
          for (const Permutation& p : target)
            key.insert(key.end(), p.word().begin(), p.word().end());
          IntVec label = vec_sub(rows[j - 1].row(r - 1), rows[j - 1].row(s - 1));
          if (basis == Basis::effective) label = to_effective(t.dims, label);
          g.out_edges[v].push_back(static_cast<int>(g.edges.size()));
          g.edges.push_back({static_cast<int>(v), index.at(key), j, r, s, std::move(label)});
        }
  }
  return g;
}

bool check_pairwise_independence(const GkmGraph& g) {
  for (const auto& out : g.out_edges)
    for (size_t a = 0; a < out.size(); ++a)
      for (size_t b = a + 1; b < out.size(); ++b)
        if (dependent(g.edges[out[a]].label, g.edges[out[b]].label)) return false;
  return true;
}

std::optional<Connection> find_connection(const GkmGraph& g, int degree_bound) {
  const int d = g.degree();
  if (d > degree_bound)
    throw cap_error("connection search degree " + std::to_string(d) + " exceeds bound " +
                    std::to_string(degree_bound));
  Connection conn;
  conn.theta.assign(g.edges.size(), {});
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const GkmEdge& edge = g.edges[e];
    const int rev = g.reverse_edge(static_cast<int>(e));
    if (static_cast<int>(e) > rev) continue;  // handle each unordered pair once
    const auto& ev = g.out_edges[edge.source];
    const auto& ew = g.out_edges[edge.target];
    // candidates[p]: positions q in ew with alpha(ew[q]) - alpha(ev[p]) an
    // integer multiple of alpha(e).
    std::vector<std::vector<int>> candidates(ev.size());
    std::vector<int> assign(ev.size(), -1);
    std::vector<bool> used(ew.size(), false);
    for (size_t p = 0; p < ev.size(); ++p) {
      if (ev[p] == static_cast<int>(e)) {
        const auto it = std::find(ew.begin(), ew.end(), rev);
        assign[p] = static_cast<int>(it - ew.begin());
        used[static_cast<size_t>(assign[p])] = true;
        continue;
      }
      for (size_t q = 0; q < ew.size(); ++q) {
        if (ew[q] == rev) continue;
        if (integer_multiple(vec_sub(g.edges[ew[q]].label, g.edges[ev[p]].label), edge.label))
          candidates[p].push_back(static_cast<int>(q));
      }
    }
    if (!match_edges(candidates, assign, used, 0)) return std::nullopt;
    std::vector<int> theta(ev.size()), theta_rev(ew.size());
    for (size_t p = 0; p < ev.size(); ++p) {
      theta[p] = ew[static_cast<size_t>(assign[p])];
      theta_rev[static_cast<size_t>(assign[p])] = ev[p];
    }
    conn.theta[e] = std::move(theta);
    conn.theta[static_cast<size_t>(rev)] = std::move(theta_rev);
  }
  return conn;
}

std::string export_gkm(const GkmGraph& g, GraphFormat format) {
  if (format == GraphFormat::dot) {
    std::ostringstream os;
    os << "graph gkm {\n";
    for (const FixedPoint& v : g.vertices) os << "  \"" << vertex_name(v) << "\";\n";
    for (const GkmEdge& e : g.edges) {
      if (e.source > e.target) continue;
      os << "  \"" << vertex_name(g.vertices[e.source]) << "\" -- \""
         << vertex_name(g.vertices[e.target]) << "\" [label=\"" << label_string(e.label)
         << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

  nlohmann::json out;
  out["dims"] = g.dims;
  out["basis"] = g.basis == Basis::full ? "full" : "effective";
  auto vertices = nlohmann::json::array();
  for (const FixedPoint& v : g.vertices) {
    auto blocks = nlohmann::json::array();
    for (const Permutation& p : v) blocks.push_back(p.word());
    vertices.push_back(std::move(blocks));
  }
  out["vertices"] = std::move(vertices);
  auto edges = nlohmann::json::array();
  for (const GkmEdge& e : g.edges) {
    if (e.source > e.target) continue;
    nlohmann::json rec;
    rec["source"] = e.source;
    rec["target"] = e.target;
    rec["block"] = e.block;
    rec["r"] = e.r;
    rec["s"] = e.s;
    auto label = nlohmann::json::array();
    for (const Int& x : e.label) {
      if (x >= std::numeric_limits<std::int64_t>::min() &&
          x <= std::numeric_limits<std::int64_t>::max())
        label.push_back(static_cast<std::int64_t>(x));
      else
        label.push_back(x.str());
    }
    rec["label"] = std::move(label);
    edges.push_back(std::move(rec));
  }
  out["edges"] = std::move(edges);
  return out.dump(2) + "\n";
}

GkmGraph parse_gkm_json(const std::string& text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad gkm json: ") + e.what());
  }
  GkmGraph g;
  try {
    g.dims = in.at("dims").get<std::vector<int>>();
    g.basis = in.at("basis").get<std::string>() == "full" ? Basis::full : Basis::effective;
    for (const auto& v : in.at("vertices")) {
      FixedPoint p;
      for (const auto& block : v) p.emplace_back(block.get<std::vector<int>>());
      g.vertices.push_back(std::move(p));
    }
    g.out_edges.resize(g.vertices.size());
    std::vector<GkmEdge> undirected;
    for (const auto& rec : in.at("edges")) {
      GkmEdge e;
      e.source = rec.at("source").get<int>();
      e.target = rec.at("target").get<int>();
      e.block = rec.at("block").get<int>();
      e.r = rec.at("r").get<int>();
      e.s = rec.at("s").get<int>();
      for (const auto& x : rec.at("label"))
        e.label.push_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<std::int64_t>()));
      undirected.push_back(std::move(e));
    }
    for (const GkmEdge& e : undirected) {
      GkmEdge rev = e;
      std::swap(rev.source, rev.target);
      rev.label = vec_neg(e.label);
      g.edges.push_back(e);
      g.edges.push_back(std::move(rev));
    }
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad gkm json: ") + e.what());
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GkmEdge& a, const GkmEdge& b) {
    return std::tie(a.source, a.block, a.r, a.s) < std::tie(b.source, b.block, b.r, b.s);
  });
  for (size_t e = 0; e < g.edges.size(); ++e)
    g.out_edges[static_cast<size_t>(g.edges[e].source)].push_back(static_cast<int>(e));
  return g;
}

}  // namespace flagbott
