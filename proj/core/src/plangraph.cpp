#include "achiral/plangraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "achiral/error.hpp"

namespace achiral::plangraph {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

using Multiplicity = std::vector<std::vector<int>>;

Multiplicity multiplicity_matrix(const PlanarMultigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Multiplicity m(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : g.edges()) {
    if (u == v) {
      ++m[u][u];
    } else {
      ++m[u][v];
      ++m[v][u];
    }
  }
  return m;
}

// Joint colour refinement of two graphs; colours are comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const Multiplicity& a,
                                                             const Multiplicity& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> ca(a.size());
  std::vector<int> cb(b.size());
  {
    std::map<std::pair<int, int>, int> ids;
    auto initial = [&](const Multiplicity& m, int v) {
      int degree = 0;
      for (int u = 0; u < n; ++u) degree += (u == v ? 2 : 1) * m[v][u];
      return std::pair{degree, m[v][v]};
    };
    for (int v = 0; v < n; ++v) ids.emplace(initial(a, v), 0);
    for (int v = 0; v < n; ++v) ids.emplace(initial(b, v), 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) {
      ca[v] = ids[initial(a, v)];
      cb[v] = ids[initial(b, v)];
    }
  }
  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    auto signature = [&](const Multiplicity& m, const std::vector<int>& c, int v) {
      Signature s{c[v], {}};
      for (int u = 0; u < n; ++u) {
        if (u != v && m[v][u] > 0) s.second.emplace_back(c[u], m[v][u]);
      }
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::map<Signature, int> ids;
    std::vector<Signature> sa;
    std::vector<Signature> sb;
    for (int v = 0; v < n; ++v) {
      sa.push_back(signature(a, ca, v));
      sb.push_back(signature(b, cb, v));
      ids.emplace(sa.back(), 0);
      ids.emplace(sb.back(), 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) {
      ca[v] = ids[sa[v]];
      cb[v] = ids[sb[v]];
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {ca, cb};
}

}  // namespace

PlanarMultigraph::PlanarMultigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw InvalidInput("graph must have at least one vertex");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
      throw InvalidInput("edge endpoint out of range");
    }
  }
}

PlanarMultigraph::PlanarMultigraph(int vertex_count, std::vector<Edge> edges,
                                   std::vector<std::vector<int>> rotations)
    : PlanarMultigraph(vertex_count, std::move(edges)) {
  if (static_cast<int>(rotations.size()) != vertex_count_) {
    throw InvalidInput("rotation system must list every vertex");
  }
  const int darts = 2 * edge_count();
  next_ccw_.assign(static_cast<std::size_t>(darts), -1);
  std::vector<int> seen(static_cast<std::size_t>(darts), 0);
  for (int v = 0; v < vertex_count_; ++v) {
    const auto& rot = rotations[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const int d = rot[i];
      if (d < 0 || d >= darts) throw InvalidInput("rotation lists an unknown dart");
      if (seen[d]++) throw InvalidInput("rotation lists a dart twice");
      if (dart_vertex(d) != v) throw InvalidInput("rotation places a dart at the wrong vertex");
      next_ccw_[d] = rot[(i + 1) % rot.size()];
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InvalidInput("rotation system misses a dart");
  }
  if (!is_connected()) throw InvalidInput("map is not connected");
  if (vertex_count_ - edge_count() + face_count() != 2) {
    throw InvalidInput("rotation system is not planar (V - E + F != 2)");
  }
}

int PlanarMultigraph::dart_vertex(int dart) const {
  const auto& e = edges_.at(static_cast<std::size_t>(dart / 2));
  return dart % 2 == 0 ? e.first : e.second;
}

int PlanarMultigraph::next_ccw(int dart) const {
  if (next_ccw_.empty()) throw InvalidInput("graph carries no rotation system");
  return next_ccw_.at(static_cast<std::size_t>(dart));
}

std::vector<std::vector<int>> PlanarMultigraph::rotations() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count_));
  if (next_ccw_.empty()) return out;
  std::vector<bool> done(next_ccw_.size(), false);
  // Start each vertex cycle at its smallest dart for a canonical listing.
  for (int d = 0; d < static_cast<int>(next_ccw_.size()); ++d) {
    if (done[d]) continue;
    auto& rot = out[dart_vertex(d)];
    for (int x = d; !done[x]; x = next_ccw_[x]) {
      done[x] = true;
      rot.push_back(x);
    }
  }
  return out;
}

std::vector<int> PlanarMultigraph::face_of_dart() const {
  const int darts = 2 * edge_count();
  std::vector<int> face(static_cast<std::size_t>(darts), -1);
  int faces = 0;
  for (int d = 0; d < darts; ++d) {
    if (face[d] != -1) continue;
    for (int x = d; face[x] == -1; x = next_ccw(x ^ 1)) face[x] = faces;
    ++faces;
  }
  return face;
}

int PlanarMultigraph::face_count() const {
  if (edges_.empty()) return 1;
  const auto faces = face_of_dart();
  return *std::max_element(faces.begin(), faces.end()) + 1;
}

bool PlanarMultigraph::is_connected() const {
  UnionFind uf(vertex_count_);
  int components = vertex_count_;
  for (const auto& [u, v] : edges_) {
    if (uf.unite(u, v)) --components;
  }
  return components == 1;
}

PlanarMultigraph dual(const PlanarMultigraph& g) {
  if (!g.has_rotation()) throw InvalidInput("dual: graph carries no rotation system");
  if (g.edge_count() == 0) return PlanarMultigraph(1, {}, {{}});
  const auto face = g.face_of_dart();
  const int faces = *std::max_element(face.begin(), face.end()) + 1;
  std::vector<PlanarMultigraph::Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) edges.emplace_back(face[2 * e], face[2 * e + 1]);
  // Dual rotation: d -> next_ccw(d ^ 1), listed along each face orbit.
  std::vector<std::vector<int>> rotations(static_cast<std::size_t>(faces));
  std::vector<bool> done(static_cast<std::size_t>(2 * g.edge_count()), false);
  for (int d = 0; d < 2 * g.edge_count(); ++d) {
    if (done[d]) continue;
    for (int x = d; !done[x]; x = g.next_ccw(x ^ 1)) {
      done[x] = true;
      rotations[face[d]].push_back(x);
    }
  }
  return PlanarMultigraph(faces, std::move(edges), std::move(rotations));
}

BigInt spanning_tree_count(const PlanarMultigraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return 1;
  std::vector<std::vector<BigInt>> lap(static_cast<std::size_t>(n - 1),
                                       std::vector<BigInt>(static_cast<std::size_t>(n - 1), 0));
  // Row and column of vertex 0 are deleted.
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    if (u > 0) lap[u - 1][u - 1] += 1;
    if (v > 0) lap[v - 1][v - 1] += 1;
    if (u > 0 && v > 0) {
      lap[u - 1][v - 1] -= 1;
      lap[v - 1][u - 1] -= 1;
    }
  }
  return bareiss_determinant(std::move(lap));
}

bool has_cut_vertex(const PlanarMultigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> loops(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    if (u == v) {
      ++loops[u];
    } else {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (loops[v] >= 2 || (loops[v] == 1 && !adj[v].empty())) return true;
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  // Tarjan articulation points on the underlying simple graph.
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  bool found = false;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int u : adj[v]) {
      if (u == parent) continue;
      if (disc[u] != -1) {
        low[v] = std::min(low[v], disc[u]);
        continue;
      }
      ++children;
      dfs(u, v);
      low[v] = std::min(low[v], low[u]);
      if (parent != -1 && low[u] >= disc[v]) found = true;
    }
    if (parent == -1 && children > 1) found = true;
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] == -1) dfs(v, -1);
  }
  return found;
}

bool are_isomorphic(const PlanarMultigraph& g, const PlanarMultigraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  const int n = g.vertex_count();
  const Multiplicity mg = multiplicity_matrix(g);
  const Multiplicity mh = multiplicity_matrix(h);
  const auto [cg, ch] = refine_colours(mg, mh);
  {
    auto sg = cg;
    auto sh = ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  std::map<int, int> class_size;
  for (int c : cg) ++class_size[c];

  // Vertex order: grow from the rarest colour, preferring vertices with many
  // already-ordered neighbours.
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::vector<int> attached(static_cast<std::size_t>(n), 0);
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == -1 || attached[v] > attached[best] ||
          (attached[v] == attached[best] && class_size[cg[v]] < class_size[cg[best]])) {
        best = v;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (int u = 0; u < n; ++u) {
      if (mg[best][u] > 0) ++attached[u];
    }
  }

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  long long nodes = 0;
  constexpr long long kNodeBudget = 50'000'000;
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    if (++nodes > kNodeBudget) throw BudgetExceeded("isomorphism search exceeded its node budget");
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || ch[w] != cg[v] || mh[w][w] != mg[v][v]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const int u = order[i];
        consistent = mg[v][u] == mh[w][image[u]];
      }
      if (!consistent) continue;
      image[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
      image[v] = -1;
    }
    return false;
  };
  return extend(0);
}

bool are_map_isomorphic(const PlanarMultigraph& g, const PlanarMultigraph& h,
                        bool allow_reflection) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (g.edge_count() == 0) return true;
  const int darts = 2 * g.edge_count();
  std::vector<int> prev_h(static_cast<std::size_t>(darts));
  for (int d = 0; d < darts; ++d) prev_h[h.next_ccw(d)] = d;
  for (int reflect = 0; reflect <= (allow_reflection ? 1 : 0); ++reflect) {
    for (int target = 0; target < darts; ++target) {
      std::vector<int> f(static_cast<std::size_t>(darts), -1);
      std::vector<int> finv(static_cast<std::size_t>(darts), -1);
      std::vector<int> stack{0};
      f[0] = target;
      finv[target] = 0;
      bool ok = true;
      while (!stack.empty() && ok) {
        const int d = stack.back();
        stack.pop_back();
        const int img_twin = f[d] ^ 1;
        const int img_next = reflect ? prev_h[f[d]] : h.next_ccw(f[d]);
        for (auto [src, img] : {std::pair{d ^ 1, img_twin}, std::pair{g.next_ccw(d), img_next}}) {
          if (f[src] == -1) {
            if (finv[img] != -1) {
              ok = false;
              break;
            }
            f[src] = img;
            finv[img] = src;
            stack.push_back(src);
          } else if (f[src] != img) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

bool is_self_dual(const PlanarMultigraph& g, SelfDualMode mode) {
  if (g.edge_count() > kSelfDualEdgeBudget) {
    throw BudgetExceeded("is_self_dual: edge count exceeds the isomorphism budget of " +
                         std::to_string(kSelfDualEdgeBudget));
  }
  const PlanarMultigraph d = dual(g);
  return mode == SelfDualMode::Abstract ? are_isomorphic(g, d) : are_map_isomorphic(g, d);
}

bool selfdual_tree_bound_check(const PlanarMultigraph& g) {
  if (g.edge_count() % 2 != 0) {
    throw InvalidInput("selfdual_tree_bound_check: a self-dual graph has an even edge count here");
  }
  const BigInt n = g.edge_count() / 2;
  return spanning_tree_count(g) >= n * (n - 3);
}

}  // namespace achiral::plangraph
