#include "achiral/diagram.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <thread>

#include "achiral/error.hpp"

namespace achiral::diagrams {
namespace {

std::uint64_t to_u64(const BigInt& value, const char* what) {
  const BigInt magnitude = value < 0 ? BigInt(-value) : value;
  if (magnitude > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw BudgetExceeded(std::string(what) + ": value exceeds 64 bits");
  }
  return magnitude.convert_to<std::uint64_t>();
}

// Union-find without path compression so that unions can be undone.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(parent_.size(), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  // Returns false when a and b were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  std::size_t mark() const { return history_.size(); }
  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      const int b = history_.back();
      history_.pop_back();
      size_[parent_[b]] -= size_[b];
      parent_[b] = b;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

std::array<std::pair<int, int>, 2> splice_pairs(int choice) {
  if (choice == 0) return {{{0, 1}, {2, 3}}};
  return {{{1, 2}, {3, 0}}};
}

// Depth-first enumeration of monocyclic states. A redundant union closes a
// loop, which is only allowed as the very last union.
class StateEnumerator {
 public:
  explicit StateEnumerator(const LinkDiagram& d) : d_(d), uf_(d.arc_count()) {
    const int n = d.crossing_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> q;
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      q.push(s);
      while (!q.empty()) {
        const int c = q.front();
        q.pop();
        order_.push_back(c);
        for (int t = 0; t < 4; ++t) {
          const int other = d.twin(4 * c + t) / 4;
          if (!seen[other]) {
            seen[other] = true;
            q.push(other);
          }
        }
      }
    }
  }

  const std::vector<int>& order() const { return order_; }

  // Applies a choice at order position depth; false means the branch is dead.
  bool apply(std::size_t depth, int choice) {
    const int c = order_[depth];
    const bool last_crossing = depth + 1 == order_.size();
    const auto pairs = splice_pairs(choice);
    for (int k = 0; k < 2; ++k) {
      const int a = d_.arc_index(4 * c + pairs[k].first);
      const int b = d_.arc_index(4 * c + pairs[k].second);
      if (!uf_.unite(a, b) && !(last_crossing && k == 1)) return false;
    }
    return true;
  }

  template <typename Visit>
  void run(std::size_t depth, std::uint32_t state, Visit& visit) {
    if (depth == order_.size()) {
      visit(state);
      return;
    }
    const int c = order_[depth];
    for (int choice = 0; choice < 2; ++choice) {
      const std::size_t m = uf_.mark();
      if (apply(depth, choice)) {
        run(depth + 1, state | (static_cast<std::uint32_t>(choice) << c), visit);
      }
      uf_.rollback(m);
    }
  }

 private:
  const LinkDiagram& d_;
  RollbackUnionFind uf_;
  std::vector<int> order_;
};

void check_state_budget(const LinkDiagram& d) {
  if (d.crossing_count() > kStateBudget) {
    throw BudgetExceeded("state enumeration is limited to " + std::to_string(kStateBudget) +
                         " crossings, diagram has " + std::to_string(d.crossing_count()));
  }
}

LinkDiagram with_arcs(const LinkDiagram& d, const std::vector<std::array<int, 4>>& arcs) {
  std::vector<Crossing> out;
  for (std::size_t c = 0; c < arcs.size(); ++c) out.push_back({d.crossings()[c].id, arcs[c]});
  return LinkDiagram(std::move(out));
}

}  // namespace

LinkDiagram::LinkDiagram() = default;

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  const int n = crossing_count();
  if (n == 0) return;
  const int darts = 4 * n;
  std::map<int, std::vector<int>> occurrences;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) occurrences[crossings_[c].arcs[s]].push_back(4 * c + s);
  }
  twin_.assign(static_cast<std::size_t>(darts), -1);
  arc_index_.assign(static_cast<std::size_t>(darts), -1);
  int next_arc = 0;
  for (const auto& [arc, where] : occurrences) {
    if (where.size() != 2) {
      throw InvalidInput("arc " + std::to_string(arc) + " occurs " +
                         std::to_string(where.size()) + " times (crossing id " +
                         std::to_string(crossings_[where[std::min<std::size_t>(2, where.size() - 1)] / 4].id) + ")");
    }
    twin_[where[0]] = where[1];
    twin_[where[1]] = where[0];
    arc_index_[where[0]] = arc_index_[where[1]] = next_arc++;
  }

  std::vector<int> component(static_cast<std::size_t>(n), -1);
  std::vector<int> stack{0};
  component[0] = 0;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      const int other = twin_[4 * c + s] / 4;
      if (component[other] == -1) {
        component[other] = 0;
        stack.push_back(other);
      }
    }
  }
  for (int c = 0; c < n; ++c) {
    if (component[c] == -1) {
      throw InvalidInput("diagram is split: crossing id " + std::to_string(crossings_[c].id) +
                         " is not connected to crossing id " + std::to_string(crossings_[0].id));
    }
  }

  // Faces are the orbits of d -> sigma(twin(d)), sigma stepping to the next slot.
  face_of_dart_.assign(static_cast<std::size_t>(darts), -1);
  face_count_ = 0;
  for (int d = 0; d < darts; ++d) {
    if (face_of_dart_[d] != -1) continue;
    for (int x = d; face_of_dart_[x] == -1;) {
      face_of_dart_[x] = face_count_;
      const int t = twin_[x];
      x = 4 * (t / 4) + (t % 4 + 1) % 4;
    }
    ++face_count_;
  }
  if (face_count_ != n + 2) {
    throw InvalidInput("diagram is not planar: V - E + F = " + std::to_string(face_count_ - n) +
                       " (crossing id " + std::to_string(crossings_[0].id) + ")");
  }
}

LinkDiagram LinkDiagram::from_arcs(const std::vector<std::array<int, 4>>& arcs) {
  std::vector<Crossing> crossings;
  for (std::size_t c = 0; c < arcs.size(); ++c) crossings.push_back({static_cast<int>(c), arcs[c]});
  return LinkDiagram(std::move(crossings));
}

std::vector<std::array<int, 4>> LinkDiagram::arc_table() const {
  std::vector<std::array<int, 4>> out;
  for (const auto& c : crossings_) out.push_back(c.arcs);
  return out;
}

CheckerboardColoring checkerboard_coloring(const LinkDiagram& d) {
  CheckerboardColoring out;
  if (d.crossing_count() == 0) {
    out.face_color = {Color::Black, Color::White};
    return out;
  }
  std::vector<int> colour(static_cast<std::size_t>(d.face_count()), -1);
  const auto& face = d.face_of_dart();
  // Faces across an arc differ; spread along darts until stable.
  std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(d.face_count()));
  for (int x = 0; x < 4 * d.crossing_count(); ++x) neighbours[face[x]].push_back(face[d.twin(x)]);
  std::queue<int> q;
  colour[face[0]] = 0;
  q.push(face[0]);
  while (!q.empty()) {
    const int f = q.front();
    q.pop();
    for (int g : neighbours[f]) {
      if (colour[g] == -1) {
        colour[g] = 1 - colour[f];
        q.push(g);
      } else if (colour[g] == colour[f]) {
        throw InvalidInput("faces of the diagram admit no checkerboard colouring");
      }
    }
  }
  for (int c : colour) out.face_color.push_back(c == 0 ? Color::Black : Color::White);
  return out;
}

plangraph::PlanarMultigraph checkerboard_graph(const LinkDiagram& d, Color color) {
  if (d.crossing_count() == 0) return plangraph::PlanarMultigraph(1, {}, {{}});
  const auto colouring = checkerboard_coloring(d);
  const auto& face = d.face_of_dart();
  std::vector<int> vertex(static_cast<std::size_t>(d.face_count()), -1);
  int vertices = 0;
  for (int f = 0; f < d.face_count(); ++f) {
    if (colouring.face_color[f] == color) vertex[f] = vertices++;
  }
  const int n = d.crossing_count();
  std::vector<plangraph::PlanarMultigraph::Edge> edges;
  std::vector<int> graph_dart(static_cast<std::size_t>(4 * n), -1);
  for (int c = 0; c < n; ++c) {
    const int base = colouring.color_of_dart(d, 4 * c) == color ? 0 : 1;
    edges.emplace_back(vertex[face[4 * c + base]], vertex[face[4 * c + base + 2]]);
    graph_dart[4 * c + base] = 2 * c;
    graph_dart[4 * c + base + 2] = 2 * c + 1;
  }
  std::vector<std::vector<int>> rotations(static_cast<std::size_t>(vertices));
  std::vector<bool> done(static_cast<std::size_t>(4 * n), false);
  for (int x = 0; x < 4 * n; ++x) {
    if (done[x] || graph_dart[x] == -1) continue;
    for (int y = x; !done[y];) {
      done[y] = true;
      rotations[vertex[face[y]]].push_back(graph_dart[y]);
      const int t = d.twin(y);
      y = 4 * (t / 4) + (t % 4 + 1) % 4;
    }
  }
  return plangraph::PlanarMultigraph(vertices, std::move(edges), std::move(rotations));
}

std::uint64_t goeritz_det(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return 1;
  const auto colouring = checkerboard_coloring(d);
  const auto& face = d.face_of_dart();
  std::vector<int> white(static_cast<std::size_t>(d.face_count()), -1);
  int count = 0;
  for (int f = 0; f < d.face_count(); ++f) {
    if (colouring.face_color[f] == Color::White) white[f] = count++;
  }
  std::vector<std::vector<BigInt>> g(static_cast<std::size_t>(count),
                                     std::vector<BigInt>(static_cast<std::size_t>(count), 0));
  for (int c = 0; c < d.crossing_count(); ++c) {
    const bool corner_white = colouring.color_of_dart(d, 4 * c) == Color::White;
    const int eta = corner_white ? 1 : -1;
    const int base = corner_white ? 0 : 1;
    const int i = white[face[4 * c + base]];
    const int j = white[face[4 * c + base + 2]];
    if (i == j) continue;
    g[i][j] -= eta;
    g[j][i] -= eta;
    g[i][i] += eta;
    g[j][j] += eta;
  }
  g.pop_back();
  for (auto& row : g) row.pop_back();
  return to_u64(bareiss_determinant(std::move(g)), "goeritz_det");
}

void for_each_monocyclic_state(const LinkDiagram& d,
                               const std::function<void(std::uint32_t)>& visit) {
  check_state_budget(d);
  if (d.crossing_count() == 0) {
    visit(0);
    return;
  }
  StateEnumerator e(d);
  e.run(0, 0, visit);
}

std::uint64_t monocyclic_state_count(const LinkDiagram& d) {
  check_state_budget(d);
  const int n = d.crossing_count();
  if (n == 0) return 1;
  constexpr int kParallelFrom = 16;
  if (n < kParallelFrom) {
    std::uint64_t count = 0;
    auto tally = [&count](std::uint32_t) { ++count; };
    StateEnumerator e(d);
    e.run(0, 0, tally);
    return count;
  }
  // Fixed prefixes of the first few crossings in the enumeration order are
  // independent subproblems; their counts are summed in prefix order.
  constexpr int kSplit = 5;
  constexpr int kTasks = 1 << kSplit;
  std::vector<std::uint64_t> partial(kTasks, 0);
  const unsigned threads = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), kTasks));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (int task = static_cast<int>(w); task < kTasks; task += static_cast<int>(threads)) {
        StateEnumerator e(d);
        bool alive = true;
        std::uint32_t state = 0;
        for (int k = 0; k < kSplit && alive; ++k) {
          const int choice = (task >> k) & 1;
          alive = e.apply(static_cast<std::size_t>(k), choice);
          state |= static_cast<std::uint32_t>(choice) << e.order()[k];
        }
        if (!alive) continue;
        std::uint64_t count = 0;
        auto tally = [&count](std::uint32_t) { ++count; };
        e.run(kSplit, state, tally);
        partial[task] = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

int state_loop_count(const LinkDiagram& d, std::uint32_t state) {
  if (d.crossing_count() == 0) return 1;
  RollbackUnionFind uf(d.arc_count());
  int loops = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (const auto& [s, t] : splice_pairs(static_cast<int>((state >> c) & 1U))) {
      if (!uf.unite(d.arc_index(4 * c + s), d.arc_index(4 * c + t))) ++loops;
    }
  }
  return loops;
}

std::uint32_t state_tree_edges(const LinkDiagram& d, std::uint32_t state) {
  const auto colouring = checkerboard_coloring(d);
  std::uint32_t edges = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    // Choice 0 merges the corners at darts 0 and 2, choice 1 those at 1 and 3.
    const int choice = static_cast<int>((state >> c) & 1U);
    if (colouring.color_of_dart(d, 4 * c + choice) == Color::Black) edges |= 1U << c;
  }
  return edges;
}

bool state_tree_bijection_check(const LinkDiagram& d) {
  if (!is_alternating(d)) throw InvalidInput("state_tree_bijection_check needs an alternating diagram");
  const auto graph = checkerboard_graph(d, Color::Black);
  std::vector<std::uint32_t> images;
  bool all_trees = true;
  for_each_monocyclic_state(d, [&](std::uint32_t state) {
    const std::uint32_t edges = state_tree_edges(d, state);
    images.push_back(edges);
    // A spanning tree has V - 1 edges and no cycle.
    if (std::popcount(edges) != graph.vertex_count() - 1) {
      all_trees = false;
      return;
    }
    std::vector<int> parent(static_cast<std::size_t>(graph.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int c = 0; c < d.crossing_count(); ++c) {
      if (!((edges >> c) & 1U)) continue;
      const int a = find(graph.edges()[c].first);
      const int b = find(graph.edges()[c].second);
      if (a == b) {
        all_trees = false;
        return;
      }
      parent[a] = b;
    }
  });
  if (!all_trees) return false;
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  return BigInt(images.size()) == plangraph::spanning_tree_count(graph);
}

std::string to_string(DetMethod m) {
  switch (m) {
    case DetMethod::Goeritz: return "goeritz";
    case DetMethod::States: return "states";
    case DetMethod::Trees: return "trees";
    case DetMethod::All: return "all";
  }
  return "?";
}

DetMethod parse_det_method(const std::string& text) {
  for (auto m : {DetMethod::Goeritz, DetMethod::States, DetMethod::Trees, DetMethod::All}) {
    if (to_string(m) == text) return m;
  }
  throw InvalidInput("unknown determinant method '" + text + "'");
}

DetReport det_report(const LinkDiagram& d, DetMethod method) {
  DetReport report;
  const bool alternating = is_alternating(d);
  auto need_alternating = [&](DetMethod m) {
    if (!alternating) {
      throw InvalidInput("method " + to_string(m) + " needs an alternating diagram");
    }
  };
  switch (method) {
    case DetMethod::Goeritz:
      report.values.emplace_back(method, goeritz_det(d));
      break;
    case DetMethod::States:
      need_alternating(method);
      report.values.emplace_back(method, monocyclic_state_count(d));
      break;
    case DetMethod::Trees:
      need_alternating(method);
      report.values.emplace_back(
          method, to_u64(plangraph::spanning_tree_count(checkerboard_graph(d, Color::Black)),
                         "spanning_tree_count"));
      break;
    case DetMethod::All:
      report.values.emplace_back(DetMethod::Goeritz, goeritz_det(d));
      if (alternating) {
        report.values.emplace_back(
            DetMethod::Trees,
            to_u64(plangraph::spanning_tree_count(checkerboard_graph(d, Color::Black)),
                   "spanning_tree_count"));
        if (d.crossing_count() <= kStateBudget) {
          report.values.emplace_back(DetMethod::States, monocyclic_state_count(d));
        }
      }
      break;
  }
  report.value = report.values.front().second;
  for (const auto& [m, v] : report.values) {
    if (v != report.value) {
      std::vector<std::string> transcript;
      for (const auto& [mm, vv] : report.values) transcript.push_back(to_string(mm) + "=" + std::to_string(vv));
      throw MethodDisagreement("determinant methods disagree", std::move(transcript));
    }
  }
  return report;
}

std::uint64_t det(const LinkDiagram& d, DetMethod method) { return det_report(d, method).value; }

bool is_alternating(const LinkDiagram& d) {
  // Along a strand, an under-passage (even slot) must meet an over-passage.
  for (int x = 0; x < 4 * d.crossing_count(); ++x) {
    if ((x % 2) == (d.twin(x) % 2)) return false;
  }
  return true;
}

int component_count(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return 1;
  std::vector<int> parent(static_cast<std::size_t>(d.arc_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = d.arc_count();
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int s = 0; s < 2; ++s) {
      const int a = find(d.arc_index(4 * c + s));
      const int b = find(d.arc_index(4 * c + s + 2));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

bool is_knot(const LinkDiagram& d) { return component_count(d) == 1; }

int crossing_number(const LinkDiagram& d) { return d.crossing_count(); }

bool is_reduced(const LinkDiagram& d) {
  for (Color color : {Color::Black, Color::White}) {
    const auto graph = checkerboard_graph(d, color);
    for (const auto& [u, v] : graph.edges()) {
      if (u == v) return false;
    }
  }
  return true;
}

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.crossing_count() == 0) return b;
  if (b.crossing_count() == 0) return a;
  const int na = a.crossing_count();
  const int ea = a.arc_count();
  std::vector<std::array<int, 4>> arcs;
  for (int c = 0; c < na; ++c) {
    std::array<int, 4> row{};
    for (int s = 0; s < 4; ++s) row[s] = a.arc_index(4 * c + s);
    arcs.push_back(row);
  }
  for (int c = 0; c < b.crossing_count(); ++c) {
    std::array<int, 4> row{};
    for (int s = 0; s < 4; ++s) row[s] = ea + b.arc_index(4 * c + s);
    arcs.push_back(row);
  }
  // Cut arc 0 of each diagram at its darts (x, twin x) and (y, twin y) and
  // cross-connect: x with one end of b's arc, twin x with the other.
  const int x = [&] {
    for (int dart = 0;; ++dart) {
      if (a.arc_index(dart) == 0) return dart;
    }
  }();
  const int y0 = [&] {
    for (int dart = 0;; ++dart) {
      if (b.arc_index(dart) == 0) return dart;
    }
  }();
  int y = y0;
  if (is_alternating(a) && is_alternating(b) && (x % 2) == (y % 2)) y = b.twin(y0);
  auto build = [&](int yy) {
    auto table = arcs;
    const int xt = a.twin(x);
    const int yt = b.twin(yy);
    table[x / 4][x % 4] = 0;
    table[na + yy / 4][yy % 4] = 0;
    table[xt / 4][xt % 4] = ea;
    table[na + yt / 4][yt % 4] = ea;
    return LinkDiagram::from_arcs(table);
  };
  try {
    return build(y);
  } catch (const InvalidInput&) {
    return build(b.twin(y));
  }
}

LinkDiagram mirror(const LinkDiagram& d) {
  auto arcs = d.arc_table();
  for (auto& row : arcs) std::rotate(row.begin(), row.begin() + 1, row.end());
  return with_arcs(d, arcs);
}

LinkDiagram reflect(const LinkDiagram& d) {
  auto arcs = d.arc_table();
  for (auto& row : arcs) std::swap(row[1], row[3]);
  return with_arcs(d, arcs);
}

LinkDiagram make_alternating(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return d;
  const auto colouring = checkerboard_coloring(d);
  auto arcs = d.arc_table();
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (colouring.color_of_dart(d, 4 * c) != Color::Black) {
      std::rotate(arcs[c].begin(), arcs[c].begin() + 1, arcs[c].end());
    }
  }
  return with_arcs(d, arcs);
}

}  // namespace achiral::diagrams
