#include "achiral/diagram_builder.hpp"

#include <algorithm>
#include <numeric>

#include "achiral/error.hpp"
#include "achiral/tangles.hpp"

namespace achiral::diagrams {
namespace {

Tangle four_ends() {
  Tangle t;
  for (auto& e : t.ends) e = t.graph.new_port();
  return t;
}

// Two tangles in one graph; ends of t shifted into the shared numbering.
std::pair<Tangle, std::array<int, 4>> merged(const Tangle& s, const Tangle& t) {
  Tangle out = s;
  const int offset = out.graph.absorb(t.graph);
  std::array<int, 4> shifted{};
  for (int k = 0; k < 4; ++k) shifted[k] = t.ends[k] + offset;
  return {std::move(out), shifted};
}

int sign_of(std::int64_t v) { return v > 0 ? 1 : -1; }

}  // namespace

int PortGraph::new_port() {
  partner_.push_back(-1);
  return static_cast<int>(partner_.size()) - 1;
}

void PortGraph::wire(int a, int b) {
  partner_.at(static_cast<std::size_t>(a)) = b;
  partner_.at(static_cast<std::size_t>(b)) = a;
}

int PortGraph::add_crossing(const std::array<int, 4>& ports) {
  crossings_.push_back(ports);
  return static_cast<int>(crossings_.size()) - 1;
}

int PortGraph::absorb(const PortGraph& other) {
  const int offset = static_cast<int>(partner_.size());
  for (int p : other.partner_) partner_.push_back(p < 0 ? p : p + offset);
  for (auto c : other.crossings_) {
    for (int& p : c) p += offset;
    crossings_.push_back(c);
  }
  free_loops_ += other.free_loops_;
  return offset;
}

void PortGraph::join(int a, int b) {
  const int x = partner(a);
  const int y = partner(b);
  if (x < 0 || y < 0) throw InvalidInput("join: port is not a loose end");
  if (x == b) {
    ++free_loops_;
  } else {
    wire(x, y);
  }
  partner_[a] = partner_[b] = -2;
}

LinkDiagram PortGraph::to_diagram() const {
  std::vector<int> owner(partner_.size(), -1);
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    for (int s = 0; s < 4; ++s) owner[crossings_[c][s]] = static_cast<int>(4 * c) + s;
  }
  if (crossings_.empty()) {
    if (free_loops_ == 1) return LinkDiagram();
    throw LinkNotKnot(free_loops_);
  }
  std::vector<std::array<int, 4>> arcs(crossings_.size());
  std::vector<int> arc_of_port(partner_.size(), -1);
  int next = 0;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    for (int s = 0; s < 4; ++s) {
      const int p = crossings_[c][s];
      const int q = partner_[p];
      if (q < 0 || owner[q] < 0) throw InvalidInput("tangle has loose ends; close it first");
      if (arc_of_port[p] < 0) arc_of_port[p] = arc_of_port[q] = next++;
      arcs[c][s] = arc_of_port[p];
    }
  }
  LinkDiagram d = LinkDiagram::from_arcs(arcs);
  if (free_loops_ > 0) throw LinkNotKnot(component_count(d) + free_loops_);
  return d;
}

Tangle zero_tangle() {
  Tangle t = four_ends();
  t.graph.wire(t.ends[Tangle::NW], t.ends[Tangle::NE]);
  t.graph.wire(t.ends[Tangle::SW], t.ends[Tangle::SE]);
  return t;
}

Tangle infinity_tangle() {
  Tangle t = four_ends();
  t.graph.wire(t.ends[Tangle::NW], t.ends[Tangle::SW]);
  t.graph.wire(t.ends[Tangle::NE], t.ends[Tangle::SE]);
  return t;
}

Tangle crossing_tangle(int sign) {
  Tangle t = four_ends();
  std::array<int, 4> ports{};
  for (auto& p : ports) p = t.graph.new_port();
  // Counterclockwise from slot 0: SW SE NE NW for +1, SE NE NW SW for -1.
  const std::array<int, 4> plus{Tangle::SW, Tangle::SE, Tangle::NE, Tangle::NW};
  const std::array<int, 4> minus{Tangle::SE, Tangle::NE, Tangle::NW, Tangle::SW};
  const auto& order = sign > 0 ? plus : minus;
  for (int s = 0; s < 4; ++s) t.graph.wire(ports[s], t.ends[order[s]]);
  t.graph.add_crossing(ports);
  return t;
}

Tangle vertical_crossing_tangle(int sign) { return rotate(crossing_tangle(-sign)); }

Tangle tangle_sum(const Tangle& s, const Tangle& t) {
  auto [out, te] = merged(s, t);
  out.graph.join(out.ends[Tangle::NE], te[Tangle::NW]);
  out.graph.join(out.ends[Tangle::SE], te[Tangle::SW]);
  out.ends[Tangle::NE] = te[Tangle::NE];
  out.ends[Tangle::SE] = te[Tangle::SE];
  return out;
}

Tangle tangle_product(const Tangle& s, const Tangle& t) {
  auto [out, te] = merged(s, t);
  out.graph.join(out.ends[Tangle::SW], te[Tangle::NW]);
  out.graph.join(out.ends[Tangle::SE], te[Tangle::NE]);
  out.ends[Tangle::SW] = te[Tangle::SW];
  out.ends[Tangle::SE] = te[Tangle::SE];
  return out;
}

Tangle rotate(const Tangle& t) {
  Tangle out = t;
  out.ends[Tangle::SW] = t.ends[Tangle::NW];
  out.ends[Tangle::SE] = t.ends[Tangle::SW];
  out.ends[Tangle::NE] = t.ends[Tangle::SE];
  out.ends[Tangle::NW] = t.ends[Tangle::NE];
  return out;
}

Tangle mirror(const Tangle& t) {
  Tangle out = t;
  for (auto& c : out.graph.crossings()) std::rotate(c.begin(), c.begin() + 1, c.end());
  return out;
}

Tangle reflect(const Tangle& t) {
  Tangle out = t;
  for (auto& c : out.graph.crossings()) std::swap(c[1], c[3]);
  std::swap(out.ends[Tangle::NW], out.ends[Tangle::NE]);
  std::swap(out.ends[Tangle::SW], out.ends[Tangle::SE]);
  return out;
}

LinkDiagram numerator_closure(const Tangle& t) {
  Tangle c = t;
  c.graph.join(c.ends[Tangle::NW], c.ends[Tangle::NE]);
  c.graph.join(c.ends[Tangle::SW], c.ends[Tangle::SE]);
  return c.graph.to_diagram();
}

LinkDiagram denominator_closure(const Tangle& t) {
  Tangle c = t;
  c.graph.join(c.ends[Tangle::NW], c.ends[Tangle::SW]);
  c.graph.join(c.ends[Tangle::NE], c.ends[Tangle::SE]);
  return c.graph.to_diagram();
}

Tangle rational_tangle(std::span<const std::int64_t> conway) {
  const std::size_t n = conway.size();
  if (n == 0) return zero_tangle();
  const bool first_horizontal = (n - 1) % 2 == 0;
  Tangle t = first_horizontal ? zero_tangle() : infinity_tangle();
  for (std::size_t i = 0; i < n; ++i) {
    const bool horizontal = (n - 1 - i) % 2 == 0;
    const int sign = sign_of(conway[i]);
    for (std::int64_t k = 0; k < (conway[i] < 0 ? -conway[i] : conway[i]); ++k) {
      t = horizontal ? tangle_sum(t, crossing_tangle(sign))
                     : tangle_product(t, vertical_crossing_tangle(sign));
    }
  }
  return t;
}

Tangle rational_tangle_of_fraction(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0 || (p == 0 && q == 0) || std::gcd(p, q) != 1) {
    throw NonRealizable("no alternating rational tangle with fraction " + std::to_string(p) +
                        "/" + std::to_string(q));
  }
  if (q == 0) return infinity_tangle();
  if (p == 0) return zero_tangle();
  const auto notation = tangles::conway_of_fraction(p, q);
  return rational_tangle(notation);
}

StrandTangle place(const Tangle& t, int i, int width) {
  if (i < 0 || i + 1 >= width) throw InvalidInput("place: position out of range");
  StrandTangle out;
  out.graph = t.graph;
  out.top.assign(static_cast<std::size_t>(width), -1);
  out.bottom.assign(static_cast<std::size_t>(width), -1);
  out.top[i] = t.ends[Tangle::NW];
  out.top[i + 1] = t.ends[Tangle::NE];
  out.bottom[i] = t.ends[Tangle::SW];
  out.bottom[i + 1] = t.ends[Tangle::SE];
  for (int j = 0; j < width; ++j) {
    if (j == i || j == i + 1) continue;
    out.top[j] = out.graph.new_port();
    out.bottom[j] = out.graph.new_port();
    out.graph.wire(out.top[j], out.bottom[j]);
  }
  return out;
}

StrandTangle stack(const StrandTangle& a, const StrandTangle& b) {
  if (a.bottom.size() != b.top.size()) throw InvalidInput("stack: strand counts differ");
  StrandTangle out = a;
  const int offset = out.graph.absorb(b.graph);
  for (std::size_t j = 0; j < a.bottom.size(); ++j) out.graph.join(a.bottom[j], b.top[j] + offset);
  out.bottom = b.bottom;
  for (int& p : out.bottom) p += offset;
  return out;
}

StrandTangle reflect(const StrandTangle& t) {
  StrandTangle out = t;
  for (auto& c : out.graph.crossings()) std::swap(c[1], c[3]);
  std::reverse(out.top.begin(), out.top.end());
  std::reverse(out.bottom.begin(), out.bottom.end());
  return out;
}

LinkDiagram trace_closure(const StrandTangle& t) {
  PortGraph g = t.graph;
  for (std::size_t j = 0; j < t.top.size(); ++j) g.join(t.top[j], t.bottom[j]);
  return g.to_diagram();
}

LinkDiagram compile_rational(std::span<const std::int64_t> conway) {
  if (conway.empty()) throw InvalidInput("compile_rational: empty notation");
  if (std::find(conway.begin(), conway.end(), 0) != conway.end()) {
    throw InvalidInput("compile_rational: zero entry in notation");
  }
  return numerator_closure(rational_tangle(conway));
}

LinkDiagram compile_tsum(std::span<const std::int64_t> conway, std::int64_t d) {
  if (conway.empty()) throw InvalidInput("compile_tsum: empty notation");
  if (std::find(conway.begin(), conway.end(), 0) != conway.end()) {
    throw InvalidInput("compile_tsum: zero entry in notation");
  }
  if (d < 1) throw InvalidInput("compile_tsum: connected-sum factor must be positive");
  const Tangle base = rational_tangle(conway);
  std::vector<Tangle> candidates;
  if (d == 1) {
    candidates.push_back(base);
  } else {
    // The torus knot becomes a 1-1 tangle by closing one side of a twist
    // row; either handedness and either end may face the tangle.
    for (int sign : {1, -1}) {
      for (bool swap_ends : {false, true}) {
        Tangle row = crossing_tangle(sign);
        for (std::int64_t k = 1; k < d; ++k) row = tangle_sum(row, crossing_tangle(sign));
        row.graph.join(row.ends[Tangle::SW], row.ends[Tangle::SE]);
        int outer = row.ends[Tangle::NW];
        int inner = row.ends[Tangle::NE];
        if (swap_ends) std::swap(outer, inner);
        Tangle t = base;
        const int offset = t.graph.absorb(row.graph);
        t.graph.join(inner + offset, t.ends[Tangle::NW]);
        t.ends[Tangle::NW] = outer + offset;
        candidates.push_back(std::move(t));
      }
    }
  }
  for (const Tangle& t : candidates) {
    LinkDiagram out = numerator_closure(tangle_sum(t, mirror(rotate(t))));
    if (!is_knot(out)) throw LinkNotKnot(component_count(out));
    if (is_alternating(out)) return out;
  }
  throw NonRealizable("compile_tsum: no alternating reconnection found");
}

LinkDiagram compile_dsquare(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b,
                            std::int64_t c, std::int64_t d) {
  const Tangle r1 = rational_tangle_of_fraction(x, y);
  const Tangle r2 = rational_tangle_of_fraction(a, b);
  const Tangle r3 = rational_tangle_of_fraction(c, d);
  const StrandTangle t = stack(stack(place(r3, 0, 3), place(r2, 1, 3)), place(r1, 0, 3));
  const LinkDiagram out = trace_closure(stack(reflect(t), t));
  if (!is_knot(out)) throw LinkNotKnot(component_count(out));
  return make_alternating(out);
}

LinkDiagram torus_2(std::int64_t p) {
  if (p == 0) throw InvalidInput("torus_2: zero twists");
  const std::int64_t notation[] = {p};
  return compile_rational(notation);
}

}  // namespace achiral::diagrams
