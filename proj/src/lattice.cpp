#include "floquet/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace floquet {

namespace {

// Unit-cell-relative neighbor steps. The lattice lives in skewed (u,v)
// coordinates where every vertex has neighbors at +-(1,0), +-(0,1), +-(1,1)
// and the vertex color is (u+v) mod 3. Cells hold one vertex of each color,
// u = 3i + 2j + k, v = j; this keeps the coloring consistent on the torus
// for every l1, l2 >= 1.
struct Step {
  int di, dj, dk;
};

Step forward_step(int k, int dir) {
  switch (dir) {
    case kEast:
      return k < 2 ? Step{0, 0, +1} : Step{+1, 0, -2};
    case kNorth:
      return k == 2 ? Step{0, +1, -2} : Step{-1, +1, +1};
    default:  // kNorthEast
      return k == 0 ? Step{-1, +1, +2} : Step{0, +1, -1};
  }
}

Step inverse_step(int k, int dir) {
  // Inverse of forward_step applied at the *source* that maps onto k.
  switch (dir) {
    case kEast:
      return k > 0 ? Step{0, 0, -1} : Step{-1, 0, +2};
    case kNorth:
      return k == 0 ? Step{0, -1, +2} : Step{+1, -1, -1};
    default:
      return k == 2 ? Step{+1, -1, -2} : Step{0, -1, +1};
  }
}

// Corners of the two triangles adjacent to an edge, as (du,dv) offsets from
// the owning vertex in unwrapped (u,v) coordinates.
std::array<std::array<std::pair<int, int>, 3>, 2> adjacent_corners(int dir) {
  switch (dir) {
    case kEast:
      return {{{{{0, 0}, {1, 0}, {1, 1}}}, {{{0, -1}, {0, 0}, {1, 0}}}}};
    case kNorth:
      return {{{{{0, 0}, {0, 1}, {1, 1}}}, {{{-1, 0}, {0, 0}, {0, 1}}}}};
    default:
      return {{{{{0, 0}, {1, 0}, {1, 1}}}, {{{0, 0}, {0, 1}, {1, 1}}}}};
  }
}

// Geometry of the superlattice bond crossing a color-c edge: the unwrapped
// cell of the c-colored corner on each side.
struct SuperedgeGeom {
  int ci0, cj0;  // unwrapped cell of the corner in triangle 0
  int sdi, sdj;  // cell displacement towards the corner in triangle 1
};

SuperedgeGeom superedge_geom(const Vertex& owner, int dir, int c) {
  auto rel = adjacent_corners(dir);
  int u_owner = 3 * owner.i + 2 * owner.j + owner.k;
  int cu[2], cv[2];
  for (int t = 0; t < 2; ++t) {
    bool found = false;
    for (auto [du, dv] : rel[t]) {
      int u = u_owner + du, v = owner.j + dv;
      if (((u + v) % 3 + 3) % 3 == c) {
        cu[t] = u;
        cv[t] = v;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("triangle lacks a round-color corner");
  }
  SuperedgeGeom g;
  g.cj0 = cv[0];
  if ((cu[0] - 2 * cv[0] - c) % 3 != 0 || (cu[1] - cu[0] - 2 * (cv[1] - cv[0])) % 3 != 0)
    throw std::logic_error("superedge corner not on the color sublattice");
  g.ci0 = (cu[0] - 2 * cv[0] - c) / 3;
  g.sdi = (cu[1] - cu[0] - 2 * (cv[1] - cv[0])) / 3;
  g.sdj = cv[1] - cv[0];
  return g;
}

}  // namespace

ColoredTorusLattice::ColoredTorusLattice(int l1, int l2) : l1_(l1), l2_(l2) {
  if (l1 < 1 || l2 < 1)
    throw std::invalid_argument("lattice dimensions must be positive");
  build();
  build_superlattices();
}

int ColoredTorusLattice::neighbor(int vid, int dir) const {
  const Vertex& v = vertices_[vid];
  Step s = forward_step(v.k, dir);
  return vertex_id(v.i + s.di, v.j + s.dj, v.k + s.dk);
}

void ColoredTorusLattice::build() {
  vertices_.resize(std::size_t(l1_) * l2_ * 3);
  for (int j = 0; j < l2_; ++j)
    for (int i = 0; i < l1_; ++i)
      for (int k = 0; k < 3; ++k) {
        int id = vertex_id(i, j, k);
        vertices_[id] = Vertex{id, i, j, k, Color(k), {}, {}};
        vertices_by_color_[k].push_back(id);
      }

  auto inv_neighbor = [&](int vid, int dir) {
    const Vertex& v = vertices_[vid];
    Step s = inverse_step(v.k, dir);
    return vertex_id(v.i + s.di, v.j + s.dj, v.k + s.dk);
  };
  auto edge_id = [](int owner, int dir) { return owner * 3 + dir; };
  auto plaq_id = [](int owner, int ud) { return owner * 2 + ud; };

  edges_.resize(vertices_.size() * 3);
  for (const Vertex& v : vertices_) {
    for (int dir = 0; dir < 3; ++dir) {
      Edge e;
      e.id = edge_id(v.id, dir);
      e.owner = v.id;
      e.dir = dir;
      e.color = Color((dir == kNorthEast ? v.k + 1 : v.k + 2) % 3);
      e.v0 = v.id;
      e.v1 = neighbor(v.id, dir);
      Step s = forward_step(v.k, dir);
      e.di = s.di;
      e.dj = s.dj;
      e.cross1 = (floor_div(v.i + s.di, l1_) - floor_div(v.i, l1_)) & 1;
      e.cross2 = (floor_div(v.j + s.dj, l2_) - floor_div(v.j, l2_)) & 1;
      switch (dir) {
        case kEast:
          e.plaq0 = plaq_id(v.id, 0);
          e.plaq1 = plaq_id(inv_neighbor(v.id, kNorth), 1);
          break;
        case kNorth:
          e.plaq0 = plaq_id(v.id, 1);
          e.plaq1 = plaq_id(inv_neighbor(v.id, kEast), 0);
          break;
        default:
          e.plaq0 = plaq_id(v.id, 0);
          e.plaq1 = plaq_id(v.id, 1);
          break;
      }
      edges_[e.id] = e;
      edges_by_color_[int(e.color)].push_back(e.id);
    }
  }

  plaquettes_.resize(vertices_.size() * 2);
  for (const Vertex& v : vertices_) {
    int e_nb = neighbor(v.id, kEast);
    int n_nb = neighbor(v.id, kNorth);
    int ne_nb = neighbor(v.id, kNorthEast);
    Plaquette up{plaq_id(v.id, 0), v.id, 0,
                 {v.id, e_nb, ne_nb},
                 {edge_id(v.id, kEast), edge_id(v.id, kNorthEast),
                  edge_id(e_nb, kNorth)}};
    Plaquette dn{plaq_id(v.id, 1), v.id, 1,
                 {v.id, n_nb, ne_nb},
                 {edge_id(v.id, kNorth), edge_id(v.id, kNorthEast),
                  edge_id(n_nb, kEast)}};
    plaquettes_[up.id] = up;
    plaquettes_[dn.id] = dn;
  }

  // Vertex incidence is recomputed by exhaustive scan rather than from the
  // construction formulas so the two routes check each other.
  for (Vertex& v : vertices_) {
    std::vector<int> ps, es;
    for (const Plaquette& p : plaquettes_)
      if (std::count(p.vertices.begin(), p.vertices.end(), v.id)) {
        if (std::count(ps.begin(), ps.end(), p.id) == 0) ps.push_back(p.id);
      }
    for (const Edge& e : edges_)
      if (e.v0 == v.id || e.v1 == v.id) es.push_back(e.id);
    if (ps.size() != 6 || es.size() != 6)
      throw std::logic_error("vertex incidence is not six-fold");
    std::copy(ps.begin(), ps.end(), v.plaquettes.begin());
    std::copy(es.begin(), es.end(), v.edges.begin());
  }

  for (const Edge& e : edges_) {
    Color c0 = vertices_[e.v0].color, c1 = vertices_[e.v1].color;
    if (c0 == c1) throw std::logic_error("adjacent vertices share a color");
    if (third_color(c0, c1) != e.color)
      throw std::logic_error("edge color is not the third color");
  }
  for (const Plaquette& p : plaquettes_) {
    int cmask = 0;
    for (int vid : p.vertices) cmask |= 1 << vertices_[vid].k;
    if (cmask != 7) throw std::logic_error("triangle corners not 3-colored");
  }
}

void ColoredTorusLattice::build_superlattices() {
  for (int c = 0; c < 3; ++c) {
    SuperlatticeView& s = super_[c];
    s.round = Color(c);
    s.sites = l1_ * l2_;
    s.supervertex_base.resize(std::size_t(s.sites));
    for (int j = 0; j < l2_; ++j)
      for (int i = 0; i < l1_; ++i)
        s.supervertex_base[std::size_t(j) * l1_ + i] = vertex_id(i, j, c);
    for (const Vertex& v : vertices_)
      if (v.k != c) s.superplaquettes.push_back(v.id);

    s.superedge_of_base.assign(edges_.size(), -1);
    for (int eid : edges_by_color_[c]) {
      const Edge& e = edges_[eid];
      SuperedgeGeom g = superedge_geom(vertices_[e.owner], e.dir, c);
      s.base_edges.push_back(eid);
      s.end0.push_back(mod(g.cj0, l2_) * l1_ + mod(g.ci0, l1_));
      s.end1.push_back(mod(g.cj0 + g.sdj, l2_) * l1_ + mod(g.ci0 + g.sdi, l1_));
      s.super_di.push_back(g.sdi);
      s.super_dj.push_back(g.sdj);
      s.scross1.push_back(
          (floor_div(g.ci0 + g.sdi, l1_) - floor_div(g.ci0, l1_)) & 1);
      s.scross2.push_back(
          (floor_div(g.cj0 + g.sdj, l2_) - floor_div(g.cj0, l2_)) & 1);
      s.superedge_of_base[eid] = int(s.base_edges.size()) - 1;
    }
    if (int(s.base_edges.size()) != 3 * l1_ * l2_)
      throw std::logic_error("superedge count mismatch");
    s.loop1 = canonical_loop(1, Color(c));
    s.loop2 = canonical_loop(2, Color(c));
  }
}

LoopSpec ColoredTorusLattice::canonical_loop(int direction, Color color) const {
  // (cell, displacement) -> base edge of the given color.
  std::map<std::array<int, 3>, int> by_step;
  for (int eid : edges_by_color_[int(color)]) {
    const Edge& e = edges_[eid];
    SuperedgeGeom g = superedge_geom(vertices_[e.owner], e.dir, int(color));
    int cell0 = mod(g.ci0, l1_) + mod(g.cj0, l2_) * l1_;
    int cell1 = mod(g.ci0 + g.sdi, l1_) + mod(g.cj0 + g.sdj, l2_) * l1_;
    by_step[{cell0, g.sdi, g.sdj}] = eid;
    by_step[{cell1, -g.sdi, -g.sdj}] = eid;
  }

  auto take = [&](int ci, int cj, int sdi, int sdj) {
    auto it = by_step.find({mod(ci, l1_) + mod(cj, l2_) * l1_, sdi, sdj});
    if (it == by_step.end())
      throw std::logic_error("canonical loop step has no superedge");
    return it->second;
  };

  LoopSpec loop;
  loop.direction = direction;
  loop.color = color;
  if (direction == 2) {
    for (int j = 0; j < l2_; ++j) loop.edges.push_back(take(0, j, 0, 1));
  } else if (direction == 1) {
    int ci = 0, cj = 0;
    for (int i = 0; i < l1_; ++i) {
      loop.edges.push_back(take(ci, cj, 1, -1));
      ci += 1;
      cj -= 1;
      loop.edges.push_back(take(ci, cj, 0, 1));
      cj += 1;
    }
  } else {
    throw std::invalid_argument("loop direction must be 1 or 2");
  }
  auto [w1, w2] = cycle_winding(loop.edges);
  if (w1 != (direction == 1) || w2 != (direction == 2))
    throw std::logic_error("canonical loop has wrong winding");
  return loop;
}

std::pair<bool, bool> ColoredTorusLattice::cycle_winding(
    const std::vector<int>& edge_ids) const {
  bool c1 = false, c2 = false;
  for (int eid : edge_ids) {
    c1 ^= edges_[eid].cross1;
    c2 ^= edges_[eid].cross2;
  }
  return {c1, c2};
}

std::string ColoredTorusLattice::to_json() const {
  nlohmann::json j;
  j["l1"] = l1_;
  j["l2"] = l2_;
  j["counts"] = {{"vertices", num_vertices()},
                 {"edges", num_edges()},
                 {"plaquettes", num_plaquettes()}};
  auto& jv = j["vertices"] = nlohmann::json::array();
  for (const Vertex& v : vertices_) {
    int u = 3 * v.i + 2 * v.j + v.k;
    jv.push_back({{"id", v.id},
                  {"cell", {v.i, v.j}},
                  {"color", std::string(1, color_char(v.color))},
                  {"xy", {u - 0.5 * v.j, 0.8660254037844386 * v.j}},
                  {"edges", v.edges},
                  {"plaquettes", v.plaquettes}});
  }
  auto& je = j["edges"] = nlohmann::json::array();
  for (const Edge& e : edges_)
    je.push_back({{"id", e.id},
                  {"color", std::string(1, color_char(e.color))},
                  {"vertices", {e.v0, e.v1}},
                  {"plaquettes", {e.plaq0, e.plaq1}}});
  auto& jp = j["plaquettes"] = nlohmann::json::array();
  for (const Plaquette& p : plaquettes_)
    jp.push_back({{"id", p.id},
                  {"up", p.updown == 0},
                  {"vertices", p.vertices},
                  {"edges", p.edges}});
  return j.dump(2);
}

}  // namespace floquet
