#include <set>

#include "doctest.h"
#include "floquet/lattice.hpp"

using namespace floquet;

TEST_CASE("unit cell counts") {
  ColoredTorusLattice l11(1, 1);
  CHECK(l11.num_vertices() == 3);
  CHECK(l11.num_qubits() == 6);
  CHECK(l11.num_edges() == 9);
  for (int c = 0; c < 3; ++c)
    CHECK(l11.edges_of_color(Color(c)).size() == 3);

  ColoredTorusLattice l22(2, 2);
  CHECK(l22.num_vertices() == 12);
  CHECK(l22.num_qubits() == 24);
  CHECK(l22.num_edges() == 36);

  CHECK_THROWS_AS(ColoredTorusLattice(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(ColoredTorusLattice(3, -1), std::invalid_argument);
}

TEST_CASE("three-coloring and adjacency") {
  ColoredTorusLattice lat(2, 3);
  for (const Edge& e : lat.edges()) {
    CHECK(lat.vertex(e.v0).color != lat.vertex(e.v1).color);
    CHECK(e.color == third_color(lat.vertex(e.v0).color, lat.vertex(e.v1).color));
  }
  for (const Vertex& v : lat.vertices()) {
    std::set<int> ps(v.plaquettes.begin(), v.plaquettes.end());
    CHECK(ps.size() == 6);
    for (int pid : ps) {
      const Plaquette& p = lat.plaquette(pid);
      bool touches = false;
      for (int vid : p.vertices) touches |= vid == v.id;
      CHECK(touches);
    }
  }
  // V - E + F = 0 on the torus.
  CHECK(lat.num_vertices() - lat.num_edges() + lat.num_plaquettes() == 0);
}

TEST_CASE("plaquettes have one edge of each color") {
  ColoredTorusLattice lat(3, 2);
  for (const Plaquette& p : lat.plaquettes()) {
    int cmask = 0;
    for (int eid : p.edges) cmask |= 1 << int(lat.edge(eid).color);
    CHECK(cmask == 7);
  }
  // Each edge borders exactly the two plaquettes that in turn list it.
  for (const Edge& e : lat.edges()) {
    for (int pid : {e.plaq0, e.plaq1}) {
      const Plaquette& p = lat.plaquette(pid);
      int cnt = 0;
      for (int eid : p.edges) cnt += eid == e.id;
      CHECK(cnt == 1);
    }
    CHECK(e.plaq0 != e.plaq1);
  }
}

TEST_CASE("superlattice structure") {
  ColoredTorusLattice lat(2, 2);
  const SuperlatticeView& s = lat.superlattice(Color::R);
  CHECK(s.base_edges.size() == 12);

  // Bijection between red base edges and superedges.
  std::set<int> seen(s.base_edges.begin(), s.base_edges.end());
  CHECK(seen.size() == 12);
  for (int eid : seen) CHECK(lat.edge(eid).color == Color::R);

  // The three views partition the edge set by color.
  std::set<int> all;
  for (int c = 0; c < 3; ++c) {
    const auto& v = lat.superlattice(Color(c));
    all.insert(v.base_edges.begin(), v.base_edges.end());
  }
  CHECK(int(all.size()) == lat.num_edges());

  // Supervertex degree 6 (counting both ends of each superedge).
  std::vector<int> deg(std::size_t(s.sites), 0);
  for (std::size_t k = 0; k < s.base_edges.size(); ++k) {
    deg[std::size_t(s.end0[k])]++;
    deg[std::size_t(s.end1[k])]++;
  }
  for (int d : deg) CHECK(d == 6);
}

TEST_CASE("superlattice bijection exhaustive on (1,1)") {
  ColoredTorusLattice lat(1, 1);
  const SuperlatticeView& s = lat.superlattice(Color::G);
  CHECK(s.base_edges.size() == 3);
  std::set<int> seen;
  for (std::size_t k = 0; k < s.base_edges.size(); ++k) {
    CHECK(lat.edge(s.base_edges[k]).color == Color::G);
    CHECK(s.superedge_of_base[s.base_edges[k]] == int(k));
    seen.insert(s.base_edges[k]);
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("canonical loops wind correctly") {
  ColoredTorusLattice lat(2, 2);
  for (int c = 0; c < 3; ++c) {
    for (int dir : {1, 2}) {
      LoopSpec loop = lat.canonical_loop(dir, Color(c));
      auto [w1, w2] = lat.cycle_winding(loop.edges);
      CHECK(w1 == (dir == 1));
      CHECK(w2 == (dir == 2));
      for (int eid : loop.edges) CHECK(lat.edge(eid).color == Color(c));
      // Closed cycle: every supervertex it touches is hit an even number of
      // times.
      const auto& s = lat.superlattice(Color(c));
      std::vector<int> touch(std::size_t(s.sites), 0);
      for (int eid : loop.edges) {
        int se = s.superedge_of_base[eid];
        touch[std::size_t(s.end0[se])]++;
        touch[std::size_t(s.end1[se])]++;
      }
      for (int t : touch) CHECK(t % 2 == 0);
    }
  }
}

TEST_CASE("loop length grows linearly") {
  for (int l : {2, 3, 4}) {
    ColoredTorusLattice lat(l, l);
    CHECK(int(lat.canonical_loop(2, Color::B).edges.size()) == l);
    CHECK(int(lat.canonical_loop(1, Color::B).edges.size()) == 2 * l);
  }
}

TEST_CASE("lattice json export") {
  ColoredTorusLattice lat(1, 1);
  std::string j = lat.to_json();
  CHECK(j.find("\"vertices\"") != std::string::npos);
  CHECK(j.find("\"plaquettes\"") != std::string::npos);
}
