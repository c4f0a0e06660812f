#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace floquet {

enum class Color : std::uint8_t { R = 0, G = 1, B = 2 };

inline Color color_from_index(int k) { return Color(k % 3); }
inline int color_index(Color c) { return int(c); }
inline char color_char(Color c) { return "RGB"[int(c)]; }
inline Color third_color(Color a, Color b) {
  return Color(3 - int(a) - int(b));
}
inline Color parse_color(char c) {
  switch (c) {
    case 'R': case 'r': return Color::R;
    case 'G': case 'g': return Color::G;
    case 'B': case 'b': return Color::B;
  }
  throw std::invalid_argument("unknown color");
}

// Edge directions relative to the owning vertex, in (u,v) triangular
// coordinates: E = (+1,0), N = (0,+1), NE = (+1,+1).
enum EdgeDir : int { kEast = 0, kNorth = 1, kNorthEast = 2 };

struct Vertex {
  int id;
  int i, j, k;  // unit cell (i,j), sublattice k; color == k
  Color color;
  std::array<int, 6> plaquettes;  // the six triangles touching this vertex
  std::array<int, 6> edges;       // the six incident edges
};

struct Edge {
  int id;
  int owner;  // owning vertex id
  int dir;    // EdgeDir
  Color color;
  int v0, v1;          // endpoints (v0 == owner)
  int plaq0, plaq1;    // the two adjacent triangles (check-operator support)
  int di, dj;          // unit-cell displacement v0 -> v1
  bool cross1, cross2; // crossing parity against the two torus cuts
};

struct Plaquette {
  int id;
  int owner;  // owning vertex id
  int updown; // 0 = up triangle, 1 = down triangle
  std::array<int, 3> vertices;
  std::array<int, 3> edges;
};

struct LoopSpec {
  int direction;          // 1 or 2 (torus handle)
  Color color;            // edge color the loop is made of
  std::vector<int> edges; // base-lattice edge ids forming the cycle
};

// A torus-direction aligned view of one color class: the triangular
// superlattice whose sites are the round-color vertices and whose bonds are
// in bijection with the same-color base edges.
struct SuperlatticeView {
  Color round;
  int sites;                        // == l1*l2, indexed by unit cell
  std::vector<int> base_edges;      // base edge id per superedge
  std::vector<int> end0, end1;      // supervertex (cell) indices
  std::vector<int> super_di, super_dj;
  std::vector<bool> scross1, scross2;
  std::vector<int> supervertex_base; // base vertex id per site
  // Base vertex ids of the two other colors; each is the centre of a
  // superlattice face.
  std::vector<int> superplaquettes;
  LoopSpec loop1, loop2;
  // superedge index by base edge id (-1 if wrong color)
  std::vector<int> superedge_of_base;
};

class ColoredTorusLattice {
 public:
  ColoredTorusLattice(int l1, int l2);

  int l1() const { return l1_; }
  int l2() const { return l2_; }
  int num_vertices() const { return int(vertices_.size()); }
  int num_edges() const { return int(edges_.size()); }
  int num_plaquettes() const { return int(plaquettes_.size()); }
  int num_qubits() const { return num_plaquettes(); }

  const Vertex& vertex(int id) const { return vertices_[id]; }
  const Edge& edge(int id) const { return edges_[id]; }
  const Plaquette& plaquette(int id) const { return plaquettes_[id]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }

  int vertex_id(int i, int j, int k) const {
    return (mod(j, l2_) * l1_ + mod(i, l1_)) * 3 + k;
  }
  int cell_of_vertex(int vid) const { return vid / 3; }

  const std::vector<int>& edges_of_color(Color c) const {
    return edges_by_color_[int(c)];
  }
  const std::vector<int>& vertices_of_color(Color c) const {
    return vertices_by_color_[int(c)];
  }

  const SuperlatticeView& superlattice(Color round) const {
    return super_[int(round)];
  }

  LoopSpec canonical_loop(int direction, Color color) const;

  // Crossing parity of an edge set against the two torus cuts; a cycle has
  // winding parity (w1, w2) equal to these.
  std::pair<bool, bool> cycle_winding(const std::vector<int>& edge_ids) const;

  std::string to_json() const;

  static int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
  }

 private:
  int mod(int a, int b) const { return ((a % b) + b) % b; }
  int neighbor(int vid, int dir) const;
  void build();
  void build_superlattices();

  int l1_, l2_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Plaquette> plaquettes_;
  std::array<std::vector<int>, 3> edges_by_color_;
  std::array<std::vector<int>, 3> vertices_by_color_;
  std::array<SuperlatticeView, 3> super_;
};

}  // namespace floquet
