#ifndef ASSOCLAB_COMPLEXES_H_
#define ASSOCLAB_COMPLEXES_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "assoclab/groupoid.h"
#include "assoclab/words.h"

namespace assoclab {

class NotBoundaryEdge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class EdgeExists : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotBoundary : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class InvalidMap : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class InvalidPath : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;    // lower label first
using Face = std::array<VertexId, 3>;          // increasing labels

struct ComplexMove {
  enum class Kind { kExpansion, kContraction };
  Kind kind;
  // Expansion: the edge {u, w} and the created vertex v.
  // Contraction: the vertex v and its neighbours u < v < w.
  VertexId u, v, w;
};

// An ordered 2-dimensional simplicial complex grown from the chain W_k by
// expansions and contractions. Vertices are numbered in creation order and
// carry exact rational labels that define the vertex order.
class GoodComplex {
 public:
  static GoodComplex Chain(int k);  // W_k with labels 0..k

  int chain_length() const { return k_; }
  std::size_t vertex_count() const { return labels_.size(); }
  const mpq_class& label(VertexId v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::set<Edge>& edges() const { return edges_; }
  const std::set<Face>& faces() const { return faces_; }
  const std::vector<ComplexMove>& log() const { return log_; }

  bool Less(VertexId a, VertexId b) const { return labels_[a] < labels_[b]; }
  Edge MakeEdge(VertexId a, VertexId b) const { return Less(a, b) ? Edge{a, b} : Edge{b, a}; }
  Face MakeFace(VertexId a, VertexId b, VertexId c) const;
  bool HasEdge(VertexId a, VertexId b) const { return edges_.count(MakeEdge(a, b)) > 0; }
  int FacesOn(VertexId a, VertexId b) const;
  bool IsBoundaryEdge(VertexId a, VertexId b) const { return HasEdge(a, b) && FacesOn(a, b) <= 1; }
  std::vector<Edge> BoundaryEdges() const;
  // Triples (u, v, w) at which a contraction is allowed.
  std::vector<std::array<VertexId, 3>> ContractibleTriples() const;
  std::optional<VertexId> FindLabel(const mpq_class& label) const;

  // Adds a vertex strictly between u and w, the two edges to it and the face.
  // Throws NotBoundaryEdge unless {u, w} is an edge with at most one face.
  VertexId Expand(VertexId u, VertexId w);
  // Adds the edge {u, w} and the face {u, v, w}. Throws NotBoundary unless
  // u < v < w with {u, v} and {v, w} boundary edges, EdgeExists if {u, w} is
  // already present.
  void Contract(VertexId u, VertexId v, VertexId w);

  VertexId Source() const;  // least vertex on a boundary edge
  VertexId Target() const;  // greatest vertex on a boundary edge
  long EulerCharacteristic() const;

  // True if every edge has at most two faces and every face has its edges.
  bool CheckInvariants() const;

  friend bool operator==(const GoodComplex& a, const GoodComplex& b);

 private:
  int k_ = 0;
  std::vector<mpq_class> labels_;
  std::set<Edge> edges_;
  std::set<Face> faces_;
  std::map<Edge, int> face_count_;
  std::vector<ComplexMove> log_;
};

// Applies the logged moves to W_k again.
GoodComplex ReplayLog(int k, const std::vector<ComplexMove>& log);

// All increasing vertex paths from Source() to Target() along boundary edges,
// in lexicographic order of vertex labels.
std::vector<std::vector<VertexId>> BoundaryPaths(const GoodComplex& c);

struct DiskDecomposition {
  int disks = 0;
  std::vector<std::vector<VertexId>> disk_vertices;  // one sorted list per disk
  std::vector<Edge> segments;                        // edges with no face
};

// Faces joined across shared edges form the disks; edges without faces are
// the line segments.
DiskDecomposition DecomposeDisks(const GoodComplex& c);

// The complex rebuilt from W_4 that consists of three disks and a segment.
GoodComplex ThreeDiskComplex();

std::string LabelString(const mpq_class& q);
std::string GoodComplexToJson(const GoodComplex& c);

// A simplicial map from a good complex to the nerve of a local groupoid: an
// object per vertex and an element per edge. Edge {u, w} with u < w maps to an
// arrow from the image of u to the image of w, and each face u < v < w
// satisfies phi{u, w} = phi{v, w} phi{u, v}.
template <LocalGroupoid G>
struct NerveMap {
  std::map<VertexId, ObjectOf<G>> vertex;
  std::map<Edge, ElementOf<G>> edge;
};

template <LocalGroupoid G>
void CheckNerveMap(const G& grp, const GoodComplex& c, const NerveMap<G>& map) {
  auto edge_image = [&](VertexId a, VertexId b) -> const ElementOf<G>& {
    auto it = map.edge.find(c.MakeEdge(a, b));
    if (it == map.edge.end()) {
      throw InvalidMap("edge {" + std::to_string(a) + ", " + std::to_string(b) + "} has no image");
    }
    return it->second;
  };
  for (const auto& [u, w] : c.edges()) {
    const auto& g = edge_image(u, w);
    auto vu = map.vertex.find(u), vw = map.vertex.find(w);
    if (vu == map.vertex.end() || vw == map.vertex.end()) throw InvalidMap("vertex without image");
    if (!grp.ObjectsEqual(grp.Source(g), vu->second) || !grp.ObjectsEqual(grp.Target(g), vw->second)) {
      throw InvalidMap("edge {" + std::to_string(u) + ", " + std::to_string(w) +
                       "} does not run from the image of its lower to its upper vertex");
    }
  }
  for (const auto& f : c.faces()) {
    const auto& uv = edge_image(f[0], f[1]);
    const auto& vw = edge_image(f[1], f[2]);
    const auto& uw = edge_image(f[0], f[2]);
    auto p = grp.TryMul(vw, uv);
    if (!p || !grp.ElementsEqual(*p, uw)) {
      throw InvalidMap("face {" + std::to_string(f[0]) + ", " + std::to_string(f[1]) + ", " +
                       std::to_string(f[2]) + "} is not a composable pair with its product");
    }
  }
}

// The word read off each boundary path: (phi{v_{m-1}, v_m}, ..., phi{v_0, v_1}).
template <LocalGroupoid G>
std::vector<Word<ElementOf<G>>> BoundaryWords(const G& grp, const GoodComplex& c,
                                              const NerveMap<G>& map) {
  CheckNerveMap(grp, c, map);
  std::vector<Word<ElementOf<G>>> out;
  for (const auto& path : BoundaryPaths(c)) {
    Word<ElementOf<G>> w;
    for (std::size_t i = path.size() - 1; i > 0; --i) w.push_back(map.edge.at(c.MakeEdge(path[i - 1], path[i])));
    out.push_back(std::move(w));
  }
  return out;
}

// W_k mapped letter by letter onto a well-formed word of length k.
template <LocalGroupoid G>
std::pair<GoodComplex, NerveMap<G>> ChainMap(const G& grp, const Word<ElementOf<G>>& word) {
  if (word.empty() || !IsWellFormed(grp, std::span<const ElementOf<G>>(word))) {
    throw InvalidPath("ChainMap: word must be non-empty and well-formed");
  }
  const int k = static_cast<int>(word.size());
  GoodComplex c = GoodComplex::Chain(k);
  NerveMap<G> map;
  for (int i = 1; i <= k; ++i) {
    const auto& letter = word[static_cast<std::size_t>(k - i)];
    map.edge.emplace(Edge{i - 1, i}, letter);
    map.vertex.emplace(i - 1, grp.Source(letter));
    map.vertex.emplace(i, grp.Target(letter));
  }
  return {std::move(c), std::move(map)};
}

// Builds a good complex and nerve map whose boundary words include w1 and the
// word the path ends at. The current word is tracked as an increasing vertex
// path; expansions and contractions are mirrored by the same complex moves.
// When a contraction would need an edge that already exists, a neighbouring
// vertex is first split off along a unit edge so the new edge is fresh.
template <LocalGroupoid G>
std::pair<GoodComplex, NerveMap<G>> RealizeEquivalence(
    const G& grp, const Word<ElementOf<G>>& w1, std::span<const RewriteStep<ElementOf<G>>> path) {
  using E = ElementOf<G>;
  auto [c, map] = ChainMap(grp, w1);
  std::vector<VertexId> front;
  for (int i = 0; i <= static_cast<int>(w1.size()); ++i) front.push_back(i);
  Word<E> word = w1;

  auto letter = [&](VertexId a, VertexId b) -> const E& { return map.edge.at(c.MakeEdge(a, b)); };
  // Expands the front edge at index e (between front[e] and front[e + 1])
  // into lower piece `low` and upper piece `high`.
  auto expand_edge = [&](std::size_t e, const E& high, const E& low) {
    const VertexId a = front[e], b = front[e + 1];
    const VertexId m = c.Expand(a, b);
    map.vertex.emplace(m, grp.Target(low));
    map.edge.emplace(c.MakeEdge(a, m), low);
    map.edge.emplace(c.MakeEdge(m, b), high);
    front.insert(front.begin() + static_cast<std::ptrdiff_t>(e) + 1, m);
  };
  // Contracts at front index e (the vertex between front[e - 1] and front[e + 1]).
  auto contract_at = [&](std::size_t e) {
    const VertexId u = front[e - 1], v = front[e], w = front[e + 1];
    auto p = grp.TryMul(letter(v, w), letter(u, v));
    if (!p) throw InvalidPath("RealizeEquivalence: contraction of an undefined product");
    c.Contract(u, v, w);
    map.edge.emplace(c.MakeEdge(u, w), *p);
    front.erase(front.begin() + static_cast<std::ptrdiff_t>(e));
  };

  for (const auto& step : path) {
    auto next = Apply(grp, std::span<const E>(word), step);
    if (!next) throw InvalidPath("RealizeEquivalence: step does not apply");
    const std::size_t k = word.size();
    if (step.is_contraction()) {
      // Letters j and j + 1 sit on front edges k-j-1 and k-j-2.
      const std::size_t e = k - step.position - 1;  // index of the middle vertex
      const VertexId u = front[e - 1], w = front[e + 1];
      if (!c.HasEdge(u, w)) {
        contract_at(e);
      } else if (e >= 2) {
        // Split u off its lower neighbour with a unit edge on top.
        const E& low = letter(front[e - 2], u);
        expand_edge(e - 2, grp.Unit(grp.Target(low)), low);
        contract_at(e);
        contract_at(e);
      } else if (e + 2 < front.size()) {
        // Split w off its upper neighbour with a unit edge below.
        const E& high = letter(w, front[e + 2]);
        expand_edge(e + 1, high, grp.Unit(grp.Source(high)));
        contract_at(e + 1);
        contract_at(e);
      } else {
        const auto& existing = letter(u, w);
        if (!grp.ElementsEqual(existing, (*next)[step.position]) || c.FacesOn(u, w) > 1) {
          throw InvalidPath("RealizeEquivalence: cannot place contraction in the complex");
        }
        front.erase(front.begin() + static_cast<std::ptrdiff_t>(e));
      }
    } else {
      const std::size_t e = k - step.position - 1;  // front edge of the letter
      const auto& [g, h] = *step.factors;
      expand_edge(e, g, h);
    }
    word = std::move(*next);
  }
  CheckNerveMap(grp, c, map);
  return {std::move(c), std::move(map)};
}

}  // namespace assoclab

#endif  // ASSOCLAB_COMPLEXES_H_
