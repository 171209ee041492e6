#ifndef ASSOCLAB_LACE_H_
#define ASSOCLAB_LACE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "assoclab/geometry.h"

namespace assoclab {

struct OrientedEdge {
  GridPoint from;
  GridPoint to;

  OrientedEdge Reversed() const { return {to, from}; }
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

// A sequence of oriented edges of a triangulated simplex.
struct EdgePath {
  std::vector<OrientedEdge> edges;

  static EdgePath FromVertices(const std::vector<GridPoint>& vertices);
  bool IsConnected() const;  // each edge starts where the previous one ends
  // The visited vertices; requires IsConnected().
  std::vector<GridPoint> Vertices() const;
};

// The vertex walk of the column-by-column lace generator: starts at (0, 0),
// sweeps the columns i = k-1 down to 0, and in each column encloses the
// triangles from the top down, alternating lower and upper triangles.
std::vector<GridPoint> LaceVertexWalk(int k);
EdgePath LaceSequence(int k);

// One "(i, j)" line per vertex.
std::string ExportEdgePath(const EdgePath& path);

struct LaceRecord {
  std::size_t first_edge = 0;  // index into the path
  std::size_t tail = 0;        // edges before reaching the face
  int face = -1;               // index into TriangulatedSimplex::faces()
};

struct LaceReport {
  int k = 0;
  bool well_formed = false;           // every edge is an edge of the triangulation, head to tail
  bool reduces_to_boundary = false;   // cancelling adjacent inverse pairs leaves eps_1..eps_3k
  bool decomposes = false;            // splits into laces with tails of at most 2k edges
  bool faces_covered = false;         // every face enclosed by exactly one lace
  std::vector<LaceRecord> laces;
  std::vector<std::string> failures;

  bool passed() const { return well_formed && reduces_to_boundary && decomposes && faces_covered; }
};

// Condition (a) is checked as free reduction: a block (e_1^-1..e_n^-1 e_n..e_1)
// is a nest of adjacent inverse pairs, so repeated block insertion into the
// boundary sequence is the same as reducing to it by cancelling such pairs.
// Condition (b) is checked by splitting the walk into laces based at (0, 0),
// each a tail of at most 2k edges, a counterclockwise turn around one face,
// and the tail reversed. The split backtracks over tail lengths when needed.
LaceReport VerifyLaceSequence(const EdgePath& path, int k);

}  // namespace assoclab

#endif  // ASSOCLAB_LACE_H_
