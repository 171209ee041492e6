#include "assoclab/lace.h"

#include <sstream>

namespace assoclab {

EdgePath EdgePath::FromVertices(const std::vector<GridPoint>& vertices) {
  EdgePath p;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) p.edges.push_back({vertices[i], vertices[i + 1]});
  return p;
}

bool EdgePath::IsConnected() const {
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i].to == edges[i + 1].from)) return false;
  }
  return true;
}

std::vector<GridPoint> EdgePath::Vertices() const {
  std::vector<GridPoint> v;
  if (edges.empty()) return v;
  v.push_back(edges.front().from);
  for (const auto& e : edges) v.push_back(e.to);
  return v;
}

namespace {

void LowerLace(int i, int j, std::vector<GridPoint>& out) {
  for (int x = 1; x <= i; ++x) out.push_back({x, 0});
  for (int y = 0; y <= j; ++y) out.push_back({i + 1, y});
  out.push_back({i, j + 1});
  out.push_back({i, j});
  out.push_back({i + 1, j});
  for (int y = j; y > 0; --y) out.push_back({i + 1, y - 1});
  for (int x = i + 1; x > 0; --x) out.push_back({x - 1, 0});
}

void UpperLace(int i, int j, std::vector<GridPoint>& out) {
  for (int x = 1; x <= i; ++x) out.push_back({x, 0});
  for (int y = 0; y <= j; ++y) out.push_back({i + 1, y});
  out.push_back({i + 1, j + 1});
  out.push_back({i, j + 1});
  out.push_back({i + 1, j});
  for (int y = j; y > 0; --y) out.push_back({i + 1, y - 1});
  for (int x = i + 1; x > 0; --x) out.push_back({x - 1, 0});
}

// Twice the signed area of the triangle abc.
int Orientation(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  return (b.i - a.i) * (c.j - a.j) - (b.j - a.j) * (c.i - a.i);
}

}  // namespace

std::vector<GridPoint> LaceVertexWalk(int k) {
  if (k < 1 || k > kMaxSimplexSubdivision) throw std::invalid_argument("LaceSequence: k must be in [1, 64]");
  std::vector<GridPoint> out = {{0, 0}};
  for (int i = k - 1; i >= 0; --i) {
    LowerLace(i, k - i - 1, out);
    for (int j = k - i - 2; j >= 0; --j) {
      UpperLace(i, j, out);
      LowerLace(i, j, out);
    }
  }
  return out;
}

EdgePath LaceSequence(int k) { return EdgePath::FromVertices(LaceVertexWalk(k)); }

std::string ExportEdgePath(const EdgePath& path) {
  std::ostringstream out;
  for (const auto& v : path.Vertices()) out << "(" << v.i << ", " << v.j << ")\n";
  return out.str();
}

LaceReport VerifyLaceSequence(const EdgePath& path, int k) {
  const TriangulatedSimplex simplex(k);
  LaceReport report;
  report.k = k;

  report.well_formed = !path.edges.empty() && path.IsConnected();
  for (const auto& e : path.edges) {
    if (!simplex.HasEdge(e.from, e.to)) report.well_formed = false;
  }
  if (!report.well_formed) report.failures.push_back("path is not a connected walk along triangulation edges");

  // (a) Cancel adjacent inverse pairs with a stack.
  std::vector<OrientedEdge> reduced;
  for (const auto& e : path.edges) {
    if (!reduced.empty() && reduced.back() == e.Reversed()) {
      reduced.pop_back();
    } else {
      reduced.push_back(e);
    }
  }
  const auto boundary = EdgePath::FromVertices(simplex.BoundaryLoop()).edges;
  report.reduces_to_boundary = reduced == boundary;
  if (!report.reduces_to_boundary) {
    report.failures.push_back("cancelling inverse pairs leaves " + std::to_string(reduced.size()) +
                              " edges instead of the boundary sequence");
  }

  // (b) Split into laces based at the origin.
  if (report.well_formed) {
    const auto v = path.Vertices();
    const std::size_t n_edges = path.edges.size();
    const std::size_t max_tail = static_cast<std::size_t>(2 * k);
    const GridPoint origin{0, 0};
    std::vector<char> dead(n_edges + 1, 0);
    std::vector<LaceRecord> stack;
    auto rec = [&](auto&& self, std::size_t s) -> bool {
      if (s == n_edges) return true;
      if (dead[s] || !(v[s] == origin)) return false;
      for (std::size_t t = 0; t <= max_tail; ++t) {
        const std::size_t end = s + 2 * t + 3;
        if (end > n_edges) break;
        const std::size_t f = s + t;  // vertex where the turn around the face starts
        if (!(v[f + 3] == v[f])) continue;
        if (Orientation(v[f], v[f + 1], v[f + 2]) <= 0) continue;
        const int face = simplex.FaceIndex(v[f], v[f + 1], v[f + 2]);
        if (face < 0) continue;
        bool retraced = true;
        for (std::size_t m = 0; m <= t && retraced; ++m) retraced = v[f + 3 + m] == v[f - m];
        if (!retraced) continue;
        stack.push_back({s, t, face});
        if (self(self, end)) return true;
        stack.pop_back();
      }
      dead[s] = 1;
      return false;
    };
    report.decomposes = rec(rec, 0);
    if (report.decomposes) {
      report.laces = stack;
    } else {
      report.failures.push_back("walk does not split into laces with tails of at most 2k edges");
    }
  }

  if (report.decomposes) {
    std::vector<int> hits(simplex.faces().size(), 0);
    for (const auto& l : report.laces) ++hits[static_cast<std::size_t>(l.face)];
    report.faces_covered = true;
    for (int h : hits) report.faces_covered = report.faces_covered && h == 1;
  }
  if (!report.faces_covered) report.failures.push_back("not every face is enclosed by exactly one lace");
  return report;
}

}  // namespace assoclab
