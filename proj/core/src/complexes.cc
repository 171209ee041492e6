#include "assoclab/complexes.h"

#include <algorithm>
#include <functional>

#include <nlohmann/json.hpp>

namespace assoclab {

GoodComplex GoodComplex::Chain(int k) {
  if (k < 1) throw std::invalid_argument("GoodComplex::Chain: k must be positive");
  GoodComplex c;
  c.k_ = k;
  for (int i = 0; i <= k; ++i) c.labels_.emplace_back(i);
  for (int i = 0; i < k; ++i) c.edges_.insert({i, i + 1});
  return c;
}

Face GoodComplex::MakeFace(VertexId a, VertexId b, VertexId c) const {
  Face f = {a, b, c};
  std::sort(f.begin(), f.end(), [this](VertexId x, VertexId y) { return Less(x, y); });
  return f;
}

int GoodComplex::FacesOn(VertexId a, VertexId b) const {
  auto it = face_count_.find(MakeEdge(a, b));
  return it == face_count_.end() ? 0 : it->second;
}

std::vector<Edge> GoodComplex::BoundaryEdges() const {
  std::vector<Edge> out;
  for (const auto& e : edges_) {
    if (FacesOn(e.first, e.second) <= 1) out.push_back(e);
  }
  return out;
}

std::vector<std::array<VertexId, 3>> GoodComplex::ContractibleTriples() const {
  std::vector<std::array<VertexId, 3>> out;
  const auto boundary = BoundaryEdges();
  for (const auto& [u, v] : boundary) {
    for (const auto& [v2, w] : boundary) {
      if (v2 == v && !HasEdge(u, w)) out.push_back({u, v, w});
    }
  }
  return out;
}

std::optional<VertexId> GoodComplex::FindLabel(const mpq_class& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

VertexId GoodComplex::Expand(VertexId u, VertexId w) {
  if (!IsBoundaryEdge(u, w)) throw NotBoundaryEdge("Expand: not an edge with at most one face");
  const auto [lo, hi] = MakeEdge(u, w);
  const mpq_class& a = labels_[lo];
  mpq_class b = labels_[hi];
  mpq_class m;
  for (;;) {
    m = mpq_class(a.get_num() + b.get_num(), a.get_den() + b.get_den());
    m.canonicalize();
    if (!FindLabel(m)) break;
    b = m;
  }
  const auto v = static_cast<VertexId>(labels_.size());
  labels_.push_back(m);
  edges_.insert({lo, v});
  edges_.insert({v, hi});
  faces_.insert({lo, v, hi});
  ++face_count_[{lo, v}];
  ++face_count_[{v, hi}];
  ++face_count_[{lo, hi}];
  log_.push_back({ComplexMove::Kind::kExpansion, lo, v, hi});
  return v;
}

void GoodComplex::Contract(VertexId u, VertexId v, VertexId w) {
  const auto n = static_cast<VertexId>(labels_.size());
  if (u < 0 || v < 0 || w < 0 || u >= n || v >= n || w >= n) throw NotBoundary("Contract: no such vertex");
  if (!Less(u, v) || !Less(v, w)) throw NotBoundary("Contract: need u < v < w");
  if (!IsBoundaryEdge(u, v) || !IsBoundaryEdge(v, w)) {
    throw NotBoundary("Contract: {u, v} and {v, w} must be boundary edges");
  }
  if (HasEdge(u, w)) throw EdgeExists("Contract: {u, w} is already an edge");
  edges_.insert({u, w});
  faces_.insert({u, v, w});
  ++face_count_[{u, v}];
  ++face_count_[{v, w}];
  ++face_count_[{u, w}];
  log_.push_back({ComplexMove::Kind::kContraction, u, v, w});
}

VertexId GoodComplex::Source() const {
  const auto b = BoundaryEdges();
  VertexId best = b.front().first;
  for (const auto& [x, y] : b) {
    if (Less(x, best)) best = x;
  }
  return best;
}

VertexId GoodComplex::Target() const {
  const auto b = BoundaryEdges();
  VertexId best = b.front().second;
  for (const auto& [x, y] : b) {
    if (Less(best, y)) best = y;
  }
  return best;
}

long GoodComplex::EulerCharacteristic() const {
  return static_cast<long>(labels_.size()) - static_cast<long>(edges_.size()) +
         static_cast<long>(faces_.size());
}

bool GoodComplex::CheckInvariants() const {
  for (const auto& [e, count] : face_count_) {
    if (count > 2 || !edges_.count(e)) return false;
  }
  for (const auto& f : faces_) {
    if (!Less(f[0], f[1]) || !Less(f[1], f[2])) return false;
    if (!HasEdge(f[0], f[1]) || !HasEdge(f[1], f[2]) || !HasEdge(f[0], f[2])) return false;
  }
  for (const auto& [a, b] : edges_) {
    if (!Less(a, b)) return false;
  }
  return true;
}

bool operator==(const GoodComplex& a, const GoodComplex& b) {
  return a.k_ == b.k_ && a.labels_ == b.labels_ && a.edges_ == b.edges_ && a.faces_ == b.faces_;
}

GoodComplex ReplayLog(int k, const std::vector<ComplexMove>& log) {
  GoodComplex c = GoodComplex::Chain(k);
  for (const auto& m : log) {
    if (m.kind == ComplexMove::Kind::kExpansion) {
      if (c.Expand(m.u, m.w) != m.v) throw std::logic_error("ReplayLog: vertex numbering diverged");
    } else {
      c.Contract(m.u, m.v, m.w);
    }
  }
  return c;
}

std::vector<std::vector<VertexId>> BoundaryPaths(const GoodComplex& c) {
  std::map<VertexId, std::vector<VertexId>> up;
  for (const auto& [a, b] : c.BoundaryEdges()) up[a].push_back(b);
  for (auto& [v, next] : up) {
    std::sort(next.begin(), next.end(), [&](VertexId x, VertexId y) { return c.Less(x, y); });
  }
  const VertexId target = c.Target();
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path = {c.Source()};
  std::function<void()> rec = [&]() {
    const VertexId v = path.back();
    if (v == target) {
      out.push_back(path);
      return;
    }
    auto it = up.find(v);
    if (it == up.end()) return;
    for (VertexId w : it->second) {
      path.push_back(w);
      rec();
      path.pop_back();
    }
  };
  rec();
  return out;
}

DiskDecomposition DecomposeDisks(const GoodComplex& c) {
  std::vector<Face> faces(c.faces().begin(), c.faces().end());
  std::vector<int> parent(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::map<Edge, int> first_face;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    for (const Edge& e : {Edge{f[0], f[1]}, Edge{f[1], f[2]}, Edge{f[0], f[2]}}) {
      auto [it, fresh] = first_face.emplace(e, static_cast<int>(i));
      if (!fresh) parent[find(static_cast<int>(i))] = find(it->second);
    }
  }
  DiskDecomposition out;
  std::map<int, std::set<VertexId>> groups;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    auto& g = groups[find(static_cast<int>(i))];
    g.insert(faces[i].begin(), faces[i].end());
  }
  for (const auto& [root, vs] : groups) {
    std::vector<VertexId> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end(), [&](VertexId x, VertexId y) { return c.Less(x, y); });
    out.disk_vertices.push_back(std::move(sorted));
  }
  std::sort(out.disk_vertices.begin(), out.disk_vertices.end(),
            [&](const auto& x, const auto& y) { return c.Less(x.front(), y.front()); });
  out.disks = static_cast<int>(out.disk_vertices.size());
  for (const auto& e : c.edges()) {
    if (c.FacesOn(e.first, e.second) == 0) out.segments.push_back(e);
  }
  return out;
}

GoodComplex ThreeDiskComplex() {
  GoodComplex c = GoodComplex::Chain(4);
  c.Expand(0, 1);
  const VertexId g = c.Expand(1, 2);
  c.Expand(1, g);
  c.Expand(3, 4);
  return c;
}

std::string LabelString(const mpq_class& q) { return q.get_str(); }

std::string GoodComplexToJson(const GoodComplex& c) {
  using nlohmann::json;
  auto label = [&](VertexId v) { return LabelString(c.label(v)); };
  json doc;
  doc["k"] = c.chain_length();
  doc["vertices"] = json::array();
  for (std::size_t v = 0; v < c.vertex_count(); ++v) doc["vertices"].push_back(label(static_cast<VertexId>(v)));
  doc["edges"] = json::array();
  for (const auto& [a, b] : c.edges()) doc["edges"].push_back({label(a), label(b)});
  doc["faces"] = json::array();
  for (const auto& f : c.faces()) doc["faces"].push_back({label(f[0]), label(f[1]), label(f[2])});
  doc["log"] = json::array();
  for (const auto& m : c.log()) {
    const bool expansion = m.kind == ComplexMove::Kind::kExpansion;
    doc["log"].push_back({{"move", expansion ? "expansion" : "contraction"},
                          {"u", label(m.u)},
                          {"v", label(m.v)},
                          {"w", label(m.w)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace assoclab
