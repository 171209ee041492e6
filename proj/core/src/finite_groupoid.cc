#include "assoclab/finite_groupoid.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

namespace assoclab {

using MulTable = std::map<std::pair<ElementId, ElementId>, ElementId>;
using InvTable = std::map<ElementId, ElementId>;

std::optional<ElementId> FiniteLocalGroupoid::FindElement(const std::string& name) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), name,
                             [](const ElementInfo& e, const std::string& n) { return e.name < n; });
  if (it == elements_.end() || it->name != name) return std::nullopt;
  return ElementId(static_cast<std::uint32_t>(it - elements_.begin()));
}

std::optional<ObjectId> FiniteLocalGroupoid::FindObject(const std::string& name) const {
  auto it = std::lower_bound(object_names_.begin(), object_names_.end(), name);
  if (it == object_names_.end() || *it != name) return std::nullopt;
  return ObjectId(static_cast<std::uint32_t>(it - object_names_.begin()));
}

ElementId FiniteLocalGroupoid::ElementByName(const std::string& name) const {
  auto e = FindElement(name);
  if (!e) throw std::out_of_range("no element named '" + name + "'");
  return *e;
}

ElementId FiniteLocalGroupoid::Unit(ObjectId o) const {
  const auto& u = units_.at(Index(o));
  if (!u) throw std::logic_error("object '" + ObjectName(o) + "' has no unit");
  return *u;
}

std::optional<ElementId> FiniteLocalGroupoid::TryMul(ElementId g, ElementId h) const {
  auto it = mul_.find({g, h});
  if (it == mul_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElementId> FiniteLocalGroupoid::TryInv(ElementId g) const {
  auto it = inv_.find(g);
  if (it == inv_.end()) return std::nullopt;
  return it->second;
}

bool FiniteLocalGroupoid::IsUnit(ElementId e) const {
  for (const auto& u : units_) {
    if (u && *u == e) return true;
  }
  return false;
}

FiniteLocalGroupoid FiniteLocalGroupoid::Restrict(const MulTable& mul, const InvTable& inv) const {
  for (const auto& [key, value] : mul) {
    auto it = mul_.find(key);
    if (it == mul_.end() || it->second != value) {
      throw std::invalid_argument("Restrict: product is not in the original table");
    }
  }
  for (const auto& [key, value] : inv) {
    auto it = inv_.find(key);
    if (it == inv_.end() || it->second != value) {
      throw std::invalid_argument("Restrict: inverse is not in the original table");
    }
  }
  FiniteLocalGroupoid out = *this;
  out.mul_ = mul;
  out.inv_ = inv;
  return out;
}

// ---------------------------------------------------------------------------
// Builder

FiniteLocalGroupoid::Builder& FiniteLocalGroupoid::Builder::AddObject(const std::string& name) {
  objects_.push_back(name);
  return *this;
}

FiniteLocalGroupoid::Builder& FiniteLocalGroupoid::Builder::AddElement(const std::string& name,
                                                                       const std::string& source,
                                                                       const std::string& target) {
  elements_.emplace_back(name, source, target);
  return *this;
}

FiniteLocalGroupoid::Builder& FiniteLocalGroupoid::Builder::SetUnit(const std::string& object,
                                                                    const std::string& element) {
  units_.emplace_back(object, element);
  return *this;
}

FiniteLocalGroupoid::Builder& FiniteLocalGroupoid::Builder::SetMul(const std::string& g,
                                                                   const std::string& h,
                                                                   const std::string& gh) {
  mul_.emplace_back(g, h, gh);
  return *this;
}

FiniteLocalGroupoid::Builder& FiniteLocalGroupoid::Builder::SetInv(const std::string& g,
                                                                   const std::string& ginv) {
  inv_.emplace_back(g, ginv);
  return *this;
}

FiniteLocalGroupoid FiniteLocalGroupoid::Builder::Build() const {
  FiniteLocalGroupoid grp;
  grp.object_names_ = objects_;
  std::sort(grp.object_names_.begin(), grp.object_names_.end());
  for (std::size_t i = 1; i < grp.object_names_.size(); ++i) {
    if (grp.object_names_[i] == grp.object_names_[i - 1]) {
      throw ParseError("/objects", "duplicate object '" + grp.object_names_[i] + "'");
    }
  }

  auto object = [&](const std::string& name, const std::string& locus) {
    auto o = grp.FindObject(name);
    if (!o) throw ParseError(locus, "unknown object '" + name + "'");
    return *o;
  };
  auto element = [&](const std::string& name, const std::string& locus) {
    auto e = grp.FindElement(name);
    if (!e) throw ParseError(locus, "unknown element '" + name + "'");
    return *e;
  };

  std::vector<std::size_t> order(elements_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::get<0>(elements_[a]) < std::get<0>(elements_[b]);
  });
  for (std::size_t i : order) {
    const auto& [name, source, target] = elements_[i];
    const std::string locus = "/elements/" + std::to_string(i);
    if (!grp.elements_.empty() && grp.elements_.back().name == name) {
      throw ParseError(locus + "/id", "duplicate element '" + name + "'");
    }
    grp.elements_.push_back(
        {name, object(source, locus + "/source"), object(target, locus + "/target")});
  }

  grp.units_.assign(grp.object_names_.size(), std::nullopt);
  for (const auto& [obj, el] : units_) {
    const std::string locus = "/units/" + obj;
    const ObjectId o = object(obj, locus);
    if (grp.units_[Index(o)]) throw ParseError(locus, "unit given twice");
    grp.units_[Index(o)] = element(el, locus);
  }

  for (std::size_t i = 0; i < mul_.size(); ++i) {
    const auto& [g, h, gh] = mul_[i];
    const std::string locus = "/mul/" + std::to_string(i);
    const auto key = std::make_pair(element(g, locus + "/0"), element(h, locus + "/1"));
    const ElementId value = element(gh, locus + "/2");
    auto [it, inserted] = grp.mul_.emplace(key, value);
    if (!inserted && it->second != value) {
      throw ParseError(locus, "conflicting product for (" + g + ", " + h + ")");
    }
  }

  for (std::size_t i = 0; i < inv_.size(); ++i) {
    const auto& [g, ginv] = inv_[i];
    const std::string locus = "/inv/" + std::to_string(i);
    const ElementId key = element(g, locus + "/0");
    const ElementId value = element(ginv, locus + "/1");
    auto [it, inserted] = grp.inv_.emplace(key, value);
    if (!inserted && it->second != value) {
      throw ParseError(locus, "conflicting inverse for " + g);
    }
  }
  return grp;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<Violation> Validate(const FiniteLocalGroupoid& grp) {
  std::vector<Violation> report;
  auto name = [&](ElementId e) { return grp.ElementName(e); };
  auto add = [&](const char* axiom, std::vector<std::string> ids, std::string detail) {
    report.push_back({axiom, std::move(ids), std::move(detail)});
  };

  for (std::uint32_t i = 0; i < grp.object_count(); ++i) {
    const ObjectId o{i};
    const auto u = grp.UnitIfAny(o);
    if (!u) {
      add(kAxiomUnitMissing, {}, "object " + grp.ObjectName(o) + " has no unit");
      continue;
    }
    if (grp.Source(*u) != o || grp.Target(*u) != o) {
      add(kAxiomUnitObject, {name(*u)}, "unit of " + grp.ObjectName(o) + " is not a loop at it");
    }
  }

  for (const auto& [key, gh] : grp.mul_table()) {
    const auto [g, h] = key;
    if (grp.Source(g) != grp.Target(h)) {
      add(kAxiomComposability, {name(g), name(h)}, "source of left factor differs from target of right");
    }
    if (grp.Source(gh) != grp.Source(h) || grp.Target(gh) != grp.Target(g)) {
      add(kAxiomProductEnds, {name(g), name(h), name(gh)}, "product has wrong source or target");
    }
  }

  for (std::uint32_t i = 0; i < grp.element_count(); ++i) {
    const ElementId g{i};
    const auto us = grp.UnitIfAny(grp.Source(g));
    const auto ut = grp.UnitIfAny(grp.Target(g));
    if (us && grp.TryMul(g, *us) != g) {
      add(kAxiomUnitLaw, {name(g), name(*us)}, "g * unit(source g) is not g");
    }
    if (ut && grp.TryMul(*ut, g) != g) {
      add(kAxiomUnitLaw, {name(*ut), name(g)}, "unit(target g) * g is not g");
    }
  }

  for (const auto& [g, k] : grp.inv_table()) {
    if (grp.Source(k) != grp.Target(g) || grp.Target(k) != grp.Source(g)) {
      add(kAxiomInverseEnds, {name(g), name(k)}, "inverse does not swap source and target");
    }
    if (grp.TryInv(k) != g) {
      add(kAxiomInvolutive, {name(g), name(k)}, "inverse of the inverse is not the element");
    }
    const auto us = grp.UnitIfAny(grp.Source(g));
    const auto ut = grp.UnitIfAny(grp.Target(g));
    if (!us || grp.TryMul(k, g) != us) {
      add(kAxiomInverseLaw, {name(k), name(g)}, "inv(g) * g is not unit(source g)");
    }
    if (!ut || grp.TryMul(g, k) != ut) {
      add(kAxiomInverseLaw, {name(g), name(k)}, "g * inv(g) is not unit(target g)");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Restriction to a 3-associative table

namespace {

struct Witness3 {
  ElementId g, h, k;
};

std::optional<Witness3> FirstThreeWitness(const MulTable& mul) {
  // Triples in lexicographic id order: pairs (g, h) come sorted from the map,
  // and k ranges over the sorted right factors of gh.
  for (const auto& [gh_key, gh] : mul) {
    const auto [g, h] = gh_key;
    for (auto it = mul.lower_bound({h, ElementId(0)}); it != mul.end() && it->first.first == h; ++it) {
      const ElementId k = it->first.second;
      const ElementId hk = it->second;
      auto left = mul.find({gh, k});
      auto right = mul.find({g, hk});
      if (left != mul.end() && right != mul.end() && left->second != right->second) {
        return Witness3{g, h, k};
      }
    }
  }
  return std::nullopt;
}

// Number of triples (x, y, z) whose two bracketings use the pair as an outer
// product with the inner product defined.
std::size_t Participation(const MulTable& mul, std::pair<ElementId, ElementId> pair) {
  std::size_t count = 0;
  for (const auto& [key, value] : mul) {
    if (value == pair.first) ++count;   // (x y) z with xy = first, z = second
    if (value == pair.second) ++count;  // x (y z) with x = first, yz = second
  }
  return count;
}

}  // namespace

FiniteLocalGroupoid MakeThreeAssociative(const FiniteLocalGroupoid& grp) {
  MulTable mul = grp.mul_table();
  InvTable inv = grp.inv_table();
  auto unit_product = [&](const std::pair<ElementId, ElementId>& p) {
    return grp.IsUnit(p.first) || grp.IsUnit(p.second);
  };
  auto key_name = [&](const std::pair<ElementId, ElementId>& p) {
    return std::make_pair(grp.ElementName(p.first), grp.ElementName(p.second));
  };

  while (auto w = FirstThreeWitness(mul)) {
    const auto outer_left = std::make_pair(mul.at({w->g, w->h}), w->k);
    const auto outer_right = std::make_pair(w->g, mul.at({w->h, w->k}));
    std::vector<std::pair<ElementId, ElementId>> candidates;
    for (const auto& c : {outer_left, outer_right}) {
      if (!unit_product(c)) candidates.push_back(c);
    }
    if (candidates.empty()) {
      throw Unrestrictable("associativity failure at (" + grp.ElementName(w->g) + ", " +
                           grp.ElementName(w->h) + ", " + grp.ElementName(w->k) +
                           ") involves only unit products");
    }
    std::sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
      const auto pa = Participation(mul, a), pb = Participation(mul, b);
      if (pa != pb) return pa < pb;
      return key_name(a) < key_name(b);
    });
    const auto victim = candidates.front();
    mul.erase(victim);
    auto it = inv.find(victim.first);
    if (it != inv.end() && it->second == victim.second) {
      inv.erase(victim.first);
      inv.erase(victim.second);
    }
  }
  return grp.Restrict(mul, inv);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

std::string LineLocus(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += (text[i] == '\n');
  return "line " + std::to_string(line);
}

const json& Field(const json& doc, const char* key, json::value_t type) {
  const std::string locus = std::string("/") + key;
  if (!doc.contains(key)) throw ParseError(locus, "missing field");
  const json& v = doc.at(key);
  if (v.type() != type) throw ParseError(locus, "wrong type");
  return v;
}

std::string Str(const json& v, const std::string& locus) {
  if (!v.is_string()) throw ParseError(locus, "expected a string");
  return v.get<std::string>();
}

}  // namespace

FiniteLocalGroupoid ParseGroupoidJson(const std::string& text, bool strict) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(LineLocus(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  if (!doc.is_object()) throw ParseError("/", "expected a JSON object");

  FiniteLocalGroupoid::Builder b;
  const json& objects = Field(doc, "objects", json::value_t::array);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    b.AddObject(Str(objects[i], "/objects/" + std::to_string(i)));
  }
  const json& elements = Field(doc, "elements", json::value_t::array);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string locus = "/elements/" + std::to_string(i);
    const json& e = elements[i];
    if (!e.is_object()) throw ParseError(locus, "expected an object");
    for (const char* key : {"id", "source", "target"}) {
      if (!e.contains(key)) throw ParseError(locus + "/" + key, "missing field");
    }
    b.AddElement(Str(e["id"], locus + "/id"), Str(e["source"], locus + "/source"),
                 Str(e["target"], locus + "/target"));
  }
  const json& units = Field(doc, "units", json::value_t::object);
  for (const auto& [obj, el] : units.items()) b.SetUnit(obj, Str(el, "/units/" + obj));
  const json& mul = Field(doc, "mul", json::value_t::array);
  for (std::size_t i = 0; i < mul.size(); ++i) {
    const std::string locus = "/mul/" + std::to_string(i);
    if (!mul[i].is_array() || mul[i].size() != 3) throw ParseError(locus, "expected [g, h, gh]");
    b.SetMul(Str(mul[i][0], locus + "/0"), Str(mul[i][1], locus + "/1"),
             Str(mul[i][2], locus + "/2"));
  }
  const json& inv = Field(doc, "inv", json::value_t::array);
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const std::string locus = "/inv/" + std::to_string(i);
    if (!inv[i].is_array() || inv[i].size() != 2) throw ParseError(locus, "expected [g, ginv]");
    b.SetInv(Str(inv[i][0], locus + "/0"), Str(inv[i][1], locus + "/1"));
  }

  FiniteLocalGroupoid grp = b.Build();
  if (strict) {
    const auto report = Validate(grp);
    if (!report.empty()) {
      std::string msg = "groupoid fails " + std::to_string(report.size()) + " axiom check(s); first: " +
                        report.front().axiom + " (" + report.front().detail + ")";
      throw ValidationError(msg);
    }
  }
  return grp;
}

std::string ToCanonicalJson(const FiniteLocalGroupoid& grp) {
  // Ids follow name order, so iterating by id already yields sorted arrays.
  json doc;
  doc["objects"] = json::array();
  for (std::uint32_t i = 0; i < grp.object_count(); ++i) {
    doc["objects"].push_back(grp.ObjectName(ObjectId(i)));
  }
  doc["elements"] = json::array();
  for (std::uint32_t i = 0; i < grp.element_count(); ++i) {
    const ElementId e{i};
    doc["elements"].push_back({{"id", grp.ElementName(e)},
                               {"source", grp.ObjectName(grp.Source(e))},
                               {"target", grp.ObjectName(grp.Target(e))}});
  }
  doc["units"] = json::object();
  for (std::uint32_t i = 0; i < grp.object_count(); ++i) {
    if (auto u = grp.UnitIfAny(ObjectId(i))) doc["units"][grp.ObjectName(ObjectId(i))] = grp.ElementName(*u);
  }
  doc["mul"] = json::array();
  for (const auto& [key, gh] : grp.mul_table()) {
    doc["mul"].push_back(
        {grp.ElementName(key.first), grp.ElementName(key.second), grp.ElementName(gh)});
  }
  doc["inv"] = json::array();
  for (const auto& [g, k] : grp.inv_table()) {
    doc["inv"].push_back({grp.ElementName(g), grp.ElementName(k)});
  }
  return doc.dump(2) + "\n";
}

FiniteLocalGroupoid LoadGroupoid(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseGroupoidJson(buf.str(), strict);
}

void SaveGroupoid(const FiniteLocalGroupoid& grp, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << ToCanonicalJson(grp);
}

// ---------------------------------------------------------------------------
// Fixtures

FiniteLocalGroupoid CyclicGroup(int n) {
  if (n < 1) throw std::invalid_argument("CyclicGroup: n must be positive");
  FiniteLocalGroupoid::Builder b;
  b.AddObject("*");
  for (int i = 0; i < n; ++i) b.AddElement(std::to_string(i), "*", "*");
  b.SetUnit("*", "0");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b.SetMul(std::to_string(i), std::to_string(j), std::to_string((i + j) % n));
    }
    b.SetInv(std::to_string(i), std::to_string((n - i) % n));
  }
  return b.Build();
}

FiniteLocalGroupoid IntegerInterval(int radius) {
  if (radius < 0) throw std::invalid_argument("IntegerInterval: radius must be non-negative");
  FiniteLocalGroupoid::Builder b;
  b.AddObject("*");
  for (int i = -radius; i <= radius; ++i) b.AddElement(std::to_string(i), "*", "*");
  b.SetUnit("*", "0");
  for (int i = -radius; i <= radius; ++i) {
    for (int j = -radius; j <= radius; ++j) {
      if (std::abs(i + j) <= radius) {
        b.SetMul(std::to_string(i), std::to_string(j), std::to_string(i + j));
      }
    }
    b.SetInv(std::to_string(i), std::to_string(-i));
  }
  return b.Build();
}

FiniteLocalGroupoid UnitOnlyGroupoid() {
  return FiniteLocalGroupoid::Builder()
      .AddObject("*")
      .AddElement("e", "*", "*")
      .SetUnit("*", "e")
      .SetMul("e", "e", "e")
      .SetInv("e", "e")
      .Build();
}

FiniteLocalGroupoid NonThreeAssociativeFixture() {
  FiniteLocalGroupoid::Builder b;
  b.AddObject("*");
  const std::vector<std::string> names = {"a", "b", "c", "e", "p", "q", "r", "s"};
  for (const auto& n : names) b.AddElement(n, "*", "*");
  b.SetUnit("*", "e");
  for (const auto& n : names) {
    b.SetMul(n, "e", n);
    if (n != "e") b.SetMul("e", n, n);
  }
  b.SetMul("a", "b", "p").SetMul("b", "c", "q").SetMul("p", "c", "r").SetMul("a", "q", "s");
  b.SetInv("e", "e");
  return b.Build();
}

}  // namespace assoclab
