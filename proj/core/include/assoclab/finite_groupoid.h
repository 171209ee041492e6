#ifndef ASSOCLAB_FINITE_GROUPOID_H_
#define ASSOCLAB_FINITE_GROUPOID_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace assoclab {

enum class ObjectId : std::uint32_t {};
enum class ElementId : std::uint32_t {};

inline std::uint32_t Index(ObjectId o) { return static_cast<std::uint32_t>(o); }
inline std::uint32_t Index(ElementId e) { return static_cast<std::uint32_t>(e); }

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& locus, const std::string& what)
      : std::runtime_error(locus + ": " + what), locus_(locus) {}
  const std::string& locus() const { return locus_; }

 private:
  std::string locus_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unrestrictable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite local groupoid given by explicit tables. Elements and objects are
// addressed by dense ids; the external string names are kept for I/O. Ids are
// assigned in lexicographic order of the names, so equal tables always get
// equal ids. Values are immutable once built.
class FiniteLocalGroupoid {
 public:
  using Element = ElementId;
  using Object = ObjectId;

  struct ElementInfo {
    std::string name;
    ObjectId source;
    ObjectId target;
    friend bool operator==(const ElementInfo&, const ElementInfo&) = default;
  };

  class Builder;

  std::size_t object_count() const { return object_names_.size(); }
  std::size_t element_count() const { return elements_.size(); }
  const std::string& ObjectName(ObjectId o) const { return object_names_.at(Index(o)); }
  const std::string& ElementName(ElementId e) const { return elements_.at(Index(e)).name; }
  std::optional<ElementId> FindElement(const std::string& name) const;
  std::optional<ObjectId> FindObject(const std::string& name) const;
  ElementId ElementByName(const std::string& name) const;  // throws if absent

  // LocalGroupoid contract.
  ObjectId Source(ElementId e) const { return elements_[Index(e)].source; }
  ObjectId Target(ElementId e) const { return elements_[Index(e)].target; }
  ElementId Unit(ObjectId o) const;
  std::optional<ElementId> TryMul(ElementId g, ElementId h) const;
  std::optional<ElementId> TryInv(ElementId g) const;
  bool ObjectsEqual(ObjectId a, ObjectId b) const { return a == b; }
  bool ElementsEqual(ElementId a, ElementId b) const { return a == b; }
  std::size_t Bucket(ElementId e) const { return Index(e); }

  bool HasUnit(ObjectId o) const { return units_[Index(o)].has_value(); }
  std::optional<ElementId> UnitIfAny(ObjectId o) const { return units_[Index(o)]; }
  bool IsUnit(ElementId e) const;

  const std::map<std::pair<ElementId, ElementId>, ElementId>& mul_table() const { return mul_; }
  const std::map<ElementId, ElementId>& inv_table() const { return inv_; }

  // Same elements and units, restricted tables. The products to keep must be a
  // subset of the current ones (checked).
  FiniteLocalGroupoid Restrict(const std::map<std::pair<ElementId, ElementId>, ElementId>& mul,
                               const std::map<ElementId, ElementId>& inv) const;

  friend bool operator==(const FiniteLocalGroupoid&, const FiniteLocalGroupoid&) = default;

 private:
  FiniteLocalGroupoid() = default;

  std::vector<std::string> object_names_;
  std::vector<ElementInfo> elements_;
  std::vector<std::optional<ElementId>> units_;
  std::map<std::pair<ElementId, ElementId>, ElementId> mul_;
  std::map<ElementId, ElementId> inv_;
};

// Collects a table by name; Build() sorts names and assigns ids. Referencing an
// unknown name throws ParseError with the offending field as locus.
class FiniteLocalGroupoid::Builder {
 public:
  Builder& AddObject(const std::string& name);
  Builder& AddElement(const std::string& name, const std::string& source,
                      const std::string& target);
  Builder& SetUnit(const std::string& object, const std::string& element);
  Builder& SetMul(const std::string& g, const std::string& h, const std::string& gh);
  Builder& SetInv(const std::string& g, const std::string& ginv);

  FiniteLocalGroupoid Build() const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::tuple<std::string, std::string, std::string>> elements_;
  std::vector<std::pair<std::string, std::string>> units_;
  std::vector<std::tuple<std::string, std::string, std::string>> mul_;
  std::vector<std::pair<std::string, std::string>> inv_;
};

struct Violation {
  std::string axiom;
  std::vector<std::string> ids;
  std::string detail;
};

// Axiom names used in reports.
inline constexpr const char* kAxiomUnitMissing = "unit missing";
inline constexpr const char* kAxiomUnitObject = "unit source/target";
inline constexpr const char* kAxiomComposability = "product composability";
inline constexpr const char* kAxiomProductEnds = "product source/target";
inline constexpr const char* kAxiomUnitLaw = "unit law";
inline constexpr const char* kAxiomInverseEnds = "inversion source/target";
inline constexpr const char* kAxiomInvolutive = "inversion involutivity";
inline constexpr const char* kAxiomInverseLaw = "inverse law";

// Every violated axiom with the offending element names. An empty report means
// the table is a valid finite local groupoid. The neighborhood clause of local
// associativity has no discrete content and is not checked.
std::vector<Violation> Validate(const FiniteLocalGroupoid& grp);

// Greedy restriction to a 3-associative table: while some triple has
// (gh)k != g(hk) with both sides defined, drop whichever of the two outer
// products (gh, k) or (g, hk) takes part in fewer defined triples (ties by
// name). Dropping a product of an element with its inverse also drops that
// inverse pair. Throws Unrestrictable if both outer products involve a unit.
FiniteLocalGroupoid MakeThreeAssociative(const FiniteLocalGroupoid& grp);

// JSON persistence. The canonical file has sorted keys, arrays sorted by name,
// two-space indentation and a trailing newline.
FiniteLocalGroupoid ParseGroupoidJson(const std::string& text, bool strict = false);
std::string ToCanonicalJson(const FiniteLocalGroupoid& grp);
FiniteLocalGroupoid LoadGroupoid(const std::filesystem::path& path, bool strict = false);
void SaveGroupoid(const FiniteLocalGroupoid& grp, const std::filesystem::path& path);

// Fixtures used throughout the tests and the CLI.
FiniteLocalGroupoid CyclicGroup(int n);               // Z_n, one object, full tables
FiniteLocalGroupoid IntegerInterval(int radius);      // {-r..r}, sums kept in range
FiniteLocalGroupoid UnitOnlyGroupoid();               // one object, one element
FiniteLocalGroupoid NonThreeAssociativeFixture();     // ab=p, bc=q, pc=r, aq=s

}  // namespace assoclab

#endif  // ASSOCLAB_FINITE_GROUPOID_H_
