#ifndef ASSOCLAB_ASSOCIATIVITY_H_
#define ASSOCLAB_ASSOCIATIVITY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "assoclab/finite_groupoid.h"
#include "assoclab/groupoid.h"
#include "assoclab/paren_tree.h"

namespace assoclab {

inline constexpr std::size_t kMinAssociativityOrder = 3;
inline constexpr std::size_t kMaxAssociativityOrder = 10;

// A tuple with two bracketings whose defined values differ.
template <typename E>
struct AssociativityWitness {
  std::vector<E> tuple;
  ParenTree tree_a;
  ParenTree tree_b;
  E value_a;
  E value_b;
};

namespace detail {

inline void CheckOrder(std::size_t n) {
  if (n < kMinAssociativityOrder || n > kMaxAssociativityOrder) {
    throw std::invalid_argument("associativity order must lie in [3, 10]");
  }
}

template <LocalGroupoid G>
std::optional<AssociativityWitness<ElementOf<G>>> CheckTuple(const G& grp,
                                                             std::span<const ElementOf<G>> tuple) {
  auto values = AllEvaluations(grp, tuple);
  if (values.size() < 2) return std::nullopt;
  return AssociativityWitness<ElementOf<G>>{{tuple.begin(), tuple.end()},
                                            values[0].tree,
                                            values[1].tree,
                                            values[0].value,
                                            values[1].value};
}

}  // namespace detail

// Checks the supplied tuples (each of length 3..n; others are skipped) and
// returns the first witness, or nullopt if every defined bracketing of every
// tuple agrees.
template <LocalGroupoid G>
std::optional<AssociativityWitness<ElementOf<G>>> IsNAssociative(
    const G& grp, std::size_t n, std::span<const std::vector<ElementOf<G>>> tuples) {
  detail::CheckOrder(n);
  for (const auto& t : tuples) {
    if (t.size() < kMinAssociativityOrder || t.size() > n) continue;
    if (auto w = detail::CheckTuple<G>(grp, std::span<const ElementOf<G>>(t))) return w;
  }
  return std::nullopt;
}

// Exhaustive check over all well-formed tuples of length 3..n drawn from
// `elements`, shortest first, then lexicographic in the order of `elements`.
template <LocalGroupoid G>
std::optional<AssociativityWitness<ElementOf<G>>> IsNAssociativeExhaustive(
    const G& grp, std::size_t n, std::span<const ElementOf<G>> elements) {
  using E = ElementOf<G>;
  detail::CheckOrder(n);
  std::vector<E> tuple;
  std::optional<AssociativityWitness<E>> found;
  auto rec = [&](auto&& self, std::size_t m) -> bool {
    if (tuple.size() == m) {
      found = detail::CheckTuple<G>(grp, std::span<const E>(tuple));
      return found.has_value();
    }
    for (const auto& e : elements) {
      if (!tuple.empty() && !grp.ObjectsEqual(grp.Source(tuple.back()), grp.Target(e))) continue;
      tuple.push_back(e);
      const bool stop = self(self, m);
      tuple.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (std::size_t m = kMinAssociativityOrder; m <= n; ++m) {
    if (rec(rec, m)) return found;
  }
  return std::nullopt;
}

inline std::vector<ElementId> AllElements(const FiniteLocalGroupoid& grp) {
  std::vector<ElementId> out;
  for (std::uint32_t i = 0; i < grp.element_count(); ++i) out.push_back(ElementId(i));
  return out;
}

inline std::optional<AssociativityWitness<ElementId>> IsNAssociative(const FiniteLocalGroupoid& grp,
                                                                     std::size_t n) {
  const auto all = AllElements(grp);
  return IsNAssociativeExhaustive(grp, n, std::span<const ElementId>(all));
}

}  // namespace assoclab

#endif  // ASSOCLAB_ASSOCIATIVITY_H_
