#ifndef ASSOCLAB_GROUPOID_H_
#define ASSOCLAB_GROUPOID_H_

#include <concepts>
#include <cstddef>
#include <optional>

namespace assoclab {

// The capability set shared by finite (table-backed) and parametric local
// groupoids. Products and inverses are partial: an empty optional means the
// operation is not defined there.
//
// Laws every model must satisfy:
//   TryMul(g, h) defined  =>  Source(g) == Target(h), and the product has
//                              source Source(h) and target Target(g);
//   TryMul(g, Unit(Source(g))) == g  and  TryMul(Unit(Target(g)), g) == g;
//   TryInv(g) defined     =>  it swaps source and target, is involutive at g,
//                              and multiplies with g to the units.
//
// ElementsEqual and ObjectsEqual use whatever tolerance the model was built
// with (identity for finite tables). Bucket must agree on equal elements
// except near bucket boundaries, where it may split them but never merge
// unequal ones.
template <typename G>
concept LocalGroupoid = requires(const G& grp, const typename G::Element& e,
                                 const typename G::Object& o) {
  typename G::Element;
  typename G::Object;
  { grp.Source(e) } -> std::convertible_to<typename G::Object>;
  { grp.Target(e) } -> std::convertible_to<typename G::Object>;
  { grp.Unit(o) } -> std::convertible_to<typename G::Element>;
  { grp.TryMul(e, e) } -> std::same_as<std::optional<typename G::Element>>;
  { grp.TryInv(e) } -> std::same_as<std::optional<typename G::Element>>;
  { grp.ObjectsEqual(o, o) } -> std::same_as<bool>;
  { grp.ElementsEqual(e, e) } -> std::same_as<bool>;
  { grp.Bucket(e) } -> std::convertible_to<std::size_t>;
};

template <LocalGroupoid G>
using ElementOf = typename G::Element;

template <LocalGroupoid G>
using ObjectOf = typename G::Object;

}  // namespace assoclab

#endif  // ASSOCLAB_GROUPOID_H_
