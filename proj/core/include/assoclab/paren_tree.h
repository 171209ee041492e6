#ifndef ASSOCLAB_PAREN_TREE_H_
#define ASSOCLAB_PAREN_TREE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assoclab/groupoid.h"

namespace assoclab {

inline constexpr std::size_t kMaxTreeLeaves = 12;

class TooLong : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A full binary tree over n ordered leaves, i.e. one way of bracketing an
// n-fold product. Stored as the preorder list of left-subtree sizes of the
// internal nodes, which has n - 1 entries.
class ParenTree {
 public:
  static ParenTree Leaf() { return ParenTree(1, {}); }
  static ParenTree Join(const ParenTree& left, const ParenTree& right);

  std::size_t leaf_count() const { return leaves_; }
  std::size_t internal_count() const { return splits_.size(); }
  const std::vector<std::uint8_t>& splits() const { return splits_; }

  // Bracketed rendering using the given leaf names, e.g. "F(E((D(CB))A))".
  // Single-character names are juxtaposed; longer names are separated by '*'.
  std::string Render(std::span<const std::string> names) const;
  // Rendering with generic leaf names a, b, c, ...
  std::string ToString() const;

  friend bool operator==(const ParenTree&, const ParenTree&) = default;
  friend auto operator<=>(const ParenTree&, const ParenTree&) = default;

 private:
  ParenTree(std::size_t leaves, std::vector<std::uint8_t> splits)
      : leaves_(leaves), splits_(std::move(splits)) {}

  std::size_t leaves_;
  std::vector<std::uint8_t> splits_;
};

// All Catalan(n - 1) trees on n leaves, in a fixed order: root split
// ascending, then left subtree order, then right subtree order.
std::vector<ParenTree> EnumerateParenTrees(std::size_t n);

std::size_t CatalanNumber(std::size_t n);

// Parses juxtaposition notation with single-letter leaves, e.g.
// "((F((ED)C))B)A". Returns the tree and the letters in leaf order.
std::pair<ParenTree, std::string> ParseParenTree(std::string_view text);

namespace detail {

// Folds the tree bottom-up: leaf(i) at leaf i, combine(l, r) at internal nodes.
template <typename Leaf, typename Combine>
auto FoldTree(const ParenTree& tree, Leaf&& leaf, Combine&& combine) {
  std::size_t cursor = 0;
  auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> decltype(leaf(std::size_t{0})) {
    if (hi - lo == 1) return leaf(lo);
    const std::size_t k = tree.splits()[cursor++];
    auto l = self(self, lo, lo + k);
    auto r = self(self, lo + k, hi);
    return combine(l, r);
  };
  return rec(rec, 0, tree.leaf_count());
}

}  // namespace detail

// Bottom-up evaluation of a word under a bracketing. Empty as soon as any
// partial product is undefined.
template <LocalGroupoid G>
std::optional<ElementOf<G>> Evaluate(const G& grp, std::span<const ElementOf<G>> word,
                                     const ParenTree& tree) {
  using E = ElementOf<G>;
  if (tree.leaf_count() != word.size()) {
    throw std::invalid_argument("Evaluate: tree leaf count does not match word length");
  }
  bool ok = true;
  auto leaf = [&](std::size_t i) -> std::optional<E> { return word[i]; };
  auto combine = [&](const std::optional<E>& l, const std::optional<E>& r) -> std::optional<E> {
    if (!ok || !l || !r) {
      ok = false;
      return std::nullopt;
    }
    auto p = grp.TryMul(*l, *r);
    if (!p) ok = false;
    return p;
  };
  return detail::FoldTree(tree, leaf, combine);
}

// One representative bracketing per distinct value of a word.
template <typename E>
struct Evaluation {
  E value;
  ParenTree tree;
};

// Every distinct value (up to ElementsEqual) that some bracketing of the word
// evaluates to, each with the first bracketing found for it. Computed by
// dynamic programming over subintervals, so all Catalan(n - 1) bracketings
// are covered without enumerating them one by one.
template <LocalGroupoid G>
std::vector<Evaluation<ElementOf<G>>> AllEvaluations(const G& grp,
                                                    std::span<const ElementOf<G>> word) {
  using E = ElementOf<G>;
  const std::size_t n = word.size();
  if (n == 0) return {};
  // table[lo][len - 1] holds the values of word[lo, lo + len).
  std::vector<std::vector<std::vector<Evaluation<E>>>> table(
      n, std::vector<std::vector<Evaluation<E>>>(n));
  for (std::size_t i = 0; i < n; ++i) table[i][0].push_back({word[i], ParenTree::Leaf()});
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t lo = 0; lo + len <= n; ++lo) {
      auto& cell = table[lo][len - 1];
      for (std::size_t k = 1; k < len; ++k) {
        const auto& left = table[lo][k - 1];
        const auto& right = table[lo + k][len - k - 1];
        for (const auto& l : left) {
          for (const auto& r : right) {
            auto p = grp.TryMul(l.value, r.value);
            if (!p) continue;
            bool seen = false;
            for (const auto& existing : cell) {
              if (grp.ElementsEqual(existing.value, *p)) {
                seen = true;
                break;
              }
            }
            if (!seen) cell.push_back({std::move(*p), ParenTree::Join(l.tree, r.tree)});
          }
        }
      }
    }
  }
  return std::move(table[0][n - 1]);
}

}  // namespace assoclab

#endif  // ASSOCLAB_PAREN_TREE_H_
