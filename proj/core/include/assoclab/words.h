#ifndef ASSOCLAB_WORDS_H_
#define ASSOCLAB_WORDS_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "assoclab/finite_groupoid.h"
#include "assoclab/groupoid.h"
#include "assoclab/paren_tree.h"

namespace assoclab {

template <typename E>
using Word = std::vector<E>;

template <LocalGroupoid G>
bool IsWellFormed(const G& grp, std::span<const ElementOf<G>> word) {
  if (word.empty()) return false;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (!grp.ObjectsEqual(grp.Source(word[i]), grp.Target(word[i + 1]))) return false;
  }
  return true;
}

template <LocalGroupoid G>
bool WordsEqual(const G& grp, std::span<const ElementOf<G>> a, std::span<const ElementOf<G>> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!grp.ElementsEqual(a[i], b[i])) return false;
  }
  return true;
}

template <typename E>
struct RewriteStep {
  enum class Kind { kContraction, kExpansion };
  Kind kind = Kind::kContraction;
  std::size_t position = 0;
  std::optional<std::pair<E, E>> factors;  // expansions only

  static RewriteStep Contract(std::size_t i) { return {Kind::kContraction, i, std::nullopt}; }
  static RewriteStep Expand(std::size_t i, E g, E h) {
    return {Kind::kExpansion, i, std::make_pair(std::move(g), std::move(h))};
  }
  bool is_contraction() const { return kind == Kind::kContraction; }
};

// Contraction replaces (w_i, w_{i+1}) by their product; expansion replaces w_i
// by (g, h) where g h = w_i. Empty if the step does not apply.
template <LocalGroupoid G>
std::optional<Word<ElementOf<G>>> Apply(const G& grp, std::span<const ElementOf<G>> word,
                                        const RewriteStep<ElementOf<G>>& step) {
  using E = ElementOf<G>;
  const std::size_t i = step.position;
  if (step.is_contraction()) {
    if (i + 1 >= word.size()) return std::nullopt;
    if (!grp.ObjectsEqual(grp.Source(word[i]), grp.Target(word[i + 1]))) return std::nullopt;
    auto p = grp.TryMul(word[i], word[i + 1]);
    if (!p) return std::nullopt;
    Word<E> out(word.begin(), word.begin() + i);
    out.push_back(std::move(*p));
    out.insert(out.end(), word.begin() + i + 2, word.end());
    return out;
  }
  if (i >= word.size() || !step.factors) return std::nullopt;
  const auto& [g, h] = *step.factors;
  if (!grp.ObjectsEqual(grp.Source(g), grp.Target(h))) return std::nullopt;
  auto p = grp.TryMul(g, h);
  if (!p || !grp.ElementsEqual(*p, word[i])) return std::nullopt;
  Word<E> out(word.begin(), word.begin() + i);
  out.push_back(g);
  out.push_back(h);
  out.insert(out.end(), word.begin() + i + 1, word.end());
  return out;
}

template <LocalGroupoid G>
std::optional<Word<ElementOf<G>>> Replay(const G& grp, Word<ElementOf<G>> word,
                                         std::span<const RewriteStep<ElementOf<G>>> path) {
  for (const auto& s : path) {
    auto next = Apply(grp, std::span<const ElementOf<G>>(word), s);
    if (!next) return std::nullopt;
    word = std::move(*next);
  }
  return word;
}

// Lists the factorizations (g, h) of an element that expansions may use.
template <typename E>
using Factorizer = std::function<std::vector<std::pair<E, E>>(const E&)>;

// Every factorization in a finite table, in table order.
inline Factorizer<ElementId> TableFactorizer(const FiniteLocalGroupoid& grp) {
  auto index = std::make_shared<std::vector<std::vector<std::pair<ElementId, ElementId>>>>(
      grp.element_count());
  for (const auto& [key, gh] : grp.mul_table()) {
    if (grp.Source(key.first) == grp.Target(key.second)) (*index)[Index(gh)].push_back(key);
  }
  return [index](const ElementId& e) { return (*index)[Index(e)]; };
}

// Factorizations z = a (a^-1 z) and z = (z a^-1) a for each letter a of a
// finite alphabet, keeping only those whose products are defined and
// reproduce z.
template <LocalGroupoid G>
Factorizer<ElementOf<G>> AlphabetFactorizer(const G& grp, std::vector<ElementOf<G>> alphabet) {
  using E = ElementOf<G>;
  return [grp, alphabet = std::move(alphabet)](const E& z) {
    std::vector<std::pair<E, E>> out;
    auto keep = [&](const E& g, const E& h) {
      if (!grp.ObjectsEqual(grp.Source(g), grp.Target(h))) return;
      auto p = grp.TryMul(g, h);
      if (p && grp.ElementsEqual(*p, z)) out.emplace_back(g, h);
    };
    for (const auto& a : alphabet) {
      auto ainv = grp.TryInv(a);
      if (!ainv) continue;
      if (grp.ObjectsEqual(grp.Source(*ainv), grp.Target(z))) {
        if (auto rest = grp.TryMul(*ainv, z)) keep(a, *rest);
      }
      if (grp.ObjectsEqual(grp.Source(z), grp.Target(*ainv))) {
        if (auto rest = grp.TryMul(z, *ainv)) keep(*rest, a);
      }
    }
    return out;
  };
}

struct SearchLimits {
  std::size_t max_len = 6;
  std::size_t max_steps = 6;
  std::size_t max_states = 2'000'000;
};

// A visited set of words with parent links. Words are hashed through
// Bucket(); ElementsEqual decides equality within a hash bucket.
template <LocalGroupoid G>
class WordTable {
 public:
  using E = ElementOf<G>;
  static constexpr std::uint32_t kNoParent = UINT32_MAX;

  struct Node {
    Word<E> word;
    std::uint32_t parent;
    RewriteStep<E> step;  // from the parent's word to this word
    std::uint32_t depth;
  };

  explicit WordTable(const G& grp) : grp_(&grp) {}

  std::optional<std::uint32_t> Find(std::span<const E> word) const {
    auto it = index_.find(Hash(word));
    if (it == index_.end()) return std::nullopt;
    for (std::uint32_t id : it->second) {
      if (WordsEqual(*grp_, std::span<const E>(nodes_[id].word), word)) return id;
    }
    return std::nullopt;
  }

  // Inserts if absent; returns the id and whether it was new.
  std::pair<std::uint32_t, bool> Insert(Word<E> word, std::uint32_t parent, RewriteStep<E> step,
                                        std::uint32_t depth) {
    if (auto id = Find(word)) return {*id, false};
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    index_[Hash(word)].push_back(id);
    nodes_.push_back({std::move(word), parent, std::move(step), depth});
    return {id, true};
  }

  const Node& node(std::uint32_t id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }

  // Steps from the root to the node.
  std::vector<RewriteStep<E>> PathTo(std::uint32_t id) const {
    std::vector<RewriteStep<E>> path;
    while (nodes_[id].parent != kNoParent) {
      path.push_back(nodes_[id].step);
      id = nodes_[id].parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  std::size_t Hash(std::span<const E> word) const {
    std::size_t h = word.size();
    for (const auto& e : word) {
      h ^= static_cast<std::size_t>(grp_->Bucket(e)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  const G* grp_;
  std::vector<Node> nodes_;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> index_;
};

namespace detail {

// All single-step neighbours in a fixed order: contractions left to right,
// then expansions left to right in factorizer order.
template <LocalGroupoid G>
void ForEachNeighbour(const G& grp, const Word<ElementOf<G>>& word,
                      const Factorizer<ElementOf<G>>& factor, std::size_t max_len, bool contractions,
                      bool expansions,
                      const std::function<bool(Word<ElementOf<G>>, RewriteStep<ElementOf<G>>)>& visit) {
  using E = ElementOf<G>;
  const std::span<const E> w(word);
  if (contractions) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      auto step = RewriteStep<E>::Contract(i);
      if (auto next = Apply(grp, w, step)) {
        if (visit(std::move(*next), std::move(step))) return;
      }
    }
  }
  if (expansions && word.size() < max_len) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      for (auto& [g, h] : factor(word[i])) {
        Word<E> next(word.begin(), word.begin() + i);
        next.push_back(g);
        next.push_back(h);
        next.insert(next.end(), word.begin() + i + 1, word.end());
        if (visit(std::move(next), RewriteStep<E>::Expand(i, g, h))) return;
      }
    }
  }
}

// The step that undoes `step`, which took `from` to some word.
template <typename E>
RewriteStep<E> InvertStep(const Word<E>& from, const RewriteStep<E>& step) {
  if (step.is_contraction()) {
    return RewriteStep<E>::Expand(step.position, from[step.position], from[step.position + 1]);
  }
  return RewriteStep<E>::Contract(step.position);
}

template <LocalGroupoid G>
std::vector<RewriteStep<ElementOf<G>>> InvertedPathToRoot(const WordTable<G>& table, std::uint32_t id) {
  std::vector<RewriteStep<ElementOf<G>>> out;
  while (table.node(id).parent != WordTable<G>::kNoParent) {
    const auto& n = table.node(id);
    out.push_back(InvertStep(table.node(n.parent).word, n.step));
    id = n.parent;
  }
  return out;
}

}  // namespace detail

template <typename E>
struct SearchResult {
  enum class Status { kEquivalent, kUnknown };
  Status status = Status::kUnknown;
  std::vector<RewriteStep<E>> path;  // from w1 to w2 when equivalent
  std::size_t states = 0;

  bool equivalent() const { return status == Status::kEquivalent; }
};

// Bidirectional breadth-first search over contractions and expansions, with
// words no longer than max_len and paths of at most max_steps moves. The side
// with the smaller frontier is expanded first.
template <LocalGroupoid G>
SearchResult<ElementOf<G>> EquivalenceSearch(const G& grp, const Word<ElementOf<G>>& w1,
                                             const Word<ElementOf<G>>& w2,
                                             const Factorizer<ElementOf<G>>& factor,
                                             const SearchLimits& limits) {
  using E = ElementOf<G>;
  using Table = WordTable<G>;
  SearchResult<E> result;
  if (WordsEqual(grp, std::span<const E>(w1), std::span<const E>(w2))) {
    result.status = SearchResult<E>::Status::kEquivalent;
    return result;
  }
  if (w1.size() > limits.max_len || w2.size() > limits.max_len) return result;

  Table side[2] = {Table(grp), Table(grp)};
  std::vector<std::uint32_t> frontier[2];
  std::uint32_t depth[2] = {0, 0};
  side[0].Insert(w1, Table::kNoParent, RewriteStep<E>::Contract(0), 0);
  side[1].Insert(w2, Table::kNoParent, RewriteStep<E>::Contract(0), 0);
  frontier[0] = {0};
  frontier[1] = {0};

  while (depth[0] + depth[1] < limits.max_steps) {
    const int s = (frontier[0].size() <= frontier[1].size()) ? 0 : 1;
    if (frontier[s].empty()) break;
    std::vector<std::uint32_t> next;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> meet;  // (id on side 0, id on side 1)
    for (std::uint32_t id : frontier[s]) {
      const Word<E> word = side[s].node(id).word;
      detail::ForEachNeighbour<G>(grp, word, factor, limits.max_len, true, true,
                                  [&](Word<E> w, RewriteStep<E> step) {
                                    auto [nid, fresh] = side[s].Insert(std::move(w), id, std::move(step),
                                                                       depth[s] + 1);
                                    if (!fresh) return false;
                                    next.push_back(nid);
                                    if (auto other = side[1 - s].Find(side[s].node(nid).word)) {
                                      meet = s == 0 ? std::make_pair(nid, *other)
                                                    : std::make_pair(*other, nid);
                                      return true;
                                    }
                                    return side[0].size() + side[1].size() >= limits.max_states;
                                  });
      if (meet || side[0].size() + side[1].size() >= limits.max_states) break;
    }
    result.states = side[0].size() + side[1].size();
    if (meet) {
      result.status = SearchResult<E>::Status::kEquivalent;
      result.path = side[0].PathTo(meet->first);
      auto back = detail::InvertedPathToRoot(side[1], meet->second);
      result.path.insert(result.path.end(), back.begin(), back.end());
      return result;
    }
    if (result.states >= limits.max_states) break;
    frontier[s] = std::move(next);
    ++depth[s];
  }
  result.states = side[0].size() + side[1].size();
  return result;
}

// A monotone path: expansions taking w1 to a common word, then contractions
// taking it to w2.
template <typename E>
struct MonotoneCertificate {
  std::vector<RewriteStep<E>> expansions;
  Word<E> peak;
  std::vector<RewriteStep<E>> contractions;
};

// Searches only expand-then-contract paths within the limits, shortest peak
// first.
template <LocalGroupoid G>
std::optional<MonotoneCertificate<ElementOf<G>>> IsExpandThenContract(
    const G& grp, const Word<ElementOf<G>>& w1, const Word<ElementOf<G>>& w2,
    const Factorizer<ElementOf<G>>& factor, const SearchLimits& limits) {
  using E = ElementOf<G>;
  using Table = WordTable<G>;
  if (w1.size() > limits.max_len || w2.size() > limits.max_len) return std::nullopt;
  Table up(grp), down(grp);
  up.Insert(w1, Table::kNoParent, RewriteStep<E>::Contract(0), 0);
  down.Insert(w2, Table::kNoParent, RewriteStep<E>::Contract(0), 0);
  // Layers hold the words of one length reached so far on each side.
  std::vector<std::uint32_t> layer_up = {0}, layer_down = {0};
  std::size_t len_up = w1.size(), len_down = w2.size();

  auto grow = [&](Table& t, std::vector<std::uint32_t>& layer, std::size_t& len) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t id : layer) {
      const Word<E> word = t.node(id).word;
      detail::ForEachNeighbour<G>(grp, word, factor, limits.max_len, false, true,
                                  [&](Word<E> w, RewriteStep<E> step) {
                                    auto [nid, fresh] = t.Insert(std::move(w), id, std::move(step),
                                                                 t.node(id).depth + 1);
                                    if (fresh) next.push_back(nid);
                                    return up.size() + down.size() >= limits.max_states;
                                  });
    }
    layer = std::move(next);
    ++len;
  };

  for (;;) {
    const std::size_t steps = (len_up - w1.size()) + (len_down - w2.size());
    if (len_up == len_down) {
      for (std::uint32_t id : layer_up) {
        if (auto other = down.Find(up.node(id).word)) {
          MonotoneCertificate<E> cert;
          cert.expansions = up.PathTo(id);
          cert.peak = up.node(id).word;
          cert.contractions = detail::InvertedPathToRoot(down, *other);
          return cert;
        }
      }
    }
    if (steps >= limits.max_steps || up.size() + down.size() >= limits.max_states) return std::nullopt;
    // Grow the shorter side; on ties grow the one with the smaller layer.
    const bool grow_up = len_up < len_down || (len_up == len_down && layer_up.size() <= layer_down.size());
    if (grow_up) {
      if (len_up >= limits.max_len || layer_up.empty()) return std::nullopt;
      grow(up, layer_up, len_up);
    } else {
      if (len_down >= limits.max_len || layer_down.empty()) return std::nullopt;
      grow(down, layer_down, len_down);
    }
  }
}

// ---------------------------------------------------------------------------
// Associators

template <typename E, typename O>
struct AssociatorRecord {
  Word<E> word;
  ParenTree tree_unit;
  ParenTree tree_g;
  E g;
  O base;
};

// Enumerates the well-formed words over `alphabet` of length 1..max_len that
// start and end at `base`, in lexicographic alphabet order, evaluates every
// bracketing of each, and records each word that evaluates both to the unit
// at base and to some g. Each distinct g is recorded once, with the first word
// found; the unit itself appears as the trivial record.
template <LocalGroupoid G>
std::vector<AssociatorRecord<ElementOf<G>, ObjectOf<G>>> FindAssociators(
    const G& grp, const std::vector<ElementOf<G>>& alphabet, std::size_t max_len,
    const ObjectOf<G>& base) {
  using E = ElementOf<G>;
  using O = ObjectOf<G>;
  if (max_len > kMaxTreeLeaves) throw TooLong("FindAssociators: max_len must be at most 12");

  // Objects touched by the alphabet and, for each, the fewest letters needed
  // to finish a word at base.
  std::vector<O> objects = {base};
  auto object_index = [&](const O& o) {
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (grp.ObjectsEqual(objects[i], o)) return i;
    }
    objects.push_back(o);
    return objects.size() - 1;
  };
  std::vector<std::size_t> letter_target, letter_source;
  for (const auto& a : alphabet) {
    letter_target.push_back(object_index(grp.Target(a)));
    letter_source.push_back(object_index(grp.Source(a)));
  }
  constexpr std::size_t kFar = SIZE_MAX;
  std::vector<std::size_t> to_base(objects.size(), kFar);
  to_base[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
      const std::size_t s = letter_source[l], t = letter_target[l];
      if (to_base[s] != kFar && to_base[s] + 1 < to_base[t]) {
        to_base[t] = to_base[s] + 1;
        changed = true;
      }
    }
  }

  const E unit = grp.Unit(base);
  std::vector<AssociatorRecord<E, O>> records;
  Word<E> word;
  auto examine = [&]() {
    auto values = AllEvaluations(grp, std::span<const E>(word));
    const Evaluation<E>* at_unit = nullptr;
    for (const auto& v : values) {
      if (grp.ElementsEqual(v.value, unit)) at_unit = &v;
    }
    if (!at_unit) return;
    for (const auto& v : values) {
      bool known = false;
      for (const auto& r : records) known = known || grp.ElementsEqual(r.g, v.value);
      if (!known) records.push_back({word, at_unit->tree, v.tree, v.value, base});
    }
  };
  // `current` is the object the next letter must have as target.
  auto rec = [&](auto&& self, std::size_t current) -> void {
    if (current == 0 && !word.empty()) examine();
    if (word.size() == max_len) return;
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
      if (letter_target[l] != current) continue;
      const std::size_t next = letter_source[l];
      if (to_base[next] == kFar || word.size() + 1 + to_base[next] > max_len) continue;
      word.push_back(alphabet[l]);
      self(self, next);
      word.pop_back();
    }
  };
  rec(rec, 0);
  return records;
}

}  // namespace assoclab

#endif  // ASSOCLAB_WORDS_H_
