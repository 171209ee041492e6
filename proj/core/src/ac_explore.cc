#include "assoclab/ac_explore.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace assoclab {

namespace {

class UnionFind {
 public:
  std::uint32_t Add() {
    parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
    return parent_.back();
  }
  std::uint32_t Find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::uint32_t a, std::uint32_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

AcReport AcExplore(const FiniteLocalGroupoid& grp, std::size_t max_len, std::size_t max_words,
                   std::size_t headroom) {
  if (max_len == 0) throw std::invalid_argument("AcExplore: max_len must be positive");
  const std::size_t limit = max_len + headroom;
  const std::uint64_t radix = grp.element_count() + 1;
  if (limit * std::log2(static_cast<double>(radix)) >= 63) {
    throw std::invalid_argument("AcExplore: too many elements for this word length");
  }
  // Words are keyed by their digits in base (element count + 1), most
  // significant letter first, with digit 0 unused.
  auto encode = [&](const Word<ElementId>& w) {
    std::uint64_t key = 0;
    for (ElementId e : w) key = key * radix + Index(e) + 1;
    return key;
  };

  AcReport report;
  report.max_len = max_len;
  report.headroom = headroom;
  std::vector<Word<ElementId>> words;
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  UnionFind uf;

  std::vector<Word<ElementId>> layer;
  for (std::uint32_t i = 0; i < grp.element_count(); ++i) layer.push_back({ElementId(i)});
  for (std::size_t len = 1; len <= limit && !layer.empty(); ++len) {
    for (auto& w : layer) {
      if (words.size() >= max_words) {
        report.complete = false;
        break;
      }
      ids.emplace(encode(w), uf.Add());
      words.push_back(w);
    }
    if (!report.complete || len == limit) break;
    std::vector<Word<ElementId>> next;
    for (const auto& w : layer) {
      for (std::uint32_t i = 0; i < grp.element_count(); ++i) {
        const ElementId e{i};
        if (grp.Source(w.back()) != grp.Target(e)) continue;
        Word<ElementId> longer = w;
        longer.push_back(e);
        next.push_back(std::move(longer));
      }
    }
    layer = std::move(next);
  }
  report.words = words.size();

  for (std::uint32_t id = 0; id < words.size(); ++id) {
    const auto& w = words[id];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      auto p = grp.TryMul(w[i], w[i + 1]);
      if (!p) continue;
      Word<ElementId> shorter(w.begin(), w.begin() + i);
      shorter.push_back(*p);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      auto it = ids.find(encode(shorter));
      if (it != ids.end()) uf.Union(id, it->second);
    }
  }

  // Words were enumerated shortest first and lexicographically within a
  // length, so the first member met is the representative.
  std::unordered_map<std::uint32_t, std::size_t> class_of;
  for (std::uint32_t id = 0; id < words.size(); ++id) {
    if (words[id].size() > max_len) break;
    const std::uint32_t root = uf.Find(id);
    auto [it, fresh] = class_of.emplace(root, report.classes.size());
    if (fresh) report.classes.push_back({words[id], false, 0});
    AcClass& c = report.classes[it->second];
    ++c.size;
    c.has_letter = c.has_letter || words[id].size() == 1;
  }
  return report;
}

}  // namespace assoclab
