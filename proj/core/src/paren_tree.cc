#include "assoclab/paren_tree.h"

#include <map>

namespace assoclab {

ParenTree ParenTree::Join(const ParenTree& left, const ParenTree& right) {
  std::vector<std::uint8_t> splits;
  splits.reserve(left.splits_.size() + right.splits_.size() + 1);
  splits.push_back(static_cast<std::uint8_t>(left.leaves_));
  splits.insert(splits.end(), left.splits_.begin(), left.splits_.end());
  splits.insert(splits.end(), right.splits_.begin(), right.splits_.end());
  return ParenTree(left.leaves_ + right.leaves_, std::move(splits));
}

std::string ParenTree::Render(std::span<const std::string> names) const {
  if (names.size() != leaves_) throw std::invalid_argument("Render: wrong number of leaf names");
  bool single = true;
  for (const auto& n : names) single = single && n.size() == 1;
  const std::string sep = single ? "" : "*";
  // Children that are themselves products get brackets; the root does not.
  auto leaf = [&](std::size_t i) { return std::make_pair(names[i], true); };
  auto combine = [&](const std::pair<std::string, bool>& l, const std::pair<std::string, bool>& r) {
    auto wrap = [](const std::pair<std::string, bool>& x) {
      return x.second ? x.first : "(" + x.first + ")";
    };
    return std::make_pair(wrap(l) + sep + wrap(r), false);
  };
  return detail::FoldTree(*this, leaf, combine).first;
}

std::string ParenTree::ToString() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < leaves_; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + (i % 26))));
  }
  return Render(names);
}

std::size_t CatalanNumber(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::vector<ParenTree> EnumerateParenTrees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("EnumerateParenTrees: need at least one leaf");
  if (n > kMaxTreeLeaves) throw TooLong("EnumerateParenTrees: at most 12 leaves");
  std::vector<std::vector<ParenTree>> by_size(n + 1);
  by_size[1].push_back(ParenTree::Leaf());
  for (std::size_t m = 2; m <= n; ++m) {
    for (std::size_t k = 1; k < m; ++k) {
      for (const auto& l : by_size[k]) {
        for (const auto& r : by_size[m - k]) by_size[m].push_back(ParenTree::Join(l, r));
      }
    }
  }
  return std::move(by_size[n]);
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  std::pair<ParenTree, std::string> Parse() {
    ParenTree t = Sequence();
    if (pos_ != text_.size()) Fail("unexpected ')'");
    return {t, letters_};
  }

 private:
  // A sequence of one or two juxtaposed items.
  ParenTree Sequence() {
    std::vector<ParenTree> items;
    while (pos_ < text_.size() && text_[pos_] != ')') {
      const char c = text_[pos_];
      if (c == ' ') {
        ++pos_;
        continue;
      }
      if (c == '(') {
        ++pos_;
        items.push_back(Sequence());
        if (pos_ >= text_.size() || text_[pos_] != ')') Fail("missing ')'");
        ++pos_;
      } else {
        letters_.push_back(c);
        items.push_back(ParenTree::Leaf());
        ++pos_;
      }
    }
    if (items.size() == 1) return items[0];
    if (items.size() == 2) return ParenTree::Join(items[0], items[1]);
    Fail(items.empty() ? "empty group" : "ambiguous juxtaposition of more than two factors");
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw std::invalid_argument("ParseParenTree: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::string letters_;
};

}  // namespace

std::pair<ParenTree, std::string> ParseParenTree(std::string_view text) {
  return TreeParser(text).Parse();
}

}  // namespace assoclab
