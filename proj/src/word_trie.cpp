#include "badladder/word_trie.hpp"

#include <algorithm>

#include "badladder/errors.hpp"

namespace badladder {

WordTrie::WordTrie(std::size_t basis_size) : stride_(2 * basis_size) {
  parent_.push_back(kAbsent);
  last_.push_back(0);
  children_.assign(stride_, kAbsent);
}

ElementId WordTrie::multiply(ElementId g, Letter x) {
  if (g != kIdentity && cancels(Letter::from_code(last_[g]), x)) return parent_[g];
  const std::size_t slot = g * stride_ + x.code();
  if (children_[slot] != kAbsent) return children_[slot];
  if (parent_.size() >= kAbsent - 1) throw ResourceLimitError("word trie is full");
  const auto id = static_cast<ElementId>(parent_.size());
  parent_.push_back(g);
  last_.push_back(x.code());
  children_.resize(children_.size() + stride_, kAbsent);
  children_[slot] = id;
  return id;
}

ElementId WordTrie::multiply(ElementId g, std::span<const Letter> word) {
  for (Letter x : word) g = multiply(g, x);
  return g;
}

ElementId WordTrie::find_multiply(ElementId g, Letter x) const {
  if (g != kIdentity && cancels(Letter::from_code(last_[g]), x)) return parent_[g];
  return children_[g * stride_ + x.code()];
}

ElementId WordTrie::find_multiply(ElementId g, std::span<const Letter> word) const {
  for (Letter x : word) {
    if (g == kAbsent) return kAbsent;
    g = find_multiply(g, x);
  }
  return g;
}

NormalForm WordTrie::word(ElementId g) const {
  std::vector<Letter> letters;
  for (; g != kIdentity; g = parent_[g]) letters.push_back(Letter::from_code(last_[g]));
  std::reverse(letters.begin(), letters.end());
  return free_reduce(letters);
}

std::size_t WordTrie::length(ElementId g) const {
  std::size_t n = 0;
  for (; g != kIdentity; g = parent_[g]) ++n;
  return n;
}

}  // namespace badladder
