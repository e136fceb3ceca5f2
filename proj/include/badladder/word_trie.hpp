#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "badladder/word.hpp"

namespace badladder {

using ElementId = std::uint32_t;

/// Interning table for normal forms: a prefix trie over the free basis, i.e.
/// a lazily materialised piece of the free group's Cayley tree. Each node is
/// one reduced word, so two interned elements are equal iff their ids are.
///
/// Not thread-safe for insertion; lookups on a finished trie are.
class WordTrie {
 public:
  static constexpr ElementId kIdentity = 0;
  static constexpr ElementId kAbsent = std::numeric_limits<ElementId>::max();

  explicit WordTrie(std::size_t basis_size);

  std::size_t size() const { return parent_.size(); }

  /// g*x, inserting the node if needed.
  ElementId multiply(ElementId g, Letter x);
  ElementId multiply(ElementId g, std::span<const Letter> word);
  /// g*x without inserting; kAbsent if the node was never created.
  ElementId find_multiply(ElementId g, Letter x) const;
  ElementId find_multiply(ElementId g, std::span<const Letter> word) const;

  ElementId intern(const NormalForm& w) { return multiply(kIdentity, w.letters()); }
  ElementId find(const NormalForm& w) const { return find_multiply(kIdentity, w.letters()); }

  NormalForm word(ElementId g) const;
  std::size_t length(ElementId g) const;

 private:
  std::size_t stride_;
  std::vector<ElementId> parent_;
  std::vector<std::uint8_t> last_;   // Letter::code() of the final letter
  std::vector<ElementId> children_;  // stride_ slots per node
};

}  // namespace badladder
