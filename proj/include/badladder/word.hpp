#pragma once

// Group elements as freely reduced words over a free basis, and a
// data-driven presentation that rewrites each Cayley generator into that
// basis. The default instance is <p,q,s | s^-2 p s^2 q>, where the relator
// forces q = s^-2 p^-1 s^2 and the group is free on {p, s}.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace badladder {

namespace detail {
struct FreeBasisTag {};
struct GeneratorTag {};
}  // namespace detail

/// A letter x^{+1} or x^{-1}; `base` indexes either the free basis or the
/// Cayley generating set depending on the tag.
template <class Tag>
struct BasicLetter {
  std::uint8_t base = 0;
  bool inverse = false;

  constexpr int sign() const { return inverse ? -1 : 1; }
  constexpr BasicLetter inverted() const { return {base, !inverse}; }
  /// Small integer code: 2*base + (inverse ? 1 : 0).
  constexpr std::uint8_t code() const {
    return static_cast<std::uint8_t>(base * 2 + (inverse ? 1 : 0));
  }
  static constexpr BasicLetter from_code(std::uint8_t c) {
    return {static_cast<std::uint8_t>(c / 2), (c % 2) != 0};
  }

  friend constexpr auto operator<=>(BasicLetter, BasicLetter) = default;
};

using Letter = BasicLetter<detail::FreeBasisTag>;
using GenLetter = BasicLetter<detail::GeneratorTag>;

constexpr bool cancels(Letter a, Letter b) {
  return a.base == b.base && a.inverse != b.inverse;
}

/// Freely reduced word. Only constructible through free_reduce and the
/// operations below, so every instance satisfies the reduction invariant.
class NormalForm {
 public:
  NormalForm() = default;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  /// Right-multiplies by one letter in place, cancelling if possible.
  void multiply_letter(Letter x);

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;

 private:
  std::vector<Letter> letters_;
};

NormalForm free_reduce(std::span<const Letter> word);
NormalForm invert(const NormalForm& g);
NormalForm multiply(const NormalForm& g, const NormalForm& h);

/// A presentation whose word problem is solved by rewriting every Cayley
/// generator into a free basis.
class PresentationSpec {
 public:
  /// Throws UsageError if a generator has no image, a basis generator is
  /// rewritten to anything but itself, a name is unknown or duplicated, or
  /// an image is not freely reduced (or trivial).
  PresentationSpec(std::vector<std::string> free_basis,
                   std::vector<std::string> cayley_generators,
                   const std::map<std::string, std::vector<Letter>>& rewrites);

  std::span<const std::string> free_basis() const { return free_basis_; }
  std::span<const std::string> cayley_generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }

  /// Image of a^{+-1} as a normal form over the free basis.
  const NormalForm& image(GenLetter a) const { return images_[a.code()]; }

  std::optional<std::uint8_t> basis_index(std::string_view name) const;
  std::optional<std::uint8_t> generator_index(std::string_view name) const;

  /// Name of a generator letter, e.g. "q" or "q^-1".
  std::string letter_name(GenLetter a) const;

  friend bool operator==(const PresentationSpec&, const PresentationSpec&) = default;

 private:
  std::vector<std::string> free_basis_;
  std::vector<std::string> generators_;
  std::vector<NormalForm> images_;  // indexed by GenLetter::code()
};

/// <p,q,s | s^-2 p s^2 q>, free on {p, s}.
PresentationSpec default_presentation();
/// <p,s | >: the Cayley graph is the 4-regular tree.
PresentationSpec free_presentation();

/// s^-2 p^-1 s^2, the element q of the default presentation.
NormalForm q_image();

/// Normal form of g*a.
NormalForm apply_gen(const PresentationSpec& spec, const NormalForm& g, GenLetter a);

/// Parses the line-oriented presentation format:
///   free_basis: p s
///   gens: p q s
///   rewrite: q -> s^-2 p^-1 s^2
/// Blank lines and `#` comments are ignored.
PresentationSpec parse_presentation(std::string_view text);
std::string to_text(const PresentationSpec& spec);

/// Parses `x^k` tokens over the given basis names into raw letters.
std::vector<Letter> parse_word(std::string_view text, std::span<const std::string> basis);
/// Formats with run-length exponents, e.g. "s^-2 p^-1 s^2"; identity is "e".
std::string format_word(std::span<const Letter> word, std::span<const std::string> basis);

}  // namespace badladder
