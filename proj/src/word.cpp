#include "badladder/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "badladder/errors.hpp"

namespace badladder {

void NormalForm::multiply_letter(Letter x) {
  if (!letters_.empty() && cancels(letters_.back(), x)) {
    letters_.pop_back();
  } else {
    letters_.push_back(x);
  }
}

NormalForm free_reduce(std::span<const Letter> word) {
  NormalForm out;
  for (Letter x : word) out.multiply_letter(x);
  return out;
}

NormalForm invert(const NormalForm& g) {
  NormalForm out;
  auto letters = g.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.multiply_letter(it->inverted());
  }
  return out;
}

NormalForm multiply(const NormalForm& g, const NormalForm& h) {
  NormalForm out = g;
  for (Letter x : h.letters()) out.multiply_letter(x);
  return out;
}

namespace {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_') {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::optional<std::uint8_t> index_of(std::span<const std::string> names,
                                     std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::uint8_t>(it - names.begin());
}

void check_names(const std::vector<std::string>& names, std::string_view what) {
  if (names.empty()) throw UsageError(std::string(what) + " is empty");
  if (names.size() > 64) throw UsageError(std::string(what) + " has more than 64 names");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw UsageError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw UsageError("duplicate generator name '" + n + "'");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

PresentationSpec::PresentationSpec(
    std::vector<std::string> free_basis, std::vector<std::string> cayley_generators,
    const std::map<std::string, std::vector<Letter>>& rewrites)
    : free_basis_(std::move(free_basis)), generators_(std::move(cayley_generators)) {
  check_names(free_basis_, "free basis");
  check_names(generators_, "generating set");

  for (const auto& [name, word] : rewrites) {
    if (!generator_index(name)) {
      throw UsageError("rewrite for unknown generator '" + name + "'");
    }
    for (Letter x : word) {
      if (x.base >= free_basis_.size()) throw UsageError("rewrite letter outside free basis");
    }
  }

  images_.resize(2 * generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const std::string& name = generators_[i];
    const auto basis = basis_index(name);
    const auto rw = rewrites.find(name);
    NormalForm image;
    if (rw != rewrites.end()) {
      image = free_reduce(rw->second);
      if (image.length() != rw->second.size()) {
        throw UsageError("rewrite image of '" + name + "' is not freely reduced");
      }
      if (basis && image != free_reduce(std::vector<Letter>{Letter{*basis, false}})) {
        throw UsageError("free basis generator '" + name + "' must map to itself");
      }
    } else if (basis) {
      image.multiply_letter(Letter{*basis, false});
    } else {
      throw UsageError("generator '" + name + "' has no rewrite into the free basis");
    }
    if (image.is_identity()) {
      throw UsageError("generator '" + name + "' rewrites to the identity");
    }
    const auto idx = static_cast<std::uint8_t>(i);
    images_[GenLetter{idx, false}.code()] = image;
    images_[GenLetter{idx, true}.code()] = invert(image);
  }
}

std::optional<std::uint8_t> PresentationSpec::basis_index(std::string_view name) const {
  return index_of(free_basis_, name);
}

std::optional<std::uint8_t> PresentationSpec::generator_index(std::string_view name) const {
  return index_of(generators_, name);
}

std::string PresentationSpec::letter_name(GenLetter a) const {
  std::string name = generators_.at(a.base);
  if (a.inverse) name += "^-1";
  return name;
}

PresentationSpec default_presentation() {
  const Letter p{0, false};
  const Letter s{1, false};
  return PresentationSpec({"p", "s"}, {"p", "q", "s"},
                          {{"q", {s.inverted(), s.inverted(), p.inverted(), s, s}}});
}

PresentationSpec free_presentation() { return PresentationSpec({"p", "s"}, {"p", "s"}, {}); }

NormalForm q_image() {
  static const PresentationSpec spec = default_presentation();
  return spec.image(GenLetter{1, false});
}

NormalForm apply_gen(const PresentationSpec& spec, const NormalForm& g, GenLetter a) {
  return multiply(g, spec.image(a));
}

std::vector<Letter> parse_word(std::string_view text, std::span<const std::string> basis) {
  std::vector<Letter> out;
  for (const auto& tok : split_names(text)) {
    std::string_view t = tok;
    std::string_view name = t;
    long exponent = 1;
    if (auto caret = t.find('^'); caret != std::string_view::npos) {
      name = t.substr(0, caret);
      std::string_view num = t.substr(caret + 1);
      if (!num.empty() && num.front() == '+') num.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), exponent);
      if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size()) {
        throw UsageError("bad exponent in '" + tok + "'");
      }
      if (exponent > 10000 || exponent < -10000) {
        throw UsageError("exponent out of range in '" + tok + "'");
      }
    }
    const auto idx = index_of(basis, name);
    if (!idx) throw UsageError("unknown letter '" + std::string(name) + "'");
    const Letter x{*idx, exponent < 0};
    for (long k = 0; k < std::abs(exponent); ++k) out.push_back(x);
  }
  return out;
}

std::string format_word(std::span<const Letter> word, std::span<const std::string> basis) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    const long run = static_cast<long>(j - i) * word[i].sign();
    if (!out.empty()) out += ' ';
    out += basis[word[i].base];
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

PresentationSpec parse_presentation(std::string_view text) {
  std::optional<std::vector<std::string>> basis;
  std::optional<std::vector<std::string>> gens;
  std::vector<std::pair<std::string, std::string>> raw_rewrites;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw UsageError("line " + std::to_string(line_no) + ": expected 'key: value'");
    }
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    if (key == "free_basis") {
      if (basis) throw UsageError("duplicate free_basis line");
      basis = split_names(value);
    } else if (key == "gens") {
      if (gens) throw UsageError("duplicate gens line");
      gens = split_names(value);
    } else if (key == "rewrite") {
      const auto arrow = value.find("->");
      if (arrow == std::string_view::npos) {
        throw UsageError("line " + std::to_string(line_no) + ": rewrite needs '->'");
      }
      raw_rewrites.emplace_back(std::string(trim(value.substr(0, arrow))),
                                std::string(trim(value.substr(arrow + 2))));
    } else {
      throw UsageError("line " + std::to_string(line_no) + ": unknown key '" +
                       std::string(key) + "'");
    }
  }
  if (!basis) throw UsageError("missing free_basis line");
  if (!gens) throw UsageError("missing gens line");

  std::map<std::string, std::vector<Letter>> rewrites;
  for (const auto& [name, word] : raw_rewrites) {
    if (!rewrites.emplace(name, parse_word(word, *basis)).second) {
      throw UsageError("duplicate rewrite for '" + name + "'");
    }
  }
  return PresentationSpec(std::move(*basis), std::move(*gens), rewrites);
}

std::string to_text(const PresentationSpec& spec) {
  std::string out = "free_basis:";
  for (const auto& b : spec.free_basis()) out += " " + b;
  out += "\ngens:";
  for (const auto& g : spec.cayley_generators()) out += " " + g;
  out += "\n";
  for (std::size_t i = 0; i < spec.generator_count(); ++i) {
    const auto& name = spec.cayley_generators()[i];
    if (spec.basis_index(name)) continue;
    const auto& image = spec.image(GenLetter{static_cast<std::uint8_t>(i), false});
    out += "rewrite: " + name + " -> " + format_word(image.letters(), spec.free_basis()) + "\n";
  }
  return out;
}

}  // namespace badladder
