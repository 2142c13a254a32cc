#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace framechoice {

// Index of an alternative inside its Universe.
using Alternative = int;

inline constexpr int kMaxAlternatives = 20;

// A set of framed alternatives, encoded as an n-bit set. The empty frame is a
// valid frame (nothing is framed).
struct Frame {
  std::uint32_t bits = 0;

  constexpr Frame() = default;
  constexpr explicit Frame(std::uint32_t b) : bits(b) {}

  static constexpr Frame singleton(Alternative x) { return Frame(1u << x); }
  static constexpr Frame full(int n) { return Frame(n >= 32 ? ~0u : (1u << n) - 1u); }

  constexpr bool contains(Alternative x) const { return (bits >> x) & 1u; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool subset_of(Frame other) const { return (bits & ~other.bits) == 0; }

  constexpr Frame with(Alternative x) const { return Frame(bits | (1u << x)); }
  constexpr Frame without(Alternative x) const { return Frame(bits & ~(1u << x)); }

  constexpr Frame operator|(Frame o) const { return Frame(bits | o.bits); }
  constexpr Frame operator&(Frame o) const { return Frame(bits & o.bits); }
  constexpr Frame operator^(Frame o) const { return Frame(bits ^ o.bits); }
  // Set difference.
  constexpr Frame operator-(Frame o) const { return Frame(bits & ~o.bits); }

  constexpr auto operator<=>(const Frame&) const = default;

  // Member indices in increasing order.
  std::vector<Alternative> members() const;
};

// Lexicographic order on the sorted member index lists: {} < {0} < {0,1} < {1}.
bool frame_lex_less(Frame a, Frame b);

// Ordered list of distinct alternative labels.
class Universe {
 public:
  Universe() = default;
  // Throws DataError on empty, duplicate or reserved-character labels and on
  // more than kMaxAlternatives entries.
  explicit Universe(std::vector<std::string> names);

  // Labels "a", "b", ... (or x0, x1, ... past 26).
  static Universe letters(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Alternative x) const { return names_.at(static_cast<std::size_t>(x)); }
  std::optional<Alternative> find(std::string_view label) const;
  // Throws DataError for unknown labels.
  Alternative index_of(std::string_view label) const;

  Frame full_frame() const { return Frame::full(size()); }
  std::uint32_t frame_count() const { return 1u << size(); }

  // "a|c" style encoding; empty string for the empty frame.
  std::string format(Frame f) const;
  Frame parse_frame(std::string_view text) const;
  // Human-readable "{a,c}" form used in reports and graph labels.
  std::string pretty(Frame f) const;

  bool operator==(const Universe&) const = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace framechoice
