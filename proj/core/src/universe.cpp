#include "framechoice/universe.hpp"

#include <algorithm>
#include <unordered_set>

#include "framechoice/errors.hpp"

namespace framechoice {

std::vector<Alternative> Frame::members() const {
  std::vector<Alternative> out;
  for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool frame_lex_less(Frame a, Frame b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DataError("universe must contain at least one alternative");
  if (static_cast<int>(names_.size()) > kMaxAlternatives) {
    throw DataError("universe has " + std::to_string(names_.size()) + " alternatives; the cap is " +
                    std::to_string(kMaxAlternatives));
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw DataError("alternative labels must be non-empty");
    if (name.find_first_of("|,") != std::string::npos) {
      throw DataError("alternative label '" + name + "' contains a reserved character ('|' or ',')");
    }
    if (!seen.insert(name).second) throw DataError("duplicate alternative label '" + name + "'");
  }
}

Universe Universe::letters(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  }
  return Universe(std::move(names));
}

std::optional<Alternative> Universe::find(std::string_view label) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == label) return static_cast<Alternative>(i);
  }
  return std::nullopt;
}

Alternative Universe::index_of(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw DataError("unknown alternative '" + std::string(label) + "'");
}

std::string Universe::format(Frame f) const {
  std::string out;
  for (Alternative x : f.members()) {
    if (!out.empty()) out += '|';
    out += name(x);
  }
  return out;
}

Frame Universe::parse_frame(std::string_view text) const {
  Frame f;
  if (text.empty()) return f;
  std::size_t start = 0;
  while (true) {
    const auto bar = text.find('|', start);
    const auto label = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    const Alternative x = index_of(label);
    if (f.contains(x)) throw DataError("label '" + std::string(label) + "' repeated in frame");
    f = f.with(x);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return f;
}

std::string Universe::pretty(Frame f) const {
  std::string out = "{";
  bool first = true;
  for (Alternative x : f.members()) {
    if (!first) out += ',';
    out += name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace framechoice
