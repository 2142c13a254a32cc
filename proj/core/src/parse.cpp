#include "framechoice/parse.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "framechoice/errors.hpp"

namespace framechoice {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
}

struct CsvTable {
  std::optional<std::vector<std::string>> universe;  // from `# universe:` comment
  std::vector<std::pair<int, std::vector<std::string_view>>> rows;  // (line number, fields)
};

CsvTable read_csv(std::string_view text, const std::vector<std::string_view>& header) {
  CsvTable table;
  bool header_seen = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      constexpr std::string_view kKey = "universe:";
      if (body.substr(0, kKey.size()) == kKey) {
        std::vector<std::string> names;
        for (auto label : split(trim(body.substr(kKey.size())), '|')) names.emplace_back(label);
        table.universe = std::move(names);
      }
      continue;
    }
    auto fields = split(line, ',');
    if (!header_seen) {
      if (fields != header) {
        std::string expected;
        for (auto h : header) expected += (expected.empty() ? "" : ",") + std::string(h);
        throw DataError("expected header '" + expected + "'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != header.size()) {
      throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                      " fields");
    }
    table.rows.emplace_back(line_no, std::move(fields));
    if (end == text.size()) break;
  }
  if (!header_seen) throw DataError("missing CSV header");
  return table;
}

Universe infer_universe(const CsvTable& table, const std::vector<int>& label_columns,
                        const std::vector<int>& frame_columns) {
  if (table.universe) return Universe(*table.universe);
  std::set<std::string> labels;
  for (const auto& [line, fields] : table.rows) {
    for (int c : label_columns) labels.emplace(fields[static_cast<std::size_t>(c)]);
    for (int c : frame_columns) {
      if (fields[static_cast<std::size_t>(c)].empty()) continue;
      for (auto label : split(fields[static_cast<std::size_t>(c)], '|')) labels.emplace(label);
    }
  }
  // No labels and no explicit universe: an empty dataset.
  if (labels.empty()) return Universe{};
  return Universe(std::vector<std::string>(labels.begin(), labels.end()));
}

std::string line_prefix(int line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

template <class T>
StochasticChoiceData<T> parse_stochastic(std::string_view text, double epsilon) {
  const CsvTable table = read_csv(text, {"frame", "alternative", "probability"});
  const Universe universe = infer_universe(table, {1}, {0});
  const int n = universe.size();

  std::map<Frame, std::vector<std::optional<T>>> rows;
  for (const auto& [line, fields] : table.rows) {
    try {
      const Frame frame = universe.parse_frame(fields[0]);
      const Alternative x = universe.index_of(fields[1]);
      T p = Num<T>::parse(fields[2]);
      if (is_negative(p, 0.0) || is_negative(T(T(1) - p), 0.0)) {
        throw DataError("probability " + std::string(fields[2]) + " outside [0,1]");
      }
      auto& row = rows[frame];
      row.resize(static_cast<std::size_t>(n));
      auto& slot = row[static_cast<std::size_t>(x)];
      if (slot) {
        throw DataError("duplicate row for (" + universe.name(x) + ", " + universe.pretty(frame) + ")");
      }
      slot = std::move(p);
    } catch (const DataError& e) {
      throw DataError(line_prefix(line) + e.what());
    }
  }

  std::vector<std::pair<Frame, std::vector<T>>> complete;
  complete.reserve(rows.size());
  for (auto& [frame, row] : rows) {
    std::vector<T> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      auto& slot = row[static_cast<std::size_t>(x)];
      if (!slot) {
        throw DataError("missing probability for (" + universe.name(x) + ", " + universe.pretty(frame) + ")");
      }
      values.push_back(std::move(*slot));
    }
    complete.emplace_back(frame, std::move(values));
  }
  return StochasticChoiceData<T>(universe, std::move(complete), epsilon);
}

DeterministicChoiceData parse_deterministic(std::string_view text) {
  const CsvTable table = read_csv(text, {"frame", "choice"});
  const Universe universe = infer_universe(table, {1}, {0});
  std::vector<std::pair<Frame, Alternative>> choices;
  std::set<Frame> seen;
  for (const auto& [line, fields] : table.rows) {
    try {
      const Frame frame = universe.parse_frame(fields[0]);
      const Alternative x = universe.index_of(fields[1]);
      if (!seen.insert(frame).second) throw DataError("duplicate frame " + universe.pretty(frame));
      choices.emplace_back(frame, x);
    } catch (const DataError& e) {
      throw DataError(line_prefix(line) + e.what());
    }
  }
  return DeterministicChoiceData(universe, std::move(choices));
}

template <class T>
std::string to_csv(const StochasticChoiceData<T>& data) {
  const Universe& u = data.universe();
  std::ostringstream out;
  out << "# universe: " << u.format(u.full_frame()) << '\n';
  out << "frame,alternative,probability\n";
  for (std::size_t i = 0; i < data.frames().size(); ++i) {
    const auto row = data.row_at(i);
    for (int x = 0; x < data.n(); ++x) {
      out << u.format(data.frames()[i]) << ',' << u.name(x) << ',' << Num<T>::format(row[static_cast<std::size_t>(x)])
          << '\n';
    }
  }
  return out.str();
}

std::string to_csv(const DeterministicChoiceData& data) {
  const Universe& u = data.universe();
  std::ostringstream out;
  out << "# universe: " << u.format(u.full_frame()) << '\n';
  out << "frame,choice\n";
  for (std::size_t i = 0; i < data.frames().size(); ++i) {
    out << u.format(data.frames()[i]) << ',' << u.name(data.choices()[i]) << '\n';
  }
  return out.str();
}

template StochasticChoiceData<double> parse_stochastic<double>(std::string_view, double);
template StochasticChoiceData<Rational> parse_stochastic<Rational>(std::string_view, double);
template std::string to_csv<double>(const StochasticChoiceData<double>&);
template std::string to_csv<Rational>(const StochasticChoiceData<Rational>&);

}  // namespace framechoice
