#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "framechoice/detfum.hpp"
#include "framechoice/errors.hpp"
#include "framechoice/fluce.hpp"
#include "framechoice/frum.hpp"
#include "framechoice/parse.hpp"
#include "framechoice/plot.hpp"
#include "framechoice/polys.hpp"
#include "framechoice/serialize.hpp"
#include "framechoice/sim.hpp"
#include "framechoice/validate.hpp"

namespace framechoice::cli {

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string format = "json";
  std::string numeric = "float";
  double epsilon = 1e-9;
  std::uint64_t seed = 0;
  bool timings = false;

  bool dot = false;
  int n = 3;
  std::string method = "branch";
  std::string kind;
  std::string emit = "data";
  double sparsity = 1.0;
  double noise = 0.0;
  std::string u_list;
  std::string v_list;
  std::string boost;
  std::string base;
  std::string lambda;
  std::string labels;
  std::string project;
};

struct Outcome {
  Outcome() = default;
  Outcome(Json r, int c = kOk, std::optional<std::string> text = std::nullopt)
      : result(std::move(r)), code(c), raw(std::move(text)) {}

  Json result;
  int code = kOk;
  std::optional<std::string> raw;  // non-JSON output (dot, csv)
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

template <class T>
StochasticChoiceData<T> load(const std::string& text, const Options& o) {
  if (looks_like_json(text)) {
    try {
      return stochastic_from_json<T>(Json::parse(text), o.epsilon);
    } catch (const Json::parse_error& e) {
      throw DataError(std::string("invalid JSON: ") + e.what());
    }
  }
  return parse_stochastic<T>(text, o.epsilon);
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  if (text.empty()) throw PreconditionError(std::string("missing --") + what);
  std::vector<T> out;
  for (const std::string& part : split(text, ',')) out.push_back(Num<T>::parse(part));
  return out;
}

Universe labels_or_letters(const std::string& labels, int n) {
  if (labels.empty()) return Universe::letters(n);
  Universe u(split(labels, ','));
  if (u.size() != n) throw PreconditionError("--labels must name every alternative");
  return u;
}

template <class T>
Outcome preset(const Options& o) {
  FLuceParams<T> p;
  if (o.kind == "constant_boost") {
    p = preset_constant_boost(parse_list<T>(o.u_list, "u"), Num<T>::parse(o.boost.empty() ? "" : o.boost));
  } else if (o.kind == "constant_base") {
    p = preset_constant_base(Num<T>::parse(o.base), parse_list<T>(o.v_list, "v"));
  } else {
    p = preset_proportional(parse_list<T>(o.u_list, "u"), Num<T>::parse(o.lambda));
  }
  return {to_json(p, labels_or_letters(o.labels, static_cast<int>(p.u.size())))};
}

template <class T>
Outcome simulate(const Options& o) {
  SimConfig config{o.seed, o.n, o.sparsity, o.noise};
  config.check();
  const std::vector<Frame> frames = all_frames(o.n);
  std::optional<StochasticChoiceData<T>> data;
  if (o.kind == "mu") {
    const auto mu = sample_mu<T>(config);
    if (o.emit == "params") return {to_json(mu)};
    data = forward_frum(mu, frames, o.epsilon);
  } else if (o.kind == "fluce") {
    const auto params = sample_fluce<T>(config);
    const Universe u = Universe::letters(o.n);
    if (o.emit == "params") return {to_json(params, u)};
    data = forward_fluce(params, u, frames, o.epsilon);
  } else {
    if (o.emit == "params") throw PreconditionError("--kind arbitrary has no parameters to emit");
    data = sample_arbitrary<T>(config);
  }
  if (o.noise > 0.0) data = perturb(*data, config);
  if (o.format == "csv") return {Json(), kOk, to_csv(*data)};
  return {to_json(*data)};
}

template <class T>
Outcome analyze(const std::string& cmd, const Options& o, const std::string& text) {
  if (cmd == "preset") return preset<T>(o);
  if (cmd == "simulate") return simulate<T>(o);
  if (cmd == "embed-check") {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw DataError(std::string("invalid JSON: ") + e.what());
    }
    const Universe u = universe_from_params_json(j);
    const auto check = embed_check(fluce_params_from_json<T>(j, u), u);
    return {{{"accepted", check.accepted}, {"frum", to_json(check.verdict, u)}}, check.accepted ? kOk : kRejected};
  }

  const auto data = load<T>(text, o);
  const Universe& u = data.universe();
  if (cmd == "validate") return {to_json(validate(data), u)};
  if (cmd == "bm") {
    const auto table = compute_bm(data);
    if (o.format == "csv") {
      std::ostringstream csv;
      csv << "# universe: " << u.format(u.full_frame()) << "\nkind,alternative,frame,value\n";
      for (std::uint32_t b = 0; b < u.frame_count(); ++b) {
        for (Alternative a = 0; a < u.size(); ++a) {
          csv << (Frame(b).contains(a) ? "q" : "y") << ',' << u.name(a) << ',' << u.format(Frame(b)) << ','
              << Num<T>::format(table.at(a, Frame(b))) << '\n';
        }
      }
      return {Json(), kOk, csv.str()};
    }
    T worst = 0;
    for (const T& r : flow_residuals(table)) worst = std::max(worst, abs_value(r));
    return {{{"polynomials", to_json(table, u)}, {"max_flow_residual", number_json(worst)}}};
  }
  if (cmd == "hasse") {
    const HasseGraph g = export_hasse(compute_bm(data));
    if (o.dot) return {Json(), kOk, to_dot(g, u)};
    return {to_json(g, u)};
  }
  if (cmd == "test-frum") {
    const auto verdict = test_frum(data);
    return {to_json(verdict, u), verdict.accepted ? kOk : kRejected};
  }
  if (cmd == "recover") {
    try {
      const auto mu = o.method == "constructive" ? recover_constructive(data) : recover_branch_independent(data);
      return {{{"method", o.method}, {"distribution", to_json(mu)}}};
    } catch (const ModelError& e) {
      return {{{"method", o.method}, {"error", e.what()}, {"frum", to_json(test_frum(data), u)}}, kRejected};
    }
  }
  if (cmd == "feasible") {
    const auto f = feasible_completion(data);
    return {to_json(f, u), f.feasible ? kOk : kRejected};
  }
  if (cmd == "test-fluce") {
    const auto t = test_fluce(data);
    return {to_json(t, u), t.accepted ? kOk : kRejected};
  }
  if (cmd == "fit-fluce") {
    try {
      return {to_json(fit_fluce(data), u)};
    } catch (const ModelError& e) {
      return {{{"error", e.what()}}, kRejected};
    }
  }
  if (cmd == "plot") {
    std::optional<std::array<Alternative, 3>> projection;
    if (!o.project.empty()) {
      const auto parts = split(o.project, ',');
      if (parts.size() != 3) throw PreconditionError("--project needs three labels");
      projection = std::array<Alternative, 3>{u.index_of(parts[0]), u.index_of(parts[1]), u.index_of(parts[2])};
    }
    return {to_json(plot_simplex(data, projection))};
  }
  throw PreconditionError("unknown command " + cmd);
}

Outcome deterministic(const std::string& cmd, const std::string& text) {
  const auto c = parse_deterministic(text);
  const Universe& u = c.universe();
  if (cmd == "test-fum") {
    const auto report = check_iifa(c);
    return {to_json(report, u), report.iifa() ? kOk : kRejected};
  }
  try {
    const FumFit fit = build_fum_representation(c);
    Json order = Json::array();
    for (int e : fit.order) order.push_back(e >= 0 ? u.name(e) : u.name(-e - 1) + "*");
    Json result = {{"method", fit.method == FumMethod::kRevealedOrder ? "revealed_order" : "type_search"},
                   {"representation", to_json(fit.rep, u)},
                   {"order", order}};
    if (fit.type) {
      result["type"] = to_json(*fit.type, u);
      result["type"]["label"] = describe(*fit.type, u);
    }
    return {result};
  } catch (const IifaViolation& e) {
    return {{{"error", e.what()}, {"axioms", to_json(e.report(), u)}}, kRejected};
  }
}

Outcome enumerate(int n) {
  const Universe u = Universe::letters(n);
  Json types = Json::array();
  for (const ChoiceType& t : enumerate_types(n)) {
    Json j = to_json(t, u);
    j["label"] = describe(t, u);
    types.push_back(std::move(j));
  }
  return {{{"n", n}, {"count", types.size()}, {"types", types}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Analysis of frame-dependent choice data"};
  app.name(args.empty() ? "framechoice" : args.front());
  app.require_subcommand(1);

  auto common = [&o](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--in", o.in, "input file (CSV or JSON)");
    if (needs_input) in->required();
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--numeric", o.numeric, "numeric mode")->check(CLI::IsMember({"float", "rational"}));
    sub->add_option("--epsilon", o.epsilon, "float tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_flag("--timings", o.timings, "add wall-clock timings to the report");
  };

  for (const char* name : {"validate", "bm", "test-fum", "repr-fum", "test-frum", "feasible", "test-fluce",
                           "fit-fluce", "embed-check"}) {
    common(app.add_subcommand(name), true);
  }
  auto* hasse = app.add_subcommand("hasse");
  common(hasse, true);
  hasse->add_flag("--dot", o.dot, "emit a Graphviz description");
  auto* recover = app.add_subcommand("recover");
  common(recover, true);
  recover->add_option("--method", o.method)->check(CLI::IsMember({"branch", "constructive"}));
  auto* types = app.add_subcommand("enumerate-types");
  common(types, false);
  types->add_option("--n", o.n)->required();
  auto* pre = app.add_subcommand("preset");
  common(pre, false);
  pre->add_option("--kind", o.kind)->required()->check(
      CLI::IsMember({"constant_boost", "constant_base", "proportional"}));
  pre->add_option("--u", o.u_list, "comma-separated base weights");
  pre->add_option("--v", o.v_list, "comma-separated boosts");
  pre->add_option("--boost", o.boost, "common boost");
  pre->add_option("--base", o.base, "common base weight");
  pre->add_option("--lambda", o.lambda, "proportionality factor");
  pre->add_option("--labels", o.labels, "comma-separated alternative labels");
  auto* sim = app.add_subcommand("simulate");
  common(sim, false);
  sim->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"mu", "fluce", "arbitrary"}));
  sim->add_option("--n", o.n)->required();
  sim->add_option("--emit", o.emit)->check(CLI::IsMember({"data", "params"}));
  sim->add_option("--sparsity", o.sparsity);
  sim->add_option("--noise", o.noise);
  auto* plot = app.add_subcommand("plot");
  common(plot, true);
  plot->add_option("--project", o.project, "three labels to project onto");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("framechoice");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageOrDataError;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    const auto start = std::chrono::steady_clock::now();
    const std::string text = o.in.empty() ? std::string() : read_file(o.in);
    if (o.format == "csv" && cmd != "bm" && cmd != "simulate") {
      throw PreconditionError("--format csv is only available for bm and simulate");
    }
    Outcome outcome;
    if (cmd == "test-fum" || cmd == "repr-fum") {
      outcome = deterministic(cmd, text);
    } else if (cmd == "enumerate-types") {
      outcome = enumerate(o.n);
    } else if (o.numeric == "rational") {
      outcome = analyze<Rational>(cmd, o, text);
    } else {
      outcome = analyze<double>(cmd, o, text);
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

    std::string payload;
    if (outcome.raw) {
      payload = *outcome.raw;
    } else {
      Json report = {{"command", cmd},
                     {"input_digest", o.in.empty() ? Json(nullptr) : Json(digest(text))},
                     {"numeric", o.numeric},
                     {"epsilon", o.epsilon},
                     {"result", outcome.result}};
      if (cmd == "simulate") report["seed"] = o.seed;
      if (o.timings) report["timings"] = {{"elapsed_ms", elapsed.count()}};
      payload = report.dump(2) + "\n";
    }
    if (o.out.empty()) {
      out << payload;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw DataError("cannot write " + o.out);
      file << payload;
    }
    return outcome.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrDataError;
  }
}

}  // namespace framechoice::cli
