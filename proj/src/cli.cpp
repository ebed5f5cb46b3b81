#include "raagmcg/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "raagmcg/classification.hpp"
#include "raagmcg/oracle.hpp"
#include "raagmcg/subsurface_map.hpp"

namespace raagmcg::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string graph;
  std::string word;
  std::string realization = "std";
  std::string indices;
  std::string format;
  std::optional<std::size_t> min_cap;
  std::optional<std::size_t> search_cap;
  bool complement = false;
  std::string K0 = "10";
  std::string D = "6";
  std::string A = "2";
  std::string B = "10";
  std::string K;
  std::string tau;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t default_cap() {
  if (const char* env = std::getenv("RAAGMCG_CAP")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) {
        return static_cast<std::size_t>(v);
      }
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("RAAGMCG_CAP must be a positive integer, got '") + env + "'");
  }
  return kDefaultCap;
}

nlohmann::json load_json(const std::string& source, const std::string& what) {
  std::string text;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) {
      throw UsageError("cannot read " + what + " file '" + source + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, what + " is not valid JSON: " + e.what());
  }
}

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt) {}

  std::size_t min_cap() const { return opt_.min_cap.value_or(default_cap()); }
  std::size_t search_cap() const { return opt_.search_cap.value_or(default_cap()); }

  const GraphPtr& graph() {
    if (!graph_) {
      if (opt_.graph.empty()) {
        if (opt_.realization != "std") {
          graph_ = realization().graph_ptr();
        } else {
          throw UsageError("--graph is required");
        }
      } else {
        graph_ = graph_from_json(load_json(opt_.graph, "graph"));
      }
    }
    return graph_;
  }

  Word word() { return parse_word(graph(), opt_.word); }

  const Realization& realization() {
    if (!realization_) {
      if (opt_.realization == "std") {
        realization_ = build_standard_realization(graph());
      } else {
        auto r = realization_from_json(load_json(opt_.realization, "realization"));
        if (!opt_.graph.empty() && !(r.graph() == *graph())) {
          throw Error(ErrorCode::GraphMismatch, "realization graph differs from --graph");
        }
        if (!graph_) {
          graph_ = r.graph_ptr();
        }
        realization_ = std::move(r);
      }
      if (auto err = validate_realization(*realization_)) {
        throw *err;
      }
    }
    return *realization_;
  }

 private:
  const Options& opt_;
  GraphPtr graph_;
  std::optional<Realization> realization_;
};

std::string format_or(const Options& opt, const std::string& fallback) {
  return opt.format.empty() ? fallback : opt.format;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const auto* a : allowed) {
    if (fmt == a) {
      return;
    }
  }
  throw UsageError("unsupported --format '" + fmt + "' for this command");
}

Constants constants_from(const Options& opt, const DefiningGraph& graph) {
  auto c = make_constants(graph, parse_rational(opt.K0), parse_rational(opt.D),
                          parse_rational(opt.A), parse_rational(opt.B));
  if (!opt.K.empty()) {
    c.K = parse_rational(opt.K);
    c.C = 2 * c.K;
    for (auto& [v, t] : c.tau) {
      t = c.C;
    }
  }
  if (!opt.tau.empty()) {
    const auto t = parse_rational(opt.tau);
    for (auto& [v, value] : c.tau) {
      value = t;
    }
  }
  return c;
}

ordered_json fill_json(const Realization& r, const FillResult& f) {
  ordered_json j;
  auto comps = ordered_json::array();
  for (const auto& part : f.components) {
    auto labels = ordered_json::array();
    for (auto v : part) {
      labels.push_back(r.graph().label(v));
    }
    comps.push_back(std::move(labels));
  }
  j["components"] = std::move(comps);
  j["fills_ambient"] = f.fills_ambient;
  auto uncovered = ordered_json::array();
  for (auto c : f.uncovered_curves) {
    uncovered.push_back(r.curves()[c]);
  }
  j["uncovered_curves"] = std::move(uncovered);
  return j;
}

ordered_json words_json(const std::vector<Word>& words) {
  auto arr = ordered_json::array();
  for (const auto& w : words) {
    arr.push_back(format(w));
  }
  return arr;
}

void cmd_graph(const Options& opt, Session& s, std::ostream& out) {
  const auto fmt = format_or(opt, "dot");
  require_format(fmt, {"dot", "json"});
  GraphPtr g = s.graph();
  if (opt.complement) {
    g = g->complement();
  }
  if (fmt == "dot") {
    out << to_dot(*g, opt.complement ? "complement" : "graph");
  } else {
    emit(out, to_json(*g));
  }
}

void cmd_normalize(const Options& opt, Session& s, std::ostream& out) {
  const auto fmt = format_or(opt, "text");
  require_format(fmt, {"text", "json"});
  const auto w = s.word();
  const auto n = normalize(w);
  if (fmt == "text") {
    out << format(n) << "\n";
    return;
  }
  ordered_json j;
  j["input"] = format(w);
  j["normal_form"] = format(n);
  j["syllables"] = n.syllable_count();
  j["letter_length"] = n.letter_length().str();
  j["input_minimal"] = n.syllable_count() == w.syllable_count();
  emit(out, j);
}

void cmd_min_enum(const Options& opt, Session& s, std::ostream& out) {
  const auto fmt = format_or(opt, "json");
  require_format(fmt, {"text", "json"});
  const auto words = min_set(s.word(), s.min_cap());
  if (fmt == "text") {
    for (const auto& w : words) {
      out << format(w) << "\n";
    }
    return;
  }
  ordered_json j;
  j["sigma"] = format(normalize(s.word()));
  j["count"] = words.size();
  j["words"] = words_json(words);
  emit(out, j);
}

void cmd_order(const Options& opt, Session& s, std::ostream& out) {
  const auto fmt = format_or(opt, "dot");
  require_format(fmt, {"dot", "json", "text"});
  const auto w = s.word();
  const auto order = syllable_order(w);
  if (fmt == "dot") {
    out << to_dot(order, w.graph());
  } else if (fmt == "json") {
    auto j = to_json(order, w.graph());
    j["sigma"] = format(normalize(w));
    emit(out, j);
  } else {
    for (const auto& [i, k] : order.covering_pairs()) {
      out << format(w.graph(), order.elements()[i]) << " < "
          << format(w.graph(), order.elements()[k]) << "\n";
    }
  }
}

void cmd_reduce(const Options& opt, Session& s, std::ostream& out) {
  const auto fmt = format_or(opt, "json");
  require_format(fmt, {"text", "json"});
  const auto w = s.word();
  const auto red = cyclically_reduce(w);
  if (fmt == "text") {
    out << format(red.reduced) << "\n" << format(red.conjugator) << "\n";
    return;
  }
  ordered_json j;
  j["input"] = format(w);
  j["reduced"] = format(red.reduced);
  j["conjugator"] = format(red.conjugator);
  j["syllables"] = red.reduced.syllable_count();
  emit(out, j);
}

void cmd_realize(const Options& opt, Session& s, std::ostream& out) {
  const auto fmt = format_or(opt, "json");
  require_format(fmt, {"json"});
  const auto& r = s.realization();
  ordered_json j;
  j["realization"] = to_json(r);
  j["valid"] = true;
  if (!opt.indices.empty()) {
    std::istringstream in(opt.indices);
    std::vector<std::string> labels;
    for (std::string t; in >> t;) {
      labels.push_back(t);
    }
    j["fill"] = fill_json(r, fill(r, r.graph().vertex_set(labels)));
  }
  emit(out, j);
}

void cmd_classify(const Options& opt, Session& s, std::ostream& out) {
  const auto fmt = format_or(opt, "json");
  require_format(fmt, {"json"});
  const auto& r = s.realization();
  emit(out, to_json(classify(s.word(), r)));
}

void cmd_certify(const Options& opt, Session& s, std::ostream& out) {
  const auto fmt = format_or(opt, "json");
  require_format(fmt, {"json"});
  const auto w = s.word();
  emit(out, to_json(make_certificate(w, constants_from(opt, w.graph()))));
}

void cmd_verify(const Options& opt, Session& s, std::ostream& out) {
  const auto fmt = format_or(opt, "json");
  require_format(fmt, {"json"});
  const auto& r = s.realization();
  const auto w = s.word();
  auto j = to_json(verify_lemmas(w, r, s.search_cap()));
  const auto well = check_well_defined(w, s.min_cap());
  const auto inj = check_injective_order(w);
  j["well_defined"] = well ? ordered_json(well->description) : ordered_json("pass");
  j["injective_order"] = inj ? ordered_json(inj->description) : ordered_json("pass");
  emit(out, j);
}

void cmd_oracle(const Options& opt, Session& s, std::ostream& out) {
  const auto fmt = format_or(opt, "json");
  require_format(fmt, {"text", "json"});
  const auto w = s.word();
  const auto best = oracle_min_syllables(w, s.search_cap());
  if (fmt == "text") {
    out << best << "\n";
    return;
  }
  ordered_json j;
  j["word"] = format(w);
  j["min_syllables"] = best;
  emit(out, j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal forms, syllable orders and mapping class images in right-angled Artin groups",
               "raagmcg"};
  app.require_subcommand(1);
  Options opt;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", opt.graph, "defining graph: JSON file or inline JSON");
  };
  auto add_word = [&](CLI::App* sub) {
    sub->add_option("--word", opt.word, "word such as \"a c^-2 b\" (empty = identity)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json, dot or text");
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--min-cap", opt.min_cap, "cap on |Min(sigma)| enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--search-cap", opt.search_cap, "cap on oracle search states")
        ->check(CLI::PositiveNumber);
  };
  auto add_realization = [&](CLI::App* sub) {
    sub->add_option("--realization", opt.realization,
                    "\"std\" for the standard construction, or a realization JSON file");
  };

  using Handler = void (*)(const Options&, Session&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    add_graph(sub);
    add_format(sub);
    add_caps(sub);
    commands.emplace_back(sub, h);
    return sub;
  };

  auto* graph_cmd = add("graph", "export the defining graph or its complement", cmd_graph);
  graph_cmd->add_flag("--complement", opt.complement, "export the complement graph");
  add_word(add("normalize", "canonical minimal-syllable form", cmd_normalize));
  add_word(add("min-enum", "enumerate Min(sigma)", cmd_min_enum));
  add_word(add("order", "syllable partial order (Hasse diagram)", cmd_order));
  add_word(add("reduce", "cyclic (conjugacy-minimal) reduction", cmd_reduce));
  auto* realize_cmd = add("realize", "build or validate a realization", cmd_realize);
  add_realization(realize_cmd);
  realize_cmd->add_option("--indices", opt.indices, "vertices to fill, e.g. \"a b\"");
  auto* classify_cmd = add("classify", "Thurston type of phi(sigma)", cmd_classify);
  add_word(classify_cmd);
  add_realization(classify_cmd);
  auto* certify_cmd = add("certify", "quasi-isometry lower-bound certificate", cmd_certify);
  add_word(certify_cmd);
  certify_cmd->add_option("--K0", opt.K0, "distance-formula threshold");
  certify_cmd->add_option("--D", opt.D, "bound on base projections");
  certify_cmd->add_option("--A", opt.A, "multiplicative constant");
  certify_cmd->add_option("--B", opt.B, "additive constant");
  certify_cmd->add_option("--K", opt.K, "override K (checked against K0 + 20 + 2D)");
  certify_cmd->add_option("--tau", opt.tau, "translation length of every f_i");
  auto* verify_cmd = add("verify", "brute-force lemma and X^sigma checks", cmd_verify);
  add_word(verify_cmd);
  add_realization(verify_cmd);
  add_word(add("oracle", "move-graph search for the minimal syllable count", cmd_oracle));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) {
        Session session(opt);
        std::ostringstream buffer;
        handler(opt, session, buffer);
        out << buffer.str();
        return kExitOk;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    ordered_json j;
    j["error"] = to_string(e.code());
    j["message"] = e.what();
    emit(out, j);
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace raagmcg::cli
