#include "icover/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "icover/extension.hpp"
#include "icover/families.hpp"
#include "icover/formats.hpp"
#include "icover/indec.hpp"
#include "icover/modular.hpp"
#include "icover/verify.hpp"

namespace icover {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_payload(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorKind::UsageError, "cannot open input file: " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

GraphTextFormat format_of(const std::string& name) {
  if (name == "auto") return GraphTextFormat::Auto;
  if (name == "graph6") return GraphTextFormat::Graph6;
  if (name == "edgelist") return GraphTextFormat::EdgeList;
  fail(ErrorKind::UsageError, "unknown format: " + name);
}

ordered_json members_1based(const VertexSet& s) {
  ordered_json arr = ordered_json::array();
  for (int v : s.members()) arr.push_back(v + 1);
  return arr;
}

ordered_json edges_1based(const Graph& g) {
  ordered_json arr = ordered_json::array();
  for (auto [a, b] : g.edges()) arr.push_back({a + 1, b + 1});
  return arr;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

std::string output_graph(const Graph& g, GraphTextFormat f) {
  return f == GraphTextFormat::Graph6 ? encode_graph6(g) + "\n"
                                      : encode_edgelist(g);
}

int cmd_intervals(const Graph& g, std::ostream& out) {
  ordered_json j;
  j["n"] = g.vertex_count();
  ordered_json arr = ordered_json::array();
  for (const VertexSet& s : nontrivial_intervals(g)) arr.push_back(members_1based(s));
  j["count"] = arr.size();
  j["intervals"] = arr;
  emit(out, j);
  return 0;
}

int cmd_prime(const Graph& g, std::ostream& out) {
  bool prime = is_indecomposable(g);
  ordered_json j;
  j["n"] = g.vertex_count();
  j["indecomposable"] = prime;
  if (prime) {
    j["witness_interval"] = nullptr;
  } else {
    auto w = witness_interval(g);
    j["witness_interval"] = w ? members_1based(*w) : ordered_json(nullptr);
  }
  emit(out, j);
  return prime ? 0 : 1;
}

int cmd_indec_graph(const Graph& g, std::ostream& out, std::ostream& err) {
  if (!is_indecomposable(g)) {
    err << "input not indecomposable\n";
    return 1;
  }
  Graph ig = indecomposability_graph(g);
  ordered_json j;
  j["n"] = ig.vertex_count();
  j["edges"] = edges_1based(ig);
  emit(out, j);
  return 0;
}

int cmd_covered(const Graph& g, const std::string& pair_arg, int k,
                std::ostream& out, std::ostream& err) {
  if (!is_indecomposable(g)) {
    err << "input not indecomposable\n";
    return 1;
  }
  Graph ig = indecomposability_graph(g);
  int n = g.vertex_count();
  ordered_json j;
  j["n"] = n;
  bool verdict = false;
  if (!pair_arg.empty()) {
    int a = 0, b = 0;
    char comma = 0;
    std::istringstream ss(pair_arg);
    if (!(ss >> a >> comma >> b) || comma != ',')
      fail(ErrorKind::UsageError, "--pair expects \"a,b\"");
    if (a < 1 || b < 1 || a > n || b > n || a == b)
      fail(ErrorKind::UsageError, "--pair needs two distinct labels in 1..n");
    verdict = is_set_covered(ig, VertexSet::of({a - 1, b - 1}, n));
    j["pair"] = {a, b};
    j["covered"] = verdict;
  } else {
    std::vector<VertexSet> covers = covers_of_size(ig, k);
    verdict = !covers.empty();
    j["k"] = k;
    j["covered"] = verdict;
    ordered_json arr = ordered_json::array();
    for (const VertexSet& s : covers) arr.push_back(members_1based(s));
    j["covers"] = arr;
  }
  emit(out, j);
  return verdict ? 0 : 1;
}

int cmd_classify(const Graph& g, std::ostream& out) {
  ClassificationResult res = classify_2covered(g);
  ordered_json j;
  j["n"] = g.vertex_count();
  j["two_covered"] = res.two_covered;
  j["cover_pair"] = res.cover_pair
                        ? ordered_json({res.cover_pair->first + 1,
                                        res.cover_pair->second + 1})
                        : ordered_json(nullptr);
  j["complemented"] = res.two_covered ? ordered_json(res.complemented)
                                      : ordered_json(nullptr);
  j["class"] = res.class_id ? ordered_json(class_name(*res.class_id))
                            : ordered_json(nullptr);
  j["embedded_base"] =
      res.embedded_base ? members_1based(*res.embedded_base) : ordered_json(nullptr);
  if (res.relabel) {
    ordered_json arr = ordered_json::array();
    for (int pos : *res.relabel) arr.push_back(pos + 1);
    j["relabel"] = arr;
  } else {
    j["relabel"] = nullptr;
  }
  emit(out, j);
  return res.two_covered ? 0 : 1;
}

int cmd_verify(const std::string& id, const RunParams& params,
               std::ostream& out, std::ostream& err) {
  VerificationReport rep = run_statement(id, params);
  const StatementInfo* info = find_statement(id);
  ordered_json j;
  j["statement"] = rep.statement_id;
  j["claim"] = info ? info->claim : "";
  j["sizes"] = rep.sizes;
  j["mode"] = rep.mode == RunMode::Exhaustive ? "exhaustive" : "sampled";
  j["seed"] = rep.mode == RunMode::Sampled ? ordered_json(rep.seed)
                                           : ordered_json(nullptr);
  j["count"] = rep.mode == RunMode::Sampled ? ordered_json(rep.count)
                                            : ordered_json(nullptr);
  j["instances_checked"] = rep.instances_checked;
  j["pass"] = rep.pass();
  ordered_json arr = ordered_json::array();
  for (const Mismatch& m : rep.mismatches) {
    ordered_json mj;
    mj["index"] = m.index;
    mj["graph"] = m.graph;
    mj["expected"] = m.expected;
    mj["observed"] = m.observed;
    arr.push_back(mj);
  }
  j["mismatches"] = arr;
  ordered_json dj = ordered_json::object();
  for (const auto& [k, v] : rep.details) dj[k] = v;
  j["details"] = dj;
  emit(out, j);
  err << "elapsed_ms=" << rep.elapsed.count() << "\n";
  return rep.pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"interval analysis, indecomposability graphs and the 2-covered "
               "classification for small graphs"};
  app.require_subcommand(1);

  std::string graph_path, format_name = "auto";
  auto add_graph_options = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path,
                    "graph file (edge list or graph6); '-' or absent: stdin");
    sub->add_option("--format", format_name,
                    "input format: auto|graph6|edgelist")
        ->default_val("auto");
  };

  CLI::App* sc_intervals =
      app.add_subcommand("intervals", "list nontrivial intervals (n <= 16)");
  add_graph_options(sc_intervals);

  CLI::App* sc_prime = app.add_subcommand(
      "prime", "indecomposability verdict plus a witness interval");
  add_graph_options(sc_prime);

  CLI::App* sc_indec = app.add_subcommand(
      "indec-graph", "indecomposability graph of a prime input");
  add_graph_options(sc_indec);

  CLI::App* sc_covered =
      app.add_subcommand("covered", "vertex-cover verdicts on the "
                                    "indecomposability graph");
  add_graph_options(sc_covered);
  std::string pair_arg;
  int cover_k = -1;
  sc_covered->add_option("--pair", pair_arg, "pair \"a,b\" (1-based)");
  sc_covered->add_option("--k", cover_k, "cover size (k <= 3)");

  CLI::App* sc_classify = app.add_subcommand(
      "classify", "2-covered decision with class witness (n >= 14)");
  add_graph_options(sc_classify);

  CLI::App* sc_family =
      app.add_subcommand("family", "emit a named family graph");
  std::string family_name;
  int family_n = 0;
  std::string out_format = "edgelist";
  sc_family->add_option("kind", family_name, "P | Q | G2N")->required();
  sc_family->add_option("n", family_n, "vertex count")->required();
  sc_family->add_option("--format", out_format, "edgelist|graph6")
      ->default_val("edgelist");

  CLI::App* sc_class =
      app.add_subcommand("class", "emit class members at a given size");
  std::string class_arg;
  int class_n = 0;
  long budget = -1;
  std::uint64_t class_seed = 1;
  std::string class_format = "graph6";
  sc_class->add_option("class", class_arg, "P|Q|P-1|Q-1|P-3|Q-3|P-5|Q-5")
      ->required();
  sc_class->add_option("n", class_n, "vertex count")->required();
  sc_class->add_option("--budget", budget, "sample this many (default: all)");
  sc_class->add_option("--seed", class_seed, "sampling seed")->default_val("1");
  sc_class->add_option("--format", class_format, "graph6|edgelist")
      ->default_val("graph6");

  CLI::App* sc_verify =
      app.add_subcommand("verify", "run one registered statement check");
  std::string statement_id, mode_name;
  RunParams params;
  sc_verify->add_option("statement", statement_id, "statement id")->required();
  sc_verify->add_option("--n", params.n, "size override");
  sc_verify->add_option("--mode", mode_name, "exhaustive|sampled");
  sc_verify->add_option("--seed", params.seed, "sampling seed");
  sc_verify->add_option("--count", params.count, "sampled instance count");
  sc_verify->add_option("--jobs", params.jobs, "worker threads")
      ->default_val("1");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    auto input_graph = [&]() {
      return parse_graph_text(read_payload(graph_path, in),
                              format_of(format_name));
    };
    if (sc_intervals->parsed()) return cmd_intervals(input_graph(), out);
    if (sc_prime->parsed()) return cmd_prime(input_graph(), out);
    if (sc_indec->parsed()) return cmd_indec_graph(input_graph(), out, err);
    if (sc_covered->parsed()) {
      if (pair_arg.empty() == (cover_k < 0))
        fail(ErrorKind::UsageError, "pass exactly one of --pair or --k");
      return cmd_covered(input_graph(), pair_arg, cover_k, out, err);
    }
    if (sc_classify->parsed()) return cmd_classify(input_graph(), out);
    if (sc_family->parsed()) {
      Graph g;
      if (family_name == "P") g = make_path(family_n);
      else if (family_name == "Q") g = make_q(family_n);
      else if (family_name == "G2N") g = make_halfgraph(family_n);
      else fail(ErrorKind::UsageError, "family kind must be P, Q or G2N");
      out << output_graph(g, format_of(out_format));
      return 0;
    }
    if (sc_class->parsed()) {
      auto cls = parse_class_id(class_arg);
      if (!cls) fail(ErrorKind::UsageError, "unknown class id: " + class_arg);
      std::vector<Graph> graphs =
          budget > 0 ? enumerate_class_sampled(*cls, class_n, budget, class_seed)
                     : enumerate_class(*cls, class_n);
      GraphTextFormat f = format_of(class_format);
      bool first = true;
      for (const Graph& g : graphs) {
        if (f == GraphTextFormat::EdgeList && !first) out << "\n";
        out << output_graph(g, f);
        first = false;
      }
      return 0;
    }
    if (sc_verify->parsed()) {
      if (!mode_name.empty()) {
        if (mode_name == "exhaustive") params.mode = RunMode::Exhaustive;
        else if (mode_name == "sampled") params.mode = RunMode::Sampled;
        else fail(ErrorKind::UsageError, "mode must be exhaustive or sampled");
      }
      return cmd_verify(statement_id, params, out, err);
    }
  } catch (const Error& e) {
    err << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::InternalAnomaly ? 3 : 2;
  }
  return 2;
}

}  // namespace icover
