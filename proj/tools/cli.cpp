#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "epw/decomposition.hpp"
#include "epw/gadgets.hpp"
#include "epw/graph_io.hpp"
#include "epw/json.hpp"
#include "epw/minor.hpp"
#include "epw/verify.hpp"

namespace epw::cli {
namespace {

namespace fs = std::filesystem;

enum class Format { text, json, dot };

struct Options {
  std::vector<std::string> inputs;
  std::string ctx;
  std::string hstar;
  std::string predicate;
  std::string predicate_name;
  std::string component;
  std::string verify;
  std::string out_path;
  std::string witness_path = "epw-witness.json";
  std::string trace_path;
  int r = 0;
  int k = 0;
  std::size_t cap = 0;
  std::size_t bound = 0;
  bool bound_given = false;
  std::uint64_t trials = 20;
  Budget budget;
  Format format = Format::text;
};

/// Input errors that map to a specific exit code.
struct Failure {
  int code;
  std::string message;
};

Graph load(const std::string& path) {
  if (!fs::exists(path)) throw Failure{kExitNoInput, "cannot open '" + path + "'"};
  try {
    return load_graph_file(path);
  } catch (const ParseError& e) {
    throw Failure{kExitDataError, path + ": " + e.what()};
  }
}

AstarSpec load_spec(const std::string& path) {
  if (!fs::exists(path)) throw Failure{kExitNoInput, "cannot open '" + path + "'"};
  try {
    return load_astar_spec(read_text_file(path));
  } catch (const ParseError& e) {
    throw Failure{kExitDataError, path + ": " + e.what()};
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f || !(f << text)) throw Failure{kExitCantCreate, "cannot write '" + path + "'"};
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  /// Writes `text` to --out when given, else to the report stream.
  void emit(const std::string& text) {
    if (o_.out_path.empty()) {
      out_ << text;
    } else {
      write_file(o_.out_path, text);
    }
  }

  void emit_graph(const Graph& g) {
    switch (o_.format) {
      case Format::text: emit(serialize(g)); break;
      case Format::dot: emit(serialize(g, GraphFormat::dot)); break;
      case Format::json: emit(to_json(g).dump(2) + "\n"); break;
    }
  }

  int report(const Report& r) {
    emit(o_.format == Format::json ? to_json(r).dump(2) + "\n" : to_text(r));
    switch (r.outcome) {
      case Outcome::holds: return kExitSuccess;
      case Outcome::budget_exhausted: return kExitBudget;
      case Outcome::refuted:
        if (r.witness) {
          write_file(o_.witness_path, to_json(*r.witness).dump(2) + "\n");
          err_ << "witness written to " << o_.witness_path << "\n";
        }
        return kExitRefuted;
    }
    return kExitSuccess;
  }

  int components() {
    const auto comps = connected_components(load(o_.inputs.at(0)));
    if (o_.format == Format::json) {
      ojson j = ojson::array();
      for (const auto& c : comps) j.push_back(to_json(c));
      emit(j.dump(2) + "\n");
    } else {
      std::ostringstream s;
      for (const auto& c : comps) {
        for (std::size_t i = 0; i < c.order(); ++i) s << (i ? " " : "") << c.label(static_cast<int>(i));
        s << "\n";
      }
      emit(s.str());
    }
    return kExitSuccess;
  }

  int blocks() {
    const auto tree = block_cut_tree(load(o_.inputs.at(0)));
    std::ostringstream s;
    if (o_.format == Format::json) {
      s << to_json(tree).dump(2) << "\n";
    } else if (o_.format == Format::dot) {
      s << "graph {\n";
      for (const auto& b : tree.blocks) {
        s << "  \"B" << b.id << "\" [shape=box,label=\"";
        for (std::size_t i = 0; i < b.vertices.size(); ++i) s << (i ? " " : "") << b.vertices[i];
        s << "\"];\n";
      }
      for (const auto& c : tree.cutvertices) s << "  \"" << c << "\";\n";
      for (const auto& [b, c] : tree.tree_edges) s << "  \"B" << b << "\" -- \"" << c << "\";\n";
      s << "}\n";
    } else {
      for (const auto& b : tree.blocks) {
        s << "block " << b.id << (b.trivial ? " (trivial):" : ":");
        for (const auto& v : b.vertices) s << " " << v;
        s << "\n";
      }
      s << "cutvertices:";
      for (const auto& c : tree.cutvertices) s << " " << c;
      s << "\n";
    }
    emit(s.str());
    return kExitSuccess;
  }

  int segments() {
    const auto g = load(o_.inputs.at(0));
    const auto ctx = o_.ctx.empty() ? g : load(o_.ctx);
    const auto segs = segment_decomposition(g, ctx);
    if (o_.format == Format::json) {
      ojson j = ojson::array();
      for (const auto& seg : segs) j.push_back(to_json(seg));
      emit(j.dump(2) + "\n");
      return kExitSuccess;
    }
    std::ostringstream s;
    for (const auto& seg : segs) {
      s << to_string(seg.kind) << " length " << seg.length() << ": " << seg.from;
      for (const auto& v : seg.internal) s << " " << v;
      if (seg.kind != SegmentKind::pendant || seg.to != seg.from) s << " " << seg.to;
      s << "\n";
    }
    emit(s.str());
    return kExitSuccess;
  }

  int classify() {
    const auto g = load(o_.inputs.at(0));
    if (!is_connected(g)) throw Failure{kExitDataError, "classify needs a connected graph"};
    const auto shape = to_string(classify_max_degree2(g));
    emit(o_.format == Format::json ? ojson{{"shape", shape}}.dump() + "\n" : shape + "\n");
    return kExitSuccess;
  }

  int gtimes() {
    const auto g = load(o_.inputs.at(0));
    const auto ctx = o_.ctx.empty() ? g : load(o_.ctx);
    emit_graph(g_times(g, ctx, o_.r));
    return kExitSuccess;
  }

  int gadget(const GadgetRecipe& recipe) {
    const auto built = build_gadget(recipe);
    for (const auto& w : built.trace.warnings) err_ << "warning: " << w << "\n";
    if (!o_.trace_path.empty()) write_file(o_.trace_path, to_json(built.trace).dump(2) + "\n");
    if (o_.format == Format::json) {
      emit(ojson{{"hstar", to_json(built.hstar)}, {"trace", to_json(built.trace)}}.dump(2) + "\n");
    } else {
      emit_graph(built.hstar);
    }
    return kExitSuccess;
  }

  int hstar1() {
    GadgetRecipe recipe;
    recipe.mode = GadgetMode::theorem1;
    recipe.h = load(o_.inputs.at(0));
    recipe.spec = load_spec(o_.inputs.at(1));
    recipe.r = o_.r > 0 ? o_.r : recipe.spec.r;
    recipe.selector = o_.component;
    if (recipe.selector.empty()) throw Failure{kExitUsage, "hstar1 needs --component <vertex>"};
    return gadget(recipe);
  }

  int hstar2() {
    GadgetRecipe recipe;
    recipe.mode = GadgetMode::theorem2;
    recipe.h = load(o_.inputs.at(0));
    recipe.spec = load_spec(o_.inputs.at(1));
    recipe.r = o_.r > 0 ? o_.r : recipe.spec.r;
    if (o_.predicate.empty()) throw Failure{kExitUsage, "hstar2 needs --predicate <graph file>"};
    recipe.predicate = PropertyPredicate{o_.predicate_name.empty() ? fs::path(o_.predicate).stem().string() : o_.predicate_name,
                                         load(o_.predicate)};
    return gadget(recipe);
  }

  int minor() {
    if (!o_.verify.empty()) {
      if (!fs::exists(o_.verify)) throw Failure{kExitNoInput, "cannot open '" + o_.verify + "'"};
      Witness w;
      try {
        w = witness_from_json(nlohmann::json::parse(read_text_file(o_.verify)));
      } catch (const nlohmann::json::exception& e) {
        throw Failure{kExitDataError, o_.verify + ": " + e.what()};
      }
      const bool ok = verify_witness(w, o_.budget.nodes);
      if (o_.format == Format::json) {
        emit(ojson{{"witness", w.kind}, {"confirmed", ok}}.dump() + "\n");
      } else {
        emit(std::string(ok ? "confirmed" : "rejected") + " (" + w.kind + " witness)\n");
      }
      return ok ? kExitSuccess : kExitRefuted;
    }
    if (o_.inputs.size() != 2) throw Failure{kExitUsage, "minor needs <h> <g> or --verify <witness>"};
    const auto h = load(o_.inputs[0]);
    const auto g = load(o_.inputs[1]);
    const auto r = find_expansion(h, g, {}, o_.budget.nodes);
    if (o_.format == Format::json) {
      ojson j{{"status", to_string(r.status)}, {"search_nodes", r.nodes}};
      j["embedding"] = r.embedding ? to_json(*r.embedding) : ojson(nullptr);
      emit(j.dump(2) + "\n");
    } else {
      std::ostringstream s;
      s << to_string(r.status) << "\n";
      if (r.embedding) {
        for (const auto& [x, set] : r.embedding->branch_sets) {
          s << "  " << x << ":";
          for (const auto& v : set) s << " " << v;
          s << "\n";
        }
      }
      emit(s.str());
    }
    return r.status == SearchStatus::budget_exhausted ? kExitBudget : kExitSuccess;
  }

  int pack() {
    const auto h = load(o_.inputs.at(0));
    const auto g = load(o_.inputs.at(1));
    const std::size_t cap = o_.cap > 0 ? o_.cap : g.size();
    const auto p = max_edge_disjoint_packing(h, g, cap, o_.budget);
    if (o_.format == Format::json) {
      ojson list = ojson::array();
      for (const auto& m : p.witness) list.push_back(to_json(m));
      emit(ojson{{"count", p.count},
                 {"cap", cap},
                 {"exhaustive", p.exhaustive},
                 {"minimal_footprints", p.minimal_footprints},
                 {"search_nodes", p.nodes},
                 {"embeddings", list}}
               .dump(2) +
           "\n");
    } else {
      std::ostringstream s;
      s << p.count << (p.exhaustive ? "" : " (lower bound, budget exhausted)") << "\n";
      for (std::size_t i = 0; i < p.witness.size(); ++i) {
        s << "  expansion " << i + 1 << ":";
        for (const auto& e : p.witness[i].footprint()) s << " " << e.u << "-" << e.v;
        s << "\n";
      }
      emit(s.str());
    }
    return p.exhaustive ? kExitSuccess : kExitBudget;
  }

  int hit() {
    const auto h = load(o_.inputs.at(0));
    const auto g = load(o_.inputs.at(1));
    const std::size_t bound = o_.bound_given ? o_.bound : g.size();
    const auto res = min_edge_hitting_set(h, g, bound, o_.budget);
    if (o_.format == Format::json) {
      ojson j{{"status", to_string(res.status)}, {"bound", bound}, {"subsets_checked", res.subsets_checked},
              {"search_nodes", res.nodes}};
      j["set"] = res.status == SearchStatus::none ? ojson(nullptr) : to_json(res.set);
      emit(j.dump(2) + "\n");
    } else {
      std::ostringstream s;
      if (res.status == SearchStatus::none) {
        s << "none within bound " << bound << "\n";
      } else {
        s << (res.status == SearchStatus::found ? "hitting set" : "hitting set (not proven smallest, budget exhausted)")
          << " of size " << res.set.size() << ":";
        for (const auto& e : res.set) s << " " << e.u << "-" << e.v;
        s << "\n";
      }
      emit(s.str());
    }
    return res.status == SearchStatus::budget_exhausted ? kExitBudget : kExitSuccess;
  }

  int robust() {
    const auto pattern = load(o_.inputs.at(0));
    if (o_.r < 1) throw Failure{kExitUsage, "robust needs -r <int>"};
    if (!o_.hstar.empty()) return report(check_hstar_robustness(load(o_.hstar), pattern, o_.r, o_.budget));
    const auto ctx = o_.ctx.empty() ? pattern : load(o_.ctx);
    return report(check_gadget_robustness(pattern, ctx, o_.r, o_.budget));
  }

  int locality() {
    const auto h = load(o_.inputs.at(0));
    const auto hstar = load(o_.inputs.at(1));
    const auto a = load(o_.inputs.at(2));
    if (!hstar.has_provenance()) throw Failure{kExitDataError, "hstar carries no roles; the A* region is unknown"};
    return report(check_expansion_locality(h, hstar, a, astar_region(hstar), o_.budget));
  }

  int gencheck() {
    const auto a = load(o_.inputs.at(0));
    auto spec = load_spec(o_.inputs.at(1));
    if (o_.k > 0) spec.k = o_.k;
    if (o_.r > 0) spec.r = o_.r;
    return report(check_generic_counterexample(a, spec, o_.budget));
  }

  int hereditary() {
    if (o_.inputs.size() < 2) throw Failure{kExitUsage, "hereditary needs <predicate graph> <corpus files...>"};
    PropertyPredicate pred{o_.predicate_name.empty() ? fs::path(o_.inputs[0]).stem().string() : o_.predicate_name,
                           load(o_.inputs[0])};
    std::vector<Graph> corpus;
    for (std::size_t i = 1; i < o_.inputs.size(); ++i) corpus.push_back(load(o_.inputs[i]));
    return report(check_hereditary_sampled(pred, corpus, o_.trials, o_.budget.seed, o_.budget));
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  bool bound_given = false;
  CLI::App app{"Edge-Erdos-Posa workbench: minors, block decompositions, gadgets and verifiers", "epw"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "epw 0.1.0");

  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}};

  struct Spec {
    const char* name;
    const char* help;
    std::size_t min_inputs;
    std::size_t max_inputs;  // 0: unbounded
  };
  const std::vector<Spec> specs{
      {"components", "connected components", 1, 1},
      {"blocks", "blocks, cutvertices and the block-cut tree", 1, 1},
      {"segments", "segment decomposition relative to --ctx", 1, 1},
      {"classify", "shape of a connected graph of maximum degree 2", 1, 1},
      {"gtimes", "replace every segment by r parallel copies", 1, 1},
      {"hstar1", "component-wise H* from <h> <spec>", 2, 2},
      {"hstar2", "block-wise H* from <h> <spec>", 2, 2},
      {"minor", "expansion search <h> <g>, or --verify <witness>", 0, 2},
      {"pack", "maximum edge-disjoint packing of <h>-expansions in <g>", 2, 2},
      {"hit", "minimum edge hitting set for <h>-expansions in <g>", 2, 2},
      {"robust", "deletion robustness of g_times(<g>, --ctx) or of --hstar", 1, 1},
      {"locality", "expansion locality for <h> <hstar> <a>", 3, 3},
      {"gencheck", "validate a generic counterexample spec: <a> <spec>", 2, 2},
      {"hereditary", "sampled hereditariness: <predicate graph> <corpus...>", 2, 0},
  };

  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    auto* in = sub->add_option("inputs", o.inputs, "input files");
    if (s.min_inputs > 0) in->required();
    in->expected(static_cast<int>(s.min_inputs), s.max_inputs == 0 ? CLI::detail::expected_max_vector_size
                                                                     : static_cast<int>(s.max_inputs));
    sub->add_option("--format", o.format, "text, json or dot")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--out", o.out_path, "write the result to a file instead of stdout");
    sub->add_option("--budget", o.budget.nodes, "search nodes per expansion search")->check(CLI::PositiveNumber);
    sub->add_option("--subsets", o.budget.subsets, "subsets enumerated before sampling")->check(CLI::PositiveNumber);
    sub->add_option("--samples", o.budget.samples, "subsets drawn in sampled mode")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.budget.seed, "64-bit random seed");
    sub->add_option("--jobs", o.budget.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--force-sample", o.budget.force_sample, "sample subsets even when enumeration fits the budget");
    sub->add_option("--witness", o.witness_path, "witness file written on refutation");
    sub->add_option("--ctx", o.ctx, "context graph (defaults to the input graph)");
    sub->add_option("-r", o.r, "robustness parameter")->check(CLI::PositiveNumber);
    const std::string name = s.name;
    if (name == "hstar1") sub->add_option("--component", o.component, "a vertex of the component used as A");
    if (name == "hstar1" || name == "hstar2") sub->add_option("--trace", o.trace_path, "write the build trace as JSON");
    if (name == "hstar2") sub->add_option("--predicate", o.predicate, "graph whose minors define the property");
    if (name == "hstar2" || name == "hereditary") sub->add_option("--name", o.predicate_name, "predicate name");
    if (name == "minor") sub->add_option("--verify", o.verify, "re-check a witness file");
    if (name == "pack") sub->add_option("--cap", o.cap, "largest packing size searched")->check(CLI::PositiveNumber);
    if (name == "hit") {
      sub->add_option("--bound", o.bound, "largest hitting set size tried")->check(CLI::NonNegativeNumber);
    }
    if (name == "robust") sub->add_option("--hstar", o.hstar, "check an H* graph instead of a gadget");
    if (name == "gencheck") sub->add_option("-k", o.k, "override the spec's k")->check(CLI::PositiveNumber);
    if (name == "hereditary") sub->add_option("--trials", o.trials, "minor sequences per graph")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (auto* b = sub->get_option_no_throw("--bound"); b && b->count() > 0) bound_given = true;
  o.bound_given = bound_given;

  Runner runner(o, out, err);
  const std::map<std::string, std::function<int()>> actions{
      {"components", [&] { return runner.components(); }}, {"blocks", [&] { return runner.blocks(); }},
      {"segments", [&] { return runner.segments(); }},     {"classify", [&] { return runner.classify(); }},
      {"gtimes", [&] { return runner.gtimes(); }},         {"hstar1", [&] { return runner.hstar1(); }},
      {"hstar2", [&] { return runner.hstar2(); }},         {"minor", [&] { return runner.minor(); }},
      {"pack", [&] { return runner.pack(); }},             {"hit", [&] { return runner.hit(); }},
      {"robust", [&] { return runner.robust(); }},         {"locality", [&] { return runner.locality(); }},
      {"gencheck", [&] { return runner.gencheck(); }},     {"hereditary", [&] { return runner.hereditary(); }},
  };
  try {
    if (name == "gtimes" && o.r < 1) throw Failure{kExitUsage, "gtimes needs -r <int>"};
    return actions.at(name)();
  } catch (const Failure& f) {
    err << "epw " << name << ": " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "epw " << name << ": line " << e.line() << ": " << e.what() << "\n";
    return kExitDataError;
  } catch (const GraphError& e) {
    err << "epw " << name << ": " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace epw::cli
