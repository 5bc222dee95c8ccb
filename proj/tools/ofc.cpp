// ofc — gluing-pattern calculus for one-faced collections of curves on
// closed oriented surfaces. All positions on the command line are 0-based
// indices into the word.
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ofc/atlas.hpp"
#include "ofc/canonical.hpp"
#include "ofc/families.hpp"
#include "ofc/graph.hpp"
#include "ofc/jsonio.hpp"
#include "ofc/moves.hpp"
#include "ofc/pattern.hpp"
#include "ofc/reduction.hpp"
#include "ofc/trace.hpp"
#include "ofc/verify.hpp"

namespace {

void print_info(const ofc::GluingPattern& p) {
  const ofc::CurveDecomposition dec = ofc::curve_decomposition(p);
  std::printf("genus %d\n", p.genus());
  std::printf("vertices %d  edges %d  faces 1\n", p.vertex_count(), p.edge_count());
  std::printf("S %d\n", dec.one_simple_count);
  std::printf("curves %zu\n", dec.curves.size());
  for (size_t c = 0; c < dec.curves.size(); ++c) {
    const auto& curve = dec.curves[c];
    std::printf("  curve %zu: length %d, self-intersections %d%s, edges", c, curve.length,
                curve.self_intersections, curve.one_simple ? ", 1-simple" : "");
    for (int e : curve.edges) std::printf(" %d", e);
    std::printf("\n");
  }
  int total = 0;
  const auto census = ofc::vertex_census(p, 0);
  std::printf("census at root 0:\n");
  for (size_t v = 0; v < census.size(); ++v) {
    std::printf("  vertex %zu: Type%d, trisections %d, cycle (%d %d %d %d)\n", v,
                static_cast<int>(census[v].vtype), census[v].trisections, census[v].cycle[0],
                census[v].cycle[1], census[v].cycle[2], census[v].cycle[3]);
    total += census[v].trisections;
  }
  std::printf("trisections %d\n", total);
}

void print_trace(const ofc::ReductionTrace& trace) {
  for (size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& m = trace.steps[k];
    std::printf("  step %zu: %s (", k, ofc::move_op_name(m.op));
    for (size_t a = 0; a < m.args.size(); ++a)
      std::printf("%s%d", a ? ", " : "", m.args[a]);
    std::printf(") -> %s\n", ofc::word_text(m.after).c_str());
  }
}

int print_checks(const std::vector<ofc::CheckResult>& results, bool as_json) {
  int failed = 0;
  ofc::json arr = ofc::json::array();
  for (const auto& c : results) {
    if (as_json)
      arr.push_back(ofc::json{{"criterion", c.criterion},
                              {"detail", c.detail},
                              {"name", c.name},
                              {"pass", c.pass}});
    else
      std::printf("criterion %2d [%s] %s — %s\n", c.criterion, c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.detail.c_str());
    if (!c.pass) ++failed;
  }
  if (as_json) std::printf("%s\n", arr.dump(2).c_str());
  return failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gluing-pattern calculus for one-faced collections of curves.\n"
      "Words are space-separated signed labels, each edge appearing once with\n"
      "each sign, e.g. \"1 2 -1 -2\". ALL POSITIONS ARE 0-BASED indices into\n"
      "the word. S counts the 1-simple curves of the collection."};
  app.require_subcommand(1);
  app.fallthrough();  // --json / --threads are accepted after the subcommand too
  int threads = 0;
  app.add_option("--threads", threads,
                 "worker cap for enumeration and graph builds (0 = OFC_THREADS or hardware)");
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::string word, word2;
  int pos_i = 0, pos_j = 0;
  int genus = 2;
  int split_at = -1;
  bool rooted = false, hat = false, as_dot = false;

  auto* validate = app.add_subcommand("validate", "check that a word is a valid gluing pattern");
  validate->add_option("word", word)->required();

  auto* canon = app.add_subcommand("canon", "canonical representative, orbit and symmetries");
  canon->add_option("word", word)->required();

  auto* info = app.add_subcommand("info", "genus, S, curves and the vertex census at root 0");
  info->add_option("word", word)->required();

  auto* surgery_cmd = app.add_subcommand("surgery", "apply surgery at two intertwined positions");
  surgery_cmd->add_option("word", word)->required();
  surgery_cmd->add_option("i", pos_i, "first position (0-based)")->required();
  surgery_cmd->add_option("j", pos_j, "second position (0-based)")->required();

  auto* simplify = app.add_subcommand("simplify", "run the simplification cascade to a non-simplifiable pattern");
  simplify->add_option("word", word)->required();

  auto* reduce = app.add_subcommand("reduce", "extract torus summands until genus 1, printing the full trace");
  reduce->add_option("word", word)->required();

  auto* sum = app.add_subcommand("sum", "connected sum of two patterns at marked edge positions");
  sum->add_option("word1", word)->required();
  sum->add_option("i", pos_i, "marked position in the first word (0-based)")->required();
  sum->add_option("word2", word2)->required();
  sum->add_option("j", pos_j, "marked position in the second word (0-based)")->required();

  auto* split = app.add_subcommand("split", "split off a framed torus block");
  split->add_option("word", word)->required();
  split->add_option("at", split_at, "block position (0-based; default: first block found)");

  auto* enumerate = app.add_subcommand("enumerate", "list canonical classes of a genus, or count rooted patterns");
  enumerate->add_option("--genus", genus, "genus to enumerate")->required();
  enumerate->add_flag("--rooted", rooted, "count rooted patterns instead of listing classes");

  auto* graph = app.add_subcommand("graph", "build the surgery graph of a genus");
  graph->add_option("--genus", genus, "genus level")->required();
  graph->add_flag("--hat", hat, "stack levels 1..g and add connected-sum edges");
  graph->add_flag("--dot", as_dot, "emit Graphviz DOT instead of a summary");

  auto* diameter_cmd = app.add_subcommand("diameter", "diameter of the genus-g surgery graph");
  diameter_cmd->add_option("--genus", genus, "genus level")->required();

  auto* necklace_cmd = app.add_subcommand("necklace", "the g-bead necklace pattern");
  necklace_cmd->add_option("--genus", genus, "number of beads")->required();

  auto* verify = app.add_subcommand("verify", "run the acceptance suite up to a genus (1..3)");
  verify->add_option("--genus", genus, "largest genus in scope")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) {
      const ofc::GluingPattern p = ofc::GluingPattern::parse(word);
      if (as_json)
        std::printf("%s\n", ofc::pattern_json(p).dump(2).c_str());
      else
        std::printf("ok: genus %d, %d edges\n", p.genus(), p.edge_count());
    } else if (*canon) {
      const ofc::CanonicalClass c = ofc::canonicalize(ofc::GluingPattern::parse(word));
      if (as_json)
        std::printf("%s\n", ofc::class_json(c).dump(2).c_str());
      else {
        std::printf("%s\n", ofc::word_text(c.word).c_str());
        std::printf("orbit %d  aut %d  genus %d\n", c.orbit_size, c.aut_size, c.genus);
      }
    } else if (*info) {
      const ofc::GluingPattern p = ofc::GluingPattern::parse(word);
      if (as_json)
        std::printf("%s\n", ofc::info_json(p).dump(2).c_str());
      else
        print_info(p);
    } else if (*surgery_cmd) {
      const ofc::GluingPattern p = ofc::GluingPattern::parse(word);
      const ofc::Surgered out = ofc::surgery_full(p, pos_i, pos_j);
      if (as_json) {
        ofc::json j = ofc::pattern_json(out.pattern);
        j["new_x"] = out.new_x;
        j["new_y"] = out.new_y;
        std::printf("%s\n", j.dump(2).c_str());
      } else {
        std::printf("%s\n", out.pattern.serialize().c_str());
        std::printf("replacement letters at positions %d and %d\n", out.new_x, out.new_y);
      }
    } else if (*simplify) {
      const ofc::GluingPattern p = ofc::GluingPattern::parse(word);
      const int s_before = ofc::one_simple_count(p);
      const auto [q, trace] = ofc::simplify_cascade(p);
      if (as_json) {
        ofc::json j = ofc::pattern_json(q);
        j["s_after"] = ofc::one_simple_count(q);
        j["s_before"] = s_before;
        j["trace"] = ofc::trace_json(trace);
        std::printf("%s\n", j.dump(2).c_str());
      } else {
        print_trace(trace);
        std::printf("%s\n", q.serialize().c_str());
        std::printf("S %d -> %d in %zu steps\n", s_before, ofc::one_simple_count(q),
                    trace.steps.size());
      }
    } else if (*reduce) {
      ofc::GluingPattern p = ofc::GluingPattern::parse(word);
      ofc::json levels = ofc::json::array();
      while (p.genus() > 1) {
        const ofc::Extraction ex = ofc::extract_torus_summand(p);
        if (as_json)
          levels.push_back(ofc::extraction_json(ex));
        else {
          std::printf("level g=%d: %zu moves, %d surgeries\n", p.genus(), ex.trace.steps.size(),
                      ex.trace.surgery_count());
          print_trace(ex.trace);
          std::printf("  reduced: %s (marked %d)\n", ex.reduced.serialize().c_str(), ex.marked);
        }
        p = ex.reduced;
      }
      if (as_json) {
        ofc::json j;
        j["final"] = ofc::pattern_json(p);
        j["levels"] = levels;
        std::printf("%s\n", j.dump(2).c_str());
      } else {
        std::printf("final: %s\n", p.serialize().c_str());
      }
    } else if (*sum) {
      const ofc::GluingPattern p1 = ofc::GluingPattern::parse(word);
      const ofc::GluingPattern p2 = ofc::GluingPattern::parse(word2);
      const ofc::GluingPattern out = ofc::connected_sum(p1, pos_i, p2, pos_j);
      if (as_json)
        std::printf("%s\n", ofc::pattern_json(out).dump(2).c_str());
      else
        std::printf("%s\n", out.serialize().c_str());
    } else if (*split) {
      const ofc::GluingPattern p = ofc::GluingPattern::parse(word);
      int at = split_at;
      if (at < 0) {
        const auto blocks = ofc::find_torus_blocks(p);
        if (blocks.empty())
          ofc::fail(ofc::Errc::not_a_block, "the pattern exposes no framed torus block");
        at = blocks.front();
      }
      const ofc::SplitResult out = ofc::split_torus_summand(p, at);
      if (as_json) {
        ofc::json j = ofc::pattern_json(out.pattern);
        j["marked"] = out.marked;
        j["split_at"] = at;
        std::printf("%s\n", j.dump(2).c_str());
      } else {
        std::printf("%s\n", out.pattern.serialize().c_str());
        std::printf("split at %d; merged edge now at position %d\n", at, out.marked);
      }
    } else if (*enumerate) {
      if (rooted) {
        const std::uint64_t n = ofc::count_rooted(genus, threads);
        if (as_json)
          std::printf("%s\n",
                      ofc::json{{"count", n}, {"genus", genus}, {"rooted", true}}.dump(2).c_str());
        else
          std::printf("count %llu\n", static_cast<unsigned long long>(n));
      } else {
        const auto atlas = ofc::enumerate_classes(genus, threads);
        if (as_json) {
          ofc::json arr = ofc::json::array();
          for (const auto& rec : atlas) arr.push_back(ofc::class_json(rec.cls));
          std::printf("%s\n", ofc::json{{"classes", arr},
                                        {"count", atlas.size()},
                                        {"genus", genus}}
                                  .dump(2)
                                  .c_str());
        } else {
          for (const auto& rec : atlas) std::printf("%s\n", ofc::word_text(rec.cls.word).c_str());
        }
      }
    } else if (*graph) {
      const ofc::SurgeryGraph g = hat ? ofc::build_hat_graph(genus, threads)
                                      : ofc::build_surgery_graph(genus, threads);
      if (as_dot && as_json) {
        std::cerr << "error: BadArgument: choose one of --dot and --json\n";
        return 2;
      }
      if (as_dot)
        std::printf("%s", ofc::export_dot(g).c_str());
      else if (as_json)
        std::printf("%s", ofc::export_json(g).c_str());
      else
        std::printf("%s%d: %zu nodes, %zu edges, %sconnected\n", hat ? "hat K_" : "K_", genus,
                    g.nodes.size(), g.edges.size(), ofc::is_connected(g) ? "" : "NOT ");
    } else if (*diameter_cmd) {
      const ofc::SurgeryGraph g = ofc::build_surgery_graph(genus, threads);
      const int d = ofc::diameter(g, genus, threads);
      if (as_json)
        std::printf("%s\n", ofc::json{{"diameter", d}, {"genus", genus}}.dump(2).c_str());
      else
        std::printf("diameter(K_%d) = %d\n", genus, d);
    } else if (*necklace_cmd) {
      const ofc::GluingPattern n = ofc::necklace(genus);
      if (as_json)
        std::printf("%s\n", ofc::pattern_json(n).dump(2).c_str());
      else
        std::printf("%s\n", n.serialize().c_str());
    } else if (*verify) {
      const int failed = print_checks(ofc::run_acceptance(genus, threads), as_json);
      return failed ? 1 : 0;
    }
  } catch (const ofc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
