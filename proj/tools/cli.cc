#include "cli.hh"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "berge/canonical.hh"
#include "berge/connectivity.hh"
#include "berge/constructions.hh"
#include "berge/cycle_search.hh"
#include "berge/error.hh"
#include "berge/io.hh"
#include "berge/surgery.hh"
#include "berge/verify.hh"

namespace berge::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

int parse_int(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError(flag + ": '" + s + "' is not an integer");
  }
  if (used != s.size()) throw UsageError(flag + ": '" + s + "' is not an integer");
  return v;
}

// "5" or "4..6".
Range parse_range(const std::string& s, const std::string& flag) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(s, flag);
    return {v, v};
  }
  Range r{parse_int(s.substr(0, dots), flag), parse_int(s.substr(dots + 2), flag)};
  if (r.lo > r.hi) throw UsageError(flag + ": empty range " + s);
  return r;
}

std::vector<int> parse_list(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(parse_int(part, flag));
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

struct Input {
  BipartiteGraph graph;
  std::optional<Hypergraph> hypergraph;
};

Input load(const std::string& path) {
  const std::string text = read_file(path);
  if (ends_with(path, ".hg")) {
    Hypergraph h = parse_hg(text);
    return {incidence_graph(h), h};
  }
  return {parse_bg(text), std::nullopt};
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file_atomic(path, text);
}

json certificate_json(const Certificate& c) {
  std::vector<std::string> cut;
  for (Vertex v : c.named_cut) cut.push_back(to_string(v));
  return {{"construction", c.construction},
          {"claimed_n", c.claimed_n},
          {"claimed_m", c.claimed_m},
          {"claimed_min_x_degree", c.claimed_min_x_degree},
          {"claimed_x_degrees", c.claimed_x_degrees},
          {"claimed_longest", c.claimed_longest ? json(*c.claimed_longest) : json(nullptr)},
          {"claims_no_x_spanning", c.claims_no_x_spanning},
          {"named_cut", cut},
          {"claimed_cut_components", c.claimed_cut_components}};
}

int report_claims(const BipartiteGraph& g, const Certificate& cert, std::int64_t budget,
                  std::ostream& out) {
  auto rep = check_certificate(g, cert, budget);
  for (const auto& c : rep.checks)
    out << (c.pass ? "ok   " : "FAIL ") << c.claim << ": expected " << c.expected << ", got "
        << c.actual << "\n";
  return rep.all_pass() ? kExitOk : kExitFailure;
}

std::string cycle_line(const AltCycle& c) {
  return format_vertices(c.vertices());
}

AltCycle read_cycle(const BipartiteGraph& g, const std::string& text) {
  auto seq = parse_vertices(text);
  auto problems = validate_cycle(g, seq);
  if (!problems.empty()) throw UsageError("--cycle: " + problems.front());
  return AltCycle::from_sequence(g, seq);
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + to_string(v);
  return out.empty() ? "-" : out;
}

std::string index_list(const std::vector<int>& xs, char prefix) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : " ") + std::string(1, prefix) + std::to_string(x);
  return out.empty() ? "-" : out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Long cycles in bipartite graphs: constructions, solvers, cycle surgery and "
               "exhaustive verification.",
               "berge"};
  app.require_subcommand(1);

  // One set per subcommand: CLI11 resets a bound variable when another
  // subcommand that shares it is processed.
  struct Opts {
    std::string input, output, kind, parts, n_text, m_text, delta_text, cycle_text, predicate,
        resume, log_path, retry;
    int k = 3, jobs = 1, verbosity = 0, apex = -1, shard_depth = 1;
    std::int64_t budget = -1, samples = 10000;
    std::uint64_t seed = 1;
    bool check = false;
  };
  std::map<const CLI::App*, Opts> all_opts;

  auto* gen = app.add_subcommand("gen", "Build a construction: gk (G_k) or con4 (hypergraph).");
  Opts& o_gen = all_opts[gen];
  gen->add_option("kind", o_gen.kind, "gk | con4")->required()->check(CLI::IsMember({"gk", "con4"}));
  gen->add_option("--k", o_gen.k, "connectors (gk)");
  gen->add_option("--parts", o_gen.parts, "comma-separated part sizes (gk)");
  gen->add_option("--delta", o_gen.delta_text, "minimum X-degree (gk)");
  gen->add_option("--n", o_gen.n_text, "vertex count (con4)");
  gen->add_option("-o", o_gen.output, "output file; the certificate goes to <file>.cert.json");
  gen->add_flag("--check", o_gen.check, "re-derive every certificate claim");
  gen->add_option("--budget", o_gen.budget, "solver node budget for --check");

  auto* transform = app.add_subcommand("transform", "Convert .hg <-> .bg (incidence graph).");
  Opts& o_transform = all_opts[transform];
  transform->add_option("input", o_transform.input)->required()->check(CLI::ExistingFile);
  transform->add_option("-o", o_transform.output, "output file");

  auto* conn = app.add_subcommand("conn", "Vertex connectivity.");
  Opts& o_conn = all_opts[conn];
  conn->add_option("input", o_conn.input)->required()->check(CLI::ExistingFile);
  conn->add_option("--k", o_conn.k, "also decide k-connectivity (exit 1 when not)");

  auto* fan = app.add_subcommand("fan", "Maximum fan from an X-vertex to a cycle.");
  Opts& o_fan = all_opts[fan];
  fan->add_option("input", o_fan.input)->required()->check(CLI::ExistingFile);
  fan->add_option("--apex", o_fan.apex, "X-vertex index")->required();
  fan->add_option("--cycle", o_fan.cycle_text, "cycle as \"x0 y0 x1 y1 ...\"")->required();

  auto* longest = app.add_subcommand("longest", "Exact longest cycle.");
  Opts& o_longest = all_opts[longest];
  longest->add_option("input", o_longest.input)->required()->check(CLI::ExistingFile);
  longest->add_option("--budget", o_longest.budget, "search node budget");

  auto* ham = app.add_subcommand("ham", "Decide whether a cycle covers every X-vertex.");
  Opts& o_ham = all_opts[ham];
  ham->add_option("input", o_ham.input)->required()->check(CLI::ExistingFile);
  ham->add_option("--budget", o_ham.budget, "search node budget");

  auto* improve = app.add_subcommand("improve", "Cycle-surgery local search.");
  Opts& o_improve = all_opts[improve];
  improve->add_option("input", o_improve.input)->required()->check(CLI::ExistingFile);
  improve->add_option("--budget", o_improve.budget, "rounds");
  improve->add_option("--seed", o_improve.seed);
  improve->add_flag("-v", o_improve.verbosity, "print the trace");

  auto* classify = app.add_subcommand("classify", "Triple statistics and segment types.");
  Opts& o_classify = all_opts[classify];
  classify->add_option("input", o_classify.input)->required()->check(CLI::ExistingFile);
  classify->add_option("--cycle", o_classify.cycle_text, "cycle as \"x0 y0 x1 y1 ...\"")->required();
  classify->add_option("--apex", o_classify.apex, "X-vertex off the cycle (default: best triple)");
  classify->add_flag("-v", o_classify.verbosity, "also list proposed moves");

  auto* verify = app.add_subcommand("verify", "Exhaustive check of a predicate over G(n,m,delta).");
  Opts& o_verify = all_opts[verify];
  verify->add_option("--n", o_verify.n_text, "n or lo..hi")->required();
  verify->add_option("--m", o_verify.m_text, "m or lo..hi (default: delta up to the bound)");
  verify->add_option("--delta", o_verify.delta_text)->required();
  verify->add_option("--predicate", o_verify.predicate)->check(CLI::IsMember(predicate_names()));
  verify->add_option("--k", o_verify.k, "connectivity for k_conn_general");
  verify->add_option("--jobs", o_verify.jobs);
  verify->add_option("--budget", o_verify.budget, "solver node budget per graph");
  verify->add_option("--seed", o_verify.seed);
  verify->add_option("--resume", o_verify.resume, "progress file");
  verify->add_option("--log", o_verify.log_path, "JSON-lines findings log");
  verify->add_option("--retry", o_verify.retry, "file collecting undecided graphs");
  verify->add_option("--shard-depth", o_verify.shard_depth, "rows fixed per shard");
  verify->add_option("-o", o_verify.output, "also write the report here");
  verify->add_flag("-v", o_verify.verbosity);

  auto* hunt_cmd = app.add_subcommand("hunt", "Random search for counterexamples.");
  Opts& o_hunt_cmd = all_opts[hunt_cmd];
  hunt_cmd->add_option("--n", o_hunt_cmd.n_text)->required();
  hunt_cmd->add_option("--m", o_hunt_cmd.m_text, "m or lo..hi")->required();
  hunt_cmd->add_option("--delta", o_hunt_cmd.delta_text)->required();
  hunt_cmd->add_option("--predicate", o_hunt_cmd.predicate)->check(CLI::IsMember(predicate_names()));
  hunt_cmd->add_option("--k", o_hunt_cmd.k, "connectivity for k_conn_general");
  hunt_cmd->add_option("--samples", o_hunt_cmd.samples, "graphs meeting the hypotheses to check");
  hunt_cmd->add_option("--jobs", o_hunt_cmd.jobs);
  hunt_cmd->add_option("--budget", o_hunt_cmd.budget, "solver node budget per graph");
  hunt_cmd->add_option("--seed", o_hunt_cmd.seed);
  hunt_cmd->add_option("--log", o_hunt_cmd.log_path, "JSON-lines findings log");
  hunt_cmd->add_option("-o", o_hunt_cmd.output, "also write the report here");
  hunt_cmd->add_flag("-v", o_hunt_cmd.verbosity);

  auto* sharp = app.add_subcommand("sharpness", "Measure G_k(parts; delta) at the bound.");
  Opts& o_sharp = all_opts[sharp];
  sharp->add_option("--k", o_sharp.k)->required();
  sharp->add_option("--delta", o_sharp.delta_text)->required();
  sharp->add_option("--parts", o_sharp.parts, "default: delta split evenly into k+1 parts");
  sharp->add_option("--budget", o_sharp.budget, "solver node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  const Opts& o = all_opts[active];
  const std::int64_t solver_budget = o.budget > 0 ? o.budget : kDefaultBudget;

  try {
    if (active == gen) {
      if (o.kind == "gk") {
        if (o.parts.empty() || o.delta_text.empty())
          throw UsageError("gen gk needs --parts and --delta");
        GkParams p{o.k, parse_list(o.parts, "--parts"), parse_int(o.delta_text, "--delta")};
        if (auto problems = validate(p); !problems.empty()) throw UsageError(problems.front());
        auto inst = build_gk(p);
        emit(o.output, format_bg(inst.graph), out);
        if (!o.output.empty()) {
          json cert = certificate_json(inst.cert);
          cert["params"] = {{"k", p.k}, {"parts", p.parts}, {"delta", p.delta}};
          write_file_atomic(o.output + ".cert.json", cert.dump(2) + "\n");
          out << "wrote " << o.output << " (n=" << inst.graph.n() << ", m=" << inst.graph.m()
              << ") and " << o.output << ".cert.json\n";
        }
        return o.check ? report_claims(inst.graph, inst.cert, solver_budget, out) : kExitOk;
      }
      if (o.n_text.empty()) throw UsageError("gen con4 needs --n");
      const int n = parse_int(o.n_text, "--n");
      if (n < 4) throw UsageError("gen con4 needs --n >= 4");
      auto inst = build_con4(n);
      emit(o.output, format_hg(inst.hypergraph), out);
      if (!o.output.empty()) {
        json cert = certificate_json(inst.cert);
        cert["params"] = {{"n", n},
                          {"v1_size", inst.v1_size},
                          {"v2_size", inst.v2_size},
                          {"edge_size", inst.edge_size}};
        write_file_atomic(o.output + ".cert.json", cert.dump(2) + "\n");
        out << "wrote " << o.output << " (" << inst.hypergraph.edges.size() << " edges) and "
            << o.output << ".cert.json\n";
      }
      return o.check ? report_claims(incidence_graph(inst.hypergraph), inst.cert, solver_budget, out)
                   : kExitOk;
    }

    if (active == transform) {
      const std::string text = read_file(o.input);
      if (ends_with(o.input, ".hg"))
        emit(o.output, format_bg(incidence_graph(parse_hg(text))), out);
      else
        emit(o.output, format_hg(to_hypergraph(parse_bg(text))), out);
      return kExitOk;
    }

    if (active == conn) {
      const auto in = load(o.input);
      out << "vertex connectivity: " << vertex_connectivity(in.graph) << "\n";
      if (conn->count("--k")) {
        const bool ok = is_k_connected(in.graph, o.k);
        out << o.k << "-connected: " << (ok ? "yes" : "no") << "\n";
        return ok ? kExitOk : kExitFailure;
      }
      return kExitOk;
    }

    if (active == fan) {
      const auto in = load(o.input);
      if (o.apex < 0 || o.apex >= in.graph.n()) throw UsageError("--apex out of range");
      const AltCycle c = read_cycle(in.graph, o.cycle_text);
      if (c.contains(xv(o.apex))) throw UsageError("--apex lies on the cycle");
      const Fan f = max_fan(in.graph, o.apex, c);
      out << "t = " << f.size() << " (Y-targets " << f.y_target_count() << ", |V(F)| = "
          << f.vertex_count() << ")\n";
      for (const auto& p : f.paths) out << "  " << format_vertices(p) << "\n";
      return kExitOk;
    }

    if (active == longest) {
      const auto in = load(o.input);
      auto r = longest_cycle(in.graph, solver_budget);
      if (r.status == SearchStatus::none) {
        out << "no cycle\n";
        return kExitOk;
      }
      out << (r.status == SearchStatus::found ? "longest cycle: " : "budget exhausted; best: ")
          << r.cycle->length() << "\n"
          << cycle_line(*r.cycle) << "\n";
      return r.status == SearchStatus::found ? kExitOk : kExitBudget;
    }

    if (active == ham) {
      const auto in = load(o.input);
      auto r = has_x_spanning_cycle(in.graph, solver_budget);
      const std::string what =
          in.hypergraph ? "Hamiltonian Berge cycle" : "X-spanning cycle";
      if (r.status == SearchStatus::budget_exceeded) {
        out << "undecided: budget exhausted after " << r.nodes << " nodes\n";
        return kExitBudget;
      }
      if (r.status == SearchStatus::none) {
        out << "no " << what << "\n";
        return kExitFailure;
      }
      out << what << ": " << cycle_line(*r.cycle) << "\n";
      if (in.hypergraph) {
        auto b = berge_from_incidence_cycle(*in.hypergraph, *r.cycle);
        out << "base vertices:";
        for (int v : b.base_vertices) out << " " << v;
        out << "\nedges:";
        for (int e : b.edges) out << " " << e;
        out << "\n";
      }
      return kExitOk;
    }

    if (active == improve) {
      const auto in = load(o.input);
      auto r = improve_search(in.graph, o.budget > 0 ? o.budget : 10000, o.seed);
      if (o.verbosity > 0)
        for (const auto& t : r.trace)
          out << "round " << t.round << " " << t.kind << " " << to_string(t.before) << " -> "
              << to_string(t.after) << "\n";
      out << "best cycle: " << r.best.length() << " (" << r.best.half_length() << " of "
          << in.graph.n() << " X-vertices)\n"
          << cycle_line(r.best) << "\n"
          << "rounds " << r.rounds << ", restarts " << r.restarts << "\n";
      if (r.spans_x) {
        out << "X-spanning cycle found\n";
        return kExitOk;
      }
      out << "no X-spanning cycle found within the budget\n";
      return kExitBudget;
    }

    if (active == classify) {
      const auto in = load(o.input);
      const auto& g = in.graph;
      const AltCycle c = read_cycle(g, o.cycle_text);
      std::optional<Triple> t;
      if (o.apex >= 0) {
        if (o.apex >= g.n() || c.contains(xv(o.apex))) throw UsageError("--apex must be off the cycle");
        t = triple_stats(g, c, o.apex, max_fan(g, o.apex, c));
      } else {
        t = best_triple(g, c);
      }
      if (!t) {
        out << "the cycle covers X\n";
        return kExitOk;
      }
      out << "apex x" << t->apex << ", key " << to_string(key_of(*t)) << "\n"
          << "t = " << t->t << " (t_X = " << t->t_x << ", t_Y = " << t->t_y << ")\n"
          << "T = " << vertex_list(t->targets) << "\n"
          << "T~ = " << vertex_list(t->neighbors) << " (" << t->t_tilde << ")\n"
          << "D = " << vertex_list(t->component) << "\n";
      if (t->t_tilde == 3) {
        auto seg = segment_view(*t);
        for (int i = 1; i <= 3; ++i)
          out << "U_" << i << " after " << to_string(seg.u(i)) << ": "
              << index_list(seg.segment_x(i), 'x') << (is_abundant(g, c, seg, i) ? " abundant" : "")
              << "\n";
        for (const auto& ct : classify_config_types(g, c, seg))
          out << "i=" << ct.i << " " << to_string(ct.kind)
              << (ct.degenerate ? " (degenerate pair)" : " type") << "\n";
        out << "2-rich: " << (is_two_rich(g, c, t->component, t->neighbors) ? "yes" : "no") << "\n";
      }
      auto moves = propose_moves(g, *t);
      out << moves.size() << " moves\n";
      if (o.verbosity > 0)
        for (const auto& mv : moves)
          out << "  " << mv.kind << " [" << to_string(mv.guarantee) << "] "
              << cycle_line(mv.new_cycle) << "\n";
      return kExitOk;
    }

    if (active == verify) {
      VerifyOptions vo;
      const Range n = parse_range(o.n_text, "--n");
      vo.n_lo = n.lo;
      vo.n_hi = n.hi;
      vo.delta = parse_int(o.delta_text, "--delta");
      vo.config = make_predicate(o.predicate.empty() ? "three_conn_quarter" : o.predicate, o.k);
      if (o.m_text.empty()) {
        vo.m_lo = vo.delta;
        vo.m_hi = vo.delta;
        for (int nn = n.lo; nn <= n.hi; ++nn)
          vo.m_hi = std::max(vo.m_hi, max_m(vo.config, nn, vo.delta));
      } else {
        const Range m = parse_range(o.m_text, "--m");
        vo.m_lo = m.lo;
        vo.m_hi = m.hi;
      }
      if (vo.n_lo < 1 || vo.m_lo < 1) throw UsageError("--n and --m must be positive");
      if (o.jobs < 1) throw UsageError("--jobs must be >= 1");
      vo.jobs = o.jobs;
      vo.budget = solver_budget;
      vo.seed = o.seed;
      vo.resume_path = o.resume;
      vo.log_path = o.log_path;
      vo.retry_path = o.retry;
      vo.shard_depth = o.shard_depth;
      vo.verbosity = o.verbosity;
      out << "predicate " << vo.config.name << ": " << describe(vo.config) << "\n";
      auto rep = verify_theorem(vo);
      const std::string text = format_report(rep);
      out << text;
      if (!o.output.empty()) write_file_atomic(o.output, text);
      if (rep.total.fail > 0) return kExitFailure;
      return rep.complete && rep.total.undecided == 0 ? kExitOk : kExitBudget;
    }

    if (active == hunt_cmd) {
      HuntOptions ho;
      ho.n = parse_int(o.n_text, "--n");
      const Range m = parse_range(o.m_text, "--m");
      ho.m_lo = m.lo;
      ho.m_hi = m.hi;
      ho.delta = parse_int(o.delta_text, "--delta");
      ho.config = make_predicate(o.predicate.empty() ? "three_conn_quarter" : o.predicate, o.k);
      if (o.jobs < 1) throw UsageError("--jobs must be >= 1");
      if (o.samples < 0) throw UsageError("--samples must be >= 0");
      ho.samples = o.samples;
      ho.jobs = o.jobs;
      ho.budget = solver_budget;
      ho.seed = o.seed;
      ho.log_path = o.log_path;
      ho.verbosity = o.verbosity;
      auto rep = hunt(ho);
      const std::string text = format_report(rep);
      out << text;
      if (!o.output.empty()) write_file_atomic(o.output, text);
      if (rep.tally.fail > 0) return kExitFailure;
      return rep.tally.undecided == 0 && rep.accepted == ho.samples ? kExitOk : kExitBudget;
    }

    if (active == sharp) {
      const int delta = parse_int(o.delta_text, "--delta");
      std::vector<int> p;
      if (!o.parts.empty()) p = parse_list(o.parts, "--parts");
      else if (delta < o.k + 1) throw UsageError("--delta must be at least k+1");
      GkParams check_params{o.k, p.empty() ? balanced_parts(delta, o.k + 1) : p, delta};
      if (auto problems = validate(check_params); !problems.empty())
        throw UsageError(problems.front());
      auto r = sharpness_report(o.k, delta, p, solver_budget);
      out << format_report(r);
      return r.spanning == SearchStatus::budget_exceeded ? kExitBudget : kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace berge::cli
