#pragma once

// The `lights-out` command line. run() is the whole program minus argv
// handling, so tests can drive it with string vectors and capture output.
//
// Exit codes: 0 success, 1 domain or input error, 2 usage error.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lights_out/analysis.hpp"
#include "lights_out/edgecalc.hpp"
#include "lights_out/errors.hpp"
#include "lights_out/graph.hpp"
#include "lights_out/graph_io.hpp"
#include "lights_out/oracle.hpp"
#include "lights_out/serialization.hpp"
#include "lights_out/service.hpp"
#include "lights_out/service_http.hpp"
#include "lights_out/verify.hpp"

namespace lights_out::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

struct Options {
  std::string graph_path;
  std::string named;
  std::string config;
  std::vector<std::size_t> set;
  std::vector<std::size_t> a1;
  std::vector<std::size_t> a2;
  std::optional<std::size_t> u;
  std::optional<std::size_t> v;
  std::size_t max_n = 5;
  std::size_t n = 1;
  std::string kind;
  bool json = false;
  bool strict_type6 = false;
  unsigned threads = 1;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t max_order = 64;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Graph load_graph(const Options& o) {
  if (!o.graph_path.empty() && !o.named.empty()) throw InputError("give either --graph or --named, not both");
  if (!o.named.empty()) return generate_named(o.named);
  if (o.graph_path.empty()) throw InputError("a graph is required: pass --graph <file> or --named <kind:params>");
  return parse_graph_auto(read_file(o.graph_path));
}

inline Type6Reading reading(const Options& o) {
  return o.strict_type6 ? Type6Reading::StrictText : Type6Reading::Amended;
}

inline std::string join_tags(const std::vector<ActivationClass>& classes) {
  std::string s;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) s += ' ';
    s += to_string(classes[i].tag);
  }
  return s;
}

inline std::string edge_text(const Edge& e) { return e.to_string(); }

inline std::size_t require(const std::optional<std::size_t>& x, const char* flag) {
  if (!x) throw InputError(std::string("missing ") + flag);
  return *x;
}

inline void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }
template <class J>
void print_json(std::ostream& out, const J& j) {
  out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

inline int cmd_analyze(const Options& o, std::ostream& out) {
  const auto summary = analyze(load_graph(o));
  if (o.json) {
    print_json(out, to_json(summary));
    return exit_ok;
  }
  out << "nullity: " << summary.nullity << '\n'
      << "always solvable: " << (summary.always_solvable ? "yes" : "no") << '\n'
      << "vertex classes: " << join_tags(summary.vertex_classes) << '\n'
      << "odd dominating pattern: " << summary.odd_dominating.particular.to_string() << " (one of "
      << (std::uint64_t{1} << summary.nullity) << ")\n";
  return exit_ok;
}

inline int cmd_solve(const Options& o, std::ostream& out) {
  const LightsOut system(load_graph(o));
  if (o.config.empty()) throw InputError("missing --config");
  const auto c = BitVector::from_string(o.config);
  const auto set = system.solve(c);
  if (!set) {
    const auto l = system.unsolvability_certificate(c);
    if (o.json) {
      print_json(out, {{"solvable", false}, {"certificate", l->to_string()}});
    } else {
      out << "unsolvable; null pattern " << l->to_string() << " has odd overlap with " << c.to_string() << '\n';
    }
    return exit_ok;
  }
  const auto count = std::uint64_t{1} << set->dimension();
  if (o.json) {
    print_json(out, {{"solvable", true}, {"pattern", set->particular.to_string()}, {"solution_count", count},
                     {"kernel_basis", to_json(set->kernel_basis)}});
  } else {
    out << "pattern: " << set->particular.to_string() << '\n'
        << count << (count == 1 ? " solution" : " solutions") << '\n';
  }
  return exit_ok;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
  const LightsOut system(load_graph(o));
  const std::size_t n = system.order();
  if (!o.set.empty()) {
    if (o.u || o.v) throw InputError("give either --set or --u/--v");
    const auto x = vertex_set_vector(n, o.set);
    const auto c = o.config.empty() ? BitVector::ones(n) : BitVector::from_string(o.config);
    const auto cls = system.classify(x, c);
    if (o.json) {
      print_json(out, to_json(cls));
    } else {
      out << to_string(cls.tag) << " relative to " << c.to_string() << '\n';
    }
    return exit_ok;
  }
  const auto u = require(o.u, "--set or --u/--v");
  const auto v = require(o.v, "--v");
  if (u >= n || v >= n) throw InputError("vertex out of range for n=" + std::to_string(n));
  const auto a = classify_edge_addition(system, u, v, reading(o));
  if (o.json) {
    print_json(out, to_json(a));
  } else {
    out << to_string(a.tag) << " (u=" << a.u << ", v=" << a.v << ")\n";
  }
  return exit_ok;
}

inline int cmd_star(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const std::size_t n = g.vertex_count();
  const StarSpec spec{normalize_vertex_set(o.a1, n, "a1"), normalize_vertex_set(o.a2, n, "a2")};
  const auto r = analyze_star(g, spec);
  if (o.json) {
    print_json(out, to_json(r));
    return exit_ok;
  }
  out << "classes before: A1 " << to_string(r.a1_before) << ", A2 " << to_string(r.a2_before) << '\n';
  if (r.aux.cross_tag) out << "A2 relative to complement of A1: " << to_string(*r.aux.cross_tag) << '\n';
  if (r.aux.union_tag) out << "A1 u A2: " << to_string(*r.aux.union_tag) << '\n';
  out << "predicted: delta nu " << r.predicted.delta_nu << ", A1 " << to_string(r.predicted.class_a1_after)
      << ", A2 " << to_string(r.predicted.class_a2_after) << '\n'
      << "actual:    delta nu " << r.actual_delta_nu << ", A1 " << to_string(r.a1_after) << ", A2 "
      << to_string(r.a2_after) << " (nullity " << r.nullity_before << " -> " << r.nullity_after << ")\n"
      << (r.agrees ? "agrees" : "DISAGREES") << '\n';
  return r.agrees ? exit_ok : exit_domain;
}

inline int cmd_whatif(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  nlohmann::json request{{"graph", graph_to_json(g)}, {"u", require(o.u, "--u")}, {"v", require(o.v, "--v")}};
  const auto r = service::whatif(request, {std::max(o.max_order, g.vertex_count()), reading(o)});
  if (o.json) {
    print_json(out, r);
    return exit_ok;
  }
  out << r["action"].get<std::string>() << ' ' << make_edge(*o.u, *o.v).to_string() << ": delta nu "
      << r["deltaNu"].get<int>() << " (nullity " << r["nullityBefore"].get<std::size_t>() << " -> "
      << r["nullityAfter"].get<std::size_t>() << ")\n";
  if (r.contains("additionType")) out << "addition type: " << r["additionType"].get<std::string>() << '\n';
  auto tags = [](const nlohmann::ordered_json& a) {
    std::string s;
    for (const auto& t : a) s += (s.empty() ? "" : " ") + t.get<std::string>();
    return s;
  };
  out << "classes before: " << tags(r["beforeClasses"]) << '\n' << "classes after:  " << tags(r["afterClasses"]) << '\n';
  return exit_ok;
}

inline int cmd_search(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  if (o.kind == "decrease") {
    const auto w = find_nullity_decreasing_edge(g);
    if (o.json) return print_json(out, to_json(w)), exit_ok;
    out << "remove " << edge_text(w.edge) << ": nullity " << w.nullity_before << " -> " << w.nullity_after << '\n';
  } else if (o.kind == "increase") {
    const auto w = find_nullity_increasing_addition(g);
    if (o.json) return print_json(out, w ? to_json(*w) : nlohmann::json(nullptr)), exit_ok;
    if (w) {
      out << "add " << edge_text(w->edge) << ": nullity " << w->nullity_before << " -> " << w->nullity_after << '\n';
    } else {
      out << "no addition increases the nullity\n";
    }
  } else if (o.kind == "minus2") {
    const auto e = find_delta_minus2_edit(g);
    if (o.json) return print_json(out, to_json(e)), exit_ok;
    out << to_string(e.action) << ' ' << edge_text(e.edge) << ": nullity " << e.nullity_before << " -> "
        << e.nullity_after << '\n';
  } else if (o.kind == "characterize") {
    const auto w = verify_characterization(g, reading(o));
    const bool replayed = replay_characterization(g, w, reading(o));
    if (o.json) {
      auto j = to_json(w);
      j["replayed"] = replayed;
      print_json(out, j);
    } else {
      out << "kind " << to_string(w.kind) << ": ";
      if (w.inner_edge) {
        out << "remove " << edge_text(w.edge) << " and " << edge_text(*w.inner_edge) << "; re-add "
            << edge_text(*w.inner_edge) << " (" << to_string(*w.inner_type) << "), then " << edge_text(w.edge)
            << " (" << to_string(w.type) << ")";
      } else {
        out << "remove " << edge_text(w.edge) << "; re-add it as " << to_string(w.type);
      }
      out << "\nnullity trajectory:";
      for (auto x : w.trajectory) out << ' ' << x;
      out << "\nreplay " << (replayed ? "ok" : "FAILED") << '\n';
    }
    return replayed ? exit_ok : exit_domain;
  } else if (o.kind == "degree-parity") {
    const auto r = check_degree_parity(g);
    if (o.json) return print_json(out, {{"outcome", std::string(to_string(r))}}), exit_ok;
    out << to_string(r) << '\n';
    return r == DegreeParityOutcome::Violated ? exit_domain : exit_ok;
  } else if (o.kind == "parity-lemma") {
    const LightsOut system(g);
    std::vector<std::size_t> vertices;
    if (o.u) {
      if (*o.u >= g.vertex_count()) throw InputError("vertex " + std::to_string(*o.u) + " out of range");
      vertices.push_back(*o.u);
    } else {
      for (std::size_t x = 0; x < g.vertex_count(); ++x) vertices.push_back(x);
    }
    bool all = true;
    nlohmann::json j = nlohmann::json::object();
    for (auto x : vertices) {
      const bool ok = check_parity_lemma(system, x);
      all = all && ok;
      j[std::to_string(x)] = ok;
      if (!o.json) out << "vertex " << x << ": " << (ok ? "holds" : "FAILS") << '\n';
    }
    if (o.json) print_json(out, j);
    return all ? exit_ok : exit_domain;
  } else {
    throw InputError("unknown search kind '" + o.kind + "'");
  }
  return exit_ok;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const auto report = full_verification(o.max_n, {std::max(1u, o.threads)}, reading(o));
  if (o.json) {
    print_json(out, to_json(report));
  } else {
    out << "graphs on 1.." << report.max_n << " vertices: " << report.graphs << '\n';
    for (const auto& c : report.checks) {
      out << (c.ok() ? "PASS " : "FAIL ") << c.name << ' ' << c.passed << '/' << c.checked;
      if (c.first_failure) out << " first failure " << c.first_failure->graph_id << ' ' << c.first_failure->details;
      out << '\n';
    }
  }
  return report.all_passed() ? exit_ok : exit_domain;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  const LabeledGraphs graphs(o.n);
  if (graphs.size() > (std::uint64_t{1} << 21)) {
    throw CapacityError("enumerate: " + std::to_string(graphs.size()) + " graphs is too many to list");
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& g : graphs) {
    const auto nu = nullity(g);
    if (o.json) {
      rows.push_back({{"graph_id", graph_id(g)}, {"graph6", to_graph6(g)}, {"nullity", nu}});
    } else {
      out << graph_id(g) << ' ' << to_graph6(g) << ' ' << nu << '\n';
    }
  }
  if (o.json) print_json(out, rows);
  return exit_ok;
}

inline int cmd_serve(const Options& o, std::ostream& out, std::ostream& err) {
  httplib::Server server;
  service::mount(server, {o.max_order, reading(o)});
  if (!server.bind_to_port(o.host, o.port)) {
    err << "error: cannot bind " << o.host << ':' << o.port << '\n';
    return exit_domain;
  }
  out << "listening on http://" << o.host << ':' << o.port << std::endl;
  return server.listen_after_bind() ? exit_ok : exit_domain;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lights Out analysis on graphs over GF(2)", "lights-out"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph_path, "graph file: JSON {\"n\", \"edges\"} or graph6");
    sub->add_option("--named", o.named, "generated graph, e.g. cycle:5, grid:3x3, union:path:2+path:2");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit JSON");
    sub->add_flag("--strict-type6", o.strict_type6, "Type-6 requires {u,v} to be HO instead of AO");
  };

  auto* analyze = app.add_subcommand("analyze", "nullity, vertex classes and an odd dominating pattern");
  add_graph(analyze);
  add_common(analyze);

  auto* solve = app.add_subcommand("solve", "solve a configuration");
  add_graph(solve);
  add_common(solve);
  solve->add_option("--config", o.config, "bitstring, vertex 0 first")->required();

  auto* classify = app.add_subcommand("classify", "class of a vertex set, or type of an edge addition");
  add_graph(classify);
  add_common(classify);
  classify->add_option("--set", o.set, "comma-separated vertices")->delimiter(',');
  classify->add_option("--config", o.config, "reference configuration (default all ones)");
  classify->add_option("--u", o.u, "first endpoint of an edge addition");
  classify->add_option("--v", o.v, "second endpoint of an edge addition");

  auto* star = app.add_subcommand("star", "predict and apply the star operation on A1, A2");
  add_graph(star);
  add_common(star);
  star->add_option("--a1", o.a1, "comma-separated vertices")->delimiter(',')->required();
  star->add_option("--a2", o.a2, "comma-separated vertices")->delimiter(',')->required();

  auto* whatif = app.add_subcommand("whatif", "effect of toggling the edge uv");
  add_graph(whatif);
  add_common(whatif);
  whatif->add_option("--u", o.u)->required();
  whatif->add_option("--v", o.v)->required();

  auto* search = app.add_subcommand("search", "witness searches");
  add_graph(search);
  add_common(search);
  search->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"decrease", "increase", "minus2", "characterize", "degree-parity", "parity-lemma"}));
  search->add_option("--u", o.u, "vertex for parity-lemma (default: all)");

  auto* verify = app.add_subcommand("verify", "exhaustive checks over all labeled graphs");
  verify->add_option("--max-n", o.max_n, "largest order")->check(CLI::Range(1, 6));
  verify->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
  add_common(verify);

  auto* enumerate = app.add_subcommand("enumerate", "list labeled graphs on n vertices with their nullity");
  enumerate->add_option("--n", o.n, "order")->required()->check(CLI::Range(1, 7));
  enumerate->add_flag("--json", o.json, "emit JSON");

  auto* serve = app.add_subcommand("serve", "JSON-over-HTTP service");
  serve->add_option("--port", o.port)->check(CLI::Range(0, 65535));
  serve->add_option("--host", o.host);
  serve->add_option("--max-order", o.max_order, "largest accepted graph");
  serve->add_flag("--strict-type6", o.strict_type6);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return exit_usage;
  }

  try {
    if (analyze->parsed()) return detail::cmd_analyze(o, out);
    if (solve->parsed()) return detail::cmd_solve(o, out);
    if (classify->parsed()) return detail::cmd_classify(o, out);
    if (star->parsed()) return detail::cmd_star(o, out);
    if (whatif->parsed()) return detail::cmd_whatif(o, out);
    if (search->parsed()) return detail::cmd_search(o, out);
    if (verify->parsed()) return detail::cmd_verify(o, out);
    if (enumerate->parsed()) return detail::cmd_enumerate(o, out);
    if (serve->parsed()) return detail::cmd_serve(o, out, err);
  } catch (const Error& e) {
    err << "error (" << e.code() << "): " << e.what() << '\n';
    return exit_domain;
  }
  return exit_usage;
}

}  // namespace lights_out::cli
