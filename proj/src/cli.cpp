#include "dacol/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dacol/acceptance.hpp"
#include "dacol/defect.hpp"
#include "dacol/graph_io.hpp"
#include "dacol/instances.hpp"
#include "dacol/oracles.hpp"
#include "dacol/planar.hpp"
#include "dacol/transversal.hpp"

namespace dacol::cli {

namespace {

struct IoError : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
};

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

GraphFile load(const std::string& path, std::istream& in) {
  std::istringstream text(read_all(path, in));
  return parse_graph_file(text);
}

// The graph, embedded when it is a triangulation without a rotation.
PlaneGraph load_graph(const GraphFile& doc) {
  PlaneGraph g = to_graph(doc);
  if (!g.has_rotation() && is_triangulation(g)) g = embed_triangulation(g);
  return g;
}

Coloring resolve_coloring(const std::string& spec, const GraphFile& doc, const PlaneGraph& g, std::istream& in) {
  if (spec == "3col") {
    auto phi = eulerian_three_coloring(g);
    if (!phi) throw PreconditionError("3col needs every degree even");
    return *phi;
  }
  if (!spec.empty()) {
    std::istringstream text(read_all(spec, in));
    return parse_coloring_file(text);
  }
  if (doc.coloring) return *doc.coloring;
  throw UsageError("no colouring: add a coloring block or pass --coloring FILE|3col");
}

std::vector<Vertex> parse_u(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("--u expects comma-separated vertices, got '" + text + "'");
    }
  }
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

void print_report(std::ostream& out, const ValidationReport& report) {
  for (const auto& c : report.checks) {
    out << "check " << c.name << ' ' << (c.passed ? "pass" : "fail");
    if (!c.message.empty()) out << " : " << c.message;
    out << '\n';
  }
}

void print_certificate(std::ostream& out, const TransversalCertificate& cert) {
  out << "size " << cert.size << '\n' << serialize_edges(cert.edges);
  out << "# method " << cert.method << "; kills_all " << yes(cert.kills_all) << "; forest " << yes(cert.forest)
      << "; no_u_path " << yes(cert.no_u_path) << "; bound " << cert.bound_kind << " = " << cert.bound << " "
      << (cert.bound_met ? "met" : "NOT met") << "; optimal " << yes(cert.optimal) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Acyclic colourings, 2-coloured cycle transversals and defect bounds for plane triangulations",
               "dacol"};
  app.require_subcommand(1);

  std::string file;
  std::string coloring_spec;
  int k = 4;
  bool acyclic = false;
  std::uint64_t budget = kDefaultNodeBudget;
  std::string avoid_file;
  std::string u_text;
  bool has_u = false;
  std::string method = "auto";
  bool triangulation = false;
  std::vector<std::string> gen_args;
  std::uint64_t seed = 1;
  std::string oracle_kind;
  bool quick = false;
  int only = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check simplicity, connectivity, Euler and triangulation");
  validate_cmd->add_option("file", file, "graph file (default stdin)");
  validate_cmd->add_flag("--triangulation", triangulation, "require a triangulation");

  auto* faces_cmd = app.add_subcommand("faces", "List the facial walks");
  faces_cmd->add_option("file", file);

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a triangulation at separating triangles");
  decompose_cmd->add_option("file", file);

  auto* color_cmd = app.add_subcommand("color", "Search a (acyclic) k-colouring");
  color_cmd->add_option("file", file);
  color_cmd->add_option("--k", k, "palette size")->required();
  color_cmd->add_flag("--acyclic", acyclic, "forbid 2-coloured cycles");
  color_cmd->add_option("--budget", budget, "search node budget");

  auto* m_cmd = app.add_subcommand("m-value", "Minimum 2-coloured cycle transversal size");
  m_cmd->add_option("file", file);
  m_cmd->add_option("--coloring", coloring_spec, "colouring file or 3col");

  auto* tr_cmd = app.add_subcommand("transversal", "Compute and verify a transversal");
  tr_cmd->add_option("file", file);
  tr_cmd->add_option("--coloring", coloring_spec, "colouring file or 3col");
  tr_cmd->add_option("--avoid", avoid_file, "edges to keep out of the transversal");
  tr_cmd->add_option("--u", u_text, "clique U, e.g. 0,1,2 (U-acyclic mode)");
  tr_cmd->add_option("--method", method, "auto or face-recursion (U-acyclic mode)")
      ->check(CLI::IsMember({"auto", "face-recursion"}));

  auto* defect_cmd = app.add_subcommand("defect", "Edge deletions for an acyclic 4- or 3-colouring");
  defect_cmd->add_option("file", file);
  defect_cmd->add_option("--k", k, "3 or 4")->check(CLI::IsMember({3, 4}));
  defect_cmd->add_option("--coloring", coloring_spec, "acyclic 5-colouring to start from");
  defect_cmd->add_option("--budget", budget, "5-colouring search node budget");

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("family", gen_args, "FAMILY PARAMS...")->required();
  gen_cmd->add_option("--seed", seed, "seed for random families");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference values");
  oracle_cmd->add_option("kind", oracle_kind)->required()->check(
      CLI::IsMember({"m", "mk", "mprime", "mdprime", "uacyclic"}));
  oracle_cmd->add_option("file", file);
  oracle_cmd->add_option("--k", k, "palette size");
  oracle_cmd->add_option("--coloring", coloring_spec, "colouring file or 3col");
  oracle_cmd->add_option("--u", u_text, "clique U for uacyclic (default: first face)");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run every acceptance check");
  verify_cmd->add_flag("--quick", quick, "oracles only up to n = 7");
  verify_cmd->add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, kCriteria));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: usage: " << e.what() << '\n';
    return kUsage;
  }
  for (const auto* opt : {tr_cmd->get_option("--u"), oracle_cmd->get_option("--u")}) has_u = has_u || opt->count() > 0;

  try {
    if (*validate_cmd) {
      const GraphFile doc = load(file, in);
      ValidationReport report = check_simple(doc);
      if (report.ok()) report = validate(to_graph(doc), triangulation || doc.triangulation_flag);
      print_report(out, report);
      out << (report.ok() ? "# valid\n" : "# invalid\n");
      return report.ok() ? kOk : kCheckFailed;
    }
    if (*faces_cmd) {
      const PlaneGraph g = load_graph(load(file, in));
      const auto fs = faces(g);
      out << "faces " << fs.size() << '\n';
      for (const auto& f : fs) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << '\n';
      }
      return kOk;
    }
    if (*decompose_cmd) {
      const PlaneGraph g = load_graph(load(file, in));
      const DecompositionTree tree = decompose(g);
      out << "pieces " << tree.pieces.size() << '\n';
      for (std::size_t p = 0; p < tree.pieces.size(); ++p) {
        std::vector<Vertex> verts = tree.piece_maps[p];
        std::sort(verts.begin(), verts.end());
        out << "piece " << p << ':';
        for (Vertex v : verts) out << ' ' << v;
        out << '\n';
      }
      for (std::size_t t = 0; t < tree.triangles.size(); ++t) {
        const auto& tri = tree.triangles[t];
        out << "triangle " << t << ": " << tri[0] << ' ' << tri[1] << ' ' << tri[2] << '\n';
      }
      for (const auto& e : tree.tree_edges) out << "tree " << e.piece_a << ' ' << e.piece_b << ' ' << e.triangle << '\n';
      return kOk;
    }
    if (*color_cmd) {
      const GraphFile doc = load(file, in);
      const PlaneGraph g = load_graph(doc);
      const SearchResult r = search_coloring(g, k, acyclic, budget);
      if (r.status != SearchStatus::Found) {
        out << "status " << (r.status == SearchStatus::NoColoring ? "none" : "budget-exhausted") << '\n';
        out << "# nodes " << r.nodes << '\n';
        return kCheckFailed;
      }
      out << "# status found; nodes " << r.nodes << '\n';
      out << serialize(g, r.coloring, doc.triangulation_flag);
      return kOk;
    }
    if (*m_cmd) {
      const GraphFile doc = load(file, in);
      const PlaneGraph g = load_graph(doc);
      const Coloring phi = resolve_coloring(coloring_spec, doc, g, in);
      out << m_value(g, phi) << '\n';
      for (const auto& s : pair_statistics(g, phi)) {
        out << "# pair " << s.color_a << ' ' << s.color_b << ": vertices " << s.vertices << ", edges " << s.edges
            << ", components " << s.components << '\n';
      }
      return kOk;
    }
    if (*tr_cmd) {
      const GraphFile doc = load(file, in);
      const PlaneGraph g = load_graph(doc);
      const Coloring phi = resolve_coloring(coloring_spec, doc, g, in);
      TransversalCertificate cert;
      if (has_u) {
        if (!avoid_file.empty()) throw UsageError("--avoid and --u cannot be combined");
        const auto u = parse_u(u_text);
        cert = method == "face-recursion" ? face_recursive_transversal(g, phi, u, true)
                                          : u_acyclic_transversal(g, phi, u);
      } else {
        EdgeSet avoid;
        if (!avoid_file.empty()) {
          std::istringstream text(read_all(avoid_file, in));
          avoid = parse_edge_list(text);
        }
        cert = min_transversal(g, phi, avoid);
      }
      print_certificate(out, cert);
      const ValidationReport report = verify_certificate(g, phi, cert, has_u);
      for (const auto& c : report.checks) {
        out << "# check " << c.name << ' ' << (c.passed ? "pass" : "fail") << (c.message.empty() ? "" : " : " + c.message)
            << '\n';
      }
      return report.ok() ? kOk : kCheckFailed;
    }
    if (*defect_cmd) {
      const GraphFile doc = load(file, in);
      const PlaneGraph g = load_graph(doc);
      std::optional<Coloring> start;
      if (!coloring_spec.empty()) start = resolve_coloring(coloring_spec, doc, g, in);
      const DefectBounds b = defect_bounds(g, start, budget);
      const DefectReport& r = k == 3 ? b.three : b.four;
      out << "deleted " << r.deleted.size() << '\n' << serialize_edges(r.deleted) << serialize_coloring(r.coloring);
      out << "# k " << r.k << "; bound " << r.bound << " (floor " << r.bound_floor << ") " << (r.met ? "met" : "NOT met")
          << "; class " << r.chosen_class << "; source " << r.source << '\n';
      return r.met ? kOk : kCheckFailed;
    }
    if (*gen_cmd) {
      std::string family = gen_args.at(0);
      bool replace = false;
      std::size_t first = 1;
      if (family == "octahedron-replacement") {
        if (gen_args.size() < 2) throw UsageError("octahedron-replacement needs an inner FAMILY");
        replace = true;
        family = gen_args[1];
        first = 2;
      }
      std::vector<long long> params;
      for (std::size_t i = first; i < gen_args.size(); ++i) {
        try {
          std::size_t used = 0;
          params.push_back(std::stoll(gen_args[i], &used));
          if (used != gen_args[i].size()) throw std::invalid_argument(gen_args[i]);
        } catch (const std::exception&) {
          throw UsageError("parameter '" + gen_args[i] + "' is not an integer");
        }
      }
      const InstanceDescriptor d = generate(family, params, seed);
      if (!replace) {
        out << "# " << d.family;
        for (long long p : params) out << ' ' << p;
        out << "; " << d.provenance << '\n' << serialize(d.graph, std::nullopt, is_triangulation(d.graph));
        return kOk;
      }
      const OctahedronReplacement rep = octahedron_replacement(d.graph);
      out << "# octahedron-replacement of " << d.family;
      for (long long p : params) out << ' ' << p;
      out << "; " << d.provenance << '\n' << serialize(rep.graph, std::nullopt, is_triangulation(rep.graph));
      for (const auto& block : rep.blocks) {
        out << "# block";
        for (Vertex v : block) out << ' ' << v;
        out << '\n';
      }
      return kOk;
    }
    if (*oracle_cmd) {
      const GraphFile doc = load(file, in);
      const PlaneGraph g = load_graph(doc);
      const OracleLimits limits = OracleLimits::from_env();
      if (oracle_kind == "mk") {
        const OracleValue v = brute_m_k(g, k, limits);
        out << (v ? std::to_string(*v) : "inf") << '\n';
      } else if (oracle_kind == "mprime") {
        out << brute_m_prime(g, k, limits) << '\n';
      } else if (oracle_kind == "mdprime") {
        out << brute_m_dprime(g, k, limits) << '\n';
      } else {
        const Coloring phi = resolve_coloring(coloring_spec, doc, g, in);
        if (oracle_kind == "m") {
          out << brute_m(g, phi, limits) << '\n';
          return kOk;
        }
        std::vector<Vertex> u;
        if (has_u) {
          u = parse_u(u_text);
        } else if (is_triangulation(g)) {
          const Triangle t = facial_triangles(g).front();
          u = {t[0], t[1], t[2]};
        }
        const auto cert = brute_optimal_u_acyclic(g, phi, u, limits);
        if (!cert) {
          out << "none\n";
          return kCheckFailed;
        }
        print_certificate(out, *cert);
      }
      return kOk;
    }
    if (*verify_cmd) {
      AcceptanceOptions options;
      options.quick = quick;
      out << "# criterion\tclaim\tinstance\texpected\tcomputed\tresult\n";
      bool all = true;
      for (int c = 1; c <= kCriteria; ++c) {
        if (only && c != only) continue;
        const CriterionResult r = run_criterion(c, options);
        print_rows(out, r);
        out << "# criterion " << c << ' ' << (r.pass() ? "pass" : "FAIL") << ": " << r.title << '\n';
        all = all && r.pass();
      }
      return all ? kOk : kCheckFailed;
    }
  } catch (const IoError& e) {
    err << "error: io: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeGuardExceeded& e) {
    err << "error: size-guard: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidGraph& e) {
    err << "error: invalid-graph: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const NotTriangulation& e) {
    err << "error: not-triangulation: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const MissingRotation& e) {
    err << "error: missing-rotation: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: internal: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace dacol::cli
