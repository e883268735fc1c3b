#include "dacol/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "dacol/defect.hpp"
#include "dacol/instances.hpp"
#include "dacol/oracles.hpp"
#include "dacol/planar.hpp"
#include "dacol/transversal.hpp"

namespace dacol {

bool CriterionResult::pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const AcceptanceRow& r) { return r.pass; });
}

namespace {

struct Instance {
  std::string name;
  PlaneGraph graph;
  std::vector<Coloring> colorings;
};

std::string show(const Coloring& phi) {
  std::string s = "[";
  for (std::size_t v = 0; v < phi.size(); ++v) s += (v ? "," : "") + std::to_string(phi.color[v]);
  return s + "]";
}

std::string show(const OracleValue& v) { return v ? std::to_string(*v) : "inf"; }

std::vector<Coloring> all_colorings(const PlaneGraph& g, int k) {
  std::vector<Coloring> out;
  for_each_coloring(g, k, false, [&](const Coloring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

// At least `count` random proper colourings, palettes cycling through 3, 4, 5.
std::vector<Coloring> sampled_colorings(const PlaneGraph& g, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Coloring> out;
  for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 6 * count; ++attempt) {
    if (auto c = random_proper_coloring(g, 3 + attempt % 3, rng)) out.push_back(std::move(*c));
  }
  return out;
}

// The graph/colouring pairs shared by criteria 1, 3, 4 and 10.
const std::vector<Instance>& core_suite(bool quick) {
  static std::map<bool, std::vector<Instance>> cache;
  auto it = cache.find(quick);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<std::string, PlaneGraph>> graphs;
  for (int n = 3; n <= 6; ++n) {
    auto part = catalog_of_order(n);
    for (std::size_t i = 0; i < part.size(); ++i) {
      graphs.emplace_back("catalog(" + std::to_string(n) + "," + std::to_string(i) + ")", part[i]);
    }
  }
  for (int t = 2; t <= 4; ++t) graphs.emplace_back("stacked_chain(" + std::to_string(t) + ")", stacked_chain(t));
  for (int n = 7; n <= 9; ++n) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      graphs.emplace_back("random(" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")",
                          random_triangulation(n, seed));
    }
  }
  std::vector<Instance> suite;
  for (auto& [name, g] : graphs) {
    if (quick && g.n() > 7) continue;
    Instance inst{name, g, {}};
    inst.colorings = g.n() <= 7 ? all_colorings(g, 5)
                                : sampled_colorings(g, 100, 7919u * static_cast<std::uint64_t>(suite.size() + 1));
    suite.push_back(std::move(inst));
  }
  return cache.emplace(quick, std::move(suite)).first->second;
}

class Runner {
 public:
  explicit Runner(const AcceptanceOptions& options) : options_(options) {}

  int m(const PlaneGraph& g, const Coloring& phi) const {
    return options_.m_value_override ? options_.m_value_override(g, phi) : m_value(g, phi);
  }

  void row(std::string claim, std::string instance, std::string expected, std::string computed, bool pass) {
    result_.rows.push_back({result_.criterion, std::move(claim), std::move(instance), std::move(expected),
                            std::move(computed), pass});
  }

  // Runs body; an exception becomes a failing row.
  template <class F>
  void guarded(const std::string& claim, const std::string& instance, F&& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      row(claim, instance, "no error", std::string("error: ") + ex.what(), false);
    }
  }

  CriterionResult run(int criterion) {
    result_ = {};
    result_.criterion = criterion;
    const auto start = std::chrono::steady_clock::now();
    switch (criterion) {
      case 1: formula_exactness(); break;
      case 2: eulerian_family(); break;
      case 3: u_acyclic_bounds(); break;
      case 4: optimal_u_acyclic(); break;
      case 5: extremal_tightness(); break;
      case 6: additivity(); break;
      case 7: defect(); break;
      case 8: lower_bound_family(); break;
      case 9: sandwich(); break;
      case 10: equality_characterization(); break;
      default: throw PreconditionError("criteria are numbered 1.." + std::to_string(kCriteria));
    }
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result_;
  }

 private:
  void formula_exactness() {
    result_.title = "m_value equals the exhaustive minimum transversal";
    const auto start = std::chrono::steady_clock::now();
    OracleLimits limits;
    for (const Instance& inst : core_suite(options_.quick)) {
      guarded("formula", inst.name, [&] {
        std::size_t agree = 0;
        std::string first_bad;
        for (const Coloring& phi : inst.colorings) {
          const int formula = m(inst.graph, phi);
          const int brute = brute_m(inst.graph, phi, limits);
          if (formula == brute) {
            ++agree;
          } else if (first_bad.empty()) {
            first_bad = show(phi) + ": " + std::to_string(formula) + " vs " + std::to_string(brute);
          }
        }
        const std::string all = std::to_string(inst.colorings.size());
        row("formula", inst.name, all + "/" + all + " colourings agree",
            std::to_string(agree) + "/" + all + (first_bad.empty() ? "" : " first mismatch " + first_bad),
            agree == inst.colorings.size() && !inst.colorings.empty());
      });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row("runtime", "criterion 1", "<= 300 s", secs <= 300.0 ? "within limit" : "over limit", secs <= 300.0);
  }

  void eulerian_family() {
    result_.title = "even double wheels: m(phi3) = n-3, apex recolourings <= n-5, G_ij 2-connected";
    for (int n : {6, 8, 10, 12}) {
      const std::string name = "even_double_wheel(" + std::to_string(n) + ")";
      guarded("3-colouring", name, [&] {
        const PlaneGraph g = even_double_wheel(n);
        const auto phi3 = eulerian_three_coloring(g);
        if (!phi3) {
          row("3-colouring", name, "exists", "none", false);
          return;
        }
        const int value = m(g, *phi3);
        row("m = n-3", name, std::to_string(n - 3), std::to_string(value), value == n - 3);
        int worst = -1;
        for (Vertex v = 0; v < g.n(); ++v) worst = std::max(worst, m(g, apex_recoloring(g, *phi3, v)));
        row("apex m <= n-5", name, "max <= " + std::to_string(n - 5), std::to_string(worst), worst <= n - 5);
        int connected = 0;
        for (int i = 1; i <= 3; ++i) {
          for (int j = i + 1; j <= 3; ++j) connected += is_two_connected(bichromatic_subgraph(g, *phi3, i, j).graph);
        }
        row("G_ij 2-connected", name, "3/3", std::to_string(connected) + "/3", connected == 3);
      });
    }
  }

  void u_acyclic_bounds() {
    result_.title = "U-acyclic transversals verify with |E'| <= n-|used| (n-5 on double wheels)";
    auto check = [&](const std::string& name, const PlaneGraph& g, const std::vector<Coloring>& colorings,
                     bool want_n5) {
      guarded("u-acyclic", name, [&] {
        const Triangle t = facial_triangles(g).front();
        const std::array<Vertex, 3> u{t[0], t[1], t[2]};
        std::size_t good = 0;
        std::string first_bad;
        for (const Coloring& phi : colorings) {
          const auto cert = u_acyclic_transversal(g, phi, u);
          const auto report = verify_certificate(g, phi, cert);
          bool ok = report.ok() && static_cast<long long>(cert.size) <= g.n() - phi.num_used();
          if (want_n5) ok = ok && cert.bound_kind == "n-5" && static_cast<long long>(cert.size) <= g.n() - 5;
          if (ok) {
            ++good;
          } else if (first_bad.empty()) {
            first_bad = show(phi) + " size " + std::to_string(cert.size);
          }
        }
        const std::string all = std::to_string(colorings.size());
        row("u-acyclic", name, all + "/" + all + (want_n5 ? " verified, <= n-5" : " verified, <= n-|used|"),
            std::to_string(good) + "/" + all + (first_bad.empty() ? "" : " first failure " + first_bad),
            good == colorings.size() && !colorings.empty());
      });
    };
    for (const Instance& inst : core_suite(options_.quick)) check(inst.name, inst.graph, inst.colorings, false);
    for (int n = 7; n <= (options_.quick ? 9 : 13); n += 2) {
      const PlaneGraph g = double_wheel(n);
      check("double_wheel(" + std::to_string(n) + ")", g, all_colorings(g, 4), true);
    }
  }

  void optimal_u_acyclic() {
    result_.title = "an optimal transversal exists that is U-acyclic for every facial U";
    OracleLimits limits;
    for (const Instance& inst : core_suite(options_.quick)) {
      if (inst.graph.n() > 8) continue;
      guarded("optimal", inst.name, [&] {
        const auto faces = facial_triangles(inst.graph);
        std::size_t good = 0, total = 0;
        std::string first_bad;
        for (const Coloring& phi : inst.colorings) {
          for (const Triangle& t : faces) {
            const std::array<Vertex, 3> u{t[0], t[1], t[2]};
            ++total;
            const auto found = brute_optimal_u_acyclic(inst.graph, phi, u, limits);
            const int want = m(inst.graph, phi);
            if (found && static_cast<int>(found->size) == want && found->no_u_path && found->kills_all) {
              ++good;
            } else if (first_bad.empty()) {
              first_bad = show(phi) + " U=" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                          std::to_string(t[2]) + (found ? " size " + std::to_string(found->size) : " none");
            }
          }
        }
        const std::string all = std::to_string(total);
        row("optimal", inst.name, all + "/" + all + " (colouring, face) pairs",
            std::to_string(good) + "/" + all + (first_bad.empty() ? "" : " first failure " + first_bad),
            good == total && total > 0);
      });
    }
  }

  void extremal_tightness() {
    result_.title = "m_4(double wheel) = n-5 and m_3(even double wheel) = n-3";
    const auto start = std::chrono::steady_clock::now();
    OracleLimits limits;
    auto one = [&](const std::string& name, const PlaneGraph& g, int k, int want) {
      guarded("m_k", name, [&] {
        const OracleValue got = brute_m_k(g, k, limits);
        row("m_" + std::to_string(k), name, std::to_string(want), show(got), got && *got == want);
      });
    };
    one("double_wheel(7)", double_wheel(7), 4, 2);
    if (!options_.quick) one("double_wheel(9)", double_wheel(9), 4, 4);
    one("even_double_wheel(6)", even_double_wheel(6), 3, 3);
    if (!options_.quick) one("even_double_wheel(8)", even_double_wheel(8), 3, 5);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row("runtime", "criterion 5", "<= 600 s", secs <= 600.0 ? "within limit" : "over limit", secs <= 600.0);
  }

  void additivity() {
    result_.title = "m is additive over the 4-connected pieces";
    std::vector<std::pair<std::string, PlaneGraph>> graphs;
    for (int t = 1; t <= 5; ++t) graphs.emplace_back("stacked_chain(" + std::to_string(t) + ")", stacked_chain(t));
    graphs.emplace_back("glued_even_double_wheels(6,8)", glued_even_double_wheels(6, 8));
    std::uint64_t seed = 17;
    for (const auto& [name, g] : graphs) {
      guarded("additivity", name, [&] {
        const auto colorings = sampled_colorings(g, 20, seed++);
        std::size_t good = 0;
        std::string first_bad;
        for (const Coloring& phi : colorings) {
          const Composition c = compose_over_decomposition(g, phi);
          const int whole = m(g, phi);
          if (c.total == whole) {
            ++good;
          } else if (first_bad.empty()) {
            first_bad = show(phi) + ": " + std::to_string(c.total) + " vs " + std::to_string(whole);
          }
        }
        const std::string all = std::to_string(colorings.size());
        row("additivity", name, all + "/" + all + " sums equal m",
            std::to_string(good) + "/" + all + (first_bad.empty() ? "" : " first mismatch " + first_bad),
            good == colorings.size() && colorings.size() >= 20);
      });
    }
  }

  void defect() {
    result_.title = "defect pipeline meets floor((3n-12)/5) and floor((13n-42)/10)";
    std::vector<std::pair<std::string, PlaneGraph>> graphs{
        {"octahedron", octahedron()}, {"icosahedron", icosahedron()}, {"double_wheel(9)", double_wheel(9)}};
    for (int n = 12; n <= 16; ++n) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        graphs.emplace_back("random(" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")",
                            random_triangulation(n, seed));
      }
    }
    for (const auto& [name, g] : graphs) {
      guarded("defect", name, [&] {
        const DefectBounds b = defect_bounds(g);
        for (const DefectReport* r : {&b.four, &b.three}) {
          const bool acyclic = is_acyclic_coloring(g.without_edges(r->deleted), r->coloring) &&
                               r->coloring.num_used() <= r->k;
          row("k=" + std::to_string(r->k), name, "<= " + std::to_string(r->bound_floor) + ", acyclic",
              std::to_string(r->deleted.size()) + (acyclic ? ", acyclic" : ", NOT acyclic"), r->met && acyclic);
        }
      });
    }
  }

  void lower_bound_family() {
    result_.title = "octahedron is not acyclically 4-colourable; replacement forces 4 deletions at n = 18";
    guarded("exhaustive", "octahedron", [&] {
      const PlaneGraph g = octahedron();
      int acyclic = 0;
      int assignments = 0;
      std::vector<int> col(6, 1);
      while (true) {
        ++assignments;
        Coloring phi(col, 4);
        if (is_proper(g, phi) && !two_colored_cycle(g, phi)) ++acyclic;
        int i = 0;
        while (i < 6 && col[i] == 4) col[i++] = 1;
        if (i == 6) break;
        ++col[i];
      }
      row("exhaustive", "octahedron", "0 of 4096 acyclic",
          std::to_string(acyclic) + " of " + std::to_string(assignments) + " acyclic", acyclic == 0 && assignments == 4096);
      const auto search = search_coloring(g, 4, true);
      row("search", "octahedron", "no acyclic 4-colouring",
          search.status == SearchStatus::NoColoring ? "none" : "found or budget", search.status == SearchStatus::NoColoring);
    });
    guarded("replacement", "octahedron_replacement(octahedron)", [&] {
      const auto rep = octahedron_replacement(octahedron());
      const PlaneGraph& g = rep.graph;
      const std::string name = "octahedron_replacement(octahedron)";
      row("order", name, "18", std::to_string(g.n()), g.n() == 18);
      std::map<Edge, int> owner;
      bool blocks_ok = true;
      for (const auto& block : rep.blocks) {
        const Subgraph sub = g.induced(block);
        bool regular = sub.graph.num_edges() == 12;
        for (Vertex x = 0; x < 6; ++x) regular = regular && sub.graph.degree(x) == 4;
        regular = regular && search_coloring(sub.graph, 4, true).status == SearchStatus::NoColoring;
        blocks_ok = blocks_ok && regular;
        for (const Edge& e : sub.graph.edges()) ++owner[make_edge(sub.to_parent[e.u], sub.to_parent[e.v])];
      }
      bool partition = owner.size() == g.num_edges();
      for (const auto& [e, count] : owner) partition = partition && count == 1;
      row("blocks", name, "4 octahedra", std::to_string(rep.blocks.size()) + (blocks_ok ? " octahedra" : " (bad block)"),
          rep.blocks.size() == 4 && blocks_ok);
      row("partition", name, "edge-disjoint cover of " + std::to_string(g.num_edges()) + " edges",
          partition ? "partition" : "not a partition", partition);
      const int lower = static_cast<int>(rep.blocks.size());
      row("m'_4 lower bound", name, "4 = (n-2)/4", std::to_string(lower), partition && blocks_ok && lower * 4 == g.n() - 2);
    });
  }

  void sandwich() {
    result_.title = "m_k >= m''_k >= m'_k on the catalog; octahedron (1, 1, 1) at k = 4";
    OracleLimits limits;
    const auto& cat = catalog_small();
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const PlaneGraph& g = cat[i];
      const std::string name = "catalog(" + std::to_string(g.n()) + ") #" + std::to_string(i);
      for (int k : {3, 4}) {
        guarded("sandwich", name, [&] {
          const OracleValue mk = brute_m_k(g, k, limits);
          const int mdp = brute_m_dprime(g, k, limits);
          const int mp = brute_m_prime(g, k, limits);
          const bool ok = (!mk || *mk >= mdp) && mdp >= mp;
          row("sandwich k=" + std::to_string(k), name, "m_k >= m''_k >= m'_k",
              show(mk) + " >= " + std::to_string(mdp) + " >= " + std::to_string(mp), ok);
        });
      }
    }
    guarded("octahedron", "octahedron", [&] {
      const PlaneGraph g = octahedron();
      const OracleValue mk = brute_m_k(g, 4, limits);
      const int mdp = brute_m_dprime(g, 4, limits);
      const int mp = brute_m_prime(g, 4, limits);
      row("k=4 values", "octahedron", "(1, 1, 1)",
          "(" + show(mk) + ", " + std::to_string(mdp) + ", " + std::to_string(mp) + ")",
          mk && *mk == 1 && mdp == 1 && mp == 1);
    });
  }

  void equality_characterization() {
    result_.title = "structural equality test agrees with m_value";
    for (const Instance& inst : core_suite(options_.quick)) {
      guarded("equality", inst.name, [&] {
        std::size_t good = 0;
        std::string first_bad;
        const int n = inst.graph.n();
        for (const Coloring& phi : inst.colorings) {
          const EqualityResult r = characterize_equality(inst.graph, phi);
          const int value = m(inst.graph, phi);
          const Equality by_value = value == n - 3   ? Equality::EqualsNMinus3
                                    : value == n - 4 ? Equality::EqualsNMinus4
                                                     : Equality::Below;
          if (by_value == r.by_structure) {
            ++good;
          } else if (first_bad.empty()) {
            first_bad = show(phi) + ": " + to_string(r.by_structure) + " vs m = " + std::to_string(value);
          }
        }
        const std::string all = std::to_string(inst.colorings.size());
        row("equality", inst.name, all + "/" + all + " agree",
            std::to_string(good) + "/" + all + (first_bad.empty() ? "" : " first mismatch " + first_bad),
            good == inst.colorings.size() && !inst.colorings.empty());
      });
    }
  }

  const AcceptanceOptions& options_;
  CriterionResult result_;
};

}  // namespace

CriterionResult run_criterion(int criterion, const AcceptanceOptions& options) {
  return Runner(options).run(criterion);
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int c = 1; c <= kCriteria; ++c) out.push_back(run_criterion(c, options));
  return out;
}

void print_rows(std::ostream& out, const CriterionResult& result) {
  for (const auto& r : result.rows) {
    out << r.criterion << '\t' << r.claim << '\t' << r.instance << '\t' << r.expected << '\t' << r.computed << '\t'
        << (r.pass ? "pass" : "FAIL") << '\n';
  }
}

}  // namespace dacol
