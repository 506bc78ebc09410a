#include "nesto/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nesto/buildset.hpp"
#include "nesto/graph.hpp"
#include "nesto/invariants.hpp"
#include "nesto/nestopoly.hpp"
#include "nesto/qsym.hpp"
#include "nesto/verify.hpp"

namespace nesto {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  bool json = false;
  int jobs = 1;

  std::string graph;
  std::string route = "recurrence";
  std::string basis;
  std::optional<long long> chi;

  std::string sets;
  std::string restrict_to;
  std::string contract_by;
  bool validate = false;
  bool strict = false;

  std::string family;
  int n = 0;
  bool vertices = false;
  bool fvector = false;
  bool coords = false;

  std::string qsym;
  std::string invariant = "F";
  bool connected = false;
  std::string suite = "acceptance";
  int criterion = 0;
  bool kernel = false;
};

// Reads `arg` as a file when one exists at that path, else returns it as is.
std::string file_or_inline(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return parse_graph_text(file_or_inline(arg));
  return parse_graph_spec(arg);
}

BuildingSet load_buildset(const std::string& arg, bool strict) {
  return parse_buildset_json(file_or_inline(arg), strict ? SingletonPolicy::Strict : SingletonPolicy::AutoInsert);
}

ojson j(const std::string& serialized) { return ojson::parse(serialized); }

std::string vec_string(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string graph_label(const Graph& g) { return to_graph6(g) + " [" + edge_list_string(g) + "]"; }

Basis parse_basis(const std::string& s) {
  if (s == "M") return Basis::M;
  if (s == "L") return Basis::L;
  throw InvalidInput("basis must be M or L");
}

// ------------------------------------------------------------------ commands

int cmd_invariant(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const Basis basis = o.basis.empty() ? Basis::M : parse_basis(o.basis);
  std::vector<std::pair<std::string, QSymElement>> results;
  auto want = [&](const char* name) { return o.route == "all" || o.route == name; };
  if (want("splitting")) results.emplace_back("splitting", F_splitting(from_graph(g)));
  if (want("trees")) results.emplace_back("trees", F_btree_route(from_graph(g)));
  if (want("colorings")) results.emplace_back("colorings", F_graph_colorings(g));
  if (want("recurrence")) results.emplace_back("recurrence", F_graph_recurrence(g));
  const bool agree = std::all_of(results.begin(), results.end(),
                                 [&](const auto& r) { return r.second == results.front().second; });
  std::optional<Coeff> ps;
  if (o.chi) ps = principal_specialization(results.front().second, *o.chi);

  if (o.json) {
    ojson doc;
    doc["graph"] = j(to_json(g));
    doc["routes"] = ojson::object();
    for (const auto& [name, f] : results) doc["routes"][name] = j(to_json(in_basis(f, basis)));
    doc["agree"] = agree;
    if (ps) doc["ps"] = {{"m", *o.chi}, {"value", *ps}};
    out << doc.dump() << "\n";
  } else {
    out << "graph: n=" << g.size() << " edges " << (g.edge_count() ? edge_list_string(g) : "none") << "\n";
    for (const auto& [name, f] : results) out << name << ": " << to_string(in_basis(f, basis)) << "\n";
    if (results.size() > 1) out << (agree ? "routes agree" : "ROUTES DISAGREE") << "\n";
    if (ps) out << "ps(" << *o.chi << ") = " << *ps << "\n";
  }
  return agree ? kExitOk : kExitVerificationFailed;
}

int cmd_buildset(const Options& o, std::ostream& out) {
  const BuildingSet b = load_buildset(o.sets, o.strict);
  const int n = b.ground_size();
  std::optional<std::pair<std::string, BuildingSet>> derived;
  if (!o.restrict_to.empty())
    derived.emplace("restriction to " + set_string(parse_vertex_set(o.restrict_to, n), n),
                    restriction(b, parse_vertex_set(o.restrict_to, n)));
  if (!o.contract_by.empty())
    derived.emplace("contraction of " + set_string(parse_vertex_set(o.contract_by, n), n),
                    contraction(b, parse_vertex_set(o.contract_by, n)));

  if (o.json) {
    ojson doc;
    doc["valid"] = true;
    doc["buildset"] = j(to_json(b));
    if (!o.validate) {
      doc["size"] = b.size();
      doc["connected"] = b.is_connected();
      doc["components"] = ojson::array();
      for (const auto& c : components(b)) {
        std::vector<int> support;
        for_each_bit(c.support, [&](int i) { support.push_back(i + 1); });
        doc["components"].push_back(support);
      }
      if (derived) doc["result"] = {{"operation", derived->first}, {"buildset", j(to_json(derived->second))}};
    }
    out << doc.dump() << "\n";
    return kExitOk;
  }
  if (o.validate) {
    out << "valid: " << to_string(b) << "\n";
    return kExitOk;
  }
  out << "building set on [" << n << "]: " << to_string(b) << "\n";
  out << "members: " << b.size() << "\n";
  out << "connected: " << (b.is_connected() ? "yes" : "no") << "\n";
  out << "components:";
  for (const auto& c : components(b)) out << " " << set_string(c.support, n);
  out << "\n";
  if (derived) out << derived->first << ": " << to_string(derived->second) << "\n";
  return kExitOk;
}

int cmd_polytope(const Options& o, std::ostream& out) {
  const PolytopeFamily fam = parse_polytope_family(o.family);
  const Graph g = defining_graph(fam, o.n);
  const BuildingSet b = from_graph(g);
  if (o.fvector) {
    const auto fv = face_vector(b);
    if (o.json)
      out << ojson{{"family", polytope_family_name(fam)}, {"n", o.n}, {"fvector", fv}}.dump() << "\n";
    else
      out << vec_string(fv) << "\n";
    return kExitOk;
  }
  const auto vertices = maximal_nested_sets(b);
  if (o.coords) {
    ojson list = ojson::array();
    for (const auto& nested : vertices) {
      const auto x = vertex_coordinates(b, nested);
      if (o.json) {
        std::vector<std::string> members;
        for (Mask s : nested) members.push_back(set_string(s, o.n));
        list.push_back({{"nested", members}, {"coords", x}});
      } else {
        out << nested_set_string(nested, o.n) << " " << vec_string(x) << "\n";
      }
    }
    if (o.json) out << ojson{{"family", polytope_family_name(fam)}, {"n", o.n}, {"vertices", list}}.dump() << "\n";
    return kExitOk;
  }
  if (o.json)
    out << ojson{{"family", polytope_family_name(fam)}, {"n", o.n}, {"vertices", vertices.size()}}.dump() << "\n";
  else
    out << vertices.size() << "\n";
  return kExitOk;
}

int cmd_chromatic(const Options& o, std::ostream& out) {
  const SymElement x = chromatic_symmetric(load_graph(o.graph));
  out << (o.json ? to_json(x) : to_string(x)) << "\n";
  return kExitOk;
}

int cmd_antipode(const Options& o, std::ostream& out) {
  QSymElement f;
  if (!o.graph.empty()) {
    f = F_splitting(from_graph(load_graph(o.graph)));
  } else {
    f = parse_qsym(file_or_inline(o.qsym));
  }
  const Basis basis = !o.basis.empty() ? parse_basis(o.basis) : (o.graph.empty() ? f.basis() : Basis::L);
  const QSymElement s = in_basis(antipode(f), basis);
  out << (o.json ? to_json(s) : to_string(s)) << "\n";
  return kExitOk;
}

int cmd_fvector(const Options& o, std::ostream& out) {
  const BuildingSet b = !o.graph.empty() ? from_graph(load_graph(o.graph)) : load_buildset(o.sets, o.strict);
  const auto fv = face_vector(b);
  if (o.json)
    out << ojson{{"fvector", fv}, {"nested_by_size", nested_sets_by_size(b)}}.dump() << "\n";
  else
    out << vec_string(fv) << "\n";
  return kExitOk;
}

int cmd_collide(const Options& o, std::ostream& out) {
  const InvariantKind kind = o.invariant == "X" ? InvariantKind::X : InvariantKind::F;
  const CollisionReport r = collision_search(o.n, kind, o.connected, o.jobs);
  auto groups_json = [](const std::vector<std::vector<Graph>>& groups) {
    ojson a = ojson::array();
    for (const auto& grp : groups) {
      ojson g = ojson::array();
      for (const auto& x : grp) g.push_back(to_graph6(x));
      a.push_back(g);
    }
    return a;
  };
  if (o.json) {
    ojson doc;
    doc["n"] = r.n;
    doc["invariant"] = o.invariant;
    doc["connected_only"] = r.connected_only;
    doc["classes"] = r.classes;
    doc["distinct_values"] = r.distinct_values;
    doc["collisions"] = groups_json(r.collisions);
    doc["x_collisions_separated_by_F"] = groups_json(r.x_groups_split_by_F);
    doc["x_collisions_not_separated_by_F"] = groups_json(r.x_groups_unsplit);
    out << doc.dump() << "\n";
    return kExitOk;
  }
  out << "classes: " << r.classes << "\n";
  out << "distinct " << o.invariant << " values: " << r.distinct_values << "\n";
  out << "collisions: " << r.collisions.size() << "\n";
  for (const auto& grp : r.collisions) {
    out << " ";
    for (const auto& g : grp) out << " " << graph_label(g);
    out << "\n";
  }
  out << "X collisions separated by F: " << r.x_groups_split_by_F.size() << "\n";
  for (const auto& grp : r.x_groups_split_by_F) {
    out << " ";
    for (const auto& g : grp) out << " " << graph_label(g);
    out << "\n";
  }
  out << "X collisions not separated by F: " << r.x_groups_unsplit.size() << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<CriterionResult> results;
  auto emit = [&](const CriterionResult& r) {
    if (!o.json) out << format_result(r) << "\n" << std::flush;
  };
  if (o.criterion) {
    results.push_back(run_criterion(o.criterion, o.jobs));
    emit(results.back());
  } else {
    results = run_acceptance_suite(o.jobs, emit);
  }
  const int passed = static_cast<int>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass(); }));
  if (o.json) {
    ojson doc = ojson::array();
    for (const auto& r : results)
      doc.push_back({{"id", r.id},
                     {"title", r.title},
                     {"pass", r.pass()},
                     {"correct", r.correct},
                     {"seconds", r.seconds},
                     {"limit_seconds", r.limit_seconds},
                     {"detail", r.detail}});
    out << doc.dump() << "\n";
  } else {
    out << passed << "/" << results.size() << " criteria passed\n";
  }
  return passed == static_cast<int>(results.size()) ? kExitOk : kExitVerificationFailed;
}

int cmd_trees(const Options& o, std::ostream& out) {
  if (o.kernel) {
    const TreeKernel k = tree_matrix_kernel(o.n);
    if (o.json) {
      ojson doc;
      doc["n"] = o.n;
      doc["shapes"] = ojson::array();
      for (const auto& s : k.shapes) doc["shapes"].push_back(s.code);
      doc["rank"] = k.rank;
      doc["kernel"] = k.kernel;
      out << doc.dump() << "\n";
      return kExitOk;
    }
    out << "shapes: " << k.shapes.size() << "\n";
    for (std::size_t i = 0; i < k.shapes.size(); ++i) out << "  " << i + 1 << " " << k.shapes[i].code << "\n";
    out << "rank: " << k.rank << "\n";
    out << "kernel dimension: " << k.kernel.size() << "\n";
    for (const auto& v : k.kernel) {
      out << " ";
      for (Coeff c : v) out << " " << c;
      out << "\n";
    }
    return kExitOk;
  }
  const auto shapes = enumerate_tree_shapes(o.n);
  if (o.json) {
    ojson doc = ojson::array();
    for (const auto& s : shapes) doc.push_back({{"shape", s.code}, {"F", j(to_json(F_tree(s)))}});
    out << doc.dump() << "\n";
    return kExitOk;
  }
  for (const auto& s : shapes) out << s.code << " " << to_string(F_tree(s)) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quasisymmetric enumerators of nestohedra and graph-associahedra"};
  app.name("nesto");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--jobs", o.jobs, "Worker threads for collision search")->check(CLI::Range(1, 64));

  const std::string graph_help =
      "Graph: a file (JSON or graph6), JSON inline, g6:<graph6>, or complete:N, path:N, cycle:N, star:N";

  auto* inv = app.add_subcommand("invariant", "F of a graph by one or all routes");
  inv->add_option("--graph", o.graph, graph_help)->required();
  inv->add_option("--route", o.route, "splitting, trees, colorings, recurrence or all")
      ->check(CLI::IsMember({"splitting", "trees", "colorings", "recurrence", "all"}));
  inv->add_option("--basis", o.basis, "Output basis M or L")->check(CLI::IsMember({"M", "L"}));
  inv->add_option("--chi", o.chi, "Also print the principal specialization ps_m");

  auto* bs = app.add_subcommand("buildset", "Validate and operate on a building set");
  bs->add_option("--sets", o.sets, "JSON file or inline JSON {\"n\":..,\"sets\":[[..],..]}")->required();
  auto* r_opt = bs->add_option("--restrict", o.restrict_to, "Restrict to a vertex set, e.g. 123 or 1,2,3");
  auto* c_opt = bs->add_option("--contract", o.contract_by, "Contract a vertex set");
  r_opt->excludes(c_opt);
  auto* v_opt = bs->add_flag("--validate", o.validate, "Only validate");
  v_opt->excludes(r_opt)->excludes(c_opt);
  bs->add_flag("--strict", o.strict, "Reject missing singletons instead of adding them");

  auto* poly = app.add_subcommand("polytope", "Vertices, f-vector or coordinates of a family nestohedron");
  poly->add_option("--family", o.family, "pe, as, cy or st")->required()->check(CLI::IsMember({"pe", "as", "cy", "st"}));
  poly->add_option("--n", o.n, "Number of graph vertices (dimension n-1)")->required()->check(CLI::Range(1, 64));
  auto* pv = poly->add_flag("--vertices", o.vertices, "Vertex count (default)");
  auto* pf = poly->add_flag("--fvector", o.fvector, "Face counts (f_0, ..., f_d)");
  auto* pc = poly->add_flag("--coords", o.coords, "Vertex coordinates");
  pv->excludes(pf)->excludes(pc);
  pf->excludes(pc);

  auto* chrom = app.add_subcommand("chromatic", "Chromatic symmetric function in the m basis");
  chrom->add_option("--graph", o.graph, graph_help)->required();

  auto* anti = app.add_subcommand("antipode", "Antipode of F of a graph or of a QSym element");
  auto* ag = anti->add_option("--graph", o.graph, graph_help);
  auto* aq = anti->add_option("--qsym", o.qsym, "File or inline text such as \"2*M[1,1] + M[2]\", or JSON");
  ag->excludes(aq);
  anti->add_option("--basis", o.basis, "Output basis M or L")->check(CLI::IsMember({"M", "L"}));

  auto* fvec = app.add_subcommand("fvector", "Face counts of the nestohedron of a graph or building set");
  auto* fg = fvec->add_option("--graph", o.graph, graph_help);
  auto* fs = fvec->add_option("--sets", o.sets, "Building-set JSON file or inline JSON");
  fg->excludes(fs);
  fvec->add_flag("--strict", o.strict, "Reject missing singletons instead of adding them");

  auto* col = app.add_subcommand("collide", "Search isomorphism classes for equal invariants");
  col->add_option("--n", o.n, "Vertex count")->required()->check(CLI::Range(1, 64));
  col->add_option("--invariant", o.invariant, "F or X")->check(CLI::IsMember({"F", "X"}));
  col->add_flag("--connected", o.connected, "Connected graphs only");

  auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
  ver->add_option("--suite", o.suite, "Suite to run: acceptance (alias: paper)")->check(CLI::IsMember({"paper", "acceptance"}));
  ver->add_option("--criterion", o.criterion, "Run a single criterion")->check(CLI::Range(1, kCriterionCount));

  auto* trees = app.add_subcommand("trees", "Unlabeled rooted trees and their enumerators");
  trees->add_option("--n", o.n, "Node count")->required()->check(CLI::Range(1, 64));
  trees->add_flag("--kernel", o.kernel, "Rank and integer kernel of the enumerator vectors");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (anti->parsed() && o.graph.empty() && o.qsym.empty())
      throw InvalidInput("antipode needs --graph or --qsym");
    if (fvec->parsed() && o.graph.empty() && o.sets.empty()) throw InvalidInput("fvector needs --graph or --sets");
    if (inv->parsed()) return cmd_invariant(o, out);
    if (bs->parsed()) return cmd_buildset(o, out);
    if (poly->parsed()) return cmd_polytope(o, out);
    if (chrom->parsed()) return cmd_chromatic(o, out);
    if (anti->parsed()) return cmd_antipode(o, out);
    if (fvec->parsed()) return cmd_fvector(o, out);
    if (col->parsed()) return cmd_collide(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (trees->parsed()) return cmd_trees(o, out);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const NotABuildingSet& e) {
    err << "not a building set: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace nesto
