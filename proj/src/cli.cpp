#include "xhtpy/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "xhtpy/verify.hpp"

namespace xhtpy {
namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  bool quiet = false;
  Budget budget{};
  std::uint64_t seed = 0;
  std::string dot_dir;
};

// "@name" is a built-in data file, anything else a path.
Document load_document(const std::string& file) {
  if (!file.empty() && file.front() == '@') return builtin_document(file.substr(1));
  if (!std::filesystem::exists(file)) throw Error(Errc::BadParameter, "no such file '" + file + "'");
  return read_document(file);
}

bool looks_like_file(const std::string& s) {
  return (!s.empty() && s.front() == '@') || std::filesystem::exists(s);
}

// `file:name`, `file` (a single-graph file) or a named graph such as C6.
Graph resolve_graph(const std::string& ref) {
  const auto colon = ref.rfind(':');
  if (colon != std::string::npos && looks_like_file(ref.substr(0, colon)))
    return load_document(ref.substr(0, colon)).graph(ref.substr(colon + 1));
  if (looks_like_file(ref)) {
    Document doc = load_document(ref);
    if (doc.graphs.size() != 1)
      throw Error(Errc::BadParameter, "'" + ref + "' holds " + std::to_string(doc.graphs.size()) +
                                          " graphs; use file:name");
    return doc.graphs.front().graph;
  }
  return named_graph(ref);
}

std::vector<NamedGraph> resolve_graphs(const std::string& ref) {
  const auto colon = ref.rfind(':');
  if (colon == std::string::npos && looks_like_file(ref)) return load_document(ref).graphs;
  return {{colon == std::string::npos ? ref : ref.substr(colon + 1), resolve_graph(ref)}};
}

std::string map_text(const GraphMap& m) {
  std::string out;
  for (Vertex v = 0; v < m.domain().order(); ++v)
    out += "  " + m.domain().label(v) + " -> " + m.codomain().label(m(v)) + "\n";
  return out;
}

std::string graph_text(const Graph& g, std::string_view name) {
  return serialize_graph(g, name) + "\n";
}

std::string chain_text(const HomotopyCertificate& c) {
  std::string out;
  for (std::size_t i = 0; i < c.chain.size(); ++i) {
    out += "  f" + std::to_string(i) + ":";
    for (Vertex v = 0; v < c.chain[i].domain().order(); ++v)
      out += " " + c.chain[i].domain().label(v) + ">" + c.chain[i].codomain().label(c.chain[i](v));
    out += "\n";
  }
  return out;
}

std::string folds_text(const FoldSequence& s) {
  std::string out = "folds:";
  for (const auto& st : s.steps) out += " " + st.removed + "->" + st.target;
  if (s.steps.empty()) out += " (none)";
  return out + "\n";
}

void emit(const Context& ctx, const Json& j, const std::string& text) {
  if (ctx.json) {
    ctx.out << j.dump(2) << "\n";
  } else if (!ctx.quiet) {
    ctx.out << text;
  }
}

void write_dot(const Context& ctx, const std::string& name, const Graph& g) {
  if (ctx.dot_dir.empty()) return;
  std::filesystem::create_directories(ctx.dot_dir);
  std::ofstream f(std::filesystem::path(ctx.dot_dir) / (name + ".dot"));
  f << to_dot(g, name);
}

std::vector<FoldStep> parse_folds(const std::string& text) {
  // "a>x,d>x"
  std::vector<FoldStep> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto gt = item.find('>');
    if (gt == std::string::npos) throw Error(Errc::BadParameter, "fold '" + item + "' is not v>w");
    out.push_back({item.substr(0, gt), item.substr(gt + 1)});
  }
  return out;
}

WSemantics parse_semantics(const std::string& copy, const std::string& image) {
  WSemantics s;
  s.copy = copy == "induced" ? CopyMode::Induced : CopyMode::Subgraph;
  s.image = image == "induced" ? ImageMode::InducedOnImage : ImageMode::ImageSubgraph;
  return s;
}

std::string w_text(const WMembershipVerdict& v) {
  std::string out = "in W: " + std::string(to_string(v.verdict)) + " (" +
                    std::string(to_string(v.semantics.copy)) + " copies, " +
                    std::string(to_string(v.semantics.image)) + ")\n";
  out += "copies checked: " + std::to_string(v.copies_checked) + "\n";
  if (v.witness) {
    out += "witness copy:";
    for (Vertex p = 0; p < v.witness->pattern.order(); ++p)
      out += " " + v.witness->host.label(v.witness->vertex_image[p]);
    out += "\nreason: " + v.reason + "\n";
  }
  return out;
}

std::string chain_report_text(const ChainReport& r) {
  std::string out = "class " + std::string(to_string(r.predicate)) + "\n";
  for (const auto& m : r.memberships)
    out += "  " + m.name + ": " + std::string(to_string(m.verdict)) + "\n";
  for (const auto& a : r.axioms)
    out += "  " + a.statement + ": " + std::string(to_string(a.result)) + "\n";
  return out;
}

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw Error(Errc::BadParameter, std::string(name) + " is not a number");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err, false, false, {}, 0, {}};
  CLI::App app{"Graph homotopy toolkit: folds, homotopies, constructions and weak-equivalence checks",
               "xhtpy"};
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  std::uint64_t search_nodes = 0;
  std::uint64_t hom_maps = 0;
  app.add_option("--budget", search_nodes, "search node limit (env XHTPY_BUDGET)");
  app.add_option("--map-budget", hom_maps, "hom-set size limit (env XHTPY_MAP_BUDGET)");
  app.add_option("--seed", ctx.seed, "seed for random fold policies");
  app.add_flag("--json", ctx.json, "print JSON");
  app.add_flag("--quiet", ctx.quiet, "suppress text output");
  app.add_option("--dot-dir", ctx.dot_dir, "write DOT files for constructed graphs here");

  int code = 0;
  std::function<void()> action;

  // parse
  std::string parse_file;
  auto* parse = app.add_subcommand("parse", "parse a graph file and print it canonically");
  parse->add_option("file", parse_file)->required();
  parse->callback([&] {
    action = [&] {
      Document doc = load_document(parse_file);
      Json j = {{"graphs", Json::object()}, {"maps", Json::object()}};
      for (const auto& g : doc.graphs) {
        j["graphs"][g.name] = to_json(g.graph);
        write_dot(ctx, g.name, g.graph);
      }
      for (const auto& m : doc.maps) j["maps"][m.name] = images_json(m.map);
      emit(ctx, j, serialize_document(doc));
    };
  });

  // stiff
  std::string stiff_ref;
  std::string policy = "first";
  std::string given;
  auto* stiff = app.add_subcommand("stiff", "fold a graph down to a stiff graph");
  stiff->add_option("graph", stiff_ref)->required();
  stiff->add_option("--policy", policy)->check(CLI::IsMember({"first", "random", "given"}));
  stiff->add_option("--folds", given, "fold list for --policy given, e.g. a>x,d>x");
  bool trace = false;
  stiff->add_flag("--trace", trace, "print the surviving vertices after every fold");
  stiff->callback([&] {
    action = [&] {
      Json j = Json::object();
      std::string text;
      for (const auto& [name, g] : resolve_graphs(stiff_ref)) {
        FoldPolicy p = FirstFold{};
        if (policy == "random") p = RandomFold{ctx.seed};
        if (policy == "given") p = GivenFolds{parse_folds(given)};
        FoldSequence seq = stiff_reduction(g, p);
        j[name] = to_json(seq);
        text += name + "\n" + folds_text(seq);
        if (trace) {
          std::vector<VertexId> alive = g.labels();
          for (const auto& st : seq.steps) {
            alive.erase(std::find(alive.begin(), alive.end(), st.removed));
            text += "  " + st.removed + "->" + st.target + ":";
            for (const auto& v : alive) text += " " + v;
            text += "\n";
          }
        }
        text += graph_text(seq.result, name + "_s");
        write_dot(ctx, name + "_s", seq.result);
      }
      emit(ctx, j, text);
    };
  });

  // iso
  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "find an isomorphism");
  iso->add_option("first", iso_a)->required();
  iso->add_option("second", iso_b)->required();
  iso->callback([&] {
    action = [&] {
      auto m = is_isomorphic(resolve_graph(iso_a), resolve_graph(iso_b));
      Json j = {{"isomorphic", m.has_value()}};
      j["witness"] = m ? images_json(*m) : Json(nullptr);
      emit(ctx, j, m ? "isomorphic\n" + map_text(*m) : std::string("not isomorphic\n"));
    };
  });

  // homs
  std::string homs_a, homs_b;
  bool count_only = false;
  auto* homs = app.add_subcommand("homs", "enumerate graph maps");
  homs->add_option("first", homs_a)->required();
  homs->add_option("second", homs_b)->required();
  homs->add_flag("--count", count_only, "only count");
  homs->callback([&] {
    action = [&] {
      const Graph a = resolve_graph(homs_a);
      const Graph b = resolve_graph(homs_b);
      if (count_only) {
        const auto n = count_homs(a, b, ctx.budget);
        emit(ctx, {{"count", n}}, std::to_string(n) + "\n");
        return;
      }
      Json list = Json::array();
      std::string text;
      for (const auto& m : enumerate_homs(a, b, ctx.budget)) {
        list.push_back(images_json(m));
        std::string line;
        for (Vertex v = 0; v < a.order(); ++v)
          line += (v ? " " : "") + a.label(v) + ">" + b.label(m(v));
        text += line + "\n";
      }
      emit(ctx, {{"count", list.size()}, {"maps", list}}, text);
    };
  });

  // homotopic
  std::string ht_file, ht_f, ht_g;
  auto* homotopic = app.add_subcommand("homotopic", "decide whether two maps are homotopic");
  homotopic->add_option("file", ht_file)->required();
  homotopic->add_option("f", ht_f)->required();
  homotopic->add_option("g", ht_g)->required();
  homotopic->callback([&] {
    action = [&] {
      Document doc = load_document(ht_file);
      auto cert = are_homotopic(doc.map(ht_f), doc.map(ht_g), ctx.budget);
      Json j = {{"homotopic", cert.has_value()}};
      j["certificate"] = cert ? to_json(*cert) : Json(nullptr);
      emit(ctx, j,
           cert ? "homotopic, chain length " + std::to_string(cert->length()) + "\n" +
                      chain_text(*cert)
                : std::string("not homotopic\n"));
    };
  });

  // is-weq
  std::string weq_file, weq_f;
  auto* is_weq = app.add_subcommand("is-weq", "decide whether a map is a homotopy equivalence");
  is_weq->add_option("file", weq_file)->required();
  is_weq->add_option("f", weq_f)->required();
  is_weq->callback([&] {
    action = [&] {
      WxVerdict v = in_W_times(load_document(weq_file).map(weq_f), ctx.budget);
      if (v.verdict == Verdict::Unknown) code = 3;
      std::string text = "homotopy equivalence: " + std::string(to_string(v.verdict)) + "\n";
      if (v.certificate) text += "inverse:\n" + map_text(v.certificate->inverse);
      emit(ctx, to_json(v), text);
    };
  });

  // equiv
  std::string eq_a, eq_b;
  bool eq_brute = false;
  auto* equiv = app.add_subcommand("equiv", "compare two graphs up to homotopy equivalence");
  equiv->add_option("first", eq_a)->required();
  equiv->add_option("second", eq_b)->required();
  equiv->add_flag("--brute", eq_brute, "also search for an explicit equivalence");
  equiv->callback([&] {
    action = [&] {
      const Graph a = resolve_graph(eq_a);
      const Graph b = resolve_graph(eq_b);
      GraphEquivalence e = graphs_equivalent(a, b);
      Json j = to_json(e);
      std::string text = std::string(e.equivalent ? "equivalent" : "not equivalent") + "\n";
      if (eq_brute) {
        auto cert = find_equivalence(a, b, ctx.budget);
        j["certificate"] = cert ? to_json(*cert) : Json(nullptr);
        text += std::string("explicit equivalence: ") + (cert ? "found" : "none") + "\n";
      }
      write_dot(ctx, "left_s", e.left.result);
      write_dot(ctx, "right_s", e.right.result);
      emit(ctx, j, text);
    };
  });

  // in-w
  std::string w_file, w_f, copy_mode = "subgraph", image_mode = "image";
  auto* in_w = app.add_subcommand("in-w", "test membership in the class W");
  in_w->add_option("file", w_file)->required();
  in_w->add_option("f", w_f)->required();
  in_w->add_option("--copy-mode", copy_mode)->check(CLI::IsMember({"induced", "subgraph"}));
  in_w->add_option("--image-mode", image_mode)->check(CLI::IsMember({"image", "induced"}));
  in_w->callback([&] {
    action = [&] {
      WMembershipVerdict v = in_W(load_document(w_file).map(w_f),
                                  parse_semantics(copy_mode, image_mode), ctx.budget);
      emit(ctx, to_json(v), w_text(v));
    };
  });

  // product
  std::string pr_a, pr_b;
  auto* prod = app.add_subcommand("product", "categorical product");
  prod->add_option("first", pr_a)->required();
  prod->add_option("second", pr_b)->required();
  prod->callback([&] {
    action = [&] {
      const Graph p = product(resolve_graph(pr_a), resolve_graph(pr_b));
      write_dot(ctx, "product", p);
      emit(ctx, to_json(p), graph_text(p, "product"));
    };
  });

  // pushout
  std::string po_file, po_f, po_g;
  auto* po = app.add_subcommand("pushout", "pushout of two maps with a common domain");
  po->add_option("file", po_file)->required();
  po->add_option("f", po_f)->required();
  po->add_option("g", po_g)->required();
  bool po_dot = false;
  po->add_flag("--dot", po_dot, "print the pushout in DOT format");
  po->callback([&] {
    action = [&] {
      Document doc = load_document(po_file);
      PushoutSquare sq = pushout(doc.map(po_f), doc.map(po_g));
      write_dot(ctx, "pushout", sq.pushout);
      if (po_dot && !ctx.json) {
        ctx.out << to_dot(sq.pushout, "P");
        return;
      }
      emit(ctx, to_json(sq),
           graph_text(sq.pushout, "P") + "into P from B:\n" + map_text(sq.into_b) +
               "into P from C:\n" + map_text(sq.into_c));
    };
  });

  // cylinder
  std::string cy_file, cy_f;
  auto* cyl = app.add_subcommand("cylinder", "mapping cylinder factorization");
  cyl->add_option("file", cy_file)->required();
  cyl->add_option("f", cy_f)->required();
  cyl->callback([&] {
    action = [&] {
      const GraphMap f = load_document(cy_file).map(cy_f);
      Factorization fac = factorize(f, ctx.budget);
      QuasiCofibrationTrace qc = is_quasi_cofibration(fac.incl);
      write_dot(ctx, "cylinder", fac.incl.codomain());
      Json j = to_json(fac);
      j["quasiCofibration"] = to_json(qc);
      emit(ctx, j,
           graph_text(fac.incl.codomain(), "M") + "retraction certified: " +
               (fac.certified ? "yes" : "no") + " (" + std::string(to_string(fac.level)) + ")\n" +
               "inclusion is a quasi-cofibration: " + (qc.reachable ? "yes" : "no") + "\n");
    };
  });

  // counterexample
  std::string cx_file, cx_f;
  auto* cx = app.add_subcommand("counterexample", "pushout along a non-injective equivalence");
  cx->add_option("file", cx_file)->required();
  cx->add_option("f", cx_f)->required();
  cx->callback([&] {
    action = [&] {
      Counterexample c = counterexample_pushout(load_document(cx_file).map(cx_f), ctx.budget);
      write_dot(ctx, "C", c.c);
      write_dot(ctx, "P", c.square.pushout);
      emit(ctx, to_json(c),
           "case: " + std::string(to_string(c.kind)) + "\ncollision: " + c.collision.first + " " +
               c.collision.second + "\n" + graph_text(c.c, "C") + graph_text(c.square.pushout, "P") +
               "C and P equivalent: " + (c.equivalent ? "yes" : "no") + "\n");
    };
  });

  // check-axiom
  std::string ax_which, ax_file, ax_class = "w";
  std::vector<std::string> ax_maps;
  auto* ax = app.add_subcommand("check-axiom", "evaluate 2-of-3 or 2-of-6 on a chain of maps");
  ax->add_option("axiom", ax_which)->required()->check(CLI::IsMember({"2of3", "2of6"}));
  ax->add_option("file", ax_file)->required();
  ax->add_option("maps", ax_maps)->required()->expected(2, 3);
  ax->add_option("--class", ax_class)->check(CLI::IsMember({"w", "wx"}));
  ax->callback([&] {
    action = [&] {
      Document doc = load_document(ax_file);
      const MapClass cls = ax_class == "w" ? MapClass::W : MapClass::WTimes;
      ChainReport r;
      if (ax_which == "2of3") {
        if (ax_maps.size() != 2) throw Error(Errc::BadParameter, "2of3 takes two maps");
        r = check_two_of_three(doc.map(ax_maps[0]), doc.map(ax_maps[1]), cls, {}, ctx.budget);
      } else {
        if (ax_maps.size() != 3) throw Error(Errc::BadParameter, "2of6 takes three maps");
        r = check_two_of_six(doc.map(ax_maps[0]), doc.map(ax_maps[1]), doc.map(ax_maps[2]), cls,
                             {}, ctx.budget);
      }
      emit(ctx, to_json(r), chain_report_text(r));
    };
  });

  // verify-paper
  std::string suite = "all";
  auto* vp = app.add_subcommand("verify-paper", "run the built-in verification suites");
  vp->add_option("suite", suite)->check(CLI::IsMember(suite_names()));
  vp->callback([&] {
    action = [&] {
      VerificationReport r = run_suite(suite, {ctx.budget, ctx.seed});
      std::string text;
      for (const auto& c : r.claims)
        text += std::string(to_string(c.verdict)) + "  " + std::string(to_string(c.kind)) + "  " +
                c.id + "\n";
      emit(ctx, r.to_json(), text);
      code = r.exit_code();
    };
  });

  // export-dot
  std::string dot_ref, dot_out;
  auto* dot = app.add_subcommand("export-dot", "print graphs in DOT format");
  dot->add_option("graph", dot_ref)->required();
  dot->add_option("-o,--output", dot_out, "write to this file instead of stdout");
  dot->callback([&] {
    action = [&] {
      std::string text;
      for (const auto& [name, g] : resolve_graphs(dot_ref)) text += to_dot(g, name);
      if (dot_out.empty()) {
        ctx.out << text;
      } else {
        std::ofstream(dot_out) << text;
      }
    };
  });

  std::vector<std::string> argv_store = {"xhtpy"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    ctx.budget.search_nodes =
        search_nodes ? search_nodes : env_budget("XHTPY_BUDGET", ctx.budget.search_nodes);
    ctx.budget.hom_maps = hom_maps ? hom_maps : env_budget("XHTPY_MAP_BUDGET", ctx.budget.hom_maps);
    if (action) action();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

}  // namespace xhtpy
