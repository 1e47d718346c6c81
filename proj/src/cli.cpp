#include "veto/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "veto/analysis.hpp"
#include "veto/error.hpp"
#include "veto/families.hpp"
#include "veto/isomorphism.hpp"
#include "veto/plot.hpp"
#include "veto/random_reps.hpp"
#include "veto/recognize.hpp"

namespace veto::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string first_word(const std::string& text) {
  std::istringstream s(text);
  std::string w;
  s >> w;
  return w;
}

SimpleGraph load_graph(const std::string& path) {
  std::istringstream s(slurp(path));
  return read_graph(s);
}

Representation load_rep(const std::string& path) {
  std::istringstream s(slurp(path));
  return read_representation(s);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
}

std::string rep_text(const Representation& rep) {
  std::ostringstream s;
  write_representation(s, rep);
  return s.str();
}

std::string graph_text(const SimpleGraph& g) {
  std::ostringstream s;
  write_graph(s, g);
  return s.str();
}

json rep_json(const Representation& rep) {
  json intervals = json::array();
  for (const auto& iv : rep.intervals) {
    json row = json::array();
    for (const auto& p : iv.points()) row.push_back(format_rational(p));
    intervals.push_back(row);
  }
  return {{"k", rep.mark_count}, {"flags", rep.flavor.to_string()}, {"intervals", intervals}};
}

json graph_json(const SimpleGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

json digraph_json(const Digraph& d) {
  json arcs = json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  return {{"n", d.order()}, {"arcs", arcs}};
}

std::string arcs_text(const Digraph& d) {
  std::string s;
  for (auto [u, v] : d.arcs()) s += (s.empty() ? "" : " ") + std::to_string(u) + "->" + std::to_string(v);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct Output {
  bool as_json = false;
  std::ostream& out;

  // Text mode prints `text`; JSON mode prints the object on one line.
  void emit(const std::string& text, const json& object) const {
    if (as_json) {
      out << object.dump() << '\n';
    } else {
      out << text;
    }
  }
};

// --- family ---------------------------------------------------------------

struct FamilyArgs {
  std::string name;
  int n = -1;
  int m = -1;
  std::vector<int> params;
  bool distinct = false;
  std::string out_path;
};

int need(int value, const char* flag, const std::string& name) {
  if (value < 0) throw UsageError(name + " needs " + flag);
  return value;
}

std::optional<Representation> family_rep(const FamilyArgs& a) {
  const std::string& name = a.name;
  auto n = [&] { return need(a.n, "--n", name); };
  auto m = [&] { return need(a.m, "--m", name); };
  auto tree = [&] { return family::Tree{a.params}; };
  if (name == "vi-bipartite" || name == "muvi-bipartite") return vi_family_rep(family::CompleteBipartite{m(), n()});
  if (name == "vi-tree") return vi_family_rep(tree());
  if (name == "muvi-caterpillar") return vi_family_rep(family::Caterpillar{a.params});
  if (name == "muvi-cycle") return vi_family_rep(family::Cycle{n()});
  if (name == "sa-complete") return sa_family_rep(family::Complete{n()});
  if (name == "sa-cycle") return sa_family_rep(family::Cycle{n()});
  if (name == "sa-wheel") return sa_family_rep(family::Wheel{n()});
  if (name == "sa-tree") return sa_family_rep(tree());
  if (name == "sa-multipartite") return sa_family_rep(family::CompleteMultipartite{a.params});
  if (name == "da-complete") return da_family_rep(family::Complete{n()});
  if (name == "da-cycle") return da_family_rep(family::Cycle{n()});
  if (name == "da-wheel") return da_family_rep(family::Wheel{n()});
  if (name == "da-bipartite") return da_family_rep(family::CompleteBipartite{m(), n()});
  if (name == "da-tree") return da_family_rep(tree());
  if (name == "da-k1bc") return da_family_rep(family::K1bc{m(), n()});
  return std::nullopt;
}

SimpleGraph family_named_graph(const FamilyArgs& a) {
  std::vector<int> p;
  const std::string& name = a.name;
  if (name == "complete" || name == "cycle" || name == "path" || name == "star" || name == "wheel" || name == "g-k") {
    p = {need(a.n, "--n", name)};
  } else if (name == "complete-bipartite") {
    p = {need(a.m, "--m", name), need(a.n, "--n", name)};
  } else if (name == "circulant") {
    p = {need(a.n, "--n", name)};
    p.insert(p.end(), a.params.begin(), a.params.end());
  } else {
    p = a.params;
  }
  return named_graph(name, p);
}

int cmd_family(const FamilyArgs& a, const Output& o) {
  if (auto rep = family_rep(a)) {
    if (a.distinct) *rep = perturb_distinct(*rep);
    const std::string text = rep_text(*rep);
    if (!a.out_path.empty()) write_file(a.out_path, text);
    json j = rep_json(*rep);
    j["name"] = a.name;
    o.emit(a.out_path.empty() ? text : "wrote " + a.out_path + " (" + std::to_string(rep->size()) + " intervals)\n", j);
    return 0;
  }
  const SimpleGraph g = family_named_graph(a);
  const std::string text = graph_text(g);
  if (!a.out_path.empty()) write_file(a.out_path, text);
  json j = graph_json(g);
  j["name"] = a.name;
  o.emit(a.out_path.empty() ? text
                            : "wrote " + a.out_path + " (" + std::to_string(g.order()) + " vertices, " +
                                  std::to_string(g.size()) + " edges)\n",
         j);
  return 0;
}

// --- graph ----------------------------------------------------------------

int cmd_graph(const std::string& in, const std::string& tag_name_arg, const std::string& out_path, const Output& o) {
  SemanticsTag tag;
  try {
    tag = parse_tag(tag_name_arg);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const Representation rep = load_rep(in);
  std::string text;
  json j;
  if (tag == SemanticsTag::veto_directed) {
    const Digraph d = build_digraph(rep);
    std::ostringstream s;
    write_digraph(s, d);
    text = s.str();
    j = digraph_json(d);
  } else {
    const SimpleGraph g = build_graph(rep, tag);
    text = graph_text(g);
    j = graph_json(g);
  }
  if (!out_path.empty()) write_file(out_path, text);
  o.emit(text, j);
  return 0;
}

// --- recognize ------------------------------------------------------------

struct RecognizeArgs {
  std::string cls;
  std::string in;
  std::string budget = "600s";
  std::uint64_t nodes = 0;
  int threads = 1;
  int marks = 0;
  int check_every = 6;
  std::string out_path;
};

int cmd_recognize(const RecognizeArgs& a, const Output& o) {
  ClassSpec spec;
  try {
    spec = parse_class(a.cls);
  } catch (const Error& e) {
    throw UsageError(std::string("bad class: ") + e.what());
  }
  const SimpleGraph g = load_graph(a.in);
  RecognizeOptions opt;
  opt.mark_count = a.marks != 0 ? a.marks : spec.mark_count;
  opt.time_limit = std::chrono::milliseconds(parse_budget_ms(a.budget));
  opt.node_limit = a.nodes;
  opt.threads = a.threads;
  opt.check_every = a.check_every;
  const RecognitionResult r = recognize(g, spec.tag, spec.flavor, opt);

  std::ostringstream s;
  s << "verdict: " << verdict_name(r.verdict) << '\n';
  json j{{"verdict", verdict_name(r.verdict)},
         {"class", a.cls},
         {"tag", tag_name(spec.tag)},
         {"flavor", spec.flavor.to_string()},
         {"nodes", r.stats.nodes},
         {"linear_checks", r.stats.linear_checks},
         {"seconds", r.stats.seconds},
         {"symmetry", r.stats.symmetry}};
  if (r.word) {
    s << "word: " << r.word->to_string() << '\n';
    j["word"] = r.word->to_string();
  }
  s << "nodes: " << r.stats.nodes << "\nlinear checks: " << r.stats.linear_checks << "\nseconds: " << r.stats.seconds
    << "\nsymmetry: " << r.stats.symmetry << '\n';
  if (r.witness) {
    j["witness"] = rep_json(*r.witness);
    if (!a.out_path.empty()) {
      write_file(a.out_path, rep_text(*r.witness));
      s << "witness: " << a.out_path << '\n';
      j["witness_file"] = a.out_path;
    } else {
      s << rep_text(*r.witness);
    }
  }
  o.emit(s.str(), j);
  switch (r.verdict) {
    case Verdict::yes: return kYes;
    case Verdict::no: return kNo;
    case Verdict::timeout: return kTimeout;
  }
  return kNo;
}

// --- orient-check ---------------------------------------------------------

int cmd_orient(const std::string& in, int cap, bool classes, const Output& o) {
  const SimpleGraph g = load_graph(in);
  const OrientationReport r = orientation_feasible(g, static_cast<std::size_t>(cap), classes);
  std::ostringstream s;
  s << r.feasible << " feasible orientations (of " << r.orientations << ")\n";
  json list = json::array();
  if (classes) {
    s << r.classes.size() << " classes up to isomorphism\n";
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      s << "class " << i << " x" << r.class_sizes[i] << ": " << arcs_text(r.classes[i]) << '\n';
      json c = digraph_json(r.classes[i]);
      c["size"] = r.class_sizes[i];
      list.push_back(c);
    }
  }
  json j{{"orientations", r.orientations}, {"feasible", r.feasible}};
  if (classes) j["classes"] = list;
  o.emit(s.str(), j);
  return 0;
}

// --- color-uvi / chromatic ------------------------------------------------

int cmd_color_uvi(const std::string& in, const Output& o) {
  const Representation rep = load_rep(in);
  const Coloring c = uvi_four_color(rep);
  const bool proper = is_proper_coloring(build_graph(rep, SemanticsTag::veto), c);
  std::ostringstream s;
  json colors = json::array();
  for (std::size_t v = 0; v < c.color.size(); ++v) {
    s << v << ' ' << uvi_color_name(c.color[v]) << '\n';
    colors.push_back(uvi_color_name(c.color[v]));
  }
  s << "proper: " << (proper ? "yes" : "no") << '\n';
  o.emit(s.str(), {{"colors", colors}, {"proper", proper}});
  return proper ? 0 : kDomain;
}

int cmd_chromatic(const std::string& in, int cap, const Output& o) {
  const SimpleGraph g = load_graph(in);
  const ChromaticResult r = chromatic_number(g, cap);
  std::ostringstream s;
  s << "chromatic number: " << r.chromatic_number << '\n';
  s << "coloring:";
  for (int c : r.coloring.color) s << ' ' << c;
  s << '\n';
  if (r.refuted_by_clique) {
    s << "lower bound: clique of size " << r.clique_bound << '\n';
  } else {
    s << "lower bound: no " << r.chromatic_number - 1 << "-coloring (" << r.refutation_nodes
      << " search nodes exhausted)\n";
  }
  s << "triangle-free: " << (is_triangle_free(g) ? "yes" : "no") << '\n';
  o.emit(s.str(), {{"chromatic_number", r.chromatic_number},
                   {"coloring", r.coloring.color},
                   {"clique_bound", r.clique_bound},
                   {"refuted_by_clique", r.refuted_by_clique},
                   {"refutation_nodes", r.refutation_nodes},
                   {"triangle_free", is_triangle_free(g)}});
  return 0;
}

// --- transform ------------------------------------------------------------

struct TransformArgs {
  std::string in;
  std::string out_path;
  bool proper_to_unit = false;
  bool muda_roundtrip = false;
  bool muda_to_interval = false;
  bool perturb = false;
  bool reduce = false;
  int split = 0;
};

int cmd_transform(const TransformArgs& a, const Output& o) {
  const int modes = a.proper_to_unit + a.muda_roundtrip + a.muda_to_interval + a.perturb + a.reduce + (a.split > 0);
  if (modes != 1) throw UsageError("transform needs exactly one mode");
  const Representation rep = load_rep(a.in);

  auto emit_rep = [&](const Representation& out, json extra, std::string note) {
    const std::string text = rep_text(out);
    if (!a.out_path.empty()) write_file(a.out_path, text);
    json j = rep_json(out);
    j.update(extra);
    o.emit(note + (a.out_path.empty() ? text : "wrote " + a.out_path + "\n"), j);
    return 0;
  };

  if (a.proper_to_unit) {
    const Representation out = proper_to_unit(rep);
    const bool same_word = ordering_word(out) == ordering_word(rep);
    return emit_rep(out, {{"ordering_preserved", same_word}},
                    std::string("ordering preserved: ") + (same_word ? "yes" : "no") + "\n");
  }
  if (a.perturb) return emit_rep(perturb_distinct(rep), json::object(), "");
  if (a.reduce) {
    const Representation out = reduce_to_double(rep);
    const bool same = build_graph(out, SemanticsTag::k_veto) == build_graph(rep, SemanticsTag::k_veto);
    return emit_rep(out, {{"graph_preserved", same}}, std::string("graph preserved: ") + (same ? "yes" : "no") + "\n");
  }
  if (a.split > 0) {
    const Representation out = split_to_k_veto(rep, a.split);
    const SemanticsTag before = rep.mark_count == 1 ? SemanticsTag::veto : SemanticsTag::k_veto;
    const bool same = build_graph(out, SemanticsTag::k_veto) == build_graph(rep, before);
    return emit_rep(out, {{"graph_preserved", same}}, std::string("graph preserved: ") + (same ? "yes" : "no") + "\n");
  }

  const std::vector<PlainInterval> plain = muda_to_unit_interval(rep);
  std::ostringstream s;
  json list = json::array();
  for (const auto& p : plain) {
    s << format_rational(p.left) << ' ' << format_rational(p.right) << '\n';
    list.push_back({format_rational(p.left), format_rational(p.right)});
  }
  const bool adjacency = intersection_graph(plain) == build_graph(rep, SemanticsTag::double_approval);
  if (a.muda_to_interval) {
    if (!a.out_path.empty()) write_file(a.out_path, s.str());
    o.emit(s.str() + "adjacency preserved: " + (adjacency ? "yes" : "no") + "\n",
           {{"intervals", list}, {"adjacency_preserved", adjacency}});
    return 0;
  }
  Representation back = unit_interval_to_muda(plain);
  back.flavor = rep.flavor;
  const bool identical = back.intervals == rep.intervals;
  if (!a.out_path.empty()) write_file(a.out_path, rep_text(back));
  o.emit(std::string("round trip: ") + (identical ? "identical" : "DIFFERENT") + "\nadjacency preserved: " +
             (adjacency ? "yes" : "no") + "\n",
         {{"identical", identical}, {"adjacency_preserved", adjacency}, {"intervals", list}});
  return identical && adjacency ? 0 : kDomain;
}

// --- check ----------------------------------------------------------------

struct CheckArgs {
  bool triangle_free = false;
  bool partition = false;
  bool mpvi_order = false;
  bool perturbation = false;
  std::string in;
  long long seed = -1;
  int trials = 100;
  int max_n = 8;
  int marks = 1;
};

bool perturbation_holds(const Representation& rep) {
  const Representation out = perturb_distinct(rep);
  if (!has_distinct_points(out) || !validate_representation(out).empty()) return false;
  if (!flavor_flags(out).includes(flavor_flags(rep))) return false;
  for (SemanticsTag tag : {SemanticsTag::interval, SemanticsTag::veto, SemanticsTag::point_core,
                           SemanticsTag::single_approval, SemanticsTag::double_approval}) {
    if (!(build_graph(out, tag) == build_graph(rep, tag))) return false;
  }
  return true;
}

int cmd_check(const CheckArgs& a, const Output& o) {
  const int modes = a.triangle_free + a.partition + a.mpvi_order + a.perturbation;
  if (modes != 1) throw UsageError("check needs exactly one of --triangle-free, --partition, --mpvi-order, --perturbation");
  const std::string what = a.triangle_free ? "triangle-free" : a.partition ? "partition" : a.mpvi_order ? "mpvi-order" : "perturbation";

  if (!a.in.empty()) {
    const std::string text = slurp(a.in);
    std::istringstream s(text);
    bool holds = false;
    json j{{"check", what}};
    std::string detail;
    if (a.triangle_free) {
      if (first_word(text) == "GRAPH") {
        holds = is_triangle_free(read_graph(s));
      } else {
        const Representation rep = read_representation(s);
        holds = is_triangle_free(build_graph(rep, rep.mark_count == 1 ? SemanticsTag::veto : SemanticsTag::k_veto));
      }
    } else {
      const Representation rep = read_representation(s);
      if (a.partition) {
        const PartitionReport r = partition_check(rep);
        holds = r.holds;
        detail = "interval " + std::to_string(r.interval_edges) + " = veto " + std::to_string(r.veto_edges) +
                 " + point-core " + std::to_string(r.pc_edges) + "; point-core = single " +
                 std::to_string(r.sa_edges) + " + double " + std::to_string(r.da_edges) + "\n";
        j.update({{"interval_edges", r.interval_edges}, {"veto_edges", r.veto_edges}, {"pc_edges", r.pc_edges},
                  {"sa_edges", r.sa_edges}, {"da_edges", r.da_edges}});
      } else if (a.mpvi_order) {
        const OrderCheck r = mpvi_order_check(rep);
        holds = r.pass;
        if (!r.pass) {
          detail = "first violation: " + std::to_string(r.first) + " before " + std::to_string(r.second) + " in " + r.what + "\n";
          j["violation"] = {r.first, r.second, r.what};
        }
      } else {
        holds = perturbation_holds(rep);
      }
    }
    j["holds"] = holds;
    o.emit(detail + what + ": " + (holds ? "holds" : "fails") + "\n", j);
    return holds ? 0 : kNo;
  }

  if (a.seed < 0) throw UsageError("randomized checks need --seed (or pass --in)");
  if (a.max_n < 1 || a.trials < 0) throw UsageError("bad --n or --trials");
  std::mt19937_64 rng(static_cast<std::uint64_t>(a.seed));
  int pass = 0;
  for (int t = 0; t < a.trials; ++t) {
    const int n = uniform_int(rng, 1, a.max_n);
    bool ok = false;
    if (a.triangle_free) {
      const Representation rep = random_rep(rng, n, a.marks);
      ok = is_triangle_free(build_graph(rep, a.marks == 1 ? SemanticsTag::veto : SemanticsTag::k_veto));
    } else if (a.partition) {
      ok = partition_check(random_rep(rng, n, 1)).holds;
    } else if (a.mpvi_order) {
      ok = mpvi_order_check(random_midpoint_proper_rep(rng, n)).pass;
    } else {
      ok = perturbation_holds(tied_rep(rng, n));
    }
    pass += ok;
  }
  const bool all = pass == a.trials;
  std::ostringstream s;
  s << what << " seed " << a.seed << ": " << pass << "/" << a.trials << " hold\n";
  o.emit(s.str(), {{"check", what}, {"seed", a.seed}, {"trials", a.trials}, {"pass", pass}, {"holds", all}});
  return all ? 0 : kNo;
}

// --- plot -----------------------------------------------------------------

int cmd_plot(const std::string& in, bool svg, int width, const std::string& out_path, const Output& o) {
  const Representation rep = load_rep(in);
  const std::string art = svg ? plot_svg(rep) : plot_text(rep, width);
  if (!out_path.empty()) {
    write_file(out_path, art);
    o.emit("wrote " + out_path + "\n", {{"file", out_path}});
  } else {
    o.emit(art, {{svg ? "svg" : "text", art}});
  }
  return 0;
}

}  // namespace

ClassSpec parse_class(std::string_view text) {
  const std::string t(text);
  const FlavorSet unit{Flavor::unit, Flavor::proper};
  if (t == "VI") return {SemanticsTag::veto, {}, 1};
  if (t == "UVI") return {SemanticsTag::veto, unit, 1};
  if (t == "PVI") return {SemanticsTag::veto, {Flavor::proper}, 1};
  if (t == "MVI") return {SemanticsTag::veto, {Flavor::midpoint}, 1};
  if (t == "MUVI") return {SemanticsTag::veto, {Flavor::unit, Flavor::proper, Flavor::midpoint}, 1};
  if (t == "MPVI") return {SemanticsTag::veto, {Flavor::proper, Flavor::midpoint}, 1};
  if (t == "SA") return {SemanticsTag::single_approval, {}, 1};
  if (t == "DA") return {SemanticsTag::double_approval, {}, 1};
  if (t == "MUDA") return {SemanticsTag::double_approval, {Flavor::unit, Flavor::proper, Flavor::midpoint}, 1};
  if (t == "PC") return {SemanticsTag::point_core, {}, 1};
  if (t == "IG") return {SemanticsTag::interval, {}, 1};
  if (t == "double-veto") return {SemanticsTag::k_veto, {}, 2};
  const auto plus = t.find('+');
  ClassSpec spec;
  spec.tag = parse_tag(t.substr(0, plus));
  if (plus != std::string::npos) spec.flavor = FlavorSet::parse(t.substr(plus + 1));
  return spec;
}

long long parse_budget_ms(std::string_view text) {
  std::string t(text);
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(t, &used);
  } catch (const std::exception&) {
    throw UsageError("bad budget '" + t + "'");
  }
  const std::string unit = lower(t.substr(used));
  double scale = 0;
  if (unit.empty() || unit == "s") scale = 1000;
  else if (unit == "ms") scale = 1;
  else if (unit == "m" || unit == "min") scale = 60000;
  else if (unit == "h") scale = 3600000;
  else throw UsageError("bad budget unit '" + unit + "'");
  if (value < 0) throw UsageError("negative budget");
  return static_cast<long long>(value * scale);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"veto interval graph toolkit", "vetotool"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  FamilyArgs fam;
  auto* family_cmd = app.add_subcommand("family", "emit a family representation or a named graph");
  family_cmd->add_option("--name", fam.name, "family or graph name")->required();
  family_cmd->add_option("--n", fam.n, "main size parameter");
  family_cmd->add_option("--m", fam.m, "second size parameter");
  family_cmd->add_option("--params", fam.params, "list parameter (parts, legs, parent array, jumps)")->delimiter(',');
  family_cmd->add_flag("--distinct", fam.distinct, "perturb to pairwise distinct points");
  family_cmd->add_option("--out", fam.out_path, "output file");

  std::string in, tag = "veto", out_path;
  auto* graph_cmd = app.add_subcommand("graph", "graph of a representation under a semantics");
  graph_cmd->add_option("--in", in, "representation file")->required();
  graph_cmd->add_option("--tag", tag, "semantics tag");
  graph_cmd->add_option("--out", out_path, "output file");

  RecognizeArgs rec;
  auto* rec_cmd = app.add_subcommand("recognize", "exhaustive recognition");
  rec_cmd->add_option("--class", rec.cls, "VI, UVI, MUVI, MPVI, SA, DA, ... or tag+flavors")->required();
  rec_cmd->add_option("--in", rec.in, "graph file")->required();
  rec_cmd->add_option("--budget", rec.budget, "time budget, e.g. 600s");
  rec_cmd->add_option("--nodes", rec.nodes, "node limit (0 = none)");
  rec_cmd->add_option("--threads", rec.threads, "worker threads");
  rec_cmd->add_option("--marks", rec.marks, "marks per interval for k-veto");
  rec_cmd->add_option("--check-every", rec.check_every, "prefix linear check period");
  rec_cmd->add_option("--out", rec.out_path, "witness file");

  int cap = 24;
  bool no_classes = false;
  auto* orient_cmd = app.add_subcommand("orient-check", "enumerate orientations satisfying the path condition");
  orient_cmd->add_option("--in", in, "graph file")->required();
  orient_cmd->add_option("--cap", cap, "edge cap");
  orient_cmd->add_flag("--no-classes", no_classes, "skip isomorphism grouping");

  auto* color_cmd = app.add_subcommand("color-uvi", "floor-parity 4-colouring of a unit representation");
  color_cmd->add_option("--in", in, "representation file")->required();

  int vertex_cap = 20;
  auto* chrom_cmd = app.add_subcommand("chromatic", "exact chromatic number with certificate");
  chrom_cmd->add_option("--in", in, "graph file")->required();
  chrom_cmd->add_option("--cap", vertex_cap, "vertex cap");

  TransformArgs tr;
  auto* tr_cmd = app.add_subcommand("transform", "class transformations");
  tr_cmd->add_option("--in", tr.in, "representation file")->required();
  tr_cmd->add_option("--out", tr.out_path, "output file");
  tr_cmd->add_flag("--proper-to-unit", tr.proper_to_unit);
  tr_cmd->add_flag("--muda-roundtrip", tr.muda_roundtrip);
  tr_cmd->add_flag("--muda-to-interval", tr.muda_to_interval);
  tr_cmd->add_flag("--perturb", tr.perturb);
  tr_cmd->add_flag("--reduce", tr.reduce, "k-veto to double veto");
  tr_cmd->add_option("--split", tr.split, "split marks up to this many");

  CheckArgs chk;
  auto* chk_cmd = app.add_subcommand("check", "invariant suites");
  chk_cmd->add_flag("--triangle-free", chk.triangle_free);
  chk_cmd->add_flag("--partition", chk.partition);
  chk_cmd->add_flag("--mpvi-order", chk.mpvi_order);
  chk_cmd->add_flag("--perturbation", chk.perturbation);
  chk_cmd->add_option("--in", chk.in, "single input instead of random trials");
  chk_cmd->add_option("--seed", chk.seed, "RNG seed");
  chk_cmd->add_option("--trials", chk.trials, "number of random representations");
  chk_cmd->add_option("--n", chk.max_n, "largest interval count");
  chk_cmd->add_option("--marks", chk.marks, "marks per interval for --triangle-free");

  bool svg = false;
  int width = 72;
  auto* plot_cmd = app.add_subcommand("plot", "text or SVG drawing of a representation");
  plot_cmd->add_option("--in", in, "representation file")->required();
  plot_cmd->add_flag("--svg", svg);
  plot_cmd->add_option("--width", width, "text width");
  plot_cmd->add_option("--out", out_path, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const Output o{format == "json", out};
  try {
    if (family_cmd->parsed()) return cmd_family(fam, o);
    if (graph_cmd->parsed()) return cmd_graph(in, tag, out_path, o);
    if (rec_cmd->parsed()) return cmd_recognize(rec, o);
    if (orient_cmd->parsed()) return cmd_orient(in, cap, !no_classes, o);
    if (color_cmd->parsed()) return cmd_color_uvi(in, o);
    if (chrom_cmd->parsed()) return cmd_chromatic(in, vertex_cap, o);
    if (tr_cmd->parsed()) return cmd_transform(tr, o);
    if (chk_cmd->parsed()) return cmd_check(chk, o);
    if (plot_cmd->parsed()) return cmd_plot(in, svg, width, out_path, o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace veto::cli
