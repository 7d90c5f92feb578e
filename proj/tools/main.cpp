// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
//
// lcadag — command-line front end for the DAG cluster / lca toolkit.
// Exit codes: 0 success (all checks pass), 1 a checked property or law
// fails (or an operation's hypotheses do not hold), 2 input or usage error.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcadag/corpus.hpp"
#include "lcadag/dag.hpp"
#include "lcadag/errors.hpp"
#include "lcadag/hasse.hpp"
#include "lcadag/io.hpp"
#include "lcadag/lca.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/size_index.hpp"
#include "lcadag/transform.hpp"

using json = nlohmann::json;
using namespace lcadag;

namespace {

// Bad input (unreadable/malformed files, bad flag values) → exit 2, as
// opposed to domain failures during an operation → exit 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open file: " + path);
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

Dag load_dag(const std::string& path) {
  try {
    return parse_dag_document(slurp_file(path)).dag;
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

SetSystem load_system(const std::string& path) {
  try {
    return parse_system_document(slurp_file(path)).system;
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<int> parse_size_list(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw InputError("--sizes: empty entry in '" + text + "'");
    try {
      std::size_t dash = token.find('-', 1);
      if (dash != std::string::npos) {
        int lo = std::stoi(token.substr(0, dash));
        int hi = std::stoi(token.substr(dash + 1));
        if (lo > hi) throw InputError("--sizes: bad range '" + token + "'");
        for (int k = lo; k <= hi; ++k) sizes.push_back(k);
      } else {
        sizes.push_back(std::stoi(token));
      }
    } catch (const std::logic_error&) {
      throw InputError("--sizes: cannot parse '" + token + "'");
    }
  }
  if (sizes.empty()) throw InputError("--sizes: no sizes in '" + text + "'");
  return sizes;
}

SizeIndex make_index(const std::string& text) {
  std::vector<int> sizes = parse_size_list(text);
  if (std::find(sizes.begin(), sizes.end(), 1) == sizes.end()) {
    std::cerr << "note: size 1 is always part of the index; including it\n";
    sizes.push_back(1);
  }
  try {
    return SizeIndex::with_one(std::move(sizes));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--sizes: ") + e.what());
  }
}

std::vector<VertexId> parse_id_list(const std::string& text) {
  std::vector<VertexId> ids;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    try {
      ids.push_back(std::stoll(token));
    } catch (const std::logic_error&) {
      throw InputError("--remove: cannot parse id '" + token + "'");
    }
  }
  return ids;
}

// ---- json rendering --------------------------------------------------------

json to_json(const Witness& w) {
  json j;
  j["what"] = w.what;
  if (!w.vertices.empty()) j["vertices"] = w.vertices;
  if (!w.labels.empty()) j["labels"] = w.labels;
  return j;
}

json labels_json(const LabelSet& s, const std::vector<std::string>& alphabet) {
  json arr = json::array();
  for (LabelIndex i : s) arr.push_back(alphabet[i]);
  return arr;
}

json label_sets_json(const std::vector<LabelSet>& sets,
                     const std::vector<std::string>& alphabet) {
  json arr = json::array();
  for (const LabelSet& s : sets) arr.push_back(labels_json(s, alphabet));
  return arr;
}

json shape_json(const ShapeReport& shape) {
  json j;
  j["connected"] = shape.connected;
  j["network"] = shape.network;
  j["tree"] = shape.tree;
  j["galled_tree"] = shape.galled_tree;
  j["non_trivial"] = shape.non_trivial;
  j["kappa"] = shape.kappa ? json(*shape.kappa) : json();
  json witnesses;
  for (const auto& [flag, w] : shape.witnesses) witnesses[flag] = to_json(w);
  if (!witnesses.is_null()) j["witnesses"] = witnesses;
  return j;
}

json structure_json(const StructureReport& rep, const std::vector<std::string>& alphabet) {
  json j;
  j["grounded"] = rep.grounded;
  j["clustering"] = rep.clustering;
  j["tree_like"] = rep.tree_like;
  j["n3o"] = rep.n3o;
  j["prop_l"] = rep.prop_l;
  j["closed"] = rep.closed;
  j["galled_tree_like"] = rep.galled_tree_like;
  j["non_trivial"] = rep.non_trivial;
  j["kappa"] = rep.kappa ? json(*rep.kappa) : json();
  json witnesses;
  for (const auto& [flag, sets] : rep.witnesses)
    witnesses[flag] = label_sets_json(sets, alphabet);
  if (!witnesses.is_null()) j["witnesses"] = witnesses;
  return j;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- commands --------------------------------------------------------------

int cmd_check(const std::string& dag_path, const std::string& sizes) {
  Dag dag = load_dag(dag_path);
  SizeIndex idx = make_index(sizes);
  SetSystem sys = cluster_system(dag);
  const std::vector<std::string>& x = dag.alphabet();

  json j;
  j["index"] = idx.sizes();
  j["alphabet"] = x;
  j["vertex_count"] = dag.vertex_count();
  j["edge_count"] = dag.edge_count();

  json lca;
  LcaPropertyResult prop = has_i_lca_property(dag, idx);
  lca["property"]["holds"] = prop.holds;
  if (prop.witness) {
    lca["property"]["witness"] = labels_json(*prop.witness, x);
    lca["property"]["witness_lcas"] = prop.witness_lcas;
  }
  RelevanceResult rel = is_i_lca_relevant(dag, idx);
  lca["relevant"]["holds"] = rel.holds;
  if (!rel.non_lca.empty()) lca["relevant"]["non_lca"] = rel.non_lca;
  j["lca"] = lca;

  json d;
  PccResult pcc = is_pcc(dag);
  d["pcc"]["holds"] = pcc.holds;
  if (pcc.witness) d["pcc"]["witness"] = to_json(*pcc.witness);
  RegularResult reg = is_regular(dag);
  d["regular"]["holds"] = reg.holds;
  if (reg.witness) d["regular"]["witness"] = to_json(*reg.witness);
  PhylogeneticResult phylo = is_phylogenetic(dag);
  d["phylogenetic"]["holds"] = phylo.holds;
  if (phylo.witness) d["phylogenetic"]["witness"] = to_json(*phylo.witness);
  d["shape"] = shape_json(recognize_shape(dag));
  j["dag"] = d;

  json s;
  s["structure"] = structure_json(classify_structure(sys), x);
  PreAryResult pre = is_pre_i_ary(sys, idx);
  s["pre_ary"]["holds"] = pre.holds;
  if (pre.witness) {
    s["pre_ary"]["witness"] = labels_json(*pre.witness, x);
    s["pre_ary"]["witness_minimals"] = label_sets_json(pre.witness_minimals, x);
  }
  AryResult ary = is_i_ary(sys, idx);
  s["ary"]["holds"] = ary.holds;
  if (!ary.unwitnessed.empty())
    s["ary"]["unwitnessed"] = label_sets_json(ary.unwitnessed, x);
  j["system"] = s;

  print_json(j);
  return prop.holds ? 0 : 1;
}

int cmd_clusters(const std::string& dag_path) {
  Dag dag = load_dag(dag_path);
  Clusters cl = clusters(dag);
  json j;
  json by_vertex = json::array();
  for (const auto& [v, cluster] : cl.by_vertex) {
    json one;
    one["vertex"] = v;
    one["cluster"] = labels_json(cluster, dag.alphabet());
    by_vertex.push_back(std::move(one));
  }
  j["by_vertex"] = std::move(by_vertex);
  j["system"]["ground"] = cl.system.ground();
  json sets = json::array();
  for (const LabelSet& m : cl.system.members())
    sets.push_back(labels_json(m, cl.system.ground()));
  j["system"]["sets"] = std::move(sets);
  print_json(j);
  return 0;
}

int cmd_hasse(const std::string& sys_path, const std::string& realize,
              const std::string& sizes) {
  SetSystem sys = load_system(sys_path);
  if (realize.empty()) {
    std::cout << serialize(DagDocument{1, singleton_relabeled_hasse(sys), {}});
    return 0;
  }
  if (sizes.empty()) throw InputError("--realize requires --sizes");
  RealizeDemand demand;
  if (realize == "property") {
    demand = RealizeDemand::property;
  } else if (realize == "ary") {
    demand = RealizeDemand::relevant;
  } else {
    throw InputError("--realize must be 'property' or 'ary'");
  }
  std::cout << serialize(DagDocument{1, realize_with_property(sys, make_index(sizes), demand), {}});
  return 0;
}

int cmd_simplify(const std::string& dag_path, const std::string& sizes,
                 const std::string& emit, bool dot) {
  Dag dag = load_dag(dag_path);
  SimplificationResult r = simplify(dag, make_index(sizes));
  if (emit == "diff") {
    if (dot) throw InputError("--dot cannot render the diff");
    json j;
    j["removed"] = r.removed;
    j["uniqueness_certified"] = r.uniqueness_certified;
    j["cluster_diff"] = label_sets_json(r.cluster_diff, dag.alphabet());
    print_json(j);
    return 0;
  }
  const Dag* out = nullptr;
  if (emit == "reduced") {
    out = &r.reduced;
  } else if (emit == "shortcut-free") {
    out = &r.reduced_shortcut_free;
  } else {
    throw InputError("--emit must be 'reduced', 'shortcut-free', or 'diff'");
  }
  if (dot)
    std::cout << export_dot(*out);
  else
    std::cout << serialize(DagDocument{1, *out, {}});
  return 0;
}

int cmd_ominus(const std::string& dag_path, const std::string& remove) {
  Dag dag = load_dag(dag_path);
  std::vector<VertexId> ids = parse_id_list(remove);
  try {
    std::cout << serialize(DagDocument{1, ominus(dag, ids), {}});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnknownVertex || e.kind() == ErrorKind::RemovesEverything)
      throw InputError(std::string("--remove: ") + e.what());
    throw;
  }
  return 0;
}

int cmd_verify(const std::string& orig_path, const std::string& transformed_path,
               const std::string& sizes) {
  Dag original = load_dag(orig_path);
  Dag transformed = load_dag(transformed_path);
  PreservationReport rep;
  try {
    rep = verify_preservation(original, transformed, make_index(sizes));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::LabelMismatch)
      throw InputError(std::string("verify: ") + e.what());
    throw;
  }
  json j;
  const PreservationFlag* flags[] = {&rep.s0, &rep.s1, &rep.s2, &rep.s3, &rep.s4};
  const char* names[] = {"s0", "s1", "s2", "s3", "s4"};
  for (int i = 0; i < 5; ++i) {
    j[names[i]]["pass"] = flags[i]->pass;
    if (flags[i]->witness) j[names[i]]["witness"] = to_json(*flags[i]->witness);
  }
  j["all"] = rep.all();
  print_json(j);
  return rep.all() ? 0 : 1;
}

int cmd_shape(const std::string& dag_path) {
  print_json(shape_json(recognize_shape(load_dag(dag_path))));
  return 0;
}

int cmd_dot(const std::string& dag_path, bool show_clusters, bool highlight_w,
            const std::string& sizes) {
  Dag dag = load_dag(dag_path);
  DotOptions opt;
  opt.show_clusters = show_clusters;
  if (highlight_w) {
    if (sizes.empty()) throw InputError("--highlight-w requires --sizes");
    opt.highlight = simplify(dag, make_index(sizes)).removed;
  }
  std::cout << export_dot(dag, opt);
  return 0;
}

int cmd_fuzz(const std::string& laws_text, int trials, std::uint64_t seed) {
  std::vector<std::string> laws;
  if (laws_text.empty() || laws_text == "all") {
    laws = corpus_law_ids();
  } else {
    std::stringstream ss(laws_text);
    std::string token;
    while (std::getline(ss, token, ','))
      if (!token.empty()) laws.push_back(token);
  }
  GenParams params;
  params.seed = seed;
  CorpusReport report;
  try {
    report = check_corpus(laws, params, trials);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::cout << report.to_text();
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DAG cluster and lca analysis toolkit"};
  app.require_subcommand(1);

  std::string dag_path, sys_path, other_path, sizes, realize, emit = "reduced";
  std::string remove_ids, laws;
  bool dot_output = false, show_clusters = false, highlight_w = false;
  int trials = 100;
  std::uint64_t seed = 1;

  CLI::App* check = app.add_subcommand("check", "classify a DAG and its cluster system");
  check->add_option("dag", dag_path, "DAG document")->required();
  check->add_option("--sizes", sizes, "subset sizes, e.g. 1,2 or 1-3")->required();

  CLI::App* clusters_cmd = app.add_subcommand("clusters", "per-vertex clusters and the system");
  clusters_cmd->add_option("dag", dag_path, "DAG document")->required();

  CLI::App* hasse = app.add_subcommand("hasse", "cover digraph of a set system");
  hasse->add_option("system", sys_path, "set-system document")->required();
  hasse->add_option("--realize", realize, "demand 'property' or 'ary' lca guarantees");
  hasse->add_option("--sizes", sizes, "subset sizes for --realize");

  CLI::App* simplify_cmd = app.add_subcommand("simplify", "remove all non-lca vertices");
  simplify_cmd->add_option("dag", dag_path, "DAG document")->required();
  simplify_cmd->add_option("--sizes", sizes, "subset sizes")->required();
  simplify_cmd->add_option("--emit", emit, "reduced | shortcut-free | diff");
  simplify_cmd->add_flag("--dot", dot_output, "emit graphviz instead of a document");

  CLI::App* ominus_cmd = app.add_subcommand("ominus", "remove vertices, bridging paths");
  ominus_cmd->add_option("dag", dag_path, "DAG document")->required();
  ominus_cmd->add_option("--remove", remove_ids, "comma-separated vertex ids")->required();

  CLI::App* verify = app.add_subcommand("verify", "preservation checks between two DAGs");
  verify->add_option("original", dag_path, "original DAG document")->required();
  verify->add_option("transformed", other_path, "transformed DAG document")->required();
  verify->add_option("--sizes", sizes, "subset sizes")->required();

  CLI::App* shape = app.add_subcommand("shape", "connectivity and tree/galled-tree shape");
  shape->add_option("dag", dag_path, "DAG document")->required();

  CLI::App* dot = app.add_subcommand("dot", "graphviz export");
  dot->add_option("dag", dag_path, "DAG document")->required();
  dot->add_flag("--clusters", show_clusters, "show each vertex's cluster");
  dot->add_flag("--highlight-w", highlight_w, "highlight the removal set of simplify");
  dot->add_option("--sizes", sizes, "subset sizes for --highlight-w");

  CLI::App* fuzz = app.add_subcommand("fuzz", "run randomized law checks");
  fuzz->add_option("--laws", laws, "comma-separated law ids (default: all)");
  fuzz->add_option("--trials", trials, "trials per law");
  fuzz->add_option("--seed", seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(dag_path, sizes);
    if (app.got_subcommand(clusters_cmd)) return cmd_clusters(dag_path);
    if (app.got_subcommand(hasse)) return cmd_hasse(sys_path, realize, sizes);
    if (app.got_subcommand(simplify_cmd)) return cmd_simplify(dag_path, sizes, emit, dot_output);
    if (app.got_subcommand(ominus_cmd)) return cmd_ominus(dag_path, remove_ids);
    if (app.got_subcommand(verify)) return cmd_verify(dag_path, other_path, sizes);
    if (app.got_subcommand(shape)) return cmd_shape(dag_path);
    if (app.got_subcommand(dot)) return cmd_dot(dag_path, show_clusters, highlight_w, sizes);
    if (app.got_subcommand(fuzz)) return cmd_fuzz(laws, trials, seed);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
