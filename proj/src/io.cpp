// Copyright (c) lcadag contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lcadag/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lcadag/errors.hpp"

namespace lcadag {
namespace {

using nlohmann::json;

[[noreturn]] void syntax_error(const std::string& message, int line = 0, int column = 0) {
  Error e(ErrorKind::SyntaxError, message);
  e.line = line;
  e.column = column;
  throw e;
}

// ---- json helpers ----------------------------------------------------------

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& pe) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < pe.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    Error e(ErrorKind::SyntaxError, std::string("malformed json: ") + pe.what());
    e.line = line;
    e.column = column;
    throw e;
  }
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                std::initializer_list<const char*> required) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) known = true;
    if (!known) syntax_error("unknown key: " + item.key());
  }
  for (const char* k : required)
    if (!obj.contains(k)) syntax_error(std::string("missing key: ") + k);
}

int read_version(const json& obj) {
  const json& v = obj.at("format_version");
  if (!v.is_number_integer()) syntax_error("format_version must be an integer");
  if (v.get<int>() != 1) syntax_error("unsupported format_version: " + v.dump());
  return 1;
}

std::map<std::string, std::string> read_metadata(const json& obj) {
  std::map<std::string, std::string> meta;
  if (!obj.contains("metadata")) return meta;
  const json& m = obj.at("metadata");
  if (!m.is_object()) syntax_error("metadata must be an object");
  for (const auto& item : m.items()) {
    if (!item.value().is_string()) syntax_error("metadata values must be strings");
    meta[item.key()] = item.value().get<std::string>();
  }
  return meta;
}

VertexId read_vertex_id(const json& value) {
  if (!value.is_number_integer()) syntax_error("vertex ids must be integers");
  return value.get<std::int64_t>();
}

DagDocument parse_dag_json(std::string_view text) {
  json j = parse_json(text);
  if (!j.is_object()) syntax_error("top-level value must be an object");
  check_keys(j, {"format_version", "vertices", "edges", "metadata"},
             {"format_version", "vertices", "edges"});
  int version = read_version(j);

  DagInput in;
  const json& vs = j.at("vertices");
  if (!vs.is_array()) syntax_error("vertices must be an array");
  for (const json& v : vs) {
    if (!v.is_object()) syntax_error("each vertex must be an object");
    check_keys(v, {"id", "label"}, {"id"});
    VertexId id = read_vertex_id(v.at("id"));
    in.vertices.push_back(id);
    if (v.contains("label")) {
      if (!v.at("label").is_string()) syntax_error("vertex labels must be strings");
      in.leaf_labels[id] = v.at("label").get<std::string>();
    }
  }
  const json& es = j.at("edges");
  if (!es.is_array()) syntax_error("edges must be an array");
  for (const json& e : es) {
    if (!e.is_array() || e.size() != 2)
      syntax_error("each edge must be a [parent, child] pair");
    in.edges.emplace_back(read_vertex_id(e[0]), read_vertex_id(e[1]));
  }
  return DagDocument{version, Dag::validate(in), read_metadata(j)};
}

// ---- edge-list text --------------------------------------------------------

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

DagDocument parse_dag_text(std::string_view text) {
  std::map<std::string, VertexId, std::less<>> id_of;
  std::vector<std::string> names;
  auto intern = [&](std::string_view name) -> VertexId {
    auto it = id_of.find(name);
    if (it != id_of.end()) return it->second;
    VertexId id = static_cast<VertexId>(names.size());
    names.emplace_back(name);
    id_of.emplace(std::string(name), id);
    return id;
  };

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> declared_leaves;
  bool saw_leaves = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first])))
      ++first;
    if (first == line.size()) continue;

    constexpr std::string_view kLeaves = "leaves:";
    if (line.substr(first).substr(0, kLeaves.size()) == kLeaves) {
      if (saw_leaves)
        syntax_error("duplicate leaves line", line_no, static_cast<int>(first) + 1);
      saw_leaves = true;
      for (std::string_view name : split_ws(line.substr(first + kLeaves.size())))
        declared_leaves.push_back(intern(name));
      continue;
    }

    std::size_t seg_start = 0;
    while (seg_start <= line.size()) {
      std::size_t slash = line.find('/', seg_start);
      std::string_view segment = line.substr(
          seg_start, (slash == std::string_view::npos ? line.size() : slash) - seg_start);
      std::vector<std::string_view> tokens = split_ws(segment);
      if (!tokens.empty() || slash != std::string_view::npos) {
        if (tokens.size() != 2)
          syntax_error("each entry must name exactly a parent and a child", line_no,
                       static_cast<int>(seg_start) + 1);
        VertexId parent = intern(tokens[0]);
        VertexId child = intern(tokens[1]);
        edges.emplace_back(parent, child);
      }
      if (slash == std::string_view::npos) break;
      seg_start = slash + 1;
    }
  }

  if (names.empty()) syntax_error("empty input", 1, 1);

  DagInput in;
  for (VertexId id = 0; id < static_cast<VertexId>(names.size()); ++id)
    in.vertices.push_back(id);
  in.edges = edges;
  if (saw_leaves) {
    for (VertexId id : declared_leaves) in.leaf_labels[id] = names[static_cast<std::size_t>(id)];
  } else {
    std::set<VertexId> has_out;
    for (const auto& [parent, child] : edges) has_out.insert(parent);
    for (VertexId id : in.vertices)
      if (!has_out.count(id)) in.leaf_labels[id] = names[static_cast<std::size_t>(id)];
  }
  return DagDocument{1, Dag::validate(in), {}};
}

}  // namespace

// ---- public api ------------------------------------------------------------

DagDocument parse_dag_document(std::string_view text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      return c == '{' ? parse_dag_json(text) : parse_dag_text(text);
  return parse_dag_text(text);  // all whitespace: reports empty input
}

SystemDocument parse_system_document(std::string_view text) {
  json j = parse_json(text);
  if (!j.is_object()) syntax_error("top-level value must be an object");
  check_keys(j, {"format_version", "ground", "sets", "metadata"},
             {"format_version", "ground", "sets"});
  int version = read_version(j);

  const json& g = j.at("ground");
  if (!g.is_array()) syntax_error("ground must be an array of labels");
  std::vector<std::string> ground;
  for (const json& label : g) {
    if (!label.is_string()) syntax_error("ground labels must be strings");
    ground.push_back(label.get<std::string>());
  }
  std::vector<std::string> sorted_ground = ground;
  std::sort(sorted_ground.begin(), sorted_ground.end());
  std::map<std::string, LabelIndex> index_of;
  for (std::size_t i = 0; i < sorted_ground.size(); ++i) {
    if (!index_of.emplace(sorted_ground[i], static_cast<LabelIndex>(i)).second) {
      Error e(ErrorKind::DuplicateLabel, "duplicate ground label: " + sorted_ground[i]);
      e.labels = {sorted_ground[i]};
      throw e;
    }
  }

  const json& ss = j.at("sets");
  if (!ss.is_array()) syntax_error("sets must be an array of label arrays");
  std::vector<LabelSet> members;
  std::set<LabelSet> seen;
  for (const json& one : ss) {
    if (!one.is_array()) syntax_error("each set must be an array of labels");
    LabelSet member;
    for (const json& label : one) {
      if (!label.is_string()) syntax_error("set elements must be strings");
      std::string name = label.get<std::string>();
      auto it = index_of.find(name);
      if (it == index_of.end()) {
        Error e(ErrorKind::UnknownLabel, "label outside the ground set: " + name);
        e.labels = {name};
        throw e;
      }
      member.push_back(it->second);
    }
    std::sort(member.begin(), member.end());
    if (std::adjacent_find(member.begin(), member.end()) != member.end()) {
      Error e(ErrorKind::DuplicateLabel, "duplicate label inside one set");
      throw e;
    }
    if (!seen.insert(member).second) {
      Error e(ErrorKind::DuplicateMember, "the same set is listed twice");
      throw e;
    }
    members.push_back(std::move(member));
  }
  return SystemDocument{version, SetSystem(std::move(sorted_ground), std::move(members)),
                        read_metadata(j)};
}

std::string serialize(const DagDocument& doc) {
  json j;
  j["format_version"] = doc.format_version;
  json vertices = json::array();
  for (VertexId v : doc.dag.vertex_ids()) {
    json item;
    item["id"] = v;
    if (std::optional<std::string> label = doc.dag.label_of(v)) item["label"] = *label;
    vertices.push_back(std::move(item));
  }
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& [parent, child] : doc.dag.edge_list())
    edges.push_back(json::array({parent, child}));
  j["edges"] = std::move(edges);
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  return j.dump(2) + "\n";
}

std::string serialize(const SystemDocument& doc) {
  json j;
  j["format_version"] = doc.format_version;
  j["ground"] = doc.system.ground();
  json sets = json::array();
  for (const LabelSet& member : doc.system.members()) {
    json one = json::array();
    for (LabelIndex i : member) one.push_back(doc.system.ground()[i]);
    sets.push_back(std::move(one));
  }
  j["sets"] = std::move(sets);
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  return j.dump(2) + "\n";
}

std::string export_dot(const Dag& dag, const DotOptions& options) {
  auto cuts = dag.shortcuts();
  std::set<std::pair<VertexId, VertexId>> dashed(cuts.begin(), cuts.end());
  std::set<VertexId> marked(options.highlight.begin(), options.highlight.end());
  auto escaped = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };

  std::string out = "digraph dag {\n  rankdir=TB;\n  node [shape=ellipse];\n";
  for (VertexId v : dag.vertex_ids()) {
    std::string name = "v" + std::to_string(v);
    std::string label = escaped(dag.label_of(v).value_or(name));
    if (options.show_clusters)
      label += "\\n" + render_label_set(dag.cluster(v), dag.alphabet());
    out += "  " + name + " [label=\"" + label + "\"";
    if (marked.count(v)) out += ", style=filled, fillcolor=\"#a6cee3\"";
    out += "];\n";
  }
  for (const auto& [parent, child] : dag.edge_list()) {
    out += "  v" + std::to_string(parent) + " -> v" + std::to_string(child);
    if (dashed.count({parent, child})) out += " [style=dashed]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace lcadag
