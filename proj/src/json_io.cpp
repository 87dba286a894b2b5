#include "mho/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <limits>

namespace mho {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  return j;
}

const json& expect_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string expect_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

long long expect_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  if (j.is_number_unsigned() &&
      j.get<unsigned long long>() >
          static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
    fail(where, "integer out of range");
  }
  return j.get<long long>();
}

const json& expect_field(const json& j, const char* key, const std::string& where) {
  expect_object(j, where);
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (item.key() == a) {
        known = true;
        break;
      }
    }
    if (!known) fail(where, "unknown field \"" + item.key() + "\"");
  }
}

int expect_vertex(const VertexUniverse& u, const json& j, const std::string& where) {
  const std::string label = expect_string(j, where);
  const int v = u.index_of(label);
  if (v < 0) fail(where, "unknown vertex \"" + label + "\"");
  return v;
}

json weights_to_json(const VertexUniverse& u, const std::vector<long long>& weights) {
  json out = json::object();
  for (int v = 0; v < u.n(); ++v) out[u.label(v)] = weights[static_cast<size_t>(v)];
  return out;
}

std::vector<long long> weights_from_json(const VertexUniverse& u, const json& j,
                                         const std::string& where) {
  expect_object(j, where);
  std::vector<long long> out(static_cast<size_t>(u.n()), 0);
  std::vector<bool> seen(static_cast<size_t>(u.n()), false);
  for (const auto& item : j.items()) {
    const int v = u.index_of(item.key());
    if (v < 0) fail(where, "unknown vertex \"" + item.key() + "\"");
    if (seen[static_cast<size_t>(v)]) fail(where, "vertex \"" + item.key() + "\" given twice");
    seen[static_cast<size_t>(v)] = true;
    out[static_cast<size_t>(v)] = expect_int(item.value(), where + "." + item.key());
  }
  for (int v = 0; v < u.n(); ++v) {
    if (!seen[static_cast<size_t>(v)]) fail(where, "missing vertex \"" + u.label(v) + "\"");
  }
  return out;
}

json roots_to_json(const VertexUniverse& u, const RootPlacement& roots) {
  json out = json::array();
  for (int v : roots.vertex_of) out.push_back(u.label(v));
  return out;
}

RootPlacement roots_from_json(const VertexUniverse& u, const json& j, const std::string& where) {
  expect_array(j, where);
  std::vector<int> vertices;
  vertices.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    vertices.push_back(expect_vertex(u, j[i], where + "[" + std::to_string(i) + "]"));
  }
  return RootPlacement::make(std::move(vertices));
}

}  // namespace

json vertex_set_to_json(const VertexUniverse& u, VertexSet x) {
  json out = json::array();
  for (int v : x.elements()) out.push_back(u.label(v));
  return out;
}

VertexSet vertex_set_from_json(const VertexUniverse& u, const json& j) {
  expect_array(j, "vertex set");
  VertexSet out;
  for (const json& item : j) {
    const int v = expect_vertex(u, item, "vertex set");
    if (out.contains(v)) fail("vertex set", "vertex \"" + u.label(v) + "\" repeated");
    out = out.with(v);
  }
  return out;
}

json subpartition_to_json(const VertexUniverse& u, const Subpartition& p) {
  json out = json::array();
  for (const VertexSet& m : p.members) out.push_back(vertex_set_to_json(u, m));
  return out;
}

Subpartition subpartition_from_json(const VertexUniverse& u, const json& j) {
  expect_array(j, "subpartition");
  std::vector<VertexSet> members;
  members.reserve(j.size());
  for (const json& item : j) members.push_back(vertex_set_from_json(u, item));
  try {
    return Subpartition::make(std::move(members));
  } catch (const DomainError& e) {
    fail("subpartition", e.what());
  }
}

json matroid_to_json(const MatroidSpec& m) {
  json out = json::object();
  switch (m.kind) {
    case MatroidSpec::Kind::free:
      out["kind"] = "free";
      break;
    case MatroidSpec::Kind::uniform:
      out["kind"] = "uniform";
      out["rank"] = m.uniform_rank;
      break;
    case MatroidSpec::Kind::partition: {
      out["kind"] = "partition";
      json classes = json::array();
      for (uint32_t c : m.classes) {
        json cls = json::array();
        for (uint32_t rest = c; rest != 0; rest &= rest - 1) {
          cls.push_back(std::countr_zero(rest));
        }
        classes.push_back(std::move(cls));
      }
      out["classes"] = std::move(classes);
      out["capacities"] = m.capacities;
      break;
    }
    case MatroidSpec::Kind::graphic: {
      out["kind"] = "graphic";
      out["nodes"] = m.graphic_nodes;
      json edges = json::array();
      for (const auto& [a, b] : m.graphic_edges) edges.push_back(json::array({a, b}));
      out["edges"] = std::move(edges);
      break;
    }
    case MatroidSpec::Kind::table:
      out["kind"] = "table";
      out["ranks"] = m.table_ranks;
      break;
  }
  return out;
}

MatroidSpec matroid_from_json(const json& j, int ground_size) {
  const std::string where = "matroid";
  expect_object(j, where);
  const std::string kind = expect_string(expect_field(j, "kind", where), where + ".kind");
  try {
    if (kind == "free") {
      reject_unknown(j, {"kind"}, where);
      return MatroidSpec::free_matroid(ground_size);
    }
    if (kind == "uniform") {
      reject_unknown(j, {"kind", "rank"}, where);
      const long long r = expect_int(expect_field(j, "rank", where), where + ".rank");
      return MatroidSpec::uniform(ground_size, static_cast<int>(r));
    }
    if (kind == "partition") {
      reject_unknown(j, {"kind", "classes", "capacities"}, where);
      const json& jclasses = expect_array(expect_field(j, "classes", where), where + ".classes");
      std::vector<uint32_t> classes;
      for (size_t i = 0; i < jclasses.size(); ++i) {
        const std::string cw = where + ".classes[" + std::to_string(i) + "]";
        const json& jc = expect_array(jclasses[i], cw);
        uint32_t mask = 0;
        for (const json& item : jc) {
          const long long e = expect_int(item, cw);
          if (e < 0 || e >= ground_size) fail(cw, "ground element out of range");
          mask |= 1u << e;
        }
        classes.push_back(mask);
      }
      const json& jcaps =
          expect_array(expect_field(j, "capacities", where), where + ".capacities");
      std::vector<int> capacities;
      for (size_t i = 0; i < jcaps.size(); ++i) {
        capacities.push_back(static_cast<int>(
            expect_int(jcaps[i], where + ".capacities[" + std::to_string(i) + "]")));
      }
      return MatroidSpec::partition(ground_size, std::move(classes), std::move(capacities));
    }
    if (kind == "graphic") {
      reject_unknown(j, {"kind", "nodes", "edges"}, where);
      const long long nodes = expect_int(expect_field(j, "nodes", where), where + ".nodes");
      const json& jedges = expect_array(expect_field(j, "edges", where), where + ".edges");
      std::vector<std::pair<int, int>> edges;
      for (size_t i = 0; i < jedges.size(); ++i) {
        const std::string ew = where + ".edges[" + std::to_string(i) + "]";
        const json& je = expect_array(jedges[i], ew);
        if (je.size() != 2) fail(ew, "expected a pair of node indices");
        edges.emplace_back(static_cast<int>(expect_int(je[0], ew)),
                           static_cast<int>(expect_int(je[1], ew)));
      }
      return MatroidSpec::graphic(ground_size, static_cast<int>(nodes), std::move(edges));
    }
    if (kind == "table") {
      reject_unknown(j, {"kind", "ranks"}, where);
      const json& jranks = expect_array(expect_field(j, "ranks", where), where + ".ranks");
      std::vector<int> ranks;
      for (size_t i = 0; i < jranks.size(); ++i) {
        ranks.push_back(static_cast<int>(
            expect_int(jranks[i], where + ".ranks[" + std::to_string(i) + "]")));
      }
      return MatroidSpec::table(ground_size, std::move(ranks));
    }
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  fail(where + ".kind", "unknown matroid kind \"" + kind + "\"");
}

json set_function_to_json(const VertexUniverse& u, const SetFunction& f) {
  json out = json::object();
  switch (f.kind) {
    case SetFunction::Kind::constant:
      out["kind"] = "constant";
      out["value"] = f.value;
      break;
    case SetFunction::Kind::modular:
      out["kind"] = "modular";
      out["offset"] = f.offset;
      out["weights"] = weights_to_json(u, f.weights);
      break;
    case SetFunction::Kind::table: {
      out["kind"] = "table";
      out["default"] = f.table_default;
      json entries = json::array();
      for (const auto& [key, value] : f.entries) {
        json entry = json::object();
        entry["set"] = vertex_set_to_json(u, key);
        entry["value"] = value;
        entries.push_back(std::move(entry));
      }
      out["entries"] = std::move(entries);
      break;
    }
    case SetFunction::Kind::rank:
      out["kind"] = "rank";
      out["roots"] = roots_to_json(u, f.roots);
      out["matroid"] = matroid_to_json(f.matroid);
      break;
    case SetFunction::Kind::k_minus_rank:
      out["kind"] = "k_minus_rank";
      out["k"] = f.rank_bound;
      out["roots"] = roots_to_json(u, f.roots);
      out["matroid"] = matroid_to_json(f.matroid);
      break;
  }
  return out;
}

SetFunction set_function_from_json(const VertexUniverse& u, const json& j) {
  const std::string where = "set function";
  expect_object(j, where);
  const std::string kind = expect_string(expect_field(j, "kind", where), where + ".kind");
  try {
    if (kind == "constant") {
      reject_unknown(j, {"kind", "value"}, where);
      return SetFunction::constant(expect_int(expect_field(j, "value", where), where + ".value"));
    }
    if (kind == "modular") {
      reject_unknown(j, {"kind", "offset", "weights"}, where);
      const long long offset = expect_int(expect_field(j, "offset", where), where + ".offset");
      std::vector<long long> weights =
          weights_from_json(u, expect_field(j, "weights", where), where + ".weights");
      return SetFunction::modular(std::move(weights), offset);
    }
    if (kind == "table") {
      reject_unknown(j, {"kind", "default", "entries"}, where);
      const long long dflt =
          expect_int(expect_field(j, "default", where), where + ".default");
      const json& jentries =
          expect_array(expect_field(j, "entries", where), where + ".entries");
      std::vector<std::pair<VertexSet, long long>> entries;
      for (size_t i = 0; i < jentries.size(); ++i) {
        const std::string ew = where + ".entries[" + std::to_string(i) + "]";
        const json& je = expect_object(jentries[i], ew);
        reject_unknown(je, {"set", "value"}, ew);
        const VertexSet key = vertex_set_from_json(u, expect_field(je, "set", ew));
        entries.emplace_back(key, expect_int(expect_field(je, "value", ew), ew + ".value"));
      }
      return SetFunction::table(std::move(entries), dflt);
    }
    if (kind == "rank") {
      reject_unknown(j, {"kind", "roots", "matroid"}, where);
      RootPlacement roots =
          roots_from_json(u, expect_field(j, "roots", where), where + ".roots");
      MatroidSpec matroid = matroid_from_json(expect_field(j, "matroid", where), roots.size());
      return SetFunction::matroid_rank(std::move(roots), std::move(matroid));
    }
    if (kind == "k_minus_rank") {
      reject_unknown(j, {"kind", "k", "roots", "matroid"}, where);
      const long long k = expect_int(expect_field(j, "k", where), where + ".k");
      RootPlacement roots =
          roots_from_json(u, expect_field(j, "roots", where), where + ".roots");
      MatroidSpec matroid = matroid_from_json(expect_field(j, "matroid", where), roots.size());
      return SetFunction::rank_deficit(k, std::move(roots), std::move(matroid));
    }
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  fail(where + ".kind", "unknown set-function kind \"" + kind + "\"");
}

namespace {

json packing_to_json(const VertexUniverse& u, const PackingSetup& p) {
  json out = json::object();
  out["mode"] = packing_mode_name(p.mode);
  const PackingMode mode = p.mode;
  const bool uses_k = mode != PackingMode::edmonds && mode != PackingMode::m_based;
  const bool uses_bounds = mode == PackingMode::fg_bounded ||
                           mode == PackingMode::m_rooted_fgk_dyper ||
                           mode == PackingMode::m_rooted_fgk_mixed;
  const bool uses_roots = mode != PackingMode::fg_bounded;
  const bool uses_matroid = mode == PackingMode::m_based ||
                            mode == PackingMode::m_rooted_fgk_dyper ||
                            mode == PackingMode::m_rooted_fgk_mixed;
  if (uses_k) out["k"] = p.k;
  if (uses_bounds) {
    out["f"] = weights_to_json(u, p.f);
    out["g"] = weights_to_json(u, p.g);
  }
  if (uses_roots) out["roots"] = roots_to_json(u, p.roots);
  if (uses_matroid) out["matroid"] = matroid_to_json(p.matroid);
  return out;
}

PackingSetup packing_from_json(const VertexUniverse& u, const json& j) {
  const std::string where = "packing";
  expect_object(j, where);
  const std::string name = expect_string(expect_field(j, "mode", where), where + ".mode");
  const auto mode = packing_mode_from_name(name);
  if (!mode) fail(where + ".mode", "unknown packing mode \"" + name + "\"");
  PackingSetup out;
  out.mode = *mode;
  const bool uses_k = *mode != PackingMode::edmonds && *mode != PackingMode::m_based;
  const bool uses_bounds = *mode == PackingMode::fg_bounded ||
                           *mode == PackingMode::m_rooted_fgk_dyper ||
                           *mode == PackingMode::m_rooted_fgk_mixed;
  const bool uses_roots = *mode != PackingMode::fg_bounded;
  const bool uses_matroid = *mode == PackingMode::m_based ||
                            *mode == PackingMode::m_rooted_fgk_dyper ||
                            *mode == PackingMode::m_rooted_fgk_mixed;
  std::vector<const char*> allowed{"mode"};
  if (uses_k) allowed.push_back("k");
  if (uses_bounds) {
    allowed.push_back("f");
    allowed.push_back("g");
  }
  if (uses_roots) allowed.push_back("roots");
  if (uses_matroid) allowed.push_back("matroid");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (item.key() == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail(where, "field \"" + item.key() + "\" does not belong to mode " + name);
    }
  }
  try {
    if (uses_k) out.k = expect_int(expect_field(j, "k", where), where + ".k");
    if (uses_bounds) {
      out.f = weights_from_json(u, expect_field(j, "f", where), where + ".f");
      out.g = weights_from_json(u, expect_field(j, "g", where), where + ".g");
    }
    if (uses_roots) {
      out.roots = roots_from_json(u, expect_field(j, "roots", where), where + ".roots");
    }
    if (uses_matroid) {
      out.matroid =
          matroid_from_json(expect_field(j, "matroid", where), out.roots.size());
    }
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  return out;
}

}  // namespace

PackingInstance to_packing_instance(const Instance& instance) {
  if (!instance.packing) throw DomainError("instance has no packing block");
  PackingInstance out;
  out.graph = instance.graph;
  out.mode = instance.packing->mode;
  out.k = instance.packing->k;
  out.f = instance.packing->f;
  out.g = instance.packing->g;
  out.roots = instance.packing->roots;
  out.matroid = instance.packing->matroid;
  return out;
}

json instance_to_json(const Instance& instance) {
  const VertexUniverse& u = instance.graph.universe;
  json out = json::object();
  json vertices = json::array();
  for (const std::string& label : u.labels) vertices.push_back(label);
  out["vertices"] = std::move(vertices);
  json hyperedges = json::array();
  for (const auto& [e, mult] : instance.graph.hyperedges) {
    for (long long c = 0; c < mult; ++c) hyperedges.push_back(vertex_set_to_json(u, e.members));
  }
  out["hyperedges"] = std::move(hyperedges);
  json dyperedges = json::array();
  for (const auto& [d, mult] : instance.graph.dyperedges) {
    json entry = json::object();
    entry["tails"] = vertex_set_to_json(u, d.tails);
    entry["head"] = u.label(d.head);
    for (long long c = 0; c < mult; ++c) dyperedges.push_back(entry);
  }
  out["dyperedges"] = std::move(dyperedges);
  if (instance.demand) out["h"] = set_function_to_json(u, *instance.demand);
  if (instance.allowance) out["b"] = set_function_to_json(u, *instance.allowance);
  if (instance.packing) out["packing"] = packing_to_json(u, *instance.packing);
  return out;
}

Instance instance_from_json(const json& j) {
  const std::string where = "instance";
  expect_object(j, where);
  reject_unknown(j, {"vertices", "hyperedges", "dyperedges", "h", "b", "packing", "meta"},
                 where);
  const json& jverts = expect_array(expect_field(j, "vertices", where), where + ".vertices");
  std::vector<std::string> labels;
  labels.reserve(jverts.size());
  for (size_t i = 0; i < jverts.size(); ++i) {
    labels.push_back(
        expect_string(jverts[i], where + ".vertices[" + std::to_string(i) + "]"));
  }
  VertexUniverse u;
  try {
    u = VertexUniverse::make(std::move(labels));
  } catch (const DomainError& e) {
    fail(where + ".vertices", e.what());
  }

  std::vector<Hyperedge> hyperedges;
  if (j.contains("hyperedges")) {
    const json& jh = expect_array(j["hyperedges"], where + ".hyperedges");
    for (size_t i = 0; i < jh.size(); ++i) {
      const std::string ew = where + ".hyperedges[" + std::to_string(i) + "]";
      const VertexSet members = vertex_set_from_json(u, expect_array(jh[i], ew));
      try {
        hyperedges.push_back(Hyperedge::make(members));
      } catch (const DomainError& e) {
        fail(ew, e.what());
      }
    }
  }
  std::vector<Dyperedge> dyperedges;
  if (j.contains("dyperedges")) {
    const json& jd = expect_array(j["dyperedges"], where + ".dyperedges");
    for (size_t i = 0; i < jd.size(); ++i) {
      const std::string ew = where + ".dyperedges[" + std::to_string(i) + "]";
      const json& je = expect_object(jd[i], ew);
      reject_unknown(je, {"tails", "head"}, ew);
      const VertexSet tails = vertex_set_from_json(u, expect_field(je, "tails", ew));
      const int head = expect_vertex(u, expect_field(je, "head", ew), ew + ".head");
      try {
        dyperedges.push_back(Dyperedge::make(tails, head));
      } catch (const DomainError& e) {
        fail(ew, e.what());
      }
    }
  }

  Instance out;
  try {
    out.graph = MixedHypergraph::make(u, hyperedges, dyperedges);
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  if (j.contains("h")) out.demand = set_function_from_json(u, j["h"]);
  if (j.contains("b")) out.allowance = set_function_from_json(u, j["b"]);
  if (j.contains("packing")) out.packing = packing_from_json(u, j["packing"]);
  return out;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return instance_from_json(j);
}

void save_json(const json& j, const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ParseError("cannot write " + tmp.string());
    out << j.dump(2) << "\n";
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ParseError("cannot rename into " + path);
  }
}

}  // namespace mho
