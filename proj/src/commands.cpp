#include "mho/commands.hpp"

#include <chrono>

#include "mho/gen.hpp"
#include "mho/oracle.hpp"
#include "mho/orient.hpp"
#include "mho/packing.hpp"
#include "mho/subpartitions.hpp"
#include "mho/uncross.hpp"

namespace mho {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

json condition_caps() {
  json caps = json::object();
  caps["vertices"] = kMaxVertices;
  caps["enumeration_vertices"] = kMaxEnumerationVertices;
  return caps;
}

json verifier_caps() {
  json caps = json::object();
  caps["verifier_vertices"] = kMaxVerifierVertices;
  return caps;
}

json packing_caps() {
  json caps = json::object();
  caps["search_vertices"] = kMaxPackingSearchVertices;
  caps["search_edges"] = kMaxPackingSearchEdges;
  caps["search_regularity"] = kMaxPackingSearchRegularity;
  caps["search_roots"] = kMaxPackingSearchRoots;
  caps["check_vertices"] = kMaxPackingCheckVertices;
  caps["degree_check_vertices"] = kMaxDegreeCheckVertices;
  return caps;
}

void enforce_max_vertices(const Instance& instance, int max_vertices) {
  if (max_vertices > 0 && instance.graph.universe.n() > max_vertices) {
    throw DomainError("instance exceeds --max-vertices");
  }
}

const SetFunction& require_demand(const Instance& instance) {
  if (!instance.demand) throw ParseError("instance has no \"h\" function");
  return *instance.demand;
}

const SetFunction& require_allowance(const Instance& instance) {
  if (!instance.allowance) throw ParseError("instance has no \"b\" function");
  return *instance.allowance;
}

json certificate_to_json(const VertexUniverse& u, const ViolationCertificate& cert) {
  json out = json::object();
  out["subpartition"] = subpartition_to_json(u, cert.p);
  out["deficiency"] = cert.deficiency;
  return out;
}

json modularity_witness_to_json(const VertexUniverse& u, const ModularityWitness& w) {
  json out = json::object();
  out["x"] = vertex_set_to_json(u, w.x);
  out["y"] = vertex_set_to_json(u, w.y);
  out["lhs"] = w.lhs;
  out["rhs"] = w.rhs;
  return out;
}

json steps_to_json(const VertexUniverse& u, const MixedHypergraph& graph,
                   const std::vector<OrientationStep>& steps) {
  json out = json::array();
  for (const OrientationStep& step : steps) {
    json s = json::object();
    s["edge"] = vertex_set_to_json(
        u, graph.hyperedges[static_cast<size_t>(step.edge_index)].first.members);
    s["head"] = u.label(step.chosen_head);
    s["rule"] = step.rule == HeadRule::min_tight_intersection ? "min_tight_intersection"
                                                              : "arbitrary";
    s["family_size"] = step.family_size;
    if (step.common_ground) s["common_ground"] = vertex_set_to_json(u, *step.common_ground);
    out.push_back(std::move(s));
  }
  return out;
}

json packing_witness_to_json(const VertexUniverse& u, const PackingWitness& witness) {
  json out = json::object();
  json arbs = json::array();
  for (const ArborescenceWitness& arb : witness.arborescences) {
    json a = json::object();
    a["root"] = u.label(arb.root_vertex);
    if (arb.root_element >= 0) a["root_element"] = arb.root_element;
    json arcs = json::array();
    for (const ArcChoice& arc : arb.arcs) {
      json c = json::object();
      c["kind"] = arc.from_hyperedge ? "hyperedge" : "dyperedge";
      c["index"] = arc.edge_index;
      c["copy"] = arc.copy;
      c["tail"] = u.label(arc.tail);
      c["head"] = u.label(arc.head);
      arcs.push_back(std::move(c));
    }
    a["arcs"] = std::move(arcs);
    arbs.push_back(std::move(a));
  }
  out["arborescences"] = std::move(arbs);
  return out;
}

json packing_condition_witness_to_json(const VertexUniverse& u,
                                       const PackingConditionWitness& w) {
  json out = json::object();
  out["condition"] = w.condition;
  if (w.vertex) out["vertex"] = u.label(*w.vertex);
  if (w.x) out["x"] = vertex_set_to_json(u, *w.x);
  if (w.u) out["u"] = vertex_set_to_json(u, *w.u);
  if (w.w) out["w"] = vertex_set_to_json(u, *w.w);
  if (w.p) out["p"] = subpartition_to_json(u, *w.p);
  out["lhs"] = w.lhs;
  out["rhs"] = w.rhs;
  return out;
}

}  // namespace

CommandResult cmd_check(const std::string& path, int parallel, int max_vertices) {
  const auto start = Clock::now();
  const Instance instance = load_instance(path);
  enforce_max_vertices(instance, max_vertices);
  const SetFunction& demand = require_demand(instance);
  const SetFunction& allowance = require_allowance(instance);
  const auto cert = check_condition(instance.graph, demand, allowance, parallel);

  CommandResult result;
  result.report["command"] = "check";
  result.report["instance"] = path;
  result.report["verdict"] = cert ? "infeasible" : "feasible";
  if (cert) {
    result.report["certificate"] = certificate_to_json(instance.graph.universe, *cert);
  }
  result.report["caps"] = condition_caps();
  result.report["parallel"] = parallel;
  result.report["timing_ms"] = ms_since(start);
  result.exit_code = cert ? 1 : 0;
  return result;
}

CommandResult cmd_orient(const std::string& path, bool debug_recheck, int parallel,
                         int max_vertices) {
  const auto start = Clock::now();
  const Instance instance = load_instance(path);
  enforce_max_vertices(instance, max_vertices);
  const SetFunction& demand = require_demand(instance);
  const SetFunction& allowance = require_allowance(instance);
  const VertexUniverse& u = instance.graph.universe;

  CommandResult result;
  result.report["command"] = "orient";
  result.report["instance"] = path;

  // The orienter's head rule is only guaranteed under the modularity
  // hypotheses, so refuse inputs that break them instead of failing deep
  // inside the algorithm.
  const auto h_witness = is_intersecting_supermodular(demand, u);
  const auto b_witness = is_submodular(allowance, u);
  if (h_witness || b_witness) {
    result.report["verdict"] = "error";
    result.report["error"] = h_witness ? "demand function is not intersecting supermodular"
                                       : "allowance function is not submodular";
    json hypotheses = json::object();
    hypotheses["h_ok"] = !h_witness;
    hypotheses["b_ok"] = !b_witness;
    if (h_witness) hypotheses["h_witness"] = modularity_witness_to_json(u, *h_witness);
    if (b_witness) hypotheses["b_witness"] = modularity_witness_to_json(u, *b_witness);
    result.report["hypotheses"] = std::move(hypotheses);
    result.report["caps"] = condition_caps();
    result.report["parallel"] = parallel;
    result.report["timing_ms"] = ms_since(start);
    result.exit_code = 2;
    return result;
  }

  OrientOptions options;
  options.recheck_each_step = debug_recheck;
  options.parallel = parallel;
  const auto outcome = orient_all(instance.graph, demand, allowance, options);

  if (const auto* cert = std::get_if<ViolationCertificate>(&outcome)) {
    result.report["verdict"] = "infeasible";
    result.report["certificate"] = certificate_to_json(u, *cert);
    result.report["caps"] = condition_caps();
    result.report["parallel"] = parallel;
    result.report["timing_ms"] = ms_since(start);
    result.exit_code = 1;
    return result;
  }

  const auto& oriented = std::get<OrientationResult>(outcome);
  Instance oriented_instance;
  oriented_instance.graph = oriented.oriented;
  oriented_instance.demand = instance.demand;
  oriented_instance.allowance = instance.allowance;
  oriented_instance.packing = instance.packing;

  result.report["verdict"] = "feasible";
  result.report["steps"] = steps_to_json(u, instance.graph, oriented.steps);
  result.report["oriented"] = instance_to_json(oriented_instance);
  result.report["debug_recheck"] = debug_recheck;
  result.report["caps"] = condition_caps();
  result.report["parallel"] = parallel;
  result.report["timing_ms"] = ms_since(start);
  result.artifact = instance_to_json(oriented_instance);
  result.exit_code = 0;
  return result;
}

CommandResult cmd_verify(const std::string& path, int parallel, int max_vertices) {
  const auto start = Clock::now();
  const Instance instance = load_instance(path);
  enforce_max_vertices(instance, max_vertices);
  const SetFunction& demand = require_demand(instance);
  const SetFunction& allowance = require_allowance(instance);

  OrientationResult as_result;
  as_result.oriented = instance.graph;
  const auto cert = verify_orientation(as_result, demand, allowance, parallel);

  CommandResult result;
  result.report["command"] = "verify";
  result.report["instance"] = path;
  result.report["verdict"] = cert ? "refuted" : "verified";
  if (cert) {
    result.report["certificate"] = certificate_to_json(instance.graph.universe, *cert);
  }
  result.report["caps"] = condition_caps();
  result.report["parallel"] = parallel;
  result.report["timing_ms"] = ms_since(start);
  result.exit_code = cert ? 1 : 0;
  return result;
}

CommandResult cmd_funcs(const std::string& path, int max_vertices) {
  const auto start = Clock::now();
  const Instance instance = load_instance(path);
  enforce_max_vertices(instance, max_vertices);
  const SetFunction& demand = require_demand(instance);
  const SetFunction& allowance = require_allowance(instance);
  const VertexUniverse& u = instance.graph.universe;

  const auto h_witness = is_intersecting_supermodular(demand, u);
  const auto b_witness = is_submodular(allowance, u);

  CommandResult result;
  result.report["command"] = "funcs";
  result.report["instance"] = path;
  result.report["verdict"] = (h_witness || b_witness) ? "refuted" : "verified";
  json h = json::object();
  h["property"] = "intersecting_supermodular";
  h["ok"] = !h_witness;
  if (h_witness) h["witness"] = modularity_witness_to_json(u, *h_witness);
  result.report["h"] = std::move(h);
  json b = json::object();
  b["property"] = "submodular";
  b["ok"] = !b_witness;
  if (b_witness) b["witness"] = modularity_witness_to_json(u, *b_witness);
  result.report["b"] = std::move(b);
  result.report["caps"] = verifier_caps();
  result.report["timing_ms"] = ms_since(start);
  result.exit_code = (h_witness || b_witness) ? 1 : 0;
  return result;
}

CommandResult cmd_uncross(const std::string& path, const std::string& p1_json,
                          const std::string& p2_json, int max_vertices) {
  const auto start = Clock::now();
  const Instance instance = load_instance(path);
  enforce_max_vertices(instance, max_vertices);
  const SetFunction& demand = require_demand(instance);
  const SetFunction& allowance = require_allowance(instance);
  const VertexUniverse& u = instance.graph.universe;

  const auto parse_subpartition = [&](const std::string& text, const char* name) {
    json j;
    try {
      j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string(name) + ": " + e.what());
    }
    return subpartition_from_json(u, j);
  };
  const Subpartition p1 = parse_subpartition(p1_json, "--p1");
  const Subpartition p2 = parse_subpartition(p2_json, "--p2");

  const UncrossResult uncrossed = uncross_pair(p1, p2);
  const UncrossReport checks =
      check_uncross_inequalities(p1, p2, uncrossed, instance.graph, demand, allowance);

  CommandResult result;
  result.report["command"] = "uncross";
  result.report["instance"] = path;
  result.report["verdict"] = checks.all_ok() ? "verified" : "refuted";
  result.report["p1"] = subpartition_to_json(u, p1);
  result.report["p2"] = subpartition_to_json(u, p2);
  result.report["p3"] = subpartition_to_json(u, uncrossed.p3);
  result.report["p4"] = subpartition_to_json(u, uncrossed.p4);
  json laminar = json::array();
  for (const VertexSet& s : uncrossed.laminar.sets) laminar.push_back(vertex_set_to_json(u, s));
  result.report["laminar"] = std::move(laminar);
  json c = json::object();
  json da = json::object();
  da["in"] = checks.demand_allowance_in;
  da["out"] = checks.demand_allowance_out;
  da["ok"] = checks.demand_allowance_ok;
  c["demand_allowance"] = std::move(da);
  c["hyper_containment_ok"] = checks.hyper_containment_ok;
  c["dyper_containment_ok"] = checks.dyper_containment_ok;
  json en = json::object();
  en["in"] = checks.entering_in;
  en["out"] = checks.entering_out;
  en["ok"] = checks.entering_ok;
  c["entering"] = std::move(en);
  result.report["checks"] = std::move(c);
  result.report["caps"] = condition_caps();
  result.report["timing_ms"] = ms_since(start);
  result.exit_code = checks.all_ok() ? 0 : 1;
  return result;
}

CommandResult cmd_pack_check(const std::string& path) {
  const auto start = Clock::now();
  const Instance instance = load_instance(path);
  const PackingInstance packing = to_packing_instance(instance);
  const auto witness = check_packing_conditions(packing);

  CommandResult result;
  result.report["command"] = "pack-check";
  result.report["instance"] = path;
  result.report["mode"] = packing_mode_name(packing.mode);
  result.report["verdict"] = witness ? "infeasible" : "feasible";
  if (witness) {
    result.report["witness"] =
        packing_condition_witness_to_json(instance.graph.universe, *witness);
  }
  result.report["caps"] = packing_caps();
  result.report["timing_ms"] = ms_since(start);
  result.exit_code = witness ? 1 : 0;
  return result;
}

CommandResult cmd_pack_search(const std::string& path) {
  const auto start = Clock::now();
  const Instance instance = load_instance(path);
  const PackingInstance packing = to_packing_instance(instance);
  const auto witness = exhaustive_packing_search(packing);
  if (witness && !validate_packing_witness(packing, *witness)) {
    throw ClosureError("packing search produced a witness that fails validation");
  }

  CommandResult result;
  result.report["command"] = "pack-search";
  result.report["instance"] = path;
  result.report["mode"] = packing_mode_name(packing.mode);
  result.report["verdict"] = witness ? "feasible" : "infeasible";
  if (witness) {
    result.report["witness"] = packing_witness_to_json(instance.graph.universe, *witness);
    result.report["witness_validated"] = true;
  }
  result.report["caps"] = packing_caps();
  result.report["timing_ms"] = ms_since(start);
  result.exit_code = witness ? 0 : 1;
  return result;
}

CommandResult cmd_gen(const GenArgs& args) {
  Instance instance;
  json generator = json::object();
  if (args.mode.empty()) {
    GenOptions opt;
    opt.seed = args.seed;
    opt.n = args.n;
    opt.hyperedges = args.hyperedges;
    opt.dyperedges = args.dyperedges;
    opt.h_family = args.h_family;
    opt.b_family = args.b_family;
    instance = generate_instance(opt);
    generator["kind"] = "condition";
    generator["n"] = args.n;
    generator["hyperedges"] = args.hyperedges;
    generator["dyperedges"] = args.dyperedges;
    generator["h_family"] = args.h_family;
    generator["b_family"] = args.b_family;
  } else {
    const auto mode = packing_mode_from_name(args.mode);
    if (!mode) throw ParseError("unknown packing mode \"" + args.mode + "\"");
    PackingGenOptions opt;
    opt.seed = args.seed;
    opt.n = args.n;
    opt.mode = *mode;
    opt.edges = args.edges;
    instance = generate_packing_instance(opt);
    generator["kind"] = "packing";
    generator["mode"] = args.mode;
    generator["n"] = args.n;
    generator["edges"] = args.edges;
  }

  // No timing in the output: the same seed must reproduce the same bytes.
  json file = instance_to_json(instance);
  json meta = json::object();
  meta["seed"] = args.seed;
  meta["generator"] = std::move(generator);
  file["meta"] = std::move(meta);

  CommandResult result;
  result.report = file;
  result.artifact = file;
  result.exit_code = 0;
  return result;
}

}  // namespace mho
