#pragma once

// JSON wire formats: instance files (graph + set functions + optional
// packing block), reports, and the encodings of the pieces they are built
// from. Files speak vertex labels; everything internal speaks indices.
// Emission uses a fixed field order so golden files stay byte-stable, and
// parse(emit(x)) == x for every in-memory value x.

#include <optional>
#include <string>

#include <json.hpp>

#include "mho/matroid.hpp"
#include "mho/model.hpp"
#include "mho/packing.hpp"
#include "mho/setfunc.hpp"

namespace mho {

using json = nlohmann::ordered_json;

// The optional packing block of an instance file. Only the fields the mode
// uses are meaningful; the others keep their defaults.
struct PackingSetup {
  PackingMode mode = PackingMode::edmonds;
  long long k = 0;
  std::vector<long long> f;
  std::vector<long long> g;
  RootPlacement roots;
  MatroidSpec matroid;

  bool operator==(const PackingSetup&) const = default;
};

struct Instance {
  MixedHypergraph graph;
  std::optional<SetFunction> demand;     // wire key "h"
  std::optional<SetFunction> allowance;  // wire key "b"
  std::optional<PackingSetup> packing;

  bool operator==(const Instance&) const = default;
};

// Throws DomainError when the instance has no packing block.
PackingInstance to_packing_instance(const Instance& instance);

// ---- piecewise encodings ----

json vertex_set_to_json(const VertexUniverse& u, VertexSet x);
VertexSet vertex_set_from_json(const VertexUniverse& u, const json& j);

json subpartition_to_json(const VertexUniverse& u, const Subpartition& p);
Subpartition subpartition_from_json(const VertexUniverse& u, const json& j);

json set_function_to_json(const VertexUniverse& u, const SetFunction& f);
SetFunction set_function_from_json(const VertexUniverse& u, const json& j);

json matroid_to_json(const MatroidSpec& m);
MatroidSpec matroid_from_json(const json& j, int ground_size);

json instance_to_json(const Instance& instance);
Instance instance_from_json(const json& j);

// ---- files ----

// Reads and parses an instance file; all failures surface as ParseError.
Instance load_instance(const std::string& path);

// Serializes with two-space indentation and writes atomically (temp file
// in the same directory, then rename).
void save_json(const json& j, const std::string& path);

}  // namespace mho
