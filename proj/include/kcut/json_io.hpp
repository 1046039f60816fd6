#pragma once

#include <json.hpp>

#include "kcut/bounds.hpp"
#include "kcut/extremal.hpp"
#include "kcut/gen_connectivity.hpp"
#include "kcut/graph.hpp"
#include "kcut/greedy.hpp"
#include "kcut/partition.hpp"
#include "kcut/solver.hpp"
#include "kcut/verify.hpp"

namespace kcut {

using Json = nlohmann::ordered_json;

Json json_of(const Graph& g);
Json json_of(const Edge& e);
Json json_of(const Partition& p);
Json json_of(const CutCertificate& c);
Json json_of(const SolveResult& r);
Json json_of(const GreedyTrace& t);
Json json_of(const KappaResult& r);
Json json_of(const SteinerPackResult& r);
Json json_of(const BoundsReport& r);
Json json_of(const ExtremalTable& t);
Json json_of(const SuiteResult& s);

} // namespace kcut
