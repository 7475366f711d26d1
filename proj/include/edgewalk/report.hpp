#pragma once

#include <json.hpp>

#include "edgewalk/bench.hpp"
#include "edgewalk/coloring.hpp"
#include "edgewalk/oracle.hpp"
#include "edgewalk/types.hpp"
#include "edgewalk/walk.hpp"

namespace edgewalk {

// JSON report schemas. nlohmann::json objects keep keys sorted, and doubles
// serialize with shortest round-trip form, so a fixed seed yields
// byte-identical reports.

// {"max_abs": float, "per_constraint": [float], "bound": float|null,
//  "satisfied": bool}
nlohmann::json to_json(const DiscrepancyReport& rep);

// Walk outcome for the `partial` command and bench internals.
nlohmann::json to_json(const WalkOutcome& out, std::uint64_t seed,
                       int attempts, bool include_x = true);

// {"chi": [int], "discrepancy": float, "bound": float,
//  "rounds": [{"n_r": int, "alpha": float, "retries_used": int}],
//  "seed": int, ...}
nlohmann::json to_json(const PipelineResult& res);

nlohmann::json to_json(const VerifyReport& rep);

nlohmann::json bench_json(const BenchStats& st, int n, int m,
                          std::uint64_t seed);

}  // namespace edgewalk
