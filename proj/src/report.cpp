#include "edgewalk/report.hpp"

namespace edgewalk {

using nlohmann::json;

json to_json(const DiscrepancyReport& rep) {
  json j;
  j["max_abs"] = rep.max_abs;
  j["per_constraint"] = rep.per_constraint;
  j["bound"] = rep.bound ? json(*rep.bound) : json(nullptr);
  j["satisfied"] = rep.satisfied;
  return j;
}

json to_json(const WalkOutcome& out, std::uint64_t seed, int attempts,
             bool include_x) {
  json j;
  j["success"] = out.success;
  j["contained"] = out.contained;
  j["n_active_vars"] = out.n_active_vars;
  j["n_active_disc"] = out.n_active_disc;
  j["steps"] = out.steps;
  j["norm_sq"] = out.norm_sq;
  j["seed"] = seed;
  j["attempts"] = attempts;
  if (include_x) j["x"] = out.x.x;
  return j;
}

json to_json(const PipelineResult& res) {
  json j;
  j["chi"] = res.chi.chi;
  j["discrepancy"] = res.report.max_abs;
  j["bound"] = res.bound;
  json rounds = json::array();
  for (const auto& r : res.rounds) {
    json jr;
    jr["n_r"] = r.n_r;
    jr["alpha"] = r.alpha;
    jr["retries_used"] = r.retries_used;
    rounds.push_back(jr);
  }
  j["rounds"] = rounds;
  j["seed"] = res.seed;
  j["satisfied"] = res.report.satisfied;
  j["feasibility_sum"] = res.feasibility_sum;
  return j;
}

json to_json(const VerifyReport& rep) {
  json j;
  j["ok"] = rep.ok;
  j["cond_threshold"] = rep.cond_threshold;
  j["cond_near"] = rep.cond_near;
  j["n_near"] = rep.n_near;
  j["violating_rows"] = rep.violating_rows;
  return j;
}

json bench_json(const BenchStats& st, int n, int m, std::uint64_t seed) {
  json j;
  j["runs"] = st.runs;
  j["n"] = n;
  j["m"] = m;
  j["seed"] = seed;
  j["successes"] = st.successes;
  j["success_rate"] = st.success_rate;
  j["contained_clean"] = st.contained_clean;
  j["contained_clean_fraction"] = double(st.contained_clean) / st.runs;
  j["mean_active_vars"] = st.mean_active_vars;
  j["mean_active_disc"] = st.mean_active_disc;
  j["mean_norm_sq"] = st.mean_norm_sq;
  j["verifier_disagreements"] = st.verifier_disagreements;
  auto quantiles = [](const std::vector<double>& v) {
    json q;
    q["q0"] = quantile(v, 0.0);
    q["q25"] = quantile(v, 0.25);
    q["q50"] = quantile(v, 0.5);
    q["q75"] = quantile(v, 0.75);
    q["q100"] = quantile(v, 1.0);
    return q;
  };
  j["disc_quantiles"] = quantiles(st.disc_rounded);
  j["baseline_quantiles"] = quantiles(st.disc_baseline);
  return j;
}

}  // namespace edgewalk
