// Benchmark comparing the OpenMP kernels against their serial reference
// implementations: product update pair filtering, edge-wise relation
// computation during induction, and axiom fuzzing.

#include <chrono>
#include <cstdio>

#include "attdel/attention.hpp"
#include "attdel/axioms.hpp"
#include "attdel/generators.hpp"
#include "attdel/parallel.hpp"
#include "attdel/semantics.hpp"
#include "attdel/syntactic.hpp"

using namespace attdel;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void report(const char* name, double serial_ms, double parallel_ms,
            bool equal) {
  std::printf("%-24s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n",
              name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              equal ? "results equal" : "RESULTS DIFFER");
}

void bench_product_update() {
  // A large random model and a propositional-attention event model.
  Rng rng = seeded_rng(7, 0);
  ModelBounds bounds;
  bounds.max_worlds = 220;
  bounds.max_atoms = 3;
  bounds.max_agents = 2;
  Signature sig({"a", "b"}, {"p", "q", "r"});
  PointedModel pm = random_model(rng, sig, bounds);
  LiteralConjunction phi = LiteralConjunction::top(sig)
                               .with(sig.atom_index("p"), true)
                               .with(sig.atom_index("q"), true)
                               .with(sig.atom_index("r"), false);
  // Make the announcement applicable at the point.
  AtomSet val = pm.model.valuation[pm.point];
  val.set(sig.atom_index("p"));
  val.set(sig.atom_index("q"));
  val.reset(sig.atom_index("r"));
  pm.model.valuation[pm.point] = val;
  MultiPointedEventModel me = propositional_attention_model(phi, sig);

  auto t0 = std::chrono::steady_clock::now();
  ProductResult serial = product_update_serial(pm, me);
  double serial_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  ProductResult parallel = product_update_traced(pm, me);
  double parallel_ms = ms_since(t0);

  report("product_update", serial_ms, parallel_ms,
         serial.pm.model == parallel.pm.model &&
             serial.pm.point == parallel.pm.point);
}

void bench_edgewise() {
  SpecInstance inst = subset_growth_spec(11);
  std::vector<LiteralConjunction> events =
      enumerate_events(inst.model.psi_E, inst.sig, 4000000);

  auto t0 = std::chrono::steady_clock::now();
  std::vector<AtomSet> serial =
      edgewise_relation(events, inst.model.psi_agents[0], inst.sig, false);
  double serial_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  std::vector<AtomSet> parallel =
      edgewise_relation(events, inst.model.psi_agents[0], inst.sig, true);
  double parallel_ms = ms_since(t0);

  report("edgewise_relation", serial_ms, parallel_ms, serial == parallel);
}

void bench_fuzz() {
  FuzzOptions options;
  options.trials = 400;
  options.seed = 11;

  options.parallel = false;
  auto t0 = std::chrono::steady_clock::now();
  FuzzReport serial = soundness_fuzz(options);
  double serial_ms = ms_since(t0);

  options.parallel = true;
  t0 = std::chrono::steady_clock::now();
  FuzzReport parallel = soundness_fuzz(options);
  double parallel_ms = ms_since(t0);

  report("soundness_fuzz", serial_ms, parallel_ms,
         serial.failures.size() == parallel.failures.size());
}

}  // namespace

int main() {
  std::printf("workers: %d\n", worker_count());
  bench_product_update();
  bench_edgewise();
  bench_fuzz();
  return 0;
}
