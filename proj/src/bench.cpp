#include "wk/bench.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "wk/rng.hpp"

namespace wk {

std::string bench_csv_header() {
  return "family,seed,n,eps,alpha_distribution,strategy,wall_ms,set_size,realized_additive_error";
}

std::string to_csv(const BenchRow& r) {
  std::ostringstream os;
  os << to_string(r.family) << "," << r.seed << "," << r.n << "," << r.eps << "," << r.alpha_distribution << ","
     << to_string(r.strategy) << ",";
  os.setf(std::ios::fixed);
  os.precision(3);
  os << r.wall_ms << "," << r.set_size << ",";
  if (r.realized_additive_error) {
    os.precision(6);
    os << *r.realized_additive_error;
  }
  return os.str();
}

double realized_additive_error(PointSpan set, const ParetoSet& front, i64 capacity, double eps) {
  auto target = window(front, capacity, std::numeric_limits<i64>::max());
  const i64 opt = target.empty() ? 0 : target.back().profit;
  const double wn = std::max(1.0, eps * (double)capacity), pn = std::max(1.0, eps * (double)opt);
  return min_additive_error(set, target, wn, pn);
}

std::string alpha_distribution(const WeakAudit& audit) {
  std::map<double, int> count;
  for (const auto& g : audit.groups) ++count[g.alpha];
  std::ostringstream os;
  bool first = true;
  for (auto [a, c] : count) {
    os << (first ? "" : ";") << a << "x" << c;
    first = false;
  }
  return os.str();
}

std::size_t run_bench(const BenchSpec& spec, const std::function<void(const BenchRow&)>& sink,
                      const std::atomic<bool>* stop) {
  struct Task {
    Family family;
    std::uint64_t seed;
    double eps;
    Strategy strategy;
  };
  std::vector<Task> tasks;
  const Rng root(spec.seed);
  for (auto fam : spec.families)
    for (int r = 0; r < spec.reps; ++r) {
      const std::uint64_t s = root.split((std::uint64_t)fam * 1000003 + (std::uint64_t)r).seed();
      for (double e : spec.eps)
        for (auto st : spec.strategies) tasks.push_back({fam, s, e, st});
    }

  std::mutex out_mu;
  std::atomic<std::size_t> next{0}, done{0};
  auto work = [&] {
    for (;;) {
      if (stop && stop->load()) return;
      const std::size_t k = next++;
      if (k >= tasks.size()) return;
      const Task& t = tasks[k];
      GeneratorSpec g;
      g.family = t.family;
      g.n = spec.n;
      g.seed = t.seed;
      g.lo = spec.lo;
      g.hi = spec.hi;
      g.eps = t.eps;
      Instance inst = generate(g).inst;
      const auto t0 = std::chrono::steady_clock::now();
      auto res = solve_weak(inst, make_rp_solver(t.strategy), t.seed);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      BenchRow row{t.family, t.seed, inst.items.size(), t.eps, alpha_distribution(res.audit), t.strategy, ms,
                   res.set.size(), std::nullopt};
      try {
        row.realized_additive_error = realized_additive_error(res.set, oracle_front(inst.items, spec.limits),
                                                              inst.capacity, t.eps);
      } catch (const OracleLimitError&) {
      }
      std::lock_guard<std::mutex> lock(out_mu);
      if (stop && stop->load()) return;
      sink(row);
      ++done;
    }
  };
  unsigned nw = spec.workers ? spec.workers : std::max(1u, std::thread::hardware_concurrency());
  nw = std::min<unsigned>(nw, (unsigned)std::max<std::size_t>(1, tasks.size()));
  if (nw <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nw; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return done.load();
}

}  // namespace wk
