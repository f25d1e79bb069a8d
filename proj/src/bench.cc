// Copyright 2026 The upoly Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "upoly/bench.h"

#include <atomic>
#include <chrono>
#include <thread>

#include "upoly/blackbox.h"
#include "upoly/error.h"
#include "upoly/interp.h"
#include "upoly/mul.h"

namespace upoly {

BenchRow run_bench_row(const BenchConfig& cfg, std::uint64_t s, const std::string& algo) {
  BenchRow row;
  row.s = s;
  row.algo = algo;
  row.degree = cfg.degree;
  Rng base = Rng(cfg.seed).fork("bench", s);
  Rng gen_rng = base.fork("gen");
  Rng run_rng = base.fork("run." + algo);
  using Clock = std::chrono::steady_clock;

  if (algo == "interp") {
    const SparsePoly f = generate({cfg.family, s, cfg.degree}, gen_rng);
    const MdbbPtr pi = explicit_mdbb(f);
    InterpOptions opt;
    opt.majority_reps = cfg.majority_reps;
    const auto t0 = Clock::now();
    const SparsePoly got = uinterpolate(pi, s, cfg.degree, run_rng, opt);
    row.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
    const EvalCounts c = pi->stats().snapshot();
    row.mdbb_calls = c.calls;
    row.sum_k = c.sum_k;
    row.max_p = c.max_p;
    row.max_logm = c.max_logm;
    row.output_bitlen = bitlen_poly(got);
    return row;
  }

  const std::uint64_t half = std::max<std::uint64_t>(s / 2, 2);
  const SparsePoly f = generate({cfg.family, half, cfg.degree}, gen_rng);
  const SparsePoly g = generate({cfg.family, half, cfg.degree}, gen_rng);
  SparsePoly h;
  const auto t0 = Clock::now();
  if (algo == "unbalanced") {
    MulOptions opt;
    opt.majority_reps = cfg.majority_reps;
    MulTrace tr;
    h = unbalanced_prod(f, g, run_rng, opt, &tr);
    row.mdbb_calls = tr.calls.calls;
    row.sum_k = tr.calls.sum_k;
    row.max_p = tr.calls.max_p;
    row.max_logm = tr.calls.max_logm;
  } else if (algo == "kronecker") {
    h = kronecker_mul(f, g);
  } else if (algo == "schoolbook") {
    h = schoolbook_mul(f, g);
  } else {
    throw InvalidInput("unknown bench algo: " + algo);
  }
  row.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
  row.output_bitlen = bitlen_poly(h);
  return row;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  for (std::size_t i = 1; i < cfg.ladder.size(); ++i) {
    if (cfg.ladder[i] <= cfg.ladder[i - 1]) throw InvalidInput("bench ladder must increase");
  }
  std::vector<std::pair<std::uint64_t, std::string>> jobs;
  for (auto s : cfg.ladder) {
    for (const auto& a : cfg.algos) jobs.emplace_back(s, a);
  }
  std::vector<BenchRow> rows(jobs.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.jobs, jobs.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      rows[i] = run_bench_row(cfg, jobs[i].first, jobs[i].second);
    }
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < jobs.size();) {
        try {
          rows[i] = run_bench_row(cfg, jobs[i].first, jobs[i].second);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_bench_header(std::ostream& os) {
  os << "s,algo,D,wall_ns,mdbb_calls,sum_k,max_p,max_logm,output_bitlen\n";
}

void write_bench_row(std::ostream& os, const BenchRow& r) {
  os << r.s << ',' << r.algo << ',' << r.degree << ',' << r.wall_ns << ',' << r.mdbb_calls << ','
     << r.sum_k << ',' << r.max_p << ',' << r.max_logm << ',' << r.output_bitlen << '\n';
}

}  // namespace upoly
