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
// upoly: command-line front end.
//
//   upoly mul F G [-o OUT] [--algo unbalanced|schoolbook|kronecker]
//   upoly interp SRC --s S --d D [-o OUT]
//   upoly verify F G H [--eps E]
//   upoly gen --profile P --s S --d D [-o OUT]
//   upoly bench --profile P --ladder 64,128,... [--d D] [--jobs N] [-o CSV]
//
// Exit codes: 0 success or accept, 1 reject, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "upoly/bench.h"
#include "upoly/blackbox.h"
#include "upoly/error.h"
#include "upoly/gen.h"
#include "upoly/interp.h"
#include "upoly/modring.h"
#include "upoly/mul.h"
#include "upoly/poly.h"
#include "upoly/slp.h"
#include "upoly/spoly_io.h"

namespace {

using json = nlohmann::json;
using upoly::BigInt;
using upoly::SparsePoly;

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> majority_reps;
  bool fallback = true;
  std::size_t dft_threshold = 0;  // 0 keeps the library default
  std::string stats_path;
};

json counts_json(const upoly::EvalCounts& c) {
  return {{"calls", c.calls}, {"sum_k", c.sum_k}, {"max_p", c.max_p}, {"max_logm", c.max_logm}};
}

json interp_json(const upoly::InterpTrace& t) {
  json slices = json::array();
  for (const auto& r : t.slices) {
    slices.push_back({{"height_bits", r.height_bits},
                      {"superset_size", r.superset_size},
                      {"max_p", r.max_p},
                      {"max_logm", r.max_logm},
                      {"terms_recovered", r.terms_recovered},
                      {"evals", counts_json(r.calls)}});
  }
  return {{"slices", slices},
          {"base",
           {{"height_bits", t.base_height_bits},
            {"runs", t.base_runs},
            {"failures", t.base_failures},
            {"majority_found", t.majority_found},
            {"evals", counts_json(t.base_calls)}}},
          {"size_guard_fired", t.size_guard_fired}};
}

void write_stats(const RunConfig& cfg, const json& stats) {
  if (cfg.stats_path.empty()) return;
  std::ofstream out(cfg.stats_path);
  if (!out) throw upoly::InvalidInput("cannot write " + cfg.stats_path);
  out << stats.dump(2) << '\n';
}

void emit_poly(const std::string& out_path, const SparsePoly& f) {
  if (out_path.empty()) {
    upoly::write_spoly(std::cout, f);
    return;
  }
  upoly::save_spoly(out_path, f);
  std::cout << out_path << '\n';
}

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string first_line(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw upoly::InvalidInput("cannot open " + path);
  std::string line;
  std::getline(in, line);
  return line;
}

int cmd_mul(const std::string& f_path, const std::string& g_path, const std::string& algo,
            const std::string& out_path, const RunConfig& cfg) {
  const SparsePoly f = upoly::load_spoly(f_path);
  const SparsePoly g = upoly::load_spoly(g_path);
  upoly::Rng rng = upoly::Rng(cfg.seed).fork("cli.mul");
  json stats = {{"command", "mul"}, {"algo", algo}, {"seed", cfg.seed}};
  const auto t0 = std::chrono::steady_clock::now();
  SparsePoly h;
  if (algo == "unbalanced") {
    upoly::MulOptions opt;
    opt.fallback = cfg.fallback;
    opt.majority_reps = cfg.majority_reps;
    upoly::MulTrace tr;
    h = upoly::unbalanced_prod(f, g, rng, opt, &tr);
    json ladder = json::array();
    for (const auto& step : tr.ladder) {
      ladder.push_back({{"s", step.s},
                        {"output_bitlen", step.output_bitlen},
                        {"interp", interp_json(step.interp)}});
    }
    stats["ell"] = tr.ell;
    stats["s_max"] = tr.s_max;
    stats["eps"] = tr.eps;
    stats["ladder"] = ladder;
    stats["verified"] = tr.verified;
    stats["fell_back"] = tr.fell_back;
    stats["evals"] = counts_json(tr.calls);
  } else if (algo == "schoolbook") {
    h = upoly::schoolbook_mul(f, g);
  } else {
    h = upoly::kronecker_mul(f, g);
  }
  stats["wall_ns"] = elapsed_ns(t0);
  stats["output_bitlen"] = upoly::bitlen_poly(h);
  emit_poly(out_path, h);
  write_stats(cfg, stats);
  return kOk;
}

int cmd_interp(const std::string& src, std::uint64_t s, std::uint64_t d,
               const std::string& out_path, const RunConfig& cfg) {
  if (s < 2) throw upoly::InvalidBound("--s must be at least 2");
  upoly::MdbbPtr pi;
  std::string kind;
  if (first_line(src).rfind("slp", 0) == 0) {
    kind = "slp";
    pi = upoly::mbb_to_mdbb(upoly::slp_mbb(upoly::Slp::load(src)));
  } else {
    kind = "spoly";
    pi = upoly::explicit_mdbb(upoly::load_spoly(src));
  }
  upoly::Rng rng = upoly::Rng(cfg.seed).fork("cli.interp");
  upoly::InterpOptions opt;
  opt.majority_reps = cfg.majority_reps;
  upoly::InterpTrace tr;
  const auto t0 = std::chrono::steady_clock::now();
  const SparsePoly f = upoly::uinterpolate(pi, s, d, rng, opt, &tr);
  json stats = interp_json(tr);
  stats["command"] = "interp";
  stats["source"] = kind;
  stats["seed"] = cfg.seed;
  stats["s"] = s;
  stats["D"] = d;
  stats["evals"] = counts_json(pi->stats().snapshot());
  stats["wall_ns"] = elapsed_ns(t0);
  stats["output_bitlen"] = upoly::bitlen_poly(f);
  stats["warning"] = !tr.majority_found || tr.size_guard_fired;
  emit_poly(out_path, f);
  write_stats(cfg, stats);
  return kOk;
}

int cmd_verify(const std::string& f_path, const std::string& g_path, const std::string& h_path,
               double eps, const RunConfig& cfg) {
  if (!(eps > 0.0 && eps < 1.0)) throw upoly::InvalidInput("--eps must lie in (0, 1)");
  const SparsePoly f = upoly::load_spoly(f_path);
  const SparsePoly g = upoly::load_spoly(g_path);
  const SparsePoly h = upoly::load_spoly(h_path);
  upoly::Rng rng = upoly::Rng(cfg.seed).fork("cli.verify");
  const upoly::VerifOutcome v = upoly::verif_prod_detailed(f, g, h, eps, rng);
  std::cout << (v.accept ? "accept" : "reject") << " p=" << v.p << " q=" << v.q
            << " alpha=" << v.alpha << '\n';
  write_stats(cfg, {{"command", "verify"},
                    {"seed", cfg.seed},
                    {"eps", eps},
                    {"accept", v.accept},
                    {"p", v.p},
                    {"q", v.q.get_str()},
                    {"alpha", v.alpha.get_str()}});
  return v.accept ? kOk : kReject;
}

int cmd_gen(const std::string& profile, std::uint64_t s, std::uint64_t d,
            const std::string& out_path, const RunConfig& cfg) {
  upoly::Rng rng = upoly::Rng(cfg.seed).fork("cli.gen");
  const SparsePoly f = upoly::generate({upoly::parse_gen_kind(profile), s, d}, rng);
  emit_poly(out_path, f);
  write_stats(cfg, {{"command", "gen"},
                    {"profile", profile},
                    {"seed", cfg.seed},
                    {"terms", f.num_terms()},
                    {"bitlen", upoly::bitlen_poly(f)},
                    {"degree", f.degree()}});
  return kOk;
}

int cmd_bench(const std::string& profile, const std::vector<std::uint64_t>& ladder,
              const std::vector<std::string>& algos, std::uint64_t d, unsigned jobs,
              const std::string& out_path, const RunConfig& cfg) {
  upoly::BenchConfig bc;
  bc.family = upoly::parse_gen_kind(profile);
  bc.ladder = ladder;
  bc.degree = d;
  bc.seed = cfg.seed;
  bc.majority_reps = cfg.majority_reps;
  if (!algos.empty()) bc.algos = algos;
  bc.jobs = jobs;
  const auto rows = upoly::run_bench(bc);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw upoly::InvalidInput("cannot write " + out_path);
  }
  std::ostream& os = out_path.empty() ? std::cout : file;
  upoly::write_bench_header(os);
  for (const auto& r : rows) upoly::write_bench_row(os, r);
  if (!out_path.empty()) std::cout << out_path << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"upoly: sparse polynomial interpolation and multiplication"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "global random seed");
  app.add_option("--stats", cfg.stats_path, "write a JSON stats object here");
  app.add_option("--dft-threshold", cfg.dft_threshold, "naive DFT below this length")
      ->check(CLI::PositiveNumber);

  std::string out_path, algo = "unbalanced", profile = "uniform";
  std::uint64_t s = 0, d = 0, bench_d = 1 << 20, reps = 0;
  double eps = 0.05;
  unsigned jobs = 1;
  std::vector<std::string> files, algos;
  std::vector<std::uint64_t> ladder;

  auto* mul = app.add_subcommand("mul", "multiply two spoly files");
  mul->add_option("f", files, "factor files")->expected(2)->required();
  mul->add_option("--algo", algo)->check(CLI::IsMember({"unbalanced", "schoolbook", "kronecker"}));
  mul->add_flag("--fallback,!--no-fallback", cfg.fallback, "schoolbook fallback after the ladder");
  mul->add_option("--majority-reps", reps)->check(CLI::PositiveNumber);
  mul->add_option("-o,--out", out_path);

  auto* interp = app.add_subcommand("interp", "interpolate the polynomial behind a spoly or slp file");
  interp->add_option("source", files)->expected(1)->required();
  interp->add_option("--s", s, "bit-length bound")->required();
  interp->add_option("--d", d, "degree bound")->required();
  interp->add_option("--majority-reps", reps)->check(CLI::PositiveNumber);
  interp->add_option("-o,--out", out_path);

  auto* verify = app.add_subcommand("verify", "check h == f g");
  verify->add_option("files", files)->expected(3)->required();
  verify->add_option("--eps", eps);

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--profile", profile)->check(CLI::IsMember({"uniform", "geometric", "extreme"}));
  gen->add_option("--s", s)->required()->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
  gen->add_option("--d", d)->required();
  gen->add_option("-o,--out", out_path);

  auto* bench = app.add_subcommand("bench", "run a benchmark ladder, CSV output");
  bench->add_option("--profile", profile)->check(CLI::IsMember({"uniform", "geometric", "extreme"}));
  bench->add_option("--ladder", ladder)->required()->delimiter(',');
  bench->add_option("--algo", algos)->delimiter(',')
      ->check(CLI::IsMember({"interp", "unbalanced", "kronecker", "schoolbook"}));
  bench->add_option("--d", bench_d);
  bench->add_option("--majority-reps", reps)->check(CLI::PositiveNumber);
  bench->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  bench->add_option("-o,--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (reps > 0) cfg.majority_reps = reps;
  if (cfg.dft_threshold > 0) upoly::set_dft_naive_threshold(cfg.dft_threshold);

  try {
    if (*mul) return cmd_mul(files[0], files[1], algo, out_path, cfg);
    if (*interp) return cmd_interp(files[0], s, d, out_path, cfg);
    if (*verify) return cmd_verify(files[0], files[1], files[2], eps, cfg);
    if (*gen) return cmd_gen(profile, s, d, out_path, cfg);
    if (*bench) return cmd_bench(profile, ladder, algos, bench_d, jobs, out_path, cfg);
  } catch (const upoly::Error& e) {
    std::cerr << "upoly: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "upoly: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
