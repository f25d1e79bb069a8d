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
#ifndef UPOLY_BLACKBOX_H_
#define UPOLY_BLACKBOX_H_

#include <atomic>
#include <cstdint>
#include <memory>

#include "upoly/bigint.h"
#include "upoly/modring.h"
#include "upoly/poly.h"

namespace upoly {

// Plain snapshot of EvalStats.
struct EvalCounts {
  std::uint64_t calls = 0;
  std::uint64_t sum_k = 0;
  std::uint64_t max_p = 0;
  std::uint64_t max_logm = 0;  // max ceil(log2 m)

  friend bool operator==(const EvalCounts&, const EvalCounts&) = default;
};

// Per-black-box counters. Increments are atomic so concurrent evals keep the
// totals right; they do not order anything else.
class EvalStats {
 public:
  void record(std::uint64_t p, std::uint64_t k, const BigInt& m);
  EvalCounts snapshot() const;
  void reset();

 private:
  std::atomic<std::uint64_t> calls_{0};
  std::atomic<std::uint64_t> sum_k_{0};
  std::atomic<std::uint64_t> max_p_{0};
  std::atomic<std::uint64_t> max_logm_{0};
};

// Modular black box: eval(a, m) = f(a) mod m for 0 <= a < m.
class Mbb {
 public:
  virtual ~Mbb() = default;

  BigInt eval(const BigInt& a, const BigInt& m) const;
  const EvalStats& stats() const { return stats_; }
  EvalStats& stats() { return stats_; }

 protected:
  virtual BigInt do_eval(const BigInt& a, const BigInt& m) const = 0;

 private:
  mutable EvalStats stats_;
};

using MbbPtr = std::shared_ptr<const Mbb>;

struct MdbbValues {
  ResidueVec alphas;  // f(omega^i) mod m, i < k
  ResidueVec gammas;  // (x f')(omega^i) mod m, i < k
};

// Multi-point modular derivative black box. One eval is one call, whatever k
// is; stats record it once with its k.
struct ImagePair {
  ResidueVec value;       // f mod <x^p - 1, m>
  ResidueVec derivative;  // x f' mod <x^p - 1, m>
};

class Mdbb {
 public:
  virtual ~Mdbb() = default;

  // ctx.omega must be a ctx.p-th primitive root of unity mod ctx.m, k <= p.
  MdbbValues eval(const PruContext& ctx, std::size_t k) const;
  // The two modular images, counted as one call with k = p.
  ImagePair image(const PruContext& ctx) const;
  const EvalStats& stats() const { return stats_; }
  EvalStats& stats() { return stats_; }

 protected:
  virtual MdbbValues do_eval(const PruContext& ctx, std::size_t k) const = 0;
  // Defaults to p evaluations followed by two inverse transforms.
  virtual ImagePair do_image(const PruContext& ctx) const;

 private:
  mutable EvalStats stats_;
};

using MdbbPtr = std::shared_ptr<const Mdbb>;

// Evaluates a known polynomial term by term with modular exponentiation.
MbbPtr explicit_mbb(SparsePoly f);

// Derivative images from an MBB through (1 + m)^e = 1 + e m (mod m^2): each
// point costs two MBB queries modulo m^2. Throws ContractViolation when the
// two answers are not congruent modulo m.
MdbbPtr mbb_to_mdbb(MbbPtr pi);

// Reduces f and x f' modulo <x^p - 1, m>, then evaluates either densely
// (one length-p transform each) or term by term, whichever is cheaper.
MdbbPtr explicit_mdbb(SparsePoly f);

MdbbPtr sum_mdbb(MdbbPtr a, MdbbPtr b);
// Product rule: x (fg)' = (x f') g + (x g') f.
MdbbPtr prod_mdbb(MdbbPtr a, MdbbPtr b);

// f and x f' modulo <x^p - 1, m> as dense residue vectors of length p;
// equivalent to pi.image(ctx).
ImagePair mdbb_image(const Mdbb& pi, const PruContext& ctx);

// Dense path is taken when #residues * k > factor * p. Default 4.
std::size_t explicit_dense_factor();
void set_explicit_dense_factor(std::size_t factor);

}  // namespace upoly

#endif  // UPOLY_BLACKBOX_H_
