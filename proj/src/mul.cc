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
#include "upoly/mul.h"

#include <algorithm>
#include <cmath>

#include "upoly/error.h"
#include "upoly/modring.h"

namespace upoly {

namespace {

constexpr std::uint64_t kMaxLambdaP = (std::uint64_t{1} << 62) - 1;

// Sum of c alpha^(e mod p) over the terms of f, mod q.
BigInt sparse_eval(const SparsePoly& f, std::uint64_t p, const BigInt& alpha,
                   const BigInt& q) {
  BigInt acc = 0, c;
  for (const auto& t : f.terms()) {
    mod_into(c, t.coeff, q);
    const BigInt pw = pow_mod(alpha, t.exp % p, q);
    mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(), pw.get_mpz_t());
  }
  return mod_nonneg(acc, q);
}

}  // namespace

std::uint64_t prod_bitlen_bound(std::uint64_t ell) {
  if (ell < 2) throw InvalidBound("prod_bitlen_bound needs ell >= 2");
  const double l = static_cast<double>(ell);
  return 2 * ell + static_cast<std::uint64_t>(std::ceil(4.0 * l * l / std::log2(l)));
}

VerifParams verif_params(std::uint64_t s, std::uint64_t degree, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidInput("eps must lie in (0, 1)");
  VerifParams vp;
  vp.eps = eps;
  const double base = static_cast<double>(std::max(s, degree + 1));
  const double lp = std::ceil(3.0 / eps * base);
  vp.lambda_p = lp >= static_cast<double>(kMaxLambdaP)
                    ? kMaxLambdaP
                    : std::max<std::uint64_t>(2, static_cast<std::uint64_t>(lp));
  // lambda_q = ceil(3/eps * max(2 lambda_p, s)), computed exactly.
  const BigInt mx = std::max<BigInt>(2 * big_from_u64(vp.lambda_p), big_from_u64(s));
  mpq_class r(eps);
  r = 3 / r * mpq_class(mx);
  mpz_cdiv_q(vp.lambda_q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return vp;
}

VerifOutcome verif_prod_detailed(const SparsePoly& f, const SparsePoly& g,
                                 const SparsePoly& h, double eps, Rng& rng) {
  const std::uint64_t s = bitlen_poly(f) + bitlen_poly(g) + bitlen_poly(h);
  const std::uint64_t d = std::max(f.degree() + g.degree(), h.degree());
  const VerifParams vp = verif_params(s, d, eps);
  VerifOutcome out;
  out.p = random_prime(vp.lambda_p, rng);
  out.q = random_prime(vp.lambda_q, rng);
  out.alpha = rng.uniform_below(out.q);
  const BigInt fv = sparse_eval(f, out.p, out.alpha, out.q);
  const BigInt gv = sparse_eval(g, out.p, out.alpha, out.q);
  const BigInt hv = sparse_eval(h, out.p, out.alpha, out.q);
  BigInt delta = hv - fv * gv;
  out.accept = mod_nonneg(delta, out.q) == 0;
  return out;
}

bool verif_prod(const SparsePoly& f, const SparsePoly& g, const SparsePoly& h,
                double eps, Rng& rng) {
  return verif_prod_detailed(f, g, h, eps, rng).accept;
}

SparsePoly unbalanced_prod(const SparsePoly& f, const SparsePoly& g, Rng& rng,
                           const MulOptions& options, MulTrace* trace) {
  const std::uint64_t ell = std::max<std::uint64_t>({bitlen_poly(f), bitlen_poly(g), 2});
  const std::uint64_t s_max = prod_bitlen_bound(ell);
  const double eps = 1.0 / (static_cast<double>(s_max) * static_cast<double>(8 * ell + 4));
  const std::uint64_t degree = 2 * (std::max(f.degree(), g.degree()) + 1);
  if (trace) {
    trace->ell = ell;
    trace->s_max = s_max;
    trace->eps = eps;
  }

  Rng verif_rng = rng.fork("mul.verify");
  Rng interp_rng = rng.fork("mul.interp");
  const MdbbPtr pi = prod_mdbb(explicit_mdbb(f), explicit_mdbb(g));
  InterpOptions iopt;
  iopt.majority_reps = options.majority_reps;

  SparsePoly h;
  std::uint64_t s = ell;
  bool ok = false;
  while (s < 2 * s_max) {
    ok = verif_prod(f, g, h, eps, verif_rng);
    if (ok) break;
    LadderStep step;
    step.s = s;
    h = uinterpolate(pi, s, degree, interp_rng, iopt, trace ? &step.interp : nullptr);
    if (trace) {
      step.output_bitlen = bitlen_poly(h);
      step.output_zero = h.is_zero();
      trace->ladder.push_back(std::move(step));
    }
    s *= 2;
  }
  if (!ok && s >= 2 * s_max && options.fallback) ok = verif_prod(f, g, h, eps, verif_rng);
  if (trace) {
    trace->verified = ok;
    trace->calls = pi->stats().snapshot();
  }
  if (!ok && options.fallback) {
    if (trace) trace->fell_back = true;
    return schoolbook_mul(f, g);
  }
  return h;
}

}  // namespace upoly
