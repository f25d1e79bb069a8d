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
#include "upoly/blackbox.h"

#include <algorithm>
#include <utility>

#include "upoly/error.h"

namespace upoly {

namespace {

void atomic_max(std::atomic<std::uint64_t>& slot, std::uint64_t v) {
  std::uint64_t cur = slot.load(std::memory_order_relaxed);
  while (cur < v && !slot.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

std::atomic<std::size_t> g_dense_factor{4};

// x * y mod <z^p - 1, m> for residue vectors of length p.
ResidueVec cyclic_mul(const ResidueVec& x, const ResidueVec& y, const BigInt& m) {
  const std::size_t p = x.size();
  std::vector<std::size_t> nx, ny;
  for (std::size_t i = 0; i < p; ++i) {
    if (sgn(x[i]) != 0) nx.push_back(i);
    if (sgn(y[i]) != 0) ny.push_back(i);
  }
  ResidueVec out(p);
  if (nx.empty() || ny.empty()) return out;
  if (nx.size() * ny.size() <= 4 * p) {
    for (std::size_t i : nx) {
      for (std::size_t j : ny) {
        const std::size_t r = i + j >= p ? i + j - p : i + j;
        mpz_addmul(out[r].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
      }
    }
    for (auto& v : out) mod_into(v, v, m);
    return out;
  }
  // Linear product by one packed multiplication, then fold.
  const std::uint64_t width = 2 * bit_size(m) + bit_size(big_from_u64(p)) + 1;
  BigInt prod = pack_fields(x, width) * pack_fields(y, width);
  std::vector<BigInt> lin = unpack_fields(prod, width, 2 * p - 1);
  for (std::size_t i = 0; i < p; ++i) {
    if (i + p < lin.size()) lin[i] += lin[i + p];
    mod_into(out[i], lin[i], m);
  }
  return out;
}

class PolyMbb final : public Mbb {
 public:
  explicit PolyMbb(SparsePoly f) : f_(std::move(f)) {}

 protected:
  BigInt do_eval(const BigInt& a, const BigInt& m) const override {
    BigInt acc = 0;
    BigInt c;
    for (const auto& t : f_.terms()) {
      mod_into(c, t.coeff, m);
      mul_mod_into(c, c, pow_mod(a, t.exp, m), m);
      add_mod_into(acc, acc, c, m);
    }
    return acc;
  }

 private:
  SparsePoly f_;
};

class MbbToMdbb final : public Mdbb {
 public:
  explicit MbbToMdbb(MbbPtr pi) : pi_(std::move(pi)) {}

 protected:
  MdbbValues do_eval(const PruContext& ctx, std::size_t k) const override {
    const BigInt& m = ctx.m;
    const BigInt m2 = m * m;
    const BigInt one_plus_m = 1 + m;
    MdbbValues out{ResidueVec(k), ResidueVec(k)};
    BigInt w = 1 % m;  // omega^i mod m, advanced incrementally
    BigInt shifted, diff, rem;
    for (std::size_t i = 0; i < k; ++i) {
      const BigInt alpha = pi_->eval(w, m2);
      mul_mod_into(shifted, one_plus_m, w, m2);
      const BigInt beta = pi_->eval(shifted, m2);
      diff = beta - alpha;
      mpz_tdiv_qr(diff.get_mpz_t(), rem.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
      if (sgn(rem) != 0) {
        throw ContractViolation("MBB answers at a and (1+m)a differ by a non-multiple of m");
      }
      mod_into(out.alphas[i], alpha, m);
      mod_into(out.gammas[i], diff, m);
      mul_mod_into(w, w, ctx.omega, m);
    }
    return out;
  }

 private:
  MbbPtr pi_;
};

class ExplicitMdbb final : public Mdbb {
 public:
  explicit ExplicitMdbb(SparsePoly f) : f_(std::move(f)) {}

 protected:
  MdbbValues do_eval(const PruContext& ctx, std::size_t k) const override {
    MdbbValues out;
    if (f_.is_zero()) {
      out.alphas.assign(k, BigInt(0));
      out.gammas.assign(k, BigInt(0));
      return out;
    }
    const std::uint64_t p = ctx.p;
    std::vector<ResidueTerm> value_terms, deriv_terms;
    residues(ctx, value_terms, deriv_terms);
    const std::size_t nnz = value_terms.size();
    if (nnz * k > explicit_dense_factor() * p) {
      ResidueVec dv(p), dd(p);
      for (std::size_t i = 0; i < nnz; ++i) {
        dv[value_terms[i].exp] = value_terms[i].coeff;
        dd[deriv_terms[i].exp] = deriv_terms[i].coeff;
      }
      out.alphas = dft(dv, ctx);
      out.gammas = dft(dd, ctx);
      out.alphas.resize(k);
      out.gammas.resize(k);
    } else {
      out.alphas = geometric_eval(value_terms, ctx, k);
      out.gammas = geometric_eval(deriv_terms, ctx, k);
    }
    return out;
  }

  ImagePair do_image(const PruContext& ctx) const override {
    ImagePair out{ResidueVec(ctx.p), ResidueVec(ctx.p)};
    std::vector<ResidueTerm> value_terms, deriv_terms;
    residues(ctx, value_terms, deriv_terms);
    for (std::size_t i = 0; i < value_terms.size(); ++i) {
      out.value[value_terms[i].exp] = value_terms[i].coeff;
      out.derivative[deriv_terms[i].exp] = deriv_terms[i].coeff;
    }
    return out;
  }

 private:
  // Terms of f and x f' with exponents reduced mod p (sorted, merged) and
  // coefficients reduced mod m.
  void residues(const PruContext& ctx, std::vector<ResidueTerm>& value_terms,
                std::vector<ResidueTerm>& deriv_terms) const {
    const std::uint64_t p = ctx.p;
    const BigInt& m = ctx.m;
    std::vector<std::pair<std::uint64_t, std::size_t>> order;
    order.reserve(f_.num_terms());
    for (std::size_t i = 0; i < f_.num_terms(); ++i) order.emplace_back(f_.terms()[i].exp % p, i);
    std::sort(order.begin(), order.end());
    BigInt c, d, e_mod;
    for (const auto& [r, idx] : order) {
      const Term& t = f_.terms()[idx];
      mod_into(c, t.coeff, m);
      mod_into(e_mod, big_from_u64(t.exp), m);
      mul_mod_into(d, c, e_mod, m);
      if (value_terms.empty() || value_terms.back().exp != r) {
        value_terms.push_back({r, c});
        deriv_terms.push_back({r, d});
      } else {
        add_mod_into(value_terms.back().coeff, value_terms.back().coeff, c, m);
        add_mod_into(deriv_terms.back().coeff, deriv_terms.back().coeff, d, m);
      }
    }
  }

 private:
  SparsePoly f_;
};

class SumMdbb final : public Mdbb {
 public:
  SumMdbb(MdbbPtr a, MdbbPtr b) : a_(std::move(a)), b_(std::move(b)) {}

 protected:
  MdbbValues do_eval(const PruContext& ctx, std::size_t k) const override {
    MdbbValues x = a_->eval(ctx, k);
    const MdbbValues y = b_->eval(ctx, k);
    for (std::size_t i = 0; i < k; ++i) {
      add_mod_into(x.alphas[i], x.alphas[i], y.alphas[i], ctx.m);
      add_mod_into(x.gammas[i], x.gammas[i], y.gammas[i], ctx.m);
    }
    return x;
  }

  ImagePair do_image(const PruContext& ctx) const override {
    ImagePair x = a_->image(ctx);
    const ImagePair y = b_->image(ctx);
    for (std::size_t i = 0; i < ctx.p; ++i) {
      add_mod_into(x.value[i], x.value[i], y.value[i], ctx.m);
      add_mod_into(x.derivative[i], x.derivative[i], y.derivative[i], ctx.m);
    }
    return x;
  }

 private:
  MdbbPtr a_, b_;
};

class ProdMdbb final : public Mdbb {
 public:
  ProdMdbb(MdbbPtr a, MdbbPtr b) : a_(std::move(a)), b_(std::move(b)) {}

 protected:
  MdbbValues do_eval(const PruContext& ctx, std::size_t k) const override {
    const MdbbValues x = a_->eval(ctx, k);
    const MdbbValues y = b_->eval(ctx, k);
    MdbbValues out{ResidueVec(k), ResidueVec(k)};
    BigInt t;
    for (std::size_t i = 0; i < k; ++i) {
      mul_mod_into(out.alphas[i], x.alphas[i], y.alphas[i], ctx.m);
      mul_mod_into(out.gammas[i], x.gammas[i], y.alphas[i], ctx.m);
      mul_mod_into(t, y.gammas[i], x.alphas[i], ctx.m);
      add_mod_into(out.gammas[i], out.gammas[i], t, ctx.m);
    }
    return out;
  }

  ImagePair do_image(const PruContext& ctx) const override {
    const ImagePair x = a_->image(ctx);
    const ImagePair y = b_->image(ctx);
    ImagePair out{cyclic_mul(x.value, y.value, ctx.m), cyclic_mul(x.derivative, y.value, ctx.m)};
    const ResidueVec t = cyclic_mul(x.value, y.derivative, ctx.m);
    for (std::size_t i = 0; i < ctx.p; ++i) add_mod_into(out.derivative[i], out.derivative[i], t[i], ctx.m);
    return out;
  }

 private:
  MdbbPtr a_, b_;
};

}  // namespace

void EvalStats::record(std::uint64_t p, std::uint64_t k, const BigInt& m) {
  calls_.fetch_add(1, std::memory_order_relaxed);
  sum_k_.fetch_add(k, std::memory_order_relaxed);
  atomic_max(max_p_, p);
  atomic_max(max_logm_, sgn(m) > 0 ? bit_size(m - 1) : 0);
}

EvalCounts EvalStats::snapshot() const {
  return {calls_.load(), sum_k_.load(), max_p_.load(), max_logm_.load()};
}

void EvalStats::reset() {
  calls_ = 0;
  sum_k_ = 0;
  max_p_ = 0;
  max_logm_ = 0;
}

BigInt Mbb::eval(const BigInt& a, const BigInt& m) const {
  if (sgn(m) <= 0) throw InvalidModulus("MBB modulus must be positive");
  stats_.record(0, 1, m);
  return do_eval(a, m);
}

MdbbValues Mdbb::eval(const PruContext& ctx, std::size_t k) const {
  if (k > ctx.p) throw InvalidInput("MDBB eval needs k <= p");
  stats_.record(ctx.p, k, ctx.m);
  return do_eval(ctx, k);
}

MbbPtr explicit_mbb(SparsePoly f) { return std::make_shared<PolyMbb>(std::move(f)); }

MdbbPtr mbb_to_mdbb(MbbPtr pi) { return std::make_shared<MbbToMdbb>(std::move(pi)); }

MdbbPtr explicit_mdbb(SparsePoly f) { return std::make_shared<ExplicitMdbb>(std::move(f)); }

MdbbPtr sum_mdbb(MdbbPtr a, MdbbPtr b) {
  return std::make_shared<SumMdbb>(std::move(a), std::move(b));
}

MdbbPtr prod_mdbb(MdbbPtr a, MdbbPtr b) {
  return std::make_shared<ProdMdbb>(std::move(a), std::move(b));
}

ImagePair Mdbb::image(const PruContext& ctx) const {
  stats_.record(ctx.p, ctx.p, ctx.m);
  return do_image(ctx);
}

ImagePair Mdbb::do_image(const PruContext& ctx) const {
  const MdbbValues v = do_eval(ctx, ctx.p);
  return {idft(v.alphas, ctx), idft(v.gammas, ctx)};
}

ImagePair mdbb_image(const Mdbb& pi, const PruContext& ctx) { return pi.image(ctx); }

std::size_t explicit_dense_factor() { return g_dense_factor.load(); }

void set_explicit_dense_factor(std::size_t factor) { g_dense_factor.store(factor); }

}  // namespace upoly
