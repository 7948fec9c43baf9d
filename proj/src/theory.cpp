#include "rmatch/theory.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

namespace rmatch {

// ---------------------------------------------------------------------------
// Minors
// ---------------------------------------------------------------------------

MinorSystem::MinorSystem(std::shared_ptr<const IndependenceSystem> base,
                         const MinorSpec& spec)
    : base_(std::move(base)) {
  const int n = base_->ground_size();
  alive_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) alive_[static_cast<size_t>(i)] = i;
  truncation_ = n;

  for (const MinorOp& op : spec) {
    switch (op.kind) {
      case MinorOp::Kind::truncation: {
        if (op.k < 0) throw std::invalid_argument("negative truncation");
        truncation_ = std::min(truncation_, op.k);
        break;
      }
      case MinorOp::Kind::deletion:
      case MinorOp::Kind::contraction: {
        if (!is_canonical_set(op.elems) ||
            (!op.elems.empty() &&
             (op.elems.front() < 0 ||
              op.elems.back() >= static_cast<int>(alive_.size()))))
          throw std::invalid_argument("minor operation ids out of range");
        if (op.kind == MinorOp::Kind::contraction &&
            !is_independent(op.elems))
          throw std::invalid_argument("contracting a dependent set");
        ElemSet base_ids;
        for (int e : op.elems)
          base_ids.push_back(alive_[static_cast<size_t>(e)]);
        std::vector<int> next;
        for (std::size_t i = 0; i < alive_.size(); ++i)
          if (!set_contains(op.elems, static_cast<int>(i)))
            next.push_back(alive_[i]);
        alive_ = std::move(next);
        if (op.kind == MinorOp::Kind::contraction) {
          contracted_ = set_union(contracted_, canonical_set(base_ids));
          truncation_ -= static_cast<int>(base_ids.size());
          if (truncation_ < 0) truncation_ = 0;
        }
        break;
      }
    }
  }
}

bool MinorSystem::is_independent(std::span<const int> elems) const {
  if (static_cast<int>(elems.size()) > truncation_) return false;
  std::vector<int> base_ids(contracted_.begin(), contracted_.end());
  for (int e : elems) base_ids.push_back(alive_[static_cast<size_t>(e)]);
  return base_->is_independent(canonical_set(std::move(base_ids)));
}

std::shared_ptr<const IndependenceSystem> apply_minor(
    std::shared_ptr<const IndependenceSystem> base, const MinorSpec& spec) {
  return std::make_shared<MinorSystem>(std::move(base), spec);
}

// ---------------------------------------------------------------------------
// Mask table: all independent sets of a small system as bitmasks, with O(1)
// membership. Every checker below works on this representation.
// ---------------------------------------------------------------------------

namespace {

struct MaskTable {
  int n = 0;
  std::vector<std::uint32_t> masks;  // ascending
  std::vector<bool> member;          // indexed by mask

  static MaskTable build(const IndependenceSystem& sys, int cap) {
    if (sys.ground_size() > cap)
      throw ResourceLimitError("ground size " +
                               std::to_string(sys.ground_size()) +
                               " exceeds enumeration cap " +
                               std::to_string(cap));
    MaskTable t;
    t.n = sys.ground_size();
    t.member.assign(std::size_t(1) << t.n, false);
    ElemSet current;
    build_rec(sys, current, 0, 0, t);
    std::sort(t.masks.begin(), t.masks.end());
    return t;
  }

  int max_size() const {
    int r = 0;
    for (std::uint32_t m : masks) r = std::max(r, std::popcount(m));
    return r;
  }

 private:
  static void build_rec(const IndependenceSystem& sys, ElemSet& current,
                        std::uint32_t mask, int next, MaskTable& t) {
    t.masks.push_back(mask);
    t.member[mask] = true;
    for (int e = next; e < sys.ground_size(); ++e) {
      current.push_back(e);
      if (sys.is_independent(current))
        build_rec(sys, current, mask | (std::uint32_t(1) << e), e + 1, t);
      current.pop_back();
    }
  }
};

// Integer profile of a mask table under uint64 weights. Values fit: the
// checkers shift bit-function exponents to at most ~2|E|+12 bits and sum at
// most |E| <= 20 terms.
std::vector<std::uint64_t> mask_profile(const MaskTable& t,
                                        std::span<const std::uint64_t> w) {
  const int r = t.max_size();
  std::vector<std::uint64_t> best(static_cast<size_t>(r) + 1, 0);
  for (std::uint32_t m : t.masks) {
    std::uint64_t total = 0;
    for (std::uint32_t bits = m; bits != 0; bits &= bits - 1)
      total += w[static_cast<size_t>(std::countr_zero(bits))];
    auto& slot = best[static_cast<size_t>(std::popcount(m))];
    slot = std::max(slot, total);
  }
  for (std::size_t k = 1; k < best.size(); ++k)
    best[k] = std::max(best[k], best[k - 1]);
  return best;
}

std::vector<std::uint64_t> shifted_weights(const BitFunction& w) {
  if (w.exponents.empty()) return {};
  const int lo = *std::min_element(w.exponents.begin(), w.exponents.end());
  const int hi = *std::max_element(w.exponents.begin(), w.exponents.end());
  if (hi - lo > 56)
    throw std::invalid_argument("bit-function exponent span too wide");
  std::vector<std::uint64_t> out;
  out.reserve(w.exponents.size());
  for (int e : w.exponents)
    out.push_back(std::uint64_t(1) << (e - lo));
  return out;
}

// Ranks ascending from 1; equal weights share a rank.
std::vector<int> weight_ranks(std::span<const std::uint64_t> w) {
  std::vector<std::uint64_t> distinct(w.begin(), w.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::vector<int> ranks;
  ranks.reserve(w.size());
  for (std::uint64_t x : w)
    ranks.push_back(static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), x) -
        distinct.begin() + 1));
  return ranks;
}

// Count-per-rank key, highest rank first. Comparing these keys
// lexicographically is the decreasing-weight-sequence order (a longer set
// wins on a shared prefix).
std::vector<int> lex_key(std::uint32_t mask, std::span<const int> ranks,
                         int rank_count) {
  std::vector<int> key(static_cast<size_t>(rank_count), 0);
  for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
    const int e = std::countr_zero(bits);
    ++key[static_cast<size_t>(rank_count - ranks[static_cast<size_t>(e)])];
  }
  return key;
}

std::vector<std::uint32_t> lex_max_masks(const MaskTable& t,
                                         std::span<const std::uint64_t> w) {
  const std::vector<int> ranks = weight_ranks(w);
  const int rank_count =
      ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
  std::vector<std::uint32_t> best_masks;
  std::vector<int> best_key;
  for (std::uint32_t m : t.masks) {
    std::vector<int> key = lex_key(m, ranks, rank_count);
    if (best_masks.empty() || key > best_key) {
      best_key = std::move(key);
      best_masks = {m};
    } else if (key == best_key) {
      best_masks.push_back(m);
    }
  }
  return best_masks;
}

std::optional<int> concavity_violation(std::span<const std::uint64_t> opt) {
  for (std::size_t k = 0; k + 2 < opt.size(); ++k)
    if (opt[k] + opt[k + 2] > 2 * opt[k + 1]) return static_cast<int>(k);
  return std::nullopt;
}

std::optional<GoodnessWitness> goodness_violation(
    const MaskTable& t, std::span<const std::uint64_t> w,
    const BitFunction& bits) {
  const std::vector<std::uint64_t> opt = mask_profile(t, w);
  for (std::uint32_t m : lex_max_masks(t, w)) {
    std::vector<std::uint64_t> weights;
    for (std::uint32_t b = m; b != 0; b &= b - 1)
      weights.push_back(w[static_cast<size_t>(std::countr_zero(b))]);
    std::sort(weights.rbegin(), weights.rend());
    std::uint64_t prefix = 0;
    for (std::size_t k = 1; k < opt.size(); ++k) {
      if (k <= weights.size()) prefix += weights[k - 1];
      if (prefix != opt[k]) {
        GoodnessWitness witness;
        witness.w = bits;
        witness.set = mask_to_set(m);
        witness.k = static_cast<int>(k);
        return witness;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<BitFunction> sample_bit_functions(int ground,
                                              const BitSampler& sampler) {
  std::mt19937_64 rng(sampler.seed);
  const int span = sampler.exponent_hi - sampler.exponent_lo + 1;
  const int extreme = ground + 2;
  std::vector<BitFunction> out;
  out.reserve(static_cast<size_t>(sampler.samples));
  for (int s = 0; s < sampler.samples; ++s) {
    BitFunction f;
    f.exponents.resize(static_cast<size_t>(ground));
    const bool inject_extremes = s % 10 == 9;
    for (int e = 0; e < ground; ++e) {
      int exp = sampler.exponent_lo + static_cast<int>(rng() % span);
      if (inject_extremes && rng() % 3 == 0)
        exp = rng() % 2 == 0 ? extreme : -extreme;
      f.exponents[static_cast<size_t>(e)] = exp;
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<int> bit_concavity_violation(const IndependenceSystem& sys,
                                           const BitFunction& w, int cap) {
  if (static_cast<int>(w.exponents.size()) != sys.ground_size())
    throw std::invalid_argument("bit-function size mismatch");
  const MaskTable t = MaskTable::build(sys, cap);
  return concavity_violation(mask_profile(t, shifted_weights(w)));
}

std::optional<GoodnessWitness> check_good(const IndependenceSystem& sys,
                                          const BitFunction& w, int cap) {
  if (static_cast<int>(w.exponents.size()) != sys.ground_size())
    throw std::invalid_argument("bit-function size mismatch");
  const MaskTable t = MaskTable::build(sys, cap);
  return goodness_violation(t, shifted_weights(w), w);
}

std::optional<BitConcavityWitness> check_bit_concave(
    const IndependenceSystem& sys, const BitSampler& sampler,
    const std::vector<BitFunction>& extra, int cap) {
  const MaskTable t = MaskTable::build(sys, cap);
  auto probe = [&](const BitFunction& f) -> std::optional<BitConcavityWitness> {
    if (auto k = concavity_violation(mask_profile(t, shifted_weights(f))))
      return BitConcavityWitness{f, *k};
    return std::nullopt;
  };
  for (const BitFunction& f : extra)
    if (auto w = probe(f)) return w;
  for (const BitFunction& f : sample_bit_functions(sys.ground_size(), sampler))
    if (auto w = probe(f)) return w;
  return std::nullopt;
}

std::optional<GoodnessWitness> check_good_sampled(
    const IndependenceSystem& sys, const BitSampler& sampler,
    const std::vector<BitFunction>& extra, int cap) {
  const MaskTable t = MaskTable::build(sys, cap);
  for (const BitFunction& f : extra)
    if (auto w = goodness_violation(t, shifted_weights(f), f)) return w;
  for (const BitFunction& f : sample_bit_functions(sys.ground_size(), sampler))
    if (auto w = goodness_violation(t, shifted_weights(f), f)) return w;
  return std::nullopt;
}

std::optional<TwoExtendibilityWitness> check_2_extendible(
    const IndependenceSystem& sys, int cap) {
  const MaskTable t = MaskTable::build(sys, cap);
  const int n = t.n;
  for (std::uint32_t x : t.masks) {
    for (int y = 0; y < n; ++y) {
      const std::uint32_t ybit = std::uint32_t(1) << y;
      if ((x & ybit) != 0 || !t.member[ybit]) continue;
      const std::uint32_t xy = x | ybit;
      if (t.member[xy]) continue;  // Z = {} repairs every Y

      // All repairs Z subsets of X with |Z| <= 2.
      std::vector<std::uint32_t> repairs;
      for (std::uint32_t a = x; a != 0; a &= a - 1) {
        const std::uint32_t abit = a & ~(a - 1);
        if (t.member[xy & ~abit]) repairs.push_back(abit);
        for (std::uint32_t b = (a & (a - 1)); b != 0; b &= b - 1) {
          const std::uint32_t bbit = b & ~(b - 1);
          if (t.member[xy & ~(abit | bbit)]) repairs.push_back(abit | bbit);
        }
      }
      if (repairs.empty())
        return TwoExtendibilityWitness{mask_to_set(x), mask_to_set(ybit), y};

      for (std::uint32_t yset : t.masks) {
        if ((yset & ybit) == 0) continue;
        bool repaired = false;
        for (std::uint32_t z : repairs) {
          if ((z & yset) == 0) {
            repaired = true;
            break;
          }
        }
        if (!repaired)
          return TwoExtendibilityWitness{mask_to_set(x), mask_to_set(yset), y};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cross-check of the equivalent characterizations
// ---------------------------------------------------------------------------

namespace {

MinorSpec random_minor_spec(std::mt19937_64& rng,
                            std::shared_ptr<const IndependenceSystem> sys,
                            int depth) {
  MinorSpec spec;
  std::shared_ptr<const IndependenceSystem> probe = sys;
  for (int d = 0; d < depth; ++d) {
    const int n = probe->ground_size();
    if (n == 0) break;
    const int kind = static_cast<int>(rng() % 3);
    if (kind == 0) {
      spec.push_back(MinorOp::deletion({static_cast<int>(rng() % n)}));
    } else if (kind == 1) {
      const ElemSet x{static_cast<int>(rng() % n)};
      spec.push_back(probe->is_independent(x) ? MinorOp::contraction(x)
                                              : MinorOp::deletion(x));
    } else {
      spec.push_back(MinorOp::truncation(static_cast<int>(rng() % (n + 1))));
    }
    probe = apply_minor(sys, spec);
  }
  return spec;
}

}  // namespace

EquivalenceReport check_equivalences(std::shared_ptr<const IndependenceSystem> sys,
                                int minor_depth, const BitSampler& sampler,
                                const std::vector<BitFunction>& extra,
                                int cap) {
  EquivalenceReport report;

  // Shared sample pool; witnesses found by one predicate are re-probed by
  // the others so that sampling noise cannot split the verdicts.
  std::vector<BitFunction> pool = extra;
  for (BitFunction& f :
       sample_bit_functions(sys->ground_size(), sampler))
    pool.push_back(std::move(f));

  report.concavity_witness = check_bit_concave(*sys, sampler, pool, cap);
  report.bit_concave = !report.concavity_witness;
  report.goodness_witness = check_good_sampled(*sys, sampler, pool, cap);
  report.good = !report.goodness_witness;
  // Cross-probe found witnesses: a concavity violation at w forces a
  // goodness violation at the same w and vice versa is re-checked, so the
  // sampled verdicts cannot drift apart on the probed functions.
  if (report.goodness_witness) pool.push_back(report.goodness_witness->w);
  if (report.concavity_witness) pool.push_back(report.concavity_witness->w);
  if (report.goodness_witness && report.bit_concave) {
    BitSampler none = sampler;
    none.samples = 0;
    if (auto w = check_bit_concave(*sys, none,
                                   {report.goodness_witness->w}, cap)) {
      report.concavity_witness = w;
      report.bit_concave = false;
    }
  }
  if (report.concavity_witness && report.good) {
    if (auto w = check_good(*sys, report.concavity_witness->w, cap)) {
      report.goodness_witness = w;
      report.good = false;
    }
  }

  // Minors: the identity minor first, then random ones. A goodness witness
  // (A, k) at w forces a lex-vs-weight failure in the k-truncation at w, so
  // that truncation is injected as well.
  std::mt19937_64 rng(sampler.seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<MinorSpec> specs{{}};
  if (report.goodness_witness)
    specs.push_back({MinorOp::truncation(report.goodness_witness->k)});
  const int minor_count = 12;
  for (int i = 0; i < minor_count; ++i)
    specs.push_back(random_minor_spec(rng, sys, minor_depth));

  report.minors_bit_concave = true;
  report.lex_optimal_in_minors = true;
  BitSampler minor_sampler = sampler;
  minor_sampler.samples = std::max(10, sampler.samples / 4);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto minor = apply_minor(sys, specs[i]);
    if (minor->ground_size() == 0) continue;
    minor_sampler.seed = sampler.seed + 17 * (i + 1);

    // Restrict pooled bit-functions to the minor's alive elements.
    const auto& alive =
        static_cast<const MinorSystem&>(*minor).alive();
    std::vector<BitFunction> minor_pool;
    for (const BitFunction& f : pool) {
      BitFunction g;
      for (int base_id : alive)
        g.exponents.push_back(f.exponents[static_cast<size_t>(base_id)]);
      minor_pool.push_back(std::move(g));
    }

    if (check_bit_concave(*minor, minor_sampler, minor_pool, cap))
      report.minors_bit_concave = false;

    // (iii): every lexicographically maximal set must be weight-maximal.
    // Only bit-functions are probed: for general weights the property fails
    // even on concave systems (a path with weights (2,3,2) has lex maximum
    // {middle} but weight maximum {outer pair}).
    const MaskTable t = MaskTable::build(*minor, cap);
    auto lex_all_optimal = [&](std::span<const std::uint64_t> w) {
      std::uint64_t best = 0;
      for (std::uint32_t m : t.masks) {
        std::uint64_t total = 0;
        for (std::uint32_t b = m; b != 0; b &= b - 1)
          total += w[static_cast<size_t>(std::countr_zero(b))];
        best = std::max(best, total);
      }
      for (std::uint32_t m : lex_max_masks(t, w)) {
        std::uint64_t total = 0;
        for (std::uint32_t b = m; b != 0; b &= b - 1)
          total += w[static_cast<size_t>(std::countr_zero(b))];
        if (total != best) return false;
      }
      return true;
    };
    for (const BitFunction& f : minor_pool)
      if (!lex_all_optimal(shifted_weights(f)))
        report.lex_optimal_in_minors = false;
    for (const BitFunction& f :
         sample_bit_functions(minor->ground_size(), minor_sampler))
      if (!lex_all_optimal(shifted_weights(f)))
        report.lex_optimal_in_minors = false;
  }
  return report;
}

}  // namespace rmatch
