#include "matchlab/trace.hpp"

#include <algorithm>
#include <functional>

#include "matchlab/error.hpp"
#include "matchlab/extremal.hpp"
#include "matchlab/matching.hpp"

namespace matchlab {

namespace {

void require_uniform(const Family& fam, int k) {
  if (!fam.empty() && fam.uniform_k() != k) throw PreconditionError("family not " + std::to_string(k) + "-uniform");
}

void require_standing(const Family& fam, int k, int s) {
  require_uniform(fam, k);
  if (!is_stable(fam).stable) throw PreconditionError("family not stable");
  if (max_matching(fam.members()) != s) throw PreconditionError("family matching number differs from s");
  if (!is_maximal(Family(fam.n(), fam.members(), k), s)) throw PreconditionError("family not maximal");
}

struct CoverKey {
  std::vector<int> sums;
  std::vector<VertexSet> blocks;
  friend auto operator<=>(const CoverKey&, const CoverKey&) = default;
};

}  // namespace

TraceFamily::TraceFamily(Family base, TraceOrigin origin) : base_(std::move(base)), origin_(origin) {
  if (base_.n() != ground()) throw Error("trace family ground set must be ks+k-1");
  for (VertexSet h : base_) {
    if (h.cardinality() < 1 || h.cardinality() > origin_.k) throw Error("trace member size out of range");
  }
}

TraceFamily trace(const Family& fam, int k, int s) {
  require_uniform(fam, k);
  int m = k * s + k - 1;
  if (k < 1 || s < 1 || fam.n() < m) throw Error("ground set smaller than ks+k-1");
  VertexSet head = VertexSet::interval(1, m);
  std::vector<VertexSet> members;
  members.reserve(fam.size());
  for (VertexSet f : fam) {
    VertexSet h = f & head;
    if (!h.empty()) members.push_back(h);
  }
  // An empty trace can only come from k-sets avoiding [m]; keep it out, the
  // objective counts it separately and no stable family with nu = s has one.
  return TraceFamily(Family::mixed(m, std::move(members)), {fam.n(), k, s});
}

std::int64_t size_formula(const TraceFamily& t) {
  const auto& o = t.origin();
  std::int64_t outside = o.n - t.ground();
  std::int64_t total = 0;
  for (VertexSet h : t.base()) total += binomial(outside, o.k - h.cardinality());
  return total;
}

Family expand(const TraceFamily& t) {
  const auto& o = t.origin();
  VertexSet head = VertexSet::interval(1, t.ground());
  std::vector<VertexSet> members;
  for_each_subset(VertexSet::interval(1, o.n), o.k, [&](VertexSet f) {
    VertexSet h = f & head;
    if (!h.empty() && t.contains(h)) members.push_back(f);
  });
  return Family(o.n, std::move(members), o.k);
}

BasePartition base_partition(const TraceFamily& t) {
  const int k = t.origin().k;
  const int s = t.origin().s;
  const int m = t.ground();
  std::vector<std::vector<VertexSet>> by_min(m + 1);
  for (VertexSet h : t.base()) {
    if (h.cardinality() == k) by_min[h.min_element()].push_back(h);
  }
  VertexSet full = VertexSet::interval(1, m);

  std::vector<VertexSet> chosen;
  // Returns true to stop the enumeration.
  std::function<bool(VertexSet, const std::function<bool()>&)> cover = [&](VertexSet left,
                                                                           const std::function<bool()>& leaf) {
    if (left.empty()) return leaf();
    int v = left.min_element();
    for (VertexSet e : by_min[v]) {
      if (!e.subset_of(left)) continue;
      chosen.push_back(e);
      bool stop = cover(left - e, leaf);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  };

  std::optional<VertexSet> D;
  for_each_subset(full, k - 1, [&](VertexSet cand) {
    if (D) return;
    if (cover(full - cand, [] { return true; })) D = cand;
  });
  if (!D) throw Error("family not partitionable");

  std::optional<CoverKey> best;
  cover(full - *D, [&] {
    CoverKey key{std::vector<int>(k, 0), chosen};
    for (VertexSet b : chosen) {
      for (int q = 1; q <= k; ++q) key.sums[q - 1] += b.nth(q);
    }
    // chosen is generated in order of least element already.
    if (!best || key < *best) best = std::move(key);
    return false;
  });
  (void)s;
  return BasePartition{*D, best->blocks};
}

BasePartition base_partition(const Family& fam, int k, int s) { return base_partition(trace(fam, k, s)); }

std::optional<Rational> weight(const TraceOrigin& o, int size, int width) {
  std::int64_t den = binomial(o.s - width, o.k - width);
  if (den == 0) return std::nullopt;
  std::int64_t outside = o.n - (o.k * o.s + o.k - 1);
  return Rational(binomial(outside, o.k - size), den);
}

bool Restriction::contains(VertexSet h) const {
  return std::any_of(members.begin(), members.end(), [h](const RestrictionMember& m) { return m.set == h; });
}

Rational Restriction::total_weight() const {
  Rational total = 0;
  for (const auto& m : members) {
    if (!m.weight) throw Error("weight undefined for s < k");
    total += *m.weight;
  }
  return total;
}

Restriction restriction(const TraceFamily& t, const BasePartition& bp, std::vector<int> R, bool with_weights) {
  std::sort(R.begin(), R.end());
  if (std::adjacent_find(R.begin(), R.end()) != R.end()) throw Error("restriction indices repeat");
  for (int r : R) {
    if (r < 1 || r > bp.s()) throw Error("restriction index out of range");
  }
  if (with_weights && static_cast<int>(R.size()) > t.origin().k) throw Error("weights need |R| ≤ k");
  Restriction out;
  out.R = R;
  out.X = bp.D;
  for (int r : R) out.X = out.X | bp.block(r);
  for (VertexSet h : t.base()) {
    if (!h.subset_of(out.X)) continue;
    RestrictionMember m{h, 0, std::nullopt};
    for (int r : R) m.width += h.intersects(bp.block(r)) ? 1 : 0;
    if (with_weights) m.weight = weight(t.origin(), h.cardinality(), m.width);
    out.members.push_back(m);
  }
  return out;
}

CountingLemmaReport counting_lemma_check(const Family& fam, int k, int s) {
  if (s < k) throw Error("lemma requires s ≥ k");
  require_standing(fam, k, s);
  TraceFamily t = trace(fam, k, s);
  BasePartition bp = base_partition(t);
  CountingLemmaReport rep{fam.n(), k, s, static_cast<std::int64_t>(fam.size()), 0, false};
  for (VertexSet r : subsets_of_size(VertexSet::interval(1, s), k)) {
    rep.rhs += restriction(t, bp, r.elements()).total_weight();
  }
  rep.equal = rep.rhs == Rational(rep.lhs);
  return rep;
}

Rational f_value_at(int ell, int n, int k, int s, const std::vector<int>& R) {
  if (s < k) throw Error("lemma requires s ≥ k");
  if (static_cast<int>(R.size()) != k) throw Error("R must have k indices");
  Family a = build_A({n, k, s, ell});
  TraceFamily t = trace(a, k, s);
  return restriction(t, base_partition(t), R).total_weight();
}

Rational f_value(int ell, int n, int k, int s) {
  std::vector<int> R(k);
  for (int i = 0; i < k; ++i) R[i] = i + 1;
  return f_value_at(ell, n, k, s, R);
}

WeightBoundReport weight_bound_check(const Family& fam, int k, int s, const std::vector<int>& R,
                                     bool check_avoid_one) {
  if (s < k) throw Error("lemma requires s ≥ k");
  if (static_cast<int>(R.size()) != k) throw Error("R must have k indices");
  require_uniform(fam, k);
  if (!is_stable(fam).stable) throw PreconditionError("family not stable");
  if (max_matching(fam.members()) != s) throw PreconditionError("family matching number differs from s");
  if (check_avoid_one && max_matching(fam.avoiding(1).members()) != s) {
    throw PreconditionError("matching number of the family avoiding vertex 1 differs from s");
  }
  TraceFamily t = trace(fam, k, s);
  WeightBoundReport rep;
  rep.n = fam.n();
  rep.k = k;
  rep.s = s;
  rep.R = R;
  std::sort(rep.R.begin(), rep.R.end());
  rep.value = restriction(t, base_partition(t), rep.R).total_weight();
  for (int ell = 1; ell <= k; ++ell) {
    Rational f = f_value(ell, fam.n(), k, s);
    if (ell == 1 || f > rep.bound) {
      rep.bound = f;
      rep.best_ell = ell;
    }
  }
  rep.holds = rep.value <= rep.bound;
  return rep;
}

std::vector<PropertyCheck> check_trace_properties(const Family& fam, int k, int s) {
  require_uniform(fam, k);
  std::vector<PropertyCheck> out;
  const bool stable = is_stable(fam).stable;
  const bool nu_ok = max_matching(fam.members()) == s;
  const bool maximal = nu_ok && is_maximal(Family(fam.n(), fam.members(), k), s);
  const bool standing = stable && nu_ok && maximal;
  const bool avoid_one = max_matching(fam.avoiding(1).members()) == s;
  const int m = k * s + k - 1;
  const int outside = fam.n() - m;

  TraceFamily t = trace(fam, k, s);
  auto add = [&](std::string name, bool applicable, bool holds, std::string detail = {}) {
    out.push_back({std::move(name), applicable, applicable ? holds : true, std::move(detail)});
  };

  add("trace_matching_number", standing, max_matching(t.base().members()) == s);
  add("size_formula", maximal, size_formula(t) == static_cast<std::int64_t>(fam.size()));

  std::optional<BasePartition> bp;
  try {
    bp = base_partition(t);
  } catch (const Error& e) {
    add("partitionable", nu_ok, false, e.what());
    return out;
  }
  add("partition_set_absent", standing, !t.contains(bp->D), bp->D.to_string());

  {
    bool ok = true;
    std::string detail;
    for (int ell = 1; ell < k && ok; ++ell) {
      // Traces of size ell exist only if k-ell vertices fit outside [m].
      if (outside < k - ell) continue;
      VertexSet prefix;
      for (int q = 1; q <= ell; ++q) prefix = prefix.with(bp->d(q));
      for_each_subset(VertexSet::interval(1, m), ell, [&](VertexSet e) {
        if (ok && e < prefix && !t.contains(e)) {
          ok = false;
          detail = e.to_string();
        }
      });
    }
    add("prefix_predecessors", standing, ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= s; ++i) {
      int h = k;
      for (int ell = 1; ell < k; ++ell) {
        if (bp->a(ell, i) < bp->d(ell)) {
          h = ell;
          break;
        }
      }
      VertexSet cand = VertexSet{bp->a(h, i)};
      for (int q = 1; q < k; ++q) cand = cand.with(bp->d(q));
      if (!fam.contains(cand)) {
        ok = false;
        detail = cand.to_string();
      }
    }
    add("partition_swap_member", standing, ok, detail);
  }

  {
    bool ok = true;
    for (int u = 1; u <= s; ++u) {
      for (int v = 1; v <= s; ++v) {
        if (u != v && bp->a(1, u) >= bp->a(k, v)) ok = false;
      }
    }
    add("blocks_interleave", standing, ok);
  }

  {
    bool ok = true;
    std::string detail;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
      std::vector<int> R = VertexSet::from_bits(mask).elements();
      Restriction r = restriction(t, *bp, R, false);
      std::vector<VertexSet> sets;
      for (const auto& mem : r.members) sets.push_back(mem.set);
      if (max_matching(sets) != static_cast<int>(R.size())) {
        ok = false;
        detail = VertexSet::from_bits(mask).to_string();
      }
    }
    add("restriction_matching", standing, ok, detail);
  }

  {
    bool applicable = standing && k == 3 && bp->d(1) == 1;
    bool ok = true;
    if (applicable) {
      for (int i = 1; i <= s; ++i) {
        if (!t.contains(VertexSet{1, bp->d(2), bp->a(2, i)})) ok = false;
      }
    }
    add("one_d_b_member", applicable, ok);
  }

  {
    bool ok = bp->d(1) == 1;
    for (VertexSet h : t.base()) ok = ok && h.cardinality() >= 2;
    add("avoid_one_consequences", standing && avoid_one, ok);
  }
  return out;
}

}  // namespace matchlab
