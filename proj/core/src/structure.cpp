#include "matchlab/structure.hpp"

#include <algorithm>
#include <functional>

#include "matchlab/error.hpp"
#include "matchlab/matching.hpp"

namespace matchlab {

namespace {

void require_k3_d1(const TraceFamily& t, const BasePartition& bp) {
  if (t.origin().k != 3) throw PreconditionError("structure analysis needs k = 3");
  if (bp.d(1) != 1) throw PreconditionError("structure analysis needs d_1 = 1");
}

void require_side_conditions(const TraceFamily& t, const BasePartition& bp, int i) {
  int a = bp.a(1, i), b = bp.a(2, i), c = bp.a(3, i);
  if (t.contains({a, c}) || t.contains({b, c}) || (t.contains({a, b}) && t.contains({1, c}))) {
    throw PreconditionError("single-block side conditions fail at block " + std::to_string(i));
  }
}

std::vector<int> checked_R(const BasePartition& bp, std::vector<int> R, std::size_t k) {
  std::sort(R.begin(), R.end());
  if (R.size() != k || std::adjacent_find(R.begin(), R.end()) != R.end()) throw Error("R must have k distinct indices");
  for (int r : R) {
    if (r < 1 || r > bp.s()) throw Error("restriction index out of range");
  }
  return R;
}

// Can `target` be split into members of `pool` (all of one size)?
bool splits(VertexSet target, const std::vector<VertexSet>& pool) {
  if (target.empty()) return true;
  int v = target.min_element();
  for (VertexSet e : pool) {
    if (e.contains(v) && e.subset_of(target) && splits(target - e, pool)) return true;
  }
  return false;
}

std::vector<VertexSet> members_of_size(const Restriction& r, int size) {
  std::vector<VertexSet> out;
  for (const auto& m : r.members) {
    if (m.set.cardinality() == size) out.push_back(m.set);
  }
  return out;
}

int width(VertexSet h, const BasePartition& bp, const std::vector<int>& R) {
  int w = 0;
  for (int r : R) w += h.intersects(bp.block(r)) ? 1 : 0;
  return w;
}

}  // namespace

std::string to_string(PairCase c) {
  switch (c) {
    case PairCase::Small: return "SMALL";
    case PairCase::CaseI: return "CASE_I";
    case PairCase::CaseII: return "CASE_II";
    case PairCase::CaseIII: return "CASE_III";
    case PairCase::Unmatched: return "UNMATCHED";
  }
  return "?";
}

PairProfile classify_pair(const TraceFamily& t, const BasePartition& bp, int u, int v) {
  require_k3_d1(t, bp);
  if (u > v) std::swap(u, v);
  std::vector<int> R = checked_R(bp, {u, v}, 2);
  require_side_conditions(t, bp, u);
  require_side_conditions(t, bp, v);
  PairProfile p{u, v, {}, PairCase::Small};
  Restriction r = restriction(t, bp, R, false);
  for (const auto& m : r.members) {
    if (m.set.cardinality() == 2 && m.width == 2) p.g2_members.push_back(m.set);
  }
  if (p.g2_members.size() < 3) return p;
  int ai = bp.a(1, u), bi = bp.a(2, u), aj = bp.a(1, v), bj = bp.a(2, v), cj = bp.a(3, v);
  auto as_family = [](std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end());
    return sets;
  };
  const auto got = as_family(p.g2_members);
  if (got == as_family({{ai, aj}, {ai, bj}, {bi, aj}, {bi, bj}})) {
    p.pair_case = PairCase::CaseI;
  } else if (got == as_family({{ai, aj}, {ai, bj}, {bi, aj}})) {
    p.pair_case = PairCase::CaseII;
  } else if (got == as_family({{ai, aj}, {ai, bj}, {ai, cj}})) {
    p.pair_case = PairCase::CaseIII;
  } else {
    p.pair_case = PairCase::Unmatched;
  }
  return p;
}

std::vector<VertexSet> transversals(const BasePartition& bp, const std::vector<int>& Rin) {
  if (bp.blocks.empty()) throw Error("empty partition");
  std::vector<int> R = checked_R(bp, Rin, bp.block(1).cardinality());
  std::vector<VertexSet> out{VertexSet{}};
  for (int r : R) {
    std::vector<VertexSet> next;
    for (VertexSet partial : out) {
      for (int x : bp.block(r).elements()) next.push_back(partial.with(x));
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Position (1-based) of x inside its block among R, or 0.
int position_in_block(const BasePartition& bp, int r, int x) {
  auto elems = bp.block(r).elements();
  auto it = std::find(elems.begin(), elems.end(), x);
  return it == elems.end() ? 0 : static_cast<int>(it - elems.begin()) + 1;
}

std::vector<int> positions(const BasePartition& bp, const std::vector<int>& R, VertexSet t) {
  std::vector<int> pos;
  for (int r : R) {
    VertexSet hit = t & bp.block(r);
    pos.push_back(hit.cardinality() == 1 ? position_in_block(bp, r, hit.min_element()) : 0);
  }
  return pos;
}

}  // namespace

std::vector<VertexSet> diagonals(const BasePartition& bp, const std::vector<int>& R) {
  std::vector<VertexSet> out;
  for (VertexSet t : transversals(bp, R)) {
    auto pos = positions(bp, R, t);
    std::sort(pos.begin(), pos.end());
    if (std::adjacent_find(pos.begin(), pos.end()) == pos.end()) out.push_back(t);
  }
  return out;
}

int blockwise_dominating_count(const BasePartition& bp, const std::vector<int>& R, VertexSet diagonal) {
  auto dpos = positions(bp, R, diagonal);
  int count = 0;
  for (VertexSet t : transversals(bp, R)) {
    auto tpos = positions(bp, R, t);
    bool ok = true;
    for (std::size_t i = 0; i < R.size(); ++i) ok = ok && tpos[i] >= dpos[i];
    count += ok ? 1 : 0;
  }
  return count;
}

int dominating_transversal_count(const BasePartition& bp, const std::vector<int>& R, VertexSet diagonal) {
  int count = 0;
  for (VertexSet t : transversals(bp, R)) count += dominates(diagonal, t) ? 1 : 0;
  return count;
}

std::vector<std::vector<VertexSet>> robust_witnesses(const TraceFamily& t, const BasePartition& bp,
                                                     const std::vector<int>& R) {
  const int k = t.origin().k;
  Restriction r = restriction(t, bp, R, false);
  // Only sets inside the block union: the claims built on robustness adjoin
  // vertex 1 and d_2 to the witnesses.
  VertexSet blocks;
  for (int i : R) blocks = blocks | bp.block(i);
  std::vector<VertexSet> pool;
  for (VertexSet h : members_of_size(r, k - 1)) {
    if (h.subset_of(blocks)) pool.push_back(h);
  }
  std::vector<std::vector<VertexSet>> out;
  std::vector<VertexSet> cur;
  std::function<void(std::size_t, VertexSet)> go = [&](std::size_t from, VertexSet used) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].intersects(used)) continue;
      cur.push_back(pool[i]);
      go(i + 1, used | pool[i]);
      cur.pop_back();
    }
  };
  go(0, {});
  return out;
}

TripleProfile triple_profile(const TraceFamily& t, const BasePartition& bp, const std::vector<int>& Rin) {
  if (t.origin().k != 3) throw PreconditionError("structure analysis needs k = 3");
  const int k = 3;
  std::vector<int> R = checked_R(bp, Rin, k);
  TripleProfile p;
  p.R = R;
  for (int q = 1; q <= k; ++q) {
    VertexSet col;
    for (int r : R) col = col.with(bp.a(q, r));
    p.columns.push_back(col);
  }
  p.normal = true;
  for (int q = 1; q < k; ++q) p.normal = p.normal && p.columns[q - 1].max_element() < p.columns[q].min_element();

  Restriction res = restriction(t, bp, R, false);
  std::vector<VertexSet> triples = members_of_size(res, k);
  std::vector<VertexSet> trans;
  for (VertexSet h : triples) {
    if (width(h, bp, R) == k) trans.push_back(h);
  }
  p.fat = splits(p.columns[1] | p.columns[2], triples);
  p.slightly_fat = splits(p.columns[0] | p.columns[2], trans);

  auto witnesses = robust_witnesses(t, bp, R);
  p.robust = !witnesses.empty();
  if (p.robust) p.robust_witness = witnesses.front();

  for (const auto& m : res.members) {
    if (m.set.cardinality() != 2) continue;
    int w = width(m.set, bp, R);
    p.g2 += w == 2 ? 1 : 0;
    p.g1 += w == 1 ? 1 : 0;
  }
  for (int x = 0; x < k; ++x) {
    for (int y = x + 1; y < k; ++y) {
      int g = 0;
      for (const auto& m : res.members) {
        if (m.set.cardinality() == 2 && width(m.set, bp, {R[x], R[y]}) == 2 && m.set.subset_of(bp.block(R[x]) | bp.block(R[y]))) ++g;
      }
      p.pair_g.push_back(g);
    }
  }
  for (int x = 0; x < k; ++x) {
    int u = R[x];
    VertexSet six{bp.a(1, u), bp.a(3, u)};
    for (int y = 0; y < k; ++y) {
      if (y != x) six = six.with(bp.a(2, R[y])).with(bp.a(3, R[y]));
    }
    if (splits(six, triples)) p.Q.push_back(u);
  }
  p.sufficiently_fat = !p.Q.empty();
  return p;
}

MissingCounts missing_counts(const TraceFamily& t, const BasePartition& bp, const std::vector<int>& Rin) {
  if (t.origin().k != 3) throw PreconditionError("structure analysis needs k = 3");
  std::vector<int> R = checked_R(bp, Rin, 3);
  VertexSet bc, blocks;
  for (int r : R) {
    bc = bc.with(bp.a(2, r)).with(bp.a(3, r));
    blocks = blocks | bp.block(r);
  }
  MissingCounts mc;
  for (VertexSet h : subsets_of_size(bc, 3)) {
    int w = width(h, bp, R);
    if (t.contains(h)) continue;
    mc.missing_w3_in_BC += w == 3 ? 1 : 0;
    mc.missing_w2_in_BC += w == 2 ? 1 : 0;
  }
  for (VertexSet h : subsets_of_size(blocks, 3)) {
    int w = width(h, bp, R);
    bool present = t.contains(h);
    if (w == 3) {
      mc.width3_present += present ? 1 : 0;
      mc.transversals_missing += present ? 0 : 1;
    } else if (w == 2 && !present) {
      ++mc.missing_w2_in_blocks;
    }
  }
  return mc;
}

std::vector<PropertyCheck> check_structure_properties(const Family& fam, int k, int s) {
  std::vector<PropertyCheck> out;
  auto add = [&](std::string name, bool applicable, bool holds, std::string detail = {}) {
    out.push_back({std::move(name), applicable, applicable ? holds : true, std::move(detail)});
  };
  bool standing = k == 3 && s >= k && fam.uniform_k() == k && is_stable(fam).stable &&
                  max_matching(fam.members()) == s && is_maximal(fam, s) &&
                  max_matching(fam.avoiding(1).members()) == s;
  std::optional<TraceFamily> t;
  std::optional<BasePartition> bp;
  if (standing) {
    t = trace(fam, k, s);
    bp = base_partition(*t);
    standing = bp->d(1) == 1;
  }
  const char* names[] = {"pair_trichotomy", "missing_five", "missing_six", "diagonal_counts",
                         "normal_if_all_diagonals", "fat_normal_full_size", "robust_columns", "robust_meets",
                         "robust_weight", "nonrobust_g2", "q_excludes_pair", "not_fat_missing",
                         "insufficiently_fat_bounds", "single_q_bounds", "g2_additivity"};
  if (!standing) {
    for (const char* n : names) add(n, false, true);
    return out;
  }
  const int d = bp->d(2);
  std::vector<PropertyCheck> checks;
  for (const char* n : names) checks.push_back({n, true, true, {}});
  auto fail = [&](int idx, const std::string& detail) {
    if (checks[idx].holds) checks[idx].detail = detail;
    checks[idx].holds = false;
  };

  for (int u = 1; u <= s; ++u) {
    for (int v = u + 1; v <= s; ++v) {
      std::string where = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
      PairProfile p = classify_pair(*t, *bp, u, v);
      if (p.pair_case == PairCase::Unmatched) fail(0, where);
      Restriction r = restriction(*t, *bp, {u, v}, false);
      int ai = bp->a(1, u), bi = bp->a(2, u), ci = bp->a(3, u);
      int aj = bp->a(1, v), bj = bp->a(2, v), cj = bp->a(3, v);
      if (p.pair_case == PairCase::CaseI || p.pair_case == PairCase::CaseII) {
        for (VertexSet h : {VertexSet{ai, d, cj}, VertexSet{bi, d, cj}, VertexSet{ci, d, cj}, VertexSet{aj, d, ci},
                            VertexSet{bj, d, ci}}) {
          if (r.contains(h)) fail(1, where + " " + h.to_string());
        }
      }
      if (p.pair_case == PairCase::CaseIII) {
        for (int x : {bi, ci}) {
          for (int y : {aj, bj, cj}) {
            if (r.contains(VertexSet{x, y, d})) fail(2, where + " " + VertexSet{x, y, d}.to_string());
          }
        }
      }
    }
  }

  const Rational f2 = s >= k && fam.n() >= 3 * s + 2 ? f_value(2, fam.n(), k, s) : Rational(0);
  for (VertexSet rs : subsets_of_size(VertexSet::interval(1, s), 3)) {
    std::vector<int> R = rs.elements();
    std::string where = rs.to_string();
    TripleProfile tp = triple_profile(*t, *bp, R);
    MissingCounts mc = missing_counts(*t, *bp, R);
    Restriction res = restriction(*t, *bp, R);

    bool all_diagonals = true;
    for (VertexSet dg : diagonals(*bp, R)) {
      if (blockwise_dominating_count(*bp, R, dg) != 6 || dominating_transversal_count(*bp, R, dg) < 6) {
        fail(3, where + " " + dg.to_string());
      }
      all_diagonals = all_diagonals && res.contains(dg);
    }
    if (all_diagonals && !tp.normal) fail(4, where);

    if (tp.fat && tp.normal) {
      VertexSet blocks = tp.columns[0] | tp.columns[1] | tp.columns[2];
      for (const auto& m : res.members) {
        if (m.set.subset_of(blocks) && m.set.cardinality() != 3) fail(5, where + " " + m.set.to_string());
      }
    }
    for (const auto& w : robust_witnesses(*t, *bp, R)) {
      VertexSet uni{1};
      for (VertexSet h : w) uni = uni | h;
      if ((uni - VertexSet{1}) != (tp.columns[0] | tp.columns[1])) fail(6, where);
      for (const auto& m : res.members) {
        if ((m.set & uni).cardinality() < 2) fail(7, where + " " + m.set.to_string());
      }
    }
    if (tp.robust && res.total_weight() > f2) fail(8, where + " " + to_fraction_string(res.total_weight()));
    if (!tp.robust && tp.g2 > 9) fail(9, where + " g2=" + std::to_string(tp.g2));
    for (int u : tp.Q) {
      std::vector<int> a_others;
      for (int r : R) {
        if (r != u) a_others.push_back(bp->a(1, r));
      }
      if (res.contains(VertexSet{a_others[0], a_others[1]})) fail(10, where);
    }
    if (!tp.fat && (mc.missing_w3_in_BC < 4 || mc.missing_w2_in_BC < 6 || mc.transversals_missing < 4)) {
      fail(11, where);
    }
    if (!tp.sufficiently_fat && (mc.width3_present > 20 || mc.missing_w2_in_blocks < 12)) fail(12, where);
    if (tp.Q.size() == 1 && (mc.width3_present > 21 || mc.missing_w2_in_blocks < 10)) fail(13, where);
    int sum = 0;
    for (int g : tp.pair_g) sum += g;
    if (sum != tp.g2) fail(14, where);
  }
  return checks;
}

}  // namespace matchlab
