#include "matchlab/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "matchlab/audit.hpp"
#include "matchlab/compression.hpp"
#include "matchlab/error.hpp"
#include "matchlab/extremal.hpp"
#include "matchlab/matching.hpp"
#include "matchlab/search.hpp"
#include "matchlab/structure.hpp"
#include "matchlab/trace.hpp"

namespace matchlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotReproducible: return "N/R";
  }
  return "?";
}

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  int failures = 0;

  void fail(const std::string& what) {
    pass = false;
    if (failures++ < 3) detail << (detail.tellp() > 0 ? "; " : "") << what;
  }
};

struct CorpusEntry {
  std::string label;
  Family fam;
};

// The k = s = 3 corpus shared by several criteria.
const std::vector<CorpusEntry>& corpus(const AcceptanceOptions& opts) {
  static std::mutex mu;
  static std::map<std::pair<int, std::uint64_t>, std::vector<CorpusEntry>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(opts.corpus_size, opts.seed);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<CorpusEntry> out;
  out.push_back({"A_1(13)", build_A({13, 3, 3, 1})});
  out.push_back({"A_2(13)", build_A({13, 3, 3, 2})});
  out.push_back({"A_3", build_A({13, 3, 3, 3})});
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < opts.corpus_size; ++i) {
    int n = 12 + i % 2;
    out.push_back({"random#" + std::to_string(i) + "(n=" + std::to_string(n) + ")",
                   random_saturated_stable(n, 3, 3, rng)});
  }
  return cache.emplace(key, std::move(out)).first->second;
}

void criterion1(const AcceptanceOptions& opts, Outcome& o) {
  SearchOptions so;
  so.threads = opts.threads;
  struct Case {
    int n;
    std::int64_t expected;
    Construction c;
  };
  for (Case c : {Case{10, 64, Construction::A_1}, Case{9, 56, Construction::A_k}}) {
    SearchResult r = max_stable(c.n, 3, 2, so);
    std::int64_t formula = std::max(binomial(8, 3), binomial(c.n, 3) - binomial(c.n - 2, 3));
    o.detail << (o.detail.tellp() > 0 ? ", " : "") << "m(" << c.n << ",3,2)=" << r.max_size;
    if (r.max_size != c.expected || formula != c.expected) o.fail("n=" + std::to_string(c.n) + " wrong value");
    if (r.matched != c.c) o.fail("n=" + std::to_string(c.n) + " matched " + to_string(r.matched));
  }
}

void criterion2(const AcceptanceOptions& opts, Outcome& o) {
  SearchOptions so;
  so.threads = opts.threads;
  int checked = 0;
  for (auto [s, lo, hi] : {std::tuple{1, 4, 8}, std::tuple{2, 6, 9}}) {
    for (int n = lo; n <= hi; ++n, ++checked) {
      std::int64_t got = max_stable(n, 2, s, so).max_size;
      if (got != erdos_gallai_max(n, s)) {
        o.fail("m(" + std::to_string(n) + ",2," + std::to_string(s) + ")=" + std::to_string(got));
      }
    }
  }
  for (int s = 1; s <= 2; ++s) {
    for (int n = 2 * s + 1; n <= 6; ++n, ++checked) {
      std::int64_t a = max_stable(n, 2, s, so).max_size;
      std::int64_t b = naive_max(n, 2, s);
      if (a != b) o.fail("naive mismatch at n=" + std::to_string(n) + " s=" + std::to_string(s));
    }
  }
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << checked << " grid points";
}

void criterion3(const AcceptanceOptions& opts, Outcome& o) {
  const auto& c = corpus(opts);
  for (const auto& e : c) {
    CountingLemmaReport r = counting_lemma_check(e.fam, 3, 3);
    if (!r.equal) o.fail(e.label + ": " + std::to_string(r.lhs) + " vs " + to_fraction_string(r.rhs));
  }
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << c.size() << " families";
}

void criterion4(const AcceptanceOptions& opts, Outcome& o) {
  const auto& c = corpus(opts);
  for (const auto& e : c) {
    TraceFamily t = trace(e.fam, 3, 3);
    if (size_formula(t) != static_cast<std::int64_t>(e.fam.size())) o.fail(e.label + ": size formula");
    if (matching_number(t.base()).size != 3) o.fail(e.label + ": trace matching number");
  }
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << c.size() << " families";
}

void criterion5(const AcceptanceOptions&, Outcome& o) {
  for (auto [s, expected] : {std::pair{3, 13}, std::pair{4, 17}, std::pair{2, 10}}) {
    int got = pivotal(s, 3);
    if (got != expected) o.fail("n0(" + std::to_string(s) + ",3)=" + std::to_string(got));
  }
  PivotalBoundsReport rep = check_pivotal_bounds(200, 3);
  if (!rep.strict_failures.empty()) {
    std::ostringstream ss;
    ss << "n0(s,3) >= 4s for s in {";
    for (std::size_t i = 0; i < rep.strict_failures.size(); ++i) ss << (i ? "," : "") << rep.strict_failures[i];
    ss << "}";
    o.fail(ss.str());
  }
  if (!rep.bound_failures.empty()) o.fail(std::to_string(rep.bound_failures.size()) + " upper bound failures");
}

void criterion6(const AcceptanceOptions&, Outcome& o) {
  int checked = 0;
  for (int s = 1; s <= 50; ++s) {
    for (int n = 3 * s + 2; n <= 4 * s; ++n, ++checked) {
      if (!check_dominance(3, s, n)) o.fail("s=" + std::to_string(s) + " n=" + std::to_string(n));
    }
  }
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << checked << " (s,n) pairs";
}

void criterion7(const AcceptanceOptions& opts, Outcome& o) {
  std::size_t total = 0;
  std::size_t monotone_findings = 0;
  for (PivotMode mode : {PivotMode::N0, PivotMode::N0Minus1}) {
    auto records = audit_catalog(3, opts.audit_s_max, mode);
    total += records.size();
    for (const auto& r : records) {
      if (!r.agrees()) {
        o.fail(r.id + " s=" + std::to_string(r.s) + " (" + to_string(mode) + "): expected " + to_string(r.expected) +
               ", margin " + to_fraction_string(r.margin));
      }
    }
    // The monotonicity surrogate is a property of the audit, not a stated
    // outcome; its findings are reported without gating.
    monotone_findings += check_monotonicity(records).size();
  }
  auto find = [](const std::vector<InequalityRecord>& rs, const std::string& id, int s) -> const InequalityRecord* {
    for (const auto& r : rs) {
      if (r.id == id && r.s == s) return &r;
    }
    return nullptr;
  };
  auto n0 = audit_catalog(3, 4, PivotMode::N0);
  const auto* eq = find(n0, "sfat.q2.high.second", 4);
  if (!eq || eq->margin != 0) o.fail("equality point at s=4 not reproduced");
  const auto* designed = find(n0, "sfat.q2.low.s3_pivot", 3);
  if (!designed || designed->lhs != 15 || designed->rhs != 10) o.fail("designed failure 15 > 10 not reproduced");
  const auto* s3 = find(n0, "sfat.q3", 3);
  if (!s3 || s3->lhs != 9 || s3->rhs != 10) o.fail("9 <= 10 at s=3 not reproduced");
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << total << " records, " << monotone_findings
           << " monotonicity findings";
}

void criterion8(const AcceptanceOptions& opts, Outcome& o) {
  std::mt19937_64 rng(opts.seed ^ 0x5eed);
  for (int trial = 0; trial < opts.shift_families; ++trial) {
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    int n = std::uniform_int_distribution<int>(k, 10)(rng);
    std::vector<VertexSet> pool = subsets_of_size(VertexSet::interval(1, n), k);
    std::shuffle(pool.begin(), pool.end(), rng);
    int m = std::uniform_int_distribution<int>(0, std::min<int>(15, static_cast<int>(pool.size())))(rng);
    pool.resize(m);
    Family fam(n, pool, k);
    std::string tag = "trial " + std::to_string(trial);
    int nu = matching_number(fam).size;
    std::int64_t pot = potential(fam);
    // One pass of single shifts.
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        int moved = 0;
        Family g = shift(fam, i, j, moved);
        if (g.size() != fam.size()) o.fail(tag + ": shift changed size");
        int nu_g = matching_number(g).size;
        if (nu_g > nu) o.fail(tag + ": shift raised nu");
        std::int64_t pg = potential(g);
        if (moved > 0 ? pg >= pot : pg != pot) o.fail(tag + ": potential");
      }
    }
    StabilizeResult st = stabilize(fam);
    if (st.family.size() != fam.size()) o.fail(tag + ": stabilize changed size");
    if (!is_stable(st.family).stable) o.fail(tag + ": stabilize output not stable");
    if (matching_number(st.family).size > nu) o.fail(tag + ": stabilize raised nu");
    // Replay the log and watch the potential.
    Family cur = fam;
    std::int64_t p = potential(cur);
    for (const ShiftStep& step : st.log.steps) {
      int moved = 0;
      cur = shift(cur, step.i, step.j, moved);
      std::int64_t q = potential(cur);
      if (moved != step.moved_count || moved == 0 || q >= p) o.fail(tag + ": log replay");
      p = q;
    }
    if (!(cur == st.family)) o.fail(tag + ": log replay result");
  }
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << opts.shift_families << " families";
}

void criterion9(const AcceptanceOptions& opts, Outcome& o) {
  const auto& c = corpus(opts);
  int applicable_families = 0;
  int assertions = 0;
  for (const auto& e : c) {
    auto checks = check_structure_properties(e.fam, 3, 3);
    bool any = false;
    for (const auto& chk : checks) {
      if (!chk.applicable) continue;
      any = true;
      ++assertions;
      if (!chk.holds) o.fail(e.label + ": " + chk.name + " " + chk.detail);
    }
    applicable_families += any;
  }
  if (applicable_families == 0) o.fail("no family in the corpus satisfies the hypotheses");
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << applicable_families << " families, " << assertions
           << " assertions";
}

const std::map<int, std::pair<std::string, std::function<void(const AcceptanceOptions&, Outcome&)>>>& table() {
  static const std::map<int, std::pair<std::string, std::function<void(const AcceptanceOptions&, Outcome&)>>> t{
      {1, {"exact maximum at k=3, s=2 (n=10: 64, n=9: 56)", criterion1}},
      {2, {"k=2 search against Erdos-Gallai and full enumeration", criterion2}},
      {3, {"counting lemma identity on the k=s=3 corpus", criterion3}},
      {4, {"trace size formula and trace matching number", criterion4}},
      {5, {"pivotal numbers and their bounds", criterion5}},
      {6, {"construction dominance for s <= 50", criterion6}},
      {7, {"inequality catalog outcomes", criterion7}},
      {8, {"shifting preserves size, never raises nu, ends stable", criterion8}},
      {9, {"pair and triple structure facts on the corpus", criterion9}},
  };
  return t;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  CriterionResult r;
  r.id = id;
  auto start = std::chrono::steady_clock::now();
  if (id == 10) {
    // Declared out of scope; the opt-in search is still run so that a wrong
    // value would show up.
    r.title = "exhaustive s=3, n=13 maximum and s >= 4";
    r.verdict = Verdict::NotReproducible;
    try {
      auto path = std::filesystem::temp_directory_path() /
                  ("matchlab_acceptance_" + std::to_string(::getpid()) + ".ckpt");
      std::filesystem::remove(path);
      SearchOptions so;
      so.allow_large = true;
      so.checkpoint = path;
      so.threads = opts.threads;
      SearchResult sr = max_stable(13, 3, 3, so);
      std::filesystem::remove(path);
      r.detail = "declared; opt-in checkpointed search gives m(13,3,3)=" + std::to_string(sr.max_size) +
                 ", s >= 4 not attempted";
      if (sr.max_size != binomial(13, 3) - binomial(10, 3)) r.verdict = Verdict::Fail;
    } catch (const std::exception& e) {
      r.detail = std::string("declared; opt-in search failed: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  auto it = table().find(id);
  if (it == table().end()) throw Error("unknown criterion " + std::to_string(id));
  r.title = it->second.first;
  Outcome o;
  try {
    it->second.second(opts, o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  r.verdict = o.pass ? Verdict::Pass : Verdict::Fail;
  r.detail = o.detail.str();
  if (o.failures > 3) r.detail += "; +" + std::to_string(o.failures - 3) + " more";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", r.seconds);
  std::string line = to_string(r.verdict);
  line.resize(5, ' ');
  line += std::to_string(r.id);
  line += r.id < 10 ? "   " : "  ";
  line += r.title;
  line += "  (" + r.detail + (r.detail.empty() ? "" : ", ") + buf + ")";
  return line;
}

void print_table(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) out << format_line(r) << "\n";
}

}  // namespace matchlab
