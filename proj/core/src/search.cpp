#include "matchlab/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "matchlab/combinatorics.hpp"
#include "matchlab/compression.hpp"
#include "matchlab/error.hpp"
#include "matchlab/extremal.hpp"
#include "matchlab/matching.hpp"

namespace matchlab {

Family saturate(const Family& fam, int s) {
  if (!fam.uniform_k()) throw Error("saturate needs a uniform family");
  const int k = *fam.uniform_k();
  if (max_matching(fam.members(), s + 1) > s) throw Error("family already has matching number above s");
  std::vector<VertexSet> members = fam.members();
  std::vector<VertexSet> pool;
  for_each_subset(VertexSet::interval(1, fam.n()), k, [&](VertexSet x) {
    if (std::binary_search(fam.begin(), fam.end(), x)) return;
    // nu(F + x) > s  iff  the members missing x already hold s disjoint sets.
    pool.clear();
    for (VertexSet f : members) {
      if (!f.intersects(x)) pool.push_back(f);
    }
    if (!has_matching(pool, s)) members.push_back(x);
  });
  return Family(fam.n(), std::move(members), k);
}

Family random_saturated_stable(int n, int k, int s, std::mt19937_64& rng) {
  if (n < k * s) throw Error("parameters out of range");
  std::vector<VertexSet> all = subsets_of_size(VertexSet::interval(1, n), k);
  std::vector<VertexSet> order = all;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<VertexSet> members;
  std::vector<char> in(all.size(), 0);
  for (VertexSet x : order) {
    std::vector<VertexSet> grown = members;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!in[i] && dominates(all[i], x)) grown.push_back(all[i]);
    }
    if (grown.size() == members.size() || max_matching(grown, s + 1) > s) continue;
    members = std::move(grown);
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < all.size(); ++i) in[i] = std::binary_search(members.begin(), members.end(), all[i]);
  }
  Family fam(n, std::move(members), k);
  while (true) {
    fam = saturate(fam, s);
    Family st = stabilize(fam).family;
    if (st == fam) return fam;
    fam = std::move(st);
  }
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::A_k: return "A_k";
    case Construction::A_1: return "A_1";
    case Construction::Other: return "OTHER";
  }
  return "?";
}

int default_threads() {
  if (const char* env = std::getenv("MATCHLAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::int64_t naive_max(int n, int k, int s) {
  std::int64_t edges_count = binomial(n, k);
  if (edges_count > 20) throw Error("beyond naive enumeration scale");
  std::vector<VertexSet> edges = subsets_of_size(VertexSet::interval(1, n), k);
  const std::uint32_t total = std::uint32_t{1} << edges.size();
  std::int64_t best = -1;
  std::vector<VertexSet> chosen;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    int count = std::popcount(mask);
    if (count <= best) continue;
    chosen.clear();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (mask >> i & 1u) chosen.push_back(edges[i]);
    }
    if (max_matching(chosen, s + 1) == s) best = count;
  }
  if (best < 0) throw Error("no family reaches matching number s");
  return best;
}

namespace {

constexpr int kMaxElements = 256;

struct Bits {
  std::array<std::uint64_t, 4> w{};
  bool test(int i) const { return w[i >> 6] >> (i & 63) & 1u; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  bool intersects(const Bits& o) const {
    for (int i = 0; i < 4; ++i) {
      if (w[i] & o.w[i]) return true;
    }
    return false;
  }
  template <typename Fn>
  void for_each(Fn fn) const {
    for (int i = 0; i < 4; ++i) {
      for (std::uint64_t b = w[i]; b; b &= b - 1) fn(i * 64 + std::countr_zero(b));
    }
  }
};

// Trace candidates ordered so that every element precedes everything below
// it: size ascending, then lexicographically descending.
struct Domain {
  int n, k, s, m;
  bool avoid_one;
  std::vector<std::uint32_t> sets;
  std::vector<std::int64_t> weight;
  std::vector<Bits> down;

  Domain(int n_, int k_, int s_, bool avoid_one_) : n(n_), k(k_), s(s_), m(k_ * s_ + k_ - 1), avoid_one(avoid_one_) {
    int lo = std::max(avoid_one ? 2 : 1, k - (n - m));
    for (int j = lo; j <= k; ++j) {
      auto layer = subsets_of_size(VertexSet::interval(1, m), j);
      std::reverse(layer.begin(), layer.end());
      for (VertexSet v : layer) {
        sets.push_back(static_cast<std::uint32_t>(v.bits()));
        weight.push_back(binomial(n - m, k - j));
      }
    }
    if (sets.size() > kMaxElements) throw Error("beyond desk scale");
    down.resize(sets.size());
    for (std::size_t x = 0; x < sets.size(); ++x) {
      for (std::size_t y = 0; y < sets.size(); ++y) {
        if (below(y, x)) down[x].set(static_cast<int>(y));
      }
    }
  }

  // y <= x: every family with trace x also has trace y.
  bool below(std::size_t y, std::size_t x) const {
    VertexSet X = VertexSet::from_bits(sets[x]);
    VertexSet Y = VertexSet::from_bits(sets[y]);
    int cx = X.cardinality();
    if (Y.cardinality() < cx) return false;
    VertexSet prefix;
    for (int q = 1; q <= cx; ++q) prefix = prefix.with(Y.nth(q));
    return dominates(prefix, X);
  }

  std::vector<VertexSet> members(const Bits& b) const {
    std::vector<VertexSet> out;
    b.for_each([&](int i) { out.push_back(VertexSet::from_bits(sets[i])); });
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct Node {
  Bits cur;
  Bits excl;
  std::int64_t value = 0;
  std::string prefix;
};

struct Outcome {
  std::int64_t value = -1;
  std::vector<VertexSet> witness;  // canonical order; empty = none found
  std::int64_t nodes = 0;

  void offer(std::int64_t v, std::vector<VertexSet> w) {
    if (v > value || (v == value && (witness.empty() || w < witness))) {
      value = v;
      witness = std::move(w);
    }
  }
};

class Searcher {
 public:
  Searcher(const Domain& d, std::int64_t seed) : d_(d), full_((1u << d.m) - 1), table_(std::size_t{1} << d.m) {
    out_.value = seed;
  }

  // Expands to `depth` decisions, collecting the open subproblems in order.
  void expand(const Node& node, int depth, std::vector<Node>& tasks) { visit(node, depth, &tasks); }
  Outcome solve(const Node& node) {
    visit(node, -1, nullptr);
    return out_;
  }
  const Outcome& outcome() const { return out_; }

 private:
  // best[U] = largest matching of current members inside U, capped at s+1.
  void fill_table(const Bits& cur) {
    std::array<std::vector<std::uint32_t>, 32> by_min;
    cur.for_each([&](int i) { by_min[std::countr_zero(d_.sets[i])].push_back(d_.sets[i]); });
    const int cap = d_.s + 1;
    table_[0] = 0;
    for (std::uint32_t U = 1; U <= full_; ++U) {
      int v = std::countr_zero(U);
      int best = table_[U & (U - 1)];
      for (std::uint32_t e : by_min[v]) {
        if (best >= cap) break;
        if ((e & ~U) == 0) best = std::max(best, 1 + table_[U & ~e]);
      }
      table_[U] = static_cast<std::uint8_t>(std::min(best, cap));
    }
  }

  void visit(Node node, int depth, std::vector<Node>* tasks) {
    ++out_.nodes;
    fill_table(node.cur);
    if (table_[full_] > d_.s) return;
    std::int64_t bound = node.value;
    int next = -1;
    const int count = static_cast<int>(d_.sets.size());
    for (int i = 0; i < count; ++i) {
      if (node.cur.test(i) || node.excl.test(i)) continue;
      if (table_[full_ & ~d_.sets[i]] >= d_.s) {
        node.excl.set(i);
        continue;
      }
      bound += d_.weight[i];
      if (next < 0) next = i;
    }
    if (bound < out_.value) return;
    if (next < 0) {
      if (d_.avoid_one && table_[full_ & ~1u] < d_.s) return;
      out_.offer(node.value, d_.members(node.cur));
      return;
    }
    if (depth == 0) {
      --out_.nodes;  // counted again when the subproblem runs
      tasks->push_back(node);
      return;
    }
    int child_depth = depth < 0 ? -1 : depth - 1;
    if (!d_.down[next].intersects(node.excl)) {
      Node in = node;
      d_.down[next].for_each([&](int j) {
        if (!in.cur.test(j)) {
          in.cur.set(j);
          in.value += d_.weight[j];
        }
      });
      in.prefix += '1';
      visit(std::move(in), child_depth, tasks);
    }
    node.excl.set(next);
    node.prefix += '0';
    visit(std::move(node), child_depth, tasks);
  }

  const Domain& d_;
  std::uint32_t full_;
  std::vector<std::uint8_t> table_;
  Outcome out_;
};

constexpr const char* kCheckpointHeader = "matchlab-checkpoint v1";

std::string params_line(int n, int k, int s, const SearchOptions& o) {
  return "params n=" + std::to_string(n) + " k=" + std::to_string(k) + " s=" + std::to_string(s) +
         " avoid_one=" + (o.avoid_one ? "1" : "0") + " split_depth=" + std::to_string(o.split_depth);
}

std::string encode_members(const std::vector<VertexSet>& w) {
  if (w.empty()) return "-";
  std::ostringstream os;
  os << std::hex;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i].bits();
  return os.str();
}

std::vector<VertexSet> decode_members(const std::string& text) {
  std::vector<VertexSet> out;
  if (text == "-") return out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(VertexSet::from_bits(std::stoull(tok, nullptr, 16)));
  return out;
}

// Completed subproblems by index; creates the file with its header if absent.
std::map<std::size_t, Outcome> load_checkpoint(const std::filesystem::path& path, const std::string& params) {
  std::map<std::size_t, Outcome> done;
  std::ifstream in(path);
  if (!in) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write checkpoint " + path.string());
    out << kCheckpointHeader << "\n" << params << "\n";
    return done;
  }
  std::string line;
  if (!std::getline(in, line) || line != kCheckpointHeader) throw Error("checkpoint header not recognized");
  if (!std::getline(in, line) || line != params) throw Error("checkpoint parameters mismatch");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string tag, prefix, members;
    std::size_t index = 0;
    Outcome o;
    if (!(is >> tag >> index >> prefix >> o.nodes >> o.value >> members) || tag != "done") {
      // A torn final line from an interrupted run is simply redone.
      continue;
    }
    o.witness = decode_members(members);
    done[index] = std::move(o);
  }
  return done;
}

}  // namespace

SearchResult max_stable(int n, int k, int s, const SearchOptions& opts) {
  const int m = k * s + k - 1;
  if (k < 2 || s < 1 || n < m || n > VertexSet::kMaxVertex) throw Error("parameters out of range");
  // Graphs stay small well past s = 2: the domain has C(2s+1,2) + 2s+1 sets.
  bool mandatory = (k == 3 && s <= 2) || (k == 2 && s <= 5);
  bool large_ok = k == 3 && s == 3 && opts.allow_large && opts.checkpoint;
  if (!mandatory && !large_ok) throw Error("beyond desk scale");

  Domain dom(n, k, s, opts.avoid_one);
  // Every A_ell with ell >= 2 satisfies the avoid-one condition; A_1 does not.
  std::int64_t seed = 0;
  for (int ell = opts.avoid_one ? 2 : 1; ell <= k; ++ell) seed = std::max(seed, size_A({n, k, s, ell}));

  std::vector<Node> tasks;
  Searcher root(dom, seed);
  root.expand(Node{}, std::max(0, opts.split_depth), tasks);

  const std::string params = params_line(n, k, s, opts);
  std::map<std::size_t, Outcome> done;
  if (opts.checkpoint) done = load_checkpoint(*opts.checkpoint, params);
  std::mutex file_mutex;
  std::ofstream journal;
  if (opts.checkpoint) journal.open(*opts.checkpoint, std::ios::app);

  std::vector<Outcome> results(tasks.size());
  for (auto& [idx, o] : done) {
    if (idx < results.size()) results[idx] = o;
  }
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      if (done.count(i)) continue;
      Searcher sub(dom, seed);
      results[i] = sub.solve(tasks[i]);
      if (journal.is_open()) {
        std::lock_guard<std::mutex> lock(file_mutex);
        journal << "done " << i << ' ' << (tasks[i].prefix.empty() ? "-" : tasks[i].prefix) << ' '
                << results[i].nodes << ' ' << results[i].value << ' ' << encode_members(results[i].witness) << '\n';
        journal.flush();
      }
    }
  };
  int threads = opts.threads > 0 ? opts.threads : default_threads();
  threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Outcome best;
  best.nodes = root.outcome().nodes;
  if (!root.outcome().witness.empty()) best.offer(root.outcome().value, root.outcome().witness);
  for (auto& r : results) {
    best.nodes += r.nodes;
    if (!r.witness.empty()) best.offer(r.value, r.witness);
  }
  if (best.witness.empty()) throw Error("search found no admissible trace family");

  SearchResult res;
  res.n = n;
  res.k = k;
  res.s = s;
  res.max_size = best.value;
  res.nodes_explored = best.nodes;
  res.subproblems = static_cast<std::int64_t>(tasks.size());
  res.witness_trace = Family::mixed(m, best.witness);
  res.witness = expand(TraceFamily(res.witness_trace, {n, k, s}));
  if (static_cast<std::int64_t>(res.witness.size()) != res.max_size || max_matching(res.witness.members()) != s ||
      !is_stable(res.witness).stable) {
    throw Error("search witness failed verification");
  }
  if (res.witness == build_A({n, k, s, 1})) {
    res.matched = Construction::A_1;
  } else if (res.witness == build_A({n, k, s, k})) {
    res.matched = Construction::A_k;
  }
  return res;
}

}  // namespace matchlab
