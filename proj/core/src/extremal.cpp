#include "matchlab/extremal.hpp"

#include "matchlab/combinatorics.hpp"
#include "matchlab/error.hpp"

namespace matchlab {

void validate(const ExtremalSpec& spec) {
  if (spec.k < 1 || spec.s < 1 || spec.ell < 1 || spec.ell > spec.k || spec.n < spec.k * spec.s) {
    throw Error("parameters out of range");
  }
}

Family build_A(const ExtremalSpec& spec) {
  validate(spec);
  if (spec.n > VertexSet::kMaxVertex) throw Error("parameters out of range");
  int head = spec.ell * spec.s + spec.ell - 1;
  VertexSet core = VertexSet::interval(1, std::min(head, spec.n));
  std::vector<VertexSet> members;
  for_each_subset(VertexSet::interval(1, spec.n), spec.k, [&](VertexSet f) {
    if ((f & core).cardinality() >= spec.ell) members.push_back(f);
  });
  return Family(spec.n, std::move(members), spec.k);
}

std::int64_t size_A(const ExtremalSpec& spec) {
  validate(spec);
  std::int64_t head = static_cast<std::int64_t>(spec.ell) * spec.s + spec.ell - 1;
  std::int64_t inside = std::min<std::int64_t>(head, spec.n);
  std::int64_t total = 0;
  for (int t = spec.ell; t <= spec.k; ++t) total += binomial(inside, t) * binomial(spec.n - inside, spec.k - t);
  return total;
}

int pivotal(int s, int k) {
  if (s < 1 || k < 2) throw Error("parameters out of range");
  int start = k * s + k - 1;
  // |A_1(n)| grows without bound while |A_k| is fixed; (k+1)(s+1) is a
  // generous cap for every k, s we accept.
  int cap = (k + 1) * (s + 1);
  for (int n = start; n <= cap; ++n) {
    if (size_A({n, k, s, k}) <= size_A({n, k, s, 1})) return n;
  }
  throw Error("pivotal number not found below " + std::to_string(cap));
}

std::int64_t erdos_gallai_max(int n, int s) {
  if (s < 1 || n < 3 * s) throw Error("formula valid only for n ≥ 3s");
  return binomial(n, 2) - binomial(n - s, 2);
}

std::int64_t general_upper_bound(int n, int k, int s) {
  if (k < 1 || s < 1 || n < k * (s + 1)) throw Error("parameters out of range");
  return s * binomial(n - 1, k - 1);
}

}  // namespace matchlab
