#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchlab/vertex_set.hpp"

namespace matchlab {

// Immutable set family over [n], members kept in canonical VertexSet order.
class Family {
 public:
  Family() = default;
  // Deduplicates and sorts. If uniform_k is given every member must have that
  // size; if omitted it is inferred when all members share one size.
  Family(int n, std::vector<VertexSet> members, std::optional<int> uniform_k = std::nullopt);
  // Same, but never infers uniformity (trace families).
  static Family mixed(int n, std::vector<VertexSet> members);
  // All r-subsets of [n].
  static Family complete(int n, int r);

  int n() const { return n_; }
  const std::vector<VertexSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::optional<int> uniform_k() const { return uniform_k_; }
  bool contains(VertexSet s) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  Family with(VertexSet s) const;
  // Members avoiding vertex v (the family F(v-bar)).
  Family avoiding(int v) const;
  // Members contained in `ground`.
  Family inside(VertexSet ground) const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> members_;
  std::optional<int> uniform_k_;
};

std::string to_string(const Family& fam);

struct StabilityReport {
  bool stable = true;
  // (missing G, member F) with G << F.
  std::optional<std::pair<VertexSet, VertexSet>> counterexample;
};

// Down-set check under << within each cardinality class.
StabilityReport is_stable(const Family& fam);

}  // namespace matchlab
