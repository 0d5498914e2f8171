#include "matchlab/family.hpp"

#include <algorithm>

#include "matchlab/error.hpp"

namespace matchlab {

namespace {

void normalize(std::vector<VertexSet>& members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

void check_ground(int n, const std::vector<VertexSet>& members) {
  if (n < 0 || n > VertexSet::kMaxVertex) throw Error("ground set size out of range");
  VertexSet ground = VertexSet::interval(1, n);
  for (VertexSet s : members) {
    if (!s.subset_of(ground)) throw Error("member " + s.to_string() + " not inside [" + std::to_string(n) + "]");
  }
}

}  // namespace

Family::Family(int n, std::vector<VertexSet> members, std::optional<int> uniform_k)
    : n_(n), members_(std::move(members)), uniform_k_(uniform_k) {
  check_ground(n_, members_);
  normalize(members_);
  if (uniform_k_) {
    for (VertexSet s : members_) {
      if (s.cardinality() != *uniform_k_) throw Error("member " + s.to_string() + " violates uniformity");
    }
  } else if (!members_.empty() && members_.front().cardinality() == members_.back().cardinality()) {
    uniform_k_ = members_.front().cardinality();
  }
}

Family Family::mixed(int n, std::vector<VertexSet> members) {
  Family f;
  f.n_ = n;
  f.members_ = std::move(members);
  check_ground(f.n_, f.members_);
  normalize(f.members_);
  return f;
}

Family Family::complete(int n, int r) {
  return Family(n, subsets_of_size(VertexSet::interval(1, n), r), r);
}

bool Family::contains(VertexSet s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

Family Family::with(VertexSet s) const {
  std::vector<VertexSet> m = members_;
  m.push_back(s);
  if (uniform_k_ && s.cardinality() == *uniform_k_) return Family(n_, std::move(m), uniform_k_);
  return uniform_k_ ? Family(n_, std::move(m)) : Family::mixed(n_, std::move(m));
}

Family Family::avoiding(int v) const {
  Family f = *this;
  std::erase_if(f.members_, [v](VertexSet s) { return s.contains(v); });
  return f;
}

Family Family::inside(VertexSet ground) const {
  Family f = *this;
  std::erase_if(f.members_, [ground](VertexSet s) { return !s.subset_of(ground); });
  return f;
}

std::string to_string(const Family& fam) {
  std::string out = "[";
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (i) out += ' ';
    out += fam.members()[i].to_string();
  }
  return out + "]";
}

StabilityReport is_stable(const Family& fam) {
  // Every G << F is reachable from F by single steps x -> x-1, so checking
  // those immediate predecessors suffices.
  for (VertexSet f : fam) {
    for (int x : f.elements()) {
      if (x == 1 || f.contains(x - 1)) continue;
      VertexSet g = f.without(x).with(x - 1);
      if (!fam.contains(g)) return {false, std::make_pair(g, f)};
    }
  }
  return {};
}

}  // namespace matchlab
