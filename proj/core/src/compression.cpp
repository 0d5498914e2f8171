#include "matchlab/compression.hpp"

#include "matchlab/error.hpp"

namespace matchlab {

Family shift(const Family& fam, int i, int j, int& moved) {
  if (i >= j) throw Error("invalid shift direction");
  if (i < 1 || j > fam.n()) throw Error("shift vertices outside ground set");
  moved = 0;
  std::vector<VertexSet> out;
  out.reserve(fam.size());
  for (VertexSet f : fam) {
    if (f.contains(j) && !f.contains(i)) {
      VertexSet g = f.without(j).with(i);
      if (!fam.contains(g)) {
        out.push_back(g);
        ++moved;
        continue;
      }
    }
    out.push_back(f);
  }
  if (moved == 0) return fam;
  return fam.uniform_k() ? Family(fam.n(), std::move(out), fam.uniform_k()) : Family::mixed(fam.n(), std::move(out));
}

Family shift(const Family& fam, int i, int j) {
  int moved = 0;
  return shift(fam, i, j, moved);
}

StabilizeResult stabilize(const Family& fam) {
  StabilizeResult res{fam, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= fam.n() && !changed; ++i) {
      for (int j = i + 1; j <= fam.n() && !changed; ++j) {
        int moved = 0;
        Family next = shift(res.family, i, j, moved);
        if (moved > 0) {
          res.family = std::move(next);
          res.log.steps.push_back({i, j, moved});
          changed = true;
        }
      }
    }
  }
  return res;
}

std::int64_t potential(const Family& fam) {
  std::int64_t total = 0;
  for (VertexSet f : fam) {
    for (int x : f.elements()) total += x;
  }
  return total;
}

}  // namespace matchlab
