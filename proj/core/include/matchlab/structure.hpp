#pragma once

#include <string>
#include <vector>

#include "matchlab/trace.hpp"

namespace matchlab {

enum class PairCase { Small, CaseI, CaseII, CaseIII, Unmatched };
std::string to_string(PairCase c);

// Two-element trace members of width 2 over the blocks u < v, and which of
// the three admissible shapes they take.
struct PairProfile {
  int u = 0;
  int v = 0;
  std::vector<VertexSet> g2_members;
  PairCase pair_case = PairCase::Small;
};

// k = 3 and d_1 = 1 required; also the single-block side conditions
// ((a,c) and (b,c) absent, (a,b) present forces (1,c) absent) on both blocks.
PairProfile classify_pair(const TraceFamily& t, const BasePartition& bp, int u, int v);

// Sets meeting every block of R once: k^k of them.
std::vector<VertexSet> transversals(const BasePartition& bp, const std::vector<int>& R);
// Transversals that also meet every column T_q once: k! of them.
std::vector<VertexSet> diagonals(const BasePartition& bp, const std::vector<int>& R);
// Transversals T whose position in each block is at least the diagonal's.
int blockwise_dominating_count(const BasePartition& bp, const std::vector<int>& R, VertexSet diagonal);
// Transversals T with diagonal << T.
int dominating_transversal_count(const BasePartition& bp, const std::vector<int>& R, VertexSet diagonal);

struct TripleProfile {
  std::vector<int> R;
  std::vector<VertexSet> columns;  // T_1..T_k
  bool normal = false;
  bool fat = false;
  bool slightly_fat = false;
  bool robust = false;
  std::vector<VertexSet> robust_witness;  // first k disjoint (k-1)-sets found
  bool sufficiently_fat = false;
  std::vector<int> Q;
  int g2 = 0;
  int g1 = 0;
  std::vector<int> pair_g;  // g(u,v) for the pairs of R in lexicographic order
};

TripleProfile triple_profile(const TraceFamily& t, const BasePartition& bp, const std::vector<int>& R);

struct MissingCounts {
  int missing_w3_in_BC = 0;       // of the 8 width-3 subsets of B+C
  int missing_w2_in_BC = 0;       // of the 12 width-2 3-subsets of B+C
  int transversals_missing = 0;   // of the 27
  int missing_w2_in_blocks = 0;   // of the 54 width-2 3-subsets of the block union
  int width3_present = 0;         // width-3 members of H(R)
};

MissingCounts missing_counts(const TraceFamily& t, const BasePartition& bp, const std::vector<int>& R);

// Every k disjoint (k-1)-sets of H(R) inside the block union, in canonical order.
std::vector<std::vector<VertexSet>> robust_witnesses(const TraceFamily& t, const BasePartition& bp,
                                                     const std::vector<int>& R);

// The pair and triple facts for k = 3, asserted only where their hypotheses
// (stable, maximal, nu = s, nu of the part avoiding 1 = s, d_1 = 1) hold.
std::vector<PropertyCheck> check_structure_properties(const Family& fam, int k, int s);

}  // namespace matchlab
