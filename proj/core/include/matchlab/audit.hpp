#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchlab/combinatorics.hpp"

namespace matchlab {

// What the source argument asserts about an inequality at given parameters.
enum class Expectation { Holds, HoldsStrict, HoldsWithEquality, Fails, Unclaimed };
std::string to_string(Expectation e);

enum class PivotMode { N0, N0Minus1 };
std::string to_string(PivotMode m);

struct InequalityRecord {
  std::string id;
  std::string anchor;  // short description of the step being checked
  int s = 0;
  int n = 0;
  int k = 3;
  std::optional<int> g2;
  Rational lhs;
  Rational rhs;
  Rational margin;  // rhs - lhs
  bool holds = false;  // lhs <= rhs
  Expectation expected = Expectation::Unclaimed;
  bool monotone = false;  // margin is claimed non-decreasing in s

  bool agrees() const;
};

InequalityRecord make_record(std::string id, std::string anchor, int s, int n, int k, std::optional<int> g2,
                             Rational lhs, Rational rhs, Expectation expected, bool monotone = false);

// |A_ell(n)| <= max(|A_1(n)|, |A_k|) for every ell.
bool check_dominance(int k, int s, int n);

// max{C(ks+k-1,k), C(n,k)-C(n-s,k)} >= max{C(ks-1,k), C(n-1,k)-C(n-s,k)} + C(n-1,k-1).
InequalityRecord check_fort(int n, int k, int s);

// The supporting estimates behind the previous inequality and the pivotal
// bound, for one (k, s).
std::vector<InequalityRecord> fort_details(int k, int s);

// The k = 3 loss/gain inequalities, evaluated at n = n0(s,3) or n0(s,3)-1 for
// every s in [s_min, s_max]; ordered by (id, s, g2).
std::vector<InequalityRecord> audit_catalog(int s_min, int s_max, PivotMode mode);

struct MonotonicityViolation {
  std::string id;
  std::optional<int> g2;
  int s = 0;
  Rational margin;
  Rational next_margin;
};

// For monotone-flagged entries: margin(s+1) >= margin(s) on consecutive s.
std::vector<MonotonicityViolation> check_monotonicity(const std::vector<InequalityRecord>& records);

struct PivotalBoundsReport {
  bool holds = true;
  std::vector<int> strict_failures;  // s with n0(s,k) >= (k+1)s
  std::vector<int> bound_failures;   // s with n0(s,k) > floor((k+1/2)s + k)
};

PivotalBoundsReport check_pivotal_bounds(int s_max, int k);

}  // namespace matchlab
