#pragma once

#include <cstdint>

#include "matchlab/family.hpp"

namespace matchlab {

struct ExtremalSpec {
  int n = 0;
  int k = 0;
  int s = 0;
  int ell = 1;
};

// Throws "parameters out of range" unless 1 <= ell <= k, s >= 1 and n >= ks.
void validate(const ExtremalSpec& spec);

// A_ell(n) = { F in C([n],k) : |F cap [ell*s+ell-1]| >= ell }.
Family build_A(const ExtremalSpec& spec);
// |A_ell(n)| by summation over the intersection size.
std::int64_t size_A(const ExtremalSpec& spec);

// Least n >= ks+k-1 with |A_k| <= |A_1(n)|.
int pivotal(int s, int k);

// C(n,2) - C(n-s,2), valid for n >= 3s.
std::int64_t erdos_gallai_max(int n, int s);

// s * C(n-1,k-1), stated for n >= k(s+1).
std::int64_t general_upper_bound(int n, int k, int s);

}  // namespace matchlab
