#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace matchlab {

enum class Verdict { Pass, Fail, NotReproducible };
std::string to_string(Verdict v);

struct CriterionResult {
  int id = 0;
  std::string title;
  Verdict verdict = Verdict::Fail;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  int corpus_size = 50;          // random saturated stable families, k = s = 3
  int shift_families = 1000;     // random families for the shifting checks
  std::uint64_t seed = 20240601;
  int audit_s_max = 200;
  int threads = 0;
};

// Runs one criterion (1..10).
CriterionResult run_criterion(int id, const AcceptanceOptions& opts = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

// "PASS  3  title  (detail, 1.2s)"
std::string format_line(const CriterionResult& r);
void print_table(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace matchlab
