// matchlab: command line front end for the library.
// Exit codes: 0 success, 1 a checked assertion failed, 2 usage or input error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchlab/acceptance.hpp"
#include "matchlab/audit.hpp"
#include "matchlab/compression.hpp"
#include "matchlab/error.hpp"
#include "matchlab/extremal.hpp"
#include "matchlab/hyp_io.hpp"
#include "matchlab/matching.hpp"
#include "matchlab/search.hpp"
#include "matchlab/structure.hpp"
#include "matchlab/trace.hpp"

using json = nlohmann::ordered_json;
using namespace matchlab;

namespace {

struct AssertionFailed {};

json set_json(VertexSet v) { return v.elements(); }

json sets_json(const std::vector<VertexSet>& sets) {
  json a = json::array();
  for (VertexSet v : sets) a.push_back(set_json(v));
  return a;
}

json family_json(const Family& f) {
  json j;
  j["n"] = f.n();
  if (f.uniform_k()) j["k"] = *f.uniform_k();
  j["size"] = f.size();
  j["members"] = sets_json(f.members());
  return j;
}

std::string frac(const Rational& r) { return to_fraction_string(r); }

Family load(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_hyp(text);
  }
  return read_hyp(path);
}

// ---- output ---------------------------------------------------------------

std::string cell(const json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (v.is_null()) return "";
  std::string d = v.dump();
  if (v.is_structured()) return cell(json(d));
  return d;
}

void write_csv(std::ostream& out, const json& j) {
  json rows = j;
  // A single object with one array-of-objects field: emit that array.
  if (j.is_object()) {
    for (auto& [key, val] : j.items()) {
      if (val.is_array() && !val.empty() && val.front().is_object()) {
        rows = val;
        break;
      }
    }
  }
  if (!rows.is_array()) rows = json::array({rows});
  if (rows.empty()) return;
  std::vector<std::string> cols;
  for (auto& [key, val] : rows.front().items()) cols.push_back(key);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << (i ? "," : "") << (row.contains(cols[i]) ? cell(row[cols[i]]) : "");
    }
    out << "\n";
  }
}

void write_text(std::ostream& out, const json& j, const std::string& indent = "") {
  if (j.is_object()) {
    for (auto& [key, val] : j.items()) {
      if (val.is_structured() && !(val.is_array() && (val.empty() || !val.front().is_structured()))) {
        out << indent << key << ":\n";
        write_text(out, val, indent + "  ");
      } else {
        out << indent << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        write_text(out, v, indent + "  ");
        out << indent << "--\n";
      } else {
        out << indent << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Output {
  std::string format = "json";

  void emit(const json& j) const {
    if (format == "csv") {
      write_csv(std::cout, j);
    } else if (format == "text") {
      write_text(std::cout, j);
    } else {
      std::cout << j.dump() << "\n";
    }
  }
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw Error("bad index list: " + text);
    out.push_back(v);
  }
  return out;
}

json property_json(const std::vector<PropertyCheck>& checks) {
  json a = json::array();
  for (const auto& c : checks) {
    a.push_back({{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}, {"detail", c.detail}});
  }
  return a;
}

bool all_hold(const std::vector<PropertyCheck>& checks) {
  for (const auto& c : checks) {
    if (c.applicable && !c.holds) return false;
  }
  return true;
}

json record_json(const InequalityRecord& r, PivotMode mode) {
  json j;
  j["id"] = r.id;
  j["anchor"] = r.anchor;
  j["s"] = r.s;
  j["n"] = r.n;
  j["mode"] = to_string(mode);
  j["g2"] = r.g2 ? json(*r.g2) : json(nullptr);
  j["lhs"] = frac(r.lhs);
  j["rhs"] = frac(r.rhs);
  j["margin"] = frac(r.margin);
  j["holds"] = r.holds;
  j["expected"] = to_string(r.expected);
  j["agrees"] = r.agrees();
  return j;
}

json restriction_json(const Restriction& r) {
  json j;
  j["R"] = r.R;
  j["X"] = set_json(r.X);
  json members = json::array();
  for (const auto& m : r.members) {
    json e{{"set", set_json(m.set)}, {"width", m.width}};
    e["weight"] = m.weight ? json(frac(*m.weight)) : json(nullptr);
    members.push_back(e);
  }
  j["members"] = members;
  bool all_weighted = !r.members.empty();
  for (const auto& m : r.members) all_weighted = all_weighted && m.weight.has_value();
  if (all_weighted) j["total_weight"] = frac(r.total_weight());
  return j;
}

json triple_json(const TripleProfile& p) {
  json j;
  j["R"] = p.R;
  j["columns"] = sets_json(p.columns);
  j["normal"] = p.normal;
  j["fat"] = p.fat;
  j["slightly_fat"] = p.slightly_fat;
  j["robust"] = p.robust;
  j["robust_witness"] = sets_json(p.robust_witness);
  j["sufficiently_fat"] = p.sufficiently_fat;
  j["Q"] = p.Q;
  j["g1"] = p.g1;
  j["g2"] = p.g2;
  j["pair_g"] = p.pair_g;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matchlab: exact tools for set families with bounded matching number"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  Output out;
  bool suite = false;
  app.add_option("--format", out.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_flag("--seed-paper-suite", suite, "run the acceptance battery and print a pass/fail table");

  int n = 0, k = 0, s = 0, ell = 1;
  std::string file, out_path, R_text, pair_text, triple_text, checkpoint;
  int threads = 0;

  auto* nu = app.add_subcommand("nu", "matching number with a witness");
  nu->add_option("file", file, ".hyp file, - for stdin")->required();

  auto* stable = app.add_subcommand("stable", "check stability under the dominance order");
  stable->add_option("file", file)->required();

  auto* stabilize_cmd = app.add_subcommand("stabilize", "shift until stable");
  stabilize_cmd->add_option("file", file)->required();
  stabilize_cmd->add_option("--out", out_path, "write the stable family as .hyp");

  auto* build = app.add_subcommand("build-a", "build A_ell(n)");
  build->add_option("--n", n)->required();
  build->add_option("--k", k)->required();
  build->add_option("--s", s)->required();
  build->add_option("--ell", ell)->required();
  build->add_option("--out", out_path, "write the family as .hyp");

  auto add_kS = [&](CLI::App* c) {
    c->add_option("file", file)->required();
    c->add_option("--k", k)->required();
    c->add_option("--s", s)->required();
  };
  auto* trace_cmd = app.add_subcommand("trace", "trace family on [ks+k-1]");
  add_kS(trace_cmd);
  auto* partition = app.add_subcommand("partition", "base partition D, F_1..F_s");
  add_kS(partition);
  auto* restrict_cmd = app.add_subcommand("restrict", "restriction H(R) with widths and weights");
  add_kS(restrict_cmd);
  restrict_cmd->add_option("--R", R_text, "comma separated block indices")->required();
  bool bound = false;
  restrict_cmd->add_flag("--bound", bound, "compare the weight sum with max f(ell)");
  bool no_avoid_check = false;
  restrict_cmd->add_flag("--relaxed", no_avoid_check, "skip the nu(F avoiding 1) = s hypothesis");

  auto* lemma = app.add_subcommand("counting-lemma", "|F| against the restriction weight sum");
  add_kS(lemma);

  auto* profile = app.add_subcommand("profile", "pair and triple structure (k = 3)");
  add_kS(profile);
  profile->add_option("--pair", pair_text, "u,v");
  profile->add_option("--triple", triple_text, "u,v,z");

  auto* search = app.add_subcommand("search", "exact maximum over stable families");
  bool avoid_one = false, allow_large = false, witness = false, stats = false;
  int split_depth = 12;
  search->add_option("--n", n)->required();
  search->add_option("--k", k)->required();
  search->add_option("--s", s)->required();
  search->add_flag("--avoid-one", avoid_one, "require nu of the part avoiding vertex 1 to be s");
  search->add_flag("--allow-large", allow_large, "permit s = 3 (needs --checkpoint)");
  search->add_option("--checkpoint", checkpoint, "resumable state file");
  search->add_option("--threads", threads, "worker threads (default MATCHLAB_THREADS or cores)");
  search->add_option("--split-depth", split_depth)->capture_default_str();
  search->add_flag("--witness", witness, "include the witness family");
  search->add_flag("--stats", stats, "include node counts (schedule dependent)");

  auto* saturate_cmd = app.add_subcommand("saturate", "complete to a maximal family with nu <= s");
  saturate_cmd->add_option("file", file)->required();
  saturate_cmd->add_option("--s", s)->required();
  saturate_cmd->add_option("--out", out_path);

  auto* audit = app.add_subcommand("audit", "exact audit of the loss/gain inequalities");
  int s_min = 3, s_max = 10;
  std::string mode = "n0";
  audit->add_option("--s-min", s_min)->capture_default_str();
  audit->add_option("--s-max", s_max)->capture_default_str();
  audit->add_option("--mode", mode)->check(CLI::IsMember({"n0", "n0-1", "both"}))->capture_default_str();
  bool dominance = false, fort = false;
  audit->add_flag("--dominance", dominance, "also check A_ell dominance for n in [3s+2,4s]");
  audit->add_flag("--fort", fort, "also check the vertex-removal inequality and its supporting estimates");

  auto* pivotal_cmd = app.add_subcommand("pivotal", "pivotal number n0(s,k)");
  pivotal_cmd->add_option("--s", s)->required();
  pivotal_cmd->add_option("--k", k)->required();
  int bounds_max = 0;
  pivotal_cmd->add_option("--check-bounds", bounds_max, "check the pivotal bounds for s = 1..N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (suite) {
      AcceptanceOptions opts;
      bool ok = true;
      json rows = json::array();
      for (int id = 1; id <= 10; ++id) {
        CriterionResult r = run_criterion(id, opts);
        ok = ok && r.verdict != Verdict::Fail;
        if (out.format == "text") {
          std::cout << format_line(r) << std::endl;
        } else {
          rows.push_back({{"criterion", r.id}, {"verdict", to_string(r.verdict)}, {"title", r.title},
                          {"detail", r.detail}});
        }
      }
      if (out.format != "text") out.emit(json{{"criteria", rows}});
      return ok ? 0 : 1;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    }

    if (*nu) {
      Family f = load(file);
      MatchingResult r = matching_number(f);
      out.emit({{"nu", r.size}, {"witness", sets_json(r.witness.edges)}});
    } else if (*stable) {
      Family f = load(file);
      StabilityReport r = is_stable(f);
      json j{{"stable", r.stable}};
      if (r.counterexample) {
        j["missing"] = set_json(r.counterexample->first);
        j["member"] = set_json(r.counterexample->second);
      }
      out.emit(j);
    } else if (*stabilize_cmd) {
      StabilizeResult r = stabilize(load(file));
      if (!out_path.empty()) write_hyp(out_path, r.family);
      json log = json::array();
      for (const auto& st : r.log.steps) log.push_back({{"i", st.i}, {"j", st.j}, {"moved", st.moved_count}});
      if (out.format == "text" && out_path.empty()) {
        std::cout << format_hyp(r.family);
      } else {
        out.emit({{"family", family_json(r.family)}, {"log", log}});
      }
    } else if (*build) {
      Family f = build_A({n, k, s, ell});
      if (!out_path.empty()) write_hyp(out_path, f);
      if (out.format == "text" && out_path.empty()) {
        std::cout << format_hyp(f);
      } else {
        out.emit({{"n", n}, {"k", k}, {"s", s}, {"ell", ell}, {"size", f.size()}, {"members", sets_json(f.members())}});
      }
    } else if (*trace_cmd) {
      TraceFamily t = trace(load(file), k, s);
      json j{{"ground", t.ground()}, {"size", t.size()}, {"size_formula", size_formula(t)},
             {"members", sets_json(t.base().members())}};
      out.emit(j);
    } else if (*partition) {
      BasePartition bp = base_partition(load(file), k, s);
      out.emit({{"D", set_json(bp.D)}, {"blocks", sets_json(bp.blocks)}});
    } else if (*restrict_cmd) {
      Family f = load(file);
      std::vector<int> R = parse_list(R_text);
      if (bound) {
        WeightBoundReport r = weight_bound_check(f, k, s, R, !no_avoid_check);
        json j{{"n", r.n},         {"k", r.k},       {"s", r.s},
               {"R", r.R},         {"value", frac(r.value)}, {"bound", frac(r.bound)},
               {"best_ell", r.best_ell}, {"holds", r.holds}};
        out.emit(j);
        if (!r.holds) throw AssertionFailed{};
      } else {
        TraceFamily t = trace(f, k, s);
        BasePartition bp = base_partition(t);
        out.emit(restriction_json(restriction(t, bp, R, static_cast<int>(R.size()) <= k && s >= k)));
      }
    } else if (*lemma) {
      CountingLemmaReport r = counting_lemma_check(load(file), k, s);
      json Rs = json::array();
      for (VertexSet v : subsets_of_size(VertexSet::interval(1, s), k)) Rs.push_back(v.elements());
      out.emit({{"n", r.n},
                {"k", r.k},
                {"s", r.s},
                {"R", Rs},
                {"lhs", r.lhs},
                {"rhs_num", numerator_i64(r.rhs)},
                {"rhs_den", denominator_i64(r.rhs)},
                {"holds", r.equal}});
      if (!r.equal) throw AssertionFailed{};
    } else if (*profile) {
      Family f = load(file);
      TraceFamily t = trace(f, k, s);
      BasePartition bp = base_partition(t);
      if (!pair_text.empty()) {
        std::vector<int> uv = parse_list(pair_text);
        if (uv.size() != 2) throw Error("--pair needs two indices");
        PairProfile p = classify_pair(t, bp, uv[0], uv[1]);
        out.emit({{"u", p.u}, {"v", p.v}, {"g2_members", sets_json(p.g2_members)}, {"case", to_string(p.pair_case)}});
      } else if (!triple_text.empty()) {
        TripleProfile p = triple_profile(t, bp, parse_list(triple_text));
        json j = triple_json(p);
        MissingCounts m = missing_counts(t, bp, p.R);
        j["missing"] = {{"missing_w3_in_BC", m.missing_w3_in_BC},
                        {"missing_w2_in_BC", m.missing_w2_in_BC},
                        {"transversals_missing", m.transversals_missing},
                        {"missing_w2_in_blocks", m.missing_w2_in_blocks},
                        {"width3_present", m.width3_present}};
        out.emit(j);
      } else {
        json triples = json::array();
        if (k == 3 && s >= 3) {
          for (VertexSet R : subsets_of_size(VertexSet::interval(1, s), 3)) {
            triples.push_back(triple_json(triple_profile(t, bp, R.elements())));
          }
        }
        auto checks = check_trace_properties(f, k, s);
        auto more = check_structure_properties(f, k, s);
        checks.insert(checks.end(), more.begin(), more.end());
        out.emit({{"D", set_json(bp.D)}, {"blocks", sets_json(bp.blocks)}, {"triples", triples},
                  {"checks", property_json(checks)}});
        if (!all_hold(checks)) throw AssertionFailed{};
      }
    } else if (*search) {
      SearchOptions opts;
      opts.avoid_one = avoid_one;
      opts.allow_large = allow_large;
      if (!checkpoint.empty()) opts.checkpoint = checkpoint;
      opts.threads = threads > 0 ? threads : default_threads();
      opts.split_depth = split_depth;
      SearchResult r = max_stable(n, k, s, opts);
      json j{{"n", r.n}, {"k", r.k}, {"s", r.s}, {"max_size", r.max_size}, {"matched", to_string(r.matched)}};
      if (stats) {
        j["nodes_explored"] = r.nodes_explored;
        j["subproblems"] = r.subproblems;
      }
      if (witness) {
        j["witness_trace"] = sets_json(r.witness_trace.members());
        j["witness"] = family_json(r.witness);
      }
      out.emit(j);
    } else if (*saturate_cmd) {
      Family f = saturate(load(file), s);
      if (!out_path.empty()) write_hyp(out_path, f);
      if (out.format == "text" && out_path.empty()) {
        std::cout << format_hyp(f);
      } else {
        out.emit(family_json(f));
      }
    } else if (*audit) {
      json records = json::array();
      bool agree = true;
      std::vector<PivotMode> modes;
      if (mode != "n0-1") modes.push_back(PivotMode::N0);
      if (mode != "n0") modes.push_back(PivotMode::N0Minus1);
      json monotone = json::array();
      for (PivotMode m : modes) {
        auto rs = audit_catalog(s_min, s_max, m);
        for (const auto& r : rs) {
          records.push_back(record_json(r, m));
          agree = agree && r.agrees();
        }
        for (const auto& v : check_monotonicity(rs)) {
          monotone.push_back({{"id", v.id},
                              {"g2", v.g2 ? json(*v.g2) : json(nullptr)},
                              {"s", v.s},
                              {"margin", frac(v.margin)},
                              {"next_margin", frac(v.next_margin)},
                              {"mode", to_string(m)}});
        }
      }
      if (fort) {
        for (int ss = s_min; ss <= s_max; ++ss) {
          for (int kk = 2; kk <= 3; ++kk) {
            for (const auto& r : fort_details(kk, ss)) {
              records.push_back(record_json(r, PivotMode::N0));
              agree = agree && r.agrees();
            }
            InequalityRecord r = check_fort(kk * (ss + 1), kk, ss);
            records.push_back(record_json(r, PivotMode::N0));
            agree = agree && r.agrees();
          }
        }
      }
      json j{{"records", records}};
      if (out.format != "csv") j["monotonicity_findings"] = monotone;
      if (dominance) {
        bool dom = true;
        for (int ss = s_min; ss <= s_max; ++ss) {
          for (int nn = 3 * ss + 2; nn <= 4 * ss; ++nn) dom = dom && check_dominance(3, ss, nn);
        }
        if (out.format != "csv") j["dominance"] = dom;
        agree = agree && dom;
      }
      out.emit(j);
      if (!agree) throw AssertionFailed{};
    } else if (*pivotal_cmd) {
      int n0 = pivotal(s, k);
      if (bounds_max > 0) {
        PivotalBoundsReport rep = check_pivotal_bounds(bounds_max, k);
        out.emit({{"s", s},
                  {"k", k},
                  {"pivotal", n0},
                  {"bounds_hold", rep.holds},
                  {"strict_failures", rep.strict_failures},
                  {"bound_failures", rep.bound_failures}});
        if (!rep.holds) throw AssertionFailed{};
      } else if (out.format == "text") {
        std::cout << n0 << "\n";
      } else {
        out.emit({{"s", s}, {"k", k}, {"pivotal", n0}});
      }
    }
  } catch (const AssertionFailed&) {
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
