#include "matchlab/hyp_io.hpp"

#include <fstream>
#include <sstream>

#include "matchlab/error.hpp"

namespace matchlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_ints(std::string_view line, int lineno) {
  std::vector<int> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error("hyp line " + std::to_string(lineno) + ": bad token '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Family parse_hyp(std::string_view text) {
  std::optional<int> n;
  std::vector<VertexSet> members;
  int lineno = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::vector<int> vals = parse_ints(line, lineno);
    if (!n) {
      if (vals.size() != 1 || vals[0] < 0 || vals[0] > VertexSet::kMaxVertex) {
        throw Error("hyp line " + std::to_string(lineno) + ": expected ground set size");
      }
      n = vals[0];
      continue;
    }
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] < 1 || vals[i] > *n) throw Error("hyp line " + std::to_string(lineno) + ": vertex out of range");
      if (i && vals[i] <= vals[i - 1]) throw Error("hyp line " + std::to_string(lineno) + ": vertices not increasing");
    }
    members.push_back(VertexSet::of(vals));
  }
  if (!n) throw Error("hyp: missing ground set size");
  return Family(*n, std::move(members));
}

std::string format_hyp(const Family& fam) {
  std::string out = std::to_string(fam.n()) + "\n";
  for (VertexSet s : fam) {
    bool first = true;
    for (int v : s.elements()) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

Family read_hyp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_hyp(buf.str());
}

void write_hyp(const std::filesystem::path& path, const Family& fam) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << format_hyp(fam);
}

}  // namespace matchlab
