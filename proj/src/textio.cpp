#include "ortholat/textio.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ortholat/rational.hpp"

namespace ortholat {

std::string rat_str(const Rat& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r) << "/"
      << boost::multiprecision::denominator(r);
  return out.str();
}

namespace {

bool is_integer_token(std::string_view t) {
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rat rat_parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num =
      slash == std::string_view::npos ? text : text.substr(0, slash);
  if (!is_integer_token(num))
    fail(Err::ParseError, "not a rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rat(Int(std::string(num)));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(den))
    fail(Err::ParseError, "not a rational: '" + std::string(text) + "'");
  Int d{std::string(den)};
  if (d == 0)
    fail(Err::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rat(Int(std::string(num)), d);
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  fail(Err::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

LatticeSource parse_lattice_source(const std::string& text) {
  LatticeSource src;
  std::set<std::string> seen_elems;
  std::set<std::pair<std::string, std::string>> seen_covers;
  std::map<std::string, std::string> ortho_of;
  // ids used in cover/ortho lines, remembered with their line for the check
  // against the element list once the whole file is read
  std::vector<std::pair<std::string, std::size_t>> used;

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  bool have_end = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    auto toks = tokens_of(raw);
    if (toks.empty()) continue;
    if (have_end)
      parse_fail(line_no, "content after 'end'");
    if (!have_header) {
      if (toks[0] != "lattice" || toks.size() != 2)
        parse_fail(line_no, "expected 'lattice <name>'");
      src.name = toks[1];
      have_header = true;
      continue;
    }
    const std::string& kw = toks[0];
    if (kw == "elem") {
      if (toks.size() < 2) parse_fail(line_no, "'elem' needs at least one id");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!seen_elems.insert(toks[i]).second)
          fail(Err::DuplicatePair, "line " + std::to_string(line_no) +
                                       ": element '" + toks[i] +
                                       "' declared twice");
        src.elements.push_back(toks[i]);
      }
    } else if (kw == "cover") {
      if (toks.size() != 3) parse_fail(line_no, "expected 'cover <a> <b>'");
      if (toks[1] == toks[2])
        parse_fail(line_no, "element cannot cover itself");
      if (!seen_covers.insert({toks[1], toks[2]}).second)
        fail(Err::DuplicatePair, "line " + std::to_string(line_no) +
                                     ": cover '" + toks[1] + " " + toks[2] +
                                     "' restated");
      src.covers.push_back({toks[1], toks[2]});
      used.push_back({toks[1], line_no});
      used.push_back({toks[2], line_no});
    } else if (kw == "ortho") {
      if (toks.size() != 3) parse_fail(line_no, "expected 'ortho <a> <b>'");
      std::vector<std::pair<std::string, std::string>> dirs{{toks[1], toks[2]}};
      if (toks[1] != toks[2]) dirs.push_back({toks[2], toks[1]});
      for (const auto& [x, y] : dirs) {
        auto it = ortho_of.find(x);
        if (it == ortho_of.end()) {
          ortho_of[x] = y;
        } else if (it->second == y) {
          fail(Err::DuplicatePair, "line " + std::to_string(line_no) +
                                       ": ortho pair '" + toks[1] + " " +
                                       toks[2] + "' restated");
        } else {
          fail(Err::IncompleteInvolution,
               "line " + std::to_string(line_no) + ": '" + x +
                   "' already paired with '" + it->second + "'");
        }
      }
      src.ortho.push_back({toks[1], toks[2]});
      used.push_back({toks[1], line_no});
      used.push_back({toks[2], line_no});
    } else if (kw == "end") {
      if (toks.size() != 1) parse_fail(line_no, "'end' takes no arguments");
      have_end = true;
    } else {
      parse_fail(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (!have_header) parse_fail(line_no, "empty file: expected 'lattice <name>'");
  if (!have_end) parse_fail(line_no, "missing 'end'");
  if (src.elements.empty()) parse_fail(line_no, "no elements declared");
  for (const auto& [id, at] : used)
    if (!seen_elems.count(id))
      parse_fail(at, "unknown element '" + id + "'");
  return src;
}

ParsedLattice build_lattice(const LatticeSource& src) {
  ParsedLattice out;
  out.name = src.name;
  out.lattice = Lattice::from_covers(src.elements, src.covers);
  if (!src.ortho.empty())
    out.ortho = OrthoLattice::attach(out.lattice, src.ortho);
  return out;
}

ParsedLattice parse_lattice_file(const std::string& text) {
  return build_lattice(parse_lattice_source(text));
}

std::string serialize_lattice(const std::string& name, const Lattice& L,
                              const OrthoLattice* ol) {
  std::ostringstream out;
  out << "lattice " << name << "\n";
  for (Id a = 0; a < L.size(); ++a) out << "elem " << L.name(a) << "\n";
  for (auto [a, b] : L.cover_pairs())
    out << "cover " << L.name(a) << " " << L.name(b) << "\n";
  if (ol) {
    for (Id a = 0; a < L.size(); ++a) {
      Id b = ol->perp(a);
      if (a <= b) out << "ortho " << L.name(a) << " " << L.name(b) << "\n";
    }
  }
  out << "end\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ortholat
