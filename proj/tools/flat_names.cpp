#include "flat_names.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "mkl/error.hpp"

namespace kl_cli {

using mkl::Error;
using mkl::ErrorKind;
using mkl::Flat;
using mkl::FlatLattice;

namespace {

long parse_index(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorKind::ParseError, "bad element '" + s + "' in flat");
  }
  return std::stol(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

FlatLattice::Index parse_flat(const FlatLattice& lat, const mkl::MatroidSpec& spec, const std::string& text) {
  if (text == "bottom") return lat.bottom();
  if (text == "top") return lat.top();
  if (text.find('|') != std::string::npos) {
    const auto* braid = std::get_if<mkl::BraidSpec>(&spec);
    if (!braid) throw Error(ErrorKind::ParseError, "partition notation needs a braid spec");
    std::vector<std::vector<long>> blocks;
    for (const auto& part : split(text, '|')) {
      if (part.empty()) continue;
      std::vector<long> block;
      // Commas separate vertices when present; otherwise each digit is one.
      if (part.find(',') != std::string::npos) {
        for (const auto& v : split(part, ',')) block.push_back(parse_index(v) - 1);
      } else {
        for (char c : part) block.push_back(parse_index(std::string(1, c)) - 1);
      }
      for (long v : block) {
        if (v < 0 || v >= braid->n) throw Error(ErrorKind::ParseError, "vertex out of range in '" + text + "'");
      }
      blocks.push_back(std::move(block));
    }
    // Vertices left out are singletons.
    return lat.index_of(mkl::braid_flat(braid->n, blocks));
  }
  Flat f(lat.ground_size());
  if (!text.empty()) {
    for (const auto& e : split(text, ',')) {
      const long v = parse_index(e);
      if (static_cast<std::size_t>(v) >= lat.ground_size()) {
        throw Error(ErrorKind::FlatNotInLattice, "element " + e + " outside the ground set");
      }
      f.insert(static_cast<std::size_t>(v));
    }
  }
  return lat.index_of(f);
}

std::string flat_name(const FlatLattice& lat, FlatLattice::Index idx) {
  std::ostringstream os;
  const auto& family = lat.family();
  if (family && family->kind == mkl::FamilyKind::Braid) {
    const auto labels = mkl::braid_blocks(family->n, lat.flat(idx));
    std::map<int, std::vector<std::size_t>> blocks;
    for (std::size_t v = 0; v < labels.size(); ++v) blocks[labels[v]].push_back(v + 1);
    const bool wide = family->n >= 10;
    bool first_block = true;
    for (const auto& [label, verts] : blocks) {
      os << (first_block ? "" : "|");
      first_block = false;
      for (std::size_t i = 0; i < verts.size(); ++i) os << (wide && i > 0 ? "," : "") << verts[i];
    }
    return os.str();
  }
  os << '{';
  const auto members = lat.flat(idx).members();
  for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
  os << '}';
  return os.str();
}

}  // namespace kl_cli
