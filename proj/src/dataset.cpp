#include "axp/dataset.hpp"

#include <sstream>

namespace axp {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t\r");
    std::size_t e = tok.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : tok.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

Dataset Dataset::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty dataset file");
  Dataset ds;
  ds.space = FeatureSpace(split_csv(line));
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto cells = split_csv(line);
    if (static_cast<int>(cells.size()) != ds.space.size()) {
      throw ParseError("dataset line " + std::to_string(lineno) +
                       ": wrong number of values");
    }
    Individual x;
    for (int f = 0; f < ds.space.size(); ++f) {
      if (cells[f] != "0" && cells[f] != "1") {
        throw ParseError("dataset line " + std::to_string(lineno) +
                         ": values must be 0 or 1");
      }
      if (cells[f] == "1") x = x.with(f, true);
    }
    ds.rows.push_back(x);
  }
  return ds;
}

std::string Dataset::serialize() const {
  std::ostringstream os;
  for (int f = 0; f < space.size(); ++f) {
    if (f) os << ',';
    os << space.name(f);
  }
  os << '\n';
  for (Individual x : rows) {
    for (int f = 0; f < space.size(); ++f) {
      if (f) os << ',';
      os << (x.value(f) ? '1' : '0');
    }
    os << '\n';
  }
  return os.str();
}

Individual parse_individual(const std::string& text, const FeatureSpace& space) {
  Individual x;
  std::uint32_t seen = 0;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("expected NAME=0/1: " + tok);
    std::string name = tok.substr(0, eq);
    std::string val = tok.substr(eq + 1);
    auto strip = [](std::string& s) {
      std::size_t b = s.find_first_not_of(" \t");
      std::size_t e = s.find_last_not_of(" \t");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    strip(name);
    strip(val);
    int f = space.require(name);
    if (val != "0" && val != "1") throw ParseError("value must be 0 or 1: " + tok);
    if ((seen >> f) & 1u) throw ParseError("duplicate feature: " + name);
    seen |= 1u << f;
    if (val == "1") x = x.with(f, true);
  }
  std::uint32_t full = space.size() >= 32 ? ~0u : ((1u << space.size()) - 1u);
  if (seen != full) throw ParseError("individual must assign every feature");
  return x;
}

std::string format_individual(Individual x, const FeatureSpace& space) {
  std::ostringstream os;
  for (int f = 0; f < space.size(); ++f) {
    if (f) os << ',';
    os << space.name(f) << '=' << (x.value(f) ? '1' : '0');
  }
  return os.str();
}

}  // namespace axp
