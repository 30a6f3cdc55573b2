#include "satbound/ideal_file.hpp"

#include <sstream>

namespace satbound {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Ideal parse_ideal_file(const std::string& text,
                       const std::optional<Field>& field_override) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  RingPtr ring;
  bool in_gens = false;
  std::vector<Polynomial> gens;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (!ring) {
      std::istringstream ls(line);
      std::string kw, chr, vars;
      ls >> kw >> chr >> vars;
      if (kw != "ring" || chr.empty() || vars.empty())
        throw IdealFileError("expected 'ring <characteristic> <var,var,...>'",
                             lineno, 1);
      std::uint32_t p = 0;
      try {
        p = static_cast<std::uint32_t>(std::stoul(chr));
      } catch (const std::exception&) {
        throw IdealFileError("characteristic must be a number", lineno,
                             static_cast<int>(line.find(chr)) + 1);
      }
      Field field = field_override
                        ? *field_override
                        : (p == 0 ? Field::rationals() : Field::prime(p));
      std::vector<std::string> names;
      std::string cur;
      for (char c : vars + ",") {
        if (c == ',') {
          if (!cur.empty()) names.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (names.empty() || names.size() > 8)
        throw IdealFileError("need between 1 and 8 variables", lineno, 1);
      try {
        ring = make_ring(static_cast<int>(names.size()), field, names);
      } catch (const std::exception& e) {
        throw IdealFileError(e.what(), lineno, 1);
      }
      continue;
    }
    if (line == "gens:") {
      in_gens = true;
      continue;
    }
    if (!in_gens)
      throw IdealFileError("expected 'gens:' before generators", lineno, 1);
    try {
      gens.push_back(Polynomial::parse(ring, line));
    } catch (const ParseError& e) {
      throw IdealFileError(e.what(), lineno, static_cast<int>(e.offset) + 1);
    }
  }
  if (!ring) throw IdealFileError("missing 'ring' header", lineno, 1);
  if (gens.empty()) throw IdealFileError("no generators", lineno, 1);
  try {
    return Ideal(ring, std::move(gens));
  } catch (const std::exception& e) {
    throw IdealFileError(e.what(), lineno, 1);
  }
}

std::string write_ideal_file(const Ideal& I) {
  const auto& ring = I.ring();
  std::ostringstream os;
  os << "ring " << ring->field().characteristic() << " ";
  for (int i = 0; i < ring->nvars(); ++i)
    os << (i ? "," : "") << ring->name(i);
  os << "\ngens:\n";
  for (const auto& g : I.gens()) os << g.to_string() << "\n";
  return os.str();
}

}  // namespace satbound
