#include "latmass/holtable.hpp"

#include <fstream>
#include <sstream>

namespace latmass {

namespace detail {
const char* embedded_hol_table();
}

AffineVoaSpec parse_lie_symbol(const std::string& text) {
  AffineVoaSpec spec;
  std::size_t pos = 0;
  auto read_uint = [&]() -> unsigned {
    std::size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error("expected integer in Lie symbol", pos);
    return unsigned(std::stoul(text.substr(start, pos - start)));
  };
  auto read_component = [&]() -> AffineVoaSpec::Component {
    if (pos >= text.size() || text[pos] < 'A' || text[pos] > 'G')
      throw parse_error("expected simple type letter", pos);
    SimpleType type = simple_type_from_char(text[pos]);
    ++pos;
    if (pos >= text.size() || text[pos] != '_') throw parse_error("expected '_'", pos);
    ++pos;
    bool braced = pos < text.size() && text[pos] == '{';
    if (braced) ++pos;
    unsigned rank = read_uint();
    if (pos >= text.size() || text[pos] != ',') throw parse_error("expected ','", pos);
    ++pos;
    unsigned level = read_uint();
    if (braced) {
      if (pos >= text.size() || text[pos] != '}') throw parse_error("expected '}'", pos);
      ++pos;
    }
    return {type, rank, level};
  };

  while (pos < text.size()) {
    if (text[pos] == '(') {
      ++pos;
      AffineVoaSpec::Component c = read_component();
      if (pos >= text.size() || text[pos] != ')') throw parse_error("expected ')'", pos);
      ++pos;
      unsigned mult = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        bool braced = pos < text.size() && text[pos] == '{';
        if (braced) ++pos;
        mult = read_uint();
        if (braced) {
          if (pos >= text.size() || text[pos] != '}') throw parse_error("expected '}'", pos);
          ++pos;
        }
      }
      for (unsigned i = 0; i < mult; ++i) spec.components.push_back(c);
    } else {
      spec.components.push_back(read_component());
    }
  }
  if (spec.components.empty()) throw parse_error("empty Lie symbol", 0);
  return spec;
}

namespace {

std::vector<HolTableEntry> parse_table(std::istream& in) {
  std::vector<HolTableEntry> table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw parse_error("hol table line " + std::to_string(lineno) + ": missing tab", 0);
    HolTableEntry e;
    try {
      e.rank = unsigned(std::stoul(line.substr(0, tab)));
      e.lie_symbol = line.substr(tab + 1);
      e.spec = parse_lie_symbol(e.lie_symbol);
    } catch (const std::exception& ex) {
      throw parse_error("hol table line " + std::to_string(lineno) + ": " + ex.what(), 0);
    }
    unsigned rank_sum = 0;
    for (const auto& c : e.spec.components) rank_sum += c.rank;
    if (rank_sum != e.rank)
      throw parse_error("hol table line " + std::to_string(lineno) +
                            ": component ranks sum to " + std::to_string(rank_sum) +
                            ", expected " + std::to_string(e.rank),
                        0);
    table.push_back(std::move(e));
  }
  return table;
}

}  // namespace

std::vector<HolTableEntry> load_hol_table() {
  std::istringstream in(detail::embedded_hol_table());
  return parse_table(in);
}

std::vector<HolTableEntry> load_hol_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("load_hol_table_file: cannot open " + path);
  return parse_table(in);
}

IntLattice floor_of_entry(const HolTableEntry& e) {
  IntLattice floor = affine_floor(e.spec);
  floor.label = e.lie_symbol;
  return floor;
}

}  // namespace latmass
