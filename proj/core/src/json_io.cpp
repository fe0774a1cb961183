#include "latmass/json_io.hpp"

#include <fstream>
#include <json.hpp>

namespace latmass {

using nlohmann::json;

namespace {

json gram_to_json(const IMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      // Exact integers only; large entries as decimal strings would break the
      // format contract, so require the int64 range (ample for this domain).
      if (m(i, j) > Int(std::numeric_limits<std::int64_t>::max()) ||
          m(i, j) < Int(std::numeric_limits<std::int64_t>::min()))
        throw domain_error("lattice_to_json: entry exceeds the integer range");
      row.push_back(std::int64_t(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

IMat gram_from_json(const json& rows) {
  if (!rows.is_array()) throw domain_error("lattice json: gram must be an array");
  std::size_t n = rows.size();
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw domain_error("lattice json: gram must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_number_integer())
        throw domain_error("lattice json: gram entries must be exact integers");
      m(i, j) = Int(row[j].get<std::int64_t>());
    }
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

std::string lattice_to_json(const IntLattice& l) {
  json out;
  out["label"] = l.label;
  out["gram"] = gram_to_json(l.gram);
  return out.dump();
}

IntLattice lattice_from_json(const std::string& text) {
  json in = json::parse(text);
  IntLattice l(gram_from_json(in.at("gram")),
               in.contains("label") ? in["label"].get<std::string>() : "");
  return l;
}

IntLattice lattice_from_json_file(const std::string& path) {
  return lattice_from_json(read_file(path));
}

VoaSpecFile voa_spec_from_json(const std::string& text) {
  json in = json::parse(text);
  VoaSpecFile out;
  for (const auto& c : in.at("components")) {
    AffineVoaSpec::Component comp;
    std::string type = c.at("type").get<std::string>();
    if (type.size() != 1) throw domain_error("voa spec json: type must be one letter");
    comp.type = simple_type_from_char(type[0]);
    comp.rank = c.at("rank").get<unsigned>();
    comp.level = c.at("level").get<unsigned>();
    out.spec.components.push_back(comp);
  }
  if (in.contains("cosets"))
    for (const auto& coset : in["cosets"])
      out.spec.cosets.push_back(coset.get<std::vector<unsigned>>());
  if (in.contains("index")) out.index = Int(in["index"].get<std::int64_t>());
  return out;
}

VoaSpecFile voa_spec_from_json_file(const std::string& path) {
  return voa_spec_from_json(read_file(path));
}

std::string enumeration_to_json(const GenusEnumeration& e) {
  json out;
  json classes = json::array();
  for (const auto& cls : e.classes) {
    json c;
    c["label"] = cls.representative.label;
    c["gram"] = gram_to_json(cls.representative.gram);
    c["aut_order"] = cls.aut_order.str();
    classes.push_back(std::move(c));
  }
  out["classes"] = std::move(classes);
  out["mass"] = e.accumulated_mass.str();
  out["complete"] = e.complete;
  return out.dump(2);
}

std::string matrix_to_json(const IMat& m) { return gram_to_json(m).dump(); }

}  // namespace latmass
