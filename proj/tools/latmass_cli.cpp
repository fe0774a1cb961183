#include <CLI11.hpp>
#include <iostream>

#include "latmass/cocycle.hpp"
#include "latmass/gradedchar.hpp"
#include "latmass/holtable.hpp"
#include "latmass/json_io.hpp"
#include "latmass/liedata.hpp"

using namespace latmass;

namespace {

// Named shorthands: terms joined by '+', each term [sqrtK]<family> with
// family one of A<n>, D<n>, E<n>, D<n>+ (even unimodular glue), II1,1.
// A trailing '+' binds to the preceding D<n> (so the glue D16+ is "D16+",
// and a sum needs a doubled sign: "D16++E8").
IntLattice term_lattice(const std::string& term) {
  std::string t = term;
  Int scale = 1;
  if (t.rfind("sqrt", 0) == 0) {
    std::size_t i = 4;
    std::string num;
    while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) num += t[i++];
    if (num.empty()) throw domain_error("bad scale prefix in name: " + term);
    scale = Int(num);
    t = t.substr(i);
  }
  IntLattice base;
  if (t == "II1,1") {
    base = hyperbolic_plane();
  } else if (!t.empty() && t.back() == '+') {
    std::string body = t.substr(0, t.size() - 1);
    if (body.empty() || body[0] != 'D') throw domain_error("unknown lattice name: " + term);
    base = d_plus(unsigned(std::stoul(body.substr(1))));
  } else if (!t.empty() && (t[0] == 'A' || t[0] == 'D' || t[0] == 'E')) {
    unsigned rank = unsigned(std::stoul(t.substr(1)));
    base = root_lattice(simple_type_from_char(t[0]), rank);
  } else {
    throw domain_error("unknown lattice name: " + term);
  }
  return rescale(base, scale);
}

IntLattice named_lattice(const std::string& name) {
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '+') {
      if (i + 1 < name.size() && name[i + 1] == '+') {
        cur += '+';  // glue suffix, consume one '+', next one separates
        ++i;
        terms.push_back(cur);
        cur.clear();
      } else if (i + 1 == name.size()) {
        cur += '+';  // trailing glue suffix
      } else {
        terms.push_back(cur);
        cur.clear();
      }
    } else {
      cur += name[i];
    }
  }
  if (!cur.empty()) terms.push_back(cur);
  IntLattice out(IMat(0, 0));
  for (const auto& t : terms) out = direct_sum(out, term_lattice(t));
  out.label = name;
  return out;
}

struct CommonInput {
  std::string lattice_file;
  std::string name;

  IntLattice resolve() const {
    if (!lattice_file.empty() && !name.empty())
      throw domain_error("give either --lattice or --name, not both");
    if (!lattice_file.empty()) return lattice_from_json_file(lattice_file);
    if (!name.empty()) return named_lattice(name);
    throw domain_error("missing input lattice (--lattice or --name)");
  }
};

void add_lattice_opts(CLI::App* cmd, CommonInput& in) {
  cmd->add_option("--lattice", in.lattice_file, "lattice JSON file");
  cmd->add_option("--name", in.name, "named lattice shorthand (e.g. E8, sqrt2E8+D8)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice genus, mass and vertex-algebra toolkit"};
  app.require_subcommand(1);

  unsigned workers = 1;
  app.add_option("--workers", workers, "worker thread count")->capture_default_str();

  CommonInput in_construct, in_symbol, in_mass, in_aut, in_isom, in_isom2, in_enum,
      in_cocycle, in_char;
  std::string symbol_text, spec_file, table_file;
  std::string isom_lattice2, isom_name2;
  long long budget = 1000000;
  long long prime_override = 0;
  unsigned nmax = 8;
  bool print_generators = false;

  auto* c_construct = app.add_subcommand("construct", "emit a lattice as JSON");
  add_lattice_opts(c_construct, in_construct);

  auto* c_symbol = app.add_subcommand("symbol", "canonical genus symbol");
  add_lattice_opts(c_symbol, in_symbol);

  auto* c_mass = app.add_subcommand("mass", "Smith-Minkowski-Siegel mass");
  add_lattice_opts(c_mass, in_mass);
  c_mass->add_option("--symbol", symbol_text, "genus symbol text");

  auto* c_aut = app.add_subcommand("aut", "automorphism group order");
  add_lattice_opts(c_aut, in_aut);
  c_aut->add_flag("--generators", print_generators, "also print generators as JSON");

  auto* c_isom = app.add_subcommand("isom", "isometry test");
  add_lattice_opts(c_isom, in_isom);
  c_isom->add_option("--lattice2", isom_lattice2, "second lattice JSON file");
  c_isom->add_option("--name2", isom_name2, "second named lattice");

  auto* c_enum = app.add_subcommand("enumerate", "genus enumeration by neighbor closure");
  add_lattice_opts(c_enum, in_enum);
  c_enum->add_option("--budget", budget, "neighbor evaluation budget")->capture_default_str();
  c_enum->add_option("--prime", prime_override, "neighbor prime override");

  auto* c_cocycle = app.add_subcommand("cocycle", "twisted-group-algebra cocycle + checks");
  add_lattice_opts(c_cocycle, in_cocycle);

  auto* c_voamax = app.add_subcommand("voa-maxlat", "maximal lattice of an affine VOA spec");
  c_voamax->add_option("--spec", spec_file, "VOA spec JSON file")->required();

  auto* c_voamass = app.add_subcommand("voa-mass", "VH-pair mass of an affine VOA spec");
  c_voamass->add_option("--spec", spec_file, "VOA spec JSON file")->required();

  auto* c_char = app.add_subcommand("char", "graded dimensions of the lattice vertex algebra");
  add_lattice_opts(c_char, in_char);
  c_char->add_option("--nmax", nmax, "top degree")->capture_default_str();

  auto* c_table = app.add_subcommand("table", "bundled c=24 Lie algebra table");
  c_table->add_option("--table", table_file, "external table file to load instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_construct) {
      std::cout << lattice_to_json(in_construct.resolve()) << "\n";
    } else if (*c_symbol) {
      std::cout << format_symbol(genus_symbol(in_symbol.resolve())) << "\n";
    } else if (*c_mass) {
      GenusSymbol s;
      if (!symbol_text.empty())
        s = parse_symbol(symbol_text);
      else
        s = genus_symbol(in_mass.resolve());
      std::cout << sms_mass(s).str() << "\n";
    } else if (*c_aut) {
      AutResult r = aut_order(in_aut.resolve(), workers);
      std::cout << r.order.str() << "\n";
      if (print_generators) {
        std::cout << "[";
        for (std::size_t i = 0; i < r.generators.size(); ++i) {
          if (i) std::cout << ",";
          std::cout << matrix_to_json(r.generators[i]);
        }
        std::cout << "]\n";
      }
    } else if (*c_isom) {
      IntLattice a = in_isom.resolve();
      IntLattice b;
      if (!isom_lattice2.empty())
        b = lattice_from_json_file(isom_lattice2);
      else if (!isom_name2.empty())
        b = named_lattice(isom_name2);
      else
        throw domain_error("missing second lattice (--lattice2 or --name2)");
      IsometryWitness w = is_isometric(a, b, workers);
      if (w.found())
        std::cout << "isometric " << matrix_to_json(*w.matrix) << "\n";
      else
        std::cout << "not isometric\n";
    } else if (*c_enum) {
      EnumerateOptions opts;
      opts.workers = workers;
      opts.budget = Int(budget);
      if (prime_override > 0) opts.prime = Int(prime_override);
      std::cout << enumeration_to_json(enumerate_genus(in_enum.resolve(), opts)) << "\n";
    } else if (*c_cocycle) {
      IntLattice l = in_cocycle.resolve();
      RationalSpan span;
      span.ambient_gram = l.gram.cast<Rat>();
      for (std::size_t i = 0; i < l.rank(); ++i) {
        std::vector<Rat> e(l.rank(), Rat(0));
        e[i] = 1;
        span.generators.push_back(std::move(e));
      }
      Cocycle c = build_cocycle(span);
      std::cout << matrix_to_json(c.bits) << "\n";
      bool ok = cocycle_identity_holds(c, 2) &&
                commutator_identity_holds(c, span.pairing(), 2) && bilinearity_holds(c, 2);
      std::cout << (ok ? "cocycle checks passed" : "cocycle checks FAILED") << "\n";
      if (!ok) return 1;
    } else if (*c_voamax) {
      VoaSpecFile f = voa_spec_from_json_file(spec_file);
      IntLattice ml = maximal_lattice(f.spec);
      std::cout << lattice_to_json(ml) << "\n";
    } else if (*c_voamass) {
      VoaSpecFile f = voa_spec_from_json_file(spec_file);
      std::cout << vh_mass(maximal_lattice(f.spec), f.index).str() << "\n";
    } else if (*c_char) {
      GradedDims dims = lattice_voa_dims(in_char.resolve(), nmax, workers);
      for (const auto& d : dims.by_degree) std::cout << d.str() << "\n";
    } else if (*c_table) {
      auto table =
          table_file.empty() ? load_hol_table() : load_hol_table_file(table_file);
      std::cout << table.size() << "\n";
      for (const auto& e : table) std::cout << e.rank << "\t" << e.lie_symbol << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
