// growth-lab: command-line front end to the growthlab library.
#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "growthlab/catalog.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/io.hpp"
#include "growthlab/relations.hpp"
#include "growthlab/topology.hpp"
#include "suites.hpp"

using namespace growthlab;

namespace {

enum Exit { kOk = 0, kInvariant = 1, kParse = 2, kResource = 3, kTooShort = 4 };

struct LoadedGroup {
  std::string name;
  GroupPtr group;
  GeneratingSet generators;
};

bool is_file(const std::string& arg) { return std::filesystem::is_regular_file(arg); }

LoadedGroup load_group(const std::string& arg) {
  if (is_file(arg)) {
    const auto doc = group_document_from_json(parse_json(read_file(arg)));
    auto g = make_group(doc.spec);
    auto gens = doc.generators.empty() ? default_generators(*g) : doc.generators;
    for (const auto& e : gens)
      if (e.size() != g->width()) throw ParseError("generator width does not match the group");
    return {arg, g, standard_generators(*g, gens)};
  }
  const auto e = catalog_entry(arg);
  auto g = make_group(e.spec);
  return {e.name, g, catalog_generators(e, *g)};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Int parse_int(const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw ParseError("not an integer: " + text);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("not an integer: " + text);
  }
}

/// "1,0,0;0,1,0" or "1,0,0 0,1,0" -> two elements of width three.
std::vector<Element> parse_elements(std::string text, std::size_t width) {
  std::replace(text.begin(), text.end(), ' ', ';');
  std::vector<Element> out;
  for (const auto& part : split(text, ';')) {
    if (part.empty()) continue;
    Element e;
    for (const auto& x : split(part, ',')) e.push_back(parse_int(x));
    if (e.size() != width) throw ParseError("element '" + part + "' has the wrong width");
    out.push_back(e);
  }
  return out;
}

std::vector<Rational> parse_lengths(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& x : split(text, ',')) out.push_back(parse_rational(x));
  return out;
}

CPath parse_path(const std::string& text) {
  CPath out;
  for (const auto& x : split(text, ',')) {
    const Int v = parse_int(x);
    if (v < 0) throw ParseError("vertex indices are non-negative");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

/// cycle:n, grid:r,c, complete:n, a finite catalog group, or a JSON adjacency file.
FiniteGraph load_graph(const std::string& arg, std::size_t cap) {
  if (is_file(arg)) return graph_from_json(parse_json(read_file(arg)));
  auto number = [&](const std::string& s) {
    const Int v = parse_int(s);
    if (v < 1) throw ParseError("graph sizes must be positive");
    return static_cast<std::size_t>(v);
  };
  const auto colon = arg.find(':');
  const std::string head = arg.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : arg.substr(colon + 1);
  if (head == "cycle") return cycle_graph(number(tail));
  if (head == "complete") return complete_graph(number(tail));
  if (head == "grid") {
    const auto rc = split(tail, ',');
    if (rc.size() != 2) throw ParseError("grid expects rows,cols");
    return grid_graph(number(rc[0]), number(rc[1]));
  }
  const auto g = load_group(arg);
  if (!g.group->order()) throw ParseError("Cayley graphs are built for finite groups only");
  return cayley_graph(*g.group, g.generators, cap).graph;
}

Json radius_json(const Radius& r, int j_max) {
  if (r) return *r;
  return ">= " + std::to_string(j_max);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact growth computations in finitely generated groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t cap = 20'000'000;
  app.add_option("--cap", cap, "Maximum number of stored elements")->capture_default_str();

  int exit_code = kOk;

  // profile
  std::string group_arg, out_format = "csv";
  int radius = 0;
  auto* profile = app.add_subcommand("profile", "Ball sizes of a Cayley graph");
  profile->add_option("group", group_arg, "Catalog name or JSON group document")->required();
  profile->add_option("--radius", radius, "Largest radius")->required()->check(CLI::NonNegativeNumber);
  profile->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  profile->callback([&] {
    const auto g = load_group(group_arg);
    BallOptions opts;
    opts.cap = cap;
    auto p = ball_profile(*g.group, g.generators, radius, opts);
    p.group = g.name;
    if (p.truncated) throw ResourceError("ball exceeds the cap of " + std::to_string(cap) + " elements");
    if (out_format == "json") emit(to_json(p));
    else std::cout << profile_to_csv(p);
  });

  // fit
  std::string profile_file, fit_format = "json";
  int anchor = 1;
  auto* fit = app.add_subcommand("fit", "Piecewise-monomial model of a ball profile");
  fit->add_option("profile", profile_file, "Profile in CSV or JSON")->required()->check(CLI::ExistingFile);
  fit->add_option("--anchor", anchor, "Anchor scale n")->check(CLI::PositiveNumber);
  fit->add_option("--out", fit_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  fit->callback([&] {
    const auto p = parse_profile(read_file(profile_file));
    if (p.radius() < 2 * anchor) {
      std::cerr << "error: profile radius " << p.radius() << " is below twice the anchor " << anchor << "\n";
      exit_code = kTooShort;
      return;
    }
    const auto f = fit_growth(p, anchor);
    if (fit_format == "json") emit(to_json(f));
    else std::cout << fit_to_csv(p, f);
  });

  // prog
  std::string gens_text, lengths_text;
  int powers = 0;
  Int c_max = 64;
  auto* prog = app.add_subcommand("prog", "Progressions P(u; L)");
  prog->require_subcommand(1);
  auto add_prog_options = [&](CLI::App* cmd) {
    cmd->add_option("group", group_arg, "Catalog name or JSON group document")->required();
    cmd->add_option("--gens", gens_text, "Generators separated by ';' or spaces, e.g. \"1,0,0;0,1,0\"")->required();
    cmd->add_option("--lengths", lengths_text, "Lengths, e.g. \"1,1,1/2\"")->required();
  };
  auto make_progression = [&] {
    const auto g = load_group(group_arg);
    return Progression(g.group, parse_elements(gens_text, g.group->width()), parse_lengths(lengths_text));
  };
  auto* enumerate = prog->add_subcommand("enumerate", "Size of the progression and of its powers");
  add_prog_options(enumerate);
  enumerate->add_option("--radius", powers, "Largest power")->check(CLI::NonNegativeNumber);
  enumerate->callback([&] {
    const auto p = make_progression();
    Json j = to_json(p);
    j["size"] = p.enumerate(cap).size();
    const auto ball = progression_powers(p, powers, cap);
    if (ball.truncated) throw ResourceError("powers exceed the cap");
    j["powers"] = ball.profile("").beta;
    emit(j);
  });
  auto* checkcmd = prog->add_subcommand("check", "C-upper-triangular form");
  add_prog_options(checkcmd);
  checkcmd->add_option("--cmax", c_max, "Largest constant tried");
  checkcmd->callback([&] {
    const auto r = check_upper_triangular(make_progression(), c_max);
    emit(to_json(r));
    if (!r.ok) exit_code = kInvariant;
  });
  auto* zeta = prog->add_subcommand("zeta", "Commutator weights from the upper-triangular expressions");
  add_prog_options(zeta);
  zeta->add_option("--cmax", c_max, "Largest constant tried");
  zeta->callback([&] {
    const auto p = make_progression();
    const auto r = check_upper_triangular(p, c_max);
    if (!r.ok) {
      emit(to_json(r));
      exit_code = kInvariant;
      return;
    }
    emit(Json{{"constant", r.constant}, {"zeta", zeta_weights(p.dimension(), r.expressions)}});
  });

  // inj, injz
  std::string lattice_arg;
  int j_max = 32;
  auto add_inj = [&](const std::string& name, const std::string& help, bool central) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("lattice", lattice_arg, "Group containing the generators")->required();
    cmd->add_option("ambient", group_arg, "Quotient sharing its coordinates")->required();
    cmd->add_option("--gens", gens_text, "Generators in lattice coordinates")->required();
    cmd->add_option("--lengths", lengths_text, "Lengths")->required();
    cmd->add_option("--jmax", j_max, "Largest power examined")->check(CLI::PositiveNumber);
    cmd->callback([&, central] {
      const auto lattice = load_group(lattice_arg);
      const auto ambient = load_group(group_arg);
      if (lattice.group->width() != ambient.group->width())
        throw ParseError("lattice and ambient groups must share coordinates");
      Progression p(ambient.group, parse_elements(gens_text, lattice.group->width()), parse_lengths(lengths_text),
                    Projection{lattice.group, {}, {}});
      const Radius r = central ? inj_mod_center(p, j_max, cap) : injectivity_radius(p, j_max, cap);
      emit(Json{{central ? "inj_mod_center" : "inj", radius_json(r, j_max)}});
    });
  };
  add_inj("inj", "Injectivity radius of a progression pushed to a quotient", false);
  add_inj("injz", "Injectivity radius modulo the center", true);

  // lssc
  std::string graph_arg, p_text, q_text;
  int k = 4, c_step = 1, l_moves = 4;
  std::size_t budget = 200'000;
  auto* lssc = app.add_subcommand("lssc", "Large-scale simple connectedness of finite graphs");
  lssc->require_subcommand(1);
  auto* h1 = lssc->add_subcommand("h1", "First homology with short simple cycles filled");
  h1->add_option("graph", graph_arg, "cycle:n, grid:r,c, complete:n, finite catalog group or JSON")->required();
  h1->add_option("-k", k, "Longest filled cycle")->required()->check(CLI::Range(3, 64));
  h1->callback([&] {
    const auto g = load_graph(graph_arg, cap);
    const auto r = pk_h1(g, k);
    Json torsion = Json::array();
    for (const auto& t : r.torsion) torsion.push_back(t.get_str());
    Json j{{"k", r.k},       {"vertices", g.size()},         {"edges", g.edges().size()},
           {"cells", r.cells}, {"cycle_rank", r.cycle_rank}, {"boundary_rank", r.boundary_rank},
           {"rank", r.rank}};
    if (r.torsion_computed) j["torsion"] = torsion;
    j["status"] = r.rank == 0 && r.torsion.empty() && r.torsion_computed ? "coarse-H1-trivial"
                  : r.rank == 0                                          ? "rationally-trivial"
                                                                         : "nontrivial";
    emit(j);
  });
  auto* homotopy = lssc->add_subcommand("homotopy", "Equivalence of two C-paths under short replacements");
  homotopy->add_option("graph", graph_arg, "cycle:n, grid:r,c, complete:n, finite catalog group or JSON")->required();
  homotopy->add_option("--p", p_text, "First path, e.g. 0,1,2")->required();
  homotopy->add_option("--q", q_text, "Second path")->required();
  homotopy->add_option("-c", c_step, "Step bound C")->check(CLI::PositiveNumber);
  homotopy->add_option("-l", l_moves, "Move length L")->check(CLI::PositiveNumber);
  homotopy->add_option("--budget", budget, "Search budget");
  homotopy->callback([&] {
    const auto g = load_graph(graph_arg, cap);
    const auto r = cpath_equivalent(g, parse_path(p_text), parse_path(q_text), c_step, l_moves, budget);
    emit(Json{{"verdict", to_string(r.verdict)}, {"explored", r.explored}, {"chain", r.chain}});
  });

  // relscales
  int n_max = 8;
  auto* relscales = app.add_subcommand("relscales", "Scales of new relations in an abelian group");
  relscales->add_option("group", group_arg, "Abelian catalog name or JSON group document")->required();
  relscales->add_option("--nmax", n_max, "Largest scale (relations of length <= 2^nmax)")->check(CLI::Range(1, 30));
  relscales->callback([&] {
    const auto g = load_group(group_arg);
    const auto* ab = dynamic_cast<const AbelianGroup*>(g.group.get());
    if (!ab) throw ParseError("relation scales are computed for abelian groups only");
    std::vector<Element> letters;
    for (const auto& e : g.generators.elements)
      if (!g.group->is_identity(e)) letters.push_back(e);
    const auto r = new_relation_scales_abelian(*ab, letters, n_max, cap);
    Json lattices = Json::array();
    for (const auto& h : r.lattices) {
      Json rows = Json::array();
      for (const auto& row : h.rows()) {
        Json jr = Json::array();
        for (const auto& x : row) jr.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()));
        rows.push_back(jr);
      }
      lattices.push_back(rows);
    }
    emit(Json{{"group", g.name}, {"letters", r.letters}, {"scales", r.scales}, {"lattices", lattices}});
  });

  // witness
  std::string witness_name, corrupt_field;
  auto* witness = app.add_subcommand("witness", "Verify a built-in multi-scale witness");
  witness->add_option("name", witness_name, "Witness name")->required()->check(CLI::IsMember(example_witness_names()));
  witness->add_option("--corrupt", corrupt_field, "Corrupt one field first")
      ->check(CLI::IsMember(witness_corruptions()));
  witness->callback([&] {
    auto w = example_witness(witness_name);
    if (!corrupt_field.empty()) w = corrupt_witness(std::move(w), corrupt_field);
    const auto r = verify_witness(w);
    emit(to_json(r));
    if (!r.ok()) exit_code = kInvariant;
  });

  // verify
  std::string suite;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  auto names = suites::suite_names();
  names.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(names));
  verify->add_option("--seed", seed, "Seed for randomized suites")->capture_default_str();
  verify->callback([&] {
    std::size_t failures = 0, total = 0;
    for (const auto& rep : suites::run_suite(suite, seed)) {
      for (const auto& c : rep.checks) {
        std::cout << to_string(c.status) << "  " << rep.name << "/" << c.id;
        if (!c.detail.empty()) std::cout << "  " << c.detail;
        std::cout << "\n";
        ++total;
      }
      failures += rep.failures();
    }
    std::cout << (failures ? "FAIL" : "PASS") << "  " << total - failures << "/" << total << " checks\n";
    if (failures) exit_code = kInvariant;
  });

  // catalog
  std::string entry_name, export_dir;
  auto* catalog = app.add_subcommand("catalog", "Built-in example groups and their expected facts");
  catalog->add_option("name", entry_name, "Entry to describe");
  catalog->add_option("--export", export_dir, "Write one JSON group document per entry into this directory");
  catalog->callback([&] {
    auto entry_json = [](const CatalogEntry& e) {
      Json facts = Json::array();
      for (const auto& f : e.facts)
        facts.push_back(Json{{"kind", to_string(f.kind)},
                             {"values", f.values},
                             {"radius", f.radius},
                             {"anchor", f.anchor},
                             {"source", to_string(f.source)},
                             {"note", f.note}});
      return Json{{"name", e.name}, {"group", to_json(GroupDocument{e.spec, e.generators})}, {"facts", facts}};
    };
    if (!export_dir.empty()) {
      std::filesystem::create_directories(export_dir);
      for (const auto& n : catalog_names()) {
        const auto e = catalog_entry(n);
        std::string file = n;
        for (auto& ch : file)
          if (ch == ':' || ch == ',' || ch == '^') ch = '_';
        write_file((std::filesystem::path(export_dir) / (file + ".json")).string(),
                   to_json(GroupDocument{e.spec, e.generators}).dump(2) + "\n");
      }
      return;
    }
    if (!entry_name.empty()) {
      emit(entry_json(catalog_entry(entry_name)));
      return;
    }
    for (const auto& n : catalog_names()) std::cout << n << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const OverflowError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariant;
  }
  return exit_code;
}
