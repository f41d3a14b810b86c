#include "growthlab/io.hpp"

#include <fstream>
#include <sstream>

namespace growthlab {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

Json big_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    BigInt z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  throw ParseError("expected an integer");
}

std::string quotient_name(HeisenbergSpec::Quotient q) {
  switch (q) {
    case HeisenbergSpec::Quotient::None: return "none";
    case HeisenbergSpec::Quotient::Center: return "center";
    case HeisenbergSpec::Quotient::XZ: return "xz";
    case HeisenbergSpec::Quotient::Full: return "full";
  }
  return "none";
}

HeisenbergSpec::Quotient quotient_from(const std::string& s) {
  if (s == "none") return HeisenbergSpec::Quotient::None;
  if (s == "center") return HeisenbergSpec::Quotient::Center;
  if (s == "xz") return HeisenbergSpec::Quotient::XZ;
  if (s == "full") return HeisenbergSpec::Quotient::Full;
  throw ParseError("unknown Heisenberg quotient '" + s + "'");
}

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as \"p/q\"");
}

}  // namespace

Json to_json(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        Json j;
        if constexpr (std::is_same_v<T, AbelianSpec>) {
          j["family"] = "abelian";
          j["rank"] = s.rank;
          Json rows = Json::array();
          for (const auto& r : s.relations) {
            Json row = Json::array();
            for (const auto& x : r) row.push_back(big_to_json(x));
            rows.push_back(row);
          }
          j["relations"] = rows;
        } else if constexpr (std::is_same_v<T, FreeNilpotentSpec>) {
          j["family"] = "free-nilpotent";
          j["rank"] = s.rank;
          j["class"] = s.nilpotency_class;
        } else if constexpr (std::is_same_v<T, HeisenbergSpec>) {
          j["family"] = "heisenberg";
          j["quotient"] = quotient_name(s.quotient);
          j["modulus"] = s.modulus;
        } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
          j["family"] = "semidirect";
          j["dimension"] = s.dimension;
          j["matrices"] = s.matrices;
        } else if constexpr (std::is_same_v<T, FiniteTableSpec>) {
          j["family"] = "finite-table";
          j["table"] = s.table;
        } else {
          j["family"] = "filiform";
          j["dimension"] = s.dimension;
        }
        return j;
      },
      spec);
}

GroupSpec group_spec_from_json(const Json& j) {
  return guarded("group spec", [&]() -> GroupSpec {
    if (!j.is_object()) throw ParseError("group spec must be a JSON object");
    const std::string family = j.at("family").get<std::string>();
    if (family == "abelian") {
      AbelianSpec s;
      s.rank = j.at("rank").get<std::size_t>();
      if (j.contains("relations"))
        for (const auto& row : j.at("relations")) {
          IntVector r;
          for (const auto& x : row) r.push_back(big_from_json(x));
          if (r.size() != s.rank) throw ParseError("relation row has the wrong length");
          s.relations.push_back(r);
        }
      return s;
    }
    if (family == "free-nilpotent") return FreeNilpotentSpec{j.at("rank").get<int>(), j.at("class").get<int>()};
    if (family == "heisenberg") {
      HeisenbergSpec s;
      s.quotient = quotient_from(j.value("quotient", std::string("none")));
      s.modulus = j.value("modulus", Int{0});
      return s;
    }
    if (family == "semidirect") {
      SemidirectSpec s;
      s.dimension = j.at("dimension").get<std::size_t>();
      s.matrices = j.at("matrices").get<std::vector<std::vector<std::vector<Int>>>>();
      return s;
    }
    if (family == "finite-table") return FiniteTableSpec{j.at("table").get<std::vector<std::vector<int>>>()};
    if (family == "filiform") return FiliformSpec{j.at("dimension").get<int>()};
    throw ParseError("unknown group family '" + family + "'");
  });
}

Json to_json(const GroupDocument& doc) {
  Json j = to_json(doc.spec);
  if (!doc.generators.empty()) {
    Json gens = Json::array();
    for (const auto& g : doc.generators) gens.push_back(element_to_json(g));
    j["generators"] = gens;
  }
  return j;
}

GroupDocument group_document_from_json(const Json& j) {
  GroupDocument doc;
  doc.spec = group_spec_from_json(j);
  if (j.contains("generators")) {
    auto g = make_group(doc.spec);
    guarded("generators", [&] {
      for (const auto& e : j.at("generators")) doc.generators.push_back(element_from_json(e, g->width()));
      return 0;
    });
  }
  return doc;
}

Json element_to_json(const Element& e) { return Json(e); }

Element element_from_json(const Json& j, std::size_t width) {
  return guarded("element", [&] {
    auto e = j.get<Element>();
    if (e.size() != width)
      throw ParseError("element has " + std::to_string(e.size()) + " coordinates, expected " + std::to_string(width));
    return e;
  });
}

Json to_json(const BallProfile& p) {
  Json j;
  j["group"] = p.group;
  j["radius"] = p.radius();
  j["beta"] = p.beta;
  j["truncated"] = p.truncated;
  return j;
}

BallProfile profile_from_json(const Json& j) {
  return guarded("profile", [&] {
    BallProfile p;
    p.group = j.value("group", std::string());
    p.beta = j.at("beta").get<std::vector<Int>>();
    p.truncated = j.value("truncated", false);
    if (p.beta.empty()) throw ParseError("profile has no entries");
    return p;
  });
}

std::string profile_to_csv(const BallProfile& p) {
  std::ostringstream out;
  out << "n,beta,sigma\n";
  for (int n = 0; n <= p.radius(); ++n) out << n << ',' << p.beta[static_cast<std::size_t>(n)] << ',' << p.sphere(n) << '\n';
  return out.str();
}

BallProfile profile_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("n,beta", 0) != 0) throw ParseError("CSV profile needs the header n,beta,sigma");
  BallProfile p;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',')) throw ParseError("bad CSV row '" + line + "'");
    try {
      if (std::stol(a) != static_cast<long>(p.beta.size())) throw ParseError("CSV rows must list n = 0, 1, 2, ...");
      const Int beta = std::stoll(b);
      if (!p.beta.empty() && beta < p.beta.back()) throw ParseError("ball sizes must be non-decreasing");
      p.beta.push_back(beta);
      if (std::getline(row, c, ',') && !c.empty() && c != "\r" && std::stoll(c) != p.sphere(p.radius()))
        throw ParseError("sphere column disagrees with the ball sizes in row '" + line + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad CSV row '" + line + "'");
    }
  }
  if (p.beta.empty()) throw ParseError("profile has no entries");
  return p;
}

BallProfile parse_profile(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return profile_from_json(parse_json(text));
  return profile_from_csv(text);
}

Json to_json(const Radical& r) {
  Json j;
  j["base"] = to_string(r.base);
  j["root"] = r.root;
  return j;
}

Radical radical_from_json(const Json& j) {
  return guarded("radical", [&] {
    Radical r;
    if (j.is_object()) {
      r.base = rational_from(j.at("base"));
      r.root = j.value("root", 1);
    } else {
      r.base = rational_from(j);
    }
    if (r.base <= 0 || r.root < 1) throw ParseError("radical needs a positive base and root");
    return r;
  });
}

Json to_json(const PiecewiseMonomial& f) {
  Json j;
  Json b = Json::array(), c = Json::array();
  for (const auto& x : f.boundaries) b.push_back(to_json(x));
  for (const auto& x : f.coefficients) c.push_back(rational_json(x));
  j["boundaries"] = b;
  j["coefficients"] = c;
  j["degrees"] = f.degrees;
  return j;
}

PiecewiseMonomial piecewise_from_json(const Json& j) {
  return guarded("piecewise monomial", [&] {
    PiecewiseMonomial f;
    for (const auto& x : j.at("boundaries")) f.boundaries.push_back(radical_from_json(x));
    for (const auto& x : j.at("coefficients")) f.coefficients.push_back(rational_from(x));
    f.degrees = j.at("degrees").get<std::vector<int>>();
    if (f.boundaries.size() != f.degrees.size() || f.coefficients.size() != f.degrees.size())
      throw ParseError("boundaries, coefficients and degrees must have equal length");
    return f;
  });
}

Json to_json(const GrowthFit& fit) {
  Json j;
  j["anchor"] = fit.anchor;
  j["model"] = to_json(fit.f);
  j["decreases"] = fit.f.decreases();
  j["increases"] = fit.f.increases();
  j["local_degree"] = fit.local_degree;
  j["residual"] = fit.residual;
  j["centered_residual"] = fit.centered_residual;
  return j;
}

std::string fit_to_csv(const BallProfile& p, const GrowthFit& fit) {
  std::ostringstream out;
  out.precision(17);
  out << "m,beta,model\n";
  const double base = static_cast<double>(p.beta[static_cast<std::size_t>(fit.anchor)]);
  for (int m = fit.anchor; m <= p.radius(); ++m)
    out << m << ',' << p.beta[static_cast<std::size_t>(m)] << ','
        << base * fit.f(static_cast<double>(m) / fit.anchor) << '\n';
  return out.str();
}

Json to_json(const Progression& p) {
  Json j;
  j["ambient"] = p.ambient().fingerprint();
  Json gens = Json::array(), lengths = Json::array();
  for (const auto& g : p.generators()) gens.push_back(element_to_json(g));
  for (const auto& l : p.lengths()) lengths.push_back(rational_json(l));
  j["generators"] = gens;
  j["lengths"] = lengths;
  if (const auto& pr = p.projection()) {
    Json q;
    q["lattice"] = pr->lattice->fingerprint();
    q["matrix"] = pr->matrix;
    Json sym = Json::array();
    for (const auto& h : pr->symmetry) sym.push_back(element_to_json(h));
    q["symmetry"] = sym;
    j["projection"] = q;
  }
  return j;
}

Json to_json(const UpperTriangularReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["constant"] = r.constant;
  Json ex = Json::array();
  for (const auto& e : r.expressions) {
    Json x;
    x["i"] = e.i;
    x["j"] = e.j;
    x["s"] = e.s;
    x["t"] = e.t;
    x["exponents"] = e.exponents;
    x["required"] = rational_json(e.required);
    ex.push_back(x);
  }
  j["expressions"] = ex;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

Json to_json(const WitnessReport& r) {
  Json j;
  j["ok"] = r.ok();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json x;
    x["id"] = c.id;
    x["status"] = to_string(c.status);
    x["detail"] = c.detail;
    checks.push_back(x);
  }
  j["checks"] = checks;
  j["samples"] = r.samples;
  return j;
}

Json to_json(const HallBasis& b) {
  Json j;
  j["rank"] = b.rank();
  j["class"] = b.nilpotency_class();
  Json entries = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    Json e;
    e["index"] = i;
    e["weight"] = b[i].weight;
    e["left"] = b[i].left;
    e["right"] = b[i].right;
    e["content"] = b[i].content;
    e["name"] = b.describe(i);
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

Json to_json(const LieStructure& l) {
  Json j;
  j["basis"] = to_json(l.basis());
  Json table = Json::array();
  const int n = static_cast<int>(l.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (const auto& [k, c] : l.bracket_of(a, b))
        table.push_back(Json::array({a, b, k, big_to_json(c.get_num()), big_to_json(c.get_den())}));
  j["brackets"] = table;
  return j;
}

Json to_json(const FiniteGraph& g) {
  Json j;
  Json adj = Json::array();
  for (std::size_t v = 0; v < g.size(); ++v) adj.push_back(g.neighbors(v));
  j["adjacency"] = adj;
  return j;
}

FiniteGraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    auto adj = j.at("adjacency").get<std::vector<std::vector<std::size_t>>>();
    FiniteGraph g(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v)
      for (std::size_t w : adj[v]) {
        if (w >= adj.size()) throw ParseError("adjacency entry out of range");
        if (std::find(adj[w].begin(), adj[w].end(), v) == adj[w].end())
          throw ParseError("adjacency lists are not symmetric");
        g.add_edge(v, w);
      }
    return g;
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace growthlab
