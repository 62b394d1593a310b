#include "gzs/cli_io.hpp"

#include "gzs/diagrams.hpp"
#include "gzs/error.hpp"
#include "gzs/gz_core.hpp"
#include "gzs/oracle.hpp"
#include "text.hpp"

#include <json.hpp>

#include <array>
#include <limits>
#include <sstream>

namespace gzs {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 8> kCommands = {{
    {Command::Vertices, "vertices"},
    {Command::Face, "face"},
    {Command::Chevalley, "chevalley"},
    {Command::ChevalleyClassical, "chevalley-classical"},
    {Command::Admissible, "admissible"},
    {Command::Verify, "verify"},
    {Command::LatticeCount, "lattice-count"},
    {Command::OracleFaces, "oracle-faces"},
}};

}  // namespace

Command parse_command(std::string_view name) {
  for (const auto& [c, s] : kCommands) {
    if (s == name) return c;
  }
  throw InvalidArgument("unknown command '" + std::string(name) + "'");
}

std::string command_name(Command c) {
  for (const auto& [k, s] : kCommands) {
    if (k == c) return std::string(s);
  }
  return "?";
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  throw InvalidArgument("unknown format '" + std::string(name) + "' (text|json)");
}

namespace {

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return Json(x.convert_to<long long>());
  }
  return Json(x.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string() && detail::is_decimal_integer(j.get<std::string>())) {
    auto s = j.get<std::string>();
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s);
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

Json cell_json(const CellRecord& cell) {
  Json terms = Json::array();
  for (const auto& e : cell.chevalley) {
    terms.push_back({{"class", e.cls.str()}, {"coefficient", integer_json(e.coefficient)}, {"k", e.k}});
  }
  return {{"sigma", cell.sigma.str()},
          {"borel", cell.borel.str()},
          {"class", cell.cls.str()},
          {"dim", cell.dim},
          {"admissible", cell.admissible},
          {"chevalley", terms}};
}

CellRecord cell_record(const SimpleVertex& v, const BorelChoice& b, const AmbientWeight& lambda) {
  CellRecord cell;
  cell.sigma = v.sigma();
  cell.borel = b.u;
  cell.cls = class_label(v, b);
  cell.dim = gamma_face(v, b, lambda).dim();
  cell.admissible = true;
  for (const auto& t : chevalley_faces(v, b, lambda)) {
    cell.admissible = cell.admissible && t.contained;
    cell.chevalley.push_back({t.cls, t.coefficient, static_cast<int>(t.facets.size())});
  }
  return cell;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return j.at(key);
}

Permutation perm_field(const Json& j, const char* key) { return Permutation::parse(field(j, key).get<std::string>()); }

struct Context {
  const RunConfig& config;
  int n;
  BorelChoice borel;
  std::ostringstream out;
};

const Permutation& require_vertex(const Context& ctx) {
  if (!ctx.config.vertex) {
    throw InvalidArgument(command_name(ctx.config.command) + " needs --vertex");
  }
  return *ctx.config.vertex;
}

VerificationReport single_cell_report(const Context& ctx, const CellRecord& cell) {
  VerificationReport r;
  r.n = ctx.n;
  r.lambda = ctx.config.lambda;
  r.pairs = 1;
  r.cells.push_back(cell);
  return r;
}

int cmd_vertices(Context& ctx) {
  const auto& lambda = ctx.config.lambda;
  Json rows = Json::array();
  for (const auto& sigma : Permutation::all(ctx.n)) {
    const SimpleVertex v(sigma);
    const auto point = v.point(lambda);
    const auto weight = v.weight(lambda);
    if (ctx.config.format == Format::Json) {
      rows.push_back({{"sigma", sigma.str()},
                      {"diagram", v.diagram().str()},
                      {"point", point.str()},
                      {"weight", weight.str()}});
    } else {
      ctx.out << sigma.str() << '\t' << point.str() << '\t' << weight.str() << '\n';
    }
  }
  if (ctx.config.format == Format::Json) {
    ctx.out << Json{{"n", ctx.n}, {"lambda", lambda.str()}, {"vertices", rows}}.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_face(Context& ctx) {
  const auto& lambda = ctx.config.lambda;
  const SimpleVertex v(require_vertex(ctx));
  const auto face = gamma_face(v, ctx.borel, lambda);
  const auto roots = r_set(v, ctx.borel, lambda);
  const bool admissible = is_admissible(v, ctx.borel, lambda);
  if (ctx.config.format == Format::Json) {
    Json r = Json::array();
    for (const auto& a : roots) r.push_back(a.str());
    ctx.out << Json{{"n", ctx.n},
                    {"lambda", lambda.str()},
                    {"sigma", v.sigma().str()},
                    {"borel", ctx.borel.u.str()},
                    {"class", class_label(v, ctx.borel).str()},
                    {"dim", face.dim()},
                    {"admissible", admissible},
                    {"r_set", r},
                    {"diagram", gamma_diagram(v, ctx.borel, lambda).str()},
                    {"face", face.str()}}
                   .dump(2)
            << '\n';
    return kExitOk;
  }
  ctx.out << "sigma " << v.sigma().str() << "  borel " << ctx.borel.u.str() << "  class "
          << class_label(v, ctx.borel).str() << '\n';
  ctx.out << "R " << detail::join(roots, " ", [](const Root& a) { return a.str(); }) << '\n';
  ctx.out << "diagram " << gamma_diagram(v, ctx.borel, lambda).str() << '\n';
  ctx.out << "face " << face.str() << '\n';
  ctx.out << (admissible ? "admissible" : "not admissible") << '\n';
  return kExitOk;
}

int cmd_chevalley(Context& ctx) {
  const auto& lambda = ctx.config.lambda;
  const SimpleVertex v(require_vertex(ctx));
  if (ctx.config.format == Format::Json) {
    ctx.out << to_json(single_cell_report(ctx, cell_record(v, ctx.borel, lambda))) << '\n';
    return kExitOk;
  }
  const auto terms = chevalley_faces(v, ctx.borel, lambda);
  bool admissible = true;
  for (const auto& t : terms) admissible = admissible && t.contained;
  ctx.out << "cell " << class_label(v, ctx.borel).str() << "  sigma " << v.sigma().str() << "  borel "
          << ctx.borel.u.str() << "  " << (admissible ? "admissible" : "not admissible") << '\n';
  for (const auto& t : terms) {
    ctx.out << t.cls.str() << '\t' << t.coefficient.str() << "\tk=" << t.facets.size() << "\tvertex "
            << t.vertex.str() << "\tfacets "
            << detail::join(t.facets, " ", [](const FacetId& f) { return f.str(); })
            << (t.contained ? "" : "\tnot contained") << '\n';
  }
  return kExitOk;
}

int cmd_chevalley_classical(Context& ctx) {
  const auto w = ctx.borel.u.inverse() * require_vertex(ctx);
  const auto terms = chevalley_classical(w, ctx.config.lambda);
  if (ctx.config.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& [cls, c] : terms) arr.push_back({{"class", cls.str()}, {"coefficient", integer_json(c)}});
    ctx.out << Json{{"n", ctx.n}, {"lambda", ctx.config.lambda.str()}, {"class", w.str()}, {"chevalley", arr}}.dump(2)
            << '\n';
    return kExitOk;
  }
  ctx.out << "class " << w.str() << '\n';
  for (const auto& [cls, c] : terms) ctx.out << cls.str() << '\t' << c.str() << '\n';
  return kExitOk;
}

int cmd_admissible(Context& ctx) {
  if (ctx.config.vertex) {
    const SimpleVertex v(*ctx.config.vertex);
    const auto cell = cell_record(v, ctx.borel, ctx.config.lambda);
    if (ctx.config.format == Format::Json) {
      ctx.out << to_json(single_cell_report(ctx, cell)) << '\n';
    } else {
      ctx.out << cell.cls.str() << '\t' << (cell.admissible ? "admissible" : "not admissible") << '\n';
    }
    return kExitOk;
  }
  const auto rows = admissibility_census(ctx.n);
  std::size_t missing = 0;
  for (const auto& r : rows) missing += r.admissible_representatives == 0 ? 1 : 0;
  if (ctx.config.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"class", r.cls.str()},
                     {"length", r.length},
                     {"representatives", r.representatives},
                     {"admissible", r.admissible_representatives},
                     {"avoids_3412_4231", r.avoids_3412_4231}});
    }
    ctx.out << Json{{"n", ctx.n}, {"classes", arr}, {"unrepresented", missing}}.dump(2) << '\n';
    return kExitOk;
  }
  ctx.out << "class\tlength\tcells\tadmissible\tavoids 3412,4231\n";
  for (const auto& r : rows) {
    ctx.out << r.cls.str() << '\t' << r.length << '\t' << r.representatives << '\t' << r.admissible_representatives
            << '\t' << (r.avoids_3412_4231 ? "yes" : "no") << '\n';
  }
  ctx.out << missing << " of " << rows.size() << " classes have no admissible representative\n";
  return kExitOk;
}

int cmd_verify(Context& ctx) {
  const auto report = verify(ctx.config.lambda, ctx.config.threads);
  if (ctx.config.format == Format::Json) {
    ctx.out << to_json(report) << '\n';
  } else {
    ctx.out << report.pairs << " pairs, " << report.mismatches.size() << " mismatches\n";
    ctx.out << report.distance_checks << " facet distance checks, " << report.transposition_checks
            << " transposition checks\n";
    for (const auto& m : report.mismatches) {
      ctx.out << m.check << '\t' << m.sigma.str() << '\t' << m.borel.str() << '\t' << m.detail << '\n';
    }
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_lattice_count(Context& ctx) {
  const GZShape shape(ctx.config.lambda);
  const auto count = count_lattice_points(shape);
  const auto dim = weyl_dimension(ctx.config.lambda);
  if (ctx.config.format == Format::Json) {
    ctx.out << Json{{"n", ctx.n},
                    {"lambda", ctx.config.lambda.str()},
                    {"lattice_points", integer_json(count)},
                    {"weyl_dimension", integer_json(dim)}}
                   .dump(2)
            << '\n';
  } else {
    ctx.out << count.str() << " lattice points, weyl dimension " << dim.str() << '\n';
  }
  return kExitOk;
}

int cmd_oracle_faces(Context& ctx) {
  const GZShape shape(ctx.config.lambda);
  const auto faces = brute_faces(shape);
  std::vector<std::size_t> fvec(static_cast<std::size_t>(shape.dimension()) + 1, 0);
  for (const auto& f : faces) ++fvec[static_cast<std::size_t>(f.dim)];
  auto vertex_list = [](const BruteFace& f) {
    return detail::join(f.vertices, " ", [](const GZPoint& p) { return p.str(); });
  };
  auto active_list = [](const BruteFace& f) {
    return detail::join(f.active, " ", [](const FacetId& id) { return id.str(); });
  };
  if (ctx.config.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& f : faces) {
      Json verts = Json::array();
      for (const auto& p : f.vertices) verts.push_back(p.str());
      Json active = Json::array();
      for (const auto& id : f.active) active.push_back(id.str());
      arr.push_back({{"dim", f.dim}, {"active", active}, {"vertices", verts}});
    }
    ctx.out << Json{{"n", ctx.n}, {"lambda", ctx.config.lambda.str()}, {"f_vector", fvec}, {"faces", arr}}.dump(2)
            << '\n';
    return kExitOk;
  }
  ctx.out << "f-vector " << detail::join(fvec, ",", [](std::size_t x) { return std::to_string(x); }) << '\n';
  for (const auto& f : faces) {
    ctx.out << "dim=" << f.dim << "\tactive " << active_list(f) << "\tvertices " << vertex_list(f) << '\n';
  }
  return kExitOk;
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    require_regular(config.lambda);
    const int n = config.lambda.size();
    if (config.n != 0 && config.n != n) {
      throw InvalidArgument("n = " + std::to_string(config.n) + " but lambda has " + std::to_string(n) + " entries");
    }
    if (config.vertex && config.vertex->size() != n) {
      throw InvalidArgument("--vertex must be a permutation of 1.." + std::to_string(n));
    }
    if (config.borel && config.borel->size() != n) {
      throw InvalidArgument("--borel must be a permutation of 1.." + std::to_string(n));
    }
    Context ctx{config, n, BorelChoice{config.borel.value_or(Permutation::identity(n))}, {}};
    int code = kExitOk;
    switch (config.command) {
      case Command::Vertices: code = cmd_vertices(ctx); break;
      case Command::Face: code = cmd_face(ctx); break;
      case Command::Chevalley: code = cmd_chevalley(ctx); break;
      case Command::ChevalleyClassical: code = cmd_chevalley_classical(ctx); break;
      case Command::Admissible: code = cmd_admissible(ctx); break;
      case Command::Verify: code = cmd_verify(ctx); break;
      case Command::LatticeCount: code = cmd_lattice_count(ctx); break;
      case Command::OracleFaces: code = cmd_oracle_faces(ctx); break;
    }
    return {code, ctx.out.str()};
  } catch (const CapabilityError& e) {
    return {kExitUsage, std::string("capability error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kExitUsage, std::string("usage error: ") + e.what() + "\n"};
  }
}

std::string to_json(const VerificationReport& report) {
  Json cells = Json::array();
  for (const auto& c : report.cells) cells.push_back(cell_json(c));
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back(
        {{"check", m.check}, {"sigma", m.sigma.str()}, {"borel", m.borel.str()}, {"detail", m.detail}});
  }
  const Json doc = {{"n", report.n},
                    {"lambda", report.lambda.str()},
                    {"pairs", report.pairs},
                    {"cells", cells},
                    {"mismatches", mismatches},
                    {"checks",
                     {{"distance", report.distance_checks}, {"transposition", report.transposition_checks}}}};
  return doc.dump(2);
}

VerificationReport report_from_json(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed document: ") + e.what());
  }
  try {
    VerificationReport r;
    r.n = field(doc, "n").get<int>();
    r.lambda = AmbientWeight::parse(field(doc, "lambda").get<std::string>());
    r.pairs = field(doc, "pairs").get<std::size_t>();
    for (const auto& c : field(doc, "cells")) {
      CellRecord cell;
      cell.sigma = perm_field(c, "sigma");
      cell.borel = perm_field(c, "borel");
      cell.cls = perm_field(c, "class");
      cell.dim = field(c, "dim").get<int>();
      cell.admissible = field(c, "admissible").get<bool>();
      for (const auto& t : field(c, "chevalley")) {
        cell.chevalley.push_back(
            {perm_field(t, "class"), integer_from_json(field(t, "coefficient")), field(t, "k").get<int>()});
      }
      r.cells.push_back(std::move(cell));
    }
    for (const auto& m : field(doc, "mismatches")) {
      r.mismatches.push_back({field(m, "check").get<std::string>(), perm_field(m, "sigma"), perm_field(m, "borel"),
                              field(m, "detail").get<std::string>()});
    }
    if (doc.contains("checks")) {
      r.distance_checks = field(doc["checks"], "distance").get<std::size_t>();
      r.transposition_checks = field(doc["checks"], "transposition").get<std::size_t>();
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed document: ") + e.what());
  }
}

}  // namespace gzs
