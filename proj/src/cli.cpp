#include "coamoeba/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "coamoeba/chain_builder.hpp"
#include "coamoeba/degree_oracle.hpp"
#include "coamoeba/error.hpp"
#include "coamoeba/gale_plane.hpp"
#include "coamoeba/render.hpp"

namespace coamoeba::cli {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

std::int64_t to_int(std::string_view tok, std::size_t line, std::size_t col) {
  try {
    const Rational r = Rational::parse(tok);
    if (!r.is_integer()) parse_fail(line, col, "expected an integer, got '" + std::string(tok) + "'");
    return r.num();
  } catch (const Error&) {
    parse_fail(line, col, "expected an integer, got '" + std::string(tok) + "'");
  }
}

InputDocument parse_text(std::string_view text) {
  InputDocument doc;
  doc.b.emplace();
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != ',') ++j;
      tokens.emplace_back(line.substr(i, j - i), i + 1);
      i = j;
    }
    if (!tokens.empty()) {
      if (tokens.size() != 2) {
        parse_fail(line_no, tokens.size() < 2 ? line.size() + 1 : tokens[2].second,
                   "expected two integers per line, got " + std::to_string(tokens.size()));
      }
      doc.b->push_back({to_int(tokens[0].first, line_no, tokens[0].second),
                        to_int(tokens[1].first, line_no, tokens[1].second)});
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return doc;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::vector<std::pair<std::int64_t, std::int64_t>> int_pairs(const Json& j, const std::string& key) {
  if (!j.is_array()) throw Error(ErrorCode::SemanticError, "\"" + key + "\" must be an array of integer pairs");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw Error(ErrorCode::SemanticError, "\"" + key + "\" must be an array of integer pairs");
    }
    out.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
  }
  return out;
}

InputDocument parse_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
    parse_fail(line, col, what);
  }
  if (!j.is_object()) throw Error(ErrorCode::SemanticError, "top level must be an object");
  InputDocument doc;
  const bool has_b = j.contains("b");
  const bool has_forms = j.contains("forms");
  if (has_b == has_forms) throw Error(ErrorCode::SemanticError, "exactly one of \"b\" and \"forms\" is required");
  if (has_b) {
    doc.b.emplace();
    for (auto [x, y] : int_pairs(j["b"], "b")) doc.b->push_back({x, y});
  } else {
    doc.forms.emplace();
    for (auto [a, c] : int_pairs(j["forms"], "forms")) doc.forms->push_back({a, c});
  }
  if (j.contains("pivot")) {
    if (!j["pivot"].is_number_integer() || j["pivot"].get<std::int64_t>() < 1) {
      throw Error(ErrorCode::SemanticError, "\"pivot\" must be a positive integer");
    }
    doc.pivot = j["pivot"].get<std::size_t>();
  }
  if (j.contains("normalize")) {
    if (!j["normalize"].is_boolean()) throw Error(ErrorCode::SemanticError, "\"normalize\" must be a boolean");
    doc.normalize = j["normalize"].get<bool>();
  }
  return doc;
}

// ---------------------------------------------------------------------------

struct Loaded {
  InputDocument doc;
  std::optional<BConfig> b;
  AffineLine line;
};

Loaded load(const InputDocument& doc) {
  Loaded l{doc, std::nullopt, {}};
  const LineOptions opts{doc.normalize};
  if (doc.b) {
    l.b = validate_bconfig(*doc.b);
    const std::size_t pivot = doc.pivot.value_or(l.b->size());
    if (pivot < 1 || pivot > l.b->size()) {
      throw Error(ErrorCode::InvalidPivot, "pivot " + std::to_string(pivot) + " out of range 1.." +
                                               std::to_string(l.b->size()));
    }
    l.line = line_from_bconfig(*l.b, pivot - 1, opts);
  } else {
    l.line = line_from_forms(*doc.forms, opts);
    if (doc.pivot && *doc.pivot != doc.forms->size()) {
      throw Error(ErrorCode::InvalidPivot, "forms input only accepts the last form as pivot");
    }
  }
  return l;
}

const BConfig& require_b(const Loaded& l, const std::string& what) {
  if (!l.b) throw Error(ErrorCode::SemanticError, what + " needs a vector configuration (\"b\"), not forms");
  return *l.b;
}

// Map to T^2: the configuration pushforward, or the identity when the line
// already lives in a 2-torus.
LinearMap2 planar_map(const Loaded& l, const std::string& what) {
  if (l.b) return pushforward_map(line_order(*l.b, l.line));
  if (l.line.n() == 2) return LinearMap2{{Vec2{1, 0}, Vec2{0, 1}}};
  throw Error(ErrorCode::SemanticError, what + " needs a vector configuration or a line in P^2");
}

Json vec_json(const LatticeVec& v) { return Json(v.coords()); }
Json vec_json(Vec2 v) { return Json::array({v.x, v.y}); }

Json input_json(const Loaded& l) {
  Json j;
  if (l.b) {
    Json arr = Json::array();
    const BConfig ordered = line_order(*l.b, l.line);
    for (Vec2 v : ordered.vectors()) arr.push_back(vec_json(v));
    j["b"] = arr;
    j["pivot"] = l.b->size();
  } else {
    Json arr = Json::array();
    for (auto f : l.line.forms) arr.push_back(Json::array({f.alpha, f.beta}));
    j["forms"] = arr;
  }
  j["normalize"] = l.doc.normalize;
  return j;
}

Json line_json(const AffineLine& line) {
  Json j;
  Json forms = Json::array();
  for (auto f : line.forms) forms.push_back(Json::array({f.alpha, f.beta}));
  j["forms"] = forms;
  Json perm = Json::array();
  for (auto p : line.perm) perm.push_back(p + 1);
  j["perm"] = perm;
  j["signs"] = line.signs;
  Json blocks = Json::array();
  for (const Block& b : line.blocks) {
    blocks.push_back({{"m", b.m + 1}, {"n", b.n + 1}, {"m_next", b.m_next + 1}, {"zeta", b.zeta.str()}});
  }
  j["blocks"] = blocks;
  if (line.chart) {
    j["chart"] = {{"v", vec_json(line.chart->v)}, {"x", Json::array({line.chart->x.x.str(), line.chart->x.y.str()})}};
  }
  return j;
}

Json class_json(const HomologyClass2& cls) {
  Json arr = Json::array();
  for (const auto& [ij, c] : cls.coeff) arr.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"coeff", c}});
  return arr;
}

std::string class_str(const HomologyClass2& cls) {
  if (cls.coeff.empty()) return "0";
  std::string s;
  for (const auto& [ij, c] : cls.coeff) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += "e" + std::to_string(ij.first + 1) + "^e" + std::to_string(ij.second + 1);
  }
  return s;
}

TorusPoint2 parse_theta(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "--theta expects 'a/b,c/d'");
  return TorusPoint2::reduced(Rational::parse(std::string_view(text).substr(0, comma)),
                              Rational::parse(std::string_view(text).substr(comma + 1)));
}

// ---------------------------------------------------------------------------

struct Settings {
  std::string input = "-";
  std::optional<std::size_t> pivot;
  bool no_normalize = false;
  std::string theta;
  std::string out_path;
  int resolution = 256;
  std::string palette = "gray";
  bool no_labels = false;
  std::size_t count = 10000;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  bool with_points = false;
};

int cmd_validate(const Loaded& l, Json& out, std::ostream& err) {
  out["valid"] = true;
  out["kind"] = l.b ? "b" : "forms";
  out["n"] = l.line.n();
  out["m"] = l.line.m();
  err << "valid: N=" << l.line.n() << ", M=" << l.line.m() << "\n";
  return kOk;
}

int cmd_chains(const Loaded& l, Json& out, std::ostream& err) {
  const Json input = input_json(l);
  for (const auto& [k, v] : input.items()) out[k] = v;
  out["line"] = line_json(l.line);
  const CoamoebaSkeleton skel = coamoeba_vertices(l.line);
  Json verts = Json::array();
  Json mod2 = Json::array();
  for (const auto& p : skel.vertices) {
    verts.push_back(vec_json(p));
    mod2.push_back(vec_json(p.mod2()));
  }
  out["vertices"] = verts;
  out["vertices_mod2"] = mod2;
  for (const auto& [name, list] : {std::pair{"f", &skel.f}, std::pair{"g", &skel.g}, std::pair{"h", &skel.h}}) {
    Json arr = Json::array();
    for (const auto& v : *list) arr.push_back(vec_json(v));
    out[name] = arr;
  }
  const ZonotopePath path = zonotope_path(l.line);
  Json pts = Json::array();
  for (const PathPoint& p : path.points()) {
    pts.push_back({{"j", p.j}, {"primed", p.primed}, {"point", vec_json(p.point)}});
  }
  out["path"] = pts;
  Json tris = Json::array();
  for (const Triangle& t : zonotope_chain(path).triangles) {
    tris.push_back({{"a", vec_json(t.a)}, {"b", vec_json(t.b)}, {"c", vec_json(t.c)}, {"coefficient", t.coefficient}});
  }
  out["triangles"] = tris;
  out["residual_atoms"] = verify_cycle(l.line).residual.size();
  err << "chains: M=" << l.line.m() << ", " << path.p.size() * 2 << " path points, " << tris.size()
      << " triangles\n";
  return kOk;
}

int cmd_class(const Loaded& l, Json& out, std::ostream& err) {
  const HomologyClass2 cls = homology_class(l.line);
  out["class"] = class_json(cls);
  err << "class: " << class_str(cls);
  if (l.b) {
    const std::int64_t pushed = push_class(cls, line_order(*l.b, l.line));
    out["pushed"] = pushed;
    err << ", pushed " << pushed;
  }
  err << "\n";
  return kOk;
}

int cmd_db(const Loaded& l, Json& out, std::ostream& err) {
  const BConfig& b = require_b(l, "db");
  Json table = Json::array();
  for (const auto& c : d_B_table(b)) table.push_back({{"v", vec_json(c.v)}, {"value", c.value}});
  const std::int64_t value = d_B(b);
  out["d_B"] = value;
  out["chambers"] = table;
  err << "d_B = " << value << " over " << table.size() << " chambers\n";
  return kOk;
}

int cmd_dual(const Loaded& l, Json& out, std::ostream& err) {
  const GaleDualA a = gale_dual(require_b(l, "dual"));
  Json pts = Json::array();
  for (const auto& p : a.points) pts.push_back(vec_json(p));
  const std::int64_t vol = normalized_volume(a);
  out["dimension"] = a.dim;
  out["points"] = pts;
  out["normalized_volume"] = vol;
  err << "Gale dual in dimension " << a.dim << ", normalized volume " << vol << "\n";
  return kOk;
}

int cmd_degree(const Loaded& l, const Settings& s, Json& out, std::ostream& err) {
  if (s.theta.empty()) throw Error(ErrorCode::ParseError, "--theta is required");
  const TorusPoint2 theta = parse_theta(s.theta);
  const LinearMap2 map = planar_map(l, "degree");
  const std::int64_t coam = coamoeba_degree(l.line, map, theta);
  const std::int64_t zono = torus_degree_triangles(pushed_zonotope_chain(l.line, map), theta);
  out["theta"] = Json::array({theta.x.str(), theta.y.str()});
  out["coamoeba"] = coam;
  out["zonotope"] = zono;
  out["cycle"] = coam + zono;
  err << "degree at (" << theta.str() << "): coamoeba " << coam << " + zonotope " << zono << " = " << coam + zono
      << "\n";
  return kOk;
}

int cmd_verify(const Loaded& l, const Settings& s, Json& out, std::ostream& err) {
  Json checks = Json::array();
  bool ok = true;
  auto record = [&](const std::string& name, bool pass, Json detail = Json::object()) {
    Json c = {{"name", name}, {"pass", pass}};
    for (auto& [k, v] : detail.items()) c[k] = v;
    checks.push_back(c);
    ok = ok && pass;
    err << (pass ? "PASS " : "FAIL ") << name << "\n";
  };

  record("cycle_residual_empty", verify_cycle(l.line).ok());
  const ZonotopePath path = zonotope_path(l.line);
  record("path_antipodal", path.p[l.line.m() + 1] == -path.p[0]);

  const HomologyClass2 cls = homology_class(l.line);
  Json mismatches = Json::array();
  for (std::size_t i = 0; i < l.line.n(); ++i) {
    for (std::size_t j = i + 1; j < l.line.n(); ++j) {
      const std::int64_t oracle = class_oracle_2d(l.line, i, j);
      if (oracle != cls.at(i, j)) mismatches.push_back({{"i", i + 1}, {"j", j + 1}, {"oracle", oracle}});
    }
  }
  record("class_oracle_matches_formula", mismatches.empty(), {{"mismatches", mismatches}});
  out["class"] = class_json(cls);

  std::optional<std::int64_t> expected;
  LinearMap2 map;
  if (l.b) {
    const BConfig ordered = line_order(*l.b, l.line);
    const std::int64_t db = d_B(*l.b);
    const std::int64_t pushed = push_class(cls, ordered);
    out["d_B"] = db;
    out["pushed"] = pushed;
    record("pushed_class_equals_d_B", pushed == db);
    try {
      const std::int64_t vol = normalized_volume(gale_dual(*l.b));
      out["normalized_volume"] = vol;
      record("normalized_volume_equals_d_B", vol == db);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotGaleDualizable) throw;
      out["normalized_volume"] = nullptr;
    }
    expected = db;
    map = pushforward_map(ordered);
  } else if (l.line.n() == 2) {
    expected = cls.at(0, 1);
    map = LinearMap2{{Vec2{1, 0}, Vec2{0, 1}}};
  }

  if (expected) {
    std::mt19937_64 rng(s.seed);
    Json degrees = Json::array();
    bool constant = true;
    for (std::size_t k = 0; k < s.samples; ++k) {
      const std::int64_t d = at_generic_point(rng, [&](const TorusPoint2& t) { return cycle_degree(l.line, map, t); });
      degrees.push_back(d);
      constant = constant && d == *expected;
    }
    out["degrees"] = degrees;
    record("cycle_degree_constant", constant, {{"expected", *expected}});
  }
  out["checks"] = checks;
  out["ok"] = ok;
  return ok ? kOk : kVerificationFailed;
}

RenderOptions render_options(const Settings& s) {
  RenderOptions o;
  o.resolution = s.resolution;
  o.palette = s.palette;
  o.labels = !s.no_labels;
  return o;
}

int write_svg(const std::string& svg, const Settings& s, Json& out, std::ostream& err) {
  if (s.out_path.empty()) throw Error(ErrorCode::ParseError, "--out is required");
  std::ofstream f(s.out_path, std::ios::binary);
  if (!f || !(f << svg) || !f.flush()) throw Error(ErrorCode::SemanticError, "cannot write " + s.out_path);
  out["out"] = s.out_path;
  out["bytes"] = svg.size();
  err << "wrote " << svg.size() << " bytes to " << s.out_path << "\n";
  return kOk;
}

int cmd_render(const Loaded& l, const Settings& s, Json& out, std::ostream& err) {
  return write_svg(render_torus(l.line, require_b(l, "render"), render_options(s)), s, out, err);
}

int cmd_cover(const Loaded& l, const Settings& s, Json& out, std::ostream& err) {
  return write_svg(render_cover(zonotope_path(l.line), planar_map(l, "cover"), render_options(s)), s, out, err);
}

int cmd_sample(const Loaded& l, const Settings& s, Json& out, std::ostream& err) {
  const SampleReport rep = sample_coamoeba(l.line, require_b(l, "sample"), s.count, s.seed);
  out["count"] = s.count;
  out["seed"] = s.seed;
  out["checked"] = rep.checked;
  out["skipped"] = rep.skipped;
  Json viol = Json::array();
  for (const auto& v : rep.violations) {
    viol.push_back({{"index", v.index}, {"theta", Json::array({v.theta.x.str(), v.theta.y.str()})}, {"degree", v.degree}});
  }
  out["violations"] = viol;
  if (s.with_points) {
    Json pts = Json::array();
    for (const auto& p : rep.points) pts.push_back(Json::array({p[0], p[1]}));
    out["points"] = pts;
  }
  err << "sampled " << s.count << ": " << rep.checked << " checked, " << rep.skipped << " near edges, "
      << rep.violations.size() << " violations\n";
  return rep.violations.empty() ? kOk : kVerificationFailed;
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

InputDocument parse_input(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Coamoeba and zonotope chains of real lines, with exact degree checks", "coamoeba"};
  app.require_subcommand(1);
  app.add_option("--pivot", s.pivot, "1-based index of the vector closing the line (default: last)");
  app.add_flag("--no-normalize", s.no_normalize, "keep input order of sign groups inside finite blocks");

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", s.input, "input file, '-' for stdin")->capture_default_str();
    sub->add_option("--pivot", s.pivot, "1-based index of the vector closing the line (default: last)");
    sub->add_flag("--no-normalize", s.no_normalize, "keep input order of sign groups inside finite blocks");
    return sub;
  };
  add("validate", "check the input and report N and M");
  add("chains", "dump vertices, block vectors, P(l) and triangles");
  add("class", "homology class and its pushed integer");
  add("db", "d_B with the per-chamber table");
  add("dual", "Gale dual A and its normalized volume");
  add("degree", "multiplicities at one torus point")
      ->add_option("--theta", s.theta, "point 'a/b,c/d' in units of pi")
      ->required();
  CLI::App* verify = add("verify", "run every consistency check");
  verify->add_option("--samples", s.samples, "number of random generic points")->capture_default_str();
  verify->add_option("--seed", s.seed, "seed for the random points")->capture_default_str();
  for (const char* name : {"render", "cover"}) {
    CLI::App* sub = add(name, std::string(name) == "render" ? "SVG of the fundamental domain"
                                                            : "SVG of the zonotope chain image in the plane");
    sub->add_option("--out", s.out_path, "output SVG file")->required();
    sub->add_option("--resolution", s.resolution, "cells per side")->capture_default_str();
    sub->add_option("--palette", s.palette, "gray or blue")->capture_default_str();
    sub->add_flag("--no-labels", s.no_labels, "omit point labels");
  }
  CLI::App* sample = add("sample", "Monte-Carlo consistency check of the coamoeba");
  sample->add_option("--count", s.count, "number of samples")->capture_default_str();
  sample->add_option("--seed", s.seed, "seed")->capture_default_str();
  sample->add_flag("--points", s.with_points, "include the sampled points in the output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Json result;
  result["command"] = command;
  int code = kOk;
  try {
    std::string text;
    if (s.input == "-") {
      text = read_all(in);
    } else {
      std::ifstream f(s.input, std::ios::binary);
      if (!f) throw Error(ErrorCode::ParseError, "cannot open " + s.input);
      text = read_all(f);
    }
    InputDocument doc = parse_input(text);
    if (s.pivot) doc.pivot = s.pivot;
    if (s.no_normalize) doc.normalize = false;
    const Loaded l = load(doc);

    if (command == "validate") code = cmd_validate(l, result, err);
    else if (command == "chains") code = cmd_chains(l, result, err);
    else if (command == "class") code = cmd_class(l, result, err);
    else if (command == "db") code = cmd_db(l, result, err);
    else if (command == "dual") code = cmd_dual(l, result, err);
    else if (command == "degree") code = cmd_degree(l, s, result, err);
    else if (command == "verify") code = cmd_verify(l, s, result, err);
    else if (command == "render") code = cmd_render(l, s, result, err);
    else if (command == "cover") code = cmd_cover(l, s, result, err);
    else if (command == "sample") code = cmd_sample(l, s, result, err);
  } catch (const Error& e) {
    code = is_internal(e.code()) ? kInternalError : kInputError;
    result["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    code = kInternalError;
    result["error"] = {{"code", "Internal"}, {"message", e.what()}};
    err << "internal error: " << e.what() << "\n";
  }
  out << result.dump() << "\n";
  return code;
}

}  // namespace coamoeba::cli
