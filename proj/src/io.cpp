#include "rbcat/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "rbcat/errors.hpp"

namespace rbcat::io {

namespace fs = std::filesystem;
using njson = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw CheckError(Code::ParseError, what);
}

std::string read_file_or_fail(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read file: " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

njson parse_json_text(const std::string& text, const std::string& ctx) {
  try {
    return njson::parse(text);
  } catch (const njson::exception& e) {
    fail(ctx + ": invalid JSON: " + e.what());
  }
}

njson parse_json_file(const fs::path& path) {
  return parse_json_text(read_file_or_fail(path), path.string());
}

fs::path resolve(const std::string& ref, const fs::path& base) {
  fs::path p(ref);
  if (p.is_absolute()) return p;
  return base / p;
}

const njson& field(const njson& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key))
    fail(ctx + ": missing field \"" + key + "\"");
  return j.at(key);
}

int field_int(const njson& j, const char* key, const std::string& ctx) {
  const njson& v = field(j, key, ctx);
  if (!v.is_number_integer())
    fail(ctx + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::string field_string(const njson& j, const char* key,
                         const std::string& ctx) {
  const njson& v = field(j, key, ctx);
  if (!v.is_string())
    fail(ctx + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<int> int_vector(const njson& v, const std::string& ctx) {
  if (!v.is_array()) fail(ctx + ": expected an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number_integer()) fail(ctx + ": expected an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<int> field_int_vector(const njson& j, const char* key,
                                  const std::string& ctx) {
  return int_vector(field(j, key, ctx), ctx + ": \"" + key + "\"");
}

std::vector<std::vector<int>> field_int_matrix(const njson& j, const char* key,
                                               const std::string& ctx) {
  const njson& v = field(j, key, ctx);
  if (!v.is_array()) fail(ctx + ": field \"" + key + "\" must be an array");
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (const auto& row : v)
    out.push_back(int_vector(row, ctx + ": \"" + key + "\""));
  return out;
}

Rational rational_entry(const njson& v, const std::string& ctx) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() &&
      v[1].is_number_integer()) {
    const long long num = v[0].get<long long>();
    const long long den = v[1].get<long long>();
    if (den == 0) fail(ctx + ": rational with zero denominator");
    return Rational(num, den);
  }
  fail(ctx + ": expected a rational as [num, den] or an integer");
}

RatVector rat_vector(const njson& v, const std::string& ctx) {
  if (!v.is_array()) fail(ctx + ": expected an array of rationals");
  RatVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(rational_entry(e, ctx));
  return out;
}

RatMatrix rat_matrix(const njson& v, const std::string& ctx) {
  if (!v.is_array()) fail(ctx + ": expected a matrix of rationals");
  RatMatrix out;
  out.reserve(v.size());
  for (const auto& row : v) out.push_back(rat_vector(row, ctx));
  return out;
}

RatMatrix field_rat_matrix(const njson& j, const char* key,
                           const std::string& ctx) {
  return rat_matrix(field(j, key, ctx), ctx + ": \"" + key + "\"");
}

std::vector<RatMatrix> field_rat_matrix_list(const njson& j, const char* key,
                                             const std::string& ctx) {
  const njson& v = field(j, key, ctx);
  if (!v.is_array()) fail(ctx + ": field \"" + key + "\" must be an array");
  std::vector<RatMatrix> out;
  out.reserve(v.size());
  for (const auto& m : v)
    out.push_back(rat_matrix(m, ctx + ": \"" + key + "\""));
  return out;
}

// ---- loaders from parsed JSON (refs resolve against `base`) ----

GroupPtr group_from_json(const njson& j, const fs::path& base,
                         const std::string& ctx);
TwoGroupPtr two_group_from_json(const njson& j, const fs::path& base,
                                const std::string& ctx);
XModPtr xmod_from_json(const njson& j, const fs::path& base,
                       const std::string& ctx);
LieAlgebraPtr lie_algebra_from_json(const njson& j, const fs::path& base,
                                    const std::string& ctx);
LieXModPtr lie_xmod_from_json(const njson& j, const fs::path& base,
                              const std::string& ctx);

GroupPtr group_from_json(const njson& j, const fs::path& base,
                         const std::string& ctx) {
  if (j.is_string()) return load_group(j.get<std::string>(), base);
  if (!j.is_object()) fail(ctx + ": group must be a name, a path or an object");
  const int n = field_int(j, "order", ctx);
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const njson& ls = j.at("labels");
    if (!ls.is_array()) fail(ctx + ": \"labels\" must be an array of strings");
    for (const auto& l : ls) {
      if (!l.is_string())
        fail(ctx + ": \"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  const auto rows = field_int_matrix(j, "table", ctx);
  if ((int)rows.size() != n) fail(ctx + ": \"table\" must have \"order\" rows");
  return validate_group(rows, std::nullopt, std::move(labels));
}

TwoGroupPtr two_group_from_json(const njson& j, const fs::path& base,
                                const std::string& ctx) {
  if (j.is_string()) return load_two_group(j.get<std::string>(), base);
  if (!j.is_object()) fail(ctx + ": 2-group must be a path or an object");
  GroupPtr arrow = group_from_json(field(j, "arrow_group", ctx), base,
                                   ctx + ": \"arrow_group\"");
  GroupPtr object = group_from_json(field(j, "object_group", ctx), base,
                                    ctx + ": \"object_group\"");
  return validate_two_group(std::move(arrow), std::move(object),
                            field_int_vector(j, "src", ctx),
                            field_int_vector(j, "tgt", ctx),
                            field_int_vector(j, "unit", ctx));
}

XModPtr xmod_from_json(const njson& j, const fs::path& base,
                       const std::string& ctx) {
  if (j.is_string()) return load_xmod(j.get<std::string>(), base);
  if (!j.is_object()) fail(ctx + ": crossed module must be a path or object");
  GroupPtr g1 =
      group_from_json(field(j, "g1", ctx), base, ctx + ": \"g1\"");
  GroupPtr g0 =
      group_from_json(field(j, "g0", ctx), base, ctx + ": \"g0\"");
  return validate_xmod(std::move(g1), std::move(g0),
                       field_int_vector(j, "mu", ctx),
                       field_int_matrix(j, "act", ctx));
}

LieAlgebraPtr lie_algebra_from_json(const njson& j, const fs::path& base,
                                    const std::string& ctx) {
  if (j.is_string()) return load_lie_algebra(j.get<std::string>(), base);
  if (!j.is_object()) fail(ctx + ": Lie algebra must be a path or an object");
  const int dim = field_int(j, "dim", ctx);
  const njson& st = field(j, "structure", ctx);
  if (!st.is_array()) fail(ctx + ": \"structure\" must be an array");
  std::vector<std::vector<RatVector>> c;
  for (const auto& row : st) {
    if (!row.is_array()) fail(ctx + ": \"structure\" must be a 3-level array");
    std::vector<RatVector> crow;
    for (const auto& entry : row)
      crow.push_back(rat_vector(entry, ctx + ": \"structure\""));
    c.push_back(std::move(crow));
  }
  return validate_lie_algebra(dim, std::move(c));
}

LieXModPtr lie_xmod_from_json(const njson& j, const fs::path& base,
                              const std::string& ctx) {
  if (j.is_string()) return load_lie_xmod(j.get<std::string>(), base);
  if (!j.is_object())
    fail(ctx + ": Lie crossed module must be a path or an object");
  LieAlgebraPtr h1 =
      lie_algebra_from_json(field(j, "h1", ctx), base, ctx + ": \"h1\"");
  LieAlgebraPtr h0 =
      lie_algebra_from_json(field(j, "h0", ctx), base, ctx + ": \"h0\"");
  return validate_lie_xmod(std::move(h1), std::move(h0),
                           field_rat_matrix(j, "dbar", ctx),
                           field_rat_matrix_list(j, "act", ctx));
}

GroupAction group_action_from_json(const njson& j, const fs::path& base,
                                   const std::string& ctx) {
  GroupPtr actor =
      group_from_json(field(j, "actor", ctx), base, ctx + ": \"actor\"");
  GroupPtr target =
      group_from_json(field(j, "target", ctx), base, ctx + ": \"target\"");
  return validate_group_action(std::move(actor), std::move(target),
                               field_int_matrix(j, "perms", ctx));
}

TwoGroupAction two_group_action_from_json(const njson& j, const fs::path& base,
                                          const std::string& ctx) {
  TwoGroupPtr p =
      two_group_from_json(field(j, "actor", ctx), base, ctx + ": \"actor\"");
  TwoGroupPtr q =
      two_group_from_json(field(j, "target", ctx), base, ctx + ": \"target\"");
  GroupAction phi = validate_group_action(
      p->arrow_group(), q->arrow_group(), field_int_matrix(j, "perms", ctx),
      "arrow-level action");
  const njson& obj = field(j, "object_level", ctx);
  GroupAction phi0 = validate_group_action(
      p->object_group(), q->object_group(),
      field_int_matrix(obj, "perms", ctx + ": \"object_level\""),
      "object-level action");
  return validate_two_group_action(std::move(p), std::move(q), std::move(phi),
                                   std::move(phi0));
}

XModAction xmod_action_from_json(const njson& j, const fs::path& base,
                                 const std::string& ctx) {
  XModPtr g =
      xmod_from_json(field(j, "actor", ctx), base, ctx + ": \"actor\"");
  XModPtr h =
      xmod_from_json(field(j, "target", ctx), base, ctx + ": \"target\"");
  return validate_xmod_action(std::move(g), std::move(h),
                              field_int_matrix(j, "alpha", ctx),
                              field_int_matrix(j, "beta1", ctx),
                              field_int_matrix(j, "beta0", ctx));
}

LieAction lie_action_from_json(const njson& j, const fs::path& base,
                               const std::string& ctx) {
  LieAlgebraPtr actor =
      lie_algebra_from_json(field(j, "actor", ctx), base, ctx + ": \"actor\"");
  LieAlgebraPtr target = lie_algebra_from_json(field(j, "target", ctx), base,
                                               ctx + ": \"target\"");
  return validate_lie_action(std::move(actor), std::move(target),
                             field_rat_matrix_list(j, "matrices", ctx));
}

LieXModAction lie_xmod_action_from_json(const njson& j, const fs::path& base,
                                        const std::string& ctx) {
  LieXModPtr actor =
      lie_xmod_from_json(field(j, "actor", ctx), base, ctx + ": \"actor\"");
  LieXModPtr target =
      lie_xmod_from_json(field(j, "target", ctx), base, ctx + ": \"target\"");
  return validate_lie_xmod_action(std::move(actor), std::move(target),
                                  field_rat_matrix_list(j, "alpha", ctx),
                                  field_rat_matrix_list(j, "beta1", ctx),
                                  field_rat_matrix_list(j, "beta0", ctx));
}

LoadedAction action_from_json(const njson& j, Level level,
                              const fs::path& base, const std::string& ctx) {
  LoadedAction a;
  a.level = level;
  switch (level) {
    case Level::Group:
      a.group = group_action_from_json(j, base, ctx);
      break;
    case Level::TwoGroup:
      a.two_group = two_group_action_from_json(j, base, ctx);
      break;
    case Level::XMod:
      a.xmod = xmod_action_from_json(j, base, ctx);
      break;
    case Level::Lie:
      a.lie = lie_action_from_json(j, base, ctx);
      break;
    case Level::LieXMod:
      a.lie_xmod = lie_xmod_action_from_json(j, base, ctx);
      break;
  }
  return a;
}

// ---- serialization helpers ----

ojson int_matrix_json(const std::vector<std::vector<int>>& rows) {
  ojson out = ojson::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

ojson rational_json(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  using big = boost::multiprecision::cpp_int;
  const big lo = std::numeric_limits<long long>::min();
  const big hi = std::numeric_limits<long long>::max();
  if (num < lo || num > hi || den > hi)
    fail("rational exceeds the 64-bit serialization range");
  return ojson::array(
      {num.convert_to<long long>(), den.convert_to<long long>()});
}

ojson rat_matrix_json(const RatMatrix& m) {
  ojson out = ojson::array();
  for (const auto& row : m) {
    ojson r = ojson::array();
    for (const auto& q : row) r.push_back(rational_json(q));
    out.push_back(std::move(r));
  }
  return out;
}

ojson group_json(const FiniteGroup& g) {
  ojson out;
  out["order"] = g.order();
  std::vector<std::vector<int>> rows(g.order(), std::vector<int>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) rows[x][y] = g.mul(x, y);
  out["table"] = int_matrix_json(rows);
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

ojson two_group_json(const TwoGroup& p) {
  ojson out;
  out["arrow_group"] = group_json(*p.arrow_group());
  out["object_group"] = group_json(*p.object_group());
  out["src"] = p.src_map();
  out["tgt"] = p.tgt_map();
  out["unit"] = p.unit_map();
  return out;
}

ojson xmod_json(const CrossedModule& x) {
  ojson out;
  out["g1"] = group_json(*x.g1());
  out["g0"] = group_json(*x.g0());
  std::vector<int> mu(x.g1()->order());
  for (int a = 0; a < x.g1()->order(); ++a) mu[a] = x.boundary(a);
  out["mu"] = mu;
  std::vector<std::vector<int>> act(x.g0()->order(),
                                    std::vector<int>(x.g1()->order()));
  for (int g = 0; g < x.g0()->order(); ++g)
    for (int a = 0; a < x.g1()->order(); ++a) act[g][a] = x.act_of(g, a);
  out["act"] = int_matrix_json(act);
  return out;
}

ojson group_action_json(const GroupAction& a) {
  ojson out;
  out["actor"] = group_json(*a.actor());
  out["target"] = group_json(*a.target());
  out["perms"] = int_matrix_json(a.perms());
  return out;
}

ojson two_group_action_json(const TwoGroupAction& a) {
  ojson out;
  out["actor"] = two_group_json(*a.actor());
  out["target"] = two_group_json(*a.target());
  out["perms"] = int_matrix_json(a.phi().perms());
  ojson obj;
  obj["perms"] = int_matrix_json(a.phi0().perms());
  out["object_level"] = std::move(obj);
  return out;
}

ojson xmod_action_json(const XModAction& a) {
  ojson out;
  out["actor"] = xmod_json(*a.actor_xm());
  out["target"] = xmod_json(*a.target_xm());
  const int n1 = a.actor_xm()->g1()->order();
  const int n0 = a.actor_xm()->g0()->order();
  std::vector<std::vector<int>> alpha, beta1, beta0;
  for (int x = 0; x < n1; ++x) alpha.push_back(a.alpha_map(x));
  for (int x = 0; x < n0; ++x) beta1.push_back(a.beta1(x));
  for (int x = 0; x < n0; ++x) beta0.push_back(a.beta0(x));
  out["alpha"] = int_matrix_json(alpha);
  out["beta1"] = int_matrix_json(beta1);
  out["beta0"] = int_matrix_json(beta0);
  return out;
}

ojson lie_algebra_json(const LieAlgebra& g) {
  ojson out;
  out["dim"] = g.dim();
  ojson st = ojson::array();
  for (int i = 0; i < g.dim(); ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < g.dim(); ++j) {
      ojson entry = ojson::array();
      for (const auto& q : g.bracket(i, j)) entry.push_back(rational_json(q));
      row.push_back(std::move(entry));
    }
    st.push_back(std::move(row));
  }
  out["structure"] = std::move(st);
  return out;
}

ojson lie_xmod_json(const LieXMod& x) {
  ojson out;
  out["h1"] = lie_algebra_json(*x.h1());
  out["h0"] = lie_algebra_json(*x.h0());
  out["dbar"] = rat_matrix_json(x.boundary());
  ojson act = ojson::array();
  for (int u = 0; u < x.h0()->dim(); ++u)
    act.push_back(rat_matrix_json(x.act().matrix(u)));
  out["act"] = std::move(act);
  return out;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

Level parse_level(const std::string& name) {
  if (name == "group") return Level::Group;
  if (name == "two_group") return Level::TwoGroup;
  if (name == "xmod") return Level::XMod;
  if (name == "lie") return Level::Lie;
  if (name == "lie_xmod") return Level::LieXMod;
  fail("unknown level \"" + name +
       "\" (expected group, two_group, xmod, lie or lie_xmod)");
}

std::string level_name(Level level) {
  switch (level) {
    case Level::Group: return "group";
    case Level::TwoGroup: return "two_group";
    case Level::XMod: return "xmod";
    case Level::Lie: return "lie";
    case Level::LieXMod: return "lie_xmod";
  }
  return "?";
}

bool is_builtin_group(const std::string& name) {
  return name == "T" || name == "Z2" || name == "Z3" || name == "Z4" ||
         name == "Z2xZ2" || name == "S3";
}

GroupPtr builtin_group(const std::string& name) {
  if (name == "T") return make_trivial_group();
  if (name == "Z2") return make_cyclic_group(2);
  if (name == "Z3") return make_cyclic_group(3);
  if (name == "Z4") return make_cyclic_group(4);
  if (name == "Z2xZ2") return make_klein_group();
  if (name == "S3") return make_s3();
  fail("unknown built-in group \"" + name + "\"");
}

GroupPtr load_group(const std::string& ref, const fs::path& base) {
  if (is_builtin_group(ref)) return builtin_group(ref);
  const fs::path path = resolve(ref, base);
  return group_from_json(parse_json_file(path), path.parent_path(),
                         path.string());
}

TwoGroupPtr load_two_group(const std::string& ref, const fs::path& base) {
  const fs::path path = resolve(ref, base);
  return two_group_from_json(parse_json_file(path), path.parent_path(),
                             path.string());
}

XModPtr load_xmod(const std::string& ref, const fs::path& base) {
  const fs::path path = resolve(ref, base);
  return xmod_from_json(parse_json_file(path), path.parent_path(),
                        path.string());
}

LieAlgebraPtr load_lie_algebra(const std::string& ref, const fs::path& base) {
  const fs::path path = resolve(ref, base);
  return lie_algebra_from_json(parse_json_file(path), path.parent_path(),
                               path.string());
}

LieXModPtr load_lie_xmod(const std::string& ref, const fs::path& base) {
  const fs::path path = resolve(ref, base);
  return lie_xmod_from_json(parse_json_file(path), path.parent_path(),
                            path.string());
}

GroupAction load_group_action(const std::string& ref, const fs::path& base) {
  const fs::path path = resolve(ref, base);
  return group_action_from_json(parse_json_file(path), path.parent_path(),
                                path.string());
}

TwoGroupAction load_two_group_action(const std::string& ref,
                                     const fs::path& base) {
  const fs::path path = resolve(ref, base);
  return two_group_action_from_json(parse_json_file(path), path.parent_path(),
                                    path.string());
}

XModAction load_xmod_action(const std::string& ref, const fs::path& base) {
  const fs::path path = resolve(ref, base);
  return xmod_action_from_json(parse_json_file(path), path.parent_path(),
                               path.string());
}

LieAction load_lie_action(const std::string& ref, const fs::path& base) {
  const fs::path path = resolve(ref, base);
  return lie_action_from_json(parse_json_file(path), path.parent_path(),
                              path.string());
}

LieXModAction load_lie_xmod_action(const std::string& ref,
                                   const fs::path& base) {
  const fs::path path = resolve(ref, base);
  return lie_xmod_action_from_json(parse_json_file(path), path.parent_path(),
                                   path.string());
}

LoadedAction load_action(const std::string& ref, Level level,
                         const fs::path& base) {
  const fs::path path = resolve(ref, base);
  return action_from_json(parse_json_file(path), level, path.parent_path(),
                          path.string());
}

LoadedOperator load_operator(const std::string& ref, const fs::path& base) {
  const fs::path path = resolve(ref, base);
  const njson j = parse_json_file(path);
  const std::string ctx = path.string();
  const fs::path dir = path.parent_path();

  LoadedOperator op;
  const Level level = parse_level(field_string(j, "level", ctx));
  if (j.contains("kind")) {
    const std::string kind = field_string(j, "kind", ctx);
    if (kind == "rrb")
      op.kind = OpKind::RotaBaxter;
    else if (kind == "crossed_hom")
      op.kind = OpKind::CrossedHom;
    else
      fail(ctx + ": unknown kind \"" + kind +
           "\" (expected rrb or crossed_hom)");
  }
  const njson& aj = field(j, "action", ctx);
  if (aj.is_string()) {
    op.action = load_action(aj.get<std::string>(), level, dir);
  } else {
    op.action = action_from_json(aj, level, dir, ctx + ": \"action\"");
  }

  // Crossed-homomorphism files may use D/D0/D1 in place of B/B0/B1.
  auto pick = [&](const char* b_key, const char* d_key) -> const char* {
    if (op.kind == OpKind::CrossedHom && j.contains(d_key)) return d_key;
    return b_key;
  };
  switch (level) {
    case Level::Group:
      op.t1 = field_int_vector(j, pick("B", "D"), ctx);
      break;
    case Level::TwoGroup:
      op.t1 = field_int_vector(j, pick("B", "D"), ctx);
      op.t0 = field_int_vector(j, pick("B0", "D0"), ctx);
      break;
    case Level::XMod:
      op.t1 = field_int_vector(j, pick("B1", "D1"), ctx);
      op.t0 = field_int_vector(j, pick("B0", "D0"), ctx);
      break;
    case Level::Lie:
      op.m1 = field_rat_matrix(j, pick("B", "D"), ctx);
      break;
    case Level::LieXMod:
      op.m1 = field_rat_matrix(j, pick("B1", "D1"), ctx);
      op.m0 = field_rat_matrix(j, pick("B0", "D0"), ctx);
      break;
  }
  return op;
}

std::string validate_file(const std::string& kind, const std::string& ref,
                          std::optional<Level> level, const fs::path& base) {
  if (kind == "group") {
    GroupPtr g = load_group(ref, base);
    return "group of order " + std::to_string(g->order());
  }
  if (kind == "two_group") {
    TwoGroupPtr p = load_two_group(ref, base);
    return "2-group with " + std::to_string(p->arrows()) + " arrow" +
           (p->arrows() == 1 ? "" : "s") + " over " +
           std::to_string(p->objects()) + " object" +
           (p->objects() == 1 ? "" : "s");
  }
  if (kind == "xmod") {
    XModPtr x = load_xmod(ref, base);
    return "crossed module (|G1|=" + std::to_string(x->g1()->order()) +
           ", |G0|=" + std::to_string(x->g0()->order()) + ")";
  }
  if (kind == "lie") {
    LieAlgebraPtr g = load_lie_algebra(ref, base);
    return "Lie algebra of dimension " + std::to_string(g->dim());
  }
  if (kind == "lie_xmod") {
    LieXModPtr x = load_lie_xmod(ref, base);
    return "Lie crossed module (dim h1=" + std::to_string(x->h1()->dim()) +
           ", dim h0=" + std::to_string(x->h0()->dim()) + ")";
  }
  if (kind == "action") {
    if (!level) fail("validating an action requires --level");
    load_action(ref, *level, base);
    return level_name(*level) + " action";
  }
  if (kind == "operator") {
    LoadedOperator op = load_operator(ref, base);
    return std::string(op.kind == OpKind::RotaBaxter
                           ? "Rota-Baxter operator file"
                           : "crossed homomorphism file") +
           " at level " + level_name(op.action.level) +
           " (action validated; run `verify` to check the operator law)";
  }
  fail("unknown kind \"" + kind +
       "\" (expected group, two_group, xmod, lie, lie_xmod, action or "
       "operator)");
}

TheoremBundle load_theorem_bundle(const std::string& ref,
                                  const fs::path& base) {
  const fs::path path = resolve(ref, base);
  const njson j = parse_json_file(path);
  const std::string ctx = path.string();
  const fs::path dir = path.parent_path();

  TheoremBundle bundle;
  bundle.name = j.contains("name") ? field_string(j, "name", ctx)
                                   : path.stem().string();
  const bool has_tg = j.is_object() && j.contains("two_group");
  const bool has_xm = j.is_object() && j.contains("xmod");
  if (has_tg == has_xm)
    fail(ctx + ": a theorem bundle needs exactly one of \"two_group\" or "
               "\"xmod\"");
  if (has_tg) {
    bundle.two_group = two_group_from_json(field(j, "two_group", ctx), dir,
                                           ctx + ": \"two_group\"");
  } else {
    bundle.xmod =
        xmod_from_json(field(j, "xmod", ctx), dir, ctx + ": \"xmod\"");
    bundle.two_group = xmod_to_two_group(bundle.xmod);
    bundle.from_xmod = true;
  }
  if (j.contains("operators")) {
    const njson& ops = j.at("operators");
    if (!ops.is_array()) fail(ctx + ": \"operators\" must be an array");
    for (const auto& entry : ops) {
      const std::string octx = ctx + ": operator entry";
      std::vector<int> t1;
      if (entry.contains("B"))
        t1 = field_int_vector(entry, "B", octx);
      else if (entry.contains("B1"))
        t1 = field_int_vector(entry, "B1", octx);
      else
        fail(octx + ": needs \"B\" (arrow level) or \"B1\"");
      bundle.operators.emplace_back(std::move(t1),
                                    field_int_vector(entry, "B0", octx));
    }
  }
  if (j.contains("random_pairs"))
    bundle.random_pairs = field_int(j, "random_pairs", ctx);
  if (j.contains("budget"))
    bundle.budget = (long long)field_int(j, "budget", ctx);
  return bundle;
}

std::string group_to_json(const FiniteGroup& g) { return dump(group_json(g)); }
std::string two_group_to_json(const TwoGroup& p) {
  return dump(two_group_json(p));
}
std::string xmod_to_json(const CrossedModule& x) { return dump(xmod_json(x)); }
std::string group_action_to_json(const GroupAction& a) {
  return dump(group_action_json(a));
}
std::string two_group_action_to_json(const TwoGroupAction& a) {
  return dump(two_group_action_json(a));
}
std::string xmod_action_to_json(const XModAction& a) {
  return dump(xmod_action_json(a));
}
std::string lie_algebra_to_json(const LieAlgebra& g) {
  return dump(lie_algebra_json(g));
}
std::string lie_xmod_to_json(const LieXMod& x) {
  return dump(lie_xmod_json(x));
}

std::string ybe_to_json(const CatYBESolution& s) {
  ojson out;
  out["n"] = s.arrow.n;
  out["R"] = s.arrow.table;
  out["R0"] = s.object.table;
  return dump(out);
}

std::string rrb_two_group_to_json(const RRBTwoGroupOp& op) {
  ojson out;
  out["level"] = "two_group";
  out["kind"] = "rrb";
  out["B"] = op.b;
  out["B0"] = op.b0;
  out["action"] = two_group_action_json(op.action);
  return dump(out);
}

std::string rrb_xmod_to_json(const RRBXModOp& op) {
  ojson out;
  out["level"] = "xmod";
  out["kind"] = "rrb";
  out["B1"] = op.b1;
  out["B0"] = op.b0;
  out["action"] = xmod_action_json(op.action);
  return dump(out);
}

std::string crossed_hom_two_group_to_json(const CrossedHomTwoGroup& d) {
  ojson out;
  out["level"] = "two_group";
  out["kind"] = "crossed_hom";
  out["D"] = d.d;
  out["D0"] = d.d0;
  out["action"] = two_group_action_json(d.action);
  return dump(out);
}

std::string crossed_hom_xmod_to_json(const CrossedHomXMod& d) {
  ojson out;
  out["level"] = "xmod";
  out["kind"] = "crossed_hom";
  out["D1"] = d.d1;
  out["D0"] = d.d0;
  out["action"] = xmod_action_json(d.action);
  return dump(out);
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string input_digest(const std::vector<std::string>& refs,
                         const fs::path& base) {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& ref : refs) {
    if (is_builtin_group(ref)) {
      h = fnv1a(h, ref.data(), ref.size());
      continue;
    }
    const std::string text = read_file_or_fail(resolve(ref, base));
    h = fnv1a(h, text.data(), text.size());
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
  return os.str();
}

std::string read_text_file(const fs::path& path) {
  return read_file_or_fail(path);
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write file: " + path.string());
  out << content;
  if (!out) fail("write failed: " + path.string());
}

}  // namespace rbcat::io
