// rbcat — exact computations with relative Rota-Baxter operators and crossed
// homomorphisms on finite groups, 2-groups, crossed modules, and Lie
// algebras: validation, enumeration, verification, structure conversions,
// Yang-Baxter solutions, Cayley factorization, and a battery of verified
// statements. All output is deterministic for fixed inputs, seed, and
// budget, independent of the worker count.
//
// Exit codes: 0 success, 1 a mathematical law fails, 2 parse/usage/IO
// error, 3 search budget exhausted.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rbcat/errors.hpp"
#include "rbcat/fingroup.hpp"
#include "rbcat/io.hpp"
#include "rbcat/liealg.hpp"
#include "rbcat/parallel.hpp"
#include "rbcat/rrb.hpp"
#include "rbcat/theorems.hpp"
#include "rbcat/twogroup.hpp"
#include "rbcat/xhom.hpp"
#include "rbcat/xmod.hpp"
#include "rbcat/ybe.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using rbcat::io::Level;
using rbcat::io::OpKind;

struct GlobalOpts {
  long long budget = 10'000'000;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string manifest_path;
  bool budget_set = false;
};

ojson manifest_json(const GlobalOpts& g, const std::string& command,
                    const std::vector<std::string>& inputs,
                    long long budget) {
  ojson m;
  m["command"] = command;
  m["inputs"] = inputs;
  m["seed"] = g.seed;
  m["budget"] = budget;
  ojson outs = ojson::array();
  outs.push_back("stdout");
  if (!g.manifest_path.empty()) outs.push_back(g.manifest_path);
  m["outputs"] = outs;
  m["digest"] = rbcat::io::input_digest(inputs, ".");
  return m;
}

// Prints the payload (json mode wraps it with the run manifest) and writes
// the manifest file when requested.
void emit(const GlobalOpts& g, const std::string& command,
          const std::vector<std::string>& inputs, const ojson& payload,
          const std::string& text, long long budget) {
  const ojson m = manifest_json(g, command, inputs, budget);
  if (g.format == "json") {
    ojson out;
    out["manifest"] = m;
    for (const auto& item : payload.items()) out[item.key()] = item.value();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  if (!g.manifest_path.empty()) {
    rbcat::io::write_text_file(g.manifest_path, m.dump(2) + "\n");
  }
}

std::string level_phrase(Level level) {
  switch (level) {
    case Level::Group:
      return "group level";
    case Level::TwoGroup:
      return "2-group level";
    case Level::XMod:
      return "crossed-module level";
    case Level::Lie:
      return "Lie algebra level";
    case Level::LieXMod:
      return "Lie crossed-module level";
  }
  return "";
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

// A Rota-Baxter operator at 2-group level from an operator file at any
// finite level (group level lands on the discrete 2-group).
rbcat::RRBTwoGroupOp to_two_group_op(const rbcat::io::LoadedOperator& op,
                                     const char* command) {
  if (op.kind != OpKind::RotaBaxter) {
    throw rbcat::ParseError(std::string(command) +
                            " needs a Rota-Baxter operator file");
  }
  switch (op.action.level) {
    case Level::Group: {
      const rbcat::RRBGroupOp g =
          rbcat::verify_rrb_group(*op.action.group, op.t1);
      return rbcat::rb_group_to_rb_two_groups(g).first;
    }
    case Level::TwoGroup:
      return rbcat::verify_rrb_two_group(*op.action.two_group, op.t1, op.t0);
    case Level::XMod:
      return rbcat::rrb_xmod_to_two_group(
          rbcat::verify_rrb_xmod(*op.action.xmod, op.t1, op.t0));
    default:
      throw rbcat::ParseError(
          std::string(command) +
          " needs a finite operator (group, two_group or xmod level)");
  }
}

int cmd_validate(const GlobalOpts& g, const std::string& kind,
                 const std::string& file, const std::string& level_str) {
  std::optional<Level> level;
  if (!level_str.empty()) level = rbcat::io::parse_level(level_str);
  const std::string desc = rbcat::io::validate_file(kind, file, level, ".");
  ojson payload;
  payload["status"] = "PASS";
  payload["kind"] = kind;
  payload["description"] = desc;
  emit(g, "validate", {file}, payload, "PASS: " + desc + "\n", g.budget);
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& file) {
  const rbcat::io::LoadedOperator op = rbcat::io::load_operator(file, ".");
  const bool rb = op.kind == OpKind::RotaBaxter;
  switch (op.action.level) {
    case Level::Group:
      if (rb)
        rbcat::verify_rrb_group(*op.action.group, op.t1);
      else
        rbcat::verify_crossed_hom_group(*op.action.group, op.t1);
      break;
    case Level::TwoGroup:
      if (rb)
        rbcat::verify_rrb_two_group(*op.action.two_group, op.t1, op.t0);
      else
        rbcat::verify_crossed_hom_two_group(*op.action.two_group, op.t1,
                                            op.t0);
      break;
    case Level::XMod:
      if (rb)
        rbcat::verify_rrb_xmod(*op.action.xmod, op.t1, op.t0);
      else
        rbcat::verify_crossed_hom_xmod(*op.action.xmod, op.t1, op.t0);
      break;
    case Level::Lie:
      if (rb)
        rbcat::verify_rrb_lie(op.m1, *op.action.lie);
      else
        rbcat::verify_crossed_hom_lie(op.m1, *op.action.lie);
      break;
    case Level::LieXMod:
      if (rb)
        rbcat::verify_rrb_lie_xmod(op.m1, op.m0, *op.action.lie_xmod);
      else
        rbcat::verify_crossed_hom_lie_xmod(op.m1, op.m0, *op.action.lie_xmod);
      break;
  }
  const std::string what =
      std::string(rb ? "relative Rota-Baxter operator"
                     : "crossed homomorphism") +
      " (" + level_phrase(op.action.level) + ")";
  ojson payload;
  payload["status"] = "PASS";
  payload["verified"] = what;
  emit(g, "verify", {file}, payload, "PASS: " + what + " verified\n",
       g.budget);
  return 0;
}

int cmd_enumerate(const GlobalOpts& g, const std::string& file,
                  const std::string& level_str, const std::string& kind) {
  const Level level = rbcat::io::parse_level(level_str);
  const bool rb = kind == "rrb";
  if (!rb && kind != "crossed_hom") {
    throw rbcat::ParseError("unknown kind \"" + kind +
                            "\" (expected rrb or crossed_hom)");
  }
  const rbcat::io::LoadedAction a = rbcat::io::load_action(file, level, ".");

  std::ostringstream text;
  ojson list = ojson::array();
  std::size_t count = 0;
  const char* k1 = nullptr;
  const char* k0 = nullptr;
  switch (level) {
    case Level::Group: {
      const std::vector<std::vector<int>> tables =
          rb ? rbcat::enumerate_rrb_group(*a.group, g.budget)
             : rbcat::enumerate_crossed_homs_group(*a.group, g.budget);
      k1 = rb ? "B" : "D";
      for (const std::vector<int>& t : tables) {
        text << join_ints(t) << "\n";
        ojson e;
        e[k1] = t;
        list.push_back(e);
      }
      count = tables.size();
      break;
    }
    case Level::TwoGroup:
    case Level::XMod: {
      std::vector<std::pair<std::vector<int>, std::vector<int>>> tables;
      if (level == Level::TwoGroup) {
        tables = rb ? rbcat::enumerate_rrb_two_group(*a.two_group, g.budget)
                    : rbcat::enumerate_crossed_homs_two_group(*a.two_group,
                                                              g.budget);
        k1 = rb ? "B" : "D";
      } else {
        tables = rb ? rbcat::enumerate_rrb_xmod(*a.xmod, g.budget)
                    : rbcat::enumerate_crossed_homs_xmod(*a.xmod, g.budget);
        k1 = rb ? "B1" : "D1";
      }
      k0 = rb ? "B0" : "D0";
      for (const auto& t : tables) {
        text << join_ints(t.first) << " | " << join_ints(t.second) << "\n";
        ojson e;
        e[k1] = t.first;
        e[k0] = t.second;
        list.push_back(e);
      }
      count = tables.size();
      break;
    }
    default:
      throw rbcat::ParseError(
          "enumeration is defined for the finite levels (group, two_group, "
          "xmod)");
  }
  text << "count: " << count << "\n";
  ojson payload;
  payload["kind"] = kind;
  payload["level"] = level_str;
  payload["count"] = count;
  payload["operators"] = list;
  emit(g, "enumerate", {file}, payload, text.str(), g.budget);
  return 0;
}

int cmd_theorems(const GlobalOpts& g, const std::string& file) {
  const rbcat::io::TheoremBundle tb =
      rbcat::io::load_theorem_bundle(file, ".");
  rbcat::TheoremSuiteOptions opts;
  opts.budget = g.budget_set ? g.budget : tb.budget;
  opts.seed = g.seed;
  opts.random_pairs = tb.random_pairs;
  const rbcat::TheoremReport rep =
      tb.from_xmod ? rbcat::run_theorem_suite_xmod(tb.xmod, tb.operators, opts)
                   : rbcat::run_theorem_suite(tb.two_group, tb.operators,
                                              opts);
  ojson rows = ojson::array();
  for (const rbcat::TheoremResult& r : rep.results) {
    ojson row;
    row["name"] = r.name;
    row["pass"] = r.pass;
    row["detail"] = r.detail;
    rows.push_back(row);
  }
  ojson payload;
  payload["name"] = tb.name;
  payload["carrier"] = rep.carrier;
  payload["results"] = rows;
  payload["all_pass"] = rep.all_pass();
  const std::string text =
      "bundle: " + tb.name + "\n" + rbcat::render_report_text(rep);
  emit(g, "theorems", {file}, payload, text, opts.budget);
  return rep.all_pass() ? 0 : 1;
}

int cmd_ybe(const GlobalOpts& g, const std::string& file) {
  const rbcat::io::LoadedOperator op = rbcat::io::load_operator(file, ".");
  const rbcat::RRBTwoGroupOp top = to_two_group_op(op, "ybe");
  const rbcat::CatYBESolution sol = rbcat::rb_solution(top);
  const ojson payload = ojson::parse(rbcat::io::ybe_to_json(sol));
  std::ostringstream text;
  text << "n: " << sol.arrow.n << "\n";
  text << "R: " << join_ints(sol.arrow.table) << "\n";
  text << "n0: " << sol.object.n << "\n";
  text << "R0: " << join_ints(sol.object.table) << "\n";
  emit(g, "ybe", {file}, payload, text.str(), g.budget);
  return 0;
}

int cmd_factorize(const GlobalOpts& g, const std::string& file) {
  const rbcat::io::LoadedOperator op = rbcat::io::load_operator(file, ".");
  const rbcat::RRBTwoGroupOp top = to_two_group_op(op, "factorize");
  const rbcat::CayleyFactorization f = rbcat::cayley_factorization(top);

  auto sub_json = [](const rbcat::SubTwoGroup& s) {
    ojson j;
    j["arrows"] = s.arrow_embed;
    j["objects"] = s.object_embed;
    return j;
  };
  auto pairs_json = [](const std::vector<std::pair<int, int>>& ps) {
    ojson j = ojson::array();
    for (const auto& p : ps) j.push_back({p.first, p.second});
    return j;
  };
  ojson payload;
  payload["p_plus"] = sub_json(f.p_plus);
  payload["p_minus"] = sub_json(f.p_minus);
  payload["k_plus"] = sub_json(f.k_plus);
  payload["k_minus"] = sub_json(f.k_minus);
  payload["factor_arrow"] = pairs_json(f.factor_arrow);
  payload["factor_object"] = pairs_json(f.factor_object);

  std::ostringstream text;
  auto sub_line = [&](const char* name, const rbcat::SubTwoGroup& s) {
    text << name << ": arrows [" << join_ints(s.arrow_embed) << "], objects ["
         << join_ints(s.object_embed) << "]\n";
  };
  sub_line("p_plus", f.p_plus);
  sub_line("p_minus", f.p_minus);
  sub_line("k_plus", f.k_plus);
  sub_line("k_minus", f.k_minus);
  text << "factor_arrow:\n";
  for (std::size_t p = 0; p < f.factor_arrow.size(); ++p) {
    text << "  " << p << " -> (" << f.factor_arrow[p].first << ", "
         << f.factor_arrow[p].second << ")\n";
  }
  text << "factor_object:\n";
  for (std::size_t x = 0; x < f.factor_object.size(); ++x) {
    text << "  " << x << " -> (" << f.factor_object[x].first << ", "
         << f.factor_object[x].second << ")\n";
  }
  emit(g, "factorize", {file}, payload, text.str(), g.budget);
  return 0;
}

int cmd_convert(const GlobalOpts& g, const std::string& kind,
                const std::string& file, const std::string& to) {
  ojson payload;
  if (kind == "two_group" && to == "xmod") {
    const rbcat::TwoGroupPtr p = rbcat::io::load_two_group(file, ".");
    const rbcat::TwoGroupAsXMod tx = rbcat::two_group_to_xmod(p);
    payload["xmod"] = ojson::parse(rbcat::io::xmod_to_json(*tx.xmod));
    payload["kernel_embedding"] = tx.ker_embed;
  } else if (kind == "xmod" && to == "two_group") {
    const rbcat::XModPtr x = rbcat::io::load_xmod(file, ".");
    payload["two_group"] =
        ojson::parse(rbcat::io::two_group_to_json(*rbcat::xmod_to_two_group(x)));
  } else if (kind == "operator") {
    const rbcat::io::LoadedOperator op = rbcat::io::load_operator(file, ".");
    if (op.kind != OpKind::RotaBaxter) {
      throw rbcat::ParseError(
          "operator conversion is defined for Rota-Baxter operator files");
    }
    if (op.action.level == Level::XMod && to == "two_group") {
      const rbcat::RRBTwoGroupOp top = rbcat::rrb_xmod_to_two_group(
          rbcat::verify_rrb_xmod(*op.action.xmod, op.t1, op.t0));
      payload["operator"] =
          ojson::parse(rbcat::io::rrb_two_group_to_json(top));
    } else if (op.action.level == Level::TwoGroup && to == "xmod") {
      const rbcat::RRBXModFromTwoGroup conv =
          rbcat::rrb_two_group_to_xmod(rbcat::verify_rrb_two_group(
              *op.action.two_group, op.t1, op.t0));
      payload["operator"] = ojson::parse(rbcat::io::rrb_xmod_to_json(conv.op));
      payload["kernel_embedding"] = conv.conv.h.ker_embed;
    } else if (op.action.level == Level::Group && to == "two_group") {
      const rbcat::RRBGroupOp gop =
          rbcat::verify_rrb_group(*op.action.group, op.t1);
      const auto [disc, semi] = rbcat::rb_group_to_rb_two_groups(gop);
      payload["discrete"] =
          ojson::parse(rbcat::io::rrb_two_group_to_json(disc));
      payload["semidirect"] =
          ojson::parse(rbcat::io::rrb_two_group_to_json(semi));
    } else {
      throw rbcat::ParseError(
          "unsupported operator conversion to \"" + to + "\" from " +
          level_phrase(op.action.level));
    }
  } else {
    throw rbcat::ParseError("unsupported conversion: " + kind + " -> " + to);
  }
  emit(g, "convert", {file}, payload, payload.dump(2) + "\n", g.budget);
  return 0;
}

int cmd_export(const GlobalOpts& g, const std::string& kind,
               const std::string& file, const std::string& level_str) {
  std::string canonical;
  if (kind == "group") {
    canonical = rbcat::io::group_to_json(*rbcat::io::load_group(file, "."));
  } else if (kind == "two_group") {
    canonical =
        rbcat::io::two_group_to_json(*rbcat::io::load_two_group(file, "."));
  } else if (kind == "xmod") {
    canonical = rbcat::io::xmod_to_json(*rbcat::io::load_xmod(file, "."));
  } else if (kind == "lie") {
    canonical =
        rbcat::io::lie_algebra_to_json(*rbcat::io::load_lie_algebra(file, "."));
  } else if (kind == "lie_xmod") {
    canonical = rbcat::io::lie_xmod_to_json(*rbcat::io::load_lie_xmod(file, "."));
  } else if (kind == "action") {
    if (level_str.empty()) {
      throw rbcat::ParseError("exporting an action requires --level");
    }
    const Level level = rbcat::io::parse_level(level_str);
    const rbcat::io::LoadedAction a = rbcat::io::load_action(file, level, ".");
    switch (level) {
      case Level::Group:
        canonical = rbcat::io::group_action_to_json(*a.group);
        break;
      case Level::TwoGroup:
        canonical = rbcat::io::two_group_action_to_json(*a.two_group);
        break;
      case Level::XMod:
        canonical = rbcat::io::xmod_action_to_json(*a.xmod);
        break;
      default:
        throw rbcat::ParseError(
            "action export covers the finite levels (group, two_group, "
            "xmod)");
    }
  } else if (kind == "operator") {
    const rbcat::io::LoadedOperator op = rbcat::io::load_operator(file, ".");
    if (op.action.level == Level::TwoGroup) {
      if (op.kind == OpKind::RotaBaxter) {
        canonical = rbcat::io::rrb_two_group_to_json(
            rbcat::verify_rrb_two_group(*op.action.two_group, op.t1, op.t0));
      } else {
        canonical = rbcat::io::crossed_hom_two_group_to_json(
            rbcat::verify_crossed_hom_two_group(*op.action.two_group, op.t1,
                                                op.t0));
      }
    } else if (op.action.level == Level::XMod) {
      if (op.kind == OpKind::RotaBaxter) {
        canonical = rbcat::io::rrb_xmod_to_json(
            rbcat::verify_rrb_xmod(*op.action.xmod, op.t1, op.t0));
      } else {
        canonical = rbcat::io::crossed_hom_xmod_to_json(
            rbcat::verify_crossed_hom_xmod(*op.action.xmod, op.t1, op.t0));
      }
    } else {
      throw rbcat::ParseError(
          "operator export covers the two_group and xmod levels");
    }
  } else {
    throw rbcat::ParseError(
        "unknown export kind \"" + kind +
        "\" (expected group, two_group, xmod, lie, lie_xmod, action or "
        "operator)");
  }
  ojson payload;
  payload["data"] = ojson::parse(canonical);
  emit(g, "export", {file}, payload, canonical, g.budget);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact relative Rota-Baxter operators and crossed homomorphisms on "
      "finite 2-groups, crossed modules, and Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  CLI::Option* budget_opt =
      app.add_option("--budget", g.budget,
                     "search-node budget for enumerations")
          ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads (output is identical for "
                                   "any value)")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized candidate tables")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--manifest", g.manifest_path,
                 "also write the run manifest to this file");

  std::string v_kind, v_file, v_level;
  CLI::App* validate =
      app.add_subcommand("validate", "check every axiom of a structure file");
  validate->add_option("kind", v_kind,
                       "group|two_group|xmod|lie|lie_xmod|action|operator")
      ->required();
  validate->add_option("file", v_file, "JSON file (or builtin group name)")
      ->required();
  validate->add_option("--level", v_level,
                       "level for action files "
                       "(group|two_group|xmod|lie|lie_xmod)");

  std::string verify_file;
  CLI::App* verify = app.add_subcommand(
      "verify", "verify the defining law of an operator file");
  verify->add_option("file", verify_file, "operator JSON file")->required();

  std::string e_file, e_level, e_kind = "rrb";
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "enumerate all operators for an action, sorted");
  enumerate->add_option("action", e_file, "action JSON file")->required();
  enumerate->add_option("--level", e_level, "group|two_group|xmod")
      ->required();
  enumerate->add_option("--kind", e_kind, "rrb|crossed_hom")
      ->capture_default_str();

  std::string t_file;
  CLI::App* theorems = app.add_subcommand(
      "theorems", "run the verified-statement battery on a bundle");
  theorems->add_option("bundle", t_file, "bundle JSON file")->required();

  std::string y_file;
  CLI::App* ybe = app.add_subcommand(
      "ybe", "build the Yang-Baxter solution of a Rota-Baxter operator");
  ybe->add_option("operator", y_file, "operator JSON file")->required();

  std::string f_file;
  CLI::App* factorize = app.add_subcommand(
      "factorize", "exact Cayley factorization induced by an operator");
  factorize->add_option("operator", f_file, "operator JSON file")->required();

  std::string c_kind, c_file, c_to;
  CLI::App* convert = app.add_subcommand(
      "convert", "convert between 2-groups and crossed modules, and "
                 "operators between levels");
  convert->add_option("kind", c_kind, "two_group|xmod|operator")->required();
  convert->add_option("file", c_file, "JSON file")->required();
  convert->add_option("--to", c_to, "target: two_group|xmod")->required();

  std::string x_kind, x_file, x_level;
  CLI::App* exp = app.add_subcommand(
      "export", "re-emit a validated structure in canonical JSON");
  exp->add_option("kind", x_kind,
                  "group|two_group|xmod|lie|lie_xmod|action|operator")
      ->required();
  exp->add_option("file", x_file, "JSON file (or builtin group name)")
      ->required();
  exp->add_option("--level", x_level, "level for action files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  g.budget_set = budget_opt->count() > 0;
  if (g.jobs < 1) {
    std::cout << "FAIL: --jobs must be at least 1\n";
    return 2;
  }
  rbcat::set_jobs(g.jobs);

  try {
    if (*validate) return cmd_validate(g, v_kind, v_file, v_level);
    if (*verify) return cmd_verify(g, verify_file);
    if (*enumerate) return cmd_enumerate(g, e_file, e_level, e_kind);
    if (*theorems) return cmd_theorems(g, t_file);
    if (*ybe) return cmd_ybe(g, y_file);
    if (*factorize) return cmd_factorize(g, f_file);
    if (*convert) return cmd_convert(g, c_kind, c_file, c_to);
    if (*exp) return cmd_export(g, x_kind, x_file, x_level);
  } catch (const rbcat::BudgetExceeded& e) {
    std::cout << "FAIL: " << e.what() << "\n";
    return 3;
  } catch (const rbcat::CheckError& e) {
    std::cout << "FAIL: " << e.what() << "\n";
    return e.code() == rbcat::Code::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cout << "FAIL: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
