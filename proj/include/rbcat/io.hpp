#pragma once

// JSON file input/output for every structure in the library: groups,
// 2-groups, crossed modules, actions at each level, operators (Rota-Baxter
// and crossed homomorphisms), Yang-Baxter solutions, Lie algebras and their
// crossed modules. Malformed input of any kind — unreadable files, invalid
// JSON, missing or mistyped fields, unknown references — is reported as
// CheckError with code ParseError; the mathematical validation performed by
// the factories keeps its own error codes.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rbcat/fingroup.hpp"
#include "rbcat/liealg.hpp"
#include "rbcat/rrb.hpp"
#include "rbcat/twogroup.hpp"
#include "rbcat/xhom.hpp"
#include "rbcat/xmod.hpp"
#include "rbcat/ybe.hpp"

namespace rbcat::io {

// Carrier level of a file or command target.
enum class Level { Group, TwoGroup, XMod, Lie, LieXMod };
// What an operator file holds.
enum class OpKind { RotaBaxter, CrossedHom };

Level parse_level(const std::string& name);
std::string level_name(Level level);

// Group references are either one of the built-in names T, Z2, Z3, Z4,
// Z2xZ2, S3 or a path (resolved against `base` when relative). Structure
// references (2-groups, crossed modules, Lie algebras) are paths only; in
// JSON they may also appear inline as objects.
bool is_builtin_group(const std::string& name);
GroupPtr builtin_group(const std::string& name);

GroupPtr load_group(const std::string& ref,
                    const std::filesystem::path& base = ".");
TwoGroupPtr load_two_group(const std::string& ref,
                           const std::filesystem::path& base = ".");
XModPtr load_xmod(const std::string& ref,
                  const std::filesystem::path& base = ".");
LieAlgebraPtr load_lie_algebra(const std::string& ref,
                               const std::filesystem::path& base = ".");
LieXModPtr load_lie_xmod(const std::string& ref,
                         const std::filesystem::path& base = ".");

GroupAction load_group_action(const std::string& ref,
                              const std::filesystem::path& base = ".");
TwoGroupAction load_two_group_action(const std::string& ref,
                                     const std::filesystem::path& base = ".");
XModAction load_xmod_action(const std::string& ref,
                            const std::filesystem::path& base = ".");
LieAction load_lie_action(const std::string& ref,
                          const std::filesystem::path& base = ".");
LieXModAction load_lie_xmod_action(const std::string& ref,
                                   const std::filesystem::path& base = ".");

// An action of any level, tagged; exactly the member matching `level` is
// engaged.
struct LoadedAction {
  Level level = Level::Group;
  std::optional<GroupAction> group;
  std::optional<TwoGroupAction> two_group;
  std::optional<XModAction> xmod;
  std::optional<LieAction> lie;
  std::optional<LieXModAction> lie_xmod;
};

LoadedAction load_action(const std::string& ref, Level level,
                         const std::filesystem::path& base = ".");

// An operator file: {"level": ..., "kind": "rrb"|"crossed_hom"?, "action":
// <ref or inline>, tables}. Integer payloads live in t1/t0 (group level uses
// t1 only; the 2-group level holds the arrow table in t1 and the object
// table in t0), rational-matrix payloads in m1/m0. Key names B/B0/B1 (and
// D/D0/D1 for crossed homomorphisms) select the slots.
struct LoadedOperator {
  OpKind kind = OpKind::RotaBaxter;
  LoadedAction action;
  std::vector<int> t1, t0;
  RatMatrix m1, m0;
};

LoadedOperator load_operator(const std::string& ref,
                             const std::filesystem::path& base = ".");

// Validates the file at `ref` as the given kind of structure; returns a
// short human-readable description of what was validated (used by the CLI's
// PASS output). `kind` is one of: group, two_group, xmod, lie, lie_xmod,
// action (with `level`), operator.
std::string validate_file(const std::string& kind, const std::string& ref,
                          std::optional<Level> level,
                          const std::filesystem::path& base = ".");

// Fixture bundle for theorem runs: a 2-group or crossed module carrier (the
// suite uses its adjoint action) plus optional pinned operator tables. For a
// crossed-module bundle the pinned tables are level-wise (B1, B0) and the
// suite converts them itself; for a 2-group bundle they are (arrow, object).
struct TheoremBundle {
  std::string name;
  TwoGroupPtr two_group;  // always set; converted from the xmod if needed
  XModPtr xmod;           // set only for crossed-module bundles
  bool from_xmod = false;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> operators;
  int random_pairs = 1000;
  long long budget = 10'000'000;
};

TheoremBundle load_theorem_bundle(const std::string& ref,
                                  const std::filesystem::path& base = ".");

// Canonical serializers: fixed key order, two-space indent, trailing
// newline. Identical structures give identical bytes.
std::string group_to_json(const FiniteGroup& g);
std::string two_group_to_json(const TwoGroup& p);
std::string xmod_to_json(const CrossedModule& x);
std::string group_action_to_json(const GroupAction& a);
std::string two_group_action_to_json(const TwoGroupAction& a);
std::string xmod_action_to_json(const XModAction& a);
std::string lie_algebra_to_json(const LieAlgebra& g);
std::string lie_xmod_to_json(const LieXMod& x);
std::string ybe_to_json(const CatYBESolution& s);
std::string rrb_two_group_to_json(const RRBTwoGroupOp& op);
std::string rrb_xmod_to_json(const RRBXModOp& op);
std::string crossed_hom_two_group_to_json(const CrossedHomTwoGroup& d);
std::string crossed_hom_xmod_to_json(const CrossedHomXMod& d);

// FNV-1a 64-bit digest, printed as 16 hex digits; folds the bytes of every
// input file (builtin references fold their name instead).
std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len);
std::string input_digest(const std::vector<std::string>& refs,
                         const std::filesystem::path& base = ".");

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace rbcat::io
