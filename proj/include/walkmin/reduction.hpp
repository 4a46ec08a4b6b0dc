#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "walkmin/graph.hpp"
#include "walkmin/regex.hpp"

namespace walkmin {

struct Literal {
  int var = 0;           // 1-based variable index
  bool positive = true;

  auto operator<=>(const Literal&) const = default;
};

// 3-CNF formula. Every clause has exactly three distinct variables and is
// non-tautological; literals are sorted by variable within each clause.
struct SatInstance {
  int var_count = 0;
  std::vector<std::array<Literal, 3>> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
};

// DIMACS CNF: `p cnf <vars> <clauses>` header, clauses as nonzero ints
// terminated by 0, comment lines starting with 'c'. Throws ParseError on
// malformed input, Error on tautological or non-3-distinct clauses.
SatInstance parse_dimacs(std::string_view text);

struct Valuation {
  std::vector<bool> value;  // index 0 unused; value[i] for variable i

  bool get(int var) const { return value.at(static_cast<std::size_t>(var)); }
};

bool satisfies(const SatInstance& inst, const Valuation& v);

// Brute force over all 2^k valuations; guarded to var_count <= 24.
bool sat_oracle(const SatInstance& inst);

enum class Variant { Enum, Membership, Sms };

std::string variant_name(Variant v);

// A formula compiled to a gadget graph with its fixed expressions and the
// Source/Target pair. `r` is the full query; `witness` is set only by the
// membership variant.
struct ReductionInstance {
  SatInstance instance;
  Variant variant = Variant::Enum;
  Graph graph;
  RegExp r1 = RegExp::epsilon();
  RegExp r2 = RegExp::epsilon();
  std::optional<RegExp> r3;
  RegExp r = RegExp::epsilon();
  std::string source;
  std::string target;
  std::optional<Walk> witness;

  int k() const { return instance.var_count; }
  int l() const { return instance.clause_count(); }

  // Sidecar manifest with the expressions in concrete syntax.
  nlohmann::json manifest() const;
};

ReductionInstance build_enum_instance(const SatInstance& inst);
ReductionInstance build_membership_instance(const SatInstance& inst);
ReductionInstance build_sms_instance(const SatInstance& inst);

// The canonical almost-trail witness for side alpha and level j: it walks
// the start chain, enters side alpha, repeats the level-j row edge via the
// back edge, and leaves through the end chain. Enum variant only.
Walk canonical_r2_walk(const ReductionInstance& ri, Literal alpha, int j);

// The unique blue/green circuit from Target to Target. Enum variant only.
Walk canonical_r3_walk(const ReductionInstance& ri);

// Valuation associated with a match to r1: a variable maps to true iff the
// walk traverses the negative side of its gadget.
Valuation valuation_of(const ReductionInstance& ri, const Walk& w1);

// Vertex naming scheme used by the generated graphs.
namespace names {
std::string start_vertex(Literal side);           // start_x{i} / start_nx{i}
std::string end_vertex(Literal side);             // end_x{i} / end_nx{i}
std::string var_left(int i);                      // Lx{i}
std::string var_right(int i);                     // x{i}R
std::string srow_left(Literal side);              // LSx{i} / LSnx{i}
std::string srow_right(Literal side);             // Sx{i}R / Snx{i}R
std::string row(Literal side, int j);             // x{i}^{j} / nx{i}^{j}
std::string clause_left(int j);                   // LC{j}
std::string clause_right(int j);                  // C{j}R
}  // namespace names

}  // namespace walkmin
