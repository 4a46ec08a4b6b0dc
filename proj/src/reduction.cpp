#include "walkmin/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "walkmin/error.hpp"
#include "walkmin/nfa.hpp"

namespace walkmin {

namespace names {

namespace {
std::string side_stem(Literal side) {
  return (side.positive ? "x" : "nx") + std::to_string(side.var);
}
}  // namespace

std::string start_vertex(Literal side) { return "start_" + side_stem(side); }
std::string end_vertex(Literal side) { return "end_" + side_stem(side); }
std::string var_left(int i) { return "Lx" + std::to_string(i); }
std::string var_right(int i) { return "x" + std::to_string(i) + "R"; }
std::string srow_left(Literal side) { return "LS" + side_stem(side); }
std::string srow_right(Literal side) { return "S" + side_stem(side) + "R"; }
std::string row(Literal side, int j) { return side_stem(side) + "^" + std::to_string(j); }
std::string clause_left(int j) { return "LC" + std::to_string(j); }
std::string clause_right(int j) { return "C" + std::to_string(j) + "R"; }

}  // namespace names

SatInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int k = -1, l = -1;
  std::string rest;

  // Header: comments, then "p cnf <k> <l>".
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first == "c") continue;
    if (first.size() > 1 && first[0] == 'c') continue;
    if (first != "p")
      throw ParseError("expected 'p cnf' header on line " + std::to_string(line_no), line_no);
    std::string fmt;
    if (!(ls >> fmt >> k >> l) || fmt != "cnf")
      throw ParseError("malformed 'p cnf' header on line " + std::to_string(line_no), line_no);
    break;
  }
  if (k < 0 || l < 0) throw ParseError("missing 'p cnf' header", line_no);
  if (k < 1 || l < 1) throw Error("instance must have at least one variable and one clause");

  SatInstance inst;
  inst.var_count = k;

  std::vector<Literal> current;
  int value = 0;
  bool open = false;
  while (in >> value || (in.clear(), in >> rest)) {
    if (!rest.empty()) {
      if (rest == "c") {
        std::getline(in, line);
        rest.clear();
        continue;
      }
      throw Error("unexpected token '" + rest + "' in clause section");
    }
    if (value == 0) {
      std::sort(current.begin(), current.end());
      // Drop duplicate literals; a variable left with both signs is a tautology.
      current.erase(std::unique(current.begin(), current.end()), current.end());
      for (std::size_t i = 1; i < current.size(); ++i)
        if (current[i].var == current[i - 1].var)
          throw Error("tautological clause " + std::to_string(inst.clauses.size() + 1) +
                      ": variable " + std::to_string(current[i].var) + " occurs with both signs");
      if (current.size() != 3)
        throw Error("clause " + std::to_string(inst.clauses.size() + 1) + " has " +
                    std::to_string(current.size()) + " distinct variables, expected 3");
      inst.clauses.push_back({current[0], current[1], current[2]});
      current.clear();
      open = false;
      continue;
    }
    open = true;
    int var = value > 0 ? value : -value;
    if (var > k)
      throw Error("variable " + std::to_string(var) + " out of range (declared " +
                  std::to_string(k) + ")");
    current.push_back({var, value > 0});
  }
  if (open) throw Error("last clause is not terminated by 0");
  if (inst.clause_count() != l)
    throw Error("header declares " + std::to_string(l) + " clauses, found " +
                std::to_string(inst.clause_count()));
  return inst;
}

bool satisfies(const SatInstance& inst, const Valuation& v) {
  for (const auto& clause : inst.clauses) {
    bool ok = false;
    for (const Literal& lit : clause)
      if (v.get(lit.var) == lit.positive) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool sat_oracle(const SatInstance& inst) {
  if (inst.var_count > 24)
    throw Error("sat_oracle is limited to 24 variables, got " +
                std::to_string(inst.var_count));
  Valuation v;
  v.value.assign(static_cast<std::size_t>(inst.var_count) + 1, false);
  for (std::uint64_t mask = 0; mask < (1ull << inst.var_count); ++mask) {
    for (int i = 1; i <= inst.var_count; ++i) v.value[i] = (mask >> (i - 1)) & 1;
    if (satisfies(inst, v)) return true;
  }
  return false;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Enum:
      return "enum";
    case Variant::Membership:
      return "membership";
    case Variant::Sms:
      return "sms";
  }
  return "enum";
}

namespace {

constexpr const char* kSource = "Source";
constexpr const char* kTarget = "Target";

struct GraphBuilder {
  std::vector<std::string> vertices;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  void vertex(std::string v) { vertices.push_back(std::move(v)); }
  void edge(std::string src, std::string label, std::string tgt) {
    edges.push_back({std::move(src), std::move(label), std::move(tgt)});
  }
  Graph build(ColorMap colors) {
    return Graph(vertices, labels, edges, std::move(colors));
  }
};

Literal pos(int i) { return {i, true}; }
Literal neg(int i) { return {i, false}; }

// Chain order of the start/end gadget vertices: x1, nx1, x2, nx2, ...
std::vector<Literal> chain_order(int k) {
  std::vector<Literal> order;
  for (int i = 1; i <= k; ++i) {
    order.push_back(pos(i));
    order.push_back(neg(i));
  }
  return order;
}

void add_red_vertices(GraphBuilder& b, const SatInstance& inst) {
  int k = inst.var_count, l = inst.clause_count();
  b.vertex(kSource);
  for (Literal side : chain_order(k)) b.vertex(names::start_vertex(side));
  b.vertex(names::var_right(0));
  b.vertex(names::var_left(k + 1));
  b.vertex(names::clause_right(0));
  b.vertex(names::clause_left(l + 1));
  for (int i = 1; i <= k; ++i) {
    b.vertex(names::var_left(i));
    b.vertex(names::var_right(i));
    for (int j = 0; j <= l; ++j) b.vertex(names::row(pos(i), j));
    for (int j = 0; j <= l; ++j) b.vertex(names::row(neg(i), j));
  }
  for (int j = 1; j <= l; ++j) {
    b.vertex(names::clause_left(j));
    b.vertex(names::clause_right(j));
  }
  for (Literal side : chain_order(k)) b.vertex(names::end_vertex(side));
  b.vertex(kTarget);
}

void add_s_vertices(GraphBuilder& b, const SatInstance& inst) {
  int k = inst.var_count;
  b.vertex(names::srow_right(pos(0)));
  b.vertex(names::srow_left(pos(k + 1)));
  b.vertex(names::srow_right(neg(0)));
  b.vertex(names::srow_left(neg(k + 1)));
  for (int i = 1; i <= k; ++i) {
    b.vertex(names::srow_left(pos(i)));
    b.vertex(names::srow_right(pos(i)));
    b.vertex(names::srow_left(neg(i)));
    b.vertex(names::srow_right(neg(i)));
  }
}

void add_red_edges(GraphBuilder& b, const SatInstance& inst) {
  int k = inst.var_count, l = inst.clause_count();
  std::vector<Literal> chain = chain_order(k);

  b.edge(kSource, "0", names::start_vertex(chain[0]));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    b.edge(names::start_vertex(chain[i]), "2", names::start_vertex(chain[i + 1]));
  b.edge(names::start_vertex(chain.back()), "1", names::var_right(0));
  b.edge(names::var_right(0), "1", names::var_left(1));

  for (int i = 1; i <= k; ++i) {
    for (Literal side : {pos(i), neg(i)}) {
      b.edge(names::var_left(i), "1", names::row(side, 0));
      for (int j = 1; j <= l; ++j)
        b.edge(names::row(side, j - 1), "1", names::row(side, j));
      b.edge(names::row(side, l), "1", names::var_right(i));
    }
    if (i < k) b.edge(names::var_right(i), "2", names::var_left(i + 1));
  }
  b.edge(names::var_right(k), "1", names::var_left(k + 1));
  b.edge(names::var_left(k + 1), "1", names::clause_right(0));
  b.edge(names::clause_right(0), "1", names::clause_left(1));

  for (int j = 1; j <= l; ++j) {
    for (const Literal& lit : inst.clauses[j - 1]) {
      b.edge(names::clause_left(j), "3", names::row(lit, j - 1));
      b.edge(names::row(lit, j), "3", names::clause_right(j));
    }
    if (j < l) b.edge(names::clause_right(j), "2", names::clause_left(j + 1));
  }
  b.edge(names::clause_right(l), "2", names::clause_left(l + 1));
  b.edge(names::clause_left(l + 1), "2", names::end_vertex(chain[0]));

  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    b.edge(names::end_vertex(chain[i]), "2", names::end_vertex(chain[i + 1]));
  b.edge(names::end_vertex(chain.back()), "0", kTarget);
}

void add_blue_5_edges(GraphBuilder& b, const SatInstance& inst) {
  int k = inst.var_count, l = inst.clause_count();
  for (int i = 1; i <= k; ++i)
    for (Literal side : {pos(i), neg(i)}) {
      b.edge(names::start_vertex(side), "5", names::srow_left(side));
      b.edge(names::srow_left(side), "5", names::row(side, 0));
      b.edge(names::row(side, l), "5", names::srow_right(side));
      b.edge(names::srow_right(side), "5", names::end_vertex(side));
    }
}

void add_green_edges(GraphBuilder& b, const SatInstance& inst) {
  int k = inst.var_count, l = inst.clause_count();
  for (int i = 1; i <= k; ++i)
    for (Literal side : {pos(i), neg(i)}) {
      for (int j = 1; j <= l; ++j)
        b.edge(names::row(side, j - 1), "6", names::row(side, j));
      b.edge(names::srow_left(side), "7", names::start_vertex(side));
      b.edge(names::end_vertex(side), "7", names::srow_right(side));
    }
  for (int i = 0; i <= k; ++i) {
    b.edge(names::srow_right(pos(i)), "8", names::srow_left(pos(i + 1)));
    b.edge(names::srow_right(neg(i)), "8", names::srow_left(neg(i + 1)));
  }
  b.edge(names::srow_left(pos(k + 1)), "8", names::srow_right(neg(0)));
  b.edge(kTarget, "9", names::srow_right(pos(0)));
  b.edge(names::srow_left(neg(k + 1)), "X", kTarget);
}

ColorMap base_colors() {
  return {{"0", Color::Red},   {"1", Color::Red},   {"2", Color::Red},
          {"3", Color::Red},   {"4", Color::Blue},  {"5", Color::Blue},
          {"6", Color::Green}, {"7", Color::Green}, {"8", Color::Green},
          {"9", Color::Green}, {"X", Color::Green}};
}

}  // namespace

ReductionInstance build_enum_instance(const SatInstance& inst) {
  int k = inst.var_count, l = inst.clause_count();

  GraphBuilder b;
  b.labels = {"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "X"};
  add_red_vertices(b, inst);
  add_s_vertices(b, inst);
  add_red_edges(b, inst);
  add_blue_5_edges(b, inst);
  for (int i = 1; i <= k; ++i)
    for (Literal side : {pos(i), neg(i)})
      for (int j = 1; j <= l; ++j)
        b.edge(names::row(side, j), "4", names::row(side, j - 1));
  add_green_edges(b, inst);

  ReductionInstance ri;
  ri.instance = inst;
  ri.variant = Variant::Enum;
  ri.graph = b.build(base_colors());
  ri.r1 = parse("0(1+2+313)*0");
  ri.r2 = parse("02*551*41*552*0");
  ri.r3 = parse("9(8+755+646+557)*X");
  ri.r = RegExp::alt(RegExp::concat(ri.r1, *ri.r3), ri.r2);
  ri.source = kSource;
  ri.target = kTarget;
  return ri;
}

ReductionInstance build_membership_instance(const SatInstance& inst) {
  int k = inst.var_count, l = inst.clause_count();

  GraphBuilder b;
  b.labels = {"0", "1", "2", "3", "G"};
  add_red_vertices(b, inst);
  add_red_edges(b, inst);
  for (int i = 1; i <= k; ++i) b.edge(names::var_right(i), "G", names::var_left(i));
  for (int j = 1; j <= l; ++j) {
    b.edge(names::clause_right(j), "G", names::clause_left(j));
    for (const Literal& lit : inst.clauses[j - 1])
      b.edge(names::row(lit, j - 1), "G", names::row(lit, j));
  }

  ReductionInstance ri;
  ri.instance = inst;
  ri.variant = Variant::Membership;
  ri.graph = b.build({{"0", Color::Red},
                      {"1", Color::Red},
                      {"2", Color::Red},
                      {"3", Color::Red},
                      {"G", Color::Green}});
  ri.r1 = parse("0(1+2+313)*0");
  ri.r2 = parse("0(11*G11*+2+3G3G3G3G3G3)*0");
  ri.r3 = std::nullopt;
  ri.r = RegExp::alt(ri.r1, ri.r2);
  ri.source = kSource;
  ri.target = kTarget;

  // Witness: the match to r2 covering every red edge exactly once.
  std::vector<Step> w;
  std::vector<Literal> chain = chain_order(k);
  w.push_back({"0", names::start_vertex(chain[0])});
  for (std::size_t i = 1; i < chain.size(); ++i)
    w.push_back({"2", names::start_vertex(chain[i])});
  w.push_back({"1", names::var_right(0)});
  w.push_back({"1", names::var_left(1)});
  for (int i = 1; i <= k; ++i) {
    w.push_back({"1", names::row(pos(i), 0)});
    for (int j = 1; j <= l; ++j) w.push_back({"1", names::row(pos(i), j)});
    w.push_back({"1", names::var_right(i)});
    w.push_back({"G", names::var_left(i)});
    w.push_back({"1", names::row(neg(i), 0)});
    for (int j = 1; j <= l; ++j) w.push_back({"1", names::row(neg(i), j)});
    w.push_back({"1", names::var_right(i)});
    if (i < k) w.push_back({"2", names::var_left(i + 1)});
  }
  w.push_back({"1", names::var_left(k + 1)});
  w.push_back({"1", names::clause_right(0)});
  w.push_back({"1", names::clause_left(1)});
  for (int j = 1; j <= l; ++j) {
    const auto& clause = inst.clauses[j - 1];
    for (int c = 0; c < 3; ++c) {
      if (c > 0) w.push_back({"G", names::clause_left(j)});
      w.push_back({"3", names::row(clause[c], j - 1)});
      w.push_back({"G", names::row(clause[c], j)});
      w.push_back({"3", names::clause_right(j)});
    }
    if (j < l) w.push_back({"2", names::clause_left(j + 1)});
  }
  w.push_back({"2", names::clause_left(l + 1)});
  w.push_back({"2", names::end_vertex(chain[0])});
  for (std::size_t i = 1; i < chain.size(); ++i)
    w.push_back({"2", names::end_vertex(chain[i])});
  w.push_back({"0", kTarget});
  ri.witness = Walk(kSource, std::move(w));
  return ri;
}

ReductionInstance build_sms_instance(const SatInstance& inst) {
  int k = inst.var_count, l = inst.clause_count();

  GraphBuilder b;
  b.labels = {"0", "1", "2", "3", "4", "4'", "5", "6", "7", "8", "9", "X"};
  add_red_vertices(b, inst);
  add_s_vertices(b, inst);
  add_red_edges(b, inst);
  add_blue_5_edges(b, inst);
  // Back edges go to the other side; a primed edge returns at the same level.
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) {
      b.edge(names::row(pos(i), j), "4", names::row(neg(i), j - 1));
      b.edge(names::row(neg(i), j), "4'", names::row(pos(i), j));
      b.edge(names::row(neg(i), j), "4", names::row(pos(i), j - 1));
      b.edge(names::row(pos(i), j), "4'", names::row(neg(i), j));
    }
  add_green_edges(b, inst);

  ColorMap colors = base_colors();
  colors["4'"] = Color::Blue;

  ReductionInstance ri;
  ri.instance = inst;
  ri.variant = Variant::Sms;
  ri.graph = b.build(std::move(colors));
  ri.r1 = parse("0(1+2+313)*0");
  ri.r2 = parse("02*551*414'1*552*0");
  ri.r3 = parse("9(8+755+6464'+557)*X");
  ri.r = RegExp::alt(RegExp::concat(ri.r1, *ri.r3), ri.r2);
  ri.source = kSource;
  ri.target = kTarget;
  return ri;
}

Walk canonical_r2_walk(const ReductionInstance& ri, Literal alpha, int j) {
  if (ri.variant != Variant::Enum)
    throw Error("canonical_r2_walk is defined for the enum variant");
  int k = ri.k(), l = ri.l();
  if (alpha.var < 1 || alpha.var > k)
    throw Error("variable index " + std::to_string(alpha.var) + " out of range");
  if (j < 1 || j > l) throw Error("clause level " + std::to_string(j) + " out of range");

  std::vector<Literal> chain = chain_order(k);
  std::size_t at = 0;
  while (chain[at] != alpha) ++at;

  std::vector<Step> w;
  w.push_back({"0", names::start_vertex(chain[0])});
  for (std::size_t i = 1; i <= at; ++i)
    w.push_back({"2", names::start_vertex(chain[i])});
  w.push_back({"5", names::srow_left(alpha)});
  w.push_back({"5", names::row(alpha, 0)});
  for (int m = 1; m <= j; ++m) w.push_back({"1", names::row(alpha, m)});
  w.push_back({"4", names::row(alpha, j - 1)});
  for (int m = j; m <= l; ++m) w.push_back({"1", names::row(alpha, m)});
  w.push_back({"5", names::srow_right(alpha)});
  w.push_back({"5", names::end_vertex(alpha)});
  for (std::size_t i = at + 1; i < chain.size(); ++i)
    w.push_back({"2", names::end_vertex(chain[i])});
  w.push_back({"0", kTarget});
  return Walk(kSource, std::move(w));
}

Walk canonical_r3_walk(const ReductionInstance& ri) {
  if (ri.variant != Variant::Enum)
    throw Error("canonical_r3_walk is defined for the enum variant");
  int k = ri.k(), l = ri.l();

  std::vector<Step> w;
  w.push_back({"9", names::srow_right(pos(0))});
  for (bool positive : {true, false}) {
    for (int i = 1; i <= k; ++i) {
      Literal side = positive ? pos(i) : neg(i);
      w.push_back({"8", names::srow_left(side)});
      w.push_back({"7", names::start_vertex(side)});
      w.push_back({"5", names::srow_left(side)});
      w.push_back({"5", names::row(side, 0)});
      for (int j = 1; j <= l; ++j) {
        w.push_back({"6", names::row(side, j)});
        w.push_back({"4", names::row(side, j - 1)});
        w.push_back({"6", names::row(side, j)});
      }
      w.push_back({"5", names::srow_right(side)});
      w.push_back({"5", names::end_vertex(side)});
      w.push_back({"7", names::srow_right(side)});
    }
    if (positive) {
      w.push_back({"8", names::srow_left(pos(k + 1))});
      w.push_back({"8", names::srow_right(neg(0))});
    }
  }
  w.push_back({"8", names::srow_left(neg(k + 1))});
  w.push_back({"X", kTarget});
  return Walk(kTarget, std::move(w));
}

Valuation valuation_of(const ReductionInstance& ri, const Walk& w1) {
  if (!validate_walk(ri.graph, w1))
    throw Error("walk is not consistent with the instance graph");
  std::vector<std::string> word = w1.label_word();
  if (!accepts(to_nfa(ri.r1), word)) throw Error("walk does not match r1");

  std::set<Edge> edges = edge_set(w1);
  Valuation v;
  v.value.assign(static_cast<std::size_t>(ri.k()) + 1, false);
  for (int i = 1; i <= ri.k(); ++i) {
    bool via_pos = edges.count({names::var_left(i), "1", names::row(pos(i), 0)}) > 0;
    bool via_neg = edges.count({names::var_left(i), "1", names::row(neg(i), 0)}) > 0;
    if (via_pos == via_neg)
      throw Error("walk does not traverse exactly one side of gadget " + std::to_string(i));
    // Sign flip: traversing the negative side sets the variable to true.
    v.value[i] = via_neg;
  }
  return v;
}

nlohmann::json ReductionInstance::manifest() const {
  nlohmann::json j = {{"variant", variant_name(variant)},
                      {"R1", to_string(r1)},
                      {"R2", to_string(r2)},
                      {"R3", r3 ? nlohmann::json(to_string(*r3)) : nlohmann::json(nullptr)},
                      {"R", to_string(r)},
                      {"source", source},
                      {"target", target}};
  if (witness) j["witness"] = witness->to_json();
  if (variant == Variant::Sms) j["r2_trailing_zero_restored"] = true;
  return j;
}

}  // namespace walkmin
