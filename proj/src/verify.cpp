#include "walkmin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "walkmin/compiled.hpp"
#include "walkmin/error.hpp"
#include "walkmin/nfa.hpp"
#include "walkmin/semantics.hpp"

namespace walkmin {

namespace {

Literal pos(int i) { return {i, true}; }
Literal neg(int i) { return {i, false}; }

std::size_t expected_r1_length(int k, int l) {
  // Start gadget and glue: 1 + (2k-1) + 2; variable section: k(l+2) + (k-1);
  // glue into clauses: 3; clauses: 3l + (l-1); glue out: 2; end gadget: (2k-1) + 1.
  return static_cast<std::size_t>(k) * l + 7 * k + 4 * l + 5;
}

std::size_t power(std::size_t base, int exp) {
  std::size_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

// Compiled view of one reduction instance plus the edge-id tables the
// structural checks run on.
struct Context {
  SatInstance inst;
  ReductionInstance ri;
  CompiledGraph cg;
  CompiledNfa nfa_r1, nfa_r2, nfa_r;
  int source = -1, target = -1;
  int k = 0, l = 0;

  std::vector<char> label_red;  // per label id

  // Edge ids of the structural skeleton (-1 never occurs for valid builds).
  struct SideIds {
    int entry = -1;                // Lx{i} -1-> row 0
    std::vector<int> rows;         // row j-1 -1-> row j, j = 1..l
    int exit = -1;                 // row l -1-> x{i}R
  };
  std::vector<std::array<SideIds, 2>> sides;  // [i-1][positive ? 0 : 1]

  struct CircuitIds {
    int in3 = -1;   // LC{j} -3-> row(lit, j-1)
    int mid1 = -1;  // row(lit, j-1) -1-> row(lit, j)
    int out3 = -1;  // row(lit, j) -3-> C{j}R
  };
  std::vector<std::array<CircuitIds, 3>> circuits;  // [j-1][literal index]

  explicit Context(const SatInstance& instance)
      : inst(instance), ri(build_enum_instance(instance)) {
    cg = CompiledGraph::compile(ri.graph);
    nfa_r1 = CompiledNfa::compile(to_nfa(ri.r1), cg);
    nfa_r2 = CompiledNfa::compile(to_nfa(ri.r2), cg);
    nfa_r = CompiledNfa::compile(to_nfa(ri.r), cg);
    source = cg.require_vertex(ri.source);
    target = cg.require_vertex(ri.target);
    k = inst.var_count;
    l = inst.clause_count();

    label_red.assign(cg.label_names.size(), 0);
    for (const auto& [label, color] : ri.graph.colors())
      if (color == Color::Red) label_red[cg.label_id(label)] = 1;

    sides.resize(k);
    for (int i = 1; i <= k; ++i)
      for (int s = 0; s < 2; ++s) {
        Literal side = s == 0 ? pos(i) : neg(i);
        SideIds ids;
        ids.entry = edge_id(names::var_left(i), "1", names::row(side, 0));
        for (int j = 1; j <= l; ++j)
          ids.rows.push_back(edge_id(names::row(side, j - 1), "1", names::row(side, j)));
        ids.exit = edge_id(names::row(side, l), "1", names::var_right(i));
        sides[i - 1][s] = std::move(ids);
      }

    circuits.resize(l);
    for (int j = 1; j <= l; ++j)
      for (int c = 0; c < 3; ++c) {
        const Literal& lit = inst.clauses[j - 1][c];
        CircuitIds ids;
        ids.in3 = edge_id(names::clause_left(j), "3", names::row(lit, j - 1));
        ids.mid1 = edge_id(names::row(lit, j - 1), "1", names::row(lit, j));
        ids.out3 = edge_id(names::row(lit, j), "3", names::clause_right(j));
        circuits[j - 1][c] = ids;
      }
  }

  int edge_id(const std::string& src, const std::string& label, const std::string& tgt) const {
    return cg.edge_id({cg.vertex_id(src), cg.label_id(label), cg.vertex_id(tgt)});
  }

 private:
  mutable std::optional<std::vector<CWalk>> r1_cache_;
  mutable std::optional<std::vector<CWalk>> r2_cache_;
  mutable std::optional<std::vector<CWalk>> mm_cache_;

 public:

  // Cached: several checks consume the same enumerations.
  const std::vector<CWalk>& r1_matches() const {
    if (!r1_cache_)
      r1_cache_ = bounded_match_cwalks(cg, nfa_r1, source, target,
                                       expected_r1_length(k, l) + 8);
    return *r1_cache_;
  }

  const std::vector<CWalk>& r2_canonical() const {
    if (!r2_cache_) {
      std::vector<CWalk> out;
      for (int i = 1; i <= k; ++i)
        for (Literal side : {pos(i), neg(i)})
          for (int j = 1; j <= l; ++j)
            out.push_back(*to_cwalk(cg, canonical_r2_walk(ri, side, j)));
      std::sort(out.begin(), out.end(), cwalk_less);
      r2_cache_ = std::move(out);
    }
    return *r2_cache_;
  }

  // Bag-minimal matches of the full expression between Source and Target.
  const std::vector<CWalk>& mm_enum() const {
    if (!mm_cache_)
      mm_cache_ =
          filter_bag_minimal(product_simple_cwalks(cg, nfa_r, source, target));
    return *mm_cache_;
  }

  CBag red_bag(const CWalk& w) const {
    std::vector<int> ids;
    for (int e : w.edge_ids)
      if (label_red[cg.edges[e].label]) ids.push_back(e);
    std::sort(ids.begin(), ids.end());
    CBag bag;
    for (std::size_t i = 0; i < ids.size();) {
      std::size_t j = i;
      while (j < ids.size() && ids[j] == ids[i]) ++j;
      bag.emplace_back(ids[i], static_cast<int>(j - i));
      i = j;
    }
    return bag;
  }
};

bool is_ctrail(const CWalk& w) {
  for (const auto& [edge, count] : cwalk_bag(w))
    if (count > 1) return false;
  return true;
}

// Positions of `value` in `ids`.
std::vector<std::size_t> find_all(const std::vector<int>& ids, int value) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == value) out.push_back(i);
  return out;
}

bool has_consecutive(const std::vector<int>& ids, std::size_t from,
                     const std::vector<int>& expected) {
  if (from + expected.size() > ids.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (ids[from + i] != expected[i]) return false;
  return true;
}

struct Checker {
  nlohmann::json details = nlohmann::json::object();
  bool ok = true;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!details.contains("failures")) details["failures"] = nlohmann::json::array();
      details["failures"].push_back(what);
    }
  }
};

void check_r1_properties(const Context& ctx, Checker& c) {
  // The only 0-labeled edges leave Source and enter Target, so every r1
  // match is a Source-to-Target walk and the scoped enumeration is total.
  int zero = ctx.cg.label_id("0");
  std::size_t zero_edges = 0;
  for (const auto& e : ctx.cg.edges)
    if (e.label == zero) {
      ++zero_edges;
      bool from_source = ctx.cg.vertex_names[e.src] == ctx.ri.source;
      bool into_target = ctx.cg.vertex_names[e.tgt] == ctx.ri.target;
      c.expect(from_source || into_target, "0-edge outside the Source/Target boundary");
    }
  c.expect(zero_edges == 2, "expected exactly two 0-edges");

  const std::vector<CWalk>& matches = ctx.r1_matches();
  c.details["match_count"] = matches.size();
  c.details["expected_count"] = power(2, ctx.k) * power(3, ctx.l);
  c.expect(matches.size() == power(2, ctx.k) * power(3, ctx.l), "r1 match census mismatch");

  std::set<std::size_t> lengths;
  for (const CWalk& w : matches) {
    lengths.insert(w.length());
    for (int e : w.edge_ids)
      if (!ctx.label_red[ctx.cg.edges[e].label]) {
        c.expect(false, "r1 match uses a non-red edge");
        break;
      }

    for (int i = 1; i <= ctx.k; ++i) {
      const auto& per_side = ctx.sides[i - 1];
      int chosen = -1;
      for (int s = 0; s < 2; ++s) {
        auto hits = find_all(w.edge_ids, per_side[s].entry);
        if (hits.empty()) continue;
        c.expect(hits.size() == 1 && chosen < 0,
                 "variable gadget " + std::to_string(i) + " entered more than once");
        chosen = s;
        std::vector<int> factor = {per_side[s].entry};
        factor.insert(factor.end(), per_side[s].rows.begin(), per_side[s].rows.end());
        factor.push_back(per_side[s].exit);
        c.expect(has_consecutive(w.edge_ids, hits[0], factor),
                 "variable gadget " + std::to_string(i) + " side is not a contiguous factor");
      }
      c.expect(chosen >= 0, "variable gadget " + std::to_string(i) + " not traversed");
    }

    for (int j = 1; j <= ctx.l; ++j) {
      int seen = 0;
      for (int cidx = 0; cidx < 3; ++cidx) {
        const auto& circuit = ctx.circuits[j - 1][cidx];
        auto hits = find_all(w.edge_ids, circuit.in3);
        if (hits.empty()) continue;
        seen += static_cast<int>(hits.size());
        c.expect(has_consecutive(w.edge_ids, hits[0], {circuit.in3, circuit.mid1, circuit.out3}),
                 "clause gadget " + std::to_string(j) + " circuit is not contiguous");
      }
      c.expect(seen == 1, "clause gadget " + std::to_string(j) + " traversed " +
                              std::to_string(seen) + " times");
    }
  }

  c.expect(lengths.size() == 1, "r1 matches do not share one length");
  if (lengths.size() == 1) {
    std::size_t measured = *lengths.begin();
    std::size_t reference = static_cast<std::size_t>(ctx.k) * ctx.l + 7 * ctx.k + 4 * ctx.l + 3;
    c.details["common_length"] = measured;
    c.details["reference_length"] = reference;
    c.details["deviation"] = static_cast<long long>(measured) - static_cast<long long>(reference);
    c.expect(measured == expected_r1_length(ctx.k, ctx.l),
             "r1 match length deviates from the documented constant");
  }
}

void check_r2_census(const Context& ctx, Checker& c) {
  std::size_t bound = 4 * static_cast<std::size_t>(ctx.k) + ctx.l + 6;
  std::vector<CWalk> matches =
      bounded_match_cwalks(ctx.cg, ctx.nfa_r2, ctx.source, ctx.target, bound);
  std::sort(matches.begin(), matches.end(), cwalk_less);
  const std::vector<CWalk>& canonical = ctx.r2_canonical();

  c.details["match_count"] = matches.size();
  c.details["expected_count"] = 2 * ctx.k * ctx.l;
  c.expect(matches.size() == static_cast<std::size_t>(2 * ctx.k * ctx.l),
           "r2 match count is not 2*l*k");
  c.expect(matches == canonical, "r2 matches differ from the canonical walk family");
  for (const CWalk& w : matches)
    c.expect(w.length() < bound, "r2 match at or above the length bound");

  // All of them are bag-minimal among r2 matches.
  std::vector<CWalk> candidates = product_simple_cwalks(ctx.cg, ctx.nfa_r2, ctx.source, ctx.target);
  std::vector<CWalk> minimal = filter_bag_minimal(candidates);
  c.expect(minimal == canonical, "r2 matches are not all bag-minimal");
}

void check_r3_unique(const Context& ctx, Checker& c) {
  CompiledNfa nfa_r3 = CompiledNfa::compile(to_nfa(*ctx.ri.r3), ctx.cg);
  std::size_t bound = 6 * static_cast<std::size_t>(ctx.k) * ctx.l + 14 * ctx.k + 5 + 8;
  std::vector<CWalk> matches =
      bounded_match_cwalks(ctx.cg, nfa_r3, ctx.target, ctx.target, bound);

  c.details["match_count"] = matches.size();
  c.expect(matches.size() == 1, "expected exactly one r3 match");
  if (matches.size() != 1) return;

  CWalk w3 = matches[0];
  c.expect(w3 == *to_cwalk(ctx.cg, canonical_r3_walk(ctx.ri)),
           "r3 match differs from the canonical circuit");

  // Endpoints are forced: 9-edges leave Target, X-edges enter it.
  int nine = ctx.cg.label_id("9"), x = ctx.cg.label_id("X");
  for (const auto& e : ctx.cg.edges) {
    if (e.label == nine)
      c.expect(ctx.cg.vertex_names[e.src] == ctx.ri.target, "9-edge not leaving Target");
    if (e.label == x)
      c.expect(ctx.cg.vertex_names[e.tgt] == ctx.ri.target, "X-edge not entering Target");
  }

  CBag bag = cwalk_bag(w3);
  std::size_t covered = 0;
  for (int e = 0; e < static_cast<int>(ctx.cg.edges.size()); ++e) {
    if (ctx.label_red[ctx.cg.edges[e].label]) continue;
    auto it = std::lower_bound(bag.begin(), bag.end(), std::make_pair(e, 0));
    int count = (it != bag.end() && it->first == e) ? it->second : 0;
    c.expect(count == 1 || count == 2,
             "blue/green edge multiplicity " + std::to_string(count) + " outside {1,2}");
    if (count > 0) ++covered;
  }
  c.details["blue_green_covered"] = covered;
}

void check_trail_iff_sat(const Context& ctx, Checker& c) {
  std::vector<CWalk> trails = trail_match_cwalks(ctx.cg, ctx.nfa_r1, ctx.source, ctx.target);
  bool sat = sat_oracle(ctx.inst);
  c.details["trail_count"] = trails.size();
  c.details["satisfiable"] = sat;
  c.expect(trails.empty() == !sat, "trail existence disagrees with the sat oracle");
  for (const CWalk& t : trails) {
    Valuation v = valuation_of(ctx.ri, to_walk(ctx.cg, t));
    c.expect(satisfies(ctx.inst, v), "trail valuation does not satisfy the instance");
  }
}

void check_red_inclusion(const Context& ctx, Checker& c) {
  const std::vector<CWalk>& matches = ctx.r1_matches();
  std::vector<CBag> canonical_red;
  for (const CWalk& w : ctx.r2_canonical()) canonical_red.push_back(ctx.red_bag(w));

  c.details["r1_matches"] = matches.size();
  for (const CWalk& w1 : matches) {
    CBag red1 = ctx.red_bag(w1);
    bool dominated = false;
    for (const CBag& red2 : canonical_red)
      if (cbag_subeq(red2, red1)) {
        dominated = true;
        break;
      }
    c.expect(dominated == !is_ctrail(w1),
             "red-bag inclusion disagrees with the trail test");
  }
}

void check_equiv_three_way(const Context& ctx, Checker& c) {
  CWalk w3 = *to_cwalk(ctx.cg, canonical_r3_walk(ctx.ri));
  std::vector<CWalk> r2_walks = ctx.r2_canonical();
  std::vector<CBag> r2_bags;
  for (const CWalk& w : r2_walks) r2_bags.push_back(cwalk_bag(w));

  const std::vector<CWalk>& mm = ctx.mm_enum();

  const std::vector<CWalk>& matches = ctx.r1_matches();
  c.details["r1_matches"] = matches.size();
  for (const CWalk& w1 : matches) {
    CWalk w13 = w1;
    w13.edge_ids.insert(w13.edge_ids.end(), w3.edge_ids.begin(), w3.edge_ids.end());
    CBag bag13 = cwalk_bag(w13);

    bool not_trail = !is_ctrail(w1);
    bool dominated = false;
    for (const CBag& bag2 : r2_bags)
      if (cbag_subeq(bag2, bag13)) {  // r2 matches are strictly shorter
        dominated = true;
        break;
      }
    bool outside_mm =
        !std::binary_search(mm.begin(), mm.end(), w13,
                            [](const CWalk& a, const CWalk& b) { return cwalk_less(a, b); });
    c.expect(not_trail == dominated, "nontrail test disagrees with r2 domination");
    c.expect(dominated == outside_mm, "r2 domination disagrees with minimal-set membership");
  }
}

void check_end_to_end(const Context& ctx, Checker& c) {
  const std::vector<CWalk>& mm = ctx.mm_enum();
  bool sat = sat_oracle(ctx.inst);
  std::size_t easy = static_cast<std::size_t>(2) * ctx.k * ctx.l;

  c.details["mm_count"] = mm.size();
  c.details["easy_count"] = easy;
  c.details["satisfiable"] = sat;
  if (sat)
    c.expect(mm.size() >= easy + 1, "satisfiable instance yields no extra minimal walk");
  else
    c.expect(mm.size() == easy, "unsatisfiable instance yields extra minimal walks");

  for (const CWalk& w : ctx.r2_canonical())
    c.expect(std::binary_search(mm.begin(), mm.end(), w,
                                [](const CWalk& a, const CWalk& b) { return cwalk_less(a, b); }),
             "an r2 match is missing from the minimal set");
}

void check_membership_variant(const Context& ctx, Checker& c) {
  ReductionInstance mi = build_membership_instance(ctx.inst);
  c.expect(mi.witness.has_value(), "membership instance lacks a witness walk");
  if (!mi.witness) return;

  const Walk& w2 = *mi.witness;
  c.expect(validate_walk(mi.graph, w2), "witness is not a walk of the graph");
  c.expect(accepts(to_nfa(mi.r2), w2.label_word()), "witness does not match r2");

  EdgeBag red = red_edge_bag(w2, mi.graph.colors());
  std::size_t red_edges = 0;
  for (const Edge& e : mi.graph.edges())
    if (mi.graph.colors().at(e.label) == Color::Red) ++red_edges;
  c.expect(red.size() == red_edges, "witness does not cover every red edge");
  for (const auto& [edge, count] : red)
    c.expect(count == 1, "witness uses a red edge more than once");

  bool sat = sat_oracle(ctx.inst);
  MembershipResult result = mm_membership_check(mi.graph, mi.r, w2);
  c.details["member"] = result.member;
  c.details["satisfiable"] = sat;
  c.expect(result.member == !sat, "membership of the witness disagrees with the sat oracle");
  if (!result.member)
    c.expect(result.certificate.has_value(), "rejection without a certificate");
}

void check_sms_variant(const Context& ctx, Checker& c) {
  ReductionInstance si = build_sms_instance(ctx.inst);
  CompiledGraph cg = CompiledGraph::compile(si.graph);
  CompiledNfa nfa_r2 = CompiledNfa::compile(to_nfa(si.r2), cg);
  CompiledNfa nfa_r = CompiledNfa::compile(to_nfa(si.r), cg);
  CompiledNfa nfa_r1 = CompiledNfa::compile(to_nfa(si.r1), cg);
  int source = cg.require_vertex(si.source);
  int target = cg.require_vertex(si.target);
  int k = ctx.k, l = ctx.l;

  c.expect(si.graph.has_label("4'"), "sms graph lacks the primed blue label");

  std::size_t bound = 4 * static_cast<std::size_t>(k) + 2 * l + 10;
  std::vector<CWalk> census = bounded_match_cwalks(cg, nfa_r2, source, target, bound);
  std::sort(census.begin(), census.end(), cwalk_less);
  c.details["r2_match_count"] = census.size();
  c.expect(census.size() == static_cast<std::size_t>(2 * k * l), "sms r2 census is not 2*l*k");

  auto row_edge = [&](Literal side, int j) {
    return cg.edge_id({cg.vertex_id(names::row(side, j - 1)), cg.label_id("1"),
                       cg.vertex_id(names::row(side, j))});
  };

  // Every r2 match uses all row edges of one side of a single gadget and
  // exactly one row edge from the other side of that gadget.
  for (const CWalk& w : census) {
    std::vector<int> set = cwalk_set(w);
    bool shape_ok = false;
    for (int i = 1; i <= k && !shape_ok; ++i)
      for (Literal full : {pos(i), neg(i)}) {
        Literal other = full.positive ? neg(i) : pos(i);
        int full_rows = 0, other_rows = 0;
        for (int j = 1; j <= l; ++j) {
          if (std::binary_search(set.begin(), set.end(), row_edge(full, j))) ++full_rows;
          if (std::binary_search(set.begin(), set.end(), row_edge(other, j))) ++other_rows;
        }
        if (full_rows == l && other_rows == 1) {
          shape_ok = true;
          break;
        }
      }
    c.expect(shape_ok, "sms r2 match does not use one full side plus one opposite row edge");
  }

  // Antichain: no census walk dominates another under the set order.
  std::vector<std::vector<int>> sets;
  for (const CWalk& w : census) sets.push_back(cwalk_set(w));
  for (std::size_t i = 0; i < census.size(); ++i)
    for (std::size_t j = 0; j < census.size(); ++j) {
      if (i == j) continue;
      bool lt = cset_subeq(sets[i], sets[j]) &&
                (sets[i].size() < sets[j].size() || census[i].length() < census[j].length());
      c.expect(!lt, "sms r2 matches are not an antichain");
    }

  std::vector<CWalk> candidates = product_simple_cwalks(cg, nfa_r, source, target);
  std::vector<CWalk> sms = filter_set_minimal(candidates);
  bool sat = sat_oracle(ctx.inst);
  c.details["sms_count"] = sms.size();
  c.details["satisfiable"] = sat;
  std::size_t easy = static_cast<std::size_t>(2) * k * l;
  if (sat)
    c.expect(sms.size() >= easy + 1, "satisfiable instance yields no extra sms walk");
  else
    c.expect(sms.size() == easy, "unsatisfiable instance yields extra sms walks");
  for (const CWalk& w : census)
    c.expect(std::binary_search(sms.begin(), sms.end(), w,
                                [](const CWalk& a, const CWalk& b) { return cwalk_less(a, b); }),
             "an sms r2 match is missing from the minimal set");

  // Satisfiability criterion on the r1 side: some r1 match touches row
  // 1-edges of only one side within every variable gadget.
  std::vector<CWalk> r1_matches =
      bounded_match_cwalks(cg, nfa_r1, source, target, expected_r1_length(k, l) + 8);
  bool one_side_only_exists = false;
  for (const CWalk& w : r1_matches) {
    std::vector<int> set = cwalk_set(w);
    bool all_one_sided = true;
    for (int i = 1; i <= k && all_one_sided; ++i) {
      bool pos_rows = false, neg_rows = false;
      for (int j = 1; j <= l; ++j) {
        if (std::binary_search(set.begin(), set.end(), row_edge(pos(i), j))) pos_rows = true;
        if (std::binary_search(set.begin(), set.end(), row_edge(neg(i), j))) neg_rows = true;
      }
      if (pos_rows && neg_rows) all_one_sided = false;
    }
    if (all_one_sided) {
      one_side_only_exists = true;
      break;
    }
  }
  c.details["one_side_only_exists"] = one_side_only_exists;
  c.expect(one_side_only_exists == sat,
           "one-sided r1 match existence disagrees with the sat oracle");
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "r1_properties", "r2_census",       "r3_unique",
      "trail_iff_sat", "red_inclusion",   "equiv_three_way",
      "end_to_end",    "membership_variant", "sms_variant"};
  return names;
}

bool VerificationReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const CheckResult& c : checks)
    checks_json.push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"elapsed_ms", c.elapsed_ms},
                           {"details", c.details}});
  return {{"instance", instance_info}, {"checks", checks_json}, {"all_passed", all_passed()}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport report;
  report.instance_info = j.at("instance");
  for (const auto& c : j.at("checks"))
    report.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                             c.at("details"), c.at("elapsed_ms").get<double>()});
  return report;
}

std::string VerificationReport::to_text() const {
  std::string out;
  out += "check                 status  time\n";
  for (const CheckResult& c : checks) {
    std::string name = c.name;
    name.resize(22, ' ');
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f ms", c.elapsed_ms);
    out += name + (c.passed ? "PASS    " : "FAIL    ") + buf + "\n";
    if (!c.passed && c.details.contains("failures"))
      for (const auto& f : c.details["failures"])
        out += "  - " + f.get<std::string>() + "\n";
  }
  out += std::string("overall: ") + (all_passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

VerificationReport check_all(const SatInstance& inst, const CheckOptions& options) {
  if (!options.force && (inst.var_count > 4 || inst.clause_count() > 4))
    throw CapExceededError("instance exceeds the default k,l <= 4 cap; use force to override");

  std::vector<std::string> selected =
      options.only.empty() ? check_names() : options.only;
  for (const std::string& name : selected)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw Error("unknown check '" + name + "'");

  Context ctx(inst);

  VerificationReport report;
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& clause : inst.clauses) {
    nlohmann::json c = nlohmann::json::array();
    for (const Literal& lit : clause) c.push_back(lit.positive ? lit.var : -lit.var);
    clauses.push_back(c);
  }
  report.instance_info = {{"k", inst.var_count}, {"l", inst.clause_count()}, {"clauses", clauses}};

  using CheckFn = std::function<void(const Context&, Checker&)>;
  const std::vector<std::pair<std::string, CheckFn>> all = {
      {"r1_properties", check_r1_properties},
      {"r2_census", check_r2_census},
      {"r3_unique", check_r3_unique},
      {"trail_iff_sat", check_trail_iff_sat},
      {"red_inclusion", check_red_inclusion},
      {"equiv_three_way", check_equiv_three_way},
      {"end_to_end", check_end_to_end},
      {"membership_variant", check_membership_variant},
      {"sms_variant", check_sms_variant},
  };

  for (const auto& [name, fn] : all) {
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
    Checker checker;
    auto start = std::chrono::steady_clock::now();
    try {
      fn(ctx, checker);
    } catch (const std::exception& e) {
      checker.ok = false;
      checker.details["error"] = e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report.checks.push_back({name, checker.ok, checker.details, ms});
  }
  return report;
}

nlohmann::json DelayProfile::to_json() const {
  nlohmann::json out_list = nlohmann::json::array();
  for (const auto& [index, steps] : outputs) out_list.push_back({index, steps});
  return {{"outputs", out_list}, {"total_candidates", total_candidates}};
}

DelayProfile profile_enumeration(const Graph& g, const RegExp& r, const std::string& s,
                                 const std::string& t) {
  CompiledGraph cg = CompiledGraph::compile(g);
  CompiledNfa cn = CompiledNfa::compile(to_nfa(r), cg);
  std::vector<CWalk> candidates =
      product_simple_cwalks(cg, cn, cg.require_vertex(s), cg.require_vertex(t));

  DelayProfile profile;
  profile.total_candidates = candidates.size();
  std::vector<CBag> kept_bags;
  std::vector<std::size_t> kept_lengths;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    CBag bag = cwalk_bag(candidates[i]);
    bool dominated = false;
    for (std::size_t j = 0; j < kept_bags.size() && !dominated; ++j)
      if (kept_lengths[j] < candidates[i].length()) dominated = cbag_subeq(kept_bags[j], bag);
    if (!dominated) {
      kept_bags.push_back(std::move(bag));
      kept_lengths.push_back(candidates[i].length());
      profile.outputs.emplace_back(kept_bags.size(), i + 1);
    }
  }
  return profile;
}

DelayProfile delay_profile(const SatInstance& inst) {
  ReductionInstance ri = build_enum_instance(inst);
  return profile_enumeration(ri.graph, ri.r, ri.source, ri.target);
}

std::uint64_t InstanceSampler::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t InstanceSampler::below(std::uint64_t n) { return next() % n; }

SatInstance InstanceSampler::sample(int k, int l) {
  if (k < 3) throw Error("instances need at least 3 variables per clause");
  SatInstance inst;
  inst.var_count = k;
  for (int j = 0; j < l; ++j) {
    std::vector<int> vars;
    while (vars.size() < 3) {
      int v = static_cast<int>(below(static_cast<std::uint64_t>(k))) + 1;
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    std::array<Literal, 3> clause;
    for (int c = 0; c < 3; ++c) clause[c] = {vars[c], below(2) == 0};
    inst.clauses.push_back(clause);
  }
  return inst;
}

}  // namespace walkmin
