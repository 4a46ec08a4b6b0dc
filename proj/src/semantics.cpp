#include "walkmin/semantics.hpp"

#include <algorithm>
#include <functional>

#include "walkmin/compiled.hpp"
#include "walkmin/engine.hpp"
#include "walkmin/error.hpp"
#include "walkmin/nfa.hpp"

namespace walkmin {

namespace {

struct Candidates {
  CompiledGraph graph;
  CompiledNfa nfa;
  int s = -1;
  int t = -1;
  std::vector<CWalk> walks;  // sorted by cwalk_less
};

Candidates collect_candidates(const Graph& g, const RegExp& r, const std::string& s,
                              const std::string& t) {
  Candidates c;
  c.graph = CompiledGraph::compile(g);
  c.nfa = CompiledNfa::compile(to_nfa(r), c.graph);
  c.s = c.graph.require_vertex(s);
  c.t = c.graph.require_vertex(t);
  c.walks = product_simple_cwalks(c.graph, c.nfa, c.s, c.t);
  return c;
}

std::vector<Walk> to_walks(const CompiledGraph& g, const std::vector<CWalk>& cwalks) {
  std::vector<Walk> out;
  out.reserve(cwalks.size());
  for (const CWalk& w : cwalks) out.push_back(to_walk(g, w));
  return out;
}

std::vector<Walk> union_over_pairs(
    const Graph& g,
    const std::function<std::vector<Walk>(const std::string&, const std::string&)>& per_pair) {
  std::vector<Walk> all;
  for (const std::string& s : g.vertices())
    for (const std::string& t : g.vertices()) {
      std::vector<Walk> part = per_pair(s, t);
      all.insert(all.end(), part.begin(), part.end());
    }
  std::sort(all.begin(), all.end(), canonical_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

enum class Order { Bag, Set };

MembershipResult membership_check(const Graph& g, const RegExp& r, const Walk& w,
                                  Order order) {
  if (!validate_walk(g, w))
    throw Error("walk is not consistent with the graph's edges");

  MembershipResult result;
  std::vector<std::string> word = w.label_word();
  if (!accepts(to_nfa(r), word)) return result;  // not a match: non-member
  result.is_match = true;

  CompiledGraph cg = CompiledGraph::compile(g);
  CompiledNfa cn = CompiledNfa::compile(to_nfa(r), cg);
  int s = cg.require_vertex(w.source());
  int t = cg.require_vertex(w.target());
  CWalk cw = *to_cwalk(cg, w);

  // A rejection certificate is a dominating match; a minimal one exists
  // and is product-simple, so the restricted searches are complete.
  std::optional<CWalk> certificate;
  if (order == Order::Bag) {
    certificate = find_dominating_match_bag(cg, cn, s, t, cwalk_bag(cw), cw.length());
  } else {
    std::vector<int> support = cwalk_set(cw);
    certificate = find_dominating_match_set(cg, cn, s, t, support, support.size(), cw.length());
  }
  if (certificate) {
    result.certificate = to_walk(cg, *certificate);
  } else {
    result.member = true;
  }
  return result;
}

}  // namespace

std::vector<Walk> mm_set(const Graph& g, const RegExp& r, const std::string& s,
                         const std::string& t) {
  Candidates c = collect_candidates(g, r, s, t);
  return to_walks(c.graph, filter_bag_minimal(c.walks));
}

std::vector<Walk> sms_set(const Graph& g, const RegExp& r, const std::string& s,
                          const std::string& t) {
  Candidates c = collect_candidates(g, r, s, t);
  return to_walks(c.graph, filter_set_minimal(c.walks));
}

std::vector<Walk> mm_set_all(const Graph& g, const RegExp& r) {
  return union_over_pairs(g, [&](const std::string& s, const std::string& t) {
    return mm_set(g, r, s, t);
  });
}

std::vector<Walk> sms_set_all(const Graph& g, const RegExp& r) {
  return union_over_pairs(g, [&](const std::string& s, const std::string& t) {
    return sms_set(g, r, s, t);
  });
}

std::vector<Walk> trail_set(const Graph& g, const RegExp& r, const std::string& s,
                            const std::string& t) {
  return enumerate_trail_matches(g, r, s, t);
}

std::vector<Walk> shortest_set(const Graph& g, const RegExp& r, const std::string& s,
                               const std::string& t) {
  return shortest_matches(g, r, s, t);
}

std::vector<Walk> match_set(const Graph& g, const RegExp& r, const std::string& s,
                            const std::string& t, std::size_t max_len) {
  return enumerate_matches(g, r, s, t, max_len);
}

bool mm_membership(const Graph& g, const RegExp& r, const Walk& w) {
  return mm_membership_check(g, r, w).member;
}

bool sms_membership(const Graph& g, const RegExp& r, const Walk& w) {
  return sms_membership_check(g, r, w).member;
}

MembershipResult mm_membership_check(const Graph& g, const RegExp& r, const Walk& w) {
  return membership_check(g, r, w, Order::Bag);
}

MembershipResult sms_membership_check(const Graph& g, const RegExp& r, const Walk& w) {
  return membership_check(g, r, w, Order::Set);
}

}  // namespace walkmin
