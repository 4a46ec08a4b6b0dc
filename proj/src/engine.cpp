#include "walkmin/engine.hpp"

#include <algorithm>

#include "walkmin/compiled.hpp"
#include "walkmin/error.hpp"
#include "walkmin/nfa.hpp"

namespace walkmin {

namespace {

struct Query {
  CompiledGraph graph;
  CompiledNfa nfa;
  int s;
  int t;
};

Query compile_query(const Graph& g, const RegExp& r, const std::string& s,
                    const std::string& t) {
  Query q{CompiledGraph::compile(g), {}, 0, 0};
  q.nfa = CompiledNfa::compile(to_nfa(r), q.graph);
  q.s = q.graph.require_vertex(s);
  q.t = q.graph.require_vertex(t);
  return q;
}

std::vector<Walk> to_walks(const CompiledGraph& g, const std::vector<CWalk>& cwalks) {
  std::vector<Walk> out;
  out.reserve(cwalks.size());
  for (const CWalk& w : cwalks) out.push_back(to_walk(g, w));
  return out;
}

}  // namespace

bool nonempty(const Graph& g, const RegExp& r, const std::string& s, const std::string& t) {
  Query q = compile_query(g, r, s, t);
  return product_reachable(q.graph, q.nfa, q.s, q.t);
}

std::vector<Walk> shortest_matches(const Graph& g, const RegExp& r, const std::string& s,
                                   const std::string& t) {
  Query q = compile_query(g, r, s, t);
  return to_walks(q.graph, shortest_match_cwalks(q.graph, q.nfa, q.s, q.t));
}

std::vector<Walk> enumerate_matches(const Graph& g, const RegExp& r, const std::string& s,
                                    const std::string& t, std::size_t max_len) {
  Query q = compile_query(g, r, s, t);
  return to_walks(q.graph, bounded_match_cwalks(q.graph, q.nfa, q.s, q.t, max_len));
}

std::vector<Walk> enumerate_product_simple(const Graph& g, const RegExp& r,
                                           const std::string& s, const std::string& t) {
  Query q = compile_query(g, r, s, t);
  return to_walks(q.graph, product_simple_cwalks(q.graph, q.nfa, q.s, q.t));
}

std::vector<Walk> enumerate_trail_matches(const Graph& g, const RegExp& r,
                                          const std::string& s, const std::string& t) {
  Query q = compile_query(g, r, s, t);
  return to_walks(q.graph, trail_match_cwalks(q.graph, q.nfa, q.s, q.t));
}

void stream_product_simple(const Graph& g, const RegExp& r, const std::string& s,
                           const std::string& t,
                           const std::function<bool(const Walk&)>& consume) {
  Query q = compile_query(g, r, s, t);
  for (const CWalk& w : product_simple_cwalks(q.graph, q.nfa, q.s, q.t))
    if (!consume(to_walk(q.graph, w))) return;
}

std::size_t product_size(const Graph& g, const RegExp& r) {
  return g.vertices().size() * to_nfa(r).state_count;
}

}  // namespace walkmin
