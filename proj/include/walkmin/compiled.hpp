#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "walkmin/graph.hpp"
#include "walkmin/nfa.hpp"

// Integer-indexed views of a graph, an automaton and walks. The search
// routines below work on these; the string-based module surfaces convert
// at the boundary. Vertex and label ids follow the lexicographic order of
// their names, so id-wise step comparisons agree with string comparisons.

namespace walkmin {

struct CompiledGraph {
  struct CEdge {
    int src;
    int label;
    int tgt;
  };

  std::vector<std::string> vertex_names;  // id -> name, sorted
  std::vector<std::string> label_names;   // id -> name, sorted
  std::vector<CEdge> edges;               // sorted by (src, label, tgt); index = edge id
  std::vector<std::pair<int, int>> out;   // per vertex: [begin, end) into edges

  static CompiledGraph compile(const Graph& g);

  int vertex_id(const std::string& name) const;   // -1 when absent
  int require_vertex(const std::string& name) const;  // throws UnknownVertexError
  int label_id(const std::string& name) const;    // -1 when absent
  int edge_id(const CEdge& e) const;              // -1 when absent
};

struct CompiledNfa {
  int state_count = 0;
  int initial = 0;
  int label_count = 0;
  std::vector<char> is_final;

  // Flattened (state, label) -> sorted target states. Labels outside the
  // graph's label set are dropped (they can never fire on a walk).
  std::vector<int> delta_offsets;  // state_count * label_count + 1 entries
  std::vector<int> delta_targets;

  // Bitmask form for state-set stepping; `words` 64-bit words per set.
  int words = 1;
  std::vector<std::uint64_t> move_masks;  // [(state*label_count+label)*words ...]
  std::vector<std::uint64_t> final_mask;

  static CompiledNfa compile(const Nfa& n, const CompiledGraph& g);

  std::span<const int> targets(int state, int label) const {
    int idx = state * label_count + label;
    return {delta_targets.data() + delta_offsets[idx],
            delta_targets.data() + delta_offsets[idx + 1]};
  }
  const std::uint64_t* move(int state, int label) const {
    return move_masks.data() + (static_cast<std::size_t>(state) * label_count + label) * words;
  }
};

struct CWalk {
  int source = -1;
  std::vector<int> edge_ids;

  std::size_t length() const { return edge_ids.size(); }
  bool operator==(const CWalk&) const = default;
};

// (length, edge id sequence): the deterministic output order.
bool cwalk_less(const CWalk& a, const CWalk& b);

Walk to_walk(const CompiledGraph& g, const CWalk& w);
std::optional<CWalk> to_cwalk(const CompiledGraph& g, const Walk& w);  // nullopt if not in g

// Sorted (edge id, multiplicity) pairs.
using CBag = std::vector<std::pair<int, int>>;

CBag cwalk_bag(const CWalk& w);
std::vector<int> cwalk_set(const CWalk& w);  // sorted unique edge ids
bool cbag_subeq(const CBag& a, const CBag& b);
bool cset_subeq(const std::vector<int>& a, const std::vector<int>& b);

// All matches admitting a run that never revisits a (vertex, state) pair,
// deduplicated and sorted by cwalk_less.
std::vector<CWalk> product_simple_cwalks(const CompiledGraph& g, const CompiledNfa& n,
                                         int s, int t);

// Keep the bag-minimal / set-minimal walks of a cwalk_less-sorted list.
std::vector<CWalk> filter_bag_minimal(const std::vector<CWalk>& sorted_candidates);
std::vector<CWalk> filter_set_minimal(const std::vector<CWalk>& sorted_candidates);

// All matches of length <= max_len, emitted in lexicographic order of the
// step encoding (depth-first preorder over sorted adjacency).
std::vector<CWalk> bounded_match_cwalks(const CompiledGraph& g, const CompiledNfa& n,
                                        int s, int t, std::size_t max_len);

// All matches that repeat no edge.
std::vector<CWalk> trail_match_cwalks(const CompiledGraph& g, const CompiledNfa& n,
                                      int s, int t);

// All matches of minimum length (empty when no match exists).
std::vector<CWalk> shortest_match_cwalks(const CompiledGraph& g, const CompiledNfa& n,
                                         int s, int t);

bool product_reachable(const CompiledGraph& g, const CompiledNfa& n, int s, int t);

// Number of product states reachable from (s, initial) and co-reachable to
// an accepting (t, final). Any walk that is minimal for the bag or the set
// order has a run visiting each such state at most once, so its length is
// below this count.
std::size_t useful_product_state_count(const CompiledGraph& g, const CompiledNfa& n,
                                       int s, int t);

// First match (in search order) whose bag fits under `capacity` pointwise
// and whose length is strictly below `length_limit`. Such a walk has a bag
// strictly included in the bag `capacity` was taken from.
std::optional<CWalk> find_dominating_match_bag(const CompiledGraph& g, const CompiledNfa& n,
                                               int s, int t, const CBag& capacity,
                                               std::size_t length_limit);

// First match using only edges of `support` whose edge set is strictly
// smaller than `set_size`, or equal with length strictly below `length_limit`.
std::optional<CWalk> find_dominating_match_set(const CompiledGraph& g, const CompiledNfa& n,
                                               int s, int t, const std::vector<int>& support,
                                               std::size_t set_size, std::size_t length_limit);

}  // namespace walkmin
