#pragma once

#include <functional>
#include <string>
#include <vector>

#include "walkmin/graph.hpp"
#include "walkmin/regex.hpp"

namespace walkmin {

// One frontier point of the product search: a graph vertex paired with an
// automaton state. Ids index the compiled graph/automaton.
struct ProductState {
  int vertex = -1;
  int state = -1;

  auto operator<=>(const ProductState&) const = default;
};

// True iff some walk from s to t matches r (reachability in the product).
// Throws UnknownVertexError when s or t is not a vertex of g.
bool nonempty(const Graph& g, const RegExp& r, const std::string& s, const std::string& t);

// All matches of minimum length; empty when no match exists.
std::vector<Walk> shortest_matches(const Graph& g, const RegExp& r, const std::string& s,
                                   const std::string& t);

// Exactly the matches of length <= max_len, in lexicographic order of the
// step encoding, without duplicates.
std::vector<Walk> enumerate_matches(const Graph& g, const RegExp& r, const std::string& s,
                                    const std::string& t, std::size_t max_len);

// All matches admitting an accepting run that visits no product state
// twice; a superset of every bag-minimal and set-minimal match. Sorted by
// (length, step encoding), deduplicated.
std::vector<Walk> enumerate_product_simple(const Graph& g, const RegExp& r,
                                           const std::string& s, const std::string& t);

// All matches that repeat no graph edge.
std::vector<Walk> enumerate_trail_matches(const Graph& g, const RegExp& r,
                                          const std::string& s, const std::string& t);

// Streams the product-simple candidates in the deterministic
// (length, step encoding) order. The consumer returns false to stop.
void stream_product_simple(const Graph& g, const RegExp& r, const std::string& s,
                           const std::string& t,
                           const std::function<bool(const Walk&)>& consume);

// |V| * |Q| for the given query; used by the CLI safety cap and by the
// brute-force length bound |V|*|Q| - 1.
std::size_t product_size(const Graph& g, const RegExp& r);

}  // namespace walkmin
