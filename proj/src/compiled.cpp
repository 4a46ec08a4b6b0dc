#include "walkmin/compiled.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "walkmin/error.hpp"

namespace walkmin {

CompiledGraph CompiledGraph::compile(const Graph& g) {
  CompiledGraph cg;
  cg.vertex_names = g.vertices();
  std::sort(cg.vertex_names.begin(), cg.vertex_names.end());
  cg.label_names = g.labels();
  std::sort(cg.label_names.begin(), cg.label_names.end());

  std::unordered_map<std::string, int> vid, lid;
  for (int i = 0; i < static_cast<int>(cg.vertex_names.size()); ++i) vid[cg.vertex_names[i]] = i;
  for (int i = 0; i < static_cast<int>(cg.label_names.size()); ++i) lid[cg.label_names[i]] = i;

  cg.edges.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    cg.edges.push_back({vid.at(e.src), lid.at(e.label), vid.at(e.tgt)});
  std::sort(cg.edges.begin(), cg.edges.end(), [](const CEdge& a, const CEdge& b) {
    return std::tie(a.src, a.label, a.tgt) < std::tie(b.src, b.label, b.tgt);
  });

  cg.out.assign(cg.vertex_names.size(), {0, 0});
  for (std::size_t i = 0; i < cg.edges.size();) {
    std::size_t j = i;
    while (j < cg.edges.size() && cg.edges[j].src == cg.edges[i].src) ++j;
    cg.out[cg.edges[i].src] = {static_cast<int>(i), static_cast<int>(j)};
    i = j;
  }
  return cg;
}

int CompiledGraph::vertex_id(const std::string& name) const {
  auto it = std::lower_bound(vertex_names.begin(), vertex_names.end(), name);
  if (it == vertex_names.end() || *it != name) return -1;
  return static_cast<int>(it - vertex_names.begin());
}

int CompiledGraph::require_vertex(const std::string& name) const {
  int id = vertex_id(name);
  if (id < 0) throw UnknownVertexError("unknown vertex '" + name + "'");
  return id;
}

int CompiledGraph::label_id(const std::string& name) const {
  auto it = std::lower_bound(label_names.begin(), label_names.end(), name);
  if (it == label_names.end() || *it != name) return -1;
  return static_cast<int>(it - label_names.begin());
}

int CompiledGraph::edge_id(const CEdge& e) const {
  auto cmp = [](const CEdge& a, const CEdge& b) {
    return std::tie(a.src, a.label, a.tgt) < std::tie(b.src, b.label, b.tgt);
  };
  auto it = std::lower_bound(edges.begin(), edges.end(), e, cmp);
  if (it == edges.end() || it->src != e.src || it->label != e.label || it->tgt != e.tgt) return -1;
  return static_cast<int>(it - edges.begin());
}

CompiledNfa CompiledNfa::compile(const Nfa& n, const CompiledGraph& g) {
  CompiledNfa cn;
  cn.state_count = n.state_count;
  cn.initial = n.initial;
  cn.label_count = static_cast<int>(g.label_names.size());
  cn.is_final.assign(n.state_count, 0);
  for (int f : n.finals) cn.is_final[f] = 1;

  std::vector<std::vector<int>> delta(
      static_cast<std::size_t>(n.state_count) * cn.label_count);
  for (const NfaTransition& t : n.transitions) {
    int lab = g.label_id(t.label);
    if (lab >= 0) delta[static_cast<std::size_t>(t.from) * cn.label_count + lab].push_back(t.to);
  }
  cn.delta_offsets.assign(delta.size() + 1, 0);
  for (std::size_t i = 0; i < delta.size(); ++i) {
    auto& targets = delta[i];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    cn.delta_offsets[i + 1] = cn.delta_offsets[i] + static_cast<int>(targets.size());
    cn.delta_targets.insert(cn.delta_targets.end(), targets.begin(), targets.end());
  }

  cn.words = (n.state_count + 63) / 64;
  cn.move_masks.assign(delta.size() * cn.words, 0);
  for (std::size_t i = 0; i < delta.size(); ++i)
    for (int q : delta[i]) cn.move_masks[i * cn.words + q / 64] |= 1ull << (q % 64);
  cn.final_mask.assign(cn.words, 0);
  for (int f : n.finals) cn.final_mask[f / 64] |= 1ull << (f % 64);
  return cn;
}

bool cwalk_less(const CWalk& a, const CWalk& b) {
  if (a.edge_ids.size() != b.edge_ids.size()) return a.edge_ids.size() < b.edge_ids.size();
  if (a.source != b.source) return a.source < b.source;
  return a.edge_ids < b.edge_ids;
}

Walk to_walk(const CompiledGraph& g, const CWalk& w) {
  std::vector<Step> steps;
  steps.reserve(w.edge_ids.size());
  for (int id : w.edge_ids) {
    const auto& e = g.edges[id];
    steps.push_back({g.label_names[e.label], g.vertex_names[e.tgt]});
  }
  return Walk(g.vertex_names[w.source], std::move(steps));
}

std::optional<CWalk> to_cwalk(const CompiledGraph& g, const Walk& w) {
  CWalk out;
  out.source = g.vertex_id(w.source());
  if (out.source < 0) return std::nullopt;
  int at = out.source;
  for (const Step& s : w.steps()) {
    int lab = g.label_id(s.label);
    int tgt = g.vertex_id(s.tgt);
    if (lab < 0 || tgt < 0) return std::nullopt;
    int id = g.edge_id({at, lab, tgt});
    if (id < 0) return std::nullopt;
    out.edge_ids.push_back(id);
    at = tgt;
  }
  return out;
}

CBag cwalk_bag(const CWalk& w) {
  std::vector<int> ids = w.edge_ids;
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

std::vector<int> cwalk_set(const CWalk& w) {
  std::vector<int> ids = w.edge_ids;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool cbag_subeq(const CBag& a, const CBag& b) {
  std::size_t j = 0;
  for (const auto& [edge, count] : a) {
    while (j < b.size() && b[j].first < edge) ++j;
    if (j >= b.size() || b[j].first != edge || b[j].second < count) return false;
  }
  return true;
}

bool cset_subeq(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void sort_unique(std::vector<CWalk>& walks) {
  std::sort(walks.begin(), walks.end(), cwalk_less);
  walks.erase(std::unique(walks.begin(), walks.end()), walks.end());
}

// Depth-first search over (walk, run) pairs with an on-path set of visited
// product states. A repeated (vertex, state) pair along a run would enclose
// at least one consumed edge (the automaton has no epsilon transitions), so
// excising the enclosed segment yields a match with the same endpoints, a
// strictly smaller edge bag, and a strictly shorter walk. Hence no match
// that is minimal for the bag order or the set-then-length order needs a
// run revisiting a product state, and this search yields a superset of both
// minimal sets.
class SimpleRunSearch {
 public:
  SimpleRunSearch(const CompiledGraph& g, const CompiledNfa& n, int s, int t)
      : g_(g), n_(n), s_(s), t_(t), visited_(g.vertex_names.size() * n.state_count, 0) {}

  // consume returns false to abort the whole search.
  void run(const std::function<bool(const std::vector<int>&)>& consume) {
    consume_ = &consume;
    aborted_ = false;
    dfs(s_, n_.initial);
  }

 private:
  std::size_t key(int v, int q) const {
    return static_cast<std::size_t>(v) * n_.state_count + q;
  }

  void dfs(int v, int q) {
    if (aborted_) return;
    visited_[key(v, q)] = 1;
    if (v == t_ && n_.is_final[q]) {
      if (!(*consume_)(path_)) {
        aborted_ = true;
        visited_[key(v, q)] = 0;
        return;
      }
    }
    auto [begin, end] = g_.out[v];
    for (int e = begin; e < end && !aborted_; ++e) {
      const auto& edge = g_.edges[e];
      for (int q2 : n_.targets(q, edge.label)) {
        if (visited_[key(edge.tgt, q2)]) continue;
        path_.push_back(e);
        dfs(edge.tgt, q2);
        path_.pop_back();
        if (aborted_) break;
      }
    }
    visited_[key(v, q)] = 0;
  }

  const CompiledGraph& g_;
  const CompiledNfa& n_;
  int s_, t_;
  std::vector<char> visited_;
  std::vector<int> path_;
  const std::function<bool(const std::vector<int>&)>* consume_ = nullptr;
  bool aborted_ = false;
};

// State-set stepping on the bitmask form.
bool mask_step(const CompiledNfa& n, const std::uint64_t* from, int label, std::uint64_t* out) {
  for (int w = 0; w < n.words; ++w) out[w] = 0;
  for (int w = 0; w < n.words; ++w) {
    std::uint64_t bits = from[w];
    while (bits) {
      int q = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      const std::uint64_t* mv = n.move(q, label);
      for (int ww = 0; ww < n.words; ++ww) out[ww] |= mv[ww];
    }
  }
  for (int w = 0; w < n.words; ++w)
    if (out[w]) return true;
  return false;
}

bool mask_accepting(const CompiledNfa& n, const std::uint64_t* s) {
  for (int w = 0; w < n.words; ++w)
    if (s[w] & n.final_mask[w]) return true;
  return false;
}

std::vector<std::vector<char>> forward_product_reach(const CompiledGraph& g,
                                                     const CompiledNfa& n, int s) {
  std::vector<std::vector<char>> reach(g.vertex_names.size(),
                                       std::vector<char>(n.state_count, 0));
  std::deque<std::pair<int, int>> queue;
  reach[s][n.initial] = 1;
  queue.push_back({s, n.initial});
  while (!queue.empty()) {
    auto [v, q] = queue.front();
    queue.pop_front();
    auto [begin, end] = g.out[v];
    for (int e = begin; e < end; ++e) {
      const auto& edge = g.edges[e];
      for (int q2 : n.targets(q, edge.label))
        if (!reach[edge.tgt][q2]) {
          reach[edge.tgt][q2] = 1;
          queue.push_back({edge.tgt, q2});
        }
    }
  }
  return reach;
}

// Distance (in steps) from (s, initial); -1 when unreachable.
std::vector<std::vector<int>> forward_product_dist(const CompiledGraph& g,
                                                   const CompiledNfa& n, int s) {
  std::vector<std::vector<int>> dist(g.vertex_names.size(),
                                     std::vector<int>(n.state_count, -1));
  std::deque<std::pair<int, int>> queue;
  dist[s][n.initial] = 0;
  queue.push_back({s, n.initial});
  while (!queue.empty()) {
    auto [v, q] = queue.front();
    queue.pop_front();
    auto [begin, end] = g.out[v];
    for (int e = begin; e < end; ++e) {
      const auto& edge = g.edges[e];
      for (int q2 : n.targets(q, edge.label))
        if (dist[edge.tgt][q2] < 0) {
          dist[edge.tgt][q2] = dist[v][q] + 1;
          queue.push_back({edge.tgt, q2});
        }
    }
  }
  return dist;
}

// Distance to an accepting (t, final) pair; needs reverse product edges.
std::vector<std::vector<int>> backward_product_dist(const CompiledGraph& g,
                                                    const CompiledNfa& n, int t) {
  // reverse adjacency: for target (v2, q2), the list of (v, q) predecessors
  // is derivable by scanning edges into v2; build edge lists into vertices.
  std::vector<std::vector<int>> edges_into(g.vertex_names.size());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    edges_into[g.edges[e].tgt].push_back(e);

  std::vector<std::vector<std::vector<int>>> rev_delta(
      n.state_count, std::vector<std::vector<int>>(g.label_names.size()));
  for (int q = 0; q < n.state_count; ++q)
    for (int lab = 0; lab < static_cast<int>(g.label_names.size()); ++lab)
      for (int q2 : n.targets(q, lab)) rev_delta[q2][lab].push_back(q);

  std::vector<std::vector<int>> dist(g.vertex_names.size(),
                                     std::vector<int>(n.state_count, -1));
  std::deque<std::pair<int, int>> queue;
  for (int q = 0; q < n.state_count; ++q)
    if (n.is_final[q]) {
      dist[t][q] = 0;
      queue.push_back({t, q});
    }
  while (!queue.empty()) {
    auto [v2, q2] = queue.front();
    queue.pop_front();
    for (int e : edges_into[v2]) {
      const auto& edge = g.edges[e];
      for (int q : rev_delta[q2][edge.label])
        if (dist[edge.src][q] < 0) {
          dist[edge.src][q] = dist[v2][q2] + 1;
          queue.push_back({edge.src, q});
        }
    }
  }
  return dist;
}

}  // namespace

std::vector<CWalk> product_simple_cwalks(const CompiledGraph& g, const CompiledNfa& n,
                                         int s, int t) {
  std::vector<CWalk> out;
  SimpleRunSearch search(g, n, s, t);
  search.run([&](const std::vector<int>& path) {
    out.push_back({s, path});
    return true;
  });
  sort_unique(out);
  return out;
}

std::vector<CWalk> filter_bag_minimal(const std::vector<CWalk>& sorted_candidates) {
  std::vector<CBag> bags;
  bags.reserve(sorted_candidates.size());
  for (const CWalk& w : sorted_candidates) bags.push_back(cwalk_bag(w));

  std::vector<CWalk> kept;
  for (std::size_t i = 0; i < sorted_candidates.size(); ++i) {
    bool dominated = false;
    // A strict sub-bag has a smaller total, so dominators are strictly
    // shorter and precede i in the sorted list.
    for (std::size_t j = 0; j < i && !dominated; ++j) {
      if (sorted_candidates[j].length() >= sorted_candidates[i].length()) break;
      dominated = cbag_subeq(bags[j], bags[i]);
    }
    if (!dominated) kept.push_back(sorted_candidates[i]);
  }
  return kept;
}

std::vector<CWalk> filter_set_minimal(const std::vector<CWalk>& sorted_candidates) {
  std::vector<std::vector<int>> sets;
  sets.reserve(sorted_candidates.size());
  for (const CWalk& w : sorted_candidates) sets.push_back(cwalk_set(w));

  // 256-bit membership signatures reject most non-subset pairs in four
  // word operations before the exact merge runs.
  std::vector<std::array<std::uint64_t, 4>> sigs(sets.size(), {0, 0, 0, 0});
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int e : sets[i]) sigs[i][(e >> 6) & 3] |= 1ull << (e & 63);

  std::vector<CWalk> kept;
  for (std::size_t i = 0; i < sorted_candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sorted_candidates.size() && !dominated; ++j) {
      if (j == i) continue;
      if (sets[j].size() > sets[i].size()) continue;
      if ((sigs[j][0] & ~sigs[i][0]) | (sigs[j][1] & ~sigs[i][1]) |
          (sigs[j][2] & ~sigs[i][2]) | (sigs[j][3] & ~sigs[i][3]))
        continue;
      if (!cset_subeq(sets[j], sets[i])) continue;
      dominated = sets[j].size() < sets[i].size() ||
                  sorted_candidates[j].length() < sorted_candidates[i].length();
    }
    if (!dominated) kept.push_back(sorted_candidates[i]);
  }
  return kept;
}

std::vector<CWalk> bounded_match_cwalks(const CompiledGraph& g, const CompiledNfa& n,
                                        int s, int t, std::size_t max_len) {
  std::vector<CWalk> out;
  std::vector<int> path;

  // Per-depth state-set buffer; a frame's slot stays valid while its
  // subtree only writes deeper slots.
  std::vector<std::uint64_t> sets((max_len + 1) * n.words, 0);
  sets[n.initial / 64] |= 1ull << (n.initial % 64);

  // Preorder emission over sorted adjacency = lexicographic step order.
  auto dfs = [&](auto&& self, int v, std::size_t depth) -> void {
    const std::uint64_t* states = sets.data() + depth * n.words;
    if (v == t && mask_accepting(n, states)) out.push_back({s, path});
    if (depth == max_len) return;
    std::uint64_t* next = sets.data() + (depth + 1) * n.words;
    auto [begin, end] = g.out[v];
    for (int e = begin; e < end; ++e) {
      const auto& edge = g.edges[e];
      if (!mask_step(n, states, edge.label, next)) continue;
      path.push_back(e);
      self(self, edge.tgt, depth + 1);
      path.pop_back();
    }
  };
  dfs(dfs, s, 0);
  return out;
}

std::vector<CWalk> trail_match_cwalks(const CompiledGraph& g, const CompiledNfa& n,
                                      int s, int t) {
  std::vector<CWalk> out;
  std::vector<int> path;
  std::vector<char> used(g.edges.size(), 0);

  std::vector<std::uint64_t> sets((g.edges.size() + 1) * n.words, 0);
  sets[n.initial / 64] |= 1ull << (n.initial % 64);

  auto dfs = [&](auto&& self, int v, std::size_t depth) -> void {
    const std::uint64_t* states = sets.data() + depth * n.words;
    if (v == t && mask_accepting(n, states)) out.push_back({s, path});
    std::uint64_t* next = sets.data() + (depth + 1) * n.words;
    auto [begin, end] = g.out[v];
    for (int e = begin; e < end; ++e) {
      if (used[e]) continue;
      const auto& edge = g.edges[e];
      if (!mask_step(n, states, edge.label, next)) continue;
      used[e] = 1;
      path.push_back(e);
      self(self, edge.tgt, depth + 1);
      path.pop_back();
      used[e] = 0;
    }
  };
  dfs(dfs, s, 0);
  return out;
}

std::vector<CWalk> shortest_match_cwalks(const CompiledGraph& g, const CompiledNfa& n,
                                         int s, int t) {
  auto backward = backward_product_dist(g, n, t);
  int best = backward[s][n.initial];
  if (best < 0) return {};

  // Walks of length `best` whose runs stay on distance-consistent states.
  std::vector<CWalk> out;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int v, int q, int depth) -> void {
    if (depth == best) {
      if (v == t && n.is_final[q]) out.push_back({s, path});
      return;
    }
    auto [begin, end] = g.out[v];
    for (int e = begin; e < end; ++e) {
      const auto& edge = g.edges[e];
      for (int q2 : n.targets(q, edge.label)) {
        if (backward[edge.tgt][q2] != best - depth - 1) continue;
        path.push_back(e);
        self(self, edge.tgt, q2, depth + 1);
        path.pop_back();
      }
    }
  };
  dfs(dfs, s, n.initial, 0);
  sort_unique(out);
  return out;
}

bool product_reachable(const CompiledGraph& g, const CompiledNfa& n, int s, int t) {
  auto reach = forward_product_reach(g, n, s);
  for (int q = 0; q < n.state_count; ++q)
    if (n.is_final[q] && reach[t][q]) return true;
  return false;
}

std::size_t useful_product_state_count(const CompiledGraph& g, const CompiledNfa& n,
                                       int s, int t) {
  auto forward = forward_product_dist(g, n, s);
  auto backward = backward_product_dist(g, n, t);
  std::size_t count = 0;
  for (std::size_t v = 0; v < g.vertex_names.size(); ++v)
    for (int q = 0; q < n.state_count; ++q)
      if (forward[v][q] >= 0 && backward[v][q] >= 0) ++count;
  return count;
}

std::optional<CWalk> find_dominating_match_bag(const CompiledGraph& g, const CompiledNfa& n,
                                               int s, int t, const CBag& capacity,
                                               std::size_t length_limit) {
  std::vector<int> remaining(g.edges.size(), 0);
  for (const auto& [edge, count] : capacity) remaining[edge] = count;

  std::vector<char> visited(g.vertex_names.size() * n.state_count, 0);
  std::vector<int> path;
  std::optional<CWalk> found;

  auto key = [&](int v, int q) { return static_cast<std::size_t>(v) * n.state_count + q; };
  auto dfs = [&](auto&& self, int v, int q) -> void {
    if (found) return;
    visited[key(v, q)] = 1;
    if (v == t && n.is_final[q] && path.size() < length_limit) {
      found = CWalk{s, path};
      visited[key(v, q)] = 0;
      return;
    }
    auto [begin, end] = g.out[v];
    for (int e = begin; e < end && !found; ++e) {
      if (remaining[e] == 0) continue;
      const auto& edge = g.edges[e];
      for (int q2 : n.targets(q, edge.label)) {
        if (visited[key(edge.tgt, q2)]) continue;
        --remaining[e];
        path.push_back(e);
        self(self, edge.tgt, q2);
        path.pop_back();
        ++remaining[e];
        if (found) break;
      }
    }
    visited[key(v, q)] = 0;
  };
  dfs(dfs, s, n.initial);
  return found;
}

std::optional<CWalk> find_dominating_match_set(const CompiledGraph& g, const CompiledNfa& n,
                                               int s, int t, const std::vector<int>& support,
                                               std::size_t set_size, std::size_t length_limit) {
  std::vector<char> allowed(g.edges.size(), 0);
  for (int e : support) allowed[e] = 1;

  std::vector<int> used(g.edges.size(), 0);
  std::size_t distinct = 0;
  std::vector<char> visited(g.vertex_names.size() * n.state_count, 0);
  std::vector<int> path;
  std::optional<CWalk> found;

  auto key = [&](int v, int q) { return static_cast<std::size_t>(v) * n.state_count + q; };
  auto dfs = [&](auto&& self, int v, int q) -> void {
    if (found) return;
    visited[key(v, q)] = 1;
    if (v == t && n.is_final[q] &&
        (distinct < set_size || (distinct == set_size && path.size() < length_limit))) {
      found = CWalk{s, path};
      visited[key(v, q)] = 0;
      return;
    }
    auto [begin, end] = g.out[v];
    for (int e = begin; e < end && !found; ++e) {
      if (!allowed[e]) continue;
      const auto& edge = g.edges[e];
      for (int q2 : n.targets(q, edge.label)) {
        if (visited[key(edge.tgt, q2)]) continue;
        if (used[e]++ == 0) ++distinct;
        path.push_back(e);
        self(self, edge.tgt, q2);
        path.pop_back();
        if (--used[e] == 0) --distinct;
        if (found) break;
      }
    }
    visited[key(v, q)] = 0;
  };
  dfs(dfs, s, n.initial);
  return found;
}

}  // namespace walkmin
