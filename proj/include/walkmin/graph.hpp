#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace walkmin {

enum class Color { Red, Blue, Green };

// Label -> color assignment. Optional on graphs; required by red_edge_bag.
using ColorMap = std::map<std::string, Color>;

std::string color_name(Color c);
Color color_from_name(const std::string& name);

struct Edge {
  std::string src;
  std::string label;
  std::string tgt;

  auto operator<=>(const Edge&) const = default;
};

struct Step {
  std::string label;
  std::string tgt;

  auto operator<=>(const Step&) const = default;
};

// Alternating vertex/label sequence. A length-0 walk is a single vertex.
class Walk {
 public:
  explicit Walk(std::string source, std::vector<Step> steps = {});

  const std::string& source() const { return source_; }
  const std::vector<Step>& steps() const { return steps_; }
  const std::string& target() const;
  std::size_t length() const { return steps_.size(); }

  std::vector<std::string> label_word() const;
  std::vector<Edge> edges() const;  // one per step, in order

  nlohmann::json to_json() const;
  static Walk from_json(const nlohmann::json& j);

  auto operator<=>(const Walk&) const = default;

 private:
  std::string source_;
  std::vector<Step> steps_;
};

// Ordering used for deterministic output: length first, then source,
// then the step encoding.
bool canonical_less(const Walk& a, const Walk& b);

// Directed graph labeled over string tokens. Edges form a set: duplicate
// triples collapse. Every edge endpoint and label must be declared.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, std::vector<std::string> labels,
        std::vector<Edge> edges, ColorMap colors = {});

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }  // sorted
  const ColorMap& colors() const { return colors_; }

  bool has_vertex(const std::string& v) const;
  bool has_label(const std::string& l) const;
  bool has_edge(const Edge& e) const;

  nlohmann::json to_json() const;
  static Graph from_json(const nlohmann::json& j);
  std::string to_dot() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::set<std::string> vertex_set_;
  std::set<std::string> label_set_;
  ColorMap colors_;
};

using EdgeBag = std::map<Edge, int>;

// True iff every step of w is an edge of g (unknown vertices included).
bool validate_walk(const Graph& g, const Walk& w);

// Throws Error unless target(w1) == source(w2).
Walk concat(const Walk& w1, const Walk& w2);

EdgeBag edge_bag(const Walk& w);
std::set<Edge> edge_set(const Walk& w);

// Multiset of the red edges of w. Throws Error when a label has no color.
EdgeBag red_edge_bag(const Walk& w, const ColorMap& colors);

bool is_trail(const Walk& w);

// Pointwise bag comparison helpers.
bool bag_subeq(const EdgeBag& a, const EdgeBag& b);  // a(e) <= b(e) for all e

// Strict multiset order: EdgeBag(w1) strictly included in EdgeBag(w2).
bool bag_lt(const Walk& w1, const Walk& w2);

// Set-then-length order: EdgeSet(w1) strictly included in EdgeSet(w2), or
// equal sets with len(w1) < len(w2).
bool set_lt(const Walk& w1, const Walk& w2);

}  // namespace walkmin
