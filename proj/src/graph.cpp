#include "walkmin/graph.hpp"

#include <algorithm>
#include <sstream>

#include "walkmin/error.hpp"

namespace walkmin {

std::string color_name(Color c) {
  switch (c) {
    case Color::Red:
      return "red";
    case Color::Blue:
      return "blue";
    case Color::Green:
      return "green";
  }
  return "red";
}

Color color_from_name(const std::string& name) {
  if (name == "red") return Color::Red;
  if (name == "blue") return Color::Blue;
  if (name == "green") return Color::Green;
  throw Error("unknown color '" + name + "'");
}

Walk::Walk(std::string source, std::vector<Step> steps)
    : source_(std::move(source)), steps_(std::move(steps)) {}

const std::string& Walk::target() const {
  return steps_.empty() ? source_ : steps_.back().tgt;
}

std::vector<std::string> Walk::label_word() const {
  std::vector<std::string> word;
  word.reserve(steps_.size());
  for (const Step& s : steps_) word.push_back(s.label);
  return word;
}

std::vector<Edge> Walk::edges() const {
  std::vector<Edge> out;
  out.reserve(steps_.size());
  const std::string* at = &source_;
  for (const Step& s : steps_) {
    out.push_back({*at, s.label, s.tgt});
    at = &s.tgt;
  }
  return out;
}

nlohmann::json Walk::to_json() const {
  nlohmann::json steps = nlohmann::json::array();
  for (const Step& s : steps_) steps.push_back({{"label", s.label}, {"tgt", s.tgt}});
  return {{"source", source_}, {"steps", steps}};
}

Walk Walk::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("steps"))
    throw Error("walk document must have 'source' and 'steps'");
  std::vector<Step> steps;
  for (const auto& s : j.at("steps"))
    steps.push_back({s.at("label").get<std::string>(), s.at("tgt").get<std::string>()});
  return Walk(j.at("source").get<std::string>(), std::move(steps));
}

bool canonical_less(const Walk& a, const Walk& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.source() != b.source()) return a.source() < b.source();
  return a.steps() < b.steps();
}

Graph::Graph(std::vector<std::string> vertices, std::vector<std::string> labels,
             std::vector<Edge> edges, ColorMap colors) {
  for (auto& v : vertices)
    if (vertex_set_.insert(v).second) vertices_.push_back(std::move(v));
  for (auto& l : labels)
    if (label_set_.insert(l).second) labels_.push_back(std::move(l));
  for (const Edge& e : edges) {
    if (!vertex_set_.count(e.src))
      throw Error("edge source '" + e.src + "' is not a declared vertex");
    if (!vertex_set_.count(e.tgt))
      throw Error("edge target '" + e.tgt + "' is not a declared vertex");
    if (!label_set_.count(e.label))
      throw Error("edge label '" + e.label + "' is not a declared label");
  }
  edges_ = std::move(edges);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [label, color] : colors) {
    if (!label_set_.count(label))
      throw Error("color assigned to undeclared label '" + label + "'");
    (void)color;
  }
  colors_ = std::move(colors);
}

bool Graph::has_vertex(const std::string& v) const { return vertex_set_.count(v) > 0; }
bool Graph::has_label(const std::string& l) const { return label_set_.count(l) > 0; }

bool Graph::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

nlohmann::json Graph::to_json() const {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : edges_)
    edges.push_back({{"src", e.src}, {"label", e.label}, {"tgt", e.tgt}});
  nlohmann::json j = {{"vertices", vertices_}, {"labels", labels_}, {"edges", edges}};
  if (!colors_.empty()) {
    nlohmann::json colors = nlohmann::json::object();
    for (const auto& [label, color] : colors_) colors[label] = color_name(color);
    j["colors"] = colors;
  }
  return j;
}

Graph Graph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("labels") || !j.contains("edges"))
    throw Error("graph document must have 'vertices', 'labels' and 'edges'");
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at("src").get<std::string>(), e.at("label").get<std::string>(),
                     e.at("tgt").get<std::string>()});
  ColorMap colors;
  if (j.contains("colors"))
    for (const auto& [label, name] : j.at("colors").items())
      colors[label] = color_from_name(name.get<std::string>());
  return Graph(std::move(vertices), std::move(labels), std::move(edges), std::move(colors));
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string Graph::to_dot() const {
  std::ostringstream out;
  out << "digraph walkmin {\n";
  for (const std::string& v : vertices_) out << "  " << dot_quote(v) << ";\n";
  for (const Edge& e : edges_) {
    out << "  " << dot_quote(e.src) << " -> " << dot_quote(e.tgt)
        << " [label=" << dot_quote(e.label);
    auto it = colors_.find(e.label);
    if (it != colors_.end()) out << ", color=" << dot_quote(color_name(it->second));
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

bool validate_walk(const Graph& g, const Walk& w) {
  if (!g.has_vertex(w.source())) return false;
  for (const Edge& e : w.edges())
    if (!g.has_edge(e)) return false;
  return true;
}

Walk concat(const Walk& w1, const Walk& w2) {
  if (w1.target() != w2.source())
    throw Error("cannot concatenate: target '" + w1.target() + "' differs from source '" +
                w2.source() + "'");
  std::vector<Step> steps = w1.steps();
  steps.insert(steps.end(), w2.steps().begin(), w2.steps().end());
  return Walk(w1.source(), std::move(steps));
}

EdgeBag edge_bag(const Walk& w) {
  EdgeBag bag;
  for (const Edge& e : w.edges()) ++bag[e];
  return bag;
}

std::set<Edge> edge_set(const Walk& w) {
  std::set<Edge> s;
  for (const Edge& e : w.edges()) s.insert(e);
  return s;
}

EdgeBag red_edge_bag(const Walk& w, const ColorMap& colors) {
  EdgeBag bag;
  for (const Edge& e : w.edges()) {
    auto it = colors.find(e.label);
    if (it == colors.end()) throw Error("label '" + e.label + "' has no color assigned");
    if (it->second == Color::Red) ++bag[e];
  }
  return bag;
}

bool is_trail(const Walk& w) {
  for (const auto& [edge, count] : edge_bag(w))
    if (count > 1) return false;
  return true;
}

bool bag_subeq(const EdgeBag& a, const EdgeBag& b) {
  for (const auto& [edge, count] : a) {
    auto it = b.find(edge);
    if (it == b.end() || it->second < count) return false;
  }
  return true;
}

bool bag_lt(const Walk& w1, const Walk& w2) {
  if (w1.length() >= w2.length()) return false;  // strict inclusion shrinks the total
  return bag_subeq(edge_bag(w1), edge_bag(w2));
}

bool set_lt(const Walk& w1, const Walk& w2) {
  std::set<Edge> s1 = edge_set(w1);
  std::set<Edge> s2 = edge_set(w2);
  if (!std::includes(s2.begin(), s2.end(), s1.begin(), s1.end())) return false;
  if (s1.size() < s2.size()) return true;
  return w1.length() < w2.length();
}

}  // namespace walkmin
