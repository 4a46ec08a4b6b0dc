#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "walkmin/engine.hpp"
#include "walkmin/error.hpp"
#include "walkmin/graph.hpp"
#include "walkmin/nfa.hpp"
#include "walkmin/reduction.hpp"
#include "walkmin/regex.hpp"
#include "walkmin/semantics.hpp"
#include "walkmin/verify.hpp"

namespace {

using namespace walkmin;

constexpr std::size_t kDefaultCap = 20000;

std::size_t configured_cap() {
  if (const char* env = std::getenv("WALKMIN_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw Error("WALKMIN_CAP is not a number");
    }
  }
  return kDefaultCap;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const std::string& path) {
  try {
    return Graph::from_json(nlohmann::json::parse(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid graph file '" + path + "': " + e.what());
  }
}

Walk load_walk(const std::string& path) {
  try {
    return Walk::from_json(nlohmann::json::parse(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid walk file '" + path + "': " + e.what());
  }
}

void enforce_cap(const Graph& g, const RegExp& r, bool force) {
  if (force) return;
  std::size_t cap = configured_cap();
  std::size_t size = product_size(g, r);
  if (size > cap)
    throw CapExceededError("product size " + std::to_string(size) + " exceeds cap " +
                           std::to_string(cap) + " (use --force or WALKMIN_CAP)");
}

std::string render_walk_text(const Walk& w) {
  std::string out = w.source();
  for (const Step& s : w.steps()) out += " -" + s.label + "-> " + s.tgt;
  return out;
}

// One digraph over the edges the output walks use.
std::string render_walks_dot(const Graph& g, const std::vector<Walk>& walks) {
  std::set<Edge> used;
  std::set<std::string> vertices;
  for (const Walk& w : walks) {
    vertices.insert(w.source());
    for (const Edge& e : w.edges()) {
      used.insert(e);
      vertices.insert(e.src);
      vertices.insert(e.tgt);
    }
  }
  std::vector<Edge> edges(used.begin(), used.end());
  Graph sub(std::vector<std::string>(vertices.begin(), vertices.end()),
            g.labels(), std::move(edges), g.colors());
  return sub.to_dot();
}

void emit_walks(std::ostream& out, const Graph& g, const std::vector<Walk>& walks,
                const std::string& format) {
  if (format == "json") {
    for (const Walk& w : walks) out << w.to_json().dump() << "\n";
  } else if (format == "text") {
    for (const Walk& w : walks) out << render_walk_text(w) << "\n";
  } else if (format == "dot") {
    out << render_walks_dot(g, walks);
  } else {
    throw Error("unknown format '" + format + "'");
  }
}

int cmd_enum(const std::string& graph_path, const std::string& regex_text,
             const std::string& source, const std::string& target,
             const std::string& semantics, std::optional<std::size_t> max_len,
             const std::string& format, bool force) {
  Graph g = load_graph(graph_path);
  RegExp r = parse(regex_text);
  if (!g.has_vertex(source)) throw UnknownVertexError("unknown vertex '" + source + "'");
  if (!g.has_vertex(target)) throw UnknownVertexError("unknown vertex '" + target + "'");
  enforce_cap(g, r, force);

  std::vector<Walk> walks;
  if (semantics == "match") {
    if (!max_len) throw Error("--max-len is required for match semantics");
    walks = match_set(g, r, source, target, *max_len);
  } else if (semantics == "trail") {
    walks = trail_set(g, r, source, target);
  } else if (semantics == "shortest") {
    walks = shortest_set(g, r, source, target);
  } else if (semantics == "mm") {
    walks = mm_set(g, r, source, target);
  } else if (semantics == "sms") {
    walks = sms_set(g, r, source, target);
  } else {
    throw Error("unknown semantics '" + semantics + "'");
  }
  emit_walks(std::cout, g, walks, format);
  return 0;
}

int cmd_member(const std::string& graph_path, const std::string& regex_text,
               const std::string& walk_path, const std::string& semantics, bool force) {
  Graph g = load_graph(graph_path);
  RegExp r = parse(regex_text);
  Walk w = load_walk(walk_path);
  enforce_cap(g, r, force);

  MembershipResult result;
  if (semantics == "mm") {
    result = mm_membership_check(g, r, w);
  } else if (semantics == "sms") {
    result = sms_membership_check(g, r, w);
  } else {
    throw Error("unknown semantics '" + semantics + "' (expected mm or sms)");
  }
  if (result.member) {
    std::cout << "member\n";
    return 0;
  }
  std::cout << "non-member\n";
  if (result.certificate)
    std::cout << "certificate: " << result.certificate->to_json().dump() << "\n";
  else
    std::cout << "certificate: none (walk does not match the expression)\n";
  return 1;
}

int cmd_reduce(const std::string& cnf_path, const std::string& variant,
               const std::string& out_dir) {
  SatInstance inst = parse_dimacs(read_file(cnf_path));
  ReductionInstance ri;
  if (variant == "enum") {
    ri = build_enum_instance(inst);
  } else if (variant == "membership") {
    ri = build_membership_instance(inst);
  } else if (variant == "sms") {
    ri = build_sms_instance(inst);
  } else {
    throw Error("unknown variant '" + variant + "'");
  }

  std::filesystem::create_directories(out_dir);
  std::ofstream graph_out(out_dir + "/graph.json");
  graph_out << ri.graph.to_json().dump(2) << "\n";
  std::ofstream manifest_out(out_dir + "/manifest.json");
  manifest_out << ri.manifest().dump(2) << "\n";
  if (!graph_out || !manifest_out) throw Error("cannot write to '" + out_dir + "'");

  std::cout << "k=" << ri.k() << " l=" << ri.l() << " V=" << ri.graph.vertices().size()
            << " E=" << ri.graph.edges().size() << "\n";
  return 0;
}

int cmd_verify(const std::string& cnf_path, const std::string& checks,
               const std::string& format, bool force, bool with_delay_profile,
               std::optional<int> sample, int sample_k, int sample_l, std::uint64_t seed) {
  CheckOptions options;
  options.force = force;
  if (!checks.empty()) {
    std::stringstream ss(checks);
    std::string name;
    while (std::getline(ss, name, ',')) options.only.push_back(name);
  }

  std::vector<SatInstance> instances;
  if (sample) {
    InstanceSampler sampler(seed);
    for (int i = 0; i < *sample; ++i) instances.push_back(sampler.sample(sample_k, sample_l));
  } else {
    if (cnf_path.empty()) throw Error("a CNF path or --sample is required");
    instances.push_back(parse_dimacs(read_file(cnf_path)));
  }

  bool all_ok = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const SatInstance& inst : instances) {
    VerificationReport report = check_all(inst, options);
    all_ok = all_ok && report.all_passed();
    nlohmann::json j = report.to_json();
    if (sample) j["seed"] = seed;
    if (with_delay_profile) j["delay_profile"] = delay_profile(inst).to_json();
    if (format == "text") {
      std::cout << report.to_text();
      if (with_delay_profile) std::cout << "delay profile: " << j["delay_profile"].dump() << "\n";
    } else {
      reports.push_back(j);
    }
  }
  if (format != "text")
    std::cout << (reports.size() == 1 ? reports[0].dump(2) : reports.dump(2)) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_export_dot(const std::string& graph_path, const std::string& out_path) {
  Graph g = load_graph(graph_path);
  if (out_path.empty()) {
    std::cout << g.to_dot();
  } else {
    std::ofstream out(out_path);
    out << g.to_dot();
    if (!out) throw Error("cannot write to '" + out_path + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walk enumeration under minimal-multiset and minimal-set semantics"};
  app.require_subcommand(1);

  std::string graph_path, regex_text, source, target, semantics = "mm";
  std::string format = "json", walk_path, cnf_path, variant = "enum", out = "";
  std::string checks;
  std::optional<std::size_t> max_len;
  bool force = false, with_delay_profile = false;
  std::optional<int> sample;
  int sample_k = 3, sample_l = 2;
  std::uint64_t seed = 1;

  CLI::App* enum_cmd = app.add_subcommand("enum", "Enumerate matching walks");
  enum_cmd->add_option("--graph", graph_path, "Graph JSON file")->required();
  enum_cmd->add_option("--regex", regex_text, "Query expression")->required();
  enum_cmd->add_option("--source", source, "Source vertex")->required();
  enum_cmd->add_option("--target", target, "Target vertex")->required();
  enum_cmd->add_option("--semantics", semantics, "match|trail|shortest|mm|sms");
  enum_cmd->add_option("--max-len", max_len, "Length bound (match semantics)");
  enum_cmd->add_option("--format", format, "json|text|dot");
  enum_cmd->add_flag("--force", force, "Ignore the product size cap");

  CLI::App* member_cmd = app.add_subcommand("member", "Decide walk membership");
  member_cmd->add_option("--graph", graph_path, "Graph JSON file")->required();
  member_cmd->add_option("--regex", regex_text, "Query expression")->required();
  member_cmd->add_option("--walk", walk_path, "Walk JSON file")->required();
  member_cmd->add_option("--semantics", semantics, "mm|sms");
  member_cmd->add_flag("--force", force, "Ignore the product size cap");

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Compile a 3-CNF formula to a gadget graph");
  reduce_cmd->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  reduce_cmd->add_option("--variant", variant, "enum|membership|sms");
  reduce_cmd->add_option("--out", out, "Output directory")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the claim checks on an instance");
  verify_cmd->add_option("cnf", cnf_path, "DIMACS CNF file");
  verify_cmd->add_option("--checks", checks, "Comma-separated check names");
  verify_cmd->add_option("--format", format, "json|text");
  verify_cmd->add_flag("--force", force, "Ignore the k,l size cap");
  verify_cmd->add_flag("--delay-profile", with_delay_profile, "Append the enumeration delay profile");
  verify_cmd->add_option("--sample", sample, "Verify N seeded random instances instead of a file");
  verify_cmd->add_option("--vars", sample_k, "Variables per sampled instance");
  verify_cmd->add_option("--clauses", sample_l, "Clauses per sampled instance");
  verify_cmd->add_option("--seed", seed, "Sampler seed");

  CLI::App* export_cmd = app.add_subcommand("export-dot", "Write a graph as DOT");
  export_cmd->add_option("--graph", graph_path, "Graph JSON file")->required();
  export_cmd->add_option("--out", out, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (enum_cmd->parsed())
      return cmd_enum(graph_path, regex_text, source, target, semantics, max_len, format, force);
    if (member_cmd->parsed())
      return cmd_member(graph_path, regex_text, walk_path, semantics, force);
    if (reduce_cmd->parsed()) return cmd_reduce(cnf_path, variant, out);
    if (verify_cmd->parsed())
      return cmd_verify(cnf_path, checks, format, force, with_delay_profile, sample, sample_k,
                        sample_l, seed);
    if (export_cmd->parsed()) return cmd_export_dot(graph_path, out);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
