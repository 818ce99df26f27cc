#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "sharptree/errors.hpp"
#include "sharptree/group_inverse.hpp"
#include "sharptree/matching.hpp"
#include "sharptree/signature.hpp"
#include "sharptree/spectral.hpp"
#include "sharptree/structure.hpp"
#include "sharptree/tree.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sharptree;

constexpr const char* kSchema = "sharptree/1";

enum Exit { ok = 0, input_error = 1, property_violation = 2, resource_limit = 3 };

struct Options {
  std::string format = "edges";
  bool all = false;
  bool search = false;
  double tol = kDefaultSpectralTolerance;
  EnumerationLimits limits;
};

struct Outcome {
  std::string out;
  std::string err;
  int code = ok;
};

struct Input {
  std::string digest;
  WeightedTree tree;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
  return hex.str();
}

Input load(const std::string& path) {
  const std::string text = read_file(path);
  return {"sha256:" + sha256_hex(text), parse_tree(text)};
}

json labels_of(const WeightedGraph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

json edge_list(const WeightedGraph& g) {
  json out = json::array();
  for (const auto& e : g.edges()) out.push_back({g.label(e.u), g.label(e.v), e.weight.str()});
  return out;
}

json exact_matrix(const ExactMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

json document(const Input& in, const char* command) {
  return {{"schema", kSchema}, {"command", command}, {"input_digest", in.digest}};
}

json tree_summary(const WeightedTree& t) {
  const ClassTProfile p = classify(t);
  const Bipartition parts = bipartition(t);
  json pendant_counts = json::array();
  for (std::size_t c : p.pendant_counts) pendant_counts.push_back(c);
  return {{"order", t.order()},
          {"vertices", t.labels()},
          {"edges", edge_list(t.graph())},
          {"rank", rank(adjacency_matrix(t))},
          {"singular", is_singular(t)},
          {"bipartition", {labels_of(t.graph(), parts.part_a), labels_of(t.graph(), parts.part_b)}},
          {"class_T",
           {{"is_member", p.is_member},
            {"non_pendant_vertices", labels_of(t.graph(), p.non_pendant_vertices)},
            {"pendant_counts", pendant_counts},
            {"is_star", p.is_star},
            {"is_corona", p.is_corona},
            {"is_caterpillar", p.is_caterpillar}}}};
}

json matching_summary(const WeightedTree& t, const MatchingSummary& s) {
  json matchings = json::array();
  for (const auto& m : s.all_max_matchings) {
    json edges = json::array();
    for (std::size_t e : m.edges) edges.push_back({t.label(t.edge(e).u), t.label(t.edge(e).v)});
    matchings.push_back({{"edges", edges}, {"weight_product", m.weight_product.str()}});
  }
  json census = json::object();
  for (Vertex v = 0; v < t.order(); ++v) census[t.label(v)] = s.alternating_census[v];
  json paths = json::array();
  for (const auto& p : alternating_paths(t, s)) paths.push_back({t.label(p.first), t.label(p.second), p.length});
  return {{"matching_number", s.matching_number},
          {"count", s.all_max_matchings.size()},
          {"m_value", s.m_value.str()},
          {"matchings", matchings},
          {"alternating_census", census},
          {"alternating_paths", paths}};
}

json structure_report(const WeightedTree& t, const MatchingSummary& s, const GroupInverseWitness& w) {
  const StructureReport r = analyze_structure(t, s, w);
  json degrees = json::object();
  for (Vertex v = 0; v < t.order(); ++v) degrees[t.label(v)] = r.degree_table[v];
  json cycle = nullptr;
  if (const auto c = four_cycle_witness(t, s, w.sharp_graph)) {
    cycle = labels_of(w.sharp_graph, {c->begin(), c->end()});
  }
  json out = {{"singular", r.singular},
              {"sharp_connected", r.sharp_connected},
              {"sharp_bipartite", r.sharp_bipartite},
              {"sharp_is_tree", r.sharp_is_tree},
              {"sharp_edge_count", r.sharp_edge_count},
              {"alternating_path_count", r.alternating_path_count},
              {"four_conditions",
               {{"alt_path_count_is_n_minus_1", r.four_conditions.alt_path_count_is_n_minus_1},
                {"sharp_is_tree", r.four_conditions.sharp_is_tree},
                {"is_star", r.four_conditions.is_star},
                {"sharp_isomorphic_underlying", r.four_conditions.sharp_isomorphic_underlying},
                {"agree", r.four_conditions.agree()}}},
              {"has_four_cycle", r.has_four_cycle},
              {"four_cycle", cycle},
              {"sharp_degrees", degrees}};
  if (classify(t).is_member) {
    json rows = json::array();
    for (const auto& row : degree_check_class_T(t, w.sharp_graph)) {
      rows.push_back({{"vertex", t.label(row.vertex)},
                      {"pendant_neighbours", row.pendant_neighbours},
                      {"sharp_degree", row.sharp_degree},
                      {"holds", row.holds()}});
    }
    out["degree_check"] = rows;
  }
  try {
    out["caterpillar_edge_count"] = caterpillar_edge_count(t);
  } catch (const NotApplicable&) {
  }
  try {
    const OddPathReport p = odd_path_report(t, w);
    out["odd_path"] = {{"half_length", p.half_length},
                       {"path_is_spanning_subtree", p.path_is_spanning_subtree},
                       {"parity_iff", p.parity_iff()},
                       {"no_pendant_vertex", p.no_pendant_vertex ? json(*p.no_pendant_vertex) : json(nullptr)},
                       {"min_sharp_degree", p.min_sharp_degree}};
  } catch (const NotOddPath&) {
  }
  return out;
}

json signature_report(const WeightedTree& t, const MatchingSummary& s, const ExactMatrix& sharp, bool search) {
  json out = {{"vertices", t.labels()}, {"class_T", classify(t).is_member}};
  try {
    const SignatureVector sig = build_signature_class_T(t, s);
    const ExactMatrix signed_sharp = apply_signature(sharp, sig);
    out["root"] = t.label(sig.root);
    out["n_values"] = sig.n_values;
    out["signs"] = sig.signs;
    out["signed_matrix"] = exact_matrix(signed_sharp);
    out["nonnegative"] = is_entrywise_nonnegative(signed_sharp);
  } catch (const NotInClassT& e) {
    out["not_in_class_T"] = e.detail();
  } catch (const NonPositiveWeights& e) {
    out["non_positive_weights"] = e.detail();
  }
  if (search) {
    const SignatureSearchResult r = exhaustive_signature_search(sharp);
    out["signature_exists"] = r.signs.has_value();
    out["search_signs"] = r.signs ? json(*r.signs) : json(nullptr);
    out["scanned"] = r.scanned;
  }
  return out;
}

json spectral_json(const SpectralReport& r) {
  return {{"eigenvalues_a", r.eigenvalues_a},
          {"eigenvalues_sharp", r.eigenvalues_sharp},
          {"tau", optional_number(r.tau)},
          {"rho_sharp", optional_number(r.rho_sharp)},
          {"tau_simple", r.tau_simple},
          {"tau_gap", r.tau_gap},
          {"eigenvector_tau", r.eigenvector_tau},
          {"min_abs_entry", optional_number(r.min_abs_entry)},
          {"reciprocity_residual", r.reciprocity_residual},
          {"tolerance", r.tolerance}};
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

std::string render_dot(const WeightedGraph& g) {
  std::string out = "graph sharp {\n";
  for (const auto& label : g.labels()) out += "  " + json(label).dump() + ";\n";
  for (const auto& e : g.edges()) {
    out += "  " + json(g.label(e.u)).dump() + " -- " + json(g.label(e.v)).dump() + " [label=\"" +
           e.weight.str() + "\"];\n";
  }
  return out + "}\n";
}

std::string cmd_sharp(const Input& in, const Options& opt) {
  const GroupInverseWitness w = sharp_combinatorial(in.tree, opt.limits);
  if (opt.format == "dot") return render_dot(w.sharp_graph);
  if (opt.format == "json") {
    json doc = document(in, "sharp");
    doc["vertices"] = in.tree.labels();
    doc["m_value"] = w.m_value.str();
    doc["sharp_edges"] = edge_list(w.sharp_graph);
    return render(doc);
  }
  return format_edge_list(w.sharp_graph);
}

Outcome cmd_verify(const Input& in, const Options& opt) {
  const WeightedTree& t = in.tree;
  const ExactMatrix a = adjacency_matrix(t);
  std::vector<std::pair<std::string, ExactMatrix>> results;
  results.emplace_back("combinatorial", sharp_combinatorial(t, opt.limits).sharp_matrix);
  results.emplace_back("factorization", sharp_factorization(a));
  results.emplace_back("bipartite_block", sharp_bipartite_block(t));
  if (is_star(t)) results.emplace_back("star_closed_form", sharp_star(t).sharp_matrix);

  std::ostringstream report;
  bool agree = true;
  const ExactMatrix& reference = results.front().second;
  for (std::size_t r = 1; r < results.size(); ++r) {
    for (std::size_t i = 0; i < t.order(); ++i) {
      for (std::size_t j = i; j < t.order(); ++j) {
        if (results[r].second(i, j) == reference(i, j)) continue;
        agree = false;
        report << "differ (" << t.label(i) << "," << t.label(j) << "): combinatorial=" << reference(i, j) << " "
               << results[r].first << "=" << results[r].second(i, j) << "\n";
      }
    }
  }
  const bool axioms = verify_axioms(a, reference);
  if (!axioms) report << "axioms fail for the combinatorial result\n";
  Outcome o;
  if (agree && axioms) {
    o.out = "ok: " + std::to_string(results.size()) + " methods agree; AXA=A, XAX=X, AX=XA hold\n";
  } else {
    o.out = report.str();
    o.code = property_violation;
  }
  return o;
}

std::string cmd_analyze(const Input& in, const Options& opt) {
  const MatchingSummary s = maximum_matchings(in.tree, opt.limits);
  const GroupInverseWitness w = sharp_combinatorial(in.tree, s);
  json doc = document(in, "analyze");
  if (!opt.all) {
    doc["structure_report"] = structure_report(in.tree, s, w);
    return render(doc);
  }
  doc["tree_summary"] = tree_summary(in.tree);
  doc["matching_summary"] = matching_summary(in.tree, s);
  doc["m_value"] = w.m_value.str();
  doc["sharp_edges"] = edge_list(w.sharp_graph);
  doc["structure_report"] = structure_report(in.tree, s, w);
  doc["signature_report"] = signature_report(in.tree, s, w.sharp_matrix, opt.search);
  doc["spectral_report"] = spectral_json(spectral_report(in.tree, w.sharp_matrix, opt.tol));
  return render(doc);
}

std::string cmd_matchings(const Input& in, const Options& opt) {
  json doc = document(in, "matchings");
  doc["matching_summary"] = matching_summary(in.tree, maximum_matchings(in.tree, opt.limits));
  return render(doc);
}

std::string cmd_signature(const Input& in, const Options& opt) {
  const MatchingSummary s = maximum_matchings(in.tree, opt.limits);
  json doc = document(in, "signature");
  doc["signature_report"] = signature_report(in.tree, s, sharp_combinatorial(in.tree, s).sharp_matrix, opt.search);
  return render(doc);
}

std::string cmd_spectral(const Input& in, const Options& opt) {
  const GroupInverseWitness w = sharp_combinatorial(in.tree, opt.limits);
  json doc = document(in, "spectral");
  doc["spectral_report"] = spectral_json(spectral_report(in.tree, w.sharp_matrix, opt.tol));
  return render(doc);
}

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::property:
      return property_violation;
    case ErrorCategory::resource:
      return resource_limit;
    case ErrorCategory::input:
    case ErrorCategory::usage:
      break;
  }
  return input_error;
}

Outcome run_one(const std::string& command, const std::string& path, const Options& opt) {
  Outcome o;
  try {
    const Input in = load(path);
    if (command == "sharp") {
      o.out = cmd_sharp(in, opt);
    } else if (command == "verify") {
      o = cmd_verify(in, opt);
    } else if (command == "analyze") {
      o.out = cmd_analyze(in, opt);
    } else if (command == "matchings") {
      o.out = cmd_matchings(in, opt);
    } else if (command == "signature") {
      o.out = cmd_signature(in, opt);
    } else {
      o.out = cmd_spectral(in, opt);
    }
  } catch (const Error& e) {
    o.err = "sharptree: " + path + ": " + e.what() + "\n";
    o.code = exit_code(e.category());
  }
  return o;
}

std::optional<std::size_t> parse_count(const char* text) {
  if (text == nullptr) return std::nullopt;
  const std::string_view s(text);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || value == 0) throw std::invalid_argument(text);
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group inverses of weighted trees"};
  app.require_subcommand(1);

  Options opt;
  std::size_t cap = 0;
  std::size_t jobs = 1;
  std::vector<std::string> files;
  app.add_option("--cap", cap, "Maximum number of maximum matchings to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--jobs,-j", jobs, "Process input files in parallel")->check(CLI::PositiveNumber);

  const auto add_files = [&](CLI::App* sub) { sub->add_option("files", files, "Edge-list files")->required(); };

  CLI::App* sharp = app.add_subcommand("sharp", "Print the group inverse graph");
  add_files(sharp);
  auto* fmt = sharp->add_option_group("format");
  fmt->add_flag_callback("--edges", [&] { opt.format = "edges"; }, "Edge list (default)");
  fmt->add_flag_callback("--json", [&] { opt.format = "json"; }, "JSON document");
  fmt->add_flag_callback("--dot", [&] { opt.format = "dot"; }, "Graphviz DOT");
  fmt->require_option(0, 1);

  add_files(app.add_subcommand("verify", "Check that every method gives the same exact group inverse"));

  CLI::App* analyze = app.add_subcommand("analyze", "Structure report, or the full document with --all");
  add_files(analyze);
  analyze->add_flag("--all", opt.all, "Emit every report");
  analyze->add_flag("--search", opt.search, "Include an exhaustive signature search");
  analyze->add_option("--tol", opt.tol, "Spectral tolerance");

  add_files(app.add_subcommand("matchings", "Enumerate maximum matchings"));

  CLI::App* signature = app.add_subcommand("signature", "Signature making the group inverse non-negative");
  add_files(signature);
  signature->add_flag("--search", opt.search, "Exhaustive search over sign vectors");

  CLI::App* spectral = app.add_subcommand("spectral", "Eigenvalues of A and its group inverse");
  add_files(spectral);
  spectral->add_option("--tol", opt.tol, "Spectral tolerance");

  try {
    app.parse(argc, argv);
    if (cap == 0) {
      if (const auto env = parse_count(std::getenv("SHARPTREE_MATCHING_CAP"))) cap = *env;
    }
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return input_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sharptree: invalid SHARPTREE_MATCHING_CAP: " << e.what() << "\n";
    return input_error;
  }
  if (cap != 0) opt.limits.max_matchings = cap;

  const std::string command = app.get_subcommands().front()->get_name();
  std::vector<Outcome> outcomes(files.size());
  for (std::size_t start = 0; start < files.size(); start += jobs) {
    std::vector<std::future<Outcome>> batch;
    for (std::size_t i = start; i < std::min(files.size(), start + jobs); ++i) {
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run_one, command,
                                 files[i], opt));
    }
    for (std::size_t k = 0; k < batch.size(); ++k) outcomes[start + k] = batch[k].get();
  }

  int code = ok;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (files.size() > 1) std::cout << "==> " << files[i] << " <==\n";
    std::cout << outcomes[i].out;
    std::cerr << outcomes[i].err;
    code = std::max(code, outcomes[i].code);
  }
  return code;
}
