#include "multiwheel/commands.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "multiwheel/bundle.hpp"
#include "multiwheel/coloring.hpp"
#include "multiwheel/families.hpp"
#include "multiwheel/isomorphism.hpp"
#include "multiwheel/minors.hpp"
#include "multiwheel/serialize.hpp"

namespace mw {

namespace {

struct Constructed {
  Graph graph;
  std::optional<SumConfiguration> configuration;
  std::optional<Embedding> embedding;
  std::string spec_string;
};

Constructed build_from_spec(const std::string& text) {
  FamilySpec spec = parse_family_spec(text);
  Constructed built;
  built.spec_string = family_spec_to_string(spec);
  if (const auto* w = std::get_if<MultiwheelSpec>(&spec)) {
    BuiltMultiwheel mw_built = plane_multiwheel(*w);
    built.graph = mw_built.graph;
    built.configuration = std::move(mw_built.configuration);
  } else if (const auto* q = std::get_if<int>(&spec)) {
    GrotzschClassGraph g = grotzsch_class(*q);
    built.graph = g.graph;
    built.embedding = std::move(g.embedding);
  } else {
    BuiltMultiwheel p = projective_multiwheel(std::get<ProjectiveSpec>(spec));
    built.graph = p.graph;
    built.configuration = std::move(p.configuration);
  }
  return built;
}

bool looks_like_spec(const std::string& text) {
  return text.rfind("w:", 0) == 0 || text.rfind("g:", 0) == 0 ||
         text.rfind("p:", 0) == 0;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  // json documents start with '{'; everything else is treated as graph6
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw std::invalid_argument(path + " is empty");
  if (text[first] == '{')
    return graph_from_json(nlohmann::json::parse(text));
  auto last = text.find_last_not_of(" \t\r\n");
  return from_graph6(text.substr(first, last - first + 1));
}

Constructed resolve_input(const std::string& input) {
  if (looks_like_spec(input)) return build_from_spec(input);
  Constructed built;
  built.graph = read_graph_file(input);
  return built;
}

class OutputStream {
 public:
  OutputStream(const std::string& path, std::ostream& fallback)
      : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot write to " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

// ---------------------------------------------------------------------------
// sweep rows

struct SweepRow {
  std::string spec;
  int n = 0, m = 0, chi = 0;
  bool critical = false, planar = false, bracket = false;
  std::optional<bool> quad;
  bool ok = false;
  std::string error;
};

SweepRow evaluate_row(const std::string& family, const std::string& spec) {
  SweepRow row;
  row.spec = spec;
  try {
    Constructed built = build_from_spec(spec);
    const Graph& g = built.graph;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    CriticalityReport report = certify_4_critical(g);
    row.chi = report.chromatic_number;
    row.critical = report.four_critical();
    row.planar = is_planar(g).planar;
    if (built.embedding)
      row.quad = certify_projective_quadrangulation(*built.embedding);
    row.bracket =
        minor_bracket(g, octahedron_minus().graph, octahedron());
    row.ok = row.chi == 4 && row.critical && row.bracket;
    if (family == "plane") row.ok = row.ok && row.planar;
    if (family == "grotzsch") row.ok = row.ok && row.quad.value_or(false);
  } catch (const std::exception& e) {
    row.error = e.what();
    row.ok = false;
  }
  return row;
}

std::vector<std::string> sweep_specs(const SweepOptions& options) {
  std::vector<std::string> specs;
  const int cap = options.cap;
  auto fits = [&](int n) { return options.allow_large || n <= cap; };
  if (options.family == "plane") {
    const int k = options.sections;
    if (k < 3 || k % 2 == 0)
      throw std::invalid_argument("plane sweep needs an odd section count >= 3");
    std::vector<int> orders(k, 1);
    for (;;) {
      int q = 0;
      for (int o : orders) q += o;
      if (fits(2 * q + 1)) {
        MultiwheelSpec spec;
        for (int o : orders) spec.sections.push_back({o, SectionType::RimRim});
        specs.push_back(spec.to_string());
      }
      int i = k - 1;
      while (i >= 0 && orders[i] == options.max_order) orders[i--] = 1;
      if (i < 0) break;
      ++orders[i];
    }
  } else if (options.family == "grotzsch") {
    for (int q = 1; q <= options.max_order; ++q)
      if (fits(2 * (2 * q + 1) + 1))
        specs.push_back("g:q=" + std::to_string(q));
  } else if (options.family == "projective") {
    const int k = 2 * options.central_order + 1;
    std::vector<int> orders(k, 1);
    for (;;) {
      int q = 0;
      for (int o : orders) q += o;
      if (fits(2 * q + 1)) {
        ProjectiveSpec spec{options.central_order, orders};
        specs.push_back(spec.to_string());
      }
      int i = k - 1;
      while (i >= 0 && orders[i] == options.max_order) orders[i--] = 1;
      if (i < 0) break;
      ++orders[i];
    }
  } else {
    throw std::invalid_argument("unknown family '" + options.family +
                                "' (plane, grotzsch, projective)");
  }
  return specs;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_table(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << std::left << std::setw(22) << "spec" << std::right << std::setw(4)
      << "n" << std::setw(4) << "m" << std::setw(5) << "chi" << std::setw(10)
      << "critical" << std::setw(8) << "planar" << std::setw(6) << "quad"
      << std::setw(9) << "bracket" << std::setw(5) << "ok" << "\n";
  for (const SweepRow& row : rows) {
    out << std::left << std::setw(22) << row.spec;
    if (!row.error.empty()) {
      out << "  error: " << row.error << "\n";
      continue;
    }
    out << std::right << std::setw(4) << row.n << std::setw(4) << row.m
        << std::setw(5) << row.chi << std::setw(10) << yesno(row.critical)
        << std::setw(8) << yesno(row.planar) << std::setw(6)
        << (row.quad ? yesno(*row.quad) : "-") << std::setw(9)
        << yesno(row.bracket) << std::setw(5) << (row.ok ? "" : "FLAG")
        << "\n";
  }
}

void print_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "spec,n,m,chi,critical,planar,quad,bracket,ok\n";
  for (const SweepRow& row : rows) {
    out << row.spec << ',' << row.n << ',' << row.m << ',' << row.chi << ','
        << yesno(row.critical) << ',' << yesno(row.planar) << ','
        << (row.quad ? yesno(*row.quad) : "") << ',' << yesno(row.bracket)
        << ',' << yesno(row.ok) << "\n";
  }
}

nlohmann::json rows_to_json(const std::vector<SweepRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const SweepRow& row : rows) {
    nlohmann::json j;
    j["spec"] = row.spec;
    if (!row.error.empty()) {
      j["error"] = row.error;
    } else {
      j["n"] = row.n;
      j["m"] = row.m;
      j["chi"] = row.chi;
      j["critical"] = row.critical;
      j["planar"] = row.planar;
      if (row.quad) j["quad"] = *row.quad;
      j["bracket"] = row.bracket;
      j["ok"] = row.ok;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

int cmd_construct(const ConstructOptions& options, std::ostream& out,
                  std::ostream& err) {
  try {
    Constructed built = build_from_spec(options.spec);
    OutputStream sink(options.out_path, out);
    if (options.format == "graph6") {
      sink.get() << to_graph6(built.graph) << "\n";
    } else if (options.format == "dot") {
      std::vector<Edge> ghosts;
      if (built.configuration)
        ghosts = replay(*built.configuration).annihilated_edges;
      sink.get() << to_dot(built.graph, ghosts);
    } else if (options.format == "json") {
      nlohmann::json j;
      j["spec"] = built.spec_string;
      j["graph"] = graph_to_json(built.graph);
      if (built.configuration) {
        SumReplay rep = replay(*built.configuration);
        auto constituents = nlohmann::json::array();
        for (std::size_t i = 0; i < built.configuration->constituents.size();
             ++i) {
          constituents.push_back(
              {{"graph", graph_to_json(built.configuration->constituents[i])},
               {"image", rep.vertex_images[i]},
               {"annihilated", rep.constituent_losses[i]}});
        }
        j["sum"] = {{"constituents", std::move(constituents)},
                    {"annihilated_pairs", rep.annihilated_pairs}};
      }
      if (options.with_embedding) {
        if (built.embedding) {
          j["embedding"] = built.embedding->faces;
        } else {
          PlanarityResult planarity = is_planar(built.graph);
          if (planarity.embedding) j["embedding"] = planarity.embedding->faces;
        }
      }
      sink.get() << j.dump(2) << "\n";
    } else {
      err << "unknown format '" << options.format << "'\n";
      return kExitInputError;
    }
    return kExitPass;
  } catch (const std::exception& e) {
    err << "construct: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    Constructed built = resolve_input(options.input);
    std::optional<Embedding> embedding = built.embedding;
    if (!options.embedding_path.empty()) {
      std::ifstream in(options.embedding_path);
      if (!in)
        throw std::invalid_argument("cannot open " + options.embedding_path);
      embedding = embedding_from_json(nlohmann::json::parse(in));
    }
    std::set<CheckKind> checks;
    if (options.checks.empty()) {
      // quad needs an embedding certificate; only request it by default
      // when one is available
      checks = {CheckKind::Color, CheckKind::Critical, CheckKind::Planar,
                CheckKind::Bracket};
      if (embedding) checks.insert(CheckKind::Quad);
    } else {
      for (const std::string& name : options.checks) {
        auto kind = check_from_name(name);
        if (!kind)
          throw std::invalid_argument("unknown check '" + name + "'");
        checks.insert(*kind);
      }
    }

    VerificationBundle bundle =
        make_bundle(built.graph, checks, embedding, built.spec_string);
    if (options.contraction_sweep) {
      auto contractions = nlohmann::json::array();
      for (const Edge& e : built.graph.edges()) {
        contractions.push_back(
            {{"edge", {e.u, e.v}},
             {"chromatic_after",
              chromatic_number(contract_edge(built.graph, e).graph)}});
      }
      bundle.document["contraction_sweep"] = std::move(contractions);
      bundle.document["bundle_hash"] = "";
      bundle.document["bundle_hash"] = bundle_hash(bundle.document);
    }
    OutputStream sink(options.out_path, out);
    sink.get() << bundle.document.dump(2) << "\n";
    return bundle.all_requested_hold ? kExitPass : kExitClaimFailed;
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_sweep(const SweepOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    if (options.cap > 25 && !options.allow_large)
      throw std::invalid_argument(
          "caps above 25 need --allow-large (exact search gets slow)");
    std::vector<std::string> specs = sweep_specs(options);
    std::vector<SweepRow> rows(specs.size());

    const int jobs =
        std::max(1, std::min<int>(options.jobs, static_cast<int>(specs.size())));
    if (jobs <= 1) {
      for (std::size_t i = 0; i < specs.size(); ++i)
        rows[i] = evaluate_row(options.family, specs[i]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&]() {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            rows[i] = evaluate_row(options.family, specs[i]);
          }
        });
      }
      for (std::thread& t : pool) t.join();
    }

    OutputStream sink(options.out_path, out);
    if (options.format == "table")
      print_table(sink.get(), rows);
    else if (options.format == "csv")
      print_csv(sink.get(), rows);
    else if (options.format == "json")
      sink.get() << rows_to_json(rows).dump(2) << "\n";
    else
      throw std::invalid_argument("unknown format '" + options.format + "'");

    for (const SweepRow& row : rows)
      if (!row.ok) return kExitClaimFailed;
    return kExitPass;
  } catch (const std::exception& e) {
    err << "sweep: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_embed_check(const EmbedCheckOptions& options, std::ostream& out,
                    std::ostream& err) {
  try {
    std::ifstream in(options.path);
    if (!in) throw std::invalid_argument("cannot open " + options.path);
    Embedding embedding = embedding_from_json(nlohmann::json::parse(in));
    EmbeddingSummary summary = validate_embedding(embedding);
    nlohmann::json j;
    j["euler_characteristic"] = summary.euler_characteristic;
    nlohmann::json histogram = nlohmann::json::object();
    for (auto [len, count] : summary.face_lengths)
      histogram[std::to_string(len)] = count;
    j["face_lengths"] = std::move(histogram);
    j["projective_quadrangulation"] =
        certify_projective_quadrangulation(embedding);
    out << j.dump(2) << "\n";
    return kExitPass;
  } catch (const certificate_error& e) {
    err << "embed: " << e.what() << "\n";
    return kExitClaimFailed;
  } catch (const std::exception& e) {
    err << "embed: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_minor(const MinorOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    Graph pattern;
    if (options.pattern == "O")
      pattern = octahedron();
    else if (options.pattern == "O-")
      pattern = octahedron_minus().graph;
    else if (options.pattern == "K4")
      pattern = complete_graph(4);
    else if (options.pattern == "K5")
      pattern = complete_graph(5);
    else if (options.pattern == "K33")
      pattern = complete_bipartite(3, 3);
    else
      pattern = read_graph_file(options.pattern);

    Constructed host = resolve_input(options.host_path);
    auto witness = has_minor(host.graph, pattern);
    nlohmann::json j;
    j["pattern"] = options.pattern;
    j["minor"] = witness.has_value();
    if (witness) j["branch_sets"] = witness->branch_sets;
    OutputStream sink(options.out_path, out);
    sink.get() << j.dump(2) << "\n";
    return witness ? kExitPass : kExitClaimFailed;
  } catch (const std::exception& e) {
    err << "minor: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace mw
