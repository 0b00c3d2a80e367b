// permuton: command-line front end for the exact permutation-representation engine.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "permuton/permuton.hpp"

using namespace permuton;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedGroup {
  std::string name;
  GroupDefinition definition;
  PermGroup group;
};

LoadedGroup load_group(const std::string& spec) {
  if (spec.empty()) throw InputError("--group is required");
  if (auto model = find_model(spec)) {
    auto def = model->definition();
    return {spec, def, closure(def)};
  }
  std::string text;
  try {
    text = read_file(spec);
  } catch (const InputError&) {
    throw InputError("'" + spec + "' is neither a built-in model nor a readable file");
  }
  auto def = parse_group_definition(text);
  return {spec, def, closure(def)};
}

CharacterTable load_table(const PermGroup& g, const std::string& table_path) {
  if (table_path.empty()) return character_table(g);
  return parse_character_table(read_file(table_path), g);
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

struct Options {
  std::string group;
  std::string subspace = "full";
  std::string m, n;
  std::uint64_t bound = 1;
  std::string table;
  std::string json_path;
  bool approx = false;
  bool positive = false;
  bool timing = false;
};

struct Outcome {
  Json results;
  std::string text;
  bool verified = true;
};

// ---------------------------------------------------------------------------

Outcome cmd_group_info(const Options& opt) {
  auto loaded = load_group(opt.group);
  const PermGroup& g = loaded.group;
  Outcome out;
  std::ostringstream txt;
  out.results["degree"] = g.degree();
  out.results["order"] = g.order();
  std::vector<std::size_t> sizes;
  Json classes = Json::array();
  for (const auto& c : g.conjugacy_classes()) {
    sizes.push_back(c.size());
    classes.push_back({{"representative", c.representative.to_string()},
                       {"size", c.size()},
                       {"element_order", c.element_order}});
  }
  out.results["class_sizes"] = sizes;
  out.results["classes"] = classes;
  Json gens = Json::array();
  for (const auto& p : g.generators())
    gens.push_back({{"generator", p.to_string()}, {"order", p.order()}});
  out.results["generators"] = gens;

  auto action = GroupAction::natural(g);
  out.results["transitive"] = action.is_transitive();
  txt << "degree: " << g.degree() << "\norder: " << g.order() << "\nclass sizes: [" << join(sizes)
      << "]\n";
  for (const auto& p : g.generators()) txt << "generator " << p.to_string() << " of order " << p.order() << "\n";
  if (action.is_transitive()) {
    auto systems = blocks(action);
    Json sys = Json::array();
    for (const auto& b : systems) sys.push_back(to_json(b));
    out.results["primitive"] = systems.empty();
    out.results["block_systems"] = sys;
    txt << "transitive: yes\nprimitive: " << (systems.empty() ? "yes" : "no") << "\n";
    for (const auto& b : systems) txt << "block system: " << b.to_string() << "\n";
  } else {
    Json orbits = Json::array();
    for (const auto& o : action.orbits()) orbits.push_back(o);
    out.results["orbits"] = orbits;
    txt << "transitive: no (" << action.orbits().size() << " orbits)\n";
  }
  out.text = txt.str();
  return out;
}

Outcome cmd_decompose(const Options& opt) {
  auto loaded = load_group(opt.group);
  const PermGroup& g = loaded.group;
  CharacterTable t = load_table(g, opt.table);
  auto action = GroupAction::natural(g);
  auto mult = multiplicities(action, t);
  Outcome out;
  out.results["table"] = to_json(t);
  out.results["multiplicities"] = mult;
  out.results["decomposition"] = decomposition_string(mult, t);
  Json traces = Json::object();
  std::ostringstream txt;
  txt << to_text(t) << "multiplicities: (" << join(mult) << ")\n";
  std::size_t total = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!mult[i]) continue;
    std::size_t rank = isotypic_projector(action, t, i).rank();
    total += rank;
    traces[t.labels[i]] = rank;
    txt << "projector " << t.labels[i] << ": trace " << rank << "\n";
    if (rank != mult[i] * t.dims[i]) out.verified = false;
  }
  if (total != g.degree()) out.verified = false;
  if (t.labels.size() == 5 && g.order() == 60)
    out.results["convention"] = "3 takes the value (1+sqrt 5)/2 on the class of the first order-5 generator";
  out.results["projector_traces"] = traces;
  txt << "decomposition: " << decomposition_string(mult, t) << "\n";
  out.text = txt.str();
  return out;
}

// Closed-form tag matching a subspace tag for this action, if one applies.
std::optional<std::string> closed_form_tag(const std::string& tag, const GroupAction& action) {
  const std::string n = std::to_string(action.degree());
  if (action.is_transitive()) {
    if (tag == "trivial" || tag == "trivial-" + n) return "trivial-" + n;
    if (tag == "standard" || tag == "standard-" + n) return "standard-" + n;
  }
  if (action.degree() != 12) return std::nullopt;
  for (const auto& gen : action.generator_images())
    if (!IcosahedronGeometry::standard().preserved_by(gen)) return std::nullopt;
  static const std::map<std::string, std::string> aliases{
      {"irr3", "irr3"}, {"3", "irr3"},           {"irr3prime", "irr3prime"}, {"3'", "irr3prime"},
      {"irr5", "irr5"}, {"5", "irr5"},           {"irr3plus3prime", "irr3plus3prime"},
      {"3+3'", "irr3plus3prime"}, {"3'+3", "irr3plus3prime"}};
  if (auto it = aliases.find(tag); it != aliases.end()) return it->second;
  return std::nullopt;
}

Outcome cmd_born(const Options& opt) {
  auto loaded = load_group(opt.group);
  const PermGroup& g = loaded.group;
  if (opt.m.empty() || opt.n.empty()) throw InputError("born needs --m and --n");
  NaturalVector m = parse_natural_vector(opt.m), n = parse_natural_vector(opt.n);
  if (m.size() != g.degree() || n.size() != g.degree())
    throw InputError("vectors must have length " + std::to_string(g.degree()));
  auto action = GroupAction::natural(g);
  Outcome out;
  std::ostringstream txt;
  BornResult r;
  if (opt.subspace == "full") {
    r = born_full(m, n);
  } else {
    CharacterTable t = load_table(g, opt.table);
    r = born_subspace(m, n, subspace_projector(opt.subspace, action, t));
  }
  out.results["subspace"] = opt.subspace;
  out.results["m"] = to_json(m);
  out.results["n"] = to_json(n);
  out.results["born"] = to_json(r, opt.approx);
  txt << "subspace: " << opt.subspace << "\namplitude: " << to_string(r.amplitude)
      << "\nprobability: " << to_string(r.probability) << "\nrational: " << (r.is_rational ? "yes" : "no")
      << "\n";
  if (opt.approx) txt << "approximate probability (not authoritative): " << approx_text(r.probability) << "\n";

  if (auto tag = closed_form_tag(opt.subspace, action)) {
    Cyclotomic amp = closed_form_inner(*tag, m, n);
    Cyclotomic prob = amp * conj(amp) / (closed_form_inner(*tag, m, m) * closed_form_inner(*tag, n, n));
    bool agree = amp == r.amplitude && prob == r.probability;
    out.results["closed_form"] = {{"tag", *tag}, {"amplitude", to_string(amp)}, {"agrees", agree}};
    txt << "closed form " << *tag << ": " << (agree ? "agrees" : "DISAGREES") << "\n";
    if (!agree) out.verified = false;
  }
  out.text = txt.str();
  return out;
}

Outcome cmd_interference(const Options& opt) {
  auto loaded = load_group(opt.group);
  const PermGroup& g = loaded.group;
  auto action = GroupAction::natural(g);
  IsotypicProjector p = opt.subspace == "full"
                            ? full_space_projector(action)
                            : subspace_projector(opt.subspace, action, load_table(g, opt.table));
  InterferenceOptions io;
  io.bound = opt.bound;
  io.positive_only = opt.positive;
  auto result = find_interference(p, io);
  Outcome out;
  out.results["subspace"] = opt.subspace;
  out.results["bound"] = opt.bound;
  out.results["positive_only"] = opt.positive;
  out.results["interference"] = to_json(result);
  std::ostringstream txt;
  txt << "subspace: " << opt.subspace << "\nbound: " << opt.bound << (opt.positive ? " (positive components)" : "")
      << "\nsolutions: " << result.pairs.size() << "\norbits: " << result.orbit_count << "\n";
  for (const auto& [a, b] : result.pairs) txt << "(" << a.to_string() << ") (" << b.to_string() << ")\n";
  out.text = txt.str();
  return out;
}

Outcome cmd_demo(const Options& opt) {
  CheckOptions co;
  if (!opt.table.empty()) {
    PermGroup s3 = model_group("s3-natural");
    co.s3_table_override = parse_character_table(read_file(opt.table), s3, false).rows;
  }
  Outcome out;
  std::ostringstream txt;
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& r : run_all_checks(co)) {
    list.push_back(to_json(r));
    txt << (r.passed ? "PASS  " : "FAIL  ") << r.key << "  " << r.detail << "\n";
    if (r.passed)
      ++passed;
    else
      out.verified = false;
  }
  out.results["checks"] = list;
  out.results["passed"] = passed;
  out.results["total"] = list.size();
  txt << passed << "/" << list.size() << " checks passed\n";
  out.text = txt.str();
  return out;
}

Outcome cmd_geometry(const Options&) {
  const auto& geo = IcosahedronGeometry::standard();
  Outcome out;
  auto problems = geo.validate();
  out.results["geometry"] = to_json(geo);
  out.results["valid"] = problems.empty();
  std::ostringstream txt;
  for (std::size_t k = 1; k <= IcosahedronGeometry::kVertices; ++k) {
    const auto& nb = geo.neighborhood(k);
    txt << k << ": complement " << IcosahedronGeometry::complement(k) << ", neighbours "
        << join(std::vector<std::size_t>(nb.begin(), nb.end()), ",") << "\n";
  }
  for (const auto& p : problems) txt << "problem: " << p << "\n";
  out.verified = problems.empty();
  out.text = txt.str();
  return out;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::consistency:
    case ErrorKind::verification:
      return kExitVerification;
    default:
      return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite quantum mechanics over permutation representations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("permuton ") + kVersion);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", opt.json_path, "Write a JSON report to this path");
    sub->add_flag("--timing", opt.timing, "Include elapsed time in the report");
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", opt.group, "Group definition file or built-in model name")->required();
  };

  auto* group_info = app.add_subcommand("group-info", "Order, classes, generators and block systems");
  add_group(group_info);
  add_common(group_info);

  auto* decompose = app.add_subcommand("decompose", "Decompose the natural permutation representation");
  add_group(decompose);
  decompose->add_option("--table", opt.table, "Character table file");
  add_common(decompose);

  auto* born = app.add_subcommand("born", "Born probability of n against m in a subspace");
  add_group(born);
  born->add_option("--subspace", opt.subspace, "full, trivial, standard, a label, or label+label");
  born->add_option("--m", opt.m, "Apparatus vector, e.g. 1,3,2")->required();
  born->add_option("--n", opt.n, "State vector, e.g. 1,1,2")->required();
  born->add_option("--table", opt.table, "Character table file");
  born->add_flag("--approx", opt.approx, "Add decimal hints (not authoritative)");
  add_common(born);

  auto* interference = app.add_subcommand("interference", "Search for destructive interference");
  add_group(interference);
  interference->add_option("--subspace", opt.subspace, "Subspace tag");
  interference->add_option("--bound", opt.bound, "Largest component value");
  interference->add_option("--table", opt.table, "Character table file");
  interference->add_flag("--positive", opt.positive, "Only vectors with all components positive");
  add_common(interference);

  auto* demo = app.add_subcommand("demo", "Reproduce the S3 and A5 worked examples");
  demo->add_option("--table", opt.table, "Replacement S3 character table (negative control)");
  add_common(demo);

  auto* geometry = app.add_subcommand("geometry", "Icosahedron vertex data");
  add_common(geometry);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (sub == group_info) outcome = cmd_group_info(opt);
    else if (sub == decompose) outcome = cmd_decompose(opt);
    else if (sub == born) outcome = cmd_born(opt);
    else if (sub == interference) outcome = cmd_interference(opt);
    else if (sub == demo) outcome = cmd_demo(opt);
    else outcome = cmd_geometry(opt);
  } catch (const Error& e) {
    std::cerr << "permuton: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const InputError& e) {
    std::cerr << "permuton: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "permuton: " << e.what() << "\n";
    return kExitInput;
  }

  std::cout << outcome.text;
  if (!opt.json_path.empty()) {
    Json report;
    report["version"] = kVersion;
    Json echo;
    echo["command"] = command;
    if (!opt.group.empty()) echo["group"] = opt.group;
    if (sub == born || sub == interference) echo["subspace"] = opt.subspace;
    if (sub == born) {
      echo["m"] = opt.m;
      echo["n"] = opt.n;
    }
    if (sub == interference) {
      echo["bound"] = opt.bound;
      echo["positive"] = opt.positive;
    }
    if (!opt.table.empty()) echo["table"] = opt.table;
    report["input"] = echo;
    report["verified"] = outcome.verified;
    report["results"] = outcome.results;
    if (opt.timing)
      report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    std::ofstream out(opt.json_path, std::ios::binary);
    if (!out) {
      std::cerr << "permuton: cannot write " << opt.json_path << "\n";
      return kExitInput;
    }
    out << render(report);
  }
  if (!outcome.verified) {
    std::cerr << "permuton: verification failed\n";
    return kExitVerification;
  }
  return kExitOk;
}
