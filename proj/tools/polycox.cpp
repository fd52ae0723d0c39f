// polycox: command-line front end.
//
//   polycox complete INPUT [--order deglex:t,s,a] [--budget-rules N]
//   polycox reduce PRESENTATION PART
//   polycox garside MATRIX [--stage raw|completed|reduced]
//   polycox artin MATRIX
//   polycox coxeter MATRIX
//
// Matrices may be given as a JSON file or with --type (e.g. --type A3).
// Exit codes: 0 success, 2 parse error, 3 precondition failure, 4 budget.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "polycox/error.hpp"
#include "polycox/garside.hpp"
#include "polycox/io.hpp"

using namespace polycox;

namespace {

struct JobConfig {
  std::string command;
  std::string input;
  std::string part;
  std::string type;
  std::string out;
  std::string order = "deglex";
  std::string stage = "reduced";
  std::size_t budget_rules = 10000;
  std::size_t budget_branchings = 100000;
  std::size_t budget_cosets = 1000000;
  int verbosity = 0;
};

void emit(const JobConfig& cfg, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InputError("cannot write '" + cfg.out + "'");
  f << text;
}

void note(const JobConfig& cfg, const std::string& line) {
  if (cfg.verbosity >= 0) std::cerr << line << "\n";
}

CoxeterMatrix load_matrix(const JobConfig& cfg) {
  if (!cfg.type.empty()) return coxeter_matrix(cfg.type);
  if (cfg.input.empty()) throw InputError("give a matrix file or --type");
  return coxeter_from_json(read_json_file(cfg.input));
}

CoxeterGroup load_group(const JobConfig& cfg) {
  CoxeterMatrix m = load_matrix(cfg);
  auto g = CoxeterGroup::enumerate(m, cfg.budget_cosets);
  if (!g)
    throw BudgetError("Coxeter group is infinite or exceeds " + std::to_string(cfg.budget_cosets) +
                      " cosets");
  return std::move(*g);
}

Json element_meta(const CoxeterGroup& g) {
  Json meta = Json::object();
  for (int u = 1; u < static_cast<int>(g.size()); ++u) {
    std::string word;
    for (int s : g.canonical_word(u)) word += (word.empty() ? "" : ".") + g.matrix().names[s];
    meta[g.name(u)] = word;
  }
  return meta;
}

int run_complete(const JobConfig& cfg) {
  Polygraph2 p = polygraph2_from_json(read_json_file(cfg.input));
  CompletionOptions opts;
  opts.max_rules = cfg.budget_rules;
  opts.max_branchings = cfg.budget_branchings;
  Completion c = homotopical_complete(p, parse_order(p, cfg.order), opts);
  Json doc = to_json(c.presentation);
  doc["summary"] = {{"rules_added", c.rules_added},
                    {"three_cells", c.presentation.cells.size()},
                    {"branchings", c.branchings}};
  emit(cfg, doc);
  note(cfg, "rules added: " + std::to_string(c.rules_added) +
                ", 3-cells: " + std::to_string(c.presentation.cells.size()) +
                ", branchings: " + std::to_string(c.branchings));
  return 0;
}

int run_reduce(const JobConfig& cfg) {
  Polygraph31 p = polygraph31_from_json(read_json_file(cfg.input));
  CollapsiblePart part = collapsible_from_json(p, read_json_file(cfg.part));
  if (auto bad = validate_collapsible(p, part); !bad.empty()) {
    for (std::size_t i = 0; i < bad.size(); ++i) std::cerr << "violation " << i << ": " << bad[i] << "\n";
    return static_cast<int>(ErrorKind::Precondition);
  }
  Reduction r = homotopical_reduce(p, part);
  Json doc = to_json(r.result);
  doc["report"] = reduction_report(r);
  emit(cfg, doc);
  return 0;
}

int run_garside(const JobConfig& cfg) {
  CoxeterGroup g = load_group(cfg);
  Json doc;
  if (cfg.stage == "raw") {
    doc = to_json(Polygraph31{garside_presentation(g).base, {}});
  } else if (cfg.stage == "completed") {
    GarsideCompletion gc = complete_garside(g);
    doc = to_json(gc.completion.presentation);
    for (std::size_t i = 0; i < gc.tags.size(); ++i)
      doc["three_cells"][i]["family"] = std::string(1, gc.tags[i].family);
  } else if (cfg.stage == "reduced") {
    GarsideCompletion gc = complete_garside(g);
    Reduction r = reduce_garside(g, gc);
    doc = to_json(r.result);
    doc["report"] = reduction_report(r);
  } else {
    throw InputError("unknown stage '" + cfg.stage + "'");
  }
  doc["meta"] = {{"elements", element_meta(g)}};
  emit(cfg, doc);
  return 0;
}

int run_artin(const JobConfig& cfg) {
  CoxeterMatrix m = load_matrix(cfg);
  Polygraph31 art = artin_coherent(m);
  Census c = cell_census(art);
  Json doc = to_json(art);
  doc["census"] = {c.c0, c.c1, c.c2, c.c3};
  Json letters = Json::object();
  for (const std::string& s : m.names) letters[s] = s;
  doc["meta"] = {{"letters", letters}};
  Json rendered = Json::array();
  for (const ThreeCell& z : art.cells)
    rendered.push_back({{"id", z.id},
                        {"src", render(art.base, z.src)},
                        {"tgt", render(art.base, z.tgt)}});
  doc["rendered"] = std::move(rendered);
  emit(cfg, doc);
  note(cfg, "census " + std::to_string(c.c0) + "," + std::to_string(c.c1) + "," +
                std::to_string(c.c2) + "," + std::to_string(c.c3));
  return 0;
}

int run_coxeter(const JobConfig& cfg) {
  CoxeterGroup g = load_group(cfg);
  Json doc;
  doc["matrix"] = to_json(g.matrix());
  doc["size"] = g.size();
  doc["longest"] = g.name(g.longest());
  doc["longest_length"] = g.length(g.longest());
  Json elems = Json::array();
  for (int u = 0; u < static_cast<int>(g.size()); ++u) elems.push_back(g.name(u));
  doc["elements"] = std::move(elems);
  emit(cfg, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  JobConfig cfg;
  CLI::App app{"Coherent presentations of monoids"};
  app.require_subcommand(1);
  app.add_option("--out", cfg.out, "Output file (default: stdout)");
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress the summary on stderr");
  app.fallthrough();

  auto positive = CLI::PositiveNumber;

  CLI::App* complete = app.add_subcommand("complete", "Homotopical completion of a 2-polygraph");
  complete->add_option("input", cfg.input, "Polygraph2 JSON file")->required();
  complete->add_option("--order", cfg.order, "deglex, deglex:t,s,a or wreath:w1,w2,...");
  complete->add_option("--budget-rules", cfg.budget_rules, "Maximum number of rules")->check(positive);
  complete->add_option("--budget-branchings", cfg.budget_branchings, "Maximum branchings examined")
      ->check(positive);

  CLI::App* reduce = app.add_subcommand("reduce", "Homotopical reduction along a collapsible part");
  reduce->add_option("input", cfg.input, "Polygraph31 JSON file")->required();
  reduce->add_option("part", cfg.part, "Collapsible part JSON file")->required();

  CLI::App* garside = app.add_subcommand("garside", "Garside's presentation of an Artin monoid");
  garside->add_option("input", cfg.input, "Coxeter matrix JSON file");
  garside->add_option("--type", cfg.type, "Coxeter type such as A3 or I2(5)xA1");
  garside->add_option("--stage", cfg.stage, "raw, completed or reduced")
      ->check(CLI::IsMember({"raw", "completed", "reduced"}));
  garside->add_option("--budget-cosets", cfg.budget_cosets, "Coset enumeration cap")->check(positive);

  CLI::App* artin = app.add_subcommand("artin", "Artin's coherent presentation");
  artin->add_option("input", cfg.input, "Coxeter matrix JSON file");
  artin->add_option("--type", cfg.type, "Coxeter type");

  CLI::App* coxeter = app.add_subcommand("coxeter", "Enumerate a finite Coxeter group");
  coxeter->add_option("input", cfg.input, "Coxeter matrix JSON file");
  coxeter->add_option("--type", cfg.type, "Coxeter type");
  coxeter->add_option("--budget-cosets", cfg.budget_cosets, "Coset enumeration cap")->check(positive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorKind::Input);
  }

  if (quiet) cfg.verbosity = -1;
  try {
    if (complete->parsed()) return run_complete(cfg);
    if (reduce->parsed()) return run_reduce(cfg);
    if (garside->parsed()) return run_garside(cfg);
    if (artin->parsed()) return run_artin(cfg);
    if (coxeter->parsed()) return run_coxeter(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Input);
  }
  return static_cast<int>(ErrorKind::Input);
}
