#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "charfield/json_io.hpp"
#include "charfield/specs.hpp"

using namespace charfield;

namespace {

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> corpus_specs(const std::string& corpus) {
  if (corpus != "default") return load_corpus(corpus);
  std::ifstream probe(default_corpus_path());
  return probe ? load_corpus(default_corpus_path()) : default_corpus();
}

// Exit status for containment checks: violations at p = 2 contradict a proved
// statement (status 1); at odd p they are findings (status 2).
int theorem_a_status(std::int64_t p, std::size_t violations) {
  if (violations == 0) return 0;
  return p == 2 ? 1 : 2;
}

Json theorem_a_document(std::int64_t p, const std::vector<GroupCheck>& checks) {
  Json groups = Json::array();
  Json findings = Json::array();
  std::size_t rows = 0, violations = 0;
  for (const auto& c : checks) {
    groups.push_back(to_json(c));
    rows += c.reports.size();
    violations += c.violations;
    for (const auto& r : c.reports) {
      if (!r.theorem_containment) findings.push_back(to_json(r, p == 2));
    }
  }
  return Json{{"p", p},
              {"summary", Json{{"groups", checks.size()}, {"height_zero_rows", rows}, {"violations", violations}}},
              {"findings", findings},
              {"groups", groups}};
}

int run_table(const std::string& group, const std::string& method, const std::string& out) {
  const CharacterTable t = table_for_spec(group, parse_method(method));
  write_output(out, dump(to_json(t)));
  return 0;
}

int run_blocks(const std::string& group, std::int64_t p) {
  const CharacterTable t = table_for_spec(group);
  std::cout << dump(to_json(block_partition(t, p), t));
  return 0;
}

int run_verify_a(std::int64_t p, const std::string& corpus, const std::string& group, const std::string& out) {
  const std::vector<std::string> specs = group.empty() ? corpus_specs(corpus) : std::vector<std::string>{group};
  std::vector<GroupCheck> checks;
  std::size_t violations = 0;
  for (const auto& spec : specs) {
    checks.push_back(verify_theorem_A(table_for_spec(spec), p));
    checks.back().group = spec;
    violations += checks.back().violations;
  }
  write_output(out, dump(theorem_a_document(p, checks)));
  std::cerr << specs.size() << " groups, " << violations << " violations\n";
  return theorem_a_status(p, violations);
}

int run_realize(const std::string& field_spec, std::int64_t p) {
  const RealizerCertificate cert = realize_field(parse_field(field_spec), p);
  std::cout << dump(to_json(cert));
  return cert.valid() && cert.cross_checked ? 0 : 1;
}

int run_corollary_c(std::int64_t dmax) {
  const auto rows = corollary_c_sweep(dmax);
  std::cout << corollary_c_csv(rows);
  for (const auto& r : rows) {
    if (r.in_F2 != r.expected) return 1;
  }
  return 0;
}

int run_sigma(const CharacterTable& t) {
  const auto rows = sigma_check(t);
  const Json doc = sigma_json(t, rows);
  std::cout << dump(doc);
  return doc["exceptions"].get<std::size_t>() == 0 ? 0 : 1;
}

int run_ingest(const std::string& file, std::int64_t p, const std::string& check) {
  const CharacterTable t = read_table_file(file);
  if (check == "a") {
    const GroupCheck c = verify_theorem_A(t, p);
    std::cout << dump(theorem_a_document(p, {c}));
    return theorem_a_status(p, c.violations);
  }
  if (check == "sigma") return run_sigma(t);
  std::cout << dump(to_json(block_partition(t, p), t));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fields of values, blocks and heights of finite group characters"};
  app.require_subcommand(1);

  std::string group, method = "dixon", out, corpus = "default", field_spec, file, check;
  std::int64_t p = 2, dmax = 100;

  auto* table = app.add_subcommand("table", "Emit a character table as JSON");
  table->add_option("--group", group, "Group spec")->required();
  table->add_option("--method", method, "dixon or direct")->check(CLI::IsMember({"dixon", "direct"}));
  table->add_option("--out", out, "Output path ('-' for stdout)")->required();

  auto* blocks = app.add_subcommand("blocks", "Block partition report");
  blocks->add_option("--group", group, "Group spec")->required();
  blocks->add_option("--p", p, "Prime")->required();

  auto* verify = app.add_subcommand("verify-a", "Containment check over height-zero characters");
  verify->add_option("--p", p, "Prime")->required();
  verify->add_option("--corpus", corpus, "'default' or a file of group specs");
  verify->add_option("--group", group, "Single group spec (overrides the corpus)");
  verify->add_option("--out", out, "Output path ('-' for stdout)")->required();

  auto* realize = app.add_subcommand("realize", "Realize a field as Q(chi) for a height-zero chi");
  realize->add_option("--field", field_spec, "Field spec")->required();
  realize->add_option("--p", p, "Prime")->required();

  auto* corc = app.add_subcommand("corollary-c", "Quadratic fields in F_2, as CSV");
  corc->add_option("--max", dmax, "Largest |d|")->required();

  auto* sigma = app.add_subcommand("sigma", "sigma_1-fixedness against 2-rationality");
  sigma->add_option("--group", group, "Group spec")->required();

  auto* ingest = app.add_subcommand("ingest", "Run checks on a character table JSON file");
  ingest->add_option("--file", file, "Table JSON")->required();
  ingest->add_option("--p", p, "Prime")->required();
  ingest->add_option("--check", check, "a, sigma or blocks")->required()->check(CLI::IsMember({"a", "sigma", "blocks"}));

  auto* corpus_cmd = app.add_subcommand("corpus", "Print the generated default corpus, one spec per line");

  CLI11_PARSE(app, argc, argv);

  try {
    if (table->parsed()) return run_table(group, method, out);
    if (blocks->parsed()) return run_blocks(group, p);
    if (verify->parsed()) return run_verify_a(p, corpus, group, out);
    if (realize->parsed()) return run_realize(field_spec, p);
    if (corc->parsed()) return run_corollary_c(dmax);
    if (sigma->parsed()) return run_sigma(table_for_spec(group));
    if (ingest->parsed()) return run_ingest(file, p, check);
    if (corpus_cmd->parsed()) {
      for (const auto& spec : default_corpus()) std::cout << spec << "\n";
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
