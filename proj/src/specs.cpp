#include "charfield/specs.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef CHARFIELD_DEFAULT_CORPUS
#define CHARFIELD_DEFAULT_CORPUS "data/default_corpus.txt"
#endif

namespace charfield {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_int(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + text + "' in spec '" + spec + "'");
  }
  if (used != text.size()) throw std::invalid_argument("bad integer '" + text + "' in spec '" + spec + "'");
  return v;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& spec) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  for (const auto& piece : split(text, ',')) out.push_back(parse_int(piece, spec));
  return out;
}

int parse_size(const std::string& text, const std::string& spec) {
  const std::int64_t v = parse_int(text, spec);
  if (v < 1 || v > 1000000) throw std::invalid_argument("size out of range in spec '" + spec + "'");
  return static_cast<int>(v);
}

struct Parsed {
  std::string kind;
  std::vector<std::string> args;
};

Parsed parse_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("spec '" + spec + "' has no ':'");
  Parsed p;
  p.kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (p.kind == "perm") {
    p.args.push_back(rest);
  } else {
    p.args = split(rest, ':');
  }
  return p;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

FiniteGroup parse_group(const std::string& spec) {
  const Parsed p = parse_spec(spec);
  const auto need = [&](std::size_t lo, std::size_t hi) {
    if (p.args.size() < lo || p.args.size() > hi) throw std::invalid_argument("wrong number of fields in spec '" + spec + "'");
  };
  if (p.kind == "cyclic") {
    need(1, 1);
    return cyclic(parse_size(p.args[0], spec));
  }
  if (p.kind == "dihedral") {
    need(1, 1);
    return dihedral(parse_size(p.args[0], spec));
  }
  if (p.kind == "semidihedral") {
    need(1, 1);
    return semidihedral(parse_size(p.args[0], spec));
  }
  if (p.kind == "quaternion") {
    need(1, 1);
    return generalized_quaternion(parse_size(p.args[0], spec));
  }
  if (p.kind == "sym") {
    need(1, 1);
    return symmetric(parse_size(p.args[0], spec));
  }
  if (p.kind == "alt") {
    need(1, 1);
    return alternating(parse_size(p.args[0], spec));
  }
  if (p.kind == "sl2") {
    need(1, 1);
    return sl2(parse_size(p.args[0], spec));
  }
  if (p.kind == "meta") {
    need(1, 2);
    const auto hgens = parse_int_list(p.args.size() > 1 ? p.args[1] : "", spec);
    return semidirect_cn_h(parse_size(p.args[0], spec), hgens);
  }
  if (p.kind == "perm") {
    std::vector<Perm> gens;
    if (!trim(p.args[0]).empty()) {
      for (const auto& piece : split(p.args[0], ';')) gens.push_back(parse_cycles(trim(piece)));
    }
    return FiniteGroup::from_permutation_generators(std::move(gens), spec);
  }
  throw std::invalid_argument("unknown group kind '" + p.kind + "' in spec '" + spec + "'");
}

TableMethod parse_method(const std::string& name) {
  if (name == "dixon") return TableMethod::dixon;
  if (name == "direct") return TableMethod::direct;
  if (name == "auto") return TableMethod::automatic;
  throw std::invalid_argument("unknown table method '" + name + "'");
}

CharacterTable table_for_spec(const std::string& spec, TableMethod method) {
  const Parsed p = parse_spec(spec);
  const bool direct_ok = p.kind == "meta" || p.kind == "cyclic";
  if (method == TableMethod::direct && !direct_ok) {
    throw std::invalid_argument("method 'direct' needs a cyclic: or meta: spec, got '" + spec + "'");
  }
  if (method == TableMethod::dixon || !direct_ok) return dixon_table(parse_group(spec));
  if (p.kind == "cyclic") {
    if (p.args.size() != 1) throw std::invalid_argument("wrong number of fields in spec '" + spec + "'");
    CharacterTable t = metacyclic_table(parse_size(p.args[0], spec), {});
    t.name = spec;
    return t;
  }
  if (p.args.empty() || p.args.size() > 2) throw std::invalid_argument("wrong number of fields in spec '" + spec + "'");
  const auto hgens = parse_int_list(p.args.size() > 1 ? p.args[1] : "", spec);
  return metacyclic_table(parse_size(p.args[0], spec), hgens);
}

AbelianField parse_field(const std::string& spec) {
  const Parsed p = parse_spec(spec);
  if (p.kind == "cyclo") {
    if (p.args.size() != 1) throw std::invalid_argument("wrong number of fields in spec '" + spec + "'");
    return cyclotomic_field(parse_size(p.args[0], spec));
  }
  if (p.kind == "quad") {
    if (p.args.size() != 1) throw std::invalid_argument("wrong number of fields in spec '" + spec + "'");
    return quadratic_field(parse_int(p.args[0], spec));
  }
  if (p.kind == "fix") {
    if (p.args.empty() || p.args.size() > 2) throw std::invalid_argument("wrong number of fields in spec '" + spec + "'");
    const int n = parse_size(p.args[0], spec);
    const auto gens = parse_int_list(p.args.size() > 1 ? p.args[1] : "", spec);
    return AbelianField::fixed_field(ResidueSubgroup::generated(n, gens));
  }
  throw std::invalid_argument("unknown field kind '" + p.kind + "' in spec '" + spec + "'");
}

std::vector<std::string> default_corpus() {
  std::vector<std::string> out;
  for (int n = 1; n <= 48; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int m = 4; m <= 64; m += 2) out.push_back("dihedral:" + std::to_string(m));
  for (int m : {16, 32, 64}) out.push_back("semidihedral:" + std::to_string(m));
  for (int m : {8, 16, 24, 32, 64}) out.push_back("quaternion:" + std::to_string(m));
  for (const char* s : {"sym:3", "sym:4", "sym:5", "alt:4", "alt:5", "sl2:3", "sl2:5"}) out.emplace_back(s);
  std::set<std::string> seen(out.begin(), out.end());
  for (int n = 1; n <= 40; ++n) {
    if (n % 4 == 2) continue;
    for (const auto& u : all_subgroups(n)) {
      const AbelianField f = AbelianField::fixed_field(u);
      if (f.conductor() != n || !in_class_Fp(f, 2)) continue;
      std::string spec = "meta:" + std::to_string(n);
      const auto gens = u.generators();
      for (std::size_t i = 0; i < gens.size(); ++i) spec += (i ? "," : ":") + std::to_string(gens[i]);
      if (seen.insert(spec).second) out.push_back(spec);
    }
  }
  return out;
}

std::vector<std::string> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read corpus file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::string default_corpus_path() { return CHARFIELD_DEFAULT_CORPUS; }

}  // namespace charfield
