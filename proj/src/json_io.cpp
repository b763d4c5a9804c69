#include "charfield/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace charfield {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

Json to_json(const CycElt& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms()) terms.push_back(Json::array({e, to_string(c)}));
  return Json{{"n", x.modulus()}, {"terms", terms}};
}

CycElt cyc_from_json(const Json& j) {
  const std::int64_t n = int_field(j, "n");
  if (n < 1 || n > 1000000) throw std::invalid_argument("cyclotomic modulus out of range");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("'terms' must be an array");
  std::vector<CycElt::Term> parsed;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) {
      throw std::invalid_argument("each term must be [exponent, \"num/den\"]");
    }
    parsed.emplace_back(t[0].get<int>(), parse_rational(t[1].get<std::string>()));
  }
  std::sort(parsed.begin(), parsed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return CycElt::from_terms(static_cast<int>(n), std::move(parsed));
}

Json to_json(const AbelianField& f) {
  Json fixer = Json::array();
  for (int k : f.fixer().elements()) fixer.push_back(f.conductor() == 1 ? 1 : k);
  return Json{{"conductor", f.conductor()}, {"fixer", fixer}, {"degree", f.degree()}};
}

Json to_json(const CharacterTable& table) {
  const ClassData& cd = table.classes;
  Json classes = Json::array();
  for (std::size_t k = 0; k < cd.count(); ++k) {
    Json pm = Json::object();
    for (std::size_t i = 0; i < cd.power_map[k].size(); ++i) {
      if (cd.power_map[k][i] >= 0) pm[std::to_string(i)] = cd.power_map[k][i];
    }
    classes.push_back(Json{{"size", cd.sizes[k]}, {"element_order", cd.orders[k]}, {"powermap", pm}});
  }
  Json irr = Json::array();
  for (const auto& row : table.rows) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    irr.push_back(r);
  }
  return Json{{"name", table.name}, {"order", table.order}, {"exponent", cd.exponent}, {"classes", classes}, {"irr", irr}};
}

CharacterTable table_from_json(const Json& j) {
  CharacterTable t;
  const Json& name = field(j, "name");
  if (!name.is_string()) throw std::invalid_argument("'name' must be a string");
  t.name = name.get<std::string>();
  t.order = int_field(j, "order");
  if (t.order < 1) throw std::invalid_argument("'order' must be positive");
  const std::int64_t e = int_field(j, "exponent");
  if (e < 1 || e > 1000000 || t.order % e != 0) throw std::invalid_argument("'exponent' must divide the order");
  ClassData& cd = t.classes;
  cd.exponent = static_cast<int>(e);
  const Json& classes = field(j, "classes");
  if (!classes.is_array() || classes.empty()) throw std::invalid_argument("'classes' must be a nonempty array");
  for (const auto& c : classes) {
    cd.sizes.push_back(int_field(c, "size"));
    const std::int64_t o = int_field(c, "element_order");
    if (o < 1 || e % o != 0) throw std::invalid_argument("element order must divide the exponent");
    cd.orders.push_back(static_cast<int>(o));
    std::vector<int> pm(cd.exponent, -1);
    const Json& jm = field(c, "powermap");
    if (!jm.is_object()) throw std::invalid_argument("'powermap' must be an object");
    for (const auto& [key, value] : jm.items()) {
      std::size_t used = 0;
      int k = -1;
      try {
        k = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || k < 0 || k >= cd.exponent || !value.is_number_integer()) {
        throw std::invalid_argument("bad powermap entry '" + key + "'");
      }
      const int target = value.get<int>();
      if (target < 0 || static_cast<std::size_t>(target) >= classes.size()) {
        throw std::invalid_argument("powermap refers to an unknown class");
      }
      pm[k] = target;
    }
    cd.power_map.push_back(std::move(pm));
  }
  const Json& irr = field(j, "irr");
  if (!irr.is_array()) throw std::invalid_argument("'irr' must be an array");
  for (const auto& r : irr) {
    if (!r.is_array()) throw std::invalid_argument("each row of 'irr' must be an array");
    ClassFunction row;
    for (const auto& v : r) {
      CycElt x = cyc_from_json(v);
      if (cd.exponent % x.modulus() != 0) throw std::invalid_argument("character value outside Q_exponent");
      row.push_back(x.modulus() == cd.exponent ? std::move(x) : embed(x, cd.exponent));
    }
    t.rows.push_back(std::move(row));
  }
  validate_table(t);
  return t;
}

CharacterTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read table file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& err) {
    throw std::invalid_argument(std::string("table file is not valid JSON: ") + err.what());
  }
  return table_from_json(j);
}

Json to_json(const BlockPartition& blocks, const CharacterTable& table) {
  Json out = Json::array();
  const auto members = blocks.members();
  for (int b = 0; b < blocks.block_count(); ++b) {
    Json rows = Json::array();
    for (std::size_t r : members[b]) {
      rows.push_back(Json{{"index", r}, {"degree", table.degree(r)}, {"height", blocks.height[r]}});
    }
    out.push_back(Json{{"id", b}, {"defect", blocks.defect[b]}, {"rows", rows}});
  }
  return Json{{"p", blocks.p}, {"blocks", out}};
}

Json to_json(const CharacterFieldReport& r, bool with_sigma) {
  Json out{{"group", r.group},
           {"row", r.row},
           {"degree", r.degree},
           {"block", r.block},
           {"height", r.height},
           {"field", to_json(r.field)},
           {"conductor", r.conductor},
           {"a", r.a},
           {"m", r.m},
           {"theorem_containment", r.theorem_containment}};
  if (with_sigma) out["sigma1_fixed"] = r.sigma1_fixed;
  out["p_rational"] = r.p_rational;
  return out;
}

Json to_json(const GroupCheck& check) {
  Json reports = Json::array();
  for (const auto& r : check.reports) reports.push_back(to_json(r, check.p == 2));
  return Json{{"group", check.group},
              {"order", check.order},
              {"p", check.p},
              {"height_zero_rows", check.reports.size()},
              {"violations", check.violations},
              {"reports", reports}};
}

Json to_json(const RealizerCertificate& cert) {
  return Json{{"field", to_json(cert.field)},
              {"p", cert.p},
              {"n", cert.n},
              {"H", cert.h_elements},
              {"H_generators", cert.h_generators},
              {"group", cert.group_spec},
              {"group_order", cert.group_order},
              {"row", cert.row},
              {"degree", cert.degree},
              {"verified_field", cert.verified_field},
              {"verified_height_zero", cert.verified_height_zero},
              {"cross_checked", cert.cross_checked},
              {"dixon_row", cert.dixon_row},
              {"valid", cert.valid()}};
}

Json sigma_json(const CharacterTable& table, const std::vector<SigmaRow>& rows) {
  Json out = Json::array();
  std::size_t exceptions = 0;
  for (const auto& r : rows) {
    exceptions += r.exception() ? 1 : 0;
    out.push_back(Json{{"row", r.row},
                       {"degree", r.degree},
                       {"height", r.height},
                       {"height_zero", r.height_zero()},
                       {"sigma1_fixed", r.sigma1_fixed},
                       {"two_rational", r.two_rational}});
  }
  return Json{{"group", table.name}, {"order", table.order}, {"exceptions", exceptions}, {"rows", out}};
}

std::string corollary_c_csv(const std::vector<CorollaryCRow>& rows) {
  std::ostringstream out;
  out << "d,in_F2,expected\n";
  for (const auto& r : rows) out << r.d << ',' << (r.in_F2 ? "true" : "false") << ',' << (r.expected ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace charfield
