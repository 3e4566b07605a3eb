#include "nakayama/text.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"

namespace nakayama {

const char* const kToolVersion = "0.1.0";

namespace {

std::vector<int> parse_entries(const std::string& part) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(part);
  while (std::getline(in, token, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw validation_error("not a number: '" + token + "'");
    }
    if (used != token.size()) throw validation_error("trailing junk in entry: '" + token + "'");
    if (value < 1) throw validation_error("Kupisch entries must be positive");
    out.push_back(value);
  }
  if (out.empty()) throw validation_error("empty Kupisch series");
  return out;
}

}  // namespace

Algebra parse_algebra(const std::string& text) {
  std::string cleaned;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ' && ch != '\t') cleaned.push_back(ch);
  if (cleaned.empty()) throw validation_error("empty algebra description");

  std::vector<std::vector<int>> parts;
  std::string part;
  std::istringstream in(cleaned);
  while (std::getline(in, part, '|')) parts.push_back(parse_entries(part));
  if (parts.empty()) throw validation_error("empty algebra description");

  std::vector<int> flat;
  for (const auto& p : parts) {
    if (parts.size() > 1 && p.back() != 1)
      throw validation_error("every component of a cycle must end with entry 1");
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return Algebra::from_series(flat);
}

std::string format_algebra(const Algebra& a) {
  std::string out;
  for (const auto& comp : a.components()) {
    if (!out.empty()) out.push_back('|');
    for (size_t i = 0; i < comp.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(comp[i]);
    }
  }
  return out;
}

std::string summary_table(const Algebra& a, const HomologicalSummary& s) {
  std::ostringstream out;
  auto row = [&](const char* key, const std::string& value) {
    out << key;
    for (size_t i = std::string(key).size(); i < 18; ++i) out << ' ';
    out << value << '\n';
  };
  row("series", format_algebra(a));
  row("rank", std::to_string(a.rank()));
  row("components", std::to_string(a.num_components()));
  row("gldim", s.gldim.str());
  row("domdim", s.domdim.str());
  row("findim", std::to_string(s.findim));
  row("defect", std::to_string(s.defect));
  row("num_relations", std::to_string(s.num_relations));
  row("semisimple", a.is_semisimple() ? "yes" : "no");
  row("self_injective", s.is_self_injective ? "yes" : "no");
  row("gorenstein", s.is_gorenstein ? "yes" : "no");
  row("higher_auslander", s.is_higher_auslander ? "yes" : "no");
  return out.str();
}

namespace {

nlohmann::ordered_json dim_json(Dim d) {
  if (d.finite()) return d.value();
  return "inf";
}

nlohmann::ordered_json summary_fields(const Algebra& a, const HomologicalSummary& s) {
  nlohmann::ordered_json j;
  j["series"] = format_algebra(a);
  j["rank"] = a.rank();
  j["gldim"] = dim_json(s.gldim);
  j["domdim"] = dim_json(s.domdim);
  j["findim"] = s.findim;
  j["defect"] = s.defect;
  j["num_relations"] = s.num_relations;
  j["semisimple"] = a.is_semisimple();
  j["self_injective"] = s.is_self_injective;
  j["gorenstein"] = s.is_gorenstein;
  j["higher_auslander"] = s.is_higher_auslander;
  return j;
}

Dim dim_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Dim::inf();
  return Dim::of(j.get<int>());
}

}  // namespace

std::string summary_json(const Algebra& a, const HomologicalSummary& s) {
  return summary_fields(a, s).dump();
}

void write_catalog(std::ostream& out, const SearchConfig& cfg,
                   const std::vector<CatalogRecord>& records) {
  nlohmann::ordered_json header;
  header["tool_version"] = kToolVersion;
  header["rank"] = cfg.rank;
  header["max_entry"] = cfg.entry_bound();
  header["include_linear"] = cfg.include_linear;
  header["records"] = records.size();
  out << header.dump() << '\n';
  for (const CatalogRecord& r : records) {
    nlohmann::ordered_json j = summary_fields(r.algebra, r.summary);
    nlohmann::ordered_json sig;
    sig["ranks"] = r.epsilon_ranks;
    sig["terminal"] = r.terminal;
    j["epsilon_signature"] = sig;
    out << j.dump() << '\n';
  }
}

std::vector<CatalogRecord> read_catalog(std::istream& in) {
  std::vector<CatalogRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line);
    if (j.contains("tool_version")) continue;  /* header */
    CatalogRecord r{parse_algebra(j.at("series").get<std::string>()), {}, {}, {}};
    r.summary.gldim = dim_from_json(j.at("gldim"));
    r.summary.domdim = dim_from_json(j.at("domdim"));
    r.summary.findim = j.at("findim").get<int>();
    r.summary.defect = j.at("defect").get<int>();
    r.summary.num_relations = j.at("num_relations").get<int>();
    r.summary.is_self_injective = j.at("self_injective").get<bool>();
    r.summary.is_gorenstein = j.at("gorenstein").get<bool>();
    r.summary.is_higher_auslander = j.at("higher_auslander").get<bool>();
    r.epsilon_ranks = j.at("epsilon_signature").at("ranks").get<std::vector<int>>();
    r.terminal = j.at("epsilon_signature").at("terminal").get<std::string>();
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace nakayama
