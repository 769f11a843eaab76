#include "brl/report.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "brl/filters.hpp"
#include "brl/structure.hpp"
#include "brl/terms.hpp"

namespace brl {
namespace {

struct FilterRow {
  Filter filter;
  bool proper = false, prime = false, maximal = false, stone = false, ultra = false;
};

struct ReportData {
  StructureFlags flags;
  std::vector<FilterRow> filters;
  int max_k = 0, max_r = 0;
  std::vector<std::pair<int, int>> boolean_terms, radical_terms, both_terms;
};

ReportData gather(const Algebra& a, int max_k, int max_r) {
  ReportData d;
  d.flags = analyze_structure(a);
  d.max_k = max_k > 0 ? max_k : std::min(a.size(), 6);
  d.max_r = max_r > 0 ? max_r : std::min(a.size(), 6);

  std::vector<Filter> stone = stone_filters(a);
  std::vector<Filter> ultra = stone_ultrafilters(a);
  auto listed = [](const std::vector<Filter>& fs, const Filter& f) {
    return std::find(fs.begin(), fs.end(), f) != fs.end();
  };
  for (const Filter& f : all_filters(a)) {
    FilterRow row{f, f.proper(), is_prime(f), is_maximal(f), listed(stone, f), listed(ultra, f)};
    d.filters.push_back(std::move(row));
  }

  d.boolean_terms = find_term_in_family(a, FamilyPredicate::boolean_term, d.max_k, d.max_r);
  d.radical_terms = find_term_in_family(a, FamilyPredicate::radical_term, d.max_k, d.max_r);
  d.both_terms = find_term_in_family(a, FamilyPredicate::boolean_and_radical, d.max_k, d.max_r);
  return d;
}

std::vector<std::string> name_list(const Algebra& a, const std::vector<Element>& elems) {
  std::vector<std::string> out;
  out.reserve(elems.size());
  for (Element e : elems) out.push_back(a.element_name(e));
  return out;
}

std::string joined(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string analysis_report_json(const Algebra& a, int max_k, int max_r) {
  using json = nlohmann::ordered_json;
  ReportData d = gather(a, max_k, max_r);

  json doc;
  doc["algebra"] = a.name();
  doc["size"] = a.size();
  doc["elements"] = a.element_names();
  doc["top"] = a.element_name(a.top());
  doc["bot"] = a.element_name(a.bot());

  json flags;
  flags["directly_indecomposable"] = d.flags.directly_indecomposable;
  flags["local"] = d.flags.local;
  flags["simple"] = d.flags.simple;
  flags["semisimple"] = d.flags.semisimple;
  flags["gap"] = d.flags.gap;
  flags["blp"] = d.flags.blp;
  doc["flags"] = flags;

  json indices;
  indices["contractivity"] = d.flags.contractivity;
  indices["wl"] = d.flags.wl ? json(*d.flags.wl) : json(nullptr);
  indices["em"] = d.flags.em ? json(*d.flags.em) : json(nullptr);
  doc["indices"] = indices;

  doc["boolean_skeleton"] = name_list(a, d.flags.skeleton);
  doc["radical"] = name_list(a, d.flags.rad.members.elements());
  if (d.flags.gap_cert) {
    json cert;
    cert["k"] = d.flags.gap_cert->first;
    cert["r"] = d.flags.gap_cert->second;
    doc["gap_certificate"] = cert;
  } else {
    doc["gap_certificate"] = nullptr;
  }

  json filters = json::array();
  for (const FilterRow& row : d.filters) {
    json f;
    f["elements"] = name_list(a, row.filter.members.elements());
    f["proper"] = row.proper;
    f["prime"] = row.prime;
    f["maximal"] = row.maximal;
    f["stone"] = row.stone;
    f["stone_ultrafilter"] = row.ultra;
    filters.push_back(std::move(f));
  }
  doc["filters"] = filters;

  json search;
  search["max_k"] = d.max_k;
  search["max_r"] = d.max_r;
  auto pairs = [](const std::vector<std::pair<int, int>>& ps) {
    json arr = json::array();
    for (auto [k, r] : ps) arr.push_back(json::array({k, r}));
    return arr;
  };
  search["boolean"] = pairs(d.boolean_terms);
  search["radical"] = pairs(d.radical_terms);
  search["boolean_and_radical"] = pairs(d.both_terms);
  doc["term_search"] = search;

  return doc.dump(2) + "\n";
}

std::string analysis_report_text(const Algebra& a, int max_k, int max_r) {
  ReportData d = gather(a, max_k, max_r);
  std::ostringstream out;

  out << "algebra " << a.name() << ": " << a.size() << " elements, top "
      << a.element_name(a.top()) << ", bot " << a.element_name(a.bot()) << "\n";

  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "flags\n";
  out << "  directly indecomposable: " << yn(d.flags.directly_indecomposable) << "\n";
  out << "  local:                   " << yn(d.flags.local) << "\n";
  out << "  simple:                  " << yn(d.flags.simple) << "\n";
  out << "  semisimple:              " << yn(d.flags.semisimple) << "\n";
  out << "  gap:                     " << yn(d.flags.gap) << "\n";
  out << "  blp:                     " << yn(d.flags.blp) << "\n";

  auto idx = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("none");
  };
  out << "indices\n";
  out << "  contractivity: " << d.flags.contractivity << "\n";
  out << "  wl:            " << idx(d.flags.wl) << "\n";
  out << "  em:            " << idx(d.flags.em) << "\n";

  out << "boolean skeleton: {" << joined(name_list(a, d.flags.skeleton), ", ") << "}\n";
  out << "radical: {" << joined(name_list(a, d.flags.rad.members.elements()), ", ") << "}\n";
  if (d.flags.gap_cert) {
    out << "gap certificate: " << family_term(d.flags.gap_cert->first, d.flags.gap_cert->second).str()
        << "\n";
  } else {
    out << "gap certificate: none\n";
  }

  out << "filters: " << d.filters.size() << "\n";
  for (const FilterRow& row : d.filters) {
    out << "  {" << joined(name_list(a, row.filter.members.elements()), ", ") << "}";
    std::vector<std::string> tags;
    if (!row.proper) tags.push_back("improper");
    if (row.prime) tags.push_back("prime");
    if (row.maximal) tags.push_back("maximal");
    if (row.filter == d.flags.rad) tags.push_back("radical");
    if (row.ultra)
      tags.push_back("stone ultrafilter");
    else if (row.stone)
      tags.push_back("stone");
    if (!tags.empty()) out << ": " << joined(tags, ", ");
    out << "\n";
  }

  auto pair_line = [&](const std::vector<std::pair<int, int>>& ps) {
    if (ps.empty()) return std::string("none");
    std::vector<std::string> parts;
    for (auto [k, r] : ps) parts.push_back("(" + std::to_string(k) + "," + std::to_string(r) + ")");
    return joined(parts, " ");
  };
  out << "term family k.x^r (k <= " << d.max_k << ", r <= " << d.max_r << ")\n";
  out << "  boolean:             " << pair_line(d.boolean_terms) << "\n";
  out << "  radical:             " << pair_line(d.radical_terms) << "\n";
  out << "  boolean and radical: " << pair_line(d.both_terms) << "\n";
  return out.str();
}

}  // namespace brl
