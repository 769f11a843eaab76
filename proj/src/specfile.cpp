#include "brl/specfile.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace brl {

SpecFileError::SpecFileError(const std::string& what, int line_)
    : BrlError(what + " (line " + std::to_string(line_) + ")"), line(line_) {}

namespace {

std::string failing_laws(const AxiomReport& report) {
  std::string out;
  for (const AxiomLaw& law : report.laws)
    if (!law.holds) {
      if (!out.empty()) out += ", ";
      out += law.name;
    }
  return out;
}

}  // namespace

AxiomFailure::AxiomFailure(std::string algebra_name, AxiomReport report_)
    : BrlError(algebra_name + " is not a bounded residuated lattice: " + failing_laws(report_)),
      report(std::move(report_)) {}

namespace {

const char* const kKeywords[] = {"algebra", "elements", "top", "bot", "covers",
                                 "leq",     "mult",     "arrow", "end"};

bool is_keyword(const std::string& t) {
  for (const char* k : kKeywords)
    if (t == k) return true;
  return false;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

struct RawRow {
  int line;
  std::vector<std::string> tokens;
};

struct RawSpec {
  std::string name;
  std::vector<std::string> element_names;
  int elements_line = 0;
  std::string top_name, bot_name;
  std::vector<RawRow> covers, leq, mult, arrow;
  bool has_covers = false, has_leq = false, has_mult = false, has_arrow = false;
};

RawSpec scan(const std::string& text) {
  RawSpec s;
  std::vector<RawRow>* section = nullptr;
  bool named = false, ended = false;
  bool has_elements = false, has_top = false, has_bot = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (ended) {
      if (!tokens_of(line.substr(0, line.find('#'))).empty())
        throw SpecFileError("content after end", lineno);
      continue;
    }
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) continue;

    const std::string& head = toks[0];
    if (!named && head != "algebra") throw SpecFileError("expected 'algebra NAME' first", lineno);
    if (!is_keyword(head)) {
      if (!section) throw SpecFileError("stray content outside a table section", lineno);
      section->push_back({lineno, std::move(toks)});
      continue;
    }

    auto one_arg = [&](const std::string& what) {
      if (toks.size() != 2) throw SpecFileError("'" + what + "' needs exactly one name", lineno);
      return toks[1];
    };
    auto once = [&](bool& flag, const std::string& what) {
      if (flag) throw SpecFileError("duplicate '" + what + "' section", lineno);
      flag = true;
    };
    section = nullptr;
    if (head == "algebra") {
      once(named, "algebra");
      s.name = one_arg("algebra");
    } else if (head == "elements") {
      once(has_elements, "elements");
      if (toks.size() < 2) throw SpecFileError("'elements' needs at least one name", lineno);
      s.element_names.assign(toks.begin() + 1, toks.end());
      s.elements_line = lineno;
    } else if (head == "top") {
      once(has_top, "top");
      s.top_name = one_arg("top");
    } else if (head == "bot") {
      once(has_bot, "bot");
      s.bot_name = one_arg("bot");
    } else if (head == "covers") {
      once(s.has_covers, "covers");
      section = &s.covers;
    } else if (head == "leq") {
      once(s.has_leq, "leq");
      section = &s.leq;
    } else if (head == "mult") {
      once(s.has_mult, "mult");
      section = &s.mult;
    } else if (head == "arrow") {
      once(s.has_arrow, "arrow");
      section = &s.arrow;
    } else {  // end
      if (toks.size() != 1) throw SpecFileError("'end' takes no arguments", lineno);
      ended = true;
    }
  }
  if (!ended) throw SpecFileError("missing 'end'", lineno + 1);
  if (!has_elements) throw SpecFileError("missing 'elements'", lineno + 1);
  if (!has_top || !has_bot) throw SpecFileError("missing 'top' or 'bot'", lineno + 1);
  if (!s.has_mult) throw SpecFileError("missing 'mult'", lineno + 1);
  if (s.has_covers == s.has_leq)
    throw SpecFileError("the order needs exactly one of 'covers' or 'leq'", lineno + 1);
  return s;
}

Table parse_table(const std::vector<RawRow>& rows, const std::map<std::string, Element>& index,
                  int n, const std::string& what) {
  if (static_cast<int>(rows.size()) != n)
    throw SpecFileError("'" + what + "' needs " + std::to_string(n) + " rows, got " +
                            std::to_string(rows.size()),
                        rows.empty() ? 0 : rows.back().line);
  Table t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const RawRow& row = rows[i];
    if (static_cast<int>(row.tokens.size()) != n)
      throw SpecFileError("'" + what + "' row needs " + std::to_string(n) + " entries",
                          row.line);
    for (int j = 0; j < n; ++j) {
      auto it = index.find(row.tokens[j]);
      if (it == index.end())
        throw SpecFileError("unknown element '" + row.tokens[j] + "'", row.line);
      t[i * n + j] = it->second;
    }
  }
  return t;
}

}  // namespace

Algebra parse_algebra_text(const std::string& text, bool strict) {
  RawSpec s = scan(text);
  const int n = static_cast<int>(s.element_names.size());

  std::map<std::string, Element> index;
  for (int i = 0; i < n; ++i) {
    const std::string& name = s.element_names[i];
    if (is_keyword(name))
      throw SpecFileError("element name '" + name + "' is a keyword", s.elements_line);
    if (!index.emplace(name, i).second)
      throw SpecFileError("duplicate element '" + name + "'", s.elements_line);
  }
  auto resolve = [&](const std::string& name, int line) {
    auto it = index.find(name);
    if (it == index.end()) throw SpecFileError("unknown element '" + name + "'", line);
    return it->second;
  };

  Relation leq;
  if (s.has_covers) {
    std::vector<std::pair<Element, Element>> pairs;
    for (const RawRow& row : s.covers) {
      if (row.tokens.size() != 3 || row.tokens[1] != "<")
        throw SpecFileError("cover lines hold exactly 'LOWER < UPPER'", row.line);
      pairs.emplace_back(resolve(row.tokens[0], row.line), resolve(row.tokens[2], row.line));
    }
    leq = close_covers(n, pairs);
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b)
        if (leq[a * n + b] && leq[b * n + a])
          throw SpecFileError("cover relation has a cycle through '" + s.element_names[a] +
                                  "' and '" + s.element_names[b] + "'",
                              s.covers.empty() ? 0 : s.covers.front().line);
  } else {
    if (static_cast<int>(s.leq.size()) != n)
      throw SpecFileError("'leq' needs " + std::to_string(n) + " rows",
                          s.leq.empty() ? 0 : s.leq.back().line);
    leq.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      const RawRow& row = s.leq[i];
      if (static_cast<int>(row.tokens.size()) != n)
        throw SpecFileError("'leq' row needs " + std::to_string(n) + " entries", row.line);
      for (int j = 0; j < n; ++j) {
        if (row.tokens[j] != "0" && row.tokens[j] != "1")
          throw SpecFileError("'leq' entries are 0 or 1", row.line);
        leq[i * n + j] = row.tokens[j] == "1" ? 1 : 0;
      }
    }
  }

  Table mult = parse_table(s.mult, index, n, "mult");
  std::optional<Table> arrow;
  if (s.has_arrow) arrow = parse_table(s.arrow, index, n, "arrow");

  Algebra a(s.name, s.element_names, resolve(s.top_name, 0), resolve(s.bot_name, 0),
            std::move(mult), std::move(leq), std::move(arrow));
  if (strict) {
    AxiomReport report = verify_axioms(a);
    if (!report.all_hold()) throw AxiomFailure(a.name(), std::move(report));
  }
  return a;
}

Algebra load_algebra(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw BrlError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str(), strict);
}

std::string format_algebra(const Algebra& a) {
  const int n = a.size();
  std::ostringstream out;
  out << "algebra " << a.name() << "\n";
  out << "elements";
  for (int i = 0; i < n; ++i) out << " " << a.element_name(i);
  out << "\n";
  out << "top " << a.element_name(a.top()) << "\n";
  out << "bot " << a.element_name(a.bot()) << "\n";
  out << "covers\n";
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == y || !a.leq(x, y)) continue;
      bool direct = true;
      for (Element z = 0; z < n && direct; ++z)
        if (z != x && z != y && a.leq(x, z) && a.leq(z, y)) direct = false;
      if (direct) out << "  " << a.element_name(x) << " < " << a.element_name(y) << "\n";
    }
  auto table = [&](const char* head, auto&& entry) {
    out << head << "\n";
    for (Element x = 0; x < n; ++x) {
      out << " ";
      for (Element y = 0; y < n; ++y) out << " " << a.element_name(entry(x, y));
      out << "\n";
    }
  };
  table("mult", [&](Element x, Element y) { return a.mult(x, y); });
  table("arrow", [&](Element x, Element y) { return a.arrow(x, y); });
  out << "end\n";
  return out.str();
}

void save_algebra(const std::string& path, const Algebra& a) {
  std::ofstream out(path);
  if (!out) throw BrlError("cannot write " + path);
  out << format_algebra(a);
  if (!out) throw BrlError("write failed for " + path);
}

}  // namespace brl
