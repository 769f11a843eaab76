#include "brl/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "brl/algebra.hpp"
#include "brl/constructions.hpp"
#include "brl/filters.hpp"
#include "brl/laws.hpp"
#include "brl/report.hpp"
#include "brl/specfile.hpp"
#include "brl/structure.hpp"
#include "brl/terms.hpp"

namespace brl {
namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

// Loads and validates; failures are printed and reported as bad input.
std::optional<Algebra> load_checked(const std::string& path, std::ostream& err) {
  try {
    return load_algebra(path, true);
  } catch (const BrlError& ex) {
    err << "error: " << path << ": " << ex.what() << "\n";
    return std::nullopt;
  }
}

int emit_algebra(const Algebra& a, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  if (out_path.empty()) {
    out << format_algebra(a);
    return kOk;
  }
  try {
    save_algebra(out_path, a);
  } catch (const BrlError& ex) {
    err << "error: " << ex.what() << "\n";
    return kBadInput;
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::string text;
  {
    std::ifstream in(path);
    if (!in) {
      err << "error: cannot read " << path << "\n";
      return kBadInput;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    Algebra a = parse_algebra_text(text, false);
    AxiomReport rep = verify_axioms(a);
    for (const AxiomLaw& law : rep.laws) {
      out << (law.holds ? "ok   " : "FAIL ") << law.name;
      if (!law.holds) {
        out << " at (";
        for (size_t i = 0; i < law.witness.size(); ++i)
          out << (i ? ", " : "") << a.element_name(law.witness[i]);
        out << ")";
      }
      out << "\n";
    }
    if (rep.all_hold()) {
      out << a.name() << " is a bounded residuated lattice\n";
      return kOk;
    }
    out << a.name() << " is not a bounded residuated lattice\n";
    return kFail;
  } catch (const SpecFileError& ex) {
    err << "error: " << path << ": " << ex.what() << "\n";
    return kBadInput;
  } catch (const BrlError& ex) {
    // tables parsed but no lattice/residuum could be derived from them
    out << "FAIL " << ex.what() << "\n";
    out << path << " does not describe a bounded residuated lattice\n";
    return kFail;
  }
}

int cmd_analyze(const std::string& path, bool json, int max_k, int max_r, std::ostream& out,
                std::ostream& err) {
  auto a = load_checked(path, err);
  if (!a) return kBadInput;
  out << (json ? analysis_report_json(*a, max_k, max_r) : analysis_report_text(*a, max_k, max_r));
  return kOk;
}

int cmd_check_id(const std::string& path, const std::string& equation, std::ostream& out,
                 std::ostream& err) {
  auto a = load_checked(path, err);
  if (!a) return kBadInput;
  IdentityCheck res;
  try {
    res = check_identity(*a, parse_equation(equation));
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kBadInput;
  }
  if (res.holds) {
    out << "holds\n";
    return kOk;
  }
  out << "counterexample: ";
  for (size_t i = 0; i < res.counterexample.size(); ++i) {
    const auto& [var, val] = res.counterexample[i];
    out << (i ? ", " : "") << var << " := " << a->element_name(val);
  }
  out << "\n";
  return kFail;
}

int cmd_gap(const std::string& path, int max_k, int max_r, std::ostream& out, std::ostream& err) {
  auto a = load_checked(path, err);
  if (!a) return kBadInput;
  bool gap = has_gap(*a);
  out << "gap: " << (gap ? "yes" : "no") << "\n";
  auto cert = gap_certificate(*a, max_k, max_r);
  int bk = max_k > 0 ? max_k : a->size();
  int br = max_r > 0 ? max_r : a->size();
  if (cert) {
    out << "certificate: " << family_term(cert->first, cert->second).str() << " (k = "
        << cert->first << ", r = " << cert->second << ")\n";
  } else {
    out << "certificate: none (k <= " << bk << ", r <= " << br << ")\n";
  }
  return gap ? kOk : kFail;
}

int cmd_gen(const std::string& kind, int n, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
  if (kind == "lukasiewicz") {
    if (n < 2) {
      err << "error: lukasiewicz needs a chain size of at least 2\n";
      return kBadInput;
    }
    return emit_algebra(make_lukasiewicz(n - 1), out_path, out, err);
  }
  if (n != 0) {
    err << "error: only lukasiewicz takes a size\n";
    return kBadInput;
  }
  if (kind == "w9") return emit_algebra(make_w9(), out_path, out, err);
  if (kind == "nogap5") return emit_algebra(make_nogap5(), out_path, out, err);
  err << "error: unknown generator '" << kind << "' (expected lukasiewicz, w9 or nogap5)\n";
  return kBadInput;
}

int cmd_product(const std::string& p1, const std::string& p2, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  auto a = load_checked(p1, err);
  if (!a) return kBadInput;
  auto b = load_checked(p2, err);
  if (!b) return kBadInput;
  return emit_algebra(direct_product(*a, *b), out_path, out, err);
}

int cmd_sub(const std::string& path, const std::string& gens, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
  auto a = load_checked(path, err);
  if (!a) return kBadInput;
  std::vector<Element> seed;
  std::istringstream parts(gens);
  std::string name;
  while (std::getline(parts, name, ',')) {
    if (name.empty()) continue;
    auto e = a->element_by_name(name);
    if (!e) {
      err << "error: no element named '" << name << "' in " << a->name() << "\n";
      return kBadInput;
    }
    seed.push_back(*e);
  }
  return emit_algebra(subalgebra_generated(*a, seed, a->name() + "_sub"), out_path, out, err);
}

int cmd_quotient(const std::string& path, const std::string& generator,
                 const std::string& out_path, std::ostream& out, std::ostream& err) {
  auto a = load_checked(path, err);
  if (!a) return kBadInput;
  auto g = a->element_by_name(generator);
  if (!g) {
    err << "error: no element named '" << generator << "' in " << a->name() << "\n";
    return kBadInput;
  }
  return emit_algebra(quotient(principal_filter(*a, *g)).algebra, out_path, out, err);
}

int cmd_iso(const std::string& p1, const std::string& p2, std::ostream& out, std::ostream& err) {
  auto a = load_checked(p1, err);
  if (!a) return kBadInput;
  auto b = load_checked(p2, err);
  if (!b) return kBadInput;
  auto map = find_isomorphism(*a, *b);
  if (!map) {
    out << "not isomorphic\n";
    return kFail;
  }
  out << "isomorphic\n";
  for (Element x = 0; x < a->size(); ++x)
    out << "  " << a->element_name(x) << " -> " << b->element_name((*map)[static_cast<size_t>(x)])
        << "\n";
  return kOk;
}

int cmd_laws(const std::string& dir, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".brl")
      files.push_back(entry.path());
  }
  if (ec) {
    err << "error: cannot read directory " << dir << ": " << ec.message() << "\n";
    return kBadInput;
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "error: no .brl files under " << dir << "\n";
    return kBadInput;
  }

  bool any_unloadable = false;
  int failures = 0, checked = 0;
  for (const fs::path& file : files) {
    std::optional<Algebra> a;
    try {
      a = load_algebra(file.string(), false);
    } catch (const BrlError& ex) {
      err << "error: " << file.string() << ": " << ex.what() << "\n";
      any_unloadable = true;
      continue;
    }
    out << "== " << a->name() << " (" << file.string() << ")\n";
    for (const LawResult& r : run_laws(*a)) {
      ++checked;
      if (r.pass) {
        out << "ok   " << r.law << "\n";
      } else {
        ++failures;
        out << "FAIL " << r.law << ": " << r.witness << "\n";
      }
    }
  }
  out << "== " << files.size() << " files, " << checked << " law checks, " << failures
      << " failures\n";
  if (any_unloadable) return kBadInput;
  return failures == 0 ? kOk : kFail;
}

// ---------------------------------------------------------------------------
// lexicographic chain expression evaluation

struct LexToken {
  enum Kind { num, arrow, plus, join, meet, star, tilde, caret, dot, lparen, rparen, comma, top, bot, end };
  Kind kind;
  long long value = 0;
  size_t offset = 0;
};

std::vector<LexToken> lex_tokens(const std::string& s) {
  std::vector<LexToken> out;
  size_t i = 0;
  auto push = [&](LexToken::Kind k, size_t at, long long v = 0) {
    out.push_back(LexToken{k, v, at});
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    size_t at = i;
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      push(LexToken::arrow, at);
      i += 2;
    } else if ((c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) ||
               std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i + (c == '-' ? 1 : 0);
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      push(LexToken::num, at, std::stoll(s.substr(i, j - i)));
      i = j;
    } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '\\') {
      push(LexToken::meet, at);
      i += 2;
    } else if (c == '\\' && i + 1 < s.size() && s[i + 1] == '/') {
      push(LexToken::join, at);
      i += 2;
    } else if (c == '+') {
      push(LexToken::plus, at);
      ++i;
    } else if (c == '*') {
      push(LexToken::star, at);
      ++i;
    } else if (c == '~') {
      push(LexToken::tilde, at);
      ++i;
    } else if (c == '^') {
      push(LexToken::caret, at);
      ++i;
    } else if (c == '.') {
      push(LexToken::dot, at);
      ++i;
    } else if (c == '(') {
      push(LexToken::lparen, at);
      ++i;
    } else if (c == ')') {
      push(LexToken::rparen, at);
      ++i;
    } else if (c == ',') {
      push(LexToken::comma, at);
      ++i;
    } else if (c == 'T') {
      push(LexToken::top, at);
      ++i;
    } else if (c == 'F') {
      push(LexToken::bot, at);
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
  }
  push(LexToken::end, s.size());
  return out;
}

// Recursive descent over pair literals with the term operator grammar.
class LexEval {
 public:
  LexEval(int n, const std::string& text) : n_(n), toks_(lex_tokens(text)) {}

  LexElement run() {
    LexElement v = arrow();
    if (peek().kind != LexToken::end) throw ParseError("trailing input", peek().offset);
    return v;
  }

 private:
  const LexToken& peek() const { return toks_[pos_]; }

  long long take_number(const char* what) {
    if (peek().kind != LexToken::num) throw ParseError(what, peek().offset);
    long long v = peek().value;
    ++pos_;
    return v;
  }

  LexElement arrow() {
    LexElement l = sum();
    if (peek().kind == LexToken::arrow) {
      ++pos_;
      return lex_arrow(n_, l, arrow());
    }
    return l;
  }

  LexElement sum() {
    LexElement l = join();
    while (peek().kind == LexToken::plus) {
      ++pos_;
      l = lex_plus(n_, l, join());
    }
    return l;
  }

  LexElement join() {
    LexElement l = meet();
    while (peek().kind == LexToken::join) {
      ++pos_;
      l = lex_join(n_, l, meet());
    }
    return l;
  }

  LexElement meet() {
    LexElement l = mult();
    while (peek().kind == LexToken::meet) {
      ++pos_;
      l = lex_meet(n_, l, mult());
    }
    return l;
  }

  LexElement mult() {
    LexElement l = unary();
    while (peek().kind == LexToken::star) {
      ++pos_;
      l = lex_mult(n_, l, unary());
    }
    return l;
  }

  LexElement unary() {
    if (peek().kind == LexToken::tilde) {
      ++pos_;
      return lex_neg(n_, unary());
    }
    if (peek().kind == LexToken::num) {
      long long k = peek().value;
      size_t at = peek().offset;
      ++pos_;
      if (peek().kind != LexToken::dot) throw ParseError("expected '.' after multiplier", at);
      if (k < 0) throw ParseError("negative multiplier", at);
      ++pos_;
      return lex_multiple(n_, static_cast<int>(k), unary());
    }
    return postfix();
  }

  LexElement postfix() {
    LexElement v = atom();
    while (peek().kind == LexToken::caret) {
      size_t at = peek().offset;
      ++pos_;
      long long k = take_number("expected exponent");
      if (k < 0) throw ParseError("negative exponent", at);
      v = lex_power(n_, v, static_cast<int>(k));
    }
    return v;
  }

  LexElement atom() {
    switch (peek().kind) {
      case LexToken::top:
        ++pos_;
        return LexElement{n_, 0};
      case LexToken::bot:
        ++pos_;
        return LexElement{0, 0};
      case LexToken::lparen: {
        ++pos_;
        // pair literal when a number is immediately followed by a comma
        if (peek().kind == LexToken::num && toks_[pos_ + 1].kind == LexToken::comma) {
          long long a = take_number("expected number");
          ++pos_;  // comma
          long long r = take_number("expected second pair entry");
          if (peek().kind != LexToken::rparen) throw ParseError("expected ')'", peek().offset);
          ++pos_;
          LexElement e{a, r};
          if (!lex_valid(n_, e))
            throw InvalidElement("(" + std::to_string(a) + "," + std::to_string(r) +
                                 ") lies outside [(0,0),(" + std::to_string(n_) + ",0)]");
          return e;
        }
        LexElement inner = arrow();
        if (peek().kind != LexToken::rparen) throw ParseError("expected ')'", peek().offset);
        ++pos_;
        return inner;
      }
      default:
        throw ParseError("expected a pair or expression", peek().offset);
    }
  }

  int n_;
  std::vector<LexToken> toks_;
  size_t pos_ = 0;
};

int cmd_lexmv(int n, const std::string& expr, std::ostream& out, std::ostream& err) {
  if (n < 1) {
    err << "error: the chain parameter must be at least 1\n";
    return kBadInput;
  }
  try {
    LexElement v = LexEval(n, expr).run();
    out << "(" << v.a << "," << v.r << ")\n";
    return kOk;
  } catch (const BrlError& ex) {
    err << "error: " << ex.what() << "\n";
    return kBadInput;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"toolkit for finite bounded residuated lattices"};
  app.name("brlkit");
  app.require_subcommand(1);

  std::string path, path2, equation, out_path, gens, generator, kind, dir;
  int max_k = 0, max_r = 0, chain_n = 0;
  bool json = false;

  CLI::App* verify = app.add_subcommand("verify", "check the defining axioms of a spec file");
  verify->add_option("path", path, "algebra spec file")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "structural report of an algebra");
  analyze->add_option("path", path, "algebra spec file")->required();
  analyze->add_flag("--json", json, "emit the report as JSON");
  analyze->add_option("--max-k", max_k, "multiplier bound of the term family search");
  analyze->add_option("--max-r", max_r, "exponent bound of the term family search");

  CLI::App* check = app.add_subcommand("check-id", "test an identity over all assignments");
  check->add_option("path", path, "algebra spec file")->required();
  check->add_option("equation", equation, "identity, e.g. \"x*y -> z = x -> (y -> z)\"")
      ->required();

  CLI::App* gap = app.add_subcommand(
      "gap", "decide whether indecomposable quotients are local and hunt a certificate term");
  gap->add_option("path", path, "algebra spec file")->required();
  gap->add_option("--max-k", max_k, "multiplier bound, default |A|");
  gap->add_option("--max-r", max_r, "exponent bound, default |A|");

  CLI::App* gen = app.add_subcommand("gen", "write a built-in algebra as a spec file");
  gen->add_option("kind", kind, "lukasiewicz, w9 or nogap5")->required();
  gen->add_option("n", chain_n, "chain size (lukasiewicz only, counts elements)");
  gen->add_option("-o,--output", out_path, "write to this file instead of stdout");

  CLI::App* product = app.add_subcommand("product", "direct product of two algebras");
  product->add_option("path1", path, "first factor spec file")->required();
  product->add_option("path2", path2, "second factor spec file")->required();
  product->add_option("-o,--output", out_path, "write to this file instead of stdout");

  CLI::App* sub = app.add_subcommand("sub", "subalgebra generated by named elements");
  sub->add_option("path", path, "algebra spec file")->required();
  sub->add_option("--gens", gens, "comma separated element names")->required();
  sub->add_option("-o,--output", out_path, "write to this file instead of stdout");

  CLI::App* quot = app.add_subcommand("quotient", "quotient by a principal filter");
  quot->add_option("path", path, "algebra spec file")->required();
  quot->add_option("--generator", generator, "element generating the filter")->required();
  quot->add_option("-o,--output", out_path, "write to this file instead of stdout");

  CLI::App* iso = app.add_subcommand("iso", "search for an isomorphism between two algebras");
  iso->add_option("path1", path, "first spec file")->required();
  iso->add_option("path2", path2, "second spec file")->required();

  CLI::App* lexmv = app.add_subcommand(
      "lexmv", "evaluate an expression in the lexicographic chain of index n");
  lexmv->add_option("n", chain_n, "positive chain parameter")->required();
  lexmv->add_option("expression", equation, "expression over pair literals, e.g. \"2.(1,1)^2\"")
      ->required();

  CLI::App* laws = app.add_subcommand("laws", "run the consistency law suite over a directory");
  laws->add_option("dir", dir, "directory of .brl spec files")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(path, out, err);
    if (app.got_subcommand(analyze)) return cmd_analyze(path, json, max_k, max_r, out, err);
    if (app.got_subcommand(check)) return cmd_check_id(path, equation, out, err);
    if (app.got_subcommand(gap)) return cmd_gap(path, max_k, max_r, out, err);
    if (app.got_subcommand(gen)) return cmd_gen(kind, chain_n, out_path, out, err);
    if (app.got_subcommand(product)) return cmd_product(path, path2, out_path, out, err);
    if (app.got_subcommand(sub)) return cmd_sub(path, gens, out_path, out, err);
    if (app.got_subcommand(quot)) return cmd_quotient(path, generator, out_path, out, err);
    if (app.got_subcommand(iso)) return cmd_iso(path, path2, out, err);
    if (app.got_subcommand(lexmv)) return cmd_lexmv(chain_n, equation, out, err);
    if (app.got_subcommand(laws)) return cmd_laws(dir, out, err);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kBadInput;
  }
  err << "error: no command selected\n";
  return kBadInput;
}

}  // namespace brl
