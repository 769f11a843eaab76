#include "brl/terms.hpp"

#include <cassert>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace brl {

ParseError::ParseError(const std::string& what, size_t offset_)
    : BrlError(what + " (at offset " + std::to_string(offset_) + ")"), offset(offset_) {}

UnboundVariable::UnboundVariable(std::string variable_)
    : BrlError("unbound variable: " + variable_), variable(std::move(variable_)) {}

struct Term::Node {
  Kind kind;
  std::optional<Term> a, b;
  int n = 0;
  std::string name;
};

namespace {

struct InternKey {
  Term::Kind kind;
  const void* a;
  const void* b;
  int n;
  std::string name;
  bool operator==(const InternKey&) const = default;
};

struct InternKeyHash {
  size_t operator()(const InternKey& k) const {
    size_t h = std::hash<int>()(static_cast<int>(k.kind));
    auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    mix(std::hash<const void*>()(k.a));
    mix(std::hash<const void*>()(k.b));
    mix(std::hash<int>()(k.n));
    mix(std::hash<std::string>()(k.name));
    return h;
  }
};

}  // namespace

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

struct TermFactory {
  static Term intern(Term::Kind kind, std::optional<Term> a, std::optional<Term> b, int n,
                     std::string name) {
    static std::mutex mu;
    static std::unordered_map<InternKey, std::shared_ptr<const Term::Node>, InternKeyHash> table;
    InternKey key{kind, a ? a->id() : nullptr, b ? b->id() : nullptr, n, name};
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(key);
    if (it != table.end()) return Term(it->second);
    auto node = std::make_shared<Term::Node>(
        Term::Node{kind, std::move(a), std::move(b), n, std::move(name)});
    table.emplace(std::move(key), node);
    return Term(std::move(node));
  }
};

namespace {

Term intern(Term::Kind kind, std::optional<Term> a, std::optional<Term> b, int n,
            std::string name) {
  return TermFactory::intern(kind, std::move(a), std::move(b), n, std::move(name));
}

}  // namespace

Term Term::var(const std::string& name) {
  if (name.empty()) throw BrlError("empty variable name");
  return intern(Kind::var, std::nullopt, std::nullopt, 0, name);
}

Term Term::top() { return intern(Kind::top, std::nullopt, std::nullopt, 0, {}); }
Term Term::bot() { return intern(Kind::bot, std::nullopt, std::nullopt, 0, {}); }

Term Term::mult(Term a, Term b) { return intern(Kind::mult, std::move(a), std::move(b), 0, {}); }
Term Term::arrow(Term a, Term b) { return intern(Kind::arrow, std::move(a), std::move(b), 0, {}); }
Term Term::meet(Term a, Term b) { return intern(Kind::meet, std::move(a), std::move(b), 0, {}); }
Term Term::join(Term a, Term b) { return intern(Kind::join, std::move(a), std::move(b), 0, {}); }
Term Term::neg(Term a) { return intern(Kind::neg, std::move(a), std::nullopt, 0, {}); }
Term Term::plus(Term a, Term b) { return intern(Kind::plus, std::move(a), std::move(b), 0, {}); }

Term Term::pow(Term a, int n) {
  if (n < 0) throw BrlError("negative power in term");
  return intern(Kind::pow, std::move(a), std::nullopt, n, {});
}

Term Term::mul(int n, Term a) {
  if (n < 0) throw BrlError("negative multiple in term");
  return intern(Kind::mul, std::move(a), std::nullopt, n, {});
}

Term::Kind Term::kind() const { return node_->kind; }

bool Term::is_binary() const {
  switch (node_->kind) {
    case Kind::mult:
    case Kind::arrow:
    case Kind::meet:
    case Kind::join:
    case Kind::plus:
      return true;
    default:
      return false;
  }
}

const Term& Term::lhs() const {
  assert(node_->a);
  return *node_->a;
}

const Term& Term::rhs() const {
  assert(node_->b);
  return *node_->b;
}

const Term& Term::child() const { return lhs(); }

int Term::scalar() const { return node_->n; }

const std::string& Term::var_name() const { return node_->name; }

const void* Term::id() const { return node_.get(); }

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::var:
      out.insert(t.var_name());
      return;
    case Term::Kind::top:
    case Term::Kind::bot:
      return;
    case Term::Kind::neg:
    case Term::Kind::pow:
    case Term::Kind::mul:
      collect_vars(t.child(), out);
      return;
    default:
      collect_vars(t.lhs(), out);
      collect_vars(t.rhs(), out);
      return;
  }
}

}  // namespace

std::vector<std::string> Term::variables() const {
  std::set<std::string> s;
  collect_vars(*this, s);
  return {s.begin(), s.end()};
}

Term Term::expanded() const {
  switch (kind()) {
    case Kind::var:
    case Kind::top:
    case Kind::bot:
      return *this;
    case Kind::mult:
      return Term::mult(lhs().expanded(), rhs().expanded());
    case Kind::arrow:
      return Term::arrow(lhs().expanded(), rhs().expanded());
    case Kind::meet:
      return Term::meet(lhs().expanded(), rhs().expanded());
    case Kind::join:
      return Term::join(lhs().expanded(), rhs().expanded());
    case Kind::neg:
      return Term::arrow(child().expanded(), Term::bot());
    case Kind::plus: {
      Term l = lhs().expanded(), r = rhs().expanded();
      auto not_ = [](Term t) { return Term::arrow(std::move(t), Term::bot()); };
      return not_(Term::mult(not_(l), not_(r)));
    }
    case Kind::pow: {
      Term base = child().expanded();
      Term acc = Term::top();
      for (int i = 0; i < scalar(); ++i) acc = Term::mult(base, acc);
      return acc;
    }
    case Kind::mul: {
      Term base = child().expanded();
      auto not_ = [](Term t) { return Term::arrow(std::move(t), Term::bot()); };
      Term acc = Term::bot();
      for (int i = 0; i < scalar(); ++i) acc = not_(Term::mult(not_(base), not_(acc)));
      return acc;
    }
  }
  throw BrlError("unreachable term kind");
}

namespace {

// Binding strength used by the printer; larger binds tighter.
enum Level : int {
  lvl_arrow = 0,
  lvl_plus = 1,
  lvl_join = 2,
  lvl_meet = 3,
  lvl_mult = 4,
  lvl_prefix = 5,
  lvl_postfix = 6,
  lvl_atom = 7,
};

int level_of(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::arrow:
      return lvl_arrow;
    case Term::Kind::plus:
      return lvl_plus;
    case Term::Kind::join:
      return lvl_join;
    case Term::Kind::meet:
      return lvl_meet;
    case Term::Kind::mult:
      return lvl_mult;
    case Term::Kind::neg:
    case Term::Kind::mul:
      return lvl_prefix;
    case Term::Kind::pow:
      return lvl_postfix;
    default:
      return lvl_atom;
  }
}

void print(std::ostream& os, const Term& t, int context) {
  int mine = level_of(t);
  bool parens = mine < context;
  if (parens) os << "(";
  switch (t.kind()) {
    case Term::Kind::var:
      os << t.var_name();
      break;
    case Term::Kind::top:
      os << "T";
      break;
    case Term::Kind::bot:
      os << "F";
      break;
    case Term::Kind::arrow:
      print(os, t.lhs(), lvl_arrow + 1);
      os << " -> ";
      print(os, t.rhs(), lvl_arrow);  // right associative
      break;
    case Term::Kind::plus:
      print(os, t.lhs(), lvl_plus);
      os << " + ";
      print(os, t.rhs(), lvl_plus + 1);
      break;
    case Term::Kind::join:
      print(os, t.lhs(), lvl_join);
      os << " \\/ ";
      print(os, t.rhs(), lvl_join + 1);
      break;
    case Term::Kind::meet:
      print(os, t.lhs(), lvl_meet);
      os << " /\\ ";
      print(os, t.rhs(), lvl_meet + 1);
      break;
    case Term::Kind::mult:
      print(os, t.lhs(), lvl_mult);
      os << " * ";
      print(os, t.rhs(), lvl_mult + 1);
      break;
    case Term::Kind::neg:
      os << "~";
      print(os, t.child(), lvl_prefix);
      break;
    case Term::Kind::mul:
      os << t.scalar() << ".";
      print(os, t.child(), lvl_prefix);
      break;
    case Term::Kind::pow:
      print(os, t.child(), lvl_atom);
      os << "^" << t.scalar();
      break;
  }
  if (parens) os << ")";
}

}  // namespace

std::string Term::str() const {
  std::ostringstream os;
  print(os, *this, lvl_arrow);
  return os.str();
}

std::vector<std::string> Equation::variables() const {
  std::set<std::string> s;
  for (const auto& v : lhs.variables()) s.insert(v);
  for (const auto& v : rhs.variables()) s.insert(v);
  return {s.begin(), s.end()};
}

std::string Equation::str() const { return lhs.str() + " = " + rhs.str(); }

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Token {
  enum Kind {
    ident,
    number,
    star,
    arrow_op,
    meet_op,
    join_op,
    tilde,
    plus_op,
    caret,
    dot,
    lparen,
    rparen,
    equals,
    leq_sugar,
    end
  };
  Kind kind;
  std::string text;
  long value = 0;
  size_t offset = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  auto push = [&](Token::Kind k, size_t at, std::string text = {}, long value = 0) {
    out.push_back(Token{k, std::move(text), value, at});
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t at = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) {
        ++j;
      }
      push(Token::ident, at, s.substr(i, j - i));
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      long v = std::stol(s.substr(i, j - i));
      push(Token::number, at, s.substr(i, j - i), v);
      i = j;
      continue;
    }
    switch (c) {
      case '*':
        push(Token::star, at);
        ++i;
        break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          push(Token::arrow_op, at);
          i += 2;
        } else {
          throw ParseError("expected '->'", at);
        }
        break;
      case '/':
        if (i + 1 < s.size() && s[i + 1] == '\\') {
          push(Token::meet_op, at);
          i += 2;
        } else {
          throw ParseError("expected '/\\'", at);
        }
        break;
      case '\\':
        if (i + 1 < s.size() && s[i + 1] == '/') {
          push(Token::join_op, at);
          i += 2;
        } else {
          throw ParseError("expected '\\/'", at);
        }
        break;
      case '~':
        push(Token::tilde, at);
        ++i;
        break;
      case '+':
        push(Token::plus_op, at);
        ++i;
        break;
      case '^':
        push(Token::caret, at);
        ++i;
        break;
      case '.':
        push(Token::dot, at);
        ++i;
        break;
      case '(':
        push(Token::lparen, at);
        ++i;
        break;
      case ')':
        push(Token::rparen, at);
        ++i;
        break;
      case '=':
        push(Token::equals, at);
        ++i;
        break;
      case '<':
        if (i + 1 < s.size() && s[i + 1] == '=') {
          push(Token::leq_sugar, at);
          i += 2;
        } else {
          throw ParseError("expected '<='", at);
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
  }
  out.push_back(Token{Token::end, {}, 0, s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  Term parse_term_all() {
    Term t = parse_arrow();
    expect(Token::end, "unexpected trailing input");
    return t;
  }

  Equation parse_equation_all() {
    Term l = parse_arrow();
    if (peek().kind == Token::equals) {
      ++pos_;
      Term r = parse_arrow();
      expect(Token::end, "unexpected trailing input");
      return Equation{l, r};
    }
    if (peek().kind == Token::leq_sugar) {
      ++pos_;
      Term r = parse_arrow();
      expect(Token::end, "unexpected trailing input");
      return Equation{Term::arrow(l, r), Term::top()};
    }
    throw ParseError("expected '=' or '<='", peek().offset);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  void expect(Token::Kind k, const char* msg) {
    if (peek().kind != k) throw ParseError(msg, peek().offset);
    ++pos_;
  }

  Term parse_arrow() {
    Term l = parse_plus();
    if (peek().kind == Token::arrow_op) {
      ++pos_;
      return Term::arrow(l, parse_arrow());
    }
    return l;
  }

  Term parse_plus() {
    Term l = parse_join();
    while (peek().kind == Token::plus_op) {
      ++pos_;
      l = Term::plus(l, parse_join());
    }
    return l;
  }

  Term parse_join() {
    Term l = parse_meet();
    while (peek().kind == Token::join_op) {
      ++pos_;
      l = Term::join(l, parse_meet());
    }
    return l;
  }

  Term parse_meet() {
    Term l = parse_mult();
    while (peek().kind == Token::meet_op) {
      ++pos_;
      l = Term::meet(l, parse_mult());
    }
    return l;
  }

  Term parse_mult() {
    Term l = parse_unary();
    while (peek().kind == Token::star) {
      ++pos_;
      l = Term::mult(l, parse_unary());
    }
    return l;
  }

  Term parse_unary() {
    if (peek().kind == Token::tilde) {
      ++pos_;
      return Term::neg(parse_unary());
    }
    if (peek().kind == Token::number) {
      long n = peek().value;
      size_t at = peek().offset;
      ++pos_;
      if (peek().kind != Token::dot) throw ParseError("expected '.' after multiplier", at);
      ++pos_;
      return Term::mul(static_cast<int>(n), parse_unary());
    }
    return parse_postfix();
  }

  Term parse_postfix() {
    Term t = parse_atom();
    while (peek().kind == Token::caret) {
      ++pos_;
      if (peek().kind != Token::number) throw ParseError("expected exponent", peek().offset);
      t = Term::pow(t, static_cast<int>(peek().value));
      ++pos_;
    }
    return t;
  }

  Term parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::ident:
        ++pos_;
        if (t.text == "T") return Term::top();
        if (t.text == "F") return Term::bot();
        return Term::var(t.text);
      case Token::lparen: {
        ++pos_;
        Term inner = parse_arrow();
        expect(Token::rparen, "expected ')'");
        return inner;
      }
      default:
        throw ParseError("expected a term", t.offset);
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

Term parse_term(const std::string& text) { return Parser(text).parse_term_all(); }

Equation parse_equation(const std::string& text) { return Parser(text).parse_equation_all(); }

// ---------------------------------------------------------------------------
// evaluation

namespace {

Element eval_node(const Algebra& a, const Term& t, const std::map<std::string, Element>& env,
                  std::unordered_map<const void*, Element>& memo) {
  auto it = memo.find(t.id());
  if (it != memo.end()) return it->second;
  Element v;
  switch (t.kind()) {
    case Term::Kind::var: {
      auto e = env.find(t.var_name());
      if (e == env.end()) throw UnboundVariable(t.var_name());
      v = e->second;
      break;
    }
    case Term::Kind::top:
      v = a.top();
      break;
    case Term::Kind::bot:
      v = a.bot();
      break;
    case Term::Kind::mult:
      v = a.mult(eval_node(a, t.lhs(), env, memo), eval_node(a, t.rhs(), env, memo));
      break;
    case Term::Kind::arrow:
      v = a.arrow(eval_node(a, t.lhs(), env, memo), eval_node(a, t.rhs(), env, memo));
      break;
    case Term::Kind::meet:
      v = a.meet(eval_node(a, t.lhs(), env, memo), eval_node(a, t.rhs(), env, memo));
      break;
    case Term::Kind::join:
      v = a.join(eval_node(a, t.lhs(), env, memo), eval_node(a, t.rhs(), env, memo));
      break;
    case Term::Kind::neg:
      v = a.neg(eval_node(a, t.child(), env, memo));
      break;
    case Term::Kind::plus:
      v = a.plus(eval_node(a, t.lhs(), env, memo), eval_node(a, t.rhs(), env, memo));
      break;
    case Term::Kind::pow:
      v = a.power(eval_node(a, t.child(), env, memo), t.scalar());
      break;
    case Term::Kind::mul:
      v = a.multiple(t.scalar(), eval_node(a, t.child(), env, memo));
      break;
    default:
      throw BrlError("unreachable term kind");
  }
  memo.emplace(t.id(), v);
  return v;
}

}  // namespace

Element eval(const Algebra& a, const Term& t, const std::map<std::string, Element>& env) {
  for (const auto& [name, e] : env) {
    if (e < 0 || e >= a.size()) throw BrlError("assignment for " + name + " out of range");
  }
  std::unordered_map<const void*, Element> memo;
  return eval_node(a, t, env, memo);
}

Element eval_unary(const Algebra& a, const Term& t, Element value) {
  auto vars = t.variables();
  if (vars.size() != 1) throw NotUnary("term is not unary: " + t.str());
  return eval(a, t, {{vars.front(), value}});
}

IdentityCheck check_identity(const Algebra& a, const Equation& eq) {
  const auto vars = eq.variables();
  const int n = a.size();
  std::map<std::string, Element> env;
  std::vector<Element> values(vars.size(), 0);
  for (size_t i = 0; i < vars.size(); ++i) env[vars[i]] = 0;

  while (true) {
    if (eval(a, eq.lhs, env) != eval(a, eq.rhs, env)) {
      IdentityCheck out;
      out.holds = false;
      for (const auto& v : vars) out.counterexample.emplace_back(v, env[v]);
      return out;
    }
    // odometer, first variable most significant
    size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++values[i] < n) break;
      values[i] = 0;
      if (i == 0) return IdentityCheck{};
    }
    if (vars.empty()) return IdentityCheck{};
    for (size_t j = 0; j < vars.size(); ++j) env[vars[j]] = values[j];
  }
}

}  // namespace brl
