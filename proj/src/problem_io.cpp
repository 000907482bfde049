#include "wmi/problem_io.hpp"

#include <cctype>
#include <set>

#include "wmi/errors.hpp"

namespace wmi {

namespace {

struct SExpr {
  bool is_atom = false;
  std::string text;
  std::vector<SExpr> list;
  int line = 1;
  int col = 1;
};

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip_ws();
    while (pos_ < src_.size()) {
      out.push_back(read());
      skip_ws();
    }
    return out;
  }

 private:
  SExpr read() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", line_, col_);
    SExpr e;
    e.line = line_;
    e.col = col_;
    char c = src_[pos_];
    if (c == '(') {
      advance();
      for (;;) {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unclosed '('", e.line, e.col);
        if (src_[pos_] == ')') {
          advance();
          return e;
        }
        e.list.push_back(read());
      }
    }
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    e.is_atom = true;
    while (pos_ < src_.size()) {
      char d = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
      e.text.push_back(d);
      advance();
    }
    return e;
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void fail(const SExpr& e, const std::string& msg) { throw ParseError(msg, e.line, e.col); }

bool looks_numeric(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i < s.size() && s[i] == '.') ++i;
  return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'')) return false;
  static const std::set<std::string> reserved = {"and", "or", "not", "true", "false", "ite", "func"};
  return reserved.count(s) == 0;
}

const std::string& head_of(const SExpr& e) {
  if (e.list.empty() || !e.list[0].is_atom) fail(e, "expected an operator");
  return e.list[0].text;
}

class Builder {
 public:
  explicit Builder(const Problem& scope) {
    for (const auto& r : scope.reals) reals_.insert(r);
    for (const auto& b : scope.bools) bools_.insert(b);
  }

  Rational number(const SExpr& e) const {
    try {
      return parse_rational(e.text);
    } catch (const std::invalid_argument& ex) {
      fail(e, ex.what());
    }
  }

  Formula formula(const SExpr& e) const {
    if (e.is_atom) {
      if (e.text == "true") return Formula::top();
      if (e.text == "false") return Formula::bottom();
      if (bools_.count(e.text)) return Formula::atom(Atom::boolean(e.text));
      if (reals_.count(e.text)) fail(e, "real variable '" + e.text + "' used as a formula");
      fail(e, "unknown identifier '" + e.text + "'");
    }
    const std::string& op = head_of(e);
    auto arity = [&](std::size_t n) {
      if (e.list.size() != n + 1) fail(e, "'" + op + "' expects " + std::to_string(n) + " argument(s)");
    };
    if (op == "not") {
      arity(1);
      return Formula::lnot(formula(e.list[1]));
    }
    if (op == "and" || op == "or") {
      std::vector<Formula> kids;
      for (std::size_t i = 1; i < e.list.size(); ++i) kids.push_back(formula(e.list[i]));
      return op == "and" ? Formula::land(std::move(kids)) : Formula::lor(std::move(kids));
    }
    if (op == "->" || op == "=>") {
      arity(2);
      return Formula::implies(formula(e.list[1]), formula(e.list[2]));
    }
    if (op == "<->") {
      arity(2);
      return Formula::iff(formula(e.list[1]), formula(e.list[2]));
    }
    static const std::map<std::string, RelOp> rels = {{"<=", RelOp::Le}, {"<", RelOp::Lt}, {">=", RelOp::Ge},
                                                      {">", RelOp::Gt},  {"=", RelOp::Eq}, {"!=", RelOp::Ne}};
    if (auto it = rels.find(op); it != rels.end()) {
      arity(2);
      LinearTerm l = linear(e.list[1]);
      LinearTerm r = linear(e.list[2]);
      auto res = make_lra_literal(l, it->second, r);
      if (auto* b = std::get_if<bool>(&res)) return Formula::constant(*b);
      return Formula::literal(std::get<Literal>(res));
    }
    fail(e, "unknown formula operator '" + op + "'");
  }

  LinearTerm linear(const SExpr& e) const {
    if (e.is_atom) {
      if (looks_numeric(e.text)) return LinearTerm::constant_term(number(e));
      if (reals_.count(e.text)) return LinearTerm::variable(e.text);
      if (bools_.count(e.text)) fail(e, "Boolean variable '" + e.text + "' used as a term");
      fail(e, "unknown identifier '" + e.text + "'");
    }
    const std::string& op = head_of(e);
    if (e.list.size() < 2) fail(e, "'" + op + "' expects arguments");
    if (op == "+") {
      LinearTerm t;
      for (std::size_t i = 1; i < e.list.size(); ++i) t += linear(e.list[i]);
      return t;
    }
    if (op == "-") {
      LinearTerm t = linear(e.list[1]);
      if (e.list.size() == 2) return t * Rational(-1);
      for (std::size_t i = 2; i < e.list.size(); ++i) t -= linear(e.list[i]);
      return t;
    }
    if (op == "*") {
      LinearTerm acc = LinearTerm::constant_term(1);
      for (std::size_t i = 1; i < e.list.size(); ++i) {
        LinearTerm f = linear(e.list[i]);
        if (acc.is_constant())
          acc = f * acc.constant;
        else if (f.is_constant())
          acc *= f.constant;
        else
          fail(e, "non-linear expression inside an LRA atom");
      }
      return acc;
    }
    if (op == "/") {
      if (e.list.size() != 3) fail(e, "'/' expects 2 arguments");
      LinearTerm n = linear(e.list[1]);
      LinearTerm d = linear(e.list[2]);
      if (!d.is_constant()) fail(e, "non-linear expression inside an LRA atom");
      if (d.constant == 0) fail(e, "division by zero inside an LRA atom");
      return n * (1 / d.constant);
    }
    fail(e, "non-linear expression inside an LRA atom ('" + op + "')");
  }

  WeightTerm term(const SExpr& e) const {
    if (e.is_atom) {
      if (looks_numeric(e.text)) return WeightTerm::constant(number(e));
      if (reals_.count(e.text)) return WeightTerm::var(e.text);
      if (bools_.count(e.text)) fail(e, "Boolean variable '" + e.text + "' used as a term");
      fail(e, "unknown identifier '" + e.text + "'");
    }
    const std::string& op = head_of(e);
    if (op == "ite") {
      if (e.list.size() != 4) fail(e, "'ite' expects 3 arguments");
      return WeightTerm::ite(formula(e.list[1]), term(e.list[2]), term(e.list[3]));
    }
    if (op == "func") {
      if (e.list.size() < 2 || !e.list[1].is_atom || !valid_identifier(e.list[1].text))
        fail(e, "'func' expects a function name");
      std::vector<WeightTerm> args;
      for (std::size_t i = 2; i < e.list.size(); ++i) args.push_back(term(e.list[i]));
      return WeightTerm::func(e.list[1].text, std::move(args));
    }
    TKind kind;
    if (op == "+") kind = TKind::Add;
    else if (op == "-") kind = TKind::Sub;
    else if (op == "*") kind = TKind::Mul;
    else if (op == "/") kind = TKind::Div;
    else fail(e, "unknown term operator '" + op + "'");
    if (e.list.size() < 2) fail(e, "'" + op + "' expects arguments");
    if (e.list.size() == 2) {
      if (kind == TKind::Sub) return WeightTerm::constant(0) - term(e.list[1]);
      if (kind == TKind::Div) fail(e, "'/' expects 2 arguments");
      return term(e.list[1]);
    }
    WeightTerm acc = term(e.list[1]);
    for (std::size_t i = 2; i < e.list.size(); ++i) acc = WeightTerm::binop(kind, acc, term(e.list[i]));
    return acc;
  }

 private:
  std::set<std::string> reals_;
  std::set<std::string> bools_;
};

SExpr read_single(std::string_view text) {
  auto all = Reader(text).read_all();
  if (all.size() != 1) throw ParseError("expected exactly one expression", 1, 1);
  return all.front();
}

}  // namespace

Problem parse_problem(std::string_view text) {
  auto clauses = Reader(text).read_all();
  Problem p;
  p.phi = Formula::top();
  p.chi = Formula::top();
  p.weight = WeightTerm::constant(1);

  std::set<std::string> declared;
  const SExpr* phi = nullptr;
  const SExpr* chi = nullptr;
  const SExpr* weight = nullptr;
  for (const auto& c : clauses) {
    if (c.is_atom) fail(c, "expected a clause");
    const std::string& head = head_of(c);
    if (head == "declare-real" || head == "declare-bool") {
      if (c.list.size() != 2 || !c.list[1].is_atom) fail(c, "'" + head + "' expects one identifier");
      const std::string& id = c.list[1].text;
      if (!valid_identifier(id)) fail(c.list[1], "invalid identifier '" + id + "'");
      if (!declared.insert(id).second) fail(c.list[1], "identifier '" + id + "' declared twice");
      (head == "declare-real" ? p.reals : p.bools).push_back(id);
    } else if (head == "phi" || head == "chi" || head == "weight") {
      if (c.list.size() != 2) fail(c, "'" + head + "' expects one argument");
      const SExpr** slot = head == "phi" ? &phi : head == "chi" ? &chi : &weight;
      if (*slot) fail(c, "'" + head + "' defined twice");
      *slot = &c.list[1];
    } else {
      fail(c, "unknown clause '" + head + "'");
    }
  }
  Builder b(p);
  if (phi) p.phi = b.formula(*phi);
  if (chi) p.chi = b.formula(*chi);
  if (weight) p.weight = b.term(*weight);
  return p;
}

std::string serialize_problem(const Problem& p) {
  std::string s;
  for (const auto& b : p.bools) s += "(declare-bool " + b + ")\n";
  for (const auto& r : p.reals) s += "(declare-real " + r + ")\n";
  s += "(phi " + p.phi.to_string() + ")\n";
  s += "(chi " + p.chi.to_string() + ")\n";
  s += "(weight " + p.weight.to_string() + ")\n";
  return s;
}

Formula parse_formula(std::string_view text, const Problem& scope) {
  return Builder(scope).formula(read_single(text));
}

WeightTerm parse_weight(std::string_view text, const Problem& scope) {
  return Builder(scope).term(read_single(text));
}

}  // namespace wmi
