#include "bsrbd/frontend.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "bsrbd/error.hpp"

namespace bsrbd {

namespace {

struct Token {
  enum class Kind { Ident, Number, Sym, End };
  Kind kind;
  std::string text;
  std::size_t col;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < line.size() && ident_char(line[i])) ++i;
      out.push_back({Token::Kind::Ident, std::string(line.substr(start, i - start)), start + 1});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (i + 1 < line.size() && line[i] == '/' && std::isdigit(static_cast<unsigned char>(line[i + 1]))) {
        ++i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      }
      out.push_back({Token::Kind::Number, std::string(line.substr(start, i - start)), start + 1});
      continue;
    }
    static const char* two[] = {"<=", ">=", "!=", "->", "&&"};
    bool matched = false;
    for (const char* t : two) {
      if (line.substr(i, 2) == t) {
        out.push_back({Token::Kind::Sym, t, start + 1});
        i += 2;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string_view("[](){};,~<>=+-*^:").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Sym, std::string(1, c), start + 1});
      ++i;
      continue;
    }
    throw ParseError(lineno, start + 1, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::End, "", line.size() + 1});
  return out;
}

class Cursor {
 public:
  Cursor(std::vector<Token> toks, std::size_t line) : toks_(std::move(toks)), line_(line) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_sym(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Sym && peek(ahead).text == s;
  }
  bool accept(std::string_view s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  std::string ident(const std::string& what) {
    if (peek().kind != Token::Kind::Ident) fail("expected " + what);
    return next().text;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(line_, t.col, msg + (t.kind == Token::Kind::End ? " at end of line" : ""));
  }
  std::size_t line() const { return line_; }
  std::size_t col() const { return peek().col; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

std::optional<Rel> accept_rel(Cursor& c) {
  if (c.peek().kind != Token::Kind::Sym) return std::nullopt;
  auto r = parse_rel(c.peek().text);
  if (r) c.next();
  return r;
}

// Linear expression over named symbols, as written.
struct LinExpr {
  std::map<std::string, Rational> coeffs;
  Rational constant;
  std::optional<std::string> lone;  // the expression is exactly one identifier
};

LinExpr parse_expr(Cursor& c) {
  LinExpr e;
  std::size_t terms = 0;
  bool plain_ident = false;
  while (true) {
    Rational k(1);
    if (terms == 0) {
      if (c.accept("-")) k = Rational(-1);
      else c.accept("+");
    } else if (c.accept("-")) {
      k = Rational(-1);
    } else if (!c.accept("+")) {
      break;
    }
    const bool positive = k.sign() > 0;
    std::optional<std::string> sym;
    std::size_t factors = 0;
    while (true) {
      if (c.peek().kind == Token::Kind::Number) {
        k *= Rational::parse(c.next().text);
      } else if (c.peek().kind == Token::Kind::Ident) {
        if (sym) c.fail("product of two symbols is not linear");
        sym = c.next().text;
      } else {
        c.fail("expected a number or identifier");
      }
      ++factors;
      if (!c.accept("*")) break;
    }
    plain_ident = positive && factors == 1 && sym.has_value();
    ++terms;
    if (sym) {
      auto& slot = e.coeffs[*sym];
      slot += k;
      if (slot.is_zero()) e.coeffs.erase(*sym);
    } else {
      e.constant += k;
    }
  }
  if (terms == 1 && plain_ident) e.lone = e.coeffs.begin()->first;
  return e;
}

// Clause-local symbol tables while parsing one clause.
struct ClauseScope {
  const ClauseSet& set;
  Clause& cl;
  std::map<std::string, VarId> base, free;

  VarId base_var(const std::string& name, Cursor& c) {
    if (set.find_free_constant(name)) throw SortError(where(c) + "free constant '" + name + "' used at base sort");
    if (set.find_skolem(name)) throw SortError(where(c) + "Skolem constant '" + name + "' used as a variable");
    if (free.contains(name)) throw SortError(where(c) + "variable '" + name + "' used at both sorts");
    auto [it, fresh] = base.emplace(name, static_cast<VarId>(cl.base_vars.size()));
    if (fresh) cl.base_vars.push_back(name);
    return it->second;
  }

  FreeTerm free_term(const std::string& name, Cursor& c) {
    if (auto k = set.find_free_constant(name)) return FreeTerm::constant(*k);
    if (set.find_skolem(name)) throw SortError(where(c) + "Skolem constant '" + name + "' used at free sort");
    if (base.contains(name)) throw SortError(where(c) + "variable '" + name + "' used at both sorts");
    auto [it, fresh] = free.emplace(name, static_cast<VarId>(cl.free_vars.size()));
    if (fresh) cl.free_vars.push_back(name);
    return FreeTerm::var(it->second);
  }

  static std::string where(const Cursor& c) { return std::to_string(c.line()) + ":" + std::to_string(c.col()) + ": "; }
};

// Splits an expression into its variable part and its ground part.
void resolve(const LinExpr& e, ClauseScope& sc, Cursor& c, std::map<VarId, Rational>& vars, GroundTerm& ground,
             const Rational& scale) {
  ground.offset += e.constant * scale;
  for (const auto& [name, k] : e.coeffs) {
    if (auto d = sc.set.find_skolem(name)) {
      ground += GroundTerm::skolem(*d) * (k * scale);
    } else {
      const VarId x = sc.base_var(name, c);
      auto& slot = vars[x];
      slot += k * scale;
      if (slot.is_zero()) vars.erase(x);
    }
  }
}

GroundTerm ground_only(const LinExpr& e, ClauseScope& sc, Cursor& c) {
  std::map<VarId, Rational> vars;
  GroundTerm g;
  resolve(e, sc, c, vars, g, Rational(1));
  if (!vars.empty()) c.fail("expected a ground term");
  return g;
}

Constraint classify(const LinExpr& lhs, Rel rel, const LinExpr& rhs, ClauseScope& sc, Cursor& c) {
  const Mode mode = sc.set.mode;
  auto outside = [&](const std::string& why) -> FragmentError {
    return FragmentError(ClauseScope::where(c) + why + " is outside BSR(" + (mode == Mode::SLR ? "SLR" : "BD") + ")");
  };
  std::map<VarId, Rational> vars;
  GroundTerm g;
  resolve(lhs, sc, c, vars, g, Rational(1));
  resolve(rhs, sc, c, vars, g, Rational(-1));
  const bool lhs_var = lhs.lone && !sc.set.find_skolem(*lhs.lone);
  const bool rhs_var = rhs.lone && !sc.set.find_skolem(*rhs.lone);

  if (vars.empty()) {
    auto names_var = [&](const LinExpr& e) {
      for (const auto& kv : e.coeffs)
        if (!sc.set.find_skolem(kv.first)) return true;
      return false;
    };
    // x - x < 1 and the like: compare the ground remainder against 0
    if (names_var(lhs) || names_var(rhs)) return GroundCmp{g, rel, GroundTerm{}};
    return GroundCmp{ground_only(lhs, sc, c), rel, ground_only(rhs, sc, c)};
  }
  if (lhs_var && rhs_var && lhs.lone != rhs.lone) {
    const VarId x = sc.base_var(*lhs.lone, c), y = sc.base_var(*rhs.lone, c);
    // in BD, x < y is the difference constraint x - y < 0 and needs guards
    if (mode == Mode::BD) return DiffConst{x, y, rel, Rational(0)};
    return VarVar{x, rel, y};
  }
  if (vars.size() == 1) {
    const auto [x, a] = *vars.begin();
    GroundTerm bound = g * (Rational(-1) / a);
    if (mode == Mode::SLR && !bound.is_constant()) throw outside("a compound bound");
    return VarConst{x, a.sign() > 0 ? rel : flip(rel), bound};
  }
  if (vars.size() == 2) {
    auto it = vars.begin();
    VarId x = it->first, y = std::next(it)->first;
    Rational a = it->second, b = std::next(it)->second;
    if (a == -b && g.is_rational()) {
      if (a.sign() < 0) {
        std::swap(x, y);
        a = b;
      }
      Rational k = -g.offset / a;
      if (mode == Mode::SLR) {
        if (!k.is_zero()) throw outside("a difference constraint");
        // x - y rel 0 is x rel y
        return VarVar{x, rel, y};
      }
      return DiffConst{x, y, rel, k};
    }
  }
  if (mode == Mode::LA && g.is_rational()) return LinearCmp{vars, g.offset, rel};
  throw outside("the constraint");
}

Constraint parse_constraint(Cursor& c, ClauseScope& sc) {
  if (c.peek().kind == Token::Kind::Ident && c.peek().text == "def") {
    c.next();
    if (sc.set.mode != Mode::SLR) throw FragmentError(ClauseScope::where(c) + "definitions need mode slr");
    const std::string d = c.ident("a Skolem constant");
    auto id = sc.set.find_skolem(d);
    if (!id) throw SortError(ClauseScope::where(c) + "'" + d + "' is not a declared Skolem constant");
    c.expect("!=");
    LinExpr t = parse_expr(c);
    return SkolemDef{*id, Rel::NE, ground_only(t, sc, c)};
  }
  LinExpr lhs = parse_expr(c);
  auto rel = accept_rel(c);
  if (!rel) c.fail("expected a relation");
  LinExpr rhs = parse_expr(c);
  return classify(lhs, *rel, rhs, sc, c);
}

FreeAtom parse_atom(Cursor& c, ClauseScope& sc) {
  const std::string name = c.ident("an atom");
  if (c.accept("~")) {
    FreeTerm l = sc.free_term(name, c);
    FreeTerm r = sc.free_term(c.ident("a free-sort term"), c);
    return Equation{l, r};
  }
  auto pid = sc.set.find_predicate(name);
  if (!pid) throw SortError(ClauseScope::where(c) + "undeclared predicate '" + name + "'");
  const PredicateSig& sig = sc.set.predicates[*pid];
  std::vector<std::string> args;
  std::vector<std::size_t> cols;
  if (c.accept("(")) {
    if (!c.accept(")")) {
      do {
        cols.push_back(c.col());
        if (c.peek().kind != Token::Kind::Ident)
          throw SortError(ClauseScope::where(c) + "arguments of '" + name + "' must be variables or free constants");
        args.push_back(c.next().text);
      } while (c.accept(","));
      c.expect(")");
    }
  }
  if (args.size() != sig.free_arity + sig.base_arity)
    throw SortError(ClauseScope::where(c) + "'" + name + "' expects " + std::to_string(sig.free_arity + sig.base_arity) +
                    " arguments, got " + std::to_string(args.size()));
  PredAtom a{*pid, {}, {}};
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i < sig.free_arity) a.free_args.push_back(sc.free_term(args[i], c));
    else a.base_args.push_back(sc.base_var(args[i], c));
  }
  return a;
}

template <class F>
void parse_list(Cursor& c, F&& item) {
  c.expect("[");
  if (c.accept("]")) return;
  do {
    if (c.is_sym("]")) break;  // tolerate a trailing separator
    item();
  } while (c.accept(";"));
  c.expect("]");
}

std::uint32_t parse_power(Cursor& c, const std::string& sort) {
  const std::string s = c.ident(sort);
  if (s != sort) c.fail("expected sort " + sort);
  if (!c.accept("^")) return 1;
  if (c.peek().kind != Token::Kind::Number || c.peek().text.find('/') != std::string::npos) c.fail("expected an arity");
  return static_cast<std::uint32_t>(std::stoul(c.next().text));
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    out.push_back(l);
    start = end + 1;
  }
  return out;
}

std::string rat_text(const Rational& r) { return r.to_string(); }

std::string coeff_text(const Rational& k, const std::string& sym, bool first) {
  std::string s;
  Rational a = k;
  if (a.sign() < 0) {
    s = first ? "-" : " - ";
    a = -a;
  } else if (!first) {
    s = " + ";
  }
  if (a == Rational(1)) return s + sym;
  return s + rat_text(a) + "*" + sym;
}

}  // namespace

ClauseSet parse_clause_set(std::string_view text) {
  ClauseSet set;
  bool mode_seen = false, clause_seen = false;
  std::map<std::string, std::string> declared;  // name -> kind
  auto declare = [&](Cursor& c, const std::string& name, const std::string& kind) {
    auto [it, fresh] = declared.emplace(name, kind);
    if (!fresh) c.fail("'" + name + "' already declared as " + it->second);
  };
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    Cursor c(lex(lines[ln], ln + 1), ln + 1);
    if (c.at_end()) continue;
    const std::string kw = c.ident("a declaration or clause");
    if (kw == "mode") {
      if (mode_seen || clause_seen || !set.predicates.empty() || !declared.empty()) c.fail("mode must come first");
      const std::string m = c.ident("slr, bd or la");
      if (m == "slr") set.mode = Mode::SLR;
      else if (m == "bd") set.mode = Mode::BD;
      else if (m == "la") set.mode = Mode::LA;
      else c.fail("unknown mode '" + m + "'");
      mode_seen = true;
      c.expect_end();
    } else if (kw == "pred") {
      PredicateSig sig;
      sig.name = c.ident("a predicate name");
      declare(c, sig.name, "predicate");
      c.expect(":");
      if (c.peek().kind == Token::Kind::Ident && c.peek().text == "S") sig.free_arity = parse_power(c, "S");
      if (c.peek().kind == Token::Kind::Ident && c.peek().text == "R") sig.base_arity = parse_power(c, "R");
      c.expect_end();
      set.predicates.push_back(sig);
    } else if (kw == "freeconst" || kw == "skolem") {
      if (kw == "skolem" && set.mode == Mode::BD)
        throw FragmentError(std::to_string(ln + 1) + ":1: Skolem constants are not allowed in mode bd");
      if (c.at_end()) c.fail("expected at least one name");
      while (!c.at_end()) {
        const std::string name = c.ident("a constant name");
        declare(c, name, kw == "skolem" ? "Skolem constant" : "free constant");
        (kw == "skolem" ? set.skolems : set.free_constants).push_back(name);
        c.accept(",");
      }
    } else if (kw == "clause") {
      clause_seen = true;
      Clause cl;
      ClauseScope sc{set, cl, {}, {}};
      parse_list(c, [&] { cl.constraints.push_back(parse_constraint(c, sc)); });
      parse_list(c, [&] { cl.premises.push_back(parse_atom(c, sc)); });
      c.expect("->");
      parse_list(c, [&] { cl.conclusions.push_back(parse_atom(c, sc)); });
      c.expect_end();
      set.clauses.push_back(std::move(cl));
    } else {
      throw ParseError(ln + 1, 1, "unknown keyword '" + kw + "'");
    }
  }
  check_bd_guards(set);
  return set;
}

std::string print_ground_term(const ClauseSet& set, const GroundTerm& t) {
  std::string s;
  bool first = true;
  for (const auto& [d, k] : t.coeffs) {
    s += coeff_text(k, set.skolems.at(d), first);
    first = false;
  }
  if (first) return rat_text(t.offset);
  if (!t.offset.is_zero()) s += (t.offset.sign() < 0 ? " - " : " + ") + rat_text(t.offset.abs());
  return s;
}

std::string print_constraint(const ClauseSet& set, const Clause& cl, const Constraint& c) {
  return std::visit(
      [&](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, VarConst>) {
          return cl.base_vars[a.x] + " " + std::string(to_string(a.rel)) + " " + print_ground_term(set, a.bound);
        } else if constexpr (std::is_same_v<T, VarVar>) {
          return cl.base_vars[a.x] + " " + std::string(to_string(a.rel)) + " " + cl.base_vars[a.y];
        } else if constexpr (std::is_same_v<T, DiffConst>) {
          return cl.base_vars[a.x] + " - " + cl.base_vars[a.y] + " " + std::string(to_string(a.rel)) + " " +
                 rat_text(a.c);
        } else if constexpr (std::is_same_v<T, GroundCmp>) {
          return print_ground_term(set, a.lhs) + " " + std::string(to_string(a.rel)) + " " +
                 print_ground_term(set, a.rhs);
        } else if constexpr (std::is_same_v<T, SkolemDef>) {
          if (a.rel == Rel::NE) return "def " + set.skolems.at(a.d) + " != " + print_ground_term(set, a.t);
          return set.skolems.at(a.d) + " " + std::string(to_string(a.rel)) + " " + print_ground_term(set, a.t);
        } else {
          std::string s;
          bool first = true;
          for (const auto& [x, k] : a.coeffs) {
            s += coeff_text(k, cl.base_vars[x], first);
            first = false;
          }
          if (!a.constant.is_zero() || first)
            s += first ? rat_text(a.constant)
                       : (a.constant.sign() < 0 ? " - " : " + ") + rat_text(a.constant.abs());
          return s + " " + std::string(to_string(a.rel)) + " 0";
        }
      },
      c);
}

namespace {

std::string free_text(const ClauseSet& set, const Clause& cl, const FreeTerm& t) {
  return t.is_var() ? cl.free_vars[t.id] : set.free_constants.at(t.id);
}

std::string atom_text(const ClauseSet& set, const Clause& cl, const FreeAtom& a) {
  if (const auto* e = std::get_if<Equation>(&a)) return free_text(set, cl, e->lhs) + " ~ " + free_text(set, cl, e->rhs);
  const auto& p = std::get<PredAtom>(a);
  std::string s = set.predicates.at(p.pred).name + "(";
  bool first = true;
  for (const auto& t : p.free_args) {
    s += (first ? "" : ", ") + free_text(set, cl, t);
    first = false;
  }
  for (VarId x : p.base_args) {
    s += (first ? "" : ", ") + cl.base_vars[x];
    first = false;
  }
  return s + ")";
}

}  // namespace

std::string print_clause(const ClauseSet& set, const Clause& cl) {
  std::string s = "clause [";
  for (std::size_t i = 0; i < cl.constraints.size(); ++i)
    s += (i ? "; " : "") + print_constraint(set, cl, cl.constraints[i]);
  s += "] [";
  for (std::size_t i = 0; i < cl.premises.size(); ++i) s += (i ? "; " : "") + atom_text(set, cl, cl.premises[i]);
  s += "] -> [";
  for (std::size_t i = 0; i < cl.conclusions.size(); ++i)
    s += (i ? "; " : "") + atom_text(set, cl, cl.conclusions[i]);
  return s + "]";
}

std::string print_clause_set(const ClauseSet& set) {
  std::ostringstream os;
  os << "mode " << to_string(set.mode) << "\n";
  for (const auto& p : set.predicates) os << "pred " << p.name << " : S^" << p.free_arity << " R^" << p.base_arity << "\n";
  if (!set.free_constants.empty()) {
    os << "freeconst";
    for (const auto& f : set.free_constants) os << " " << f;
    os << "\n";
  }
  if (!set.skolems.empty()) {
    os << "skolem";
    for (const auto& d : set.skolems) os << " " << d;
    os << "\n";
  }
  for (const auto& cl : set.clauses) os << print_clause(set, cl) << "\n";
  return os.str();
}

namespace {

ClockConstraint parse_cc(Cursor& c, const TimedAutomaton& a) {
  ClockConstraint cc;
  if (c.peek().kind == Token::Kind::Ident && c.peek().text == "true") {
    c.next();
    return cc;
  }
  auto clock = [&]() {
    const std::size_t col = c.col();
    const std::string name = c.ident("a clock");
    auto id = a.find_clock(name);
    if (!id) throw ParseError(c.line(), col, "unknown clock '" + name + "'");
    return *id;
  };
  do {
    ClockAtom at{};
    at.x = clock();
    if (c.accept("-")) at.y = clock();
    auto rel = accept_rel(c);
    if (!rel) c.fail("expected a relation");
    at.rel = *rel;
    const bool neg = c.accept("-");
    if (c.peek().kind != Token::Kind::Number) c.fail("expected an integer constant");
    const std::size_t col = c.col();
    Rational k = Rational::parse(c.next().text);
    if (!k.is_integer()) throw ParseError(c.line(), col, "non-integer constant " + k.to_string() + " in clock constraint");
    at.c = to_int64(k.numerator()) * (neg ? -1 : 1);
    cc.atoms.push_back(at);
  } while (c.accept("&&"));
  return cc;
}

}  // namespace

TimedAutomaton parse_ta(std::string_view text) {
  TimedAutomaton a;
  bool has_init = false, clocks_seen = false;
  struct PendingTrans {
    std::size_t line, col_from, col_to;
    std::string from, to;
    Transition t;
  };
  const auto lines = split_lines(text);
  std::vector<PendingTrans> pending;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    Cursor c(lex(lines[ln], ln + 1), ln + 1);
    if (c.at_end()) continue;
    const std::string kw = c.ident("clocks, loc or trans");
    if (kw == "clocks") {
      if (clocks_seen) c.fail("clocks declared twice");
      clocks_seen = true;
      while (!c.at_end()) {
        const std::string x = c.ident("a clock name");
        if (a.find_clock(x)) c.fail("clock '" + x + "' declared twice");
        a.clocks.push_back(x);
        c.accept(",");
      }
      if (a.clocks.empty()) c.fail("at least one clock is required");
    } else if (kw == "loc") {
      if (!clocks_seen) c.fail("clocks must be declared before locations");
      const std::string l = c.ident("a location name");
      if (a.find_location(l)) c.fail("location '" + l + "' declared twice");
      a.locations.push_back(l);
      a.invariants.emplace_back();
      if (c.peek().kind == Token::Kind::Ident && c.peek().text == "init") {
        c.next();
        if (has_init) c.fail("second initial location");
        has_init = true;
        a.initial = static_cast<LocId>(a.locations.size() - 1);
      }
      if (c.peek().kind == Token::Kind::Ident && c.peek().text == "inv") {
        c.next();
        a.invariants.back() = parse_cc(c, a);
      }
      c.expect_end();
    } else if (kw == "trans") {
      if (!clocks_seen) c.fail("clocks must be declared before transitions");
      PendingTrans p;
      p.line = ln + 1;
      p.col_from = c.col();
      p.from = c.ident("a source location");
      c.expect("->");
      p.col_to = c.col();
      p.to = c.ident("a target location");
      if (c.peek().kind == Token::Kind::Ident && c.peek().text == "guard") {
        c.next();
        p.t.guard = parse_cc(c, a);
      }
      if (c.peek().kind == Token::Kind::Ident && c.peek().text == "reset") {
        c.next();
        c.expect("{");
        while (!c.accept("}")) {
          const std::size_t col = c.col();
          const std::string x = c.ident("a clock");
          auto id = a.find_clock(x);
          if (!id) throw ParseError(ln + 1, col, "unknown clock '" + x + "' in reset");
          p.t.resets.push_back(*id);
          c.accept(",");
        }
      }
      c.expect_end();
      pending.push_back(std::move(p));
    } else {
      throw ParseError(ln + 1, 1, "unknown keyword '" + kw + "'");
    }
  }
  if (a.locations.empty()) throw ParseError(lines.size(), 1, "automaton has no locations");
  if (!has_init) throw ParseError(lines.size(), 1, "no initial location");
  for (auto& p : pending) {
    auto f = a.find_location(p.from), t = a.find_location(p.to);
    if (!f) throw ParseError(p.line, p.col_from, "unknown location '" + p.from + "'");
    if (!t) throw ParseError(p.line, p.col_to, "unknown location '" + p.to + "'");
    p.t.from = *f;
    p.t.to = *t;
    a.transitions.push_back(std::move(p.t));
  }
  return a;
}

std::string print_clock_constraint(const TimedAutomaton& a, const ClockConstraint& cc) {
  if (cc.atoms.empty()) return "true";
  std::string s;
  for (std::size_t i = 0; i < cc.atoms.size(); ++i) {
    const auto& at = cc.atoms[i];
    if (i) s += " && ";
    s += a.clocks[at.x];
    if (at.y) s += " - " + a.clocks[*at.y];
    s += " " + std::string(to_string(at.rel)) + " " + std::to_string(at.c);
  }
  return s;
}

std::string print_ta(const TimedAutomaton& a) {
  std::ostringstream os;
  os << "clocks";
  for (const auto& x : a.clocks) os << " " << x;
  os << "\n";
  for (LocId l = 0; l < a.locations.size(); ++l) {
    os << "loc " << a.locations[l];
    if (l == a.initial) os << " init";
    if (!a.invariants[l].atoms.empty()) os << " inv " << print_clock_constraint(a, a.invariants[l]);
    os << "\n";
  }
  for (const auto& t : a.transitions) {
    os << "trans " << a.locations[t.from] << " -> " << a.locations[t.to] << " guard "
       << print_clock_constraint(a, t.guard) << " reset {";
    for (std::size_t i = 0; i < t.resets.size(); ++i) os << (i ? " " : "") << a.clocks[t.resets[i]];
    os << "}\n";
  }
  return os.str();
}

ReachQuery parse_goal(const TimedAutomaton& a, std::string_view goal) {
  const auto colon = goal.find(':');
  Cursor c(lex(goal.substr(0, colon), 1), 1);
  const std::string loc = c.ident("a location");
  c.expect_end();
  auto l = a.find_location(loc);
  if (!l) throw ParseError(1, 1, "unknown location '" + loc + "' in goal");
  ReachQuery q{*l, {}};
  if (colon != std::string_view::npos) {
    Cursor cc(lex(goal.substr(colon + 1), 1), 1);
    q.goal = parse_cc(cc, a);
    cc.expect_end();
  }
  return q;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace bsrbd
