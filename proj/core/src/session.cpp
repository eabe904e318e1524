#include "regalia/session.hpp"

#include "regalia/ainvariants.hpp"
#include "regalia/checks.hpp"
#include "regalia/complexes.hpp"
#include "regalia/functors.hpp"
#include "regalia/graded_module.hpp"
#include "regalia/hilbert.hpp"
#include "regalia/homology.hpp"
#include "regalia/ideal.hpp"
#include "regalia/parse.hpp"
#include "regalia/reports.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace regalia {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

struct GenList {
  std::vector<std::string> texts;
  std::vector<size_t> offsets;  // absolute offset of each generator's text
};

struct ArgExpr {
  enum class Kind { name, quotient_name, quotient_gens, forms };
  Kind kind = Kind::name;
  std::string a;      // name, or the ring name of a quotient
  std::string b;      // ideal name (quotient_name)
  GenList gens;       // quotient_gens / forms
  size_t offset = 0;  // where the argument starts
  std::string text;   // normalized rendering for report inputs
};

struct Stmt {
  enum class Kind {
    ring_poly,
    ring_quotient,
    ideal_decl,
    module_cyclic_name,
    module_cyclic_gens,
    module_free,
    setting,
    command,
  };
  Kind kind = Kind::command;
  size_t offset = 0;

  std::string name;  // declared name / setting key / command verb
  // ring_poly
  bool rational = true;
  long long p = 0;
  int nvars = 0;
  // ring_quotient, module decls, ideal_decl
  std::string base;        // base ring name
  std::string ideal_name;  // module_cyclic_name
  GenList gens;
  std::string in_ring;       // ideal_decl: explicit "in R" (empty = last ring)
  std::vector<int> twists;   // module_free
  // setting
  long long ival = 0;
  int wlo = 0, whi = 0;
  // command
  std::string theorem;  // verify only
  std::vector<ArgExpr> args;
  std::map<std::string, long long> int_flags;
  std::vector<std::pair<std::string, bool>> asserts;
};

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Fail {
  size_t offset;
  std::string message;
};

struct Token {
  enum class Kind { ident, integer, flag, punct, end };
  Kind kind = Kind::end;
  std::string text;
  size_t offset = 0;
  long long value = 0;
};

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  const Token& peek() {
    if (!cached_) {
      lex();
      cached_ = true;
    }
    return tok_;
  }

  Token next() {
    Token t = peek();
    cached_ = false;
    pos_ = after_;
    return t;
  }

  bool at_end() { return peek().kind == Token::Kind::end; }

  bool peek_punct(const std::string& p) {
    const Token& t = peek();
    return t.kind == Token::Kind::punct && t.text == p;
  }

  bool accept_punct(const std::string& p) {
    if (!peek_punct(p)) return false;
    next();
    return true;
  }

  void expect_punct(const std::string& p, const std::string& where) {
    if (!accept_punct(p))
      throw Fail{peek().offset, "expected '" + p + "' " + where};
  }

  std::string expect_ident(const std::string& what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident)
      throw Fail{t.offset, "expected " + what};
    return next().text;
  }

  /// Integer with an optional leading minus sign.
  long long expect_int(const std::string& what) {
    bool negative = false;
    if (peek_punct("-")) {
      next();
      negative = true;
    }
    const Token& t = peek();
    if (t.kind != Token::Kind::integer)
      throw Fail{t.offset, "expected " + what};
    long long v = next().value;
    return negative ? -v : v;
  }

  /// Raw capture of a parenthesized, comma-separated generator list.  The
  /// opening '(' must already be consumed; nested parentheses are respected
  /// (the polynomial syntax allows them).  Consumes the closing ')'.
  GenList capture_gens() {
    GenList out;
    size_t start = pos_;
    size_t seg_start = start;
    int depth = 1;
    size_t i = start;
    for (; i < s_.size(); ++i) {
      char c = s_[i];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        --depth;
        if (depth == 0) break;
      } else if (c == ',' && depth == 1) {
        push_segment(out, seg_start, i);
        seg_start = i + 1;
      } else if (c == ';') {
        throw Fail{i, "';' inside a generator list (missing ')')"};
      }
    }
    if (i >= s_.size()) throw Fail{start, "unterminated generator list"};
    push_segment(out, seg_start, i);
    // "()" means the empty list; a blank segment next to a comma is an error.
    if (out.texts.size() == 1 && out.texts[0].empty()) {
      out.texts.clear();
      out.offsets.clear();
    }
    for (size_t k = 0; k < out.texts.size(); ++k)
      if (out.texts[k].empty())
        throw Fail{out.offsets[k], "empty generator"};
    pos_ = i + 1;
    cached_ = false;
    return out;
  }

  /// Error recovery: skip past the next top-level ';'.
  void synchronize() {
    cached_ = false;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      ++pos_;
      if (c == ';') return;
      if (c == '#')
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
    }
  }

  size_t position() { return peek().offset; }

 private:
  void push_segment(GenList& out, size_t from, size_t to) {
    while (from < to && std::isspace(static_cast<unsigned char>(s_[from]))) ++from;
    while (to > from && std::isspace(static_cast<unsigned char>(s_[to - 1]))) --to;
    out.texts.push_back(s_.substr(from, to - from));
    out.offsets.push_back(from);
  }

  void lex() {
    size_t i = pos_;
    while (i < s_.size()) {
      char c = s_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '#') {
        while (i < s_.size() && s_[i] != '\n') ++i;
      } else {
        break;
      }
    }
    tok_ = Token{};
    tok_.offset = i;
    if (i >= s_.size()) {
      tok_.kind = Token::Kind::end;
      after_ = i;
      return;
    }
    char c = s_[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) ||
                               s_[j] == '_'))
        ++j;
      tok_.kind = Token::Kind::ident;
      tok_.text = s_.substr(i, j - i);
      after_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_.kind = Token::Kind::integer;
      tok_.text = s_.substr(i, j - i);
      try {
        tok_.value = std::stoll(tok_.text);
      } catch (const std::out_of_range&) {
        throw Fail{i, "integer literal out of range"};
      }
      after_ = j;
      return;
    }
    if (c == '-' && i + 1 < s_.size() && s_[i + 1] == '-') {
      size_t j = i + 2;
      size_t name_start = j;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) ||
                               s_[j] == '_'))
        ++j;
      if (j == name_start) throw Fail{i, "expected a flag name after '--'"};
      tok_.kind = Token::Kind::flag;
      tok_.text = s_.substr(name_start, j - name_start);
      after_ = j;
      return;
    }
    if (c == '.' && i + 1 < s_.size() && s_[i + 1] == '.') {
      tok_.kind = Token::Kind::punct;
      tok_.text = "..";
      after_ = i + 2;
      return;
    }
    static const std::string kSingle = "()=,/;-";
    if (kSingle.find(c) != std::string::npos) {
      tok_.kind = Token::Kind::punct;
      tok_.text = std::string(1, c);
      after_ = i + 1;
      return;
    }
    throw Fail{i, std::string("unexpected character '") + c + "'"};
  }

  const std::string& s_;
  size_t pos_ = 0;
  size_t after_ = 0;
  bool cached_ = false;
  Token tok_;
};

// ---------------------------------------------------------------------------
// Vocabulary
// ---------------------------------------------------------------------------

const std::set<std::string>& verbs() {
  static const std::set<std::string> v = {"betti",     "reg",   "ainv",
                                          "tor",       "frobenius", "power",
                                          "saturate",  "kahler",    "verify"};
  return v;
}

const std::set<std::string>& theorem_ids() {
  static const std::set<std::string> v = {
      "regfpd", "regtor",        "rigidity",  "frobenius", "power1", "power2",
      "koszul", "nonacyclic",    "betti_transfer", "intersect", "kahler"};
  return v;
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> v = [] {
    std::set<std::string> r = {"ring", "ideal", "module", "window", "seed",
                               "cap",  "cmd",   "in",     "poly",   "free",
                               "QQ",   "GF",    "true",   "false"};
    r.insert(verbs().begin(), verbs().end());
    return r;
  }();
  return v;
}

/// Allowed integer flags and assertion names per command.  The key is the
/// verb, or "verify <theorem>" for verify commands.
struct CmdVocab {
  std::set<std::string> int_flags;
  std::set<std::string> assert_names;
};

const std::map<std::string, CmdVocab>& command_vocab() {
  static const std::map<std::string, CmdVocab> v = {
      {"betti", {{"cap"}, {}}},
      {"reg", {{"cap"}, {}}},
      {"ainv", {{}, {}}},
      {"tor", {{"imax", "cap"}, {}}},
      {"frobenius", {{"emax"}, {}}},
      {"power", {{"mmax"}, {}}},
      {"saturate", {{}, {}}},
      {"kahler", {{}, {}}},
      {"verify regfpd", {{"cap"}, {}}},
      {"verify regtor", {{"cap"}, {}}},
      {"verify rigidity", {{"cap"}, {}}},
      {"verify frobenius", {{"emax"}, {"equidimensional"}}},
      {"verify power1", {{"mmax"}, {}}},
      {"verify power2", {{"jmax"}, {"generically_ci"}}},
      {"verify koszul", {{}, {}}},
      {"verify nonacyclic", {{}, {}}},
      {"verify betti_transfer", {{"imax", "cap"}, {}}},
      {"verify intersect",
       {{}, {"proper", "local_cm", "small_singular_intersection"}}},
      {"verify kahler",
       {{}, {"generically_ci", "generically_reduced", "reduced_ci_off_points"}}},
  };
  return v;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Statement parsing
// ---------------------------------------------------------------------------

std::string render_gens(const GenList& g) {
  std::string out = "(";
  for (size_t i = 0; i < g.texts.size(); ++i) {
    if (i) out += ", ";
    out += g.texts[i];
  }
  return out + ")";
}

ArgExpr parse_arg(Cursor& cur) {
  ArgExpr arg;
  arg.offset = cur.position();
  if (cur.accept_punct("(")) {
    arg.kind = ArgExpr::Kind::forms;
    arg.gens = cur.capture_gens();
    arg.text = render_gens(arg.gens);
    return arg;
  }
  arg.a = cur.expect_ident("a declared name");
  if (cur.accept_punct("/")) {
    if (cur.accept_punct("(")) {
      arg.kind = ArgExpr::Kind::quotient_gens;
      arg.gens = cur.capture_gens();
      arg.text = arg.a + "/" + render_gens(arg.gens);
    } else {
      arg.kind = ArgExpr::Kind::quotient_name;
      arg.b = cur.expect_ident("an ideal name after '/'");
      arg.text = arg.a + "/" + arg.b;
    }
  } else {
    arg.kind = ArgExpr::Kind::name;
    arg.text = arg.a;
  }
  return arg;
}

void parse_command_tail(Cursor& cur, Stmt& st) {
  std::string vocab_key =
      st.name == "verify" ? "verify " + st.theorem : st.name;
  const CmdVocab& vocab = command_vocab().at(vocab_key);
  while (!cur.peek_punct(";") && !cur.at_end()) {
    const Token& t = cur.peek();
    if (t.kind == Token::Kind::flag) {
      size_t flag_off = t.offset;
      std::string flag = cur.next().text;
      cur.accept_punct("=");  // --cap=4 and --cap 4 both parse
      if (flag == "assert") {
        if (vocab.assert_names.empty())
          throw Fail{flag_off, "'" + vocab_key + "' takes no assertions"};
        while (true) {
          size_t name_off = cur.position();
          std::string name = cur.expect_ident("an assertion name");
          if (!vocab.assert_names.count(name))
            throw Fail{name_off, "unknown assertion '" + name + "' for '" +
                                     vocab_key + "'"};
          cur.expect_punct("=", "after the assertion name");
          size_t val_off = cur.position();
          std::string val = cur.expect_ident("'true' or 'false'");
          if (val != "true" && val != "false")
            throw Fail{val_off, "expected 'true' or 'false'"};
          st.asserts.emplace_back(name, val == "true");
          if (!cur.accept_punct(",")) break;
        }
      } else if (vocab.int_flags.count(flag)) {
        st.int_flags[flag] = cur.expect_int("an integer after --" + flag);
      } else {
        throw Fail{flag_off, "unknown flag '--" + flag + "' for '" + vocab_key + "'"};
      }
    } else {
      st.args.push_back(parse_arg(cur));
    }
  }
}

Stmt parse_statement(Cursor& cur) {
  Stmt st;
  st.offset = cur.position();
  size_t kw_off = cur.position();
  std::string kw = cur.expect_ident("a statement keyword");

  auto expect_fresh_name = [&](const std::string& what) {
    size_t off = cur.position();
    std::string name = cur.expect_ident(what);
    if (reserved_words().count(name))
      throw Fail{off, "'" + name + "' is a reserved word"};
    return name;
  };

  if (kw == "ring") {
    st.name = expect_fresh_name("a ring name");
    cur.expect_punct("=", "after the ring name");
    size_t rhs_off = cur.position();
    std::string head = cur.expect_ident("'poly' or a ring name");
    if (head == "poly") {
      st.kind = Stmt::Kind::ring_poly;
      cur.expect_punct("(", "after 'poly'");
      size_t field_off = cur.position();
      std::string field = cur.expect_ident("'QQ' or 'GF'");
      if (field == "QQ") {
        st.rational = true;
      } else if (field == "GF") {
        st.rational = false;
        cur.expect_punct("(", "after 'GF'");
        size_t p_off = cur.position();
        st.p = cur.expect_int("a prime");
        if (!is_prime(st.p))
          throw Fail{p_off, std::to_string(st.p) + " is not prime"};
        cur.expect_punct(")", "after the prime");
      } else {
        throw Fail{field_off, "unknown field '" + field + "' (use QQ or GF(p))"};
      }
      cur.expect_punct(",", "between field and variable count");
      size_t n_off = cur.position();
      long long n = cur.expect_int("the number of variables");
      if (n < 1) throw Fail{n_off, "the number of variables must be positive"};
      st.nvars = static_cast<int>(n);
      cur.expect_punct(")", "after the variable count");
    } else {
      st.kind = Stmt::Kind::ring_quotient;
      st.base = head;
      if (!cur.accept_punct("/"))
        throw Fail{rhs_off, "expected poly(...) or <ring>/(generators)"};
      cur.expect_punct("(", "before the quotient generators");
      st.gens = cur.capture_gens();
    }
    return st;
  }

  if (kw == "ideal") {
    st.kind = Stmt::Kind::ideal_decl;
    st.name = expect_fresh_name("an ideal name");
    cur.expect_punct("=", "after the ideal name");
    cur.expect_punct("(", "before the ideal generators");
    st.gens = cur.capture_gens();
    if (cur.peek().kind == Token::Kind::ident && cur.peek().text == "in") {
      cur.next();
      st.in_ring = cur.expect_ident("a ring name after 'in'");
    }
    return st;
  }

  if (kw == "module") {
    st.name = expect_fresh_name("a module name");
    cur.expect_punct("=", "after the module name");
    size_t rhs_off = cur.position();
    std::string head = cur.expect_ident("'free' or a ring name");
    if (head == "free") {
      st.kind = Stmt::Kind::module_free;
      cur.expect_punct("(", "after 'free'");
      st.base = cur.expect_ident("a ring name");
      while (cur.accept_punct(","))
        st.twists.push_back(static_cast<int>(cur.expect_int("a twist")));
      cur.expect_punct(")", "after the twists");
      if (st.twists.empty()) st.twists.push_back(0);
      return st;
    }
    st.base = head;
    if (!cur.accept_punct("/"))
      throw Fail{rhs_off, "expected free(...) or <ring>/<ideal>"};
    if (cur.accept_punct("(")) {
      st.kind = Stmt::Kind::module_cyclic_gens;
      st.gens = cur.capture_gens();
    } else {
      st.kind = Stmt::Kind::module_cyclic_name;
      st.ideal_name = cur.expect_ident("an ideal name after '/'");
    }
    return st;
  }

  if (kw == "window") {
    st.kind = Stmt::Kind::setting;
    st.name = "window";
    st.wlo = static_cast<int>(cur.expect_int("the window lower bound"));
    cur.expect_punct("..", "between the window bounds");
    size_t hi_off = cur.position();
    st.whi = static_cast<int>(cur.expect_int("the window upper bound"));
    if (st.whi < st.wlo) throw Fail{hi_off, "window upper bound below lower bound"};
    return st;
  }

  if (kw == "seed") {
    st.kind = Stmt::Kind::setting;
    st.name = "seed";
    st.ival = cur.expect_int("the seed");
    return st;
  }

  if (kw == "cap") {
    st.kind = Stmt::Kind::setting;
    st.name = "cap";
    size_t off = cur.position();
    st.ival = cur.expect_int("the resolution cap");
    if (st.ival < -1) throw Fail{off, "the cap must be >= -1"};
    return st;
  }

  std::string verb = kw;
  size_t verb_off = kw_off;
  if (verb == "cmd") {
    verb_off = cur.position();
    verb = cur.expect_ident("a command verb");
  }
  if (!verbs().count(verb))
    throw Fail{verb_off, "unknown command '" + verb + "'"};
  st.kind = Stmt::Kind::command;
  st.name = verb;
  if (verb == "verify") {
    size_t th_off = cur.position();
    st.theorem = cur.expect_ident("a theorem id");
    if (!theorem_ids().count(st.theorem))
      throw Fail{th_off, "unknown theorem '" + st.theorem + "'"};
  }
  parse_command_tail(cur, st);
  return st;
}

// ---------------------------------------------------------------------------
// Elaboration
// ---------------------------------------------------------------------------

struct Env {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, GradedModule> modules;
  std::set<std::string> names;
  RingPtr last_ring;
};

std::string strip_offset_suffix(const std::string& what) {
  size_t pos = what.rfind(" (at offset ");
  return pos == std::string::npos ? what : what.substr(0, pos);
}

Polynomial parse_gen(const RingPtr& ring, const std::string& text, size_t off,
                     bool require_homogeneous = true) {
  Polynomial f = [&] {
    try {
      return parse_polynomial(ring, text);
    } catch (const ParseError& e) {
      throw Fail{off + e.position(), strip_offset_suffix(e.what())};
    }
  }();
  if (require_homogeneous && !f.is_homogeneous()) {
    std::set<long long> degs;
    for (const Term& t : f.terms()) degs.insert(t.mono.degree());
    std::string list;
    for (long long d : degs) list += (list.empty() ? "" : ", ") + std::to_string(d);
    throw Fail{off, "inhomogeneous generator (term degrees " + list + ")"};
  }
  return f;
}

std::vector<Polynomial> parse_gens(const RingPtr& ring, const GenList& g) {
  std::vector<Polynomial> out;
  out.reserve(g.texts.size());
  for (size_t i = 0; i < g.texts.size(); ++i)
    out.push_back(parse_gen(ring, g.texts[i], g.offsets[i]));
  return out;
}

const RingPtr& lookup_ring(const Env& env, const std::string& name, size_t off) {
  auto it = env.rings.find(name);
  if (it == env.rings.end())
    throw Fail{off, "unknown ring '" + name + "'"};
  return it->second;
}

const Ideal& lookup_ideal(const Env& env, const std::string& name, size_t off) {
  auto it = env.ideals.find(name);
  if (it == env.ideals.end())
    throw Fail{off, "unknown ideal '" + name + "'"};
  return it->second;
}

void check_fresh(Env& env, const Stmt& st) {
  if (!env.names.insert(st.name).second)
    throw Fail{st.offset, "duplicate name '" + st.name + "'"};
}

void declare(Env& env, const Stmt& st) {
  switch (st.kind) {
    case Stmt::Kind::ring_poly: {
      check_fresh(env, st);
      CoefficientField k = st.rational ? CoefficientField::rationals()
                                       : CoefficientField::prime_field(st.p);
      RingPtr R = Ring::polynomial_ring(k, st.nvars);
      env.rings.emplace(st.name, R);
      env.last_ring = R;
      return;
    }
    case Stmt::Kind::ring_quotient: {
      check_fresh(env, st);
      const RingPtr& base = lookup_ring(env, st.base, st.offset);
      if (!base->is_polynomial_ring())
        throw Fail{st.offset,
                   "the base of a quotient must be a polynomial ring"};
      RingPtr S = [&] {
        try {
          return Ring::quotient_ring(base, parse_gens(base, st.gens));
        } catch (const Fail&) {
          throw;
        } catch (const std::exception& e) {
          throw Fail{st.offset, e.what()};
        }
      }();
      env.rings.emplace(st.name, S);
      env.last_ring = S;
      return;
    }
    case Stmt::Kind::ideal_decl: {
      check_fresh(env, st);
      RingPtr ring;
      if (!st.in_ring.empty()) {
        ring = lookup_ring(env, st.in_ring, st.offset);
      } else if (env.last_ring) {
        ring = env.last_ring;
      } else {
        throw Fail{st.offset, "no ring declared before ideal '" + st.name + "'"};
      }
      try {
        env.ideals.emplace(st.name, Ideal(ring, parse_gens(ring, st.gens)));
      } catch (const Fail&) {
        throw;
      } catch (const std::exception& e) {
        throw Fail{st.offset, e.what()};
      }
      return;
    }
    case Stmt::Kind::module_cyclic_name: {
      check_fresh(env, st);
      const RingPtr& ring = lookup_ring(env, st.base, st.offset);
      const Ideal& I = lookup_ideal(env, st.ideal_name, st.offset);
      if (!same_ring(I.ring(), ring))
        throw Fail{st.offset, "ideal '" + st.ideal_name +
                                  "' is declared over a different ring"};
      env.modules.emplace(st.name, GradedModule::cyclic(I));
      return;
    }
    case Stmt::Kind::module_cyclic_gens: {
      check_fresh(env, st);
      const RingPtr& ring = lookup_ring(env, st.base, st.offset);
      try {
        env.modules.emplace(
            st.name, GradedModule::cyclic(Ideal(ring, parse_gens(ring, st.gens))));
      } catch (const Fail&) {
        throw;
      } catch (const std::exception& e) {
        throw Fail{st.offset, e.what()};
      }
      return;
    }
    case Stmt::Kind::module_free: {
      check_fresh(env, st);
      const RingPtr& ring = lookup_ring(env, st.base, st.offset);
      env.modules.emplace(st.name,
                          GradedModule::free_module(FreeModule{ring, st.twists}));
      return;
    }
    default:
      return;
  }
}

/// The ring viewed as a module over its ambient polynomial ring (identity
/// for polynomial rings): the natural meaning of a ring name in module
/// position, e.g. `reg S`.
GradedModule ring_as_module(const RingPtr& ring) {
  GradedModule unit = GradedModule::free_module(FreeModule{ring, {0}});
  return ring->is_polynomial_ring() ? unit : restrict_to_ambient(unit);
}

GradedModule resolve_module(const Env& env, const ArgExpr& arg) {
  switch (arg.kind) {
    case ArgExpr::Kind::name: {
      auto mit = env.modules.find(arg.a);
      if (mit != env.modules.end()) return mit->second;
      auto rit = env.rings.find(arg.a);
      if (rit != env.rings.end()) return ring_as_module(rit->second);
      throw Fail{arg.offset, "unknown module or ring '" + arg.a + "'"};
    }
    case ArgExpr::Kind::quotient_name: {
      const RingPtr& ring = lookup_ring(env, arg.a, arg.offset);
      const Ideal& I = lookup_ideal(env, arg.b, arg.offset);
      if (!same_ring(I.ring(), ring))
        throw Fail{arg.offset,
                   "ideal '" + arg.b + "' is declared over a different ring"};
      return GradedModule::cyclic(I);
    }
    case ArgExpr::Kind::quotient_gens: {
      const RingPtr& ring = lookup_ring(env, arg.a, arg.offset);
      try {
        return GradedModule::cyclic(Ideal(ring, parse_gens(ring, arg.gens)));
      } catch (const Fail&) {
        throw;
      } catch (const std::exception& e) {
        throw Fail{arg.offset, e.what()};
      }
    }
    case ArgExpr::Kind::forms:
      throw Fail{arg.offset, "expected a module argument, found a form list"};
  }
  throw Fail{arg.offset, "unresolvable module argument"};
}

// ---------------------------------------------------------------------------
// Resolved commands
// ---------------------------------------------------------------------------

struct ResolvedCmd {
  std::string verb;
  std::string theorem;
  std::string name;   // display name ("betti", "verify regtor")
  std::string input;  // rendered arguments
  std::vector<GradedModule> modules;
  std::vector<Ideal> ideals;
  std::vector<Polynomial> forms;
  RingPtr ring;  // kahler
  long long emax = 1, mmax = 2, jmax = 2, imax = 3;
  int cap = -1;
  FrobeniusAssertions frobenius_assertions;
  bool power2_gci = false;
  IntersectionAssertions intersection_assertions;
  KahlerAssertions kahler_assertions;
};

long long flag_or(const Stmt& st, const std::string& name, long long fallback) {
  auto it = st.int_flags.find(name);
  return it == st.int_flags.end() ? fallback : it->second;
}

void expect_args(const Stmt& st, size_t lo, size_t hi, const std::string& shape) {
  if (st.args.size() < lo || st.args.size() > hi)
    throw Fail{st.offset, "'" + (st.theorem.empty() ? st.name
                                                    : st.name + " " + st.theorem) +
                              "' expects " + shape};
}

ResolvedCmd resolve_command(const Env& env, const Stmt& st, int session_cap) {
  ResolvedCmd rc;
  rc.verb = st.name;
  rc.theorem = st.theorem;
  rc.name = st.theorem.empty() ? st.name : st.name + " " + st.theorem;
  {
    std::string input;
    for (size_t i = 0; i < st.args.size(); ++i) {
      if (i) input += ", ";
      input += st.args[i].text;
    }
    rc.input = input;
  }
  rc.cap = static_cast<int>(flag_or(st, "cap", session_cap));
  rc.emax = flag_or(st, "emax", 1);
  rc.mmax = flag_or(st, "mmax", 2);
  rc.jmax = flag_or(st, "jmax", 2);
  rc.imax = flag_or(st, "imax", 3);
  for (const char* f : {"emax", "mmax", "jmax", "imax"}) {
    auto it = st.int_flags.find(f);
    if (it != st.int_flags.end() && it->second < 0)
      throw Fail{st.offset, std::string("--") + f + " must be nonnegative"};
  }

  auto want_modules = [&](size_t lo, size_t hi, const std::string& shape) {
    expect_args(st, lo, hi, shape);
    for (const ArgExpr& a : st.args) rc.modules.push_back(resolve_module(env, a));
  };
  auto want_ideals = [&](size_t lo, size_t hi, const std::string& shape) {
    expect_args(st, lo, hi, shape);
    for (const ArgExpr& a : st.args) {
      if (a.kind != ArgExpr::Kind::name)
        throw Fail{a.offset, "expected a declared ideal name"};
      rc.ideals.push_back(lookup_ideal(env, a.a, a.offset));
    }
  };
  auto want_module_and_forms = [&](const std::string& shape) {
    expect_args(st, 2, 2, shape);
    if (st.args[1].kind != ArgExpr::Kind::forms)
      throw Fail{st.args[1].offset, "expected a parenthesized form list"};
    rc.modules.push_back(resolve_module(env, st.args[0]));
    const RingPtr& ring = rc.modules[0].ring();
    for (size_t i = 0; i < st.args[1].gens.texts.size(); ++i) {
      Polynomial f = parse_gen(ring, st.args[1].gens.texts[i],
                               st.args[1].gens.offsets[i]);
      if (f.is_zero())
        throw Fail{st.args[1].gens.offsets[i], "zero form"};
      rc.forms.push_back(std::move(f));
    }
  };

  const std::string& v = rc.verb;
  if (v == "betti" || v == "reg" || v == "ainv") {
    want_modules(1, 1, "one module argument");
  } else if (v == "tor") {
    want_modules(2, 8, "at least two module arguments");
  } else if (v == "frobenius") {
    want_modules(1, 1, "one module argument");
    if (rc.modules[0].ring()->field().characteristic() == 0)
      throw Fail{st.offset, "frobenius requires prime characteristic"};
  } else if (v == "power" || v == "saturate") {
    want_ideals(1, 1, "one ideal argument");
  } else if (v == "kahler") {
    expect_args(st, 1, 1, "one ring argument");
    if (st.args[0].kind != ArgExpr::Kind::name)
      throw Fail{st.args[0].offset, "expected a declared ring name"};
    rc.ring = lookup_ring(env, st.args[0].a, st.args[0].offset);
  } else if (v == "verify") {
    const std::string& t = rc.theorem;
    if (t == "regfpd") {
      want_modules(1, 1, "one module argument");
    } else if (t == "regtor" || t == "rigidity") {
      want_modules(2, 8, "at least two module arguments");
    } else if (t == "frobenius") {
      want_modules(1, 1, "one module argument");
      if (rc.modules[0].ring()->field().characteristic() == 0)
        throw Fail{st.offset, "verify frobenius requires prime characteristic"};
    } else if (t == "power1" || t == "power2") {
      want_ideals(1, 1, "one ideal argument");
    } else if (t == "koszul" || t == "nonacyclic") {
      want_module_and_forms("a module argument and a form list");
    } else if (t == "betti_transfer") {
      want_modules(1, 1, "one module argument");
    } else if (t == "intersect") {
      want_ideals(1, 8, "at least one ideal argument");
    } else if (t == "kahler") {
      expect_args(st, 1, 1, "one ring argument");
      if (st.args[0].kind != ArgExpr::Kind::name)
        throw Fail{st.args[0].offset, "expected a declared ring name"};
      rc.ring = lookup_ring(env, st.args[0].a, st.args[0].offset);
    }
  }

  for (const auto& [name, value] : st.asserts) {
    if (rc.theorem == "frobenius" && name == "equidimensional")
      rc.frobenius_assertions.equidimensional = value;
    else if (rc.theorem == "power2" && name == "generically_ci")
      rc.power2_gci = value;
    else if (rc.theorem == "intersect" && name == "proper")
      rc.intersection_assertions.proper = value;
    else if (rc.theorem == "intersect" && name == "local_cm")
      rc.intersection_assertions.local_cm = value;
    else if (rc.theorem == "intersect" && name == "small_singular_intersection")
      rc.intersection_assertions.small_singular_intersection = value;
    else if (rc.theorem == "kahler" && name == "generically_ci")
      rc.kahler_assertions.generically_ci = value;
    else if (rc.theorem == "kahler" && name == "generically_reduced")
      rc.kahler_assertions.generically_reduced = value;
    else if (rc.theorem == "kahler" && name == "reduced_ci_off_points")
      rc.kahler_assertions.reduced_ci_off_points = value;
  }
  return rc;
}

// ---------------------------------------------------------------------------
// Command execution
// ---------------------------------------------------------------------------

json extint_json(const ExtInt& v) {
  if (v.is_finite()) return json(v.value());
  return json(v.str());
}

/// Regularity of a possibly-zero module by duality; -inf for zero modules.
ExtInt module_reg(const GradedModule& M) {
  return a_invariants(M).reg();
}

/// Display window for one module: the session window when set, else
/// [indeg, reg + 2] so the stable range is visible.
std::pair<int, int> display_window(const std::optional<std::pair<int, int>>& w,
                                   const GradedModule& M) {
  if (w) return *w;
  if (M.is_zero()) return {0, -1};
  int lo = static_cast<int>(M.indeg().value());
  ExtInt reg = module_reg(M);
  int hi = reg.is_finite() ? static_cast<int>(reg.value()) + 2 : lo + 2;
  return {lo, std::max(lo, hi)};
}

json hf_pairs(const GradedModule& M, std::pair<int, int> w) {
  json out = json::array();
  for (int d = w.first; d <= w.second; ++d)
    out.push_back(json::array({d, M.hf(d)}));
  return out;
}

std::string render_report(const TheoremReport& r) {
  std::ostringstream o;
  for (const Hypothesis& h : r.hypotheses) {
    o << "  hyp  " << hyp_status_name(h.status);
    for (size_t pad = hyp_status_name(h.status).size(); pad < 9; ++pad) o << ' ';
    o << h.name;
    if (!h.note.empty()) o << "  -- " << h.note;
    o << "\n";
  }
  for (const Relation& rel : r.relations) {
    o << "  rel  " << (rel.satisfied ? "ok   " : "FAIL ") << rel.name << "  :  "
      << rel.lhs.str() << " " << rel.rel << " " << rel.rhs.str() << "\n";
  }
  o << "  verdict: " << verdict_name(r.verdict);
  if (r.counterexample_candidate) o << "  [counterexample candidate]";
  o << "\n";
  return o.str();
}

struct EffOptions {
  std::optional<std::pair<int, int>> window;
  int cap = -1;
  long long seed = 0;
};

CommandOutput execute_verify(const ResolvedCmd& rc, const EffOptions&) {
  TheoremReport rep;
  const std::string& t = rc.theorem;
  if (t == "regfpd") {
    rep = check_regfpd(rc.modules[0], rc.cap);
  } else if (t == "regtor") {
    rep = check_regtor(rc.modules, rc.cap);
  } else if (t == "rigidity") {
    rep = check_rigidity_and_proper(rc.modules, rc.cap);
  } else if (t == "frobenius") {
    rep = check_frobenius_bound(rc.modules[0], static_cast<int>(rc.emax),
                                rc.frobenius_assertions);
  } else if (t == "power1") {
    rep = check_power_bound_cd1(rc.ideals[0], static_cast<int>(rc.mmax));
  } else if (t == "power2") {
    rep = check_power_bound_dim2(rc.ideals[0], static_cast<int>(rc.jmax),
                                 rc.power2_gci);
  } else if (t == "koszul") {
    rep = check_koszul_bounds(rc.modules[0], rc.forms);
  } else if (t == "nonacyclic") {
    ChainComplex F = koszul_complex(rc.modules[0].ring(), rc.forms);
    rep = check_nonacyclic(F, rc.modules[0]);
  } else if (t == "betti_transfer") {
    rep = check_betti_transfer(rc.modules[0], static_cast<int>(rc.imax), rc.cap);
  } else if (t == "intersect") {
    rep = check_intersection_bound(rc.ideals, rc.intersection_assertions);
  } else if (t == "kahler") {
    rep = check_kahler_bounds(rc.ring, rc.kahler_assertions);
  } else {
    throw std::logic_error("unhandled theorem id " + t);
  }
  rep.input = rc.input;

  CommandOutput out;
  out.json = report_json(rep);
  out.human = render_report(rep);
  out.verdict = verdict_name(rep.verdict);
  out.violated = rep.verdict == Verdict::violated;
  return out;
}

CommandOutput execute_command(const ResolvedCmd& rc, const EffOptions& eff) {
  if (rc.verb == "verify") return execute_verify(rc, eff);

  CommandOutput out;
  json j;
  j["cmd"] = rc.verb;
  j["input"] = rc.input;
  std::ostringstream human;

  if (rc.verb == "betti") {
    const GradedModule& M = rc.modules[0];
    const Resolution& res = M.resolution(rc.cap);
    BettiTable b = M.betti(rc.cap);
    j["cap"] = rc.cap;
    j["truncated"] = res.truncated;
    j["pdim"] = extint_json(M.proj_dim(rc.cap));
    j["table"] = json::parse(betti_json(b));
    human << b.staircase();
    human << "  reg " << b.reg().str() << "   pdim " << M.proj_dim(rc.cap).str();
    if (res.truncated) human << "   (truncated at cap " << rc.cap << ")";
    human << "\n";
  } else if (rc.verb == "reg") {
    const GradedModule& M = rc.modules[0];
    ExtInt dual = regularity(M, RegRoute::duality);
    j["duality"] = extint_json(dual);
    try {
      ExtInt via_betti = regularity(M, RegRoute::betti);
      j["betti"] = extint_json(via_betti);
    } catch (const RouteUnavailable&) {
      j["betti"] = nullptr;
    }
    j["reg"] = extint_json(dual);
    human << "  reg " << dual.str() << "  (duality route";
    if (!j["betti"].is_null()) human << "; betti route agrees";
    human << ")\n";
  } else if (rc.verb == "ainv") {
    const GradedModule& M = rc.modules[0];
    AInvariants a = a_invariants(M);
    j["dim"] = extint_json(M.dim());
    j["depth"] = extint_json(a.depth());
    j["ainv"] = json::parse(ainvariants_json(a));
    human << "  a-invariants:";
    for (size_t i = 0; i < a.a.size(); ++i)
      human << "  a_" << i << " = " << a.a[i].str();
    human << "\n  reg " << a.reg().str() << "   depth " << a.depth().str()
          << "   dim " << M.dim().str() << "\n";
  } else if (rc.verb == "tor") {
    j["imax"] = rc.imax;
    json rows = json::array();
    human << "  Tor_i(" << rc.input << ")\n";
    for (long long i = 0; i <= rc.imax; ++i) {
      Subquotient T = tor_multi(rc.modules, static_cast<int>(i), rc.cap);
      json row;
      row["i"] = i;
      row["zero"] = T.is_zero();
      if (T.is_zero()) {
        row["hf"] = json::array();
        human << "    i = " << i << ": 0\n";
      } else {
        const GradedModule& TM = T.to_module();
        ExtInt reg = module_reg(TM);
        row["dim"] = extint_json(T.dim());
        row["indeg"] = extint_json(T.indeg());
        row["reg"] = extint_json(reg);
        std::pair<int, int> w = display_window(eff.window, TM);
        row["hf"] = hf_pairs(TM, w);
        human << "    i = " << i << ": dim " << T.dim().str() << ", reg "
              << reg.str() << ", hf";
        for (int d = w.first; d <= w.second; ++d)
          human << " " << TM.hf(d);
        human << "\n";
      }
      rows.push_back(std::move(row));
    }
    j["tor"] = std::move(rows);
  } else if (rc.verb == "frobenius") {
    const GradedModule& M = rc.modules[0];
    long long p = M.ring()->field().characteristic();
    j["p"] = p;
    j["emax"] = rc.emax;
    json rows = json::array();
    human << "  Frobenius powers, p = " << p << "\n";
    for (long long e = 0; e <= rc.emax; ++e) {
      GradedModule Fe = frobenius_power(M, static_cast<int>(e));
      AInvariants a = a_invariants(Fe);
      json row;
      row["e"] = e;
      long long q = 1;
      for (long long k = 0; k < e; ++k) q *= p;
      row["q"] = q;
      row["reg"] = extint_json(a.reg());
      row["ainv"] = json::parse(ainvariants_json(a));
      rows.push_back(std::move(row));
      human << "    e = " << e << " (q = " << q << "): reg " << a.reg().str()
            << "\n";
    }
    j["steps"] = std::move(rows);
  } else if (rc.verb == "power") {
    const Ideal& I = rc.ideals[0];
    j["mmax"] = rc.mmax;
    json rows = json::array();
    human << "  powers of " << rc.input << "\n";
    for (long long m = 1; m <= rc.mmax; ++m) {
      Ideal Im = ideal_power(I, static_cast<int>(m));
      GradedModule Q = GradedModule::cyclic(Im);
      AInvariants a = a_invariants(Q);
      json row;
      row["m"] = m;
      row["reg"] = extint_json(a.reg());
      row["ainv"] = json::parse(ainvariants_json(a));
      rows.push_back(std::move(row));
      human << "    m = " << m << ": reg(ring/I^m) = " << a.reg().str() << "\n";
    }
    j["steps"] = std::move(rows);
  } else if (rc.verb == "saturate") {
    const Ideal& I = rc.ideals[0];
    Ideal sat = saturation(I);
    j["already_saturated"] = ideal_equal(sat, I);
    json gens = json::array();
    human << "  saturation of " << rc.input << ":\n";
    for (const Polynomial& f : sat.gens()) {
      gens.push_back(f.str());
      human << "    " << f.str() << "\n";
    }
    j["gens"] = std::move(gens);
  } else if (rc.verb == "kahler") {
    KahlerModule K = kahler_module(rc.ring);
    AInvariants a = a_invariants(K.omega);
    json omega;
    omega["dim"] = extint_json(K.omega.dim());
    omega["ainv"] = json::parse(ainvariants_json(a));
    j["omega"] = std::move(omega);
    json kernel;
    kernel["zero"] = K.kernel.is_zero();
    kernel["dim"] = extint_json(K.kernel.dim());
    j["kernel"] = std::move(kernel);
    human << "  Kaehler differentials of " << rc.input << ": dim "
          << K.omega.dim().str() << ", reg " << a.reg().str()
          << "; conormal kernel " << (K.kernel.is_zero() ? "0" : "nonzero")
          << "\n";
  } else {
    throw std::logic_error("unhandled verb " + rc.verb);
  }

  out.json = j.dump();
  out.human = human.str();
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SessionSpec
// ---------------------------------------------------------------------------

struct SessionSpecImpl {
  std::string text;
  std::vector<size_t> line_starts;
  std::vector<Stmt> stmts;
  std::optional<std::pair<int, int>> window;
  std::optional<long long> seed;
  std::optional<int> cap;
  int ncommands = 0;

  SessionError locate(size_t offset, std::string message) const {
    size_t line =
        std::upper_bound(line_starts.begin(), line_starts.end(), offset) -
        line_starts.begin();  // 1-based line
    size_t col = offset - line_starts[line - 1] + 1;
    return SessionError{static_cast<int>(line), static_cast<int>(col),
                        std::move(message)};
  }
};

int SessionSpec::command_count() const { return impl_ ? impl_->ncommands : 0; }
std::optional<std::pair<int, int>> SessionSpec::window() const {
  return impl_ ? impl_->window : std::nullopt;
}
std::optional<long long> SessionSpec::seed() const {
  return impl_ ? impl_->seed : std::nullopt;
}
std::optional<int> SessionSpec::cap() const {
  return impl_ ? impl_->cap : std::nullopt;
}

std::string format_errors(const std::vector<SessionError>& errors) {
  std::ostringstream o;
  for (const SessionError& e : errors)
    o << "line " << e.line << ", column " << e.column << ": " << e.message
      << "\n";
  return o.str();
}

SessionSpec parse_session(const std::string& text) {
  auto impl = std::make_shared<SessionSpecImpl>();
  impl->text = text;
  impl->line_starts.push_back(0);
  for (size_t i = 0; i < text.size(); ++i)
    if (text[i] == '\n') impl->line_starts.push_back(i + 1);

  SessionSpec spec;
  Cursor cur(impl->text);
  while (true) {
    try {
      if (cur.at_end()) break;
      Stmt st = parse_statement(cur);
      cur.expect_punct(";", "at the end of the statement");
      impl->stmts.push_back(std::move(st));
    } catch (const Fail& f) {
      spec.errors_.push_back(impl->locate(f.offset, f.message));
      cur.synchronize();
    }
  }

  for (const Stmt& st : impl->stmts) {
    if (st.kind == Stmt::Kind::setting) {
      if (st.name == "window") impl->window = std::make_pair(st.wlo, st.whi);
      if (st.name == "seed") impl->seed = st.ival;
      if (st.name == "cap") impl->cap = static_cast<int>(st.ival);
    } else if (st.kind == Stmt::Kind::command) {
      ++impl->ncommands;
    }
  }

  // Validation pass: declarations and command resolution, in script order,
  // collecting located errors.  Commands only see names declared above them.
  Env env;
  int session_cap = impl->cap.value_or(-1);
  for (const Stmt& st : impl->stmts) {
    try {
      if (st.kind == Stmt::Kind::command)
        resolve_command(env, st, session_cap);
      else
        declare(env, st);
    } catch (const Fail& f) {
      spec.errors_.push_back(impl->locate(f.offset, f.message));
    }
  }

  spec.impl_ = std::move(impl);
  return spec;
}

// ---------------------------------------------------------------------------
// Running
// ---------------------------------------------------------------------------

struct SessionRunner {
  static SessionResult run(const SessionSpec& spec, const SessionOptions& opts) {
    SessionResult result;
    result.errors = spec.errors();
    if (!spec.ok() || !spec.impl_) return result;
    const SessionSpecImpl& impl = *spec.impl_;

    EffOptions eff;
    eff.window = opts.window ? opts.window : impl.window;
    eff.cap = opts.cap.value_or(impl.cap.value_or(-1));
    eff.seed = opts.seed.value_or(impl.seed.value_or(0));
    result.seed = eff.seed;

    Env env;
    for (const Stmt& st : impl.stmts)
      if (st.kind != Stmt::Kind::command && st.kind != Stmt::Kind::setting)
        declare(env, st);

    std::vector<const Stmt*> cmds;
    for (const Stmt& st : impl.stmts)
      if (st.kind == Stmt::Kind::command) cmds.push_back(&st);

    auto run_one = [&](int index) {
      const Stmt& st = *cmds[index];
      CommandOutput out;
      out.index = index;
      ResolvedCmd rc = resolve_command(env, st, eff.cap);
      out.name = rc.name;
      out.input = rc.input;
      try {
        CommandOutput body = execute_command(rc, eff);
        out.json = std::move(body.json);
        out.human = std::move(body.human);
        out.verdict = std::move(body.verdict);
        out.violated = body.violated;
      } catch (const std::exception& e) {
        out.failed = true;
        json j;
        j["cmd"] = rc.verb == "verify" ? rc.name : rc.verb;
        j["input"] = rc.input;
        j["error"] = e.what();
        out.json = j.dump();
        out.human = std::string("  error: ") + e.what() + "\n";
      }
      return out;
    };

    result.commands.resize(cmds.size());
    if (opts.parallel && cmds.size() > 1) {
      // The engine's caches are mutex-protected and all computations are
      // deterministic functions of their inputs, so commands can share the
      // environment; outputs are collected in script order.
      std::vector<std::future<CommandOutput>> futures;
      futures.reserve(cmds.size());
      for (int i = 0; i < static_cast<int>(cmds.size()); ++i)
        futures.push_back(std::async(std::launch::async, run_one, i));
      for (size_t i = 0; i < futures.size(); ++i)
        result.commands[i] = futures[i].get();
    } else {
      for (int i = 0; i < static_cast<int>(cmds.size()); ++i)
        result.commands[i] = run_one(i);
    }
    return result;
  }
};

SessionResult run_session(const SessionSpec& spec, const SessionOptions& opts) {
  return SessionRunner::run(spec, opts);
}

SessionResult run_session_text(const std::string& text, const SessionOptions& opts) {
  return run_session(parse_session(text), opts);
}

// ---------------------------------------------------------------------------
// SessionResult
// ---------------------------------------------------------------------------

namespace {

std::map<std::string, long long> verdict_counts(
    const std::vector<CommandOutput>& commands) {
  std::map<std::string, long long> counts = {
      {"holds", 0}, {"violated", 0}, {"vacuous", 0}, {"truncated", 0}};
  for (const CommandOutput& c : commands)
    if (!c.verdict.empty()) ++counts[c.verdict];
  return counts;
}

}  // namespace

std::string SessionResult::json_lines() const {
  std::ostringstream o;
  for (const CommandOutput& c : commands) o << c.json << "\n";
  json summary;
  summary["cmd"] = "summary";
  summary["commands"] = static_cast<long long>(commands.size());
  summary["seed"] = seed;
  long long failed_count = 0;
  for (const CommandOutput& c : commands) failed_count += c.failed ? 1 : 0;
  summary["failed"] = failed_count;
  json verdicts;
  for (const auto& [name, count] : verdict_counts(commands)) verdicts[name] = count;
  summary["verdicts"] = std::move(verdicts);
  o << summary.dump() << "\n";
  return o.str();
}

std::string SessionResult::summary() const {
  std::ostringstream o;
  if (!errors.empty()) {
    o << "== errors ==\n" << format_errors(errors);
    return o.str();
  }
  for (const CommandOutput& c : commands) {
    o << "[" << c.index << "] " << c.name;
    if (!c.input.empty()) o << " " << c.input;
    o << "\n" << c.human;
  }
  o << "== summary ==\n";
  long long failed_count = 0;
  for (const CommandOutput& c : commands) failed_count += c.failed ? 1 : 0;
  o << "commands: " << commands.size() << "   failed: " << failed_count
    << "   seed: " << seed << "\n";
  // Verdict table over the verify commands, theorem by theorem.
  std::map<std::string, std::map<std::string, long long>> table;
  for (const CommandOutput& c : commands)
    if (!c.verdict.empty()) ++table[c.name][c.verdict];
  if (!table.empty()) {
    o << "theorem                 holds  violated  vacuous  truncated\n";
    for (const auto& [name, row] : table) {
      std::string padded = name;
      if (padded.size() < 24) padded.resize(24, ' ');
      auto cell = [&](const char* k) {
        auto it = row.find(k);
        return it == row.end() ? 0LL : it->second;
      };
      o << padded << cell("holds") << "      " << cell("violated") << "         "
        << cell("vacuous") << "        " << cell("truncated") << "\n";
    }
  }
  return o.str();
}

int SessionResult::exit_code() const {
  if (!errors.empty()) return 2;
  for (const CommandOutput& c : commands)
    if (c.violated || c.failed) return 1;
  return 0;
}

}  // namespace regalia
