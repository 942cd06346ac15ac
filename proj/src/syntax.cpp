#include "ilc/syntax.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace ilc {

ParseError::ParseError(int line, int column, std::set<std::string> expected,
                       std::string found)
    : Error([&] {
        std::ostringstream os;
        os << "line " << line << ", column " << column << ": expected ";
        bool first = true;
        for (const auto& e : expected) {
          os << (first ? "" : ", ") << e;
          first = false;
        }
        if (expected.size() > 1) os << " (one of)";
        os << "; found " << found;
        return os.str();
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok {
  kIdent,
  kKeyword,  // inl inr roll unroll fun match inl! inr!
  kPunct,    // everything else, spelled in `text`
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool is_keyword(std::string_view w) {
  return w == "inl" || w == "inr" || w == "roll" || w == "unroll" ||
         w == "fun" || w == "match";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto starts = [&](std::string_view p) { return src.substr(i, p.size()) == p; };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (starts("--")) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int l = line, k = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_' || src[j] == '\'')) {
        ++j;
      }
      std::string word(src.substr(i, j - i));
      if ((word == "inl" || word == "inr") && j < src.size() && src[j] == '!') {
        word += '!';
        ++j;
      }
      advance(j - i);
      if (word == "_") {
        out.push_back({Tok::kPunct, word, l, k});
      } else {
        out.push_back(
            {is_keyword(word) || word.back() == '!' ? Tok::kKeyword
                                                    : Tok::kIdent,
             word, l, k});
      }
      continue;
    }
    static constexpr std::string_view kTwo[] = {"->", "=>", "~>", "()"};
    bool matched = false;
    for (std::string_view p : kTwo) {
      if (starts(p)) {
        out.push_back({Tok::kPunct, std::string(p), l, k});
        advance(p.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static constexpr std::string_view kOne = "(),{}|@~+-[]!";
    if (kOne.find(c) != std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, c), l, k});
      advance(1);
      continue;
    }
    throw ParseError(l, k, {"token"}, "'" + std::string(1, c) + "'");
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_slot)
      : toks_(lex(text)), allow_slot_(allow_slot) {}

  Term whole_term() {
    Term t = term();
    expect_end();
    return t;
  }

  Delta whole_delta() {
    Delta d = delta();
    expect_end();
    return d;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  // Records `what` as acceptable at the current position.
  bool at(std::string_view text) {
    note(std::string("'") + std::string(text) + "'");
    const Token& t = peek();
    return t.kind != Tok::kEnd && t.kind != Tok::kIdent && t.text == text;
  }

  bool at_ident() {
    note("identifier");
    return peek().kind == Tok::kIdent;
  }

  void note(std::string what) {
    if (pos_ > expected_pos_ || expected_.empty()) {
      if (pos_ > expected_pos_) expected_.clear();
      expected_pos_ = pos_;
    }
    if (pos_ == expected_pos_) expected_.insert(std::move(what));
  }

  [[noreturn]] void fail() {
    const Token& t = toks_[std::min(expected_pos_, toks_.size() - 1)];
    std::string found =
        t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, expected_, found);
  }

  void expect(std::string_view text) {
    if (!at(text)) fail();
    ++pos_;
  }

  std::string ident() {
    if (!at_ident()) fail();
    return toks_[pos_++].text;
  }

  void expect_end() {
    note("end of input");
    if (peek().kind != Tok::kEnd) fail();
  }

  // ---- terms ----

  Term term() {
    if (at("fun")) {
      ++pos_;
      std::string x = ident();
      expect("->");
      return Term::lam(std::move(x), term());
    }
    if (at("match")) {
      ++pos_;
      Term s = term();
      expect("{");
      if (at("(")) {
        ++pos_;
        std::string x1 = ident();
        expect(",");
        std::string x2 = ident();
        expect(")");
        expect("->");
        Term body = term();
        expect("}");
        if (x1 == x2) {
          const Token& t = peek();
          throw ParseError(t.line, t.column, {"distinct pattern variables"},
                           "'" + x1 + "' twice");
        }
        return Term::match_pair(std::move(s), std::move(x1), std::move(x2),
                                std::move(body));
      }
      expect("inl");
      std::string xl = ident();
      expect("->");
      Term left = term();
      expect("|");
      expect("inr");
      std::string xr = ident();
      expect("->");
      Term right = term();
      expect("}");
      return Term::match_sum(std::move(s), std::move(xl), std::move(left),
                             std::move(xr), std::move(right));
    }
    return prefix_term();
  }

  Term prefix_term() {
    for (std::string_view kw : {"inl", "inr", "roll", "unroll"}) {
      if (at(kw)) {
        ++pos_;
        Term body = prefix_term();
        if (kw == "inl") return Term::inl(std::move(body));
        if (kw == "inr") return Term::inr(std::move(body));
        if (kw == "roll") return Term::roll(std::move(body));
        return Term::unroll(std::move(body));
      }
    }
    Term t = atom_term();
    while (starts_atom_term()) t = Term::app(std::move(t), atom_term());
    return t;
  }

  bool starts_atom_term() {
    bool a = at("_"), b = at("()"), c = at("("), d = allow_slot_ && at("@");
    bool e = at_ident();
    return a || b || c || d || e;
  }

  Term atom_term() {
    if (at("_")) {
      ++pos_;
      return Term::hole();
    }
    if (at("()")) {
      ++pos_;
      return Term::unit();
    }
    if (allow_slot_ && at("@")) {
      ++pos_;
      return Term::slot();
    }
    if (at_ident()) return Term::var(toks_[pos_++].text);
    if (at("(")) {
      ++pos_;
      if (at(")")) {
        ++pos_;
        return Term::unit();
      }
      Term a = term();
      if (at(",")) {
        ++pos_;
        Term b = term();
        expect(")");
        return Term::pair(std::move(a), std::move(b));
      }
      expect(")");
      return a;
    }
    fail();
  }

  Context context() {
    const bool saved = allow_slot_;
    allow_slot_ = true;
    const Token& start = peek();
    Term t = term();
    allow_slot_ = saved;
    const std::size_t n = count_slots(t);
    if (n != 1) {
      throw ParseError(start.line, start.column, {"exactly one '@'"},
                       n == 0 ? "no hole" : "multiple holes");
    }
    return Context(std::move(t));
  }

  // ---- deltas ----

  Delta delta() {
    if (at("fun")) {
      ++pos_;
      std::string x = ident();
      expect("->");
      return Delta::lam(std::move(x), delta());
    }
    if (at("match")) {
      ++pos_;
      Delta s = delta();
      expect("{");
      expect("inl");
      std::string xl = ident();
      expect("->");
      Delta left = delta();
      expect("|");
      expect("inr");
      std::string xr = ident();
      expect("->");
      Delta right = delta();
      expect("}");
      return Delta::match(std::move(s), std::move(xl), std::move(left),
                          std::move(xr), std::move(right));
    }
    return prefix_delta();
  }

  Delta prefix_delta() {
    for (std::string_view kw : {"inl!", "inr!", "inl", "inr", "roll", "unroll"}) {
      if (at(kw)) {
        ++pos_;
        Delta inner = prefix_delta();
        if (kw == "inl!") return Delta::inl_bang(std::move(inner));
        if (kw == "inr!") return Delta::inr_bang(std::move(inner));
        if (kw == "inl") return Delta::inl(std::move(inner));
        if (kw == "inr") return Delta::inr(std::move(inner));
        if (kw == "roll") return Delta::roll(std::move(inner));
        return Delta::unroll(std::move(inner));
      }
    }
    Delta d = atom_delta();
    while (starts_atom_delta()) d = Delta::app(std::move(d), atom_delta());
    return d;
  }

  bool starts_atom_delta() {
    bool a = at("~"), b = at("+"), c = at("-"), d = at("("), e = at("!");
    bool f = at_ident();
    return a || b || c || d || e || f;
  }

  Delta atom_delta() {
    if (at("~")) {
      ++pos_;
      expect("{");
      Term e = term();
      expect("}");
      return Delta::eps(std::move(e));
    }
    if (at("+") || at("-")) {
      const bool ins = toks_[pos_].text == "+";
      ++pos_;
      expect("[");
      Context c = context();
      expect("]");
      expect("{");
      Delta inner = delta();
      expect("}");
      return ins ? Delta::ins(std::move(c), std::move(inner))
                 : Delta::del(std::move(c), std::move(inner));
    }
    if (at("!")) {
      ++pos_;
      expect("{");
      Term a = term();
      expect("=>");
      Term b = term();
      expect("}");
      return Delta::replace(std::move(a), std::move(b));
    }
    if (at_ident()) {
      std::string x = toks_[pos_++].text;
      expect("~>");
      std::string y = ident();
      return Delta::var_replace(std::move(x), std::move(y));
    }
    if (at("(")) {
      ++pos_;
      Delta a = delta();
      if (at(",")) {
        ++pos_;
        Delta b = delta();
        expect(")");
        return Delta::pair(std::move(a), std::move(b));
      }
      expect(")");
      return a;
    }
    fail();
  }

 public:
  Context whole_context() {
    Context c = context();
    expect_end();
    return c;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool allow_slot_;
  std::set<std::string> expected_;
  std::size_t expected_pos_ = 0;
};

// Precedence levels: 0 = fun/match, 1 = prefix, 2 = application, 3 = atom.
int term_level(const Term& t) {
  switch (t.kind()) {
    case TermKind::kLam:
    case TermKind::kMatchSum:
    case TermKind::kMatchPair:
      return 0;
    case TermKind::kInl:
    case TermKind::kInr:
    case TermKind::kRoll:
    case TermKind::kUnroll:
      return 1;
    case TermKind::kApp:
      return 2;
    default:
      return 3;
  }
}

void print_term(std::ostream& os, const Term& t, int ctx);

void print_term_inner(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case TermKind::kHole: os << "_"; return;
    case TermKind::kVar: os << t.name(); return;
    case TermKind::kUnit: os << "()"; return;
    case TermKind::kSlot: os << "@"; return;
    case TermKind::kInl:
    case TermKind::kInr:
    case TermKind::kRoll:
    case TermKind::kUnroll:
      os << kind_name(t.kind()) << " ";
      print_term(os, t.child(0), 1);
      return;
    case TermKind::kPair:
      os << "(";
      print_term(os, t.first(), 0);
      os << ", ";
      print_term(os, t.second(), 0);
      os << ")";
      return;
    case TermKind::kApp:
      print_term(os, t.fn(), 2);
      os << " ";
      print_term(os, t.arg(), 3);
      return;
    case TermKind::kLam:
      os << "fun " << t.binder() << " -> ";
      print_term(os, t.body(), 0);
      return;
    case TermKind::kMatchSum:
      os << "match ";
      print_term(os, t.scrutinee(), 0);
      os << " { inl " << t.name() << " -> ";
      print_term(os, t.left(), 0);
      os << " | inr " << t.name2() << " -> ";
      print_term(os, t.right(), 0);
      os << " }";
      return;
    case TermKind::kMatchPair:
      os << "match ";
      print_term(os, t.scrutinee(), 0);
      os << " { (" << t.name() << ", " << t.name2() << ") -> ";
      print_term(os, t.body(), 0);
      os << " }";
      return;
  }
}

void print_term(std::ostream& os, const Term& t, int ctx) {
  const bool parens = term_level(t) < ctx;
  if (parens) os << "(";
  print_term_inner(os, t);
  if (parens) os << ")";
}

int delta_level(const Delta& d) {
  switch (d.kind()) {
    case DeltaKind::kLam:
    case DeltaKind::kMatch:
      return 0;
    case DeltaKind::kInl:
    case DeltaKind::kInr:
    case DeltaKind::kInlBang:
    case DeltaKind::kInrBang:
    case DeltaKind::kRoll:
    case DeltaKind::kUnroll:
      return 1;
    case DeltaKind::kApp:
      return 2;
    default:
      return 3;
  }
}

void print_delta(std::ostream& os, const Delta& d, int ctx);

void print_delta_inner(std::ostream& os, const Delta& d) {
  switch (d.kind()) {
    case DeltaKind::kEps:
      os << "~{";
      print_term(os, d.term(), 0);
      os << "}";
      return;
    case DeltaKind::kIns:
    case DeltaKind::kDel:
      os << (d.is(DeltaKind::kIns) ? "+[" : "-[");
      print_term(os, d.frame().term(), 0);
      os << "]{";
      print_delta(os, d.inner(), 0);
      os << "}";
      return;
    case DeltaKind::kInl:
    case DeltaKind::kInr:
    case DeltaKind::kRoll:
    case DeltaKind::kUnroll:
      os << kind_name(d.kind()) << " ";
      print_delta(os, d.inner(), 1);
      return;
    case DeltaKind::kInlBang:
    case DeltaKind::kInrBang:
      os << (d.is(DeltaKind::kInlBang) ? "inl! " : "inr! ");
      print_delta(os, d.inner(), 1);
      return;
    case DeltaKind::kPair:
      os << "(";
      print_delta(os, d.child(0), 0);
      os << ", ";
      print_delta(os, d.child(1), 0);
      os << ")";
      return;
    case DeltaKind::kApp:
      print_delta(os, d.child(0), 2);
      os << " ";
      print_delta(os, d.child(1), 3);
      return;
    case DeltaKind::kLam:
      os << "fun " << d.name() << " -> ";
      print_delta(os, d.child(0), 0);
      return;
    case DeltaKind::kMatch:
      os << "match ";
      print_delta(os, d.child(0), 0);
      os << " { inl " << d.name() << " -> ";
      print_delta(os, d.child(1), 0);
      os << " | inr " << d.name2() << " -> ";
      print_delta(os, d.child(2), 0);
      os << " }";
      return;
    case DeltaKind::kReplace:
      os << "!{";
      print_term(os, d.term(), 0);
      os << " => ";
      print_term(os, d.term2(), 0);
      os << "}";
      return;
    case DeltaKind::kVarReplace:
      os << d.name() << " ~> " << d.name2();
      return;
  }
}

void print_delta(std::ostream& os, const Delta& d, int ctx) {
  const bool parens = delta_level(d) < ctx;
  if (parens) os << "(";
  print_delta_inner(os, d);
  if (parens) os << ")";
}

}  // namespace

Term parse_term(std::string_view text) {
  return Parser(text, false).whole_term();
}

Context parse_context(std::string_view text) {
  return Parser(text, true).whole_context();
}

Delta parse_delta(std::string_view text) {
  return Parser(text, false).whole_delta();
}

std::string pretty_term(const Term& t) {
  std::ostringstream os;
  print_term(os, t, 0);
  return os.str();
}

std::string pretty_context(const Context& c) { return pretty_term(c.term()); }

std::string pretty_delta(const Delta& d) {
  std::ostringstream os;
  print_delta(os, d, 0);
  return os.str();
}

}  // namespace ilc
