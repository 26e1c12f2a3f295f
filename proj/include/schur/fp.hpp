// Finitely presented groups: the .grp text DSL, its parser and printer, and
// relator certification inside pc groups.
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "schur/error.hpp"
#include "schur/pc.hpp"
#include "schur/pc_structure.hpp"
#include "schur/word.hpp"

namespace schur {

// Generators plus relators (an equality w1 = w2 is stored as w1 * w2^-1).
// Commutator brackets are expanded left-normed at parse time.
struct FpPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<std::pair<int, int>> relator_pos;  // line, column per relator

  bool operator==(const FpPresentation& o) const {
    return generators == o.generators && relators == o.relators;
  }
  int gen_index(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == name) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

class FpLexer {
 public:
  explicit FpLexer(const std::string& text) : s_(text) {}

  struct Tok {
    enum Kind { Ident, Number, Sym, End } kind = End;
    std::string text;
    int line = 1, col = 1;
  };

  Tok next() {
    skip_ws();
    Tok t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= s_.size()) {
      t.kind = Tok::End;
      return t;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        t.text += get();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        t.text += get();
      return t;
    }
    t.kind = Tok::Sym;
    t.text = std::string(1, get());
    return t;
  }

 private:
  char get() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    for (;;) {
      while (pos_ < s_.size() &&
             std::isspace(static_cast<unsigned char>(s_[pos_])))
        get();
      if (pos_ < s_.size() && s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') get();
        continue;
      }
      return;
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class FpParser {
 public:
  explicit FpParser(const std::string& text) : lex_(text) { advance(); }

  FpPresentation parse() {
    expect_ident("gens");
    for (;;) {
      if (tok_.kind != FpLexer::Tok::Ident)
        fail("expected generator name");
      if (tok_.text == "gens" || tok_.text == "rels")
        fail("'" + tok_.text + "' cannot be a generator name");
      if (fp_.gen_index(tok_.text) >= 0)
        fail("duplicate generator '" + tok_.text + "'");
      fp_.generators.push_back(tok_.text);
      advance();
      if (is_sym(",")) {
        advance();
        continue;
      }
      break;
    }
    expect_sym(";");
    expect_ident("rels");
    if (!is_sym(";")) {
      for (;;) {
        parse_chain();
        if (is_sym(",")) {
          advance();
          continue;
        }
        break;
      }
    }
    expect_sym(";");
    if (tok_.kind != FpLexer::Tok::End) fail("trailing input after final ';'");
    return std::move(fp_);
  }

 private:
  void advance() { tok_ = lex_.next(); }
  bool is_sym(const char* s) const {
    return tok_.kind == FpLexer::Tok::Sym && tok_.text == s;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, tok_.line, tok_.col);
  }
  void expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "'");
    advance();
  }
  void expect_ident(const char* kw) {
    if (tok_.kind != FpLexer::Tok::Ident || tok_.text != kw)
      fail(std::string("expected '") + kw + "'");
    advance();
  }

  // chain w1 = w2 = ... = wk adds relators w1 w2^-1, ..., w_{k-1} w_k^-1;
  // a lone word is itself a relator.
  void parse_chain() {
    int line = tok_.line, col = tok_.col;
    Word w = parse_word();
    if (!is_sym("=")) {
      fp_.relators.push_back(w);
      fp_.relator_pos.emplace_back(line, col);
      return;
    }
    while (is_sym("=")) {
      advance();
      int l2 = tok_.line, c2 = tok_.col;
      Word v = parse_word();
      fp_.relators.push_back(w * v.inverse());
      fp_.relator_pos.emplace_back(line, col);
      w = std::move(v);
      line = l2;
      col = c2;
    }
  }

  bool at_word_start() const {
    return tok_.kind == FpLexer::Tok::Ident ||
           (tok_.kind == FpLexer::Tok::Number && tok_.text == "1") ||
           is_sym("[") || is_sym("(");
  }

  Word parse_word() {
    if (!at_word_start()) fail("expected a word");
    Word w = parse_term();
    for (;;) {
      if (is_sym("*")) {
        advance();
        w *= parse_term();
        continue;
      }
      if (at_word_start()) {  // juxtaposition
        w *= parse_term();
        continue;
      }
      return w;
    }
  }

  Word parse_term() {
    Word a = parse_atom();
    if (is_sym("^")) {
      advance();
      long e = parse_int();
      return a.pow(e);
    }
    return a;
  }

  long parse_int() {
    bool neg = false;
    if (is_sym("-")) {
      neg = true;
      advance();
    }
    if (tok_.kind != FpLexer::Tok::Number) fail("malformed exponent");
    long v = 0;
    for (char c : tok_.text) {
      v = v * 10 + (c - '0');
      if (v > 1'000'000'000) fail("exponent too large");
    }
    advance();
    return neg ? -v : v;
  }

  Word parse_atom() {
    if (tok_.kind == FpLexer::Tok::Number && tok_.text == "1") {
      advance();
      return Word::one();
    }
    if (is_sym("(")) {
      advance();
      Word w = parse_word();
      expect_sym(")");
      return w;
    }
    if (is_sym("[")) {
      advance();
      std::vector<Word> args;
      args.push_back(parse_word());
      while (is_sym(",")) {
        advance();
        args.push_back(parse_word());
      }
      expect_sym("]");
      if (args.size() < 2) fail("commutator needs at least two arguments");
      Word w = commutator(args[0], args[1]);
      for (size_t i = 2; i < args.size(); ++i) w = commutator(w, args[i]);
      return w;
    }
    if (tok_.kind == FpLexer::Tok::Ident) {
      std::string name = tok_.text;
      int idx = fp_.gen_index(name);
      if (idx >= 0) {
        advance();
        return Word::gen(idx);
      }
      // juxtaposed single-letter generators, e.g. "abc"
      std::vector<Factor> f;
      for (char c : name) {
        int gi = fp_.gen_index(std::string(1, c));
        if (gi < 0) fail("unknown generator '" + name + "'");
        f.push_back({gi, 1});
      }
      Word w{std::move(f)};
      advance();
      // an exponent after a juxtaposed run binds to the last letter
      if (is_sym("^")) {
        advance();
        long e = parse_int();
        auto fs = w.factors();
        Factor last = fs.back();
        fs.pop_back();
        return Word(std::move(fs)) * Word::gen(last.gen, 1).pow(e);
      }
      return w;
    }
    fail("expected a word");
  }

  FpLexer lex_;
  FpLexer::Tok tok_;
  FpPresentation fp_;
};

}  // namespace detail

inline FpPresentation parse_presentation(const std::string& text) {
  return detail::FpParser(text).parse();
}

inline std::string print_word(const FpPresentation& fp, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.factors().size(); ++i) {
    const Factor& f = w.factors()[i];
    if (i) s += "*";
    s += fp.generators.at(f.gen);
    if (f.exp != 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

inline std::string print_presentation(const FpPresentation& fp) {
  std::string s = "gens ";
  for (size_t i = 0; i < fp.generators.size(); ++i) {
    if (i) s += ", ";
    s += fp.generators[i];
  }
  s += ";\nrels";
  if (fp.relators.empty()) {
    s += " ;\n";
    return s;
  }
  s += "\n";
  for (size_t i = 0; i < fp.relators.size(); ++i) {
    s += "  " + print_word(fp, fp.relators[i]);
    s += (i + 1 < fp.relators.size()) ? ",\n" : ";\n";
  }
  return s;
}

// Relator satisfaction and generation check for a candidate epimorphism
// fp -> pc group given by generator images.
struct SatisfiesReport {
  bool relators_hold = false;
  int first_failed_relator = -1;  // -1 when all hold
  bool generates = false;
  bool certified() const { return relators_hold && generates; }
};

inline SatisfiesReport satisfies(const FpPresentation& fp,
                                 const PcPresentation& pres,
                                 const std::vector<PcElement>& images,
                                 long long cap = kBruteForceCap) {
  require_consistent(pres);
  if (images.size() != fp.generators.size())
    throw structural_error("image count does not match generator count");
  SatisfiesReport r;
  r.relators_hold = true;
  for (size_t i = 0; i < fp.relators.size(); ++i) {
    if (!evaluate_word(pres, fp.relators[i], images).is_identity()) {
      r.relators_hold = false;
      r.first_failed_relator = static_cast<int>(i);
      break;
    }
  }
  PcGroupModel m(pres);
  std::vector<PcExps> seed;
  for (const auto& x : images) seed.push_back(x.exponents());
  auto closure = subgroup_closure(m, seed, cap);
  r.generates = make_int(static_cast<long long>(closure.size())) ==
                int_pow(pres.prime(), static_cast<unsigned long>(pres.ngens()));
  return r;
}

}  // namespace schur
