// Text format for pc presentations:
//   pcgroup NAME {
//     p = 3; n = 4;
//     pow 1 = g4;          # right side of g1^p; omitted lines are trivial
//     comm 2 1 = g3^2;     # right side of [g2, g1]
//   }
// Words are `1` or `g<k>[^<e>]` factors joined by `*`; `#` starts a comment.
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "schur/error.hpp"
#include "schur/pc.hpp"

namespace schur {

namespace detail {

class PcTextReader {
 public:
  explicit PcTextReader(const std::string& s) : s_(s) {}

  PcPresentation parse() {
    expect_word("pcgroup");
    std::string name = read_name();
    expect_char('{');
    expect_word("p");
    expect_char('=');
    long p = read_number();
    expect_char(';');
    expect_word("n");
    expect_char('=');
    long n = read_number();
    expect_char(';');
    if (n < 0 || n > kMaxPcGens) fail("generator count out of range");
    std::vector<Word> power(n);
    std::vector<std::vector<Word>> comm(n);
    for (int j = 0; j < n; ++j) comm[j].resize(j);
    for (;;) {
      skip_ws();
      if (peek() == '}') {
        get();
        break;
      }
      std::string kw = read_ident();
      if (kw == "pow") {
        long i = read_number();
        if (i < 1 || i > n) fail("pow index out of range");
        expect_char('=');
        power[i - 1] = read_pc_word(n);
        expect_char(';');
      } else if (kw == "comm") {
        long j = read_number();
        long i = read_number();
        if (j < 1 || j > n || i < 1 || i >= j)
          fail("comm indices must satisfy n >= j > i >= 1");
        expect_char('=');
        comm[j - 1][i - 1] = read_pc_word(n);
        expect_char(';');
      } else {
        fail("expected 'pow', 'comm' or '}'");
      }
    }
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input after '}'");
    return PcPresentation(p, static_cast<int>(n), std::move(power),
                          std::move(comm), name);
  }

 private:
  char peek() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    return s_[pos_];
  }
  char get() {
    char c = peek();
    ++pos_;
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        return;
      }
    }
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, line_, col_);
  }
  void expect_char(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }
  std::string read_ident() {
    skip_ws();
    std::string w;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_'))
      w += get();
    if (w.empty()) fail("expected an identifier");
    return w;
  }
  void expect_word(const char* kw) {
    if (read_ident() != kw) fail(std::string("expected '") + kw + "'");
  }
  std::string read_name() {
    skip_ws();
    std::string w;
    while (pos_ < s_.size() && s_[pos_] != '{' &&
           !std::isspace(static_cast<unsigned char>(s_[pos_])))
      w += get();
    if (w.empty()) fail("expected a group name");
    return w;
  }
  long read_number() {
    skip_ws();
    std::string w;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      w += get();
    if (w.empty()) fail("expected a number");
    long v = 0;
    for (char c : w) {
      v = v * 10 + (c - '0');
      if (v > 100'000'000) fail("number too large");
    }
    return v;
  }
  Word read_pc_word(long n) {
    skip_ws();
    if (peek() == '1') {
      get();
      return Word::one();
    }
    std::vector<Factor> f;
    for (;;) {
      skip_ws();
      if (peek() != 'g') fail("expected 'g<k>' or '1'");
      get();
      long k = read_number();
      if (k < 1 || k > n) fail("generator index out of range");
      long e = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        get();
        e = read_number();
      }
      f.push_back({static_cast<int>(k - 1), e});
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        get();
        continue;
      }
      break;
    }
    return Word(std::move(f));
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace detail

inline PcPresentation parse_pc(const std::string& text) {
  return detail::PcTextReader(text).parse();
}

inline std::string print_pc(const PcPresentation& pres) {
  std::string s = "pcgroup " +
                  (pres.name().empty() ? std::string("G") : pres.name()) +
                  " {\n";
  s += "  p = " + std::to_string(pres.prime()) + ";\n";
  s += "  n = " + std::to_string(pres.ngens()) + ";\n";
  for (int i = 0; i < pres.ngens(); ++i)
    if (!pres.power_rhs(i).empty())
      s += "  pow " + std::to_string(i + 1) + " = " + pres.power_rhs(i).str() +
           ";\n";
  for (int j = 0; j < pres.ngens(); ++j)
    for (int i = 0; i < j; ++i)
      if (!pres.comm_rhs(j, i).empty())
        s += "  comm " + std::to_string(j + 1) + " " + std::to_string(i + 1) +
             " = " + pres.comm_rhs(j, i).str() + ";\n";
  s += "}\n";
  return s;
}

}  // namespace schur
