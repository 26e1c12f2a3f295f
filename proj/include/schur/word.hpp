// Words over indexed generators.
#pragma once

#include <string>
#include <vector>

namespace schur {

// One factor g_{gen}^{exp}; gen is 0-based internally.
struct Factor {
  int gen = 0;
  long exp = 1;
  bool operator==(const Factor&) const = default;
};

// A word is a factor sequence; the empty word is the identity. Exponents may
// be any integer before normalization.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Factor> f) : factors_(std::move(f)) { reduce(); }

  static Word one() { return Word(); }
  static Word gen(int g, long e = 1) { return Word({{g, e}}); }

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  size_t length() const { return factors_.size(); }

  Word& operator*=(const Word& o) {
    factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
    reduce();
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  Word inverse() const {
    std::vector<Factor> f;
    f.reserve(factors_.size());
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
      f.push_back({it->gen, -it->exp});
    return Word(std::move(f));
  }

  Word pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Word r;
    for (long i = 0; i < e; ++i) r *= *this;
    return r;
  }

  int max_gen() const {
    int m = -1;
    for (const Factor& f : factors_) m = std::max(m, f.gen);
    return m;
  }
  int min_gen() const {
    int m = -1;
    for (const Factor& f : factors_)
      if (m < 0 || f.gen < m) m = f.gen;
    return m;
  }

  bool operator==(const Word&) const = default;

  // 1-based generator display, e.g. "g1^2*g3".
  std::string str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "*";
      s += "g" + std::to_string(factors_[i].gen + 1);
      if (factors_[i].exp != 1) s += "^" + std::to_string(factors_[i].exp);
    }
    return s;
  }

 private:
  // Merge adjacent equal generators, drop zero exponents.
  void reduce() {
    std::vector<Factor> out;
    for (const Factor& f : factors_) {
      if (f.exp == 0) continue;
      if (!out.empty() && out.back().gen == f.gen) {
        out.back().exp += f.exp;
        if (out.back().exp == 0) out.pop_back();
      } else {
        out.push_back(f);
      }
    }
    factors_ = std::move(out);
  }

  std::vector<Factor> factors_;
};

// Left-normed commutator [x,y] = x^-1 y^-1 x y; [x,y,z] = [[x,y],z].
inline Word commutator(const Word& x, const Word& y) {
  return x.inverse() * y.inverse() * x * y;
}

}  // namespace schur
