#include "humbert/weyl/sl2.hpp"

#include <algorithm>

namespace humbert::weyl {

namespace {

Sl2Triple make_triple(std::size_t from, std::size_t to) {
  Sl2Triple t;
  const GaussRational half(Rational(1, 2));
  for (std::size_t i = from; i < to; ++i) {
    const WeylElement z = WeylElement::z(i), d = WeylElement::d(i);
    t.x -= half * (z * z);
    t.y += half * (d * d);
    t.h += half * (z * d + d * z);
  }
  return t;
}

}  // namespace

const Sl2Triples& sl2_triples() {
  static const Sl2Triples t{make_triple(0, 3), make_triple(3, 5)};
  return t;
}

WeylElement weight_operator() { return sl2_triples().alpha.h - sl2_triples().mu.h; }

WordSum WordSum::letter(std::size_t k, const GaussRational& c) { return WordSum({Word{c, {k}}}); }

WordSum& WordSum::operator+=(const WordSum& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

WordSum operator-(WordSum a, const WordSum& b) { return a += GaussRational(-1) * b; }

WordSum operator*(const GaussRational& c, WordSum w) {
  for (auto& t : w.terms_) t.coeff *= c;
  return w;
}

WordSum operator*(const WordSum& a, const WordSum& b) {
  std::vector<Word> out;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      Word w{x.coeff * y.coeff, x.letters};
      w.letters.insert(w.letters.end(), y.letters.begin(), y.letters.end());
      out.push_back(std::move(w));
    }
  return WordSum(std::move(out));
}

std::string WordSum::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) s += " + ";
    s += "(" + terms_[k].coeff.str() + ")";
    for (auto l : terms_[k].letters) s += "*" + names.at(l);
  }
  return s;
}

WordSum star(const WordSum& w) {
  std::vector<Word> out;
  for (const auto& t : w.terms()) {
    Word s{t.coeff.conj(), t.letters};
    std::reverse(s.letters.begin(), s.letters.end());
    if (s.letters.size() % 2 == 1) s.coeff = -s.coeff;
    out.push_back(std::move(s));
  }
  return WordSum(std::move(out));
}

WeylElement evaluate(const WordSum& w, const std::vector<WeylElement>& alphabet) {
  WeylElement out;
  for (const auto& t : w.terms()) {
    WeylElement prod(GaussRational(1));
    for (auto l : t.letters) prod = prod * alphabet.at(l);
    out += t.coeff * prod;
  }
  return out;
}

}  // namespace humbert::weyl
