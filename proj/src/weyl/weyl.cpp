#include "humbert/weyl/weyl.hpp"

#include <sstream>

#include "humbert/error.hpp"

namespace humbert::weyl {

namespace {

// n! / (n-k)!
Rational falling(int n, int k) {
  long v = 1;
  for (int t = 0; t < k; ++t) v *= (n - t);
  return Rational(v);
}

Rational binomial(int n, int k) {
  long v = 1;
  for (int t = 1; t <= k; ++t) v = v * (n - k + t) / t;
  return Rational(v);
}

Exp parse_exp(const std::string& s) {
  // "(a1,a2,a3,a4,a5)"
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw Error(ErrorCode::ParseError, "exponent '" + s + "'");
  Exp e{};
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= kVars) throw Error(ErrorCode::ParseError, "exponent '" + s + "' has too many entries");
    const int v = std::stoi(item);
    if (v < 0 || v > 255) throw Error(ErrorCode::ParseError, "exponent out of range");
    e[k++] = static_cast<std::uint8_t>(v);
  }
  if (k != kVars) throw Error(ErrorCode::ParseError, "exponent '" + s + "' needs five entries");
  return e;
}

}  // namespace

WeylElement::WeylElement(const GaussRational& c) {
  if (!c.is_zero()) terms_[{Exp{}, Exp{}}] = c;
}

WeylElement WeylElement::z(std::size_t i) {
  Exp e{};
  e.at(i) = 1;
  return term(e, Exp{}, GaussRational(1));
}

WeylElement WeylElement::d(std::size_t i) {
  Exp e{};
  e.at(i) = 1;
  return term(Exp{}, e, GaussRational(1));
}

WeylElement WeylElement::term(const Exp& zexp, const Exp& dexp, const GaussRational& c) {
  WeylElement w;
  w.add_term(zexp, dexp, c);
  return w;
}

GaussRational WeylElement::coefficient(const Exp& zexp, const Exp& dexp) const {
  const auto it = terms_.find({zexp, dexp});
  return it == terms_.end() ? GaussRational(0) : it->second;
}

void WeylElement::add_term(const Exp& zexp, const Exp& dexp, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({zexp, dexp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool WeylElement::has_fock_degree(int k) const {
  for (const auto& [key, c] : terms_)
    if (total_degree(key.first) - total_degree(key.second) != k) return false;
  return true;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

WeylElement WeylElement::operator-() const {
  WeylElement w = *this;
  for (auto& [k, c] : w.terms_) c = -c;
  return w;
}

// (z^a d^b)(z^c d^e) = sum_k prod_i C(b_i,k_i) c_i!/(c_i-k_i)! z^{a+c-k} d^{b+e-k}
WeylElement operator*(const WeylElement& x, const WeylElement& y) {
  WeylElement out;
  for (const auto& [kx, cx] : x.terms_) {
    const Exp& a = kx.first;
    const Exp& b = kx.second;
    for (const auto& [ky, cy] : y.terms_) {
      const Exp& c = ky.first;
      const Exp& e = ky.second;
      const GaussRational base = cx * cy;
      Exp k{};
      std::array<int, kVars> kmax{};
      for (std::size_t i = 0; i < kVars; ++i) kmax[i] = std::min(b[i], c[i]);
      while (true) {
        Rational coeff(1);
        Exp zexp, dexp;
        for (std::size_t i = 0; i < kVars; ++i) {
          coeff *= binomial(b[i], k[i]) * falling(c[i], k[i]);
          zexp[i] = static_cast<std::uint8_t>(a[i] + c[i] - k[i]);
          dexp[i] = static_cast<std::uint8_t>(b[i] + e[i] - k[i]);
        }
        out.add_term(zexp, dexp, base * GaussRational(coeff));
        std::size_t i = 0;
        while (i < kVars && k[i] == kmax[i]) k[i++] = 0;
        if (i == kVars) break;
        ++k[i];
      }
    }
  }
  return out;
}

std::string WeylElement::to_text() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [k, c] : terms_) os << c.str() << " * z^" << exp_str(k.first) << " d^" << exp_str(k.second) << "\n";
  return os.str();
}

WeylElement WeylElement::from_text(const std::string& text) {
  WeylElement w;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "0") continue;
    const auto star = line.find(" * z^");
    const auto dpos = line.find(" d^", star == std::string::npos ? 0 : star);
    if (star == std::string::npos || dpos == std::string::npos)
      throw Error(ErrorCode::ParseError, "weyl term '" + line + "'");
    const GaussRational c = GaussRational::parse(line.substr(0, star));
    const Exp zexp = parse_exp(line.substr(star + 5, dpos - star - 5));
    const Exp dexp = parse_exp(line.substr(dpos + 3));
    w.add_term(zexp, dexp, c);
  }
  return w;
}

Poly5 apply(const WeylElement& w, const Poly5& p) {
  Poly5 out;
  for (const auto& [k, c] : w.terms()) {
    const Exp& a = k.first;
    const Exp& b = k.second;
    for (const auto& [m, cm] : p.terms()) {
      Rational f(1);
      Exp r;
      bool vanishes = false;
      for (std::size_t i = 0; i < kVars; ++i) {
        if (m[i] < b[i]) {
          vanishes = true;
          break;
        }
        f *= falling(m[i], b[i]);
        r[i] = static_cast<std::uint8_t>(m[i] - b[i] + a[i]);
      }
      if (vanishes) continue;
      out.add_term(r, c * cm * GaussRational(f));
    }
  }
  return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

}  // namespace humbert::weyl
