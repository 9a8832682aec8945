#include "humbert/weyl/poly.hpp"

#include <sstream>

#include "humbert/error.hpp"

namespace humbert::weyl {

int total_degree(const Exp& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

std::string exp_str(const Exp& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < kVars; ++i) {
    if (i) s += ",";
    s += std::to_string(static_cast<int>(e[i]));
  }
  return s + ")";
}

Poly5::Poly5(const GaussRational& c) {
  if (!c.is_zero()) terms_[Exp{}] = c;
}

Poly5 Poly5::z(std::size_t i) {
  Exp e{};
  e.at(i) = 1;
  return monomial(e);
}

Poly5 Poly5::monomial(const Exp& e, const GaussRational& c) {
  Poly5 p;
  p.add_term(e, c);
  return p;
}

GaussRational Poly5::coefficient(const Exp& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? GaussRational(0) : it->second;
}

void Poly5::add_term(const Exp& e, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Poly5::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) throw Error(ErrorCode::DimensionMismatch, "polynomial is not homogeneous");
  return d;
}

int Poly5::max_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Poly5& Poly5::operator+=(const Poly5& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly5& Poly5::operator-=(const Poly5& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly5& Poly5::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Poly5 operator*(const Poly5& a, const Poly5& b) {
  Poly5 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exp e;
      for (std::size_t i = 0; i < kVars; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly5 Poly5::operator-() const {
  Poly5 p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

std::string Poly5::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (std::size_t i = 0; i < kVars; ++i) {
      if (it->first[i] == 0) continue;
      os << "*z" << (i + 1);
      if (it->first[i] > 1) os << "^" << static_cast<int>(it->first[i]);
    }
  }
  return os.str();
}

namespace {

void fill_monomials(int remaining, std::size_t var, Exp& cur, std::vector<Exp>& out) {
  if (var + 1 == kVars) {
    cur[var] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[var] = static_cast<std::uint8_t>(k);
    fill_monomials(remaining - k, var + 1, cur, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int degree) : degree_(degree) {
  if (degree < 0) throw Error(ErrorCode::DimensionMismatch, "negative degree");
  Exp cur{};
  fill_monomials(degree, 0, cur, monomials_);
  for (std::size_t k = 0; k < monomials_.size(); ++k) index_[monomials_[k]] = k;
}

std::size_t MonomialBasis::index(const Exp& e) const {
  const auto it = index_.find(e);
  if (it == index_.end()) throw Error(ErrorCode::DimensionMismatch, "monomial of wrong degree");
  return it->second;
}

exact::VectorG MonomialBasis::to_vector(const Poly5& p) const {
  exact::VectorG v(size(), GaussRational(0));
  for (const auto& [e, c] : p.terms()) v[index(e)] = c;
  return v;
}

Poly5 MonomialBasis::to_poly(const exact::VectorG& v) const {
  if (v.size() != size()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  Poly5 p;
  for (std::size_t k = 0; k < size(); ++k) p.add_term(monomials_[k], v[k]);
  return p;
}

std::size_t monomial_count(int d) {
  if (d < 0) return 0;
  const auto n = static_cast<std::size_t>(d);
  return (n + 1) * (n + 2) * (n + 3) * (n + 4) / 24;
}

}  // namespace humbert::weyl
