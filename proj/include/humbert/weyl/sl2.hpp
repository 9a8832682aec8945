#pragma once

#include <string>
#include <vector>

#include "humbert/weyl/weyl.hpp"

namespace humbert::weyl {

struct Sl2Triple {
  WeylElement h;
  WeylElement x;
  WeylElement y;
};

/// X = -1/2 sum z^2, Y = 1/2 sum d^2, H = 1/2 sum (z d + d z), over the
/// alpha variables z1..z3 and the mu variables z4, z5 respectively.
struct Sl2Triples {
  Sl2Triple alpha;
  Sl2Triple mu;
};

const Sl2Triples& sl2_triples();

/// H' = H_alpha - H_mu; acts on a monomial of alpha-degree a and mu-degree m
/// by a - m + 1/2.
WeylElement weight_operator();

/// Formal linear combination of words in a declared alphabet of generators.
struct Word {
  GaussRational coeff;
  std::vector<std::size_t> letters;
};

class WordSum {
 public:
  WordSum() = default;
  explicit WordSum(std::vector<Word> terms) : terms_(std::move(terms)) {}
  static WordSum letter(std::size_t k, const GaussRational& c = GaussRational(1));

  const std::vector<Word>& terms() const { return terms_; }

  WordSum& operator+=(const WordSum& o);
  friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
  friend WordSum operator-(WordSum a, const WordSum& b);
  friend WordSum operator*(const GaussRational& c, WordSum w);
  /// Concatenation product.
  friend WordSum operator*(const WordSum& a, const WordSum& b);

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<Word> terms_;
};

/// Conjugate-linear anti-automorphism sending each generator to its
/// negative: c X1...Xn -> conj(c) (-1)^n Xn...X1.
WordSum star(const WordSum& w);

WeylElement evaluate(const WordSum& w, const std::vector<WeylElement>& alphabet);

}  // namespace humbert::weyl
