#pragma once

#include "knotcert/bigint.hpp"
#include "knotcert/int_matrix.hpp"
#include "knotcert/mod_kernel.hpp"
#include "knotcert/residues.hpp"
#include "knotcert/seifert.hpp"
#include "knotcert/smith.hpp"

#include <cstdint>
#include <vector>

namespace knotcert {

// H_1 of the double branched cover: generators y_0..y_{n-1}, one per
// Seifert basis curve, with relations the columns of A + A^T.
class CoverPresentation {
 public:
  CoverPresentation() = default;
  explicit CoverPresentation(const SeifertKnot& k);  // InputError if det(A + A^T) = 0

  const IntMatrix& relation_matrix() const noexcept { return relations_; }
  std::size_t generator_count() const noexcept { return relations_.rows(); }
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  const Integer& order() const noexcept { return order_; }
  const SNFResult& smith() const noexcept { return snf_; }

 private:
  IntMatrix relations_;
  SNFResult snf_;
  std::vector<Integer> factors_;
  Integer order_ = 1;
};

inline CoverPresentation double_cover_presentation(const SeifertKnot& k) { return CoverPresentation(k); }

// Coordinates in y_0..y_{n-1}.
struct HomologyClass {
  std::vector<std::int64_t> coefficients;
  bool operator==(const HomologyClass&) const = default;
};

// Homomorphism to Z/q, stored by its values on the y generators.
struct Character {
  std::int64_t modulus = 1;
  Residues values;

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character& a, const Character& b) = default;
};

ModKernel character_group(const CoverPresentation& p, std::int64_t q);

// All characters to Z/q in lexicographic order of their values.
std::vector<Character> enumerate_characters(const CoverPresentation& p, std::int64_t q,
                                            std::size_t cap = kDefaultEnumerationCap);

bool is_character(const CoverPresentation& p, const Character& chi);

// chi(z) in [0, q). InputError on a dimension mismatch.
std::int64_t evaluate(const Character& chi, const HomologyClass& z);

// Orbits under multiplication by units of Z/q. Each orbit is sorted; orbits
// are ordered by the least unit multiple of their members. InputError on mixed moduli.
std::vector<std::vector<Character>> rescaling_classes(const std::vector<Character>& chars);

bool is_surjective(const Character& chi);

}  // namespace knotcert
