#include "knotcert/branched_cover.hpp"

#include "knotcert/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace knotcert {

CoverPresentation::CoverPresentation(const SeifertKnot& k) : relations_(k.matrix() + k.matrix().transpose()) {
  const Integer det = determinant(relations_);
  if (det == 0) throw InputError("det(A + A^T) = 0: the double branched cover is not a rational homology sphere");
  order_ = abs_value(det);
  snf_ = smith_normal_form(relations_);
  for (const auto& d : snf_.diagonal())
    if (d != 1) factors_.push_back(d);
}

ModKernel character_group(const CoverPresentation& p, std::int64_t q) {
  return kernel_mod_q(p.relation_matrix(), p.smith(), q);
}

std::vector<Character> enumerate_characters(const CoverPresentation& p, std::int64_t q, std::size_t cap) {
  const auto values = character_group(p, q).enumerate(cap);
  std::vector<Character> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(Character{q, v});
  return out;
}

bool is_character(const CoverPresentation& p, const Character& chi) {
  const IntMatrix& m = p.relation_matrix();
  if (chi.values.size() != m.cols()) return false;
  for (auto v : chi.values)
    if (v < 0 || v >= chi.modulus) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * Integer(static_cast<long>(chi.values[c]));
    if (mod_reduce(acc, chi.modulus) != 0) return false;
  }
  return true;
}

std::int64_t evaluate(const Character& chi, const HomologyClass& z) {
  if (z.coefficients.size() != chi.values.size()) {
    throw InputError("homology class has " + std::to_string(z.coefficients.size()) + " coordinates, character has " +
                     std::to_string(chi.values.size()));
  }
  const std::int64_t q = chi.modulus;
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < z.coefficients.size(); ++i) {
    acc = (acc + mod_reduce(z.coefficients[i], q) * chi.values[i]) % q;
  }
  return acc;
}

std::vector<std::vector<Character>> rescaling_classes(const std::vector<Character>& chars) {
  if (chars.empty()) return {};
  const std::int64_t q = chars.front().modulus;
  for (const auto& c : chars)
    if (c.modulus != q) throw InputError("rescaling_classes: characters have different moduli");
  std::vector<std::int64_t> units;
  for (std::int64_t u = 1; u < q; ++u)
    if (std::gcd(u, q) == 1) units.push_back(u);
  if (q == 1) units.push_back(0);

  std::map<Residues, std::vector<Character>> orbits;
  for (const auto& c : chars) {
    Residues least = c.values;
    for (auto u : units) least = std::min(least, scale(c.values, u, q));
    orbits[least].push_back(c);
  }
  std::vector<std::vector<Character>> out;
  for (auto& [rep, members] : orbits) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_surjective(const Character& chi) {
  std::int64_t g = chi.modulus;
  for (auto v : chi.values) g = std::gcd(g, v);
  return g == 1;
}

}  // namespace knotcert
