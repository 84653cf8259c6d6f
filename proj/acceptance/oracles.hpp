#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it checks.

#include "knotcert/int_matrix.hpp"
#include "knotcert/residues.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using knotcert::IntMatrix;
using knotcert::Residues;

// Every c in (Z/q)^n with M c = 0 mod q, in lexicographic order, by trying all q^n vectors.
std::vector<Residues> brute_force_kernel(const IntMatrix& m, std::int64_t q);

// Laplace expansion; fine up to about 8x8.
knotcert::Integer cofactor_determinant(const IntMatrix& m);

// Signature of (1 - w) A + (1 - conj w) A^T at w = exp(2 pi i j / n) from
// double-precision eigenvalues. Throws std::runtime_error if an eigenvalue
// is too close to zero to classify.
long eigen_tl_signature(const IntMatrix& a, long j, long n);

// Signature of a real symmetric integer matrix from eigenvalues.
long eigen_symmetric_signature(const IntMatrix& m);

// Jump formula for T(2, n), n odd >= 1: each l with (2l+1)/(2n) < min(s, 1-s)
// contributes -2. Throws if s sits on a jump.
long torus_jump_signature(long n, long j, long d);

// Closure of a generating set under addition mod q.
std::set<Residues> closure(const std::vector<Residues>& gens, std::int64_t q);

// Every subgroup of (Z/q)^dim of the given order, by closing all pairs of
// elements. Only for tiny groups.
std::set<std::set<Residues>> brute_force_subgroups(std::int64_t q, std::size_t dim, std::size_t order);

// Hand-rolled generators.
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi);
IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi);

}  // namespace oracle
