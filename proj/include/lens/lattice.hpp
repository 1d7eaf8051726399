#pragma once

#include <optional>
#include <vector>

#include "lens/arith.hpp"

namespace lens {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Linking matrix of the linear plumbing with weights -a_1, ..., -a_n:
// diagonal -a_i, +1 between consecutive vertices, 0 elsewhere.
struct LinkingMatrix {
  IntVector coeffs;  // a_i, all >= 2

  size_t rank() const { return coeffs.size(); }
  IntMatrix dense() const;
};

LinkingMatrix linking_matrix(const IntVector& coeffs);

// Equal to (-1)^n times the numerator continuant, so |det| = p.
Integer det(const LinkingMatrix& q);

// Closed form through continuants: for i <= j the entry is
// -num[i-1] * tail[j+1] / p, hence strictly negative everywhere.
RatMatrix inverse(const LinkingMatrix& q);

// x^T Q^{-1} x, exact.
Rational qform(const LinkingMatrix& q, const IntVector& x);

// Precomputed integer form of -p * Q^{-1} for repeated evaluation of qform
// over many vectors of one chain.
class InverseForm {
 public:
  explicit InverseForm(const LinkingMatrix& q);
  Rational operator()(const IntVector& x) const;
  size_t rank() const { return head_.size() - 1; }

 private:
  IntVector head_;  // prefix continuants num[0..n]
  IntVector tail_;  // suffix continuants, tail_[i] = [a_i..a_n], tail_[n+1] = 1
  Integer p_;
};

// Embedding of a linear chain into the diagonal lattice <-1>^t.
struct EmbeddingMatrix {
  IntMatrix rows;  // one vector in Z^t per chain vertex
  size_t ambient_rank = 0;

  // Gram matrix under <-1>^t, i.e. -<u, v>_euclidean.
  IntMatrix gram() const;
};

// Maximal irreducible embedding of the chain with the given weights
// (all <= -2). Vertex i occupies |w_i| consecutive basis indices, the first
// of which it shares with vertex i-1; the shared index carries -1 in the later
// vertex so adjacent vertices pair to +1. t = 1 + sum(|w_i| - 1).
EmbeddingMatrix maximal_embedding(const IntVector& weights);

struct ComplementLattice {
  IntMatrix basis;  // rows in Z^t, Hermite normal form
  IntMatrix gram;
  size_t rank = 0;
};

// Saturated integer kernel of the pairing against the embedded vertices.
ComplementLattice orthogonal_complement(const EmbeddingMatrix& e);

struct MinusOneSearch {
  std::optional<IntVector> witness;
  // Largest |x_i| among coordinates the enumeration found feasible; a box
  // of this size makes the search exhaustive.
  Integer required_bound;
  bool complete = false;
};

// Fincke-Pohst enumeration of vectors x with |x_i| <= bound and x^T gram x = -1.
// gram must be negative definite. The result is complete when a witness was
// found or no feasible coordinate fell outside the box.
MinusOneSearch search_minus_one(const IntMatrix& gram, const Integer& bound);

bool has_minus_one_vector(const ComplementLattice& c, const Integer& bound = 10);

// Generic exact helpers.
Integer determinant(const IntMatrix& m);  // fraction-free Bareiss
bool is_negative_definite(const IntMatrix& m);

// Basis (rows, Hermite normal form) of {x in Z^cols : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a, size_t cols);

// Everything the report needs about the maximal filling lattice of L(p,q):
// dual chain of p/(p-q), its maximal embedding, and the complement.
struct MaximalFillingLattice {
  IntVector dual_coeffs;
  size_t ambient_rank = 0;
  ComplementLattice complement;
  Integer complement_det;
  bool negative_definite = false;
  MinusOneSearch minus_one;
};

MaximalFillingLattice maximal_filling_lattice(const Integer& p, const Integer& q,
                                              const Integer& bound = 10);

}  // namespace lens
