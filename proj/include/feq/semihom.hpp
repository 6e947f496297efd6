#ifndef FEQ_SEMIHOM_HPP
#define FEQ_SEMIHOM_HPP

#include <optional>
#include <vector>

#include "feq/la.hpp"

namespace feq {

/// Non-zero matrix of basis values B(b_k, b_l) of a bi-additive map
/// K x K -> K, together with the constants of the relation
/// B(alpha u, beta v) = gamma B(u, v) it witnesses.
struct BiAddWitness {
  Field field;
  Elem alpha, beta, gamma;
  MatFF B;  // n x n over the field, entry (k, l) = B(a^k, a^l)
};

/// Non-zero Z_p-matrix of an additive map a : K -> K with a(alpha x) = beta a(x).
struct AddWitness {
  Field field;       // GF(p^n)
  Elem alpha, beta;
  MatFF L;           // n x n over GF(p), columns = coordinates of a(a^k)
};

/// Matrix of the map X |-> sum alpha_i beta_j (M^i)^T X M^j on n x n matrices,
/// in the basis of matrix units ordered row-major (entry (k,l) at index k*n+l).
struct OperatorRep {
  Field field;
  Elem alpha, beta;
  MatFF P;  // n^2 x n^2 over the field (entries lie in the prime subfield)
};

/// Matrices of multiplication by the basis elements 1, a, ..., a^{n-1},
/// over the prime field; entry (j, k) is the j-th coordinate of a^i * a^k.
std::vector<MatFF> translation_matrices(const Field& f);

OperatorRep operator_matrix(const Field& f, const Elem& alpha, const Elem& beta);

/// The non-zero eigenvalues of the operator, i.e. exactly the gamma for which
/// a non-zero bi-additive map with B(alpha u, beta v) = gamma B(u, v) exists.
std::vector<std::pair<Elem, std::size_t>> biadd_gammas(const Field& f, const Elem& alpha, const Elem& beta);

std::optional<BiAddWitness> biadd_decide(const Field& f, const Elem& alpha, const Elem& beta,
                                         const Elem& gamma);

/// Exhaustive check of B(alpha u, beta v) = gamma B(u, v) over all pairs,
/// extending B Z_p-bilinearly from its basis values.
bool biadd_verify(const BiAddWitness& w);

/// Witness exists iff minimal_poly(alpha) = minimal_poly(beta); the witness is
/// built by semi-linear extension and is verified exhaustively by add_verify.
std::optional<AddWitness> add_decide(const Field& f, const Elem& alpha, const Elem& beta);

bool add_verify(const AddWitness& w);

/// Evaluate the additive map given by the Z_p-matrix L at u.
Elem apply_zp_linear(const Field& f, const MatFF& L, const Elem& u);

struct HomogeneityField {
  std::uint32_t degree;        // H = GF(p^degree)
  std::vector<Elem> members;   // canonical index order
};

/// All alpha with L(alpha x) = alpha L(x) for every x; always a subfield.
HomogeneityField homogeneity_field(const Field& f, const MatFF& L);

struct ConstraintTriple {
  Elem alpha, beta, gamma;
};

struct WitnessSpace {
  std::size_t dimension = 0;      // over the field the basis matrices live in
  std::vector<MatFF> basis;
};

/// Dimension and basis of the bi-additive maps satisfying every relation
/// B(alpha_i u, beta_i v) = gamma_i B(u, v) simultaneously (gamma may be 0).
WitnessSpace intersect_constraints(const Field& f, const std::vector<ConstraintTriple>& constraints);

struct AddConstraint {
  Elem alpha, beta;
};

/// Z_p-matrices L with L(alpha_i x) = beta_i L(x) for every constraint.
/// The space is closed under post-multiplication by field elements, so the
/// Z_p-dimension is divisible by n; dimension reports the Z_p value.
WitnessSpace additive_constraint_space(const Field& f, const std::vector<AddConstraint>& constraints);

}  // namespace feq

#endif
