#pragma once

// alpha(1+u)-constacyclic codes over R as exponent vectors over cyclotomic
// cosets, plus the linear codes over F_q that they induce.
//
// The ambient ring R[x]/<x^N - alpha(1+u)> is identified with
// F_q[x]/<(x^N - alpha)^2> through u = alpha^{-1}(x^N - alpha). Under this
// identification a codeword r(x) + u q(x) becomes
//     P(x) = r(x) - q(x) + x^N alpha^{-1} q(x),
// the code <prod M_i^{a_i}> is the set of multiples of g = prod M_i^{a_i},
// and the exponents range over [0, 2p^e] because x^N - alpha = (x^n - beta)^{p^e}.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ringcode/cyclo.hpp"
#include "ringcode/matrix.hpp"
#include "ringcode/ring.hpp"

namespace ringcode::codes {

struct LinearCodeF {
  gf::FieldPtr field;
  std::size_t length = 0;
  Matrix generator;  // reduced row echelon form
  std::optional<Elt> lambda;
  std::optional<Poly> generator_poly;

  std::size_t dimension() const { return generator.rows; }
};

LinearCodeF linear_code(gf::FieldPtr field, Matrix rows);
/// Rows x^j g(x) mod x^n - lambda for j < n - deg g.
Matrix generator_matrix_F(const gf::GaloisField& field, const Poly& g, std::size_t n, Elt lambda);
LinearCodeF constacyclic_code_F(gf::FieldPtr field, const Poly& g, std::size_t n, Elt lambda);
LinearCodeF hermitian_dual(const LinearCodeF& c);
LinearCodeF euclidean_dual(const LinearCodeF& c);
/// Gram test G conj(G)^T = 0.
bool is_hermitian_self_orthogonal(const LinearCodeF& c);
bool contains(const LinearCodeF& big, const std::vector<Elt>& word);

class ConstacyclicCode {
 public:
  ConstacyclicCode(cyclo::CosetPtr cs, std::vector<unsigned> exponents);

  const cyclo::CosetStructure& structure() const { return *cs_; }
  const cyclo::CosetPtr& structure_ptr() const { return cs_; }
  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned exponent_of_rep(unsigned rep) const;
  unsigned length() const { return cs_->N; }

  /// prod M_i^{a_i} over F_q.
  Poly generator_poly() const;
  /// log_q |C| = 2N - sum a_i deg M_i.
  unsigned size_log_q() const;

  bool operator==(const ConstacyclicCode& o) const { return cs_ == o.cs_ && exps_ == o.exps_; }

 private:
  cyclo::CosetPtr cs_;
  std::vector<unsigned> exps_;
};

/// Exponents given as (coset representative, exponent); unlisted cosets get 0.
ConstacyclicCode code_from_exponents(cyclo::CosetPtr cs, const std::vector<std::pair<unsigned, unsigned>>& exps);
ConstacyclicCode hermitian_dual(const ConstacyclicCode& c);
/// small is a subcode of big.
bool contains(const ConstacyclicCode& big, const ConstacyclicCode& small);
/// C contained in its Hermitian dual, decided on exponents.
bool is_hermitian_self_orthogonal(const ConstacyclicCode& c);
/// a_i >= p^e on symmetric cosets, a_i + a_j >= 2p^e on asymmetric pairs.
bool self_orthogonal_by_coset_conditions(const ConstacyclicCode& c);

/// Torsion exponents max(a - p^e, 0); an alpha-constacyclic code of length N.
LinearCodeF torsion(const ConstacyclicCode& c);
/// Residue exponents min(a, p^e).
LinearCodeF residue(const ConstacyclicCode& c);

// Ambient identification.
Poly ambient_modulus(const cyclo::CosetStructure& cs);  // (x^N - alpha)^2
Poly to_P(const cyclo::CosetStructure& cs, const ring::RingVector& w);
ring::RingVector from_P(const cyclo::CosetStructure& cs, const Poly& P);
/// sigma_{alpha(1+u)}: (c_0, ..., c_{N-1}) -> (alpha(1+u) c_{N-1}, c_0, ..., c_{N-2}).
ring::RingVector constashift(const cyclo::CosetStructure& cs, const ring::RingVector& w);

/// F_q-basis of C as R-vectors: x^j g for j < 2N - deg g.
std::vector<ring::RingVector> basis_words(const ConstacyclicCode& c);
/// Same basis in the split layout (u-parts | residue parts), length 2N.
Matrix split_basis(const ConstacyclicCode& c);
ring::RingVector from_split(const std::vector<Elt>& v);
std::vector<Elt> to_split(const ring::RingVector& w);

bool membership(const ConstacyclicCode& c, const ring::RingVector& w);
/// Calls visit on every codeword; throws BudgetExceeded when |C| > budget.
void enumerate_codewords(const ConstacyclicCode& c, std::uint64_t budget,
                         const std::function<void(const ring::RingVector&)>& visit);

/// Generator matrix over R in the form [I_k0 A B; 0 uI_k1 uD] after a column
/// permutation; column j of rows is original column perm[j].
struct RModuleMatrix {
  std::vector<ring::RingVector> rows;
  std::size_t k0 = 0;
  std::size_t k1 = 0;
  std::vector<std::size_t> perm;
  std::size_t length() const { return perm.size(); }
  /// Rows mapped back to the original coordinate order.
  std::vector<ring::RingVector> unpermuted_rows() const;
};

RModuleMatrix standard_form(const ring::ChainRing& R, std::vector<ring::RingVector> rows, std::size_t length);
bool is_standard_form(const ring::ChainRing& R, const RModuleMatrix& m);
/// Generator of the Hermitian dual:
///   H1 = (D^T A^T - B^T, -D^T, I)  (conjugated blocks), H2 = (-u A^T, u I, 0).
RModuleMatrix dual_generator_matrix_R(const ring::ChainRing& R, const RModuleMatrix& m);
/// F_q-span of the R-span of the rows, in the split layout.
Matrix split_span(const ring::ChainRing& R, const std::vector<ring::RingVector>& rows, std::size_t length);
/// Standard form of C's generators, then G conj(G)^T = 0 over R.
bool gram_self_orthogonality_check(const ConstacyclicCode& c);
RModuleMatrix generator_standard_form(const ConstacyclicCode& c);

}  // namespace ringcode::codes
