#include "ringcode/quantum.hpp"

#include "ringcode/maps.hpp"

namespace ringcode::quantum {
namespace {

void finish(QuantumParams& qp) {
  const SingletonReport s = singleton_check(qp);
  qp.slack = s.slack;
  qp.mds = s.mds && qp.d_exact;
  qp.two_d_eq_n_minus_k = s.two_d_eq_n_minus_k;
}

}  // namespace

SingletonReport singleton_check(unsigned n, unsigned k, unsigned d) {
  SingletonReport r;
  r.slack = static_cast<int>(n) - 2 * static_cast<int>(d) + 2 - static_cast<int>(k);
  if (r.slack < 0)
    throw InternalError("quantum Singleton bound violated: [[" + std::to_string(n) + "," + std::to_string(k) + "," +
                        std::to_string(d) + "]]");
  r.mds = r.slack == 0;
  r.two_d_eq_n_minus_k = 2 * static_cast<int>(d) == static_cast<int>(n) - static_cast<int>(k);
  return r;
}

SingletonReport singleton_check(const QuantumParams& qp) { return singleton_check(qp.n, qp.k, qp.d); }

QuantumParams hermitian_construction(const codes::LinearCodeF& D, const distance::Options& opt) {
  const auto& f = *D.field;
  for (std::size_t i = 0; i < D.generator.rows; ++i)
    for (std::size_t j = 0; j < D.generator.rows; ++j) {
      Elt acc = 0;
      for (std::size_t c = 0; c < D.length; ++c)
        acc = f.add(acc, f.mul(D.generator.at(i, c), f.conj(D.generator.at(j, c))));
      if (acc != 0)
        throw PreconditionError("code is not Hermitian self-orthogonal",
                                "rows " + std::to_string(i) + " and " + std::to_string(j) + " pair to " + f.format(acc));
    }
  QuantumParams qp;
  qp.construction = "hermitian";
  qp.n = static_cast<unsigned>(D.length);
  qp.k = static_cast<unsigned>(D.length - 2 * D.dimension());
  qp.q = f.conj_exponent();
  qp.distance = distance::min_distance(codes::hermitian_dual(D), opt);
  qp.d = qp.distance.d;
  qp.d_exact = qp.distance.exact;
  finish(qp);
  return qp;
}

QuantumParams symplectic_construction(const codes::ConstacyclicCode& C, const distance::Options& opt) {
  if (!codes::is_hermitian_self_orthogonal(C)) {
    const auto dual = codes::hermitian_dual(C);
    std::string witness;
    for (std::size_t i = 0; i < C.exponents().size(); ++i)
      if (dual.exponents()[i] > C.exponents()[i]) {
        witness = "coset " + std::to_string(C.structure().cosets[i].rep) + ": exponent " +
                  std::to_string(C.exponents()[i]) + " < dual exponent " + std::to_string(dual.exponents()[i]);
        break;
      }
    throw PreconditionError("code is not Hermitian self-orthogonal", witness);
  }
  const auto transfer = maps::trace_orthogonality_transfer(C);
  if (!transfer.ok)
    throw InternalError("trace orthogonality failed for a self-orthogonal code at basis pair " +
                        std::to_string(transfer.witness->first) + "," + std::to_string(transfer.witness->second));
  const unsigned N = C.length();
  const unsigned kc = C.size_log_q();
  const auto sf = codes::generator_standard_form(C);
  if (2 * sf.k0 + sf.k1 != kc) throw InternalError("standard-form type disagrees with the exponent size formula");

  QuantumParams qp;
  qp.construction = "symplectic";
  qp.n = N;
  qp.k = N - kc;
  qp.q = C.structure().field->conj_exponent();
  qp.distance = distance::min_distance_R(codes::hermitian_dual(C), opt);
  qp.d = qp.distance.d;
  qp.d_exact = qp.distance.exact;
  finish(qp);
  return qp;
}

}  // namespace ringcode::quantum
