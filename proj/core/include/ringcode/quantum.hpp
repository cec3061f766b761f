#pragma once

// Quantum code parameters from self-orthogonal classical codes.

#include <string>

#include "ringcode/distance.hpp"

namespace ringcode::quantum {

struct QuantumParams {
  std::string construction;  // "hermitian" or "symplectic"
  unsigned n = 0;
  unsigned k = 0;
  unsigned d = 0;
  bool d_exact = true;
  unsigned q = 0;  // p^m
  bool mds = false;
  bool two_d_eq_n_minus_k = false;
  int slack = 0;  // n - 2d + 2 - k
  distance::DistanceResult distance;
};

struct SingletonReport {
  int slack = 0;
  bool mds = false;
  bool two_d_eq_n_minus_k = false;
};

/// Throws InternalError when k > n - 2d + 2.
SingletonReport singleton_check(unsigned n, unsigned k, unsigned d);
SingletonReport singleton_check(const QuantumParams& qp);

/// D over F_{q^2} with D in its Hermitian dual gives [[n, n - 2 dim D, d(D^perp)]]_q.
QuantumParams hermitian_construction(const codes::LinearCodeF& D, const distance::Options& opt = {});

/// C over R Hermitian self-orthogonal gives [[N, N - k, d(Tor C^perp)]]_{p^m}
/// with k = 2N - sum a_i deg M_i.
QuantumParams symplectic_construction(const codes::ConstacyclicCode& C, const distance::Options& opt = {});

}  // namespace ringcode::quantum
