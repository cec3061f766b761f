#pragma once

// Exact minimum distance of F_q-linear codes.
//
// The exhaustive engine walks all q^k messages in p-ary Gray-code order over
// the F_p-expanded generator rows, so each step adds one row. The column-rank
// engine uses the fact that d > w iff every w columns of a parity-check
// matrix are independent; subsets are visited in colexicographic order.
// Both engines split their search space across worker threads and reduce to
// a result that does not depend on the worker count.

#include <cstdint>
#include <string>
#include <vector>

#include "ringcode/codes.hpp"

namespace ringcode::distance {

enum class Weight {
  hamming,  // count nonzero coordinates
  paired,   // length 2N; position i counts if v[i] or v[N+i] is nonzero
};

struct DistanceResult {
  unsigned d = 0;
  bool exact = true;  // false: no codeword of weight <= d_cap, d = d_cap + 1 is a lower bound
  std::string method;
  std::vector<Elt> certificate;  // a minimum-weight codeword (empty for lower bounds)
  std::uint64_t work = 0;        // codewords enumerated or column subsets tested
  bool cross_checked = false;    // a second engine reproduced d
};

/// 2^26, or the value of RINGCODE_BUDGET when set.
std::uint64_t default_budget();

DistanceResult min_distance_exhaustive(const codes::LinearCodeF& c, std::uint64_t budget, unsigned jobs = 1,
                                       Weight weight = Weight::hamming);
DistanceResult min_distance_column_rank(const codes::LinearCodeF& c, unsigned d_cap, unsigned jobs = 1);

struct Options {
  std::uint64_t budget = default_budget();
  unsigned d_cap = 8;
  unsigned jobs = 1;
  bool cross_check = true;  // run the second engine whenever it fits the budget
};

/// Column-rank first when the code is large, exhaustive when it is small;
/// whichever engine did not decide also runs when feasible and must agree.
DistanceResult min_distance(const codes::LinearCodeF& c, const Options& opt = {});
/// d_H(C) computed as d_H(Tor C).
DistanceResult min_distance_R(const codes::ConstacyclicCode& c, const Options& opt = {});
/// d_H(C) by enumerating C itself in the split layout.
DistanceResult min_distance_R_exhaustive(const codes::ConstacyclicCode& c, std::uint64_t budget, unsigned jobs = 1);

}  // namespace ringcode::distance
