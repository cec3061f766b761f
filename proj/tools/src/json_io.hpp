#pragma once

// JSON views of the library's objects; key order is fixed.

#include <string>

#include "json.hpp"
#include "ringcode/quantum.hpp"

namespace ringcode::cli {

using json = nlohmann::ordered_json;

json coefficients_json(const gf::GaloisField& f, const Poly& p);
json coset_json(const cyclo::CosetStructure& cs);
json descriptor_json(const codes::ConstacyclicCode& c);
json exponents_json(const codes::ConstacyclicCode& c);
json linear_code_json(const codes::LinearCodeF& c);
json distance_json(const gf::GaloisField& f, const distance::DistanceResult& d);
json quantum_json(const quantum::QuantumParams& qp, const json& source);

/// "[[n,k,d]]_q", with ">=" before d for lower bounds.
std::string params_string(unsigned n, unsigned k, unsigned d, unsigned q, bool exact = true);

/// Inverse of descriptor_json; size_log_q and generator_poly are checked when present.
codes::ConstacyclicCode code_from_descriptor(const json& j);

}  // namespace ringcode::cli
