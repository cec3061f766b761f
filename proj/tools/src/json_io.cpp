#include "json_io.hpp"

namespace ringcode::cli {

json coefficients_json(const gf::GaloisField& f, const Poly& p) {
  json out = json::array();
  for (auto c : p) out.push_back(f.format(c));
  return out;
}

json coset_json(const cyclo::CosetStructure& cs) {
  const auto& f = *cs.field;
  json j;
  j["p"] = cs.p;
  j["m"] = cs.m;
  j["e"] = cs.e;
  j["n"] = cs.n;
  j["N"] = cs.N;
  j["alpha"] = f.format(cs.alpha);
  j["r"] = cs.r;
  j["beta"] = f.format(cs.beta);
  j["extension_degree"] = cs.ext->degree();
  json cosets = json::array();
  for (const auto& c : cs.cosets) {
    json e;
    e["rep"] = c.rep;
    e["members"] = c.members;
    e["degree"] = c.degree();
    e["kind"] = c.symmetric ? "sym" : "asym";
    e["partner"] = cs.cosets[c.partner].rep;
    cosets.push_back(std::move(e));
  }
  j["cosets"] = std::move(cosets);
  json polys = json::array();
  for (const auto& p : cs.polys) polys.push_back(coefficients_json(f, p));
  j["polys"] = std::move(polys);
  return j;
}

json exponents_json(const codes::ConstacyclicCode& c) {
  json e = json::object();
  for (std::size_t i = 0; i < c.exponents().size(); ++i)
    e[std::to_string(c.structure().cosets[i].rep)] = c.exponents()[i];
  return e;
}

json descriptor_json(const codes::ConstacyclicCode& c) {
  const auto& cs = c.structure();
  json j;
  j["field"] = {{"p", cs.p}, {"m", cs.m}};
  j["alpha"] = cs.field->format(cs.alpha);
  j["n"] = cs.n;
  j["e"] = cs.e;
  j["exponents"] = exponents_json(c);
  j["size_log_q"] = c.size_log_q();
  j["generator_poly"] = coefficients_json(*cs.field, c.generator_poly());
  return j;
}

json linear_code_json(const codes::LinearCodeF& c) {
  json j;
  j["length"] = c.length;
  j["dimension"] = c.dimension();
  if (c.lambda) j["lambda"] = c.field->format(*c.lambda);
  if (c.generator_poly) j["generator_poly"] = coefficients_json(*c.field, *c.generator_poly);
  return j;
}

json distance_json(const gf::GaloisField& f, const distance::DistanceResult& d) {
  json j;
  j["d"] = d.d;
  j["exact"] = d.exact;
  j["method"] = d.method;
  j["cross_checked"] = d.cross_checked;
  j["work"] = d.work;
  j["certificate"] = coefficients_json(f, d.certificate);
  return j;
}

std::string params_string(unsigned n, unsigned k, unsigned d, unsigned q, bool exact) {
  return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + (exact ? "" : ">=") + std::to_string(d) + "]]_" +
         std::to_string(q);
}

json quantum_json(const quantum::QuantumParams& qp, const json& source) {
  json j;
  j["construction"] = qp.construction;
  j["n"] = qp.n;
  j["k"] = qp.k;
  j["d"] = qp.d;
  j["d_exact"] = qp.d_exact;
  j["q"] = qp.q;
  j["mds"] = qp.mds;
  j["two_d_eq_n_minus_k"] = qp.two_d_eq_n_minus_k;
  j["singleton_slack"] = qp.slack;
  j["params"] = params_string(qp.n, qp.k, qp.d, qp.q, qp.d_exact);
  j["distance_method"] = qp.distance.method;
  j["source"] = source;
  return j;
}

codes::ConstacyclicCode code_from_descriptor(const json& j) {
  try {
    const unsigned p = j.at("field").at("p").get<unsigned>();
    const unsigned m = j.at("field").at("m").get<unsigned>();
    auto field = gf::GaloisField::builtin(p, m);
    const Elt alpha = field->parse(j.at("alpha").get<std::string>());
    auto cs = cyclo::build_cosets(field, alpha, j.at("n").get<unsigned>(), j.at("e").get<unsigned>());
    std::vector<std::pair<unsigned, unsigned>> exps;
    for (const auto& [rep, a] : j.at("exponents").items())
      exps.emplace_back(static_cast<unsigned>(std::stoul(rep)), a.get<unsigned>());
    auto code = codes::code_from_exponents(cs, exps);
    if (j.contains("size_log_q") && j["size_log_q"].get<unsigned>() != code.size_log_q())
      throw ParameterError("descriptor size_log_q does not match its exponents");
    if (j.contains("generator_poly") && j["generator_poly"] != coefficients_json(*field, code.generator_poly()))
      throw ParameterError("descriptor generator_poly does not match its exponents");
    return code;
  } catch (const ParameterError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed code descriptor: ") + e.what());
  } catch (const std::invalid_argument& e) {  // std::stoul
    throw ParameterError(std::string("malformed code descriptor: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw ParameterError(std::string("malformed code descriptor: ") + e.what());
  }
}

}  // namespace ringcode::cli
