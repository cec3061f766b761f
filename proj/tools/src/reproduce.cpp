#include "reproduce.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "ringcode/maps.hpp"
#include "search.hpp"

namespace ringcode::cli {
namespace {

using Factors = std::vector<std::pair<std::string, unsigned>>;

struct Report {
  json checks = json::array();
  json notes = json::array();

  bool check(const std::string& claim, bool holds) {
    checks.push_back({{"claim", claim}, {"holds", holds}});
    return holds;
  }
  void note(const std::string& text) { notes.push_back(text); }
};

distance::Options distance_options(const ReproduceOptions& opt) {
  distance::Options o;
  o.jobs = opt.jobs;
  o.d_cap = opt.d_cap;
  if (opt.budget) o.budget = opt.budget;
  return o;
}

std::optional<std::size_t> coset_of(const cyclo::CosetStructure& cs, const std::string& text) {
  return cs.index_of_poly(cyclo::parse_polynomial(*cs.field, text));
}

std::optional<codes::ConstacyclicCode> code_from_factors(const cyclo::CosetPtr& cs, const Factors& factors) {
  std::vector<unsigned> exps(cs->cosets.size(), 0);
  for (const auto& [text, a] : factors) {
    auto idx = coset_of(*cs, text);
    if (!idx) return std::nullopt;
    exps[*idx] += a;
  }
  return codes::ConstacyclicCode(cs, std::move(exps));
}

codes::ConstacyclicCode require_code(const cyclo::CosetPtr& cs, const Factors& factors) {
  auto c = code_from_factors(cs, factors);
  if (!c) throw InternalError("factor list is not a product of coset polynomials");
  return *c;
}

std::string poly_text(const cyclo::CosetStructure& cs, std::size_t idx) {
  return cyclo::format_polynomial(*cs.field, cs.polys[idx]);
}

bool same_poly(const gf::GaloisField& f, const Poly& a, const std::string& b) {
  return a == cyclo::parse_polynomial(f, b);
}

json params_json(unsigned n, unsigned k, unsigned d, unsigned q, bool exact) {
  return {{"n", n}, {"k", k}, {"d", d}, {"d_exact", exact}, {"params", params_string(n, k, d, q, exact)}};
}

// Quantum parameters read off a printed generator of the dual code D:
// k = log_q|D| - N and d = d_H(Tor D), whether or not dual(D) is self-orthogonal.
quantum::QuantumParams params_from_dual(const codes::ConstacyclicCode& D, const distance::Options& o) {
  quantum::QuantumParams qp;
  qp.construction = "symplectic";
  qp.n = D.length();
  qp.k = D.size_log_q() - D.length();
  qp.q = D.structure().field->conj_exponent();
  qp.distance = distance::min_distance_R(D, o);
  qp.d = qp.distance.d;
  qp.d_exact = qp.distance.exact;
  const auto s = quantum::singleton_check(qp);
  qp.slack = s.slack;
  qp.mds = s.mds && qp.d_exact;
  qp.two_d_eq_n_minus_k = s.two_d_eq_n_minus_k;
  return qp;
}

json finish(const std::string& target, const std::string& status, json published, json computed, Report& r) {
  json j;
  j["target"] = target;
  j["status"] = status;
  j["published"] = std::move(published);
  j["computed"] = std::move(computed);
  j["checks"] = std::move(r.checks);
  j["notes"] = std::move(r.notes);
  return j;
}

gf::FieldPtr f9() { return gf::GaloisField::builtin(3, 1); }

json example_5_10(const ReproduceOptions& opt) {
  auto F = f9();
  auto cs = cyclo::build_cosets(F, F->parse("w^4"), 5, 0);
  const std::string f0 = "x+1", f1 = "x^2+w^5x+1", f2 = "x^2+w^7x+1";
  Report r;
  r.check("x^5 - w^4 = f0 f1 f2 with f0, f1, f2 the coset polynomials",
          coset_of(*cs, f0) && coset_of(*cs, f1) && coset_of(*cs, f2));
  r.check("f2 = f1 dagger", same_poly(*F, cyclo::dagger(*F, cyclo::parse_polynomial(*F, f1)), f2));
  const auto C = require_code(cs, {{f0, 2}, {f2, 2}});
  const auto D = codes::hermitian_dual(C);
  r.check("Hermitian dual of C is <f2^2>", D == require_code(cs, {{f2, 2}}));
  r.check("C is Hermitian self-orthogonal (exponent test)", codes::is_hermitian_self_orthogonal(C));
  r.check("C is Hermitian self-orthogonal (Gram test)", codes::gram_self_orthogonality_check(C));
  const auto tor = codes::torsion(D);
  r.check("Tor of the dual is <f2>", same_poly(*F, *tor.generator_poly, f2));
  const auto qp = quantum::symplectic_construction(C, distance_options(opt));
  r.check("distance is exact", qp.d_exact);
  r.check("quantum MDS", qp.mds);
  const bool ok = qp.n == 5 && qp.k == 1 && qp.d == 3 && qp.d_exact && qp.mds;
  json published = {{"code", "<f0^2 f2^2>"}, {"dual", "<f2^2>"}, {"d", 3}, {"params", "[[5,1,3]]_3"}, {"mds", true}};
  json computed;
  computed["quantum"] = quantum_json(qp, descriptor_json(C));
  computed["dual"] = descriptor_json(D);
  computed["torsion_of_dual"] = linear_code_json(tor);
  computed["distance"] = distance_json(*F, qp.distance);
  return finish("example5.10", ok ? "match" : "mismatch", std::move(published), std::move(computed), r);
}

json example_5_11(const ReproduceOptions& opt) {
  auto F = f9();
  auto cs = cyclo::build_cosets(F, F->parse("w^4"), 10, 0);
  const std::string f0 = "x+w^2", f1 = "x+w^6", f2 = "x^2+wx+2", f3 = "x^2+w^3x+2", f4 = "x^2+w^5x+2",
                    f5 = "x^2+w^7x+2";
  Report r;
  bool all = true;
  for (const auto& f : {f0, f1, f2, f3, f4, f5}) all = all && coset_of(*cs, f).has_value();
  r.check("x^10 - w^4 = f0 f1 f2 f3 f4 f5 with coset polynomials", all);
  auto dag = [&](const std::string& f) { return cyclo::dagger(*F, cyclo::parse_polynomial(*F, f)); };
  r.check("f0 = f1 dagger", same_poly(*F, dag(f1), f0));
  r.check("f4 = f5 dagger", same_poly(*F, dag(f5), f4));
  const auto C = require_code(cs, {{f0, 2}, {f2, 2}, {f3, 2}, {f4, 2}});
  const auto printed = require_code(cs, {{f0, 2}, {f4, 2}});
  const auto true_dual = codes::hermitian_dual(C);
  r.check("Hermitian dual of C is <f0^2 f4^2>", true_dual == printed);
  r.check("C is Hermitian self-orthogonal", codes::is_hermitian_self_orthogonal(C));
  const auto tor = codes::torsion(printed);
  r.check("Tor<f0^2 f4^2> = <f0 f4>",
          *tor.generator_poly == poly::mul(*F, cyclo::parse_polynomial(*F, f0), cyclo::parse_polynomial(*F, f4)));

  auto o = distance_options(opt);
  o.cross_check = true;
  const auto qp = params_from_dual(printed, o);
  r.check("both distance engines agree on d(Tor<f0^2 f4^2>)", qp.distance.cross_checked);
  r.check("quantum MDS", qp.mds);

  SearchTask task;
  task.n = 10;
  task.min_k = 4;
  task.d_cap = opt.d_cap;
  task.jobs = opt.jobs;
  task.budget = opt.budget;
  task.result_cap = 1000;
  const json found = run_search(task);
  unsigned best = 0;
  for (const auto& q : found["results"])
    if (q["k"].get<unsigned>() == 4) best = std::max(best, q["d"].get<unsigned>());
  r.check("some self-orthogonal code of length 10 in this family gives [[10,4,4]]_3", best >= 4);

  r.note("parameters are computed from the printed generator of the dual code");
  r.note("the true Hermitian dual of C is " + [&] {
    std::string s;
    for (std::size_t i = 0; i < cs->cosets.size(); ++i)
      if (true_dual.exponents()[i]) s += "(" + poly_text(*cs, i) + ")^" + std::to_string(true_dual.exponents()[i]);
    return s;
  }());
  r.note("x+w^2 is its own dagger, so f0 is not f1 dagger");
  r.note("largest d over self-orthogonal codes with k = 4: " + std::to_string(best));

  const bool ok = qp.n == 10 && qp.k == 4 && qp.d == 4 && qp.d_exact && qp.distance.cross_checked;
  json published = {{"code", "<f0^2 f2^2 f3^2 f4^2>"}, {"dual", "<f0^2 f4^2>"}, {"d", 4}, {"params", "[[10,4,4]]_3"},
                {"mds", true}};
  json computed;
  computed["quantum"] = quantum_json(qp, descriptor_json(printed));
  computed["dual_of_code"] = descriptor_json(true_dual);
  computed["torsion_of_printed_dual"] = linear_code_json(tor);
  computed["distance"] = distance_json(*F, qp.distance);
  return finish("example5.11", ok ? "match" : "mismatch", std::move(published), std::move(computed), r);
}

struct TableRow {
  unsigned n;
  Factors printed;
  std::optional<Factors> corrected;
  unsigned k, d;
};

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {14, {{"x+w^2", 2}, {"x^3+w^3x^2+w^3x+w^2", 2}}, std::nullopt, 6, 4},
      {20, {{"x+w^3", 2}, {"x^2+w^2x+w^2", 2}}, std::nullopt, 14, 3},
      {20, {{"x+w^3", 2}, {"x+w^5", 2}, {"x^2+w^6x+w^6", 2}}, std::nullopt, 12, 4},
      {40, {{"x^2+w^5", 2}, {"x^2+w^3x+w^7", 2}, {"x^2+w^5x+w^3", 2}, {"x^2+w^7x+w", 2}}, std::nullopt, 24, 6},
      {61, {{"x^5+w^5x^3+w^7x^2+1", 2}}, std::nullopt, 51, 4},
      {70, {{"x+w^6", 2}, {"x^2+w^5x+2", 2}, {"x^3+wx^2+wx+w^6", 2}}, std::nullopt, 58, 4},
      {82,
       {{"x+w^6", 2}, {"x^4+w^7x^3+wx+w^3x+1", 2}},
       Factors{{"x+w^6", 2}, {"x^4+w^7x^3+wx^2+w^3x+1", 2}},
       72,
       4},
  };
  return rows;
}

json table_row(std::size_t index, const ReproduceOptions& opt) {
  const auto& row = table_rows()[index];
  auto F = f9();
  auto cs = cyclo::build_cosets(F, F->parse("w^4"), row.n, 0);
  Report r;
  const auto literal = code_from_factors(cs, row.printed);
  r.check("printed factors are minimal polynomials of x^" + std::to_string(row.n) + " - w^4", literal.has_value());
  if (!literal) {
    const auto& fixed = *row.corrected;
    for (std::size_t i = 0; i < row.printed.size(); ++i)
      if (row.printed[i].first != fixed[i].first)
        r.note("printed factor " + row.printed[i].first + " is not a coset polynomial; used " + fixed[i].first);
  }
  const auto D = literal ? *literal : require_code(cs, *row.corrected);
  const auto C = codes::hermitian_dual(D);
  const bool so = r.check("the code whose dual is printed is Hermitian self-orthogonal",
                          codes::is_hermitian_self_orthogonal(C));
  const auto qp = params_from_dual(D, distance_options(opt));
  if (so) {
    distance::Options o = distance_options(opt);
    o.cross_check = false;
    const auto sp = quantum::symplectic_construction(C, o);
    r.check("symplectic construction reproduces the parameters", sp.n == qp.n && sp.k == qp.k && sp.d == qp.d);
  }
  if (index < 3) r.check("2d = n - k", qp.two_d_eq_n_minus_k);

  const bool ok = qp.n == row.n && qp.k == row.k && qp.d == row.d && qp.d_exact;
  json published = {{"n", row.n}, {"d", row.d}, {"params", params_string(row.n, row.k, row.d, 3)}};
  json printed = json::array();
  for (const auto& [f, a] : row.printed) printed.push_back("(" + f + ")^" + std::to_string(a));
  published["dual_generator"] = std::move(printed);
  json computed = params_json(qp.n, qp.k, qp.d, qp.q, qp.d_exact);
  computed["singleton_slack"] = qp.slack;
  computed["two_d_eq_n_minus_k"] = qp.two_d_eq_n_minus_k;
  computed["extension_degree"] = cs->ext->degree();
  computed["dual"] = descriptor_json(D);
  computed["distance"] = distance_json(*F, qp.distance);
  return finish("table1.row" + std::to_string(index + 1), ok ? "match" : "mismatch", std::move(published),
                std::move(computed), r);
}

json table_1(const ReproduceOptions& opt) {
  json rows = json::array();
  bool ok = true;
  for (std::size_t i = 0; i < table_rows().size(); ++i) {
    rows.push_back(table_row(i, opt));
    ok = ok && rows.back()["status"] == "match";
  }
  json j;
  j["target"] = "table1";
  j["status"] = ok ? "match" : "mismatch";
  j["rows"] = std::move(rows);
  return j;
}

json example_4_7(const ReproduceOptions& opt) {
  auto F = gf::GaloisField::builtin(2, 1);
  const Elt w = F->parse("w");
  auto cs = cyclo::build_cosets(F, w, 5, 1);
  const std::string f0 = "x+w", f1 = "x^2+x+w^2", f2 = "x^2+w^2x+w^2";
  Report r;
  r.check("x^10 - w = (f0 f1 f2)^2 with coset polynomials",
          coset_of(*cs, f0) && coset_of(*cs, f1) && coset_of(*cs, f2));
  const auto dag1 = cyclo::dagger(*F, cyclo::parse_polynomial(*F, f1));
  r.check("f0 dagger = f0", same_poly(*F, cyclo::dagger(*F, cyclo::parse_polynomial(*F, f0)), f0));
  r.check("f1 dagger = f1", same_poly(*F, dag1, f1));
  const auto C = require_code(cs, {{f0, 1}, {f1, 3}, {f2, 4}});
  const auto D = codes::hermitian_dual(C);
  // The printed generator (f0 dagger)^3 (f1 dagger), with the daggers computed.
  r.check("Hermitian dual of C is (f0 dagger)^3 (f1 dagger)",
          D == require_code(cs, {{f0, 3}, {cyclo::format_polynomial(*F, dag1), 1}}));
  const auto M = maps::GrayMatrix::compatible(*F, w, F->one(), w);
  r.check("M is constacyclic-compatible", maps::constacyclic_compatible(*F, M, w));
  r.check("M satisfies the Omega condition", maps::omega_condition(*F, M).has_value());
  const auto G = maps::gray_image_code(M, D);
  const auto span = maps::gray_image_span(M, D);
  r.check("generator polynomial transport equals the matrix image span",
          la::same_row_space(*F, G.generator, span.generator));
  r.check("image is w^2-constacyclic with the dual's generator polynomial",
          G.lambda && *G.lambda == F->mul(w, w) && G.generator_poly && *G.generator_poly == D.generator_poly());
  const auto dist = distance::min_distance_column_rank(G, opt.d_cap, opt.jobs);
  r.note("the dagger of x^2+x+w^2 is " + cyclo::format_polynomial(*F, dag1));
  r.note("the example's M family is compatible but fails the Omega condition; the image is checked directly");
  const bool ok = G.length == 20 && G.dimension() == 15 && dist.d == 4 && dist.exact;
  json published = {{"code", "<f0 f1^3 f2^4>"}, {"dual", "<(f0 dagger)^3 (f1 dagger)>"}, {"image", "[20,15,4]"}};
  json computed;
  computed["image"] = linear_code_json(G);
  computed["image"]["d"] = dist.d;
  computed["parameters"] = "[" + std::to_string(G.length) + "," + std::to_string(G.dimension()) + "," +
                           std::to_string(dist.d) + "]";
  computed["dual"] = descriptor_json(D);
  computed["distance"] = distance_json(*F, dist);
  return finish("example4.7", ok ? "match" : "mismatch", std::move(published), std::move(computed), r);
}

json example_4_10(const ReproduceOptions&) {
  auto F = gf::GaloisField::builtin(2, 1);
  auto cs = cyclo::build_cosets(F, F->parse("w"), 17, 1);
  Report r;
  // Printed labels are 4-cyclotomic coset representatives modulo 17.
  auto label = [&](unsigned j) -> std::size_t {
    for (std::size_t i = 0; i < cs->cosets.size(); ++i)
      for (auto m : cs->cosets[i].members)
        if (m % cs->n == j) return i;
    throw InternalError("no coset for label " + std::to_string(j));
  };
  const std::size_t M0 = label(0), M1 = label(1), M2 = label(2), M3 = label(3), M6 = label(6);
  std::multiset<unsigned> degrees;
  for (const auto& c : cs->cosets) degrees.insert(c.degree());
  r.check("one linear and four quartic factors", degrees == std::multiset<unsigned>{1, 4, 4, 4, 4});
  auto dag_is = [&](std::size_t a, std::size_t b) { return cyclo::dagger(*F, cs->polys[a]) == cs->polys[b]; };
  r.check("M0 dagger = M0", dag_is(M0, M0));
  r.check("M2 dagger = M1", dag_is(M2, M1));
  r.check("M6 dagger = M3", dag_is(M6, M3));
  std::vector<unsigned> e(cs->cosets.size(), 0);
  e[M0] = 2, e[M1] = 4, e[M3] = 4, e[M6] = 2;
  const codes::ConstacyclicCode C(cs, e);
  std::vector<unsigned> pe(cs->cosets.size(), 0);
  pe[M0] = 2, pe[M1] = 4, pe[M3] = 2;  // (M0 dagger)^2 (M2 dagger)^4 (M6 dagger)^2
  const auto D = codes::hermitian_dual(C);
  r.check("Hermitian dual of C is (M0 dagger)^2 (M2 dagger)^4 (M6 dagger)^2", D == codes::ConstacyclicCode(cs, pe));
  r.check("C is contained in its Hermitian dual", codes::contains(D, C));
  const std::vector<std::pair<std::size_t, std::string>> residues = {{M0, "x+w"},
                                                                     {M1, "x^4+x^3+wx^2+x+w"},
                                                                     {M2, "x^4+x^3+w^2x^2+x+w"},
                                                                     {M3, "x^4+wx^3+x^2+wx+w"},
                                                                     {M6, "x^4+w^2x^3+x^2+w^2x+w"}};
  bool roots_ok = true;
  for (const auto& [idx, text] : residues) roots_ok = roots_ok && same_poly(*F, cs->polys[idx], text);
  r.check("printed factors reduce mod u to the minimal polynomials", roots_ok);
  for (const auto& [idx, text] : residues)
    if (!same_poly(*F, cs->polys[idx], text))
      r.note("coset " + std::to_string(cs->cosets[idx].rep) + ": minimal polynomial " + poly_text(*cs, idx) +
             ", printed residue " + text);
  r.note("coset labels are matched through j mod 17 of the coset members");
  json published = {{"code", "<M0^2 M1^4 M3^4 M6^2>"}, {"dual", "<(M0 dagger)^2 (M2 dagger)^4 (M6 dagger)^2>"}};
  json computed;
  computed["cosets"] = coset_json(*cs);
  computed["code"] = descriptor_json(C);
  computed["dual"] = descriptor_json(D);
  return finish("example4.10", "discrepant", std::move(published), std::move(computed), r);
}

json example_4_13(const ReproduceOptions& opt) {
  auto F = gf::GaloisField::builtin(2, 2);
  const Elt alpha = F->parse("w^6");
  auto cs = cyclo::build_cosets(F, alpha, 3, 1);
  Report r;
  r.check("beta = w^3", cs->beta == F->parse("w^3"));
  const std::vector<std::string> printed = {"x+w^3", "x+w^8", "x+w^13"};
  bool roots_ok = true;
  Poly prod{F->one()};
  for (const auto& f : printed) {
    roots_ok = roots_ok && coset_of(*cs, f).has_value();
    prod = poly::mul(*F, prod, cyclo::parse_polynomial(*F, f));
  }
  r.check("printed factors are minimal polynomials of x^3 - beta", roots_ok);
  r.note("the printed factors multiply to " + cyclo::format_polynomial(*F, prod) + ", not x^3 - beta = " +
         cyclo::format_polynomial(*F, Poly{F->neg(cs->beta), 0, 0, F->one()}));
  std::string ours;
  for (std::size_t i = 0; i < cs->polys.size(); ++i) ours += (i ? ", " : "") + poly_text(*cs, i);
  r.note("minimal polynomials used in their place, in the same order: " + ours);
  // Printed f0, f1, f2 are taken as the cosets in increasing representative order.
  const auto C = codes::code_from_exponents(cs, {{1, 4}, {6, 4}, {11, 2}});
  r.check("C is Hermitian self-orthogonal (exponent test)", codes::is_hermitian_self_orthogonal(C));
  r.check("C is Hermitian self-orthogonal (Gram test)", codes::gram_self_orthogonality_check(C));
  const auto M = maps::GrayMatrix::compatible(*F, alpha, F->one(), F->primitive());
  r.check("M satisfies the Omega condition", maps::omega_condition(*F, M).has_value());
  const auto image = maps::gray_image_code(M, C);
  r.check("Gray image of C is Hermitian self-orthogonal (Gram test)", codes::is_hermitian_self_orthogonal(image));
  const auto image_dual = maps::gray_image_code(M, codes::hermitian_dual(C));
  r.check("Gray image of the dual is the Hermitian dual of the Gray image",
          la::same_row_space(*F, image_dual.generator, codes::hermitian_dual(image).generator));
  const auto qp = quantum::hermitian_construction(image, distance_options(opt));
  r.check("Singleton slack is consistent", qp.slack == static_cast<int>(qp.n) - 2 * static_cast<int>(qp.d) + 2 -
                                                          static_cast<int>(qp.k));
  r.note("|C| = 16^" + std::to_string(C.size_log_q()) + ", so the image has dimension " +
         std::to_string(image.dimension()) + " and k = 12 - 2*" + std::to_string(image.dimension()) + " = " +
         std::to_string(qp.k) + "; the printed [[12,10,2]]_4 needs dimension 1");
  json published = {{"code", "<f0^4 f1^4 f2^2>"}, {"roots", printed}, {"params", "[[12,10,2]]_4"}};
  json computed;
  computed["quantum"] = quantum_json(qp, descriptor_json(C));
  computed["image"] = linear_code_json(image);
  computed["distance"] = distance_json(*F, qp.distance);
  return finish("example4.13", "discrepant", std::move(published), std::move(computed), r);
}

using Runner = std::function<json(const ReproduceOptions&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> m = {
      {"example4.7", example_4_7},   {"example4.10", example_4_10}, {"example4.13", example_4_13},
      {"example5.10", example_5_10}, {"example5.11", example_5_11}, {"table1", table_1},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> t = {"example4.7",  "example4.10", "example4.13",
                                             "example5.10", "example5.11", "table1"};
  return t;
}

json reproduce(const std::string& target, const ReproduceOptions& opt) {
  std::vector<std::string> todo;
  if (target == "all") {
    todo = reproduce_targets();
  } else if (runners().count(target)) {
    todo = {target};
  } else {
    throw ParameterError("unknown reproduce target '" + target + "'");
  }
  json targets = json::array();
  std::map<std::string, unsigned> counts = {{"match", 0}, {"discrepant", 0}, {"mismatch", 0}};
  for (const auto& t : todo) {
    targets.push_back(runners().at(t)(opt));
    ++counts[targets.back()["status"].get<std::string>()];
  }
  json out;
  out["targets"] = std::move(targets);
  out["summary"] = {{"match", counts["match"]}, {"discrepant", counts["discrepant"]}, {"mismatch", counts["mismatch"]}};
  return out;
}

bool has_mismatch(const json& report) { return report["summary"]["mismatch"].get<unsigned>() > 0; }

}  // namespace ringcode::cli
