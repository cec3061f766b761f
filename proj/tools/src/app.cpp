#include "app.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "reproduce.hpp"
#include "ringcode/maps.hpp"
#include "search.hpp"

namespace ringcode::cli {
namespace {

struct CodeArgs {
  unsigned p = 3, m = 1, n = 5, e = 0;
  std::string alpha = "w^4";
  std::string exponents;
  std::string descriptor;
};

struct RunArgs {
  unsigned d_cap = 8;
  std::uint64_t budget = 0;
  unsigned jobs = 1;
  bool pretty = false;
};

void add_field_flags(CLI::App* app, CodeArgs& a) {
  app->add_option("--p", a.p, "characteristic")->capture_default_str();
  app->add_option("--m", a.m, "the field is F_{p^{2m}}")->capture_default_str();
  app->add_option("--n", a.n, "length factor prime to p")->capture_default_str();
  app->add_option("--e", a.e, "length is p^e n")->capture_default_str();
  app->add_option("--alpha", a.alpha, "unit alpha with alpha * conj(alpha) = 1")->capture_default_str();
}

void add_code_flags(CLI::App* app, CodeArgs& a) {
  add_field_flags(app, a);
  app->add_option("--exponents", a.exponents, "coset exponents \"rep=a,...\"; missing cosets get 0");
  app->add_option("--descriptor", a.descriptor, "JSON code descriptor file, or - for stdin");
}

void add_run_flags(CLI::App* app, RunArgs& r) {
  app->add_option("--d-cap", r.d_cap, "largest weight tried by the column-rank engine")->capture_default_str();
  app->add_option("--budget", r.budget, "codeword budget for exhaustive enumeration");
  app->add_option("--jobs", r.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
}

cyclo::CosetPtr structure(const CodeArgs& a) {
  auto field = gf::GaloisField::builtin(a.p, a.m);
  return cyclo::build_cosets(field, field->parse(a.alpha), a.n, a.e);
}

std::vector<std::pair<unsigned, unsigned>> parse_exponents(const std::string& text) {
  std::vector<std::pair<unsigned, unsigned>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParameterError("exponent entry '" + item + "' is not rep=a");
    try {
      std::size_t used = 0;
      const auto rep = std::stoul(item.substr(0, eq), &used);
      if (used != eq) throw std::invalid_argument("rep");
      const auto rest = item.substr(eq + 1);
      const auto a = std::stoul(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("exponent");
      out.emplace_back(static_cast<unsigned>(rep), static_cast<unsigned>(a));
    } catch (const std::logic_error&) {
      throw ParameterError("exponent entry '" + item + "' is not rep=a");
    }
  }
  return out;
}

codes::ConstacyclicCode load_code(const CodeArgs& a) {
  if (!a.descriptor.empty()) {
    if (!a.exponents.empty()) throw ParameterError("give either --descriptor or --exponents, not both");
    json j;
    try {
      if (a.descriptor == "-") {
        j = json::parse(std::cin);
      } else {
        std::ifstream in(a.descriptor);
        if (!in) throw ParameterError("cannot open descriptor file " + a.descriptor);
        j = json::parse(in);
      }
    } catch (const json::parse_error& e) {
      throw ParameterError(std::string("descriptor is not JSON: ") + e.what());
    }
    return code_from_descriptor(j);
  }
  return codes::code_from_exponents(structure(a), parse_exponents(a.exponents));
}

distance::Options options(const RunArgs& r) {
  distance::Options o;
  o.d_cap = r.d_cap;
  o.jobs = r.jobs;
  if (r.budget) o.budget = r.budget;
  return o;
}

maps::GrayMatrix gray_matrix(const gf::GaloisField& f, Elt alpha, const std::string& text) {
  if (text.empty()) return maps::GrayMatrix::compatible(f, alpha, f.one(), f.primitive());
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw ParameterError("--gray-matrix must look like \"a,b;s,t\"");
  auto pair = [&](const std::string& row) {
    const auto comma = row.find(',');
    if (comma == std::string::npos) throw ParameterError("--gray-matrix must look like \"a,b;s,t\"");
    return std::make_pair(f.parse(row.substr(0, comma)), f.parse(row.substr(comma + 1)));
  };
  const auto [a, b] = pair(text.substr(0, semi));
  const auto [s, t] = pair(text.substr(semi + 1));
  return maps::GrayMatrix::make(f, a, b, s, t);
}

json gray_matrix_json(const gf::GaloisField& f, const maps::GrayMatrix& M) {
  return json::array({json::array({f.format(M.a), f.format(M.b)}), json::array({f.format(M.s), f.format(M.t)})});
}

void print_quantum(std::ostream& err, const json& q) {
  err << q["construction"].get<std::string>() << "  " << q["params"].get<std::string>()
      << (q["mds"].get<bool>() ? "  MDS" : "") << "  slack " << q["singleton_slack"].get<int>() << "  ("
      << q["distance_method"].get<std::string>() << ")\n";
}

void print_reproduce(std::ostream& err, const json& report) {
  auto line = [&](const json& t) {
    std::string params;
    const auto& c = t["computed"];
    if (c.contains("quantum")) params = c["quantum"]["params"].get<std::string>();
    else if (c.contains("params")) params = c["params"].get<std::string>();
    else if (c.contains("parameters")) params = c["parameters"].get<std::string>();
    std::size_t failed = 0;
    for (const auto& ch : t["checks"]) failed += !ch["holds"].get<bool>();
    err << std::left << std::setw(16) << t["target"].get<std::string>() << std::setw(12)
        << t["status"].get<std::string>() << std::setw(18) << params << failed << " of " << t["checks"].size()
        << " claims fail\n";
  };
  for (const auto& t : report["targets"]) {
    if (t.contains("rows")) {
      for (const auto& row : t["rows"]) line(row);
    } else {
      line(t);
    }
  }
}

int fail(std::ostream& out, std::ostream& err, int code, const std::string& kind, const std::string& message,
         const std::string& witness = {}) {
  json j;
  j["error"] = kind;
  j["message"] = message;
  if (!witness.empty()) j["witness"] = witness;
  out << j.dump(2) << '\n';
  err << "ringcode: " << message << (witness.empty() ? "" : " (" + witness + ")") << '\n';
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constacyclic codes over F_{p^{2m}} + uF_{p^{2m}} and the quantum codes they give", "ringcode"};
  app.require_subcommand(1);
  app.fallthrough();
  RunArgs run_args;
  app.add_flag("--pretty", run_args.pretty, "human-readable summary on stderr");

  CodeArgs code_args;
  std::string gray_text;
  bool of_dual = false;
  std::string construction = "symplectic";
  unsigned min_k = 1;
  std::size_t result_cap = 20;
  std::uint64_t region_cap = std::uint64_t{1} << 20;
  std::string target;

  auto* factor = app.add_subcommand("factor", "cosets and minimal polynomials of x^n - beta");
  add_field_flags(factor, code_args);

  auto* code = app.add_subcommand("code", "build a code and report its structure");
  add_code_flags(code, code_args);
  add_run_flags(code, run_args);
  bool want_distance = false;
  code->add_flag("--distance", want_distance, "also compute the minimum Hamming distance");

  auto* dual = app.add_subcommand("dual", "Hermitian dual of a code");
  add_code_flags(dual, code_args);

  auto* gray = app.add_subcommand("gray", "Gray image over F_{2^{2m}} (characteristic 2)");
  add_code_flags(gray, code_args);
  add_run_flags(gray, run_args);
  gray->add_option("--gray-matrix", gray_text, "\"a,b;s,t\"; default b = 1, t = w, a = t alpha, s = b alpha");
  gray->add_flag("--of-dual", of_dual, "map the Hermitian dual instead of the code");

  auto* quantum = app.add_subcommand("quantum", "quantum code from a self-orthogonal code");
  add_code_flags(quantum, code_args);
  add_run_flags(quantum, run_args);
  quantum->add_option("--construction", construction, "symplectic or hermitian")
      ->check(CLI::IsMember({"symplectic", "hermitian"}))
      ->capture_default_str();
  quantum->add_option("--gray-matrix", gray_text, "Gray matrix for the Hermitian construction");

  auto* search = app.add_subcommand("search", "rank the self-orthogonal codes of a family");
  add_field_flags(search, code_args);
  add_run_flags(search, run_args);
  search->add_option("--construction", construction, "symplectic or hermitian")
      ->check(CLI::IsMember({"symplectic", "hermitian"}))
      ->capture_default_str();
  search->add_option("--min-k", min_k, "smallest logical dimension kept")->capture_default_str();
  search->add_option("--cap", result_cap, "number of results")->capture_default_str();
  search->add_option("--max-region", region_cap, "largest exponent region searched")->capture_default_str();

  auto* repro = app.add_subcommand("reproduce", "recompute the published examples and table");
  std::vector<std::string> choices = reproduce_targets();
  choices.push_back("all");
  repro->add_option("target", target, "example4.7 example4.10 example4.13 example5.10 example5.11 table1 all")
      ->required()
      ->check(CLI::IsMember(choices));
  add_run_flags(repro, run_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    return fail(out, err, exit_parameter, "parameter", e.what());
  }
  // Table distances are all at most 6; the reproduction runs use a cap of 7.
  if (repro->parsed() && repro->get_option("--d-cap")->count() == 0) run_args.d_cap = 7;

  try {
    json result;
    if (factor->parsed()) {
      result = coset_json(*structure(code_args));
      if (run_args.pretty) {
        const auto cs = structure(code_args);
        for (std::size_t i = 0; i < cs->cosets.size(); ++i)
          err << std::setw(6) << cs->cosets[i].rep << (cs->cosets[i].symmetric ? "  sym   " : "  asym  ")
              << cyclo::format_polynomial(*cs->field, cs->polys[i]) << '\n';
      }
    } else if (code->parsed()) {
      const auto c = load_code(code_args);
      result["code"] = descriptor_json(c);
      result["hermitian_self_orthogonal"] = codes::is_hermitian_self_orthogonal(c);
      result["torsion"] = linear_code_json(codes::torsion(c));
      result["residue"] = linear_code_json(codes::residue(c));
      if (want_distance) {
        const auto d = distance::min_distance_R(c, options(run_args));
        result["distance"] = distance_json(*c.structure().field, d);
      }
      if (run_args.pretty)
        err << "|C| = q^" << c.size_log_q() << ", Tor dim " << result["torsion"]["dimension"] << ", Res dim "
            << result["residue"]["dimension"] << '\n';
    } else if (dual->parsed()) {
      const auto c = load_code(code_args);
      const auto d = codes::hermitian_dual(c);
      result["code"] = descriptor_json(c);
      result["dual"] = descriptor_json(d);
      result["hermitian_self_orthogonal"] = codes::is_hermitian_self_orthogonal(c);
      if (run_args.pretty) err << "dual exponents " << exponents_json(d).dump() << '\n';
    } else if (gray->parsed()) {
      const auto c0 = load_code(code_args);
      const auto c = of_dual ? codes::hermitian_dual(c0) : c0;
      const auto& f = *c.structure().field;
      const auto M = gray_matrix(f, c.structure().alpha, gray_text);
      const auto image = maps::gray_image_code(M, c);
      const auto omega = maps::omega_condition(f, M);
      result["matrix"] = gray_matrix_json(f, M);
      result["constacyclic_compatible"] = maps::constacyclic_compatible(f, M, c.structure().alpha);
      result["omega"] = omega ? json(f.format(*omega)) : json(nullptr);
      result["source"] = descriptor_json(c);
      result["image"] = linear_code_json(image);
      const auto d = distance::min_distance(image, options(run_args));
      result["image"]["distance"] = distance_json(f, d);
      if (run_args.pretty)
        err << "[" << image.length << "," << image.dimension() << "," << (d.exact ? "" : ">=") << d.d << "] over F_"
            << f.order() << '\n';
    } else if (quantum->parsed()) {
      const auto c = load_code(code_args);
      quantum::QuantumParams qp;
      if (construction == "hermitian") {
        const auto& f = *c.structure().field;
        const auto M = gray_matrix(f, c.structure().alpha, gray_text);
        qp = quantum::hermitian_construction(maps::gray_image_code(M, c), options(run_args));
      } else {
        qp = quantum::symplectic_construction(c, options(run_args));
      }
      result = quantum_json(qp, descriptor_json(c));
      if (run_args.pretty) print_quantum(err, result);
    } else if (search->parsed()) {
      SearchTask task;
      task.p = code_args.p;
      task.m = code_args.m;
      task.n = code_args.n;
      task.e = code_args.e;
      task.alpha = code_args.alpha;
      task.construction = construction;
      task.min_k = min_k;
      task.result_cap = result_cap;
      task.region_cap = region_cap;
      task.d_cap = run_args.d_cap;
      task.budget = run_args.budget;
      task.jobs = run_args.jobs;
      result = run_search(task);
      if (run_args.pretty)
        for (const auto& q : result["results"]) print_quantum(err, q);
    } else if (repro->parsed()) {
      ReproduceOptions ro;
      ro.jobs = run_args.jobs;
      ro.d_cap = run_args.d_cap;
      ro.budget = run_args.budget;
      result = reproduce(target, ro);
      out << result.dump(2) << '\n';
      if (run_args.pretty) print_reproduce(err, result);
      return has_mismatch(result) ? exit_mismatch : exit_ok;
    }
    out << result.dump(2) << '\n';
    return exit_ok;
  } catch (const ParameterError& e) {
    return fail(out, err, exit_parameter, "parameter", e.what());
  } catch (const PreconditionError& e) {
    return fail(out, err, exit_precondition, "precondition", e.what(), e.witness());
  } catch (const BudgetExceeded& e) {
    return fail(out, err, exit_budget, "budget", e.what());
  } catch (const std::exception& e) {
    return fail(out, err, exit_internal, "internal", e.what());
  }
}

}  // namespace ringcode::cli
