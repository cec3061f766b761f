// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "reproduce.hpp"
#include "ringcode/maps.hpp"
#include "ringcode/quantum.hpp"

#ifndef RINGCODE_BINARY
#define RINGCODE_BINARY "ringcode"
#endif

using namespace ringcode;
using nlohmann::json;

namespace {

// Pinned limits, in seconds.
constexpr double kExample510Limit = 1.0;
constexpr double kExhaustive511Limit = 60.0;
constexpr double kColumnRank511Limit = 1.0;
constexpr double kTableLimit = 120.0;
constexpr double kExample47Limit = 5.0;

constexpr int kMapTrials = 1000;
constexpr int kTransferCodes = 20;
constexpr int kSquareTrials = 500;
constexpr int kTorsionCodes = 50;
constexpr double kTorsionSizeLimit = 1 << 20;

std::mt19937_64 gen(97531);

struct Line {
  bool pass = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << "s";
  return o.str();
}

Elt uniform(const gf::GaloisField& f, bool nonzero = false) {
  return std::uniform_int_distribution<Elt>(nonzero ? 1 : 0, f.order() - 1)(gen);
}

std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen); }

const json& target(const json& report, const std::string& name) {
  for (const auto& t : report["targets"])
    if (t["target"] == name) return t;
  throw std::runtime_error("missing target " + name);
}

// Plain ring arithmetic written out here rather than taken from the library.
ring::RingElement rmul(const gf::GaloisField& f, ring::RingElement x, ring::RingElement y) {
  return {f.mul(x.a, y.a), f.add(f.mul(x.a, y.b), f.mul(x.b, y.a))};
}
ring::RingElement rconj(const gf::GaloisField& f, ring::RingElement x) { return {f.conj(x.a), f.neg(f.conj(x.b))}; }

// x^j g(x) mod x^N - alpha(1+u) for j < N.
std::vector<ring::RingVector> shifted_generators(const codes::ConstacyclicCode& c) {
  const auto& cs = c.structure();
  const auto& f = *cs.field;
  const ring::RingElement lambda{cs.alpha, cs.alpha};
  const Poly g = c.generator_poly();
  std::vector<ring::RingVector> out;
  for (unsigned j = 0; j < cs.N; ++j) {
    ring::RingVector w(cs.N);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const std::size_t pos = k + j;
      ring::RingElement coef{g[k], 0};
      for (std::size_t wraps = pos / cs.N; wraps > 0; --wraps) coef = rmul(f, coef, lambda);
      auto& slot = w[pos % cs.N];
      slot = {f.add(slot.a, coef.a), f.add(slot.b, coef.b)};
    }
    out.push_back(std::move(w));
  }
  return out;
}

// log_q |C| as the F_q-rank of the R-span of the shifted generators.
std::size_t size_log_by_rank(const codes::ConstacyclicCode& c) {
  const auto& f = *c.structure().field;
  Matrix m(0, 2 * c.length());
  for (const auto& w : shifted_generators(c)) {
    std::vector<Elt> unit(2 * c.length()), byu(2 * c.length());
    for (std::size_t i = 0; i < c.length(); ++i) {
      unit[i] = w[i].b;
      unit[c.length() + i] = w[i].a;
      byu[i] = w[i].a;  // u * (a + ub) = ua
    }
    m.append_row(unit);
    m.append_row(byu);
  }
  return la::rank(f, m);
}

bool gram_zero(const codes::ConstacyclicCode& c) {
  const auto& f = *c.structure().field;
  const auto rows = shifted_generators(c);
  for (const auto& x : rows)
    for (const auto& y : rows) {
      ring::RingElement acc{0, 0};
      for (std::size_t i = 0; i < x.size(); ++i) {
        const auto t = rmul(f, x[i], rconj(f, y[i]));
        acc = {f.add(acc.a, t.a), f.add(acc.b, t.b)};
      }
      if (!acc.is_zero()) return false;
    }
  return true;
}

// A family with alpha * conj(alpha) = 1 and N <= max_len.
struct Family {
  unsigned n, e;
};

cyclo::CosetPtr random_family(const gf::FieldPtr& F, unsigned max_len) {
  const auto& f = *F;
  std::vector<Family> fams;
  for (unsigned n = 1; n <= max_len; ++n) {
    if (n % f.characteristic() == 0) continue;
    for (unsigned e = 0, pe = 1; pe * n <= max_len; ++e, pe *= f.characteristic()) fams.push_back({n, e});
  }
  std::vector<Elt> alphas;
  for (Elt a = 1; a < f.order(); ++a)
    if (f.mul(a, f.conj(a)) == 1) alphas.push_back(a);
  const auto fam = fams[pick(fams.size())];
  return cyclo::build_cosets(F, alphas[pick(alphas.size())], fam.n, fam.e);
}

codes::ConstacyclicCode random_code(const cyclo::CosetPtr& cs) {
  std::uniform_int_distribution<unsigned> d(0, cs->max_exponent());
  std::vector<unsigned> e(cs->cosets.size());
  for (auto& a : e) a = d(gen);
  return codes::ConstacyclicCode(cs, e);
}

codes::ConstacyclicCode random_self_orthogonal(const cyclo::CosetPtr& cs) {
  const unsigned top = cs->max_exponent();
  std::vector<unsigned> e(cs->cosets.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& c = cs->cosets[i];
    if (c.symmetric) e[i] = std::uniform_int_distribution<unsigned>(cs->pe, top)(gen);
    else if (i < c.partner) {
      e[i] = std::uniform_int_distribution<unsigned>(0, top)(gen);
      e[c.partner] = std::uniform_int_distribution<unsigned>(top - e[i], top)(gen);
    }
  }
  return codes::ConstacyclicCode(cs, e);
}

Elt trace_product(const gf::GaloisField& f, const ring::RingVector& x, const ring::RingVector& y) {
  // phi(a + ub) = (b | a); <(l|r), (l'|r')> = sum l conj(r') - r conj(l').
  Elt acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = f.add(acc, f.mul(x[i].b, f.conj(y[i].a)));
    acc = f.sub(acc, f.mul(x[i].a, f.conj(y[i].b)));
  }
  return acc;
}

// Criteria.

Line criterion1() {
  Line L;
  json rep;
  const double t = seconds([&] { rep = cli::reproduce("example5.10", {}); });
  const auto& c = target(rep, "example5.10")["computed"];
  L.require(c["quantum"]["params"] == "[[5,1,3]]_3", "parameters " + c["quantum"]["params"].dump());
  L.require(c["quantum"]["d_exact"] == true, "d not exact");
  L.require(c["quantum"]["mds"] == true, "MDS flag unset");
  L.require(c["distance"]["method"] == "exhaustive", "method " + c["distance"]["method"].dump());
  L.require(c["distance"]["work"] == 729, "work " + c["distance"]["work"].dump());
  L.require(t < kExample510Limit, "runtime " + fmt(t));
  L.detail << (L.pass ? "" : "; ") << "[[5,1,3]]_3 exhaustive over " << c["distance"]["work"] << " codewords in "
           << fmt(t);
  return L;
}

Line criterion2() {
  Line L;
  auto F = gf::GaloisField::builtin(3, 1);
  auto cs = cyclo::build_cosets(F, F->parse("w^4"), 10, 0);
  const auto i0 = cs->index_of_poly(cyclo::parse_polynomial(*F, "x+w^2"));
  const auto i4 = cs->index_of_poly(cyclo::parse_polynomial(*F, "x^2+w^5x+2"));
  if (!i0 || !i4) {
    L.require(false, "printed factors are not coset polynomials");
    return L;
  }
  std::vector<unsigned> e(cs->cosets.size(), 0);
  e[*i0] = 2;
  e[*i4] = 2;
  const codes::ConstacyclicCode D(cs, e);
  const auto tor = codes::torsion(D);
  distance::DistanceResult ex, cr;
  const double tex = seconds([&] { ex = distance::min_distance_exhaustive(tor, 1ull << 23); });
  const double tcr = seconds([&] { cr = distance::min_distance_column_rank(tor, 7); });
  const unsigned k = D.size_log_q() - cs->N;
  L.require(tor.dimension() == 7, "Tor dimension " + std::to_string(tor.dimension()));
  L.require(ex.work == 4782969, "exhaustive work " + std::to_string(ex.work));
  L.require(ex.d == 4 && cr.d == 4 && cr.exact, "engines give " + std::to_string(ex.d) + ", " + std::to_string(cr.d));
  L.require(k == 4, "k = " + std::to_string(k));
  L.require(tex < kExhaustive511Limit, "exhaustive runtime " + fmt(tex));
  L.require(tcr < kColumnRank511Limit, "column-rank runtime " + fmt(tcr));
  const json rep = cli::reproduce("example5.11", {});
  L.require(target(rep, "example5.11")["computed"]["quantum"]["params"] == "[[10,4,4]]_3", "report parameters");
  L.detail << (L.pass ? "" : "; ") << "[[10,4," << ex.d << "]]_3; exhaustive " << ex.work << " words in "
           << fmt(tex) << ", column-rank " << cr.work << " subsets in " << fmt(tcr);
  return L;
}

Line criterion3() {
  Line L;
  const std::array<const char*, 7> expected{"[[14,6,4]]_3",  "[[20,14,3]]_3", "[[20,12,4]]_3", "[[40,24,6]]_3",
                                            "[[61,51,4]]_3", "[[70,58,4]]_3", "[[82,72,4]]_3"};
  json rep;
  const double t = seconds([&] { rep = cli::reproduce("table1", {}); });
  const auto& rows = target(rep, "table1")["rows"];
  L.require(rows.size() == expected.size(), "row count");
  for (std::size_t i = 0; i < rows.size() && i < expected.size(); ++i) {
    const auto& c = rows[i]["computed"];
    const std::string row = "row " + std::to_string(i + 1);
    L.require(c["params"] == expected[i], row + " gives " + c["params"].dump());
    L.require(c["d_exact"] == true, row + " d not exact");
    L.require(c["distance"]["method"] == "column-rank", row + " method");
    if (i < 3) L.require(c["two_d_eq_n_minus_k"] == true, row + " 2d != n - k");
  }
  L.require(t < kTableLimit, "runtime " + fmt(t));
  L.detail << (L.pass ? "" : "; ") << "7 rows in " << fmt(t);
  return L;
}

Poly dagger_by_hand(const gf::GaloisField& f, const Poly& g) {
  Poly r(g.rbegin(), g.rend());
  for (auto& c : r) c = f.conj(c);
  const Elt lead = f.inv(r.back());
  for (auto& c : r) c = f.mul(c, lead);
  return r;
}

Line criterion4() {
  Line L;
  auto F = gf::GaloisField::builtin(2, 1);
  const Elt w = F->parse("w");
  auto cs = cyclo::build_cosets(F, w, 5, 1);
  const std::array<std::pair<const char*, unsigned>, 3> factors{{{"x+w", 1}, {"x^2+x+w^2", 3}, {"x^2+w^2x+w^2", 4}}};
  std::vector<unsigned> e(cs->cosets.size(), 0);
  Poly transport{1};
  for (const auto& [text, k] : factors) {
    const Poly g = cyclo::parse_polynomial(*F, text);
    const auto idx = cs->index_of_poly(g);
    if (!idx) {
      L.require(false, std::string(text) + " is not a coset polynomial");
      return L;
    }
    e[*idx] = k;
    transport = poly::mul(*F, transport, poly::pow(*F, dagger_by_hand(*F, g), 2 * cs->pe - k));
  }
  const codes::ConstacyclicCode C(cs, e);
  codes::LinearCodeF image;
  distance::DistanceResult d;
  const double t = seconds([&] {
    const auto M = maps::GrayMatrix::compatible(*F, w, 1, w);
    image = maps::gray_image_code(M, codes::hermitian_dual(C));
    d = distance::min_distance_column_rank(image, 4);
  });
  L.require(image.length == 20 && image.dimension() == 15,
            "image [" + std::to_string(image.length) + "," + std::to_string(image.dimension()) + "]");
  L.require(image.lambda && *image.lambda == F->mul(w, w), "image is not w^2-constacyclic");
  L.require(image.generator_poly && *image.generator_poly == transport, "generator differs from the transport");
  L.require(d.d == 4 && d.exact, "d = " + std::to_string(d.d));
  L.require(t < kExample47Limit, "runtime " + fmt(t));
  L.detail << (L.pass ? "" : "; ") << "[20,15," << d.d << "] over F_4, " << d.work << " column subsets, transported generator, " << fmt(t);
  return L;
}

Line criterion5() {
  Line L;
  const json rep = cli::reproduce("example4.13", {});
  const auto& t = target(rep, "example4.13");
  L.require(t["status"] == "discrepant", "status " + t["status"].dump());
  const auto& q = t["computed"]["quantum"];
  L.require(q["n"] == 12 && q["k"] == 8, "parameters " + q["params"].dump());
  const int slack = 12 - 2 * q["d"].get<int>() + 2 - 8;
  L.require(q["singleton_slack"] == slack && slack >= 0, "slack " + q["singleton_slack"].dump());

  // Gram check of the Gray image, recomputed here.
  auto F = gf::GaloisField::builtin(2, 2);
  auto cs = cyclo::build_cosets(F, F->parse("w^6"), 3, 1);
  const auto C = codes::code_from_exponents(cs, {{1, 4}, {6, 4}, {11, 2}});
  const auto image = maps::gray_image_code(maps::GrayMatrix::compatible(*F, cs->alpha, 1, F->primitive()), C);
  bool gram = true;
  for (std::size_t i = 0; i < image.generator.rows; ++i)
    for (std::size_t j = 0; j < image.generator.rows; ++j) {
      Elt acc = 0;
      for (std::size_t c = 0; c < image.length; ++c)
        acc = F->add(acc, F->mul(image.generator.at(i, c), F->conj(image.generator.at(j, c))));
      gram = gram && acc == 0;
    }
  L.require(gram, "Gray image is not Hermitian self-orthogonal");
  L.require(image.length == 12 && 12 - 2 * image.dimension() == 8, "image dimension");

  const std::string notes = t["notes"].dump();
  const std::string published = t["published"].dump();
  L.require(published.find("[[12,10,2]]_4") != std::string::npos || notes.find("[[12,10,2]]_4") != std::string::npos,
            "report does not cite [[12,10,2]]_4");
  L.require(notes.find("x^3 + w^9") != std::string::npos, "report does not cite the root list");
  L.detail << (L.pass ? "" : "; ") << "discrepant report; computed " << q["params"].get<std::string>()
           << ", slack " << slack;
  return L;
}

Line criterion6() {
  Line L;
  auto F = gf::GaloisField::builtin(3, 1);
  auto cs = cyclo::build_cosets(F, F->parse("2"), 5, 0);
  L.require(cs->cosets.size() == 3, "coset count " + std::to_string(cs->cosets.size()));
  int failures = 0, vectors = 0, so = 0;
  for (unsigned a = 0; a < 27; ++a) {
    const std::vector<unsigned> e{a % 3, a / 3 % 3, a / 9};
    const codes::ConstacyclicCode C(cs, e);
    const auto D = codes::hermitian_dual(C);
    ++vectors;
    const bool sizes = size_log_by_rank(C) + size_log_by_rank(D) == 10;  // 9^10 = 3^20
    const bool exponent_test = codes::is_hermitian_self_orthogonal(C);
    const bool gram = gram_zero(C);
    so += gram;
    const bool involution = codes::hermitian_dual(D) == C;
    if (!sizes || exponent_test != gram || !involution) ++failures;
  }
  L.require(failures == 0, std::to_string(failures) + " failing vectors");
  L.detail << (L.pass ? "" : "; ") << vectors << " vectors, " << so << " self-orthogonal, " << failures
           << " failures";
  return L;
}

Line criterion7() {
  Line L;
  int failures = 0, literal_pairs = 0, transfers = 0;
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    auto F = gf::GaloisField::builtin(p, m);
    const auto& f = *F;
    for (int trial = 0; trial < kMapTrials; ++trial) {
      const std::size_t N = 1 + pick(12);
      ring::RingVector x(N), y(N), diff(N);
      for (std::size_t i = 0; i < N; ++i) {
        x[i] = {uniform(f), uniform(f)};
        y[i] = {uniform(f), uniform(f)};
        diff[i] = {f.sub(x[i].a, y[i].a), f.sub(x[i].b, y[i].b)};
      }
      maps::GrayMatrix M;
      Elt det = 0;
      while (det == 0) {
        M = {uniform(f), uniform(f), uniform(f), uniform(f)};
        det = f.sub(f.mul(M.a, M.t), f.mul(M.b, M.s));
      }
      const auto gx = maps::gray_map(f, M, x), gy = maps::gray_map(f, M, y);
      unsigned dist = 0;
      for (std::size_t i = 0; i < gx.size(); ++i) dist += gx[i] != gy[i];
      if (dist != maps::gray_weight(f, M, diff)) ++failures;

      unsigned hw = 0;
      for (auto z : x) hw += !z.is_zero();
      if (maps::symplectic_weight(maps::phi_map(x)) != hw) ++failures;

      const Elt xx = maps::trace_inner_product(f, maps::phi_map(x), maps::phi_map(x));
      if (f.conj(xx) != f.neg(xx)) ++failures;
      const Elt xy = maps::trace_inner_product(f, maps::phi_map(x), maps::phi_map(y));
      const Elt yx = maps::trace_inner_product(f, maps::phi_map(y), maps::phi_map(x));
      if (xy != f.neg(f.conj(yx))) ++failures;
      if (xy != trace_product(f, x, y)) ++failures;
      if (f.conj(xy) != f.neg(xy)) ++literal_pairs;
    }
    for (int t = 0; t < kTransferCodes; ++t) {
      const auto C = random_self_orthogonal(random_family(F, 10));
      const auto basis = codes::basis_words(C);
      bool ok = true;
      for (const auto& a : basis)
        for (const auto& b : basis) ok = ok && trace_product(f, a, b) == 0;
      if (!ok || !maps::trace_orthogonality_transfer(C).ok) ++failures;
      ++transfers;
    }
  }
  L.require(failures == 0, std::to_string(failures) + " failures");
  L.detail << (L.pass ? "" : "; ") << 3 * kMapTrials << " map trials, " << transfers << " transfers, " << failures
           << " failures; the off-diagonal form conj<x,y> = -<x,y> fails on " << literal_pairs
           << " random pairs and is not tested";
  return L;
}

Line criterion8() {
  Line L;
  int failures = 0, trials = 0;
  for (unsigned m : {1u, 2u}) {
    auto F = gf::GaloisField::builtin(2, m);
    const auto& f = *F;
    for (int trial = 0; trial < kSquareTrials; ++trial) {
      const auto cs = random_family(F, 16);
      const Elt alpha = cs->alpha;
      Elt b = uniform(f), t = uniform(f);
      while (t == b) t = uniform(f);
      const auto M = maps::GrayMatrix::compatible(f, alpha, b, t);
      const std::size_t N = cs->N;
      ring::RingVector v(N);
      for (auto& z : v) z = {uniform(f), uniform(f)};
      // sigma_{alpha(1+u)} on R^N.
      ring::RingVector sv(N);
      sv[0] = rmul(f, {alpha, alpha}, v[N - 1]);
      for (std::size_t i = 1; i < N; ++i) sv[i] = v[i - 1];
      // sigma_{alpha^2} on F^{2N}.
      const auto g = maps::gray_map(f, M, v);
      std::vector<Elt> sg(2 * N);
      sg[0] = f.mul(f.mul(alpha, alpha), g[2 * N - 1]);
      for (std::size_t i = 1; i < 2 * N; ++i) sg[i] = g[i - 1];
      if (maps::gray_map(f, M, sv) != sg) ++failures;
      ++trials;
    }
  }
  L.require(failures == 0, std::to_string(failures) + " failures");
  L.detail << (L.pass ? "" : "; ") << trials << " vectors, " << failures << " failures";
  return L;
}

Line criterion9() {
  Line L;
  int failures = 0, codes_done = 0;
  std::uint64_t largest = 0;
  const std::array<std::pair<unsigned, unsigned>, 3> fields{{{2, 1}, {3, 1}, {2, 2}}};
  while (codes_done < kTorsionCodes) {
    const auto [p, m] = fields[codes_done % 3];
    auto F = gf::GaloisField::builtin(p, m);
    const auto C = random_code(random_family(F, 10));
    const double size = std::pow(static_cast<double>(F->order()), C.size_log_q());
    if (C.size_log_q() == 0 || size > kTorsionSizeLimit) continue;
    const auto ring_d = distance::min_distance_R_exhaustive(C, 1u << 20);
    distance::Options o;
    o.d_cap = C.length();
    const auto tor_d = distance::min_distance(codes::torsion(C), o);
    if (ring_d.d != tor_d.d || !tor_d.exact) ++failures;
    largest = std::max<std::uint64_t>(largest, ring_d.work);
    ++codes_done;
  }
  L.require(failures == 0, std::to_string(failures) + " failures");
  L.detail << (L.pass ? "" : "; ") << codes_done << " codes, largest " << largest << " codewords, " << failures
           << " failures";
  return L;
}

std::pair<int, std::string> capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, out};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  return {pclose(pipe), out};
}

Line criterion10() {
  Line L;
  const std::string bin = RINGCODE_BINARY;
  const auto [rc1, a] = capture("'" + bin + "' reproduce all --jobs 1 2>/dev/null");
  const auto [rc8, b] = capture("'" + bin + "' reproduce all --jobs 8 2>/dev/null");
  L.require(rc1 == 0 && rc8 == 0, "exit status " + std::to_string(rc1) + ", " + std::to_string(rc8));
  L.require(!a.empty(), "empty output");
  L.require(a == b, "outputs differ");
  L.detail << (L.pass ? "" : "; ") << a.size() << " bytes, identical: " << (a == b ? "yes" : "no");
  return L;
}

}  // namespace

int main() {
  const std::vector<std::function<Line()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line L;
    try {
      L = criteria[i]();
    } catch (const std::exception& e) {
      L.pass = false;
      L.detail << "exception: " << e.what();
    }
    all = all && L.pass;
    std::cout << "criterion " << i + 1 << ": " << (L.pass ? "PASS" : "FAIL") << "  " << L.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
