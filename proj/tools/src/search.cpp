#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "ringcode/maps.hpp"

namespace ringcode::cli {
namespace {

// Choices per independent block: a symmetric coset, or an asymmetric pair.
struct Block {
  std::size_t first;
  std::optional<std::size_t> second;
  std::vector<std::pair<unsigned, unsigned>> choices;
};

std::vector<Block> blocks_of(const cyclo::CosetStructure& cs) {
  const unsigned top = cs.max_exponent();
  std::vector<Block> out;
  for (std::size_t i = 0; i < cs.cosets.size(); ++i) {
    const auto& c = cs.cosets[i];
    if (c.symmetric) {
      Block b{i, std::nullopt, {}};
      for (unsigned a = cs.pe; a <= top; ++a) b.choices.emplace_back(a, 0);
      out.push_back(std::move(b));
    } else if (i < c.partner) {
      Block b{i, c.partner, {}};
      for (unsigned a = 0; a <= top; ++a)
        for (unsigned s = 0; s <= top; ++s)
          if (a + s >= top) b.choices.emplace_back(a, s);
      out.push_back(std::move(b));
    }
  }
  return out;
}

struct Candidate {
  std::vector<unsigned> exponents;
  quantum::QuantumParams params;
};

}  // namespace

std::uint64_t region_size(const cyclo::CosetStructure& cs) {
  std::uint64_t total = 1;
  for (const auto& b : blocks_of(cs)) {
    if (total > std::numeric_limits<std::uint64_t>::max() / b.choices.size())
      return std::numeric_limits<std::uint64_t>::max();
    total *= b.choices.size();
  }
  return total;
}

json run_search(const SearchTask& task) {
  if (task.construction != "symplectic" && task.construction != "hermitian")
    throw ParameterError("construction must be 'symplectic' or 'hermitian'");
  auto field = gf::GaloisField::builtin(task.p, task.m);
  if (task.construction == "hermitian" && task.p != 2)
    throw ParameterError("the Hermitian construction through the Gray map needs p = 2");
  auto cs = cyclo::build_cosets(field, field->parse(task.alpha), task.n, task.e);
  const std::uint64_t size = region_size(*cs);
  if (size > task.region_cap)
    throw BudgetExceeded("search region has " + std::to_string(size) + " exponent vectors, cap is " +
                         std::to_string(task.region_cap));
  const auto blocks = blocks_of(*cs);

  distance::Options opt;
  opt.d_cap = task.d_cap;
  opt.cross_check = false;
  if (task.budget) opt.budget = task.budget;
  const auto M = task.construction == "hermitian"
                     ? std::optional(maps::GrayMatrix::compatible(*field, cs->alpha, 1, field->primitive()))
                     : std::nullopt;

  std::vector<std::optional<Candidate>> results(size);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::uint64_t idx; (idx = next.fetch_add(1)) < size;) {
      try {
        std::vector<unsigned> exps(cs->cosets.size(), 0);
        std::uint64_t v = idx;
        for (const auto& b : blocks) {
          const auto& [a, s] = b.choices[v % b.choices.size()];
          v /= b.choices.size();
          exps[b.first] = a;
          if (b.second) exps[*b.second] = s;
        }
        codes::ConstacyclicCode c(cs, exps);
        quantum::QuantumParams qp;
        if (M) {
          const unsigned k = 2 * c.length() - 2 * c.size_log_q();
          if (k < task.min_k) continue;
          qp = quantum::hermitian_construction(maps::gray_image_code(*M, c), opt);
        } else {
          if (c.length() - c.size_log_q() < task.min_k) continue;
          qp = quantum::symplectic_construction(c, opt);
        }
        results[idx] = Candidate{std::move(exps), std::move(qp)};
      } catch (const PreconditionError&) {
        // Gray image not self-orthogonal: outside the construction, skip.
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(task.jobs, static_cast<unsigned>(std::max<std::uint64_t>(size, 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<Candidate> found;
  for (auto& r : results)
    if (r) found.push_back(std::move(*r));
  std::sort(found.begin(), found.end(), [](const Candidate& x, const Candidate& y) {
    if (x.params.d != y.params.d) return x.params.d > y.params.d;
    if (x.params.k != y.params.k) return x.params.k > y.params.k;
    return x.exponents < y.exponents;
  });

  json list = json::array();
  std::set<std::tuple<unsigned, unsigned, unsigned, bool>> seen;
  for (const auto& c : found) {
    if (list.size() >= task.result_cap) break;
    if (!seen.insert({c.params.n, c.params.k, c.params.d, c.params.d_exact}).second) continue;
    list.push_back(quantum_json(c.params, descriptor_json(codes::ConstacyclicCode(cs, c.exponents))));
  }
  json out;
  out["construction"] = task.construction;
  out["region_size"] = size;
  out["evaluated"] = found.size();
  out["results"] = std::move(list);
  return out;
}

}  // namespace ringcode::cli
