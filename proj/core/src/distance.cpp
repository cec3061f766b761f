#include "ringcode/distance.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <mutex>
#include <thread>

namespace ringcode::distance {
namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

template <typename Task>
void run_tasks(std::size_t count, unsigned jobs, Task&& task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t checked_power(std::uint64_t base, std::size_t e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > limit / base) return kNone;
    v *= base;
  }
  return v;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct Best {
  unsigned weight = std::numeric_limits<unsigned>::max();
  std::vector<Elt> word;
  void offer(unsigned w, const std::vector<Elt>& v) {
    if (w < weight || (w == weight && v < word)) {
      weight = w;
      word = v;
    }
  }
};

}  // namespace

std::uint64_t default_budget() {
  const char* env = std::getenv("RINGCODE_BUDGET");
  if (!env || !*env) return std::uint64_t{1} << 26;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
  if (ec != std::errc{} || *ptr != '\0' || v == 0) throw ParameterError("RINGCODE_BUDGET must be a positive integer");
  return v;
}

DistanceResult min_distance_exhaustive(const codes::LinearCodeF& c, std::uint64_t budget, unsigned jobs,
                                       Weight weight) {
  const auto& f = *c.field;
  const std::size_t k = c.dimension(), n = c.length;
  if (k == 0) throw ParameterError("no nonzero codeword: the code is zero");
  if (weight == Weight::paired && n % 2) throw ParameterError("paired weight needs even length");
  if (checked_power(f.order(), k, budget) == kNone)
    throw BudgetExceeded("exhaustive search needs q^k = " + std::to_string(f.order()) + "^" + std::to_string(k) +
                         " codewords, budget is " + std::to_string(budget));

  // Expand each row over the F_p-basis 1, x, ..., x^{2m-1} of F_q.
  const unsigned p = f.characteristic();
  std::vector<std::vector<Elt>> rows;
  for (std::size_t i = 0; i < k; ++i) {
    Elt basis = 1;
    for (unsigned j = 0; j < f.degree(); ++j, basis *= p) {
      std::vector<Elt> r(n);
      for (std::size_t col = 0; col < n; ++col) r[col] = f.mul(c.generator.at(i, col), basis);
      rows.push_back(std::move(r));
    }
  }
  const std::size_t K = rows.size();
  const std::uint64_t total = checked_power(p, K, kNone - 1);
  const std::size_t half = n / 2;

  auto word_weight = [&](const std::vector<Elt>& v) {
    unsigned w = 0;
    if (weight == Weight::hamming)
      for (auto x : v) w += x != 0;
    else
      for (std::size_t i = 0; i < half; ++i) w += v[i] != 0 || v[half + i] != 0;
    return w;
  };

  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(total, 256));
  std::vector<Best> results(chunks);
  run_tasks(chunks, jobs, [&](std::size_t ci) {
    const std::uint64_t lo = total / chunks * ci + std::min<std::uint64_t>(ci, total % chunks);
    const std::uint64_t hi = lo + total / chunks + (ci < total % chunks ? 1 : 0);
    // Gray digits of lo: g_i = d_i - d_{i+1} mod p.
    std::vector<Elt> word(n, 0);
    std::vector<unsigned> digits(K + 1, 0);
    std::uint64_t t = lo;
    for (std::size_t i = 0; i < K; ++i, t /= p) digits[i] = static_cast<unsigned>(t % p);
    for (std::size_t i = 0; i < K; ++i) {
      const unsigned g = (digits[i] + p - digits[i + 1]) % p;
      for (unsigned rep = 0; rep < g; ++rep)
        for (std::size_t col = 0; col < n; ++col) word[col] = f.add(word[col], rows[i][col]);
    }
    unsigned w = word_weight(word);
    Best best;
    if (lo != 0) best.offer(w, word);
    for (std::uint64_t s = lo + 1; s < hi; ++s) {
      std::uint64_t v = s;
      std::size_t idx = 0;
      while (v % p == 0) {
        v /= p;
        ++idx;
      }
      const auto& r = rows[idx];
      if (weight == Weight::hamming) {
        for (std::size_t col = 0; col < n; ++col) {
          if (r[col] == 0) continue;
          const Elt old = word[col];
          word[col] = f.add(old, r[col]);
          w = w - (old != 0) + (word[col] != 0);
        }
      } else {
        for (std::size_t i = 0; i < half; ++i) {
          if (r[i] == 0 && r[half + i] == 0) continue;
          const bool before = word[i] != 0 || word[half + i] != 0;
          word[i] = f.add(word[i], r[i]);
          word[half + i] = f.add(word[half + i], r[half + i]);
          const bool after = word[i] != 0 || word[half + i] != 0;
          w = w - before + after;
        }
      }
      if (w <= best.weight) best.offer(w, word);
    }
    results[ci] = std::move(best);
  });

  Best best;
  for (const auto& r : results)
    if (!r.word.empty()) best.offer(r.weight, r.word);
  if (best.word.empty()) throw InternalError("exhaustive search saw no nonzero codeword");
  DistanceResult out;
  out.d = best.weight;
  out.method = "exhaustive";
  out.certificate = std::move(best.word);
  out.work = total;
  return out;
}

namespace {

struct ColumnSearch {
  const gf::GaloisField& f;
  std::size_t rows;
  const std::vector<std::vector<Elt>>& cols;
  unsigned w;
  const std::atomic<std::uint64_t>& best_top;

  ColumnSearch(const gf::GaloisField& field, std::size_t r, const std::vector<std::vector<Elt>>& c, unsigned weight,
               const std::atomic<std::uint64_t>& best)
      : f(field), rows(r), cols(c), w(weight), best_top(best) {}

  struct Vec {
    std::vector<Elt> v;
    std::size_t pivot;
    std::vector<Elt> comb;
  };
  std::vector<Vec> basis;
  std::vector<std::size_t> picked;
  std::uint64_t tested = 0;
  std::vector<Elt> kernel;  // over picked positions
  bool aborted = false;

  // Reduces column c against the basis; returns the residual (comb is updated alongside).
  Vec reduce(std::size_t c, std::size_t position) const {
    Vec x{cols[c], 0, std::vector<Elt>(w, 0)};
    x.comb[position] = 1;
    for (const auto& b : basis) {
      const Elt factor = x.v[b.pivot];
      if (factor == 0) continue;
      for (std::size_t i = 0; i < rows; ++i) x.v[i] = f.sub(x.v[i], f.mul(factor, b.v[i]));
      for (std::size_t i = 0; i < w; ++i) x.comb[i] = f.sub(x.comb[i], f.mul(factor, b.comb[i]));
    }
    return x;
  }

  static bool zero(const std::vector<Elt>& v) {
    return std::all_of(v.begin(), v.end(), [](Elt e) { return e == 0; });
  }

  bool push(Vec x) {
    std::size_t piv = 0;
    while (piv < rows && x.v[piv] == 0) ++piv;
    if (piv == rows) return false;
    const Elt inv = f.inv(x.v[piv]);
    for (auto& e : x.v) e = f.mul(e, inv);
    for (auto& e : x.comb) e = f.mul(e, inv);
    x.pivot = piv;
    basis.push_back(std::move(x));
    return true;
  }

  // Chooses the element at depth `level` below `limit`, ascending.
  bool descend(unsigned level, std::size_t limit) {
    const std::size_t lo = w - 1 - level;
    for (std::size_t c = lo; c < limit; ++c) {
      if (best_top.load(std::memory_order_relaxed) < picked[0]) {
        aborted = true;
        return false;
      }
      picked[level] = c;
      Vec x = reduce(c, level);
      if (level == w - 1) {
        ++tested;
        if (zero(x.v)) {
          kernel = std::move(x.comb);
          return true;
        }
        continue;
      }
      if (!push(std::move(x))) throw InternalError("dependent proper subset during column search");
      const bool found = descend(level + 1, c);
      basis.pop_back();
      if (found || aborted) return found;
    }
    return false;
  }

  bool run(std::size_t top) {
    picked.assign(w, 0);
    picked[0] = top;
    Vec x = reduce(top, 0);
    if (w == 1) {
      ++tested;
      if (zero(x.v)) {
        kernel = std::move(x.comb);
        return true;
      }
      return false;
    }
    if (!push(std::move(x))) throw InternalError("zero column survived the weight-1 pass");
    const bool found = descend(1, top);
    basis.clear();
    return found;
  }
};

}  // namespace

DistanceResult min_distance_column_rank(const codes::LinearCodeF& c, unsigned d_cap, unsigned jobs) {
  const auto& f = *c.field;
  const std::size_t n = c.length, k = c.dimension();
  if (k == 0) throw ParameterError("no nonzero codeword: the code is zero");
  const Matrix H = la::euclidean_dual(f, c.generator);
  const std::size_t rows = n - k;
  if (H.rows != rows) throw InternalError("parity-check matrix has the wrong rank");
  std::vector<std::vector<Elt>> cols(n, std::vector<Elt>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = H.at(i, j);

  DistanceResult out;
  out.method = "column-rank";
  const unsigned w_max = static_cast<unsigned>(std::min<std::size_t>(d_cap, rows + 1));
  for (unsigned w = 1; w <= w_max; ++w) {
    std::atomic<std::uint64_t> best_top{kNone};
    const std::size_t tasks = n - (w - 1);
    std::vector<std::uint64_t> tested(tasks, 0);
    std::vector<std::vector<Elt>> kernels(tasks);
    std::vector<std::vector<std::size_t>> supports(tasks);
    run_tasks(tasks, jobs, [&](std::size_t ti) {
      const std::size_t top = w - 1 + ti;
      if (best_top.load() < top) return;
      ColumnSearch s(f, rows, cols, w, best_top);
      if (s.run(top)) {
        kernels[ti] = std::move(s.kernel);
        supports[ti] = s.picked;
        tested[ti] = s.tested;
        std::uint64_t cur = best_top.load();
        while (top < cur && !best_top.compare_exchange_weak(cur, top)) {
        }
      }
    });
    const std::uint64_t top = best_top.load();
    if (top == kNone) {
      out.work += binomial(n, w);
      continue;
    }
    const std::size_t ti = top - (w - 1);
    out.work += binomial(top, w) + tested[ti];
    std::vector<Elt> word(n, 0);
    for (std::size_t i = 0; i < w; ++i) word[supports[ti][i]] = kernels[ti][i];
    out.d = w;
    out.certificate = std::move(word);
    return out;
  }
  out.d = w_max + 1;
  out.exact = false;
  return out;
}

DistanceResult min_distance(const codes::LinearCodeF& c, const Options& opt) {
  if (c.dimension() == 0) throw ParameterError("no nonzero codeword: the code is zero");
  const std::uint64_t words = checked_power(c.field->order(), c.dimension(), opt.budget);
  constexpr std::uint64_t kSmall = 1u << 16;
  if (words != kNone && words <= kSmall) {
    DistanceResult r = min_distance_exhaustive(c, opt.budget, opt.jobs);
    if (opt.cross_check) {
      const DistanceResult cr = min_distance_column_rank(c, r.d, opt.jobs);
      if (!cr.exact || cr.d != r.d) throw InternalError("distance engines disagree");
      r.cross_checked = true;
    }
    return r;
  }
  DistanceResult r = min_distance_column_rank(c, opt.d_cap, opt.jobs);
  if (words == kNone) return r;
  if (!r.exact) return min_distance_exhaustive(c, opt.budget, opt.jobs);
  if (opt.cross_check) {
    const DistanceResult ex = min_distance_exhaustive(c, opt.budget, opt.jobs);
    if (ex.d != r.d) throw InternalError("distance engines disagree");
    r.cross_checked = true;
  }
  return r;
}

DistanceResult min_distance_R(const codes::ConstacyclicCode& c, const Options& opt) {
  return min_distance(codes::torsion(c), opt);
}

DistanceResult min_distance_R_exhaustive(const codes::ConstacyclicCode& c, std::uint64_t budget, unsigned jobs) {
  auto split = codes::linear_code(c.structure().field, codes::split_basis(c));
  split.length = 2 * c.length();
  split.generator.cols = split.length;
  return min_distance_exhaustive(split, budget, jobs, Weight::paired);
}

}  // namespace ringcode::distance
