#include "barq/parallel.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace barq::par {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

Rat sum_serial(std::size_t n, const std::function<Rat(std::size_t)>& f) {
  Rat acc(0);
  for (std::size_t i = 0; i < n; ++i) acc += f(i);
  return acc;
}

Rat sum_parallel(std::size_t n, const std::function<Rat(std::size_t)>& f) {
#ifdef _OPENMP
  const int nt = max_threads();
  std::vector<Rat> partial(static_cast<std::size_t>(nt), Rat(0));
#pragma omp parallel num_threads(nt)
  {
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    Rat local(0);
#pragma omp for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      local += f(static_cast<std::size_t>(i));
    partial[t] = local;
  }
  Rat acc(0);
  for (const Rat& p : partial) acc += p;
  return acc;
#else
  return sum_serial(n, f);
#endif
}

Rat max_serial(std::size_t n, const std::function<Rat(std::size_t)>& f) {
  Rat best(0);
  for (std::size_t i = 0; i < n; ++i) {
    Rat v = f(i);
    if (i == 0 || v > best) best = v;
  }
  return best;
}

Rat max_parallel(std::size_t n, const std::function<Rat(std::size_t)>& f) {
#ifdef _OPENMP
  if (n == 0) return Rat(0);
  const int nt = max_threads();
  std::vector<Rat> partial(static_cast<std::size_t>(nt), Rat(0));
  std::vector<char> seen(static_cast<std::size_t>(nt), 0);
#pragma omp parallel num_threads(nt)
  {
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    Rat local(0);
    bool any = false;
#pragma omp for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      Rat v = f(static_cast<std::size_t>(i));
      if (!any || v > local) local = v;
      any = true;
    }
    partial[t] = local;
    seen[t] = any ? 1 : 0;
  }
  Rat best(0);
  bool any = false;
  for (std::size_t t = 0; t < partial.size(); ++t) {
    if (!seen[t]) continue;
    if (!any || partial[t] > best) best = partial[t];
    any = true;
  }
  return best;
#else
  return max_serial(n, f);
#endif
}

std::optional<std::size_t> first_failure_serial(std::size_t n,
                                                const std::function<bool(std::size_t)>& pred) {
  for (std::size_t i = 0; i < n; ++i)
    if (!pred(i)) return i;
  return std::nullopt;
}

std::optional<std::size_t> first_failure_parallel(std::size_t n,
                                                  const std::function<bool(std::size_t)>& pred) {
#ifdef _OPENMP
  unsigned long long best = ~0ULL;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    if (!pred(static_cast<std::size_t>(i))) {
      const auto u = static_cast<unsigned long long>(i);
      if (u < best) best = u;
    }
  }
  if (best == ~0ULL) return std::nullopt;
  return static_cast<std::size_t>(best);
#else
  return first_failure_serial(n, pred);
#endif
}

Rat sum(std::size_t n, const std::function<Rat(std::size_t)>& f, Mode mode) {
  return mode == Mode::parallel ? sum_parallel(n, f) : sum_serial(n, f);
}

Rat max(std::size_t n, const std::function<Rat(std::size_t)>& f, Mode mode) {
  return mode == Mode::parallel ? max_parallel(n, f) : max_serial(n, f);
}

std::optional<std::size_t> first_failure(std::size_t n,
                                         const std::function<bool(std::size_t)>& pred, Mode mode) {
  return mode == Mode::parallel ? first_failure_parallel(n, pred) : first_failure_serial(n, pred);
}

}  // namespace barq::par
