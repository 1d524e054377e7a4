#pragma once

#include "barq/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>

namespace barq::par {

// The three scan shapes every exhaustive verifier and pairing reduces to.
// Each has a plain serial reference implementation and an OpenMP variant; the
// two must agree bit-for-bit (exact rational arithmetic makes every reduction
// order-independent, and failure reporting picks the minimal index, so results
// are identical at any thread count).

enum class Mode { serial, parallel };

int max_threads();
void set_threads(int n);

// sum_{i<n} f(i), exact.
Rat sum_serial(std::size_t n, const std::function<Rat(std::size_t)>& f);
Rat sum_parallel(std::size_t n, const std::function<Rat(std::size_t)>& f);
Rat sum(std::size_t n, const std::function<Rat(std::size_t)>& f, Mode mode = Mode::parallel);

// max_{i<n} f(i); returns 0 for n == 0 (used for sups of absolute values).
Rat max_serial(std::size_t n, const std::function<Rat(std::size_t)>& f);
Rat max_parallel(std::size_t n, const std::function<Rat(std::size_t)>& f);
Rat max(std::size_t n, const std::function<Rat(std::size_t)>& f, Mode mode = Mode::parallel);

// Smallest i with pred(i) false, or nullopt if pred holds on [0, n).
std::optional<std::size_t> first_failure_serial(std::size_t n,
                                                const std::function<bool(std::size_t)>& pred);
std::optional<std::size_t> first_failure_parallel(std::size_t n,
                                                  const std::function<bool(std::size_t)>& pred);
std::optional<std::size_t> first_failure(std::size_t n,
                                         const std::function<bool(std::size_t)>& pred,
                                         Mode mode = Mode::parallel);

}  // namespace barq::par
