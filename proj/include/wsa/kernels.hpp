#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wsa::kernels {

/// Process-wide switch between the OpenMP kernels and the serial reference.
/// The parallel kernels reduce over contiguous index chunks combined in
/// order, so both paths return bitwise-identical results; tests assert that.
bool parallel_enabled();
void set_parallel_enabled(bool on);

template <class Score>
struct MaxResult {
    std::size_t index = 0;
    Score value{};
};

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> chunks(std::size_t n, int parts) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (n == 0) return out;
    std::size_t per = n / parts, extra = n % parts;
    std::size_t begin = 0;
    for (int c = 0; c < parts && begin < n; ++c) {
        std::size_t len = per + (std::size_t(c) < extra ? 1 : 0);
        out.emplace_back(begin, begin + len);
        begin += len;
    }
    return out;
}

// First stored exception wins by chunk order so reruns fail identically.
struct ExceptionSlot {
    std::exception_ptr ptr;
    std::size_t chunk = SIZE_MAX;
    void store(std::exception_ptr e, std::size_t c) {
#ifdef _OPENMP
#pragma omp critical(wsa_kernel_exception)
#endif
        {
            if (c < chunk) {
                chunk = c;
                ptr = e;
            }
        }
    }
    void rethrow_if_set() const {
        if (ptr) std::rethrow_exception(ptr);
    }
};

inline int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace detail

/// Max of score(i) over [0, n); ties keep the smallest index.
template <class Score, class ScoreFn>
std::optional<MaxResult<Score>> sweep_max_serial(std::size_t n, ScoreFn&& score) {
    std::optional<MaxResult<Score>> best;
    for (std::size_t i = 0; i < n; ++i) {
        Score s = score(i);
        if (!best || best->value < s) best = MaxResult<Score>{i, std::move(s)};
    }
    return best;
}

template <class Score, class ScoreFn>
std::optional<MaxResult<Score>> sweep_max_parallel(std::size_t n, ScoreFn&& score) {
    auto parts = detail::chunks(n, detail::worker_count());
    std::vector<std::optional<MaxResult<Score>>> locals(parts.size());
    detail::ExceptionSlot err;
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1)
#endif
    for (std::size_t c = 0; c < parts.size(); ++c) {
        try {
            std::optional<MaxResult<Score>> local;
            for (std::size_t i = parts[c].first; i < parts[c].second; ++i) {
                Score s = score(i);
                if (!local || local->value < s) local = MaxResult<Score>{i, std::move(s)};
            }
            locals[c] = std::move(local);
        } catch (...) {
            err.store(std::current_exception(), c);
        }
    }
    err.rethrow_if_set();
    std::optional<MaxResult<Score>> best;
    for (auto& local : locals) {
        if (local && (!best || best->value < local->value)) best = std::move(local);
    }
    return best;
}

template <class Score, class ScoreFn>
std::optional<MaxResult<Score>> sweep_max(std::size_t n, ScoreFn&& score) {
    if (parallel_enabled()) return sweep_max_parallel<Score>(n, std::forward<ScoreFn>(score));
    return sweep_max_serial<Score>(n, std::forward<ScoreFn>(score));
}

/// Smallest i in [0, n) with pred(i), or nullopt.
template <class Pred>
std::optional<std::size_t> find_first_serial(std::size_t n, Pred&& pred) {
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) return i;
    return std::nullopt;
}

template <class Pred>
std::optional<std::size_t> find_first_parallel(std::size_t n, Pred&& pred) {
    auto parts = detail::chunks(n, detail::worker_count());
    std::vector<std::optional<std::size_t>> locals(parts.size());
    detail::ExceptionSlot err;
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1)
#endif
    for (std::size_t c = 0; c < parts.size(); ++c) {
        try {
            for (std::size_t i = parts[c].first; i < parts[c].second; ++i) {
                if (pred(i)) {
                    locals[c] = i;
                    break;
                }
            }
        } catch (...) {
            err.store(std::current_exception(), c);
        }
    }
    err.rethrow_if_set();
    for (auto& local : locals)
        if (local) return local;
    return std::nullopt;
}

template <class Pred>
std::optional<std::size_t> find_first(std::size_t n, Pred&& pred) {
    if (parallel_enabled()) return find_first_parallel(n, std::forward<Pred>(pred));
    return find_first_serial(n, std::forward<Pred>(pred));
}

/// All i in [0, n) with pred(i), ascending.
template <class Pred>
std::vector<std::size_t> collect_serial(std::size_t n, Pred&& pred) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) out.push_back(i);
    return out;
}

template <class Pred>
std::vector<std::size_t> collect_parallel(std::size_t n, Pred&& pred) {
    auto parts = detail::chunks(n, detail::worker_count());
    std::vector<std::vector<std::size_t>> locals(parts.size());
    detail::ExceptionSlot err;
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1)
#endif
    for (std::size_t c = 0; c < parts.size(); ++c) {
        try {
            for (std::size_t i = parts[c].first; i < parts[c].second; ++i)
                if (pred(i)) locals[c].push_back(i);
        } catch (...) {
            err.store(std::current_exception(), c);
        }
    }
    err.rethrow_if_set();
    std::vector<std::size_t> out;
    for (auto& local : locals) out.insert(out.end(), local.begin(), local.end());
    return out;
}

template <class Pred>
std::vector<std::size_t> collect(std::size_t n, Pred&& pred) {
    if (parallel_enabled()) return collect_parallel(n, std::forward<Pred>(pred));
    return collect_serial(n, std::forward<Pred>(pred));
}

} // namespace wsa::kernels
