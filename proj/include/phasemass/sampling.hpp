#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "phasemass/exact.hpp"
#include "phasemass/model_config.hpp"
#include "phasemass/rng.hpp"
#include "phasemass/subspace.hpp"

namespace phasemass {

// Result of a Monte Carlo estimate.  mean/std_error come from the sample
// first and second moments; expected carries the exact value the estimate
// converges to.
struct McEstimate {
  double mean;
  double std_error;
  std::uint64_t samples;
  std::uint64_t seed;
  std::optional<Rational> expected;
};

// Uniformly distributed n-dimensional subspace of R^N for sample `index` of
// the stream named by `seed`: n iid standard Gaussian rows, orthonormalized.
// Invariance of the Gaussian under rotations makes the span Haar-uniform.
inline Frame haar_subspace_at(int N, int n, std::uint64_t seed, std::uint64_t index) {
  if (n < 1 || N < n) throw DomainError("haar_subspace_at: need 1 <= n <= N");
  for (int attempt = 0; attempt < 2; ++attempt) {
    // A rank-deficient draw has probability zero; retry once on a disjoint
    // substream, then give up.
    CounterRng rng(attempt == 0 ? seed : mix64(seed) + 1, index);
    std::vector<Vector> rows(static_cast<std::size_t>(n),
                             Vector(static_cast<std::size_t>(N)));
    for (auto& r : rows)
      for (auto& c : r) c = rng.next_gaussian();
    try {
      return build_frame(rows);
    } catch (const RankDeficient&) {
      if (attempt == 1) throw;
    }
  }
  throw RankDeficient("haar_subspace_at: unreachable");
}

inline Frame haar_subspace(int N, int n, RandomStream& stream) {
  return haar_subspace_at(N, n, stream.seed(), stream.take());
}

namespace detail {

// First and second moments of value(i) over i in [0, samples).  Values are
// accumulated sequentially inside fixed-size chunks and the chunk totals are
// combined pairwise, so the result is one specific floating-point sum no
// matter how many workers participate.
template <class F>
std::pair<double, double> moments(std::uint64_t samples, unsigned workers,
                                  F&& value) {
  constexpr std::uint64_t kChunk = 4096;
  const std::size_t nchunks =
      static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
  std::vector<double> s1(nchunks, 0.0), s2(nchunks, 0.0);

  const auto run_chunk = [&](std::size_t c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t hi = std::min(samples, lo + kChunk);
    double a = 0.0, b = 0.0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const double x = value(i);
      a += x;
      b += x * x;
    }
    s1[c] = a;
    s2[c] = b;
  };

  if (workers <= 1 || nchunks <= 1) {
    for (std::size_t c = 0; c < nchunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<std::size_t>(workers, nchunks);
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t)
      pool.emplace_back([&] {
        for (std::size_t c = next.fetch_add(1); c < nchunks;
             c = next.fetch_add(1))
          run_chunk(c);
      });
    for (auto& t : pool) t.join();
  }

  // Pairwise reduction over chunk totals.
  const auto reduce = [](const std::vector<double>& v) {
    const auto rec = [](const auto& self, const std::vector<double>& w,
                        std::size_t lo, std::size_t hi) -> double {
      if (hi - lo == 1) return w[lo];
      const std::size_t mid = lo + (hi - lo) / 2;
      return self(self, w, lo, mid) + self(self, w, mid, hi);
    };
    return rec(rec, v, 0, v.size());
  };
  return {reduce(s1), reduce(s2)};
}

inline McEstimate finish(double s1, double s2, std::uint64_t samples,
                         std::uint64_t seed, Rational expected) {
  const double mean = s1 / static_cast<double>(samples);
  double var = 0.0;
  if (samples > 1) {
    var = (s2 - static_cast<double>(samples) * mean * mean) /
          static_cast<double>(samples - 1);
    if (var < 0.0) var = 0.0;
  }
  return {mean, std::sqrt(var / static_cast<double>(samples)), samples, seed,
          std::move(expected)};
}

}  // namespace detail

// Mean squared subspace_dot between a Haar-uniform 4d subspace of R^N and the
// fixed coordinate subspace {1,2,3,4}.  Converges to 1 / C(N, 4).
inline McEstimate estimate_alignment(int N, std::uint64_t samples,
                                     std::uint64_t seed, unsigned workers = 1) {
  if (N < 4) throw DomainError("estimate_alignment: need N >= 4");
  if (samples < 100) throw DomainError("estimate_alignment: need at least 100 samples");
  Rational expected = Rational(BigInt(1), count_subspaces(N, 4));
  if (N == 4) {
    // The only 4d subspace of R^4 is the whole space; every squared dot is
    // identically 1, so the estimate is exact.
    return {1.0, 0.0, samples, seed, std::move(expected)};
  }
  const Frame fixed = Frame::coordinate(static_cast<std::size_t>(N), IndexSet{1, 2, 3, 4});
  auto [s1, s2] = detail::moments(samples, workers, [&](std::uint64_t i) {
    const double d = subspace_dot(haar_subspace_at(N, 4, seed, i), fixed);
    return d * d;
  });
  return detail::finish(s1, s2, samples, seed, std::move(expected));
}

// Accrued squared overlap backing each mass ratio.
//
//   electron: squared dot of a Haar 4d subspace of R^16 with S; -> 1/1820.
//   pion:     a Haar 8d subspace of the 12d complement; sum of squared dots
//             of its 70 internal coordinate 4d subspaces with S~; -> 70/495.
//   proton:   the whole 12d complement; the sum runs over all 495 internal
//             coordinate 4d subspaces and telescopes to det I = 1 exactly
//             (Cauchy-Binet on an orthogonal basis), for every draw.
inline McEstimate estimate_accrual(Particle particle, std::uint64_t samples,
                                   std::uint64_t seed, unsigned workers = 1) {
  if (samples < 100) throw DomainError("estimate_accrual: need at least 100 samples");
  switch (particle) {
    case Particle::electron:
      return estimate_alignment(16, samples, seed, workers);
    case Particle::pion: {
      const auto subsets = enumerate_basis(8, 4);  // row subsets, 70 of them
      auto [s1, s2] = detail::moments(samples, workers, [&](std::uint64_t i) {
        const Frame p = haar_subspace_at(12, 8, seed, i);
        double acc = 0.0;
        double minor[16];
        for (const IndexSet& sigma : subsets) {
          // dot with the coordinate 4-space {1,2,3,4} of the complement: the
          // Gram matrix is the sub-block of p at rows sigma, columns 1..4.
          for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
              minor[r * 4 + c] =
                  p.at(static_cast<std::size_t>(sigma[static_cast<std::size_t>(r)]) - 1,
                       static_cast<std::size_t>(c));
          const double d = detail::det4(minor);
          acc += d * d;
        }
        return acc;
      });
      return detail::finish(s1, s2, samples, seed,
                            Rational(count_subspaces(8, 4), count_subspaces(12, 4)));
    }
    default:
      return {1.0, 0.0, samples, seed, Rational(1)};
  }
}

}  // namespace phasemass
