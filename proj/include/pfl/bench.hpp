/*
 * Copyright 2026 The pfl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Timing harness comparing the Pfaffian algorithms on seeded random skew
// matrices. Output is CSV with the columns
//
//   algorithm,n,ring,seconds,reps,digest,mean_seconds,threads
//
// where seconds is the median wall time over reps and digest is a hash of
// the result's canonical text, so runs of different algorithms on the same
// input can be compared without printing huge numbers.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/io.hpp"
#include "pfl/pfaffian.hpp"
#include "pfl/random.hpp"
#include "pfl/scalar.hpp"

namespace pfl {

enum class BenchAlgorithm { fl, matchings, laplace };

inline std::string to_string(BenchAlgorithm a) {
  switch (a) {
    case BenchAlgorithm::fl: return "fl";
    case BenchAlgorithm::matchings: return "matchings";
    case BenchAlgorithm::laplace: return "laplace";
  }
  return "?";
}

inline BenchAlgorithm parse_bench_algorithm(std::string_view s) {
  if (s == "fl") return BenchAlgorithm::fl;
  if (s == "matchings") return BenchAlgorithm::matchings;
  if (s == "laplace") return BenchAlgorithm::laplace;
  throw std::invalid_argument("unknown algorithm '" + std::string(s) + "'");
}

inline constexpr std::size_t kBenchLaplaceCap = 16;

struct BenchConfig {
  std::vector<std::size_t> sizes;
  RingKind ring = RingKind::rational;
  std::vector<BenchAlgorithm> algorithms{BenchAlgorithm::fl, BenchAlgorithm::matchings};
  unsigned reps = 3;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool override_caps = false;
};

struct BenchRecord {
  std::string algorithm;
  std::size_t n = 0;
  std::string ring;
  double seconds = 0.0;  ///< median; +inf when refused
  unsigned reps = 0;
  std::string digest;    ///< "refused" when the size cap blocked the run
  double mean_seconds = 0.0;
  unsigned threads = 1;

  bool refused() const { return digest == "refused"; }
};

/// FNV-1a 64-bit, as 16 lowercase hex digits.
inline std::string text_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::size_t bench_cap(BenchAlgorithm a) {
  switch (a) {
    case BenchAlgorithm::fl: return std::numeric_limits<std::size_t>::max();
    case BenchAlgorithm::matchings: return kMatchingsCap;
    case BenchAlgorithm::laplace: return kBenchLaplaceCap;
  }
  return 0;
}

namespace detail {

template <QAlgebra T>
T run_algorithm(BenchAlgorithm algo, const SkewMatrix<T>& a, unsigned threads) {
  switch (algo) {
    case BenchAlgorithm::fl: return pfaffian_fl(a, {.threads = threads}).value;
    case BenchAlgorithm::matchings:
      return pfaffian_matchings(a, {.override_cap = true, .threads = threads});
    case BenchAlgorithm::laplace: return pfaffian_laplace(a);
  }
  throw std::logic_error("unreachable");
}

template <QAlgebra T>
void bench_ring(const BenchConfig& config, const std::string& ring_tag, std::vector<BenchRecord>& out) {
  for (std::size_t n : config.sizes) {
    SkewIntegerGenerator gen(config.seed);
    const SkewMatrix<T> a = [&] {
      if constexpr (std::same_as<T, double>) return gen.float_skew(n);
      else return gen.skew<T>(n);
    }();
    std::vector<BenchRecord> rows;
    for (BenchAlgorithm algo : config.algorithms) {
      BenchRecord rec;
      rec.algorithm = to_string(algo);
      rec.n = n;
      rec.ring = ring_tag;
      rec.threads = config.threads;
      if (n > bench_cap(algo) && !config.override_caps) {
        rec.seconds = rec.mean_seconds = std::numeric_limits<double>::infinity();
        rec.digest = "refused";
        rows.push_back(rec);
        continue;
      }
      std::vector<double> times;
      std::string text;
      const unsigned reps = std::max(1U, config.reps);
      for (unsigned r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const T value = run_algorithm(algo, a, config.threads);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
        if (r == 0) text = EntryCodec<T>::format(value);
      }
      std::vector<double> sorted = times;
      std::sort(sorted.begin(), sorted.end());
      const std::size_t mid = sorted.size() / 2;
      rec.seconds = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
      rec.mean_seconds = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
      rec.reps = reps;
      rec.digest = text_digest(text);
      rows.push_back(rec);
    }
    if constexpr (is_exact_ring_v<T>) {
      const BenchRecord* ref = nullptr;
      for (const BenchRecord& r : rows) {
        if (r.refused()) continue;
        if (ref == nullptr) ref = &r;
        else if (r.digest != ref->digest)
          throw ConsistencyError("bench: " + r.algorithm + " and " + ref->algorithm +
                                 " disagree at n = " + std::to_string(n));
      }
    }
    out.insert(out.end(), rows.begin(), rows.end());
  }
}

}  // namespace detail

/// Times every selected algorithm on one seeded input per size. Sizes above
/// an algorithm's cap produce a refused row unless override_caps is set.
/// Throws ConsistencyError if exact-ring digests disagree.
inline std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<BenchRecord> out;
  switch (config.ring) {
    case RingKind::rational: detail::bench_ring<Rational>(config, "rational", out); break;
    case RingKind::integer: detail::bench_ring<RationalizedInteger>(config, "integer", out); break;
    case RingKind::floating: detail::bench_ring<double>(config, "float", out); break;
    default: throw std::invalid_argument("bench supports rational, integer and float rings");
  }
  return out;
}

inline std::string bench_csv(const std::vector<BenchRecord>& records, const BenchConfig& config) {
  std::string out = "# prng=" + std::string(SkewIntegerGenerator::kAlgorithm) +
                    " seed=" + std::to_string(config.seed) + " threads=" + std::to_string(config.threads) +
                    "\nalgorithm,n,ring,seconds,reps,digest,mean_seconds,threads\n";
  auto num = [](double x) {
    if (x == std::numeric_limits<double>::infinity()) return std::string("inf");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
  };
  for (const BenchRecord& r : records) {
    out += r.algorithm + "," + std::to_string(r.n) + "," + r.ring + "," + num(r.seconds) + "," +
           std::to_string(r.reps) + "," + r.digest + "," + num(r.mean_seconds) + "," +
           std::to_string(r.threads) + "\n";
  }
  return out;
}

}  // namespace pfl
