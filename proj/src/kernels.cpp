#include "hkmod/kernels.hpp"

#include "hkmod/hilb2.hpp"
#include "hkmod/walls.hpp"

namespace hkmod {

namespace {

constexpr std::size_t kMaxSamples = 8;

// All triples for one r0, both values of i.
EconSweep econ_row(long r0, long e_max) {
  EconSweep row;
  const Integer R(r0);
  for (int i = 1; i <= 2; ++i) {
    for (long e = 1; e <= e_max; ++e) {
      ++row.candidates;
      const Integer E(e);
      if ((r0 - i) % 2 != 0 || !divisibility_type(E, i) || !econ_check(R, E)) continue;
      ++row.admissible;
      bool ok = true;
      try {
        const M0S0 ms = m0_s0(R, E);
        ok = ms.m0 + 1 == R * ms.s0;
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) {
        ++row.failures;
        if (row.failure_samples.size() < kMaxSamples) {
          row.failure_samples.push_back("i=" + std::to_string(i) + " r0=" + std::to_string(r0) + " e=" + std::to_string(e));
        }
      }
    }
  }
  return row;
}

void merge(EconSweep& total, const EconSweep& row) {
  total.candidates += row.candidates;
  total.admissible += row.admissible;
  total.failures += row.failures;
  for (const auto& s : row.failure_samples) {
    if (total.failure_samples.size() < kMaxSamples) total.failure_samples.push_back(s);
  }
}

struct WallJob {
  long e;
  long d;
};

std::vector<WallJob> wall_jobs(long e_min, long e_max, long d_max) {
  std::vector<WallJob> jobs;
  for (long e = e_min + (e_min % 2 != 0); e <= e_max; e += 2) {
    for (long d = 1; d <= d_max; ++d) jobs.push_back({e, d});
  }
  return jobs;
}

// Cells for one (e, d), a ascending.
std::vector<WallCell> wall_row(const WallJob& job, long a_max) {
  const EllipticNS ns(job.e, job.d);
  const Integer mn = min_negative_norm(ns);
  std::vector<WallCell> row;
  if (a_max < 1) return row;
  // Enumerate once at the largest a and count by threshold.
  const std::vector<WallClass> all = enumerate_wall_classes(ns, Rational(a_max));
  for (long a = 1; a <= a_max; ++a) {
    std::size_t count = 0;
    for (const auto& w : all) {
      if (w.norm >= -a) ++count;
    }
    row.push_back({job.e, job.d, a, count, mn});
  }
  return row;
}

}  // namespace

EconSweep sweep_econ(long r0_max, long e_max) {
  std::vector<EconSweep> rows(static_cast<std::size_t>(r0_max > 0 ? r0_max : 0));
#pragma omp parallel for schedule(dynamic)
  for (long r0 = 1; r0 <= r0_max; ++r0) rows[static_cast<std::size_t>(r0 - 1)] = econ_row(r0, e_max);
  EconSweep total;
  for (const auto& row : rows) merge(total, row);
  return total;
}

std::vector<WallCell> sweep_walls(long e_min, long e_max, long d_max, long a_max) {
  const std::vector<WallJob> jobs = wall_jobs(e_min, e_max, d_max);
  std::vector<std::vector<WallCell>> rows(jobs.size());
  const long n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < n; ++j) rows[static_cast<std::size_t>(j)] = wall_row(jobs[static_cast<std::size_t>(j)], a_max);
  std::vector<WallCell> out;
  for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

namespace reference {

EconSweep sweep_econ(long r0_max, long e_max) {
  EconSweep total;
  for (long r0 = 1; r0 <= r0_max; ++r0) merge(total, econ_row(r0, e_max));
  return total;
}

std::vector<WallCell> sweep_walls(long e_min, long e_max, long d_max, long a_max) {
  std::vector<WallCell> out;
  for (const auto& job : wall_jobs(e_min, e_max, d_max)) {
    const EllipticNS ns(job.e, job.d);
    const Integer mn = min_negative_norm(ns);
    for (long a = 1; a <= a_max; ++a) {
      out.push_back({job.e, job.d, a, enumerate_wall_classes(ns, Rational(a)).size(), mn});
    }
  }
  return out;
}

}  // namespace reference

}  // namespace hkmod
