#include "hkmod/fujiki.hpp"

#include <algorithm>

namespace hkmod {

std::string to_string(HkType type) {
  switch (type) {
    case HkType::K3Surface: return "K3";
    case HkType::K3n: return "K3n";
    case HkType::Kumn: return "Kumn";
    case HkType::OG6: return "OG6";
  }
  return "?";
}

HkType parse_hk_type(std::string_view name) {
  if (name == "K3" || name == "k3" || name == "K3-surface") return HkType::K3Surface;
  if (name == "K3n" || name == "K3^[n]" || name == "k3n" || name == "K3[n]") return HkType::K3n;
  if (name == "Kumn" || name == "Kum_n" || name == "kum" || name == "Kum") return HkType::Kumn;
  if (name == "OG6" || name == "og6") return HkType::OG6;
  throw InvalidInput("unknown hyperkähler type '" + std::string(name) + "'");
}

Rational builtin_fujiki_constant(HkType type, int n) {
  switch (type) {
    case HkType::K3Surface:
    case HkType::K3n: return 1;
    case HkType::Kumn: return n + 1;
    case HkType::OG6: return 4;
  }
  throw InvalidInput("unknown hyperkähler type");
}

int builtin_half_dimension(HkType type, int n) {
  switch (type) {
    case HkType::K3Surface: return 1;
    case HkType::OG6: return 3;
    default: return n;
  }
}

FujikiSetup::FujikiSetup(int n_, Rational c, IntLattice L) : n(n_), c_X(std::move(c)), pairing(std::move(L)) {
  if (n <= 0) throw InvalidInput("half-dimension n must be positive");
  if (c_X <= 0) throw InvalidInput("Fujiki constant must be positive, got " + c_X.get_str());
}

FujikiSetup FujikiSetup::builtin(HkType type, int n, IntLattice pairing) {
  const int half = builtin_half_dimension(type, n);
  if ((type == HkType::K3Surface || type == HkType::OG6) && n != half) {
    throw InvalidInput(to_string(type) + " has half-dimension " + std::to_string(half));
  }
  return FujikiSetup(half, builtin_fujiki_constant(type, half), std::move(pairing));
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix tabulate(std::size_t count, const PairingOracle& q) {
  Matrix m(count, std::vector<Rational>(count));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) m[i][j] = q(i, j);
  }
  return m;
}

// Enumerates matchings of the indices in `free` (sorted ascending).
void enumerate(const Matrix& m, std::vector<std::size_t>& free, const Rational& prefix, MatchingSum& acc) {
  if (free.empty()) {
    acc.value += prefix;
    acc.matchings += 1;
    return;
  }
  const std::size_t first = free.front();
  for (std::size_t t = 1; t < free.size(); ++t) {
    const std::size_t partner = free[t];
    std::vector<std::size_t> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t u = 1; u < free.size(); ++u) {
      if (u != t) rest.push_back(free[u]);
    }
    enumerate(m, rest, prefix * m[first][partner], acc);
  }
}

void check_even(std::size_t count) {
  if (count % 2 != 0) throw InvalidInput("matching sum needs an even number of classes, got " + std::to_string(count));
}

std::vector<std::size_t> iota(std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = i;
  return v;
}

// One unit of parallel work: the first two couples are fixed.
struct Branch {
  Rational prefix;
  std::vector<std::size_t> rest;
};

std::vector<Branch> split(const Matrix& m, const std::vector<std::size_t>& free, int depth) {
  std::vector<Branch> out{{Rational(1), free}};
  for (int level = 0; level < depth; ++level) {
    std::vector<Branch> next;
    for (auto& b : out) {
      if (b.rest.empty()) {
        next.push_back(std::move(b));
        continue;
      }
      const std::size_t first = b.rest.front();
      for (std::size_t t = 1; t < b.rest.size(); ++t) {
        std::vector<std::size_t> rest;
        for (std::size_t u = 1; u < b.rest.size(); ++u) {
          if (u != t) rest.push_back(b.rest[u]);
        }
        next.push_back({b.prefix * m[first][b.rest[t]], std::move(rest)});
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

namespace reference {

MatchingSum matchings_sum(std::size_t count, const PairingOracle& q) {
  check_even(count);
  const Matrix m = tabulate(count, q);
  MatchingSum acc{0, 0};
  auto free = iota(count);
  enumerate(m, free, Rational(1), acc);
  return acc;
}

}  // namespace reference

MatchingSum matchings_sum(std::size_t count, const PairingOracle& q) {
  check_even(count);
  if (count < 8) return reference::matchings_sum(count, q);
  const Matrix m = tabulate(count, q);
  const auto branches = split(m, iota(count), 2);
  std::vector<MatchingSum> partial(branches.size(), MatchingSum{0, 0});
  const long nb = static_cast<long>(branches.size());
#pragma omp parallel for schedule(dynamic)
  for (long b = 0; b < nb; ++b) {
    auto rest = branches[b].rest;
    enumerate(m, rest, branches[b].prefix, partial[b]);
  }
  // Fixed-order reduction keeps the result independent of the schedule.
  MatchingSum acc{0, 0};
  for (const auto& p : partial) {
    acc.value += p.value;
    acc.matchings += p.matchings;
  }
  return acc;
}

MatchingSum matchings_sum(const IntLattice& L, std::span<const LatVec> classes) {
  return matchings_sum(classes.size(), [&](std::size_t i, std::size_t j) { return pair(L, classes[i], classes[j]); });
}

MatchingSum top_intersection(const FujikiSetup& setup, std::span<const LatVec> classes) {
  if (classes.size() != static_cast<std::size_t>(2 * setup.n)) {
    throw InvalidInput("top intersection needs " + std::to_string(2 * setup.n) + " classes, got " +
                       std::to_string(classes.size()));
  }
  auto s = matchings_sum(setup.pairing, classes);
  s.value *= setup.c_X;
  return s;
}

Rational modular_delta_integral(const FujikiSetup& setup, const ModularClass& mc, std::span<const LatVec> alphas) {
  if (mc.r <= 0) throw InvalidInput("modular class must have positive rank");
  if (alphas.size() != static_cast<std::size_t>(2 * setup.n - 2)) {
    throw InvalidInput("discriminant integral needs " + std::to_string(2 * setup.n - 2) + " classes");
  }
  return mc.d_F * matchings_sum(setup.pairing, alphas).value;
}

LatVec lambda_ef(const Integer& rE, const LatVec& c1E, const Integer& rF, const LatVec& c1F) {
  return Rational(rF) * c1E - Rational(rE) * c1F;
}

int slope_comparison(const FujikiSetup& setup, const LatVec& lambda, const LatVec& h) {
  const Rational qh = norm(setup.pairing, h);
  if (qh <= 0) throw MathFailure("slope comparison needs q(h) > 0, got " + qh.get_str());
  const int by_pairing = sign(pair(setup.pairing, lambda, h));
  std::vector<LatVec> classes(static_cast<std::size_t>(2 * setup.n), h);
  classes[0] = lambda;
  const int by_integral = sign(top_intersection(setup, classes).value);
  if (by_pairing != by_integral) throw InternalError("slope sign disagrees with the Fujiki integral");
  return by_pairing;
}

Rational fiber_restriction_integral(const FujikiSetup& setup, const LatVec& lambda, const LatVec& h,
                                    const LatVec& f) {
  const IntLattice& L = setup.pairing;
  if (norm(L, f) != 0) throw MathFailure("fiber class must be isotropic, q(f) = " + norm(L, f).get_str());
  const unsigned long n = static_cast<unsigned long>(setup.n);
  const Rational closed =
      Rational(factorial(n)) * setup.c_X * pow(pair(L, h, f), n - 1) * pair(L, lambda, f);

  std::vector<LatVec> classes;
  classes.push_back(lambda);
  for (unsigned long i = 0; i + 1 < n; ++i) classes.push_back(h);
  for (unsigned long i = 0; i < n; ++i) classes.push_back(f);
  const Rational expanded = top_intersection(setup, classes).value;
  if (closed != expanded) {
    throw InternalError("fiber restriction closed form " + closed.get_str() + " != matching expansion " +
                        expanded.get_str());
  }
  return closed;
}

Rational a_of(const Integer& r, const Rational& d_F, const Rational& c_X) {
  return Rational(r * r) * d_F / (4 * c_X);
}

bool propsemi_bound_check(const FujikiSetup& setup, const Integer& r, const Rational& d_F,
                          const Rational& lambda_norm) {
  const Rational a = a_of(r, d_F, setup.c_X);
  return -a <= lambda_norm && lambda_norm <= 0;
}

IdentitySides destabilizing_discriminant_identity(const FujikiSetup& setup, const Integer& rE,
                                                  const Rational& deltaE_h, const Integer& rG,
                                                  const Rational& deltaG_h, const Integer& rF,
                                                  const Rational& d_F, const Rational& lambda_norm,
                                                  const Rational& q_h) {
  const auto n = static_cast<unsigned long>(setup.n);
  const Rational scale = Rational(double_factorial_odd(static_cast<long>(n) - 1)) * pow(q_h, n - 1);
  IdentitySides out;
  out.lhs = Rational(rF * rG) * deltaE_h + Rational(rF * rE) * deltaG_h;
  out.rhs = (Rational(rE * rG) * d_F + setup.c_X * lambda_norm) * scale;
  return out;
}

}  // namespace hkmod
