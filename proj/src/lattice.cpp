#include "hkmod/lattice.hpp"

#include <sstream>
#include <utility>

namespace hkmod {

LatVec::LatVec(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

LatVec::LatVec(const std::vector<Integer>& coords) {
  coords_.reserve(coords.size());
  for (const auto& c : coords) coords_.emplace_back(c);
}

LatVec::LatVec(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatVec LatVec::zero(std::size_t rank) { return LatVec(std::vector<Rational>(rank, Rational(0))); }

LatVec LatVec::basis(std::size_t rank, std::size_t index) {
  std::vector<Rational> c(rank, Rational(0));
  c.at(index) = 1;
  return LatVec(std::move(c));
}

bool LatVec::is_integral() const {
  for (const auto& c : coords_) {
    if (!hkmod::is_integer(c)) return false;
  }
  return true;
}

bool LatVec::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<Integer> LatVec::integer_coords() const {
  std::vector<Integer> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(to_integer(c, "lattice coordinate"));
  return out;
}

LatVec LatVec::operator+(const LatVec& other) const {
  if (size() != other.size()) throw InvalidInput("vector length mismatch");
  std::vector<Rational> c(size());
  for (std::size_t i = 0; i < size(); ++i) c[i] = coords_[i] + other.coords_[i];
  return LatVec(std::move(c));
}

LatVec LatVec::operator-(const LatVec& other) const {
  if (size() != other.size()) throw InvalidInput("vector length mismatch");
  std::vector<Rational> c(size());
  for (std::size_t i = 0; i < size(); ++i) c[i] = coords_[i] - other.coords_[i];
  return LatVec(std::move(c));
}

LatVec LatVec::operator-() const { return Rational(-1) * *this; }

LatVec operator*(const Rational& s, const LatVec& v) {
  std::vector<Rational> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v.coords_[i];
  return LatVec(std::move(c));
}

std::string to_string(const LatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

IntLattice::IntLattice(std::vector<std::vector<Integer>> gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
  if (gram_.empty()) throw InvalidInput("lattice rank must be positive");
  const std::size_t n = gram_.size();
  for (const auto& row : gram_) {
    if (row.size() != n) throw InvalidInput("gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw InvalidInput("gram matrix is not symmetric");
    }
  }
  determinant_ = hkmod::determinant(gram_);
}

IntLattice::IntLattice(std::initializer_list<std::initializer_list<long>> gram, std::string label)
    : IntLattice(
          [&] {
            std::vector<std::vector<Integer>> g;
            for (const auto& row : gram) {
              std::vector<Integer> r;
              for (long x : row) r.emplace_back(x);
              g.push_back(std::move(r));
            }
            return g;
          }(),
          std::move(label)) {}

namespace {

void check_dims(const IntLattice& L, const LatVec& v) {
  if (v.size() != L.rank()) {
    throw InvalidInput("vector of length " + std::to_string(v.size()) + " does not match lattice rank " +
                       std::to_string(L.rank()));
  }
}

void require_integral(const LatVec& v, const char* op) {
  if (!v.is_integral()) throw InvalidInput(std::string(op) + ": vector " + to_string(v) + " is not integral");
}

}  // namespace

Rational pair(const IntLattice& L, const LatVec& v, const LatVec& w) {
  check_dims(L, v);
  check_dims(L, w);
  Rational acc = 0;
  const std::size_t n = L.rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] != 0) row += Rational(L.entry(i, j)) * w[j];
    }
    acc += v[i] * row;
  }
  return acc;
}

Rational norm(const IntLattice& L, const LatVec& v) { return pair(L, v, v); }

Integer pair_int(const IntLattice& L, const LatVec& v, const LatVec& w) {
  require_integral(v, "pair_int");
  require_integral(w, "pair_int");
  return pair(L, v, w).get_num();
}

Integer divisibility(const IntLattice& L, const LatVec& v) {
  check_dims(L, v);
  require_integral(v, "divisibility");
  Integer g = 0;
  for (std::size_t i = 0; i < L.rank(); ++i) {
    g = gcd(g, pair(L, v, LatVec::basis(L.rank(), i)).get_num());
  }
  return g;
}

Integer content(const LatVec& v) {
  require_integral(v, "content");
  Integer g = 0;
  for (const auto& c : v.coords()) g = gcd(g, c.get_num());
  return g;
}

bool is_primitive(const IntLattice& L, const LatVec& v) {
  check_dims(L, v);
  require_integral(v, "is_primitive");
  if (v.is_zero()) throw InvalidInput("is_primitive: zero vector");
  return content(v) == 1;
}

LatVec primitive_part(const IntLattice& L, const LatVec& v) {
  check_dims(L, v);
  require_integral(v, "primitive_part");
  if (v.is_zero()) throw InvalidInput("primitive_part: zero vector");
  return frac(1, content(v)) * v;
}

bool saturation_check(const IntLattice& L, const LatVec& v1, const LatVec& v2) {
  check_dims(L, v1);
  check_dims(L, v2);
  require_integral(v1, "saturation_check");
  require_integral(v2, "saturation_check");
  const auto a = v1.integer_coords();
  const auto b = v2.integer_coords();
  Integer g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      g = gcd(g, a[i] * b[j] - a[j] * b[i]);
    }
  }
  if (g == 0) throw InvalidInput("saturation_check: vectors are linearly dependent");
  return g == 1;
}

Integer discriminant(const IntLattice& L) { return L.determinant(); }

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace hkmod
