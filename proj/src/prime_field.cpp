#include "ffdist/prime_field.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ffdist {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field modulus must be >= 2, got " + std::to_string(q));
  if (q > kMaxModulus) {
    throw std::invalid_argument("field modulus " + std::to_string(q) +
                                " exceeds the trial-division limit " + std::to_string(kMaxModulus));
  }
  if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
  q_ = static_cast<Scalar>(q);

  auto tables = std::make_shared<Tables>();
  tables->chi.resize(q);
  tables->squares.resize(q);
  tables->legendre.assign(q, -1);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
  for (Scalar t = 0; t < q_; ++t) {
    tables->chi[t] = std::polar(1.0, step * t);
    tables->squares[t] = static_cast<Scalar>((std::uint64_t{t} * t) % q);
  }
  for (Scalar t = 0; t < q_; ++t) tables->legendre[tables->squares[t]] = 1;
  tables->legendre[0] = 0;
  tables_ = std::move(tables);
}

PrimeField make_field(std::uint64_t q) { return PrimeField(q); }

int quadratic_character(const PrimeField& fld, std::int64_t t) {
  return fld.quadratic_character(fld.reduce(t));
}

std::vector<Rotation> enumerate_so2(const PrimeField& fld) {
  std::vector<Rotation> out;
  const Scalar q = fld.q();
  out.reserve(q + 1);
  for (Scalar a = 0; a < q; ++a) {
    for (Scalar b = 0; b < q; ++b) {
      if (fld.add(fld.square(a), fld.square(b)) == 1 % q) out.push_back({a, b});
    }
  }
  return out;
}

Vec2 rotation_apply(const PrimeField& fld, Rotation r, Vec2 v) {
  return {fld.sub(fld.mul(r.a, v.x), fld.mul(r.b, v.y)),
          fld.add(fld.mul(r.b, v.x), fld.mul(r.a, v.y))};
}

Rotation rotation_compose(const PrimeField& fld, Rotation lhs, Rotation rhs) {
  // (a1 + i b1)(a2 + i b2)
  return {fld.sub(fld.mul(lhs.a, rhs.a), fld.mul(lhs.b, rhs.b)),
          fld.add(fld.mul(lhs.a, rhs.b), fld.mul(lhs.b, rhs.a))};
}

Rotation rotation_inverse(const PrimeField& fld, Rotation r) { return {r.a, fld.neg(r.b)}; }

OrbitReport so2_orbit_check(const PrimeField& fld) {
  if (fld.q_mod_4() != 3) {
    throw std::invalid_argument("so2_orbit_check requires q = 3 mod 4, got q = " +
                                std::to_string(fld.q()));
  }
  const Scalar q = fld.q();
  const auto rotations = enumerate_so2(fld);
  OrbitReport report;
  for (Scalar x1 = 0; x1 < q; ++x1) {
    for (Scalar x2 = 0; x2 < q; ++x2) {
      if (x1 == 0 && x2 == 0) continue;
      const Vec2 x{x1, x2};
      const Scalar nx = fld.add(fld.square(x1), fld.square(x2));
      for (Scalar y1 = 0; y1 < q; ++y1) {
        for (Scalar y2 = 0; y2 < q; ++y2) {
          if (y1 == 0 && y2 == 0) continue;
          const Vec2 y{y1, y2};
          const Scalar ny = fld.add(fld.square(y1), fld.square(y2));
          std::size_t hits = 0;
          for (const auto& r : rotations) {
            if (rotation_apply(fld, r, y) == x) ++hits;
          }
          ++report.pairs_checked;
          const std::size_t expected = nx == ny ? 1 : 0;
          if (hits != expected && report.pass) {
            report.pass = false;
            std::ostringstream os;
            os << "x=(" << x1 << "," << x2 << ") y=(" << y1 << "," << y2 << ") |x|=" << nx
               << " |y|=" << ny << " solutions=" << hits;
            report.counterexample = os.str();
          }
        }
      }
    }
  }
  return report;
}

}  // namespace ffdist
