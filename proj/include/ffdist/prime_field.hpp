#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ffdist {

/// Canonical residue in [0, q).
using Scalar = std::uint32_t;
using Complex = std::complex<double>;

/// Largest modulus accepted by the trial-division primality check.
inline constexpr std::uint64_t kMaxModulus = 1'000'000;

/**
 * The prime field F_q together with the tables every counting kernel needs:
 * the additive character chi(t) = exp(2 pi i t / q) and the squares t^2 mod q.
 *
 * Instances are immutable and cheap to copy; the tables are shared.
 */
class PrimeField {
 public:
  /// Throws std::invalid_argument when q < 2, q > kMaxModulus or q is composite.
  explicit PrimeField(std::uint64_t q);

  Scalar q() const noexcept { return q_; }
  Scalar q_mod_4() const noexcept { return q_ % 4; }

  Scalar reduce(std::int64_t x) const noexcept {
    const std::int64_t m = x % static_cast<std::int64_t>(q_);
    return static_cast<Scalar>(m < 0 ? m + q_ : m);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Scalar>(s >= q_ ? s - q_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((std::uint64_t{a} * b) % q_);
  }
  Scalar square(Scalar a) const noexcept { return tables_->squares[a]; }

  /// chi(t) for a canonical residue t.
  const Complex& chi(Scalar t) const noexcept { return tables_->chi[t]; }
  const std::vector<Complex>& char_table() const noexcept { return tables_->chi; }

  /// Legendre symbol: 0 for t = 0, 1 for nonzero squares, -1 otherwise.
  int quadratic_character(Scalar t) const noexcept { return tables_->legendre[t]; }

  bool operator==(const PrimeField& other) const noexcept { return q_ == other.q_; }

 private:
  struct Tables {
    std::vector<Complex> chi;
    std::vector<Scalar> squares;
    std::vector<signed char> legendre;
  };

  Scalar q_;
  std::shared_ptr<const Tables> tables_;
};

PrimeField make_field(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// Legendre symbol of t (reduced mod q first).
int quadratic_character(const PrimeField& fld, std::int64_t t);

/// The rotation with rows (a, -b), (b, a); a^2 + b^2 = 1.
struct Rotation {
  Scalar a = 1;
  Scalar b = 0;

  bool operator==(const Rotation&) const = default;
  auto operator<=>(const Rotation&) const = default;
};

struct Vec2 {
  Scalar x = 0;
  Scalar y = 0;

  bool operator==(const Vec2&) const = default;
};

/// All of SO_2(F_q), lexicographic in (a, b).
std::vector<Rotation> enumerate_so2(const PrimeField& fld);

Vec2 rotation_apply(const PrimeField& fld, Rotation r, Vec2 v);
Rotation rotation_compose(const PrimeField& fld, Rotation lhs, Rotation rhs);
Rotation rotation_inverse(const PrimeField& fld, Rotation r);
/// Transpose of the rotation matrix; equals the inverse.
inline Rotation rotation_transpose(const PrimeField& fld, Rotation r) {
  return rotation_inverse(fld, r);
}

struct OrbitReport {
  bool pass = true;
  std::uint64_t pairs_checked = 0;
  std::optional<std::string> counterexample;
};

/**
 * Exhaustive check that for nonzero x, y in F_q^2 the equation x = theta y has
 * exactly one solution theta in SO_2 when |x| = |y| and none otherwise.
 * Requires q = 3 mod 4; throws std::invalid_argument otherwise.
 */
OrbitReport so2_orbit_check(const PrimeField& fld);

}  // namespace ffdist
