#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffdist/prime_field.hpp"

namespace ffdist {

using Vector = std::vector<Scalar>;
/// Base-q encoding of a point; the first coordinate is the most significant digit,
/// so index order is lexicographic order.
using PointIndex = std::uint64_t;

/// Upper bound on q^d for anything that enumerates the whole space.
inline constexpr std::uint64_t kMaxSpaceSize = 100'000'000;

/// Returns q^d, throwing std::length_error when it exceeds `limit`.
std::uint64_t space_size(const PrimeField& fld, int d, std::uint64_t limit = kMaxSpaceSize);

class PointCodec {
 public:
  PointCodec(const PrimeField& fld, int d);

  int dims() const noexcept { return d_; }
  std::uint64_t size() const noexcept { return size_; }
  /// q^(d-1-axis): distance between neighbours along `axis`.
  std::uint64_t stride(int axis) const noexcept { return strides_[axis]; }

  PointIndex encode(std::span<const Scalar> v) const;
  Vector decode(PointIndex idx) const;
  void decode_into(PointIndex idx, std::span<Scalar> out) const;

 private:
  Scalar q_;
  int d_;
  std::uint64_t size_;
  std::vector<std::uint64_t> strides_;
};

Scalar norm(const PrimeField& fld, std::span<const Scalar> v);

/// Norm of every point of F_q^d, indexed by PointIndex.
std::vector<Scalar> norm_table(const PrimeField& fld, int d);

struct Sphere {
  PrimeField field;
  int d;
  Scalar t;
  std::vector<Vector> points;
};

/// All points of norm t in lexicographic order. Throws std::length_error above
/// kMaxSpaceSize (use norm_fiber_sizes when only counts are needed).
Sphere enumerate_sphere(const PrimeField& fld, int d, Scalar t);

/// |S_t^{d-1}| for every t, by one pass over F_q^d.
std::vector<std::uint64_t> norm_fiber_sizes(const PrimeField& fld, int d);

/// A set of distinct points of F_q^d, stored as sorted encoded indices.
class PointSet {
 public:
  PointSet(PrimeField fld, int dims, std::vector<PointIndex> members);
  PointSet(const PrimeField& fld, int dims, const std::vector<Vector>& points);

  static PointSet full(const PrimeField& fld, int dims);

  const PrimeField& field() const noexcept { return field_; }
  int dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<PointIndex>& members() const noexcept { return members_; }
  bool contains(PointIndex idx) const;
  PointCodec codec() const { return PointCodec(field_, dims_); }
  std::vector<Vector> points() const;

 private:
  PrimeField field_;
  int dims_;
  std::vector<PointIndex> members_;
};

/// Header of a point-set file: `q=<q> dims=<d> [split=<k>,<l>]`.
struct PointSetHeader {
  std::uint64_t q = 0;
  int dims = 0;
  std::optional<std::pair<int, int>> split;
};

struct ParsedPointSet {
  PointSetHeader header;
  std::vector<Vector> points;
};

/// Parses the text format: `#` comments, one header line, then one point per
/// line as comma-separated decimal coordinates. Throws std::runtime_error with
/// the offending line number on malformed input.
ParsedPointSet parse_point_set(std::istream& in);
void write_point_set(std::ostream& out, const PointSet& set,
                     std::optional<std::pair<int, int>> split = std::nullopt);

}  // namespace ffdist
