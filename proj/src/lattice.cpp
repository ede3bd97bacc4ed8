#include "ffdist/lattice.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ffdist {

std::uint64_t space_size(const PrimeField& fld, int d, std::uint64_t limit) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) {
    n *= fld.q();
    if (n > limit) {
      throw std::length_error("q^d = " + std::to_string(fld.q()) + "^" + std::to_string(d) +
                              " exceeds the enumeration limit " + std::to_string(limit));
    }
  }
  return n;
}

PointCodec::PointCodec(const PrimeField& fld, int d)
    : q_(fld.q()), d_(d), size_(space_size(fld, d)), strides_(d) {
  std::uint64_t s = 1;
  for (int axis = d - 1; axis >= 0; --axis) {
    strides_[axis] = s;
    s *= q_;
  }
}

PointIndex PointCodec::encode(std::span<const Scalar> v) const {
  if (static_cast<int>(v.size()) != d_) {
    throw std::invalid_argument("expected " + std::to_string(d_) + " coordinates, got " +
                                std::to_string(v.size()));
  }
  PointIndex idx = 0;
  for (Scalar c : v) {
    if (c >= q_) throw std::invalid_argument("coordinate " + std::to_string(c) + " not reduced");
    idx = idx * q_ + c;
  }
  return idx;
}

void PointCodec::decode_into(PointIndex idx, std::span<Scalar> out) const {
  for (int axis = d_ - 1; axis >= 0; --axis) {
    out[axis] = static_cast<Scalar>(idx % q_);
    idx /= q_;
  }
}

Vector PointCodec::decode(PointIndex idx) const {
  Vector v(d_);
  decode_into(idx, v);
  return v;
}

Scalar norm(const PrimeField& fld, std::span<const Scalar> v) {
  Scalar acc = 0;
  for (Scalar c : v) acc = fld.add(acc, fld.square(fld.reduce(c)));
  return acc;
}

std::vector<Scalar> norm_table(const PrimeField& fld, int d) {
  const std::uint64_t n = space_size(fld, d);
  const Scalar q = fld.q();
  // norms of F_q^d from norms of F_q^(d-1): idx = prefix * q + last
  std::vector<Scalar> table{0};
  table.reserve(n);
  for (int axis = 0; axis < d; ++axis) {
    std::vector<Scalar> next(table.size() * q);
    for (std::size_t p = 0; p < table.size(); ++p) {
      for (Scalar c = 0; c < q; ++c) next[p * q + c] = fld.add(table[p], fld.square(c));
    }
    table = std::move(next);
  }
  return table;
}

Sphere enumerate_sphere(const PrimeField& fld, int d, Scalar t) {
  if (t >= fld.q()) throw std::invalid_argument("radius must be a reduced residue");
  const PointCodec codec(fld, d);
  const auto norms = norm_table(fld, d);
  Sphere sphere{fld, d, t, {}};
  for (PointIndex i = 0; i < norms.size(); ++i) {
    if (norms[i] == t) sphere.points.push_back(codec.decode(i));
  }
  return sphere;
}

std::vector<std::uint64_t> norm_fiber_sizes(const PrimeField& fld, int d) {
  std::vector<std::uint64_t> counts(fld.q(), 0);
  for (Scalar n : norm_table(fld, d)) ++counts[n];
  return counts;
}

PointSet::PointSet(PrimeField fld, int dims, std::vector<PointIndex> members)
    : field_(std::move(fld)), dims_(dims), members_(std::move(members)) {
  const std::uint64_t n = space_size(field_, dims_);
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("point set contains duplicate points");
  }
  if (!members_.empty() && members_.back() >= n) {
    throw std::invalid_argument("point index out of range for F_q^d");
  }
}

namespace {
std::vector<PointIndex> encode_all(const PrimeField& fld, int dims,
                                   const std::vector<Vector>& points) {
  const PointCodec codec(fld, dims);
  std::vector<PointIndex> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(codec.encode(p));
  return out;
}
}  // namespace

PointSet::PointSet(const PrimeField& fld, int dims, const std::vector<Vector>& points)
    : PointSet(fld, dims, encode_all(fld, dims, points)) {}

PointSet PointSet::full(const PrimeField& fld, int dims) {
  std::vector<PointIndex> all(space_size(fld, dims));
  for (PointIndex i = 0; i < all.size(); ++i) all[i] = i;
  return PointSet(fld, dims, std::move(all));
}

bool PointSet::contains(PointIndex idx) const {
  return std::binary_search(members_.begin(), members_.end(), idx);
}

std::vector<Vector> PointSet::points() const {
  const PointCodec c = codec();
  std::vector<Vector> out;
  out.reserve(members_.size());
  for (PointIndex i : members_) out.push_back(c.decode(i));
  return out;
}

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw std::runtime_error("point-set line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    parse_error(line, "expected a nonnegative integer, got '" + tok + "'");
  }
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    parse_error(line, "integer out of range: '" + tok + "'");
  }
}

}  // namespace

ParsedPointSet parse_point_set(std::istream& in) {
  ParsedPointSet out;
  bool have_header = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!have_header) {
      std::istringstream tokens(line);
      std::string tok;
      bool have_q = false, have_dims = false;
      while (tokens >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) parse_error(lineno, "malformed header token '" + tok + "'");
        const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
        if (key == "q") {
          out.header.q = parse_uint(value, lineno);
          have_q = true;
        } else if (key == "dims") {
          out.header.dims = static_cast<int>(parse_uint(value, lineno));
          have_dims = true;
        } else if (key == "split") {
          const auto comma = value.find(',');
          if (comma == std::string::npos) parse_error(lineno, "split must be '<k>,<l>'");
          out.header.split = std::pair{static_cast<int>(parse_uint(value.substr(0, comma), lineno)),
                                       static_cast<int>(parse_uint(value.substr(comma + 1), lineno))};
        } else {
          parse_error(lineno, "unknown header key '" + key + "'");
        }
      }
      if (!have_q || !have_dims) parse_error(lineno, "header must define q=<q> and dims=<d>");
      if (out.header.split && out.header.split->first + out.header.split->second != out.header.dims) {
        parse_error(lineno, "split does not add up to dims");
      }
      have_header = true;
      continue;
    }
    Vector v;
    std::istringstream coords(line);
    std::string tok;
    while (std::getline(coords, tok, ',')) {
      const std::uint64_t c = parse_uint(strip(tok), lineno);
      if (c >= out.header.q) parse_error(lineno, "coordinate " + tok + " is not reduced mod q");
      v.push_back(static_cast<Scalar>(c));
    }
    if (static_cast<int>(v.size()) != out.header.dims) {
      parse_error(lineno, "expected " + std::to_string(out.header.dims) + " coordinates, got " +
                              std::to_string(v.size()));
    }
    out.points.push_back(std::move(v));
  }
  if (!have_header) throw std::runtime_error("point-set file has no header line");
  return out;
}

void write_point_set(std::ostream& out, const PointSet& set,
                     std::optional<std::pair<int, int>> split) {
  out << "q=" << set.field().q() << " dims=" << set.dims();
  if (split) out << " split=" << split->first << ',' << split->second;
  out << '\n';
  const PointCodec codec = set.codec();
  Vector v(set.dims());
  for (PointIndex idx : set.members()) {
    codec.decode_into(idx, v);
    for (int i = 0; i < set.dims(); ++i) out << (i ? "," : "") << v[i];
    out << '\n';
  }
}

}  // namespace ffdist
