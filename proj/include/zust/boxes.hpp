#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zust {

/// Closed axis-aligned rectangle prod_i [a_i, b_i] in R^d.
class Rectangle {
 public:
  Rectangle() = default;
  Rectangle(std::vector<double> lo, std::vector<double> hi)
      : a_(std::move(lo)), b_(std::move(hi)) {
    if (a_.size() != b_.size() || a_.empty())
      throw std::invalid_argument("Rectangle: corner dimensions mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!(a_[i] <= b_[i]))
        throw std::invalid_argument("Rectangle: requires a_i <= b_i");
  }

  static Rectangle unit_cube(int d) {
    return Rectangle(std::vector<double>(d, 0.0), std::vector<double>(d, 1.0));
  }

  int dim() const { return static_cast<int>(a_.size()); }
  double lo(int axis) const { return a_[axis]; }
  double hi(int axis) const { return b_[axis]; }
  std::span<const double> lower() const { return a_; }
  std::span<const double> upper() const { return b_; }
  double edge(int axis) const { return b_[axis] - a_[axis]; }

  /// delta(R) = max_i (b_i - a_i).
  double delta() const {
    double m = 0.0;
    for (int i = 0; i < dim(); ++i) m = std::max(m, edge(i));
    return m;
  }

  double volume() const {
    double v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= edge(i);
    return v;
  }

  bool degenerate() const {
    for (int i = 0; i < dim(); ++i)
      if (edge(i) == 0.0) return true;
    return false;
  }

  bool contains(std::span<const double> x) const {
    for (int i = 0; i < dim(); ++i)
      if (x[i] < a_[i] || x[i] > b_[i]) return false;
    return true;
  }

  Rectangle fattened(double r) const {
    std::vector<double> lo(a_), hi(b_);
    for (auto& v : lo) v -= r;
    for (auto& v : hi) v += r;
    return Rectangle(std::move(lo), std::move(hi));
  }

  /// Rectangle with coordinate `axis` removed.
  Rectangle drop_axis(int axis) const {
    std::vector<double> lo, hi;
    for (int i = 0; i < dim(); ++i) {
      if (i == axis) continue;
      lo.push_back(a_[i]);
      hi.push_back(b_[i]);
    }
    return Rectangle(std::move(lo), std::move(hi));
  }

  bool operator==(const Rectangle& o) const = default;

 private:
  std::vector<double> a_, b_;
};

/// Closed dyadic cube prod_i [k_i/2^j, (k_i+1)/2^j] on the unit lattice.
/// Corner coordinates are exact dyadic rationals for j <= 52.
struct DyadicCube {
  int level = 0;
  std::vector<std::int64_t> k;

  int dim() const { return static_cast<int>(k.size()); }

  Rectangle rect() const {
    const double h = std::ldexp(1.0, -level);
    std::vector<double> lo(k.size()), hi(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      lo[i] = static_cast<double>(k[i]) * h;
      hi[i] = static_cast<double>(k[i] + 1) * h;
    }
    return Rectangle(std::move(lo), std::move(hi));
  }

  bool operator==(const DyadicCube& o) const = default;
  auto operator<=>(const DyadicCube& o) const = default;
};

/// Oriented (d-1)-face of a rectangle: coordinate `axis` pinned to the
/// lower or upper endpoint, with the Stokes orientation sign.
struct Face {
  int axis = 0;
  bool upper_side = false;
  int sign = 0;           // +(-1)^axis on the upper side, -(-1)^axis on the lower
  double pin_value = 0.0;
  Rectangle parent;

  /// The face as a (d-1)-rectangle (axis dropped).
  Rectangle reduced() const { return parent.drop_axis(axis); }
};

/// 2^{d*depth} congruent cells tiling R, in row-major order of the
/// per-axis cell index (axis 0 slowest).  Exact for dyadic corners.
inline std::vector<Rectangle> subdivide(const Rectangle& R, int depth) {
  if (depth < 0) throw std::invalid_argument("subdivide: depth must be >= 0");
  const int d = R.dim();
  const std::int64_t per_axis = std::int64_t(1) << depth;
  std::int64_t total = 1;
  for (int i = 0; i < d; ++i) total *= per_axis;
  std::vector<Rectangle> cells;
  cells.reserve(static_cast<std::size_t>(total));
  const double inv = std::ldexp(1.0, -depth);
  std::vector<std::int64_t> m(d, 0);
  for (std::int64_t c = 0; c < total; ++c) {
    std::vector<double> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
      const double t0 = static_cast<double>(m[i]) * inv;
      const double t1 = static_cast<double>(m[i] + 1) * inv;
      lo[i] = R.lo(i) + R.edge(i) * t0;
      hi[i] = R.lo(i) + R.edge(i) * t1;
    }
    cells.emplace_back(std::move(lo), std::move(hi));
    for (int i = d - 1; i >= 0; --i) {
      if (++m[i] < per_axis) break;
      m[i] = 0;
    }
  }
  return cells;
}

/// The 2d oriented faces of a non-degenerate rectangle, ordered by
/// (axis, lower-then-upper).
inline std::vector<Face> faces(const Rectangle& R) {
  const int d = R.dim();
  for (int i = 0; i < d; ++i)
    if (R.edge(i) == 0.0)
      throw std::invalid_argument("degenerate rectangle has no oriented boundary");
  std::vector<Face> out;
  out.reserve(static_cast<std::size_t>(2 * d));
  for (int axis = 0; axis < d; ++axis) {
    const int parity = (axis % 2 == 0) ? 1 : -1;
    out.push_back(Face{axis, false, -parity, R.lo(axis), R});
    out.push_back(Face{axis, true, parity, R.hi(axis), R});
  }
  return out;
}

/// All unit-lattice dyadic cubes of side 2^{-j} whose closed cube
/// intersects the closed rectangle `bounding`.
class CubeRange {
 public:
  CubeRange(int j, const Rectangle& bounding) : level_(j) {
    if (j < 0) throw std::invalid_argument("cubes_at_level: j must be >= 0");
    const int d = bounding.dim();
    const double s = std::ldexp(1.0, j);
    kmin_.resize(d);
    count_.resize(d);
    for (int i = 0; i < d; ++i) {
      // closed intersection: k <= b*2^j and k+1 >= a*2^j
      const std::int64_t lo =
          static_cast<std::int64_t>(std::ceil(bounding.lo(i) * s - 1.0));
      const std::int64_t hi =
          static_cast<std::int64_t>(std::floor(bounding.hi(i) * s));
      kmin_[i] = lo;
      count_[i] = hi - lo + 1;
    }
  }

  std::int64_t count() const {
    std::int64_t c = 1;
    for (auto n : count_) c *= n;
    return c;
  }

  class iterator {
   public:
    iterator(const CubeRange* r, std::int64_t pos) : r_(r), pos_(pos) {}
    DyadicCube operator*() const {
      const int d = static_cast<int>(r_->kmin_.size());
      DyadicCube c;
      c.level = r_->level_;
      c.k.resize(d);
      std::int64_t rem = pos_;
      for (int i = d - 1; i >= 0; --i) {
        c.k[i] = r_->kmin_[i] + rem % r_->count_[i];
        rem /= r_->count_[i];
      }
      return c;
    }
    iterator& operator++() {
      ++pos_;
      return *this;
    }
    bool operator!=(const iterator& o) const { return pos_ != o.pos_; }

   private:
    const CubeRange* r_;
    std::int64_t pos_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count()); }

 private:
  int level_;
  std::vector<std::int64_t> kmin_;
  std::vector<std::int64_t> count_;
};

inline CubeRange cubes_at_level(int j, const Rectangle& bounding) {
  return CubeRange(j, bounding);
}

}  // namespace zust
