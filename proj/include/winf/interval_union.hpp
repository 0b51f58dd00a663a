#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "winf/errors.hpp"

namespace winf {

// Closed interval [lo, hi]; lo == hi encodes a singleton point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool is_point(double tol = kStructuralTol) const { return hi - lo <= tol; }
  bool contains(double x, double tol = 0.0) const {
    return x >= lo - tol && x <= hi + tol;
  }
};

// Finite disjoint union of closed intervals and singleton points, kept
// sorted with strictly positive gaps between consecutive components.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  // Sorts and merges components whose gap is <= merge_tol.
  static IntervalUnion from_intervals(std::vector<Interval> intervals,
                                      double merge_tol = kStructuralTol) {
    for (const Interval& iv : intervals) {
      if (iv.hi < iv.lo) {
        throw Error(ErrorKind::DomainError, "interval with hi < lo");
      }
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) {
                return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
              });
    IntervalUnion out;
    for (const Interval& iv : intervals) {
      if (!out.comps_.empty() && iv.lo <= out.comps_.back().hi + merge_tol) {
        out.comps_.back().hi = std::max(out.comps_.back().hi, iv.hi);
      } else {
        out.comps_.push_back(iv);
      }
    }
    return out;
  }

  const std::vector<Interval>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }
  std::size_t size() const { return comps_.size(); }

  double min() const { return comps_.front().lo; }
  double max() const { return comps_.back().hi; }

  double total_length() const {
    double s = 0.0;
    for (const Interval& iv : comps_) s += iv.length();
    return s;
  }

  bool contains(double x, double tol = 0.0) const {
    auto it = std::upper_bound(
        comps_.begin(), comps_.end(), x,
        [](double v, const Interval& iv) { return v < iv.lo; });
    if (it != comps_.begin() && std::prev(it)->contains(x, tol)) return true;
    return it != comps_.end() && it->contains(x, tol);
  }

  // Distance from x to the set (0 if inside).
  double distance_to(double x) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Interval& iv : comps_) {
      if (x < iv.lo) {
        best = std::min(best, iv.lo - x);
      } else if (x > iv.hi) {
        best = std::min(best, x - iv.hi);
      } else {
        return 0.0;
      }
    }
    return best;
  }

  IntervalUnion translated(double c) const {
    IntervalUnion out = *this;
    for (Interval& iv : out.comps_) {
      iv.lo += c;
      iv.hi += c;
    }
    return out;
  }

  // Image under x -> -x.
  IntervalUnion reflected() const {
    IntervalUnion out;
    out.comps_.reserve(comps_.size());
    for (auto it = comps_.rbegin(); it != comps_.rend(); ++it) {
      out.comps_.push_back({-it->hi, -it->lo});
    }
    return out;
  }

  static IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b,
                             double merge_tol = kStructuralTol) {
    std::vector<Interval> all = a.comps_;
    all.insert(all.end(), b.comps_.begin(), b.comps_.end());
    return from_intervals(std::move(all), merge_tol);
  }

  static IntervalUnion intersect(const IntervalUnion& a,
                                 const IntervalUnion& b) {
    IntervalUnion out;
    std::size_t i = 0, j = 0;
    while (i < a.comps_.size() && j < b.comps_.size()) {
      const Interval& p = a.comps_[i];
      const Interval& q = b.comps_[j];
      double lo = std::max(p.lo, q.lo);
      double hi = std::min(p.hi, q.hi);
      if (lo <= hi) out.comps_.push_back({lo, hi});
      if (p.hi < q.hi) {
        ++i;
      } else {
        ++j;
      }
    }
    return out;
  }

  // Maximal open intervals of (lo, hi) not covered by the set. Components
  // of zero length (touching the cut points within tol) are dropped.
  std::vector<Interval> gaps_within(double lo, double hi,
                                    double tol = kStructuralTol) const {
    std::vector<Interval> gaps;
    double cursor = lo;
    for (const Interval& iv : comps_) {
      if (iv.hi <= lo) continue;
      if (iv.lo >= hi) break;
      if (iv.lo > cursor + tol) gaps.push_back({cursor, std::min(iv.lo, hi)});
      cursor = std::max(cursor, iv.hi);
    }
    if (cursor < hi - tol) gaps.push_back({cursor, hi});
    return gaps;
  }

  bool approx_equal(const IntervalUnion& other,
                    double tol = kStructuralTol) const {
    if (comps_.size() != other.comps_.size()) return false;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (std::fabs(comps_[i].lo - other.comps_[i].lo) > tol) return false;
      if (std::fabs(comps_[i].hi - other.comps_[i].hi) > tol) return false;
    }
    return true;
  }

 private:
  std::vector<Interval> comps_;
};

}  // namespace winf
