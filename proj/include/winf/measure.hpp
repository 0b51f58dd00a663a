#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "winf/errors.hpp"
#include "winf/interval_union.hpp"

namespace winf {

struct MeasurePiece {
  double a = 0.0;
  double b = 0.0;
  double density = 0.0;

  double mass() const { return density * (b - a); }
};

// Atomless, compactly supported measure with piecewise-constant density.
// Probability measures are built with from_pieces (total mass 1 enforced);
// restrictions carry mass <= 1 and share all operations, with the quantile
// parameterized by the fraction t in [0,1] of the total mass.
class Measure1D {
 public:
  Measure1D() = default;

  // Validated constructor for probability measures.
  static Measure1D from_pieces(std::vector<MeasurePiece> pieces) {
    Measure1D m = sub_measure(std::move(pieces));
    if (std::fabs(m.mass_ - 1.0) > kStructuralTol) {
      std::ostringstream os;
      os << "total mass is " << m.mass_ << ", expected 1";
      throw Error(ErrorKind::MassNotOne, os.str());
    }
    return m;
  }

  // Same structural validation, any finite nonnegative mass. Zero-density
  // pieces are pruned.
  static Measure1D sub_measure(std::vector<MeasurePiece> pieces) {
    std::sort(pieces.begin(), pieces.end(),
              [](const MeasurePiece& x, const MeasurePiece& y) {
                return x.a < y.a;
              });
    Measure1D m;
    for (const MeasurePiece& p : pieces) {
      if (!(p.b > p.a)) {
        throw Error(ErrorKind::DomainError, "piece with b <= a");
      }
      if (p.density < 0.0) {
        throw Error(ErrorKind::NegativeDensity, "piece with density < 0");
      }
      if (p.density == 0.0) continue;
      if (!m.pieces_.empty() && p.a < m.pieces_.back().b - kStructuralTol) {
        throw Error(ErrorKind::OverlappingPieces, "pieces overlap");
      }
      m.pieces_.push_back(p);
    }
    m.cum_.resize(m.pieces_.size());
    double total = 0.0;
    for (std::size_t i = 0; i < m.pieces_.size(); ++i) {
      total += m.pieces_[i].mass();
      m.cum_[i] = total;
    }
    m.mass_ = total;
    return m;
  }

  const std::vector<MeasurePiece>& pieces() const { return pieces_; }
  double mass() const { return mass_; }
  bool is_zero() const { return pieces_.empty(); }

  double support_min() const { return pieces_.front().a; }
  double support_max() const { return pieces_.back().b; }

  IntervalUnion support() const {
    std::vector<Interval> ivs;
    ivs.reserve(pieces_.size());
    for (const MeasurePiece& p : pieces_) ivs.push_back({p.a, p.b});
    return IntervalUnion::from_intervals(std::move(ivs));
  }

  // F(x) = m((-inf, x]); continuous and nondecreasing.
  double cdf(double x) const {
    if (pieces_.empty() || x <= pieces_.front().a) return 0.0;
    auto it = std::upper_bound(
        pieces_.begin(), pieces_.end(), x,
        [](double v, const MeasurePiece& p) { return v < p.a; });
    std::size_t i = static_cast<std::size_t>(it - pieces_.begin()) - 1;
    double before = i == 0 ? 0.0 : cum_[i - 1];
    const MeasurePiece& p = pieces_[i];
    if (x >= p.b) return cum_[i];
    return before + p.density * (x - p.a);
  }

  // Quantile at mass fraction t in [0, 1]. At a CDF plateau (support gap)
  // the left edge of the next positive-density piece is returned, so the
  // function is the right-continuous inverse of the CDF.
  double quantile(double t) const {
    if (t < 0.0 || t > 1.0) {
      throw Error(ErrorKind::DomainError, "quantile parameter outside [0,1]");
    }
    if (pieces_.empty()) {
      throw Error(ErrorKind::DomainError, "quantile of the zero measure");
    }
    double target = t * mass_;
    if (target >= mass_) return pieces_.back().b;
    auto it = std::upper_bound(cum_.begin(), cum_.end(), target);
    std::size_t i = static_cast<std::size_t>(it - cum_.begin());
    if (i >= pieces_.size()) return pieces_.back().b;
    const MeasurePiece& p = pieces_[i];
    double before = i == 0 ? 0.0 : cum_[i - 1];
    double x = p.a + (target - before) / p.density;
    return std::clamp(x, p.a, p.b);
  }

  // Restriction to the closed interval [lo, hi] (boundary is null).
  Measure1D restrict_to(double lo, double hi) const {
    std::vector<MeasurePiece> clipped;
    for (const MeasurePiece& p : pieces_) {
      double a = std::max(p.a, lo);
      double b = std::min(p.b, hi);
      if (b > a) clipped.push_back({a, b, p.density});
    }
    return sub_measure(std::move(clipped));
  }

  Measure1D restrict_to(const IntervalUnion& set) const {
    std::vector<MeasurePiece> clipped;
    for (const Interval& iv : set.components()) {
      for (const MeasurePiece& p : pieces_) {
        double a = std::max(p.a, iv.lo);
        double b = std::min(p.b, iv.hi);
        if (b > a) clipped.push_back({a, b, p.density});
      }
    }
    return sub_measure(std::move(clipped));
  }

  double mass_of(const IntervalUnion& set) const {
    double s = 0.0;
    for (const Interval& iv : set.components()) s += cdf(iv.hi) - cdf(iv.lo);
    return s;
  }

  // Pushforward under x -> -x.
  Measure1D reflected() const {
    std::vector<MeasurePiece> out;
    out.reserve(pieces_.size());
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
      out.push_back({-it->b, -it->a, it->density});
    }
    return sub_measure(std::move(out));
  }

  std::vector<double> piece_endpoints() const {
    std::vector<double> xs;
    xs.reserve(2 * pieces_.size());
    for (const MeasurePiece& p : pieces_) {
      xs.push_back(p.a);
      xs.push_back(p.b);
    }
    return xs;
  }

  // Cumulative masses at piece right edges; the t-breakpoints of the
  // quantile function.
  const std::vector<double>& cumulative_masses() const { return cum_; }

 private:
  std::vector<MeasurePiece> pieces_;
  std::vector<double> cum_;
  double mass_ = 0.0;
};

}  // namespace winf
