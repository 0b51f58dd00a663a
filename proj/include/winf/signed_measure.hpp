#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "winf/errors.hpp"
#include "winf/interval_union.hpp"

namespace winf {

struct SignedAtom {
  double position = 0.0;
  double weight = 0.0;
};

struct SignedSegment {
  double lo = 0.0;
  double hi = 0.0;
  double density = 0.0;

  double mass() const { return density * (hi - lo); }
};

// Finitely many atoms plus uniform-density segments, both with signed
// weights. Atoms at (numerically) equal positions are summed; zero entries
// are pruned.
class SignedMeasure1D {
 public:
  SignedMeasure1D() = default;

  static SignedMeasure1D from_parts(std::vector<SignedAtom> atoms,
                                    std::vector<SignedSegment> segments) {
    std::sort(atoms.begin(), atoms.end(),
              [](const SignedAtom& a, const SignedAtom& b) {
                return a.position < b.position;
              });
    std::sort(segments.begin(), segments.end(),
              [](const SignedSegment& a, const SignedSegment& b) {
                return a.lo < b.lo;
              });
    SignedMeasure1D m;
    for (const SignedAtom& a : atoms) {
      if (!m.atoms_.empty() &&
          a.position - m.atoms_.back().position <= kStructuralTol) {
        m.atoms_.back().weight += a.weight;
      } else {
        m.atoms_.push_back(a);
      }
    }
    std::erase_if(m.atoms_,
                  [](const SignedAtom& a) { return a.weight == 0.0; });
    for (const SignedSegment& s : segments) {
      if (!(s.hi > s.lo)) {
        throw Error(ErrorKind::DomainError, "segment with hi <= lo");
      }
      if (!m.segments_.empty() && s.lo < m.segments_.back().hi - kStructuralTol) {
        throw Error(ErrorKind::OverlappingPieces, "segments overlap");
      }
      if (s.density != 0.0) m.segments_.push_back(s);
    }
    return m;
  }

  const std::vector<SignedAtom>& atoms() const { return atoms_; }
  const std::vector<SignedSegment>& segments() const { return segments_; }
  bool is_zero() const { return atoms_.empty() && segments_.empty(); }

  double total_mass() const {
    double s = 0.0;
    for (const SignedAtom& a : atoms_) s += a.weight;
    for (const SignedSegment& seg : segments_) s += seg.mass();
    return s;
  }

  double total_variation() const {
    double s = 0.0;
    for (const SignedAtom& a : atoms_) s += std::fabs(a.weight);
    for (const SignedSegment& seg : segments_) s += std::fabs(seg.mass());
    return s;
  }

  // m((-inf, x]), including the atom at x.
  double cumulative(double x) const {
    double s = 0.0;
    for (const SignedAtom& a : atoms_) {
      if (a.position <= x) s += a.weight;
    }
    for (const SignedSegment& seg : segments_) {
      if (x <= seg.lo) continue;
      s += seg.density * (std::min(x, seg.hi) - seg.lo);
    }
    return s;
  }

  double atom_at(double x, double tol = kStructuralTol) const {
    for (const SignedAtom& a : atoms_) {
      if (std::fabs(a.position - x) <= tol) return a.weight;
    }
    return 0.0;
  }

  SignedMeasure1D scaled(double c) const {
    SignedMeasure1D m = *this;
    for (SignedAtom& a : m.atoms_) a.weight *= c;
    for (SignedSegment& s : m.segments_) s.density *= c;
    if (c == 0.0) {
      m.atoms_.clear();
      m.segments_.clear();
    }
    return m;
  }

  SignedMeasure1D negated() const { return scaled(-1.0); }

  static SignedMeasure1D subtract(const SignedMeasure1D& a,
                                  const SignedMeasure1D& b) {
    std::vector<SignedAtom> atoms = a.atoms_;
    for (const SignedAtom& x : b.atoms_) {
      atoms.push_back({x.position, -x.weight});
    }
    std::vector<SignedSegment> segments = a.segments_;
    for (const SignedSegment& s : b.segments_) {
      segments.push_back({s.lo, s.hi, -s.density});
    }
    return from_parts(std::move(atoms), std::move(segments));
  }

  // Closure of the union of segments with |density| > tol and atoms with
  // |weight| > tol, filtered by sign: +1 keeps positive parts, -1 negative,
  // 0 keeps everything.
  IntervalUnion support(int sign = 0, double tol = kStructuralTol) const {
    std::vector<Interval> ivs;
    for (const SignedSegment& s : segments_) {
      if (keep(s.density, sign, tol)) ivs.push_back({s.lo, s.hi});
    }
    for (const SignedAtom& a : atoms_) {
      if (keep(a.weight, sign, tol)) ivs.push_back({a.position, a.position});
    }
    return IntervalUnion::from_intervals(std::move(ivs));
  }

  IntervalUnion support_positive(double tol = kStructuralTol) const {
    return support(+1, tol);
  }
  IntervalUnion support_negative(double tol = kStructuralTol) const {
    return support(-1, tol);
  }

 private:
  static bool keep(double v, int sign, double tol) {
    if (sign > 0) return v > tol;
    if (sign < 0) return v < -tol;
    return std::fabs(v) > tol;
  }

  std::vector<SignedAtom> atoms_;
  std::vector<SignedSegment> segments_;
};

}  // namespace winf
