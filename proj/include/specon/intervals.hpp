#pragma once

// Finite unions of intervals, their gap-vector parameterization, and
// nonnegative step functions.

#include <cstddef>
#include <span>
#include <vector>

namespace specon {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Tuple (a_1, ..., a_{2n-1}): odd positions are interval lengths, even
/// positions are hole widths. Zero entries are allowed (closed domain).
class GapVector {
 public:
  GapVector() = default;
  /// Throws std::invalid_argument on even length, negative or non-finite
  /// entries, or zero total length.
  explicit GapVector(std::vector<double> gaps);

  std::span<const double> values() const { return gaps_; }
  const std::vector<double>& vec() const { return gaps_; }
  std::size_t size() const { return gaps_.size(); }
  double operator[](std::size_t i) const { return gaps_[i]; }
  /// Number of intervals n.
  std::size_t intervals() const { return (gaps_.size() + 1) / 2; }
  /// Total length T = a_1 + a_3 + ... + a_{2n-1}.
  double total_length() const;
  /// True when every entry is strictly positive.
  bool interior() const;
  /// s * gaps, s > 0.
  GapVector scaled(double s) const;

  friend bool operator==(const GapVector&, const GapVector&) = default;

 private:
  std::vector<double> gaps_;
};

/// J = union of [x_{2j-1}, x_{2j}]. Endpoints are kept exactly as given
/// (absolute positions matter for F_A); call canonical() to merge
/// touching components and drop empty ones.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  /// Throws std::invalid_argument unless the count is even and nonzero, the
  /// endpoints are finite and nondecreasing, and the measure is positive.
  explicit IntervalUnion(std::vector<double> endpoints);
  static IntervalUnion from_components(std::span<const Interval> parts);

  std::span<const double> endpoints() const { return endpoints_; }
  std::size_t components() const { return endpoints_.size() / 2; }
  Interval component(std::size_t k) const { return {endpoints_[2 * k], endpoints_[2 * k + 1]}; }
  std::vector<Interval> parts() const;
  double measure() const;
  bool is_canonical() const;
  IntervalUnion canonical() const;
  IntervalUnion translated(double shift) const;
  bool contains(double x) const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<double> endpoints_;
};

/// Two endpoints merge when closer than this relative threshold.
double merge_tolerance(double x);

/// Prefix sums x_1 = 0, x_{j+1} = x_j + a_j, without canonicalization.
std::vector<double> endpoints_from_gaps(const GapVector& g);
/// Canonical union generated by the gaps, anchored at 0.
IntervalUnion from_gaps(const GapVector& g);
/// Consecutive endpoint differences; translation is dropped.
GapVector to_gaps(const IntervalUnion& a);

/// [0, |A|], the support of the decreasing rearrangement of chi_A.
IntervalUnion rearrange(const IntervalUnion& a);
/// s A. Throws std::invalid_argument for s <= 0.
IntervalUnion dilate(const IntervalUnion& a, double s);

struct StepPiece {
  Interval interval;
  double value = 0.0;
  friend bool operator==(const StepPiece&, const StepPiece&) = default;
};

/// Nonnegative piecewise-constant function with finitely many pieces.
class StepFunction {
 public:
  StepFunction() = default;
  /// Throws std::invalid_argument for negative values, reversed intervals,
  /// or overlapping pieces. Pieces are stored sorted by position.
  explicit StepFunction(std::vector<StepPiece> pieces);
  static StepFunction indicator(const IntervalUnion& a, double value = 1.0);

  std::span<const StepPiece> pieces() const { return pieces_; }
  double support_measure() const;
  double operator()(double x) const;
  StepFunction scaled(double c) const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<StepPiece> pieces_;
};

/// Decreasing rearrangement: value levels sorted descending and stacked from
/// 0, each level keeping its total measure. Zero-valued pieces are dropped.
StepFunction rearrange_step(const StepFunction& f);

}  // namespace specon
