#include "specon/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace specon {

// ---------------------------------------------------------------- GapVector

GapVector::GapVector(std::vector<double> gaps) : gaps_(std::move(gaps)) {
  if (gaps_.empty() || gaps_.size() % 2 == 0) {
    throw std::invalid_argument("GapVector: length must be odd (2n-1)");
  }
  for (double a : gaps_) {
    if (!std::isfinite(a) || a < 0.0) {
      throw std::invalid_argument("GapVector: entries must be finite and non-negative");
    }
  }
  if (!(total_length() > 0.0)) {
    throw std::invalid_argument("GapVector: total length must be positive");
  }
}

double GapVector::total_length() const {
  double t = 0.0;
  for (std::size_t i = 0; i < gaps_.size(); i += 2) t += gaps_[i];
  return t;
}

bool GapVector::interior() const {
  return std::all_of(gaps_.begin(), gaps_.end(), [](double a) { return a > 0.0; });
}

GapVector GapVector::scaled(double s) const {
  if (!(s > 0.0)) throw std::invalid_argument("GapVector::scaled: factor must be positive");
  std::vector<double> out(gaps_);
  for (double& a : out) a *= s;
  return GapVector(std::move(out));
}

// ------------------------------------------------------------ IntervalUnion

double merge_tolerance(double x) { return 1e-12 * std::max(1.0, std::abs(x)); }

IntervalUnion::IntervalUnion(std::vector<double> endpoints) : endpoints_(std::move(endpoints)) {
  if (endpoints_.empty() || endpoints_.size() % 2 != 0) {
    throw std::invalid_argument("IntervalUnion: endpoint count must be even and nonzero");
  }
  for (std::size_t i = 0; i < endpoints_.size(); ++i) {
    if (!std::isfinite(endpoints_[i])) throw std::invalid_argument("IntervalUnion: non-finite endpoint");
    if (i > 0 && endpoints_[i] < endpoints_[i - 1]) {
      throw std::invalid_argument("IntervalUnion: endpoints must be nondecreasing");
    }
  }
  if (!(measure() > 0.0)) throw std::invalid_argument("IntervalUnion: measure must be positive");
}

IntervalUnion IntervalUnion::from_components(std::span<const Interval> parts) {
  std::vector<double> e;
  e.reserve(parts.size() * 2);
  for (const auto& p : parts) {
    e.push_back(p.lo);
    e.push_back(p.hi);
  }
  return IntervalUnion(std::move(e));
}

std::vector<Interval> IntervalUnion::parts() const {
  std::vector<Interval> out;
  out.reserve(components());
  for (std::size_t k = 0; k < components(); ++k) out.push_back(component(k));
  return out;
}

double IntervalUnion::measure() const {
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < endpoints_.size(); k += 2) m += endpoints_[k + 1] - endpoints_[k];
  return m;
}

bool IntervalUnion::is_canonical() const { return canonical().endpoints_ == endpoints_; }

IntervalUnion IntervalUnion::canonical() const {
  std::vector<double> out;
  out.reserve(endpoints_.size());
  for (std::size_t k = 0; k < components(); ++k) {
    const double lo = endpoints_[2 * k];
    const double hi = endpoints_[2 * k + 1];
    if (hi - lo < merge_tolerance(hi)) continue;
    if (!out.empty() && lo - out.back() < merge_tolerance(lo)) {
      out.back() = hi;
    } else {
      out.push_back(lo);
      out.push_back(hi);
    }
  }
  if (out.empty()) throw std::invalid_argument("IntervalUnion::canonical: nothing left after merging");
  IntervalUnion u;
  u.endpoints_ = std::move(out);
  return u;
}

IntervalUnion IntervalUnion::translated(double shift) const {
  std::vector<double> e(endpoints_);
  for (double& x : e) x += shift;
  return IntervalUnion(std::move(e));
}

bool IntervalUnion::contains(double x) const {
  for (std::size_t k = 0; k < components(); ++k) {
    if (x >= endpoints_[2 * k] && x <= endpoints_[2 * k + 1]) return true;
  }
  return false;
}

std::vector<double> endpoints_from_gaps(const GapVector& g) {
  std::vector<double> x(g.size() + 1, 0.0);
  for (std::size_t j = 0; j < g.size(); ++j) x[j + 1] = x[j] + g[j];
  return x;
}

IntervalUnion from_gaps(const GapVector& g) { return IntervalUnion(endpoints_from_gaps(g)).canonical(); }

GapVector to_gaps(const IntervalUnion& a) {
  const auto e = a.endpoints();
  std::vector<double> gaps(e.size() - 1);
  for (std::size_t j = 0; j + 1 < e.size(); ++j) gaps[j] = e[j + 1] - e[j];
  return GapVector(std::move(gaps));
}

IntervalUnion rearrange(const IntervalUnion& a) { return IntervalUnion({0.0, a.measure()}); }

IntervalUnion dilate(const IntervalUnion& a, double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("dilate: factor must be positive");
  std::vector<double> e(a.endpoints().begin(), a.endpoints().end());
  for (double& x : e) x *= s;
  return IntervalUnion(std::move(e));
}

// ------------------------------------------------------------- StepFunction

StepFunction::StepFunction(std::vector<StepPiece> pieces) : pieces_(std::move(pieces)) {
  for (const auto& p : pieces_) {
    if (!std::isfinite(p.value) || p.value < 0.0) {
      throw std::invalid_argument("StepFunction: values must be finite and non-negative");
    }
    if (!std::isfinite(p.interval.lo) || !std::isfinite(p.interval.hi) || p.interval.hi < p.interval.lo) {
      throw std::invalid_argument("StepFunction: invalid piece interval");
    }
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const StepPiece& a, const StepPiece& b) { return a.interval.lo < b.interval.lo; });
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].interval.lo < pieces_[i - 1].interval.hi - merge_tolerance(pieces_[i].interval.lo)) {
      throw std::invalid_argument("StepFunction: pieces overlap");
    }
  }
}

StepFunction StepFunction::indicator(const IntervalUnion& a, double value) {
  std::vector<StepPiece> pieces;
  for (const auto& part : a.parts()) pieces.push_back({part, value});
  return StepFunction(std::move(pieces));
}

double StepFunction::support_measure() const {
  double m = 0.0;
  for (const auto& p : pieces_) {
    if (p.value > 0.0) m += p.interval.length();
  }
  return m;
}

double StepFunction::operator()(double x) const {
  for (const auto& p : pieces_) {
    if (x > p.interval.lo && x < p.interval.hi) return p.value;
  }
  return 0.0;
}

StepFunction StepFunction::scaled(double c) const {
  std::vector<StepPiece> out(pieces_);
  for (auto& p : out) p.value *= c;
  return StepFunction(std::move(out));
}

StepFunction rearrange_step(const StepFunction& f) {
  std::map<double, double, std::greater<>> level_measure;
  for (const auto& p : f.pieces()) {
    if (p.value > 0.0 && p.interval.length() > 0.0) level_measure[p.value] += p.interval.length();
  }
  std::vector<StepPiece> out;
  double x = 0.0;
  for (const auto& [value, m] : level_measure) {
    out.push_back({{x, x + m}, value});
    x += m;
  }
  return StepFunction(std::move(out));
}

}  // namespace specon
