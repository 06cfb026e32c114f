#pragma once

#include <cmath>
#include <initializer_list>
#include <limits>
#include <vector>

#include "mixnorm/errors.hpp"

namespace mixnorm {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// 1/p with the convention 1/inf = 0.
inline double reciprocal(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

// n-tuple of exponents, each in (0, inf].
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<double> entries) : entries_(std::move(entries)) { validate(); }
  ExponentVector(std::initializer_list<double> entries) : entries_(entries) { validate(); }

  static ExponentVector constant(int n, double p) {
    return ExponentVector(std::vector<double>(static_cast<std::size_t>(n), p));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
  const std::vector<double>& entries() const { return entries_; }

  double reciprocal_sum() const {
    double s = 0.0;
    for (double p : entries_) s += reciprocal(p);
    return s;
  }

  double min_entry() const {
    double m = kInf;
    for (double p : entries_) m = std::min(m, p);
    return m;
  }

  double max_entry() const {
    double m = 0.0;
    for (double p : entries_) m = std::max(m, p);
    return m;
  }

  bool all_finite() const {
    for (double p : entries_) {
      if (std::isinf(p)) return false;
    }
    return true;
  }

  bool all_ge(double c) const {
    for (double p : entries_) {
      if (p < c) return false;
    }
    return true;
  }

  bool all_gt(double c) const {
    for (double p : entries_) {
      if (p <= c) return false;
    }
    return true;
  }

  // Entrywise p_j / r.
  ExponentVector divided_by(double r) const {
    if (!(r > 0.0)) throw admissibility_error("exponent divisor must be positive");
    std::vector<double> out;
    out.reserve(entries_.size());
    for (double p : entries_) out.push_back(std::isinf(p) ? kInf : p / r);
    return ExponentVector(std::move(out));
  }

  // Entrywise r * p_j.
  ExponentVector scaled(double r) const {
    if (!(r > 0.0)) throw admissibility_error("exponent scale must be positive");
    std::vector<double> out;
    out.reserve(entries_.size());
    for (double p : entries_) out.push_back(std::isinf(p) ? kInf : p * r);
    return ExponentVector(std::move(out));
  }

  bool operator==(const ExponentVector& o) const { return entries_ == o.entries_; }

 private:
  void validate() const {
    if (entries_.empty()) throw admissibility_error("exponent vector must be nonempty");
    for (double p : entries_) {
      if (std::isnan(p) || p <= 0.0) throw admissibility_error("exponents must lie in (0, inf]");
    }
  }

  std::vector<double> entries_;
};

// Entrywise conjugate p_j/(p_j - 1) with 1 -> inf and inf -> 1.
// Requires every entry >= 1.
inline double conjugate(double p) {
  if (p < 1.0) throw admissibility_error("conjugate exponent undefined for p < 1");
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return kInf;
  return p / (p - 1.0);
}

inline ExponentVector conjugate(const ExponentVector& p) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (double e : p.entries()) out.push_back(conjugate(e));
  return ExponentVector(std::move(out));
}

}  // namespace mixnorm
