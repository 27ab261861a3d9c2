#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace safeball {

/// Extended-real scalar: a finite double or +/-infinity. NaN is rejected at
/// construction so downstream comparisons stay well-defined.
class ExtReal {
 public:
  ExtReal() = default;
  ExtReal(double v) : v_(v) {
    if (std::isnan(v)) throw std::invalid_argument("ExtReal: NaN");
  }

  static ExtReal infinity() {
    return ExtReal(std::numeric_limits<double>::infinity());
  }
  static ExtReal neg_infinity() {
    return ExtReal(-std::numeric_limits<double>::infinity());
  }

  bool finite() const { return std::isfinite(v_); }
  bool is_pos_inf() const { return std::isinf(v_) && v_ > 0; }
  bool is_neg_inf() const { return std::isinf(v_) && v_ < 0; }

  /// Raw value; infinite results propagate as IEEE infinities.
  double value() const { return v_; }

  friend ExtReal operator+(ExtReal a, ExtReal b) {
    if ((a.is_pos_inf() && b.is_neg_inf()) ||
        (a.is_neg_inf() && b.is_pos_inf()))
      throw std::domain_error("ExtReal: +inf + -inf");
    return ExtReal(a.v_ + b.v_);
  }
  friend ExtReal operator-(ExtReal a, ExtReal b) {
    if ((a.is_pos_inf() && b.is_pos_inf()) ||
        (a.is_neg_inf() && b.is_neg_inf()))
      throw std::domain_error("ExtReal: inf - inf");
    return ExtReal(a.v_ - b.v_);
  }
  friend ExtReal operator-(ExtReal a) { return ExtReal(-a.v_); }

  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

 private:
  double v_ = 0.0;
};

}  // namespace safeball
