#pragma once

// QuadValue: exact elements r + s*sqrt(D) of the real quadratic field
// Q(sqrt(D)), D a fixed positive non-square radicand.  This is the
// coefficient ring of the weighted theta series.

#include <sstream>
#include <stdexcept>
#include <string>

#include "qlat/arith.hpp"

namespace qlat {

class QuadValue {
 public:
  QuadValue() : r_(0), s_(0), rad_(0) {}
  QuadValue(Rat r, Rat s, long long radicand)
      : r_(std::move(r)), s_(std::move(s)), rad_(radicand) {
    if (rad_ < 0) throw std::domain_error("QuadValue: negative radicand");
    r_.canonicalize();
    s_.canonicalize();
    if (s_ == 0) rad_ = 0;
  }
  explicit QuadValue(Rat r) : r_(std::move(r)), s_(0), rad_(0) { r_.canonicalize(); }
  QuadValue(long long r) : r_(to_int(r)), s_(0), rad_(0) {}  // NOLINT(runtime/explicit)

  const Rat& rational_part() const { return r_; }
  const Rat& surd_part() const { return s_; }
  long long radicand() const { return rad_; }
  bool is_zero() const { return r_ == 0 && s_ == 0; }
  bool is_rational() const { return s_ == 0; }

  QuadValue operator-() const { return QuadValue(-r_, -s_, rad_); }

  QuadValue& operator+=(const QuadValue& o) {
    long long d = joint_radicand(o);
    r_ += o.r_;
    s_ += o.s_;
    rad_ = (s_ == 0) ? 0 : d;
    return *this;
  }
  QuadValue& operator-=(const QuadValue& o) { return *this += -o; }

  QuadValue operator+(const QuadValue& o) const { QuadValue t(*this); return t += o; }
  QuadValue operator-(const QuadValue& o) const { QuadValue t(*this); return t -= o; }

  QuadValue operator*(const QuadValue& o) const {
    long long d = joint_radicand(o);
    Rat nr = r_ * o.r_ + s_ * o.s_ * to_rat(d);
    Rat ns = r_ * o.s_ + s_ * o.r_;
    return QuadValue(nr, ns, d);
  }

  QuadValue operator*(const Rat& q) const { return QuadValue(r_ * q, s_ * q, rad_); }

  bool operator==(const QuadValue& o) const {
    if (r_ != o.r_ || s_ != o.s_) return false;
    return s_ == 0 || rad_ == o.rad_;
  }
  bool operator!=(const QuadValue& o) const { return !(*this == o); }

  double to_double() const {
    double v = r_.get_d();
    if (s_ != 0) v += s_.get_d() * std::sqrt(static_cast<double>(rad_));
    return v;
  }

  // "r", "s*sqrt(D)" or "r + s*sqrt(D)", rationals in lowest terms.
  std::string str() const {
    std::ostringstream os;
    if (s_ == 0) {
      os << r_;
    } else if (r_ == 0) {
      surd_str(os);
    } else {
      os << r_ << (s_ > 0 ? " + " : " - ");
      Rat a = abs(s_);
      if (a != 1) os << a << "*";
      os << "sqrt(" << rad_ << ")";
      return os.str();
    }
    return os.str();
  }

 private:
  void surd_str(std::ostringstream& os) const {
    if (s_ == -1) {
      os << "-";
    } else if (s_ != 1) {
      os << s_ << "*";
    }
    os << "sqrt(" << rad_ << ")";
  }

  long long joint_radicand(const QuadValue& o) const {
    if (rad_ != 0 && o.rad_ != 0 && rad_ != o.rad_)
      throw std::domain_error("QuadValue: mixed radicands");
    return rad_ != 0 ? rad_ : o.rad_;
  }

  Rat r_, s_;
  long long rad_;
};

inline QuadValue operator*(const Rat& q, const QuadValue& v) { return v * q; }

}  // namespace qlat
