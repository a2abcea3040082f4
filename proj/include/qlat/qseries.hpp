#pragma once

// QSeries<C>: a truncated formal q-expansion with coefficients in C,
// stored sparsely (absent exponent = zero coefficient).  Arithmetic on two
// series truncates to the smaller order.

#include <map>
#include <stdexcept>
#include <utility>

#include "qlat/quadvalue.hpp"

namespace qlat {

namespace detail {
inline bool coeff_is_zero(const Int& c) { return c == 0; }
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const QuadValue& c) { return c.is_zero(); }
inline bool coeff_is_zero(double c) { return c == 0.0; }
}  // namespace detail

template <typename C>
class QSeries {
 public:
  using TermMap = std::map<long long, C>;

  explicit QSeries(long long order) : order_(order) {
    if (order < 0) throw std::domain_error("QSeries: negative order");
  }

  long long order() const { return order_; }
  const TermMap& terms() const { return terms_; }

  C at(long long m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C{} : it->second;
  }

  void set(long long m, C value) {
    if (m < 0 || m > order_)
      throw std::out_of_range("QSeries::set: exponent outside [0, order]");
    if (detail::coeff_is_zero(value)) {
      terms_.erase(m);
    } else {
      terms_[m] = std::move(value);
    }
  }

  void add(long long m, const C& value) { set(m, at(m) + value); }

  QSeries operator+(const QSeries& o) const { return combine(o, +1); }
  QSeries operator-(const QSeries& o) const { return combine(o, -1); }

  template <typename S>
  QSeries scaled(const S& factor) const {
    QSeries out(order_);
    for (const auto& [m, c] : terms_) out.set(m, c * factor);
    return out;
  }

  bool operator==(const QSeries& o) const {
    return order_ == o.order_ && terms_ == o.terms_;
  }

  // First exponent with nonzero coefficient, or order+1 if none.
  long long leading_exponent() const {
    return terms_.empty() ? order_ + 1 : terms_.begin()->first;
  }

 private:
  QSeries combine(const QSeries& o, int sign) const {
    QSeries out(std::min(order_, o.order_));
    for (const auto& [m, c] : terms_) {
      if (m <= out.order_) out.set(m, c);
    }
    for (const auto& [m, c] : o.terms_) {
      if (m > out.order_) continue;
      if (sign > 0) {
        out.set(m, out.at(m) + c);
      } else {
        out.set(m, out.at(m) - c);
      }
    }
    return out;
  }

  long long order_;
  TermMap terms_;
};

}  // namespace qlat
