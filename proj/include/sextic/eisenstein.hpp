#ifndef SEXTIC_EISENSTEIN_HPP
#define SEXTIC_EISENSTEIN_HPP

#include <string>
#include <string_view>

#include "sextic/rational.hpp"

namespace sextic {

/// Element re + om*w of Q(w), where w is a primitive cube root of unity
/// (w^2 + w + 1 = 0).
class EisensteinRational {
 public:
  EisensteinRational() = default;
  EisensteinRational(int v) : re_(v) {}              // NOLINT(google-explicit-constructor)
  EisensteinRational(long v) : re_(v) {}             // NOLINT(google-explicit-constructor)
  EisensteinRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  EisensteinRational(Rational re, Rational om) : re_(std::move(re)), om_(std::move(om)) {}

  static EisensteinRational omega() { return {Rational(0), Rational(1)}; }
  /// Accepts "a", "b*w", "a+b*w", "a-b*w", "w", "-w" with rational a, b.
  static EisensteinRational parse(std::string_view text);

  [[nodiscard]] const Rational& re() const { return re_; }
  [[nodiscard]] const Rational& om() const { return om_; }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && om_.is_zero(); }
  [[nodiscard]] bool is_rational() const { return om_.is_zero(); }
  /// Galois conjugate (w -> w^2).
  [[nodiscard]] EisensteinRational conj() const { return {re_ - om_, -om_}; }
  /// Field norm a^2 - a b + b^2.
  [[nodiscard]] Rational norm() const { return re_ * re_ - re_ * om_ + om_ * om_; }
  [[nodiscard]] std::string str() const;

  EisensteinRational& operator+=(const EisensteinRational& o) {
    re_ += o.re_;
    om_ += o.om_;
    return *this;
  }
  EisensteinRational& operator-=(const EisensteinRational& o) {
    re_ -= o.re_;
    om_ -= o.om_;
    return *this;
  }
  EisensteinRational& operator*=(const EisensteinRational& o);
  EisensteinRational& operator/=(const EisensteinRational& o);

  friend EisensteinRational operator+(EisensteinRational a, const EisensteinRational& b) { return a += b; }
  friend EisensteinRational operator-(EisensteinRational a, const EisensteinRational& b) { return a -= b; }
  friend EisensteinRational operator*(EisensteinRational a, const EisensteinRational& b) { return a *= b; }
  friend EisensteinRational operator/(EisensteinRational a, const EisensteinRational& b) { return a /= b; }
  friend EisensteinRational operator-(const EisensteinRational& a) { return {-a.re_, -a.om_}; }
  friend bool operator==(const EisensteinRational& a, const EisensteinRational& b) = default;

 private:
  Rational re_;
  Rational om_;
};

EisensteinRational pow(const EisensteinRational& x, unsigned e);

inline bool is_zero(const EisensteinRational& x) { return x.is_zero(); }
inline std::string to_string(const EisensteinRational& x) { return x.str(); }

}  // namespace sextic

#endif  // SEXTIC_EISENSTEIN_HPP
