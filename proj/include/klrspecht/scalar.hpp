#pragma once
// Exact scalar types: rationals (GMP) and a prime field whose modulus is a
// thread-local context, in the style of NTL's zz_p.

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace klr {

/// Which field a computation runs over. prime == 0 means the rationals.
struct FieldSpec {
  unsigned prime = 0;

  bool is_rational() const { return prime == 0; }
  std::string name() const;
  /// Accepts "Q" or "F<p>" with p prime.
  static FieldSpec parse(std::string_view text);
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(unsigned p);

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  Rational inverse() const;

  /// "a/b", or "a" for integers.
  std::string to_string() const;
  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

/// Element of F_p. The modulus comes from the innermost active Context on the
/// calling thread; constructing or combining elements without one throws.
class ModP {
 public:
  class Context {
   public:
    explicit Context(unsigned p);
    ~Context();
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

   private:
    unsigned saved_;
  };

  static unsigned modulus();

  ModP() = default;
  ModP(long v);

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  ModP operator-() const;

  bool operator==(const ModP& o) const { return v_ == o.v_; }
  bool is_zero() const { return v_ == 0; }
  ModP inverse() const;

  /// Least nonnegative representative, e.g. "3".
  std::string to_string() const { return std::to_string(v_); }
  /// Representative with the modulus, e.g. "3 mod 5".
  std::string to_exact_string() const;
  std::uint32_t value() const { return v_; }

 private:
  std::uint32_t v_ = 0;
};

/// Exact textual form used in model dumps: "a/b" or "k mod p".
inline std::string exact_string(const Rational& x) { return x.to_string(); }
inline std::string exact_string(const ModP& x) { return x.to_exact_string(); }

}  // namespace klr
