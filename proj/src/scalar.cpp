#include "klrspecht/scalar.hpp"

#include <charconv>

namespace klr {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string FieldSpec::name() const { return prime == 0 ? "Q" : "F" + std::to_string(prime); }

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q") return FieldSpec{0};
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    unsigned p = 0;
    auto body = text.substr(1);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size() && is_prime(p) && p < 65536)
      return FieldSpec{p};
  }
  throw std::invalid_argument("bad field '" + std::string(text) + "' (expected Q or F<p>, p a prime below 65536)");
}

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {
thread_local unsigned current_modulus = 0;

unsigned require_modulus() {
  if (current_modulus == 0) throw std::logic_error("ModP used without an active modulus context");
  return current_modulus;
}
}  // namespace

ModP::Context::Context(unsigned p) : saved_(current_modulus) {
  if (!is_prime(p) || p >= 65536) throw std::invalid_argument("modulus must be a prime below 65536");
  current_modulus = p;
}

ModP::Context::~Context() { current_modulus = saved_; }

unsigned ModP::modulus() { return current_modulus; }

ModP::ModP(long v) {
  long p = require_modulus();
  long r = v % p;
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

ModP& ModP::operator+=(const ModP& o) {
  std::uint32_t p = require_modulus();
  v_ += o.v_;
  if (v_ >= p) v_ -= p;
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  std::uint32_t p = require_modulus();
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_;
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  std::uint64_t p = require_modulus();
  v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % p);
  return *this;
}

ModP ModP::operator-() const {
  ModP r;
  if (v_ != 0) r.v_ = require_modulus() - v_;
  return r;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero");
  long p = require_modulus();
  long a = v_, b = p, x0 = 1, x1 = 0;
  while (b != 0) {
    long q = a / b;
    long t = a - q * b; a = b; b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
  }
  return ModP(x0);
}

std::string ModP::to_exact_string() const {
  return std::to_string(v_) + " mod " + std::to_string(current_modulus);
}

}  // namespace klr
