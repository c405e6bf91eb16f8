#pragma once

#include <gmpxx.h>

#include <string>

#include "taured/algebra.hpp"

namespace taured {

enum class SeriesKind { A, D };

SeriesKind parse_series_kind(const std::string& s);
char series_letter(SeriesKind k);

/// KA_n / rad^2 with A_n : n -> n-1 -> ... -> 1, or KD_n / rad^2 with
/// D_n : n -> ... -> 3 and 3 -> 1, 3 -> 2. Arrows leaving k along the spine
/// are named a<k>; the two arrows at 3 in type D are b1 and b2.
/// Throws Error(BadIndex) for n < 1 (A) or n < 3 (D).
AlgebraPtr series_algebra(SeriesKind kind, int n, Field field = Field::rational());

/// a + b sqrt(5) with rational a, b.
class QuadInt {
public:
  QuadInt() = default;
  QuadInt(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {}

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  QuadInt conjugate() const { return {a_, -b_}; }
  /// Division by sqrt(5).
  QuadInt over_sqrt5() const { return {b_, a_ / 5}; }
  QuadInt pow(unsigned e) const;

  friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    return {x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend QuadInt operator*(const QuadInt& x, const mpq_class& c) { return {x.a_ * c, x.b_ * c}; }
  friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;

private:
  mpq_class a_{0};
  mpq_class b_{0};
};

/// The Fibonacci-type closed form for |tau-tilt| of the series algebra,
/// evaluated exactly. Throws Error(NonIntegerResult) if the value is not a
/// rational integer, Error(BadIndex) outside the formula's range.
mpz_class closed_form(SeriesKind kind, int n);

}  // namespace taured
