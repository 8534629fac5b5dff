#pragma once

// Truncated power series over Q with exact rational coefficients c_0..c_D.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace padlog {

using Rational = mpq_class;

class FormalSeries {
 public:
  /// The zero series of degree bound D.
  explicit FormalSeries(std::size_t degree) : coeffs_(degree + 1) {}
  /// Missing coefficients are zero; extra ones are dropped.
  FormalSeries(std::vector<Rational> coeffs, std::size_t degree);

  static FormalSeries constant(const Rational& c, std::size_t degree);
  /// The series x.
  static FormalSeries variable(std::size_t degree);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  FormalSeries truncated(std::size_t degree) const;
  std::string to_string() const;

  friend bool operator==(const FormalSeries& f, const FormalSeries& g) { return f.coeffs_ == g.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

// Binary operations truncate to the smaller degree bound.
FormalSeries operator+(const FormalSeries& f, const FormalSeries& g);
FormalSeries operator-(const FormalSeries& f, const FormalSeries& g);
FormalSeries operator-(const FormalSeries& f);
FormalSeries operator*(const FormalSeries& f, const FormalSeries& g);
FormalSeries operator*(const Rational& c, const FormalSeries& f);

/// Throws NonzeroConstantTerm when g(0) != 0.
FormalSeries series_exp(const FormalSeries& g);
/// Throws WrongConstantTerm when u(0) != 1.
FormalSeries series_log(const FormalSeries& u);

/// Term-by-term derivative; the degree bound drops by one.
FormalSeries derive(const FormalSeries& f);
/// Antiderivative with zero constant term; the degree bound rises by one.
FormalSeries integrate(const FormalSeries& f);

/// f(g(x)). Throws NonzeroConstantTerm when g(0) != 0.
FormalSeries compose(const FormalSeries& f, const FormalSeries& g);

}  // namespace padlog
