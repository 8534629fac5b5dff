#include "padlog/formal_series.hpp"

#include <algorithm>

#include "padlog/error.hpp"

namespace padlog {

FormalSeries::FormalSeries(std::vector<Rational> coeffs, std::size_t degree) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(degree + 1);
  for (auto& c : coeffs_) c.canonicalize();
}

FormalSeries FormalSeries::constant(const Rational& c, std::size_t degree) {
  FormalSeries f(degree);
  f[0] = c;
  return f;
}

FormalSeries FormalSeries::variable(std::size_t degree) {
  FormalSeries f(degree);
  if (degree >= 1) f[1] = 1;
  return f;
}

bool FormalSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

FormalSeries FormalSeries::truncated(std::size_t degree) const {
  return FormalSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min(coeffs_.size(), degree + 1)), degree);
}

std::string FormalSeries::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += coeffs_[i].get_str();
  }
  return out + "]";
}

FormalSeries operator+(const FormalSeries& f, const FormalSeries& g) {
  FormalSeries r(std::min(f.degree(), g.degree()));
  for (std::size_t i = 0; i <= r.degree(); ++i) r[i] = f[i] + g[i];
  return r;
}

FormalSeries operator-(const FormalSeries& f, const FormalSeries& g) {
  FormalSeries r(std::min(f.degree(), g.degree()));
  for (std::size_t i = 0; i <= r.degree(); ++i) r[i] = f[i] - g[i];
  return r;
}

FormalSeries operator-(const FormalSeries& f) {
  FormalSeries r(f.degree());
  for (std::size_t i = 0; i <= r.degree(); ++i) r[i] = -f[i];
  return r;
}

FormalSeries operator*(const FormalSeries& f, const FormalSeries& g) {
  const std::size_t d = std::min(f.degree(), g.degree());
  FormalSeries r(d);
  for (std::size_t i = 0; i <= d; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j <= d; ++j) r[i + j] += f[i] * g[j];
  }
  return r;
}

FormalSeries operator*(const Rational& c, const FormalSeries& f) {
  FormalSeries r(f.degree());
  for (std::size_t i = 0; i <= r.degree(); ++i) r[i] = c * f[i];
  return r;
}

FormalSeries series_exp(const FormalSeries& g) {
  if (g[0] != 0) fail(ErrorCode::NonzeroConstantTerm, "exp needs a series with zero constant term");
  const std::size_t d = g.degree();
  FormalSeries sum = FormalSeries::constant(1, d);
  FormalSeries power = FormalSeries::constant(1, d);
  Rational factorial = 1;
  for (std::size_t n = 1; n <= d; ++n) {
    power = power * g;
    factorial *= static_cast<unsigned long>(n);
    sum = sum + Rational(Rational(1) / factorial) * power;
  }
  return sum;
}

FormalSeries series_log(const FormalSeries& u) {
  if (u[0] != 1) fail(ErrorCode::WrongConstantTerm, "log needs a series with constant term 1");
  const std::size_t d = u.degree();
  const FormalSeries w = u - FormalSeries::constant(1, d);
  FormalSeries sum(d);
  FormalSeries power = FormalSeries::constant(1, d);
  for (std::size_t n = 1; n <= d; ++n) {
    power = power * w;
    Rational c(n % 2 == 1 ? 1 : -1);
    c /= static_cast<unsigned long>(n);
    sum = sum + c * power;
  }
  return sum;
}

FormalSeries derive(const FormalSeries& f) {
  if (f.degree() == 0) return FormalSeries(0);
  FormalSeries r(f.degree() - 1);
  for (std::size_t i = 1; i <= f.degree(); ++i) r[i - 1] = f[i] * static_cast<unsigned long>(i);
  return r;
}

FormalSeries integrate(const FormalSeries& f) {
  FormalSeries r(f.degree() + 1);
  for (std::size_t i = 0; i <= f.degree(); ++i) r[i + 1] = f[i] / static_cast<unsigned long>(i + 1);
  return r;
}

FormalSeries compose(const FormalSeries& f, const FormalSeries& g) {
  if (g[0] != 0) fail(ErrorCode::NonzeroConstantTerm, "the inner series must have zero constant term");
  const std::size_t d = std::min(f.degree(), g.degree());
  const FormalSeries inner = g.truncated(d);
  FormalSeries r = FormalSeries::constant(f[d], d);
  for (std::size_t i = d; i-- > 0;) r = r * inner + FormalSeries::constant(f[i], d);
  return r;
}

}  // namespace padlog
