#include "macaulay/exponent.hpp"

#include <algorithm>
#include <numeric>

#include "macaulay/errors.hpp"

namespace macaulay {

Exponent Exponent::unit(std::size_t num_vars, std::size_t var) {
  Exponent e(num_vars);
  e.parts_.at(var) = 1;
  return e;
}

int Exponent::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Exponent::is_valid() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int a) { return a >= 0; });
}

bool Exponent::divides(const Exponent& other) const {
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i] > other.parts_[i]) return false;
  return true;
}

Exponent& Exponent::operator+=(const Exponent& other) {
  if (other.num_vars() != num_vars()) throw InvalidArgument("exponent variable-count mismatch");
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] += other.parts_[i];
  return *this;
}

Exponent& Exponent::operator-=(const Exponent& other) {
  if (other.num_vars() != num_vars()) throw InvalidArgument("exponent variable-count mismatch");
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] -= other.parts_[i];
  return *this;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.parts_ <=> b.parts_;
}

Integer factorial(const Exponent& a) {
  Integer out = 1;
  for (int k : a.parts()) out *= factorial(static_cast<unsigned>(k));
  return out;
}

std::size_t forms_dimension(std::size_t n, int d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(n - 1 + static_cast<std::size_t>(d), n - 1);
}

std::size_t truncated_dimension(std::size_t n, int s) {
  if (s < 0) return 0;
  return binomial(n + static_cast<std::size_t>(s), static_cast<std::size_t>(s));
}

namespace {

void enumerate(std::size_t var, int remaining, Exponent& current, std::vector<Exponent>& out) {
  const std::size_t n = current.num_vars();
  if (var + 1 == n) {
    current[var] = remaining;
    out.push_back(current);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    current[var] = a;
    enumerate(var + 1, remaining - a, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponent> out;
  if (d < 0 || n == 0) return out;
  out.reserve(forms_dimension(n, d));
  Exponent current(n);
  enumerate(0, d, current, out);
  return out;
}

std::vector<Exponent> monomial_basis(std::size_t n, int max_degree) {
  std::vector<Exponent> out;
  out.reserve(truncated_dimension(n, max_degree));
  for (int d = 0; d <= max_degree; ++d) {
    auto block = monomials_of_degree(n, d);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::size_t position_in_degree(const Exponent& e) {
  // Count exponents of the same degree that precede e: at each slot k, those
  // sharing e's prefix but holding a larger value in slot k.
  const std::size_t n = e.num_vars();
  int remaining = e.degree();
  std::size_t pos = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (int v = e[k] + 1; v <= remaining; ++v) pos += forms_dimension(n - k - 1, remaining - v);
    remaining -= e[k];
  }
  return pos;
}

std::size_t position_in_basis(const Exponent& e) {
  return truncated_dimension(e.num_vars(), e.degree() - 1) + position_in_degree(e);
}

}  // namespace macaulay
