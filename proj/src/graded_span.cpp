#include "macaulay/detail/graded_span.hpp"

#include "macaulay/errors.hpp"

namespace macaulay::detail {

DescendingLayout::DescendingLayout(std::size_t num_vars, int top_degree) : num_vars_(num_vars), top_(top_degree) {
  for (int d = top_degree; d >= 0; --d) {
    auto block = monomials_of_degree(num_vars, d);
    exponents_.insert(exponents_.end(), block.begin(), block.end());
  }
}

std::size_t DescendingLayout::column(const Exponent& e) const {
  const int d = e.degree();
  if (d > top_ || e.num_vars() != num_vars_) throw InvalidArgument("monomial outside layout");
  return truncated_dimension(num_vars_, top_) - truncated_dimension(num_vars_, d) + position_in_degree(e);
}

RationalVector DescendingLayout::coordinates(const DualPolynomial& g) const {
  RationalVector v(size());
  for (const auto& [e, c] : g.terms()) v[column(e)] = c;
  return v;
}

DualPolynomial DescendingLayout::polynomial(std::span<const Rational> coords) const {
  DualPolynomial g(num_vars_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) g.add_term(exponents_[i], coords[i]);
  return g;
}

RationalMatrix DescendingLayout::rows_of(std::span<const DualPolynomial> polys) const {
  RationalMatrix m(polys.size(), size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [e, c] : polys[i].terms()) m(i, column(e)) = c;
  return m;
}

std::vector<DualPolynomial> module_spanning_set(std::span<const DualPolynomial> gs, bool with_generators) {
  std::vector<DualPolynomial> out;
  for (const auto& g : gs) {
    if (g.is_zero()) continue;
    for (const auto& c : monomial_basis(g.num_vars(), g.degree())) {
      if (!with_generators && c.degree() == 0) continue;
      DualPolynomial d = contract(c, g);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

int max_degree(std::span<const DualPolynomial> gs) {
  int top = -1;
  for (const auto& g : gs) top = std::max(top, g.degree());
  return top;
}

std::vector<std::size_t> FilteredEchelon::pivots_per_degree() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(layout.top_degree() + 1), 0);
  for (auto c : echelon.pivot_columns) ++counts[static_cast<std::size_t>(layout.degree_of(c))];
  return counts;
}

std::vector<DualPolynomial> FilteredEchelon::leading_forms(int degree) const {
  std::vector<DualPolynomial> out;
  for (std::size_t k = 0; k < echelon.rank(); ++k) {
    if (layout.degree_of(echelon.pivot_columns[k]) != degree) continue;
    out.push_back(homogeneous_component(layout.polynomial(echelon.reduced.row(k)), degree));
  }
  return out;
}

FilteredEchelon filtered_echelon(std::span<const DualPolynomial> spanning, std::size_t num_vars, int top_degree) {
  DescendingLayout layout(num_vars, top_degree);
  RowEchelon e = reduced_row_echelon(layout.rows_of(spanning));
  return FilteredEchelon{std::move(layout), std::move(e)};
}

}  // namespace macaulay::detail
