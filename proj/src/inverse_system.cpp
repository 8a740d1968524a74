#include "macaulay/inverse_system.hpp"

#include <algorithm>

#include "macaulay/catalecticant.hpp"
#include "macaulay/detail/graded_span.hpp"
#include "macaulay/errors.hpp"
#include "macaulay/matrix.hpp"

namespace macaulay {

int AlgebraPresentation::socle_degree() const { return detail::max_degree(generators); }

std::vector<int> AlgebraPresentation::degrees() const {
  std::vector<int> out;
  for (const auto& g : generators) out.push_back(g.degree());
  return out;
}

std::vector<DualPolynomial> AlgebraPresentation::leading_forms() const {
  std::vector<DualPolynomial> out;
  for (const auto& g : generators) out.push_back(leading_form(g));
  return out;
}

void macaulay_validate(const AlgebraPresentation& pres) {
  if (pres.num_vars == 0) throw InvalidArgument("presentation needs at least one variable");
  if (pres.generators.empty()) throw InvalidArgument("presentation needs at least one generator");
  for (const auto& g : pres.generators)
    if (g.num_vars() != pres.num_vars) throw InvalidArgument("generator has the wrong number of variables");
  const int s = std::max(pres.socle_degree(), 0);
  std::vector<RationalVector> columns;
  for (const auto& g : pres.generators) {
    RationalVector v(truncated_dimension(pres.num_vars, s));
    const DualPolynomial top = leading_form(g);
    for (const auto& [e, c] : top.terms()) v[position_in_basis(e)] = c;
    columns.push_back(std::move(v));
  }
  auto relations = kernel_basis(RationalMatrix::from_columns(columns, truncated_dimension(pres.num_vars, s)));
  if (!relations.empty()) throw DependentLeadingForms("leading forms of the generators are linearly dependent", relations.front());
}

namespace {

// Matrix of f -> (f o G_r)_r on the given monomials (columns), output
// coordinates stacked per generator in a degree-descending layout.
RationalMatrix contraction_matrix(const AlgebraPresentation& pres, const std::vector<Exponent>& domain) {
  std::vector<detail::DescendingLayout> layouts;
  std::size_t rows = 0;
  for (const auto& g : pres.generators) {
    layouts.emplace_back(pres.num_vars, std::max(g.degree(), 0));
    rows += layouts.back().size();
  }
  RationalMatrix m(rows, domain.size());
#pragma omp parallel for schedule(dynamic, 8) if (domain.size() > 32)
  for (std::size_t c = 0; c < domain.size(); ++c) {
    std::size_t offset = 0;
    for (std::size_t r = 0; r < pres.generators.size(); ++r) {
      const DualPolynomial image = contract(domain[c], pres.generators[r]);
      for (const auto& [e, v] : image.terms()) m(offset + layouts[r].column(e), c) = v;
      offset += layouts[r].size();
    }
  }
  return m;
}

std::vector<JetPolynomial> kernel_as_jets(const AlgebraPresentation& pres, const std::vector<Exponent>& domain,
                                          int truncation) {
  std::vector<JetPolynomial> out;
  for (const auto& v : kernel_basis(contraction_matrix(pres, domain))) {
    JetPolynomial f(pres.num_vars, truncation);
    for (std::size_t i = 0; i < v.size(); ++i) f.add_term(domain[i], v[i]);
    out.push_back(std::move(f));
  }
  return out;
}

// Image of A: one row per monomial x^c, |c| <= s, holding (x^c o G_r)_r.
// Columns put every non-constant coordinate first and the t constants last.
struct FaithfulImage {
  RationalMatrix rows;
  std::vector<int> row_degree;
  std::size_t constant_columns = 0;
};

FaithfulImage faithful_image(const AlgebraPresentation& pres) {
  const int s = pres.socle_degree();
  const auto domain = monomial_basis(pres.num_vars, s);
  RationalMatrix by_column = contraction_matrix(pres, domain);
  // Each generator block ends in its constant coordinate; move those last.
  std::vector<std::size_t> order, constants;
  std::size_t offset = 0;
  for (const auto& g : pres.generators) {
    std::size_t size = truncated_dimension(pres.num_vars, std::max(g.degree(), 0));
    for (std::size_t i = 0; i + 1 < size; ++i) order.push_back(offset + i);
    constants.push_back(offset + size - 1);
    offset += size;
  }
  order.insert(order.end(), constants.begin(), constants.end());
  FaithfulImage img;
  img.rows = RationalMatrix(domain.size(), order.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    for (std::size_t k = 0; k < order.size(); ++k) img.rows(c, k) = by_column(order[k], c);
    img.row_degree.push_back(domain[c].degree());
  }
  img.constant_columns = constants.size();
  return img;
}

RationalMatrix rows_from_degree(const FaithfulImage& img, int degree, bool drop_constants) {
  std::size_t first = 0;
  while (first < img.row_degree.size() && img.row_degree[first] < degree) ++first;
  std::size_t cols = img.rows.cols() - (drop_constants ? img.constant_columns : 0);
  return img.rows.block(first, 0, img.rows.rows() - first, cols);
}

}  // namespace

std::vector<JetPolynomial> annihilator_slice(const AlgebraPresentation& pres, int d) {
  const int s = pres.socle_degree();
  if (d < 0 || d > s + 1) throw InvalidArgument("annihilator_slice degree outside 0..s+1");
  return kernel_as_jets(pres, monomials_of_degree(pres.num_vars, d), s + 1);
}

std::vector<JetPolynomial> annihilator_upto(const AlgebraPresentation& pres, int d) {
  const int s = pres.socle_degree();
  if (d < 1 || d > s + 1) throw InvalidArgument("annihilator_upto degree outside 1..s+1");
  auto domain = monomial_basis(pres.num_vars, d);
  domain.erase(domain.begin());  // f(0) = 0
  return kernel_as_jets(pres, domain, s + 1);
}

HilbertFunction hilbert_function(const AlgebraPresentation& pres) {
  macaulay_validate(pres);
  const int s = pres.socle_degree();
  auto spanning = detail::module_spanning_set(pres.generators);
  return HilbertFunction{detail::filtered_echelon(spanning, pres.num_vars, s).pivots_per_degree()};
}

SocleType socle_type(const AlgebraPresentation& pres) {
  macaulay_validate(pres);
  const int s = pres.socle_degree();
  const FaithfulImage img = faithful_image(pres);
  // dim(Soc ∩ m^i) = rank(image of m^i) - rank(its non-constant projection).
  std::vector<std::size_t> socle_in(static_cast<std::size_t>(s + 2), 0);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i <= s; ++i)
    socle_in[static_cast<std::size_t>(i)] = rank(rows_from_degree(img, i, false)) - rank(rows_from_degree(img, i, true));
  SocleType e;
  for (int i = 0; i <= s; ++i)
    e.values.push_back(socle_in[static_cast<std::size_t>(i)] - socle_in[static_cast<std::size_t>(i + 1)]);
  return e;
}

bool is_compressed(const AlgebraPresentation& pres) {
  const int s = pres.socle_degree();
  return hilbert_function(pres) == compressed_hf(pres.num_vars, s, socle_type(pres));
}

std::vector<std::string> presentation_warnings(const AlgebraPresentation& pres) {
  std::vector<std::string> out;
  const SocleType e = socle_type(pres);
  if (e.type() != pres.generators.size())
    out.push_back("socle dimension " + std::to_string(e.type()) + " differs from the generator count " +
                  std::to_string(pres.generators.size()) + "; the generators are not a minimal system");
  auto degrees = pres.degrees();
  if (std::adjacent_find(degrees.begin(), degrees.end(), std::not_equal_to<>()) != degrees.end())
    out.push_back("generators have unequal degrees");
  return out;
}

namespace detail {

HilbertFunction hilbert_function_by_filtration(const AlgebraPresentation& pres) {
  macaulay_validate(pres);
  const int s = pres.socle_degree();
  const FaithfulImage img = faithful_image(pres);
  std::vector<std::size_t> dims(static_cast<std::size_t>(s + 2), 0);
  for (int i = 0; i <= s; ++i) dims[static_cast<std::size_t>(i)] = rank(rows_from_degree(img, i, false));
  HilbertFunction h;
  for (int i = 0; i <= s; ++i) h.values.push_back(dims[static_cast<std::size_t>(i)] - dims[static_cast<std::size_t>(i + 1)]);
  return h;
}

}  // namespace detail

}  // namespace macaulay
