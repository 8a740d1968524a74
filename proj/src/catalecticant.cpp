#include "macaulay/catalecticant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "macaulay/errors.hpp"

namespace macaulay {

std::size_t HilbertFunction::length() const { return std::accumulate(values.begin(), values.end(), std::size_t{0}); }

std::size_t SocleType::type() const { return std::accumulate(values.begin(), values.end(), std::size_t{0}); }

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

void require_form(const DualPolynomial& form) {
  if (form.is_zero()) throw InvalidArgument("catalecticant of the zero form");
  if (!form.is_homogeneous()) throw InvalidArgument("catalecticant of a non-homogeneous polynomial");
}

}  // namespace

std::string to_string(const HilbertFunction& h) { return join(h.values); }
std::string to_string(const SocleType& e) { return join(e.values); }

RationalMatrix delta_matrix(const DualPolynomial& form, int q) {
  require_form(form);
  const int s = form.degree();
  if (q < 0 || q > s) throw InvalidArgument("catalecticant order outside 0..s");
  const std::size_t n = form.num_vars();
  const RationalVector beta = omega_star_coordinates(form, s);
  const auto rows = monomials_of_degree(n, s - q);
  const auto cols = monomials_of_degree(n, q);
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = beta[position_in_degree(rows[r] + cols[c])];
  return m;
}

RationalMatrix stacked_delta(std::span<const DualPolynomial> forms, int q) {
  if (forms.empty()) throw InvalidArgument("stacked_delta of an empty list");
  std::vector<RationalMatrix> blocks;
  const int s = forms.front().degree();
  for (const auto& f : forms) {
    require_form(f);
    if (f.degree() != s) throw InvalidArgument("stacked_delta: forms of mixed degrees");
    blocks.push_back(delta_matrix(f, q));
  }
  return vstack(blocks);
}

HilbertFunction hilbert_from_delta(const DualPolynomial& form) {
  require_form(form);
  const int s = form.degree();
  HilbertFunction h{std::vector<std::size_t>(static_cast<std::size_t>(s + 1))};
  // One independent rank per degree.
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j <= s; ++j) h.values[static_cast<std::size_t>(j)] = rank(delta_matrix(form, s - j));
  return h;
}

bool is_compressed_level(std::span<const DualPolynomial> forms) {
  if (forms.empty()) throw InvalidArgument("is_compressed_level of an empty list");
  const int s = forms.front().degree();
  const std::size_t n = forms.front().num_vars();
  const std::size_t t = forms.size();
  // Independence: the order-0 stack has one column per form.
  std::vector<RationalVector> coords;
  for (const auto& f : forms) {
    require_form(f);
    if (f.degree() != s) throw InvalidArgument("is_compressed_level: forms of mixed degrees");
    coords.push_back(omega_star_coordinates(f, s));
  }
  RationalMatrix columns = RationalMatrix::from_columns(coords, forms_dimension(n, s));
  auto relation = kernel_basis(columns);
  if (!relation.empty()) throw DependentLeadingForms("leading forms are linearly dependent", relation.front());

  for (int i = 1; i <= s; ++i) {
    std::size_t expected = std::min(forms_dimension(n, i), t * forms_dimension(n, s - i));
    if (rank(stacked_delta(forms, i)) != expected) return false;
  }
  return true;
}

namespace {

void require_socle_shape(int s, const SocleType& socle) {
  if (s < 0 || socle.values.size() != static_cast<std::size_t>(s + 1))
    throw InvalidArgument("socle type must have exactly s + 1 entries");
  if (socle.values.back() == 0) throw InvalidArgument("socle type needs e_s > 0");
}

std::size_t socle_bound(std::size_t n, int s, const SocleType& socle, int i) {
  std::size_t sum = 0;
  for (int u = std::max(i, 0); u <= s; ++u) sum += socle.values[static_cast<std::size_t>(u)] * forms_dimension(n, u - i);
  return sum;
}

}  // namespace

int compressed_initial_degree(std::size_t n, int s, const SocleType& socle) {
  require_socle_shape(s, socle);
  for (int i = 0; i <= s; ++i)
    if (socle_bound(n, s, socle, i) < forms_dimension(n, i)) return i;
  return s + 1;
}

HilbertFunction compressed_hf(std::size_t n, int s, const SocleType& socle) {
  const int v = compressed_initial_degree(n, s, socle);
  HilbertFunction h;
  for (int i = 0; i <= s; ++i) h.values.push_back(i < v ? forms_dimension(n, i) : socle_bound(n, s, socle, i));
  return h;
}

std::size_t socle_correction(std::size_t n, int v, const SocleType& socle) {
  if (v < 1) throw InvalidArgument("socle_correction needs v >= 1");
  std::size_t sum = 0;
  for (std::size_t u = static_cast<std::size_t>(v); u < socle.values.size(); ++u)
    sum += socle.values[u] * forms_dimension(n, static_cast<int>(u) - v + 1);
  const std::size_t room = forms_dimension(n, v - 1);
  return room > sum ? room - sum : 0;
}

}  // namespace macaulay
