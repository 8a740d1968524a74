#include "macaulay/grading.hpp"

#include <algorithm>
#include <sstream>

#include "macaulay/catalecticant.hpp"
#include "macaulay/detail/graded_span.hpp"
#include "macaulay/errors.hpp"

namespace macaulay {

namespace {

void require_step(const DualPolynomial& form, int p) {
  if (form.is_zero() || !form.is_homogeneous()) throw InvalidArgument("m_matrix needs a nonzero form");
  if (p < 1 || p > form.degree() - 1) throw InvalidArgument("m_matrix needs 1 <= p <= s - 1");
}

// x^a in x_t (x_t, ..., x_n)^{d-1}, t zero-based.
bool in_staircase_set(const Exponent& a, std::size_t t) {
  for (std::size_t k = 0; k < t; ++k)
    if (a[k] != 0) return false;
  return a[t] > 0;
}

std::string describe(const Exponent& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.num_vars(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

bool is_maximal(const RationalMatrix& m) { return rank(m) == std::min(m.rows(), m.cols()); }

}  // namespace

RationalMatrix m_matrix(const DualPolynomial& form, int p) {
  require_step(form, p);
  const std::size_t n = form.num_vars();
  const int s = form.degree();
  const RationalVector alpha = omega_star_coordinates(form, s);
  const auto rows = monomials_of_degree(n, s - p);
  const auto perturbations = monomials_of_degree(n, p + 1);
  RationalMatrix m(rows.size(), n * perturbations.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Exponent& w = rows[r];
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      const Exponent base = w - Exponent::unit(n, j);
      for (std::size_t k = 0; k < perturbations.size(); ++k)
        m(r, j * perturbations.size() + k) = w[j] * alpha[position_in_degree(base + perturbations[k])];
    }
  }
  return m;
}

RationalMatrix m_matrix_level(std::span<const DualPolynomial> forms, int p) {
  if (forms.empty()) throw InvalidArgument("m_matrix_level of an empty list");
  std::vector<RationalMatrix> blocks;
  for (const auto& f : forms) {
    if (f.degree() != forms.front().degree()) throw InvalidArgument("m_matrix_level: forms of mixed degrees");
    blocks.push_back(m_matrix(f, p));
  }
  return vstack(blocks);
}

BlockStructureCheck verify_block_structure(const DualPolynomial& form, int p) {
  const RationalMatrix m = m_matrix(form, p);
  const std::size_t n = form.num_vars();
  const int s = form.degree();
  const auto rows = monomials_of_degree(n, s - p);
  const std::size_t width = forms_dimension(n, p + 1);
  BlockStructureCheck out;
  auto fail = [&](std::string line) {
    out.ok = false;
    out.failures.push_back(std::move(line));
  };

  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t t = 0; t < n; ++t) {
      if (!in_staircase_set(rows[r], t)) continue;
      for (std::size_t j = 0; j < t; ++j)
        for (std::size_t k = 0; k < width; ++k)
          if (m(r, j * width + k) != 0)
            fail("nonzero entry below block " + std::to_string(t + 1) + " at W=" + describe(rows[r]));
    }

  // (i) M_1 rows are w_1 times catalecticant rows.
  const RationalMatrix delta = delta_matrix(form, p + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Exponent& w = rows[r];
    if (!in_staircase_set(w, 0)) continue;
    const std::size_t drow = position_in_degree(w - Exponent::unit(n, 0));
    for (std::size_t k = 0; k < width; ++k)
      if (m(r, k) != w[0] * delta(drow, k)) fail("property (i) fails at W=" + describe(w));
  }

  // (ii) M_{j+1}(W) = w_{j+1} M_j(W + d_j - d_{j+1}).
  for (std::size_t j = 0; j + 1 < n; ++j)
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Exponent& w = rows[r];
      if (!in_staircase_set(w, j + 1)) continue;
      const std::size_t lrow = position_in_degree(w + Exponent::unit(n, j) - Exponent::unit(n, j + 1));
      for (std::size_t k = 0; k < width; ++k)
        if (m(r, (j + 1) * width + k) != w[j + 1] * m(lrow, j * width + k))
          fail("property (ii) fails for block " + std::to_string(j + 2) + " at W=" + describe(w));
    }
  return out;
}

bool rank_criterion(const DualPolynomial& form, int p) {
  require_step(form, p);
  if (form.degree() >= 5) throw SocleDegreeTooLarge("rank criterion only holds for socle degree at most 4");
  const bool delta_max = is_maximal(delta_matrix(form, p + 1));
  if (delta_max && !is_maximal(m_matrix(form, p)))
    throw InvariantViolation("maximal catalecticant rank with a non-maximal m-matrix");
  return delta_max;
}

KillingResult killing_step(std::span<const DualPolynomial> gs, int p) {
  const int s = detail::max_degree(gs);
  if (gs.empty() || s < 2) throw InvalidArgument("killing_step needs generators of degree >= 2");
  if (p < 1 || p > s - 1) throw InvalidArgument("killing_step needs 1 <= p <= s - 1");
  const std::size_t n = gs.front().num_vars();
  const int tau = s - p;
  const std::size_t cols = phi_parameter_count(n, p);

  Obstruction system;
  system.p = p;
  std::vector<RationalMatrix> blocks;
  for (std::size_t r = 0; r < gs.size(); ++r) {
    if (gs[r].degree() <= tau) continue;
    DualPolynomial component = homogeneous_component(gs[r], tau);
    RationalVector coords = omega_star_coordinates(component, tau);
    system.target.insert(system.target.end(), coords.begin(), coords.end());
    system.target_components.push_back(std::move(component));
    system.generators.push_back(r);
    blocks.push_back(gs[r].degree() == s ? m_matrix(homogeneous_component(gs[r], s), p)
                                         : RationalMatrix(forms_dimension(n, tau), cols));
  }
  if (is_zero_vector(system.target)) return RationalVector(cols);
  system.matrix = vstack(blocks);
  RationalVector rhs = system.target;
  for (auto& v : rhs) v = -v;
  if (auto a = solve(system.matrix, rhs)) return *a;
  system.rank = rank(system.matrix);
  return system;
}

std::vector<DualPolynomial> reduce_generators(std::span<const DualPolynomial> input) {
  std::vector<DualPolynomial> gs(input.begin(), input.end());
  if (gs.empty()) return gs;
  const std::size_t n = gs.front().num_vars();
  const int top = detail::max_degree(gs);
  if (top <= 0) return gs;
  const auto contractions = detail::module_spanning_set(gs, false);
  for (std::size_t r = 0; r < gs.size(); ++r) {
    const int d = gs[r].degree();
    if (d <= 0) continue;
    // m<G> plus the generators of lower degree. m<G> is the same for the
    // reduced generators, and mixing in only lower degrees keeps the change of
    // generators triangular, hence invertible modulo m<G>.
    std::vector<DualPolynomial> spanning = contractions;
    for (std::size_t k = 0; k < gs.size(); ++k)
      if (gs[k].degree() < d) spanning.push_back(gs[k]);
    const auto fe = detail::filtered_echelon(spanning, n, top);
    RationalVector coords = fe.layout.coordinates(gs[r]);
    const RationalMatrix& rows = fe.echelon.reduced;
    for (std::size_t k = 0; k < fe.echelon.rank(); ++k) {
      const std::size_t c = fe.echelon.pivot_columns[k];
      if (fe.layout.degree_of(c) >= d || coords[c] == 0) continue;
      const Rational factor = coords[c];
      for (std::size_t col = c; col < coords.size(); ++col) coords[col] -= factor * rows(k, col);
    }
    gs[r] = fe.layout.polynomial(coords);
  }
  return gs;
}

std::string to_string(GradingOutcome outcome) {
  switch (outcome) {
    case GradingOutcome::Graded: return "GRADED";
    case GradingOutcome::ObstructedRestricted: return "OBSTRUCTED_RESTRICTED";
    case GradingOutcome::NotApplicable: return "NOT_APPLICABLE";
  }
  return "";
}

namespace {

bool targets_vanish(std::span<const DualPolynomial> gs, int tau) {
  return std::all_of(gs.begin(), gs.end(), [&](const DualPolynomial& g) {
    return g.degree() <= tau || homogeneous_component(g, tau).is_zero();
  });
}

std::vector<DualPolynomial> apply_step(std::span<const DualPolynomial> gs, int s, int p, const RationalVector& a) {
  const auto phi = make_phi(gs.front().num_vars(), s, p, a);
  std::vector<DualPolynomial> out;
  for (const auto& g : gs) out.push_back(dual_apply(phi, g));
  return reduce_generators(out);
}

}  // namespace

GradingReport canonically_graded(const AlgebraPresentation& pres) {
  macaulay_validate(pres);
  const int s = pres.socle_degree();
  GradingReport report;
  report.notes.push_back("steps run in ascending p, killing degree s-1 first");
  report.notes.push_back("free variables of each killing system are set to zero");
  const auto degrees = pres.degrees();
  const bool unequal = std::any_of(degrees.begin(), degrees.end(), [&](int d) { return d != s; });
  if (unequal)
    report.notes.push_back("generators of unequal degrees: those below degree s enter each killing system as zero blocks");

  std::vector<DualPolynomial> gs = reduce_generators(pres.generators);
  for (int p = 1; p <= s - 1; ++p) {
    if (targets_vanish(gs, s - p)) continue;
    auto result = killing_step(gs, p);
    if (auto* obstruction = std::get_if<Obstruction>(&result)) {
      std::vector<DualPolynomial> top_only;
      for (const auto& g : gs)
        if (g.degree() == s) top_only.push_back(g);
      const bool top_solvable = std::holds_alternative<RationalVector>(killing_step(top_only, p));
      report.outcome = top_solvable ? GradingOutcome::NotApplicable : GradingOutcome::ObstructedRestricted;
      if (top_solvable)
        report.notes.push_back("a generator of lower degree keeps a component that no step of this family can reach");
      else
        report.notes.push_back(
            "the obstruction covers automorphisms with identity linear part perturbed in one degree only; it does not by "
            "itself show that A is not canonically graded");
      report.obstruction = std::move(*obstruction);
      report.final_generators = std::move(gs);
      return report;
    }
    const auto& a = std::get<RationalVector>(result);
    gs = apply_step(gs, s, p, a);
    report.steps.push_back({p, a});
  }
  for (const auto& g : gs)
    if (!g.is_homogeneous()) throw InvariantViolation("staircase finished with a non-homogeneous generator");
  report.outcome = GradingOutcome::Graded;
  report.final_generators = std::move(gs);
  return report;
}

std::vector<DualPolynomial> replay_certificate(const AlgebraPresentation& pres, const GradingReport& report) {
  const int s = pres.socle_degree();
  std::vector<DualPolynomial> gs = reduce_generators(pres.generators);
  for (const auto& step : report.steps) gs = apply_step(gs, s, step.p, step.coefficients);
  return gs;
}

TruncatedAutomorphism certified_automorphism(const AlgebraPresentation& pres, const GradingReport& report) {
  const int s = pres.socle_degree();
  auto total = TruncatedAutomorphism::identity(pres.num_vars, s);
  for (const auto& step : report.steps) total = compose(total, make_phi(pres.num_vars, s, step.p, step.coefficients));
  return total;
}

bool verify_certificate(const AlgebraPresentation& pres, const GradingReport& report) {
  if (report.outcome != GradingOutcome::Graded) return false;
  if (replay_certificate(pres, report) != report.final_generators) return false;
  if (report.final_generators.size() != pres.generators.size()) return false;
  for (std::size_t r = 0; r < pres.generators.size(); ++r) {
    const auto& f = report.final_generators[r];
    if (!f.is_homogeneous() || f != leading_form(pres.generators[r])) return false;
  }
  const AlgebraPresentation graded{pres.num_vars, report.final_generators};
  if (hilbert_function(graded) != hilbert_function(pres)) return false;
  const auto phi = certified_automorphism(pres, report);
  for (const auto& f : annihilator_upto(graded, pres.socle_degree())) {
    const JetPolynomial image = phi.apply(f);
    for (const auto& g : pres.generators)
      if (!contract(image, g).is_zero()) return false;
  }
  return true;
}

}  // namespace macaulay
