// One PASS/FAIL line per acceptance criterion, with the failing sub-checks
// listed underneath. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "macaulay/catalecticant.hpp"
#include "macaulay/errors.hpp"
#include "macaulay/grading.hpp"
#include "macaulay/poly_text.hpp"
#include "macaulay/random_forms.hpp"

using namespace macaulay;

namespace {

struct Checks {
  std::vector<std::string> failed;
  std::size_t total = 0;
  void expect(bool ok, const std::string& what) {
    ++total;
    if (!ok) failed.push_back(what);
  }
};

DualPolynomial dual(const std::string& text, std::size_t n) { return parse_dual(text, n); }

AlgebraPresentation presentation(std::size_t n, const std::vector<std::string>& gens) {
  AlgebraPresentation p{n, {}};
  for (const auto& g : gens) p.generators.push_back(dual(g, n));
  return p;
}

bool in_annihilator_span(const std::vector<JetPolynomial>& basis, const std::string& f, std::size_t n, int top) {
  std::vector<RationalVector> cols;
  for (const auto& b : basis) cols.push_back(basis_coordinates(b, top));
  const RationalMatrix m = RationalMatrix::from_columns(cols, truncated_dimension(n, top));
  return in_column_space(m, basis_coordinates(parse_jet(f, n, top + 1), top));
}

bool maximal(const RationalMatrix& m) { return rank(m) == std::min(m.rows(), m.cols()); }

std::string hf_string(const HilbertFunction& h) {
  std::string out;
  for (auto v : h.values) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

// Graded outcome plus a certificate that replays to homogeneous generators
// with the input's leading forms.
void expect_graded(Checks& c, const AlgebraPresentation& pres, const std::string& label) {
  const auto report = canonically_graded(pres);
  if (report.outcome != GradingOutcome::Graded) {
    c.expect(false, label + ": outcome " + to_string(report.outcome));
    return;
  }
  const auto replayed = replay_certificate(pres, report);
  bool shape = replayed.size() == pres.generators.size();
  for (std::size_t r = 0; shape && r < replayed.size(); ++r)
    shape = replayed[r] == leading_form(replayed[r]) && leading_form(replayed[r]) == leading_form(pres.generators[r]);
  c.expect(shape, label + ": replay not homogeneous with the input leading forms");
  c.expect(verify_certificate(pres, report), label + ": certificate verification");
}

Checks extremal_quintic() {
  Checks c;
  const auto pres = presentation(2, {"y1^3*y2^2 + y2^4"});
  c.expect(hf_string(hilbert_function(pres)) == "1 2 3 3 2 1", "HF = (1,2,3,3,2,1)");
  const auto ann = annihilator_upto(pres, 4);
  c.expect(in_annihilator_span(ann, "x1^4", 2, 4), "x1^4 in Ann");
  c.expect(in_annihilator_span(ann, "x2^3 - 2*x1^3*x2", 2, 4), "x2^3 - 2 x1^3 x2 in Ann");
  c.expect(is_compressed(pres), "compressed");
  const auto g5 = leading_form(pres.generators[0]);
  c.expect(omega_star_coordinates(g5)[2] == 12, "z_3 = 12");
  const auto m = m_matrix(g5, 1);
  c.expect(rank(m) == 4, "rank M = 4");
  c.expect(!in_column_space(m, omega_star_coordinates(dual("y2^4", 2))), "y2^4 outside the column space");
  const auto report = canonically_graded(pres);
  c.expect(report.outcome == GradingOutcome::ObstructedRestricted && report.obstruction && report.obstruction->p == 1,
           "OBSTRUCTED_RESTRICTED at p = 1 (got " + to_string(report.outcome) + ")");
  return c;
}

Checks level_pair() {
  Checks c;
  const auto pres = presentation(3, {"y1^2*y2*y3 + y3^3", "y1*y2^2*y3 + y2*y3^3"});
  c.expect(hf_string(hilbert_function(pres)) == "1 3 6 6 2", "HF = (1,3,6,6,2)");
  c.expect(socle_type(pres).values == std::vector<std::size_t>{0, 0, 0, 0, 2}, "socle type (0,0,0,0,2)");
  c.expect(is_compressed(pres), "compressed");
  const auto tops = pres.leading_forms();
  const auto m = m_matrix_level(tops, 1);
  c.expect(m.rows() == 20 && m.cols() == 18, "m_matrix_level shape 20x18");
  RationalVector target(20);
  const auto y33 = omega_star_coordinates(dual("y3^3", 3));
  std::copy(y33.begin(), y33.end(), target.begin());
  c.expect(!in_column_space(m, target), "y3^3 outside the image");
  const auto report = canonically_graded(pres);
  c.expect(report.outcome == GradingOutcome::ObstructedRestricted,
           "canonically_graded = OBSTRUCTED_RESTRICTED (got " + to_string(report.outcome) +
               "; y3^3 = x2 o G2 - x1 o G1 lies in m<G>)");
  return c;
}

Checks almost_stretched() {
  Checks c;
  c.expect(canonically_graded(presentation(2, {"y1^3*y2"})).outcome == GradingOutcome::Graded, "(a) GRADED");
  const auto b = presentation(2, {"y1^3*y2 + y2^3"});
  c.expect(hf_string(hilbert_function(b)) == "1 2 2 2 1", "(b) HF = (1,2,2,2,1)");
  c.expect(!is_compressed(b), "(b) not compressed");
  c.expect(canonically_graded(b).outcome == GradingOutcome::ObstructedRestricted, "(b) OBSTRUCTED_RESTRICTED");
  const auto cc = presentation(2, {"y1^3*y2 - y1*y2^3"});
  c.expect(cc.generators[0] == leading_form(cc.generators[0]), "(c) homogeneous");
  c.expect(canonically_graded(cc).outcome == GradingOutcome::Graded, "(c) GRADED");
  return c;
}

Checks gorenstein_suite() {
  Checks c;
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto top = random_compressed_level(n, 4, 1, rng).front();
    const AlgebraPresentation pres{n, {top + random_form(n, 3, rng)}};
    expect_graded(c, pres, "quartic trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto top = random_compressed_level(n, 3, 1, rng).front();
    const AlgebraPresentation pres{n, {top + random_form(n, 2, rng)}};
    expect_graded(c, pres, "cubic trial " + std::to_string(trial));
  }
  return c;
}

// Forms of the given degrees with random lower tails, redrawn until the
// presentation is compressed.
AlgebraPresentation random_compressed(std::size_t n, const std::vector<int>& degrees, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    AlgebraPresentation pres{n, {}};
    for (int d : degrees) pres.generators.push_back(random_form(n, d, rng, 50) + random_polynomial(n, d - 1, rng, 50));
    try {
      macaulay_validate(pres);
    } catch (const DependentLeadingForms&) {
      continue;
    }
    if (is_compressed(pres)) return pres;
  }
  throw InvariantViolation("no compressed presentation drawn");
}

Checks level_suite() {
  Checks c;
  std::mt19937_64 rng(2025);
  struct Case {
    std::size_t n;
    std::vector<int> degrees;
  };
  const std::vector<Case> cases{
      {2, {2}},          {3, {2, 2}},       {2, {3}},          {3, {3}},       {2, {3, 3}},    {3, {3, 3}},
      {3, {3, 3, 3}},    {2, {3, 2}},       {3, {3, 2}},       {3, {3, 2, 2}}, {3, {3, 3, 2}}, {2, {4}},
      {3, {4}},          {2, {4, 3}},       {3, {4, 3}},       {3, {4, 3, 3}}, {2, {4, 4}},    {2, {4, 4, 4}},
      {2, {4, 4, 4, 4}}, {2, {4, 4, 4, 4, 4}}};
  for (const auto& k : cases)
    for (int trial = 0; trial < 10; ++trial) {
      std::string label = "n=" + std::to_string(k.n) + " degrees";
      for (int d : k.degrees) label += " " + std::to_string(d);
      expect_graded(c, random_compressed(k.n, k.degrees, rng), label + " trial " + std::to_string(trial));
    }
  return c;
}

Checks rank_suite() {
  Checks c;
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const int s = 2 + trial % 3;
    const auto g = random_form(n, s, rng);
    for (int p = 1; p < s; ++p)
      c.expect(maximal(delta_matrix(g, p + 1)) == maximal(m_matrix(g, p)),
               "trial " + std::to_string(trial) + " p = " + std::to_string(p));
  }
  const auto g = dual("y1^3*y2^2", 2);
  c.expect(maximal(delta_matrix(g, 2)), "s = 5: Delta^2 maximal");
  const auto m = m_matrix(g, 1);
  c.expect(rank(m) == 4 && m.rows() == 5, "s = 5: rank M = 4 < 5");
  return c;
}

Checks oracle_suite() {
  Checks c;
  std::mt19937_64 rng(2027);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const int s = 1 + trial % 6;
    const auto g = random_form(n, s, rng);
    const auto h = hilbert_from_delta(g);
    for (int j = 0; j <= s; ++j)
      c.expect(h.values[static_cast<std::size_t>(j)] == derivative_span(std::span(&g, 1), j).size(),
               "trial " + std::to_string(trial) + " h_" + std::to_string(j));
    for (int i = 0; i <= s; ++i)
      c.expect(delta_matrix(g, i) == delta_matrix(g, s - i).transpose(),
               "trial " + std::to_string(trial) + " transpose at " + std::to_string(i));
  }
  return c;
}

Checks automorphism_suite() {
  Checks c;
  std::mt19937_64 rng(2028);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const int s = 3 + trial % 3;
    const int p = 1 + trial % (s - 1);
    RationalVector a(phi_parameter_count(n, p));
    for (auto& x : a) x = coeff(rng);
    const auto phi = make_phi(n, s, p, a);
    const auto label = "trial " + std::to_string(trial);

    const auto m = matrix_of(phi);
    const auto b = b_block(n, s, p, a);
    c.expect(b == m.block(truncated_dimension(n, s - 1), truncated_dimension(n, s - p - 1), forms_dimension(n, s),
                          forms_dimension(n, s - p)),
             label + ": b_block is the sub-block of matrix_of");

    const auto g = random_polynomial(n, s, rng, 50);
    const auto f = dual_apply(phi, g);
    bool pairing_ok = true;
    for (const auto& w : monomial_basis(n, s))
      pairing_ok = pairing_ok && pairing(JetPolynomial::monomial(w, s), f) == pairing(phi.apply(w), g);
    c.expect(pairing_ok, label + ": pairing identity");

    const auto top = random_form(n, s, rng, 50);
    c.expect(left_multiply(omega_star_coordinates(top), b) == m_matrix(top, p) * a, label + ": m-matrix identity");
  }
  return c;
}

Checks compressed_formulas() {
  Checks c;
  c.expect(hf_string(compressed_hf(3, 4, {{0, 0, 0, 0, 2}})) == "1 3 6 6 2", "n=3 s=4 E=(0,0,0,0,2)");
  for (std::size_t i = 2; i <= 5; ++i)
    c.expect(hf_string(compressed_hf(2, 4, {{0, 0, 0, 0, i}})) == "1 2 3 4 " + std::to_string(i),
             "n=2 s=4 e_4=" + std::to_string(i));
  for (std::size_t n = 2; n <= 5; ++n)
    c.expect(hf_string(compressed_hf(n, 4, {{0, 0, 0, 0, 1}})) ==
                 "1 " + std::to_string(n) + " " + std::to_string(n * (n + 1) / 2) + " " + std::to_string(n) + " 1",
             "Gorenstein n=" + std::to_string(n));
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Checks()>>> criteria{
      {"AC1 extremal Gorenstein s=5 example", extremal_quintic},
      {"AC2 type-2 level s=4 example", level_pair},
      {"AC3 almost stretched triple", almost_stretched},
      {"AC4 compressed Gorenstein s<=4 property suite", gorenstein_suite},
      {"AC5 compressed level property suite", level_suite},
      {"AC6 catalecticant vs m-matrix maximality", rank_suite},
      {"AC7 catalecticant oracle equivalence", oracle_suite},
      {"AC8 automorphism algebra", automorphism_suite},
      {"AC9 compressed Hilbert formulas", compressed_formulas},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Checks c;
    std::string error;
    try {
      c = run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && c.failed.empty() && secs < 10.0;
    failures += ok ? 0 : 1;
    std::printf("%s %s (%zu checks, %.2fs)\n", ok ? "PASS" : "FAIL", name.c_str(), c.total, secs);
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    if (secs >= 10.0) std::printf("    exceeded 10 s\n");
    for (std::size_t i = 0; i < c.failed.size() && i < 10; ++i) std::printf("    failed: %s\n", c.failed[i].c_str());
    if (c.failed.size() > 10) std::printf("    ... %zu more\n", c.failed.size() - 10);
  }
  return failures == 0 ? 0 : 1;
}
