#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "macaulay/automorphism.hpp"
#include "macaulay/inverse_system.hpp"
#include "macaulay/matrix.hpp"

namespace macaulay {

/// Linear map a -> [G[s]] * b_block(a), as a matrix acting on column vectors.
/// Rows W (|W| = s - p), columns (j, i) with j outer and |i| = p + 1;
/// entry w_j * alpha_{W - d_j + i}.
RationalMatrix m_matrix(const DualPolynomial& form, int p);

/// m_matrix of each form, stacked in input order.
RationalMatrix m_matrix_level(std::span<const DualPolynomial> forms, int p);

struct BlockStructureCheck {
  bool ok = true;
  std::vector<std::string> failures;  // one line per violated entry or property
};

/// Zero pattern below the diagonal blocks M_j (rows in S^t, columns j < t),
/// M_1 = w_1 * Delta^{p+1}, and M_{j+1} = w_{j+1} * M_j on shifted rows.
BlockStructureCheck verify_block_structure(const DualPolynomial& form, int p);

/// Whether rank Delta^{p+1}(form) is maximal for its shape. Throws
/// SocleDegreeTooLarge for s >= 5, and InvariantViolation if Delta is maximal
/// while m_matrix(form, p) is not.
bool rank_criterion(const DualPolynomial& form, int p);

/// Unsolvable killing system at step p.
struct Obstruction {
  int p = 0;
  RationalMatrix matrix;               // stacked m-matrix blocks
  std::size_t rank = 0;
  RationalVector target;               // stacked dual coordinates of the G_r[s - p]
  std::vector<DualPolynomial> target_components;  // G_r[s - p], one per generator in the system
  std::vector<std::size_t> generators;            // which generators the blocks belong to
};

using KillingResult = std::variant<RationalVector, Obstruction>;

/// Solves m * a = -target for the stacked blocks of every generator whose
/// degree exceeds s - p. Generators of degree below s contribute a zero block.
KillingResult killing_step(std::span<const DualPolynomial> gs, int p);

/// Reduces the components of G_r below its degree modulo the elements of
/// m<G> + sum_{deg G_k < deg G_r} R G_k of lower degree. The generated module,
/// and so the algebra, is unchanged.
std::vector<DualPolynomial> reduce_generators(std::span<const DualPolynomial> gs);

enum class GradingOutcome { Graded, ObstructedRestricted, NotApplicable };

std::string to_string(GradingOutcome outcome);

struct GradingStep {
  int p = 0;
  RationalVector coefficients;  // make_phi layout
};

struct GradingReport {
  GradingOutcome outcome = GradingOutcome::Graded;
  std::vector<GradingStep> steps;
  std::vector<DualPolynomial> final_generators;  // after the last successful step
  std::optional<Obstruction> obstruction;
  std::vector<std::string> notes;
};

/// Staircase over p = 1..s-1: reduce, kill the degree s - p components, apply
/// the automorphism, reduce again. NotApplicable means the first failure came
/// from a generator of lower degree whose component no step can reach.
GradingReport canonically_graded(const AlgebraPresentation& pres);

/// Re-runs the certificate on the input and returns the generators it yields.
std::vector<DualPolynomial> replay_certificate(const AlgebraPresentation& pres, const GradingReport& report);

/// Composition of the certified automorphisms, mapping Ann(final) onto Ann(input).
TruncatedAutomorphism certified_automorphism(const AlgebraPresentation& pres, const GradingReport& report);

/// For a GRADED report: replay matches, final generators are homogeneous with
/// the input's leading forms, Hilbert functions agree, and the certified
/// automorphism carries Ann(final) into Ann(input).
bool verify_certificate(const AlgebraPresentation& pres, const GradingReport& report);

}  // namespace macaulay
