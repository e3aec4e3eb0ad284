#pragma once

#include <optional>

#include "bfi/independence.hpp"
#include "bfi/product_space.hpp"

namespace bfi {

/// Three-parameter form of an independence mass: alpha is the source's
/// reliability, beta its degree of independence, gamma its degree of
/// positive (rather than negative) dependence. Induces
/// m(I) = αβ, m(P) = α(1-β)γ, m(~P) = α(1-β)(1-γ), m(𝓘) = 1-α.
struct IndependenceParams {
  double alpha;
  double beta;
  double gamma;

  IndependenceParams(double alpha, double beta, double gamma);
  IndependenceMass to_mass() const;
};

/// Inverse of the three-parameter form, defined component-wise where the
/// divisions are well posed; requires m(P∪~P) = 0.
struct RecoveredParams {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> gamma;
};
RecoveredParams params_from_independence_mass(const IndependenceMass& mi);

/// Knowledge about Ω conditional on each independence atom: the source's
/// own mass under I, the vacuous mass under P (a positively dependent
/// source must act as the conjunctive neutral element), the conflict mass
/// under ~P.
struct ConditionalFamily {
  MassFunction given_independent;
  MassFunction given_positive;
  MassFunction given_negative;
};
ConditionalFamily conditional_family(const MassFunction& m);

/// Product-space discounting of m by an independence mass: vacuous
/// extension of mi onto Ω×𝓘, ballooning of m[I] on atom I and of m[~P] on
/// atom ~P (m[P]'s ballooning is vacuous and omitted), conjunctive
/// combination, marginalization onto Ω. Handles any focal structure on 𝓘.
MassFunction discount_by_independence(const MassFunction& m, const IndependenceMass& mi);
MassFunction discount_by_independence(const MassFunction& m, const IndependenceParams& p);

/// Closed form of the same operation for the three-parameter structure:
///   m'(X) = αβ·m(X)                       X ∉ {∅, Ω}
///   m'(∅) = αβ·m(∅) + α(1-β)(1-γ)
///   m'(Ω) = αβ·m(Ω) + α(1-β)γ + (1-α)
/// Serves as the independent oracle for the pipeline (agreement to 1e-12).
MassFunction discount_by_independence_closed_form(const MassFunction& m,
                                                  const IndependenceParams& p);

/// Discount m1 by p12 (its independence w.r.t. the second source), m2 by
/// p21 when given (m2 passes through unchanged otherwise), then combine
/// conjunctively. Conflict is reported, never renormalized.
MassFunction fuse_with_independence(const MassFunction& m1, const MassFunction& m2,
                                    const IndependenceParams& p12,
                                    const std::optional<IndependenceParams>& p21);

/// Intermediate Ω×𝓘 factors of the pipeline, for trace tables.
struct IndependenceDiscountTrace {
  ProductFrame pf;
  MassFunction extended;            // mi lifted onto Ω×𝓘
  MassFunction given_independent;   // m[I] ballooned on atom I
  MassFunction given_negative;      // m[~P] ballooned on atom ~P
  MassFunction combined;            // conjunctive combination on Ω×𝓘
  MassFunction marginal;            // projected back onto Ω
};
IndependenceDiscountTrace discount_by_independence_trace(const MassFunction& m,
                                                         const IndependenceMass& mi);

}  // namespace bfi
