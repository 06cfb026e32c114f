#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixnorm/exponents.hpp"
#include "mixnorm/generators.hpp"
#include "mixnorm/integral.hpp"
#include "mixnorm/weights.hpp"

namespace mixnorm {

struct RatioInstance {
  int index = 0;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
};

struct RefinementLevel {
  double h = 0.0;
  double sup_ratio = 0.0;
};

// Outcome of one harness check. A boundedness check passes when the sup ratio
// stays finite and moves by at most the tolerance when h is halved; a
// counterexample check passes when its tracked quantity grows as required.
// pass is a pure function of the recorded numbers and the tolerance.
struct VerificationReport {
  std::string check;
  nlohmann::json parameters;
  std::vector<RatioInstance> instances;  // finest level
  std::vector<RefinementLevel> levels;
  double sup_ratio = 0.0;
  double drift = 0.0;  // |sup_fine - sup_coarse| / sup_coarse
  double tolerance = 0.0;
  bool pass = false;
  std::string note;

  nlohmann::json to_json() const;
  static std::string csv_header();
  void append_csv(std::ostream& os) const;
};

// ||M_t f||_p / ||f||_p over the corpus; 0 < t < min p_j, p finite.
VerificationReport check_iterated_maximal_mixed_lebesgue(const GeneratorSpec& gen,
                                                         const ExponentVector& p, double t,
                                                         double tol = 0.10);

// Mixed Morrey version; also runs the all-q-equal classical corollary path
// and records its agreement gap.
VerificationReport check_iterated_maximal_mixed_morrey(const GeneratorSpec& gen, double p,
                                                       const ExponentVector& q, double t,
                                                       double tol = 0.10);

// Hardy-Littlewood maximal on the mixed Morrey norm; 1 < q < inf, 1 < p <= inf.
VerificationReport check_hl_maximal_mixed_morrey(const GeneratorSpec& gen, double p,
                                                 const ExponentVector& q, double tol = 0.10);

// Vector-valued maximal inequality on L^p; J = 1 must agree with the scalar
// check to 1e-12 (gap recorded).
VerificationReport check_fs_vector(const GeneratorSpec& gen, const ExponentVector& p, double u,
                                   double t, int tuple_size, double tol = 0.10);

// Vector-valued inequalities on mixed Morrey, both the plain-M and the M_t
// versions. Enforces t < min(q_1..q_n, p, u) and records the gate used.
VerificationReport check_morrey_fs_vector(const GeneratorSpec& gen, double p,
                                          const ExponentVector& q, double u, double t,
                                          int tuple_size, double tol = 0.10);

// ||M_t f * (x) w_j^{1/p_j}||_p <= C ||f * (x) (M_j w_j)^{1/p_j}||_p with
// w_j^t in A_{p_j}; also the scalar integral corollary and a permuted-order
// variant.
VerificationReport check_dual_stein(const GeneratorSpec& gen, const ExponentVector& p, double t,
                                    const std::vector<Weight1D>& weights, double tol = 0.10);

// ||I_alpha f||_{M^r_s} / ||f||_{M^p_q} with the Adams exponents, plus the
// two-sided hedge inequality constants at probe cells.
VerificationReport check_fractional(const GeneratorSpec& gen, double p, const ExponentVector& q,
                                    double alpha, double tol = 0.15);

// Truncated singular integral on the mixed Lebesgue and mixed Morrey norms
// across joint (h, delta) refinement. The kernel must pass its condition check.
VerificationReport check_singular(const GeneratorSpec& gen, double p, const ExponentVector& q,
                                  const KernelDescriptor& kernel, double tol = 0.15);

// Divergence experiment against ||M_2 f||_(q1) <= M_2 ||f||_(q1): truncated
// norms of M_2 f along x must increase at the tail rate and overtake the
// finite closed-form right-hand side. Truncation lengths are multiples of the
// breakpoint phi(y) when scale_by_breakpoint is set (the tail regime; see the
// bundled oracle), absolute lengths otherwise.
VerificationReport check_counterexample(double q1, double q2, const std::vector<double>& L_list,
                                        bool scale_by_breakpoint = true, double y = 0.25,
                                        double growth_tol = 0.15, double rhs_tol = 0.03);

// Exact identities and inequality properties: dilation laws, embedding,
// Hoelder, monotone chains, homogeneity, triangle inequality, and the
// equivalent-norm comparison.
VerificationReport check_identities(const GeneratorSpec& gen);

void write_reports_json(const std::vector<VerificationReport>& reports, const std::string& path);
void write_reports_csv(const std::vector<VerificationReport>& reports, const std::string& path);

}  // namespace mixnorm
