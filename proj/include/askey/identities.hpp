#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "askey/families.hpp"
#include "askey/laurent.hpp"
#include "askey/rat.hpp"

namespace askey {

enum class Verdict { pass, fail, error };
std::string_view to_string(Verdict v);

struct Witness {
  std::string location;
  std::string lhs;
  std::string rhs;
};

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct CheckReport {
  std::string id;
  ParamList params;
  Verdict verdict = Verdict::pass;
  std::optional<Witness> witness;
  std::optional<std::string> residual;  // lhs - rhs, exact
  std::size_t comparisons = 0;
  std::string message;  // set for Verdict::error

  std::string params_text() const;
};

/// Perturbs the right-hand side of the index-th comparison a check makes.
struct Mutation {
  std::size_t index = 0;
  Rat delta{1};
};

struct CheckOptions {
  std::optional<Mutation> mutation;
};

/// Records exact comparisons. The first mismatch becomes the witness.
class Comparator {
public:
  explicit Comparator(std::optional<Mutation> mutation = std::nullopt) : mutation_(std::move(mutation)) {}

  bool equal(const std::string& location, const Rat& lhs, Rat rhs);
  bool equal(const std::string& location, const LaurentPoly& lhs, LaurentPoly rhs);
  bool equal(const std::string& location, const Poly& lhs, Poly rhs);
  /// value >= 0; a mutation drives the value negative.
  bool nonnegative(const std::string& location, Rat value);

  std::size_t count() const { return count_; }
  CheckReport report(std::string id, ParamList params) const;

private:
  bool mutate_now();
  void fail(Witness w, std::string residual);

  std::optional<Mutation> mutation_;
  std::size_t count_ = 0;
  std::optional<Witness> witness_;
  std::optional<std::string> residual_;
};

/// Rationals (x, r) with x^2 + r^2 = 1, standing for (cos t, sin t).
struct PythagoreanPair {
  /// Throws InadmissiblePoint unless x^2 + r^2 = 1.
  PythagoreanPair(Rat x, Rat r);
  Rat x, r;
  std::string str() const { return "(" + x.str() + "," + r.str() + ")"; }
};

struct ParamGrid {
  std::size_t q_lmax = 5;
  std::size_t classical_lmax = 6;
  std::vector<QParams> qparams{QParams(Rat(1, 2), Rat(2, 3)), QParams(Rat(2, 3), Rat(1, 2)),
                               QParams(Rat(1, 2), Rat(1, 3))};
  std::vector<Rat> alphas{Rat(0), Rat(1, 2), Rat(1), Rat(3, 2), Rat(1, 4)};
};

ParamList qparams_list(const QParams& qp);

// Dualities

CheckReport check_duality_cqu(const QParams& qp, std::size_t mmax, const CheckOptions& opt = {});
CheckReport check_duality_krawtchouk(const KrawtchoukParams& kp, const CheckOptions& opt = {});
CheckReport check_duality_hahn(const HahnParams& hp, const CheckOptions& opt = {});
CheckReport check_duality_racah(const RacahParams& rp, const CheckOptions& opt = {});
CheckReport check_duality_wilson(const WilsonParams& wp, std::size_t nmax, const CheckOptions& opt = {});

// Discrete orthogonality. Throw NonPositiveWeight for a weight <= 0.

CheckReport check_orthogonality_krawtchouk(const KrawtchoukParams& kp, const CheckOptions& opt = {});
/// Off-diagonal vanishing only.
CheckReport check_orthogonality_hahn(const HahnParams& hp, const CheckOptions& opt = {});
CheckReport check_orthogonality_racah(const RacahParams& rp, const CheckOptions& opt = {});
CheckReport check_orthogonality_qracah(const QRacahParams& qrp, const CheckOptions& opt = {});

// Structural formulas for the q-ultraspherical and q-Racah families

CheckReport check_leading_coefficient(const QParams& qp, std::size_t nmax, const CheckOptions& opt = {});
CheckReport check_weight_ratio(const QParams& qp, const CheckOptions& opt = {});
CheckReport check_difference_formula(const QParams& qp, std::size_t nmax, const CheckOptions& opt = {});
CheckReport check_qracah_at_N(const QRacahParams& qrp, const CheckOptions& opt = {});
CheckReport check_backward_shift(const QRacahParams& qrp, std::size_t nmax, const CheckOptions& opt = {});

// Theorem 5.1

enum class SMode { brute, closed };
SymmetricLaurent compute_S(std::size_t k, std::size_t l, std::size_t m, const QParams& qp, SMode mode);
/// All 0 <= k <= m at one (l, m), plus the k = 0 reduction to h_0 R_l R_m.
CheckReport check_theorem_5_1(const QParams& qp, std::size_t l, std::size_t m, const CheckOptions& opt = {});
/// Every 0 <= k <= m <= l <= grid.q_lmax for every QParams of the grid.
CheckReport check_theorem_5_1(const ParamGrid& grid, const CheckOptions& opt = {});

// Linearization

CheckReport check_linearization_q(const QParams& qp, std::size_t l, std::size_t m, const CheckOptions& opt = {});
CheckReport check_linearization_classical(const Rat& alpha, std::size_t l, std::size_t m,
                                          const CheckOptions& opt = {});
CheckReport check_linearization_legendre(std::size_t l, std::size_t m, const CheckOptions& opt = {});

// Dual addition

enum class DualMode { direct, inversion };
/// k-th term of the dual addition expansion without its q-Racah factor.
SymmetricLaurent dual_addition_term(const QParams& qp, std::size_t l, std::size_t m, std::size_t k);
CheckReport check_dual_addition_q(const QParams& qp, std::size_t l, std::size_t m, std::size_t j, DualMode mode,
                                  const CheckOptions& opt = {});
CheckReport check_dual_addition_classical(const Rat& alpha, std::size_t l, std::size_t m, std::size_t j,
                                          const CheckOptions& opt = {});

// Addition and product formulas

/// u^{-k}(a^2u^2; q)_k v^{-k}(a^2v^2; q)_k R_k[z; auv, a/(uv), au/v, av/u | q]
/// with the (a^2u^2, a^2v^2; q) factors cancelled termwise.
LaurentPoly addition_kernel(const QParams& qp, std::size_t k, const Rat& u, const Rat& v);
CheckReport check_addition_q(const QParams& qp, std::size_t n, const Rat& u, const Rat& v,
                             const CheckOptions& opt = {});
/// The t-polynomial form and the z-polynomial rewriting.
CheckReport check_addition_classical(const Rat& alpha, std::size_t n, const PythagoreanPair& x,
                                     const PythagoreanPair& y, const CheckOptions& opt = {});
CheckReport check_addition_legendre(std::size_t n, const PythagoreanPair& t1, const PythagoreanPair& t2,
                                    const PythagoreanPair& phi, const CheckOptions& opt = {});
CheckReport check_restriction_equivalence(const QParams& qp, std::size_t l, std::size_t m, std::size_t j,
                                          std::size_t n, const CheckOptions& opt = {});
/// Moments of (1-t^2)^{alpha-1/2}, normalized so mu_0 = 1.
std::vector<Rat> ultraspherical_moments(const Rat& alpha, std::size_t count);
CheckReport check_product_formula_classical(const Rat& alpha, std::size_t n, const PythagoreanPair& x,
                                            const PythagoreanPair& y, const CheckOptions& opt = {});

/// Legendre linearization coefficient as stated for P_l P_m.
Rat legendre_linearization_coefficient(std::size_t l, std::size_t m, std::size_t j);

}  // namespace askey
