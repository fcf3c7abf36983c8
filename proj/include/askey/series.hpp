#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "askey/errors.hpp"
#include "askey/rat.hpp"

namespace askey {

/// Shifted factorial (b)_k = b(b+1)...(b+k-1); 1 for k = 0.
template <class T>
T pochhammer(const T& b, std::size_t k) {
  T r(1);
  for (std::size_t i = 0; i < k; ++i) r *= b + T(static_cast<long>(i));
  return r;
}

/// q-shifted factorial (b; q)_k = (1-b)(1-qb)...(1-q^{k-1}b).
template <class T>
T qpochhammer(const T& b, const T& qbase, std::size_t k) {
  T r(1);
  T f = b;
  for (std::size_t i = 0; i < k; ++i) {
    r *= T(1) - f;
    f *= qbase;
  }
  return r;
}

/// (±a; q)_k := (a; q)_k (-a; q)_k.
template <class T>
T pm_qpochhammer(const T& a, const T& qbase, std::size_t k) {
  return qpochhammer(a, qbase, k) * qpochhammer(T(0) - a, qbase, k);
}

/// Sums term_0 + ... + term_n with term_0 = 1 and
/// term_{k+1} = term_k * num(k) / den(k).
///
/// Summation stops early when num(k) is exactly zero, so denominators past
/// the point where the series has already terminated are never evaluated.
/// Throws DenominatorVanished(k) if den(k) is zero while num(k) is not.
template <class T, class Num, class Den>
T sum_terminating(std::size_t n, Num&& num, Den&& den) {
  T total(1);
  T term(1);
  for (std::size_t k = 0; k < n; ++k) {
    T nk = num(k);
    if (nk == T(0)) break;
    T dk = den(k);
    if (dk == T(0)) throw DenominatorVanished(k);
    term *= nk;
    term /= dk;
    total += term;
  }
  return total;
}

struct UnitBase {};
struct QBase {
  Rat b;
};

/// Description of a terminating (q-)hypergeometric series.
///
/// The numerator list holds a_1..a_r including the terminating parameter
/// (-n for UnitBase, b^{-n} for QBase); for QBase the implicit (q; q)_k of
/// the standard r+1 phi r normalization is part of the definition, as is the
/// k! for UnitBase.
class HyperSeriesSpec {
public:
  /// Validates the termination parameter and every denominator factor that
  /// is reached before the series terminates. Throws std::invalid_argument
  /// for a missing terminating parameter, DenominatorVanished(k) otherwise.
  HyperSeriesSpec(std::vector<Rat> numerator, std::vector<Rat> denominator, Rat argument,
                  std::variant<UnitBase, QBase> base, std::size_t termination_index);

  const std::vector<Rat>& numerator() const { return num_; }
  const std::vector<Rat>& denominator() const { return den_; }
  const Rat& argument() const { return arg_; }
  const std::variant<UnitBase, QBase>& base() const { return base_; }
  std::size_t termination_index() const { return n_; }
  bool is_q() const { return std::holds_alternative<QBase>(base_); }

  /// Product of numerator factors at index k, including 1/(k+1) or 1/(1-q^{k+1}).
  Rat numerator_factor(std::size_t k) const;
  Rat denominator_factor(std::size_t k) const;

private:
  std::vector<Rat> num_;
  std::vector<Rat> den_;
  Rat arg_;
  std::variant<UnitBase, QBase> base_;
  std::size_t n_;
};

/// Exact sum of the series by incremental term ratios.
Rat terminating_hyper(const HyperSeriesSpec& spec);

/// Convenience builders for the two series shapes.
Rat hyper_f(std::vector<Rat> numerator, std::vector<Rat> denominator, const Rat& argument,
            std::size_t n);
Rat hyper_phi(std::vector<Rat> numerator, std::vector<Rat> denominator, const Rat& qbase,
              const Rat& argument, std::size_t n);

}  // namespace askey
