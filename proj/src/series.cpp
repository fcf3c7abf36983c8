#include "askey/series.hpp"

#include <stdexcept>

namespace askey {

namespace {

bool is_q_power_inverse(const Rat& p, const Rat& b, std::size_t n) {
  return p * pow(b, static_cast<long>(n)) == Rat(1);
}

}  // namespace

HyperSeriesSpec::HyperSeriesSpec(std::vector<Rat> numerator, std::vector<Rat> denominator,
                                 Rat argument, std::variant<UnitBase, QBase> base,
                                 std::size_t termination_index)
    : num_(std::move(numerator)),
      den_(std::move(denominator)),
      arg_(std::move(argument)),
      base_(std::move(base)),
      n_(termination_index) {
  bool found = false;
  if (const auto* qb = std::get_if<QBase>(&base_)) {
    if (qb->b <= Rat(0) || qb->b >= Rat(1)) throw std::invalid_argument("q-series base must lie in (0, 1)");
    for (const Rat& a : num_) found = found || is_q_power_inverse(a, qb->b, n_);
  } else {
    for (const Rat& a : num_) found = found || a == Rat(-static_cast<long>(n_));
  }
  if (!found) throw std::invalid_argument("series has no terminating numerator parameter for n = " + std::to_string(n_));

  for (std::size_t k = 0; k < n_; ++k) {
    if (numerator_factor(k).is_zero()) break;
    if (denominator_factor(k).is_zero()) throw DenominatorVanished(k);
  }
}

Rat HyperSeriesSpec::numerator_factor(std::size_t k) const {
  Rat r = arg_;
  if (const auto* qb = std::get_if<QBase>(&base_)) {
    const Rat qk = pow(qb->b, static_cast<long>(k));
    for (const Rat& a : num_) r *= Rat(1) - a * qk;
  } else {
    const Rat kk(static_cast<long>(k));
    for (const Rat& a : num_) r *= a + kk;
  }
  return r;
}

Rat HyperSeriesSpec::denominator_factor(std::size_t k) const {
  if (const auto* qb = std::get_if<QBase>(&base_)) {
    const Rat qk = pow(qb->b, static_cast<long>(k));
    Rat r = Rat(1) - qk * qb->b;
    for (const Rat& b : den_) r *= Rat(1) - b * qk;
    return r;
  }
  const Rat kk(static_cast<long>(k));
  Rat r = kk + Rat(1);
  for (const Rat& b : den_) r *= b + kk;
  return r;
}

Rat terminating_hyper(const HyperSeriesSpec& spec) {
  return sum_terminating<Rat>(
      spec.termination_index(), [&](std::size_t k) { return spec.numerator_factor(k); },
      [&](std::size_t k) { return spec.denominator_factor(k); });
}

Rat hyper_f(std::vector<Rat> numerator, std::vector<Rat> denominator, const Rat& argument,
            std::size_t n) {
  return terminating_hyper(
      HyperSeriesSpec(std::move(numerator), std::move(denominator), argument, UnitBase{}, n));
}

Rat hyper_phi(std::vector<Rat> numerator, std::vector<Rat> denominator, const Rat& qbase,
              const Rat& argument, std::size_t n) {
  return terminating_hyper(
      HyperSeriesSpec(std::move(numerator), std::move(denominator), argument, QBase{qbase}, n));
}

}  // namespace askey
