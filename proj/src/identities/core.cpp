#include <set>

#include "askey/errors.hpp"
#include "askey/identities.hpp"

namespace askey {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::error: return "error";
  }
  return "error";
}

std::string CheckReport::params_text() const {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ' ';
    out += k + "=" + v;
  }
  return out;
}

bool Comparator::mutate_now() {
  const bool hit = mutation_ && mutation_->index == count_;
  ++count_;
  return hit;
}

void Comparator::fail(Witness w, std::string residual) {
  if (witness_) return;
  witness_ = std::move(w);
  residual_ = std::move(residual);
}

bool Comparator::equal(const std::string& location, const Rat& lhs, Rat rhs) {
  if (mutate_now()) rhs += mutation_->delta;
  if (lhs == rhs) return true;
  fail({location, lhs.str(), rhs.str()}, (lhs - rhs).str());
  return false;
}

bool Comparator::equal(const std::string& location, const LaurentPoly& lhs, LaurentPoly rhs) {
  if (mutate_now()) rhs.add_term(rhs.max_exponent(), mutation_->delta);
  if (lhs == rhs) return true;
  std::set<long> exps;
  for (const auto& [e, c] : lhs.terms()) exps.insert(e);
  for (const auto& [e, c] : rhs.terms()) exps.insert(e);
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    const Rat a = lhs.coeff(*it), b = rhs.coeff(*it);
    if (a != b) {
      fail({location + " z^" + std::to_string(*it), a.str(), b.str()}, (lhs - rhs).str());
      break;
    }
  }
  return false;
}

bool Comparator::equal(const std::string& location, const Poly& lhs, Poly rhs) {
  if (mutate_now()) {
    std::vector<Rat> c = rhs.coeffs();
    if (c.empty()) c.emplace_back(0);
    c.back() += mutation_->delta;
    rhs = Poly(std::move(c));
  }
  if (lhs == rhs) return true;
  const std::size_t top = std::max(lhs.size(), rhs.size());
  for (std::size_t i = top; i-- > 0;) {
    if (lhs.coeff(i) != rhs.coeff(i)) {
      fail({location + " x^" + std::to_string(i), lhs.coeff(i).str(), rhs.coeff(i).str()}, (lhs - rhs).str());
      break;
    }
  }
  return false;
}

bool Comparator::nonnegative(const std::string& location, Rat value) {
  if (mutate_now()) value -= value.abs() + mutation_->delta.abs() + Rat(1);
  if (value.sign() >= 0) return true;
  fail({location + " >= 0", value.str(), "0"}, value.str());
  return false;
}

CheckReport Comparator::report(std::string id, ParamList params) const {
  CheckReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.comparisons = count_;
  r.verdict = witness_ ? Verdict::fail : Verdict::pass;
  r.witness = witness_;
  r.residual = residual_;
  return r;
}

PythagoreanPair::PythagoreanPair(Rat x_, Rat r_) : x(std::move(x_)), r(std::move(r_)) {
  if (x * x + r * r != Rat(1)) {
    throw InadmissiblePoint("not a Pythagorean pair: (" + x.str() + ", " + r.str() + ")");
  }
}

ParamList qparams_list(const QParams& qp) { return {{"t", qp.t().str()}, {"s", qp.s().str()}}; }

}  // namespace askey
