#ifndef PRIMDIV_ALGEBRAIC_REAL_HPP
#define PRIMDIV_ALGEBRAIC_REAL_HPP

#include <functional>
#include <memory>
#include <string>

#include "primdiv/bigfloat.hpp"

namespace primdiv {

// A real number known by a recipe rather than by one fixed approximation.
// The descriptor can be re-run at any precision, which is what the
// continued-fraction code and the guard-digit policy rely on.
class AlgebraicReal {
 public:
  using Evaluator = std::function<BigFloat(mpfr_prec_t)>;

  AlgebraicReal() = default;
  AlgebraicReal(std::string descriptor, Evaluator eval)
      : state_(std::make_shared<State>(State{std::move(descriptor), std::move(eval)})) {}

  static AlgebraicReal two_cos_2pi(long a, long n);
  static AlgebraicReal from_constant(const BigFloat& v, std::string descriptor);

  const std::string& descriptor() const { return state_->descriptor; }

  BigFloat at_bits(mpfr_prec_t prec) const { return state_->eval(prec); }
  BigFloat at_digits(long digits) const { return at_bits(BigFloat::digits_to_bits(digits)); }

  // Re-evaluates at +20 digits and checks agreement to (digits-5) digits.
  bool consistent_at(long digits) const;

 private:
  struct State {
    std::string descriptor;
    Evaluator eval;
  };
  std::shared_ptr<const State> state_;
};

}  // namespace primdiv

#endif
