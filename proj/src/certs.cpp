#include "dmod/certs.hpp"

#include "dmod/errors.hpp"

namespace dmod {

namespace {

WeylOp y_power(unsigned p) { return WeylOp::monomial({p, 0, 0, 0}); }

WeylOp shifted_euler_y(const Scalar& gamma) {
  return WeylOp::monomial({1, 0, 0, 1}) - WeylOp(gamma);
}

}  // namespace

bool IdentityStep::holds() const {
  WeylOp sum;
  for (const auto& [left, right] : products) sum += left * right;
  return sum == result;
}

std::string IdentityStep::to_string() const {
  std::string out;
  for (const auto& [left, right] : products) {
    if (!out.empty()) out += " + ";
    out += "(" + left.to_string() + ")*(" + right.to_string() + ")";
  }
  out += " = " + result.to_string();
  if (!note.empty()) out += "    [" + note + "]";
  return out;
}

bool MembershipChain::verify() const {
  for (const IdentityStep& s : steps)
    if (!s.holds()) return false;
  if (conclusion == ChainConclusion::IdealIsFull) {
    if (generators.size() != 1 || !(generators[0] == WeylOp(Scalar(1)))) return false;
    if (steps.empty()) return k == 0;
    const WeylOp& last = steps.back().result;
    return last.terms().size() == 1 && last.terms().begin()->first == WeylMonomial{};
  }
  // Reduced: stopped at y^p with p + gamma = 0.
  if (!gamma.is_integer() || sgn(gamma.re()) >= 0) return false;
  const unsigned p = static_cast<unsigned>(mpz_class(-gamma.to_integer()).get_ui());
  if (p > k || steps.size() != k - p) return false;
  return generators.size() == 2 && generators[0] == shifted_euler_y(gamma) &&
         generators[1] == y_power(p);
}

std::string MembershipChain::to_string() const {
  std::string out = "J = A1*(" + shifted_euler_y(gamma).to_string() + ") + A1*(" +
                    y_power(k).to_string() + ")\n";
  for (const IdentityStep& s : steps) out += "  " + s.to_string() + "\n";
  out += std::string("  => ") + dmod::to_string(conclusion) + ":";
  for (const WeylOp& g : generators) out += " [" + g.to_string() + "]";
  return out + "\n";
}

MembershipChain reduce_power_chain(const Scalar& gamma, unsigned k) {
  MembershipChain chain;
  chain.gamma = gamma;
  chain.k = k;
  const WeylOp euler = shifted_euler_y(gamma);
  unsigned p = k;
  while (p > 0 && !(Scalar(static_cast<long>(p)) + gamma).is_zero()) {
    IdentityStep step;
    step.products = {{WeylOp::dy(), y_power(p)}, {-y_power(p - 1), euler}};
    const Scalar factor = Scalar(static_cast<long>(p)) + gamma;
    step.result = y_power(p - 1) * factor;
    step.note = "p=" + std::to_string(p) + ", p+gamma=" + factor.to_string() + " != 0";
    if (!step.holds()) throw Error("chains step failed to verify: " + step.to_string());
    chain.steps.push_back(std::move(step));
    --p;
  }
  if (p == 0) {
    chain.conclusion = ChainConclusion::IdealIsFull;
    chain.generators = {WeylOp(Scalar(1))};
  } else {
    chain.conclusion = ChainConclusion::ReducedGenerators;
    chain.generators = {euler, y_power(p)};
  }
  return chain;
}

bool IdealSimplification::verify() const {
  for (const IdentityStep& s : steps)
    if (!s.holds()) return false;
  return true;
}

IdealSimplification simplify_ideal(const AnnPair& ann) {
  if (ann.m < 2 || ann.beta.size() != ann.m)
    throw PreconditionError("simplify_ideal needs a normalized arrangement with m >= 2");
  const Scalar& beta1 = ann.beta[0];
  if ((beta1 + Scalar(1)).is_zero())
    throw PreconditionError("simplify_ideal requires beta_1 + 1 != 0");

  Scalar total = 0;
  Scalar tail_sum = 0;
  for (std::size_t i = 0; i < ann.m; ++i) {
    total += ann.beta[i];
    if (i >= 1) tail_sum += ann.beta[i];
  }
  const unsigned top = static_cast<unsigned>(ann.m);

  IdealSimplification out;
  for (const auto& [mono, c] : ann.Q.terms()) {
    if (mono.k != 0) throw PreconditionError("Q must not involve Dx");
    if (mono.j > 0)
      out.G.add_term({mono.i, mono.j - 1, mono.k, mono.l}, c);
    else
      out.tail.add_term(mono, c);
  }
  const WeylOp expected_tail =
      WeylOp::monomial({top - 1, 0, 0, 1}) - y_power(top - 2) * tail_sum;
  if (!(out.tail == expected_tail))
    throw Error("Q restricted to x = 0 is " + out.tail.to_string() + ", expected " +
                expected_tail.to_string());

  const WeylOp euler = shifted_euler_y(total + Scalar(1));
  IdentityStep split;
  split.products = {{WeylOp(Scalar(1)), ann.Q}, {-out.G, WeylOp::x()}};
  split.result = out.tail;
  split.note = "Q = G*x + tail";
  IdentityStep euler_step;
  euler_step.products = {{WeylOp(Scalar(1)), ann.P}, {-WeylOp::dx(), WeylOp::x()}};
  euler_step.result = euler;
  euler_step.note = "P = Dx*x + y*Dy - (|beta|+1)";
  IdentityStep power_step;
  power_step.products = {{WeylOp(Scalar(1)), out.tail}, {-y_power(top - 2), euler}};
  power_step.result = y_power(top - 2) * (beta1 + Scalar(1));
  power_step.note = "beta_1 + 1 = " + (beta1 + Scalar(1)).to_string() + " != 0";
  out.steps = {std::move(split), std::move(euler_step), std::move(power_step)};
  if (!out.verify()) throw Error("ideal simplification identities failed to verify");

  out.generators = {WeylOp::x(), euler, y_power(top - 2)};
  return out;
}

QuotientClass quotient_class(const Scalar& beta_sum, std::size_t m) {
  if (m < 2) throw PreconditionError("quotient_class needs m >= 2");
  const Scalar shifted = beta_sum + Scalar(1);
  if (!shifted.is_integer()) return QuotientClass::Zero;
  const mpz_class v = shifted.to_integer();
  const mpz_class lower = -static_cast<long>(m - 2);
  return (v >= lower && v <= -1) ? QuotientClass::NonzeroSimple : QuotientClass::Zero;
}

QuotientClass quotient_class_via_certificates(const AnnPair& ann) {
  const IdealSimplification simplified = simplify_ideal(ann);
  Scalar total = 0;
  for (const Scalar& b : ann.beta) total += b;
  const MembershipChain chain = reduce_power_chain(total + Scalar(1), static_cast<unsigned>(ann.m - 2));
  if (!simplified.verify() || !chain.verify()) throw Error("certificate failed to verify");
  // A2/J is the external product of C<x,Dx>/(x) with C<y,Dy>/J_y; the first
  // factor is simple and nonzero.
  return chain.conclusion == ChainConclusion::IdealIsFull ? QuotientClass::Zero
                                                          : QuotientClass::NonzeroSimple;
}

const char* to_string(ChainConclusion c) {
  return c == ChainConclusion::IdealIsFull ? "IdealIsFull" : "ReducedGenerators";
}

const char* to_string(QuotientClass c) {
  return c == QuotientClass::Zero ? "Zero" : "NonzeroSimple";
}

}  // namespace dmod
