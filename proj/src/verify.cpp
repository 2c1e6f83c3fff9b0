#include "dmod/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "dmod/action.hpp"
#include "dmod/arrangement.hpp"
#include "dmod/certs.hpp"
#include "dmod/decomp.hpp"
#include "dmod/errors.hpp"
#include "dmod/random.hpp"
#include "dmod/weyl.hpp"

namespace dmod::verify {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  // Records one check; keeps the first failing witness.
  void check(bool ok, const std::function<std::string()>& witness) {
    ++result_.checks;
    if (ok || !result_.passed) {
      if (!ok) result_.passed = false;
      return;
    }
    result_.passed = false;
    result_.witness = witness();
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string beta_text(const std::vector<Scalar>& beta) {
  std::string out = "(";
  for (std::size_t i = 0; i < beta.size(); ++i) out += (i ? ", " : "") + beta[i].to_string();
  return out + ")";
}

std::vector<LinearForm> forms_from_slopes(const std::vector<Scalar>& slopes) {
  std::vector<LinearForm> forms{LinearForm(1, 0), LinearForm(0, 1)};
  for (const Scalar& c : slopes) forms.emplace_back(c, 1);
  return forms;
}

NormalizedArrangement random_normalized(Rng& rng, std::size_t m, bool non_integer_beta) {
  std::vector<Scalar> beta;
  for (std::size_t i = 0; i < m; ++i)
    beta.push_back(non_integer_beta ? rng.non_integer(12, 7) : rng.gaussian(12, 7));
  return NormalizedArrangement::from_slopes(rng.slopes(m, 6, 5), std::move(beta));
}

SuiteResult annihilators(const Options& opt) {
  Recorder rec("annihilators");
  Rng rng(opt.seed);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 2 + rng.below(5);
    const NormalizedArrangement arr = random_normalized(rng, m, false);
    AnnPair ann = build_annihilators(arr);
    if (opt.corrupt_q) {
      const WeylMonomial lowest = ann.Q.terms().begin()->first;
      ann.Q.add_term(lowest, Scalar(1));
    }
    const AnnihilatorCheck check = verify_annihilators(ann, arr);
    rec.check(check.ok, [&] {
      TwistedModule module(arr.as_arrangement());
      return "m=" + std::to_string(m) + " beta=" + beta_text(arr.beta()) +
             " Q=" + ann.Q.to_string() + " residual P: " + module.to_string(check.p_residual) +
             " residual Q: " + module.to_string(check.q_residual);
    });
  }
  return rec.take();
}

SuiteResult division(const Options& opt) {
  Recorder rec("division");
  Rng rng(opt.seed);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 3 + rng.below(3);
    const AnnPair ann = build_annihilators(random_normalized(rng, m, false));
    const WeylOp f = rng.weyl_op(6, 6);
    const NormalForm nf = normal_form(f, ann);
    const bool rebuilt = nf.s1 * ann.P + nf.s2 * ann.Q + nf.remainder == f;
    const bool shape = std::all_of(nf.remainder.terms().begin(), nf.remainder.terms().end(),
                                   [&](const auto& t) { return in_remainder_space(t.first, m); });
    rec.check(rebuilt && shape, [&] {
      return "m=" + std::to_string(m) + " F=" + f.to_string() + " R=" + nf.remainder.to_string();
    });
  }
  return rec.take();
}

SuiteResult remainders(const Options& opt) {
  Recorder rec("remainders");
  Rng rng(opt.seed);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 3 + rng.below(3);
    const AnnPair ann = build_annihilators(random_normalized(rng, m, false));
    const WeylOp f = weight_component(rng.weyl_op(6, 12), 0);
    const WeylOp r = normal_form(f, ann).remainder;
    rec.check(is_homogeneous(r, 0) && in_N0_span(r, m), [&] {
      return "m=" + std::to_string(m) + " F=" + f.to_string() + " R=" + r.to_string();
    });
  }
  return rec.take();
}

SuiteResult weight_zero(const Options& opt) {
  Recorder rec("weight_zero");
  Rng rng(opt.seed);
  const std::size_t m = 4;
  const auto gens = weight_zero_generators(m, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const NormalizedArrangement arr = random_normalized(rng, m, true);
    WeylOp u;
    while (u.is_zero()) {
      for (const WeylOp& g : gens)
        if (rng.below(3) == 0) u += g * Scalar(rng.nonzero_rational(5, 3));
    }
    TwistedModule module(arr.as_arrangement());
    const TwistedElement image = module.apply(u, module.generator_element());
    rec.check(!image.is_zero(), [&] {
      return "beta=" + beta_text(arr.beta()) + " U=" + u.to_string() + " kills alpha^beta";
    });
  }
  return rec.take();
}

SuiteResult chains(const Options&) {
  Recorder rec("chains");
  for (long twice = -12; twice <= 12; ++twice) {
    const Scalar gamma = Scalar::fraction(twice, 2);
    for (unsigned k = 0; k <= 6; ++k) {
      const MembershipChain chain = reduce_power_chain(gamma, k);
      const bool in_range = gamma.is_integer() && twice < 0 && -twice / 2 <= static_cast<long>(k);
      const ChainConclusion expected =
          in_range ? ChainConclusion::ReducedGenerators : ChainConclusion::IdealIsFull;
      rec.check(chain.verify() && chain.conclusion == expected, [&] { return chain.to_string(); });
    }
  }
  return rec.take();
}

SuiteResult quotients(const Options&) {
  Recorder rec("quotients");
  std::vector<Scalar> sums;
  for (long s = -6; s <= 2; ++s) sums.emplace_back(s);
  sums.push_back(Scalar::fraction(1, 2));
  for (std::size_t m = 2; m <= 6; ++m) {
    for (const Scalar& sum : sums) {
      // beta_1 = 1/2, the rest carries the prescribed sum.
      std::vector<Scalar> beta(m, Scalar(0));
      beta[0] = Scalar::fraction(1, 2);
      beta[1] = sum - beta[0];
      std::vector<Scalar> slopes;
      for (std::size_t s = 2; s < m; ++s) slopes.emplace_back(static_cast<long>(s - 1));
      const AnnPair ann = build_annihilators(slopes, beta);
      const QuotientClass direct = quotient_class(sum, m);
      const QuotientClass composed = quotient_class_via_certificates(ann);
      rec.check(direct == composed, [&] {
        return "m=" + std::to_string(m) + " |beta|=" + sum.to_string() + " direct=" +
               to_string(direct) + " composed=" + to_string(composed);
      });
    }
  }
  return rec.take();
}

SuiteResult crosscheck(const Options&) {
  Recorder rec("crosscheck");
  const std::vector<Scalar> grid{Scalar(0), Scalar::fraction(1, 2)};
  for (std::size_t m = 1; m <= 2; ++m) {
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
      Arrangement arr;
      for (std::size_t i = 0; i < m; ++i) {
        arr.forms.push_back(i == 0 ? LinearForm(1, 0) : LinearForm(0, 1));
        arr.beta.push_back(grid[idx[i]]);
      }
      const DecompositionReport report = count_factors(arr);
      rec.check(report.count == normal_crossings_count(report.k, m, 2), [&] {
        return "beta=" + beta_text(arr.beta) + " count=" + std::to_string(report.count);
      });
      std::size_t pos = 0;
      while (pos < m && ++idx[pos] == grid.size()) idx[pos++] = 0;
      if (pos == m) break;
    }
  }
  return rec.take();
}

std::vector<FactorSupport> sorted(std::vector<FactorSupport> v) {
  std::sort(v.begin(), v.end());
  return v;
}

SuiteResult invariance(const Options& opt) {
  Recorder rec("invariance");
  Rng rng(opt.seed);
  const std::vector<Scalar> values{Scalar(0), Scalar(1), Scalar::fraction(1, 2),
                                   Scalar::fraction(1, 3), Scalar::fraction(-5, 2)};
  auto random_arrangement = [&] {
    const std::size_t m = 2 + rng.below(5);
    Arrangement arr{forms_from_slopes(rng.slopes(m, 6, 5)), {}};
    for (std::size_t i = 0; i < m; ++i) arr.beta.push_back(values[rng.below(values.size())]);
    return arr;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const Arrangement arr = random_arrangement();
    const Arrangement moved = change_coordinates(arr, rng.invertible_matrix());
    const DecompositionReport a = count_factors(arr);
    const DecompositionReport b = count_factors(moved);
    // The moved arrangement still normalizes and keeps its annihilators.
    const NormalizedArrangement n = normalize_coordinates(moved);
    const bool ann_ok = verify_annihilators(build_annihilators(n), n).ok;
    rec.check(a.count == b.count && sorted(a.factors) == sorted(b.factors) && ann_ok,
              [&] { return "GL2 change broke invariance for beta=" + beta_text(arr.beta); });
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Arrangement arr = random_arrangement();
    const auto perm = rng.permutation(arr.size());
    const DecompositionReport a = count_factors(arr);
    const DecompositionReport b = count_factors(permute(arr, perm));
    std::vector<FactorSupport> mapped;
    for (FactorSupport f : b.factors) {
      if (f.kind == SupportKind::Line) f.line = perm[f.line];
      mapped.push_back(f);
    }
    rec.check(a.count == b.count && sorted(a.factors) == sorted(mapped),
              [&] { return "permutation broke invariance for beta=" + beta_text(arr.beta); });
  }
  return rec.take();
}

SuiteResult structure(const Options& opt) {
  Recorder rec("structure");
  Rng rng(opt.seed);
  const WeylOp x = WeylOp::x(), y = WeylOp::y(), dx = WeylOp::dx(), dy = WeylOp::dy();
  rec.check(commutator(dx, x) == WeylOp(Scalar(1)) && commutator(dy, y) == WeylOp(Scalar(1)) &&
                commutator(dx, y).is_zero() && commutator(dy, x).is_zero() &&
                commutator(x, y).is_zero() && commutator(dx, dy).is_zero(),
            [] { return std::string("commutation relations"); });
  for (int trial = 0; trial < 200; ++trial) {
    const WeylOp a = rng.weyl_op(3, 4), b = rng.weyl_op(3, 4), c = rng.weyl_op(3, 4);
    rec.check((a * b) * c == a * (b * c), [&] {
      return "associativity: " + a.to_string() + " | " + b.to_string() + " | " + c.to_string();
    });
  }
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng.below(4);
    Arrangement arr;
    if (m == 1) {
      arr.forms = {LinearForm(Scalar(rng.nonzero_rational(3, 2)), Scalar(rng.rational(3, 2)))};
    } else {
      arr.forms = forms_from_slopes(rng.slopes(m, 6, 5));
    }
    for (std::size_t i = 0; i < m; ++i) arr.beta.push_back(rng.gaussian(9, 7));
    TwistedModule module(arr);
    const WeylOp a = rng.weyl_op(2, 3), b = rng.weyl_op(2, 3);
    std::vector<long> shifts(m);
    for (long& s : shifts) s = rng.between(-2, 2);
    const TwistedElement e = module.element(rng.poly(2, 3), shifts);
    rec.check(module.apply(a * b, e) == module.apply(a, module.apply(b, e)), [&] {
      return "module action: A=" + a.to_string() + " B=" + b.to_string() +
             " e=" + module.to_string(e);
    });
  }
  for (long k = 0; k <= 4; ++k) {
    const Scalar beta = Scalar::fraction(1, 2);
    std::vector<A1Term> f;
    for (long s = 0; s <= k; ++s) f.push_back({Scalar(s + 1), s});
    const TwistedElement got = euler_reduction_a1(f, beta);
    long factorial = 1;
    for (long t = 2; t <= k; ++t) factorial *= t;
    const TwistedModule module = a1_module(beta);
    const TwistedElement want = module.element(Poly2(Scalar((k + 1) * factorial)), {k});
    rec.check(got == want, [&] { return "euler reduction k=" + std::to_string(k); });
  }
  return rec.take();
}

using SuiteFn = SuiteResult (*)(const Options&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"annihilators", annihilators}, {"division", division},     {"remainders", remainders},
      {"weight_zero", weight_zero},           {"chains", chains},       {"quotients", quotients},
      {"crosscheck", crosscheck},     {"invariance", invariance}, {"structure", structure},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"annihilators", "division",   "remainders",
                                              "weight_zero",      "chains",    "quotients",
                                              "crosscheck",   "invariance", "structure"};
  return names;
}

SuiteResult run_suite(const std::string& name, const Options& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw PreconditionError("unknown suite \"" + name + "\"");
  return it->second(options);
}

}  // namespace dmod::verify
