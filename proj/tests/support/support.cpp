#include "support.hpp"

#include <algorithm>
#include <chrono>

namespace brieskorn::testing {

namespace {

struct Fixture {
  std::string text;
  std::vector<std::string> vars;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> f = {
      {"x^5+x^2*y^2+y^5", {"x", "y"}},
      {"x^3+y^4", {"x", "y"}},
      {"x^4+x^2*y^3+y^7", {"x", "y"}},
      {"x^2*z+y*z^2+y^3*z+x*y^4", {"x", "y", "z"}},
  };
  return f;
}

const std::vector<FamilyData>& families() {
  static const std::vector<FamilyData> fams = [] {
    std::vector<FamilyData> out;
    for (const auto& f : fixtures()) out.push_back(family_of(f.text, f.vars));
    return out;
  }();
  return fams;
}

SparsePoly random_s_poly(std::mt19937_64& rng, std::uint32_t s_bound) {
  std::uniform_int_distribution<std::uint32_t> e(0, s_bound - 1);
  SparsePoly out;
  for (int k = 0; k < 2; ++k) out.add_term(Monomial(Exponents{e(rng)}, Exponents{}), random_rational(rng));
  return out;
}

// Multiplies p by an x-free s-polynomial a.
SparsePoly scale(const SparsePoly& a, const SparsePoly& p) {
  SparsePoly out;
  for (const auto& [am, ac] : a) {
    for (const auto& [pm, pc] : p) {
      Monomial m = pm;
      m.s[0] += am.s[0];
      out.add_term(m, ac * pc);
    }
  }
  return out;
}

template <typename Check>
SuiteReport run_suite(const std::string& name, std::size_t cases, std::uint64_t seed, Check check) {
  SuiteReport report{name, cases, 0, {}};
  std::mt19937_64 rng(seed);
  const auto& fams = families();
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t which = c % fams.size();
    std::string detail;
    if (!check(rng, fams[which], detail)) {
      if (report.failures++ == 0) report.first_failure = fixtures()[which].text + ": " + detail;
    }
  }
  return report;
}

constexpr std::uint64_t kTrunc = 3;

SparsePoly input(std::mt19937_64& rng, const FamilyData& fam) {
  return random_poly(rng, fam.num_x(), 4, 7, kTrunc);
}

}  // namespace

FamilyData family_of(const std::string& text, const std::vector<std::string>& vars) {
  OrderingSpec ord = OrderingSpec::uniform(vars);
  return build_family(parse_poly(text, ord), ord);
}

Rational random_rational(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

SparsePoly random_poly(std::mt19937_64& rng, std::size_t num_x, std::size_t terms,
                       std::uint32_t x_bound, std::uint32_t s_bound) {
  std::uniform_int_distribution<std::uint32_t> xe(0, x_bound - 1);
  std::uniform_int_distribution<std::size_t> count(1, terms);
  const std::size_t num_s = s_bound > 0 ? 1 : 0;
  SparsePoly out;
  const std::size_t n = count(rng);
  for (std::size_t t = 0; t < n; ++t) {
    Exponents x(num_x, 0);
    for (auto& e : x) e = xe(rng);
    Exponents s(num_s, 0);
    if (num_s) s[0] = std::uniform_int_distribution<std::uint32_t>(0, s_bound - 1)(rng);
    out.add_term(Monomial(s, x), random_rational(rng));
  }
  return out;
}

SparsePoly random_span_element(std::mt19937_64& rng, const FamilyData& fam,
                               std::uint32_t s_bound) {
  std::uniform_int_distribution<std::size_t> pick(0, fam.mu() - 1);
  std::uniform_int_distribution<std::uint32_t> se(0, s_bound - 1);
  SparsePoly out;
  for (int t = 0; t < 4; ++t) {
    Monomial m = fam.milnor.m[pick(rng)];
    m.s[0] = se(rng);
    out.add_term(m, random_rational(rng));
  }
  return out;
}

SuiteReport idempotence_suite(std::size_t cases, std::uint64_t seed) {
  return run_suite("idempotence", cases, seed, [](auto& rng, const FamilyData& fam, std::string& d) {
    SparsePoly p = input(rng, fam);
    SparsePoly r = normal_form(p, fam, kTrunc).r;
    SparsePoly rr = normal_form(r, fam, kTrunc).r;
    if (rr == r) return true;
    d = "NF(NF(p)) != NF(p) for p = " + to_string(p, fam.ord);
    return false;
  });
}

SuiteReport linearity_suite(std::size_t cases, std::uint64_t seed) {
  return run_suite("s-linearity", cases, seed, [](auto& rng, const FamilyData& fam, std::string& d) {
    SparsePoly p = input(rng, fam);
    SparsePoly q = input(rng, fam);
    SparsePoly a = random_s_poly(rng, kTrunc);
    SparsePoly b = random_s_poly(rng, kTrunc);
    SparsePoly lhs = normal_form(scale(a, p) + scale(b, q), fam, kTrunc).r;
    SparsePoly rhs = truncate(scale(a, normal_form(p, fam, kTrunc).r) +
                                  scale(b, normal_form(q, fam, kTrunc).r),
                              kTrunc);
    if (lhs == rhs) return true;
    d = "linearity fails for p = " + to_string(p, fam.ord) + ", q = " + to_string(q, fam.ord);
    return false;
  });
}

SuiteReport section_suite(std::size_t cases, std::uint64_t seed) {
  return run_suite("section", cases, seed, [](auto& rng, const FamilyData& fam, std::string& d) {
    SparsePoly c = random_span_element(rng, fam, kTrunc + 1);
    NormalFormResult nf = normal_form(c, fam, kTrunc);
    if (nf.r == truncate(c, kTrunc)) return true;
    d = "NF moves m-span element " + to_string(c, fam.ord);
    return false;
  });
}

SuiteReport level_sequence_suite(std::size_t cases, std::uint64_t seed) {
  return run_suite("K-sequence independence", cases, seed,
                   [](auto& rng, const FamilyData& fam, std::string& d) {
    SparsePoly p = input(rng, fam);
    const std::int64_t n = 4;
    std::vector<std::int64_t> levels;
    std::bernoulli_distribution keep(0.5);
    for (std::int64_t K = -1; K > -n; --K) {
      if (keep(rng)) levels.push_back(K);
    }
    levels.push_back(-n);
    SparsePoly one = normal_form(p, fam, n, 1).r;
    SparsePoly two = normal_form(p, fam, n, 2).r;
    SparsePoly any = normal_form(p, fam, n, levels).r;
    if (one == two && one == any) return true;
    d = "level sequences disagree on " + to_string(p, fam.ord);
    return false;
  });
}

SuiteReport certificate_suite(std::size_t cases, std::uint64_t seed) {
  return run_suite("certificate soundness", cases, seed,
                   [](auto& rng, const FamilyData& fam, std::string& d) {
    SparsePoly p = input(rng, fam);
    NormalFormResult nf = normal_form(p, fam, kTrunc);
    SparsePoly rest = truncate(p - expand_certificate(fam, nf.certificate) - nf.r - nf.residual, kTrunc);
    const bool residual_ok = vk_contains(nf.residual, -static_cast<std::int64_t>(kTrunc), fam);
    if (rest.is_zero() && residual_ok) return true;
    d = "certificate does not reproduce " + to_string(p, fam.ord);
    return false;
  });
}

LatticeMatrix euler_matrix(const FamilyData& fam, const std::vector<Rational>& weights,
                           std::uint64_t s_trunc) {
  LatticeMatrix a;
  a.basis = fam.milnor.m;
  a.s_trunc = s_trunc;
  a.entries.resize(a.size() * a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    Rational e = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) e += weights[i] * (a.basis[j].x[i] + 1);
    if (s_trunc > 1) a(j, j) = SparsePoly(Monomial(Exponents{1}, Exponents{}), e);
  }
  return a;
}

double best_seconds(const std::function<void()>& fn, int repeats) {
  double best = 0;
  for (int k = 0; k < repeats; ++k) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (k == 0 || t < best) best = t;
  }
  return best;
}

}  // namespace brieskorn::testing
