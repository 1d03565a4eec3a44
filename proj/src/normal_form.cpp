#include "brieskorn/normal_form.hpp"

#include <map>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

// Working polynomial ordered by the block ordering, lead at begin(). Keeps
// count of the terms outside <s>^{-K} so membership is O(1).
class WorkPoly {
 public:
  WorkPoly(const OrderingSpec& ord, std::uint64_t s_floor, std::optional<std::uint64_t> s_trunc)
      : terms_(Descending{&ord}), s_floor_(s_floor), s_trunc_(s_trunc) {}

  void add(const Monomial& mono, const Rational& coeff) {
    if (coeff == 0) return;
    const std::uint64_t order = mono.s_order();
    if (s_trunc_ && order >= *s_trunc_) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (inserted) {
      if (order < s_floor_) ++low_;
      return;
    }
    it->second += coeff;
    if (it->second == 0) erase(it);
  }

  using Iter = std::map<Monomial, Rational, Descending>::iterator;

  void erase(Iter it) {
    if (it->first.s_order() < s_floor_) --low_;
    terms_.erase(it);
  }

  bool empty() const { return terms_.empty(); }
  Iter lead() { return terms_.begin(); }
  bool in_s_power() const { return low_ == 0; }

  void move_all_to(SparsePoly& dst) {
    for (const auto& [m, c] : terms_) dst.add_term(m, c);
    terms_.clear();
    low_ = 0;
  }

  /// Moves the leading s-slice (contiguous in block order) to dst.
  void move_lead_slice_to(SparsePoly& dst) {
    const Exponents s = terms_.begin()->first.s;
    while (!terms_.empty() && terms_.begin()->first.s == s) {
      dst.add_term(terms_.begin()->first, terms_.begin()->second);
      erase(terms_.begin());
    }
  }

 private:
  std::map<Monomial, Rational, Descending> terms_;
  std::uint64_t s_floor_;
  std::optional<std::uint64_t> s_trunc_;
  std::size_t low_ = 0;
};

// Emits coeff * op(mono) term by term, without temporaries.
template <typename Emit>
void apply_to_term(const DiffOp& op, const Monomial& mono, const Rational& coeff, Emit&& emit) {
  for (const auto& [beta, cpoly] : op.terms()) {
    if (!divides(beta, mono.x)) continue;
    Rational factor = coeff;
    Monomial rest = mono;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      for (std::uint32_t k = 0; k < beta[i]; ++k) factor *= mono.x[i] - k;
      rest.x[i] -= beta[i];
    }
    for (const auto& [cm, cc] : cpoly) emit(rest * cm, factor * cc);
  }
}

std::vector<SparsePoly> certificate_of(const FamilyData& fam, const std::vector<SparsePoly>& a,
                                       std::optional<std::uint64_t> s_trunc) {
  std::vector<SparsePoly> cert(fam.num_generators());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    for (std::size_t i = 0; i < cert.size(); ++i) {
      if (!fam.G[k].u[i].is_zero()) cert[i] += fam.G[k].u[i] * a[k];
    }
  }
  if (s_trunc) {
    for (auto& c : cert) c = truncate(c, *s_trunc);
  }
  return cert;
}

}  // namespace

NFOutcome nf_step(const SparsePoly& p, std::int64_t K, const FamilyData& fam,
                  std::optional<std::uint64_t> s_trunc) {
  if (K > 0) throw Error("filtration level K must be <= 0");
  const OrderingSpec& ord = fam.ord;
  const auto s_floor = static_cast<std::uint64_t>(-K);
  const Rational scaled_nk = fam.n_k(K) * ord.scale();
  const std::size_t l = fam.G.size();
  const std::size_t num_s = fam.num_s();

  std::vector<Rational> lead_coeff(l);
  for (std::size_t k = 0; k < l; ++k) lead_coeff[k] = fam.sb.g[k].coefficient(fam.sb.staircase[k]);
  std::vector<Monomial> s_unit;
  for (std::size_t j = 0; j < num_s; ++j) s_unit.push_back(Monomial::s_var(num_s, fam.num_x(), j));

  NFOutcome out;
  out.a.resize(l);
  WorkPoly work(ord, s_floor, s_trunc);
  for (const auto& [m, c] : p) work.add(m, c);

  while (!work.empty()) {
    if (work.in_s_power()) {
      work.move_all_to(out.q);
      break;
    }
    auto lead = work.lead();
    if (Rational(ord.scaled_degree(lead->first)) < scaled_nk ||
        lead->first.s_order() >= s_floor) {
      work.move_lead_slice_to(out.q);
      if (work.empty()) break;
      lead = work.lead();
    }

    std::size_t j = 0;
    while (j < l && !divides(fam.sb.staircase[j].x, lead->first.x)) ++j;
    if (j == l) {
      out.r.add_term(lead->first, lead->second);
      work.erase(lead);
      continue;
    }

    // r <- r - c g_j + sum_j' s_j' d^j'(c u_j)
    Monomial shift = lead->first;
    for (std::size_t i = 0; i < shift.x.size(); ++i) shift.x[i] -= fam.sb.staircase[j].x[i];
    const Rational c = lead->second / lead_coeff[j];
    out.a[j].add_term(shift, c);

    const auto emit = [&](const Monomial& mono, const Rational& coeff) { work.add(mono, coeff); };
    for (const auto& [gm, gc] : fam.G[j].g) work.add(gm * shift, -c * gc);
    for (std::size_t i = 0; i < fam.num_generators(); ++i) {
      const SparsePoly& u = fam.G[j].u[i];
      if (u.is_zero()) continue;
      for (std::size_t js = 0; js < num_s; ++js) {
        const DiffOp& op = fam.D.rows[js][i];
        if (op.is_zero()) continue;
        for (const auto& [um, uc] : u) {
          apply_to_term(op, shift * um * s_unit[js], c * uc, emit);
        }
      }
    }
  }
  out.certificate = certificate_of(fam, out.a, s_trunc);
  return out;
}

NormalFormResult normal_form(const SparsePoly& p, const FamilyData& fam, std::uint64_t s_trunc,
                             std::span<const std::int64_t> levels) {
  if (s_trunc == 0) throw Error("s truncation order must be positive");
  if (levels.empty() || levels.back() > -static_cast<std::int64_t>(s_trunc)) {
    throw Error("level sequence must reach -s_trunc");
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] > 0 || (i > 0 && levels[i] >= levels[i - 1])) {
      throw Error("level sequence must be strictly decreasing and non-positive");
    }
  }
  NormalFormResult out;
  out.a.resize(fam.G.size());
  SparsePoly current = truncate(p, s_trunc);
  for (std::int64_t K : levels) {
    NFOutcome step = nf_step(current, K, fam, s_trunc);
    out.r += step.r;
    for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] += step.a[k];
    current = std::move(step.q);
    if (current.is_zero()) break;
  }
  out.r = truncate(out.r, s_trunc);
  for (auto& ak : out.a) ak = truncate(ak, s_trunc);
  out.certificate = certificate_of(fam, out.a, s_trunc);
  out.residual = std::move(current);
  return out;
}

NormalFormResult normal_form(const SparsePoly& p, const FamilyData& fam, std::uint64_t s_trunc,
                             std::int64_t k_step) {
  if (k_step <= 0) throw Error("level step must be positive");
  const auto last = -static_cast<std::int64_t>(s_trunc);
  std::vector<std::int64_t> levels;
  for (std::int64_t K = -k_step; K > last; K -= k_step) levels.push_back(K);
  levels.push_back(last);
  return normal_form(p, fam, s_trunc, levels);
}

}  // namespace brieskorn
