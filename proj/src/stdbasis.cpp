#include "brieskorn/stdbasis.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

// Homogeneous polynomial in K[x, h] under the weighted degree
// omega(x_i) = -scaled deg(x_i), omega(h) = 1. Only x-exponents are stored;
// the h-exponent of a term is degree - omega(x).
struct HomPoly {
  std::int64_t degree = 0;
  std::map<Exponents, Rational, DescendingX> terms;

  explicit HomPoly(const OrderingSpec& ord) : terms(DescendingX{&ord}) {}
};

struct HomLead {
  Exponents x;
  std::int64_t h;
  Rational coeff;
};

struct Element {
  HomPoly poly;
  std::vector<SparsePoly> cof;  // poly(h = 1) = sum_i cof[i] * f[i]
  HomLead lead;
};

class LazardBuchberger {
 public:
  LazardBuchberger(std::span<const SparsePoly> f, const OrderingSpec& ord,
                   std::size_t num_s)
      : f_(f), ord_(ord), num_s_(num_s), num_x_(ord.num_x()) {
    for (const auto& p : f_) {
      std::int64_t top = std::numeric_limits<std::int64_t>::min();
      for (const auto& [m, c] : p) top = std::max(top, ord_.scaled_x_degree(m.x));
      f_top_.push_back(top);
    }
  }

  std::vector<Element> run() {
    for (std::size_t i = 0; i < f_.size(); ++i) {
      if (f_[i].is_zero()) continue;
      HomPoly h = homogenize(f_[i]);
      std::vector<SparsePoly> cof(f_.size());
      cof[i] = SparsePoly::constant(1, num_s_, num_x_);
      reduce(h, cof);
      if (!h.terms.empty()) add(std::move(h), std::move(cof));
    }
    while (!pending_.empty()) {
      auto it = std::min_element(pending_.begin(), pending_.end(),
                                 [&](const auto& a, const auto& b) {
                                   return std::tuple(lcm_degree(a), a) <
                                          std::tuple(lcm_degree(b), b);
                                 });
      auto [i, j] = *it;
      pending_.erase(it);
      if (chain_criterion(i, j)) continue;
      auto [h, cof] = s_poly(i, j);
      reduce(h, cof);
      if (!h.terms.empty()) add(std::move(h), std::move(cof));
    }
    return std::move(basis_);
  }

 private:
  std::int64_t omega(const Exponents& x) const { return -ord_.scaled_x_degree(x); }

  HomPoly homogenize(const SparsePoly& p) const {
    HomPoly h(ord_);
    for (const auto& [m, c] : p) h.degree = std::max(h.degree, omega(m.x));
    for (const auto& [m, c] : p) h.terms.emplace(m.x, c);
    return h;
  }

  HomLead lead_of(const HomPoly& h) const {
    const auto& [x, c] = *h.terms.begin();
    return {x, h.degree - omega(x), c};
  }

  static bool lead_divides(const HomLead& a, const HomLead& b) {
    return a.h <= b.h && divides(a.x, b.x);
  }

  bool below_corner(std::int64_t scaled) const { return corner_ && scaled < *corner_; }

  // Adds coeff * x^shift * h^e * src to dst, e fixed by dst.degree. Terms
  // below the corner lie in the ideal and are dropped.
  void axpy(HomPoly& dst, const Rational& coeff, const Exponents& shift,
            const HomPoly& src) const {
    for (const auto& [x, c] : src.terms) {
      Exponents y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += shift[i];
      if (below_corner(-omega(y))) continue;
      auto [it, inserted] = dst.terms.try_emplace(y, coeff * c);
      if (!inserted) {
        it->second += coeff * c;
        if (it->second == 0) dst.terms.erase(it);
      }
    }
  }

  void axpy_cof(std::vector<SparsePoly>& dst, const Rational& coeff,
                const Exponents& shift, const std::vector<SparsePoly>& src) const {
    Monomial mono(Exponents(num_s_, 0), shift);
    for (std::size_t i = 0; i < dst.size(); ++i) {
      for (const auto& [m, c] : src[i]) {
        Monomial t = m * mono;
        // f_i * t lies entirely below the corner.
        if (below_corner(ord_.scaled_x_degree(t.x) + f_top_[i])) continue;
        dst[i].add_term(t, coeff * c);
      }
    }
  }

  // Drops the tail below the corner; it sits at the end in local order.
  void prune(HomPoly& h) const {
    while (!h.terms.empty() && below_corner(-omega(std::prev(h.terms.end())->first))) {
      h.terms.erase(std::prev(h.terms.end()));
    }
  }

  void reduce(HomPoly& h, std::vector<SparsePoly>& cof) const {
    while (true) {
      prune(h);
      if (h.terms.empty()) return;
      HomLead lead = lead_of(h);
      auto by = std::find_if(basis_.begin(), basis_.end(), [&](const Element& e) {
        return lead_divides(e.lead, lead);
      });
      if (by == basis_.end()) return;
      Exponents shift = lead.x;
      for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= by->lead.x[i];
      Rational factor = -lead.coeff / by->lead.coeff;
      axpy(h, factor, shift, by->poly);
      axpy_cof(cof, factor, shift, by->cof);
    }
  }

  std::pair<Exponents, std::int64_t> lcm_lead(std::size_t i, std::size_t j) const {
    const HomLead& a = basis_[i].lead;
    const HomLead& b = basis_[j].lead;
    Exponents x = a.x;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = std::max(x[k], b.x[k]);
    return {x, std::max(a.h, b.h)};
  }

  std::int64_t lcm_degree(const std::pair<std::size_t, std::size_t>& p) const {
    auto [x, h] = lcm_lead(p.first, p.second);
    return omega(x) + h;
  }

  bool coprime_leads(std::size_t i, std::size_t j) const {
    const HomLead& a = basis_[i].lead;
    const HomLead& b = basis_[j].lead;
    if (a.h != 0 && b.h != 0) return false;
    for (std::size_t k = 0; k < a.x.size(); ++k) {
      if (a.x[k] != 0 && b.x[k] != 0) return false;
    }
    return true;
  }

  // Buchberger's second criterion: some lead_k divides lcm(lead_i, lead_j)
  // and both (i, k) and (j, k) have already been treated.
  bool chain_criterion(std::size_t i, std::size_t j) const {
    auto [x, h] = lcm_lead(i, j);
    HomLead l{x, h, 0};
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == i || k == j || !lead_divides(basis_[k].lead, l)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::pair(std::min(a, b), std::max(a, b));
      };
      if (std::find(pending_.begin(), pending_.end(), key(i, k)) == pending_.end() &&
          std::find(pending_.begin(), pending_.end(), key(j, k)) == pending_.end()) {
        return true;
      }
    }
    return false;
  }

  std::pair<HomPoly, std::vector<SparsePoly>> s_poly(std::size_t i, std::size_t j) const {
    const Element& a = basis_[i];
    const Element& b = basis_[j];
    auto [lx, lh] = lcm_lead(i, j);
    Rational gamma = rational_gcd(a.lead.coeff, b.lead.coeff);
    Rational ca = b.lead.coeff / gamma;
    Rational cb = -a.lead.coeff / gamma;
    Exponents sa = lx;
    Exponents sb = lx;
    for (std::size_t k = 0; k < lx.size(); ++k) {
      sa[k] -= a.lead.x[k];
      sb[k] -= b.lead.x[k];
    }
    HomPoly h(ord_);
    h.degree = omega(lx) + lh;
    axpy(h, ca, sa, a.poly);
    axpy(h, cb, sb, b.poly);
    std::vector<SparsePoly> cof(f_.size());
    axpy_cof(cof, ca, sa, a.cof);
    axpy_cof(cof, cb, sb, b.cof);
    return {std::move(h), std::move(cof)};
  }

  void add(HomPoly h, std::vector<SparsePoly> cof) {
    HomLead lead = lead_of(h);
    std::size_t index = basis_.size();
    basis_.push_back(Element{std::move(h), std::move(cof), std::move(lead)});
    for (std::size_t i = 0; i < index; ++i) {
      if (!coprime_leads(i, index)) pending_.emplace_back(i, index);
    }
    update_corner();
  }

  // Once the dehomogenized leads have finite colength, every monomial of
  // degree below the whole complement lies in the leading ideal, hence in
  // the ideal itself for a local degree ordering.
  void update_corner() {
    std::vector<std::uint32_t> bound(num_x_, 0);
    for (const auto& e : basis_) {
      std::size_t support = 0, var = 0;
      for (std::size_t i = 0; i < num_x_; ++i) {
        if (e.lead.x[i] != 0) {
          ++support;
          var = i;
        }
      }
      if (support == 1 && (bound[var] == 0 || e.lead.x[var] < bound[var])) bound[var] = e.lead.x[var];
    }
    if (std::find(bound.begin(), bound.end(), 0u) != bound.end()) return;
    std::int64_t lowest = 0;
    Exponents x(num_x_, 0);
    while (true) {
      const bool in_leads = std::any_of(basis_.begin(), basis_.end(),
                                        [&](const Element& e) { return divides(e.lead.x, x); });
      if (!in_leads) lowest = std::min(lowest, ord_.scaled_x_degree(x));
      std::size_t i = 0;
      while (i < num_x_ && x[i] + 1 == bound[i]) x[i++] = 0;
      if (i == num_x_) break;
      ++x[i];
    }
    if (!corner_ || lowest > *corner_) corner_ = lowest;
  }

  std::span<const SparsePoly> f_;
  const OrderingSpec& ord_;
  std::size_t num_s_;
  std::size_t num_x_;
  std::vector<std::int64_t> f_top_;
  std::optional<std::int64_t> corner_;
  std::vector<Element> basis_;
  std::vector<std::pair<std::size_t, std::size_t>> pending_;
};

std::size_t s_dimension(std::span<const SparsePoly> f) {
  for (const auto& p : f) {
    if (!p.is_zero()) return p.begin()->first.num_s();
  }
  return 0;
}

}  // namespace

std::vector<SparsePoly> StandardBasisResult::column(std::size_t k) const {
  std::vector<SparsePoly> u;
  u.reserve(U.size());
  for (const auto& row : U) u.push_back(row[k]);
  return u;
}

StandardBasisResult standard_basis_with_transform(std::span<const SparsePoly> f,
                                                  const OrderingSpec& ord) {
  if (f.empty() || std::all_of(f.begin(), f.end(), [](const auto& p) { return p.is_zero(); })) {
    throw Error("standard basis of the zero ideal requested");
  }
  for (const auto& p : f) {
    if (!p.is_s_free()) throw Error("standard basis input must be free of s");
    for (const auto& [m, c] : p) {
      if (m.num_x() != ord.num_x()) throw DimensionMismatch("input does not match x-variables");
    }
  }
  const std::size_t num_s = s_dimension(f);
  std::vector<Element> elements = LazardBuchberger(f, ord, num_s).run();

  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ord.compare_x(elements[a].lead.x, elements[b].lead.x) > 0;
  });

  StandardBasisResult result;
  result.U.assign(f.size(), {});
  for (std::size_t idx : order) {
    const Element& e = elements[idx];
    bool redundant = std::any_of(result.staircase.begin(), result.staircase.end(),
                                 [&](const Monomial& lead) { return divides(lead.x, e.lead.x); });
    if (redundant) continue;
    // Recomputed from the cofactors so that g = f U holds exactly even where
    // the tail was cut at the corner; the lead is unaffected.
    SparsePoly g;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!e.cof[i].is_zero()) g += f[i] * e.cof[i];
    }
    result.staircase.emplace_back(Exponents(num_s, 0), e.lead.x);
    result.g.push_back(std::move(g));
    for (std::size_t i = 0; i < f.size(); ++i) result.U[i].push_back(e.cof[i]);
  }
  return result;
}

DivisionResult weak_normal_form(const SparsePoly& p, const StandardBasisResult& basis,
                                const OrderingSpec& ord, std::optional<Rational> degree_floor) {
  DivisionResult out;
  out.quotients.resize(basis.size());
  // Inputs are s-free, so only the x-block decides.
  auto by_x = [&ord](const Monomial& a, const Monomial& b) { return ord.compare_x(a.x, b.x) > 0; };
  std::map<Monomial, Rational, decltype(by_x)> work(by_x);
  for (const auto& [m, c] : p) work.emplace(m, c);

  std::optional<Rational> scaled_floor;
  if (degree_floor) scaled_floor = *degree_floor * ord.scale();

  while (!work.empty()) {
    auto lead = work.begin();
    if (scaled_floor && Rational(ord.scaled_x_degree(lead->first.x)) < *scaled_floor) {
      for (const auto& [m, c] : work) out.unreduced.add_term(m, c);
      break;
    }
    std::size_t j = 0;
    while (j < basis.size() && !divides(basis.staircase[j].x, lead->first.x)) ++j;
    if (j == basis.size()) {
      out.remainder.add_term(lead->first, lead->second);
      work.erase(lead);
      continue;
    }
    const Monomial shift = lead->first / basis.staircase[j];
    const Rational factor = lead->second / basis.g[j].coefficient(basis.staircase[j]);
    out.quotients[j].add_term(shift, factor);
    for (const auto& [m, c] : basis.g[j]) {
      auto [it, inserted] = work.try_emplace(m * shift, -factor * c);
      if (!inserted) {
        it->second -= factor * c;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return out;
}

MilnorData monomial_basis(const StandardBasisResult& basis, const OrderingSpec& ord) {
  const std::size_t n = ord.num_x();
  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& lead : basis.staircase) {
      bool pure = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && lead.x[k] != 0) pure = false;
      }
      if (pure && lead.x[i] > 0 && (bound[i] == 0 || lead.x[i] < bound[i])) bound[i] = lead.x[i];
    }
    if (bound[i] == 0) {
      throw NonIsolatedSingularity("no pure power of " + ord.x_vars()[i] +
                                   " among the leading monomials: the quotient is infinite");
    }
  }
  const std::size_t num_s = basis.staircase.empty() ? 0 : basis.staircase[0].num_s();

  MilnorData out;
  Exponents e(n, 0);
  while (true) {
    bool in_ideal = std::any_of(basis.staircase.begin(), basis.staircase.end(),
                                [&](const Monomial& lead) { return divides(lead.x, e); });
    if (!in_ideal) out.m.emplace_back(Exponents(num_s, 0), e);
    std::size_t i = 0;
    while (i < n && e[i] + 1 == bound[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  std::sort(out.m.begin(), out.m.end(), [&](const Monomial& a, const Monomial& b) {
    return ord.compare_x(a.x, b.x) < 0;
  });
  out.mu = out.m.size();
  return out;
}

std::vector<SparsePoly> jacobian(const SparsePoly& f, std::size_t num_x) {
  std::vector<SparsePoly> out;
  out.reserve(num_x);
  for (std::size_t i = 0; i < num_x; ++i) out.push_back(derivative(f, i));
  return out;
}

void require_critical_point(const SparsePoly& f) {
  for (const auto& [m, c] : f) {
    if (m.s_order() != 0) throw NotACriticalPoint("polynomial must not involve s");
    if (m.x_total_degree() < 2) {
      throw NotACriticalPoint("polynomial has a constant or linear term; 0 is not a critical point");
    }
  }
  if (f.is_zero()) throw NotACriticalPoint("zero polynomial");
}

std::size_t milnor_number(const SparsePoly& f, const OrderingSpec& ord) {
  require_critical_point(f);
  auto df = jacobian(f, ord.num_x());
  auto sb = standard_basis_with_transform(df, ord);
  return monomial_basis(sb, ord).mu;
}

}  // namespace brieskorn
