#include "bmseq/bounds.hpp"

#include <stdexcept>

#include "bmseq/parallel.hpp"
#include "bmseq/registry.hpp"

namespace bmseq {

namespace {

void require_w_domain(long ell, long m, const char* who) {
  if (ell < 1 || m < ell + 1)
    throw std::domain_error(std::string(who) + ": need l >= 1 and m >= l+1, got l=" +
                            std::to_string(ell) + " m=" + std::to_string(m));
}

Int ev(const BiPoly& p, long ell, long m) { return p.eval(Int(m), Int(ell)); }

}  // namespace

Int delta1_value(long ell, long m) {
  require_w_domain(ell, m, "delta1_value");
  return ev(ProofPolys::instance().delta1, ell, m);
}

QuadraticSurd w_value(long ell, long m) {
  require_w_domain(ell, m, "w_value");
  const Int L(ell), M(m);
  const Int den = 4 * M * (L * L + L);
  return QuadraticSurd(make_rat(M * (2 * M + 1) * (2 * L + 3), den), make_rat(-1, den),
                       delta1_value(ell, m));
}

Int f_value(long ell, long m) { return ev(ProofPolys::instance().f_poly, ell, m); }

std::pair<Int, QuadraticSurd> lambda_and_u(long ell, long m) {
  require_w_domain(ell, m, "lambda_and_u");
  const Int L(ell), M(m);
  const Int lam = ev(ProofPolys::instance().lambda, ell, m);
  const Int den = 2 * (M + 1) * (M - L + 1) * (M + L * L);
  QuadraticSurd u(make_rat((4 * M * M + 7 * M - 2 * L * L + 3) * (M + L * L), den),
                  make_rat(L, den), lam);
  return {lam, u};
}

QuadRoots quad_roots(long ell, long m) {
  require_w_domain(ell, m, "quad_roots");
  const Int L(ell), M(m);
  const Int den = 4 * M * (L * L + L);
  const Rat a = make_rat(M * (2 * M + 1) * (2 * L + 3), den);
  const Int d1 = delta1_value(ell, m);
  return {QuadraticSurd(a, make_rat(-1, den), d1), QuadraticSurd(a, make_rat(1, den), d1)};
}

QuadraticSurd y_root(long ell, long m) {
  require_w_domain(ell, m, "y_root");
  const Int f = f_value(ell, m);
  if (sign(f) < 0)
    throw std::domain_error("y_root: negative radicand, f_l(m) = " + f.get_str() + " at l=" +
                            std::to_string(ell) + " m=" + std::to_string(m));
  const Int L(ell), M(m);
  const Int den = 4 * M * M * (M + 1) * (M + 1 - L);
  return QuadraticSurd(make_rat(M * M * (8 * M * M + 8 * M - 4 * L * L + 3), den),
                       make_rat(1, den), f);
}

std::pair<long, long> isolate_r2(long ell) {
  if (ell < 1) throw std::domain_error("isolate_r2: need l >= 1");
  if (sign(f_value(ell, ell + 1)) < 0)
    throw std::logic_error("isolate_r2: f_l(l+1) unexpectedly negative");
  long t = ell + 1;
  while (sign(f_value(ell, t + 1)) >= 0) {
    ++t;
    if (t > 1000000) throw std::logic_error("isolate_r2: no sign change below 10^6");
  }
  return {t, t + 1};
}

std::pair<Rat, Rat> gap_values(long ell, long m) {
  require_w_domain(ell, m, "gap_values");
  const Int L(ell), M(m);
  const Rat d1 = make_rat((M - L + 1) * (L + 1), (M - L) * L * (M + L + 1));
  const Rat d2 = make_rat((M - L + 1) * M, (M - L) * (M + 1) * (M * M + 1));
  return {d1, d2};
}

namespace {

const std::vector<BoundSpec> kBoundSpecs = {
    {BoundId::UB_TRANSPOSED, "ub-transposed",
     "d_l(m)^2/(d_l(m-1)d_l(m+1)) < (m-l+1)m/((m-l)(m+1))", 1, true},
    {BoundId::LB_TRANSPOSED, "lb-transposed",
     "d_l(m)^2/(d_l(m-1)d_l(m+1)) > (m-l+1)m^3/((m-l)(m+1)(m^2+1))", 0, true},
    {BoundId::COR_M2, "cor-m2", "d_l(m)^2/(d_l(m-1)d_l(m+1)) > (m^2+1)/m^2", 2, true},
    {BoundId::PROP_CHAIN, "prop-chain",
     "d_l(m)^2 > d_l(m-1)d_l(m+1) > d_{l-1}(m)d_{l+1}(m)", 1, true},
    {BoundId::W_LOWER, "w-lower", "d_{l+1}(m)/d_l(m) > W(l,m)", 1, false},
    {BoundId::CHEN_XIA_UB, "chen-xia-ub", "d_{l+1}(m)/d_l(m) < (m-l)/(l+1)", 1, false},
    {BoundId::CHEN_GU_UB, "chen-gu-ub",
     "d_l(m)^2/(d_{l-1}(m)d_{l+1}(m)) < (m-l+1)(l+1)/((m-l)l)", 1, false},
    {BoundId::CHEN_GU_LB, "chen-gu-lb",
     "d_l(m)^2/(d_{l-1}(m)d_{l+1}(m)) > (m-l+1)(l+1)(m+l)/((m-l)l(m+l+1))", 1, false},
    {BoundId::U_LOWER, "u-lower", "d_l(m+1)/d_l(m) > U(l,m)", 1, true},
    {BoundId::INEQ_110, "ineq-110",
     "(m-l+1)m^3/((m-l)(m+1)(m^2+1)) > (m^2+1)/m^2 for l >= 2", 2, false},
};

}  // namespace

const std::vector<BoundSpec>& bound_specs() { return kBoundSpecs; }

const BoundSpec& bound_spec(BoundId id) {
  for (const auto& s : kBoundSpecs)
    if (s.id == id) return s;
  throw std::logic_error("bound_spec: unregistered id");
}

const BoundSpec* find_bound_spec(const std::string& name) {
  for (const auto& s : kBoundSpecs)
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

// d_l(m)^2 / (d_l(m-1) d_l(m+1)); the 4^m normalization cancels.
Rat transposed_ratio(const BMTable& t, long ell, long m) {
  const Int& a = t.n_entry(ell, m);
  return make_rat(a * a, t.n_entry(ell, m - 1) * t.n_entry(ell, m + 1));
}

// d_l(m)^2 / (d_{l-1}(m) d_{l+1}(m)); same row, scale-free.
Rat row_ratio(const BMTable& t, long ell, long m) {
  const Int& a = t.n_entry(ell, m);
  return make_rat(a * a, t.n_entry(ell - 1, m) * t.n_entry(ell + 1, m));
}

CheckRecord finish_greater(long ell, long m, QuadraticSurd lhs, QuadraticSurd rhs) {
  CheckRecord rec;
  rec.ell = ell;
  rec.m = m;
  rec.margin = lhs - rhs;
  rec.lhs = std::move(lhs);
  rec.rhs = std::move(rhs);
  rec.margin_sign = rec.margin.sign_of();
  rec.holds = rec.margin_sign > 0;
  return rec;
}

CheckRecord finish_less(long ell, long m, QuadraticSurd lhs, QuadraticSurd rhs) {
  CheckRecord rec;
  rec.ell = ell;
  rec.m = m;
  rec.margin = rhs - lhs;
  rec.lhs = std::move(lhs);
  rec.rhs = std::move(rhs);
  rec.margin_sign = rec.margin.sign_of();
  rec.holds = rec.margin_sign > 0;
  return rec;
}

}  // namespace

CheckRecord check_inequality(BoundId id, long ell, long m, const BMTable& table) {
  const BoundSpec& spec = bound_spec(id);
  if (!spec.in_domain(ell, m))
    throw std::domain_error("check_inequality: (l=" + std::to_string(ell) +
                            ", m=" + std::to_string(m) + ") outside domain of " + spec.name);
  const Int L(ell), M(m);
  switch (id) {
    case BoundId::UB_TRANSPOSED:
      return finish_less(ell, m, transposed_ratio(table, ell, m),
                         make_rat((M - L + 1) * M, (M - L) * (M + 1)));
    case BoundId::LB_TRANSPOSED:
      return finish_greater(ell, m, transposed_ratio(table, ell, m),
                            make_rat((M - L + 1) * M * M * M, (M - L) * (M + 1) * (M * M + 1)));
    case BoundId::COR_M2:
      return finish_greater(ell, m, transposed_ratio(table, ell, m),
                            make_rat(M * M + 1, M * M));
    case BoundId::PROP_CHAIN: {
      // Both strict links of the chain; the record keeps the link with the
      // smaller margin so min-margin tracking reflects the tighter one.
      const Int pow16m = pow2(4 * static_cast<unsigned long>(m));
      const Int& nm = table.n_entry(ell, m);
      Rat sq = make_rat(nm * nm, pow16m);
      Rat mid = make_rat(table.n_entry(ell, m - 1) * table.n_entry(ell, m + 1), pow16m);
      Rat cross = make_rat(table.n_entry(ell - 1, m) * table.n_entry(ell + 1, m), pow16m);
      CheckRecord first = finish_greater(ell, m, sq, mid);
      CheckRecord second = finish_greater(ell, m, mid, cross);
      CheckRecord rec = surd_cmp_general(first.margin, second.margin) <= 0 ? first : second;
      rec.holds = first.holds && second.holds;
      rec.margin_sign = std::min(first.margin_sign, second.margin_sign);
      return rec;
    }
    case BoundId::W_LOWER:
      return finish_greater(ell, m, make_rat(table.n_entry(ell + 1, m), table.n_entry(ell, m)),
                            w_value(ell, m));
    case BoundId::CHEN_XIA_UB:
      return finish_less(ell, m, make_rat(table.n_entry(ell + 1, m), table.n_entry(ell, m)),
                         make_rat(M - L, L + 1));
    case BoundId::CHEN_GU_UB:
      return finish_less(ell, m, row_ratio(table, ell, m),
                         make_rat((M - L + 1) * (L + 1), (M - L) * L));
    case BoundId::CHEN_GU_LB:
      return finish_greater(ell, m, row_ratio(table, ell, m),
                            make_rat((M - L + 1) * (L + 1) * (M + L), (M - L) * L * (M + L + 1)));
    case BoundId::U_LOWER:
      return finish_greater(ell, m,
                            make_rat(table.n_entry(ell, m + 1), 4 * table.n_entry(ell, m)),
                            lambda_and_u(ell, m).second);
    case BoundId::INEQ_110:
      return finish_greater(ell, m,
                            make_rat((M - L + 1) * M * M * M, (M - L) * (M + 1) * (M * M + 1)),
                            make_rat(M * M + 1, M * M));
  }
  throw std::logic_error("check_inequality: unhandled id");
}

SweepReport sweep(BoundId id, long max_m, const BMTable& table, unsigned threads) {
  const BoundSpec& spec = bound_spec(id);
  const long needed = max_m + (spec.needs_next_row ? 1 : 0);
  if (static_cast<long>(table.max_m()) < needed)
    throw std::out_of_range("sweep: table covers m <= " + std::to_string(table.max_m()) +
                            " but suite " + spec.name + " with max_m " + std::to_string(max_m) +
                            " needs m <= " + std::to_string(needed));
  SweepReport report;
  report.id = id;
  report.suite = spec.name;
  report.max_m = max_m;

  const long ell_lo = spec.ell_min;
  const long ell_hi = max_m - 1;
  if (ell_hi < ell_lo) return report;

  struct Partial {
    long examined = 0;
    std::vector<CheckRecord> violations;
    std::optional<CheckRecord> min_margin;
  };
  std::vector<Partial> partials(ell_hi - ell_lo + 1);
  parallel_for(partials.size(), threads, [&](std::size_t idx) {
    const long ell = ell_lo + static_cast<long>(idx);
    Partial& p = partials[idx];
    for (long m = ell + 1; m <= max_m; ++m) {
      CheckRecord rec = check_inequality(id, ell, m, table);
      ++p.examined;
      if (!p.min_margin || surd_cmp_general(rec.margin, p.min_margin->margin) < 0)
        p.min_margin = rec;
      if (!rec.holds) p.violations.push_back(std::move(rec));
    }
  });
  for (auto& p : partials) {
    report.examined += p.examined;
    for (auto& v : p.violations) report.violations.push_back(std::move(v));
    if (p.min_margin &&
        (!report.min_margin ||
         surd_cmp_general(p.min_margin->margin, report.min_margin->margin) < 0))
      report.min_margin = std::move(p.min_margin);
  }
  return report;
}

}  // namespace bmseq
