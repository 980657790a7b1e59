// Acceptance suite: runs every gate criterion at its stated size and
// tolerance (all comparisons are exact) and prints one PASS/FAIL line per
// criterion. Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include <bmseq/bounds.hpp>
#include <bmseq/conjectures.hpp>
#include <bmseq/identities.hpp>
#include <bmseq/logprops.hpp>
#include <bmseq/methods.hpp>
#include <bmseq/registry.hpp>
#include <bmseq/tableio.hpp>

using namespace bmseq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<std::string()>& body) {
  std::string detail;
  bool pass = false;
  const auto t0 = Clock::now();
  try {
    detail = body();
    pass = true;
  } catch (const std::exception& e) {
    detail = e.what();
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  std::printf("[%s] criterion %2d: %s (%s; %lld ms)\n", pass ? "PASS" : "FAIL", number,
              label.c_str(), detail.c_str(), static_cast<long long>(ms));
  std::fflush(stdout);
  if (!pass) ++failures;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

Seq transposed(const BMTable& t, unsigned ell, unsigned m_max) {
  Seq s;
  s.offset = ell;
  for (unsigned m = ell; m <= m_max; ++m) s.values.push_back(t.d(ell, m));
  return s;
}

}  // namespace

int main() {
  const BMTable table = BMTable::build(201, 2);

  criterion(1, "method agreement: four routes to m <= 100, double sum to m <= 40", [] {
    const CrossValidationReport rep = cross_validate(100, 40, 2);
    if (rep.first_mismatch) {
      const auto& mm = *rep.first_mismatch;
      throw std::runtime_error("mismatch in " + mm.method + " at l=" + std::to_string(mm.ell) +
                               " m=" + std::to_string(mm.m));
    }
    std::ostringstream os;
    os << "all methods agree exactly;";
    for (const auto& t : rep.timings) os << " " << t.method << "=" << t.ms << "ms";
    return os.str();
  });

  criterion(2, "fixture exactness: d_2(2)/d_1(2) = 2/5 and diagonal ratio 2/(2m+3)", [&] {
    require(table.d(2, 2) / table.d(1, 2) == make_rat(Int(2), Int(5)), "d_2(2)/d_1(2) != 2/5");
    for (unsigned m = 0; m <= 100; ++m)
      require(make_rat(table.n_entry(m + 1, m + 1), table.n_entry(m, m + 1)) ==
                  make_rat(Int(2), Int(2 * m + 3)),
              "diagonal ratio failed at m=" + std::to_string(m));
    return std::string("exact equality on the full range");
  });

  criterion(3, "theorem sweeps: ten suites, m <= 200, zero violations", [&] {
    std::ostringstream os;
    long total = 0;
    for (const BoundSpec& spec : bound_specs()) {
      const SweepReport rep = sweep(spec.id, 200, table, 2);
      if (!rep.violations.empty()) {
        const CheckRecord& v = rep.violations.front();
        throw std::runtime_error(spec.name + " violated at l=" + std::to_string(v.ell) +
                                 " m=" + std::to_string(v.m));
      }
      total += rep.examined;
    }
    os << total << " checks across " << bound_specs().size() << " suites, all strict";
    return os.str();
  });

  criterion(4, "bracketing: x1 < d_{l+1}/d_l < (m-l)/(l+1) < x2 for m <= 150", [&] {
    long checked = 0;
    for (long m = 2; m <= 150; ++m)
      for (long ell = 1; ell <= m - 1; ++ell) {
        const QuadraticSurd ratio(make_rat(table.n_entry(ell + 1, m), table.n_entry(ell, m)));
        const QuadRoots roots = quad_roots(ell, m);
        const QuadraticSurd mid(make_rat(Int(m - ell), Int(ell + 1)));
        require(surd_cmp(roots.x1, ratio) < 0, "x1 bound failed");
        require(surd_cmp(ratio, mid) < 0, "middle bound failed");
        require(surd_cmp(mid, roots.x2) < 0, "x2 bound failed");
        ++checked;
      }
    return std::to_string(checked) + " cells, exact surd comparisons";
  });

  criterion(5, "published table: the seven r_l(9) fractions, exact reduced form", [&] {
    const std::pair<unsigned, const char*> expected[] = {
        {2, "60275815334620606439322/78173355142115765635889"},
        {3, "122118613523526671413768/133528261319822227027923"},
        {4, "135495563425805832093/139776208550739676384"},
        {5, "2512968603767684/2503881674347833"},
        {6, "3844942434909/3698150303624"},
        {7, "2672864807424/2420889681239"},
        {8, "3879265207/2951578112"},
    };
    for (const auto& [ell, text] : expected) {
      Rat want(text);
      Rat canon = want;
      canon.canonicalize();
      require(want == canon, "listed fraction is not reduced");
      require(r_ratio(table, ell, 9) == want, "r_" + std::to_string(ell) + "(9) mismatch");
    }
    return std::string("all seven fractions match exactly");
  });

  criterion(6, "conjecture c44 holds for 3 <= m <= 200", [&] {
    const ConjectureReport rep = check_half_split_range(table, 3, 200);
    require(rep.verified, "violation found");
    return std::to_string(rep.examined) + " sign checks";
  });

  criterion(7, "negative result: L^5 of {d_2(m)}, m <= 150, has a negative entry", [&] {
    const ConjectureReport rep = check_inf_logconcave(table, 2, 5, 150);
    require(!rep.verified, "unexpectedly clean");
    bool strictly_negative = false;
    for (const auto& ce : rep.counterexamples)
      if (ce.depth == 5 && sign(ce.lhs) < 0) strictly_negative = true;
    require(strictly_negative, "no strictly negative entry at depth 5");
    return "first negative at m=" + std::to_string(rep.counterexamples.front().index);
  });

  criterion(8, "cited regressions: transposes and rows", [&] {
    require(is_log_convex(transposed(table, 0, 200), true).holds, "d_0 not strictly log-convex");
    for (unsigned ell = 1; ell <= 20; ++ell)
      require(is_log_concave(transposed(table, ell, 200), true).holds,
              "d_" + std::to_string(ell) + " not strictly log-concave");
    for (unsigned ell = 2; ell <= 20; ++ell)
      require(is_k_log_concave(transposed(table, ell, 200), 2, true).holds,
              "d_" + std::to_string(ell) + " not 2-log-concave");
    for (unsigned m = 2; m <= 60; ++m) {
      require(check_row_inf_logconcave(table, m, 2).verified,
              "row " + std::to_string(m) + " not 2-log-concave");
      require(check_row_inf_logconcave(table, m, 3).verified,
              "row " + std::to_string(m) + " not 3-log-concave");
    }
    return std::string("transposes (m <= 200) and rows (m <= 60) all clean");
  });

  criterion(9, "identity registry: certificates, grids and sign scans", [] {
    for (const auto& id : poly_identity_ids())
      if (const auto res = certify_poly_identity(id); !res.pass)
        throw std::runtime_error(id + " failed certification");
    for (const auto& id : surd_identity_ids())
      if (const auto res = check_surd_identity(id); !res.pass)
        throw std::runtime_error(id + " failed on its grid");
    for (const auto& id : positivity_claim_ids())
      if (const auto res = positivity_scan(id); !res.pass)
        throw std::runtime_error(id + " sign scan failed");
    const ProofPolys& P = ProofPolys::instance();
    const BiPoly lhs = P.g3 * P.g3 - P.delta2;
    require(lhs.eval(Int(2), Int(1)) == 73216, "ID-G3 spot value 73216 not reproduced");
    return std::to_string(poly_identity_ids().size()) + " polynomial + " +
           std::to_string(surd_identity_ids().size()) + " radical identities, " +
           std::to_string(positivity_claim_ids().size()) + " claims";
  });

  criterion(10, "gap asymptotics: m^2 D2(1,m) within 10% at m=100, 1% at m=1000", [] {
    const Rat at100 = Rat(Int(100) * Int(100)) * gap_values(1, 100).second;
    const Rat at1000 = Rat(Int(1000) * Int(1000)) * gap_values(1, 1000).second;
    auto within = [](const Rat& value, const Rat& tol) {
      const Rat diff = value >= 1 ? Rat(value - 1) : Rat(1 - value);
      return diff <= tol;
    };
    require(within(at100, make_rat(Int(1), Int(10))), "m=100 outside 10%");
    require(within(at1000, make_rat(Int(1), Int(100))), "m=1000 outside 1%");
    return "m^2 D2 = " + rat_str(at100) + " and " + rat_str(at1000);
  });

  criterion(11, "performance: build_table(2000) under 120 s; lossless cache round-trip", [] {
    const auto t0 = Clock::now();
    const BMTable big = BMTable::build(2000, 1);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    require(ms < 120000, "build took " + std::to_string(ms) + " ms");
    require(big.n_entry(2000, 2000) == pow2(2000) * binomial(4000, 2000), "diagonal spot check");

    const BMTable mid = BMTable::build(300);
    std::stringstream buf;
    write_cache(buf, mid);
    const BMTable back = read_cache(buf);
    for (unsigned m = 0; m <= 300; ++m)
      require(back.row(m) == mid.row(m), "round-trip mismatch at m=" + std::to_string(m));
    return "build " + std::to_string(ms) + " ms (single-threaded), round-trip exact at m<=300";
  });

  std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failures);
  return failures;
}
