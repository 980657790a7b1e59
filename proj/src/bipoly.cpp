#include "bmseq/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace bmseq {

void BiPoly::add_term(int dm, int dl, const Int& c) {
  if (c == 0) return;
  auto key = std::make_pair(dm, dl);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BiPoly::deg_m() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::deg_l() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

Int BiPoly::eval(const Int& m, const Int& l) const {
  // Power cache keyed by exponent; degrees are small (<= ~16).
  std::map<int, Int> mp{{0, Int(1)}}, lp{{0, Int(1)}};
  auto power = [](std::map<int, Int>& cache, const Int& base, int e) -> const Int& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, ipow(base, e)).first;
    return it->second;
  };
  Int acc = 0;
  for (const auto& [k, c] : terms_) acc += c * power(mp, m, k.first) * power(lp, l, k.second);
  return acc;
}

BiPoly BiPoly::compose(const BiPoly& m_rep, const BiPoly& l_rep) const {
  std::map<int, BiPoly> mp{{0, BiPoly(1)}}, lp{{0, BiPoly(1)}};
  auto power = [](std::map<int, BiPoly>& cache, const BiPoly& base, int e) -> const BiPoly& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, pow(base, e)).first;
    return it->second;
  };
  BiPoly acc;
  for (const auto& [k, c] : terms_)
    acc += BiPoly(c) * power(mp, m_rep, k.first) * power(lp, l_rep, k.second);
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
  BiPoly out;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_)
      out.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
  return out;
}

BiPoly pow(const BiPoly& base, unsigned e) {
  BiPoly acc(1);
  for (unsigned i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest m-degree first reads closest to the usual presentation.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << (sign(c) < 0 ? " - " : " + ");
    if (first && sign(c) < 0) os << "-";
    first = false;
    Int abs_c = abs(c);
    const bool has_vars = k.first > 0 || k.second > 0;
    if (abs_c != 1 || !has_vars) os << abs_c.get_str();
    if (k.first > 0) {
      if (abs_c != 1) os << "*";
      os << "m";
      if (k.first > 1) os << "^" << k.first;
    }
    if (k.second > 0) {
      if (abs_c != 1 || k.first > 0) os << "*";
      os << "l";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

}  // namespace bmseq
