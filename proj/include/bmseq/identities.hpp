#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmseq/bipoly.hpp"
#include "bmseq/surd.hpp"

namespace bmseq {

// Registry of the proof-step identities and sign claims. Polynomial-kind
// identities are certified as true identities by exact evaluation on an
// integer grid exceeding the degree bound in each variable (a deterministic
// certificate, not sampling). Single-radical identities and positivity
// claims are checked pointwise on finite grids; those are evidence over the
// scanned domain only, never proofs.

struct GridPoint {
  long ell = 0;
  long m = 0;
};

struct PolyIdentityResult {
  std::string id;
  bool pass = false;
  int m_points = 0;  // grid sizes used for the certificate
  int l_points = 0;
  std::optional<GridPoint> first_difference;
  Int lhs_at_difference, rhs_at_difference;
};

struct SurdIdentityResult {
  std::string id;
  bool pass = false;
  long points_checked = 0;
  std::optional<GridPoint> first_failure;
  std::string lhs_at_failure, rhs_at_failure;
};

struct ScanViolation {
  std::string part;
  long ell = 0, m = 0;
  std::string value;
};

struct ScanResult {
  std::string id;
  bool pass = false;
  long examined = 0;
  std::vector<ScanViolation> violations;
  std::string scanned_domain;  // finite evidence: the lattice actually checked
};

// Lattice box for positivity scans: l in [ell_lo, ell_hi], m in
// [l + m_rel_lo, l + m_rel_hi], intersected with the claim's domain.
struct ScanRange {
  long ell_lo = 1, ell_hi = 12;
  long m_rel_lo = 1, m_rel_hi = 12;
};

struct PositivityClaim {
  std::string id;
  struct Part {
    std::string label;
    std::function<QuadraticSurd(long ell, long m)> value;
  };
  std::vector<Part> parts;
  int expected_sign = +1;  // every part must have this exact strict sign
  std::function<bool(long ell, long m)> in_domain;
  std::string domain_note;
  ScanRange default_range;
};

const std::vector<std::string>& poly_identity_ids();
const std::vector<std::string>& surd_identity_ids();
const std::vector<std::string>& positivity_claim_ids();

// Engine functions; the registry wrappers below feed them registry entries.
// Exposed so tests can certify mutated variants.
PolyIdentityResult certify_poly_pair(const std::string& id, const BiPoly& lhs, const BiPoly& rhs);
SurdIdentityResult check_surd_pair(const std::string& id,
                                   const std::function<QuadraticSurd(long, long)>& lhs,
                                   const std::function<QuadraticSurd(long, long)>& rhs,
                                   const std::vector<GridPoint>& grid);

// Throws std::invalid_argument for unknown ids.
PolyIdentityResult certify_poly_identity(const std::string& id);
SurdIdentityResult check_surd_identity(const std::string& id);
SurdIdentityResult check_surd_identity(const std::string& id, const std::vector<GridPoint>& grid);
const std::vector<GridPoint>& default_grid(const std::string& surd_id);
const PositivityClaim& positivity_claim(const std::string& id);
ScanResult positivity_scan(const std::string& id);
ScanResult positivity_scan(const std::string& id, const ScanRange& range);

}  // namespace bmseq
