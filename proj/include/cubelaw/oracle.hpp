#pragma once

// Brute-force verifiers. They work from definitions (minors, Bezout vectors,
// explicit membership) and never call hnf_rank2 or canonical_module.

#include "cubelaw/cube.hpp"
#include "cubelaw/sampling.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cubelaw {

struct NaiveBasis {
  ExtElement first;   // a generator of the module's intersection with K
  ExtElement second;  // completes the basis
};

/// Basis of the O_K-module spanned by {alpha_i beta_j}, built from the gcd of
/// the 2x2 minors and a Bezout vector for the Omega-coordinates.
NaiveBasis naive_module_product(const OrientedIdeal& I, const OrientedIdeal& J);

/// Membership of xi in the O_K-span of (b1, b2) by solving the 2x2 system over K.
bool naive_contains(const ExtElement& b1, const ExtElement& b2, const ExtElement& xi);

struct ProductAgreement {
  bool agrees = false;
  std::string reason;
};

/// Double inclusion between the naive product and `product` (as modules), plus
/// the orientation product.
ProductAgreement check_product(const OrientedIdeal& I, const OrientedIdeal& J,
                               const OrientedIdeal& product);

/// Searches unimodular T with entries in [-bound, bound] and act_form(Q1, T) == Q2 (K = Q).
bool brute_force_equivalent(const QuadForm& Q1, const QuadForm& Q2, long bound);

struct CubeLawReport {
  long sampled = 0;
  long checked = 0;
  long passed = 0;
  std::vector<Cube> counterexamples;
  bool ok() const { return checked == passed && checked > 0; }
};

/// Observer for every ideal product formed by a suite; must be thread-safe.
using ProductSink =
    std::function<void(const OrientedIdeal& I, const OrientedIdeal& J, const OrientedIdeal& IJ)>;

/// True when Psi(Q1) Psi(Q2) Psi(Q3) is oriented-principal for the cube A (K = Q).
bool cube_law_holds(const Cube& A, const ExtensionPtr& ext, const ProductSink* sink = nullptr);

/// Seeded general projective cubes with fundamental discriminant (K = Q).
CubeLawReport scan_cube_law(const RandomSpec& spec);
CubeLawReport scan_cube_law_serial(const RandomSpec& spec);

/// Every reduced cube (1,0,0,d,0,f,g,h) with entries in [-bound, bound] and
/// fundamental discriminant (K = Q).
CubeLawReport scan_reduced_cubes(long bound, const ProductSink* sink = nullptr);
CubeLawReport scan_reduced_cubes_serial(long bound, const ProductSink* sink = nullptr);

struct ClassNumberCheck {
  long h_forms = 0;
  long h_composition = 0;
};

/// Number of enumerated classes against the size of the group generated by
/// composing them (K = Q, |D| <= 10^4).
ClassNumberCheck class_number_crosscheck(const Int& D);

/// One JSON line summarising the report.
std::string report_json_line(const CubeLawReport& r);

}  // namespace cubelaw
