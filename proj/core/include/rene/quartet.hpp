#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "rene/geometry.hpp"

namespace rene {

/// The fully symbolic configuration over the field in m, n, M, N: the base
/// quadrilateral A(0,0), B, C, D(1,0) with B and C the apexes of the
/// half-angle-tangent triangles on segment AD, and the four isogonal
/// conjugates A*, B*, C*, D* taken with respect to the triangles BCD, ADC,
/// ABD and ABC respectively.
struct QuadrilateralScene {
    VarTablePtr params;
    Point A, B, C, D;
    Point Astar, Bstar, Cstar, Dstar;
};

QuadrilateralScene build_scene();

struct CheckResult {
    std::string label;
    bool passed = false;
};

/// Machine-checkable record of a verification run; serializes to the
/// line-oriented certificate format (LEVERSHA-CERTIFICATE v1).
struct VerificationReport {
    std::vector<CheckResult> proof_equalities;
    RatFunc radius_sq;
    Point bstar_formula;
    Point cstar_formula;
    std::vector<CheckResult> mirror_pairs;
    std::chrono::milliseconds elapsed{0};

    bool all_passed() const;
    std::string certificate() const;
};

/// The single equality the whole theorem reduces to: the squared distances
/// from A to B* and to C* agree as rational functions.
bool replay_one_line_proof(const QuadrilateralScene& scene);

/// Checks, for each vertex of ABCD, the two independent equalities that make
/// it the circumcenter of its starred triangle (eight equalities total).
VerificationReport verify_quartet(const QuadrilateralScene& scene);

/// Compares the computed squared circumradius of B*C*D* against the square
/// of the closed-form radius expression.
bool leversha_radius_check(const QuadrilateralScene& scene);

/// B* and C* are mirror images across the line AD (the x-axis): equal x,
/// negated y, and reflecting B* over AD reproduces C* exactly.
bool mirror_check(const QuadrilateralScene& scene);

/// Independent oracle: rebuilds the entire configuration at seeded random
/// rational parameter tuples from first principles (ray intersections,
/// reflection-based conjugates, equidistance solving — none of the symbolic
/// code paths), compares it pointwise against the scene evaluated at the same
/// tuple, and re-checks every verified equality in exact rational arithmetic.
bool numeric_spotcheck(const QuadrilateralScene& scene, unsigned trials,
                       std::uint64_t seed);

/// Closed-form circumradius of B*C*D* as a rational function (sign depends
/// on parameter ordering; compare squares).
RatFunc leversha_radius_formula(const VarTablePtr& table);

/// Closed-form conjugate locations, kept as expression text and parsed
/// through the script grammar.
Point golden_bstar(const VarTablePtr& table);
Point golden_cstar(const VarTablePtr& table);

/// Runs every check (one-line proof, the eight circumcenter equalities, the
/// golden closed forms, the radius identity, the mirror relations, plus the
/// numeric spot check when spot_trials > 0) and assembles the full report.
VerificationReport run_all_checks(const QuadrilateralScene& scene,
                                  unsigned spot_trials = 0,
                                  std::uint64_t spot_seed = 0);

} // namespace rene
