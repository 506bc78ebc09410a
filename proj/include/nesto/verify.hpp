#pragma once

// End-to-end acceptance checks, each with a wall-clock budget. Shared by the
// CLI `verify` command and the acceptance test binary.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nesto/buildset.hpp"
#include "nesto/graph.hpp"
#include "nesto/qsym.hpp"

namespace nesto {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool correct = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no budget
  bool pass() const { return correct && (limit_seconds <= 0 || seconds <= limit_seconds); }
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, int jobs = 1);
/// Runs every criterion in order; `on_result` sees each as it finishes.
std::vector<CriterionResult> run_acceptance_suite(int jobs = 1,
                                                  const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 family vertex counts ... (0.41 s / 30 s) detail"
std::string format_result(const CriterionResult& r);

// ---- property checks on the QSym kernel ----

struct PropertyOutcome {
  std::string name;
  bool ok = true;
  int cases = 0;
  std::string witness = {};
};

/// Random elements of QSym in the M basis with terms of degree <= max_degree.
QSymElement random_qsym(std::mt19937_64& rng, int max_degree, int max_terms);

/// Basis round trip, associativity and commutativity, coassociativity,
/// antipode axiom on every M_alpha with |alpha| <= 6, multiplicativity of
/// the antipode and of ps_m. Deterministic for a given seed.
std::vector<PropertyOutcome> qsym_property_suite(std::uint64_t seed);

/// Graphs used for the n = 6 coefficient checks: C_6, K_{3,3} and induced
/// 6-vertex subgraphs of the Petersen graph.
std::vector<Graph> six_vertex_samples();

/// Building sets from graph classes on <= 4 vertices plus `random_count`
/// random ones on 1..4 elements (fixed seed).
std::vector<BuildingSet> hopf_test_building_sets(int random_count);

}  // namespace nesto
