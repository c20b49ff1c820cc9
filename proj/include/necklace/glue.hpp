#pragma once

#include <optional>
#include <string>
#include <vector>

#include "necklace/formal.hpp"
#include "necklace/structures.hpp"

namespace necklace {

struct ExactTerm {
  std::string label;
  std::optional<int> dim;
};

/// 0 -> T_0 -> T_1 -> ... -> T_{k-1} -> 0; ranks[i] is the rank of T_i -> T_{i+1}.
struct ExactSequence {
  std::vector<ExactTerm> terms;
  std::vector<std::optional<int>> ranks;
};

/// Fills every unknown by exactness, dim T_i = rank(in) + rank(out). Throws
/// Underdetermined (naming the maps whose rank would settle it) or
/// Inconsistent. The result satisfies the alternating-sum identity.
ExactSequence solve_exact_sequence(const ExactSequence& seq);

/// The Mayer-Vietoris sequence for S^2 = U u V, U the annulus, V the two caps.
/// `middle_rank` is the rank of H^1(U) + H^1(V) -> H^1(U n V).
ExactSequence mayer_vietoris_sequence(const std::array<int, 3>& h_u, std::optional<int> middle_rank);

/// Period of i_X omega around s^2+t^2 = loop_radius_squared (counterclockwise),
/// omega the inverse of a two-dimensional pi on the st chart. Trapezoid rule,
/// spectrally accurate for the periodic integrand.
double period_class(const PoissonStructure& pi, const Multivector& field, const Scalar& loop_radius_squared,
                    int samples = 4096);

struct LoopData {
  std::string component_id;
  Scalar radius_squared;
};

struct RestrictionMatrix {
  std::vector<std::string> generator_labels;
  std::vector<LoopData> loops;
  std::vector<std::vector<double>> periods;  // generators x loops
  int rank = 0;
  double threshold = 1e-6;
};

/// Loops in the two components of U n V for the necklace of radius^2 R2 and
/// annulus width delta: R2 (1 - delta/2) and R2 + (delta/2)(1 - R2).
std::vector<LoopData> annulus_loops(const NecklaceGeometry& geometry);

RestrictionMatrix restriction_rank(const std::vector<Multivector>& generators,
                                   const std::vector<std::string>& labels, const PoissonStructure& pi,
                                   const std::vector<LoopData>& loops);

/// Numerical rank by partial-pivot elimination; pivots below threshold count as zero.
int numeric_rank(std::vector<std::vector<double>> rows, double threshold);

struct GlobalParams {
  int modes_N = 3;
  int degree_M = 6;
  Scalar delta = Scalar::rational(1, 2);
};

struct GlobalGenerator {
  int degree = 0;
  std::string label;
  Multivector field;
};

struct GlobalReport {
  Scalar c;
  std::string branch;  // necklace, symplectic, bruhat
  bool skipped = false;
  std::array<int, 3> dims{};
  std::vector<GlobalGenerator> generators;
  std::vector<std::string> notes;

  // Evidence for the necklace branch.
  std::optional<CohomologyReport> annulus;
  std::optional<RestrictionMatrix> restriction;
  std::optional<ExactSequence> sequence;
  bool euler_primitive_ok = false;  // [pi_c, E] = pi on st
  bool modular_cocycle_ok = false;  // [pi_c, Delta_omega] = 0 on xy
  bool local_primitive_of_pi = false;  // the class of pi dies in the annulus model
  bool liouville_class_survives = false;  // I xi eta has no primitive
  std::vector<std::string> assumptions;
};

/// Necklace branch only; throws OutOfRange for |c| >= 1.
GlobalReport global_cohomology(const Scalar& c, const GlobalParams& params = {});

/// All branches: necklace (computed), symplectic (de Rham dims (1,0,1)),
/// Bruhat (reported as not reproduced, skipped = true).
GlobalReport global_report(const Scalar& c, const GlobalParams& params = {});

struct DeformationReport {
  Scalar c;
  Scalar c_prime;
  Multivector difference;  // pi_{c'} - pi_c on xy
  Scalar multiple;         // c' - c
  bool identity_holds = false;
  bool trivial = false;
};

DeformationReport deformation_check(const Scalar& c, const Scalar& c_prime);

/// Euler field E = (1/(2(c-1)))(s d_s + t d_t) on st.
Multivector euler_field(const Scalar& c);

}  // namespace necklace
