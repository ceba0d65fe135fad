#pragma once

#include <array>
#include <string>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/poset.hpp"

// Explicit interval-partition constructions for squarefree ideals. Every
// function verifies its own output against the target poset and throws
// VerificationError if it does not hold; malformed inputs raise
// PreconditionError. Variables are 1-based in arguments.

namespace stanley {

enum class LiftKind { lem, rem, step0, step1, step2, step3 };

const char* to_string(LiftKind kind);

/// One variable-appending step of a multi-step construction.
struct LiftInstruction {
  LiftKind kind;
  int appended_variable = 0;
  /// 0-based generator indices that gain the appended variable.
  std::vector<int> target_generators;
  /// Degree of the upper-discrete partition produced (rem and steps), or
  /// the min rho reached (lem).
  int degree = 0;
};

/// The ideal with the unique generator containing x_pivot multiplied by
/// x_appended; appended must be n + 1.
MonomialIdeal lem_lifted_ideal(const MonomialIdeal& ideal, int pivot, int appended);

/// Lift along a variable owned by one generator: from a verified partition of P_I with min rho s, a
/// partition of P_I' with min rho s + 1. x_pivot must occur in exactly one
/// generator.
IntervalPartition lem_lift(const MonomialIdeal& ideal, const IntervalPartition& part,
                           int pivot, int appended);

/// Witness of sdepth(I) = n - floor(m/2) for a squarefree complete
/// intersection: the maximal-ideal partition on m variables (found by exact
/// search, cached) followed by one lem_lift per extra support variable, with
/// unused variables added as free directions.
IntervalPartition ci_partition(const MonomialIdeal& ideal);

/// Upper-discrete partition of degree k of the full Boolean lattice on n
/// variables (the poset of the unit ideal, including the empty set).
IntervalPartition boolean_upper_discrete(int n, int k);

/// Refines each interval [c, d] by a degree-(k - |c|) Boolean partition of
/// its free coordinates. Result is upper-discrete of degree k.
IntervalPartition upper_discrete_refine(const MonomialIdeal& ideal,
                                        const IntervalPartition& part, int k);

/// Same lift, preserving upper-discreteness: degree k on P_I becomes
/// degree k + 1 on P_I'. I must be a squarefree complete intersection.
IntervalPartition rem_lift(const MonomialIdeal& ideal, const IntervalPartition& part,
                           int k, int pivot, int appended);

/// Three squarefree generators kept verbatim (repeats and 1 allowed), as
/// they appear in the middle of the 3-generator induction.
struct GeneratorTriple {
  int n = 0;
  std::array<Mask, 3> v{};

  /// The ideal they generate; may be the unit ideal.
  MonomialIdeal ideal() const;
  /// Every variable in exactly two of the three generators.
  bool all_type_two() const;
};

struct StepResult {
  GeneratorTriple triple;
  IntervalPartition partition;
};

/// Hardcoded Step-0 base partitions for n in {0, 1}, of degree n - 1.
IntervalPartition step0_base(const GeneratorTriple& triple);

/// Step 0: append x_{n+1} to the generators in `pair` (0-based indices).
/// `part` must be upper-discrete of degree n - 1 on P of an all-type-2
/// triple; the result is upper-discrete of degree n.
StepResult step0_extend(const GeneratorTriple& triple, const IntervalPartition& part,
                        std::array<int, 2> pair, int appended);

/// Steps 1-3: append a private variable to the generator playing role
/// `step`. Variables 1..core_n are the all-type-2 core; roles[r] is the
/// generator index acting as v_{r+1}; the private variable of role r is
/// core_n + r + 1. Input degree core_n + step - 2, output core_n + step - 1.
StepResult step_private_extend(const GeneratorTriple& triple, int core_n,
                               std::array<int, 3> roles, const IntervalPartition& part,
                               int step, int appended);

/// Partition of P_I with min rho >= n - 1 for a squarefree ideal with
/// exactly three minimal generators. `trace` receives the replayed steps.
IntervalPartition three_gen_partition(const MonomialIdeal& ideal,
                                      std::vector<LiftInstruction>* trace = nullptr);

struct SplitIdeal {
  MonomialIdeal without_last;  // I_0: generators free of x_n
  MonomialIdeal with_last;     // I_1: all generators with x_n removed
};

/// Splits along the last variable. Every variable must occur in some
/// generator.
SplitIdeal split_ideal(const MonomialIdeal& ideal);

/// Embeds part0 at x_n = 0 and part1 at x_n = 1 and verifies the union
/// against P_I. part0 may be empty when I_0 is the zero ideal.
IntervalPartition compose_split(const MonomialIdeal& ideal, const IntervalPartition& part0,
                                const IntervalPartition& part1);

/// Partition with min rho >= n - 2 for a squarefree ideal with at most four
/// minimal generators (>= n - 1 with at most three).
IntervalPartition four_gen_partition(const MonomialIdeal& ideal);

}  // namespace stanley
