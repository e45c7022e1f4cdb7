#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieconf/chevalley.hpp"
#include "lieconf/invform.hpp"
#include "lieconf/isotropy.hpp"

namespace lieconf {

enum class Stage { RootCombinatorics, IsotropyClosure, SolverFeasibility, Survivor };
std::string to_string(Stage s);

enum class SurvivorLabel {
  Sp_case,
  SL_case,
  Einstein_Bn,
  Einstein_Dn,
  Eins3_B2,
  G2_Eins5,
  CP1,
  CP1xCP1,
};
std::string to_string(SurvivorLabel l);
SurvivorLabel parse_survivor_label(std::string_view text);

/// A candidate isotropy: the system, the case, the distortion and (Case1,
/// Parabolic) the distinguished root alpha.
struct Candidate {
  RootSystemPtr system;
  CaseTag tag = CaseTag::Parabolic;
  Vector delta;
  std::optional<RootId> alpha;
};

/// Pair (-delta, alpha) of Case1, as ambient vectors.
struct Case1Pair {
  Vector minus_delta;
  Vector alpha;
  friend bool operator==(const Case1Pair&, const Case1Pair&) = default;
};

/// Outcome of the per-case root checks (non-root witnesses).
struct FastPath {
  bool eliminated = false;
  std::string reason;
  std::vector<Vector> witness;
};

struct CandidateVerdict {
  Candidate candidate;
  /// Present whenever the closure succeeded.
  std::optional<IsotropyConfig> config;
  Stage stage_reached = Stage::RootCombinatorics;
  std::string reason;
  std::vector<Vector> witness;
  std::optional<SurvivorLabel> survivor_label;
  /// Present whenever the solver ran; always feasible for survivors.
  std::optional<FormSolution> solution;
  FastPath fast_path;
  /// False when the root checks eliminated a candidate that the closure and
  /// the solver keep (the latter decide the verdict).
  bool pipelines_agree = true;
  std::vector<std::string> notes;

  [[nodiscard]] bool survivor() const {
    return stage_reached == Stage::Survivor;
  }
};

/// Weyl-orbit transversal of the pairs (-delta, alpha) with delta a root,
/// alpha orthogonal to delta and delta - alpha a root. Each pair is the
/// canonical representative of its orbit. Throws Error(Reducible).
std::vector<Case1Pair> enumerate_case1(const RootSystem& rs);

/// Every Case1 candidate for the standard positive system: all roots delta
/// and positive alpha with (delta, alpha) = 0 and delta - alpha a root.
std::vector<Candidate> case1_candidates(const RootSystemPtr& rs);

/// The single Case2 candidate delta = lowest root, when H_delta together
/// with the coroots of the roots that the pairing forces into h leaves a
/// proper subspace of a. Throws Error(Reducible).
std::optional<Candidate> enumerate_case2(const RootSystemPtr& rs);

/// One Case2 candidate per negative root.
std::vector<Candidate> case2_candidates(const RootSystemPtr& rs);

/// One candidate per simple root alpha with delta = lowest root - alpha.
/// A1 and A1xA1 give the single Borel candidate (LowRank) instead.
std::vector<Candidate> enumerate_parabolic(const RootSystemPtr& rs);

/// Root checks for each case.
FastPath case1_root_checks(const Candidate& c);
FastPath case2_root_checks(const Candidate& c);
FastPath parabolic_root_checks(const Candidate& c);

/// Runs the root checks, then derive_isotropy and the form solver.
CandidateVerdict evaluate(const StructureConstantsPtr& sc, const Candidate& c);
CandidateVerdict eliminate_case1(const StructureConstantsPtr& sc,
                                 const Candidate& c);
CandidateVerdict eliminate_case2(const StructureConstantsPtr& sc,
                                 const Candidate& c);
CandidateVerdict eliminate_parabolic(const StructureConstantsPtr& sc,
                                     const Candidate& c);

/// Label of the classification row a surviving candidate belongs to, with a
/// note when it is reached through a low-rank isomorphism.
struct LabelMatch {
  SurvivorLabel label;
  std::string note;
};
std::optional<LabelMatch> expected_label(const Candidate& c);

struct SurvivorEntry {
  std::string system;
  int rank = 0;
  CaseTag tag = CaseTag::Parabolic;
  Vector delta;
  std::optional<Vector> alpha;
  std::optional<SurvivorLabel> label;
  std::string note;
};

/// Case2 candidates with fewer paired root spaces: every nonempty set of
/// pairs {lambda, delta - lambda} outside h is moved into h and the result
/// is derived and solved again.
struct SubcandidateSweep {
  std::string system;
  Vector delta;
  std::size_t subsets = 0;
  std::size_t consistent = 0;
  std::size_t feasible = 0;
  /// Descriptions of feasible sub-candidates (expected to stay empty).
  std::vector<std::string> flagged;
};

struct ClassifyOptions {
  int max_rank = 8;
  /// Restrict to one case (LowRank candidates count as Parabolic).
  std::optional<CaseTag> only_case;
  /// 0: read LIE_CONFORMAL_THREADS, defaulting to 1.
  unsigned threads = 0;
  /// Sweep Case2 sub-candidates at rank <= sweep_max_rank.
  bool sweep_case2 = true;
  int sweep_max_rank = 4;
};

struct ClassificationReport {
  int max_rank = 0;
  std::vector<CandidateVerdict> verdicts;
  std::vector<SurvivorEntry> survivors;
  std::vector<SubcandidateSweep> sweeps;
};

/// Systems enumerated for a given maximal rank: A1..A_r, B2..B_r, C2..C_r,
/// D3..D_r, all exceptional types and A1xA1.
std::vector<std::pair<Series, int>> systems_up_to(int max_rank);

/// Throws Error(InvalidRank) when max_rank < 2.
ClassificationReport classify_all(const ClassifyOptions& opts);
ClassificationReport classify_all(int max_rank);

struct ExpectedSurvivor {
  std::string system;
  int rank = 0;
  CaseTag tag = CaseTag::Parabolic;
  Vector delta;
  std::optional<Vector> alpha;
  std::optional<SurvivorLabel> label;
};

struct SurvivorComparison {
  std::vector<ExpectedSurvivor> missing;
  std::vector<SurvivorEntry> unexpected;
  /// Survivors whose label differs from the expected one.
  std::vector<std::string> mislabeled;
  [[nodiscard]] bool ok() const {
    return missing.empty() && unexpected.empty() && mislabeled.empty();
  }
};

/// Compares against the expected rows with rank <= report.max_rank (and the
/// case filter, if any).
SurvivorComparison compare_survivors(const ClassificationReport& report,
                                     const std::vector<ExpectedSurvivor>& expected,
                                     std::optional<CaseTag> only_case = {});

} // namespace lieconf
