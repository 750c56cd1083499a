#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/pattern.hpp"

namespace turan {

/// Input graph contains a pattern the operation excludes.
class PreconditionViolation : public std::runtime_error {
 public:
  PreconditionViolation(std::string pattern, Embedding witness);
  [[nodiscard]] const std::string& pattern() const { return pattern_; }
  [[nodiscard]] const Embedding& witness() const { return witness_; }

 private:
  std::string pattern_;
  Embedding witness_;
};

/// A structural claim the cleaning argument relies on failed. The message
/// carries the current graph (graph6) and the labeled witness.
class ProofViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CleaningStep {
  int step = 0;  // 1..6
  std::string pattern;
  Embedding witness;  // labeled in catalog vertex order
  std::vector<Edge> deleted;
  std::int64_t triangles_before = 0;
  std::int64_t triangles_after = 0;
};

struct CleaningReport {
  std::vector<CleaningStep> steps;
  [[nodiscard]] std::int64_t edges_deleted() const;
  [[nodiscard]] std::int64_t triangles_lost() const;
};

template <std::size_t W>
struct CleaningResult {
  BasicGraph<W> graph;
  CleaningReport report;
};

/// Catalog names cleaned by clean_for_p4hat, in step order.
std::vector<std::string> p4hat_cleaning_steps();

/// Deletes edges from a P̂₄-free graph until it is also free of K₅, K₅⁻, K₄,
/// K₂,₂,₂, Q₃,₂ and K₁,₂,₂. Each step takes the canonical witness of its
/// pattern, deletes one edge by the step's rule, and rescans.
/// Throws PreconditionViolation if g contains P̂₄ and ProofViolation if a K₄
/// or K₁,₂,₂ lacks the edge the argument guarantees.
template <std::size_t W>
CleaningResult<W> clean_for_p4hat(const BasicGraph<W>& g);

enum class CertificateKind {
  light_pair_deletion,  // t <= e/2
  p5_reduction,         // t <= e
};

/// One reduction: the rule applied, the configuration it matched, the edges
/// removed, and the resulting drops in triangles and edges.
struct TraceEntry {
  std::string rule;
  Embedding witness;
  std::vector<Edge> removed;
  std::int64_t delta_triangles = 0;
  std::int64_t delta_edges = 0;
};

/// Failure of a proof step on a concrete graph.
struct Counterexample {
  std::size_t entry = 0;  // index the failing entry would have had in the trace
  std::string rule;
  std::string reason;
  std::string graph6;  // graph on which the step failed
  Embedding witness;
};

struct Certificate {
  CertificateKind kind = CertificateKind::light_pair_deletion;
  std::vector<TraceEntry> trace;
  std::int64_t triangles = 0;  // of the input
  std::int64_t edges = 0;
  std::int64_t terminal_triangles = 0;  // after the last trace entry
  std::int64_t terminal_edges = 0;
  std::optional<Counterexample> counterexample;

  [[nodiscard]] bool ok() const { return !counterexample.has_value(); }
  /// "t <= e/2" or "t <= e" with the input's numbers filled in.
  [[nodiscard]] std::string conclusion() const;
};

std::string to_string(CertificateKind kind);

/// Replays the induction behind t(H) <= e(H)/2 for {P̂₄, K₄, K₁,₂,₂}-free g.
/// Throws PreconditionViolation when g contains one of those patterns.
template <std::size_t W>
Certificate certify_half(const BasicGraph<W>& g);

/// Replays the induction behind t(H) <= e(H) for {K₆⁻, P̂₅}-free g.
/// Throws PreconditionViolation when g contains one of those patterns.
template <std::size_t W>
Certificate certify_unit(const BasicGraph<W>& g);

/// Re-applies a certificate's trace to g and checks every recorded delta,
/// the per-step inequality, the terminal state and the totals.
/// Returns a description of the first mismatch, or nullopt if it replays.
template <std::size_t W>
std::optional<std::string> replay_certificate(const BasicGraph<W>& g, const Certificate& cert);

}  // namespace turan
