// The edge-exchange mutation operator.
//
// One mutation draws k = 1 + Pois(1), picks a selection distribution
// (uniform / biased / a fair coin between them for the mixed strategy,
// flipped once per mutation), and applies k cycle-breaking edge
// insertions with edges drawn from that distribution.
#pragma once

#include <optional>

#include "momst/rank_bias.hpp"
#include "momst/spanning_tree.hpp"

namespace momst {

struct MutationStrategy {
  enum class Variant { uniform, biased, mixed };

  Variant variant = Variant::uniform;
  std::optional<SelectionDistribution> uniform_dist;  // uniform & mixed
  std::optional<SelectionDistribution> biased_dist;   // biased & mixed

  static MutationStrategy uniform(int num_edges);
  static MutationStrategy biased(SelectionDistribution biased);
  static MutationStrategy mixed(int num_edges, SelectionDistribution biased);

  const char* name() const;  // "um" / "bm" / "mm"
};

// Number of edge insertions for one mutation: 1 + Pois(1).
int sample_k(Rng& rng);

// The distribution the current mutation will draw edges from. For the
// mixed strategy this flips one fair coin; deterministic otherwise.
const SelectionDistribution& choose_distribution(const MutationStrategy& s,
                                                 Rng& rng);

// Applies one full mutation (k drawn inside, then the distribution choice,
// then k insert-and-break-cycle steps) to `t`.
void mutate_in_place(const Graph& g, SpanningTree& t,
                     const MutationStrategy& s, Rng& rng);

// Same, returning a mutated copy; the input tree is untouched.
SpanningTree mutate(const Graph& g, const SpanningTree& t,
                    const MutationStrategy& s, Rng& rng);

}  // namespace momst
