#include "momst/mutation.hpp"

#include "momst/errors.hpp"

namespace momst {

MutationStrategy MutationStrategy::uniform(int num_edges) {
  MutationStrategy s;
  s.variant = Variant::uniform;
  s.uniform_dist = uniform_distribution(num_edges);
  return s;
}

MutationStrategy MutationStrategy::biased(SelectionDistribution biased) {
  MutationStrategy s;
  s.variant = Variant::biased;
  s.biased_dist = std::move(biased);
  return s;
}

MutationStrategy MutationStrategy::mixed(int num_edges,
                                         SelectionDistribution biased) {
  MutationStrategy s;
  s.variant = Variant::mixed;
  s.uniform_dist = uniform_distribution(num_edges);
  s.biased_dist = std::move(biased);
  return s;
}

const char* MutationStrategy::name() const {
  switch (variant) {
    case Variant::uniform: return "um";
    case Variant::biased: return "bm";
    case Variant::mixed: return "mm";
  }
  return "?";
}

int sample_k(Rng& rng) { return 1 + rng.poisson1(); }

const SelectionDistribution& choose_distribution(const MutationStrategy& s,
                                                 Rng& rng) {
  switch (s.variant) {
    case MutationStrategy::Variant::uniform:
      return *s.uniform_dist;
    case MutationStrategy::Variant::biased:
      return *s.biased_dist;
    case MutationStrategy::Variant::mixed:
      return rng.coin() ? *s.biased_dist : *s.uniform_dist;
  }
  throw UsageError("invalid mutation variant");
}

void mutate_in_place(const Graph& g, SpanningTree& t,
                     const MutationStrategy& s, Rng& rng) {
  const SelectionDistribution* check =
      s.variant == MutationStrategy::Variant::biased ? &*s.biased_dist
                                                     : &*s.uniform_dist;
  if (check->num_edges() != g.num_edges())
    throw UsageError("mutation strategy was built for a different graph");
  const int k = sample_k(rng);  // drawn first, then the distribution choice
  const SelectionDistribution& dist = choose_distribution(s, rng);
  for (int i = 0; i < k; ++i)
    insert_and_break_cycle_in_place(g, t, dist.sample(rng), rng);
}

SpanningTree mutate(const Graph& g, const SpanningTree& t,
                    const MutationStrategy& s, Rng& rng) {
  SpanningTree child = t;
  mutate_in_place(g, child, s, rng);
  return child;
}

}  // namespace momst
