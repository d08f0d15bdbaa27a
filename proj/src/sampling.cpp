#include "thermores/sampling.hpp"

#include "thermores/gibbsoracle.hpp"

namespace thermores {

std::size_t Sampler::uniform_index(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool Sampler::coin(double p_true) { return std::bernoulli_distribution(p_true)(rng_); }

std::vector<Rat> Sampler::distribution(std::size_t n, int max_units, bool allow_zero) {
  std::uniform_int_distribution<int> units(allow_zero ? 0 : 1, max_units);
  std::vector<int> k(n);
  int total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : k) {
      x = units(rng_);
      total += x;
    }
  }
  std::vector<Rat> out;
  out.reserve(n);
  for (int x : k) out.push_back(Rat(x, total));
  return out;
}

std::vector<Rat> Sampler::weights(std::size_t n, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(1, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  std::vector<Rat> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(Rat(num(rng_), den(rng_)));
  return out;
}

ThermoState Sampler::state(std::size_t n, bool allow_zero) {
  return state_over(weights(n), allow_zero);
}

ThermoState Sampler::state_over(const std::vector<Rat>& w, bool allow_zero) {
  return ThermoState::make(distribution(w.size(), 12, allow_zero), w);
}

Transition Sampler::transition(std::size_t n, bool feasible, bool allow_zero) {
  const std::vector<Rat> w = weights(n);
  ThermoState a = state_over(w, allow_zero);
  if (!feasible) return Transition::make(a, state_over(w, allow_zero));
  const ExactGibbsMap g = random_exact_gibbs_map(gibbs_of(a).probs(), rng_());
  return Transition::make(a, ThermoState::make(g.apply(a.probs()), w));
}

}  // namespace thermores
