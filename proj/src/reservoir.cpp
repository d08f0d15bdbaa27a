#include "thermores/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "thermores/divergence.hpp"
#include "thermores/errors.hpp"

namespace thermores {
namespace {

// Support of a state, in beta-order (p/g descending, ties by index).
std::vector<std::size_t> beta_order(const ThermoState& s) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    if (!s.probs()[i].is_zero()) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return s.probs()[a] / s.weights()[a] > s.probs()[b] / s.weights()[b];
  });
  return idx;
}

std::vector<Rat> cumulative(const ThermoState& s, const std::vector<std::size_t>& order) {
  std::vector<Rat> out;
  out.reserve(order.size());
  Rat acc;
  for (std::size_t i : order) {
    acc += s.probs()[i];
    out.push_back(acc);
  }
  return out;
}

// First position whose cumulative value reaches x.
std::size_t first_reaching(const std::vector<Rat>& cum, const Rat& x) {
  return static_cast<std::size_t>(std::lower_bound(cum.begin(), cum.end(), x) - cum.begin());
}

}  // namespace

Reservoir Reservoir::make(std::vector<Rat> r, std::vector<Rat> init_weights,
                          std::vector<Rat> fin_weights) {
  if (r.empty() || r.size() != init_weights.size() || r.size() != fin_weights.size()) {
    throw Error(ErrorCode::DimensionMismatch, "reservoir needs equal-length r, init and fin vectors");
  }
  Rat total;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].sign() <= 0) {
      throw Error(ErrorCode::NegativeProbability,
                  "reservoir r_" + std::to_string(i) + " = " + r[i].str() + " must be positive");
    }
    if (init_weights[i].sign() <= 0 || fin_weights[i].sign() <= 0) {
      throw Error(ErrorCode::NonPositiveWeight, "reservoir level " + std::to_string(i));
    }
    total += r[i];
  }
  if (total != Rat(1)) throw Error(ErrorCode::ProbSumNotOne, "reservoir r sums to " + total.str());
  return Reservoir(std::move(r), std::move(init_weights), std::move(fin_weights));
}

Reservoir Reservoir::trivial(const Rat& g) { return make({Rat(1)}, {g}, {g}); }

std::vector<Rat> Reservoir::level_weights() const {
  std::vector<Rat> w(init_);
  w.insert(w.end(), fin_.begin(), fin_.end());
  return w;
}

ThermoState Reservoir::initial_state() const {
  std::vector<Rat> p(r_);
  p.resize(2 * r_.size());
  return ThermoState::make(std::move(p), level_weights());
}

ThermoState Reservoir::final_state() const {
  std::vector<Rat> p(r_.size());
  p.insert(p.end(), r_.begin(), r_.end());
  return ThermoState::make(std::move(p), level_weights());
}

Reservoir Reservoir::scaled(const Rat& c) const {
  if (c.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "scale must be positive");
  std::vector<Rat> init(init_), fin(fin_);
  for (auto& g : init) g *= c;
  for (auto& g : fin) g *= c;
  return Reservoir(r_, std::move(init), std::move(fin));
}

Reservoir Reservoir::canonical() const {
  std::vector<std::tuple<Rat, Rat, Rat>> rows;
  rows.reserve(r_.size());
  for (std::size_t i = 0; i < r_.size(); ++i) rows.emplace_back(r_[i], init_[i], fin_[i]);
  std::sort(rows.begin(), rows.end(), std::greater<>());
  const Rat unit = std::get<1>(rows.front());
  std::vector<Rat> r, init, fin;
  for (auto& [ri, gi, fi] : rows) {
    r.push_back(ri);
    init.push_back(gi / unit);
    fin.push_back(fi / unit);
  }
  return Reservoir(std::move(r), std::move(init), std::move(fin));
}

double two_level_extraction_bound(const ThermoState& p) { return renyi(0.0, p, gibbs_of(p)); }

double two_level_formation_bound(const ThermoState& p) { return renyi(kInfinity, p, gibbs_of(p)); }

Transition extraction_transition(const ThermoState& p) { return Transition::make(p, gibbs_of(p)); }

Reservoir minimal_extraction_reservoir(const ThermoState& p, const Rat& c) {
  if (c.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "c must be positive");
  if (is_gibbs(p)) throw Error(ErrorCode::GibbsInput, "a Gibbs state needs no work reservoir");
  const Curve curve = curve_of(p);
  const Rat z = p.partition_function();
  std::vector<Rat> r, init, fin;
  for (const auto& seg : curve.segments()) {
    r.push_back(seg.height);
    init.push_back(seg.height / c);
    fin.push_back(seg.height / (c * z * seg.slope));
  }
  return Reservoir::make(std::move(r), std::move(init), std::move(fin));
}

std::size_t dimension_lower_bound(const ThermoState& p) {
  return 2 * num_distinct_slopes(curve_of(p));
}

Reservoir general_efficient_reservoir(const Transition& t, const Rat& anchor) {
  if (anchor.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "anchor weight must be positive");
  if (t.is_identity()) return Reservoir::trivial(anchor);

  const ThermoState& s = t.initial();
  const ThermoState& f = t.final();
  const auto& g = t.weights();
  const auto order_i = beta_order(s);
  const auto order_f = beta_order(f);
  const auto cum_i = cumulative(s, order_i);
  const auto cum_f = cumulative(f, order_f);

  std::vector<Rat> merged(cum_i);
  merged.insert(merged.end(), cum_f.begin(), cum_f.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  const std::size_t n = merged.size();
  std::vector<Rat> r(n);
  std::vector<std::size_t> lam(n), lam_prime(n);
  for (std::size_t x = 0; x < n; ++x) {
    r[x] = merged[x] - (x == 0 ? Rat(0) : merged[x - 1]);
    lam[x] = order_f[first_reaching(cum_f, merged[x])];
    lam_prime[x] = order_i[first_reaching(cum_i, merged[x])];
  }

  // Cell x sits under final level lam[x] in the joint initial curve and
  // under initial level lam_prime[x] in the joint final curve; matching
  // slopes there fixes every weight up to one common factor.
  std::vector<Rat> init(n), fin(n);
  for (std::size_t x = 0; x < n; ++x) {
    init[x] = r[x] * g[lam[x]] / f.probs()[lam[x]];
    fin[x] = r[x] * g[lam_prime[x]] / s.probs()[lam_prime[x]];
  }
  const Rat k = anchor / init[0];
  for (std::size_t x = 0; x < n; ++x) {
    init[x] *= k;
    fin[x] *= k;
  }
  return Reservoir::make(std::move(r), std::move(init), std::move(fin));
}

Reservoir alt_product_reservoir(const Transition& t) {
  const auto& g = t.weights();
  if (std::any_of(g.begin(), g.end(), [&](const Rat& w) { return w != g.front(); })) {
    throw Error(ErrorCode::NontrivialHamiltonian, "the product construction needs equal weights");
  }
  const auto& p = t.initial().probs();
  const auto& q = t.final().probs();
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i].is_zero() || q[i].is_zero()) {
      throw Error(ErrorCode::ZeroProbability, "the product construction needs full support");
    }
  }
  std::vector<Rat> r, init, fin;
  r.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r.push_back(p[i] * q[j]);
      init.push_back(p[i]);
      fin.push_back(q[j]);
    }
  }
  return Reservoir::make(std::move(r), std::move(init), std::move(fin));
}

bool verify_efficient(const Transition& t, const Reservoir& res) {
  const ThermoState joint_init = tensor(t.initial(), res.initial_state());
  const ThermoState joint_fin = tensor(t.final(), res.final_state());
  return coincide(curve_of(joint_init), curve_of(joint_fin));
}

double average_work(const Reservoir& res) {
  double w = 0.0;
  for (std::size_t i = 0; i < res.size(); ++i) {
    w += res.r()[i].to_double() * (res.init_weights()[i] / res.fin_weights()[i]).log();
  }
  return w;
}

std::pair<Curve, Curve> minimal_formation_pair(const ThermoState& sys) {
  const Reservoir res = minimal_extraction_reservoir(sys);
  return {curve_of(res.final_state()), curve_of(res.initial_state())};
}

bool characterize_formation_family(const ThermoState& sys, const Curve& candidate_init,
                                   const Curve& candidate_fin) {
  const auto [x1, y1] = minimal_formation_pair(sys);
  const auto b_init = divide(candidate_init, x1);
  if (!b_init) return false;
  const auto b_fin = divide(candidate_fin, y1);
  return b_fin && *b_init == *b_fin;
}

}  // namespace thermores
