#include <limits>

#include "envelope/casestudy.hpp"
#include "envelope/error.hpp"

namespace envelope {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty sampling range");
  auto range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(rng());
  const auto max = std::numeric_limits<std::uint64_t>::max();
  const auto limit = max - (max % range + 1) % range;
  std::uint64_t r;
  do {
    r = rng();
  } while (r > limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % range);
}

DyadicRoot ElementSampler::root(std::uint32_t max_depth) {
  auto depth = static_cast<std::uint32_t>(uniform_int(rng_, 0, max_depth));
  auto num = static_cast<std::uint64_t>(uniform_int(rng_, 0, (std::int64_t{1} << depth) - 1));
  return DyadicRoot::make(num, depth);
}

SymScalar ElementSampler::scalar_in(const ScalarLevel& level) {
  switch (level.kind()) {
    case ScalarLevel::Kind::Finite: {
      auto j = level.log2_order();
      auto num = static_cast<std::uint64_t>(uniform_int(rng_, 0, (std::int64_t{1} << j) - 1));
      return SymScalar::root_of_unity(DyadicRoot::make(num, j), arity_);
    }
    case ScalarLevel::Kind::AllTorsion:
      return SymScalar::root_of_unity(root(), arity_);
    case ScalarLevel::Kind::All: {
      std::vector<std::int64_t> exps(arity_);
      for (auto& e : exps) e = uniform_int(rng_, -kExponentBound, kExponentBound);
      return SymScalar(std::move(exps), root());
    }
  }
  return SymScalar(arity_);
}

SymScalar ElementSampler::scalar() { return scalar_in(ScalarLevel::all()); }

MonomialElem ElementSampler::ambient() {
  SymScalar a(arity_), b(arity_);
  switch (uniform_int(rng_, 0, 3)) {
    case 0:
      a = scalar();
      b = scalar();
      break;
    case 1:
      a = scalar();
      b = a * SymScalar::root_of_unity(root(), arity_);
      break;
    case 2:
      a = SymScalar::root_of_unity(root(), arity_);
      b = SymScalar::root_of_unity(root(), arity_);
      break;
    default:
      a = scalar();
      b = a;
      break;
  }
  return {uniform_int(rng_, 0, 1) == 1, a, b};
}

MonomialElem ElementSampler::member(const MonomialSubgroup& s) {
  auto a = scalar_in(s.entries());
  auto b = a * scalar_in(s.ratio());
  bool swap = s.swap() && uniform_int(rng_, 0, 1) == 1;
  return {swap, a, b};
}

MonomialSubgroup h_infinity(HReading reading) {
  return MonomialSubgroup::make(ScalarLevel::all_torsion(), ScalarLevel::all_torsion(),
                                reading == HReading::WithSwap);
}

std::vector<ClaimedTerm> claimed_chain() {
  auto everything = [](const MonomialElem&) { return true; };
  auto any_monomial = [](ElementSampler& s) { return s.ambient(); };
  auto dyadic_ratio = [](const MonomialElem& x) { return x.ratio().is_torsion(); };
  auto dyadic_sample = [](ElementSampler& s) {
    auto x = s.scalar();
    auto z = SymScalar::root_of_unity(s.root(), s.arity());
    return MonomialElem{uniform_int(s.rng(), 0, 1) == 1, x, x * z};
  };
  const std::string semidirect = "diag(x, y), x, y nonzero, extended by the swap";
  const std::string dyadic = "diag(x, x z), z a 2^n-th root of 1, extended by the swap";

  std::vector<ClaimedTerm> out;
  out.push_back({0, "GL2(C)", true, false, everything, any_monomial});
  out.push_back({1, "GL2(C)", true, false, everything, any_monomial});
  out.push_back({2, semidirect, false, false, everything, any_monomial});
  out.push_back({3, semidirect, false, false, everything, any_monomial});
  out.push_back({SmallOrdinal::omega(), semidirect, false, false, everything, any_monomial});
  out.push_back({SmallOrdinal::make(1, 1), dyadic, false, false, dyadic_ratio, dyadic_sample});
  out.push_back({SmallOrdinal::make(1, 2), dyadic, false, true, dyadic_ratio, dyadic_sample});
  return out;
}

MonomialElem commutator_tower(const MonomialElem& x, const std::vector<MonomialElem>& ys) {
  auto acc = x;
  for (const auto& y : ys) acc = sym_commutator(acc, y);
  return acc;
}

ReductionCrossCheck generator_reduction_crosscheck(SmallOrdinal alpha, std::size_t x_samples,
                                                   std::size_t h_samples, std::uint64_t seed,
                                                   std::size_t arity) {
  const std::uint32_t depth = 6;
  auto h = MonomialSubgroup::make(ScalarLevel::roots(depth), ScalarLevel::roots(depth), true);
  DescriptorSeries series(MonomialSubgroup::monomial(), h);
  auto y = series.at(alpha.predecessor());
  auto domain = series.domain(alpha);
  auto derived = series.at(alpha);

  auto zeta = SymScalar::root_of_unity(DyadicRoot::primitive(depth), arity);
  auto one = SymScalar::one(arity);
  std::vector<MonomialElem> gens{MonomialElem::diag(zeta, one), MonomialElem::diag(one, zeta),
                                 MonomialElem::swap_matrix(arity)};

  ElementSampler sampler(seed, arity);
  ReductionCrossCheck out;
  for (std::size_t i = 0; i < x_samples; ++i) {
    auto x = sampler.ambient();
    bool in_domain = domain.contains(x);
    bool by_generators = in_domain;
    for (const auto& g : gens) by_generators = by_generators && y.contains(sym_commutator(x, g));
    bool direct = in_domain;
    for (std::size_t j = 0; j < h_samples; ++j) {
      auto hx = sampler.member(h);
      direct = direct && y.contains(sym_commutator(x, hx));
      ++out.trials;
    }
    bool by_descriptor = derived.contains(x);
    if (by_descriptor) ++out.members;
    if (by_generators != direct || by_generators != by_descriptor) {
      ++out.disagreements;
      if (out.witness.empty()) {
        out.witness = {x.to_string(), std::string("generators: ") + (by_generators ? "in" : "out"),
                       std::string("direct: ") + (direct ? "in" : "out"),
                       std::string("descriptor: ") + (by_descriptor ? "in" : "out")};
      }
    }
  }
  return out;
}

}  // namespace envelope
