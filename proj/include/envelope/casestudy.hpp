#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "envelope/descriptor.hpp"
#include "envelope/harness.hpp"

namespace envelope {

/// Uniform integer in [lo, hi] by rejection sampling on a 64-bit engine, so
/// sample streams do not depend on the standard library's distributions.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Seeded elements of the symbolic monomial group. Exponents are drawn from
/// [-3, 3] and dyadic depths from [0, 6].
class ElementSampler {
 public:
  static constexpr std::int64_t kExponentBound = 3;
  static constexpr std::uint32_t kMaxDepth = 6;

  ElementSampler(std::uint64_t seed, std::size_t arity = SymScalar::kDefaultArity)
      : rng_(seed), arity_(arity) {}

  std::size_t arity() const { return arity_; }
  std::mt19937_64& rng() { return rng_; }

  DyadicRoot root(std::uint32_t max_depth = kMaxDepth);
  SymScalar scalar_in(const ScalarLevel& level);
  SymScalar scalar();
  /// Mixes generic elements with torsion ratios, torsion entries and scalar
  /// matrices, each with or without the swap.
  MonomialElem ambient();
  /// Element of a descriptor subgroup.
  MonomialElem member(const MonomialSubgroup& s);

 private:
  std::mt19937_64 rng_;
  std::size_t arity_;
};

/// Readings of the generator list for H_inf.
enum class HReading {
  WithSwap,  ///< diagonal dyadic roots together with the swap matrix
  DiagonalOnly,  ///< diagonal dyadic roots without the swap
};

MonomialSubgroup h_infinity(HReading reading);

/// The stated value of E_alpha(H_inf), as an element predicate written
/// independently of the descriptor algebra.
struct ClaimedTerm {
  SmallOrdinal index;
  std::string description;
  /// The stated value is relative to GL2(C); only its monomial part is compared.
  bool beyond_ambient = false;
  /// No value is stated; the claim is inferred from the stabilization statement.
  bool inferred = false;
  std::function<bool(const MonomialElem&)> contains;
  /// Seeded member of the stated subgroup.
  std::function<MonomialElem(ElementSampler&)> sample;
};

/// Claims at 0, 1, 2, 3, w, w+1, w+2.
std::vector<ClaimedTerm> claimed_chain();

struct CaseStudyOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 7;
  std::size_t arity = SymScalar::kDefaultArity;
  std::size_t closure_pairs = 10000;
  std::size_t crosscheck_x = 1000;
  std::size_t crosscheck_h = 100;
  std::uint32_t nilpotency_depth = 10;
};

struct CaseStudyResult {
  std::vector<CheckReport> reports;
  /// ordinal | derived | claimed | agreement
  std::string table;
};

CaseStudyResult audit_claimed_chain(const CaseStudyOptions& options);

/// [..[[x, y1], y2], ..., yk]
MonomialElem commutator_tower(const MonomialElem& x, const std::vector<MonomialElem>& ys);

struct ReductionCrossCheck {
  std::size_t trials = 0;
  std::size_t disagreements = 0;
  std::size_t members = 0;  ///< sampled x inside C^alpha
  std::vector<std::string> witness;
};

/// Compares, at index alpha, the generator-checked condition
/// "x in domain and [x, g] in C^(alpha-1) for each generator g" with direct
/// testing against `h_samples` uniformly drawn h, and with the descriptor
/// C^alpha, for `x_samples` random x. H is the finite subgroup generated by
/// diag(z(1/64), 1), diag(1, z(1/64)) and the swap.
ReductionCrossCheck generator_reduction_crosscheck(SmallOrdinal alpha, std::size_t x_samples,
                                                   std::size_t h_samples, std::uint64_t seed,
                                                   std::size_t arity = SymScalar::kDefaultArity);

}  // namespace envelope
