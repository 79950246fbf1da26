#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "pushpull/fp.hpp"

namespace pushpull {

/// Module over the algebra generated by `gens`; matrices act on columns.
struct Module {
  int dim = 0;
  std::vector<fp::Matrix> gens;
};

/// Algebra element sum c * (g_{w_1} ... g_{w_k}), reproducible on any module
/// over the same generators. An empty recipe is zero.
struct Recipe {
  std::vector<std::pair<fp::u32, std::vector<int>>> terms;
};

fp::Matrix evaluate(const fp::Field& f, const Recipe& r, const Module& m);

/// Irreducible module in the standard basis spun from a seed vector of
/// ker factor(element): basis vector 0 is the seed, basis vector k >= 1 is
/// gens[spin[k-1].first] applied to basis vector spin[k-1].second.
struct IrreducibleModule {
  Module module;
  Recipe element;
  fp::Poly factor;
  std::vector<std::pair<int, int>> spin;
};

/// Spinning closure of `seeds`: echelon span plus the unreduced basis vectors.
struct Spin {
  fp::RowSpace span;
  std::vector<std::vector<fp::u32>> basis;
  std::vector<std::pair<int, int>> words;  // for basis vectors past the seeds
};
Spin spin(const fp::Field& f, const std::vector<fp::Matrix>& gens,
          const std::vector<std::vector<fp::u32>>& seeds);

Module submodule(const fp::Field& f, const Module& m, const std::vector<std::vector<fp::u32>>& basis);
Module quotient(const fp::Field& f, const Module& m, const std::vector<std::vector<fp::u32>>& basis);

struct MeataxeStats {
  int elements = 0;
  int fallback_elements = 0;
};

/// Composition factors (with multiplicity) by repeated splitting; each
/// irreducible is certified with Norton's test. SplitBudgetExceeded when no
/// decision is reached within `budget` random elements and the fallbacks.
std::vector<IrreducibleModule> composition_factors(const fp::Field& f, const Module& m,
                                                   std::mt19937_64& rng, int budget,
                                                   MeataxeStats* stats = nullptr);

/// dim Hom_A(S, T) for irreducible S.
int hom_dimension(const fp::Field& f, const IrreducibleModule& s, const Module& t);

/// Cheap necessary condition for S ~ T: equal dimension and equal nullity of
/// the certifying factor.
bool may_be_isomorphic(const fp::Field& f, const IrreducibleModule& s, const Module& t);

}  // namespace pushpull
