#pragma once

#include <cstdint>
#include <vector>

#include "pushpull/fp.hpp"

namespace pushpull {

/// Degree-preserving operator on a graded F_p-space, one square block per
/// degree.
using BlockOp = std::vector<fp::Matrix>;

BlockOp block_identity(const std::vector<int>& dims);
BlockOp block_zero(const std::vector<int>& dims);
BlockOp block_mul(const fp::Field& f, const BlockOp& a, const BlockOp& b);
BlockOp block_add(const fp::Field& f, const BlockOp& a, const BlockOp& b);
BlockOp block_sub(const fp::Field& f, const BlockOp& a, const BlockOp& b);
BlockOp block_scale(const fp::Field& f, fp::u32 c, const BlockOp& a);
bool block_is_zero(const BlockOp& a);
std::vector<fp::u32> block_flatten(const BlockOp& a);
BlockOp block_unflatten(const std::vector<int>& dims, const std::vector<fp::u32>& v);
/// Rank of each block.
std::vector<long long> block_ranks(const fp::Field& f, const BlockOp& a);
/// p(a) with constant terms taken as multiples of `unit`.
BlockOp block_poly_eval(const fp::Field& f, const fp::Poly& p, const BlockOp& a, const BlockOp& unit);
/// Full matrix in the ambient basis given by per-degree index lists.
fp::Matrix block_assemble(const BlockOp& a, const std::vector<std::vector<int>>& blocks,
                          std::size_t n);

/// Unital subalgebra of the block-diagonal matrices over F_p, as a spanning
/// basis of linearly independent elements.
class MatrixAlgebra {
 public:
  MatrixAlgebra(fp::Field f, std::vector<int> dims);

  /// Span of all words in the generators; ClosureBudgetExceeded when the
  /// dimension passes max_dim.
  static MatrixAlgebra generated_by(fp::Field f, std::vector<int> dims,
                                    const std::vector<BlockOp>& gens, std::size_t max_dim);

  const fp::Field& field() const { return f_; }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t entry_count() const { return span_.length(); }
  const std::vector<BlockOp>& basis() const { return basis_; }
  const BlockOp& unit() const { return unit_; }

  bool contains(const BlockOp& a) const;
  /// Adds a if independent of the current span.
  bool add(const BlockOp& a);
  /// Every product of basis elements lies in the span.
  bool is_closed() const;
  bool contains_identity() const { return contains(unit_); }

 private:
  fp::Field f_;
  std::vector<int> dims_;
  BlockOp unit_;
  fp::RowSpace span_;
  std::vector<BlockOp> basis_;
};

/// Jacobson radical by iterated p-power trace conditions.
std::vector<BlockOp> radical(const MatrixAlgebra& alg);

/// True if the span is a two-sided ideal of alg and its elements multiply to
/// zero after finitely many steps.
bool is_nilpotent_ideal(const MatrixAlgebra& alg, const std::vector<BlockOp>& ideal);

/// Monic minimal polynomial of a inside the algebra with identity `unit`.
fp::Poly algebra_minpoly(const fp::Field& f, const BlockOp& a, const BlockOp& unit);

struct IdempotentSearch {
  std::uint64_t seed = 0;
  int random_budget = 200;
};

struct IdempotentResult {
  std::vector<BlockOp> idempotents;
  int random_elements = 0;
  int fallback_elements = 0;
};

/// Orthogonal primitive idempotents summing to the identity. Each is split
/// through coprime factors of a minimal polynomial, and certified primitive
/// by an element whose minimal polynomial is a power of an irreducible of
/// degree dim eAe - dim eJe.
IdempotentResult primitive_idempotents(const MatrixAlgebra& alg, const std::vector<BlockOp>& rad,
                                       const IdempotentSearch& search = {});

}  // namespace pushpull
