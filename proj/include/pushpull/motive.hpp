#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pushpull/algebra.hpp"
#include "pushpull/qw.hpp"
#include "pushpull/schubert.hpp"

namespace pushpull {

enum class TorsorMode { Generic, Split, User };

TorsorMode parse_torsor_mode(const std::string& text);
std::string torsor_mode_name(TorsorMode mode);

/// Multiplication by a rational cycle: matrix[w][u] is the coefficient of
/// sigma_w in the image of sigma_u, nonzero only when l(w) = l(u) + degree.
struct RationalGenerator {
  int degree = 0;
  std::vector<std::vector<Scalar>> matrix;
};

/// {"gens": [{"degree": d, "matrix": [[...], ...]}, ...]}
std::vector<RationalGenerator> rational_generators_from_json(const nlohmann::json& doc,
                                                             std::size_t size);

/// Full N x N matrix of an integer operator, reduced mod p.
fp::Matrix dense_matrix(const SparseOp& op, const fp::Field& f);

/// Degree-0 part of the algebra generated by operators of arbitrary degree,
/// by closing words in the graded pieces. Returns block-diagonal elements
/// spanning it.
std::vector<BlockOp> graded_degree0_closure(const SchubertModel& model, const fp::Field& f,
                                            const std::vector<std::pair<int, fp::Matrix>>& gens,
                                            std::size_t max_dim);

/// Generators of the rational degree-0 algebra D^(0) acting on CH(G/B; F_p).
///   generic: M_j A_i
///   split:   M_{sigma_u} A_{I_w} with l(u) = l(w)
///   user:    degree-0 closure of {M_j, A_i} and the supplied cycles
std::vector<BlockOp> degree0_generators(const SchubertModel& model, const fp::Field& f,
                                        TorsorMode mode,
                                        const std::vector<RationalGenerator>& user = {},
                                        std::size_t max_dim = 200000);

MatrixAlgebra rational_degree0_algebra(const SchubertModel& model, const fp::Field& f,
                                       TorsorMode mode,
                                       const std::vector<RationalGenerator>& user = {},
                                       std::size_t max_dim = 200000);

struct DecomposeOptions {
  fp::u32 prime = 2;
  TorsorMode mode = TorsorMode::Generic;
  std::vector<RationalGenerator> user_gens;
  std::uint64_t seed = 0;
  std::optional<long long> expect_r;
  bool degrees_only = false;
  /// The idempotent route runs when the block algebra has at most this many
  /// matrix entries.
  std::size_t full_route_max_entries = 512;
  int split_budget = 400;
  std::size_t closure_max_dim = 200000;
};

struct Summand {
  std::vector<long long> poincare;
  long long multiplicity = 0;
  int shift_class = 0;
  int top = 0;
  int end_degree = 1;  // dim_F_p End of the simple top
};

struct SimpleBlock {
  long long matrix_size = 0;  // n with block Mat_n(F_{p^k})
  int field_degree = 1;
};

struct DecompositionReport {
  std::size_t weyl_order = 0;
  fp::u32 prime = 2;
  TorsorMode mode = TorsorMode::Generic;
  std::uint64_t seed = 0;
  std::vector<long long> schubert_dims;
  std::vector<long long> characteristic_dims;
  std::vector<Summand> summands;
  long long algebra_dim = 0;
  std::string algebra_dim_source;  // "closure" or "rank formula"
  long long radical_dim = 0;
  std::vector<SimpleBlock> blocks;
  std::string route;  // "composition" or "composition+idempotents"
  std::optional<bool> routes_agree;
  std::optional<bool> radical_nilpotent;
  std::optional<long long> trace_radical_dim;
  std::vector<fp::Matrix> idempotents;
  int random_elements = 0;
  int fallback_elements = 0;
  std::optional<long long> expected_r;

  long long summand_count() const;
  /// Polynomials of all summands, repeated by multiplicity, sorted.
  std::vector<std::vector<long long>> polynomial_multiset() const;
  nlohmann::json to_json() const;
};

DecompositionReport decompose_motive(const SchubertModel& model, const DecomposeOptions& options);

/// Degree-0 idempotents a + c x Y of the A_1 Demazure algebra with
/// additive law over Z, x the lattice basis weight.
struct ConicIdempotent {
  Scalar a = 0;
  Scalar c = 0;
  DemazureElement element;
  bool verified = false;  // p * p == p in Q_W
  std::string text;
};

struct ConicResult {
  std::string lattice;
  std::string weight_name;
  Scalar delta = 0;  // (x Y)^2 = delta * x Y
  std::vector<ConicIdempotent> idempotents;
  nlohmann::json to_json() const;
};

ConicResult a1_integer_idempotents(const LatticeSpec& lattice);

}  // namespace pushpull
