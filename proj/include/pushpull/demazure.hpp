#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "pushpull/qw.hpp"

namespace pushpull {

struct BraidReport {
  int i = 0;
  int j = 0;
  int m = 0;
  DemazureElement coefficients;  // c_{I_w} of (Y_iY_j...) - (Y_jY_i...)
};

struct RelationReport {
  int quadratic_checked = 0;
  int commutation_checked = 0;
  std::vector<BraidReport> braids;
  std::vector<std::string> failures;
  /// Lowest trusted degree over all compared elements.
  int min_precision = kExact;

  bool ok() const { return failures.empty(); }
};

/// Random element of S: a polynomial of degree <= max_degree with small coefficients.
Series random_element(const FGAContext& fga, std::mt19937_64& rng, int max_degree = 3);

/// Checks Y_i^2 = kappa_i Y_i, Y_i u = s_i(u) Y_i + Delta_{-i}(u) on `samples`
/// elements u (the basis variables first), and expands every braid difference.
RelationReport verify_relations(const QWContext& qw, int samples = 20, std::uint64_t seed = 0);

/// Full table Y_{I_u} Y_{I_w} in the Y basis, in (u, w) index order.
std::vector<std::vector<DemazureElement>> structure_constants(const QWContext& qw);

nlohmann::json series_to_json(const Series& s);
Series series_from_json(const Ring& ring, int nvars, const nlohmann::json& j);
nlohmann::json demazure_to_json(const WeylGroup& weyl, const DemazureElement& d);
nlohmann::json relation_report_to_json(const QWContext& qw, const RelationReport& report);
nlohmann::json structure_table_to_json(const QWContext& qw,
                                       const std::vector<std::vector<DemazureElement>>& table);

}  // namespace pushpull
