#include "pushpull/demazure.hpp"

namespace pushpull {

namespace {

std::string word_of(const std::vector<int>& w) {
  std::string s;
  for (int i : w) s += std::to_string(i + 1);
  return s.empty() ? "e" : s;
}

std::vector<int> alternating(int first, int second, int m) {
  std::vector<int> w;
  for (int k = 0; k < m; ++k) w.push_back(k % 2 ? second : first);
  return w;
}

}  // namespace

Series random_element(const FGAContext& fga, std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Series::Term> terms;
  const int n = fga.nvars();
  std::vector<int> e(n, 0);
  // All exponent vectors of total degree <= max_degree.
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == n) {
      int c = coeff(rng);
      if (c) terms.push_back({Monomial::from_exponents(e), c});
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[j] = k;
      self(self, j + 1, left - k);
    }
    e[j] = 0;
  };
  rec(rec, 0, max_degree);
  return Series::from_terms(fga.ring(), n, std::move(terms));
}

RelationReport verify_relations(const QWContext& qw, int samples, std::uint64_t seed) {
  const FGAContext& fga = qw.fga();
  const WeylGroup& W = qw.weyl();
  const int n = fga.nvars();
  RelationReport report;
  auto track = [&](const QWElement& a, const QWElement& b) {
    report.min_precision = std::min({report.min_precision, qw.value_precision(a), qw.value_precision(b)});
    if (report.min_precision < 0) {
      throw Error(ErrorCode::PrecisionLoss, "relation check has no trusted degree; raise --trunc");
    }
    return qw.equal(a, b);
  };

  for (int i = 0; i < n; ++i) {
    QWElement yi = qw.y(i);
    QWElement lhs = qw.mul(yi, yi);
    QWElement rhs = qw.scale(fga.kappa(i), yi);
    ++report.quadratic_checked;
    if (!track(lhs, rhs)) {
      report.failures.push_back("Y_" + std::to_string(i + 1) + "^2 != kappa Y");
    }
  }

  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i) {
    QWElement yi = qw.y(i);
    int si = W.right(W.identity(), i);
    for (int k = 0; k < samples; ++k) {
      Series u = k < n ? fga.variable(k) : random_element(fga, rng);
      QWElement lhs = qw.mul(yi, qw.scalar(u));
      QWElement rhs = qw.add(qw.scale(fga.weyl_act(si, u), yi), qw.scalar(fga.divided_difference(i, u)));
      ++report.commutation_checked;
      if (!track(lhs, rhs)) {
        report.failures.push_back("commutation fails for i=" + std::to_string(i + 1) +
                                  ", u=" + u.to_string());
      }
    }
  }

  const bool expect_zero = fga.fgl().kind() == FormalGroupLaw::Kind::Additive ||
                           fga.fgl().kind() == FormalGroupLaw::Kind::Multiplicative;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      BraidReport b;
      b.i = i;
      b.j = j;
      b.m = fga.datum().coxeter(i, j);
      QWElement diff = qw.sub(qw.y_word(alternating(i, j, b.m)), qw.y_word(alternating(j, i, b.m)));
      report.min_precision = std::min(report.min_precision, qw.value_precision(diff));
      b.coefficients = qw.to_y_basis(diff);
      for (const auto& [w, c] : b.coefficients) {
        bool dihedral = W.length(w) < b.m;
        for (int letter : W.word(w)) dihedral = dihedral && (letter == i || letter == j);
        std::string where = "braid (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        if (!dihedral) {
          report.failures.push_back(where + " has a term outside the shorter dihedral words: " +
                                    W.word_string(w));
        } else if (expect_zero) {
          report.failures.push_back(where + " has nonzero c at " + W.word_string(w));
        }
      }
      report.braids.push_back(std::move(b));
    }
  }
  return report;
}

std::vector<std::vector<DemazureElement>> structure_constants(const QWContext& qw) {
  const std::size_t N = qw.weyl().size();
  std::vector<std::vector<DemazureElement>> table(N, std::vector<DemazureElement>(N));
  for (std::size_t u = 0; u < N; ++u) {
    for (std::size_t w = 0; w < N; ++w) {
      table[u][w] = qw.to_y_basis(qw.mul(qw.y_basis(static_cast<int>(u)), qw.y_basis(static_cast<int>(w))));
    }
  }
  return table;
}

nlohmann::json series_to_json(const Series& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : s.terms()) {
    std::vector<int> e(s.nvars());
    for (int j = 0; j < s.nvars(); ++j) e[j] = m.exponent(j);
    terms.push_back({e, c});
  }
  nlohmann::json out{{"terms", terms}};
  out["precision"] = s.is_exact() ? nlohmann::json(nullptr) : nlohmann::json(s.precision());
  return out;
}

Series series_from_json(const Ring& ring, int nvars, const nlohmann::json& j) {
  std::vector<Series::Term> terms;
  for (const auto& t : j.at("terms")) {
    auto e = t.at(0).get<std::vector<int>>();
    if (static_cast<int>(e.size()) != nvars) {
      throw Error(ErrorCode::InvalidArgument, "exponent vector has the wrong length");
    }
    terms.push_back({Monomial::from_exponents(e), t.at(1).get<Scalar>()});
  }
  int prec = j.contains("precision") && !j["precision"].is_null() ? j["precision"].get<int>() : kExact;
  return Series::from_terms(ring, nvars, std::move(terms), prec);
}

nlohmann::json demazure_to_json(const WeylGroup& weyl, const DemazureElement& d) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [w, c] : d) out[weyl.word_string(w)] = series_to_json(c);
  return out;
}

nlohmann::json relation_report_to_json(const QWContext& qw, const RelationReport& report) {
  nlohmann::json braids = nlohmann::json::array();
  for (const auto& b : report.braids) {
    braids.push_back({{"i", b.i + 1},
                      {"j", b.j + 1},
                      {"m", b.m},
                      {"all_zero", b.coefficients.empty()},
                      {"coefficients", demazure_to_json(qw.weyl(), b.coefficients)}});
  }
  nlohmann::json words = nlohmann::json::object();
  for (std::size_t w = 0; w < qw.weyl().size(); ++w) {
    words[std::to_string(w)] = word_of(qw.weyl().word(static_cast<int>(w)));
  }
  nlohmann::json kappa = nlohmann::json::array();
  for (int i = 0; i < qw.fga().nvars(); ++i) kappa.push_back(series_to_json(qw.fga().kappa(i)));
  return {{"ok", report.ok()},
          {"quadratic_checked", report.quadratic_checked},
          {"commutation_checked", report.commutation_checked},
          {"kappa", kappa},
          {"braid", braids},
          {"failures", report.failures},
          {"min_precision", report.min_precision >= kExact ? nlohmann::json(nullptr)
                                                           : nlohmann::json(report.min_precision)},
          {"basis_words", words}};
}

nlohmann::json structure_table_to_json(const QWContext& qw,
                                       const std::vector<std::vector<DemazureElement>>& table) {
  const WeylGroup& W = qw.weyl();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t u = 0; u < table.size(); ++u) {
    for (std::size_t w = 0; w < table[u].size(); ++w) {
      rows.push_back({{"u", W.word_string(static_cast<int>(u))},
                      {"w", W.word_string(static_cast<int>(w))},
                      {"product", demazure_to_json(W, table[u][w])}});
    }
  }
  return rows;
}

}  // namespace pushpull
