#include "pushpull/fgl.hpp"

#include <sstream>

namespace pushpull {

namespace {

Series monomial2(Ring ring, int i, int j, Scalar c) {
  Monomial m = Monomial::variable(0, i) * Monomial::variable(1, j);
  return Series::from_terms(ring, 2, {{m, c}});
}

void require_no_constant(const Series& s, const char* what) {
  if (s.constant_term() != 0) {
    throw Error(ErrorCode::NonzeroConstantTerm,
                std::string(what) + " needs arguments without constant term");
  }
}

[[noreturn]] void axiom_failure(const std::string& axiom, int degree) {
  throw Error(ErrorCode::FGLAxiomViolation,
              axiom + " fails in degree " + std::to_string(degree));
}

}  // namespace

FormalGroupLaw::FormalGroupLaw(Ring ring, int trunc, Kind kind, std::vector<Scalar> params,
                               Series law)
    : ring_(ring),
      trunc_(trunc),
      kind_(kind),
      params_(std::move(params)),
      law_(std::move(law)),
      correction_(ring, 2),
      inverse_(ring, 1),
      cofactor_(ring, 1) {
  if (trunc < 2) throw Error(ErrorCode::InvalidArgument, "truncation must be at least 2");
  derive();
}

FormalGroupLaw FormalGroupLaw::additive(Ring ring, int trunc) {
  Series law = monomial2(ring, 1, 0, 1) + monomial2(ring, 0, 1, 1);
  return FormalGroupLaw(ring, trunc, Kind::Additive, {}, law);
}

FormalGroupLaw FormalGroupLaw::multiplicative(Ring ring, Scalar beta, int trunc) {
  beta = ring.normalize(beta);
  Series law = monomial2(ring, 1, 0, 1) + monomial2(ring, 0, 1, 1) +
               monomial2(ring, 1, 1, ring.neg(beta));
  return FormalGroupLaw(ring, trunc, Kind::Multiplicative, {beta}, law);
}

FormalGroupLaw FormalGroupLaw::hyperbolic(Ring ring, Scalar mu1, Scalar mu2, int trunc) {
  mu1 = ring.normalize(mu1);
  mu2 = ring.normalize(mu2);
  int prec = mu2 == 0 ? kExact : trunc;
  Series numer = monomial2(ring, 1, 0, 1) + monomial2(ring, 0, 1, 1) +
                 monomial2(ring, 1, 1, ring.neg(mu1));
  // 1/(1 + mu2 uv) = sum (-mu2 uv)^k
  Series geom = Series::constant(ring, 2, 1, prec);
  Series step = monomial2(ring, 1, 1, ring.neg(mu2));
  Series power = Series::constant(ring, 2, 1);
  for (int k = 1; 2 * k <= trunc && mu2 != 0; ++k) {
    power = power * step;
    geom += power.truncated(prec);
  }
  Series law = numer.mul_capped(geom, prec);
  return FormalGroupLaw(ring, trunc, Kind::Hyperbolic, {mu1, mu2}, law);
}

FormalGroupLaw FormalGroupLaw::custom(Ring ring, int trunc,
                                      const std::vector<std::array<Scalar, 3>>& table) {
  std::vector<Series::Term> terms;
  for (const auto& [i, j, c] : table) {
    if (i < 0 || j < 0 || i + j > trunc) {
      throw Error(ErrorCode::FGLAxiomViolation,
                  "coefficient index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside the truncation");
    }
    terms.push_back({Monomial::variable(0, static_cast<int>(i)) *
                         Monomial::variable(1, static_cast<int>(j)),
                     ring.normalize(c)});
  }
  FormalGroupLaw f(ring, trunc, Kind::Custom, {},
                   Series::from_terms(ring, 2, std::move(terms), trunc));
  f.validate();
  return f;
}

FormalGroupLaw FormalGroupLaw::from_json(Ring ring, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("trunc") || !doc.contains("coeffs")) {
    throw Error(ErrorCode::InvalidArgument, "FGL table needs \"trunc\" and \"coeffs\"");
  }
  int trunc = doc.at("trunc").get<int>();
  std::vector<std::array<Scalar, 3>> table;
  for (const auto& row : doc.at("coeffs")) {
    if (!row.is_array() || row.size() != 3) {
      throw Error(ErrorCode::InvalidArgument, "each coefficient must be [i, j, \"c\"]");
    }
    Scalar c = row[2].is_string() ? ring.parse(row[2].get<std::string>())
                                  : ring.normalize(row[2].get<Scalar>());
    table.push_back({row[0].get<Scalar>(), row[1].get<Scalar>(), c});
  }
  return custom(ring, trunc, table);
}

void FormalGroupLaw::derive() {
  // G(u,v): drop u and v, divide by uv.
  std::vector<Series::Term> g;
  for (const auto& [m, c] : law_.terms()) {
    if (m.exponent(0) >= 1 && m.exponent(1) >= 1) {
      g.push_back({m / (Monomial::variable(0) * Monomial::variable(1)), c});
    }
  }
  int gprec = law_.is_exact() ? kExact : law_.precision() - 2;
  correction_ = Series::from_terms(ring_, 2, std::move(g), gprec);

  Series x = Series::variable(ring_, 1, 0);
  if (correction_.is_zero() && correction_.is_exact()) {
    inverse_ = -x;
  } else {
    // y = -x - x y G(x, y), one more correct degree per pass.
    Series y = (-x).truncated(trunc_);
    for (int pass = 0; pass < trunc_; ++pass) {
      std::vector<Series> images{x, y};
      Series next = -x - x * y * correction_.substitute(images);
      next = next.truncated(trunc_);
      if (next == y) break;
      y = next;
    }
    inverse_ = y;
  }
  cofactor_ = exact_divide(inverse_, x);
}

std::string FormalGroupLaw::kind_name() const {
  switch (kind_) {
    case Kind::Additive: return "additive";
    case Kind::Multiplicative: return "mult";
    case Kind::Hyperbolic: return "hyperbolic";
    case Kind::Custom: return "custom";
  }
  return "?";
}

std::string FormalGroupLaw::label() const {
  std::ostringstream out;
  out << kind_name();
  if (kind_ == Kind::Custom) {
    out << "[";
    bool first = true;
    for (const auto& [m, c] : law_.terms()) {
      if (!first) out << ";";
      first = false;
      out << m.exponent(0) << "," << m.exponent(1) << "," << c;
    }
    out << "]";
  } else if (!params_.empty()) {
    out << "(";
    for (std::size_t k = 0; k < params_.size(); ++k) out << (k ? "," : "") << params_[k];
    out << ")";
  }
  out << "@" << ring_.name();
  return out.str();
}

Scalar FormalGroupLaw::coeff(int i, int j) const {
  return law_.coeff(Monomial::variable(0, i) * Monomial::variable(1, j));
}

Series FormalGroupLaw::formal_sum(const Series& a, const Series& b) const {
  require_no_constant(a, "formal_sum");
  require_no_constant(b, "formal_sum");
  std::vector<Series> images{a, b};
  return law_.substitute(images);
}

Series FormalGroupLaw::formal_inverse(const Series& s) const {
  require_no_constant(s, "formal_inverse");
  std::vector<Series> images{s};
  return inverse_.substitute(images);
}

Series FormalGroupLaw::correction_at(const Series& a, const Series& b) const {
  require_no_constant(a, "correction");
  require_no_constant(b, "correction");
  std::vector<Series> images{a, b};
  return correction_.substitute(images);
}

void FormalGroupLaw::validate() const {
  int bound = law_.is_exact() ? law_.max_degree() : trunc_;
  for (int i = 0; i <= bound; ++i) {
    Scalar expect = (i == 1) ? 1 : 0;
    if (coeff(i, 0) != expect || coeff(0, i) != expect) axiom_failure("unit axiom F(u,0)=u", i);
  }
  for (int deg = 2; deg <= bound; ++deg) {
    for (int i = 1; i < deg; ++i) {
      if (coeff(i, deg - i) != coeff(deg - i, i)) axiom_failure("commutativity", deg);
    }
  }
  Series u = Series::variable(ring_, 3, 0);
  Series v = Series::variable(ring_, 3, 1);
  Series w = Series::variable(ring_, 3, 2);
  std::vector<Series> uv{u, v}, vw{v, w};
  Series fuv = law_.substitute(uv);
  Series fvw = law_.substitute(vw);
  std::vector<Series> left{fuv, w}, right{u, fvw};
  Series diff = (law_.substitute(left) - law_.substitute(right)).truncated(trunc_);
  if (!diff.is_zero()) axiom_failure("associativity", diff.valuation());
}

nlohmann::json FormalGroupLaw::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [m, c] : law_.terms()) {
    coeffs.push_back({m.exponent(0), m.exponent(1), std::to_string(c)});
  }
  return {{"kind", kind_name()}, {"params", params_}, {"ring", ring_.name()},
          {"trunc", trunc_}, {"exact", law_.is_exact()}, {"coeffs", coeffs}};
}

}  // namespace pushpull
