#include "pushpull/motive.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "pushpull/demazure.hpp"
#include "pushpull/meataxe.hpp"

namespace pushpull {

using fp::Field;
using fp::Matrix;
using fp::u32;

TorsorMode parse_torsor_mode(const std::string& text) {
  if (text == "generic") return TorsorMode::Generic;
  if (text == "split") return TorsorMode::Split;
  if (text == "user") return TorsorMode::User;
  throw Error(ErrorCode::InvalidArgument, "unknown torsor mode '" + text + "'");
}

std::string torsor_mode_name(TorsorMode mode) {
  switch (mode) {
    case TorsorMode::Generic: return "generic";
    case TorsorMode::Split: return "split";
    case TorsorMode::User: return "user";
  }
  return "?";
}

std::vector<RationalGenerator> rational_generators_from_json(const nlohmann::json& doc,
                                                             std::size_t size) {
  if (!doc.is_object() || !doc.contains("gens") || !doc["gens"].is_array()) {
    throw Error(ErrorCode::InvalidArgument, "rational generators need a \"gens\" array");
  }
  std::vector<RationalGenerator> out;
  for (const auto& g : doc["gens"]) {
    RationalGenerator r;
    try {
      r.degree = g.at("degree").get<int>();
      r.matrix = g.at("matrix").get<std::vector<std::vector<Scalar>>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, std::string("bad rational generator: ") + e.what());
    }
    if (r.matrix.size() != size) {
      throw Error(ErrorCode::InvalidArgument,
                  "rational generator must be " + std::to_string(size) + " x " + std::to_string(size));
    }
    for (const auto& row : r.matrix) {
      if (row.size() != size) {
        throw Error(ErrorCode::InvalidArgument, "rational generator rows must have length " +
                                                    std::to_string(size));
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

Matrix dense_matrix(const SparseOp& op, const Field& f) {
  const int n = static_cast<int>(op.size());
  Matrix m(n, n);
  for (int u = 0; u < n; ++u) {
    for (const auto& [w, c] : op.cols[u]) m.at(w, u) = f.from_int(c);
  }
  return m;
}

namespace {

BlockOp to_blocks(const SchubertModel& model, const Matrix& m) {
  BlockOp out;
  for (int d = 0; d <= model.top_degree(); ++d) {
    const auto& idx = model.block(d);
    const int k = static_cast<int>(idx.size());
    Matrix b(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) b.at(i, j) = m.at(idx[i], idx[j]);
    }
    out.push_back(std::move(b));
  }
  return out;
}

BlockOp sparse_to_blocks(const SchubertModel& model, const SparseOp& op, const Field& f) {
  BlockOp out;
  for (int d = 0; d <= model.top_degree(); ++d) out.push_back(model.block_matrix(op, d, 0, f));
  return out;
}

void check_homogeneous(const SchubertModel& model, const Matrix& m, int degree) {
  for (int w = 0; w < m.rows; ++w) {
    for (int u = 0; u < m.cols; ++u) {
      if (m.at(w, u) && model.degree(w) != model.degree(u) + degree) {
        throw Error(ErrorCode::InvalidArgument,
                    "rational generator entry (" + std::to_string(w) + ", " + std::to_string(u) +
                        ") does not have degree " + std::to_string(degree));
      }
    }
  }
}

}  // namespace

std::vector<BlockOp> graded_degree0_closure(const SchubertModel& model, const Field& f,
                                            const std::vector<std::pair<int, Matrix>>& gens,
                                            std::size_t max_dim) {
  const int top = model.top_degree();
  const std::size_t n = model.size();
  std::map<int, fp::RowSpace> spans;
  std::vector<std::pair<int, Matrix>> basis;
  auto add = [&](int d, Matrix m) {
    if (d < -top || d > top) return;
    auto it = spans.try_emplace(d, f, n * n).first;
    if (!it->second.insert(m.a)) return;
    basis.emplace_back(d, std::move(m));
    if (basis.size() > max_dim) {
      throw Error(ErrorCode::ClosureBudgetExceeded,
                  "graded closure passed dimension " + std::to_string(max_dim));
    }
  };
  add(0, Matrix::identity(static_cast<int>(n)));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (const auto& [e, g] : gens) {
      int d = basis[k].first + e;
      if (d < -top || d > top) continue;
      add(d, fp::mul(f, basis[k].second, g));
    }
  }
  std::vector<BlockOp> out;
  for (const auto& [d, m] : basis) {
    if (d == 0) out.push_back(to_blocks(model, m));
  }
  return out;
}

std::vector<BlockOp> degree0_generators(const SchubertModel& model, const Field& f, TorsorMode mode,
                                        const std::vector<RationalGenerator>& user,
                                        std::size_t max_dim) {
  const int rank = model.rank();
  std::vector<BlockOp> gens;
  switch (mode) {
    case TorsorMode::Generic:
      for (int j = 0; j < rank; ++j) {
        for (int i = 0; i < rank; ++i) gens.push_back(sparse_to_blocks(model, model.M(j).compose(model.A(i)), f));
      }
      break;
    case TorsorMode::Split: {
      std::vector<SparseOp> words;
      for (std::size_t w = 0; w < model.size(); ++w) words.push_back(model.push_pull_word(static_cast<int>(w)));
      for (std::size_t u = 0; u < model.size(); ++u) {
        SparseOp mu = model.schubert_multiplication(static_cast<int>(u));
        for (int w : model.block(model.degree(static_cast<int>(u)))) {
          gens.push_back(sparse_to_blocks(model, mu.compose(words[w]), f));
        }
      }
      break;
    }
    case TorsorMode::User: {
      std::vector<std::pair<int, Matrix>> graded;
      for (int j = 0; j < rank; ++j) graded.emplace_back(1, dense_matrix(model.M(j), f));
      for (int i = 0; i < rank; ++i) graded.emplace_back(-1, dense_matrix(model.A(i), f));
      for (const auto& g : user) {
        Matrix m(static_cast<int>(model.size()), static_cast<int>(model.size()));
        for (std::size_t w = 0; w < model.size(); ++w) {
          for (std::size_t u = 0; u < model.size(); ++u) {
            m.at(static_cast<int>(w), static_cast<int>(u)) = f.from_int(g.matrix[w][u]);
          }
        }
        check_homogeneous(model, m, g.degree);
        graded.emplace_back(g.degree, std::move(m));
      }
      gens = graded_degree0_closure(model, f, graded, max_dim);
      break;
    }
  }
  return gens;
}

MatrixAlgebra rational_degree0_algebra(const SchubertModel& model, const Field& f, TorsorMode mode,
                                       const std::vector<RationalGenerator>& user,
                                       std::size_t max_dim) {
  std::vector<int> dims = model.dims();
  return MatrixAlgebra::generated_by(f, dims, degree0_generators(model, f, mode, user, max_dim),
                                     max_dim);
}

long long DecompositionReport::summand_count() const {
  long long n = 0;
  for (const auto& s : summands) n += s.multiplicity;
  return n;
}

std::vector<std::vector<long long>> DecompositionReport::polynomial_multiset() const {
  std::vector<std::vector<long long>> out;
  for (const auto& s : summands) {
    for (long long k = 0; k < s.multiplicity; ++k) out.push_back(s.poincare);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<long long> trim(std::vector<long long> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<long long> strip_shift(const std::vector<long long>& p) {
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  return {p.begin() + static_cast<std::ptrdiff_t>(k), p.end()};
}

bool palindromic(const std::vector<long long>& p) {
  auto q = strip_shift(p);
  return std::equal(q.begin(), q.end(), q.rbegin());
}

long long at_one(const std::vector<long long>& p) {
  long long s = 0;
  for (auto c : p) s += c;
  return s;
}

}  // namespace

nlohmann::json DecompositionReport::to_json() const {
  using nlohmann::json;
  json summ = json::array();
  bool pal = true;
  long long rank_sum = 0;
  for (const auto& s : summands) {
    summ.push_back({{"poincare", s.poincare},
                    {"multiplicity", s.multiplicity},
                    {"shift_class", s.shift_class},
                    {"top", s.top},
                    {"end_degree", s.end_degree}});
    pal = pal && palindromic(s.poincare) &&
          static_cast<long long>(s.poincare.size()) <= static_cast<long long>(schubert_dims.size());
    rank_sum += at_one(s.poincare) * s.multiplicity;
  }
  json blk = json::array();
  for (const auto& b : blocks) {
    blk.push_back({{"matrix_size", b.matrix_size},
                   {"field_degree", b.field_degree},
                   {"dim", b.matrix_size * b.matrix_size * b.field_degree}});
  }
  json checks = {{"summand_count", summand_count()},
                 {"rank_sum", rank_sum},
                 {"rank_sum_ok", rank_sum == static_cast<long long>(weyl_order)},
                 {"palindromic", pal},
                 {"expected_r", nullptr},
                 {"mat_size", nullptr},
                 {"match", nullptr},
                 {"routes_agree", nullptr},
                 {"radical_nilpotent", nullptr},
                 {"trace_radical_dim", nullptr}};
  if (expected_r) {
    checks["expected_r"] = *expected_r;
    const long long r = *expected_r;
    if (r > 0 && static_cast<long long>(weyl_order) % r == 0) {
      const long long size = static_cast<long long>(weyl_order) / r;
      checks["mat_size"] = size;
      bool match = summand_count() == size;
      for (const auto& s : summands) match = match && at_one(s.poincare) == r;
      checks["match"] = match;
    } else {
      checks["match"] = false;
    }
  }
  if (routes_agree) checks["routes_agree"] = *routes_agree;
  if (radical_nilpotent) checks["radical_nilpotent"] = *radical_nilpotent;
  if (trace_radical_dim) checks["trace_radical_dim"] = *trace_radical_dim;

  json out = {{"weyl_order", weyl_order},
              {"prime", prime},
              {"torsor", torsor_mode_name(mode)},
              {"seed", seed},
              {"schubert_dims", schubert_dims},
              {"characteristic_image_dims", characteristic_dims},
              {"summands", summ},
              {"shift_class_criterion", "polynomials equal up to a power of t (graded heuristic)"},
              {"algebra",
               {{"dim", algebra_dim},
                {"dim_source", algebra_dim_source},
                {"radical_dim", radical_dim},
                {"blocks", blk},
                {"route", route}}},
              {"checks", checks},
              {"search", {{"random_elements", random_elements}, {"fallback_elements", fallback_elements}}}};
  if (!idempotents.empty()) {
    json idem = json::array();
    for (const auto& e : idempotents) {
      json rows = json::array();
      for (int i = 0; i < e.rows; ++i) {
        std::vector<u32> r(e.a.begin() + static_cast<std::ptrdiff_t>(i) * e.cols,
                           e.a.begin() + static_cast<std::ptrdiff_t>(i + 1) * e.cols);
        rows.push_back(r);
      }
      idem.push_back(rows);
    }
    out["idempotents"] = idem;
  }
  return out;
}

DecompositionReport decompose_motive(const SchubertModel& model, const DecomposeOptions& options) {
  const Field f{options.prime};
  if (!Ring::integers_mod(options.prime).is_field()) {
    throw Error(ErrorCode::InvalidArgument, "--prime must be prime, got " + std::to_string(options.prime));
  }
  const std::vector<int> dims = model.dims();
  const int top = model.top_degree();

  DecompositionReport rep;
  rep.weyl_order = model.size();
  rep.prime = options.prime;
  rep.mode = options.mode;
  rep.seed = options.seed;
  rep.expected_r = options.expect_r;
  for (int d : dims) rep.schubert_dims.push_back(d);
  rep.characteristic_dims = model.characteristic_image_dims(f);

  std::vector<BlockOp> gens =
      degree0_generators(model, f, options.mode, options.user_gens, options.closure_max_dim);

  // Composition factors of each CH^d as a module over the degree-0 algebra.
  std::mt19937_64 rng(options.seed);
  MeataxeStats stats;
  std::vector<IrreducibleModule> reps;
  std::vector<int> end_dims;
  std::vector<std::vector<long long>> counts;
  for (int d = 0; d <= top; ++d) {
    Module v{dims[d], {}};
    for (const auto& g : gens) v.gens.push_back(g[d]);
    for (auto& fac : composition_factors(f, v, rng, options.split_budget, &stats)) {
      std::size_t cls = reps.size();
      for (std::size_t c = 0; c < reps.size(); ++c) {
        if (may_be_isomorphic(f, reps[c], fac.module) && hom_dimension(f, reps[c], fac.module) > 0) {
          cls = c;
          break;
        }
      }
      if (cls == reps.size()) {
        end_dims.push_back(hom_dimension(f, fac, fac.module));
        reps.push_back(std::move(fac));
        counts.emplace_back(top + 1, 0);
      }
      counts[cls][d] += 1;
    }
  }
  rep.random_elements = stats.elements;
  rep.fallback_elements = stats.fallback_elements;

  std::vector<Summand> summands;
  long long semisimple_dim = 0;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    Summand s;
    s.end_degree = end_dims[c];
    for (int d = 0; d <= top; ++d) s.poincare.push_back(counts[c][d] * end_dims[c]);
    s.poincare = trim(s.poincare);
    s.multiplicity = reps[c].module.dim / end_dims[c];
    summands.push_back(std::move(s));
    semisimple_dim += static_cast<long long>(reps[c].module.dim) * reps[c].module.dim / end_dims[c];
  }
  std::sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
    auto va = strip_shift(a.poincare).size(), vb = strip_shift(b.poincare).size();
    auto sa = a.poincare.size() - va, sb = b.poincare.size() - vb;
    if (sa != sb) return sa < sb;
    if (a.poincare != b.poincare) return a.poincare < b.poincare;
    return a.multiplicity < b.multiplicity;
  });
  std::map<std::vector<long long>, int> classes;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    auto key = strip_shift(summands[k].poincare);
    auto it = classes.try_emplace(key, static_cast<int>(classes.size())).first;
    summands[k].shift_class = it->second;
    summands[k].top = static_cast<int>(k);
    rep.blocks.push_back({summands[k].multiplicity, summands[k].end_degree});
  }
  rep.summands = std::move(summands);

  // dim D^(0) = sum_w dim(rational part of CH^{l(w)}) for generic torsors.
  long long formula = 0;
  switch (options.mode) {
    case TorsorMode::Generic:
      for (int d = 0; d <= top; ++d) formula += static_cast<long long>(dims[d]) * rep.characteristic_dims[d];
      rep.algebra_dim_source = "rank formula";
      break;
    case TorsorMode::Split:
      for (int d : dims) formula += static_cast<long long>(d) * d;
      rep.algebra_dim_source = "rank formula";
      break;
    case TorsorMode::User: {
      fp::RowSpace span(f, [&] {
        std::size_t n = 0;
        for (int d : dims) n += static_cast<std::size_t>(d) * d;
        return n;
      }());
      for (const auto& g : gens) span.insert(block_flatten(g));
      formula = static_cast<long long>(span.dim());
      rep.algebra_dim_source = "closure";
      break;
    }
  }
  rep.algebra_dim = formula;
  rep.radical_dim = formula - semisimple_dim;
  rep.route = "composition";

  std::size_t entries = 0;
  for (int d : dims) entries += static_cast<std::size_t>(d) * d;
  if (!options.degrees_only && entries <= options.full_route_max_entries) {
    MatrixAlgebra alg = MatrixAlgebra::generated_by(f, dims, gens, options.closure_max_dim);
    auto rad = radical(alg);
    rep.algebra_dim = static_cast<long long>(alg.dim());
    rep.algebra_dim_source = "closure";
    rep.radical_dim = rep.algebra_dim - semisimple_dim;
    rep.trace_radical_dim = static_cast<long long>(rad.size());
    rep.radical_nilpotent = is_nilpotent_ideal(alg, rad);
    auto idem = primitive_idempotents(alg, rad, {options.seed, options.split_budget});
    rep.random_elements += idem.random_elements;
    rep.fallback_elements += idem.fallback_elements;
    std::vector<std::vector<long long>> polys;
    std::vector<std::vector<int>> blocks;
    for (int d = 0; d <= top; ++d) blocks.push_back(model.block(d));
    std::vector<std::pair<std::vector<long long>, Matrix>> sorted;
    for (const auto& e : idem.idempotents) {
      auto p = trim(block_ranks(f, e));
      polys.push_back(p);
      sorted.emplace_back(p, block_assemble(e, blocks, model.size()));
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [p, m] : sorted) rep.idempotents.push_back(std::move(m));
    std::sort(polys.begin(), polys.end());
    rep.routes_agree = polys == rep.polynomial_multiset() &&
                       rep.radical_dim == *rep.trace_radical_dim && formula == rep.algebra_dim;
    rep.route = "composition+idempotents";
  }
  return rep;
}

ConicResult a1_integer_idempotents(const LatticeSpec& lattice) {
  const Ring z = Ring::integers();
  auto weyl = std::make_shared<WeylGroup>(RootDatum::create(CartanType::parse("A1"), lattice));
  auto fga = std::make_shared<FGAContext>(weyl, FormalGroupLaw::additive(z, 4));
  QWContext qw(fga);

  ConicResult out;
  out.lattice = weyl->datum().lattice_name();
  const Weight w = weyl->datum().basis_weight(0);
  const Weight alpha = weyl->datum().simple_root(0);
  out.weight_name = w == alpha ? "x_alpha" : (lattice.kind == LatticeSpec::Kind::SimplyConnected ? "x_omega" : "x_lambda");

  const Series x = fga->x(w);
  const QWElement xy = qw.mul(qw.scalar(x), qw.y(0));
  // (x Y)^2 = x Delta(x) Y with Delta(x) an integer.
  const Series dx = fga->divided_difference(0, x);
  if (dx.max_degree() > 0) {
    throw Error(ErrorCode::InvalidArgument, "Delta(x) is not a constant");
  }
  out.delta = dx.constant_term();
  if (!qw.equal(qw.mul(xy, xy), qw.scale(fga->constant(out.delta), xy))) {
    throw Error(ErrorCode::RelationFailed, "(xY)^2 differs from Delta(x) xY");
  }

  // (a + c xY)^2 = a^2 + (2ac + c^2 delta) xY: a in {0, 1}, c (2a + c delta - 1) = 0.
  for (Scalar a : {0, 1}) {
    std::vector<Scalar> cs{0};
    if (out.delta != 0 && (1 - 2 * a) % out.delta == 0) cs.push_back((1 - 2 * a) / out.delta);
    for (Scalar c : cs) {
      ConicIdempotent idem;
      idem.a = a;
      idem.c = c;
      QWElement p = qw.add(qw.scalar(fga->constant(a)), qw.scale(fga->constant(c), xy));
      idem.verified = qw.equal(qw.mul(p, p), p);
      idem.element = qw.to_y_basis(p);
      std::string term = out.weight_name + " Y";
      std::string text;
      if (c == 0) {
        text = std::to_string(a);
      } else {
        std::string mag = (c == 1 || c == -1) ? term : std::to_string(c < 0 ? -c : c) + " " + term;
        if (a == 0) {
          text = (c < 0 ? "-" : "") + mag;
        } else {
          text = std::to_string(a) + (c < 0 ? " - " : " + ") + mag;
        }
      }
      idem.text = text;
      out.idempotents.push_back(std::move(idem));
    }
  }
  return out;
}

nlohmann::json ConicResult::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& p : idempotents) {
    list.push_back({{"text", p.text}, {"a", p.a}, {"c", p.c}, {"verified", p.verified}});
  }
  return {{"lattice", lattice}, {"x", weight_name}, {"delta", delta}, {"idempotents", list}};
}

}  // namespace pushpull
