#include "pushpull/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pushpull/cache.hpp"
#include "pushpull/demazure.hpp"
#include "pushpull/motive.hpp"
#include "pushpull/version.hpp"

namespace pushpull::cli {

namespace {

using nlohmann::json;

struct Options {
  // root datum
  std::string type;
  int rank = 0;
  std::string lattice = "sc";
  std::size_t weyl_cap = WeylGroup::kDefaultCap;
  // formal group law
  std::string fgl = "additive";
  long long beta = 1;
  long long mu1 = 1;
  long long mu2 = 0;
  std::string table;
  long long modulus = 0;
  // global
  int trunc = -1;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::string cache_dir;
  // fga eval
  std::string weight;
  // demazure
  int samples = 20;
  // motive
  unsigned prime = 0;
  std::string torsor = "generic";
  std::string rational_gens;
  long long expect_r = 0;
  bool degrees_only = false;
  std::string source = "auto";
  std::size_t gkm_cap = SchubertModel::kDefaultGKMCap;
  std::size_t full_cap = 512;
  int budget = 400;
};

// Thrown for results that computed fine but failed a check.
struct VerificationFailed {
  json document;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, "bad JSON in " + path + ": " + e.what());
  }
}

Ring coefficient_ring(const Options& o) {
  return o.modulus == 0 ? Ring::integers() : Ring::integers_mod(o.modulus);
}

RootDatum make_datum(const Options& o) {
  if (o.type.empty()) throw Error(ErrorCode::InvalidArgument, "--type is required");
  return RootDatum::create(CartanType::parse(o.type, o.rank), LatticeSpec::parse(o.lattice));
}

int default_trunc(const Options& o, const RootDatum& d) {
  return o.trunc >= 0 ? o.trunc : static_cast<int>(d.num_positive_roots()) + 2;
}

FormalGroupLaw make_fgl(const Options& o, int trunc) {
  Ring ring = coefficient_ring(o);
  if (o.fgl == "additive") return FormalGroupLaw::additive(ring, trunc);
  if (o.fgl == "mult" || o.fgl == "multiplicative") return FormalGroupLaw::multiplicative(ring, o.beta, trunc);
  if (o.fgl == "hyperbolic") return FormalGroupLaw::hyperbolic(ring, o.mu1, o.mu2, trunc);
  if (o.fgl == "custom") {
    if (o.table.empty()) throw Error(ErrorCode::InvalidArgument, "--fgl custom needs --table");
    return FormalGroupLaw::from_json(ring, parse_json_file(o.table));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown formal group law '" + o.fgl + "'");
}

json datum_config(const Options& o, const RootDatum& d) {
  return {{"type", d.type().label()}, {"lattice", o.lattice}, {"pairing_matrix", d.pairing()}};
}

json fgl_config(const Options& o, const FormalGroupLaw& f) {
  json c = {{"fgl", f.kind_name()}, {"label", f.label()}, {"trunc", f.trunc()},
            {"ring", f.ring().name()}};
  if (o.fgl == "custom") c["table"] = o.table;
  return c;
}

// Dotted keys, one per line; arrays of objects are indexed.
void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
  const bool nested = j.is_object() || (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) {
                                          return e.is_object();
                                        }));
  if (!nested) {
    os << std::left << std::setw(32) << prefix << " " << (j.is_string() ? j.get<std::string>() : j.dump())
       << "\n";
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  }
}

std::string generic_table(const std::string& command, const json& result) {
  std::ostringstream os;
  os << command << "\n";
  flatten(result, "", os);
  return os.str();
}

void emit(const Options& o, const std::string& command, const json& config, const json& result,
          const std::string& table_text = {}) {
  json doc = {{"version", kLibraryVersion}, {"command", command}, {"config", config}, {"result", result}};
  std::string text = doc.dump(2) + "\n";
  if (o.format == "table") text = table_text.empty() ? generic_table(command, result) : table_text;
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.out);
    out << text;
  }
}

std::optional<Cache> open_cache(const Options& o) {
  if (!o.cache_dir.empty()) return Cache(o.cache_dir);
  return Cache::from_env();
}

Cache require_cache(const Options& o) {
  auto c = open_cache(o);
  if (!c) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("no cache directory: pass --cache-dir or set ") + Cache::kEnvVar);
  }
  return *c;
}

// --- commands -------------------------------------------------------------

void cmd_rootdata_show(const Options& o) {
  RootDatum d = make_datum(o);
  WeylGroup w(d, o.weyl_cap);
  json result = d.to_json();
  result["weyl_order"] = w.size();
  result["poincare"] = w.poincare();
  result["longest_word"] = w.word_string(w.longest());
  result["weyl_degrees"] = weyl_degrees(d.type());
  emit(o, "rootdata show", datum_config(o, d), result);
}

void cmd_fgl_verify(const Options& o) {
  FormalGroupLaw f = make_fgl(o, o.trunc >= 0 ? o.trunc : 6);
  json config = fgl_config(o, f);
  json result = f.to_json();
  try {
    f.validate();
    result["valid"] = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::FGLAxiomViolation) throw;
    result["valid"] = false;
    result["violation"] = e.what();
    emit(o, "fgl verify", config, result);
    throw VerificationFailed{};
  }
  emit(o, "fgl verify", config, result);
}

Weight parse_weight(const std::string& text, int rank) {
  Weight w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      w.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad weight '" + text + "'");
    }
  }
  if (static_cast<int>(w.size()) != rank) {
    throw Error(ErrorCode::InvalidArgument,
                "weight needs " + std::to_string(rank) + " comma-separated coordinates");
  }
  return w;
}

void cmd_fga_eval(const Options& o) {
  RootDatum d = make_datum(o);
  auto weyl = std::make_shared<WeylGroup>(d, o.weyl_cap);
  FGAContext fga(weyl, make_fgl(o, default_trunc(o, d)));
  Weight lambda = o.weight.empty() ? d.basis_weight(0) : parse_weight(o.weight, d.rank());
  const Series& x = fga.x(lambda);
  json deltas = json::array(), kappas = json::array();
  for (int i = 0; i < d.rank(); ++i) {
    deltas.push_back(series_to_json(fga.divided_difference(i, x)));
    kappas.push_back(series_to_json(fga.kappa(i)));
  }
  json config = datum_config(o, d);
  config.update(fgl_config(o, fga.fgl()));
  config["weight"] = lambda;
  emit(o, "fga eval", config,
       {{"weight", lambda}, {"x", series_to_json(x)}, {"delta", deltas}, {"kappa", kappas}});
}

std::shared_ptr<QWContext> make_qw(const Options& o, const RootDatum& d) {
  auto weyl = std::make_shared<WeylGroup>(d, o.weyl_cap);
  auto fga = std::make_shared<FGAContext>(weyl, make_fgl(o, default_trunc(o, d)));
  return std::make_shared<QWContext>(fga);
}

void cmd_demazure_relations(const Options& o) {
  RootDatum d = make_datum(o);
  auto qw = make_qw(o, d);
  RelationReport rep = verify_relations(*qw, o.samples, o.seed);
  json config = datum_config(o, d);
  config.update(fgl_config(o, qw->fga().fgl()));
  config["samples"] = o.samples;
  config["seed"] = o.seed;
  emit(o, "demazure relations", config, relation_report_to_json(*qw, rep));
  if (!rep.ok()) throw VerificationFailed{};
}

json structure_key(const QWContext& qw) {
  const auto& w = qw.weyl();
  json words = json::array();
  for (std::size_t k = 0; k < w.size(); ++k) words.push_back(w.word_string(static_cast<int>(k)));
  return {{"kind", "structure-constants"},
          {"type", std::string(1, w.datum().type().letter)},
          {"rank", w.rank()},
          {"lattice", w.datum().pairing()},
          {"fgl", qw.fga().fgl().label()},
          {"trunc", qw.fga().trunc()},
          {"words", words}};
}

void cmd_demazure_structure(const Options& o) {
  RootDatum d = make_datum(o);
  auto qw = make_qw(o, d);
  json key = structure_key(*qw);
  auto cache = open_cache(o);
  std::optional<json> table;
  if (cache) table = cache->load(key);
  if (table) {
    std::cerr << "structure constants: cache hit " << cache->path_for(key).string() << "\n";
  } else {
    table = structure_table_to_json(*qw, structure_constants(*qw));
    if (cache) {
      cache->store(key, *table);
      std::cerr << "structure constants: stored " << cache->path_for(key).string() << "\n";
    }
  }
  json config = datum_config(o, d);
  config.update(fgl_config(o, qw->fga().fgl()));
  emit(o, "demazure structure-constants", config, *table);
}

std::string summand_table(const DecompositionReport& rep) {
  std::ostringstream os;
  os << "|W| = " << rep.weyl_order << ", p = " << rep.prime << ", torsor "
     << torsor_mode_name(rep.mode) << ", seed " << rep.seed << "\n";
  os << "poincare                          mult  shift_class\n";
  for (const auto& s : rep.summands) {
    std::ostringstream poly;
    bool first = true;
    for (std::size_t k = 0; k < s.poincare.size(); ++k) {
      if (!s.poincare[k]) continue;
      if (!first) poly << " + ";
      first = false;
      if (s.poincare[k] != 1 || k == 0) poly << s.poincare[k];
      if (k == 1) poly << "t";
      if (k > 1) poly << "t^" << k;
    }
    std::string p = poly.str();
    os << p << std::string(p.size() < 34 ? 34 - p.size() : 1, ' ') << s.multiplicity << "  "
       << s.shift_class << "\n";
  }
  os << "summands " << rep.summand_count() << ", dim D0 " << rep.algebra_dim << ", radical "
     << rep.radical_dim << "\n";
  return os.str();
}

void cmd_motive_decompose(const Options& o) {
  if (o.prime == 0) throw Error(ErrorCode::InvalidArgument, "--prime is required");
  RootDatum d = make_datum(o);
  auto weyl = std::make_shared<WeylGroup>(d, o.weyl_cap);
  SchubertModel::Source src = SchubertModel::Source::Auto;
  if (o.source == "gkm") src = SchubertModel::Source::GKM;
  else if (o.source == "combinatorial") src = SchubertModel::Source::Combinatorial;
  else if (o.source != "auto") throw Error(ErrorCode::InvalidArgument, "--source must be auto, gkm or combinatorial");
  SchubertModel model = SchubertModel::build(weyl, src, o.gkm_cap);

  DecomposeOptions opt;
  opt.prime = o.prime;
  opt.mode = parse_torsor_mode(o.torsor);
  if (opt.mode == TorsorMode::User) {
    if (o.rational_gens.empty()) throw Error(ErrorCode::InvalidArgument, "--torsor user needs --rational-gens");
    opt.user_gens = rational_generators_from_json(parse_json_file(o.rational_gens), model.size());
  }
  opt.seed = o.seed;
  if (o.expect_r > 0) opt.expect_r = o.expect_r;
  opt.degrees_only = o.degrees_only;
  opt.full_route_max_entries = o.full_cap;
  opt.split_budget = o.budget;
  DecompositionReport rep = decompose_motive(model, opt);

  json config = datum_config(o, d);
  config.update({{"prime", o.prime},
                 {"torsor", o.torsor},
                 {"seed", o.seed},
                 {"expect_r", o.expect_r > 0 ? json(o.expect_r) : json()},
                 {"degrees_only", o.degrees_only},
                 {"schubert_source", model.from_gkm() ? "gkm" : "combinatorial"},
                 {"full_route_max_entries", o.full_cap},
                 {"split_budget", o.budget}});
  if (!o.rational_gens.empty()) config["rational_gens"] = o.rational_gens;
  json result = rep.to_json();
  emit(o, "motive decompose", config, result, summand_table(rep));
  const json& c = result["checks"];
  if (c["match"] == false || c["routes_agree"] == false || c["rank_sum_ok"] == false ||
      c["radical_nilpotent"] == false) {
    throw VerificationFailed{};
  }
}

void cmd_motive_conic(const Options& o) {
  ConicResult r = a1_integer_idempotents(LatticeSpec::parse(o.lattice));
  std::string text;
  {
    std::ostringstream os;
    os << "lattice " << r.lattice << ": {";
    for (std::size_t k = 0; k < r.idempotents.size(); ++k) os << (k ? ", " : "") << r.idempotents[k].text;
    os << "}\n";
    text = os.str();
  }
  emit(o, "motive conic", {{"lattice", o.lattice}, {"fgl", "additive"}}, r.to_json(), text);
  for (const auto& p : r.idempotents) {
    if (!p.verified) throw VerificationFailed{};
  }
}

void cmd_cache(const Options& o, const std::string& action) {
  Cache cache = require_cache(o);
  json config = {{"cache_dir", cache.dir().string()}};
  if (action == "list") {
    emit(o, "cache list", config, cache.list());
  } else if (action == "clear") {
    emit(o, "cache clear", config, {{"removed", cache.clear()}});
  } else {
    emit(o, "cache verify", config, {{"verified", cache.verify()}});
  }
}

// --- plumbing -------------------------------------------------------------

void add_datum(CLI::App* app, Options& o) {
  app->add_option("--type", o.type, "Cartan type, e.g. A2 or F4 (or a letter with --rank)");
  app->add_option("--rank", o.rank, "rank when --type is a bare letter");
  app->add_option("--lattice", o.lattice, "sc, ad, or a JSON file with a pairing matrix");
  app->add_option("--weyl-cap", o.weyl_cap, "largest Weyl group to enumerate");
}

void add_fgl(CLI::App* app, Options& o, const std::string& flag = "--fgl") {
  app->add_option(flag, o.fgl, "additive, mult, hyperbolic or custom");
  app->add_option("--beta", o.beta, "multiplicative parameter");
  app->add_option("--mu1", o.mu1, "hyperbolic parameter mu1");
  app->add_option("--mu2", o.mu2, "hyperbolic parameter mu2");
  app->add_option("--table", o.table, "custom coefficient table (JSON)");
  app->add_option("--modulus", o.modulus, "coefficients in Z/m (0 for Z)");
}

json error_json(const std::string& code, const std::string& message) {
  return {{"version", kLibraryVersion}, {"error", {{"code", code}, {"message", message}}}};
}

bool is_usage_error(ErrorCode c) {
  return c == ErrorCode::InvalidArgument || c == ErrorCode::InvalidCartanType ||
         c == ErrorCode::LatticeNotContainingRoots;
}

}  // namespace

int run(int argc, char** argv) {
  Options o;
  CLI::App app{"Push-pull operators, formal affine Demazure algebras and flag motives"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kLibraryVersion);
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--trunc", o.trunc, "truncation degree (default |Phi+| + 2)");
  app.add_option("--out", o.out, "write the report to this file");
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cache-dir", o.cache_dir, std::string("cache directory (default $") + Cache::kEnvVar + ")");

  std::string action;
  auto* rootdata = app.add_subcommand("rootdata", "root data and Weyl groups")->require_subcommand(1);
  auto* rd_show = rootdata->add_subcommand("show", "dump roots, Coxeter matrix, |W|, Poincare polynomial");
  add_datum(rd_show, o);

  auto* fgl = app.add_subcommand("fgl", "formal group laws")->require_subcommand(1);
  auto* fgl_verify = fgl->add_subcommand("verify", "check the FGL axioms up to the truncation");
  add_fgl(fgl_verify, o, "--kind");
  fgl_verify->add_option("--fgl", o.fgl, "alias of --kind");

  auto* fga = app.add_subcommand("fga", "formal group algebra")->require_subcommand(1);
  auto* fga_eval = fga->add_subcommand("eval", "print x_lambda, Delta_{-i}(x_lambda) and kappa_i");
  add_datum(fga_eval, o);
  add_fgl(fga_eval, o);
  fga_eval->add_option("--weight", o.weight, "lattice coordinates, comma separated");

  auto* dem = app.add_subcommand("demazure", "formal affine Demazure algebra")->require_subcommand(1);
  auto* dem_rel = dem->add_subcommand("relations", "verify quadratic, commutation and braid relations");
  add_datum(dem_rel, o);
  add_fgl(dem_rel, o);
  dem_rel->add_option("--samples", o.samples, "random elements per commutation check");
  auto* dem_sc = dem->add_subcommand("structure-constants", "products Y_{I_u} Y_{I_w} in the Y basis");
  add_datum(dem_sc, o);
  add_fgl(dem_sc, o);

  auto* mot = app.add_subcommand("motive", "motivic decompositions")->require_subcommand(1);
  auto* mot_dec = mot->add_subcommand("decompose", "decompose the flag motive over F_p");
  add_datum(mot_dec, o);
  mot_dec->add_option("--prime", o.prime, "characteristic p")->required();
  mot_dec->add_option("--torsor", o.torsor, "generic, split or user")
      ->check(CLI::IsMember({"generic", "split", "user"}));
  mot_dec->add_option("--rational-gens", o.rational_gens, "JSON file of rational cycle operators");
  mot_dec->add_option("--expect-r", o.expect_r, "expected rank r of the generic summand");
  mot_dec->add_flag("--degrees-only", o.degrees_only, "ranks per graded block only, no idempotent matrices");
  mot_dec->add_option("--source", o.source, "Schubert model: auto, gkm or combinatorial");
  mot_dec->add_option("--gkm-cap", o.gkm_cap, "largest |W| built through the GKM model");
  mot_dec->add_option("--full-cap", o.full_cap, "largest block algebra (entries) for explicit idempotents");
  mot_dec->add_option("--split-budget", o.budget, "random elements per splitting step");
  auto* mot_conic = mot->add_subcommand("conic", "integral idempotents for A_1");
  mot_conic->add_option("--lattice", o.lattice, "sc or ad");

  auto* cache = app.add_subcommand("cache", "structure-constant cache")->require_subcommand(1);
  for (const char* a : {"list", "clear", "verify"}) {
    cache->add_subcommand(a, std::string(a) + " cache entries")->callback([&action, a] { action = a; });
  }

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json("UsageError", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    if (rd_show->parsed()) cmd_rootdata_show(o);
    else if (fgl_verify->parsed()) cmd_fgl_verify(o);
    else if (fga_eval->parsed()) cmd_fga_eval(o);
    else if (dem_rel->parsed()) cmd_demazure_relations(o);
    else if (dem_sc->parsed()) cmd_demazure_structure(o);
    else if (mot_dec->parsed()) cmd_motive_decompose(o);
    else if (mot_conic->parsed()) cmd_motive_conic(o);
    else if (cache->parsed()) cmd_cache(o, action);
  } catch (const VerificationFailed&) {
    return 1;
  } catch (const Error& e) {
    std::cout << error_json(std::string(error_code_name(e.code())), e.what()).dump(2) << "\n";
    return is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cout << error_json("InternalError", e.what()).dump(2) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace pushpull::cli
