#include "gkmod/job.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "json.hpp"

namespace gkmod {

namespace {

using nlohmann::json;

// ---- parsing ---------------------------------------------------------------

std::string where(const std::string& key) { return "config key '" + key + "'"; }

Rational scalar_rational(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) throw ParseError(where(key) + ": expected a number");
  try {
    return parse_rational(node.Scalar());
  } catch (const ParseError& e) {
    throw ParseError(where(key) + ": " + e.what());
  }
}

int scalar_int(const YAML::Node& node, const std::string& key) {
  Rational x = scalar_rational(node, key);
  if (!is_integer(x) || abs(x) > 1000000000) throw ParseError(where(key) + ": expected an integer");
  return static_cast<int>(x.get_num().get_si());
}

// A scalar is read as a vector of length one.
RVector rational_vector(const YAML::Node& node, const std::string& key) {
  if (node.IsScalar()) return {scalar_rational(node, key)};
  if (!node.IsSequence()) throw ParseError(where(key) + ": expected a list of numbers");
  RVector out;
  for (const auto& item : node) out.push_back(scalar_rational(item, key));
  return out;
}

std::vector<RVector> rational_matrix(const YAML::Node& node, const std::string& key) {
  if (!node.IsSequence()) throw ParseError(where(key) + ": expected a list of rows");
  std::vector<RVector> out;
  for (const auto& row : node) {
    if (!row.IsSequence()) throw ParseError(where(key) + ": every row must be a list");
    out.push_back(rational_vector(row, key));
  }
  return out;
}

std::vector<int> int_vector(const YAML::Node& node, const std::string& key) {
  std::vector<int> out;
  if (node.IsScalar()) return {scalar_int(node, key)};
  if (!node.IsSequence()) throw ParseError(where(key) + ": expected a list of integers");
  for (const auto& item : node) out.push_back(scalar_int(item, key));
  return out;
}

std::string scalar_string(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) throw ParseError(where(key) + ": expected a string");
  return node.Scalar();
}

// ---- output helpers --------------------------------------------------------

json rational_json(const Rational& x) { return to_string(x); }

json vector_json(const RVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

template <class W>
json weight_json(const W& w) {
  return vector_json(w.coords());
}

json matrix_json(const RMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

template <class W>
json weights_json(std::vector<W> ws) {
  std::sort(ws.begin(), ws.end());
  json out = json::array();
  for (const auto& w : ws) out.push_back(weight_json(w));
  return out;
}

json multiset_json(const WeightMultiset<TWeight>& ms) {
  json out = json::array();
  for (const auto& [w, m] : ms) out.push_back({{"weight", weight_json(w)}, {"multiplicity", m}});
  return out;
}

std::string multiset_text(const WeightMultiset<TWeight>& ms) {
  std::string s = "{";
  bool first = true;
  for (const auto& [w, m] : ms) {
    if (!first) s += ", ";
    first = false;
    s += w.to_string();
    if (m != 1) s += "^" + std::to_string(m);
  }
  return s + "}";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

class Report {
 public:
  void line(const std::string& key, const std::string& value) { out_ << key << ": " << value << "\n"; }
  void raw(const std::string& text) { out_ << text << "\n"; }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

// ---- job helpers -----------------------------------------------------------

void require_command(const std::string& command) {
  const auto& all = job_commands();
  if (std::find(all.begin(), all.end(), command) == all.end())
    throw ParseError("unknown command '" + command + "'");
}

WeylLimits limits_for(const JobSpec& job) {
  WeylLimits limits;
  if (job.max_weyl) limits.max_order = *job.max_weyl;
  return limits;
}

TWeight job_mu(const JobSpec& job, const ReductivePair& p) {
  if (job.mu && job.m) throw ValidationError("give either mu or m, not both");
  if (job.m) {
    if (p.embedding_kind() != EmbeddingKind::sl2_characteristic)
      throw ValidationError("m is only accepted for sl2 pairs; give mu");
    if (!is_integer(*job.m) || *job.m < 0) throw ValidationError("m must be a natural number");
    return p.rho() * *job.m;
  }
  if (!job.mu) throw ValidationError("this command needs mu (or m for sl2 pairs)");
  if (job.mu->size() != p.rank_t())
    throw DimensionMismatch("mu has " + std::to_string(job.mu->size()) + " coordinates; rank(t) = " +
                            std::to_string(p.rank_t()));
  return TWeight(*job.mu);
}

TWeight job_lambda(const JobSpec& job, const ReductivePair& p) {
  if (job.lambda) {
    if (job.lambda->size() != p.rank_t()) throw DimensionMismatch("lambda must have rank(t) coordinates");
    return TWeight(*job.lambda);
  }
  return job_mu(job, p) + p.rho() * Rational(2);
}

GWeight job_nu(const JobSpec& job, const ReductivePair& p) {
  if (job.nu && job.omega) throw ValidationError("give either nu or omega, not both");
  if (job.nu) {
    if (job.nu->size() != p.g().rank()) throw DimensionMismatch("nu must have rank(g) coordinates");
    return GWeight(*job.nu);
  }
  if (job.omega) {
    if (job.omega->size() != p.rank_t()) throw DimensionMismatch("omega must have rank(t) coordinates");
    return p.lift(TWeight(*job.omega));
  }
  throw ValidationError("fundseries needs nu (in h*) or omega (in t*)");
}

json pair_section(const ReductivePair& p, const WeylLimits& limits, Report& rep) {
  json j;
  j["lie_type"] = p.g().lie_type().to_string();
  j["embedding"] = to_string(p.embedding_kind());
  j["rank_g"] = p.g().rank();
  j["rank_t"] = p.rank_t();
  if (!p.labels().empty()) j["labels"] = p.labels();
  j["restriction"] = matrix_json(p.restriction());
  j["t_form"] = matrix_json(p.t_form());
  j["k_simple_roots"] = weights_json(p.k_simple_roots());
  j["k_positive_roots"] = weights_json(p.k_positive_roots());
  j["rho"] = weight_json(p.rho());
  j["delta_t"] = weights_json(p.delta_t());
  j["rho_tilde"] = weight_json(p.g().rho_tilde());
  std::size_t wg = weyl_group(p.g(), limits).size();
  std::size_t wk = p.k_weyl_group(limits).size();
  j["weyl_order_g"] = wg;
  j["weyl_order_k"] = wk;

  std::string labels;
  if (!p.labels().empty()) {
    labels = " [";
    for (std::size_t i = 0; i < p.labels().size(); ++i) labels += (i ? ", " : "") + std::to_string(p.labels()[i]);
    labels += "]";
  }
  rep.line("lie_type", p.g().lie_type().to_string());
  rep.line("embedding", to_string(p.embedding_kind()) + labels);
  rep.line("rank_t", std::to_string(p.rank_t()));
  rep.line("rho", p.rho().to_string());
  rep.line("k_positive_roots", std::to_string(p.k_positive_roots().size()));
  rep.line("delta_t", std::to_string(p.delta_t().size()) + " weights");
  rep.line("weyl_order_g", std::to_string(wg));
  rep.line("weyl_order_k", std::to_string(wk));
  return j;
}

json parabolic_section(const ReductivePair& p, const CompatibleParabolic& par, Report& rep) {
  json j;
  j["lambda"] = weight_json(par.lambda);
  j["regular"] = is_regular(p, par.lambda);
  j["minimal"] = par.minimal;
  j["n_roots"] = weights_json(par.n_roots);
  j["m_roots"] = weights_json(par.m_roots);
  j["ch_t_n"] = multiset_json(par.ch_t_n);
  j["ch_t_n_cap_k"] = multiset_json(par.ch_t_n_cap_k);
  j["ch_t_n_cap_kperp"] = multiset_json(par.ch_t_n_cap_kperp);
  j["rho_n"] = weight_json(par.rho_n);
  j["rho_n_perp"] = weight_json(par.rho_n_perp);
  j["s"] = par.s;
  j["r"] = par.r;

  rep.line("lambda", par.lambda.to_string());
  rep.line("regular", bool_text(is_regular(p, par.lambda)));
  rep.line("minimal", bool_text(par.minimal));
  rep.line("dim_n", std::to_string(par.n_roots.size()));
  rep.line("ch_t_n", multiset_text(par.ch_t_n));
  rep.line("ch_t_n_cap_k", multiset_text(par.ch_t_n_cap_k));
  rep.line("ch_t_n_cap_kperp", multiset_text(par.ch_t_n_cap_kperp));
  rep.line("rho_n", par.rho_n.to_string());
  rep.line("rho_n_perp", par.rho_n_perp.to_string());
  rep.line("s", std::to_string(par.s));
  rep.line("r", std::to_string(par.r));
  return j;
}

json genericity_section(const ReductivePair& p, const TWeight& mu, const GenericityReport& g, Report& rep) {
  json j;
  j["mu"] = weight_json(mu);
  j["norm2_shifted"] = rational_json(norm2_shifted(p, mu));
  j["holds"] = g.holds;
  j["condition1"] = g.condition1_ok;
  j["condition2"] = g.condition2_ok;
  j["failing_root"] = g.failing_root ? weight_json(*g.failing_root) : json(nullptr);
  j["failing_subset"] = g.failing_subset ? multiset_json(*g.failing_subset) : json(nullptr);
  j["failing_rho_s"] = g.failing_rho_s ? weight_json(*g.failing_rho_s) : json(nullptr);
  j["failing_value"] = g.failing_value ? rational_json(*g.failing_value) : json(nullptr);

  rep.line("mu", mu.to_string());
  rep.line("norm2_shifted", to_string(norm2_shifted(p, mu)));
  rep.line("generic", bool_text(g.holds));
  rep.line("condition1", bool_text(g.condition1_ok));
  if (g.failing_root) rep.line("failing_root", g.failing_root->to_string());
  rep.line("condition2", bool_text(g.condition2_ok));
  if (g.failing_subset) {
    rep.line("failing_subset", multiset_text(*g.failing_subset));
    rep.line("failing_value", to_string(*g.failing_value));
  }
  return j;
}

json table_section(const MultiplicityTable& t, const InducingModule& e, Report& rep) {
  json j;
  j["omega"] = weight_json(e.omega);
  j["mu"] = weight_json(e.mu);
  j["dim_e"] = e.dim_e;
  j["cutoff"] = rational_json(t.cutoff);
  j["s"] = t.s;
  j["r"] = t.r;
  j["interpretation"] = t.interpretation();
  json entries = json::array();
  for (const auto& entry : t.entries)
    entries.push_back(
        {{"delta", weight_json(entry.delta)}, {"value", entry.value}, {"norm2_shifted", rational_json(entry.norm2)}});
  j["entries"] = std::move(entries);

  rep.line("omega", e.omega.to_string());
  rep.line("mu", e.mu.to_string());
  rep.line("dim_e", std::to_string(e.dim_e));
  rep.line("cutoff", to_string(t.cutoff));
  rep.line("degree", std::to_string(t.s));
  rep.line("interpretation", t.interpretation());
  rep.line("entries", std::to_string(t.entries.size()));
  for (const auto& entry : t.entries)
    rep.raw("  " + entry.delta.to_string() + " " + std::to_string(entry.value) + " " + to_string(entry.norm2));
  return j;
}

json character_section(const ReductivePair& p, const InducingModule& e, Report& rep) {
  auto chi = infinitesimal_character(p.g(), e);
  json j;
  j["nu"] = weight_json(e.nu);
  j["rho_b"] = weight_json(e.rho_b);
  j["nu_plus_rho_b"] = weight_json(e.nu + e.rho_b);
  j["representative"] = weight_json(chi.representative);
  rep.line("nu", e.nu.to_string());
  rep.line("rho_b", e.rho_b.to_string());
  rep.line("infinitesimal_character", chi.representative.to_string());
  return j;
}

struct FundseriesRun {
  CompatibleParabolic par;
  InducingModule e;
  MultiplicityTable table;
};

FundseriesRun run_fundseries(const JobSpec& job, const ReductivePair& p, json& doc, Report& rep) {
  FundseriesOptions opts;
  opts.weyl = limits_for(job);
  GWeight nu = job_nu(job, p);
  FundseriesRun run;
  run.par = job.lambda ? compatible_parabolic(p, job_lambda(job, p)) : fundamental_parabolic(p, nu);
  run.e = make_inducing_module(p, run.par, nu);
  Rational cutoff = job.cutoff ? *job.cutoff
                               : norm2_shifted(p, run.e.mu) + 10 * p.t_pair(run.par.rho_n, run.par.rho_n);
  run.table = ktype_table(p, run.par, run.e, cutoff, opts);

  rep.raw("[parabolic]");
  doc["parabolic"] = parabolic_section(p, run.par, rep);
  rep.raw("[genericity]");
  try {
    doc["genericity"] = genericity_section(p, run.e.mu, is_generic(p, run.e.mu), rep);
  } catch (const ValidationError& err) {
    doc["genericity"] = {{"mu", weight_json(run.e.mu)}, {"holds", false}, {"error", err.what()}};
    rep.line("mu", run.e.mu.to_string());
    rep.line("generic", "false");
    rep.line("error", err.what());
  }
  rep.raw("[table]");
  doc["table"] = table_section(run.table, run.e, rep);
  rep.raw("[character]");
  doc["character"] = character_section(p, run.e, rep);
  return run;
}

}  // namespace

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> all = {"pair-info", "parabolic", "generic-check",
                                               "sl2-threshold", "fundseries", "verify"};
  return all;
}

JobSpec parse_job(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string("config syntax: ") + e.what());
  }
  if (!root.IsMap()) throw ParseError("config must be a key-value mapping");

  JobSpec job;
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    const YAML::Node& v = kv.second;
    if (key == "lie_type") {
      job.lie_type = scalar_string(v, key);
    } else if (key == "k") {
      job.k_kind = scalar_string(v, key);
    } else if (key == "labels") {
      job.labels = int_vector(v, key);
    } else if (key == "levi") {
      auto idx = int_vector(v, key);
      job.levi = std::set<int>(idx.begin(), idx.end());
    } else if (key == "restriction") {
      job.restriction = rational_matrix(v, key);
    } else if (key == "k_simple_roots") {
      job.k_simple_roots = rational_matrix(v, key);
    } else if (key == "k_coroots") {
      job.k_coroots = rational_matrix(v, key);
    } else if (key == "command") {
      job.command = scalar_string(v, key);
      require_command(job.command);
    } else if (key == "mu") {
      job.mu = rational_vector(v, key);
    } else if (key == "m") {
      job.m = scalar_rational(v, key);
    } else if (key == "nu") {
      job.nu = rational_vector(v, key);
    } else if (key == "omega") {
      job.omega = rational_vector(v, key);
    } else if (key == "lambda") {
      job.lambda = rational_vector(v, key);
    } else if (key == "cutoff") {
      job.cutoff = scalar_rational(v, key);
    } else if (key == "max_weyl") {
      int n = scalar_int(v, key);
      if (n <= 0) throw ParseError(where(key) + ": must be positive");
      job.max_weyl = static_cast<std::size_t>(n);
    } else {
      throw ParseError("unknown config key '" + key + "'");
    }
  }
  if (job.lie_type.empty()) throw ParseError("config is missing lie_type");
  if (job.k_kind.empty()) throw ParseError("config is missing k");
  return job;
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job(buf.str());
}

ReductivePair build_pair(const JobSpec& job) {
  RootSystem g = build_root_system(LieType::parse(job.lie_type));
  if (job.k_kind == "sl2") {
    if (job.labels.empty()) throw ValidationError("k = sl2 needs labels");
    return make_sl2_pair(g, job.labels);
  }
  if (job.k_kind == "cartan") return make_cartan_pair(g);
  if (job.k_kind == "levi") return make_levi_pair(g, job.levi);
  if (job.k_kind == "explicit") {
    if (job.restriction.empty()) throw ValidationError("k = explicit needs restriction");
    RMatrix r = RMatrix::from_rows(job.restriction, g.rank());
    std::vector<TWeight> roots;
    for (const auto& row : job.k_simple_roots) roots.emplace_back(row);
    return make_explicit_pair(g, r, std::move(roots), job.k_coroots);
  }
  throw ParseError("k must be one of sl2, cartan, levi, explicit (got '" + job.k_kind + "')");
}

JobResult run_job(const JobSpec& job) {
  if (job.command.empty()) throw ParseError("no command given");
  require_command(job.command);
  const ReductivePair p = build_pair(job);
  const WeylLimits limits = limits_for(job);

  JobResult result;
  json doc;
  Report rep;
  doc["command"] = job.command;
  rep.line("command", job.command);

  if (job.command == "pair-info") {
    rep.raw("[pair]");
    doc["pair"] = pair_section(p, limits, rep);
  } else if (job.command == "parabolic") {
    auto par = compatible_parabolic(p, job_lambda(job, p));
    rep.raw("[parabolic]");
    doc["parabolic"] = parabolic_section(p, par, rep);
  } else if (job.command == "generic-check") {
    TWeight mu = job_mu(job, p);
    auto g = is_generic(p, mu);
    rep.raw("[parabolic]");
    doc["parabolic"] = parabolic_section(p, g.parabolic, rep);
    rep.raw("[genericity]");
    doc["genericity"] = genericity_section(p, mu, g, rep);
  } else if (job.command == "sl2-threshold") {
    std::int64_t t = sl2_threshold(p);
    std::int64_t from = std::max<std::int64_t>(0, t - 1);
    doc["genericity"] = {{"threshold", t}, {"generic_from_m", from}};
    rep.raw("[genericity]");
    rep.line("threshold", std::to_string(t));
    rep.line("generic_from_m", std::to_string(from));
    rep.raw("generic iff m >= " + std::to_string(from));
  } else {
    auto run = run_fundseries(job, p, doc, rep);
    if (job.command == "verify") {
      auto check = verify_minimal_ktype(run.table, run.e, p);
      doc["verification"] = {{"passed", check.passed()},
                             {"generic_input", check.generic_input},
                             {"parabolic_matches", check.parabolic_matches},
                             {"multiplicity_at_mu", check.multiplicity_at_mu},
                             {"minimal_multiplicity", check.minimal_multiplicity_ok},
                             {"unique_minimum", check.unique_minimum_ok},
                             {"nonnegative", check.nonnegative_ok},
                             {"notes", check.notes}};
      rep.raw("[verification]");
      rep.line("passed", bool_text(check.passed()));
      rep.line("multiplicity_at_mu", std::to_string(check.multiplicity_at_mu));
      rep.line("unique_minimum", bool_text(check.unique_minimum_ok));
      rep.line("nonnegative", bool_text(check.nonnegative_ok));
      for (const auto& note : check.notes) rep.line("note", note);
      if (!check.passed()) result.exit_code = exit_verify_failed;
    }
  }

  result.human = rep.str();
  result.machine = doc.dump(2) + "\n";
  return result;
}

int exit_code_for(const std::exception& err) {
  if (dynamic_cast<const ParseError*>(&err)) return exit_parse;
  if (dynamic_cast<const ValidationError*>(&err)) return exit_validation;
  if (dynamic_cast<const CapExceeded*>(&err)) return exit_cap;
  return exit_internal;
}

}  // namespace gkmod
