#include "commands.hpp"

#include "suites.hpp"

#include "schubres/bott.hpp"
#include "schubres/geometry.hpp"
#include "schubres/partition.hpp"
#include "schubres/resolution.hpp"
#include "schubres/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

namespace schubres::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  int n = 0, k = 0, r = 0, m = 0;
  std::vector<int> weight;
  std::string format = "table";
  std::uint64_t seed = 42;
  std::optional<int> max_t;
  std::string suite;
};

// Thrown for bad parameters; carries the reason code.
struct UsageError {
  std::string code;
  std::string message;
};

struct InternalError {
  std::string code;
  std::string message;
};

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

void check_nkr(const RunConfig& c) {
  if (!(1 <= c.k && c.k < c.r && c.r <= c.n)) throw UsageError{"usage.params", "need 1 <= k < r <= n"};
}

std::string word_string(const std::vector<int>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::string kpoly_string(const std::vector<Integer>& c) {
  std::string s;
  for (size_t d = 0; d < c.size(); ++d) {
    if (c[d] == 0) continue;
    Integer a = abs(c[d]);
    s += s.empty() ? (c[d] < 0 ? "-" : "") : (c[d] < 0 ? " - " : " + ");
    if (a != 1 || d == 0) s += a.str();
    if (d >= 1) s += "z";
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s.empty() ? "0" : s;
}

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

json desing_json(const DesingData& d) {
  return json{{"base", {{"r", d.base_r}, {"cut", d.base_cut}, {"dim", d.base_dim}}},
              {"fibre_dim", d.fibre_dim},
              {"dim_z", d.dim_z},
              {"dim_y", d.dim_y},
              {"codim", d.codim},
              {"bundle_rank", d.bundle_rank}};
}

void print_desing(std::ostream& out, const DesingData& d) {
  out << "geometry: base GL_" << d.base_r << "/P''_" << d.base_cut << " (dim " << d.base_dim << "), fibre dim V_w "
      << d.fibre_dim << ", dim Z = dim Y = " << d.dim_y << ", codim " << d.codim << ", rank xi " << d.bundle_rank
      << "\n";
}

// Closed form plus the checks every table must pass.
BettiTable checked_closed_form(const RunConfig& c, ConsistencyReport& rep) {
  BettiTable b = jpw_closed_form(c.n, c.k, c.max_t);
  int codim = symmetric_codim(c.n, c.k);
  rep = consistency_check(b, codim);
  if (c.max_t) return b;  // a truncated table is exploratory
  if (!b.starts_with_ring()) throw InternalError{"internal.f0", "closed-form table does not start with R"};
  if (!rep.divisible || rep.degree <= 0)
    throw InternalError{"internal.k_polynomial", "K-polynomial not divisible by (1-z)^codim"};
  if (b.length() != codim) throw InternalError{"internal.length", "resolution length differs from codim"};
  return b;
}

int cmd_resolve(const RunConfig& c, std::ostream& out) {
  check_nkr(c);
  DesingData d = desing_data(c.n, c.k, c.r);
  TableParams params{c.n, c.k, c.r};
  auto xi = build_xi_description(c.n, c.k, c.r);

  if (c.r < c.n) {
    std::string reason = std::get<Unsupported>(xi).reason;
    if (c.format == "json") {
      json j;
      j["params"] = {{"n", c.n}, {"k", c.k}, {"r", c.r}};
      j["status"] = "unsupported";
      j["reason"] = reason;
      j["geometry"] = desing_json(d);
      out << j.dump() << "\n";
    } else {
      out << "resolve n=" << c.n << " k=" << c.k << " r=" << c.r << "\n";
      print_desing(out, d);
      out << "cohomology path: unsupported (" << reason << ")\n";
      out << "no closed form is available for r < n\n";
    }
    return kOk;
  }

  ConsistencyReport rep;
  BettiTable b = checked_closed_form(c, rep);
  if (d.codim != symmetric_codim(c.n, c.k))
    throw InternalError{"internal.codim", "desingularization codim differs from C(n-k+1,2)"};

  std::optional<BettiTable> big;
  if (auto* x = std::get_if<XiDescription>(&xi)) {
    big = assemble(xi_oracle(*x), c.max_t.value_or(x->max_t()));
    if (!c.max_t && !big->contains(b))
      throw InternalError{"internal.containment", "enlarged-space table does not contain the closed form"};
  }

  if (c.format == "json") {
    json j = json::parse(betti_json(b, params, d.codim));
    j["consistency"] = {{"divisible", rep.divisible}, {"degree", integer_json(rep.degree)}};
    j["geometry"] = desing_json(d);
    if (big) j["enlarged_space"] = json::parse(betti_json(*big, params, d.codim))["betti"];
    else j["enlarged_space"] = std::get<Unsupported>(xi).reason;
    out << j.dump() << "\n";
  } else {
    out << "resolve n=" << c.n << " k=" << c.k << " r=" << c.r << "\n";
    print_desing(out, d);
    out << "Betti table (closed form):\n" << betti_grid(b);
    out << "K-polynomial: " << kpoly_string(k_polynomial(b)) << "\n";
    out << "consistency: divisible by (1-z)^" << d.codim << ": " << (rep.divisible ? "yes" : "no")
        << ", degree " << rep.degree << "\n";
    if (big)
      out << "enlarged-space table (cohomology path, contains the closed form):\n" << betti_grid(*big);
    else
      out << "cohomology path: unsupported (" << std::get<Unsupported>(xi).reason << ")\n";
  }
  return kOk;
}

int cmd_betti(const RunConfig& c, std::ostream& out) {
  if (!(1 <= c.k && c.k < c.n)) throw UsageError{"usage.params", "need 1 <= k < n"};
  ConsistencyReport rep;
  BettiTable b = checked_closed_form(c, rep);
  int codim = symmetric_codim(c.n, c.k);
  if (c.format == "json")
    out << betti_json(b, {c.n, c.k, c.n}, codim) << "\n";
  else
    out << betti_grid(b);
  return kOk;
}

int cmd_bott(const RunConfig& c, std::ostream& out) {
  std::optional<QDominantWeight> w;
  try {
    w.emplace(c.n, c.m, c.weight);
  } catch (const std::invalid_argument& e) {
    throw UsageError{"usage.weight", e.what()};
  }
  CohomologyAnswer a = bott(*w);
  if (c.format == "json") {
    json j{{"n", c.n}, {"m", c.m}, {"weight", c.weight}, {"zero", a.zero}};
    if (!a.zero) {
      j["degree"] = a.degree;
      j["beta"] = a.beta;
      j["dim"] = integer_json(weyl_dim(a.beta));
    }
    out << j.dump() << "\n";
  } else if (a.zero) {
    out << "ZERO\n";
  } else {
    out << "j=" << a.degree << " beta=" << word_string(a.beta) << " dim=" << weyl_dim(a.beta) << "\n";
  }
  return kOk;
}

std::string pattern_rows(const CellPattern& p) {
  int N = 2 * p.n();
  std::vector<std::string> cells;
  std::vector<size_t> width(N, 1);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      cells.push_back(p.entry(i, j).to_string());
      width[j - 1] = std::max(width[j - 1], cells.back().size());
    }
  std::ostringstream os;
  for (int i = 0; i < N; ++i) {
    os << " ";
    for (int j = 0; j < N; ++j) {
      const std::string& s = cells[static_cast<size_t>(i) * N + j];
      os << " " << std::string(width[j] - s.size(), ' ') << s;
    }
    os << "\n";
  }
  return os.str();
}

int cmd_schubert(const RunConfig& c, std::ostream& out) {
  check_nkr(c);
  WeylElementC w = family_element(c.n, c.k, c.r);
  CosetRep wt = w_tilde_min_rep(w, ParabolicMarker(RootSystem::C, c.n, {c.r - c.k, c.n}));
  PermutationA wmax = w_max_rep(c.n, c.k, c.r);
  WeylElementC wmax_c = WeylElementC::from_full_word(wmax.word());
  bool avoids = avoids_patterns(wmax, {PermutationA({4, 2, 3, 1}), PermutationA({3, 1, 4, 2})});
  int len_max = length_C(wmax_c);
  int tan_max = tangent_dim_at_id(wmax_c, ParabolicMarker::borel(RootSystem::C, c.n));
  DesingData d = desing_data(c.n, c.k, c.r);
  int literal = literal_v_w_dimension(c.n, c.k, c.r);
  CellPattern ph = opposite_cell_pattern(c.n, c.k, c.r, Group::H);
  CellPattern pg = opposite_cell_pattern(c.n, c.k, c.r, Group::G);

  if (c.format == "json") {
    auto pattern_json = [](const CellPattern& p) {
      json rows = json::array();
      for (int i = 1; i <= 2 * p.n(); ++i) {
        json row = json::array();
        for (int j = 1; j <= 2 * p.n(); ++j) row.push_back(p.entry(i, j).to_string());
        rows.push_back(row);
      }
      return rows;
    };
    json j;
    j["params"] = {{"n", c.n}, {"k", c.k}, {"r", c.r}};
    j["w"] = w.half_word();
    j["w_tilde"] = wt.coset_word;
    j["w_max"] = wmax.word();
    j["length_w"] = length_C(w);
    j["length_w_max"] = len_max;
    j["tangent_dim_w_max"] = tan_max;
    j["w_max_avoids_4231_3142"] = avoids;
    j["w_max_smooth"] = len_max == tan_max;
    j["geometry"] = desing_json(d);
    j["literal_v_w_dim"] = literal;
    j["pattern_H"] = pattern_json(ph);
    j["pattern_G"] = pattern_json(pg);
    out << j.dump() << "\n";
    return kOk;
  }
  out << "w       = " << word_string(w.half_word()) << "  length " << length_C(w) << "\n";
  out << "w~      = " << word_string(wt.coset_word) << "\n";
  out << "w_max   = " << word_string(wmax.word()) << "  length " << len_max << ", tangent dim at id " << tan_max
      << "\n";
  out << "w_max avoids 4231 and 3142: " << (avoids ? "yes" : "no")
      << "; X(w_max) smooth: " << (len_max == tan_max ? "yes" : "no") << "\n";
  print_desing(out, d);
  if (literal != d.fibre_dim)
    out << "note: reading V_w as x_ij = 0 for j <= r-k or i < n-(r-k) gives dim " << literal
        << ", which does not match dim Y; using x_ij = 0 for i <= r-k or j <= r-k\n";
  out << "opposite cell, GL_2n:\n" << pattern_rows(ph);
  out << "opposite cell, Sp_2n:\n" << pattern_rows(pg);
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  SuiteOptions o;
  o.seed = c.seed;
  std::vector<std::string> names = c.suite.empty() ? suite_names() : std::vector<std::string>{c.suite};
  bool all = true;
  json results = json::array();
  for (const auto& name : names) {
    SuiteResult r;
    try {
      r = run_suite(name, o);
    } catch (const std::invalid_argument& e) {
      throw UsageError{"usage.suite", e.what()};
    }
    all = all && r.pass;
    if (c.format == "json")
      results.push_back({{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    else
      out << "suite " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ")\n";
  }
  if (c.format == "json")
    out << json{{"seed", c.seed}, {"suites", results}, {"pass", all}}.dump() << "\n";
  else
    out << "seed " << c.seed << ": " << (all ? "all suites passed" : "FAILURES") << "\n";
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Betti tables of symmetric determinantal and Schubert opposite-cell rings"};
  app.require_subcommand(1);
  auto fmt = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };

  auto* resolve = app.add_subcommand("resolve", "Betti table with geometry and consistency report");
  auto* betti = app.add_subcommand("betti", "closed-form Betti table of the rank <= k locus (r = n)");
  auto* bott_cmd = app.add_subcommand("bott", "cohomology of one homogeneous bundle");
  auto* schubert = app.add_subcommand("schubert", "Weyl group and opposite-cell data");
  auto* verify = app.add_subcommand("verify", "run the property suites");

  for (auto* s : {resolve, schubert}) {
    s->add_option("--n", cfg.n)->required();
    s->add_option("--k", cfg.k)->required();
    s->add_option("--r", cfg.r)->required();
  }
  resolve->add_option("--max-t", cfg.max_t, "truncate the exterior-power range");
  betti->add_option("--n", cfg.n)->required();
  betti->add_option("--k", cfg.k)->required();
  betti->add_option("--max-t", cfg.max_t, "truncate the exterior-power range");
  bott_cmd->add_option("--n", cfg.n)->required();
  bott_cmd->add_option("--m", cfg.m, "cut position")->required();
  bott_cmd->add_option("--weight", cfg.weight, "comma-separated entries")->required()->delimiter(',');
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--suite", cfg.suite, "run a single suite");
  for (auto* s : {resolve, betti, bott_cmd, schubert, verify}) fmt(s);

  std::vector<std::string> argv_store{"schubres"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error code=usage.parse message=" << one_line(e.what()) << "\n";
    return kUsage;
  }

  try {
    if (cfg.max_t && *cfg.max_t < 0) throw UsageError{"usage.max_t", "--max-t must be nonnegative"};
    if (resolve->parsed()) return cmd_resolve(cfg, out);
    if (betti->parsed()) return cmd_betti(cfg, out);
    if (bott_cmd->parsed()) return cmd_bott(cfg, out);
    if (schubert->parsed()) return cmd_schubert(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    err << "error code=" << e.code << " message=" << one_line(e.message) << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "error code=" << e.code << " message=" << one_line(e.message) << "\n";
    return kInternal;
  } catch (const RationalSingularityViolation& e) {
    err << "error code=internal.rational_singularity message=" << one_line(e.what()) << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error code=usage.invalid message=" << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error code=internal.exception message=" << one_line(e.what()) << "\n";
    return kInternal;
  }
}

}  // namespace schubres::cli
