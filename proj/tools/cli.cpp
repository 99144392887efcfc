#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "foldweyl/acceptance.hpp"
#include "json_io.hpp"

namespace foldweyl {

using io::Json;

namespace {

struct Options {
  // algebra descriptor
  char type = 'A';
  int rank = 1;
  int m = 2;
  // truncation
  std::vector<std::string> points;
  int N = 1;
  bool twisted = false;
  bool table = false;
  bool untwist = false;
  // tuple input
  std::string input;
  std::string tuple;
  std::string output;
  // weyl / oracle
  bool dim_only = false;
  bool char_only = false;
  bool with_oracle = false;
  int oracle_N = 0;
  int max_extra = 3;
  bool dominant_only = false;
  // verify
  std::string level = "quick";
  std::string fault;
  double budget = 0;
  bool timings = false;
  std::vector<int> only;
  int indent = 2;
};

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

io::AnyTuple read_tuple(const Options& o, std::istream& in) {
  std::string text;
  if (!o.tuple.empty()) {
    text = o.tuple;
  } else if (!o.input.empty() && o.input != "-") {
    std::ifstream f(o.input);
    if (!f) throw InputError("cannot open " + o.input);
    text = read_all(f);
  } else {
    text = read_all(in);
  }
  io::AnyTuple t = io::tuple_from_json(parse_json(text));
  return t;
}

std::vector<FieldElement> parse_points(const std::vector<std::string>& raw) {
  std::vector<FieldElement> pts;
  for (const auto& s : raw) {
    if (!s.empty() && s.front() == '{')
      pts.push_back(io::scalar_from_json(parse_json(s)));
    else
      pts.push_back(FieldElement(parse_rational(s)));
  }
  if (pts.empty()) pts.push_back(FieldElement(1));
  return pts;
}

std::string theta_label(const FoldedAlgebra& f) {
  const RootSystem& g0 = f.g0_roots();
  Weight ts = g0.root_to_weight(g0.highest_short_root());
  const Weight hw = f.g1_highest_weight();
  if (hw == ts) return "θ_s";
  for (auto& x : ts) x *= 2;
  if (hw == ts) return "2θ_s";
  return "other";
}

Json cmd_fold(const Options& o) {
  FoldedAlgebra f(o.type, o.rank, o.m);
  const DiagramFold& d = f.diagram();
  Json sigma = Json::array(), i0 = Json::array();
  for (int s : d.sigma) sigma.push_back(s + 1);
  for (int k : d.i0) i0.push_back(k + 1);
  return Json{{"type", std::string(1, o.type)},
              {"rank", o.rank},
              {"m", o.m},
              {"g0", f.g0_type().name()},
              {"g0_rank", d.rank0()},
              {"dims", f.eigen_dimensions()},
              {"g1_hw", theta_label(f)},
              {"g1_highest_weight", f.g1_highest_weight()},
              {"sigma", sigma},
              {"folded_nodes", i0},
              {"g0_cartan", d.g0_cartan}};
}

Json table_json(const TruncatedAlgebra& t) {
  Json out = Json::array();
  for (int i = 0; i < t.dimension(); ++i)
    for (int j = 0; j < t.dimension(); ++j) {
      const SparseVec& v = t.bracket(i, j);
      if (v.empty()) continue;
      Json terms = Json::array();
      for (const auto& [k, c] : v) terms.push_back({k, io::to_json(c)});
      out.push_back({{"i", i}, {"j", j}, {"terms", terms}});
    }
  return out;
}

Json truncation_json(const TruncatedAlgebra& t) {
  Json pts = Json::array();
  for (const auto& a : t.points()) pts.push_back(io::to_json(a));
  return Json{{"dimension", t.dimension()}, {"N", t.truncation()}, {"points", pts},
              {"ideal", t.ideal_generator().str()}, {"ideal_variable", t.is_twisted() ? "s = t^m" : "t"},
              {"residues", t.residues()}};
}

Json cmd_truncate(const Options& o) {
  const auto pts = parse_points(o.points);
  Json j;
  std::optional<TruncatedAlgebra> t;
  if (o.twisted) {
    auto f = std::make_shared<const FoldedAlgebra>(o.type, o.rank, o.m);
    t = TruncatedAlgebra::twisted(f, pts, o.N);
    j = truncation_json(*t);
    j["expected_dimension"] = static_cast<int>(pts.size()) * o.N * f->parent().dimension();
    if (o.untwist) {
      if (pts.size() != 1) throw InputError("--untwist takes a single point");
      const UntwistResult u = untwist_iso(f, pts[0], o.N);
      j["untwist"] = {{"rank", u.rank}, {"violations", u.violations}, {"isomorphism", u.isomorphism()}};
    }
  } else {
    if (o.untwist) throw InputError("--untwist needs --twisted");
    auto g = std::make_shared<const ChevalleyAlgebra>(CartanDatum::make(o.type, o.rank));
    t = TruncatedAlgebra::untwisted(g, pts, o.N);
    j = truncation_json(*t);
    j["expected_dimension"] = static_cast<int>(pts.size()) * o.N * g->dimension();
  }
  if (o.table) j["table"] = table_json(*t);
  return j;
}

Json cmd_crt(const Options& o, int& code) {
  const auto pts = parse_points(o.points);
  std::optional<TruncatedAlgebra> t;
  if (o.twisted)
    t = TruncatedAlgebra::twisted(std::make_shared<const FoldedAlgebra>(o.type, o.rank, o.m), pts, o.N);
  else
    t = TruncatedAlgebra::untwisted(std::make_shared<const ChevalleyAlgebra>(CartanDatum::make(o.type, o.rank)), pts, o.N);
  const CrtDecomposition d = crt_decompose(*t);
  Json blocks = Json::array();
  for (const auto& b : d.blocks) blocks.push_back(truncation_json(b));
  const bool ok = d.violations == 0 && d.bijective && d.inverse_roundtrip;
  if (!ok) code = kVerificationFailed;
  return Json{{"dimension", t->dimension()}, {"blocks", blocks},     {"violations", d.violations},
              {"bijective", d.bijective},    {"inverse_roundtrip", d.inverse_roundtrip}, {"ok", ok}};
}

const TwistedDrinfeldTuple& need_twisted(const io::AnyTuple& t) {
  if (!t.twisted) throw InputError("this command needs a twisted tuple");
  return t.folded;
}

Json cmd_fiber(const io::AnyTuple& t) {
  const TwistedDrinfeldTuple& pi = need_twisted(t);
  Json list = Json::array();
  for (const auto& p : fiber(pi)) list.push_back(io::to_json(p, pi.fold().m));
  return Json{{"input", pi.str()}, {"size", list.size()}, {"fiber", list},
              {"preferred", io::to_json(preferred_preimage(pi), pi.fold().m)}};
}

Json cmd_reduce(const io::AnyTuple& t) {
  if (t.twisted) throw InputError("reduce needs an untwisted tuple (with \"m\" giving the folding)");
  const DiagramFold fold = DiagramFold::make(t.untwisted.datum().type, t.untwisted.datum().rank, t.m);
  return io::to_json(reduce_r(fold, t.untwisted));
}

Json cmd_decompose(const io::AnyTuple& t) {
  const TwistedDrinfeldTuple& pi = need_twisted(t);
  Json blocks = Json::array();
  for (const auto& b : standard_decomposition(pi).blocks) {
    Json ws = Json::array();
    for (const auto& w : b.weights) ws.push_back(io::weight_json(w));
    blocks.push_back({{"a", io::to_json(b.a)}, {"weights", ws}});
  }
  return Json{{"input", pi.str()}, {"blocks", blocks}};
}

OracleOptions oracle_options(const Options& o) {
  OracleOptions opt;
  opt.N = o.oracle_N;
  opt.max_extra = o.max_extra;
  opt.build.all_weights = !o.dominant_only;
  return opt;
}

Json oracle_json(const OracleResult& r) {
  Json hist = Json::array();
  for (const auto& [n, d] : r.history) hist.push_back({{"N", n}, {"dimension", d}});
  return Json{{"dimension", r.dimension},  {"character", io::character_json(r.character)},
              {"N_used", r.N_used},        {"stabilized", r.stabilized},
              {"monotone", r.monotone},    {"history", hist},
              {"hull_violations", r.hull_violations}};
}

Json cmd_oracle(const Options& o, const io::AnyTuple& t) {
  const OracleResult r = t.twisted ? oracle_weyl_module(t.folded, oracle_options(o))
                                   : oracle_weyl_module(t.untwisted, oracle_options(o));
  Json j{{"input", t.twisted ? t.folded.str() : t.untwisted.str()}};
  j.update(oracle_json(r));
  return j;
}

Json provenance_json(const io::AnyTuple& t) {
  const CartanDatum& d = t.twisted ? t.folded.fold().parent : t.untwisted.datum();
  Json out = Json::array();
  const std::vector<Factor> fs = t.twisted ? preferred_preimage(t.folded).factors() : t.untwisted.factors();
  std::vector<int> seen;
  for (const auto& f : fs) {
    if (std::find(seen.begin(), seen.end(), f.node) != seen.end()) continue;
    seen.push_back(f.node);
  }
  std::sort(seen.begin(), seen.end());
  for (int node : seen)
    out.push_back({{"node", node + 1}, {"provenance", provenance_name(fundamental_table_entry(d.type, d.rank, node).provenance)}});
  return out;
}

Json cmd_weyl(const Options& o, io::AnyTuple t, int& code) {
  if (o.twisted && !t.twisted) throw InputError("--twisted given but the tuple is untwisted");
  const WeylCharacterReport rep = t.twisted ? twisted_weyl_character(t.folded) : untwisted_weyl_character(t.untwisted);
  Json j{{"input", rep.input}, {"twisted", rep.twisted}, {"algebra", rep.algebra}, {"dim", rep.dimension}};
  if (!o.dim_only) {
    j["character"] = io::character_json(rep.character);
    if (!o.char_only) {
      Json dec = Json::array();
      for (const auto& [w, mult] : rep.decomposition) dec.push_back({{"weight", io::weight_json(w)}, {"mult", mult}});
      j["decomposition"] = dec;
      j["tree"] = io::tree_json(rep.tree);
      j["table"] = provenance_json(t);
    }
  }
  if (o.with_oracle) {
    const OracleResult r = t.twisted ? oracle_weyl_module(t.folded, oracle_options(o))
                                     : oracle_weyl_module(t.untwisted, oracle_options(o));
    const bool agree = r.stabilized && r.dimension == rep.dimension && r.character == rep.character;
    j["oracle"] = {{"dimension", r.dimension}, {"N_used", r.N_used}, {"stabilized", r.stabilized}};
    j["agree"] = agree;
    if (!agree) code = kVerificationFailed;
  }
  return j;
}

Json cmd_verify(const Options& o, std::ostream& err, int& code) {
  AcceptanceOptions opt;
  if (o.level == "quick")
    opt.level = Level::Quick;
  else if (o.level == "full")
    opt.level = Level::Full;
  else
    throw InputError("--level must be quick or full");
  if (!o.fault.empty()) {
    if (o.fault != "jacobi") throw InputError("unknown fault \"" + o.fault + "\" (known: jacobi)");
    opt.inject_jacobi_fault = true;
  }
  opt.check_budget = o.budget;
  opt.only = o.only;
  opt.on_check = [&](const CheckResult& c) {
    if (!c.passed) err << "FAIL [" << c.criterion << "] " << c.name << ": " << c.detail << "\n";
  };
  const AcceptanceReport rep = run_acceptance(opt);
  Json crit = Json::array();
  for (int k = 1; k <= kCriteria; ++k) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      if (c.criterion != k) continue;
      Json cj{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
      if (o.timings) cj["seconds"] = c.seconds;
      checks.push_back(cj);
    }
    if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), k) == o.only.end()) continue;
    crit.push_back({{"criterion", k}, {"title", criterion_title(k)}, {"passed", rep.passed(k)}, {"checks", checks}});
  }
  if (!rep.passed()) code = kVerificationFailed;
  return Json{{"level", o.level}, {"passed", rep.passed()}, {"criteria", crit}};
}

void add_algebra(CLI::App* c, Options& o, bool need_m) {
  c->add_option("--type", o.type, "Cartan type letter")->required();
  c->add_option("--rank", o.rank, "rank")->required()->check(CLI::PositiveNumber);
  auto* m = c->add_option("--m", o.m, "order of the diagram automorphism");
  if (need_m) m->required();
}

void add_tuple_input(CLI::App* c, Options& o) {
  c->add_option("--input,-i", o.input, "tuple JSON file ('-' for stdin, the default)");
  c->add_option("--tuple", o.tuple, "tuple JSON given inline");
}

void add_oracle_flags(CLI::App* c, Options& o) {
  c->add_option("--N", o.oracle_N, "starting truncation (default: derived from the tuple)");
  c->add_option("--max-extra", o.max_extra, "further N values tried before giving up")->check(CLI::NonNegativeNumber);
  c->add_flag("--dominant-only", o.dominant_only, "build dominant weights only and fill in by Weyl symmetry");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Folded Lie algebras, truncated loop algebras and Weyl modules", "foldweyl"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--output,-o", o.output, "write JSON here instead of stdout");
  app.add_option("--indent", o.indent, "JSON indentation (-1 for one line)");

  auto* fold = app.add_subcommand("fold", "g_0 type, eigenspace dimensions and g_1 highest weight");
  add_algebra(fold, o, true);

  auto* trunc = app.add_subcommand("truncate", "truncated (twisted) loop algebra");
  add_algebra(trunc, o, false);
  trunc->add_option("--a", o.points, "truncation points (\"num/den\" or scalar JSON)");
  trunc->add_option("--N", o.N, "truncation order")->check(CLI::PositiveNumber);
  trunc->add_flag("--twisted", o.twisted, "use the twisted loop algebra");
  trunc->add_flag("--table", o.table, "include the bracket table");
  trunc->add_flag("--untwist", o.untwist, "check the untwisting isomorphism");

  auto* crt = app.add_subcommand("crt", "decomposition over distinct truncation points");
  add_algebra(crt, o, false);
  crt->add_option("--a", o.points, "truncation points")->required();
  crt->add_option("--N", o.N, "truncation order")->check(CLI::PositiveNumber);
  crt->add_flag("--twisted", o.twisted, "use the twisted loop algebra");

  auto* fib = app.add_subcommand("fiber", "untwisted tuples reducing to a twisted tuple");
  add_tuple_input(fib, o);
  auto* red = app.add_subcommand("reduce", "reduction of an untwisted tuple");
  add_tuple_input(red, o);
  auto* dec = app.add_subcommand("decompose", "standard decomposition of a twisted tuple");
  add_tuple_input(dec, o);

  auto* weyl = app.add_subcommand("weyl", "character and dimension of a Weyl module");
  add_tuple_input(weyl, o);
  weyl->add_flag("--twisted", o.twisted, "require a twisted tuple");
  auto* dim_flag = weyl->add_flag("--dim", o.dim_only, "dimension only");
  weyl->add_flag("--char", o.char_only, "character and dimension only")->excludes(dim_flag);
  weyl->add_flag("--oracle", o.with_oracle, "also build the module and compare");
  add_oracle_flags(weyl, o);

  auto* orc = app.add_subcommand("oracle", "build a Weyl module from generators and relations");
  add_tuple_input(orc, o);
  add_oracle_flags(orc, o);

  auto* ver = app.add_subcommand("verify", "run the acceptance suite");
  ver->add_option("--level", o.level, "quick or full");
  ver->add_option("--inject-fault", o.fault, "corrupt a structure constant (jacobi)");
  ver->add_option("--budget", o.budget, "seconds allowed per check (0: none)");
  ver->add_flag("--timings", o.timings, "include per-check seconds");
  ver->add_option("--only", o.only, "run only these criteria (1-8)")->delimiter(',')->check(CLI::Range(1, kCriteria));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInputError;
  }

  int code = kOk;
  Json result;
  try {
    if (*fold) {
      result = cmd_fold(o);
    } else if (*trunc) {
      result = cmd_truncate(o);
    } else if (*crt) {
      result = cmd_crt(o, code);
    } else if (*ver) {
      result = cmd_verify(o, err, code);
    } else {
      const io::AnyTuple t = read_tuple(o, in);
      if (*fib)
        result = cmd_fiber(t);
      else if (*red)
        result = cmd_reduce(t);
      else if (*dec)
        result = cmd_decompose(t);
      else if (*weyl)
        result = cmd_weyl(o, t, code);
      else
        result = cmd_oracle(o, t);
    }
  } catch (const TableGapError& e) {
    err << "table gap: " << e.what() << "\n";
    return kTableGap;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DivisionByZero& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kVerificationFailed;
  }

  const std::string text = result.dump(o.indent) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << "input error: cannot write " << o.output << "\n";
      return kInputError;
    }
    f << text;
  }
  return code;
}

}  // namespace foldweyl
