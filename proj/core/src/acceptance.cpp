#include "foldweyl/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <random>
#include <sstream>

#include "foldweyl/oracle.hpp"
#include "foldweyl/weylchar.hpp"

namespace foldweyl {

const char* criterion_title(int criterion) {
  switch (criterion) {
    case 1: return "folding table";
    case 2: return "eigenspace bookkeeping";
    case 3: return "truncation dimensions and CRT";
    case 4: return "fiber laws";
    case 5: return "untwisted oracle vs formula";
    case 6: return "twisted vs untwisted Weyl modules";
    case 7: return "tensor factorizations";
    case 8: return "invariant suites";
    default: return "unknown";
  }
}

bool AcceptanceReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool AcceptanceReport::passed(int criterion) const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.criterion != criterion) continue;
    if (!c.passed) return false;
    any = true;
  }
  return any;
}

int AcceptanceReport::count(int criterion) const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.criterion == criterion; }));
}

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (!ok) detail << "; ";
    ok = false;
    detail << what;
  }
};

// An oracle build remembered for the invariant checks.
struct Build {
  std::string name;
  std::shared_ptr<const RootSystem> roots;
  OracleResult result;
  bool symmetric_by_construction = false;
};

std::string history_str(const OracleResult& r) {
  std::string s;
  for (const auto& [n, d] : r.history) s += (s.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(d);
  return s;
}

Weight unit(int rank, int node, int value = 1) {
  Weight w(static_cast<std::size_t>(rank), 0);
  w[node] = value;
  return w;
}

class Runner {
 public:
  Runner(const AcceptanceOptions& o, AcceptanceReport& r) : opt_(o), rep_(r) {}

  bool full() const { return opt_.level == Level::Full; }

  bool enabled(int criterion) const {
    return opt_.only.empty() || std::find(opt_.only.begin(), opt_.only.end(), criterion) != opt_.only.end();
  }

  void check(int criterion, const std::string& name, const std::function<void(Outcome&)>& body) {
    CheckResult c;
    c.criterion = criterion;
    c.name = name;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(out);
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.passed = out.ok;
    c.detail = out.detail.str();
    if (opt_.check_budget > 0 && c.seconds > opt_.check_budget) {
      c.passed = false;
      c.detail = "exceeded the time budget of " + std::to_string(opt_.check_budget) + "s" +
                 (c.detail.empty() ? "" : "; " + c.detail);
    }
    rep_.checks.push_back(c);
    if (opt_.on_check) opt_.on_check(c);
  }

  OracleResult untwisted(const std::string& name, const DrinfeldTuple& pi, bool dominant_only = false) {
    OracleOptions o;
    o.build.all_weights = !dominant_only;
    Build b{name, std::make_shared<const RootSystem>(pi.datum()), oracle_weyl_module(pi, o), dominant_only};
    builds_.push_back(b);
    return b.result;
  }

  OracleResult twisted(const std::string& name, const TwistedDrinfeldTuple& pi, bool dominant_only = false) {
    OracleOptions o;
    o.build.all_weights = !dominant_only;
    Build b{name, g0_root_system(pi.fold()), oracle_weyl_module(pi, o), dominant_only};
    builds_.push_back(b);
    return b.result;
  }

  TwistedComparison compare(const std::string& name, const TwistedDrinfeldTuple& pi, bool dominant_only = false) {
    OracleOptions o;
    o.build.all_weights = !dominant_only;
    TwistedComparison c = verify_twisted_untwisted(pi, o);
    builds_.push_back({name, g0_root_system(pi.fold()), c.twisted, dominant_only});
    for (std::size_t i = 0; i < c.preimages.size(); ++i)
      builds_.push_back({name + " preimage " + c.preimages[i].str(),
                         std::make_shared<const RootSystem>(c.preimages[i].datum()), c.untwisted[i], dominant_only});
    return c;
  }

  const std::vector<Build>& builds() const { return builds_; }
  const AcceptanceOptions& options() const { return opt_; }

 private:
  const AcceptanceOptions& opt_;
  AcceptanceReport& rep_;
  std::vector<Build> builds_;
};

struct FoldRow {
  char type;
  int rank;
  int m;
  const char* g0;  // rank one is reported as A1 (= B1)
  bool quick;
};

const std::vector<FoldRow>& fold_rows() {
  static const std::vector<FoldRow> rows = {
      {'A', 2, 2, "A1", true}, {'A', 3, 2, "C2", true}, {'A', 5, 2, "C3", false},
      {'D', 4, 2, "B3", false}, {'E', 6, 2, "F4", false}, {'D', 4, 3, "G2", false},
  };
  return rows;
}

std::string row_name(const FoldRow& r) {
  return std::string(1, r.type) + std::to_string(r.rank) + " m=" + std::to_string(r.m);
}

std::shared_ptr<const FoldedAlgebra> folded(const FoldRow& r) {
  return std::make_shared<const FoldedAlgebra>(r.type, r.rank, r.m);
}

// ---------------------------------------------------------------------------

void criterion1(Runner& run) {
  for (const auto& row : fold_rows()) {
    if (!row.quick && !run.full()) continue;
    run.check(1, row_name(row) + " -> " + row.g0, [&](Outcome& out) {
      FoldedAlgebra f(row.type, row.rank, row.m);
      out.expect(f.g0_type().name() == row.g0, "g0 identified as " + f.g0_type().name());
      out.expect(identify_cartan(f.g0_cartan_from_brackets()).name() == row.g0, "bracket Cartan matrix differs");
      out.expect(f.g0_cartan_from_brackets() == f.diagram().g0_cartan, "folded Cartan matrices disagree");
      // theta_0^s, doubled in type A_2n.
      const RootSystem& g0 = f.g0_roots();
      Weight expect = g0.root_to_weight(g0.highest_short_root());
      if (f.diagram().a2n())
        for (auto& x : expect) x *= 2;
      out.expect(f.g1_highest_weight() == expect, "g1 highest weight differs from theta_0^s");
      out.expect(f.expected_g1_highest_weight() == expect, "expected g1 highest weight differs");
    });
  }
}

void criterion2(Runner& run) {
  for (const auto& row : fold_rows()) {
    if (!row.quick && !run.full()) continue;
    run.check(2, row_name(row) + " eigenspaces", [&](Outcome& out) {
      FoldedAlgebra f(row.type, row.rank, row.m);
      int total = 0;
      for (int d : f.eigen_dimensions()) total += d;
      out.expect(total == f.parent().dimension(), "eigenspace dimensions sum to " + std::to_string(total));
      const long bad = f.grading_violations();
      out.expect(bad == 0, std::to_string(bad) + " brackets leave g_{eps+delta}");
      const long gen = f.generator_violations();
      out.expect(gen == 0, std::to_string(gen) + " generator relations fail");
    });
  }
}

void untwist_check(Runner& run, const FoldRow& row, long a, int N) {
  const std::string name = row_name(row) + " a=" + std::to_string(a) + " N=" + std::to_string(N);
  run.check(3, name, [&](Outcome& out) {
    const auto f = folded(row);
    const UntwistResult u = untwist_iso(f, FieldElement(a), N);
    const int expect = N * f->parent().dimension();
    out.expect(u.twisted.dimension() == expect, "twisted truncation has dimension " +
                                                    std::to_string(u.twisted.dimension()));
    out.expect(u.untwisted.dimension() == expect, "untwisted truncation has dimension " +
                                                      std::to_string(u.untwisted.dimension()));
    out.expect(u.isomorphism(), "untwisting map has rank " + std::to_string(u.rank) + " and " +
                                    std::to_string(u.violations) + " bracket violations");
  });
}

void criterion3(Runner& run) {
  const auto& rows = fold_rows();
  for (long a = 1; a <= 2; ++a)
    for (int N = 1; N <= 3; ++N) untwist_check(run, rows[0], a, N);
  for (int N = 1; N <= 2; ++N) untwist_check(run, rows[1], 2, N);
  if (run.full()) untwist_check(run, rows[5], 1, 1);

  run.check(3, "CRT sl2 a=(1,2) N=2", [&](Outcome& out) {
    auto g = std::make_shared<const ChevalleyAlgebra>(CartanDatum::make('A', 1));
    const auto t = TruncatedAlgebra::untwisted(g, {FieldElement(1), FieldElement(2)}, 2);
    const CrtDecomposition d = crt_decompose(t);
    out.expect(t.dimension() == 12, "truncation has dimension " + std::to_string(t.dimension()));
    out.expect(d.blocks.size() == 2, std::to_string(d.blocks.size()) + " blocks");
    for (const auto& b : d.blocks) out.expect(b.dimension() == 6, "block of dimension " + std::to_string(b.dimension()));
    out.expect(d.violations == 0, std::to_string(d.violations) + " bracket violations");
    out.expect(d.bijective, "not bijective");
    out.expect(d.inverse_roundtrip, "inverse does not round-trip");
  });
  run.check(3, "CRT twisted A2 a=(1,2) N=1", [&](Outcome& out) {
    const auto t = TruncatedAlgebra::twisted(folded(rows[0]), {FieldElement(1), FieldElement(2)}, 1);
    const CrtDecomposition d = crt_decompose(t);
    out.expect(d.blocks.size() == 2, std::to_string(d.blocks.size()) + " blocks");
    out.expect(d.violations == 0 && d.bijective && d.inverse_roundtrip, "decomposition is not a Lie isomorphism");
  });
}

std::vector<FieldElement> parameter_pool(int m) {
  std::vector<FieldElement> pool = {FieldElement(1), FieldElement(2), FieldElement(-1), FieldElement(3),
                                    FieldElement(Rational(1, 2)), FieldElement(-2)};
  if (m == 3) {
    const FieldElement z = FieldElement::zeta(3);
    pool.push_back(z);
    pool.push_back(FieldElement(2) * z);
    pool.push_back(FieldElement(1) + z);
  } else {
    pool.push_back(FieldElement::sqrt2());
  }
  return pool;
}

void criterion4(Runner& run) {
  const auto& rows = fold_rows();
  for (long a : {1L, 2L, -3L}) {
    run.check(4, "A2 fiber of pi_s(2 omega_1, " + std::to_string(a) + ")", [&](Outcome& out) {
      const DiagramFold fold = DiagramFold::make('A', 2, 2);
      const auto f = fiber(pi_sigma_lambda_a(fold, {2}, FieldElement(a)));
      std::vector<DrinfeldTuple> expect = {pi_lambda_a(fold.parent, {1, 0}, FieldElement(a)),
                                           pi_lambda_a(fold.parent, {0, 1}, FieldElement(-a))};
      std::sort(expect.begin(), expect.end());
      out.expect(f == expect, "fiber has " + std::to_string(f.size()) + " elements, not the expected pair");
    });
  }
  run.check(4, "A3 non-fixed node fiber size", [&](Outcome& out) {
    const DiagramFold fold = DiagramFold::make('A', 3, 2);
    const std::size_t n = fiber(pi_sigma_lambda_a(fold, {1, 0}, FieldElement(2))).size();
    out.expect(n == 2, "fiber size " + std::to_string(n));
  });
  if (run.full()) {
    run.check(4, "D4 m=3 fixed node fiber size", [&](Outcome& out) {
      const DiagramFold fold = DiagramFold::make('D', 4, 3);
      const int fixed_node = 1;
      out.expect(fold.fixed(fixed_node), "folded node 2 is not fixed");
      const std::size_t n = fiber(pi_sigma_lambda_a(fold, unit(fold.rank0(), fixed_node), FieldElement(1))).size();
      out.expect(n == 3, "fiber size " + std::to_string(n));
    });
  }

  // Randomized products: reduce_r is constant on the whole fiber.
  for (const auto& row : rows) {
    if (!row.quick && !run.full()) continue;
    if (row.type == 'A' && row.rank == 5) continue;
    run.check(4, row_name(row) + " 20 random products", [&](Outcome& out) {
      const DiagramFold fold = DiagramFold::make(row.type, row.rank, row.m);
      const auto pool = parameter_pool(row.m);
      std::mt19937 rng(12345u + static_cast<unsigned>(row.rank * 10 + row.m));
      std::uniform_int_distribution<int> nfac(1, 3), node(0, fold.rank0() - 1), pick(0, static_cast<int>(pool.size()) - 1),
          mult(1, 2);
      std::size_t elements = 0;
      for (int trial = 0; trial < 20; ++trial) {
        TwistedDrinfeldTuple pi(fold, {});
        const int n = nfac(rng);
        for (int j = 0; j < n; ++j) {
          const int k = node(rng);
          pi = pi * pi_sigma_lambda_a(fold, unit(fold.rank0(), k, fold.weight_factor(k) * mult(rng)), pool[pick(rng)]);
        }
        const auto f = fiber(pi);
        elements += f.size();
        out.expect(!f.empty(), "empty fiber for " + pi.str());
        for (const auto& e : f)
          if (!(reduce_r(fold, e) == pi)) out.expect(false, "reduce_r(" + e.str() + ") != " + pi.str());
        const DrinfeldTuple pref = preferred_preimage(pi);
        out.expect(std::binary_search(f.begin(), f.end(), pref), "preferred preimage outside the fiber of " + pi.str());
        out.expect(expand(fold, standard_decomposition(pi)) == pi, "standard decomposition of " + pi.str());
      }
      out.detail << elements << " fiber elements";
    });
  }
}

bool same_character(const Character& a, const Character& b) { return a == b; }

void criterion5(Runner& run) {
  const CartanDatum A1 = CartanDatum::make('A', 1), A2 = CartanDatum::make('A', 2), A3 = CartanDatum::make('A', 3);
  struct Case {
    std::string name;
    DrinfeldTuple pi;
    std::int64_t dim;
    bool dominant_only;
  };
  std::vector<Case> cases = {
      {"A1 pi(omega, 2)", pi_lambda_a(A1, {1}, FieldElement(2)), 2, false},
      {"A1 pi(2 omega, 2)", pi_lambda_a(A1, {2}, FieldElement(2)), 4, false},
      {"A1 pi(3 omega, 2)", pi_lambda_a(A1, {3}, FieldElement(2)), 8, false},
      {"A1 pi(omega,1) pi(omega,2)", pi_lambda_a(A1, {1}, 1) * pi_lambda_a(A1, {1}, 2), 4, false},
      {"A1 pi(omega,1) pi(omega,2) pi(omega,3)", pi_lambda_a(A1, {1}, 1) * pi_lambda_a(A1, {1}, 2) * pi_lambda_a(A1, {1}, 3),
       8, false},
      {"A2 pi(omega_1, 1)", pi_lambda_a(A2, {1, 0}, 1), 3, false},
      {"A2 pi(omega_2, 1)", pi_lambda_a(A2, {0, 1}, 1), 3, false},
      {"A2 pi(omega_1+omega_2, 1)", pi_lambda_a(A2, {1, 1}, 1), 9, false},
      {"A3 pi(omega_1, 1)", pi_lambda_a(A3, {1, 0, 0}, 1), 4, false},
      {"A3 pi(omega_2, 1)", pi_lambda_a(A3, {0, 1, 0}, 1), 6, false},
      {"A3 pi(omega_3, 1)", pi_lambda_a(A3, {0, 0, 1}, 1), 4, false},
  };
  if (run.full()) {
    const CartanDatum D4 = CartanDatum::make('D', 4), E6 = CartanDatum::make('E', 6);
    const std::int64_t d4[] = {8, 29, 8, 8};
    for (int i = 0; i < 4; ++i)
      cases.push_back({"D4 pi(omega_" + std::to_string(i + 1) + ", 1)", pi_lambda_a(D4, unit(4, i), 1), d4[i], true});
    cases.push_back({"E6 pi(omega_1, 1)", pi_lambda_a(E6, unit(6, 0), 1), 27, true});
    cases.push_back({"E6 pi(omega_6, 1)", pi_lambda_a(E6, unit(6, 5), 1), 27, true});
  }
  for (const auto& c : cases) {
    run.check(5, c.name, [&](Outcome& out) {
      const OracleResult r = run.untwisted(c.name, c.pi, c.dominant_only);
      const WeylCharacterReport f = untwisted_weyl_character(c.pi);
      out.detail << "dim " << r.dimension << ", N " << history_str(r);
      out.expect(r.stabilized, "N escalation did not stabilize");
      out.expect(r.dimension == c.dim, "oracle dimension " + std::to_string(r.dimension));
      out.expect(f.dimension == c.dim, "formula dimension " + std::to_string(f.dimension));
      out.expect(same_character(r.character, f.character), "oracle and formula characters differ");
    });
  }
}

void criterion6(Runner& run) {
  const DiagramFold F2 = DiagramFold::make('A', 2, 2), F3 = DiagramFold::make('A', 3, 2);
  struct Case {
    std::string name;
    TwistedDrinfeldTuple pi;
    std::int64_t dim;
    std::size_t min_fiber;
    bool dominant_only;
  };
  std::vector<Case> cases = {
      {"A2 pi_s(2 omega_1, 1)", pi_sigma_lambda_a(F2, {2}, 1), 3, 2, false},
      {"A2 pi_s(2 omega_1, 1) pi_s(2 omega_1, -1)", pi_sigma_lambda_a(F2, {2}, 1) * pi_sigma_lambda_a(F2, {2}, -1), 9, 2,
       false},
      {"A2 pi_s(4 omega_1, 1)", pi_sigma_lambda_a(F2, {4}, 1), 9, 2, false},
      {"A3 pi_s(omega_1, 1)", pi_sigma_lambda_a(F3, {1, 0}, 1), 4, 2, false},
      {"A3 pi_s(omega_2, 1)", pi_sigma_lambda_a(F3, {0, 1}, 1), 6, 1, false},
  };
  if (run.full()) {
    const DiagramFold D2 = DiagramFold::make('D', 4, 2), D3 = DiagramFold::make('D', 4, 3),
                      E2 = DiagramFold::make('E', 6, 2);
    cases.push_back({"D4 m=2 pi_s(omega_1, 1)", pi_sigma_lambda_a(D2, {1, 0, 0}, 1), 8, 1, true});
    cases.push_back({"D4 m=2 pi_s(omega_3, 1)", pi_sigma_lambda_a(D2, {0, 0, 1}, 1), 8, 2, true});
    cases.push_back({"D4 m=3 pi_s(omega_1, 1)", pi_sigma_lambda_a(D3, {1, 0}, 1), 8, 3, true});
    cases.push_back({"D4 m=3 pi_s(omega_2, 1)", pi_sigma_lambda_a(D3, {0, 1}, 1), 29, 3, true});
    cases.push_back({"E6 m=2 pi_s(omega_1, 1)", pi_sigma_lambda_a(E2, unit(4, 0), 1), 27, 2, true});
  }
  for (const auto& c : cases) {
    run.check(6, c.name, [&](Outcome& out) {
      const TwistedComparison cmp = run.compare(c.name, c.pi, c.dominant_only);
      const WeylCharacterReport f = twisted_weyl_character(c.pi);
      out.detail << "dim " << cmp.twisted.dimension << ", N " << history_str(cmp.twisted) << ", "
                 << cmp.preimages.size() << " preimages";
      out.expect(cmp.twisted.stabilized, "twisted N escalation did not stabilize");
      for (const auto& u : cmp.untwisted) out.expect(u.stabilized, "untwisted N escalation did not stabilize");
      out.expect(cmp.twisted.dimension == c.dim, "twisted oracle dimension " + std::to_string(cmp.twisted.dimension));
      out.expect(cmp.preimages.size() >= c.min_fiber, "fiber has " + std::to_string(cmp.preimages.size()) + " elements");
      out.expect(cmp.dimensions_agree, "a preimage has a different dimension");
      out.expect(cmp.characters_agree, "a restricted preimage character differs");
      out.expect(f.character == cmp.twisted.character, "formula character differs from the twisted oracle");
    });
  }
}

void criterion7(Runner& run) {
  const DiagramFold F2 = DiagramFold::make('A', 2, 2), F3 = DiagramFold::make('A', 3, 2);
  run.check(7, "A2 pi_s(2 omega_1, 1) pi_s(2 omega_1, 2)", [&](Outcome& out) {
    const auto p = pi_sigma_lambda_a(F2, {2}, 1), q = pi_sigma_lambda_a(F2, {2}, 2);
    const OracleResult a = run.twisted("A2 pi_s(2 omega_1, 1)", p), b = run.twisted("A2 pi_s(2 omega_1, 2)", q);
    const OracleResult ab = run.twisted("A2 pi_s(2 omega_1, 1) pi_s(2 omega_1, 2)", p * q);
    const FactorNode tree = twisted_factorization(p * q);
    out.detail << "dim " << ab.dimension << " = " << a.dimension << " * " << b.dimension;
    out.expect(ab.stabilized && a.stabilized && b.stabilized, "N escalation did not stabilize");
    out.expect(ab.dimension == 9 && ab.dimension == a.dimension * b.dimension, "dimension is not 3 * 3");
    out.expect(ab.character == character_product(a.character, b.character), "character is not the product");
    out.expect(tree.children.size() == 2, "factorization has " + std::to_string(tree.children.size()) + " blocks");
    out.expect(tree_dimension(tree) == 9, "factorization dimension " + std::to_string(tree_dimension(tree)));
  });
  run.check(7, "A3 pi_s(omega_1, 1) pi_s(omega_1, -1)", [&](Outcome& out) {
    const auto p = pi_sigma_lambda_a(F3, {1, 0}, 1), q = pi_sigma_lambda_a(F3, {1, 0}, -1);
    const OracleResult a = run.twisted("A3 pi_s(omega_1, 1)", p);
    const OracleResult ab = run.twisted("A3 pi_s(omega_1, 1) pi_s(omega_1, -1)", p * q);
    const FactorNode tree = twisted_factorization(p * q);
    out.detail << "dim " << ab.dimension << ", N " << history_str(ab);
    out.expect(ab.stabilized && a.stabilized, "N escalation did not stabilize");
    out.expect(ab.dimension == 16 && ab.dimension == a.dimension * a.dimension, "dimension is not 4 * 4");
    out.expect(ab.character == character_product(a.character, a.character), "character is not the square");
    out.expect(tree.children.size() == 1, "expected a single block");
    out.expect(tree.children.size() == 1 && tree.children[0].children.size() == 2, "expected two eps pieces");
    out.expect(tree_dimension(tree) == 16, "factorization dimension " + std::to_string(tree_dimension(tree)));
  });
  struct Case {
    std::string name;
    DiagramFold fold;
    Weight lambda;
  };
  const std::vector<Case> cases = {
      {"A2 2 omega_1", F2, {2}}, {"A3 omega_1", F3, {1, 0}}, {"A3 omega_2", F3, {0, 1}}};
  for (const auto& c : cases) {
    run.check(7, c.name + " at a = 1 and a = 2", [&](Outcome& out) {
      const OracleResult r1 = run.twisted(c.name + " a=1", pi_sigma_lambda_a(c.fold, c.lambda, 1));
      const OracleResult r2 = run.twisted(c.name + " a=2", pi_sigma_lambda_a(c.fold, c.lambda, 2));
      out.detail << "dims " << r1.dimension << ", " << r2.dimension;
      out.expect(r1.stabilized && r2.stabilized, "N escalation did not stabilize");
      out.expect(r1.dimension == r2.dimension, "dimensions differ");
      out.expect(r1.character == r2.character, "characters differ");
    });
  }
}

void criterion8(Runner& run) {
  std::vector<std::pair<char, int>> exhaustive = {{'A', 1}, {'A', 2}, {'A', 3}};
  if (run.full()) {
    exhaustive.emplace_back('A', 4);
    exhaustive.emplace_back('D', 4);
  }
  for (const auto& [type, rank] : exhaustive) {
    const std::string name = std::string(1, type) + std::to_string(rank);
    run.check(8, "Jacobi identity " + name + " (all triples)", [&, type = type, rank = rank](Outcome& out) {
      ChevalleyAlgebra g(CartanDatum::make(type, rank));
      if (run.options().inject_jacobi_fault && rank >= 2) {
        // [x_1^+, x_2^+] with the wrong sign.
        IntTerms wrong = g.bracket_basis(0, 1);
        for (auto& [k, s] : wrong) s = -s;
        g.tamper(0, 1, wrong);
      }
      const long bad = jacobi_violations(g);
      out.expect(bad == 0, std::to_string(bad) + " violated triples");
      out.expect(check_chevalley_relations(g), "Chevalley relations fail");
    });
  }
  if (run.full()) {
    run.check(8, "Jacobi identity E6 (20000 sampled triples)", [&](Outcome& out) {
      ChevalleyAlgebra g(CartanDatum::make('E', 6));
      const long bad = jacobi_violations(g, 20000, 7);
      out.expect(bad == 0, std::to_string(bad) + " violated triples");
      out.expect(check_chevalley_relations(g), "Chevalley relations fail");
    });
  }
  for (const auto& row : fold_rows()) {
    if (!row.quick && !run.full()) continue;
    run.check(8, row_name(row) + " automorphism", [&](Outcome& out) {
      FoldedAlgebra f(row.type, row.rank, row.m);
      out.expect(f.sigma().order() == row.m, "order " + std::to_string(f.sigma().order()));
      const long bad = f.sigma().bracket_violations(f.parent());
      out.expect(bad == 0, std::to_string(bad) + " brackets not preserved");
    });
  }

  struct FreudenthalCase {
    char type;
    int rank;
    int max_coord;
  };
  std::vector<FreudenthalCase> fcases = {{'A', 1, 4}, {'A', 2, 2}, {'A', 3, 2}, {'B', 2, 2}, {'C', 2, 2}, {'G', 2, 2}};
  if (run.full()) {
    fcases.push_back({'B', 3, 1});
    fcases.push_back({'C', 3, 1});
    fcases.push_back({'D', 4, 1});
    fcases.push_back({'F', 4, 1});
    fcases.push_back({'A', 4, 1});
  }
  for (const auto& fc : fcases) {
    const std::string name = std::string(1, fc.type) + std::to_string(fc.rank);
    run.check(8, "Freudenthal vs Weyl dimension " + name, [&](Outcome& out) {
      RootSystem rs(CartanDatum::make(fc.type, fc.rank));
      Weight w(static_cast<std::size_t>(fc.rank), 0);
      int count = 0;
      while (true) {
        const Character ch = rs.irreducible_character(w);
        const BigInt weyl = rs.weyl_dimension(w);
        if (BigInt(static_cast<long>(character_dimension(ch))) != weyl) {
          std::string s;
          for (int x : w) s += std::to_string(x) + " ";
          out.expect(false, "mismatch at " + s);
        }
        out.expect(weyl_symmetry_violations(rs, ch) == 0, "Freudenthal character is not Weyl symmetric");
        ++count;
        int i = 0;
        while (i < fc.rank && w[i] == fc.max_coord) w[i++] = 0;
        if (i == fc.rank) break;
        ++w[i];
      }
      out.detail << count << " weights";
    });
  }

  run.check(8, "Weyl symmetry of oracle characters", [&](Outcome& out) {
    int n = 0;
    for (const auto& b : run.builds()) {
      if (b.symmetric_by_construction) continue;
      ++n;
      const long bad = weyl_symmetry_violations(*b.roots, b.result.character);
      out.expect(bad == 0, b.name + ": " + std::to_string(bad) + " asymmetric pairs");
      out.expect(b.result.hull_violations == 0, b.name + ": weights outside the hull");
    }
    out.detail << n << " characters";
  });
  run.check(8, "monotone N stabilization", [&](Outcome& out) {
    for (const auto& b : run.builds()) {
      out.expect(b.result.monotone, b.name + ": dimension decreased (" + history_str(b.result) + ")");
      out.expect(b.result.stabilized, b.name + ": no stabilization (" + history_str(b.result) + ")");
    }
    out.detail << run.builds().size() << " builds";
  });
}

}  // namespace

AcceptanceReport run_acceptance(const AcceptanceOptions& options) {
  AcceptanceReport report;
  Runner run(options, report);
  using Fn = void (*)(Runner&);
  const Fn fns[kCriteria] = {criterion1, criterion2, criterion3, criterion4,
                             criterion5, criterion6, criterion7, criterion8};
  for (int c = 1; c <= kCriteria; ++c)
    if (run.enabled(c)) fns[c - 1](run);
  return report;
}

}  // namespace foldweyl
