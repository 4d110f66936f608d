#include "tabseq/verify.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "tabseq/arc_diagram.hpp"
#include "tabseq/baxter.hpp"
#include "tabseq/bessel.hpp"
#include "tabseq/bijection.hpp"
#include "tabseq/diagonal_formulas.hpp"
#include "tabseq/error.hpp"
#include "tabseq/generating_tree.hpp"
#include "tabseq/kernel.hpp"
#include "tabseq/series.hpp"
#include "tabseq/tableau.hpp"
#include "tabseq/walks.hpp"

namespace tabseq {

namespace {

struct CheckContext {
  bool quick = false;
  std::ostringstream expected;
  std::ostringstream actual;
  bool pass = true;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      actual << what;
    }
  }
};

BigInt boundary_count(StepModel model, int k, int n) {
  return count_walks(model, Chamber::Weyl, delta_point(k), n, Endpoint::boundary_row());
}

// 1. Baxter identity: sum_m |L^(2)_{n,m}| == B_{n+1}
void check_baxter_walks(CheckContext& ctx) {
  const int nmax = ctx.quick ? 8 : 12;
  ctx.expected << "sum_m |L2(n,m)| == B(n+1) for n=0.." << nmax;
  for (int n = 0; n <= nmax; ++n) {
    const BigInt walks = boundary_count(StepModel::HesitatingPairs, 2, n);
    const BigInt bax = baxter_number(n + 1);
    if (walks != bax) {
      ctx.require(false, "n=" + std::to_string(n) + ": walks " + walks.str() + " != " + bax.str());
      return;
    }
  }
  ctx.actual << "exact agreement";
}

struct TableOneRow {
  int m;
  std::vector<std::vector<int>> shapes;
  std::vector<Point> walk_points;
  std::vector<Arc> closed;
  std::vector<int> open;
};

std::vector<TableOneRow> table_one() {
  return {
      {0, {{}, {1}, {}, {1}, {}}, {{2, 1}, {3, 1}, {2, 1}, {3, 1}, {2, 1}}, {}, {}},
      {0, {{}, {}, {1}, {}, {}}, {{2, 1}, {2, 1}, {3, 1}, {2, 1}, {2, 1}}, {{1, 2}}, {}},
      {1, {{}, {1}, {}, {}, {1}}, {{2, 1}, {3, 1}, {2, 1}, {2, 1}, {3, 1}}, {}, {2}},
      {1, {{}, {}, {1}, {2}, {1}}, {{2, 1}, {2, 1}, {3, 1}, {4, 1}, {3, 1}}, {{1, 2}}, {2}},
      {1, {{}, {}, {1}, {1, 1}, {1}}, {{2, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 1}}, {}, {1}},
      {2, {{}, {}, {1}, {1}, {2}}, {{2, 1}, {2, 1}, {3, 1}, {3, 1}, {4, 1}}, {}, {1, 2}},
  };
}

// 2. Table-of-six reproduction including the pairings between the classes
void check_table_one(CheckContext& ctx) {
  ctx.expected << "6 objects in each class with m-distribution {0:2,1:3,2:1}; maps match";
  auto is_row = [](const Partition& p) { return p.is_row(); };
  const auto tabs = enumerate_tableaux(TableauKind::Hesitating, 2, 2, is_row);
  const auto diagrams = generate_diagrams(DiagramKind::PartitionType, 2, 2);
  const BigInt walks = boundary_count(StepModel::HesitatingPairs, 2, 2);
  ctx.require(tabs.size() == 6, "tableau class has size " + std::to_string(tabs.size()));
  ctx.require(diagrams.size() == 6, "diagram class has size " + std::to_string(diagrams.size()));
  ctx.require(walks == 6, "walk class has size " + walks.str());
  std::map<int, int> dist;
  for (const auto& d : diagrams) dist[static_cast<int>(d.open_arcs().size())] += 1;
  ctx.require(dist == std::map<int, int>({{0, 2}, {1, 3}, {2, 1}}), "open-arc distribution off");
  for (const TableOneRow& row : table_one()) {
    TableauSequence expect;
    expect.kind = TableauKind::Hesitating;
    for (const auto& s : row.shapes) expect.shapes.emplace_back(s);
    const OpenArcDiagram d(2, row.closed, row.open, DiagramKind::PartitionType);
    const TableauSequence got = diagram_to_tableau(d, 2);
    if (got != expect) {
      ctx.require(false, "diagram->tableau mismatch at m=" + std::to_string(row.m));
      return;
    }
    const LatticeWalk walk = tableau_to_walk(got, 2);
    if (walk.points() != row.walk_points) {
      ctx.require(false, "tableau->walk mismatch at m=" + std::to_string(row.m));
      return;
    }
    if (tableau_to_diagram(got, 2, DiagramKind::PartitionType) != d) {
      ctx.require(false, "tableau->diagram mismatch at m=" + std::to_string(row.m));
      return;
    }
  }
  if (ctx.pass) ctx.actual << "all six rows reproduced";
}

// 3. Catalan specialization as stated: |L^(1)_{n,0}| == C_n
void check_catalan(CheckContext& ctx) {
  const int nmax = ctx.quick ? 6 : 14;
  ctx.expected << "|L1(n,0)| == Catalan(n) for n=0.." << nmax;
  for (int n = 0; n <= nmax; ++n) {
    const BigInt walks =
        count_walks(StepModel::HesitatingPairs, Chamber::Weyl, {1}, n, Endpoint::at({1}));
    const BigInt cat = catalan_number(n);
    if (walks != cat) {
      ctx.require(false, "n=" + std::to_string(n) + ": |L1(n,0)| = " + walks.str() +
                             " but Catalan(n) = " + cat.str() +
                             " (the loop class is Motzkin-counted)");
      return;
    }
  }
  ctx.actual << "exact agreement";
}

int class_level(const OpenArcDiagram& d) {
  const bool part = d.kind() == DiagramKind::PartitionType;
  const int plain = max_pattern_level(d, part ? PatternFlavor::EnhancedNesting
                                              : PatternFlavor::Nesting);
  const int fut = max_pattern_level(d, part ? PatternFlavor::FutureEnhancedNesting
                                            : PatternFlavor::FutureNesting);
  return std::max(plain, fut);
}

// 4. Exhaustive bijection round trips with statistic transport
void check_roundtrips(CheckContext& ctx) {
  const int nmax = ctx.quick ? 4 : 6;
  const int kmax = ctx.quick ? 2 : 3;
  ctx.expected << "round trips are identities for n<=" << nmax << ", k<=" << kmax;
  long total = 0;
  for (DiagramKind kind : {DiagramKind::PartitionType, DiagramKind::MatchingType}) {
    for (int k = 1; k <= kmax; ++k) {
      for (int n = 0; n <= nmax; ++n) {
        for (const OpenArcDiagram& d : generate_diagrams(kind, n, k)) {
          const TableauSequence seq = diagram_to_tableau(d, k);
          const ValidationResult info = validate_sequence(seq);
          if (tableau_to_diagram(seq, k, kind) != d) {
            ctx.require(false, "diagram round trip failed");
            return;
          }
          if (info.final_shape.part(0) != static_cast<int>(d.open_arcs().size())) {
            ctx.require(false, "open-arc count does not match final row length");
            return;
          }
          if (class_level(d) != info.max_height) {
            ctx.require(false, "nesting level does not match max height");
            return;
          }
          const LatticeWalk w = tableau_to_walk(seq, k);
          if (walk_to_tableau(w, seq.kind) != seq) {
            ctx.require(false, "walk round trip failed");
            return;
          }
          Point expected_end = delta_point(k);
          expected_end[0] += info.final_shape.part(0);
          if (w.end() != expected_end) {
            ctx.require(false, "walk endpoint does not transport m");
            return;
          }
          ++total;
        }
      }
    }
  }
  ctx.actual << total << " round trips, zero failures";
}

// 5. Avoidance class sizes: |Omega(n,2)| == B_{n+1}
void check_avoidance(CheckContext& ctx) {
  const int nmax = ctx.quick ? 6 : 9;
  ctx.expected << "|diagrams(partition,n,2)| == B(n+1) for n<=" << nmax;
  for (int n = 0; n <= nmax; ++n) {
    const auto ds = generate_diagrams(DiagramKind::PartitionType, n, 2);
    const BigInt bax = baxter_number(n + 1);
    if (BigInt(ds.size()) != bax) {
      ctx.require(false, "n=" + std::to_string(n) + ": " + std::to_string(ds.size()) +
                             " != " + bax.str());
      return;
    }
  }
  ctx.actual << "exact agreement";
}

// 6. The three succession systems all produce Baxter level sizes
void check_trees(CheckContext& ctx) {
  const int depth = ctx.quick ? 8 : 12;
  ctx.expected << "rules A, B, C give level sizes B_1..B_" << depth
               << "; A and C labels differ at level 3";
  std::vector<std::vector<TreeLevel>> levels;
  for (BuiltinRule which : {BuiltinRule::A, BuiltinRule::B, BuiltinRule::C}) {
    levels.push_back(expand_levels(builtin_rule(which), depth));
  }
  for (int l = 1; l <= depth; ++l) {
    const BigInt bax = baxter_number(l);
    for (size_t r = 0; r < levels.size(); ++r) {
      const BigInt size = levels[r][static_cast<size_t>(l) - 1].size;
      if (size != bax) {
        ctx.require(false, "rule " + std::string(1, "ABC"[r]) + " level " + std::to_string(l) +
                               " has size " + size.str());
        return;
      }
    }
  }
  ctx.require(levels[0][2].labels != levels[2][2].labels,
              "rule A and C label multisets coincide at level 3");
  if (ctx.pass) ctx.actual << "exact agreement; level-3 multisets differ";
}

// 7. Determinant EGFs match the DP counts
void check_determinants(CheckContext& ctx) {
  const int kmax = ctx.quick ? 3 : 4;
  const int N = ctx.quick ? 10 : 16;
  ctx.expected << "n! [t^n] determinant EGFs == DP counts for k<=" << kmax << ", n<=" << N;
  for (int k = 1; k <= kmax; ++k) {
    const UniSeries syt = syt_egf_det(k, N);
    const UniSeries osc = osc_boundary_egf(k, N);
    BigInt nfac = 1;
    for (int n = 0; n <= N; ++n) {
      if (n > 0) nfac *= n;
      const Rational syt_count = syt.coeff(n) * nfac;
      const Rational osc_count = osc.coeff(n) * nfac;
      if (syt_count != Rational(count_syt_bounded_height(n, 2 * k))) {
        ctx.require(false, "SYT det k=" + std::to_string(k) + " n=" + std::to_string(n));
        return;
      }
      if (osc_count != Rational(boundary_count(StepModel::OscillatingPM, k, n))) {
        ctx.require(false, "walk det k=" + std::to_string(k) + " n=" + std::to_string(n));
        return;
      }
    }
  }
  ctx.actual << "exact agreement";
}

// 8. The two determinant EGFs agree coefficientwise (bounded-height conjecture)
void check_conjecture(CheckContext& ctx) {
  const int kmax = ctx.quick ? 4 : 8;
  const int N = ctx.quick ? 10 : 12;
  ctx.expected << "conjecture_check(k, " << N << ") agrees for k=1.." << kmax;
  for (int k = 1; k <= kmax; ++k) {
    const ConjectureReport report = conjecture_check(k, N);
    if (!report.agree) {
      ctx.require(false, report.to_string());
      return;
    }
  }
  ctx.actual << "agree to order " << N;
}

// 9. Kernel pipeline: extraction form, diagonal form, DP, Baxter all agree
void check_kernel(CheckContext& ctx) {
  const int N = ctx.quick ? 8 : 12;
  ctx.expected << "kernel W(t) == B(n+1) == DP counts to order " << N
               << "; extraction == diagonal; fallback agrees";
  const KernelResult kr = kernel_w(N);
  ctx.require(!kr.used_fallback, "series branch unexpectedly failed");
  for (int n = 0; n <= N; ++n) {
    if (kr.w.coeff(n) != Rational(baxter_number(n + 1))) {
      ctx.require(false, "kernel W mismatch with Baxter at n=" + std::to_string(n));
      return;
    }
    if (kr.w.coeff(n) != Rational(boundary_count(StepModel::HesitatingPairs, 2, n))) {
      ctx.require(false, "kernel W mismatch with DP at n=" + std::to_string(n));
      return;
    }
  }
  ctx.require(UniSeries::first_mismatch(kr.w, kr.w_diagonal) < 0,
              "diagonal form disagrees with extraction form");
  // quadrant cross-checks for H and V
  const int ncheck = ctx.quick ? 5 : 8;
  const Point start{2, 1};
  for (int n = 0; n <= ncheck; ++n) {
    BigInt h = 0, v = 0;
    for (const auto& [p, c] :
         endpoint_counts(StepModel::HesitatingPairs, Chamber::Quadrant, start, n)) {
      if (p[1] == 1) h += c;
      if (p[0] == 1) v += c;
    }
    if (kr.h1.coeff(n) != Rational(h) || kr.v1.coeff(n) != Rational(v)) {
      ctx.require(false, "H/V quadrant mismatch at n=" + std::to_string(n));
      return;
    }
  }
  const KernelResult fb = kernel_w(N, /*force_fallback=*/true);
  ctx.require(fb.used_fallback, "fallback flag not set");
  ctx.require(UniSeries::first_mismatch(fb.w, kr.w) < 0, "fallback W disagrees");
  if (ctx.pass) ctx.actual << "exact agreement";
}

// 10. The differential operator annihilates the shifted Baxter series
void check_annihilation(CheckContext& ctx) {
  ctx.expected << "operator kills sum B(n+1) t^n through order 25";
  UniSeries w(30, SeriesFlavor::OGF);
  const auto bax = baxter_by_recurrence(31);
  for (int n = 0; n <= 30; ++n) w.set_coeff(n, Rational(bax[static_cast<size_t>(n)]));
  const UniSeries image = apply_operator(baxter_annihilator(), w);
  ctx.require(image.order() >= 25, "image order too small");
  for (int n = 0; n <= 25; ++n) {
    if (image.coeff(n) != 0) {
      ctx.require(false, "nonzero coefficient at order " + std::to_string(n));
      return;
    }
  }
  ctx.actual << "identically zero to order 25";
}

// 11. Orbit-sum identity
void check_orbit(CheckContext& ctx) {
  const int dmax = ctx.quick ? 4 : 5;
  ctx.expected << "orbit sums equal the alternant product for d=2.." << dmax
               << " with group sizes d!";
  for (int d = 2; d <= dmax; ++d) {
    const OrbitReport report = orbit_sum_check(d);
    long fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    if (!report.equal || !report.sign_consistent || report.group_size != fact) {
      ctx.require(false, report.to_string());
      return;
    }
  }
  ctx.actual << "identity holds";
}

// 12. Diagonal formulas reproduce the DP counts
void check_diagonals(CheckContext& ctx) {
  const int N = ctx.quick ? 8 : 10;
  const int kmax = ctx.quick ? 2 : 3;
  ctx.expected << "diagonals match DP counts for k=2.." << kmax << " to order " << N;
  for (int k = 2; k <= kmax; ++k) {
    const int order = (ctx.quick && k == 3) ? 6 : N;
    const UniSeries osc = osc_boundary_diagonal(k, order);
    const UniSeries syt = syt_height_diagonal(k, order);
    for (int n = 0; n <= order; ++n) {
      if (osc.coeff(n) != Rational(boundary_count(StepModel::OscillatingPM, k, n))) {
        ctx.require(false, "osc diagonal k=" + std::to_string(k) + " n=" + std::to_string(n));
        return;
      }
      if (syt.coeff(n) != Rational(count_syt_bounded_height(n, k))) {
        ctx.require(false, "SYT diagonal k=" + std::to_string(k) + " n=" + std::to_string(n));
        return;
      }
    }
  }
  ctx.actual << "exact agreement";
}

struct CheckSpec {
  const char* id;
  const char* params_full;
  const char* params_quick;
  void (*fn)(CheckContext&);
};

const CheckSpec kChecks[] = {
    {"baxter-walk-sum", "k=2, n=0..12", "k=2, n=0..8", check_baxter_walks},
    {"table-of-six", "n=2, k=2", "n=2, k=2", check_table_one},
    {"catalan-specialization", "k=1, n=0..14", "k=1, n=0..6", check_catalan},
    {"bijection-roundtrip", "n<=6, k<=3, both kinds", "n<=4, k<=2, both kinds", check_roundtrips},
    {"baxter-avoidance", "partition diagrams, n<=9", "partition diagrams, n<=6", check_avoidance},
    {"generating-trees", "rules A,B,C to depth 12", "rules A,B,C to depth 8", check_trees},
    {"determinant-formulas", "k<=4, n<=16", "k<=3, n<=10", check_determinants},
    {"bounded-height-conjecture", "k=1..8, order 12", "k=1..4, order 10", check_conjecture},
    {"kernel-pipeline", "order 12", "order 8", check_kernel},
    {"operator-annihilation", "order 25 from 30 terms", "order 25 from 30 terms",
     check_annihilation},
    {"orbit-sum", "d=2..5", "d=2..4", check_orbit},
    {"diagonal-formulas", "k=2,3 to order 10", "k=2 to order 8", check_diagonals},
};

}  // namespace

int verify_check_count() { return static_cast<int>(std::size(kChecks)); }

std::string verify_check_id(int index) {
  if (index < 0 || index >= verify_check_count()) {
    throw Error(ErrorCode::InvalidArgument, "check index out of range");
  }
  return kChecks[static_cast<size_t>(index)].id;
}

VerifyReport run_verify(VerifyProfile profile, std::optional<int> only_check) {
  VerifyReport report;
  report.pass = true;
  for (int i = 0; i < verify_check_count(); ++i) {
    if (only_check && *only_check != i) continue;
    const CheckSpec& spec = kChecks[static_cast<size_t>(i)];
    CheckContext ctx;
    ctx.quick = profile == VerifyProfile::Quick;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      spec.fn(ctx);
    } catch (const std::exception& e) {
      ctx.pass = false;
      ctx.actual << "exception: " << e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    CheckOutcome outcome;
    outcome.id = spec.id;
    outcome.params = ctx.quick ? spec.params_quick : spec.params_full;
    outcome.expected = ctx.expected.str();
    outcome.actual = ctx.pass ? (ctx.actual.str().empty() ? "as expected" : ctx.actual.str())
                              : ctx.actual.str();
    outcome.pass = ctx.pass;
    outcome.seconds = std::chrono::duration<double>(t1 - t0).count();
    report.pass = report.pass && outcome.pass;
    report.checks.push_back(std::move(outcome));
  }
  return report;
}

std::string verify_report_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckOutcome& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"params", c.params},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  }
  return nlohmann::json{{"checks", checks}, {"pass", report.pass}}.dump(2);
}

}  // namespace tabseq
