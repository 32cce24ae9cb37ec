// Acceptance gate: runs the full parabolic/weight suite with exact arithmetic
// and prints one pass/fail line per criterion at the end.
//
//   usage: acceptance <path-to-bggkit-cli> <golden-dir>

#include "bggkit/bggkit.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace bggkit;

namespace {

// Always-on harness requirement: suite-table or environment problems abort.
#define REQUIRE(cond, msg)                                                        \
  do {                                                                            \
    if (!(cond)) {                                                                \
      std::fprintf(stderr, "[FAIL] %s:%d %s\n", __FILE__, __LINE__, msg);         \
      std::exit(1);                                                               \
    }                                                                             \
  } while (0)

struct Criterion {
  std::string what;
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& msg) {
    pass = false;
    if (notes.size() < 6) notes.push_back(msg);
  }
};

struct TypeCase {
  std::string type;
  std::vector<std::vector<int>> parabolics;  // crossed node sets, 1-based
  std::vector<long long> adjoint;            // highest root in fundamental coordinates
};

const std::vector<TypeCase> kSuite = {
    {"A1", {{1}}, {2}},
    {"A2", {{1, 2}, {1}, {2}}, {1, 1}},
    {"B2", {{1, 2}, {1}, {2}}, {0, 2}},
    {"G2", {{1, 2}, {1}, {2}}, {0, 1}},
    {"A3", {{1, 2, 3}, {1}, {2}, {3}}, {1, 0, 1}},
    {"B3", {{1, 2, 3}, {1}, {2}, {3}}, {0, 1, 0}},
    {"C3", {{1, 2, 3}, {1}, {2}, {3}}, {2, 0, 0}},
};

std::string ints_str(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string case_name(const std::string& type, const std::vector<int>& crossed,
                      const std::vector<long long>& w) {
  std::ostringstream os;
  os << type << " {";
  for (size_t i = 0; i < crossed.size(); ++i) os << (i ? "," : "") << crossed[i];
  os << "} " << ints_str(w);
  return os.str();
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

using HomKey = std::pair<int, WKey>;  // (degree, lowest weight)

std::map<HomKey, long long> fast_multiset(const BGGDiagram& bgg) {
  std::map<HomKey, long long> m;
  for (const auto& c : bgg.components) m[{c.degree, wkey(c.lowest)}] += c.multiplicity;
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  REQUIRE(argc >= 3, "usage: acceptance <path-to-bggkit-cli> <golden-dir>");
  const std::string cli = argv[1];
  const std::string golden_dir = argv[2];

  Criterion crit[9];
  crit[0].what = "chain boundary squares to zero in every degree of every case";
  crit[1].what = "weight-calculus homology equals the matrix kernel/image computation";
  crit[2].what = "Casimir matrix is the predicted scalar; adjoint modules give exactly 1";
  crit[3].what = "induced Casimir on the p+-trivial subquotients acts by the formula scalar";
  crit[4].what = "c = 2*box + c0 on every wedge component; box vanishes exactly on homology";
  crit[5].what = "Euler characteristics of chain spaces and homology agree";
  crit[6].what = "filtration quotients are p+-trivial on a unit ladder; splitting products exact";
  crit[7].what = "p+ maps the kernel of the boundary into its image";
  crit[8].what = "CLI reports are byte-identical across runs and match the golden files";

  bool collision_checked = false;  // the middle quotient of the sl2 adjoint must not split
  bool saw_split_true = false, saw_split_false = false;

  int total_cases = 0;
  for (const auto& tc : kSuite) total_cases += static_cast<int>(tc.parabolics.size()) * 3;
  REQUIRE(total_cases == 66, "suite table out of shape");

  const auto t_start = std::chrono::steady_clock::now();
  int case_no = 0;
  std::vector<std::string> harness_errors;

  for (const auto& tc : kSuite) {
    const RootSystem rs = build_root_system(DynkinSpec::parse(tc.type));
    const WeylGroup wg = enumerate_weyl(rs);
    const LieAlgebraRealization L = realize_algebra(rs);
    REQUIRE(rs.root_fund_coords(rs.highest_root()) == WKey(tc.adjoint),
            "adjoint table disagrees with the highest root");

    std::vector<std::vector<long long>> weights;
    weights.push_back(std::vector<long long>(rs.rank, 0));
    std::vector<long long> fund(rs.rank, 0);
    fund[0] = 1;
    weights.push_back(fund);
    weights.push_back(tc.adjoint);

    // one module and one Casimir-scalar check per weight
    std::map<std::vector<long long>, RepRealization> reps;
    for (const auto& w : weights) {
      const Weight lambda = Weight::from_ints(w);
      reps.emplace(w, build_irrep(L, lambda));
      const auto s = scalar_of(casimir_matrix(L, reps.at(w)));
      const Rational predicted = casimir_eigenvalue(rs, lambda);
      if (!s || *s != predicted)
        crit[2].fail(tc.type + " " + ints_str(w) + ": matrix is not the predicted scalar");
      if (w == tc.adjoint && (!s || *s != 1))
        crit[2].fail(tc.type + ": adjoint scalar is not exactly 1");
    }

    for (const auto& crossed : tc.parabolics) {
      ParabolicSpec ps;
      ps.crossed = crossed;
      const ParabolicData pd = make_parabolic(rs, ps);
      const HasseDiagram hd = hasse_diagram(pd, wg);

      for (const auto& w : weights) {
        ++case_no;
        const std::string name = case_name(tc.type, crossed, w);
        std::printf("[case %2d/%d] %-22s ", case_no, total_cases, name.c_str());
        std::fflush(stdout);
        const auto t_case = std::chrono::steady_clock::now();

        try {
          const Weight lambda = Weight::from_ints(w);
          const RepRealization& V = reps.at(w);
          const BGGDiagram bgg = homology(pd, wg, hd, lambda);
          const int np = static_cast<int>(pd.p_plus_roots.size());

          // criterion 1: exact boundary relations
          const ChainComplex cc = build_chain_complex(L, pd, V);
          if (!boundary_squared_is_zero(cc)) crit[0].fail(name);

          // criterion 2: independent homology via kernels and images
          const ChainHomology hom = compute_homology_blocks(cc);
          const auto brute = homology_bruteforce(cc, hom);
          std::map<HomKey, long long> got;
          for (const auto& c : brute) got[{c.degree, wkey(c.lowest)}] += c.multiplicity;
          if (got != fast_multiset(bgg)) crit[1].fail(name + ": component multisets differ");
          for (int k = 0; k <= np; ++k) {
            BigInt dim_fast = 0;
            for (const auto& c : bgg.components)
              if (c.degree == k) dim_fast += BigInt(c.multiplicity) * c.dim;
            if (dim_fast != hom.h_dim[k])
              crit[1].fail(name + ": homology dimension differs in degree " + std::to_string(k));
          }

          // criterion 8: p+ pushes boundary kernels into boundary images
          if (!p_plus_maps_kernel_into_image(cc, hom)) crit[7].fail(name);

          // criterion 5: eigenvalue identity and the kernel of box
          {
            bool identity = true;
            std::map<HomKey, long long> box_zero;
            for (int k = 0; k <= np; ++k)
              for (const auto& er : graded_casimir_audit(pd, wg, lambda, k)) {
                if (!er.identity_holds) identity = false;
                if (er.laplacian == 0) box_zero[{k, wkey(er.lowest)}] += er.multiplicity;
              }
            if (!identity) crit[4].fail(name + ": c != 2*box + c0 somewhere");
            if (box_zero != fast_multiset(bgg))
              crit[4].fail(name + ": box kernel is not the homology multiset");
          }

          // criterion 6: three independent Euler characteristics
          {
            BigInt chains = 0, fast = 0, slow = 0, binom = 1;
            for (int k = 0; k <= np; ++k) {
              chains += (k % 2 ? -1 : 1) * binom * V.dim;
              binom = binom * (np - k) / (k + 1);
              slow += (k % 2 ? -1 : 1) * BigInt(hom.h_dim[k]);
            }
            for (const auto& c : bgg.components)
              fast += (c.degree % 2 ? -1 : 1) * BigInt(c.multiplicity) * c.dim;
            if (chains != fast || chains != slow)
              crit[5].fail(name + ": " + chains.str() + " vs " + fast.str() + " vs " + slow.str());
          }

          // criteria 4 and 7: the module filtration under the parabolic
          const MatrixFiltration mf = matrix_p_filtration(L, pd, V);
          if (!mf.p_plus_trivial_quotients) crit[6].fail(name + ": quotient not p+-trivial");
          if (!mf.unit_ladder) crit[6].fail(name + ": eigenvalues not a unit ladder");
          if (!filtration_casimir_check(L, pd, mf)) crit[3].fail(name);

          const auto fl = filtration_levels(mf);
          for (const auto& lv : fl) {
            std::set<std::vector<long long>> done;
            for (const auto& lowest : lv.component_lowest) {
              if (!done.insert(lowest.as_ints()).second) continue;
              const SplittingReport sr = splitting_factors(fl, lv.level, lowest);
              Rational manual = 1;
              bool all_differ = true;
              for (const auto& lv2 : fl) {
                if (lv2.level <= lv.level) continue;
                const std::set<Rational> distinct(lv2.component_casimir.begin(),
                                                  lv2.component_casimir.end());
                for (const auto& mu : distinct) {
                  manual *= (sr.mu0 - mu);
                  if (mu == sr.mu0) all_differ = false;
                }
              }
              if (sr.product != manual || sr.splits != (manual != 0) || sr.splits != all_differ)
                crit[6].fail(name + ": splitting product mismatch at level " +
                             std::to_string(lv.level));
              (sr.splits ? saw_split_true : saw_split_false) = true;
            }
          }
          if (tc.type == "A1" && w == tc.adjoint) {
            // levels 1 and 2 collide at eigenvalue 0: the projection must not split
            const SplittingReport sr = splitting_factors(fl, 1, Weight::from_ints({0}));
            if (sr.splits || sr.product != 0)
              crit[6].fail("sl2 adjoint: eigenvalue collision not detected");
            collision_checked = true;
          }
        } catch (const std::exception& e) {
          harness_errors.push_back(name + ": " + e.what());
          std::printf("ERROR %s\n", e.what());
          continue;
        }

        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t_case)
                            .count();
        std::printf("ok (%lldms)\n", static_cast<long long>(ms));
      }
    }
  }

  if (!collision_checked) crit[6].fail("collision case never ran");
  if (!saw_split_true || !saw_split_false)
    crit[6].fail("suite must exercise both splitting outcomes");

  // criterion 9: determinism and golden comparison through the installed CLI
  {
    struct GoldenCase {
      std::string name;
      std::string args;
    };
    const std::vector<GoldenCase> goldens = {
        {"A1_borel_trivial", "report --type A1 --crossed 1 --weight 0"},
        {"A2_borel_trivial", "report --type A2 --crossed 1,2 --weight 0,0"},
        {"B2_borel_trivial", "report --type B2 --crossed 1,2 --weight 0,0"},
    };
    const std::string tmp_a = "acceptance_cli_a.json", tmp_b = "acceptance_cli_b.json";
    for (const auto& g : goldens) {
      const std::string cmd_a = "\"" + cli + "\" " + g.args + " --out " + tmp_a;
      const std::string cmd_b = "\"" + cli + "\" " + g.args + " --out " + tmp_b;
      if (std::system(cmd_a.c_str()) != 0 || std::system(cmd_b.c_str()) != 0) {
        crit[8].fail(g.name + ": CLI invocation failed");
        continue;
      }
      const auto a = read_file(tmp_a), b = read_file(tmp_b);
      if (!a || !b || a->empty()) {
        crit[8].fail(g.name + ": CLI produced no output");
        continue;
      }
      if (*a != *b) crit[8].fail(g.name + ": two runs differ byte for byte");
      const auto gold = read_file(golden_dir + "/" + g.name + ".json");
      if (!gold)
        crit[8].fail(g.name + ": golden file missing");
      else if (*a != *gold)
        crit[8].fail(g.name + ": output differs from the golden file");
    }
    std::remove(tmp_a.c_str());
    std::remove(tmp_b.c_str());
  }

  const auto total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t_start)
                            .count();
  std::printf("\nsuite finished in %lldms\n\n", static_cast<long long>(total_ms));

  bool all = harness_errors.empty();
  for (const auto& e : harness_errors) std::printf("[FAIL] case error: %s\n", e.c_str());
  for (int i = 0; i < 9; ++i) {
    std::printf("[%s] criterion %d: %s\n", crit[i].pass ? "PASS" : "FAIL", i + 1,
                crit[i].what.c_str());
    for (const auto& n : crit[i].notes) std::printf("       - %s\n", n.c_str());
    all = all && crit[i].pass;
  }
  return all ? 0 : 1;
}
