// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "catalog.hpp"
#include "minkring/cli.hpp"
#include "minkring/errors.hpp"
#include "minkring/identities.hpp"
#include "minkring/products.hpp"
#include "minkring/rewriting.hpp"
#include "random_objects.hpp"

namespace {

using namespace minkring;

LaurentPoly v(const char* name, int e = 1) { return LaurentPoly::var(name, e); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::set<std::string> strings_of(const std::vector<LaurentPoly>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(f.to_string());
  return out;
}

std::vector<LaurentPoly> second_family() {
  LaurentPoly x1 = v("x1"), x2 = v("x2"), y1 = v("y1"), y2 = v("y2"), y3 = v("y3"), z = v("z");
  return {(z - 1) * (z - y3), (z - x1) * (z - y2), (z - x2) * (z - y1),
          (z - y1) * (z - y2), (z - y1) * (z - y3), (z - y2) * (z - y3)};
}

Outcome coxeter_soundness() {
  Presentation p = coxeter_ring();
  int ok = 0;
  for (const auto& g : p.declared()) ok += kernel_member(p, g) ? 1 : 0;
  return {ok == 9 && p.declared().size() == 9, std::to_string(ok) + "/9 generators in the kernel"};
}

Outcome coxeter_minimality() {
  Presentation p = coxeter_ring();
  int ok = 0, full = 0, partial = 0;
  for (std::size_t i = 0; i < 9; ++i) {
    Witness w = testing::coxeter_witness(i);
    bool all_fixed = w.rest.has_value() || w.values.size() == p.generators().size();
    (all_fixed ? full : partial)++;
    ok += minimality_witness(p, i, w) ? 1 : 0;
  }
  return {ok == 9 && full == 6 && partial == 3,
          std::to_string(ok) + "/9 witnesses (" + std::to_string(full) + " full, " + std::to_string(partial) +
              " partial)"};
}

Outcome zn_tilings() {
  Presentation p = coxeter_ring();
  int ok = 0;
  for (int n = 1; n <= 8; ++n) {
    Assignment ones{{"x1", 1}, {"x2", 1}};
    bool count = lp_substitute(tiling_sum(n), ones).constant_term() == Rational((n + 1) * (n + 2) / 2);
    ok += (kernel_member(p, v("z", n) - zn_tiling(n)) && count) ? 1 : 0;
  }
  return {ok == 8, std::to_string(ok) + "/8 values of n"};
}

Outcome strip_lemma() {
  int ok = 0;
  for (int n = 1; n <= 6; ++n) ok += strip_report(n).all() ? 1 : 0;
  return {ok == 6, std::to_string(ok) + "/6 values of n, four checks each"};
}

Outcome axis_tilings() {
  Presentation cox = coxeter_ring(), box = box_ring(1, false), signed_box = box_ring(1, true);
  int ok = 0;
  for (int n = 1; n <= 10; ++n) {
    ok += kernel_member(cox, v("y1", n) - y_tiling(TilingAxis::Y1, n)) ? 1 : 0;
    ok += kernel_member(cox, v("y2", n) - y_tiling(TilingAxis::Y2, n)) ? 1 : 0;
    ok += kernel_member(cox, v("y3", n) - y_tiling(TilingAxis::Y3, n)) ? 1 : 0;
    ok += kernel_member(box, v("y", n) - y_tiling(TilingAxis::Y, n)) ? 1 : 0;
  }
  bool inverse = kernel_member(signed_box, v("y", -1) - (1 + v("x", -1) - v("x", -1) * v("y")));
  return {ok == 40 && inverse, std::to_string(ok) + "/40 tilings, signed inverse " + (inverse ? "ok" : "fails")};
}

// Binomials x^i y^j - x^k y^l, exponents 0..3; predicted by equality of the Minkowski sums.
std::pair<int, int> binomial_agreement(const Presentation& p, int* predicted_count) {
  int agree = 0, total = 0;
  *predicted_count = 0;
  auto sum = [&](int i, int j) {
    return minkowski_sum(scale(p.find("x")->polytope, i), scale(p.find("y")->polytope, j));
  };
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
          if (i == k && j == l) continue;
          bool predicted = sum(i, j) == sum(k, l);
          *predicted_count += predicted ? 1 : 0;
          agree += kernel_member(p, v("x", i) * v("y", j) - v("x", k) * v("y", l)) == predicted ? 1 : 0;
          ++total;
        }
  return {agree, total};
}

// Pairs (i,j) != (k,l) in 0..3 with (k,l) = (i,j) + t(n, s*m).
int lattice_prediction(int m, int n, int s) {
  int count = 0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int t = -3; t <= 3; ++t) {
        if (t == 0) continue;
        int k = i + t * n, l = j + s * t * m;
        count += (k >= 0 && k <= 3 && l >= 0 && l <= 3) ? 1 : 0;
      }
  return count;
}

Outcome interval_catalog() {
  bool ok = true;
  std::ostringstream detail;
  for (int w = 0; w < 4; ++w) {
    auto e = testing::interval_endpoints(w);
    Presentation p = interval_ring(e[0], e[1], RingKind::Polynomial);
    for (const auto& g : p.declared()) ok = ok && kernel_member(p, g);
    int predicted = 0;
    auto [agree, total] = binomial_agreement(p, &predicted);
    ok = ok && agree == total;
    IntervalClass c = interval_class(e[0], e[1]);
    if (c.label == 'B') ok = ok && predicted == 0 && total == 240;
    if (c.label == 'C') ok = ok && predicted == lattice_prediction(static_cast<int>(c.m), static_cast<int>(c.n), -1);
    if (c.label == 'D') ok = ok && predicted == lattice_prediction(static_cast<int>(c.m), static_cast<int>(c.n), 1);
    detail << c.label << ":" << agree << "/" << total << "(" << predicted << " in kernel) ";
  }
  std::string d = detail.str();
  d.pop_back();
  return {ok, d};
}

bool brute_covers(const Polytope& p, const std::vector<Polytope>& fs) {
  for (const auto& vert : vertices(p)) {
    auto x = vert.point_coordinates();
    bool hit = false;
    for (const auto& f : fs) hit = hit || contains_point(f, x);
    if (!hit) return false;
  }
  return true;
}

std::pair<int, int> iff_law(const Polytope& p) {
  auto fs = faces(p);
  FacePresentation fp = face_presentation(p);
  int subsets = 0, mismatches = 0;
  for (unsigned mask = 1; mask < (1u << fs.size()); ++mask) {
    std::vector<Polytope> chosen;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (mask & (1u << i)) chosen.push_back(fs[i]);
    }
    CoverSpec c(p, chosen);
    ++subsets;
    bool covers = brute_covers(p, chosen);
    mismatches += (id_holds(c, fp) != covers || covers_vertices(c) != covers) ? 1 : 0;
  }
  return {subsets, mismatches};
}

Outcome identity_law() {
  auto [ts, tm] = iff_law(GridSet::triangle());
  auto [ss, sm] = iff_law(Polytope::box({{0, 1}, {0, 1}}));
  return {ts == 127 && ss == 511 && tm == 0 && sm == 0,
          "triangle " + std::to_string(ts) + " subsets, square " + std::to_string(ss) + " subsets, " +
              std::to_string(tm + sm) + " mismatches"};
}

Outcome minimal_antichain_patterns() {
  Polytope t = GridSet::triangle();
  FacePresentation fp = face_presentation(t);
  std::vector<LaurentPoly> got;
  for (const auto& c : minimal_antichains(t)) got.push_back(id_expand(c, fp));
  auto interval = minimal_antichains(Polytope::interval(0, 1));
  bool endpoints = interval.size() == 1 &&
                   interval[0].faces() == std::vector<Polytope>{Polytope::interval(0, 0), Polytope::interval(1, 1)};
  bool tri = got.size() == 6 && strings_of(got) == strings_of(second_family());
  return {tri && endpoints, std::to_string(got.size()) + " triangle patterns, interval " +
                                (endpoints ? "endpoint pair" : "wrong")};
}

Outcome euler() {
  std::mt19937_64 rng(9);
  int ones = 0;
  for (int i = 0; i < 50; ++i) {
    Polytope p = i % 4 == 0   ? Polytope(testing::random_grid_set(rng))
                 : i % 4 == 1 ? testing::random_box(rng, 3)
                 : i % 4 == 2 ? testing::random_interval(rng, true)
                              : Polytope::product({testing::random_grid_set(rng, 2), testing::random_box(rng, 2)});
    ones += euler_char(indicator(p)) == 1 ? 1 : 0;
  }
  int equal = 0;
  for (int i = 0; i < 50; ++i) {
    auto [lhs, rhs] = testing::equal_indicator_sums(rng, 6);
    SimpleFunction f(Ambient::grid()), g(Ambient::grid());
    for (const auto& p : lhs) f += indicator(p);
    for (const auto& p : rhs) g += indicator(p);
    equal += (f == g && lhs.size() == rhs.size() && euler_char(f) == Rational(static_cast<long>(lhs.size()))) ? 1 : 0;
  }
  return {ones == 50 && equal == 50,
          std::to_string(ones) + "/50 polytopes with value 1, " + std::to_string(equal) + "/50 equal sums with m = n"};
}

Outcome products() {
  ProductPresentation ii = product_presentation(box_ring(1, false), box_ring(1, false));
  bool ii_ok = true;
  for (const auto& g : ii.combined.declared()) ii_ok = ii_ok && kernel_member(ii.combined, g);
  ProductPresentation it = product_presentation(box_ring(1, true), coxeter_ring());
  std::vector<LaurentPoly> ten = second_family();
  LaurentPoly x1 = v("x1"), x2 = v("x2"), y1 = v("y1"), y2 = v("y2"), y3 = v("y3");
  ten.insert(ten.begin(), {(v("y") - 1) * (v("y") - v("x")), (y1 - 1) * (y1 - x1), (y2 - 1) * (y2 - x2),
                           (y3 - x1) * (y3 - x2)});
  bool ten_ok = it.combined.declared().size() == 10 && strings_of(it.combined.declared()) == strings_of(ten);
  for (const auto& g : ten) ten_ok = ten_ok && kernel_member(it.combined, g);
  bool tensor = verify_tensor_identity(ii, 2) && verify_tensor_identity(it, 2);
  std::mt19937_64 rng(10);
  Assignment ones;
  for (const auto& n : it.combined.names()) ones[n] = 1;
  int split_ok = 0;
  for (int i = 0; i < 100; ++i) {
    LaurentPoly f = random_ideal_element(it.combined, rng);
    auto [l, r] = psi_split(f, it.left_names(), it.right_names());
    split_ok += (kernel_member(it.left, l) && kernel_member(it.right, it.to_right(r)) &&
                 lp_substitute(f, ones).is_zero())
                    ? 1
                    : 0;
  }
  return {ii_ok && ten_ok && tensor && split_ok == 100,
          std::string("segment^2 ") + (ii_ok ? "ok" : "fails") + ", segment x triangle " +
              (ten_ok ? "10 generators" : "wrong ideal") + ", tensor " + (tensor ? "ok" : "fails") + ", " +
              std::to_string(split_ok) + "/100 splits"};
}

Outcome power_closure() {
  int checked = 0, ok = 0;
  for (const auto& p : testing::catalog()) {
    std::vector<int> powers =
        p.ring_kind() == RingKind::Laurent ? std::vector<int>{-2, -1, 2, 3} : std::vector<int>{2, 3};
    for (const auto& g : p.declared()) {
      for (int i : powers) {
        ++checked;
        ok += kernel_member(p, lp_power_map(g, i)) ? 1 : 0;
      }
    }
  }
  return {ok == checked, std::to_string(ok) + "/" + std::to_string(checked) + " power maps"};
}

Outcome normal_form_round_trip() {
  Presentation p = coxeter_ring();
  int checked = 0, ok = 0;
  for (Int u1 = 0; u1 <= 4; ++u1)
    for (Int v1 = 0; v1 <= 4; ++v1)
      for (Int s0 = 0; s0 <= 4; ++s0)
        for (Int s1 = s0; s1 <= 8; ++s1) {
          GridSet* base = nullptr;
          std::optional<GridSet> g0;
          try {
            g0.emplace(0, u1, 0, v1, s0, s1);
          } catch (const EmptyPolytope&) {
            continue;
          }
          base = &*g0;
          // Count each tight bound system once.
          if (base->u_max() != u1 || base->v_max() != v1 || base->s_min() != s0 || base->s_max() != s1 ||
              base->u_min() != 0 || base->v_min() != 0 || first_normal_form(*base).params.N > 4) {
            continue;
          }
          for (Int a = -1; a <= 1; ++a)
            for (Int b = -1; b <= 1; ++b) {
              std::vector<Scalar> off{a, b};
              GridSet g = translate(*base, off).as<GridSet>();
              SimpleFunction want = indicator(g);
              ++checked;
              ok += (phi_map(p, first_normal_form(g).poly) == want && phi_map(p, second_normal_form(g).poly) == want)
                        ? 1
                        : 0;
            }
        }
  return {ok == checked && checked > 0, std::to_string(ok) + "/" + std::to_string(checked) + " translated grid sets"};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_golden() {
  std::mt19937_64 rng(13);
  const std::vector<std::string> names = {"x1", "x2", "y1", "y2", "y3", "z"};
  cli::Alphabet alpha = cli::alphabet_of(coxeter_ring());
  int round_trips = 0;
  for (int i = 0; i < 1000; ++i) {
    LaurentPoly f = testing::random_poly(rng, names, static_cast<int>(testing::uniform(rng, 0, 6)), 3, true);
    std::string text = f.to_string();
    LaurentPoly g = cli::parse_poly(text, alpha);
    round_trips += (g == f && g.to_string() == text) ? 1 : 0;
  }
  cli::Command g1, x1, id;
  g1.verb = cli::Verb::Member;
  g1.payload = "(y1-1)*(y1-x1)";
  x1.verb = cli::Verb::Member;
  x1.payload = "x1";
  id.verb = cli::Verb::Identity;
  id.polytope = "triangle";
  id.cover = "edge:OA,vertex:B";
  const std::string dir = MINKRING_GOLDEN_DIR;
  int golden = 0;
  golden += cli::run(g1).render(cli::Format::Structured) == read_file(dir + "/member_g1.txt") ? 1 : 0;
  golden += cli::run(x1).render(cli::Format::Structured) == read_file(dir + "/member_x1.txt") ? 1 : 0;
  golden += cli::run(id).render(cli::Format::Structured) == read_file(dir + "/identity_triangle.txt") ? 1 : 0;
  return {round_trips == 1000 && golden == 3,
          std::to_string(round_trips) + "/1000 round trips, " + std::to_string(golden) + "/3 golden reports"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"coxeter soundness", coxeter_soundness},
      {"coxeter minimality", coxeter_minimality},
      {"z^n tiling", zn_tilings},
      {"strip lemma", strip_lemma},
      {"interval and box tilings", axis_tilings},
      {"interval ring catalog", interval_catalog},
      {"identity iff-law", identity_law},
      {"minimal antichains", minimal_antichain_patterns},
      {"euler homomorphism", euler},
      {"products", products},
      {"power closure", power_closure},
      {"normal-form round trip", normal_form_round_trip},
      {"cli golden files", cli_golden},
  };
  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
