#include "minkring/products.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "minkring/errors.hpp"

namespace minkring {

std::vector<std::string> ProductPresentation::left_names() const { return left.names(); }

std::vector<std::string> ProductPresentation::right_names() const {
  std::vector<std::string> out;
  for (const auto& n : right.names()) out.push_back(right_renaming.at(n));
  return out;
}

LaurentPoly ProductPresentation::to_combined(const LaurentPoly& right_poly) const {
  return lp_rename(right_poly, right_renaming);
}

LaurentPoly ProductPresentation::to_right(const LaurentPoly& combined_poly) const {
  std::map<std::string, std::string> inverse;
  for (const auto& [from, to] : right_renaming) inverse[to] = from;
  return lp_rename(combined_poly, inverse);
}

ProductPresentation product_presentation(const Presentation& left, const Presentation& right) {
  Ambient amb = Ambient::product({left.ambient(), right.ambient()});
  const Polytope left_origin = Polytope::origin(left.ambient());
  const Polytope right_origin = Polytope::origin(right.ambient());
  std::set<std::string> taken;
  std::vector<Generator> gens;
  for (const auto& g : left.generators()) {
    taken.insert(g.name);
    gens.push_back({g.name, Polytope::product({g.polytope, right_origin}), g.polarity});
  }
  std::map<std::string, std::string> renaming;
  for (const auto& g : right.generators()) {
    std::string name = taken.count(g.name) ? g.name + "_2" : g.name;
    if (taken.count(name)) throw Error("cannot rename generator " + g.name);
    taken.insert(name);
    renaming[g.name] = name;
    gens.push_back({name, Polytope::product({left_origin, g.polytope}), g.polarity});
  }
  std::vector<LaurentPoly> declared = left.declared();
  for (const auto& d : right.declared()) declared.push_back(lp_rename(d, renaming));
  Presentation combined("product:" + left.id() + "," + right.id(), std::move(amb), std::move(gens),
                        std::move(declared));
  return ProductPresentation{left, right, std::move(combined), std::move(renaming)};
}

std::pair<LaurentPoly, LaurentPoly> psi_split(const LaurentPoly& f, const std::vector<std::string>& left_names,
                                              const std::vector<std::string>& right_names) {
  std::set<std::string> known(left_names.begin(), left_names.end());
  known.insert(right_names.begin(), right_names.end());
  for (const auto& v : f.variables()) {
    if (!known.count(v)) throw ArityError("psi_split: unknown generator " + v);
  }
  Assignment right_to_one, left_to_one;
  for (const auto& n : right_names) right_to_one[n] = 1;
  for (const auto& n : left_names) left_to_one[n] = 1;
  return {lp_substitute(f, right_to_one), lp_substitute(f, left_to_one)};
}

std::vector<Monomial> bounded_monomials(const Presentation& p, int bound) {
  std::vector<std::pair<Monomial, int>> frontier{{Monomial(), 0}};
  // Grow one generator at a time so each exponent vector appears once.
  for (const auto& g : p.generators()) {
    std::vector<std::pair<Monomial, int>> next;
    for (const auto& [m, used] : frontier) {
      int lo = g.polarity == Polarity::Invertible ? -(bound - used) : 0;
      for (int e = lo; e <= bound - used; ++e) next.emplace_back(m * Monomial::var(g.name, e), used + std::abs(e));
    }
    frontier = std::move(next);
  }
  std::vector<Monomial> out;
  for (auto& [m, used] : frontier) out.push_back(std::move(m));
  std::sort(out.begin(), out.end());
  return out;
}

TensorReport tensor_report(const ProductPresentation& pp, int bound, std::uint64_t seed, int samples) {
  if (bound < 0 || bound > 3) throw ArityError("tensor identity bound must be in 0..3");
  TensorReport r;
  const auto ln = pp.left_names();
  const auto rn = pp.right_names();
  const auto lm = bounded_monomials(pp.left, bound);
  const auto rm = bounded_monomials(pp.right, bound);
  std::vector<SimpleFunction> limg, rimg;
  for (const auto& a : lm) limg.push_back(phi_map(pp.left, LaurentPoly(a)));
  for (const auto& b : rm) rimg.push_back(phi_map(pp.right, LaurentPoly(b)));
  for (std::size_t i = 0; i < lm.size(); ++i) {
    for (std::size_t j = 0; j < rm.size(); ++j) {
      ++r.monomial_pairs;
      LaurentPoly a(lm[i]), b = pp.to_combined(LaurentPoly(rm[j]));
      LaurentPoly tau = a * b;
      auto [sa, sb] = psi_split(tau, ln, rn);
      if (!(sa == a) || !(sb == b)) ++r.round_trip_failures;
      if (!(phi_map(pp.combined, tau) == tensor(limg[i], rimg[j]))) ++r.image_failures;
    }
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    LaurentPoly f = random_ideal_element(pp.combined, rng, 2);
    ++r.kernel_samples;
    auto [fl, fr] = psi_split(f, ln, rn);
    bool ok = kernel_member(pp.combined, f) && kernel_member(pp.left, fl) && kernel_member(pp.right, pp.to_right(fr));
    if (!ok) ++r.split_failures;
  }
  return r;
}

bool verify_tensor_identity(const ProductPresentation& pp, int bound) { return tensor_report(pp, bound).ok(); }

}  // namespace minkring
