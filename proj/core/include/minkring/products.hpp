#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "minkring/laurent.hpp"
#include "minkring/presentations.hpp"

namespace minkring {

// Left generators P -> P x {0}, right generators Q -> {0} x Q. Right names that collide
// with a left name get the suffix "_2".
struct ProductPresentation {
  Presentation left;
  Presentation right;
  Presentation combined;
  std::map<std::string, std::string> right_renaming;  // right spelling -> combined spelling

  std::vector<std::string> left_names() const;
  std::vector<std::string> right_names() const;  // combined spelling
  LaurentPoly to_combined(const LaurentPoly& right_poly) const;
  LaurentPoly to_right(const LaurentPoly& combined_poly) const;
};

ProductPresentation product_presentation(const Presentation& left, const Presentation& right);

// (f with right names at 1, f with left names at 1), both in the combined spelling.
std::pair<LaurentPoly, LaurentPoly> psi_split(const LaurentPoly& f, const std::vector<std::string>& left_names,
                                              const std::vector<std::string>& right_names);

// Monomials over the generators with sum of |exponent| <= bound (nonnegative for plain generators).
std::vector<Monomial> bounded_monomials(const Presentation& p, int bound);

struct TensorReport {
  std::size_t monomial_pairs = 0;
  std::size_t round_trip_failures = 0;  // psi(tau(a (x) b)) != a (x) b
  std::size_t image_failures = 0;       // phi(a b) != phi(a) (x) phi(b)
  std::size_t kernel_samples = 0;
  std::size_t split_failures = 0;       // a psi_split component outside its factor kernel
  bool ok() const { return round_trip_failures == 0 && image_failures == 0 && split_failures == 0; }
};

TensorReport tensor_report(const ProductPresentation& pp, int bound, std::uint64_t seed = 1, int samples = 10);
bool verify_tensor_identity(const ProductPresentation& pp, int bound);

}  // namespace minkring
