#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pwsum/blaschke.hpp"
#include "pwsum/genfun.hpp"
#include "pwsum/grid.hpp"
#include "pwsum/weights.hpp"

namespace pwsum {

// sin(pi u)/(pi u) with the removable point handled by its series
cplx sinc(cplx u);

// F(z) = sum_j c_j sinc(z - conj mu_j)
struct PWFunction {
  struct Atom {
    cplx center;
    cplx coeff;
  };
  std::vector<Atom> atoms;

  PWFunction() = default;
  explicit PWFunction(std::vector<Atom> a);
  cplx operator()(cplx z) const;
  GridFunction sample(const GridFunction& grid) const;
  PWFunction conjugated() const;  // z -> conj F(conj z)
};

void write_pw_csv(std::ostream& os, const PWFunction& f);
PWFunction read_pw_csv(std::istream& is);

// Lagrange partial sums S_n(z) = G(z) sum_k w_k F(lam_k) / (G'(lam_k)(z - lam_k)).
// Caches G on the grid and G' at the spectrum.
class LagrangeEngine {
 public:
  LagrangeEngine(const GeneratingFunction& g, const GridFunction& grid);

  GridFunction partial_sum(const PWFunction& F, const WeightScheme& ws, std::size_t step) const;
  cplx partial_sum_at(const PWFunction& F, const WeightScheme& ws, std::size_t step, cplx z) const;
  // coefficients w_k F(lam_k) / G'(lam_k) over the support of the step
  std::vector<std::pair<std::size_t, cplx>> coefficients(const PWFunction& F, const WeightScheme& ws,
                                                         std::size_t step) const;
  cplx g_prime(std::size_t k) const;
  const GridFunction& grid() const { return grid_; }
  const GeneratingFunction& generating() const { return g_; }
  const std::vector<cplx>& g_on_grid() const { return gx_; }
  // L2 mass of F and of S_n outside [-X, X], bounded from the sinc and Cauchy tails
  double tail_bound(const PWFunction& F, const WeightScheme& ws, std::size_t step) const;

 private:
  const GeneratingFunction& g_;
  GridFunction grid_;
  std::vector<cplx> gx_;
  mutable std::vector<cplx> gp_;
  mutable std::vector<char> have_gp_;
};

GridFunction partial_sum(const PWFunction& F, const GeneratingFunction& g, const WeightScheme& ws,
                         std::size_t step, const GridFunction& grid);

struct ProbeOptions {
  int atoms = 40;  // sinc atoms centred at the integers -atoms..atoms
  int iterations = 200;
};

// Lower bound for the norm of F -> S_n(F) over spans of integer-shifted sincs
// (orthonormal in L2), from power iteration on the Gram matrix.
double operator_norm_probe(const LagrangeEngine& eng, const WeightScheme& ws, std::size_t step, int trials,
                           std::uint64_t seed, const ProbeOptions& opt = {});

// max |S_n(z) - F(z)| over a polar sample of the disk
double compactwise_error(const LagrangeEngine& eng, const PWFunction& F, const WeightScheme& ws,
                         std::size_t step, cplx center, double radius, int radial = 12, int angular = 48);

struct ProjectorCheck {
  double mismatch = 0.0;
  double error_bar = 0.0;
  double rhs_norm = 0.0;
};

// Compares Phi - B_n P+(conj(B_n) Phi) with sum_{|lam|<n} Phi(lam) B_n / (B_n'(lam)(x - lam)),
// Phi = F e^{i pi x}/omega, on the grid.
ProjectorCheck weighted_projector_check(const PWFunction& F, const GeneratingFunction& g,
                                        const BlaschkeProduct& b_upper, double n, const GridFunction& grid);

}  // namespace pwsum
