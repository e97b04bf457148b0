#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pwsum/common.hpp"

namespace pwsum {

enum class Family { custom_list, shifted_integers, kadec_perturbed, clustered_pairs };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

// Asymptotic description of the infinite sequence a finite window was cut from.
// Lattice-type families index their points by k >= 0; index k carries the
// points with |n| = k.
struct FamilyInfo {
  Family family = Family::custom_list;
  double delta = 0.0;  // imaginary offset
  double amp = 0.0;    // kadec shift L, or clustered eps
  int count = 0;       // stored window is |n| <= count

  bool lattice() const { return family != Family::custom_list; }
  // family points with |n| == k
  std::vector<cplx> points_at(int k) const;
  // real offset and multiplicity of the lattice model used past the window
  double offset() const { return family == Family::kadec_perturbed ? amp : 0.0; }
  int multiplicity() const { return family == Family::clustered_pairs ? 2 : 1; }
  FamilyInfo conjugated() const;
};

struct FamilyParams {
  double delta = 0.3;
  double eps = 0.5;
  double amp = 0.1;
  std::vector<cplx> points;  // custom_list only
};

struct TruncationIndex {
  double n = 0.0;
  std::vector<std::size_t> included;
};

class Spectrum {
 public:
  Spectrum() = default;
  // Validates (no real, zero or repeated points) and sorts by |z|, then arg.
  explicit Spectrum(std::vector<cplx> points, FamilyInfo family = {});

  std::span<const cplx> points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const cplx& operator[](std::size_t k) const { return pts_[k]; }
  double delta_floor() const { return delta_floor_; }
  double radius() const { return pts_.empty() ? 0.0 : std::abs(pts_.back()); }
  const FamilyInfo& family() const { return family_; }
  std::string family_tag() const { return std::string(family_name(family_.family)); }

 private:
  std::vector<cplx> pts_;
  FamilyInfo family_;
  double delta_floor_ = 0.0;
};

// Rejection threshold for |Im z|.
inline constexpr double min_abs_imag = 1e-12;

bool spectrum_order(cplx a, cplx b);

Spectrum make_family(std::string_view name, const FamilyParams& params, int count);
Spectrum make_family(Family f, const FamilyParams& params, int count);

std::pair<Spectrum, Spectrum> split_halfplanes(const Spectrum& s);
// Original indices of the upper and lower points, in sorted order.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_indices(const Spectrum& s);

TruncationIndex truncation_at(const Spectrum& s, double n);

void write_spectrum(std::ostream& os, const Spectrum& s);
Spectrum read_spectrum(std::istream& is);

}  // namespace pwsum
