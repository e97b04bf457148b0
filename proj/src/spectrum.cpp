#include "pwsum/spectrum.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pwsum {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::shifted_integers: return "shifted_integers";
    case Family::kadec_perturbed: return "kadec_perturbed";
    case Family::clustered_pairs: return "clustered_pairs";
    case Family::custom_list: break;
  }
  return "custom_list";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::custom_list, Family::shifted_integers, Family::kadec_perturbed,
                   Family::clustered_pairs})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::vector<cplx> FamilyInfo::points_at(int k) const {
  const cplx id(0.0, delta);
  if (k == 0) return {id};
  const double a = k;
  switch (family) {
    case Family::shifted_integers: return {a + id, -a + id};
    case Family::kadec_perturbed: return {a + amp + id, -a - amp + id};
    case Family::clustered_pairs: return {a + id, a + amp / a + id, -a + id, -a + amp / a + id};
    case Family::custom_list: break;
  }
  return {};
}

FamilyInfo FamilyInfo::conjugated() const {
  FamilyInfo f = *this;
  f.delta = -delta;
  return f;
}

bool spectrum_order(cplx a, cplx b) {
  double ma = std::abs(a), mb = std::abs(b);
  if (ma != mb) return ma < mb;
  return std::arg(a) < std::arg(b);
}

Spectrum::Spectrum(std::vector<cplx> points, FamilyInfo family)
    : pts_(std::move(points)), family_(family) {
  for (cplx z : pts_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("spectrum point is not finite");
    if (std::abs(z.imag()) < min_abs_imag)
      throw std::invalid_argument("spectrum point on (or within 1e-12 of) the real line");
  }
  std::sort(pts_.begin(), pts_.end(), spectrum_order);
  for (std::size_t k = 1; k < pts_.size(); ++k)
    if (pts_[k] == pts_[k - 1]) throw std::invalid_argument("repeated spectrum point");
  delta_floor_ = INFINITY;
  for (cplx z : pts_) delta_floor_ = std::min(delta_floor_, std::abs(z.imag()));
  if (pts_.empty()) delta_floor_ = 0.0;
}

Spectrum make_family(std::string_view name, const FamilyParams& params, int count) {
  return make_family(parse_family(name), params, count);
}

Spectrum make_family(Family f, const FamilyParams& params, int count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (f == Family::custom_list) {
    if (params.points.empty()) throw std::invalid_argument("custom_list needs points");
    return Spectrum(params.points);
  }
  if (f == Family::shifted_integers && !(params.delta > 0.0))
    throw std::invalid_argument("shifted_integers needs delta > 0");
  if (!(std::abs(params.delta) >= min_abs_imag))
    throw std::invalid_argument("family delta produces real points");
  FamilyInfo info;
  info.family = f;
  info.delta = params.delta;
  info.amp = f == Family::kadec_perturbed ? params.amp
             : f == Family::clustered_pairs ? params.eps : 0.0;
  info.count = count;
  if (f == Family::kadec_perturbed && !(info.amp > -1.0))
    throw std::invalid_argument("kadec shift must exceed -1");
  if (f == Family::clustered_pairs && info.amp == 0.0)
    throw std::invalid_argument("clustered_pairs needs eps != 0");
  std::vector<cplx> pts;
  for (int k = 0; k <= count; ++k)
    for (cplx z : info.points_at(k)) pts.push_back(z);
  return Spectrum(std::move(pts), info);
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_indices(const Spectrum& s) {
  std::vector<std::size_t> up, lo;
  for (std::size_t k = 0; k < s.size(); ++k) (s[k].imag() > 0 ? up : lo).push_back(k);
  return {up, lo};
}

std::pair<Spectrum, Spectrum> split_halfplanes(const Spectrum& s) {
  auto [iu, il] = split_indices(s);
  std::vector<cplx> up, lo;
  for (auto k : iu) up.push_back(s[k]);
  for (auto k : il) lo.push_back(s[k]);
  FamilyInfo fu, fl;
  if (il.empty()) fu = s.family();
  if (iu.empty()) fl = s.family();
  return {Spectrum(std::move(up), fu), Spectrum(std::move(lo), fl)};
}

TruncationIndex truncation_at(const Spectrum& s, double n) {
  if (!(n > 0.0)) throw std::invalid_argument("truncation radius must be positive");
  TruncationIndex t;
  t.n = n;
  for (std::size_t k = 0; k < s.size() && std::abs(s[k]) < n; ++k) t.included.push_back(k);
  return t;
}

void write_spectrum(std::ostream& os, const Spectrum& s) {
  const FamilyInfo& f = s.family();
  char buf[128];
  os << "# family=" << family_name(f.family);
  if (f.lattice()) {
    std::snprintf(buf, sizeof buf, " delta=%.17g amp=%.17g count=%d", f.delta, f.amp, f.count);
    os << buf;
  }
  os << '\n';
  for (cplx z : s.points()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", z.real(), z.imag());
    os << buf;
  }
}

Spectrum read_spectrum(std::istream& is) {
  FamilyInfo f;
  std::vector<cplx> pts;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string kv;
      while (hs >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "family") f.family = parse_family(val);
        else if (key == "delta") f.delta = std::stod(val);
        else if (key == "amp") f.amp = std::stod(val);
        else if (key == "count") f.count = std::stoi(val);
      }
      continue;
    }
    std::istringstream ls(line);
    double re, im;
    if (!(ls >> re >> im)) throw std::invalid_argument("bad spectrum line: " + line);
    pts.emplace_back(re, im);
  }
  return Spectrum(std::move(pts), f);
}

}  // namespace pwsum
