// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/fock.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ccfock {

namespace {

// Number of occupied spin-orbitals with linear index strictly below so.linear().
// The global ordering interleaves spins as 2p+spin, so the count splits into
// independent popcounts over the two strings.
int occ_below(const Determinant& d, SpinOrbital so) noexcept {
  const std::uint64_t low = (std::uint64_t{1} << so.spatial) - 1;
  if (so.spin == Spin::alpha) {
    return std::popcount(d.alpha_bits & low) + std::popcount(d.beta_bits & low);
  }
  const std::uint64_t low_incl = (std::uint64_t{2} << so.spatial) - 1;
  return std::popcount(d.alpha_bits & low_incl) + std::popcount(d.beta_bits & low);
}

std::uint64_t& string_of(Determinant& d, Spin s) noexcept {
  return s == Spin::alpha ? d.alpha_bits : d.beta_bits;
}

// Next bitmask with the same popcount (Gosper's hack).
std::uint64_t next_same_popcount(std::uint64_t v) noexcept {
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

std::vector<std::uint64_t> all_strings(int n_orb, int n_elec) {
  std::vector<std::uint64_t> out;
  if (n_elec == 0) {
    out.push_back(0);
    return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << n_orb;
  std::uint64_t v = (std::uint64_t{1} << n_elec) - 1;
  while (true) {
    out.push_back(v);
    const std::uint64_t next = next_same_popcount(v);
    if (next >= limit) break;
    v = next;
  }
  return out;
}

}  // namespace

std::string SpinOrbital::str() const {
  return std::to_string(spatial + 1) + (spin == Spin::alpha ? 'a' : 'b');
}

int Determinant::n_alpha() const noexcept { return std::popcount(alpha_bits); }
int Determinant::n_beta() const noexcept { return std::popcount(beta_bits); }

std::vector<SpinOrbital> Determinant::occupied_list(int n_orb) const {
  std::vector<SpinOrbital> occ;
  for (int p = 0; p < n_orb; ++p) {
    if ((alpha_bits >> p) & 1u) occ.push_back({p, Spin::alpha});
    if ((beta_bits >> p) & 1u) occ.push_back({p, Spin::beta});
  }
  return occ;
}

std::string Determinant::str(int n_orb) const {
  std::string s;
  for (int p = 0; p < n_orb; ++p) {
    const bool a = (alpha_bits >> p) & 1u;
    const bool b = (beta_bits >> p) & 1u;
    s += a && b ? '2' : a ? 'a' : b ? 'b' : '0';
  }
  return s;
}

Excitation::Excitation(std::vector<SpinOrbital> holes_, std::vector<SpinOrbital> particles_)
    : holes(std::move(holes_)), particles(std::move(particles_)) {
  if (holes.size() != particles.size())
    throw std::invalid_argument("Excitation: hole/particle count mismatch");
  // strict ascent also excludes duplicates
  auto ok = [](const std::vector<SpinOrbital>& v) {
    for (std::size_t k = 1; k < v.size(); ++k)
      if (v[k - 1].linear() >= v[k].linear()) return false;
    return true;
  };
  if (!ok(holes) || !ok(particles))
    throw std::invalid_argument("Excitation: indices must be strictly ascending");
}

bool Excitation::conserves_sz() const noexcept {
  int dz = 0;
  for (auto h : holes) dz -= (h.spin == Spin::alpha) ? 1 : -1;
  for (auto p : particles) dz += (p.spin == Spin::alpha) ? 1 : -1;
  return dz == 0;
}

Excitation Excitation::inverse() const {
  Excitation inv;
  inv.holes = particles;
  inv.particles = holes;
  return inv;
}

std::strong_ordering operator<=>(const Excitation& a, const Excitation& b) {
  if (auto c = a.holes.size() <=> b.holes.size(); c != 0) return c;
  auto cmp = [](const std::vector<SpinOrbital>& x, const std::vector<SpinOrbital>& y) {
    for (std::size_t k = 0; k < x.size(); ++k)
      if (auto c = x[k].linear() <=> y[k].linear(); c != 0) return c;
    return std::strong_ordering::equal;
  };
  if (auto c = cmp(a.holes, b.holes); c != 0) return c;
  return cmp(a.particles, b.particles);
}

std::string Excitation::str() const {
  std::string s;
  for (std::size_t k = 0; k < holes.size(); ++k) s += (k ? " " : "") + holes[k].str();
  s += " -> ";
  for (std::size_t k = 0; k < particles.size(); ++k) s += (k ? " " : "") + particles[k].str();
  return s;
}

Determinant reference_determinant(int n_orb, int n_alpha, int n_beta) {
  if (n_alpha > n_orb || n_beta > n_orb || n_alpha < 0 || n_beta < 0)
    throw std::invalid_argument("reference_determinant: invalid electron counts");
  Determinant d;
  d.alpha_bits = n_alpha ? (std::uint64_t{1} << n_alpha) - 1 : 0;
  d.beta_bits = n_beta ? (std::uint64_t{1} << n_beta) - 1 : 0;
  return d;
}

FockBasis FockBasis::enumerate(int n_orb, int n_alpha, int n_beta) {
  if (n_orb < 1 || n_orb > 32)
    throw std::invalid_argument("FockBasis: n_orb must be in [1, 32]");
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_orb || n_beta > n_orb)
    throw std::invalid_argument("FockBasis: invalid electron counts");

  FockBasis basis;
  basis.n_orb_ = n_orb;
  basis.n_alpha_ = n_alpha;
  basis.n_beta_ = n_beta;

  const auto alpha_strings = all_strings(n_orb, n_alpha);
  const auto beta_strings = all_strings(n_orb, n_beta);
  basis.dets_.reserve(alpha_strings.size() * beta_strings.size());
  for (auto a : alpha_strings)
    for (auto b : beta_strings) basis.dets_.push_back({a, b});

  basis.index_.reserve(basis.dets_.size());
  for (std::size_t k = 0; k < basis.dets_.size(); ++k) basis.index_.emplace(basis.dets_[k], k);
  return basis;
}

std::size_t FockBasis::index_of(const Determinant& det) const {
  const auto it = index_.find(det);
  if (it == index_.end())
    throw std::out_of_range("FockBasis::index_of: determinant not in basis");
  return it->second;
}

std::optional<std::size_t> FockBasis::find(const Determinant& det) const noexcept {
  const auto it = index_.find(det);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<Determinant, int>> apply_excitation(const Determinant& det,
                                                            const Excitation& ex) {
  Determinant d = det;
  int sign = 1;
  // a_{i_k} ... a_{i_1} acting right to left: annihilate i_1 first.
  for (auto h : ex.holes) {
    auto& bits = string_of(d, h.spin);
    const std::uint64_t mask = std::uint64_t{1} << h.spatial;
    if (!(bits & mask)) return std::nullopt;
    if (occ_below(d, h) & 1) sign = -sign;
    bits &= ~mask;
  }
  // a+_{a_1} ... a+_{a_k}: create a_k first.
  for (auto it = ex.particles.rbegin(); it != ex.particles.rend(); ++it) {
    auto& bits = string_of(d, it->spin);
    const std::uint64_t mask = std::uint64_t{1} << it->spatial;
    if (bits & mask) return std::nullopt;
    if (occ_below(d, *it) & 1) sign = -sign;
    bits |= mask;
  }
  return std::make_pair(d, sign);
}

}  // namespace ccfock
