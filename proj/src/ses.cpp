// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/ses.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ccfock {

namespace {

int count_spin(const std::vector<SpinOrbital>& v, Spin s) {
  int n = 0;
  for (auto so : v)
    if (so.spin == s) ++n;
  return n;
}

int sz_twice(const std::vector<SpinOrbital>& sos) {
  int z = 0;
  for (auto so : sos) z += so.spin == Spin::alpha ? 1 : -1;
  return z;
}

std::vector<SpinOrbital> expand(const std::vector<SpinOrbital>& v, SesMode mode) {
  std::vector<SpinOrbital> out;
  if (mode == SesMode::orbital) {
    for (auto so : v) {
      out.push_back({so.spatial, Spin::alpha});
      out.push_back({so.spatial, Spin::beta});
    }
  } else {
    out = v;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SpinOrbital> SesSpec::active_occupied() const { return expand(r, mode); }
std::vector<SpinOrbital> SesSpec::active_virtual() const { return expand(s, mode); }

int SesSpec::max_internal_rank() const {
  const auto occ = active_occupied();
  const auto virt = active_virtual();
  const int ra = count_spin(occ, Spin::alpha), rb = count_spin(occ, Spin::beta);
  const int sa = count_spin(virt, Spin::alpha), sb = count_spin(virt, Spin::beta);
  return std::min(ra, sa) + std::min(rb, sb);
}

std::string SesSpec::str() const {
  auto fmt = [this](const std::vector<SpinOrbital>& v) {
    std::string out = "{";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) out += ",";
      out += mode == SesMode::orbital ? std::to_string(v[k].spatial + 1) : v[k].str();
    }
    return out + "}";
  };
  return "R=" + fmt(r) + ", S=" + fmt(s);
}

void SesSpec::validate_ranges(int n_orb, int n_occ_spatial) const {
  for (auto so : r)
    if (so.spatial < 0 || so.spatial >= n_occ_spatial)
      throw std::invalid_argument("SES " + str() + ": active occupied index out of range");
  for (auto so : s)
    if (so.spatial < n_occ_spatial || so.spatial >= n_orb)
      throw std::invalid_argument("SES " + str() + ": active virtual index out of range");
  if (r.empty() != s.empty())
    throw std::invalid_argument("SES " + str() + ": R and S must both be empty or non-empty");
}

SesSpec parse_ses_spec(const std::string& text) {
  auto split = [](const std::string& part, const std::string& tag) {
    const auto eq = part.find('=');
    if (eq == std::string::npos || part.substr(0, eq) != tag)
      throw std::invalid_argument("SES syntax is \"R=..;S=..\", got: " + part);
    std::vector<std::string> toks;
    std::stringstream ss(part.substr(eq + 1));
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) toks.push_back(tok);
    return toks;
  };

  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             body.end());
  const auto semi = body.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("SES syntax is \"R=..;S=..\", got: " + text);

  const auto r_toks = split(body.substr(0, semi), "R");
  const auto s_toks = split(body.substr(semi + 1), "S");

  auto spin_tagged = [](const std::string& tok) {
    const char c = tok.back();
    return c == 'a' || c == 'b' || c == 'A' || c == 'B';
  };
  bool any_spin = false, all_spin = true;
  for (const auto& toks : {r_toks, s_toks})
    for (const auto& t : toks) {
      if (spin_tagged(t))
        any_spin = true;
      else
        all_spin = false;
    }
  if (any_spin && !all_spin)
    throw std::invalid_argument("SES spec mixes orbital and spin-orbital tokens: " + text);

  SesSpec spec;
  spec.mode = any_spin ? SesMode::spin_orbital : SesMode::orbital;
  auto to_so = [&](const std::string& tok) -> SpinOrbital {
    if (any_spin) {
      const char c = static_cast<char>(std::tolower(tok.back()));
      const int idx = std::stoi(tok.substr(0, tok.size() - 1));
      if (idx < 1) throw std::invalid_argument("SES indices are 1-based: " + tok);
      return {idx - 1, c == 'a' ? Spin::alpha : Spin::beta};
    }
    const int idx = std::stoi(tok);
    if (idx < 1) throw std::invalid_argument("SES indices are 1-based: " + tok);
    return {idx - 1, Spin::alpha};
  };
  for (const auto& t : r_toks) spec.r.push_back(to_so(t));
  for (const auto& t : s_toks) spec.s.push_back(to_so(t));
  std::sort(spec.r.begin(), spec.r.end());
  std::sort(spec.s.begin(), spec.s.end());
  return spec;
}

SesSpec ses_orbital(std::vector<int> r_1based, std::vector<int> s_1based) {
  SesSpec spec;
  spec.mode = SesMode::orbital;
  for (int k : r_1based) spec.r.push_back({k - 1, Spin::alpha});
  for (int k : s_1based) spec.s.push_back({k - 1, Spin::alpha});
  std::sort(spec.r.begin(), spec.r.end());
  std::sort(spec.s.begin(), spec.s.end());
  return spec;
}

SesSpec ses_spin_orbital(std::vector<std::pair<int, Spin>> r_1based,
                         std::vector<std::pair<int, Spin>> s_1based) {
  SesSpec spec;
  spec.mode = SesMode::spin_orbital;
  for (auto [k, sp] : r_1based) spec.r.push_back({k - 1, sp});
  for (auto [k, sp] : s_1based) spec.s.push_back({k - 1, sp});
  std::sort(spec.r.begin(), spec.r.end());
  std::sort(spec.s.begin(), spec.s.end());
  return spec;
}

ExcitationSet internal_excitations(const SesSpec& spec, int n_orb, int n_occ_spatial) {
  spec.validate_ranges(n_orb, n_occ_spatial);
  const auto occ = spec.active_occupied();
  const auto virt = spec.active_virtual();

  std::vector<Excitation> list;
  const int kmax = spec.max_internal_rank();
  for (int k = 1; k <= kmax; ++k) {
    detail::for_each_k_subset(occ, k, [&](const std::vector<SpinOrbital>& holes) {
      const int hz = sz_twice(holes);
      detail::for_each_k_subset(virt, k, [&](const std::vector<SpinOrbital>& particles) {
        if (sz_twice(particles) == hz) list.emplace_back(holes, particles);
      });
    });
  }
  return ExcitationSet(std::move(list), "internal " + spec.str());
}

bool is_internal(const SesSpec& spec, const Excitation& ex) {
  const auto occ = spec.active_occupied();
  const auto virt = spec.active_virtual();
  auto member = [](const std::vector<SpinOrbital>& v, SpinOrbital so) {
    return std::binary_search(v.begin(), v.end(), so);
  };
  for (auto h : ex.holes)
    if (!member(occ, h)) return false;
  for (auto p : ex.particles)
    if (!member(virt, p)) return false;
  return true;
}

bool validate_ses(const SesSpec& spec, const ExcitationSet& exset, int n_orb,
                  int n_occ_spatial) {
  const auto internal = internal_excitations(spec, n_orb, n_occ_spatial);
  for (const auto& ex : internal)
    if (!exset.contains(ex)) return false;
  return true;
}

Partition partition_amplitudes(const AmplitudeSet& t, const SesSpec& spec) {
  Partition p;
  for (const auto& [ex, value] : t) {
    if (is_internal(spec, ex))
      p.t_int[ex] = value;
    else
      p.t_ext[ex] = value;
  }
  return p;
}

DetSubset internal_space(const SesSpec& spec, std::shared_ptr<const FockBasis> basis) {
  const auto internal = internal_excitations(spec, basis->n_orb(),
                                             basis->n_alpha());
  std::set<std::size_t> indices;
  indices.insert(0);  // reference
  const Determinant& ref = basis->reference();
  for (const auto& ex : internal) {
    const auto img = apply_excitation(ref, ex);
    if (img) indices.insert(basis->index_of(img->first));
  }
  DetSubset subset;
  subset.basis = std::move(basis);
  subset.indices.assign(indices.begin(), indices.end());  // ascending; 0 first
  return subset;
}

std::uint64_t ses_census_ccsd(int n_o, int n_v) {
  if (n_o < 1 || n_v < 1) throw std::invalid_argument("ses_census_ccsd: counts must be >= 1");
  const auto pow2m1 = [](int n) { return (std::uint64_t{1} << n) - 1; };
  return static_cast<std::uint64_t>(n_o) * pow2m1(n_v) +
         static_cast<std::uint64_t>(n_v) * pow2m1(n_o);
}

std::vector<SesSpec> enumerate_valid_ses(int n_o, int n_v, int max_rank) {
  std::vector<SesSpec> out;
  std::vector<int> occ(n_o), virt(n_v);
  for (int i = 0; i < n_o; ++i) occ[i] = i + 1;
  for (int a = 0; a < n_v; ++a) virt[a] = n_o + a + 1;

  for (int nr = 1; nr <= n_o; ++nr)
    detail::for_each_k_subset(occ, nr, [&](const std::vector<int>& rset) {
      for (int ns = 1; ns <= n_v; ++ns)
        detail::for_each_k_subset(virt, ns, [&](const std::vector<int>& sset) {
          if (2 * std::min(nr, ns) <= max_rank) out.push_back(ses_orbital(rset, sset));
        });
    });
  return out;
}

}  // namespace ccfock
