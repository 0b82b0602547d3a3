// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/amplitudes.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ccfock {

namespace {

SpinOrbital parse_spin_orbital(const std::string& tok) {
  if (tok.size() < 2) throw std::invalid_argument("bad spin-orbital token: " + tok);
  const char spin_char = tok.back();
  Spin spin;
  if (spin_char == 'a' || spin_char == 'A')
    spin = Spin::alpha;
  else if (spin_char == 'b' || spin_char == 'B')
    spin = Spin::beta;
  else
    throw std::invalid_argument("bad spin letter in token: " + tok);
  const int spatial = std::stoi(tok.substr(0, tok.size() - 1));
  if (spatial < 1) throw std::invalid_argument("spin-orbital indices are 1-based: " + tok);
  return {spatial - 1, spin};
}

}  // namespace

Excitation parse_excitation(const std::string& text) {
  const auto arrow = text.find("->");
  if (arrow == std::string::npos)
    throw std::invalid_argument("excitation must contain '->': " + text);
  std::vector<SpinOrbital> holes, particles;
  std::stringstream hs(text.substr(0, arrow)), ps(text.substr(arrow + 2));
  std::string tok;
  while (hs >> tok) holes.push_back(parse_spin_orbital(tok));
  while (ps >> tok) particles.push_back(parse_spin_orbital(tok));
  return Excitation(std::move(holes), std::move(particles));
}

void write_amplitudes(std::ostream& out, const AmplitudeSet& t, const std::string& fingerprint) {
  out << "# ccfock amplitudes v1\n";
  out << "fingerprint " << fingerprint << "\n";
  out << "count " << t.size() << "\n";
  out << std::scientific << std::setprecision(16);
  for (const auto& [ex, value] : t) out << ex.str() << "  " << value << "\n";
}

void write_amplitudes_file(const std::string& path, const AmplitudeSet& t,
                           const std::string& fingerprint) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_amplitudes(out, t, fingerprint);
}

AmplitudeFile read_amplitudes(std::istream& in) {
  AmplitudeFile file;
  std::string line;
  std::size_t expected = 0;
  bool have_count = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string key;
    ss >> key;
    if (key == "fingerprint") {
      ss >> file.fingerprint;
    } else if (key == "count") {
      ss >> expected;
      have_count = true;
    } else {
      // amplitude record: everything before the last token is the excitation
      const auto last_space = line.find_last_of(" \t");
      if (last_space == std::string::npos)
        throw std::runtime_error("malformed amplitude record: " + line);
      const double value = std::stod(line.substr(last_space + 1));
      file.amplitudes[parse_excitation(line.substr(0, last_space))] = value;
    }
  }
  if (have_count && file.amplitudes.size() != expected)
    throw std::runtime_error("amplitude record count mismatch");
  return file;
}

AmplitudeFile read_amplitudes_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open amplitude file: " + path);
  return read_amplitudes(in);
}

}  // namespace ccfock
