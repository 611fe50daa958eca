// Copyright 2026 The spinqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinqec/code_builder.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace spinqec {
namespace {

void check_coefficient_index(int d, int i) {
  if (d < 2) throw std::domain_error("qudit dimension d must be >= 2");
  if (i < 1 || i > d - 1) {
    throw std::domain_error("coefficient index i=" + std::to_string(i) +
                            " outside 1.." + std::to_string(d - 1));
  }
}

// Adds amp to the mirror pair (-m, +m) of a single-spin codeword.
void add_pair(Codeword& w, int twice_m, const Amplitude& amp) {
  w.terms[{HalfInt::from_twice(-twice_m)}] = amp;
  w.terms[{HalfInt::from_twice(twice_m)}] = amp;
}

std::string family_name(const std::string& kind, int d, int t) {
  return kind + "(d=" + std::to_string(d) + ",t=" + std::to_string(t) + ")";
}

}  // namespace

std::string to_string(ErrorModel model) {
  return model == ErrorModel::kZOnly ? "z" : "xyz";
}

ErrorModel parse_error_model(const std::string& text) {
  if (text == "z" || text == "Z" || text == "z_only") return ErrorModel::kZOnly;
  if (text == "xyz" || text == "XYZ") return ErrorModel::kXYZ;
  throw std::invalid_argument("unknown error model '" + text + "' (expected z or xyz)");
}

void CodeSpec::validate() const {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  if (t != 1 && t != 2) throw std::invalid_argument("t must be 1 or 2");
  if (n_qudits != 1 && n_qudits != 2 * t + 1) {
    throw std::invalid_argument("n_qudits must be 1 or 2t+1 = " +
                                std::to_string(2 * t + 1));
  }
}

Rational Codeword::norm_squared() const {
  Rational sum = 0;
  for (const auto& [levels, amp] : terms) sum += amp.square();
  return sum;
}

bool Codeword::is_mirror_symmetric() const {
  for (const auto& [levels, amp] : terms) {
    LevelTuple mirrored;
    mirrored.reserve(levels.size());
    for (HalfInt m : levels) mirrored.push_back(-m);
    auto it = terms.find(mirrored);
    if (it == terms.end() || !(it->second == amp)) return false;
  }
  return true;
}

bool Codeword::is_diagonal() const {
  for (const auto& [levels, amp] : terms) {
    if (std::adjacent_find(levels.begin(), levels.end(), std::not_equal_to<>()) !=
        levels.end()) {
      return false;
    }
  }
  return true;
}

std::set<HalfInt> Codeword::levels(int qudit) const {
  std::set<HalfInt> out;
  for (const auto& [tuple, amp] : terms) out.insert(tuple.at(qudit));
  return out;
}

bool CodeFamily::supports_disjoint() const {
  std::set<LevelTuple> seen;
  for (const Codeword& w : codewords) {
    for (const auto& [tuple, amp] : w.terms) {
      if (!seen.insert(tuple).second) return false;
    }
  }
  return true;
}

int CodeFamily::min_level_gap_twice() const {
  std::set<HalfInt> all;
  for (const Codeword& w : codewords) all.merge(w.levels(0));
  const std::vector<HalfInt> sorted(all.begin(), all.end());
  int gap = std::numeric_limits<int>::max();
  for (size_t k = 1; k < sorted.size(); ++k) {
    gap = std::min(gap, sorted[k].twice() - sorted[k - 1].twice());
  }
  return gap;
}

HalfInt CodeFamily::max_occupied_level() const {
  HalfInt top = HalfInt::from_twice(-spin.two_s());
  for (const Codeword& w : codewords) {
    for (HalfInt m : w.levels(0)) top = std::max(top, m);
  }
  return top;
}

Amplitude CodeFamily::amplitude(int k, HalfInt m) const {
  const auto& terms = codewords.at(k).terms;
  auto it = terms.find(LevelTuple{m});
  return it == terms.end() ? Amplitude() : it->second;
}

Distance3Coefficients coeff_distance3(int d, int i) {
  check_coefficient_index(d, i);
  const long long den = 8LL * d - 4;
  return {Amplitude::sqrt(make_rational(2LL * d - 1 + i, den)),
          Amplitude::sqrt(make_rational(2LL * d - 1 - i, den))};
}

Distance5Coefficients coeff_distance5(int d, int i) {
  check_coefficient_index(d, i);
  const BigInt D = d;
  const BigInt I = i;
  const BigInt ab_factor = 66 * D * D * D + 2 * D * D * I - 100 * D * D - 14 * D * I * I +
                           12 * D * I + 47 * D + 2 * I * I * I + 4 * I * I - 5 * I - 7;
  // Leading term is 30d^3; this factor and ab_factor sum to the denominator.
  const BigInt cd_factor = 30 * D * D * D + 30 * D * D * I - 60 * D * D - 2 * D * I * I -
                           28 * D * I + 37 * D - 2 * I * I * I + 4 * I * I + 5 * I - 7;
  const BigInt denom = 96 * D * D * D + 32 * D * D * I - 160 * D * D - 16 * D * I * I -
                       16 * D * I + 84 * D + 8 * I * I - 14;
  const Rational ab = Rational(ab_factor, denom);
  const Rational cd = Rational(cd_factor, denom);
  const BigInt base = 32 * D - 16;
  return {Amplitude::sqrt(Rational(8 * D + 2 * I - 5, base) * ab),
          Amplitude::sqrt(Rational(8 * D - 2 * I - 3, base) * ab),
          Amplitude::sqrt(Rational(12 * D - 2 * I - 5, base) * cd),
          Amplitude::sqrt(Rational(4 * D + 2 * I - 3, base) * cd)};
}

HalfInt z_code_spin(int d, int t) {
  if (t == 1) return HalfInt::from_twice(4 * d - 3);
  if (t == 2) return HalfInt::from_twice(8 * d - 5);
  throw std::invalid_argument("t must be 1 or 2");
}

HalfInt xyz_code_spin(int d, int t) {
  return z_code_spin(d, t) * (2 * t + 1) + HalfInt::from_int(t);
}

CodeFamily build_z_code(int d, int t) {
  CodeFamily code;
  code.spec = {d, t, ErrorModel::kZOnly, 1};
  code.spec.validate();
  code.name = family_name("z_code", d, t);
  code.spin = SpinSpace::from_spin(z_code_spin(d, t));
  code.codewords.resize(d);
  for (int k = 0; k < d; ++k) code.codewords[k].label = k;

  if (t == 1) {
    // Centre level S/2 + 1/4 = d - 1/2.
    const int centre = 2 * d - 1;
    add_pair(code.codewords[0], centre, Amplitude::sqrt(make_rational(1, 2)));
    for (int i = 1; i < d; ++i) {
      const auto [a, b] = coeff_distance3(d, i);
      add_pair(code.codewords[i], centre - 2 * i, a);
      add_pair(code.codewords[i], centre + 2 * i, b);
    }
  } else {
    // S/4 + 1/8 = d - 1/2 and 3S/4 + 3/8 = 3d - 3/2.
    add_pair(code.codewords[0], 2 * d - 1, Amplitude::sqrt(make_rational(5, 16)));
    add_pair(code.codewords[0], 6 * d - 3, Amplitude::sqrt(make_rational(3, 16)));
    for (int i = 1; i < d; ++i) {
      const auto c = coeff_distance5(d, i);
      add_pair(code.codewords[i], 4 * d - 1 - 2 * i, c.a);
      add_pair(code.codewords[i], 4 * d - 3 + 2 * i, c.b);
      add_pair(code.codewords[i], 2 * i - 1, c.c);
      add_pair(code.codewords[i], 8 * d - 3 - 2 * i, c.d);
    }
  }
  return code;
}

CodeFamily build_xyz_code(int d, int t) {
  const CodeFamily z = build_z_code(d, t);
  const int scale = 2 * t + 1;
  CodeFamily code;
  code.spec = {d, t, ErrorModel::kXYZ, 1};
  code.name = family_name("xyz_code", d, t);
  code.spin = SpinSpace::from_spin(xyz_code_spin(d, t));
  for (const Codeword& w : z.codewords) {
    Codeword scaled{w.label, {}};
    for (const auto& [levels, amp] : w.terms) scaled.terms[{levels[0] * scale}] = amp;
    code.codewords.push_back(std::move(scaled));
  }
  return code;
}

CodeFamily build_multiqudit_code(int d, int t) {
  const CodeFamily z = build_z_code(d, t);
  const int n = 2 * t + 1;
  CodeFamily code;
  code.spec = {d, t, ErrorModel::kXYZ, n};
  code.name = family_name("multiqudit_code", d, t);
  code.spin = z.spin;
  for (const Codeword& w : z.codewords) {
    Codeword spread{w.label, {}};
    for (const auto& [levels, amp] : w.terms) {
      spread.terms[LevelTuple(n, levels[0])] = amp;
    }
    code.codewords.push_back(std::move(spread));
  }
  return code;
}

CodeFamily alt_qutrit_distance5() {
  CodeFamily code;
  code.spec = {3, 2, ErrorModel::kZOnly, 1};
  code.name = "alt_qutrit_distance5";
  code.spin = SpinSpace(19);
  code.codewords.resize(3);
  for (int k = 0; k < 3; ++k) code.codewords[k].label = k;
  auto amp = [](long long p, long long q) { return Amplitude::sqrt(make_rational(p, q)); };
  add_pair(code.codewords[0], 5, amp(3, 10));
  add_pair(code.codewords[0], 15, amp(1, 5));
  add_pair(code.codewords[1], 1, amp(1152, 9225));
  add_pair(code.codewords[1], 9, amp(133, 1025));
  add_pair(code.codewords[1], 11, amp(399, 2050));
  add_pair(code.codewords[1], 19, amp(468, 9225));
  add_pair(code.codewords[2], 3, amp(1081, 7700));
  add_pair(code.codewords[2], 7, amp(252, 1650));
  add_pair(code.codewords[2], 13, amp(441, 3300));
  add_pair(code.codewords[2], 17, amp(282, 3850));
  return code;
}

CodeFamily build_code(const CodeSpec& spec) {
  spec.validate();
  if (spec.n_qudits > 1) return build_multiqudit_code(spec.d, spec.t);
  return spec.error_model == ErrorModel::kXYZ ? build_xyz_code(spec.d, spec.t)
                                              : build_z_code(spec.d, spec.t);
}

CodeFamily swap_inner_pairs(const CodeFamily& code, int label) {
  if (code.n_qudits() != 1) throw std::invalid_argument("swap_inner_pairs needs a single spin");
  CodeFamily out = code;
  Codeword& w = out.codewords.at(label);
  std::vector<HalfInt> positive;
  for (HalfInt m : w.levels(0)) {
    if (m.twice() > 0) positive.push_back(m);
  }
  if (positive.size() < 2) throw std::invalid_argument("codeword has fewer than two pairs");
  std::sort(positive.begin(), positive.end());
  const HalfInt a = positive[0];
  const HalfInt b = positive[1];
  for (int sign : {-1, 1}) {
    std::swap(w.terms.at({a * sign}), w.terms.at({b * sign}));
  }
  out.name = code.name + "+swap";
  return out;
}

}  // namespace spinqec
