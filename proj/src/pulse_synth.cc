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

#include "spinqec/pulse_synth.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "spinqec/kl_verifier.h"

namespace spinqec {
namespace {

constexpr double kZero = 1e-13;
constexpr double kCheckTol = 1e-12;

// A real number carried both in double and, while possible, exactly.
struct Tracked {
  double v = 0;
  std::optional<Amplitude> exact;

  static Tracked of(const Amplitude& a) { return {a.to_double(), a}; }
  bool is_zero() const { return exact ? exact->is_zero() : std::abs(v) < kZero; }
  int sign() const { return exact ? exact->sign() : (v > 0) - (v < 0); }
};

bool perfect_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

// a + b when sqrt(ra/rb) is rational; nullopt otherwise.
std::optional<Amplitude> exact_sum(const Amplitude& a, const Amplitude& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Rational ratio = a.radicand() / b.radicand();
  BigInt num_root, den_root;
  if (!perfect_square(numerator(ratio), num_root) ||
      !perfect_square(denominator(ratio), den_root)) {
    return std::nullopt;
  }
  const Rational k = Rational(num_root, den_root) * a.sign() + b.sign();
  const int sign = k > 0 ? 1 : (k < 0 ? -1 : 0);
  return Amplitude(sign, k * k * b.radicand());
}

Tracked product(const Tracked& x, const Tracked& y) {
  Tracked out{x.v * y.v, std::nullopt};
  if (x.exact && y.exact) out.exact = *x.exact * *y.exact;
  return out;
}

Tracked sum(const Tracked& x, const Tracked& y) {
  Tracked out{x.v + y.v, std::nullopt};
  if (x.exact && y.exact) out.exact = exact_sum(*x.exact, *y.exact);
  if (out.exact) out.v = out.exact->to_double();
  return out;
}

PulseStep make_step(HalfInt m1, HalfInt m2, const Tracked& c, const Tracked& s) {
  PulseStep step;
  step.m1 = m1;
  step.m2 = m2;
  step.cos_theta = c.v;
  step.sin_theta = s.v;
  if (c.exact && s.exact) {
    step.exact_cos = c.exact;
    step.exact_sin = s.exact;
  }
  return step;
}

PulseStep make_step(HalfInt m1, HalfInt m2, const Amplitude& c, const Amplitude& s) {
  return make_step(m1, m2, Tracked::of(c), Tracked::of(s));
}

void apply_tracked(const PulseStep& step, const SpinSpace& space, std::vector<Tracked>& v) {
  const int a = space.index_of(step.m1);
  const int b = space.index_of(step.m2);
  Tracked c{step.cos_theta, step.exact_cos};
  Tracked s{step.sin_theta, step.exact_sin};
  Tracked minus_s{-s.v, s.exact ? std::optional<Amplitude>(-*s.exact) : std::nullopt};
  const Tracked va = v[a];
  const Tracked vb = v[b];
  v[a] = sum(product(c, va), product(minus_s, vb));
  v[b] = sum(product(s, va), product(c, vb));
}

template <typename Derived>
void rotate_rows(const PulseStep& step, int a, int b, Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ra = m.row(a).eval();
  const auto rb = m.row(b).eval();
  m.row(a) = Scalar(step.cos_theta) * ra - Scalar(step.sin_theta) * rb;
  m.row(b) = Scalar(step.sin_theta) * ra + Scalar(step.cos_theta) * rb;
}

void check_single_spin(const CodeFamily& code) {
  if (code.n_qudits() != 1) {
    throw SynthesisError("pulse synthesis needs a single-spin code, got " + code.name);
  }
}

std::vector<HalfInt> sorted_support(const Codeword& w) {
  std::vector<HalfInt> levels;
  for (const auto& [tuple, amp] : w.terms) levels.push_back(tuple[0]);
  std::sort(levels.begin(), levels.end(), ByMagnitude());
  return levels;
}

using Poly = std::vector<Rational>;  // coefficients, lowest order first

Rational poly_inner(const Poly& p, const Poly& q, const std::vector<Rational>& moments) {
  Rational out = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    for (size_t j = 0; j < q.size(); ++j) out += p[i] * q[j] * moments.at(i + j);
  }
  return out;
}

Rational poly_eval(const Poly& p, HalfInt m) {
  Rational out = 0;
  for (size_t i = p.size(); i-- > 0;) out = out * m.to_rational() + p[i];
  return out;
}

// Monic polynomials orthogonal under the shared moment functional.
std::vector<Poly> orthogonal_polys(const std::vector<Rational>& moments, int t) {
  std::vector<Poly> polys;
  for (int n = 0; n <= t; ++n) {
    Poly p(n + 1, Rational(0));
    p[n] = 1;
    Poly monomial = p;
    for (const Poly& q : polys) {
      const Rational coef = poly_inner(monomial, q, moments) / poly_inner(q, q, moments);
      for (size_t i = 0; i < q.size(); ++i) p[i] -= coef * q[i];
    }
    polys.push_back(std::move(p));
  }
  return polys;
}

}  // namespace

double PulseStep::theta() const { return std::atan2(sin_theta, cos_theta); }

PulseStep PulseStep::rotated(double delta) const {
  PulseStep out = *this;
  const double angle = theta() + delta;
  out.cos_theta = std::cos(angle);
  out.sin_theta = std::sin(angle);
  out.exact_cos.reset();
  out.exact_sin.reset();
  return out;
}

Eigen::MatrixXd PulseSequence::composed_unitary() const {
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(space.dimension(), space.dimension());
  for (const PulseStep& step : steps) {
    rotate_rows(step, space.index_of(step.m1), space.index_of(step.m2), u);
  }
  return u;
}

bool PulseSequence::is_unitary(double tol) const {
  const Eigen::MatrixXd u = composed_unitary();
  const Eigen::MatrixXd gap =
      u.transpose() * u - Eigen::MatrixXd::Identity(space.dimension(), space.dimension());
  return gap.cwiseAbs().maxCoeff() <= tol;
}

std::vector<HalfInt> default_input_levels(const CodeFamily& code) {
  std::vector<HalfInt> levels;
  for (int k = 0; k < code.spec.d; ++k) levels.push_back(code.spin.level(k));
  return levels;
}

PulseSequence synthesize_encoder(const CodeFamily& code, std::vector<HalfInt> input_levels) {
  check_single_spin(code);
  const int d = static_cast<int>(code.codewords.size());
  if (input_levels.empty()) input_levels = default_input_levels(code);
  if (static_cast<int>(input_levels.size()) != d) {
    throw SynthesisError("need one input level per codeword");
  }
  if (std::set<HalfInt>(input_levels.begin(), input_levels.end()).size() != input_levels.size()) {
    throw SynthesisError("input levels must be distinct");
  }
  for (HalfInt m : input_levels) {
    if (!code.spin.contains(m)) throw SynthesisError("input level " + m.str() + " outside spin");
  }
  if (!code.supports_disjoint()) throw SynthesisError("codeword supports overlap");

  PulseSequence seq;
  seq.space = code.spin;
  std::vector<std::vector<HalfInt>> supports;
  for (const Codeword& w : code.codewords) supports.push_back(sorted_support(w));

  // Route each logical amplitude to the first level of its support. A swap
  // step sends whatever sat there to the vacated level with a sign flip.
  std::vector<HalfInt> pos = input_levels;
  std::vector<int> sign(d, 1);
  for (int k = 0; k < d; ++k) {
    const HalfInt seed = supports[k].front();
    if (pos[k] == seed) continue;
    seq.steps.push_back(make_step(pos[k], seed, Amplitude(), Amplitude::one()));
    for (int j = 0; j < d; ++j) {
      if (j != k && pos[j] == seed) {
        pos[j] = pos[k];
        sign[j] = -sign[j];
      }
    }
    pos[k] = seed;
  }

  std::set<HalfInt> occupied;
  for (const auto& s : supports) occupied.insert(s.begin(), s.end());

  // Spread each amplitude along its support, one level per step.
  for (int k = 0; k < d; ++k) {
    const auto& lv = supports[k];
    std::vector<Amplitude> w;
    for (HalfInt m : lv) w.push_back(code.amplitude(k, m));
    if (lv.size() == 1) {
      if (w[0].sign() == sign[k]) continue;
      HalfInt spare;
      bool found = false;
      for (int i = 0; i < code.spin.dimension() && !found; ++i) {
        if (!occupied.count(code.spin.level(i))) {
          spare = code.spin.level(i);
          found = true;
        }
      }
      if (!found) throw SynthesisError("no free level for a sign flip on codeword " +
                                       std::to_string(k));
      seq.steps.push_back(make_step(lv[0], spare, -Amplitude::one(), Amplitude()));
      continue;
    }
    Amplitude r(sign[k], Rational(1));
    for (size_t j = 0; j + 1 < lv.size(); ++j) {
      Amplitude next;
      if (j + 2 == lv.size()) {
        next = w.back();
      } else {
        Rational tail = 0;
        for (size_t i = j + 1; i < w.size(); ++i) tail += w[i].square();
        next = Amplitude::sqrt(tail);
      }
      seq.steps.push_back(make_step(lv[j], lv[j + 1], w[j] / r, next / r));
      r = next;
    }
  }

  const Eigen::MatrixXd u = seq.composed_unitary();
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXd want = Eigen::VectorXd::Zero(code.spin.dimension());
    for (const auto& [tuple, amp] : code.codewords[k].terms) {
      want(code.spin.index_of(tuple[0])) = amp.to_double();
    }
    const double err = (u.col(code.spin.index_of(input_levels[k])) - want).cwiseAbs().maxCoeff();
    if (err > kCheckTol) {
      throw SynthesisError("encoder check failed for codeword " + std::to_string(k));
    }
  }
  return seq;
}

PulseSequence synthesize_decoder(const CodeFamily& code) {
  check_single_spin(code);
  const int d = static_cast<int>(code.codewords.size());
  const int t = code.spec.t;
  if (!code.supports_disjoint()) throw SynthesisError("codeword supports overlap");
  for (const Codeword& w : code.codewords) {
    if (!w.is_mirror_symmetric()) {
      throw SynthesisError("codeword " + std::to_string(w.label) + " is not mirror symmetric");
    }
  }
  std::vector<Rational> moments;
  for (int n = 0; n <= 2 * t; ++n) {
    moments.push_back(moment_exact(code.codewords[0], n));
    for (const Codeword& w : code.codewords) {
      if (moment_exact(w, n) != moments.back()) {
        throw SynthesisError("codeword moments differ at order " + std::to_string(n));
      }
    }
  }
  const std::vector<Poly> polys = orthogonal_polys(moments, t);

  const SpinSpace& space = code.spin;
  const int dim = space.dimension();
  // Error basis, branch-major: vectors[n * d + k] = p_n(S_Z)|k_L> / |p_n|.
  std::vector<std::vector<Tracked>> vectors;
  for (int n = 0; n <= t; ++n) {
    const Rational norm = poly_inner(polys[n], polys[n], moments);
    if (norm <= 0) throw SynthesisError("codeword support too small for order " +
                                        std::to_string(n));
    for (int k = 0; k < d; ++k) {
      std::vector<Tracked> v(dim, Tracked{0, Amplitude()});
      for (const auto& [tuple, amp] : code.codewords[k].terms) {
        const Rational p = poly_eval(polys[n], tuple[0]);
        const int sign = (p > 0) - (p < 0);
        v[space.index_of(tuple[0])] = Tracked::of(Amplitude(sign * amp.sign(),
                                                            p * p * amp.square() / norm));
      }
      vectors.push_back(std::move(v));
    }
  }
  const std::vector<std::vector<Tracked>> initial = vectors;

  PulseSequence seq;
  seq.space = space;
  auto emit = [&](const PulseStep& step) {
    seq.steps.push_back(step);
    for (auto& v : vectors) apply_tracked(step, space, v);
  };

  // Even (n even) vectors collect on +m, odd ones on -m.
  const Amplitude half = Amplitude::sqrt(make_rational(1, 2));
  for (const Codeword& w : code.codewords) {
    for (HalfInt m : w.levels(0)) {
      if (m.twice() > 0) emit(make_step(-m, m, half, half));
    }
  }

  std::set<int> used;
  std::vector<std::pair<int, int>> landing(vectors.size());
  for (size_t j = 0; j < vectors.size(); ++j) {
    std::vector<HalfInt> live;
    for (int i = 0; i < dim; ++i) {
      if (!vectors[j][i].is_zero() && !used.count(i)) live.push_back(space.level(i));
    }
    if (live.empty()) throw SynthesisError("decoder lost an error component");
    std::sort(live.begin(), live.end(), ByMagnitude());
    HalfInt carrier = live.front();
    for (size_t i = 1; i < live.size(); ++i) {
      const Tracked& x = vectors[j][space.index_of(carrier)];
      const Tracked& y = vectors[j][space.index_of(live[i])];
      Tracked c, s;
      if (x.exact && y.exact) {
        const Rational r2 = x.exact->square() + y.exact->square();
        c = Tracked::of(Amplitude(y.exact->sign(), y.exact->square() / r2));
        s = Tracked::of(Amplitude(x.exact->sign(), x.exact->square() / r2));
      } else {
        const double r = std::hypot(x.v, y.v);
        c = {y.v / r, std::nullopt};
        s = {x.v / r, std::nullopt};
      }
      emit(make_step(carrier, live[i], c, s));
      carrier = live[i];
    }
    const int index = space.index_of(carrier);
    used.insert(index);
    landing[j] = {index, vectors[j][index].sign()};
  }

  seq.ancilla_step = seq.steps.size();
  for (int n = 0; n <= t; ++n) {
    DecodeBranch branch;
    branch.order = n;
    for (int k = 0; k < d; ++k) {
      const auto [index, sign] = landing[n * d + k];
      branch.targets.push_back(space.level(index));
      branch.signs.push_back(sign);
    }
    seq.branches.push_back(std::move(branch));
  }

  const Eigen::MatrixXd u = seq.composed_unitary();
  for (size_t j = 0; j < initial.size(); ++j) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = initial[j][i].v;
    Eigen::VectorXd want = Eigen::VectorXd::Zero(dim);
    want(landing[j].first) = landing[j].second;
    if ((u * v - want).cwiseAbs().maxCoeff() > kCheckTol) {
      throw SynthesisError("decoder check failed for error component " + std::to_string(j));
    }
  }
  return seq;
}

void apply_step(const PulseStep& step, const SpinSpace& space, Eigen::VectorXcd& state) {
  rotate_rows(step, space.index_of(step.m1), space.index_of(step.m2), state);
}

void apply_step(const PulseStep& step, const SpinSpace& space, Eigen::MatrixXcd& rho) {
  const int a = space.index_of(step.m1);
  const int b = space.index_of(step.m2);
  rotate_rows(step, a, b, rho);
  // rho G^T: the same mixing on columns.
  const Eigen::VectorXcd ca = rho.col(a);
  const Eigen::VectorXcd cb = rho.col(b);
  rho.col(a) = step.cos_theta * ca - step.sin_theta * cb;
  rho.col(b) = step.sin_theta * ca + step.cos_theta * cb;
}

Eigen::VectorXcd apply_sequence(const PulseSequence& seq, const Eigen::VectorXcd& state) {
  if (state.size() != seq.space.dimension()) {
    throw std::invalid_argument("state dimension does not match the pulse sequence");
  }
  Eigen::VectorXcd out = state;
  for (const PulseStep& step : seq.steps) apply_step(step, seq.space, out);
  return out;
}

Eigen::MatrixXcd apply_sequence(const PulseSequence& seq, const Eigen::MatrixXcd& rho) {
  if (rho.rows() != seq.space.dimension() || rho.cols() != seq.space.dimension()) {
    throw std::invalid_argument("density matrix dimension does not match the pulse sequence");
  }
  Eigen::MatrixXcd out = rho;
  for (const PulseStep& step : seq.steps) apply_step(step, seq.space, out);
  return out;
}

std::vector<Eigen::VectorXcd> project_branches(const PulseSequence& decoder,
                                               const Eigen::VectorXcd& decoded) {
  std::vector<Eigen::VectorXcd> out;
  for (const DecodeBranch& branch : decoder.branches) {
    Eigen::VectorXcd v(branch.targets.size());
    for (size_t k = 0; k < branch.targets.size(); ++k) {
      v(k) = static_cast<double>(branch.signs[k]) *
             decoded(decoder.space.index_of(branch.targets[k]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<double> branch_probabilities(const PulseSequence& decoder,
                                         const Eigen::MatrixXcd& decoded) {
  std::vector<double> out;
  for (const DecodeBranch& branch : decoder.branches) {
    double p = 0;
    for (HalfInt m : branch.targets) {
      const int i = decoder.space.index_of(m);
      p += decoded(i, i).real();
    }
    out.push_back(p);
  }
  return out;
}

Eigen::MatrixXcd recover_logical(const PulseSequence& decoder, const Eigen::MatrixXcd& decoded) {
  if (decoder.branches.empty()) throw std::invalid_argument("sequence has no decode branches");
  const size_t d = decoder.branches.front().targets.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (const DecodeBranch& branch : decoder.branches) {
    for (size_t k = 0; k < d; ++k) {
      const int a = decoder.space.index_of(branch.targets[k]);
      for (size_t l = 0; l < d; ++l) {
        const int b = decoder.space.index_of(branch.targets[l]);
        out(k, l) += static_cast<double>(branch.signs[k] * branch.signs[l]) * decoded(a, b);
      }
    }
  }
  return out;
}

nlohmann::json sequence_to_json(const PulseSequence& seq) {
  auto big_json = [](const BigInt& v) -> nlohmann::json {
    if (boost::multiprecision::msb(boost::multiprecision::abs(v) + 1) < 62) {
      return v.convert_to<long long>();
    }
    return v.str();
  };
  auto number = [&big_json](double v, const std::optional<Amplitude>& exact) -> nlohmann::json {
    if (!exact) return v;
    return {{"sign", exact->sign()},
            {"p", big_json(numerator(exact->radicand()))},
            {"q", big_json(denominator(exact->radicand()))}};
  };
  nlohmann::json steps = nlohmann::json::array();
  for (const PulseStep& s : seq.steps) {
    steps.push_back({{"m1", s.m1.twice()},
                     {"m2", s.m2.twice()},
                     {"cos", number(s.cos_theta, s.exact_cos)},
                     {"sin", number(s.sin_theta, s.exact_sin)},
                     {"theta", s.theta()}});
  }
  nlohmann::json out = {{"spin", seq.space.two_s()}, {"steps", steps}};
  if (seq.ancilla_step) {
    out["ancilla_step"] = *seq.ancilla_step;
    nlohmann::json branches = nlohmann::json::array();
    for (const DecodeBranch& b : seq.branches) {
      nlohmann::json targets = nlohmann::json::array();
      for (HalfInt m : b.targets) targets.push_back(m.twice());
      branches.push_back({{"order", b.order}, {"targets", targets}, {"signs", b.signs}});
    }
    out["branches"] = branches;
  }
  return out;
}

}  // namespace spinqec
