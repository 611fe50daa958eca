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

#include "spinqec/kl_verifier.h"

#include <algorithm>
#include <map>
#include <utility>

#include <Eigen/Dense>

#include "spinqec/spin_operator.h"

namespace spinqec {
namespace {

using QuadMatrix = Eigen::Matrix<Quad, Eigen::Dynamic, Eigen::Dynamic>;
using QuadVector = Eigen::Matrix<Quad, Eigen::Dynamic, 1>;

constexpr size_t kMaxRecordedViolations = 32;

// Every operator in the alphabet is real except S_Y = -i * (S_+ - S_-)/2, so
// a word applied to a real vector is i^phase times a real vector.
struct PhasedVector {
  int phase = 0;  // power of i, mod 4
  QuadVector v;
};

struct PhasedSparse {
  int phase = 0;
  std::vector<std::pair<LevelTuple, Quad>> entries;  // sorted by tuple
};

int op_phase(SpinOp op) { return op == SpinOp::kY ? 3 : 0; }

class DenseAlphabet {
 public:
  explicit DenseAlphabet(const SpinSpace& space)
      : plus_(real_splus<Quad>(space)), z_(real_sz<Quad>(space)) {
    minus_ = plus_.transpose();
    x_ = (plus_ + minus_) / Quad(2);
    y_real_ = (plus_ - minus_) / Quad(2);
  }

  QuadVector apply(SpinOp op, const QuadVector& v) const {
    switch (op) {
      case SpinOp::kI: return v;
      case SpinOp::kZ: return z_ * v;
      case SpinOp::kPlus: return plus_ * v;
      case SpinOp::kMinus: return minus_ * v;
      case SpinOp::kX: return x_ * v;
      case SpinOp::kY: return y_real_ * v;
    }
    return v;
  }

 private:
  QuadMatrix plus_, minus_, z_, x_, y_real_;
};

class SparseAlphabet {
 public:
  explicit SparseAlphabet(const SpinSpace& space) : space_(space) {}

  std::map<LevelTuple, Quad> apply(SpinOp op, int qudit,
                                   const std::map<LevelTuple, Quad>& v) {
    std::map<LevelTuple, Quad> out;
    auto shift = [&](const LevelTuple& t, const Quad& value, int dir, const Quad& scale) {
      const HalfInt m = t[qudit];
      const HalfInt target = m + HalfInt::from_twice(2 * dir);
      if (!space_.contains(target)) return;
      LevelTuple moved = t;
      moved[qudit] = target;
      out[moved] += scale * value * ladder(dir > 0 ? m : target);
    };
    for (const auto& [t, value] : v) {
      switch (op) {
        case SpinOp::kI: out[t] += value; break;
        case SpinOp::kZ: out[t] += value * Quad(t[qudit].twice()) / Quad(2); break;
        case SpinOp::kPlus: shift(t, value, +1, Quad(1)); break;
        case SpinOp::kMinus: shift(t, value, -1, Quad(1)); break;
        case SpinOp::kX:
          shift(t, value, +1, Quad(0.5));
          shift(t, value, -1, Quad(0.5));
          break;
        case SpinOp::kY:
          shift(t, value, +1, Quad(0.5));
          shift(t, value, -1, Quad(-0.5));
          break;
      }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

 private:
  // <m+1|S_+|m>
  const Quad& ladder(HalfInt m) {
    auto it = cache_.find(m.twice());
    if (it == cache_.end()) {
      it = cache_.emplace(m.twice(), raising_element(space_, m).to_quad()).first;
    }
    return it->second;
  }

  SpinSpace space_;
  std::map<int, Quad> cache_;
};

Quad sparse_dot(const PhasedSparse& a, const PhasedSparse& b) {
  Quad sum = 0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

void record(KLReport& report, KLViolation v) {
  if (report.violations.size() < kMaxRecordedViolations) {
    report.violations.push_back(std::move(v));
  }
}

std::string quad_str(const Quad& q) { return q.str(20); }

void fill_moments(KLReport& report, const CodeFamily& code, int max_order) {
  report.moments.clear();
  for (const Codeword& w : code.codewords) {
    std::vector<Rational> row;
    for (int n = 0; n <= max_order; ++n) row.push_back(moment_exact(w, n));
    report.moments.push_back(std::move(row));
  }
}

}  // namespace

std::string to_string(SpinOp op) {
  switch (op) {
    case SpinOp::kI: return "I";
    case SpinOp::kZ: return "SZ";
    case SpinOp::kPlus: return "S+";
    case SpinOp::kMinus: return "S-";
    case SpinOp::kX: return "SX";
    case SpinOp::kY: return "SY";
  }
  return "?";
}

std::string to_string(const ErrorWord& word) {
  if (word.empty()) return "I";
  std::string out;
  for (const ErrorFactor& f : word) {
    if (!out.empty()) out += " ";
    out += to_string(f.op) + "[" + std::to_string(f.qudit) + "]";
  }
  return out;
}

ErrorSet ErrorSet::all_words(int max_length, const std::vector<SpinOp>& ops, int n_qudits) {
  ErrorSet set;
  set.words.push_back({});
  std::vector<ErrorWord> frontier = {{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<ErrorWord> next;
    for (const ErrorWord& w : frontier) {
      for (int q = 0; q < n_qudits; ++q) {
        for (SpinOp op : ops) {
          if (op == SpinOp::kI) continue;
          ErrorWord longer = w;
          longer.push_back({q, op});
          next.push_back(longer);
        }
      }
    }
    set.words.insert(set.words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return set;
}

Rational moment_exact(const Codeword& codeword, int n, int qudit) {
  Rational sum = 0;
  for (const auto& [levels, amp] : codeword.terms) {
    sum += amp.square() * power(levels.at(qudit), n);
  }
  return sum;
}

KLReport verify_z_kl(const CodeFamily& code, int t) {
  KLReport report;
  report.code_name = code.name;
  report.exact = true;
  report.tolerance = 0;
  const int max_order = 2 * t;
  fill_moments(report, code, max_order);

  if (!code.supports_disjoint()) {
    // Off-diagonal S_Z^n terms no longer vanish structurally; evaluate them.
    for (size_t i = 0; i < code.codewords.size(); ++i) {
      for (size_t j = 0; j < code.codewords.size(); ++j) {
        if (i == j) continue;
        for (int n = 0; n <= max_order; ++n) {
          double overlap = 0;
          for (const auto& [levels, amp] : code.codewords[i].terms) {
            auto it = code.codewords[j].terms.find(levels);
            if (it == code.codewords[j].terms.end()) continue;
            overlap += (amp * it->second).to_double() * to_double(power(levels[0], n));
          }
          report.max_off_diagonal = std::max(report.max_off_diagonal, std::abs(overlap));
        }
      }
    }
    record(report, {"support", 0, 0, -1, "", "", "overlapping supports", "disjoint"});
  }

  for (size_t k = 0; k < code.codewords.size(); ++k) {
    if (report.moments[k][0] != 1) {
      record(report, {"normalization", static_cast<int>(k), static_cast<int>(k), 0, "", "",
                      to_string(report.moments[k][0]), "1"});
      report.max_diagonal_mismatch = std::max(
          report.max_diagonal_mismatch, std::abs(to_double(report.moments[k][0] - 1)));
    }
    for (int qudit = 0; qudit < code.n_qudits(); ++qudit) {
      for (int n = 1; n <= max_order; ++n) {
        const Rational mine = qudit == 0 ? report.moments[k][n]
                                         : moment_exact(code.codewords[k], n, qudit);
        const Rational& ref = report.moments[0][n];
        if (mine != ref) {
          record(report, {"moment", static_cast<int>(k), 0, n, "", "", to_string(mine),
                          to_string(ref)});
          report.max_diagonal_mismatch =
              std::max(report.max_diagonal_mismatch, std::abs(to_double(mine - ref)));
        }
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

KLReport verify_full_kl(const CodeFamily& code, const ErrorSet& error_set, double tol,
                        int dimension_cap) {
  KLReport report;
  report.code_name = code.name;
  report.exact = false;
  report.tolerance = tol;
  fill_moments(report, code, 2 * code.spec.t);

  const size_t n_words = error_set.words.size();
  const size_t n_code = code.codewords.size();
  // images[w][k] = E_w |k_L>
  std::vector<std::vector<PhasedSparse>> sparse_images;
  std::vector<std::vector<PhasedVector>> dense_images;

  if (code.n_qudits() == 1) {
    if (code.spin.dimension() > dimension_cap) {
      throw DimensionOverflow("dense representation of dimension " +
                              std::to_string(code.spin.dimension()) + " exceeds cap " +
                              std::to_string(dimension_cap));
    }
    DenseAlphabet alphabet(code.spin);
    std::vector<QuadVector> base;
    for (const Codeword& w : code.codewords) {
      QuadVector v = QuadVector::Zero(code.spin.dimension());
      for (const auto& [levels, amp] : w.terms) v(code.spin.index_of(levels[0])) = amp.to_quad();
      base.push_back(std::move(v));
    }
    for (const ErrorWord& word : error_set.words) {
      std::vector<PhasedVector> row;
      for (const QuadVector& v : base) {
        PhasedVector pv{0, v};
        for (auto f = word.rbegin(); f != word.rend(); ++f) {
          if (f->qudit != 0) throw std::invalid_argument("error word addresses a missing qudit");
          pv.v = alphabet.apply(f->op, pv.v);
          pv.phase = (pv.phase + op_phase(f->op)) % 4;
        }
        row.push_back(std::move(pv));
      }
      dense_images.push_back(std::move(row));
    }
  } else {
    SparseAlphabet alphabet(code.spin);
    for (const ErrorWord& word : error_set.words) {
      std::vector<PhasedSparse> row;
      for (const Codeword& w : code.codewords) {
        std::map<LevelTuple, Quad> v;
        for (const auto& [levels, amp] : w.terms) v[levels] = amp.to_quad();
        int phase = 0;
        for (auto f = word.rbegin(); f != word.rend(); ++f) {
          if (f->qudit < 0 || f->qudit >= code.n_qudits()) {
            throw std::invalid_argument("error word addresses a missing qudit");
          }
          v = alphabet.apply(f->op, f->qudit, v);
          phase = (phase + op_phase(f->op)) % 4;
        }
        row.push_back({phase, {v.begin(), v.end()}});
      }
      sparse_images.push_back(std::move(row));
    }
  }

  auto inner = [&](size_t a, size_t i, size_t b, size_t j) -> Quad {
    if (!dense_images.empty()) return dense_images[a][i].v.dot(dense_images[b][j].v);
    return sparse_dot(sparse_images[a][i], sparse_images[b][j]);
  };

  // <E_a i|E_b j> = i^(phase_b - phase_a) * (real dot). The pair (b, a) is the
  // complex conjugate of (a, b), so a <= b suffices.
  for (size_t a = 0; a < n_words; ++a) {
    for (size_t b = a; b < n_words; ++b) {
      ++report.words_checked;
      std::vector<Quad> diag(n_code);
      for (size_t i = 0; i < n_code; ++i) {
        for (size_t j = 0; j < n_code; ++j) {
          const Quad value = inner(a, i, b, j);
          if (i == j) {
            diag[i] = value;
            continue;
          }
          const double residual = abs(value).convert_to<double>();
          report.max_off_diagonal = std::max(report.max_off_diagonal, residual);
          if (residual > tol) {
            record(report, {"off_diagonal", static_cast<int>(i), static_cast<int>(j), -1,
                            to_string(error_set.words[a]), to_string(error_set.words[b]),
                            quad_str(value), "0"});
          }
        }
      }
      for (size_t i = 1; i < n_code; ++i) {
        const Quad gap = diag[i] - diag[0];
        const double residual = abs(gap).convert_to<double>();
        report.max_diagonal_mismatch = std::max(report.max_diagonal_mismatch, residual);
        if (residual > tol) {
          record(report, {"diagonal", static_cast<int>(i), 0, -1, to_string(error_set.words[a]),
                          to_string(error_set.words[b]), quad_str(diag[i]), quad_str(diag[0])});
        }
      }
    }
  }
  report.pass = report.max_off_diagonal <= tol && report.max_diagonal_mismatch <= tol;
  return report;
}

B6Report verify_b6_identity(const CodeFamily& code, double tol) {
  if (code.n_qudits() != 1) throw std::invalid_argument("B6 check needs a single-spin code");
  const QuadMatrix plus = real_splus<Quad>(code.spin);
  const QuadMatrix minus = plus.transpose();
  const Quad casimir = to_quad(code.spin.casimir());
  B6Report report;
  for (const Codeword& w : code.codewords) {
    QuadVector v = QuadVector::Zero(code.spin.dimension());
    for (const auto& [levels, amp] : w.terms) v(code.spin.index_of(levels[0])) = amp.to_quad();
    const QuadVector image = plus * (minus * v) + minus * (plus * v);
    const Quad lhs = v.dot(image);
    const Quad rhs = Quad(2) * casimir - Quad(2) * to_quad(moment_exact(w, 2));
    const double residual = abs(lhs - rhs).convert_to<double>();
    report.entries.push_back(
        {w.label, lhs.convert_to<double>(), rhs.convert_to<double>(), residual});
    report.max_residual = std::max(report.max_residual, residual);
  }
  report.pass = report.max_residual <= tol;
  return report;
}

double b6_residual(const SpinSpace& space, const std::vector<std::complex<double>>& state) {
  if (static_cast<int>(state.size()) != space.dimension()) {
    throw std::invalid_argument("state dimension does not match spin space");
  }
  const QuadMatrix plus = real_splus<Quad>(space);
  const QuadMatrix minus = plus.transpose();
  const QuadMatrix sz = real_sz<Quad>(space);
  const QuadMatrix anti = plus * minus + minus * plus;
  const QuadMatrix sz2 = sz * sz;
  QuadVector re(space.dimension()), im(space.dimension());
  for (int k = 0; k < space.dimension(); ++k) {
    re(k) = state[k].real();
    im(k) = state[k].imag();
  }
  // Both operators are real symmetric, so <psi|O|psi> splits into re and im parts.
  const Quad norm = re.dot(re) + im.dot(im);
  const Quad lhs = re.dot(anti * re) + im.dot(anti * im);
  const Quad moment = re.dot(sz2 * re) + im.dot(sz2 * im);
  const Quad rhs = Quad(2) * to_quad(space.casimir()) * norm - Quad(2) * moment;
  return abs(lhs - rhs).convert_to<double>();
}

nlohmann::json report_to_json(const KLReport& report) {
  nlohmann::json moments = nlohmann::json::array();
  for (const auto& row : report.moments) {
    nlohmann::json r = nlohmann::json::array();
    for (const Rational& q : row) r.push_back(to_string(q));
    moments.push_back(r);
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const KLViolation& v : report.violations) {
    nlohmann::json jv = {{"condition", v.condition}, {"i", v.i}, {"j", v.j},
                         {"lhs", v.lhs}, {"rhs", v.rhs}};
    if (v.order >= 0) jv["order"] = v.order;
    if (!v.word_a.empty()) {
      jv["word_a"] = v.word_a;
      jv["word_b"] = v.word_b;
    }
    violations.push_back(jv);
  }
  return {{"code", report.code_name},
          {"mode", report.exact ? "exact" : "numeric"},
          {"moments", moments},
          {"max_off_diagonal", report.max_off_diagonal},
          {"max_diagonal_mismatch", report.max_diagonal_mismatch},
          {"tolerance", report.tolerance},
          {"word_pairs_checked", report.words_checked},
          {"verdict", report.pass ? "PASS" : "FAIL"},
          {"violations", violations}};
}

}  // namespace spinqec
