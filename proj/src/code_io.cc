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

#include "spinqec/code_io.h"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace spinqec {
namespace {

using nlohmann::json;

json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<long long>::max() &&
      v >= std::numeric_limits<long long>::min()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer or decimal string, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("code file: missing field '") + key + "'");
  }
  return j.at(key);
}

std::string ket(const LevelTuple& levels, int n_qudits) {
  static const std::string kNames = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  std::string out = "|" + levels[0].signed_str() + ">";
  if (n_qudits > 1) out += "_" + kNames.substr(0, n_qudits);
  return out;
}

}  // namespace

json code_to_json(const CodeFamily& code) {
  json words = json::array();
  for (const Codeword& w : code.codewords) {
    json terms = json::array();
    for (const auto& [levels, amp] : w.terms) {
      json lv = json::array();
      for (HalfInt m : levels) lv.push_back(m.twice());
      terms.push_back({{"levels", lv},
                       {"sign", amp.sign()},
                       {"p", big_to_json(numerator(amp.radicand()))},
                       {"q", big_to_json(denominator(amp.radicand()))}});
    }
    words.push_back({{"label", w.label}, {"terms", terms}});
  }
  return {{"name", code.name},
          {"spec",
           {{"d", code.spec.d},
            {"t", code.spec.t},
            {"model", to_string(code.spec.error_model)},
            {"n_qudits", code.spec.n_qudits}}},
          {"spin", code.spin.two_s()},
          {"codewords", words}};
}

CodeFamily code_from_json(const json& j) {
  CodeFamily code;
  try {
    code.name = j.value("name", std::string("custom"));
    const json& spec = field(j, "spec");
    code.spec.d = field(spec, "d").get<int>();
    code.spec.t = field(spec, "t").get<int>();
    code.spec.error_model = parse_error_model(field(spec, "model").get<std::string>());
    code.spec.n_qudits = spec.value("n_qudits", 1);
    code.spec.validate();
    code.spin = SpinSpace(field(j, "spin").get<int>());
    for (const json& jw : field(j, "codewords")) {
      Codeword w;
      w.label = field(jw, "label").get<int>();
      for (const json& jt : field(jw, "terms")) {
        LevelTuple levels;
        for (const json& m : field(jt, "levels")) {
          const HalfInt level = HalfInt::from_twice(m.get<int>());
          code.spin.index_of(level);  // range and parity check
          levels.push_back(level);
        }
        if (static_cast<int>(levels.size()) != code.spec.n_qudits) {
          throw std::invalid_argument("term has " + std::to_string(levels.size()) +
                                      " levels, expected n_qudits");
        }
        const BigInt q = big_from_json(field(jt, "q"));
        if (q <= 0) throw std::invalid_argument("non-positive denominator");
        Amplitude amp(field(jt, "sign").get<int>(), Rational(big_from_json(field(jt, "p")), q));
        if (!w.terms.emplace(std::move(levels), std::move(amp)).second) {
          throw std::invalid_argument("duplicate term in codeword " + std::to_string(w.label));
        }
      }
      code.codewords.push_back(std::move(w));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("code file: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("code file: ") + e.what());
  }
  if (static_cast<int>(code.codewords.size()) != code.spec.d) {
    throw std::invalid_argument("code file: expected d codewords");
  }
  return code;
}

std::string render_code(const CodeFamily& code) {
  std::ostringstream out;
  out << "# " << code.name << ", spin " << code.spin.spin().str() << " x "
      << code.n_qudits() << ", d=" << code.spec.d
      << ", distance " << code.spec.distance() << "\n";
  for (const Codeword& w : code.codewords) {
    out << "|" << w.label << "_L> =";
    std::map<LevelTuple, Amplitude, bool (*)(const LevelTuple&, const LevelTuple&)> ordered(
        [](const LevelTuple& a, const LevelTuple& b) {
          if (a[0].abs() != b[0].abs()) return a[0].abs() < b[0].abs();
          return a < b;
        });
    for (const auto& [levels, amp] : w.terms) ordered.emplace(levels, amp);
    bool first = true;
    for (auto it = ordered.begin(); it != ordered.end(); ++it) {
      const auto& [levels, amp] = *it;
      LevelTuple mirror;
      for (HalfInt m : levels) mirror.push_back(-m);
      const bool paired = levels[0].twice() < 0 && w.terms.count(mirror) &&
                          w.terms.at(mirror) == amp;
      if (levels[0].twice() > 0) {
        LevelTuple neg = mirror;
        if (w.terms.count(neg) && w.terms.at(neg) == amp) continue;  // printed with its pair
      }
      Amplitude shown = amp;
      std::string sep = first ? " " : " + ";
      if (!first && amp.sign() < 0) {
        sep = " - ";
        shown = -amp;
      }
      out << sep << shown.str();
      if (paired) {
        out << " (" << ket(levels, code.n_qudits()) << " + " << ket(mirror, code.n_qudits()) << ")";
      } else {
        out << " " << ket(levels, code.n_qudits());
      }
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace spinqec
