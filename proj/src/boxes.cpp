// Copyright 2026 The qlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlogic/boxes.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "qlogic/errors.hpp"

namespace qlogic {

namespace {

int outcome_index(int value) {
    if (value == 1) {
        return 0;
    }
    if (value == -1) {
        return 1;
    }
    throw InputError("outcome must be +1 or -1, got " + std::to_string(value));
}

int setting_index(int setting) {
    if (setting != 1 && setting != 2) {
        throw InputError("setting must be 1 or 2, got " + std::to_string(setting));
    }
    return setting - 1;
}

constexpr int kSign[2] = {+1, -1};

}  // namespace

const Rational& NoSignalingBox::prob(int m, int n, int r, int s) const {
    return p[setting_index(m)][setting_index(n)][outcome_index(r)][outcome_index(s)];
}

Rational& NoSignalingBox::prob(int m, int n, int r, int s) {
    return p[setting_index(m)][setting_index(n)][outcome_index(r)][outcome_index(s)];
}

void validate_box(const NoSignalingBox& box) {
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            Rational sum(0);
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    const Rational& v = box.p[m][n][r][s];
                    if (v < 0) {
                        throw MalformedBoxError("p_" + std::to_string(m + 1) +
                                                std::to_string(n + 1) + " has negative entry " +
                                                to_string(v));
                    }
                    sum += v;
                }
            }
            if (sum != 1) {
                throw MalformedBoxError("p_" + std::to_string(m + 1) + std::to_string(n + 1) +
                                        " sums to " + to_string(sum) + ", expected 1");
            }
        }
    }
}

NoSignalingReport no_signaling_check(const NoSignalingBox& box) {
    validate_box(box);
    NoSignalingReport report;
    // Alice's marginal must not depend on Bob's setting.
    for (int m = 1; m <= 2; ++m) {
        for (int r : kSign) {
            Rational lhs = box.prob(m, 1, r, +1) + box.prob(m, 1, r, -1);
            Rational rhs = box.prob(m, 2, r, +1) + box.prob(m, 2, r, -1);
            if (lhs != rhs) {
                report.violations.push_back(
                    "alice marginal: p_" + std::to_string(m) + "1(" + (r > 0 ? "+" : "-") +
                    ",+) + p_" + std::to_string(m) + "1(" + (r > 0 ? "+" : "-") + ",-) = " +
                    to_string(lhs) + " but setting 2 gives " + to_string(rhs));
            }
        }
    }
    // Bob's marginal must not depend on Alice's setting.
    for (int n = 1; n <= 2; ++n) {
        for (int s : kSign) {
            Rational lhs = box.prob(1, n, +1, s) + box.prob(1, n, -1, s);
            Rational rhs = box.prob(2, n, +1, s) + box.prob(2, n, -1, s);
            if (lhs != rhs) {
                report.violations.push_back(
                    "bob marginal: p_1" + std::to_string(n) + "(+," + (s > 0 ? "+" : "-") +
                    ") + p_1" + std::to_string(n) + "(-," + (s > 0 ? "+" : "-") + ") = " +
                    to_string(lhs) + " but setting 2 gives " + to_string(rhs));
            }
        }
    }
    report.ok = report.violations.empty();
    return report;
}

std::array<std::array<Rational, 2>, 2> correlators(const NoSignalingBox& box) {
    std::array<std::array<Rational, 2>, 2> c;
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            Rational v(0);
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    v += Rational(kSign[r] * kSign[s]) * box.p[m][n][r][s];
                }
            }
            c[m][n] = v;
        }
    }
    return c;
}

Rational chsh(const NoSignalingBox& box) {
    auto c = correlators(box);
    Rational v = c[0][0] + c[0][1] + c[1][0] - c[1][1];
    return v < 0 ? -v : v;
}

Rational chsh_max_over_sign_placements(const NoSignalingBox& box) {
    auto c = correlators(box);
    Rational best(0);
    for (int neg = 0; neg < 4; ++neg) {
        Rational v(0);
        int i = 0;
        for (int m = 0; m < 2; ++m) {
            for (int n = 0; n < 2; ++n, ++i) {
                v += (i == neg ? -c[m][n] : c[m][n]);
            }
        }
        if (v < 0) {
            v = -v;
        }
        best = std::max(best, v);
    }
    return best;
}

NoSignalingBox deterministic_box(int a1, int a2, int b1, int b2) {
    int a[2] = {outcome_index(a1), outcome_index(a2)};
    int b[2] = {outcome_index(b1), outcome_index(b2)};
    NoSignalingBox box;
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    box.p[m][n][r][s] = Rational(r == a[m] && s == b[n] ? 1 : 0);
                }
            }
        }
    }
    return box;
}

Rational classical_chsh_max() {
    Rational best(0);
    for (int a1 : kSign) {
        for (int a2 : kSign) {
            for (int b1 : kSign) {
                for (int b2 : kSign) {
                    best = std::max(best, chsh(deterministic_box(a1, a2, b1, b2)));
                }
            }
        }
    }
    return best;
}

double quantum_chsh(double alpha1, double alpha2, double beta1, double beta2) {
    auto c = [](double a, double b) { return -std::cos(a - b); };
    return std::abs(c(alpha1, beta1) + c(alpha1, beta2) + c(alpha2, beta1) - c(alpha2, beta2));
}

NoSignalingBox uniform_box() {
    NoSignalingBox box;
    Rational q = make_rational(1, 4);
    for (auto& bn : box.p) {
        for (auto& brs : bn) {
            for (auto& bs : brs) {
                bs.fill(q);
            }
        }
    }
    return box;
}

NoSignalingBox pr_box() {
    NoSignalingBox box;
    Rational h = make_rational(1, 2);
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            bool correlated = (m == 1 && n == 1);  // the (a2, b2) pair
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    bool same = (r == s);
                    box.p[m][n][r][s] = (same == correlated) ? h : Rational(0);
                }
            }
        }
    }
    return box;
}

namespace {

NoSignalingBox swap_alice_settings(const NoSignalingBox& box) {
    NoSignalingBox out = box;
    std::swap(out.p[0], out.p[1]);
    return out;
}

NoSignalingBox swap_bob_settings(const NoSignalingBox& box) {
    NoSignalingBox out = box;
    std::swap(out.p[0][0], out.p[0][1]);
    std::swap(out.p[1][0], out.p[1][1]);
    return out;
}

NoSignalingBox flip_alice_outcomes(const NoSignalingBox& box) {
    NoSignalingBox out;
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    out.p[m][n][r][s] = box.p[m][n][1 - r][s];
                }
            }
        }
    }
    return out;
}

NoSignalingBox flip_bob_outcomes(const NoSignalingBox& box) {
    NoSignalingBox out;
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    out.p[m][n][r][s] = box.p[m][n][r][1 - s];
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<NoSignalingBox> pr_boxes() {
    // Breadth-first closure of the Table-1 box under the symmetry moves.
    std::vector<NoSignalingBox> out{pr_box()};
    for (size_t i = 0; i < out.size(); ++i) {
        NoSignalingBox cur = out[i];
        for (auto* move : {&swap_alice_settings, &swap_bob_settings, &flip_alice_outcomes,
                           &flip_bob_outcomes}) {
            NoSignalingBox next = (*move)(cur);
            if (std::find(out.begin(), out.end(), next) == out.end()) {
                out.push_back(std::move(next));
            }
        }
    }
    if (out.size() != 8) {
        throw InvariantBreach("expected 8 extremal boxes, closure found " +
                              std::to_string(out.size()));
    }
    return out;
}

NoSignalingBox mix(const NoSignalingBox& a, const NoSignalingBox& b, const Rational& lambda) {
    if (lambda < 0 || lambda > 1) {
        throw InputError("mixing weight " + to_string(lambda) + " outside [0,1]");
    }
    NoSignalingBox out;
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    out.p[m][n][r][s] =
                        lambda * a.p[m][n][r][s] + (Rational(1) - lambda) * b.p[m][n][r][s];
                }
            }
        }
    }
    return out;
}

const std::array<PentagonEvent, 5> kPentagonEvents = {{
    {1, +1, 1, -1},  // e1
    {1, -1, 2, +1},  // e2
    {2, -1, 2, -1},  // e3
    {2, +1, 1, -1},  // e4
    {1, -1, 1, +1},  // e5
}};

PentagonEmbedding box_to_pentagon(const NoSignalingBox& box) {
    validate_box(box);
    PentagonEmbedding emb;
    emb.sum = 0;
    for (size_t k = 0; k < 5; ++k) {
        const PentagonEvent& e = kPentagonEvents[k];
        emb.probs[k] = box.prob(e.alice_setting, e.bob_setting, e.alice_value, e.bob_value);
        emb.sum += emb.probs[k];
    }
    emb.certificate_ok = true;
    for (size_t k = 0; k < 5; ++k) {
        const PentagonEvent& a = kPentagonEvents[k];
        const PentagonEvent& b = kPentagonEvents[(k + 1) % 5];
        PentagonEmbedding::PairWitness w{static_cast<int>(k), static_cast<int>((k + 1) % 5), '?',
                                         0};
        if (a.alice_setting == b.alice_setting && a.alice_value != b.alice_value) {
            w.party = 'a';
            w.setting = a.alice_setting;
        } else if (a.bob_setting == b.bob_setting && a.bob_value != b.bob_value) {
            w.party = 'b';
            w.setting = a.bob_setting;
        } else {
            emb.certificate_ok = false;
        }
        emb.certificate.push_back(w);
    }
    return emb;
}

namespace {

const char* kSettingKeys[2][2] = {{"11", "12"}, {"21", "22"}};
const char* kOutcomeKeys[2][2] = {{"++", "+-"}, {"-+", "--"}};

Rational cell_from_json(const nlohmann::json& v) {
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Rational(v.get<long long>());
    }
    throw MalformedBoxError("box cells must be \"num/den\" strings or integers");
}

}  // namespace

NoSignalingBox parse_box(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedBoxError("box file: " + std::string(e.what()));
    }
    if (!doc.is_object() || doc.size() != 1 || !doc.contains("p") || !doc["p"].is_object()) {
        throw MalformedBoxError("box file: expected exactly one top-level object \"p\"");
    }
    const auto& p = doc["p"];
    if (p.size() != 4) {
        throw MalformedBoxError("box file: \"p\" must hold the four tables 11, 12, 21, 22");
    }
    NoSignalingBox box;
    try {
        for (int m = 0; m < 2; ++m) {
            for (int n = 0; n < 2; ++n) {
                if (!p.contains(kSettingKeys[m][n]) || !p[kSettingKeys[m][n]].is_object() ||
                    p[kSettingKeys[m][n]].size() != 4) {
                    throw MalformedBoxError(std::string("box file: table \"") +
                                            kSettingKeys[m][n] +
                                            "\" must map the four outcome pairs");
                }
                const auto& table = p[kSettingKeys[m][n]];
                for (int r = 0; r < 2; ++r) {
                    for (int s = 0; s < 2; ++s) {
                        if (!table.contains(kOutcomeKeys[r][s])) {
                            throw MalformedBoxError(std::string("box file: table \"") +
                                                    kSettingKeys[m][n] + "\" misses \"" +
                                                    kOutcomeKeys[r][s] + "\"");
                        }
                        box.p[m][n][r][s] = cell_from_json(table[kOutcomeKeys[r][s]]);
                    }
                }
            }
        }
    } catch (const ParseError& e) {
        throw MalformedBoxError(std::string("box file: ") + e.what());
    }
    validate_box(box);
    return box;
}

std::string serialize_box(const NoSignalingBox& box) {
    nlohmann::json p = nlohmann::json::object();
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            nlohmann::json table = nlohmann::json::object();
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    table[kOutcomeKeys[r][s]] = to_string(box.p[m][n][r][s]);
                }
            }
            p[kSettingKeys[m][n]] = std::move(table);
        }
    }
    nlohmann::json doc;
    doc["p"] = std::move(p);
    return doc.dump();
}

}  // namespace qlogic
