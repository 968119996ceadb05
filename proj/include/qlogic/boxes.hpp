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

#ifndef QLOGIC_BOXES_HPP
#define QLOGIC_BOXES_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/rational.hpp"

namespace qlogic {

/// Bipartite two-setting, two-outcome behaviour: one joint distribution
/// p[m][n] over outcome pairs (r, s) in {+1,-1}^2 for each setting pair.
/// Index 0 stands for outcome +1, index 1 for -1. All entries exact.
struct NoSignalingBox {
    // p[m][n][r][s]
    std::array<std::array<std::array<std::array<Rational, 2>, 2>, 2>, 2> p{};

    /// Access by signed outcome values (+1 / -1); settings are 1-based.
    const Rational& prob(int m, int n, int r, int s) const;
    Rational& prob(int m, int n, int r, int s);

    bool operator==(const NoSignalingBox&) const = default;
};

/// Each of the four tables must sum to exactly 1 with nonnegative entries;
/// throws MalformedBoxError otherwise.
void validate_box(const NoSignalingBox& box);

struct NoSignalingReport {
    bool ok = true;
    std::vector<std::string> violations;  // one line per violated identity
};

/// Checks the marginal identities
///   p_m1(r,+1) + p_m1(r,-1) = p_m2(r,+1) + p_m2(r,-1)   (Alice side)
///   p_1n(+1,s) + p_1n(-1,s) = p_2n(+1,s) + p_2n(-1,s)   (Bob side)
/// exactly, for all settings and outcomes.
NoSignalingReport no_signaling_check(const NoSignalingBox& box);

/// c[m][n] = sum_{r,s} r s p_mn(r,s), the correlation of the two outcomes.
std::array<std::array<Rational, 2>, 2> correlators(const NoSignalingBox& box);

/// | c11 + c12 + c21 - c22 |, the primary sign placement.
Rational chsh(const NoSignalingBox& box);

/// Symmetrized variant: the maximum of |...| over the four placements of the
/// minus sign. Used where a whole symmetry family of boxes is scored at once.
Rational chsh_max_over_sign_placements(const NoSignalingBox& box);

/// Local deterministic strategy a_m = r_m, b_n = s_n embedded as a product
/// box. Outcome arguments must be +1 or -1.
NoSignalingBox deterministic_box(int a1, int a2, int b1, int b2);

/// Max of chsh over all 16 deterministic local strategies; equals 2.
/// Computed by enumeration, not hard-coded.
Rational classical_chsh_max();

/// Singlet-statistics CHSH: correlators c_mn = -cos(alpha_m - beta_n).
double quantum_chsh(double alpha1, double alpha2, double beta1, double beta2);

NoSignalingBox uniform_box();  // every cell 1/4

/// The standard extremal box: outcomes anti-correlated except for the (2,2)
/// setting pair, all nonzero cells 1/2.
NoSignalingBox pr_box();

/// All eight extremal boxes: pr_box() plus its images under swapping Alice's
/// settings, swapping Bob's settings, and relabelling +1 with -1 on one
/// party's outcomes, deduplicated. pr_box() comes first; order deterministic.
std::vector<NoSignalingBox> pr_boxes();

/// lambda * a + (1 - lambda) * b, cellwise.
NoSignalingBox mix(const NoSignalingBox& a, const NoSignalingBox& b, const Rational& lambda);

/// The five pentagon events read off a box:
///   e1 = (a1=+1, b1=-1), e2 = (a1=-1, b2=+1), e3 = (a2=-1, b2=-1),
///   e4 = (a2=+1, b1=-1), e5 = (a1=-1, b1=+1).
/// Cyclically adjacent events involve different values of a shared
/// observable, hence are exclusive; the certificate records the witnessing
/// observable per adjacent pair.
struct PentagonEvent {
    int alice_setting, alice_value, bob_setting, bob_value;
};

extern const std::array<PentagonEvent, 5> kPentagonEvents;

struct PentagonEmbedding {
    std::array<Rational, 5> probs;
    Rational sum;

    struct PairWitness {
        int event_a, event_b;  // 0-based indices of the adjacent pair
        char party;            // 'a' or 'b'
        int setting;           // the shared observable's setting
    };
    std::vector<PairWitness> certificate;
    bool certificate_ok = false;
};

PentagonEmbedding box_to_pentagon(const NoSignalingBox& box);

/// Box file format, one JSON document with rationals as "num/den" strings:
///   {"p": {"11": {"++": "0", "+-": "1/2", "-+": "1/2", "--": "0"}, ...}}
NoSignalingBox parse_box(std::string_view text);
std::string serialize_box(const NoSignalingBox& box);

}  // namespace qlogic

#endif
