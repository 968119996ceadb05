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

#ifndef QLOGIC_LOGIC_HPP
#define QLOGIC_LOGIC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qlogic/rational.hpp"

namespace qlogic {

/// A finite orthomodular logic presented as a Greechie diagram: a list of
/// atoms plus maximal blocks (contexts). Two distinct blocks may share at
/// most one atom; each block with k atoms behaves like the Boolean algebra
/// 2^k. Immutable after construction.
struct GreechieLogic {
    std::vector<std::string> atoms;        // declaration order is canonical
    std::vector<std::vector<int>> blocks;  // atom indices, file order

    int atom_index(std::string_view name) const;  // -1 when absent
    std::string block_text(int b) const;          // "{e1,f1,e2}" for messages

    bool operator==(const GreechieLogic&) const = default;
};

/// Validates and builds a logic from atom names and blocks of atom names.
/// Enforces: every block has >= 2 distinct known atoms, no duplicate blocks,
/// two blocks share <= 1 atom, every atom occurs in some block.
GreechieLogic make_logic(std::vector<std::string> atoms,
                         const std::vector<std::vector<std::string>>& blocks);

/// Parses the logic file format, one JSON document:
///   {"atoms": ["e1", ...], "blocks": [["e1","f1","e2"], ...]}
/// Syntax problems raise ParseError with a 1-based line number; structural
/// problems raise the specific validation errors of make_logic.
GreechieLogic parse_logic(std::string_view text);

/// Canonical single-line JSON document; parse_logic(serialize_logic(L)) == L.
std::string serialize_logic(const GreechieLogic& logic);

/// The ten-atom, five-block pentagon logic: atoms e1..e5, f1..f5 and blocks
/// {e_k, f_k, e_{k+1 mod 5}}.
GreechieLogic pentagon_logic();

/// A state: one exact probability per atom, summing to 1 on every block.
struct LogicState {
    std::vector<Rational> assignment;  // indexed like GreechieLogic::atoms

    bool operator==(const LogicState&) const = default;
};

/// The state with value 1/2 on each e_k and 0 on each f_k. Throws
/// WrongLogicError unless `logic` is exactly pentagon_logic().
LogicState pentagon_state(const GreechieLogic& logic);

struct StateViolation {
    int block = -1;    // violated block index, or -1 for a value out of range
    int atom = -1;     // offending atom for out-of-range values
    Rational sum;      // the block sum that should have been 1
    std::string text;  // human-readable description
};

struct StateReport {
    bool ok = false;
    std::vector<StateViolation> violations;
};

/// ok iff every value lies in [0,1] and every block sums to exactly 1.
/// Lists every violated block with its sum. The assignment must cover all
/// atoms (InputError otherwise).
StateReport validate_state(const GreechieLogic& logic, const LogicState& state);

/// Vertices are atoms; an edge joins two atoms that share a block.
struct OrthogonalityGraph {
    int vertices = 0;
    std::vector<std::vector<bool>> adj;

    bool adjacent(int a, int b) const { return adj[a][b]; }
    int edge_count() const;
    int degree(int v) const;
};

OrthogonalityGraph orthogonality_graph(const GreechieLogic& logic);

/// Probability of an event, i.e. a set of atoms lying in one common block
/// (the empty set is the zero event). Throws InvalidEventError when the
/// atoms do not share a block.
Rational event_probability(const GreechieLogic& logic, const LogicState& state,
                           const std::vector<int>& event_atoms);

}  // namespace qlogic

#endif
