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

#include "qlogic/logic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "qlogic/errors.hpp"

namespace qlogic {

int GreechieLogic::atom_index(std::string_view name) const {
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i] == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

std::string GreechieLogic::block_text(int b) const {
    std::string out = "{";
    const auto& blk = blocks[static_cast<size_t>(b)];
    for (size_t i = 0; i < blk.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += atoms[static_cast<size_t>(blk[i])];
    }
    return out + "}";
}

GreechieLogic make_logic(std::vector<std::string> atoms,
                         const std::vector<std::vector<std::string>>& blocks) {
    GreechieLogic logic;
    std::map<std::string, int> index;
    for (const auto& a : atoms) {
        if (a.empty()) {
            throw InputError("empty atom name");
        }
        if (!index.emplace(a, static_cast<int>(logic.atoms.size())).second) {
            throw InputError("duplicate atom '" + a + "'");
        }
        logic.atoms.push_back(a);
    }

    std::set<std::set<int>> seen;
    for (size_t b = 0; b < blocks.size(); ++b) {
        std::vector<int> blk;
        std::set<int> as_set;
        for (const auto& name : blocks[b]) {
            auto it = index.find(name);
            if (it == index.end()) {
                throw InputError("unknown atom '" + name + "' in block " + std::to_string(b + 1));
            }
            if (!as_set.insert(it->second).second) {
                throw InputError("atom '" + name + "' repeated inside block " +
                                 std::to_string(b + 1));
            }
            blk.push_back(it->second);
        }
        if (blk.size() < 2) {
            throw InputError("block " + std::to_string(b + 1) + " has fewer than 2 atoms");
        }
        if (!seen.insert(as_set).second) {
            throw InputError("duplicate block " + std::to_string(b + 1));
        }
        logic.blocks.push_back(std::move(blk));
    }

    // Greechie condition: two distinct blocks share at most one atom.
    for (size_t i = 0; i < logic.blocks.size(); ++i) {
        for (size_t j = i + 1; j < logic.blocks.size(); ++j) {
            std::set<int> a(logic.blocks[i].begin(), logic.blocks[i].end());
            int shared = 0;
            for (int x : logic.blocks[j]) {
                shared += a.count(x);
            }
            if (shared > 1) {
                throw GreechieViolationError(
                    "blocks " + logic.block_text(static_cast<int>(i)) + " and " +
                    logic.block_text(static_cast<int>(j)) + " share " + std::to_string(shared) +
                    " atoms");
            }
        }
    }

    std::vector<bool> used(logic.atoms.size(), false);
    for (const auto& blk : logic.blocks) {
        for (int a : blk) {
            used[static_cast<size_t>(a)] = true;
        }
    }
    for (size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) {
            throw InputError("atom '" + logic.atoms[i] + "' occurs in no block");
        }
    }
    return logic;
}

namespace {

int line_of_offset(std::string_view text, size_t byte) {
    int line = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
        }
    }
    return line;
}

}  // namespace

GreechieLogic parse_logic(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("logic file: " + std::string(e.what()),
                         line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0));
    }
    if (!doc.is_object() || !doc.contains("atoms") || !doc.contains("blocks") || doc.size() != 2) {
        throw ParseError("logic file: expected exactly the keys \"atoms\" and \"blocks\"");
    }
    if (!doc["atoms"].is_array() || !doc["blocks"].is_array()) {
        throw ParseError("logic file: \"atoms\" and \"blocks\" must be arrays");
    }
    std::vector<std::string> atoms;
    for (const auto& a : doc["atoms"]) {
        if (!a.is_string()) {
            throw ParseError("logic file: atom names must be strings");
        }
        atoms.push_back(a.get<std::string>());
    }
    std::vector<std::vector<std::string>> blocks;
    for (const auto& b : doc["blocks"]) {
        if (!b.is_array()) {
            throw ParseError("logic file: each block must be an array of atom names");
        }
        std::vector<std::string> blk;
        for (const auto& a : b) {
            if (!a.is_string()) {
                throw ParseError("logic file: atom names must be strings");
            }
            blk.push_back(a.get<std::string>());
        }
        blocks.push_back(std::move(blk));
    }
    return make_logic(std::move(atoms), blocks);
}

std::string serialize_logic(const GreechieLogic& logic) {
    nlohmann::json doc;
    doc["atoms"] = logic.atoms;
    auto& blocks = doc["blocks"] = nlohmann::json::array();
    for (const auto& blk : logic.blocks) {
        nlohmann::json jb = nlohmann::json::array();
        for (int a : blk) {
            jb.push_back(logic.atoms[static_cast<size_t>(a)]);
        }
        blocks.push_back(std::move(jb));
    }
    return doc.dump();
}

GreechieLogic pentagon_logic() {
    std::vector<std::string> atoms;
    for (int k = 1; k <= 5; ++k) {
        atoms.push_back("e" + std::to_string(k));
    }
    for (int k = 1; k <= 5; ++k) {
        atoms.push_back("f" + std::to_string(k));
    }
    std::vector<std::vector<std::string>> blocks;
    for (int k = 1; k <= 5; ++k) {
        int next = k % 5 + 1;
        blocks.push_back({"e" + std::to_string(k), "f" + std::to_string(k),
                          "e" + std::to_string(next)});
    }
    return make_logic(std::move(atoms), blocks);
}

LogicState pentagon_state(const GreechieLogic& logic) {
    if (!(logic == pentagon_logic())) {
        throw WrongLogicError("pentagon_state is only defined on the pentagon logic");
    }
    LogicState s;
    s.assignment.assign(10, Rational(0));
    for (size_t k = 0; k < 5; ++k) {
        s.assignment[k] = make_rational(1, 2);
    }
    return s;
}

StateReport validate_state(const GreechieLogic& logic, const LogicState& state) {
    if (state.assignment.size() != logic.atoms.size()) {
        throw InputError("state covers " + std::to_string(state.assignment.size()) +
                         " atoms, logic has " + std::to_string(logic.atoms.size()));
    }
    StateReport report;
    for (size_t i = 0; i < state.assignment.size(); ++i) {
        const Rational& v = state.assignment[i];
        if (v < 0 || v > 1) {
            report.violations.push_back(
                {-1, static_cast<int>(i), v,
                 "atom " + logic.atoms[i] + " has value " + to_string(v) + " outside [0,1]"});
        }
    }
    for (size_t b = 0; b < logic.blocks.size(); ++b) {
        Rational sum(0);
        for (int a : logic.blocks[b]) {
            sum += state.assignment[static_cast<size_t>(a)];
        }
        if (sum != 1) {
            report.violations.push_back({static_cast<int>(b), -1, sum,
                                         "block " + logic.block_text(static_cast<int>(b)) +
                                             " sums to " + to_string(sum) + ", expected 1"});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

int OrthogonalityGraph::edge_count() const {
    int n = 0;
    for (int a = 0; a < vertices; ++a) {
        for (int b = a + 1; b < vertices; ++b) {
            n += adj[static_cast<size_t>(a)][static_cast<size_t>(b)];
        }
    }
    return n;
}

int OrthogonalityGraph::degree(int v) const {
    int n = 0;
    for (int b = 0; b < vertices; ++b) {
        n += adj[static_cast<size_t>(v)][static_cast<size_t>(b)];
    }
    return n;
}

OrthogonalityGraph orthogonality_graph(const GreechieLogic& logic) {
    OrthogonalityGraph g;
    g.vertices = static_cast<int>(logic.atoms.size());
    g.adj.assign(logic.atoms.size(), std::vector<bool>(logic.atoms.size(), false));
    for (const auto& blk : logic.blocks) {
        for (size_t i = 0; i < blk.size(); ++i) {
            for (size_t j = i + 1; j < blk.size(); ++j) {
                g.adj[static_cast<size_t>(blk[i])][static_cast<size_t>(blk[j])] = true;
                g.adj[static_cast<size_t>(blk[j])][static_cast<size_t>(blk[i])] = true;
            }
        }
    }
    return g;
}

Rational event_probability(const GreechieLogic& logic, const LogicState& state,
                           const std::vector<int>& event_atoms) {
    if (state.assignment.size() != logic.atoms.size()) {
        throw InputError("state does not cover the logic");
    }
    for (int a : event_atoms) {
        if (a < 0 || static_cast<size_t>(a) >= logic.atoms.size()) {
            throw InvalidEventError("event atom index out of range");
        }
    }
    if (event_atoms.size() > 1) {
        bool contained = false;
        for (const auto& blk : logic.blocks) {
            std::set<int> b(blk.begin(), blk.end());
            bool all = true;
            for (int a : event_atoms) {
                if (!b.count(a)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                contained = true;
                break;
            }
        }
        if (!contained) {
            std::string names;
            for (size_t i = 0; i < event_atoms.size(); ++i) {
                if (i) {
                    names += ',';
                }
                names += logic.atoms[static_cast<size_t>(event_atoms[i])];
            }
            throw InvalidEventError("atoms {" + names + "} do not lie in a common block");
        }
    }
    Rational sum(0);
    std::set<int> dedup(event_atoms.begin(), event_atoms.end());
    for (int a : dedup) {
        sum += state.assignment[static_cast<size_t>(a)];
    }
    return sum;
}

}  // namespace qlogic
