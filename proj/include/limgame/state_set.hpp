/*
 * Copyright 2026 The limgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace limgame {

using StateIndex = std::size_t;

/// Dense membership set over the states 0..n-1 of one graph.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe, bool full = false) : bits_(universe, full ? 1 : 0) {}
    StateSet(std::size_t universe, std::initializer_list<StateIndex> members) : bits_(universe, 0) {
        for (auto s : members) bits_[s] = 1;
    }

    static StateSet from_members(std::size_t universe, const std::vector<StateIndex>& members) {
        StateSet set(universe);
        for (auto s : members) set.insert(s);
        return set;
    }

    std::size_t universe() const noexcept { return bits_.size(); }
    bool contains(StateIndex s) const noexcept { return bits_[s] != 0; }
    void insert(StateIndex s) noexcept { bits_[s] = 1; }
    void erase(StateIndex s) noexcept { bits_[s] = 0; }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (char b : bits_) n += b != 0;
        return n;
    }
    bool empty() const noexcept { return count() == 0; }

    std::vector<StateIndex> members() const {
        std::vector<StateIndex> out;
        for (StateIndex s = 0; s < bits_.size(); ++s)
            if (bits_[s]) out.push_back(s);
        return out;
    }

    StateSet& operator|=(const StateSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] || o.bits_[i];
        return *this;
    }
    StateSet& operator&=(const StateSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] && o.bits_[i];
        return *this;
    }
    /// Set difference.
    StateSet& operator-=(const StateSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] && !o.bits_[i];
        return *this;
    }
    friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
    friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
    friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

    bool subset_of(const StateSet& o) const noexcept {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && !o.bits_[i]) return false;
        return true;
    }
    bool intersects(const StateSet& o) const noexcept {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && o.bits_[i]) return true;
        return false;
    }

    friend bool operator==(const StateSet&, const StateSet&) = default;

private:
    std::vector<char> bits_;
};

} // namespace limgame
