/*
   Copyright 2026 The z4ucyclic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef Z4U_BIGINT_HPP
#define Z4U_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace z4u {

/// Unsigned integer of arbitrary size; just enough for code-census products,
/// which overflow 64 bits already for moderate n.
class BigUint {
   public:
    BigUint() : limbs_{0} {}
    BigUint(std::uint64_t v) {
        do {
            limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
            v /= kBase;
        } while (v != 0);
    }

    BigUint& operator*=(std::uint64_t v) {
        unsigned __int128 carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 cur = static_cast<unsigned __int128>(limb) * v + carry;
            limb = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
        trim();
        return *this;
    }

    bool operator==(const BigUint& rhs) const = default;
    bool operator==(std::uint64_t v) const { return *this == BigUint(v); }

    std::string to_string() const {
        std::string s = std::to_string(limbs_.back());
        for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
            std::string part = std::to_string(*it);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

   private:
    static constexpr std::uint64_t kBase = 1000000000;
    std::vector<std::uint32_t> limbs_;  // little-endian, base 10^9

    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }
};

}  // namespace z4u

#endif
