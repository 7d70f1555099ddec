// Copyright 2026 The fo2hier Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fo2/omega_term.hpp"
#include "fo2/varieties.hpp"

namespace fo2 {

/// Default cap on the number of assignments an identity check enumerates.
inline constexpr std::uint64_t kDefaultIdentityCap = 10'000'000;

/// G_2 = x2 x1, G_{m+1} = x_{m+1} mirror(G_m). Throws for m < 2.
VarWord build_G(int m);
/// I_2 = x2 x1 x2, I_{m+1} = G_{m+1} x_{m+1} mirror(I_m). Throws for m < 2.
VarWord build_I(int m);

/// The substitution used by the R_m / L_m identities:
///   phi(x1) = (x1^w x2^w x1^w)^w,  phi(x2) = x2^w,
///   phi(x_{k+1}) = (x_{k+1}^w phi(G_k mirror(G_k))^w x_{k+1}^w)^w  (k >= 2).
/// Memoized; repeated calls share subterms.
OmegaTerm phi_of(int k);
/// Product of phi_of over the letters of `w`.
OmegaTerm phi_word(const VarWord& w);

/// The DA identity (x1 x2)^w x1 (x1 x2)^w = (x1 x2)^w as (lhs, rhs).
std::pair<OmegaTerm, OmegaTerm> da_identity();

struct IdentityCheck {
  bool holds = true;
  /// First failing assignment (x1, x2, ...) in enumeration order.
  std::optional<std::vector<Element>> witness;
  std::uint64_t assignments = 0;
};

/// Decides lhs = rhs on M by enumerating assignments. A variable whose every
/// occurrence sits directly under an omega node only matters through its
/// idempotent power, so it ranges over E(M) instead of M; the answer is the
/// same as for the full |M|^v enumeration. Throws BudgetExceeded ("identity
/// check too large") if more than `cap` assignments would be needed.
IdentityCheck satisfies_identity(const FiniteMonoid& m, const OmegaTerm& lhs,
                                 const OmegaTerm& rhs,
                                 std::uint64_t cap = kDefaultIdentityCap);

/// DA identity and phi(G_m) = phi(I_m). Requires m >= 2.
bool in_Rm_by_identities(const FiniteMonoid& m, int level,
                         std::uint64_t cap = kDefaultIdentityCap);
/// DA identity and phi(mirror(G_m)) = phi(mirror(I_m)). Requires m >= 2.
bool in_Lm_by_identities(const FiniteMonoid& m, int level,
                         std::uint64_t cap = kDefaultIdentityCap);

/// Same contract as fo2_level, decided through identities only. Returns
/// Exceeded(max_m) when no level up to max_m is found.
Fo2Level fo2_level_by_identities(const FiniteMonoid& m, int max_m = 6,
                                 std::uint64_t cap = kDefaultIdentityCap);

/// Straubing's conjectured terms: u_1 = (x1 x2)^w, v_1 = (x2 x1)^w, and
/// u_{m+1} = (x1 ... x_{2m} x_{2m+1})^w u_m (x_{2m+2} x1 ... x_{2m})^w,
/// likewise for v. Requires m >= 1.
std::pair<OmegaTerm, OmegaTerm> straubing_terms(int m);

/// Experimental: x^{w+1} = x^w and u_m = v_m.
bool check_straubing(const FiniteMonoid& m, int level,
                     std::uint64_t cap = kDefaultIdentityCap);

}  // namespace fo2
