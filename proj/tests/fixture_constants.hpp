// SPDX-License-Identifier: Apache-2.0
//
// Reference constants used by the tests. The Bessel values come from exact
// rational summation of the defining series; regenerate with
// tests/fixtures/derive_constants.py. Catalan's constant is OEIS A006752.
#pragma once

namespace fixtures {

inline constexpr double kJ0At1 = 0.765197686557966551449717526103;
inline constexpr double kI0At1 = 1.266065877752008335598244625215;
inline constexpr double kHalfPiJ0At1 = 1.201969715317206499136662446296;
inline constexpr double kHalfPiI0At1 = 1.988731630253211318628304916332;
inline constexpr double kCatalan = 0.915965594177219015054603514932;

}  // namespace fixtures
