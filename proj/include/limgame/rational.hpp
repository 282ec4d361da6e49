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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace limgame {

using Rational = mpq_class;

/// Parses "n", "-n" or "n/d" (d > 0). The result is canonicalized, so
/// non-reduced fractions are accepted. Throws ValidationError on anything else.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering, "n" or "n/d".
std::string to_string(const Rational& q);

/// Fixed-point decimal rendering for humans (never used in machine output).
std::string to_decimal(const Rational& q, int places = 6);

} // namespace limgame
