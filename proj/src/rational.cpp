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

#include "limgame/rational.hpp"

#include "limgame/errors.hpp"

#include <cctype>

namespace limgame {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw ValidationError(ValidationErrorKind::MalformedRational,
                              "malformed rational literal \"" + std::string(text) + "\"");
    };
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    auto slash = body.find('/');
    if (slash == std::string_view::npos) {
        if (!all_digits(body)) return fail();
    } else {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        if (den.find_first_not_of('0') == std::string_view::npos) return fail();
    }
    Rational q(std::string(text), 10);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str(10);
}

std::string to_decimal(const Rational& q, int places) {
    mpz_class scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    // round half away from zero
    mpq_class scaled = abs(q) * scale;
    mpz_class whole = scaled.get_num() / scaled.get_den();
    mpz_class rem = scaled.get_num() % scaled.get_den();
    if (2 * rem >= scaled.get_den()) whole += 1;
    std::string digits = whole.get_str();
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    std::string out = sgn(q) < 0 && whole != 0 ? "-" : "";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    return out;
}

} // namespace limgame
