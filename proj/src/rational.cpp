// Copyright 2026 The cubevol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cubevol/rational.hpp"

#include <atomic>
#include <cmath>
#include <cctype>

#include "cubevol/config.hpp"
#include "cubevol/errors.hpp"

namespace cubevol {

namespace {
std::atomic<int> g_dimension_cap{kDefaultDimensionCap};

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}
}  // namespace

int dimension_cap() noexcept { return g_dimension_cap.load(std::memory_order_relaxed); }

void set_dimension_cap(int cap) {
    if (cap < 1 || cap > kMaxDimensionCap)
        throw invalid_parameter_error("dimension cap must be in [1, " +
                                      std::to_string(kMaxDimensionCap) + "]");
    g_dimension_cap.store(cap, std::memory_order_relaxed);
}

void check_dimension_cap(int n) {
    int cap = dimension_cap();
    if (n > cap) throw dimension_cap_error(n, cap);
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw invalid_parameter_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational frac(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Rational canonical(Rational value) {
    value.canonicalize();
    return value;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw parse_error("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den) || den == "0")
            throw parse_error("malformed rational literal: '" + text + "'");
        Rational q;
        if (q.set_str(num + "/" + den, 10) != 0)
            throw parse_error("malformed rational literal: '" + text + "'");
        q.canonicalize();
        return q;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head.erase(0, 1);
        if (head.empty() && frac.empty())
            throw parse_error("malformed rational literal: '" + text + "'");
        for (char c : head + frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("malformed rational literal: '" + text + "'");
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer digits(head.empty() && frac.empty() ? "0" : head + frac,
                       10);  // exact decimal expansion
        if (neg) digits = -digits;
        return make_rational(digits, scale);
    }

    if (!is_integer_literal(s)) throw parse_error("malformed rational literal: '" + text + "'");
    return Rational(Integer(s, 10));
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) {
    // mpq_get_d truncates toward zero; adding back the (exactly
    // representable) residual makes the conversion round to nearest.
    double head = value.get_d();
    if (!std::isfinite(head)) return head;
    Rational residual = value - Rational(head);
    return head + residual.get_d();
}

Rational pow_rational(const Rational& base, unsigned long exp) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
    return make_rational(num, den);
}

Rational truncated_power(const Rational& base, unsigned long exp) {
    if (base <= 0) return Rational(0);
    if (exp == 0) return Rational(1);
    return pow_rational(base, exp);
}

ClearedIntegers clear_denominators(std::span<const Rational> values) {
    ClearedIntegers out;
    out.denom = 1;
    for (const Rational& v : values)
        mpz_lcm(out.denom.get_mpz_t(), out.denom.get_mpz_t(), v.get_den().get_mpz_t());
    out.scaled.reserve(values.size());
    for (const Rational& v : values) {
        Integer q = out.denom / v.get_den();
        out.scaled.push_back(v.get_num() * q);
    }
    return out;
}

Integer factorial_integer(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace cubevol
