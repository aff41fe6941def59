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

#include "cubevol/combinatorics.hpp"

#include <mutex>

namespace cubevol {

std::vector<SignVector> enumerate_sign_vectors(int n, SignFilter filter) {
    std::vector<SignVector> out;
    GraySigns<Rational> cursor(n, filter);
    out.reserve(cursor.size());
    do {
        out.push_back(cursor.current());
    } while (cursor.advance());
    return out;
}

void EulerianTable::ensure_rows(int max_n) {
    if (max_n < 0) return;
    if (rows_.empty()) rows_.push_back({Integer(1)});  // A(0,0) = 1
    for (int n = static_cast<int>(rows_.size()); n <= max_n; ++n) {
        std::vector<Integer> row(static_cast<std::size_t>(n), Integer(0));
        const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
        for (int k = 0; k < n; ++k) {
            Integer acc(0);
            if (k < static_cast<int>(prev.size())) acc += (k + 1) * prev[k];
            if (k - 1 >= 0 && k - 1 < static_cast<int>(prev.size()))
                acc += (n - k) * prev[k - 1];
            row[static_cast<std::size_t>(k)] = acc;
        }
        rows_.push_back(std::move(row));
    }
}

Integer EulerianTable::value(int n, int k) const {
    if (n < 0 || k < 0) return Integer(0);
    if (n == 0) return k == 0 ? Integer(1) : Integer(0);
    if (k >= n) return Integer(0);
    if (n >= static_cast<int>(rows_.size()))
        throw invalid_parameter_error("EulerianTable row not materialized");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer eulerian(int n, int k) {
    if (n < 0 || k < 0) return Integer(0);
    if (n == 0) return k == 0 ? Integer(1) : Integer(0);
    if (k >= n) return Integer(0);

    static EulerianTable table;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    table.ensure_rows(n);
    return table.value(n, k);
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    if (k > n) return Integer(0);
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Integer factorial(unsigned long n) { return factorial_integer(n); }

}  // namespace cubevol
