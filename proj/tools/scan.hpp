/*
   Copyright 2026 The zerofree authors

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

#ifndef ZEROFREE_TOOLS_SCAN_HPP
#define ZEROFREE_TOOLS_SCAN_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "zerofree/certifier.hpp"

namespace zf::cli {

struct ScanRow {
    std::string label;
    Polynomial polynomial;
    mpz_class m;
    Outcome outcome = Outcome::witness_absent;
    std::string criterion;
    std::string reason;
};

struct ScanReport {
    std::string family;
    std::vector<ScanRow> rows;
    std::size_t certified() const;
};

/// Families: digit_polynomial, quartic, shifted_prime, shifted_prime_power.
/// Throws ParseError on an invalid descriptor.
ScanReport run_scan(const nlohmann::json& descriptor, const CertifyOptions& base);

}  // namespace zf::cli

#endif
