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

#ifndef ZEROFREE_ORACLE_HPP
#define ZEROFREE_ORACLE_HPP

#include <chrono>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "zerofree/lens.hpp"
#include "zerofree/poly.hpp"
#include "zerofree/sector.hpp"

namespace zf {

struct RootSet {
    std::vector<std::complex<double>> roots;
    /// Every root of f lies within this distance of some entry of `roots`.
    double residual_bound = 0.0;
    bool converged = false;
    int sweeps = 0;
};

/// Aberth iteration from a jittered circle of radius 1 + max|a_i/a_n|.
RootSet roots_numeric(const Polynomial& f, double tol = 1e-12, int max_sweeps = 1000);

/// Re(z) > v + margin and |arg(z - v)| < theta - margin, with v = vertex.upper().
bool in_sector(std::complex<double> z, const Sector& sector, double margin);

/// Inside both defining disks of the lens with radii shrunk by margin.
bool in_lens(std::complex<double> z, const Lens& lens, double margin);

enum class IrreducibilityVerdict { irreducible, reducible, out_of_reach };
std::string to_string(IrreducibilityVerdict v);

struct IrreducibilityResult {
    IrreducibilityVerdict verdict = IrreducibilityVerdict::out_of_reach;
    std::optional<Polynomial> factor;  // nontrivial factor when reducible
};

/// Kronecker's method over Z. Requires content 1 and degree >= 1.
IrreducibilityResult irreducible_bruteforce(const Polynomial& f,
                                            std::chrono::milliseconds budget = std::chrono::seconds(10));

}  // namespace zf

#endif
