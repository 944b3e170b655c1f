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

#ifndef ZEROFREE_TOOLS_PLOT_HPP
#define ZEROFREE_TOOLS_PLOT_HPP

#include <optional>
#include <string>

#include "zerofree/lens.hpp"
#include "zerofree/oracle.hpp"
#include "zerofree/sector.hpp"

namespace zf::cli {

/// Static SVG of the sector, the lens (when present) and the numeric roots.
std::string render_svg(const Sector& sector, const std::optional<Lens>& lens, const RootSet& roots,
                       const Precision& prec);

}  // namespace zf::cli

#endif
