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

#ifndef ZEROFREE_ERRORS_HPP
#define ZEROFREE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zf {

// Input text that cannot be turned into an integer polynomial.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

// A documented precondition of an operation does not hold.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

}  // namespace zf

#endif
