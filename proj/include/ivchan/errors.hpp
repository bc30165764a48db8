// SPDX-License-Identifier: Apache-2.0
//
// ivchan - statistical modeling of in vivo wireless channels at 915 MHz
// Copyright (C) 2026 the ivchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IVCHAN_ERRORS_HPP
#define IVCHAN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace ivchan
{

// Base class for all domain errors. kind() carries a stable machine-readable
// name so callers (and the CLI) can report which contract was violated
// without parsing the message text.
class Error : public std::runtime_error
{
  public:
    Error(std::string kind, const std::string &message)
        : std::runtime_error(message), kind_(std::move(kind))
    {
    }

    const std::string &kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

#define IVCHAN_DEFINE_ERROR(Name)                                                 \
    class Name : public Error                                                     \
    {                                                                             \
      public:                                                                     \
        explicit Name(const std::string &message) : Error(#Name, message) {}      \
    }

// model
IVCHAN_DEFINE_ERROR(DepthBelowReference);
IVCHAN_DEFINE_ERROR(ExtrapolationRequired);
IVCHAN_DEFINE_ERROR(InvalidAngle);
IVCHAN_DEFINE_ERROR(InvalidPermittivity);

// fitting
IVCHAN_DEFINE_ERROR(InsufficientSamples);
IVCHAN_DEFINE_ERROR(DegenerateDesign);
IVCHAN_DEFINE_ERROR(InvalidStep);
IVCHAN_DEFINE_ERROR(NonConvergence);

// dataset
IVCHAN_DEFINE_ERROR(ParseError);
IVCHAN_DEFINE_ERROR(DuplicatePoint);
IVCHAN_DEFINE_ERROR(UnknownRegion);
IVCHAN_DEFINE_ERROR(UnknownZone);
IVCHAN_DEFINE_ERROR(MissingCell);
IVCHAN_DEFINE_ERROR(InsufficientAngles);

// multipath
IVCHAN_DEFINE_ERROR(InvalidConfig);
IVCHAN_DEFINE_ERROR(InvalidProfile);

// link budget
IVCHAN_DEFINE_ERROR(NoFeasibleDepth);

// generic argument violations not named by a module contract
IVCHAN_DEFINE_ERROR(InvalidArgument);

#undef IVCHAN_DEFINE_ERROR

} // namespace ivchan

#endif // IVCHAN_ERRORS_HPP
