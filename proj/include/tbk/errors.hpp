// Copyright 2026 The tbk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace tbk {

// Base of every error raised by the library. Input errors (bad fractions,
// links where knots are expected, malformed files) derive from InputError so
// the CLI can map them to a single exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

#define TBK_DEFINE_ERROR(Name, Base) \
  class Name : public Base {         \
   public:                           \
    using Base::Base;                \
  }

TBK_DEFINE_ERROR(DivisionByZero, Error);
TBK_DEFINE_ERROR(NotAKnot, InputError);
TBK_DEFINE_ERROR(InvalidFraction, InputError);
TBK_DEFINE_ERROR(InvalidInput, InputError);
TBK_DEFINE_ERROR(InvalidCF, InputError);
TBK_DEFINE_ERROR(InvalidSlope, InputError);
TBK_DEFINE_ERROR(OutOfRegion, InputError);
TBK_DEFINE_ERROR(NotALink, InputError);
TBK_DEFINE_ERROR(GridViolation, Error);
TBK_DEFINE_ERROR(ZeroDivisor, Error);
TBK_DEFINE_ERROR(DegenerateAlexander, Error);
TBK_DEFINE_ERROR(MultiComponent, Error);
TBK_DEFINE_ERROR(HypothesisViolation, Error);
TBK_DEFINE_ERROR(ParseError, InputError);
TBK_DEFINE_ERROR(ValidationError, Error);

#undef TBK_DEFINE_ERROR

}  // namespace tbk
