// Copyright 2026 The Fermbezzle Authors
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

#ifndef FERMBEZZLE_ERRORS_HPP
#define FERMBEZZLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fermbezzle {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct SpectrumOutOfRange : Error { using Error::Error; };
struct InvalidDelta : Error { using Error::Error; };
struct NotDenseEnough : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct TooManyModes : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct WindowViolation : Error { using Error::Error; };
struct TrivialSpectrum : Error { using Error::Error; };
struct NotSorted : Error { using Error::Error; };
struct NonFaithfulMarginal : Error { using Error::Error; };
struct NotReal : Error { using Error::Error; };
struct NotBasisProjection : Error { using Error::Error; };
struct IncompatibleSplit : Error { using Error::Error; };
struct OddDimension : Error { using Error::Error; };
struct NotAntisymmetric : Error { using Error::Error; };
struct PatternTooLong : Error { using Error::Error; };
struct UnknownModel : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace fermbezzle

#endif
