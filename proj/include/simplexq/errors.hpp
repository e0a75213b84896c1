// Copyright 2026 The simplexq Authors
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

namespace simplexq {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input wavefunction norm differs from 1 beyond tolerance.
struct NotNormalized : Error {
    using Error::Error;
};

/// Simplex vector does not lie in the image of the state map.
struct NotInImage : Error {
    using Error::Error;
};

struct NotUnitary : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

/// Transform matrix is not in the canonical block form required here.
struct NotCanonical : Error {
    using Error::Error;
};

/// Matrix does not decompose over the block-cycle group.
struct NotBlockStructured : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

/// Random-matrix orthonormalization kept hitting rank deficiency.
struct DegenerateDraw : Error {
    using Error::Error;
};

struct InvalidStep : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace simplexq
