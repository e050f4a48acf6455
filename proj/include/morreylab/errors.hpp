// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace morrey {

/// Base class for all morreylab errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Region or point endpoints not representable on the requested grid.
struct AlignmentError final : Error {
  using Error::Error;
};

/// Support, generation, or window leaves the representable domain.
struct DomainError final : Error {
  using Error::Error;
};

/// Two grid functions do not live on the same (dim, extent, gen) lattice.
struct LatticeMismatchError final : Error {
  using Error::Error;
};

/// Exponent or operator parameter outside its admissible range.
struct ParamError final : Error {
  using Error::Error;
};

/// Cell average of a profile diverges (non-integrable singularity).
struct DivergentCellError final : Error {
  using Error::Error;
};

/// Input is identically zero where a positive quantity is required.
struct DegenerateInputError final : Error {
  using Error::Error;
};

/// Malformed or unreadable function/report file.
struct IoError final : Error {
  using Error::Error;
};

}  // namespace morrey
