// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace bispinor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
public:
    using Error::Error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

class ZeroNorm : public Error {
public:
    using Error::Error;
};

class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class SuperluminalInput : public Error {
public:
    using Error::Error;
};

/// Helicity is undefined for a vanishing 3-momentum.
class DegenerateHelicity : public Error {
public:
    using Error::Error;
};

class PartitionError : public Error {
public:
    using Error::Error;
};

/// The dichotomic momentum encoding needs two distinct momenta.
class DegenerateMomenta : public Error {
public:
    using Error::Error;
};

class ProjectionAnnihilated : public Error {
public:
    using Error::Error;
};

class UnreachableAngle : public Error {
public:
    using Error::Error;
};

}  // namespace bispinor
