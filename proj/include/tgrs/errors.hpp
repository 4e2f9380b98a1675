/* Copyright 2026 The TGRS Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tgrs {

/// Base class for all library errors.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// API misuse: mixing towers, calling quadratic-only operations on plain towers, ...
class UsageError : public Error {
   public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

class ZeroDivisionError : public Error {
   public:
    explicit ZeroDivisionError(const std::string& what) : Error(what) {}
};

/// Invalid input data: reducible modulus, repeated evaluation points, schema violations, ...
class ValidationError : public Error {
   public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A stated operation precondition does not hold.
class PreconditionError : public Error {
   public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// No admissible parameter exists (e.g. no scaling vector for the given points).
class InfeasibleError : public Error {
   public:
    explicit InfeasibleError(const std::string& what) : Error(what) {}
};

/// Equation has no solution in the field (e.g. norm equation with target outside the subfield).
class NoSolutionError : public Error {
   public:
    explicit NoSolutionError(const std::string& what) : Error(what) {}
};

class SingularMatrixError : public Error {
   public:
    SingularMatrixError(const std::string& what, std::size_t rank) : Error(what), rank_(rank) {}
    std::size_t rank() const noexcept { return rank_; }

   private:
    std::size_t rank_;
};

}  // namespace tgrs
