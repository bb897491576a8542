/*
 * Copyright 2026 the negacode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NEGACODE_ERRORS_HPP
#define NEGACODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace negacode {

/* Base class for everything thrown by this library. */
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* Operands belong to different field instances. */
class SpecMismatch : public Error {
  public:
    using Error::Error;
};

class DivisionByZero : public Error {
  public:
    using Error::Error;
};

/* Argument outside the mathematical domain of the operation. */
class DomainError : public Error {
  public:
    using Error::Error;
};

/* Requested work exceeds the configured exhaustive-scan budget. */
class CapacityError : public Error {
  public:
    using Error::Error;
};

/* Input is valid but the structural hypothesis of the formula fails
 * (e.g. -1 is not a square, or x^n+1 does not split into two factors). */
class HypothesisUnmet : public Error {
  public:
    using Error::Error;
};

/* Closed-form factorization is only available for n a power of two. */
class UnsupportedLength : public Error {
  public:
    using Error::Error;
};

/* Symmetry constructions here require odd n. */
class UnsupportedShape : public Error {
  public:
    using Error::Error;
};

/* A guaranteed internal identity failed; indicates a bug, never user error. */
class TheoremViolation : public Error {
  public:
    using Error::Error;
};

/* A factor multiset does not describe a valid factorization of x^n+1. */
class MalformedFactorization : public Error {
  public:
    using Error::Error;
};

/* x^n+1 is not squarefree over the field (characteristic divides n). */
class NotSeparable : public Error {
  public:
    using Error::Error;
};

}  // namespace negacode

#endif
