/*
   Copyright 2026 The drinfeld-euler authors

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

#ifndef DRE_COMMON_HPP
#define DRE_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dre {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// rejected input: exit code 2
struct ConfigError : Error {
    using Error::Error;
};
struct ParameterMismatch : ConfigError {
    using ConfigError::ConfigError;
};
struct DegreeMismatch : ConfigError {
    using ConfigError::ConfigError;
};
struct InsufficientModuli : ConfigError {
    using ConfigError::ConfigError;
};
struct SplittingFieldTooLarge : ConfigError {
    using ConfigError::ConfigError;
};

// instance outside the theorem's hypotheses: exit code 3
struct HypothesisError : Error {
    using Error::Error;
};
struct BadReduction : HypothesisError {
    using HypothesisError::HypothesisError;
};
struct WildRamification : HypothesisError {
    using HypothesisError::HypothesisError;
};
struct WildPrime : HypothesisError {
    using HypothesisError::HypothesisError;
};
struct NotFree : HypothesisError {
    using HypothesisError::HypothesisError;
};
struct NotFreeProbably : HypothesisError {
    using HypothesisError::HypothesisError;
};

// a cross-check that can only fail on an implementation bug: exit code 4
struct InternalCheckError : Error {
    using Error::Error;
};
struct CoefficientNotRational : InternalCheckError {
    using InternalCheckError::InternalCheckError;
};
struct DegreeBoundViolation : InternalCheckError {
    using InternalCheckError::InternalCheckError;
};
struct OracleMismatch : InternalCheckError {
    using InternalCheckError::InternalCheckError;
};
struct InexactDivision : InternalCheckError {
    using InternalCheckError::InternalCheckError;
};

inline void check(bool cond, const char* msg) {
    if (!cond) throw Error(msg);
}

}  // namespace dre

#endif
