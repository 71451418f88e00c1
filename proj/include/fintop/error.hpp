// Copyright 2026 The fintop Authors
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
#include <string_view>

namespace fintop {

/// Contract failures raised by the library. Conditions that callers are
/// expected to branch on (axiom violations, base classification) are
/// returned as values instead.
enum class ErrorKind {
    CarrierTooLarge,
    CarrierMismatch,
    PointOutOfRange,
    EmptyFamilyIntersection,
    EmptyList,
    InvalidTopology,
    InvalidBase,
    SubbaseDoesNotCover,
    NotAPartition,
    InvalidMetric,
    MapOutOfRange,
    NotALimitPoint,
    NotFundamental,
    NotACover,
    CodomainNotHausdorff,
    SyntaxError,
    SchemaError,
    UnreadableInput,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::EmptyFamilyIntersection: return "EmptyFamilyIntersection";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::InvalidTopology: return "InvalidTopology";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::SubbaseDoesNotCover: return "SubbaseDoesNotCover";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::InvalidMetric: return "InvalidMetric";
    case ErrorKind::MapOutOfRange: return "MapOutOfRange";
    case ErrorKind::NotALimitPoint: return "NotALimitPoint";
    case ErrorKind::NotFundamental: return "NotFundamental";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::CodomainNotHausdorff: return "CodomainNotHausdorff";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnreadableInput: return "UnreadableInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what)
        , kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Two independent evaluations of the same mathematical fact disagreed.
/// Seeing this means a theorem (or the code) is wrong.
class InvariantBroken : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void ensure(bool cond, const char* what) {
    if (!cond) {
        throw InvariantBroken(what);
    }
}

} // namespace detail

} // namespace fintop
