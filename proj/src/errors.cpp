// Copyright 2026 The schemewalk Authors
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

#include "schemewalk/errors.hpp"

namespace schemewalk {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidIntersectionArray: return "InvalidIntersectionArray";
    case ErrorCode::NonIntegerValency: return "NonIntegerValency";
    case ErrorCode::DuplicateAtoms: return "DuplicateAtoms";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::InvalidCycleType: return "InvalidCycleType";
    case ErrorCode::ComplexClassesWithoutSymmetrization:
      return "ComplexClassesWithoutSymmetrization";
    case ErrorCode::InvalidFusion: return "InvalidFusion";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::EigensolverNoConvergence: return "EigensolverNoConvergence";
    case ErrorCode::DegenerateAtoms: return "DegenerateAtoms";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::InconsistentInputs: return "InconsistentInputs";
    case ErrorCode::NonRealGeneratingClass: return "NonRealGeneratingClass";
    case ErrorCode::DegenerateSpectrumUnmerged: return "DegenerateSpectrumUnmerged";
    case ErrorCode::EngineSpecMismatch: return "EngineSpecMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NonSymmetricGeneratingSet: return "NonSymmetricGeneratingSet";
    case ErrorCode::NotDistanceRegular: return "NotDistanceRegular";
    case ErrorCode::NoConstruction: return "NoConstruction";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace schemewalk
