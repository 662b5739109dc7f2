// Copyright 2026 The qset Authors
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

#include "qset/error.hpp"

namespace qset {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotQuantumFunction: return "NotQuantumFunction";
    case ErrorKind::NotBijection: return "NotBijection";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotClassicalEndpoints: return "NotClassicalEndpoints";
    case ErrorKind::RowConditionViolated: return "RowConditionViolated";
    case ErrorKind::NotRepresentation: return "NotRepresentation";
    case ErrorKind::InconsistentElements: return "InconsistentElements";
    case ErrorKind::NotUEB: return "NotUEB";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotIntertwiner: return "NotIntertwiner";
    case ErrorKind::NotClassical: return "NotClassical";
    case ErrorKind::PostconditionFailure: return "PostconditionFailure";
    case ErrorKind::NotPPM: return "NotPPM";
    case ErrorKind::NotProjection: return "NotProjection";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotMatrixAlgebra: return "NotMatrixAlgebra";
    case ErrorKind::NotQuantumGraph: return "NotQuantumGraph";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace qset
