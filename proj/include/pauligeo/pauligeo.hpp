// Copyright 2026 The pauligeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "pauligeo/cliques.hpp"
#include "pauligeo/dense_matrix.hpp"
#include "pauligeo/export.hpp"
#include "pauligeo/geometry.hpp"
#include "pauligeo/graph.hpp"
#include "pauligeo/independent.hpp"
#include "pauligeo/isomorphism.hpp"
#include "pauligeo/labels.hpp"
#include "pauligeo/pauli_operator.hpp"
#include "pauligeo/rings.hpp"
#include "pauligeo/spectrum.hpp"
#include "pauligeo/system_spec.hpp"
#include "pauligeo/verify.hpp"
