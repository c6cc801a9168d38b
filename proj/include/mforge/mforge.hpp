// Copyright 2026 The Authors.
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

// Umbrella header.

#ifndef MFORGE_MFORGE_HPP_
#define MFORGE_MFORGE_HPP_

#include "mforge/constructions.hpp"
#include "mforge/corpus.hpp"
#include "mforge/element_set.hpp"
#include "mforge/error.hpp"
#include "mforge/field.hpp"
#include "mforge/golden.hpp"
#include "mforge/isomorphism.hpp"
#include "mforge/matroid.hpp"
#include "mforge/matroid_ops.hpp"
#include "mforge/minor_search.hpp"
#include "mforge/number_theory.hpp"
#include "mforge/representability.hpp"
#include "mforge/serialization.hpp"
#include "mforge/suites.hpp"

#endif  // MFORGE_MFORGE_HPP_
