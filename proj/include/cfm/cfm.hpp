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

#ifndef CFM_CFM_HPP_
#define CFM_CFM_HPP_

#include "cfm/element_set.hpp"
#include "cfm/presentation.hpp"
#include "cfm/oracle.hpp"
#include "cfm/axioms.hpp"
#include "cfm/matroid.hpp"
#include "cfm/modular_cut.hpp"
#include "cfm/linear.hpp"
#include "cfm/constructions.hpp"
#include "cfm/properties.hpp"
#include "cfm/counterexample.hpp"
#include "cfm/report.hpp"
#include "cfm/amalgam.hpp"
#include "cfm/io.hpp"
#include "cfm/verify.hpp"

#endif  // CFM_CFM_HPP_
