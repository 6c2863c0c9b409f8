// Copyright 2026 The ecpsim Authors
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

#ifndef ECPSIM_ECPSIM_HPP
#define ECPSIM_ECPSIM_HPP

#include "ecpsim/bell.hpp"
#include "ecpsim/common.hpp"
#include "ecpsim/entanglement.hpp"
#include "ecpsim/gates.hpp"
#include "ecpsim/optics.hpp"
#include "ecpsim/protocols.hpp"
#include "ecpsim/sampling.hpp"
#include "ecpsim/states.hpp"
#include "ecpsim/statevec.hpp"
#include "ecpsim/unitary.hpp"

#endif
