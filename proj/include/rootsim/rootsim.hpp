// Copyright 2026 The rootsim Authors
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

#include "rootsim/error.hpp"
#include "rootsim/linalg.hpp"
#include "rootsim/algebra.hpp"
#include "rootsim/representation.hpp"
#include "rootsim/functionals.hpp"
#include "rootsim/fit.hpp"
#include "rootsim/splitting.hpp"
#include "rootsim/root_gates.hpp"
#include "rootsim/spin_chain.hpp"
#include "rootsim/io.hpp"
