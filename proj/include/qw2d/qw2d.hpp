// Copyright 2026 The qw2d Authors
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

#include "qw2d/coin.hpp"
#include "qw2d/fourier.hpp"
#include "qw2d/functions.hpp"
#include "qw2d/identities.hpp"
#include "qw2d/lattice.hpp"
#include "qw2d/linalg.hpp"
#include "qw2d/paths.hpp"
#include "qw2d/rng.hpp"
#include "qw2d/serialize.hpp"
#include "qw2d/textio.hpp"
