// Copyright 2026 The qclone Authors
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

#include "qclone/attacks.hpp"
#include "qclone/bench.hpp"
#include "qclone/config.hpp"
#include "qclone/errors.hpp"
#include "qclone/io.hpp"
#include "qclone/kraus.hpp"
#include "qclone/sdp/solve.hpp"
#include "qclone/states.hpp"
#include "qclone/targets.hpp"
#include "qclone/tensorlab.hpp"
#include "qclone/version.hpp"
