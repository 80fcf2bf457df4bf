/*
 * Copyright 2026 The pfl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "pfl/errors.hpp"
#include "pfl/ring.hpp"
#include "pfl/scalar.hpp"
#include "pfl/polynomial.hpp"
#include "pfl/exterior.hpp"
#include "pfl/matrix.hpp"
#include "pfl/faddeev_leverrier.hpp"
#include "pfl/pfaffian.hpp"
#include "pfl/euler_form.hpp"
#include "pfl/io.hpp"
#include "pfl/random.hpp"
#include "pfl/bench.hpp"
