//
// Copyright 2026 The stickynoise Authors
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
//

#ifndef STICKY_STICKY_HPP_
#define STICKY_STICKY_HPP_

#include "sticky/attacks.hpp"
#include "sticky/bitset.hpp"
#include "sticky/dataset.hpp"
#include "sticky/engine.hpp"
#include "sticky/error.hpp"
#include "sticky/evaluate.hpp"
#include "sticky/generators.hpp"
#include "sticky/harness.hpp"
#include "sticky/hash.hpp"
#include "sticky/interface.hpp"
#include "sticky/query.hpp"
#include "sticky/random.hpp"
#include "sticky/schema.hpp"
#include "sticky/sql.hpp"
#include "sticky/stats.hpp"
#include "sticky/uniqueness.hpp"
#include "sticky/value.hpp"

#endif  // STICKY_STICKY_HPP_
