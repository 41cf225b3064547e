/*
 * Copyright 2026 The Splythoff Authors
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

#include <stdexcept>
#include <string>

namespace splythoff {

class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class invalid_letter : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// seed's image does not begin with the seed
class no_fixed_point : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// a scan or growth loop hit its configured limit
class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class insufficient_terms : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace splythoff
